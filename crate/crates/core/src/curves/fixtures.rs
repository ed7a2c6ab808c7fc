//! Deterministic curve fixtures for the numeric checks: random smooth
//! curves, one-nodal quartics with a known node, and quartics built as
//! (conic)^2 + (product of four lines), whose four lines are bitangents in
//! closed form.

use super::{CurveError, PlaneCurve, X, Y, Z};
use crate::exact::{MultiPoly, Rat};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const RETRY_BUDGET: u32 = 64;

pub(crate) fn random_curve(
    degree: u32,
    height: u32,
    rng: &mut ChaCha8Rng,
) -> Option<PlaneCurve> {
    let h = height as i64;
    let mut monomials = Vec::new();
    for i in 0..=degree {
        for j in 0..=degree - i {
            let k = degree - i - j;
            let c = rng.random_range(-h..=h);
            if c != 0 {
                monomials.push((i, j, k, c));
            }
        }
    }
    PlaneCurve::from_monomials(&monomials).ok()
}

/// A deterministic random smooth curve (smoothness checked exactly).
pub fn random_smooth_curve(degree: u32, seed: u64, height: u32) -> Result<PlaneCurve, CurveError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RETRY_BUDGET {
        let Some(c) = random_curve(degree, height, &mut rng) else {
            continue;
        };
        if c.is_smooth()? {
            return Ok(c);
        }
    }
    Err(CurveError::RetriesExhausted(format!(
        "smooth curve of degree {degree}"
    )))
}

/// A deterministic quartic with a node at [0:0:1] (and nondegenerate
/// tangent cone there), returned with the node. The remaining coefficients
/// are random; genericity beyond the forced node is the caller's check.
pub fn nodal_quartic(seed: u64, height: u32) -> Result<(PlaneCurve, [Rat; 3]), CurveError> {
    let h = height as i64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let node = [
        Rat::from_integer(0.into()),
        Rat::from_integer(0.into()),
        Rat::from_integer(1.into()),
    ];
    for _ in 0..RETRY_BUDGET {
        // a node at [0:0:1] forbids the z^4, x z^3 and y z^3 monomials
        let mut monomials = Vec::new();
        for i in 0..=4u32 {
            for j in 0..=4 - i {
                let k = 4 - i - j;
                if k == 4 || (k == 3 && i + j == 1) {
                    continue;
                }
                let c = rng.random_range(-h..=h);
                if c != 0 {
                    monomials.push((i, j, k, c));
                }
            }
        }
        let Ok(curve) = PlaneCurve::from_monomials(&monomials) else {
            continue;
        };
        if curve.degree() != 4 {
            continue;
        }
        // tangent cone a x^2 + b xy + c y^2 (times z^2) must be nondegenerate
        let coeff = |i: u32, j: u32, k: u32| -> i64 {
            monomials
                .iter()
                .find(|&&(a, b, c, _)| (a, b, c) == (i, j, k))
                .map(|&(_, _, _, v)| v)
                .unwrap_or(0)
        };
        let (a, b, c) = (coeff(2, 0, 2), coeff(1, 1, 2), coeff(0, 2, 2));
        if b * b - 4 * a * c == 0 || (a == 0 && b == 0 && c == 0) {
            continue;
        }
        return Ok((curve, node));
    }
    Err(CurveError::RetriesExhausted("nodal quartic".into()))
}

/// A smooth quartic of the shape (conic)^2 + l1 l2 l3 l4 together with the
/// dual vectors of the four lines: the restriction of the quartic to each
/// line is the square of the restricted conic, so each line is a bitangent
/// with known equation.
pub fn quartic_with_forced_bitangents(
    seed: u64,
) -> Result<(PlaneCurve, Vec<[Rat; 3]>), CurveError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RETRY_BUDGET {
        let mut duals = Vec::new();
        let mut product = MultiPoly::one();
        for _ in 0..4 {
            let mut v = [0i64; 3];
            while v == [0, 0, 0] {
                for e in v.iter_mut() {
                    *e = rng.random_range(-4..=4);
                }
            }
            let line = &(&MultiPoly::var(X).scale(&Rat::from_integer(v[0].into()))
                + &MultiPoly::var(Y).scale(&Rat::from_integer(v[1].into())))
                + &MultiPoly::var(Z).scale(&Rat::from_integer(v[2].into()));
            product = &product * &line;
            duals.push([
                Rat::from_integer(v[0].into()),
                Rat::from_integer(v[1].into()),
                Rat::from_integer(v[2].into()),
            ]);
        }
        let conic = {
            let mut q = MultiPoly::zero();
            for (i, j, k) in [(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1)] {
                let c: i64 = rng.random_range(-4..=4);
                let term = MultiPoly::from_terms(
                    &[X, Y, Z],
                    &[(&[i, j, k], Rat::from_integer(c.into()))],
                );
                q = &q + &term;
            }
            q
        };
        if conic.is_zero() {
            continue;
        }
        let quartic_poly = &(&conic * &conic) + &product;
        let Ok(curve) = PlaneCurve::new(quartic_poly) else {
            continue;
        };
        if curve.degree() != 4 {
            continue;
        }
        if curve.is_smooth()? {
            return Ok((curve, duals));
        }
    }
    Err(CurveError::RetriesExhausted(
        "quartic with forced bitangents".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::LineParam;
    use num_traits::Zero;

    #[test]
    fn smooth_fixture_is_smooth_and_deterministic() {
        let a = random_smooth_curve(3, 5, 10).unwrap();
        let b = random_smooth_curve(3, 5, 10).unwrap();
        assert_eq!(a, b);
        assert!(a.is_smooth().unwrap());
    }

    #[test]
    fn nodal_quartic_is_singular_at_the_node() {
        let (c, node) = nodal_quartic(7, 10).unwrap();
        assert_eq!(c.eval(&node), Rat::zero());
        for v in ["x", "y", "z"] {
            let partial = c.derivative(v);
            let val = partial
                .eval(&[("x", node[0].clone()), ("y", node[1].clone()), ("z", node[2].clone())])
                .unwrap();
            assert_eq!(val, Rat::zero());
        }
        assert!(!c.is_smooth().unwrap());
    }

    #[test]
    fn forced_bitangent_restriction_is_a_square() {
        let (c, duals) = quartic_with_forced_bitangents(13).unwrap();
        // parametrize the first line and restrict: the result must be a
        // square times a constant (gcd with derivative has degree 2)
        let line = LineParam::spanning_dual(&duals[0]).unwrap();
        let r = c.restrict_to_line(&line).unwrap();
        let g = r.gcd(&r.derivative());
        assert_eq!(g.degree(), Some(2));
    }

}
