//! Exact elimination plumbing shared by the counting routines: seeded
//! projectivities, resultant wrappers with degree bookkeeping, and the
//! fiber-matching step that recovers the remaining coordinate of each
//! eliminated solution with interval-style tolerances.

use super::roots::ComplexPoly;
use super::{OracleConfig, OracleError};
use crate::curves::Projectivity;
use crate::exact::{resultant, MultiPoly, Rat, UniPoly};
use num_complex::Complex64;
use num_traits::ToPrimitive;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Random integer projectivity with entries in [-9, 9] and nonzero
/// determinant; deterministic given the generator state.
pub fn random_projectivity(rng: &mut ChaCha8Rng) -> Projectivity {
    loop {
        let mut m = [[0i64; 3]; 3];
        for row in m.iter_mut() {
            for e in row.iter_mut() {
                *e = rng.random_range(-9..=9);
            }
        }
        if let Ok(t) = Projectivity::from_i64(m) {
            return t;
        }
    }
}

/// Resultant of two forms with respect to z, checked to be a binary form in
/// (x, y) of exactly the Bezout degree; returns it dehomogenized at y = 1
/// with the degree preserved (no intersection at the projection center or
/// on the line y = 0 at infinity).
pub fn eliminate_z_to_unipoly(
    a: &MultiPoly,
    b: &MultiPoly,
    expected_degree: u32,
) -> Result<UniPoly, OracleError> {
    let (da, db) = (a.degree_in("z"), b.degree_in("z"));
    let (ha, hb) = (
        a.homogeneous_degree().unwrap_or(0),
        b.homogeneous_degree().unwrap_or(0),
    );
    if da != ha || db != hb {
        return Err(OracleError::Precondition(
            "projection center lies on a curve (leading z-coefficient vanished)".into(),
        ));
    }
    let r = resultant(a, b, "z")?;
    if r.homogeneous_degree() != Some(expected_degree) {
        return Err(OracleError::Precondition(format!(
            "eliminant degree {:?} differs from the Bezout count {expected_degree}",
            r.homogeneous_degree()
        )));
    }
    let one = Rat::from_integer(1.into());
    let dehom = r.eval_partial(&[("y", one)]);
    let up = dehom
        .to_unipoly()
        .ok_or_else(|| OracleError::Precondition("eliminant is not univariate".into()))?;
    if up.degree() != Some(expected_degree as usize) {
        return Err(OracleError::Precondition(
            "an intersection point escaped to infinity in this chart".into(),
        ));
    }
    Ok(up)
}

/// Complex coefficient vector (ascending in `var`) of an exact polynomial
/// specialized at complex values of the other variables, normalized by the
/// largest exact coefficient magnitude of the whole polynomial.
pub fn complex_coeffs_in(
    p: &MultiPoly,
    var: &str,
    at: &[(&str, Complex64)],
) -> Vec<Complex64> {
    let max = p.max_coeff_abs();
    let scale = if max.to_f64().map(|v| v > 0.0).unwrap_or(false) {
        max
    } else {
        Rat::from_integer(1.into())
    };
    p.as_univariate_in(var)
        .iter()
        .map(|coef| {
            let mut acc = Complex64::ZERO;
            let vars = coef.vars().to_vec();
            for (exp, c) in coef.terms() {
                let mut term = Complex64::new((c / &scale).to_f64().unwrap_or(0.0), 0.0);
                for (i, &e) in exp.iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    let value = at
                        .iter()
                        .find(|(n, _)| *n == vars[i])
                        .map(|(_, v)| *v)
                        .expect("assignment covers all non-var variables");
                    term *= value.powu(e);
                }
                acc += term;
            }
            acc
        })
        .collect()
}

/// Roots in `var` of an exact polynomial specialized at complex values.
pub fn complex_roots_in(
    p: &MultiPoly,
    var: &str,
    at: &[(&str, Complex64)],
    cfg: &OracleConfig,
) -> Result<Vec<Complex64>, OracleError> {
    let raw = complex_coeffs_in(p, var, at);
    let cp = ComplexPoly::from_complex_coeffs(raw)?;
    cp.all_roots(cfg)
}

/// Values common to two root lists: within the radius, relative to the
/// value magnitude so large coordinates match at the same accuracy.
pub fn common_values(a: &[Complex64], b: &[Complex64], radius: f64) -> Vec<Complex64> {
    let mut out: Vec<Complex64> = Vec::new();
    for &x in a {
        for &y in b {
            let scale = 1.0 + x.norm().min(y.norm());
            if (x - y).norm() <= radius * scale {
                let mid = (x + y) / 2.0;
                if out.iter().all(|&z| (z - mid).norm() > radius * scale) {
                    out.push(mid);
                }
            }
        }
    }
    out
}

/// Evaluates an exact polynomial at complex coordinates, normalized by its
/// largest coefficient; small results certify near-membership.
pub fn residual_at(p: &MultiPoly, at: &[(&str, Complex64)]) -> f64 {
    let coeffs = complex_coeffs_in(p, "__none", at);
    debug_assert_eq!(coeffs.len(), 1);
    coeffs[0].norm()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::PlaneCurve;
    use rand::SeedableRng;

    #[test]
    fn projectivity_is_deterministic() {
        let mut r1 = ChaCha8Rng::seed_from_u64(9);
        let mut r2 = ChaCha8Rng::seed_from_u64(9);
        let a = random_projectivity(&mut r1);
        let b = random_projectivity(&mut r2);
        let pt = [
            Rat::from_integer(1.into()),
            Rat::from_integer(2.into()),
            Rat::from_integer(3.into()),
        ];
        assert_eq!(a.apply_inverse_to_point(&pt), b.apply_inverse_to_point(&pt));
    }

    #[test]
    fn fermat_cubic_flex_eliminant_has_bezout_degree() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let t = random_projectivity(&mut rng);
        let c = PlaneCurve::fermat_cubic().transform(&t);
        let h = c.hessian().unwrap();
        let up = eliminate_z_to_unipoly(c.poly(), h.poly(), 9).unwrap();
        assert_eq!(up.degree(), Some(9));
        // generic projectivity separates the nine flexes
        assert_eq!(up.gcd(&up.derivative()).degree(), Some(0));
    }

    #[test]
    fn common_values_matches_within_radius() {
        let a = [Complex64::new(1.0, 0.0), Complex64::new(2.0, 1.0)];
        let b = [Complex64::new(2.0 + 1e-9, 1.0), Complex64::new(5.0, 0.0)];
        let c = common_values(&a, &b, 1e-6);
        assert_eq!(c.len(), 1);
        assert!((c[0] - Complex64::new(2.0, 1.0)).norm() < 1e-6);
    }

    #[test]
    fn residual_detects_membership() {
        let c = PlaneCurve::fermat_cubic();
        let on = [
            ("x", Complex64::new(1.0, 0.0)),
            ("y", Complex64::new(-1.0, 0.0)),
            ("z", Complex64::new(0.0, 0.0)),
        ];
        assert!(residual_at(c.poly(), &on) < 1e-12);
        let off = [
            ("x", Complex64::new(1.0, 0.0)),
            ("y", Complex64::new(1.0, 0.0)),
            ("z", Complex64::new(1.0, 0.0)),
        ];
        assert!(residual_at(c.poly(), &off) > 0.5);
    }
}
