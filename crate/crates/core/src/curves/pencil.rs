//! Pencils of plane curves: ordered pairs (f, g) of equal-degree curves,
//! members f + t g plus the member at infinity g.

use super::plane_curve::Projectivity;
use super::{CurveError, PlaneCurve, XYZ};
use crate::exact::{MultiPoly, Rat};
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

const RETRY_BUDGET: u32 = 64;

/// A pencil of degree-d curves spanned by two non-proportional members.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurvePencil {
    f: PlaneCurve,
    g: PlaneCurve,
    seed: Option<u64>,
}

impl CurvePencil {
    pub fn new(f: PlaneCurve, g: PlaneCurve) -> Result<Self, CurveError> {
        if f.degree() != g.degree() {
            return Err(CurveError::Invalid(format!(
                "generator degrees differ: {} vs {}",
                f.degree(),
                g.degree()
            )));
        }
        if proportional(f.poly(), g.poly()) {
            return Err(CurveError::ProportionalGenerators);
        }
        Ok(CurvePencil { f, g, seed: None })
    }

    /// Deterministic random pencil: integer coefficients of absolute value
    /// at most `height`, rejection-sampled until the generators are
    /// independent (and nonzero).
    pub fn random(degree: u32, seed: u64, height: u32) -> Result<Self, CurveError> {
        if degree < 2 {
            return Err(CurveError::Invalid("pencil degree must be >= 2".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..RETRY_BUDGET {
            let f = super::fixtures::random_curve(degree, height, &mut rng);
            let g = super::fixtures::random_curve(degree, height, &mut rng);
            let (Some(f), Some(g)) = (f, g) else { continue };
            match CurvePencil::new(f, g) {
                Ok(mut p) => {
                    p.seed = Some(seed);
                    return Ok(p);
                }
                Err(_) => continue,
            }
        }
        Err(CurveError::RetriesExhausted(format!(
            "random pencil of degree {degree}"
        )))
    }

    pub fn f(&self) -> &PlaneCurve {
        &self.f
    }

    pub fn g(&self) -> &PlaneCurve {
        &self.g
    }

    pub fn degree(&self) -> u32 {
        self.f.degree()
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    /// The member f + t g.
    pub fn member(&self, t: &Rat) -> Result<PlaneCurve, CurveError> {
        PlaneCurve::new(&self.f.poly().clone() + &self.g.poly().scale(t))
    }

    /// The member polynomial with t symbolic.
    pub fn member_symbolic(&self, t: &str) -> MultiPoly {
        &self.f.poly().clone() + &(&MultiPoly::var(t) * self.g.poly())
    }

    /// Parameter of the unique member through a point: t = -f(p)/g(p);
    /// a base point (f and g both vanish) has no unique member.
    pub fn member_through(&self, point: &[Rat; 3]) -> Result<Rat, CurveError> {
        let fv = self.f.eval(point);
        let gv = self.g.eval(point);
        if gv.is_zero() {
            return Err(if fv.is_zero() {
                CurveError::BasePoint
            } else {
                CurveError::Invalid("point lies only on the member at infinity".into())
            });
        }
        Ok(-fv / gv)
    }

    pub fn transform(&self, t: &Projectivity) -> CurvePencil {
        CurvePencil {
            f: self.f.transform(t),
            g: self.g.transform(t),
            seed: self.seed,
        }
    }
}

fn proportional(a: &MultiPoly, b: &MultiPoly) -> bool {
    let (Some((ea, ca)), Some((eb, cb))) = (leading_term(a), leading_term(b)) else {
        return true; // zero polynomials count as proportional
    };
    if ea != eb {
        return false;
    }
    // a * cb == b * ca
    &a.scale(&cb) - &b.scale(&ca) == MultiPoly::zero()
}

fn leading_term(p: &MultiPoly) -> Option<(Vec<u32>, Rat)> {
    // align exponents to the full xyz variable list for comparability
    let full = p.embed(&XYZ.iter().map(|s| s.to_string()).collect::<Vec<_>>());
    full.terms().next_back().map(|(e, c)| (e.clone(), c.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_i64;

    #[test]
    fn determinism_of_random_pencils() {
        let a = CurvePencil::random(3, 42, 10).unwrap();
        let b = CurvePencil::random(3, 42, 10).unwrap();
        assert_eq!(a, b);
        let c = CurvePencil::random(3, 43, 10).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn random_conic_pencil_is_independent() {
        let p = CurvePencil::random(2, 7, 10).unwrap();
        assert_eq!(p.degree(), 2);
        assert!(!proportional(p.f().poly(), p.g().poly()));
    }

    #[test]
    fn member_through_cases() {
        let f = PlaneCurve::from_monomials(&[(1, 0, 0, 1)]).unwrap(); // x
        let g = PlaneCurve::from_monomials(&[(0, 1, 0, 1)]).unwrap(); // y
        let p = CurvePencil::new(f, g).unwrap();
        // f(p) = 0, g(p) != 0 -> t = 0
        assert_eq!(p.member_through(&[rat_i64(0), rat_i64(1), rat_i64(0)]).unwrap(), rat_i64(0));
        // f(p) = g(p) != 0 -> t = -1
        assert_eq!(
            p.member_through(&[rat_i64(1), rat_i64(1), rat_i64(5)]).unwrap(),
            rat_i64(-1)
        );
        // base point -> error
        assert!(matches!(
            p.member_through(&[rat_i64(0), rat_i64(0), rat_i64(1)]),
            Err(CurveError::BasePoint)
        ));
    }

    #[test]
    fn proportional_generators_rejected() {
        let f = PlaneCurve::from_monomials(&[(2, 0, 0, 1), (0, 2, 0, 2)]).unwrap();
        let g = PlaneCurve::from_monomials(&[(2, 0, 0, 3), (0, 2, 0, 6)]).unwrap();
        assert!(matches!(
            CurvePencil::new(f, g),
            Err(CurveError::ProportionalGenerators)
        ));
    }

    #[test]
    fn members_vanish_at_rational_base_point() {
        // f = x^2 - yz, g = y^2 - xz share the base point [1:1:1]
        let f = PlaneCurve::from_monomials(&[(2, 0, 0, 1), (0, 1, 1, -1)]).unwrap();
        let g = PlaneCurve::from_monomials(&[(0, 2, 0, 1), (1, 0, 1, -1)]).unwrap();
        let p = CurvePencil::new(f, g).unwrap();
        let base = [rat_i64(1), rat_i64(1), rat_i64(1)];
        for t in [-3i64, 0, 2, 11] {
            let member = p.member(&rat_i64(t)).unwrap();
            assert_eq!(member.eval(&base), rat_i64(0));
        }
    }

    #[test]
    fn serde_round_trip() {
        let p = CurvePencil::random(2, 5, 10).unwrap();
        let json = serde_json::to_string(&p).unwrap();
        let back: CurvePencil = serde_json::from_str(&json).unwrap();
        assert_eq!(back.f(), p.f());
        assert_eq!(back.g(), p.g());
    }
}
