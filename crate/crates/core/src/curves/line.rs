//! Parametrized lines in the plane: base + s * direction, so restrictions
//! of curves are honest univariate polynomials in s.

use super::CurveError;
use crate::exact::Rat;
use num_traits::Zero;

/// A line through `base` with direction `direction`, both projective points
/// with exact rational coordinates; the parametrization is
/// s -> [base + s * direction].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineParam {
    base: [Rat; 3],
    direction: [Rat; 3],
}

impl LineParam {
    pub fn new(base: [Rat; 3], direction: [Rat; 3]) -> Result<Self, CurveError> {
        if base.iter().all(Rat::is_zero) || direction.iter().all(Rat::is_zero) {
            return Err(CurveError::Invalid("line points must be nonzero".into()));
        }
        // distinct as projective points: the 2x2 minors must not all vanish
        let minors_vanish = (0..3).all(|i| {
            let j = (i + 1) % 3;
            (&base[i] * &direction[j] - &base[j] * &direction[i]).is_zero()
        });
        if minors_vanish {
            return Err(CurveError::Invalid(
                "base and direction are the same projective point".into(),
            ));
        }
        Ok(LineParam { base, direction })
    }

    pub fn from_i64(base: [i64; 3], direction: [i64; 3]) -> Result<Self, CurveError> {
        let conv = |p: [i64; 3]| {
            [
                Rat::from_integer(p[0].into()),
                Rat::from_integer(p[1].into()),
                Rat::from_integer(p[2].into()),
            ]
        };
        LineParam::new(conv(base), conv(direction))
    }

    pub fn base(&self) -> &[Rat; 3] {
        &self.base
    }

    pub fn direction(&self) -> &[Rat; 3] {
        &self.direction
    }

    /// A parametrization of the line with the given dual coordinates
    /// a x + b y + c z = 0, built from two of the three standard points
    /// (0, -c, b), (c, 0, -a), (-b, a, 0) on it.
    pub fn spanning_dual(dual: &[Rat; 3]) -> Result<Self, CurveError> {
        let [a, b, c] = dual;
        let candidates = [
            [Rat::zero(), -c, b.clone()],
            [c.clone(), Rat::zero(), -a],
            [-b, a.clone(), Rat::zero()],
        ];
        let mut found: Vec<[Rat; 3]> = Vec::new();
        for cand in candidates {
            if cand.iter().all(Rat::is_zero) {
                continue;
            }
            let independent = found.iter().all(|p| {
                (0..3).any(|i| {
                    let j = (i + 1) % 3;
                    !(&p[i] * &cand[j] - &p[j] * &cand[i]).is_zero()
                })
            });
            if independent {
                found.push(cand);
            }
            if found.len() == 2 {
                return LineParam::new(found[0].clone(), found[1].clone());
            }
        }
        Err(CurveError::Invalid("degenerate dual vector".into()))
    }

    /// The point at parameter s.
    pub fn point_at(&self, s: &Rat) -> [Rat; 3] {
        [
            &self.base[0] + &(&self.direction[0] * s),
            &self.base[1] + &(&self.direction[1] * s),
            &self.base[2] + &(&self.direction[2] * s),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_i64;

    #[test]
    fn rejects_coincident_points() {
        assert!(LineParam::from_i64([1, 2, 3], [2, 4, 6]).is_err());
        assert!(LineParam::from_i64([0, 0, 0], [1, 0, 0]).is_err());
        assert!(LineParam::from_i64([1, 0, 0], [0, 1, 0]).is_ok());
    }

    #[test]
    fn point_at_parameter() {
        let l = LineParam::from_i64([1, 0, 1], [0, 1, 0]).unwrap();
        assert_eq!(l.point_at(&rat_i64(5)), [rat_i64(1), rat_i64(5), rat_i64(1)]);
    }
}
