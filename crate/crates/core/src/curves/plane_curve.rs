//! Homogeneous plane curves over the rationals.

use super::{CurveError, X, XYZ, Y, Z};
use crate::exact::{MultiPoly, Rat, UniPoly};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

/// A plane projective curve: a nonzero homogeneous polynomial in x, y, z.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlaneCurve {
    poly: MultiPoly,
    degree: u32,
}

/// An invertible 3x3 rational matrix acting on coordinates.
#[derive(Clone, Debug)]
pub struct Projectivity(pub [[Rat; 3]; 3]);

impl PlaneCurve {
    pub fn new(poly: MultiPoly) -> Result<Self, CurveError> {
        if poly.is_zero() {
            return Err(CurveError::ZeroCurve);
        }
        for v in poly.vars() {
            if !XYZ.contains(&v.as_str()) {
                return Err(CurveError::Invalid(format!("unexpected variable {v}")));
            }
        }
        let degree = poly.homogeneous_degree().ok_or(CurveError::NotHomogeneous)?;
        Ok(PlaneCurve { poly, degree })
    }

    /// Builds from integer monomial coefficients `(i, j, k, c)` for
    /// c * x^i y^j z^k.
    pub fn from_monomials(monomials: &[(u32, u32, u32, i64)]) -> Result<Self, CurveError> {
        let terms: Vec<(Vec<u32>, Rat)> = monomials
            .iter()
            .map(|&(i, j, k, c)| (vec![i, j, k], Rat::from_integer(c.into())))
            .collect();
        let term_refs: Vec<(&[u32], Rat)> = terms
            .iter()
            .map(|(e, c)| (e.as_slice(), c.clone()))
            .collect();
        PlaneCurve::new(MultiPoly::from_terms(&[X, Y, Z], &term_refs))
    }

    /// The Fermat cubic x^3 + y^3 + z^3.
    pub fn fermat_cubic() -> Self {
        PlaneCurve::from_monomials(&[(3, 0, 0, 1), (0, 3, 0, 1), (0, 0, 3, 1)]).unwrap()
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn eval(&self, point: &[Rat; 3]) -> Rat {
        self.poly
            .eval(&[(X, point[0].clone()), (Y, point[1].clone()), (Z, point[2].clone())])
            .expect("all variables assigned")
    }

    pub fn derivative(&self, var: &str) -> MultiPoly {
        self.poly.derivative(var)
    }

    /// The Hessian determinant of the second partials: homogeneous of
    /// degree 3(d-2) for d >= 2, a constant for conics.
    pub fn hessian(&self) -> Result<PlaneCurve, CurveError> {
        if self.degree < 2 {
            return Err(CurveError::Invalid("hessian needs degree >= 2".into()));
        }
        let second: Vec<Vec<MultiPoly>> = XYZ
            .iter()
            .map(|u| XYZ.iter().map(|v| self.poly.derivative(u).derivative(v)).collect())
            .collect();
        let det = crate::exact::det3(&second);
        PlaneCurve::new(det).map_err(|_| CurveError::Invalid("degenerate hessian".into()))
    }

    /// First polar of a point: p0 dF/dx + p1 dF/dy + p2 dF/dz.
    pub fn polar(&self, point: &[Rat; 3]) -> Result<PlaneCurve, CurveError> {
        if self.degree < 2 {
            return Err(CurveError::Invalid("polar needs degree >= 2".into()));
        }
        let mut acc = MultiPoly::zero();
        for (v, c) in XYZ.iter().zip(point.iter()) {
            acc = &acc + &self.poly.derivative(v).scale(c);
        }
        if acc.is_zero() {
            return Err(CurveError::ZeroPolar);
        }
        PlaneCurve::new(acc)
    }

    /// Coordinate change: substitutes x_i -> sum_j T_ij x_j.
    pub fn transform(&self, t: &Projectivity) -> PlaneCurve {
        PlaneCurve {
            poly: transform_poly(&self.poly, t),
            degree: self.degree,
        }
    }

    /// Exact check for smoothness: the Macaulay resultant of the three
    /// partials is nonzero exactly when the curve has no singular point.
    pub fn is_smooth(&self) -> Result<bool, CurveError> {
        if self.degree == 1 {
            return Ok(true);
        }
        let parts: Vec<MultiPoly> = XYZ.iter().map(|v| self.poly.derivative(v)).collect();
        let res = crate::exact::ternary_resultant([&parts[0], &parts[1], &parts[2]], XYZ, None)
            .map_err(|e| CurveError::Invalid(e.to_string()))?;
        Ok(!res.is_zero())
    }
}

pub(crate) fn transform_poly(p: &MultiPoly, t: &Projectivity) -> MultiPoly {
    let images: Vec<MultiPoly> = (0..3)
        .map(|i| {
            let mut s = MultiPoly::zero();
            for (j, v) in XYZ.iter().enumerate() {
                s = &s + &MultiPoly::var(v).scale(&t.0[i][j]);
            }
            s
        })
        .collect();
    let tmp = ["__tx", "__ty", "__tz"];
    let mut out = p.clone();
    for (v, tv) in XYZ.iter().zip(tmp.iter()) {
        out = out.substitute(v, &MultiPoly::var(tv));
    }
    for (tv, img) in tmp.iter().zip(images.iter()) {
        out = out.substitute(tv, img);
    }
    out
}

impl Projectivity {
    pub fn identity() -> Self {
        let mut rows: Vec<[Rat; 3]> = Vec::new();
        for i in 0..3 {
            let mut row = [Rat::zero(), Rat::zero(), Rat::zero()];
            row[i] = Rat::from_integer(1.into());
            rows.push(row);
        }
        Projectivity([rows[0].clone(), rows[1].clone(), rows[2].clone()])
    }

    pub fn from_i64(m: [[i64; 3]; 3]) -> Result<Self, CurveError> {
        let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        if det == 0 {
            return Err(CurveError::Invalid("singular coordinate change".into()));
        }
        let conv = |r: [i64; 3]| {
            [
                Rat::from_integer(r[0].into()),
                Rat::from_integer(r[1].into()),
                Rat::from_integer(r[2].into()),
            ]
        };
        Ok(Projectivity([conv(m[0]), conv(m[1]), conv(m[2])]))
    }

    /// The adjugate matrix: adj(T) * T = det(T) * I, so projectively it acts
    /// as the inverse.
    pub fn adjugate(&self) -> [[Rat; 3]; 3] {
        let m = &self.0;
        let cof = |r0: usize, r1: usize, c0: usize, c1: usize| {
            &(&m[r0][c0] * &m[r1][c1]) - &(&m[r0][c1] * &m[r1][c0])
        };
        [
            [cof(1, 2, 1, 2), -cof(0, 2, 1, 2), cof(0, 1, 1, 2)],
            [-cof(1, 2, 0, 2), cof(0, 2, 0, 2), -cof(0, 1, 0, 2)],
            [cof(1, 2, 0, 1), -cof(0, 2, 0, 1), cof(0, 1, 0, 1)],
        ]
    }

    /// Image of a point under the inverse substitution direction: the
    /// transformed curve is C'(x) = C(Tx), so the matching point map is
    /// q -> T^{-1} q, realized projectively by the adjugate.
    pub fn apply_inverse_to_point(&self, p: &[Rat; 3]) -> [Rat; 3] {
        let adj = self.adjugate();
        let mut out = [Rat::zero(), Rat::zero(), Rat::zero()];
        for i in 0..3 {
            for j in 0..3 {
                out[i] = &out[i] + &(&adj[i][j] * &p[j]);
            }
        }
        out
    }
}

/// Serialized form: a list of (exponent triple, numerator, denominator)
/// records; numerator and denominator are decimal strings so arbitrary
/// precision survives the round trip.
#[derive(Serialize, Deserialize)]
pub struct CurveRecord {
    pub terms: Vec<TermRecord>,
}

#[derive(Serialize, Deserialize)]
pub struct TermRecord {
    pub exponents: [u32; 3],
    pub numerator: String,
    pub denominator: String,
}

impl Serialize for PlaneCurve {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let mut terms = Vec::new();
        let vars = self.poly.vars().to_vec();
        for (exp, c) in self.poly.terms() {
            let mut e = [0u32; 3];
            for (i, v) in vars.iter().enumerate() {
                let slot = XYZ.iter().position(|w| w == v).expect("xyz vars");
                e[slot] = exp[i];
            }
            terms.push(TermRecord {
                exponents: e,
                numerator: c.numer().to_string(),
                denominator: c.denom().to_string(),
            });
        }
        terms.sort_by_key(|t| t.exponents);
        CurveRecord { terms }.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for PlaneCurve {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let record = CurveRecord::deserialize(de)?;
        let mut terms: Vec<(Vec<u32>, Rat)> = Vec::new();
        for t in &record.terms {
            let num = t
                .numerator
                .parse()
                .map_err(|_| D::Error::custom("bad numerator"))?;
            let den = t
                .denominator
                .parse()
                .map_err(|_| D::Error::custom("bad denominator"))?;
            terms.push((t.exponents.to_vec(), Rat::new(num, den)));
        }
        let term_refs: Vec<(&[u32], Rat)> = terms
            .iter()
            .map(|(e, c)| (e.as_slice(), c.clone()))
            .collect();
        PlaneCurve::new(MultiPoly::from_terms(&[X, Y, Z], &term_refs))
            .map_err(|e| D::Error::custom(e.to_string()))
    }
}

use super::line::LineParam;

impl PlaneCurve {
    /// Restricts to a parametrized line, producing an exact univariate
    /// polynomial of degree <= deg(curve) in the parameter.
    pub fn restrict_to_line(&self, line: &LineParam) -> Result<UniPoly, CurveError> {
        let [bx, by, bz] = line.base();
        let [dx, dy, dz] = line.direction();
        let s = MultiPoly::var("s");
        let sub = |b: &Rat, dvec: &Rat| {
            &MultiPoly::constant(b.clone()) + &s.scale(dvec)
        };
        let restricted = self
            .poly
            .substitute(X, &sub(bx, dx))
            .substitute(Y, &sub(by, dy))
            .substitute(Z, &sub(bz, dz));
        let up = restricted.to_unipoly().expect("only s remains");
        if up.is_zero() {
            return Err(CurveError::LineIsComponent);
        }
        Ok(up)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_i64;

    fn rat3(a: i64, b: i64, c: i64) -> [Rat; 3] {
        [rat_i64(a), rat_i64(b), rat_i64(c)]
    }

    #[test]
    fn fermat_cubic_hessian_is_xyz() {
        let h = PlaneCurve::fermat_cubic().hessian().unwrap();
        let xyz = &(&MultiPoly::var(X) * &MultiPoly::var(Y)) * &MultiPoly::var(Z);
        assert_eq!(h.poly(), &xyz.scale(&rat_i64(216)));
        assert_eq!(h.degree(), 3);
    }

    #[test]
    fn conic_hessian_is_constant() {
        let conic =
            PlaneCurve::from_monomials(&[(2, 0, 0, 1), (0, 2, 0, 1), (0, 0, 2, 1)]).unwrap();
        let h = conic.hessian().unwrap();
        assert_eq!(h.degree(), 0);
        assert_eq!(h.poly().constant_value().unwrap(), rat_i64(8));
    }

    #[test]
    fn quartic_hessian_degree_bookkeeping() {
        let q = PlaneCurve::from_monomials(&[
            (4, 0, 0, 1),
            (0, 4, 0, 2),
            (0, 0, 4, 3),
            (2, 1, 1, 5),
        ])
        .unwrap();
        assert_eq!(q.hessian().unwrap().degree(), 6);
    }

    #[test]
    fn polar_of_conic_from_apex() {
        // x^2 + y^2 - z^2, point [0:0:1] -> -2z
        let conic =
            PlaneCurve::from_monomials(&[(2, 0, 0, 1), (0, 2, 0, 1), (0, 0, 2, -1)]).unwrap();
        let polar = conic.polar(&rat3(0, 0, 1)).unwrap();
        assert_eq!(polar.poly(), &MultiPoly::var(Z).scale(&rat_i64(-2)));
        assert_eq!(polar.degree(), 1);
    }

    #[test]
    fn polar_degree_of_quartic() {
        let q = PlaneCurve::from_monomials(&[(4, 0, 0, 1), (0, 4, 0, 1), (0, 0, 4, 1)]).unwrap();
        assert_eq!(q.polar(&rat3(1, 2, 3)).unwrap().degree(), 3);
    }

    #[test]
    fn restriction_of_unit_conic() {
        // x^2 + y^2 - z^2 on [s : 0 : 1] is s^2 - 1
        let conic =
            PlaneCurve::from_monomials(&[(2, 0, 0, 1), (0, 2, 0, 1), (0, 0, 2, -1)]).unwrap();
        let line = LineParam::new(rat3(0, 0, 1), rat3(1, 0, 0)).unwrap();
        let r = conic.restrict_to_line(&line).unwrap();
        assert_eq!(r, UniPoly::from_int_coeffs(&[-1, 0, 1]));
    }

    #[test]
    fn restriction_through_point_on_curve_has_zero_constant_term() {
        let c = PlaneCurve::fermat_cubic();
        // [1 : -1 : 0] lies on the Fermat cubic
        let line = LineParam::new(rat3(1, -1, 0), rat3(0, 1, 2)).unwrap();
        let r = c.restrict_to_line(&line).unwrap();
        assert_eq!(r.coeff(0), rat_i64(0));
    }

    #[test]
    fn smoothness_check() {
        assert!(PlaneCurve::fermat_cubic().is_smooth().unwrap());
        // nodal cubic
        let nodal = PlaneCurve::from_monomials(&[(0, 2, 1, 1), (3, 0, 0, -1), (2, 0, 1, -1)])
            .unwrap();
        assert!(!nodal.is_smooth().unwrap());
    }

    #[test]
    fn serde_round_trip() {
        let c = PlaneCurve::from_monomials(&[(4, 0, 0, 3), (1, 2, 1, -7), (0, 0, 4, 2)]).unwrap();
        let json = serde_json::to_string(&c).unwrap();
        let back: PlaneCurve = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn hessian_transforms_covariantly() {
        // Hess(C o T) = det(T)^2 * Hess(C) o T for plane curves
        let c = PlaneCurve::from_monomials(&[(3, 0, 0, 2), (0, 3, 0, 1), (0, 0, 3, 1), (1, 1, 1, 4)])
            .unwrap();
        let t = Projectivity::from_i64([[1, 2, 0], [0, 1, 1], [1, 0, 3]]).unwrap();
        let det = rat_i64(1 * (1 * 3 - 1 * 0) - 2 * (0 * 3 - 1 * 1) + 0);
        let lhs = c.transform(&t).hessian().unwrap();
        let rhs = c.hessian().unwrap().transform(&t);
        assert_eq!(lhs.poly(), &rhs.poly().scale(&(&det * &det)));
    }
}
