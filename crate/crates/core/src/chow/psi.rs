//! Chow ring of the incidence variety of points on lines in the plane.
//!
//! The ring is generated over the dual-plane hyperplane class `s` (sigma_1)
//! by the relative hyperplane class `z` (zeta), subject to
//!
//!   s^3 = 0,    z^2 = s z - s^2,
//!
//! the second relation encoding that the variety is the projectivized
//! universal subbundle (sigma_11 = sigma_1^2 here). z^3 = 0 follows from the
//! two relations. The fixed monomial basis is
//! {1, s, z, s^2, s z, s^2 z} and the degree map reads off the coefficient
//! of the point class s^2 z, to which both top monomials z^2 s and z s^2
//! reduce with coefficient one.

use crate::exact::UniPoly;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Basis slots: 1, s, z, s^2, s*z, s^2*z.
const RANK: usize = 6;
const B_ONE: usize = 0;
const B_S: usize = 1;
const B_Z: usize = 2;
const B_SS: usize = 3;
const B_SZ: usize = 4;
const B_SSZ: usize = 5;

/// A class on the point-line incidence variety with polynomial coefficients
/// in the curve degree symbol.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PsiClass {
    coeffs: [UniPoly; RANK],
}

impl PsiClass {
    pub fn zero() -> Self {
        PsiClass::default()
    }

    pub fn one() -> Self {
        PsiClass::from_poly(UniPoly::one())
    }

    pub fn from_poly(p: UniPoly) -> Self {
        let mut c = PsiClass::zero();
        c.coeffs[B_ONE] = p;
        c
    }

    /// sigma_1, the class of lines through a point.
    pub fn sigma1() -> Self {
        let mut c = PsiClass::zero();
        c.coeffs[B_S] = UniPoly::one();
        c
    }

    /// zeta, the relative hyperplane class.
    pub fn zeta() -> Self {
        let mut c = PsiClass::zero();
        c.coeffs[B_Z] = UniPoly::one();
        c
    }

    /// sigma_11 = sigma_1^2 in this rank-two setting.
    pub fn sigma11() -> Self {
        let mut c = PsiClass::zero();
        c.coeffs[B_SS] = UniPoly::one();
        c
    }

    /// Builds coeff * s^i z^j, reducing to the normal form (any i, j).
    pub fn monomial(coeff: UniPoly, s_pow: u32, z_pow: u32) -> Self {
        let mut acc = PsiClass::from_poly(coeff);
        for _ in 0..s_pow {
            acc = &acc * &PsiClass::sigma1();
        }
        for _ in 0..z_pow {
            acc = &acc * &PsiClass::zeta();
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn coeff(&self, slot: usize) -> &UniPoly {
        &self.coeffs[slot]
    }

    /// Degree map: the coefficient of the point class s^2 z.
    pub fn degree_map(&self) -> UniPoly {
        self.coeffs[B_SSZ].clone()
    }

    /// The graded piece of total degree k (0..=3).
    pub fn graded_part(&self, k: u32) -> PsiClass {
        let slots: &[usize] = match k {
            0 => &[B_ONE],
            1 => &[B_S, B_Z],
            2 => &[B_SS, B_SZ],
            3 => &[B_SSZ],
            _ => &[],
        };
        let mut out = PsiClass::zero();
        for &s in slots {
            out.coeffs[s] = self.coeffs[s].clone();
        }
        out
    }

    pub fn scale(&self, p: &UniPoly) -> PsiClass {
        let mut out = PsiClass::zero();
        for (o, c) in out.coeffs.iter_mut().zip(self.coeffs.iter()) {
            *o = c * p;
        }
        out
    }
}

/// Product of basis monomials, as coefficients on the basis. Derived from
/// s^3 = 0 and z^2 = s z - s^2:
///   z * z = s z - s^2
///   z * s z = s z^2 = s^2 z (using the relation and s^3 = 0)
///   z * s^2 = s^2 z, s * s z = s^2 z, everything of degree >= 4 dies.
fn basis_mul(a: usize, b: usize) -> Vec<(usize, i64)> {
    use self::{B_ONE as ONE, B_S as S, B_SS as SS, B_SSZ as SSZ, B_SZ as SZ, B_Z as Z};
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    match (lo, hi) {
        (ONE, k) => vec![(k, 1)],
        (S, S) => vec![(SS, 1)],
        (S, Z) => vec![(SZ, 1)],
        (S, SS) => vec![],
        (S, SZ) => vec![(SSZ, 1)],
        (Z, Z) => vec![(SZ, 1), (SS, -1)],
        (Z, SS) => vec![(SSZ, 1)],
        (Z, SZ) => vec![(SSZ, 1)],
        _ => vec![],
    }
}

impl Mul for &PsiClass {
    type Output = PsiClass;
    fn mul(self, rhs: &PsiClass) -> PsiClass {
        let mut out = PsiClass::zero();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let prod = a * b;
                for (slot, sign) in basis_mul(i, j) {
                    let signed = if sign < 0 { -&prod } else { prod.clone() };
                    out.coeffs[slot] = &out.coeffs[slot] + &signed;
                }
            }
        }
        out
    }
}

impl Add for &PsiClass {
    type Output = PsiClass;
    fn add(self, rhs: &PsiClass) -> PsiClass {
        let mut out = PsiClass::zero();
        for i in 0..RANK {
            out.coeffs[i] = &self.coeffs[i] + &rhs.coeffs[i];
        }
        out
    }
}

impl Sub for &PsiClass {
    type Output = PsiClass;
    fn sub(self, rhs: &PsiClass) -> PsiClass {
        self + &(-rhs)
    }
}

impl Neg for &PsiClass {
    type Output = PsiClass;
    fn neg(self) -> PsiClass {
        let mut out = PsiClass::zero();
        for i in 0..RANK {
            out.coeffs[i] = -&self.coeffs[i];
        }
        out
    }
}

impl fmt::Debug for PsiClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; RANK] = ["1", "s1", "z", "s1^2", "s1*z", "s1^2*z"];
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})*{}", c.display("d"), NAMES[i])?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_squared_reduces_by_the_relation() {
        let z = PsiClass::zeta();
        let expected = &PsiClass::monomial(UniPoly::one(), 1, 1)
            - &PsiClass::monomial(UniPoly::one(), 2, 0);
        assert_eq!(&z * &z, expected);
    }

    #[test]
    fn zeta_cubed_vanishes() {
        let z = PsiClass::zeta();
        assert!((&(&z * &z) * &z).is_zero());
    }

    #[test]
    fn zeta_cubed_vanishes_without_its_own_relation() {
        // reduce z^3 with only z^2 = s z - s^2 and s^3 = 0:
        // z^3 = (s z - s^2) z = s z^2 - s^2 z = s(s z - s^2) - s^2 z = 0.
        let sz_minus_ss = &PsiClass::monomial(UniPoly::one(), 1, 1)
            - &PsiClass::monomial(UniPoly::one(), 2, 0);
        let z3 = &sz_minus_ss * &PsiClass::zeta();
        assert!(z3.is_zero());
    }

    #[test]
    fn degree_map_values() {
        // s^2 z -> 1
        assert_eq!(
            PsiClass::monomial(UniPoly::one(), 2, 1).degree_map(),
            UniPoly::one()
        );
        // z^2 s (unreduced input) -> 1
        assert_eq!(
            PsiClass::monomial(UniPoly::one(), 1, 2).degree_map(),
            UniPoly::one()
        );
        // s^3 -> 0
        assert!(PsiClass::monomial(UniPoly::one(), 3, 0).is_zero());
    }

    #[test]
    fn sigma1_times_sigma1_zeta_is_point_class() {
        let p = &PsiClass::sigma1() * &PsiClass::monomial(UniPoly::one(), 1, 1);
        assert_eq!(p.degree_map(), UniPoly::one());
        assert_eq!(p, PsiClass::monomial(UniPoly::one(), 2, 1));
    }

    #[test]
    fn sigma11_is_sigma1_squared() {
        assert_eq!(
            PsiClass::sigma11(),
            &PsiClass::sigma1() * &PsiClass::sigma1()
        );
    }

    #[test]
    fn associativity_on_mixed_classes() {
        let a = &PsiClass::sigma1() + &PsiClass::zeta().scale(&UniPoly::from_int_coeffs(&[2, 1]));
        let b = &PsiClass::one() + &PsiClass::monomial(UniPoly::from_int_coeffs(&[0, 3]), 1, 1);
        let c = &PsiClass::zeta() - &PsiClass::sigma11();
        let left = &(&a * &b) * &c;
        let right = &a * &(&b * &c);
        assert_eq!(left, right);
        assert_eq!(&a * &b, &b * &a);
    }
}
