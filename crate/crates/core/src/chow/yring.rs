//! Chow ring of the threefold (dual plane) x (pencil): generated by the
//! dual-plane line class M with M^3 = 0 and the pencil point class q with
//! q^2 = 0; the degree map reads off M^2 q.

use crate::exact::UniPoly;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Basis slots: 1, M, q, M^2, M q, M^2 q.
const RANK: usize = 6;

/// A class on the product threefold with polynomial coefficients in the
/// curve degree symbol.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct YClass {
    coeffs: [UniPoly; RANK],
}

impl YClass {
    pub fn zero() -> Self {
        YClass::default()
    }

    pub fn one() -> Self {
        YClass::from_poly(UniPoly::one())
    }

    pub fn from_poly(p: UniPoly) -> Self {
        YClass::monomial(p, 0, 0)
    }

    pub fn m() -> Self {
        YClass::monomial(UniPoly::one(), 1, 0)
    }

    pub fn q() -> Self {
        YClass::monomial(UniPoly::one(), 0, 1)
    }

    /// coeff * M^i q^j, reduced by M^3 = 0 and q^2 = 0.
    pub fn monomial(coeff: UniPoly, m_pow: u32, q_pow: u32) -> Self {
        let mut c = YClass::zero();
        if m_pow <= 2 && q_pow <= 1 {
            c.coeffs[Self::slot(m_pow, q_pow)] = coeff;
        }
        c
    }

    fn slot(m_pow: u32, q_pow: u32) -> usize {
        match (m_pow, q_pow) {
            (0, 0) => 0,
            (1, 0) => 1,
            (0, 1) => 2,
            (2, 0) => 3,
            (1, 1) => 4,
            (2, 1) => 5,
            _ => unreachable!(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Degree map: the coefficient of M^2 q.
    pub fn degree_map(&self) -> UniPoly {
        self.coeffs[5].clone()
    }

    pub fn scale(&self, p: &UniPoly) -> YClass {
        let mut out = YClass::zero();
        for (o, c) in out.coeffs.iter_mut().zip(self.coeffs.iter()) {
            *o = c * p;
        }
        out
    }
}

const POWS: [(u32, u32); RANK] = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (2, 1)];

impl Mul for &YClass {
    type Output = YClass;
    fn mul(self, rhs: &YClass) -> YClass {
        let mut out = YClass::zero();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let (mi, qi) = POWS[i];
                let (mj, qj) = POWS[j];
                let (m, q) = (mi + mj, qi + qj);
                if m > 2 || q > 1 {
                    continue;
                }
                let slot = YClass::slot(m, q);
                out.coeffs[slot] = &out.coeffs[slot] + &(a * b);
            }
        }
        out
    }
}

impl Add for &YClass {
    type Output = YClass;
    fn add(self, rhs: &YClass) -> YClass {
        let mut out = YClass::zero();
        for i in 0..RANK {
            out.coeffs[i] = &self.coeffs[i] + &rhs.coeffs[i];
        }
        out
    }
}

impl Sub for &YClass {
    type Output = YClass;
    fn sub(self, rhs: &YClass) -> YClass {
        self + &(-rhs)
    }
}

impl Neg for &YClass {
    type Output = YClass;
    fn neg(self) -> YClass {
        let mut out = YClass::zero();
        for i in 0..RANK {
            out.coeffs[i] = -&self.coeffs[i];
        }
        out
    }
}

impl fmt::Debug for YClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; RANK] = ["1", "M", "q", "M^2", "M*q", "M^2*q"];
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
    fn product_reduces_and_degree_reads_m2q() {
        // (3M + 2q) * M^2 = 2 M^2 q
        let a = &YClass::m().scale(&UniPoly::from_i64(3)) + &YClass::q().scale(&UniPoly::from_i64(2));
        let m2 = YClass::monomial(UniPoly::one(), 2, 0);
        let p = &a * &m2;
        assert_eq!(p, YClass::monomial(UniPoly::from_i64(2), 2, 1));
        assert_eq!(p.degree_map(), UniPoly::from_i64(2));
    }

    #[test]
    fn q_squared_vanishes() {
        assert!((&YClass::q() * &YClass::q()).is_zero());
    }

    #[test]
    fn truncated_cube_times_q() {
        // (1 + M)^3 truncates to 1 + 3M + 3M^2; times 2q the top piece is
        // 6 M^2 q but the M^2 * 2q term alone has degree coefficient 2.
        let one_plus_m = &YClass::one() + &YClass::m();
        let cube = &(&one_plus_m * &one_plus_m) * &one_plus_m;
        let m2_part = YClass::monomial(cube.coeffs[3].clone(), 2, 0);
        let deg = (&m2_part * &YClass::q().scale(&UniPoly::from_i64(2))).degree_map();
        assert_eq!(deg, UniPoly::from_i64(6));
        let only_m2 = YClass::monomial(UniPoly::one(), 2, 0);
        assert_eq!(
            (&only_m2 * &YClass::q().scale(&UniPoly::from_i64(2))).degree_map(),
            UniPoly::from_i64(2)
        );
    }

    #[test]
    fn commutative_and_associative() {
        let a = &YClass::m() + &YClass::q().scale(&UniPoly::from_int_coeffs(&[1, 2]));
        let b = &YClass::one() + &YClass::monomial(UniPoly::from_int_coeffs(&[0, 1]), 1, 1);
        let c = &YClass::m() - &YClass::monomial(UniPoly::one(), 2, 0);
        assert_eq!(&a * &b, &b * &a);
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }
}
