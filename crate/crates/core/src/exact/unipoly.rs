//! Dense univariate polynomials over the rationals.
//!
//! This is the coefficient ring for every symbolic identity (polynomials in
//! the formal degree symbol `d`) and also the carrier for the exact
//! eliminants the numeric oracle produces before root extraction.

use super::{ExactError, Rat};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A univariate polynomial with exact rational coefficients, stored densely
/// by ascending exponent. The leading coefficient is nonzero unless the
/// polynomial is zero.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        UniPoly::from_coeffs(vec![c])
    }

    pub fn from_i64(n: i64) -> Self {
        UniPoly::constant(Rat::from_integer(n.into()))
    }

    /// The variable itself.
    pub fn var() -> Self {
        UniPoly::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    /// c * x^k.
    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        UniPoly::from_coeffs(coeffs)
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| Rat::from_integer(c.into())).collect())
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of x^k (zero beyond the stored range).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_i64(&self, x: i64) -> Rat {
        self.eval(&Rat::from_integer(x.into()))
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rat::from_integer(k.into()))
            .collect();
        UniPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &Rat) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> UniPoly {
        let mut base = self.clone();
        let mut acc = UniPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Quotient and remainder over Q; panics only if `div` is zero.
    pub fn divrem(&self, div: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!div.is_zero(), "division by the zero polynomial");
        let dd = div.degree().unwrap();
        let lead = div.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let q = rem.leading().unwrap() / &lead;
            let shift = rd - dd;
            quot[shift] = q.clone();
            for (i, c) in div.coeffs.iter().enumerate() {
                let t = &rem.coeffs[shift + i] - &(c * &q);
                rem.coeffs[shift + i] = t;
            }
            rem.trim();
        }
        (UniPoly::from_coeffs(quot), rem)
    }

    /// Exact division; `Err` if the remainder is nonzero.
    pub fn exact_div(&self, div: &UniPoly) -> Result<UniPoly, ExactError> {
        let (q, r) = self.divrem(div);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(ExactError::Indivisible)
        }
    }

    /// Primitive gcd with positive leading coefficient (1 for coprime inputs).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() {
            return other.primitive_abs();
        }
        if other.is_zero() {
            return self.primitive_abs();
        }
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.clone(), other.clone())
        } else {
            (other.clone(), self.clone())
        };
        // wide degree gaps would make the pseudo-remainder scaling blow up;
        // one rational reduction step closes the gap first
        while !b.is_zero() && a.degree().unwrap() - b.degree().unwrap() > 8 {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        if b.is_zero() {
            return a.primitive_abs();
        }
        let g = int_gcd(&a.to_int_primitive(), &b.to_int_primitive());
        UniPoly::from_coeffs(g.into_iter().map(Rat::from_integer).collect())
    }

    /// Removes every factor shared with `other`: divides by gcd(self, other)
    /// repeatedly until coprime. Exact; used to strip known spurious factors
    /// from eliminants.
    pub fn remove_common_factors(&self, other: &UniPoly) -> UniPoly {
        let mut p = self.clone();
        loop {
            let g = p.gcd(other);
            if g.degree().unwrap_or(0) == 0 {
                return p;
            }
            p = p.exact_div(&g).expect("gcd divides");
        }
    }

    fn primitive_abs(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let v = self.to_int_primitive();
        UniPoly::from_coeffs(v.into_iter().map(Rat::from_integer).collect())
    }

    /// Clears denominators and integer content; leading coefficient positive.
    fn to_int_primitive(&self) -> Vec<BigInt> {
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = num_integer::lcm(den, c.denom().clone());
        }
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for c in &ints {
            content = num_integer::gcd(content, c.clone());
        }
        if content.is_zero() {
            return ints;
        }
        if ints.last().map(|c| c.is_negative()).unwrap_or(false) {
            content = -content;
        }
        for c in &mut ints {
            *c = &*c / &content;
        }
        ints
    }

    /// Integer coefficients after clearing the common denominator (no content
    /// removal), together with that denominator.
    pub fn clear_denominators(&self) -> (Vec<BigInt>, BigInt) {
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = num_integer::lcm(den, c.denom().clone());
        }
        let ints = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        (ints, den)
    }

    /// Squarefree part (product of distinct irreducible factors), primitive
    /// with positive leading coefficient.
    pub fn squarefree_part(&self) -> UniPoly {
        if self.degree().unwrap_or(0) == 0 {
            return UniPoly::one();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.primitive_abs();
        }
        self.primitive_abs().exact_div(&g).expect("gcd divides")
    }

    /// Yun's squarefree decomposition: returns `(factor, multiplicity)` pairs
    /// with the factors squarefree, pairwise coprime, multiplicities
    /// ascending; the product of factor^multiplicity equals the primitive
    /// part of the input.
    pub fn squarefree_decomposition(&self) -> Vec<(UniPoly, u32)> {
        let p = self.primitive_abs();
        let Some(deg) = p.degree() else {
            return Vec::new();
        };
        if deg == 0 {
            return Vec::new();
        }
        let dp = p.derivative();
        let mut out = Vec::new();
        let a = p.gcd(&dp);
        let mut b = p.exact_div(&a).expect("gcd divides");
        let mut c = dp.exact_div(&a).expect("gcd divides");
        let mut i = 1u32;
        loop {
            let d = &c - &b.derivative();
            if d.is_zero() {
                if b.degree().unwrap_or(0) > 0 {
                    out.push((b, i));
                }
                break;
            }
            let f = b.gcd(&d);
            if f.degree().unwrap_or(0) > 0 {
                out.push((f.clone(), i));
            }
            b = b.exact_div(&f).expect("gcd divides");
            c = d.exact_div(&f).expect("gcd divides");
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            i += 1;
        }
        out
    }

    /// Substitutes another polynomial for the variable.
    pub fn compose(&self, inner: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &UniPoly::constant(c.clone());
        }
        acc
    }

    /// Newton interpolation through distinct nodes.
    pub fn interpolate(points: &[(Rat, Rat)]) -> UniPoly {
        let n = points.len();
        let mut coef: Vec<Rat> = points.iter().map(|(_, y)| y.clone()).collect();
        for j in 1..n {
            for i in (j..n).rev() {
                let num = &coef[i] - &coef[i - 1];
                let den = &points[i].0 - &points[i - j].0;
                coef[i] = num / den;
            }
        }
        let mut acc = UniPoly::zero();
        for i in (0..n).rev() {
            let lin = UniPoly::from_coeffs(vec![-points[i].0.clone(), Rat::one()]);
            acc = if i == n - 1 {
                UniPoly::constant(coef[i].clone())
            } else {
                &(&acc * &lin) + &UniPoly::constant(coef[i].clone())
            };
        }
        acc
    }

    /// True when the value at every integer in `lo..=hi` is an integer.
    pub fn integer_valued_on(&self, lo: i64, hi: i64) -> bool {
        (lo..=hi).all(|k| self.eval_i64(k).is_integer())
    }

    /// Renders with the given variable symbol, descending powers.
    pub fn display(&self, sym: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let show_coeff = k == 0 || !abs.is_one();
            if show_coeff {
                out.push_str(&format_rat(&abs));
            }
            if k > 0 {
                if show_coeff {
                    out.push('*');
                }
                out.push_str(sym);
                if k > 1 {
                    out.push_str(&format!("^{k}"));
                }
            }
        }
        out
    }
}

pub(crate) fn format_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display("x"))
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display("x"))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = &coeffs[i + j] + &(a * b);
                coeffs[i + j] = t;
            }
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Subresultant-PRS gcd for primitive integer polynomials; returns the
/// primitive gcd with positive leading coefficient.
fn int_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (mut f, mut g) = if a.len() >= b.len() {
        (a.to_vec(), b.to_vec())
    } else {
        (b.to_vec(), a.to_vec())
    };
    if g.is_empty() {
        return f;
    }
    let mut h = BigInt::one();
    let mut s = BigInt::one();
    loop {
        let delta = (f.len() - 1) - (g.len() - 1);
        let r = int_pseudo_rem(&f, &g);
        if r.is_empty() {
            return int_primitive(&g);
        }
        if r.len() == 1 {
            return vec![BigInt::one()];
        }
        let div = &s * pow_bigint(&h, delta as u32);
        f = g;
        g = r.into_iter().map(|c| &c / &div).collect();
        s = f.last().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            // h = s^delta / h^(delta-1), exact by the subresultant theory
            let num = pow_bigint(&s, delta as u32);
            let den = pow_bigint(&h, (delta - 1) as u32);
            &num / &den
        };
    }
}

fn int_primitive(v: &[BigInt]) -> Vec<BigInt> {
    let mut content = BigInt::zero();
    for c in v {
        content = num_integer::gcd(content, c.clone());
    }
    if content.is_zero() {
        return v.to_vec();
    }
    if v.last().map(|c| c.is_negative()).unwrap_or(false) {
        content = -content;
    }
    v.iter().map(|c| c / &content).collect()
}

fn pow_bigint(b: &BigInt, e: u32) -> BigInt {
    let mut acc = BigInt::one();
    for _ in 0..e {
        acc *= b;
    }
    acc
}

/// prem(f, g) = lc(g)^(deg f - deg g + 1) * f mod g, for integer coefficient
/// vectors (ascending, trimmed, g nonzero with deg g <= deg f).
fn int_pseudo_rem(f: &[BigInt], g: &[BigInt]) -> Vec<BigInt> {
    let dg = g.len() - 1;
    let lg = g.last().unwrap();
    let mut r = f.to_vec();
    let mut steps = f.len() - g.len() + 1;
    while r.len() >= g.len() && !r.is_empty() {
        let lr = r.last().unwrap().clone();
        let shift = (r.len() - 1) - dg;
        for c in r.iter_mut() {
            *c = &*c * lg;
        }
        for (i, gc) in g.iter().enumerate() {
            let t = &r[shift + i] - gc * &lr;
            r[shift + i] = t;
        }
        while matches!(r.last(), Some(c) if c.is_zero()) {
            r.pop();
        }
        steps -= 1;
        if steps == 0 {
            break;
        }
    }
    for _ in 0..steps {
        for c in r.iter_mut() {
            *c = &*c * lg;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_i64;

    fn p(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_int_coeffs(coeffs)
    }

    #[test]
    fn eval_factored_hyperflex_at_4() {
        // 6(d-3)(3d-2) expanded = 18d^2 - 66d + 36
        let q = p(&[36, -66, 18]);
        assert_eq!(q.eval_i64(4), rat_i64(60));
    }

    #[test]
    fn eval_zero_poly() {
        assert_eq!(UniPoly::zero().eval_i64(17), rat_i64(0));
    }

    #[test]
    fn eval_bitangent_line_closed_form_at_5() {
        // 2d(d-2)(d-3) = 2d^3 - 10d^2 + 12d
        let q = p(&[0, 12, -10, 2]);
        assert_eq!(q.eval_i64(5), rat_i64(60));
    }

    #[test]
    fn divrem_roundtrip() {
        let a = p(&[2, 0, -3, 1, 4]);
        let b = p(&[1, 2, 1]);
        let (q, r) = a.divrem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree().unwrap() < b.degree().unwrap());
    }

    #[test]
    fn gcd_of_known_product() {
        let f = &p(&[-1, 1]) * &p(&[-2, 1]); // (x-1)(x-2)
        let g = &p(&[-1, 1]) * &p(&[3, 1]); // (x-1)(x+3)
        assert_eq!(f.gcd(&g), p(&[-1, 1]));
    }

    #[test]
    fn squarefree_decomposition_of_double_double() {
        // (x-1)^2 (x-2)^2
        let f = &p(&[-1, 1]).pow(2) * &p(&[-2, 1]).pow(2);
        let dec = f.squarefree_decomposition();
        assert_eq!(dec.len(), 1);
        assert_eq!(dec[0].1, 2);
        assert_eq!(dec[0].0, &p(&[-1, 1]) * &p(&[-2, 1]));
    }

    #[test]
    fn interpolate_recovers_cubic() {
        let f = p(&[1, -4, 0, 2]);
        let pts: Vec<_> = (0..6).map(|k| (rat_i64(k), f.eval_i64(k))).collect();
        assert_eq!(UniPoly::interpolate(&pts), f);
    }

    #[test]
    fn display_descending() {
        let f = p(&[-144, 300, -102, -3, 3]);
        assert_eq!(f.display("d"), "3*d^4 - 3*d^3 - 102*d^2 + 300*d - 144");
    }
}
