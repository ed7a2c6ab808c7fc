//! Resultants, discriminants, and subresultant polynomial remainder
//! sequences, generic over an exact coefficient ring.
//!
//! Two independent routes are provided: the fraction-free subresultant PRS
//! (default) and Sylvester-determinant expansion by fraction-free Gaussian
//! elimination (cross-checking slow path). The principal subresultant
//! coefficients come from the classical Sylvester minors, so the gcd-degree
//! criterion (gcd degree >= k iff s_0 = ... = s_{k-1} = 0) holds verbatim.

use super::matrix::det_bareiss;
use super::{ExactError, MultiPoly, Rat};
use num_traits::{One, Zero};

/// Exact coefficient ring operations needed by the PRS and determinants.
pub trait Coeff: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Exact division; panics only on a genuine non-divisibility bug.
    fn exact_div(&self, other: &Self) -> Self;
}

impl Coeff for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, other: &Self) -> Self {
        self / other
    }
}

impl Coeff for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn one() -> Self {
        MultiPoly::one()
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, other: &Self) -> Self {
        MultiPoly::exact_div(self, other).expect("subresultant division is exact")
    }
}

fn trim<C: Coeff>(v: &mut Vec<C>) {
    while matches!(v.last(), Some(c) if c.is_zero()) {
        v.pop();
    }
}

fn coeff_pow<C: Coeff>(base: &C, e: usize) -> C {
    let mut acc = C::one();
    for _ in 0..e {
        acc = acc.mul(base);
    }
    acc
}

/// prem(f, g): lc(g)^(deg f - deg g + 1) * f mod g. Ascending, trimmed
/// coefficient vectors; requires deg f >= deg g >= 0, g nonzero.
fn pseudo_rem<C: Coeff>(f: &[C], g: &[C]) -> Vec<C> {
    let lg = g.last().expect("g nonzero");
    let dg = g.len() - 1;
    let mut r = f.to_vec();
    let mut remaining = f.len() - g.len() + 1;
    while r.len() >= g.len() && !r.is_empty() {
        let lr = r.last().unwrap().clone();
        let shift = (r.len() - 1) - dg;
        for c in r.iter_mut() {
            *c = c.mul(lg);
        }
        for (i, gc) in g.iter().enumerate() {
            r[shift + i] = r[shift + i].sub(&gc.mul(&lr));
        }
        trim(&mut r);
        remaining -= 1;
        if remaining == 0 {
            break;
        }
    }
    for _ in 0..remaining {
        for c in r.iter_mut() {
            *c = c.mul(lg);
        }
    }
    r
}

/// The subresultant polynomial remainder sequence of `p`, `q` in `var`,
/// starting with the inputs themselves. Requires deg_var(p) >= deg_var(q) >= 1.
pub fn subresultant_prs(
    p: &MultiPoly,
    q: &MultiPoly,
    var: &str,
) -> Result<Vec<MultiPoly>, ExactError> {
    let dp = p.degree_in(var);
    let dq = q.degree_in(var);
    if dq < 1 || dp < dq {
        return Err(ExactError::Invalid(format!(
            "subresultant PRS needs deg_{var}(p) >= deg_{var}(q) >= 1 (got {dp}, {dq})"
        )));
    }
    let a = p.as_univariate_in(var);
    let b = q.as_univariate_in(var);
    let seq = prs_sequence(&a, &b);
    Ok(seq
        .into_iter()
        .map(|cs| MultiPoly::from_univariate_in(var, &cs))
        .collect())
}

/// Fraction-free subresultant PRS over an exact ring; returns the whole
/// sequence beginning with the inputs. The divisor at each step is
/// g * h^delta in the classical bookkeeping, so coefficient growth stays
/// polynomial and every division is exact.
fn prs_sequence<C: Coeff>(p: &[C], q: &[C]) -> Vec<Vec<C>> {
    let mut seq = vec![p.to_vec(), q.to_vec()];
    let mut a = p.to_vec();
    let mut b = q.to_vec();
    let mut g = C::one();
    let mut h = C::one();
    loop {
        let delta = (a.len() - 1) - (b.len() - 1);
        let r = pseudo_rem(&a, &b);
        if r.is_empty() {
            break;
        }
        let div = g.mul(&coeff_pow(&h, delta));
        let next: Vec<C> = r.iter().map(|c| c.exact_div(&div)).collect();
        a = b;
        g = a.last().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            coeff_pow(&g, delta).exact_div(&coeff_pow(&h, delta - 1))
        };
        b = next;
        seq.push(b.clone());
        if b.len() <= 1 {
            break;
        }
    }
    seq
}

/// Sylvester matrix of `p`, `q` with respect to `var`: (m+n) x (m+n) with
/// m = deg(q) rows of p-coefficients and n = deg(p) rows of q-coefficients,
/// descending powers left to right.
pub fn sylvester_matrix(p: &MultiPoly, q: &MultiPoly, var: &str) -> Vec<Vec<MultiPoly>> {
    let a = p.as_univariate_in(var);
    let b = q.as_univariate_in(var);
    sylvester_from_coeffs(&a, &b)
}

fn sylvester_from_coeffs<C: Coeff>(a: &[C], b: &[C]) -> Vec<Vec<C>> {
    let m = a.len() - 1;
    let n = b.len() - 1;
    let size = m + n;
    let mut mat = vec![vec![C::zero(); size]; size];
    for row in 0..n {
        for (k, c) in a.iter().rev().enumerate() {
            mat[row][row + k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in b.iter().rev().enumerate() {
            mat[n + row][row + k] = c.clone();
        }
    }
    mat
}

/// Sylvester resultant by fraction-free determinant expansion (slow path).
pub fn resultant_sylvester(
    p: &MultiPoly,
    q: &MultiPoly,
    var: &str,
) -> Result<MultiPoly, ExactError> {
    check_degrees(p, q, var)?;
    Ok(det_bareiss(sylvester_matrix(p, q, var)))
}

fn check_degrees(p: &MultiPoly, q: &MultiPoly, var: &str) -> Result<(), ExactError> {
    if p.degree_in(var) == 0 || q.degree_in(var) == 0 {
        return Err(ExactError::DegreeZero);
    }
    Ok(())
}

/// The Sylvester resultant of `p` and `q` with respect to `var`, computed by
/// the fraction-free subresultant PRS (default route).
pub fn resultant(p: &MultiPoly, q: &MultiPoly, var: &str) -> Result<MultiPoly, ExactError> {
    check_degrees(p, q, var)?;
    let a = p.as_univariate_in(var);
    let b = q.as_univariate_in(var);
    Ok(resultant_coeffs(&a, &b))
}

/// Resultant over an exact ring from ascending coefficient vectors, via the
/// fraction-free subresultant recurrence with classical sign bookkeeping
/// (swap sign for odd-degree swaps; flip when both current degrees are odd).
fn resultant_coeffs<C: Coeff>(a: &[C], b: &[C]) -> C {
    let (mut f, mut q, swap_sign) = if a.len() >= b.len() {
        (a.to_vec(), b.to_vec(), false)
    } else {
        (
            b.to_vec(),
            a.to_vec(),
            (a.len() - 1) % 2 == 1 && (b.len() - 1) % 2 == 1,
        )
    };
    let mut s = if swap_sign { C::one().neg() } else { C::one() };
    if q.len() == 1 {
        return s.mul(&coeff_pow(&q[0], f.len() - 1));
    }
    let mut g = C::one();
    let mut h = C::one();
    loop {
        let df = f.len() - 1;
        let dq = q.len() - 1;
        let delta = df - dq;
        if df % 2 == 1 && dq % 2 == 1 {
            s = s.neg();
        }
        let r = pseudo_rem(&f, &q);
        if r.is_empty() {
            return C::zero();
        }
        let div = g.mul(&coeff_pow(&h, delta));
        let next: Vec<C> = r.iter().map(|c| c.exact_div(&div)).collect();
        f = q;
        g = f.last().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            coeff_pow(&g, delta).exact_div(&coeff_pow(&h, delta - 1))
        };
        q = next;
        if q.len() == 1 {
            // res = s * lc(q)^(deg f) / h^(deg f - 1)
            let df2 = f.len() - 1;
            let num = coeff_pow(&q[0], df2);
            return s.mul(&num.exact_div(&coeff_pow(&h, df2 - 1)));
        }
    }
}

/// Principal subresultant coefficients s_0, ..., s_{n-1} of (p, q) in `var`,
/// where n = deg_var(q): s_k is the determinant of the Sylvester submatrix
/// on the rows of x^(n-k-1) p, ..., p, x^(m-k-1) q, ..., q and the columns of
/// degrees m+n-k-1 down to k. gcd degree >= k iff s_0 = ... = s_{k-1} = 0.
pub fn principal_subresultants(
    p: &MultiPoly,
    q: &MultiPoly,
    var: &str,
) -> Result<Vec<MultiPoly>, ExactError> {
    let m = p.degree_in(var) as usize;
    let n = q.degree_in(var) as usize;
    if n < 1 || m < n {
        return Err(ExactError::Invalid(format!(
            "principal subresultants need deg(p) >= deg(q) >= 1 (got {m}, {n})"
        )));
    }
    let a = p.as_univariate_in(var);
    let b = q.as_univariate_in(var);
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let rows_p = n - k;
        let rows_q = m - k;
        let size = rows_p + rows_q;
        let width = m + n - k; // columns: degrees m+n-k-1 down to 0
        let mut mat = vec![vec![MultiPoly::zero(); size]; size];
        for row in 0..rows_p {
            for (d, c) in a.iter().enumerate() {
                let degree = d + rows_p - 1 - row;
                let col = width - 1 - degree;
                if col < size {
                    mat[row][col] = c.clone();
                }
            }
        }
        for row in 0..rows_q {
            for (d, c) in b.iter().enumerate() {
                let degree = d + rows_q - 1 - row;
                let col = width - 1 - degree;
                if col < size {
                    mat[rows_p + row][col] = c.clone();
                }
            }
        }
        out.push(det_bareiss(mat));
    }
    Ok(out)
}

impl Coeff for super::UniPoly {
    fn zero() -> Self {
        super::UniPoly::zero()
    }
    fn one() -> Self {
        super::UniPoly::one()
    }
    fn is_zero(&self) -> bool {
        super::UniPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, other: &Self) -> Self {
        super::UniPoly::exact_div(self, other).expect("subresultant division is exact")
    }
}

/// Resultant of two bivariate polynomials with respect to `var`, returned
/// as a dense univariate polynomial in `keep`: the fixed-shape Sylvester
/// determinant is evaluated at integer nodes (in parallel, by integer
/// Bareiss elimination) and reassembled by exact interpolation. The result
/// is identical to the PRS route; this one stays fast when the eliminant
/// degree runs into the hundreds.
pub fn resultant_bivariate(
    p: &MultiPoly,
    q: &MultiPoly,
    var: &str,
    keep: &str,
) -> Result<super::UniPoly, ExactError> {
    check_degrees(p, q, var)?;
    let to_uni = |f: &MultiPoly| -> Result<Vec<super::UniPoly>, ExactError> {
        f.as_univariate_in(var)
            .iter()
            .map(|c| {
                c.to_unipoly().ok_or_else(|| {
                    ExactError::Invalid(format!(
                        "coefficient involves variables besides {keep}"
                    ))
                })
            })
            .collect()
    };
    let a = to_uni(p)?;
    let b = to_uni(q)?;
    let mat = sylvester_from_coeffs(&a, &b);
    // Bezout bound on the eliminant degree, with a consistency check at
    // extra nodes in case the inputs exceed it (defensively falling back to
    // the row-sum bound)
    let d1 = p.total_degree().unwrap_or(0) as usize;
    let d2 = q.total_degree().unwrap_or(0) as usize;
    let bezout = d1 * d2;
    let row_sum = (b.len() - 1) * a.iter().map(|c| c.degree().unwrap_or(0)).max().unwrap_or(0)
        + (a.len() - 1) * b.iter().map(|c| c.degree().unwrap_or(0)).max().unwrap_or(0);
    let bound = bezout.min(row_sum);
    let res = super::matrix::det_unipoly_interpolated(&mat, None, bound);
    // verify at a node beyond the interpolation range
    let check = Rat::from_integer(((bound + 1) as i64).into());
    let direct = super::matrix::det_rational(
        mat.iter()
            .map(|row| row.iter().map(|e| e.eval(&check)).collect())
            .collect(),
    );
    if res.eval(&check) != direct {
        if bound == row_sum {
            return Err(ExactError::Invalid(
                "interpolated resultant failed its consistency check".into(),
            ));
        }
        let res = super::matrix::det_unipoly_interpolated(&mat, None, row_sum);
        return Ok(res);
    }
    Ok(res)
}

/// Discriminant with the classical sign:
/// (-1)^(n(n-1)/2) Res(p, p') / lc(p).
pub fn discriminant(p: &MultiPoly, var: &str) -> Result<MultiPoly, ExactError> {
    let n = p.degree_in(var);
    if n < 2 {
        return Err(ExactError::Invalid(format!(
            "discriminant needs degree >= 2 in {var}"
        )));
    }
    let lead = p.as_univariate_in(var).pop().expect("nonzero degree");
    if lead.is_zero() {
        return Err(ExactError::DegenerateLeading(format!(
            "leading coefficient in {var} is zero"
        )));
    }
    let res = resultant(p, &p.derivative(var), var)?;
    let q = res.exact_div(&lead)?;
    Ok(if (n as u64) * ((n as u64) - 1) / 2 % 2 == 1 {
        -&q
    } else {
        q
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_i64;

    fn x() -> MultiPoly {
        MultiPoly::var("x")
    }

    fn c(n: i64) -> MultiPoly {
        MultiPoly::from_i64(n)
    }

    #[test]
    fn resultant_linear_case() {
        // Res_x(x - a, x - b) = a - b
        let a = MultiPoly::var("a");
        let b = MultiPoly::var("b");
        let p = &x() - &a;
        let q = &x() - &b;
        assert_eq!(resultant(&p, &q, "x").unwrap(), &a - &b);
        assert_eq!(resultant_sylvester(&p, &q, "x").unwrap(), &a - &b);
    }

    #[test]
    fn resultant_quadratic_example() {
        // Res_x(x^2 - 1, x - 2) = 3
        let p = &x().pow(2) - &c(1);
        let q = &x() - &c(2);
        assert_eq!(resultant(&p, &q, "x").unwrap(), c(3));
        assert_eq!(resultant_sylvester(&p, &q, "x").unwrap(), c(3));
    }

    #[test]
    fn resultant_common_factor_vanishes() {
        let p = &(&x().pow(2) + &x()) + &c(1);
        assert!(resultant(&p, &p, "x").unwrap().is_zero());
    }

    #[test]
    fn resultant_rejects_degree_zero() {
        assert!(resultant(&c(2), &x(), "x").is_err());
    }

    #[test]
    fn discriminant_of_quadratic() {
        // x^2 + b x + c -> b^2 - 4c
        let b = MultiPoly::var("b");
        let cc = MultiPoly::var("c");
        let p = &(&x().pow(2) + &(&b * &x())) + &cc;
        let disc = discriminant(&p, "x").unwrap();
        assert_eq!(disc, &b.pow(2) - &cc.scale(&rat_i64(4)));
    }

    #[test]
    fn discriminant_of_double_root() {
        let r = MultiPoly::var("r");
        let p = (&x() - &r).pow(2);
        assert!(discriminant(&p, "x").unwrap().is_zero());
    }

    #[test]
    fn psc_pattern_for_double_double() {
        // p = (x-1)^2 (x-2)^2, q = p': s0 = s1 = 0, s2 != 0 (gcd degree 2)
        let p = &(&x() - &c(1)).pow(2) * &(&x() - &c(2)).pow(2);
        let q = p.derivative("x");
        let s = principal_subresultants(&p, &q, "x").unwrap();
        assert!(s[0].is_zero());
        assert!(s[1].is_zero());
        assert!(!s[2].is_zero());
    }

    #[test]
    fn psc_coprime_matches_resultant() {
        let p = &x().pow(3) + &c(2);
        let q = &x().pow(2) - &c(5);
        let s = principal_subresultants(&p, &q, "x").unwrap();
        assert_eq!(s[0], resultant(&p, &q, "x").unwrap());
        assert!(!s[0].is_zero());
    }

    #[test]
    fn prs_terminates_on_identical_inputs() {
        let p = &x().pow(3) + &(&x() + &c(1));
        let seq = subresultant_prs(&p, &p, "x").unwrap();
        // pseudo-remainder of p by p is zero, so nothing follows the inputs
        assert_eq!(seq.len(), 2);
    }

    #[test]
    fn resultant_matches_sylvester_on_randoms() {
        // deterministic pseudo-random small cases over two variables
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % 7) as i64 - 3
        };
        for _ in 0..60 {
            let a = MultiPoly::var("a");
            let dp = 1 + (next().unsigned_abs() as usize % 3);
            let dq = 1 + (next().unsigned_abs() as usize % 3);
            let build = |deg: usize, next: &mut dyn FnMut() -> i64| {
                let mut p = MultiPoly::zero();
                for k in 0..=deg {
                    let co = &c(next()) + &a.scale(&rat_i64(next()));
                    p = &p + &(&co * &x().pow(k as u32));
                }
                p
            };
            let mut p = build(dp, &mut next);
            let mut q = build(dq, &mut next);
            if p.degree_in("x") == 0 || q.degree_in("x") == 0 {
                p = &p + &x().pow(dp as u32);
                q = &q + &x().pow(dq as u32);
            }
            let r1 = resultant(&p, &q, "x").unwrap();
            let r2 = resultant_sylvester(&p, &q, "x").unwrap();
            assert_eq!(r1, r2, "PRS vs Sylvester mismatch for p={p}, q={q}");
        }
    }

    #[test]
    fn resultant_multiplicative_in_first_argument() {
        let p = &x().pow(2) + &c(3);
        let q = &(&x() - &c(4)) * &(&x() + &c(1));
        let r = &x().pow(2) + &(&x() + &c(2));
        let lhs = resultant(&(&p * &q), &r, "x").unwrap();
        let rhs = &resultant(&p, &r, "x").unwrap() * &resultant(&q, &r, "x").unwrap();
        assert_eq!(lhs, rhs);
    }
}
