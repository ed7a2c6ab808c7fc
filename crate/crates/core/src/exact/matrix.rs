//! Fraction-free determinants and exact interpolation.

use super::prs::Coeff;
use super::{Rat, UniPoly};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Determinant by the Bareiss fraction-free elimination over any exact ring;
/// pivots are the first nonzero entries, row swaps flip the sign.
pub fn det_bareiss<C: Coeff>(mut m: Vec<Vec<C>>) -> C {
    let n = m.len();
    if n == 0 {
        return C::one();
    }
    debug_assert!(m.iter().all(|row| row.len() == n));
    let mut sign_flip = false;
    let mut prev = C::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return C::zero();
            };
            m.swap(k, swap);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.exact_div(&prev);
            }
            m[i][k] = C::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_flip {
        det.neg()
    } else {
        det
    }
}

/// Bareiss determinant specialized to integer matrices.
pub fn det_bareiss_int(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Determinant of a rational matrix: per-row denominator clearing followed
/// by integer Bareiss elimination.
pub fn det_rational(rows: Vec<Vec<Rat>>) -> Rat {
    if rows.is_empty() {
        return <Rat as One>::one();
    }
    let mut scale = <Rat as One>::one();
    let mut mat: Vec<Vec<BigInt>> = Vec::with_capacity(rows.len());
    for row in rows {
        let mut den = BigInt::one();
        for v in &row {
            den = num_integer::lcm(den, v.denom().clone());
        }
        scale *= Rat::new(BigInt::one(), den.clone());
        mat.push(row.iter().map(|v| v.numer() * (&den / v.denom())).collect());
    }
    Rat::from_integer(det_bareiss_int(mat)) * scale
}

/// Determinant of a matrix of exact univariate polynomials, by evaluation
/// at integer nodes and Newton interpolation; `take` selects a principal
/// minor and `degree_bound` bounds the result degree. Node evaluations run
/// in parallel.
pub fn det_unipoly_interpolated(
    entries: &[Vec<UniPoly>],
    take: Option<&[usize]>,
    degree_bound: usize,
) -> UniPoly {
    use rayon::prelude::*;
    let idx: Vec<usize> = match take {
        Some(sel) => sel.to_vec(),
        None => (0..entries.len()).collect(),
    };
    if idx.is_empty() {
        return UniPoly::one();
    }
    let nodes: Vec<i64> = (0..=degree_bound as i64).collect();
    let values: Vec<Rat> = nodes
        .par_iter()
        .map(|&node| {
            let x = Rat::from_integer(node.into());
            let rows: Vec<Vec<Rat>> = idx
                .iter()
                .map(|&ri| idx.iter().map(|&ci| entries[ri][ci].eval(&x)).collect())
                .collect();
            det_rational(rows)
        })
        .collect();
    interpolate(&nodes, &values)
}

/// Determinant of a 3x3 matrix of multivariate polynomials.
pub fn det3(m: &[Vec<super::MultiPoly>]) -> super::MultiPoly {
    let a = &m[0][0] * &(&(&m[1][1] * &m[2][2]) - &(&m[1][2] * &m[2][1]));
    let b = &m[0][1] * &(&(&m[1][0] * &m[2][2]) - &(&m[1][2] * &m[2][0]));
    let c = &m[0][2] * &(&(&m[1][0] * &m[2][1]) - &(&m[1][1] * &m[2][0]));
    &(&a - &b) + &c
}

/// Exact polynomial through `(node, value)` pairs at distinct integer nodes.
pub fn interpolate(nodes: &[i64], values: &[Rat]) -> UniPoly {
    assert_eq!(nodes.len(), values.len());
    let pts: Vec<(Rat, Rat)> = nodes
        .iter()
        .zip(values.iter())
        .map(|(&x, y)| (Rat::from_integer(x.into()), y.clone()))
        .collect();
    UniPoly::interpolate(&pts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_i64;

    #[test]
    fn int_determinant_matches_cofactor() {
        let m: Vec<Vec<BigInt>> = vec![
            vec![2.into(), 3.into(), 1.into()],
            vec![0.into(), 5.into(), (-2).into()],
            vec![7.into(), 1.into(), 4.into()],
        ];
        // cofactor expansion: 2*(20-(-2)) - 3*(0+14) + 1*(0-35) = 44 - 42 - 35
        assert_eq!(det_bareiss_int(m), BigInt::from(-33));
    }

    #[test]
    fn rational_determinant_with_pivoting() {
        let m: Vec<Vec<Rat>> = vec![
            vec![rat_i64(0), rat_i64(2)],
            vec![rat_i64(3), rat_i64(1)],
        ];
        assert_eq!(det_bareiss(m), rat_i64(-6));
    }

    #[test]
    fn singular_matrix_gives_zero() {
        let m: Vec<Vec<Rat>> = vec![
            vec![rat_i64(1), rat_i64(2)],
            vec![rat_i64(2), rat_i64(4)],
        ];
        assert!(num_traits::Zero::is_zero(&det_bareiss(m)));
    }
}
