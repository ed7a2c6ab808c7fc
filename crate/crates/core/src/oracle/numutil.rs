//! Shared double-precision helpers for verifying eliminated configurations:
//! raw complex evaluation of exact polynomials, Newton refinement of 2x2
//! systems, and the numeric trailing-subresultant check.

use crate::exact::MultiPoly;
use num_complex::Complex64;
use num_traits::ToPrimitive;

/// Raw complex evaluation (no normalization); the caller guarantees the
/// coefficients fit in doubles.
pub(crate) fn eval_raw(p: &MultiPoly, at: &[(&str, Complex64)]) -> Complex64 {
    let vars = p.vars().to_vec();
    let mut acc = Complex64::ZERO;
    for (exp, c) in p.terms() {
        let mut term = Complex64::new(c.to_f64().unwrap_or(0.0), 0.0);
        for (i, &e) in exp.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let v = at
                .iter()
                .find(|(n, _)| *n == vars[i])
                .map(|(_, v)| *v)
                .expect("assignment covers variables");
            term *= v.powu(e);
        }
        acc += term;
    }
    acc
}

/// |p(at)| relative to the evaluation majorant sum |c_i| prod |v|^e — the
/// backward-stable notion of "this point is a zero of p".
pub(crate) fn eval_scaled_at(p: &MultiPoly, at: &[(&str, Complex64)]) -> f64 {
    let vars = p.vars().to_vec();
    let mut acc = Complex64::ZERO;
    let mut majorant = 0.0f64;
    for (exp, c) in p.terms() {
        let mut term = Complex64::new(c.to_f64().unwrap_or(0.0), 0.0);
        for (i, &e) in exp.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let v = at
                .iter()
                .find(|(n, _)| *n == vars[i])
                .map(|(_, v)| *v)
                .expect("assignment covers variables");
            term *= v.powu(e);
        }
        acc += term;
        majorant += term.norm();
    }
    acc.norm() / majorant.max(f64::MIN_POSITIVE)
}

/// A few complex Newton steps on the 2x2 system (e1, e2) in the named
/// variables, keeping the best iterate by residual so a divergent step
/// never makes the start point worse.
pub(crate) fn newton_refine(
    e1: &MultiPoly,
    e2: &MultiPoly,
    vars: (&str, &str),
    m0: Complex64,
    b0: Complex64,
) -> Option<(Complex64, Complex64)> {
    let (vm, vb) = vars;
    let d1m = e1.derivative(vm);
    let d1b = e1.derivative(vb);
    let d2m = e2.derivative(vm);
    let d2b = e2.derivative(vb);
    let residual = |m: Complex64, b: Complex64| {
        eval_scaled_at(e1, &[(vm, m), (vb, b)]) + eval_scaled_at(e2, &[(vm, m), (vb, b)])
    };
    let mut m = m0;
    let mut b = b0;
    let mut best = (m, b, residual(m, b));
    for _ in 0..6 {
        let at = [(vm, m), (vb, b)];
        let f1 = eval_raw(e1, &at);
        let f2 = eval_raw(e2, &at);
        let j11 = eval_raw(&d1m, &at);
        let j12 = eval_raw(&d1b, &at);
        let j21 = eval_raw(&d2m, &at);
        let j22 = eval_raw(&d2b, &at);
        let det = j11 * j22 - j12 * j21;
        if det.norm() < 1e-300 || !det.is_finite() {
            break;
        }
        let dm = (f1 * j22 - f2 * j12) / det;
        let db = (f2 * j11 - f1 * j21) / det;
        // halve the step while it makes the residual worse
        let mut lambda = 1.0f64;
        let mut improved = false;
        for _ in 0..8 {
            let mt = m - dm * lambda;
            let bt = b - db * lambda;
            if mt.is_finite() && bt.is_finite() {
                let r = residual(mt, bt);
                if r < best.2 {
                    m = mt;
                    b = bt;
                    best = (m, b, r);
                    improved = true;
                    break;
                }
            }
            lambda *= 0.5;
        }
        if !improved {
            break;
        }
        if (dm.norm() + db.norm()) * lambda < 1e-14 * (1.0 + m.norm() + b.norm()) {
            break;
        }
    }
    Some((best.0, best.1))
}

pub(crate) fn normalize(mut v: Vec<Complex64>) -> Vec<Complex64> {
    let max = v.iter().map(|c| c.norm()).fold(0.0f64, f64::max);
    if max > 0.0 {
        for c in v.iter_mut() {
            *c /= max;
        }
    }
    v
}

/// Numeric check that the two trailing principal subresultant coefficients
/// of (q, q') vanish: s0 is the resultant and s1 the next minor; both must
/// be small after normalization. This certifies gcd(q, q') degree >= 2.
pub(crate) fn trailing_subresultants_vanish(q: &[Complex64], tol: f64) -> bool {
    let q = normalize(q.to_vec());
    let dq: Vec<Complex64> = (1..q.len())
        .map(|k| q[k] * Complex64::new(k as f64, 0.0))
        .collect();
    let s0 = complex_det(sylvester_like(&q, &dq, 0));
    let s1 = complex_det(sylvester_like(&q, &dq, 1));
    s0.norm() < tol && s1.norm() < tol
}

/// The matrix whose determinant is the k-th principal subresultant
/// coefficient of (p, q): rows of x^j p and x^j q truncated to the columns
/// of degrees m+n-k-1 down to k.
fn sylvester_like(p: &[Complex64], q: &[Complex64], k: usize) -> Vec<Vec<Complex64>> {
    let m = p.len() - 1;
    let n = q.len() - 1;
    let rows_p = n - k;
    let rows_q = m - k;
    let size = rows_p + rows_q;
    let width = m + n - k;
    let mut mat = vec![vec![Complex64::ZERO; size]; size];
    for row in 0..rows_p {
        for (d, &c) in p.iter().enumerate() {
            let degree = d + rows_p - 1 - row;
            let col = width - 1 - degree;
            if col < size {
                mat[row][col] = c;
            }
        }
    }
    for row in 0..rows_q {
        for (d, &c) in q.iter().enumerate() {
            let degree = d + rows_q - 1 - row;
            let col = width - 1 - degree;
            if col < size {
                mat[rows_p + row][col] = c;
            }
        }
    }
    mat
}

/// Gaussian elimination with partial pivoting.
pub(crate) fn complex_det(mut m: Vec<Vec<Complex64>>) -> Complex64 {
    let n = m.len();
    let mut det = Complex64::new(1.0, 0.0);
    for k in 0..n {
        let pivot = (k..n)
            .max_by(|&i, &j| {
                m[i][k]
                    .norm()
                    .partial_cmp(&m[j][k].norm())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
            .unwrap();
        if m[pivot][k].norm() == 0.0 {
            return Complex64::ZERO;
        }
        if pivot != k {
            m.swap(pivot, k);
            det = -det;
        }
        det *= m[k][k];
        for i in k + 1..n {
            let factor = m[i][k] / m[k][k];
            for j in k..n {
                let sub = factor * m[k][j];
                m[i][j] -= sub;
            }
        }
    }
    det
}
