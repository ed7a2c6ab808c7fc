//! Macaulay resultant of three ternary forms.
//!
//! The classical construction: with forms F1, F2, F3 of degrees d1, d2, d3
//! in (x, y, z), build the square matrix whose rows, indexed by the
//! monomials of degree nu = d1+d2+d3-2, hold the coefficients of
//! (mu / x_i^{d_i}) * F_i (with i the first index whose power divides mu).
//! Then det M = Res * det M', where M' is the minor on the monomials
//! divisible by at least two of the x_i^{d_i}. The resultant vanishes
//! exactly when the three forms share a projective zero.
//!
//! Coefficients may carry one extra parameter; determinants are produced by
//! integer Bareiss elimination at interpolation nodes and reassembled
//! exactly, so the result is an exact polynomial in the parameter with no
//! extraneous factor. Iterated Sylvester resultants would not give that.

use super::matrix::det_unipoly_interpolated;
use super::{ExactError, MultiPoly, Rat, UniPoly};
use num_traits::Zero;

/// Exact Macaulay resultant of three forms homogeneous in `xyz`, whose
/// coefficients may involve the single variable `param` (pass `None` for
/// plain rational coefficients; the result is then a constant polynomial).
///
/// Sparse specializations can make the Macaulay minor vanish identically;
/// unimodular coordinate changes leave the resultant unchanged (the
/// covariance factor det(T)^(d1 d2 d3) is 1), so a fixed list of shears is
/// tried before giving up.
pub fn ternary_resultant(
    forms: [&MultiPoly; 3],
    xyz: [&str; 3],
    param: Option<&str>,
) -> Result<UniPoly, ExactError> {
    const SHEARS: [[[i64; 3]; 3]; 4] = [
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        [[1, 1, 0], [0, 1, 1], [0, 0, 1]],
        [[1, 0, 0], [1, 1, 0], [0, 1, 1]],
        [[2, 1, 0], [1, 1, 0], [1, 1, 1]],
    ];
    let mut last = None;
    for shear in &SHEARS {
        let det = shear[0][0] * (shear[1][1] * shear[2][2] - shear[1][2] * shear[2][1])
            - shear[0][1] * (shear[1][0] * shear[2][2] - shear[1][2] * shear[2][0])
            + shear[0][2] * (shear[1][0] * shear[2][1] - shear[1][1] * shear[2][0]);
        debug_assert_eq!(det, 1);
        let sheared: Vec<MultiPoly> = forms
            .iter()
            .map(|f| apply_unimodular(f, xyz, shear))
            .collect();
        match ternary_resultant_raw([&sheared[0], &sheared[1], &sheared[2]], xyz, param) {
            Ok(r) => return Ok(r),
            Err(e @ ExactError::DegenerateLeading(_)) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.unwrap_or_else(|| ExactError::Invalid("Macaulay resultant failed".into())))
}

fn apply_unimodular(f: &MultiPoly, xyz: [&str; 3], t: &[[i64; 3]; 3]) -> MultiPoly {
    let subs: Vec<MultiPoly> = (0..3)
        .map(|i| {
            let mut s = MultiPoly::zero();
            for (j, name) in xyz.iter().enumerate() {
                s = &s + &MultiPoly::var(name).scale(&Rat::from_integer(t[i][j].into()));
            }
            s
        })
        .collect();
    // substitute through fresh names to avoid capture
    let tmp = ["__u0", "__u1", "__u2"];
    let mut out = f.clone();
    for (v, tv) in xyz.iter().zip(tmp.iter()) {
        out = out.substitute(v, &MultiPoly::var(tv));
    }
    for (tv, s) in tmp.iter().zip(subs.iter()) {
        out = out.substitute(tv, s);
    }
    out
}

fn ternary_resultant_raw(
    forms: [&MultiPoly; 3],
    xyz: [&str; 3],
    param: Option<&str>,
) -> Result<UniPoly, ExactError> {
    let mut degrees = [0u32; 3];
    for (k, f) in forms.iter().enumerate() {
        degrees[k] = xyz_degree(f, xyz, param)?;
        if degrees[k] == 0 {
            return Err(ExactError::Invalid(
                "Macaulay resultant needs positive-degree forms".into(),
            ));
        }
    }
    let nu = degrees.iter().sum::<u32>() - 2;
    let cols = monomials_of_degree(nu);
    let index_of = |m: &[u32; 3]| cols.iter().position(|c| c == m).expect("degree nu");

    // Row recipe per monomial: which form, and the cofactor monomial.
    struct Row {
        form: usize,
        cofactor: [u32; 3],
        reduced: bool,
    }
    let rows: Vec<Row> = cols
        .iter()
        .map(|&[a, b, c]| {
            let divs = [a >= degrees[0], b >= degrees[1], c >= degrees[2]];
            let form = divs.iter().position(|&d| d).expect("pigeonhole on nu");
            let mut cof = [a, b, c];
            cof[form] -= degrees[form];
            Row {
                form,
                cofactor: cof,
                reduced: divs.iter().filter(|&&d| d).count() == 1,
            }
        })
        .collect();

    // Coefficients of each form, keyed by xyz exponents, as polynomials in
    // the parameter.
    let coeff_maps: Vec<Vec<([u32; 3], UniPoly)>> = forms
        .iter()
        .map(|f| xyz_coefficients(f, xyz, param))
        .collect();

    let n = cols.len();
    let mut param_degree_bound = 0usize;
    let mut reduced_bound = 0usize;
    for row in &rows {
        let rd = coeff_maps[row.form]
            .iter()
            .map(|(_, p)| p.degree().unwrap_or(0))
            .max()
            .unwrap_or(0);
        param_degree_bound += rd;
        if !row.reduced {
            reduced_bound += rd;
        }
    }

    // Assemble symbolic entries once; evaluate per interpolation node.
    let mut entries: Vec<Vec<UniPoly>> = vec![vec![UniPoly::zero(); n]; n];
    for (ri, row) in rows.iter().enumerate() {
        for (exp, coeff) in &coeff_maps[row.form] {
            let target = [
                exp[0] + row.cofactor[0],
                exp[1] + row.cofactor[1],
                exp[2] + row.cofactor[2],
            ];
            entries[ri][index_of(&target)] = coeff.clone();
        }
    }
    let minor_idx: Vec<usize> = rows
        .iter()
        .enumerate()
        .filter(|(_, r)| !r.reduced)
        .map(|(i, _)| i)
        .collect();

    let det_m = det_unipoly_interpolated(&entries, None, param_degree_bound);
    let det_minor = det_unipoly_interpolated(&entries, Some(&minor_idx), reduced_bound);
    if det_minor.is_zero() {
        return Err(ExactError::DegenerateLeading(
            "Macaulay minor vanishes identically".into(),
        ));
    }
    det_m
        .exact_div(&det_minor)
        .map_err(|_| ExactError::Invalid("Macaulay division left a remainder".into()))
}

/// Discriminant-style eliminant of a pencil f + t*g: the Macaulay resultant
/// of the three partial derivatives of f + t*g, an exact polynomial in `t`.
/// Its roots are the parameters of the singular members.
pub fn pencil_discriminant(
    f: &MultiPoly,
    g: &MultiPoly,
    xyz: [&str; 3],
    t: &str,
) -> Result<UniPoly, ExactError> {
    let member = &f.clone() + &(&MultiPoly::var(t) * g);
    let partials: Vec<MultiPoly> = xyz.iter().map(|v| member.derivative(v)).collect();
    ternary_resultant(
        [&partials[0], &partials[1], &partials[2]],
        xyz,
        Some(t),
    )
}

fn monomials_of_degree(nu: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for a in (0..=nu).rev() {
        for b in (0..=nu - a).rev() {
            out.push([a, b, nu - a - b]);
        }
    }
    out
}

/// Checks homogeneity in `xyz` (ignoring `param`) and returns the degree.
fn xyz_degree(f: &MultiPoly, xyz: [&str; 3], param: Option<&str>) -> Result<u32, ExactError> {
    for v in f.vars() {
        if !xyz.contains(&v.as_str()) && Some(v.as_str()) != param {
            return Err(ExactError::Invalid(format!(
                "unexpected variable {v} in Macaulay input"
            )));
        }
    }
    let mut degree = None;
    for (exp, _) in split_xyz_terms(f, xyz, param) {
        let d = exp.iter().sum::<u32>();
        match degree {
            None => degree = Some(d),
            Some(prev) if prev != d => {
                return Err(ExactError::Invalid(
                    "Macaulay input is not homogeneous in x, y, z".into(),
                ))
            }
            _ => {}
        }
    }
    degree.ok_or_else(|| ExactError::Invalid("zero form in Macaulay input".into()))
}

/// Collects `(xyz exponents, coefficient in param)` pairs.
fn xyz_coefficients(
    f: &MultiPoly,
    xyz: [&str; 3],
    param: Option<&str>,
) -> Vec<([u32; 3], UniPoly)> {
    let mut acc: Vec<([u32; 3], Vec<Rat>)> = Vec::new();
    for (exp, pdeg, c) in split_terms(f, xyz, param) {
        let slot = match acc.iter_mut().find(|(e, _)| *e == exp) {
            Some((_, v)) => v,
            None => {
                acc.push((exp, Vec::new()));
                &mut acc.last_mut().unwrap().1
            }
        };
        if slot.len() <= pdeg {
            slot.resize(pdeg + 1, Rat::zero());
        }
        slot[pdeg] = &slot[pdeg] + &c;
    }
    acc.into_iter()
        .map(|(e, v)| (e, UniPoly::from_coeffs(v)))
        .collect()
}

fn split_xyz_terms<'a>(
    f: &'a MultiPoly,
    xyz: [&'a str; 3],
    param: Option<&'a str>,
) -> impl Iterator<Item = ([u32; 3], Rat)> + 'a {
    split_terms(f, xyz, param).map(|(e, _, c)| (e, c))
}

fn split_terms<'a>(
    f: &'a MultiPoly,
    xyz: [&'a str; 3],
    param: Option<&'a str>,
) -> impl Iterator<Item = ([u32; 3], usize, Rat)> + 'a {
    let var_slots: Vec<Option<usize>> = f
        .vars()
        .iter()
        .map(|v| xyz.iter().position(|w| w == v))
        .collect();
    let param_slot: Vec<bool> = f
        .vars()
        .iter()
        .map(|v| Some(v.as_str()) == param)
        .collect();
    f.terms().map(move |(exp, c)| {
        let mut e = [0u32; 3];
        let mut p = 0usize;
        for (i, &x) in exp.iter().enumerate() {
            if let Some(s) = var_slots[i] {
                e[s] = x;
            } else if param_slot[i] {
                p = x as usize;
            }
        }
        (e, p, c.clone())
    })
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_i64;

    fn vars() -> (MultiPoly, MultiPoly, MultiPoly) {
        (
            MultiPoly::var("x"),
            MultiPoly::var("y"),
            MultiPoly::var("z"),
        )
    }

    #[test]
    fn three_linear_forms_give_coefficient_determinant() {
        let (x, y, z) = vars();
        // x + 2y + 3z, 4x + 5y + 6z, 7x + 8y + 10z: det = -3
        let f1 = &(&x + &y.scale(&rat_i64(2))) + &z.scale(&rat_i64(3));
        let f2 = &(&x.scale(&rat_i64(4)) + &y.scale(&rat_i64(5))) + &z.scale(&rat_i64(6));
        let f3 = &(&x.scale(&rat_i64(7)) + &y.scale(&rat_i64(8))) + &z.scale(&rat_i64(10));
        let r = ternary_resultant([&f1, &f2, &f3], ["x", "y", "z"], None).unwrap();
        assert_eq!(r, UniPoly::from_i64(-3));
    }

    #[test]
    fn smooth_conic_partials_have_nonzero_resultant() {
        let (x, y, z) = vars();
        let conic = &(&x.pow(2) + &y.pow(2)) + &z.pow(2);
        let parts: Vec<MultiPoly> = ["x", "y", "z"].iter().map(|v| conic.derivative(v)).collect();
        let r = ternary_resultant([&parts[0], &parts[1], &parts[2]], ["x", "y", "z"], None)
            .unwrap();
        assert_eq!(r, UniPoly::from_i64(8));
    }

    #[test]
    fn singular_cubic_partials_share_a_zero() {
        let (x, y, z) = vars();
        // nodal cubic y^2 z - x^2 (x + z): singular at (0:0:1)
        let cubic = &(&y.pow(2) * &z) - &(&x.pow(2) * &(&x + &z));
        let parts: Vec<MultiPoly> = ["x", "y", "z"].iter().map(|v| cubic.derivative(v)).collect();
        let r = ternary_resultant([&parts[0], &parts[1], &parts[2]], ["x", "y", "z"], None)
            .unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn hesse_pencil_discriminant_structure() {
        let (x, y, z) = vars();
        // x^3 + y^3 + z^3 + t*xyz: singular members at t = -3 zeta (three
        // affine roots, each a triangle of lines carrying three nodes) and
        // the triangle xyz at infinity, so the t-eliminant has degree 9 and
        // three distinct roots of multiplicity 3 with t^3 = -27.
        let f = &(&x.pow(3) + &y.pow(3)) + &z.pow(3);
        let g = &(&x * &y) * &z;
        let disc = pencil_discriminant(&f, &g, ["x", "y", "z"], "t").unwrap();
        assert_eq!(disc.degree(), Some(9));
        let sf = disc.squarefree_decomposition();
        assert_eq!(sf.len(), 1);
        assert_eq!(sf[0].1, 3);
        assert_eq!(sf[0].0.degree(), Some(3));
        // cube root structure: squarefree part proportional to t^3 + 27
        let part = &sf[0].0;
        let lead = part.leading().unwrap().clone();
        let monic = part.scale(&(Rat::from_integer(1.into()) / lead));
        assert_eq!(monic, UniPoly::from_int_coeffs(&[27, 0, 0, 1]));
        assert_eq!(part.eval_i64(-3), rat_i64(0));
    }

    #[test]
    fn generic_conic_pencil_has_cubic_discriminant() {
        let (x, y, z) = vars();
        let f = &(&x.pow(2) + &(&y * &z)) + &y.pow(2);
        let g = &(&z.pow(2) + &(&x * &y)) + &x.pow(2);
        let disc = pencil_discriminant(&f, &g, ["x", "y", "z"], "t").unwrap();
        assert_eq!(disc.degree(), Some(3));
    }
}
