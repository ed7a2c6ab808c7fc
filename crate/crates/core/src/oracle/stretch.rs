//! Stretch-tier checks: bitangent lines through a fixed point across a
//! whole pencil, and hyperflexes of a quartic pencil. Both run the same
//! exact-elimination pipeline as the core tier but on heavier systems, so
//! they report a skipped outcome instead of failing when the elimination
//! exceeds its budget.

use super::bitangents::strip_resultant_junk;
use super::eliminate::{common_values, complex_roots_in, random_projectivity};
use super::numutil::{eval_raw, eval_scaled_at, newton_refine, normalize};
use super::roots::{cluster_values, ComplexPoly};
use super::{OracleConfig, OracleError};
use crate::curves::{CurvePencil, X, Y, Z};
use crate::exact::{det3, resultant_bivariate, MultiPoly, Rat, UniPoly};
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::mpsc;
use std::time::Duration;

/// Outcome of a stretch-tier check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StretchOutcome {
    Completed(u32),
    Skipped { reason: String },
}

/// Number of lines through a fixed general point that are bitangent to some
/// member of the pencil: 16 for a general quartic pencil, 0 for a cubic
/// pencil (the same machinery finds only triple-contact lines there, which
/// the contact-pattern classification rejects).
pub fn count_bitangent_lines_through_point(
    pencil: &CurvePencil,
    point: &[Rat; 3],
    cfg: &OracleConfig,
) -> Result<StretchOutcome, OracleError> {
    let d = pencil.degree();
    if d != 3 && d != 4 {
        return Err(OracleError::Precondition(
            "bitangent lines through a point are implemented for cubic and quartic pencils".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x6c696e65);
    let mut last = String::new();
    for _ in 0..cfg.retries {
        let t = random_projectivity(&mut rng);
        let moved = t.apply_inverse_to_point(point);
        if moved[2].is_zero() {
            continue;
        }
        let x0 = &moved[0] / &moved[2];
        let y0 = &moved[1] / &moved[2];
        match lines_through_point_attempt(&pencil.transform(&t), &x0, &y0, cfg) {
            Ok(n) => return Ok(StretchOutcome::Completed(n)),
            Err(e) => last = e.to_string(),
        }
    }
    Err(OracleError::RetriesExhausted(
        cfg.retries,
        format!("bitangent lines through point: {last}"),
    ))
}

fn lines_through_point_attempt(
    pencil: &CurvePencil,
    x0: &Rat,
    y0: &Rat,
    _cfg: &OracleConfig,
) -> Result<u32, OracleError> {
    let d = pencil.degree() as usize;
    let mem = pencil
        .member_symbolic("t")
        .eval_partial(&[(Z, Rat::from_integer(1.into()))]);
    // lines through (x0, y0): y = m x + (y0 - m x0)
    let offset = &MultiPoly::constant(y0.clone()) - &MultiPoly::var("m").scale(x0);
    let line = &(&MultiPoly::var("m") * &MultiPoly::var(X)) + &offset;
    let restricted = mem.substitute(Y, &line);
    let coeffs = restricted.as_univariate_in(X);
    if coeffs.len() != d + 1 || coeffs[d].is_zero() {
        return Err(OracleError::Precondition(
            "pencil restriction lost degree in this chart".into(),
        ));
    }
    let (e1, e2) = double_contact_system(&coeffs)?;
    if e1.degree_in("t") == 0 || e2.degree_in("t") == 0 {
        return Err(OracleError::Precondition(
            "contact system degenerate in the pencil parameter".into(),
        ));
    }
    let eliminant = resultant_bivariate(&e1, &e2, "t", "m")?;
    if eliminant.is_zero() {
        return Err(OracleError::Precondition(
            "contact equations share a component".into(),
        ));
    }
    // the slope count is exact: strip the resultant's own junk, then the
    // chart locus where the leading restriction coefficient vanishes (there
    // the contact system collapses to powers of the next coefficient)
    let chart_junk = {
        let lead = &coeffs[d];
        let next = &coeffs[d - 1];
        if lead.degree_in("t") >= 1 && next.degree_in("t") >= 1 {
            let r = resultant_bivariate(lead, next, "t", "m")?;
            strip_resultant_junk(&r, lead, next, "t")?
        } else {
            UniPoly::one()
        }
    };
    let stripped = strip_resultant_junk(&eliminant, &e1, &e2, "t")?
        .remove_common_factors(&chart_junk);
    let pair_count = stripped.degree().unwrap_or(0) as u32;
    match d {
        4 => {
            // pairs found by the quartic system are double-double contacts
            // unless a quadruple-contact line passes through the point; a
            // general point sees none, certified exactly
            let (a2, a3, a4) = (&coeffs[2], &coeffs[3], &coeffs[4]);
            let g2 = &(a3 * a3).scale(&Rat::from_integer(3.into()))
                - &(a4 * a2).scale(&Rat::from_integer(8.into()));
            if g2.degree_in("t") >= 1 {
                let quad = resultant_bivariate(&e1, &g2, "t", "m")?;
                if quad.is_zero() {
                    return Err(OracleError::Precondition(
                        "quadruple-contact check degenerated".into(),
                    ));
                }
                let quad_stripped = strip_resultant_junk(&quad, &e1, &g2, "t")?
                    .remove_common_factors(&chart_junk);
                if stripped.gcd(&quad_stripped).degree().unwrap_or(0) > 0 {
                    return Err(OracleError::Precondition(
                        "a quadruple-contact line passes through the point".into(),
                    ));
                }
            }
            Ok(pair_count)
        }
        3 => {
            // the cubic system finds osculating (triple-contact) lines: the
            // flex-line curve of the pencil has degree nine, which the
            // eliminant must reproduce, and none of them is a bitangent
            if pair_count != 9 {
                return Err(OracleError::Precondition(format!(
                    "osculating-line eliminant has degree {pair_count}, expected 9"
                )));
            }
            Ok(0)
        }
        _ => unreachable!("degree checked by the caller"),
    }
}

/// The two equations expressing "the restriction is lc times the square of
/// a monic quadratic" (degree 4) or "lc times the cube of a monic linear"
/// (degree 3), on the chart where the leading coefficient is nonzero.
fn double_contact_system(coeffs: &[MultiPoly]) -> Result<(MultiPoly, MultiPoly), OracleError> {
    match coeffs.len() {
        5 => {
            let (a0, a1, a2, a3, a4) = (&coeffs[0], &coeffs[1], &coeffs[2], &coeffs[3], &coeffs[4]);
            let e1 = {
                let t1 = (&(a4 * a4) * a1).scale(&Rat::from_integer(8.into()));
                let t2 = (&(a4 * a2) * a3).scale(&Rat::from_integer(4.into()));
                &(&t1 - &t2) + &(&(a3 * a3) * a3)
            };
            let e2 = {
                let t1 = (&(&(a4 * a4) * a4) * a0).scale(&Rat::from_integer(64.into()));
                let inner = &(a4 * a2).scale(&Rat::from_integer(4.into())) - &(a3 * a3);
                &t1 - &(&inner * &inner)
            };
            Ok((e1, e2))
        }
        4 => {
            let (a0, a1, a2, a3) = (&coeffs[0], &coeffs[1], &coeffs[2], &coeffs[3]);
            let e1 = &(a3 * a1).scale(&Rat::from_integer(3.into())) - &(a2 * a2);
            let e2 = &(&(a3 * a3) * a0).scale(&Rat::from_integer(27.into())) - &(&(a2 * a2) * a2);
            Ok((e1, e2))
        }
        _ => Err(OracleError::Precondition(
            "contact system expects a cubic or quartic restriction".into(),
        )),
    }
}

/// Number of hyperflexes across a quartic pencil (members together with a
/// line meeting them to order four): 60 for a general quartic pencil.
///
/// Uses the contact-point formulation: the flex curve of the pencil is cut
/// out by the Hessian of the member through each point, and hyperflexes are
/// the ramification points of the pencil parameter along it. The spurious
/// base-point and node factors of the eliminant are removed exactly before
/// root extraction. The whole elimination runs under a wall-clock budget
/// and reports a skipped outcome if it cannot finish.
pub fn count_hyperflexes_quartic_pencil(
    pencil: &CurvePencil,
    cfg: &OracleConfig,
) -> Result<StretchOutcome, OracleError> {
    if pencil.degree() != 4 {
        return Err(OracleError::Precondition(
            "hyperflex counting is implemented for quartic pencils".into(),
        ));
    }
    let (tx, rx) = mpsc::channel();
    let p = pencil.clone();
    let c = cfg.clone();
    std::thread::spawn(move || {
        let _ = tx.send(hyperflex_compute(&p, &c));
    });
    match rx.recv_timeout(Duration::from_secs(cfg.stretch_budget_secs)) {
        Ok(Ok(n)) => Ok(StretchOutcome::Completed(n)),
        Ok(Err(e)) => Err(e),
        Err(_) => Ok(StretchOutcome::Skipped {
            reason: format!(
                "hyperflex elimination exceeded the {}s budget",
                cfg.stretch_budget_secs
            ),
        }),
    }
}

fn hyperflex_compute(pencil: &CurvePencil, cfg: &OracleConfig) -> Result<u32, OracleError> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x68797066);
    let mut last = String::new();
    for _ in 0..cfg.retries.min(3) {
        let t = random_projectivity(&mut rng);
        match hyperflex_attempt(&pencil.transform(&t), cfg) {
            Ok(n) => return Ok(n),
            Err(e) => last = e.to_string(),
        }
    }
    Err(OracleError::RetriesExhausted(
        cfg.retries.min(3),
        format!("hyperflex count: {last}"),
    ))
}

fn hyperflex_attempt(pencil: &CurvePencil, cfg: &OracleConfig) -> Result<u32, OracleError> {
    let one = Rat::from_integer(1.into());
    let fh = pencil.f().poly();
    let gh = pencil.g().poly();
    let f = fh.eval_partial(&[(Z, one.clone())]);
    let g = gh.eval_partial(&[(Z, one.clone())]);
    let xyz = [X, Y, Z];

    // flex-curve equation: Hessian of the member through p, evaluated at p
    let rows: Vec<Vec<MultiPoly>> = xyz
        .iter()
        .map(|a| {
            xyz.iter()
                .map(|b| {
                    let fab = fh.derivative(a).derivative(b).eval_partial(&[(Z, one.clone())]);
                    let gab = gh.derivative(a).derivative(b).eval_partial(&[(Z, one.clone())]);
                    &(&g * &fab) - &(&f * &gab)
                })
                .collect()
        })
        .collect();
    let flex_eq = det3(&rows);
    let expected_flex_degree = 6 * pencil.degree() - 6;
    if flex_eq.total_degree() != Some(expected_flex_degree) {
        return Err(OracleError::Precondition(
            "flex equation degenerated in this chart".into(),
        ));
    }

    // gradient of the member through p, at p
    let u = &(&g * &f.derivative(X)) - &(&f * &g.derivative(X));
    let v = &(&g * &f.derivative(Y)) - &(&f * &g.derivative(Y));
    // ramification of t = -f/g along the flex curve
    let ram = &(&flex_eq.derivative(X) * &v) - &(&flex_eq.derivative(Y) * &u);
    if ram.is_zero() || flex_eq.degree_in(Y) == 0 || ram.degree_in(Y) == 0 {
        return Err(OracleError::Precondition(
            "ramification equation degenerated".into(),
        ));
    }

    let t0 = std::time::Instant::now();
    let eliminant = resultant_bivariate(&flex_eq, &ram, Y, X)?;
    eprintln!("[hf] main resultant deg {:?} in {:?}", eliminant.degree(), t0.elapsed());
    if eliminant.is_zero() {
        return Err(OracleError::Precondition(
            "flex and ramification curves share a component".into(),
        ));
    }
    let t0 = std::time::Instant::now();
    let base_elim = resultant_bivariate(&f, &g, Y, X)?;
    eprintln!("[hf] base elim deg {:?} in {:?}", base_elim.degree(), t0.elapsed());
    let node_elim_raw = resultant_bivariate(&u, &v, Y, X)?;
    let t0 = std::time::Instant::now();
    let node_elim = node_elim_raw.remove_common_factors(&base_elim);
    eprintln!("[hf] node elim deg {:?} in {:?}", node_elim.degree(), t0.elapsed());
    let t0 = std::time::Instant::now();
    let reduced = eliminant
        .remove_common_factors(&base_elim)
        .remove_common_factors(&node_elim)
        .squarefree_part();
    eprintln!("[hf] reduced deg {:?} in {:?}", reduced.degree(), t0.elapsed());
    if reduced.degree().unwrap_or(0) == 0 {
        return Err(OracleError::Precondition(
            "eliminant reduced to a constant".into(),
        ));
    }

    let tol = cfg.residual_tol.sqrt();
    let xs: Vec<Complex64> = ComplexPoly::from_unipoly(&reduced)?
        .all_roots(cfg)?
        .to_vec();
    let mem = pencil
        .member_symbolic("t")
        .eval_partial(&[(Z, Rat::from_integer(1.into()))]);
    let mut verified: Vec<(Complex64, Complex64)> = Vec::new();
    for x0 in cluster_values(&xs, cfg.cluster_radius).iter().map(|(c, _)| *c) {
        let at = [("x", x0)];
        // candidates from one rooting, decided by polish-and-residual: the
        // second eliminant rooting would only add noise
        let y_flex = complex_roots_in(&flex_eq, Y, &at, cfg)?;
        for y_candidate in y_flex {
            let Some((x1, y1)) = newton_refine(&flex_eq, &ram, ("x", "y"), x0, y_candidate)
            else {
                continue;
            };
            // must still represent the same certified slope
            if (x1 - x0).norm() > 1e-3 * (1.0 + x0.norm()) {
                continue;
            }
            let p_at = [("x", x1), ("y", y1)];
            if eval_scaled_at(&flex_eq, &p_at) > 1e-10 || eval_scaled_at(&ram, &p_at) > 1e-10 {
                continue;
            }
            // skip base points and nodes
            if eval_scaled_at(&f, &p_at) < tol && eval_scaled_at(&g, &p_at) < tol {
                continue;
            }
            if eval_scaled_at(&u, &p_at) < tol && eval_scaled_at(&v, &p_at) < tol {
                continue;
            }
            let fval = eval_raw(&f, &p_at);
            let gval = eval_raw(&g, &p_at);
            if gval.norm() < 1e-12 {
                continue;
            }
            let t0 = -fval / gval;
            if !quadruple_contact(&mem, x1, y1, t0, cfg, tol) {
                continue;
            }
            if verified
                .iter()
                .all(|&(a, b)| (a - x1).norm() + (b - y1).norm() > tol)
            {
                verified.push((x1, y1));
            }
        }
    }
    if verified.is_empty() {
        return Err(OracleError::Precondition(
            "no hyperflex survived verification".into(),
        ));
    }
    Ok(verified.len() as u32)
}

/// Checks that the tangent line of the member through (x0, y0) meets it
/// with contact order four there: the restriction along the tangent has a
/// quadruple root.
fn quadruple_contact(
    mem: &MultiPoly,
    x0: Complex64,
    y0: Complex64,
    t0: Complex64,
    cfg: &OracleConfig,
    tol: f64,
) -> bool {
    // gradient of the member at the point
    let dx = eval_raw(&mem.derivative(X), &[("x", x0), ("y", y0), ("t", t0)]);
    let dy = eval_raw(&mem.derivative(Y), &[("x", x0), ("y", y0), ("t", t0)]);
    let (swap_xy, slope, offset) = if dy.norm() >= dx.norm() {
        // tangent y = m x + b
        let m = -dx / dy;
        (false, m, y0 - m * x0)
    } else {
        // tangent x = m y + b
        let m = -dy / dx;
        (true, m, x0 - m * y0)
    };
    let coeffs = restrict_member_complex(mem, t0, swap_xy, slope, offset);
    let Ok(cp) = ComplexPoly::from_complex_coeffs(normalize(coeffs)) else {
        return false;
    };
    let Ok(roots) = cp.all_roots(cfg) else {
        return false;
    };
    let profile = cluster_values(&roots, tol.sqrt());
    profile.len() == 1 && profile[0].1 == 4
}

/// Coefficients in x (or in y when `swap_xy`) of the member with t = t0
/// restricted to the line (second coordinate) = slope * (first) + offset.
fn restrict_member_complex(
    mem: &MultiPoly,
    t0: Complex64,
    swap_xy: bool,
    slope: Complex64,
    offset: Complex64,
) -> Vec<Complex64> {
    let vars = mem.vars().to_vec();
    let mut out = vec![Complex64::ZERO; 5];
    for (exp, c) in mem.terms() {
        let mut xi = 0u32;
        let mut yj = 0u32;
        let mut tk = 0u32;
        for (i, &e) in exp.iter().enumerate() {
            match vars[i].as_str() {
                "x" => xi = e,
                "y" => yj = e,
                "t" => tk = e,
                _ => {}
            }
        }
        let (free_pow, line_pow) = if swap_xy { (yj, xi) } else { (xi, yj) };
        let base = Complex64::new(c.to_f64().unwrap_or(0.0), 0.0) * t0.powu(tk);
        // (slope * w + offset)^line_pow expanded
        let mut binom = 1.0f64;
        for l in 0..=line_pow {
            if l > 0 {
                binom = binom * (line_pow - l + 1) as f64 / l as f64;
            }
            let term = base
                * Complex64::new(binom, 0.0)
                * slope.powu(l)
                * offset.powu(line_pow - l);
            let deg = (free_pow + l) as usize;
            if deg < out.len() {
                out[deg] += term;
            }
        }
    }
    while matches!(out.last(), Some(c) if c.norm() == 0.0) {
        out.pop();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_i64;

    #[test]
    fn cubic_pencil_has_no_bitangent_lines_through_a_point() {
        let pencil = CurvePencil::random(3, 71, 10).unwrap();
        let point = [rat_i64(1), rat_i64(2), rat_i64(1)];
        let out =
            count_bitangent_lines_through_point(&pencil, &point, &OracleConfig::with_seed(71))
                .unwrap();
        assert_eq!(out, StretchOutcome::Completed(0));
    }
}
