//! Bitangent counting for quartics.
//!
//! A line y = m x + b is bitangent exactly when the restriction
//! q(x) = C(x, mx + b, 1) is a nonzero multiple of the square of a monic
//! quadratic. On the chart where the leading coefficient a4(m) does not
//! vanish, matching q = a4 (x^2 + px + r)^2 and eliminating p, r leaves the
//! two equations
//!
//!   E1 = 8 a4^2 a1 - 4 a4 a2 a3 + a3^3,
//!   E2 = 64 a4^3 a0 - (4 a4 a2 - a3^2)^2,
//!
//! whose common zeros are the double-double and quadruple contact lines;
//! this is the two-double-root branch of the vanishing of the two trailing
//! principal subresultant coefficients of (q, q') (the triple-root branch
//! is excluded by construction). Every count below is produced by exact
//! algebra on the b-eliminant of this system:
//!
//! - total: degree of the squarefree eliminant after exact removal of its
//!   only spurious factors (common leading-coefficient roots and contents);
//! - quadruple contacts (hyperflexes): exact emptiness check against the
//!   additional equation 3 a3^2 - 8 a4 a2 = 0;
//! - improper bitangents of a one-nodal quartic: exact gcd with the system
//!   restricted to the pencil of lines through the node.
//!
//! Floating point only produces the per-line report (slopes, offsets, node
//! incidence) and cross-checks the trailing subresultants on it.

use super::eliminate::{common_values, complex_roots_in, random_projectivity};
use super::numutil::{newton_refine, trailing_subresultants_vanish};
use super::roots::root_clusters_exact;
use super::{OracleConfig, OracleError};
use crate::curves::{PlaneCurve, Projectivity, X, Y, Z};
use crate::exact::{resultant_bivariate, MultiPoly, Rat, UniPoly};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// One reported bitangent line (best effort; the counts do not depend on
/// this list being complete).
#[derive(Clone, Debug)]
pub struct BitangentLine {
    /// Dual coordinates in the original coordinate system, normalized.
    pub dual: [Complex64; 3],
    /// True when the line passes through the node of a singular quartic.
    pub through_node: bool,
}

/// Result of the bitangent count: proper lines touch two smooth points,
/// improper lines pass through the node and touch elsewhere (each of those
/// counts twice in the classical total).
#[derive(Clone, Debug)]
pub struct BitangentCount {
    pub proper: u32,
    pub improper: u32,
    pub lines: Vec<BitangentLine>,
}

impl BitangentCount {
    /// Weighted total: proper + 2 * improper.
    pub fn weighted(&self) -> u32 {
        self.proper + 2 * self.improper
    }
}

pub fn count_bitangents_quartic(
    curve: &PlaneCurve,
    cfg: &OracleConfig,
) -> Result<BitangentCount, OracleError> {
    if curve.degree() != 4 {
        return Err(OracleError::Precondition(
            "bitangent counting is implemented for quartics".into(),
        ));
    }
    let singular = !curve.is_smooth()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x62697461);
    let mut last = String::new();
    for _ in 0..cfg.retries {
        let t = random_projectivity(&mut rng);
        let c = curve.transform(&t);
        match attempt(&c, singular, cfg) {
            Ok(mut found) => {
                for line in found.lines.iter_mut() {
                    line.dual = dual_back(&t, line.dual);
                }
                return Ok(found);
            }
            Err(e) => last = e.to_string(),
        }
    }
    Err(OracleError::RetriesExhausted(
        cfg.retries,
        format!("bitangent count: {last}"),
    ))
}

fn attempt(
    c: &PlaneCurve,
    singular: bool,
    cfg: &OracleConfig,
) -> Result<BitangentCount, OracleError> {
    // locate the node and pin it down as an exact rational point (the split
    // into proper and improper lines is exact algebra through it)
    let node = if singular {
        let approx = unique_singular_point(c, cfg)?;
        Some(rational_singular_point(c, &approx).ok_or_else(|| {
            OracleError::Precondition("node did not rationalize in this chart".into())
        })?)
    } else {
        None
    };

    // q(x; m, b) = C(x, m x + b, 1) and its coefficients in x
    let mb_line = &(&MultiPoly::var("m") * &MultiPoly::var(X)) + &MultiPoly::var("b");
    let q = c
        .poly()
        .substitute(Y, &mb_line)
        .eval_partial(&[(Z, Rat::from_integer(1.into()))]);
    let coeffs = q.as_univariate_in(X);
    if coeffs.len() != 5 || coeffs[4].is_zero() {
        return Err(OracleError::Precondition(
            "restriction lost its leading coefficient".into(),
        ));
    }
    let (a0, a1, a2, a3, a4) = (
        &coeffs[0],
        &coeffs[1],
        &coeffs[2],
        &coeffs[3],
        &coeffs[4],
    );
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
    if e1.degree_in("b") == 0 || e2.degree_in("b") == 0 {
        return Err(OracleError::Precondition(
            "double-contact equations degenerate in this chart".into(),
        ));
    }

    let eliminant = resultant_bivariate(&e1, &e2, "b", "m")?;
    if eliminant.is_zero() {
        return Err(OracleError::Precondition(
            "double-contact equations share a component".into(),
        ));
    }
    // on the locus a4(m) = 0 the whole square model degenerates (E1 and E2
    // collapse to powers of a3), so those slopes are chart artifacts and are
    // removed exactly along with the resultant's own junk factors
    let a4_m = a4
        .to_unipoly()
        .ok_or_else(|| OracleError::Precondition("leading restriction coefficient invalid".into()))?;
    let true_eliminant = strip_resultant_junk(&eliminant, &e1, &e2, "b")?
        .remove_common_factors(&a4_m);
    let total = true_eliminant.degree().unwrap_or(0) as u32;
    if total == 0 {
        return Err(OracleError::Precondition(
            "no double-contact slope survived junk removal".into(),
        ));
    }

    // quadruple-contact (hyperflex) lines would satisfy 3 a3^2 - 8 a4 a2 = 0
    // as well; a general quartic has none, and the exact check certifies it
    let g2 = &(a3 * a3).scale(&Rat::from_integer(3.into()))
        - &(a4 * a2).scale(&Rat::from_integer(8.into()));
    if g2.degree_in("b") >= 1 {
        let quad_elim = resultant_bivariate(&e1, &g2, "b", "m")?;
        if quad_elim.is_zero() {
            return Err(OracleError::Precondition(
                "quadruple-contact check degenerated".into(),
            ));
        }
        let stripped =
            strip_resultant_junk(&quad_elim, &e1, &g2, "b")?.remove_common_factors(&a4_m);
        if true_eliminant.gcd(&stripped).degree().unwrap_or(0) > 0 {
            return Err(OracleError::Precondition(
                "a quadruple-contact line is present; count would be ambiguous".into(),
            ));
        }
    }

    // improper lines: restrict the system to the pencil through the node
    let improper = match &node {
        None => 0,
        Some((xn, yn)) => {
            let node_b = &MultiPoly::constant(yn.clone())
                - &MultiPoly::var("m").scale(xn);
            let n1 = e1
                .substitute("b", &node_b)
                .to_unipoly()
                .ok_or_else(|| OracleError::Precondition("node system not univariate".into()))?;
            let n2 = e2
                .substitute("b", &node_b)
                .to_unipoly()
                .ok_or_else(|| OracleError::Precondition("node system not univariate".into()))?;
            let through = n1.gcd(&n2).squarefree_part();
            true_eliminant.gcd(&through).degree().unwrap_or(0) as u32
        }
    };
    let proper = total - improper;

    // best-effort line report with the trailing-subresultant cross-check
    let mut lines = Vec::new();
    let pattern_radius = cfg.residual_tol.sqrt();
    if let Ok(clusters) = root_clusters_exact(&true_eliminant, cfg) {
        for cl in clusters {
            let m0 = cl.representative;
            let at = [("m", m0)];
            let (Ok(b1), Ok(b2)) = (
                complex_roots_in(&e1, "b", &at, cfg),
                complex_roots_in(&e2, "b", &at, cfg),
            ) else {
                continue;
            };
            for b0 in common_values(&b1, &b2, cfg.cluster_radius.max(1e-9) * 1e3) {
                let Some((m, b)) = newton_refine(&e1, &e2, ("m", "b"), m0, b0) else {
                    continue;
                };
                let q0: Vec<Complex64> = coeffs
                    .iter()
                    .map(|cf| super::numutil::eval_raw(cf, &[("m", m), ("b", b)]))
                    .collect();
                if !trailing_subresultants_vanish(&q0, 1e-2) {
                    continue;
                }
                let through_node = match &node {
                    None => false,
                    Some((xn, yn)) => {
                        let nx = Complex64::new(xn.to_f64().unwrap_or(0.0), 0.0);
                        let ny = Complex64::new(yn.to_f64().unwrap_or(0.0), 0.0);
                        (m * nx + b - ny).norm() <= pattern_radius * (1.0 + nx.norm())
                    }
                };
                if lines
                    .iter()
                    .all(|l: &BitangentLine| (l.dual[0] - m).norm() + (l.dual[2] - b).norm() > 1e-5)
                {
                    lines.push(BitangentLine {
                        dual: [m, Complex64::new(-1.0, 0.0), b],
                        through_node,
                    });
                }
                break;
            }
        }
    }

    Ok(BitangentCount {
        proper,
        improper,
        lines,
    })
}

/// Removes the spurious factors a bivariate resultant can carry beyond the
/// projection of the affine solution set: the common roots of the two
/// leading coefficients (solutions at infinity in the eliminated variable)
/// and the contents of either polynomial in the eliminated variable; then
/// takes the squarefree part.
pub(crate) fn strip_resultant_junk(
    eliminant: &UniPoly,
    e1: &MultiPoly,
    e2: &MultiPoly,
    var: &str,
) -> Result<UniPoly, OracleError> {
    let coeffs1 = univariate_coefficients(e1, var)?;
    let coeffs2 = univariate_coefficients(e2, var)?;
    let lead_gcd = coeffs1.last().unwrap().gcd(coeffs2.last().unwrap());
    let content = |cs: &[UniPoly]| {
        let mut g = UniPoly::zero();
        for c in cs {
            g = g.gcd(c);
        }
        g
    };
    let reduced = eliminant
        .remove_common_factors(&lead_gcd)
        .remove_common_factors(&content(&coeffs1))
        .remove_common_factors(&content(&coeffs2));
    Ok(reduced.squarefree_part())
}

fn univariate_coefficients(e: &MultiPoly, var: &str) -> Result<Vec<UniPoly>, OracleError> {
    e.as_univariate_in(var)
        .iter()
        .map(|c| {
            c.to_unipoly()
                .ok_or_else(|| OracleError::Precondition("coefficient is not univariate".into()))
        })
        .collect()
}

/// The unique affine singular point of a one-nodal quartic in this chart,
/// located by exact elimination on the two affine partials and verified on
/// the curve and the third partial.
fn unique_singular_point(
    c: &PlaneCurve,
    cfg: &OracleConfig,
) -> Result<[Complex64; 2], OracleError> {
    let one = Rat::from_integer(1.into());
    let cx = c.derivative(X).eval_partial(&[(Z, one.clone())]);
    let cy = c.derivative(Y).eval_partial(&[(Z, one.clone())]);
    let cz = c.derivative(Z).eval_partial(&[(Z, one.clone())]);
    let curve_affine = c.poly().eval_partial(&[(Z, one)]);
    if cx.degree_in("y") == 0 || cy.degree_in("y") == 0 {
        return Err(OracleError::Precondition(
            "partials degenerate in this chart".into(),
        ));
    }
    let elim = resultant_bivariate(&cx, &cy, "y", "x")?;
    if elim.is_zero() {
        return Err(OracleError::Precondition(
            "partials share a curve component".into(),
        ));
    }
    let tol = cfg.residual_tol.sqrt();
    let mut found: Vec<[Complex64; 2]> = Vec::new();
    for cl in root_clusters_exact(&elim.squarefree_part(), cfg)? {
        let x0 = cl.representative;
        let ys_from_cx = complex_roots_in(&cx, "y", &[("x", x0)], cfg)?;
        let ys_from_cy = complex_roots_in(&cy, "y", &[("x", x0)], cfg)?;
        for y0 in common_values(&ys_from_cx, &ys_from_cy, tol) {
            let at = [("x", x0), ("y", y0)];
            if super::numutil::eval_scaled_at(&curve_affine, &at) <= tol
                && super::numutil::eval_scaled_at(&cz, &at) <= tol
                && found
                    .iter()
                    .all(|p| (p[0] - x0).norm() + (p[1] - y0).norm() > tol)
            {
                found.push([x0, y0]);
            }
        }
    }
    match found.len() {
        1 => Ok(found.pop().expect("one element")),
        0 => Err(OracleError::Precondition(
            "no singular point found in this chart".into(),
        )),
        _ => Err(OracleError::Precondition(
            "more than one singular point; not a one-nodal quartic".into(),
        )),
    }
}

/// Reconstructs the singular point as an exact rational point from its
/// floating approximation and verifies it on the curve and all partials.
fn rational_singular_point(c: &PlaneCurve, approx: &[Complex64; 2]) -> Option<(Rat, Rat)> {
    let xr = rationalize(approx[0])?;
    let yr = rationalize(approx[1])?;
    let point = [xr.clone(), yr.clone(), Rat::from_integer(1.into())];
    if !c.eval(&point).is_zero() {
        return None;
    }
    for v in [X, Y, Z] {
        let val = c
            .derivative(v)
            .eval(&[("x", xr.clone()), ("y", yr.clone()), ("z", Rat::from_integer(1.into()))])
            .ok()?;
        if !val.is_zero() {
            return None;
        }
    }
    Some((xr, yr))
}

/// Nearest small rational to a (near-real) complex value, by continued
/// fractions with a tight acceptance window.
fn rationalize(z: Complex64) -> Option<Rat> {
    if z.im.abs() > 1e-7 {
        return None;
    }
    let target = z.re;
    let (mut p0, mut q0) = (BigInt::from(1), BigInt::from(0));
    let (mut p1, mut q1) = (
        BigInt::from(target.floor() as i64),
        BigInt::from(1),
    );
    let mut frac = target - target.floor();
    for _ in 0..24 {
        let approx = p1.to_f64()? / q1.to_f64()?;
        if (approx - target).abs() < 1e-9 * (1.0 + target.abs()) {
            return Some(Rat::new(p1, q1));
        }
        if frac.abs() < 1e-12 {
            break;
        }
        let inv = 1.0 / frac;
        let digit = inv.floor();
        frac = inv - digit;
        let d = BigInt::from(digit as i64);
        let p2 = &d * &p1 + &p0;
        let q2 = &d * &q1 + &q0;
        p0 = std::mem::replace(&mut p1, p2);
        q0 = std::mem::replace(&mut q1, q2);
        if q1.magnitude().bits() > 24 {
            break;
        }
    }
    let approx = p1.to_f64()? / q1.to_f64()?;
    if (approx - target).abs() < 1e-9 * (1.0 + target.abs()) && !q1.is_zero() {
        Some(Rat::new(p1, q1))
    } else {
        None
    }
}

/// Exact bitangency test for a line given by rational dual coordinates:
/// the restriction must be the leading coefficient times the square of a
/// squarefree monic quadratic (two distinct double contact points).
pub fn is_bitangent_line(curve: &PlaneCurve, dual: &[Rat; 3]) -> Result<bool, OracleError> {
    if curve.degree() != 4 {
        return Err(OracleError::Precondition(
            "exact bitangency test is implemented for quartics".into(),
        ));
    }
    let span = crate::curves::LineParam::spanning_dual(dual)
        .map_err(|e| OracleError::Precondition(e.to_string()))?;
    // the direction point must avoid the curve (it is the point at s =
    // infinity of the parametrization); the line has at most four points on
    // the curve, so a few shifted directions always contain a good one
    let mut q = None;
    for k in 0..6i64 {
        let shift = Rat::from_integer(k.into());
        let dir: Vec<Rat> = span
            .base()
            .iter()
            .zip(span.direction().iter())
            .map(|(b, d)| b * &shift + d)
            .collect();
        let Ok(line) = crate::curves::LineParam::new(
            span.base().clone(),
            [dir[0].clone(), dir[1].clone(), dir[2].clone()],
        ) else {
            continue;
        };
        let r = curve.restrict_to_line(&line)?;
        if r.degree() == Some(4) {
            q = Some(r);
            break;
        }
    }
    let Some(q) = q else {
        return Err(OracleError::Precondition(
            "restriction lost degree in every tried parametrization".into(),
        ));
    };
    let g = q.gcd(&q.derivative());
    if g.degree() != Some(2) {
        return Ok(false);
    }
    if g.gcd(&g.derivative()).degree() != Some(0) {
        return Ok(false); // double contact point collapsed: quadruple contact
    }
    let monic = g.scale(&(Rat::from_integer(1.into()) / g.leading().unwrap().clone()));
    let model = monic.pow(2).scale(q.leading().unwrap());
    Ok(model == q)
}

/// Maps a dual vector from transformed coordinates back to the original
/// ones: lines transform by the transposed adjugate.
fn dual_back(t: &Projectivity, dual: [Complex64; 3]) -> [Complex64; 3] {
    let adj = t.adjugate();
    let mut out = [Complex64::ZERO; 3];
    for i in 0..3 {
        for j in 0..3 {
            let a = adj[j][i].to_f64().unwrap_or(0.0);
            out[i] += Complex64::new(a, 0.0) * dual[j];
        }
    }
    let max = out.iter().map(|c| c.norm()).fold(0.0f64, f64::max);
    if max > 0.0 {
        for c in out.iter_mut() {
            *c /= max;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::fixtures;

    #[test]
    fn smooth_quartic_has_28_proper_bitangents() {
        let c = fixtures::random_smooth_curve(4, 101, 10).unwrap();
        let count = count_bitangents_quartic(&c, &OracleConfig::with_seed(101)).unwrap();
        assert_eq!((count.proper, count.improper), (28, 0));
        assert_eq!(count.weighted(), 28);
    }

    #[test]
    fn nodal_quartic_has_16_plus_6() {
        let (c, _) = fixtures::nodal_quartic(101, 10).unwrap();
        let count = count_bitangents_quartic(&c, &OracleConfig::with_seed(101)).unwrap();
        assert_eq!((count.proper, count.improper), (16, 6));
        assert_eq!(count.weighted(), 28);
    }

    #[test]
    fn forced_bitangents_are_found() {
        let (c, duals) = fixtures::quartic_with_forced_bitangents(33).unwrap();
        let count = count_bitangents_quartic(&c, &OracleConfig::with_seed(33)).unwrap();
        assert_eq!(count.proper, 28);
        for d in duals {
            assert!(
                is_bitangent_line(&c, &d).unwrap(),
                "forced bitangent {d:?} fails the exact test"
            );
        }
    }

    #[test]
    fn random_line_is_not_bitangent() {
        let (c, _) = fixtures::quartic_with_forced_bitangents(33).unwrap();
        let dual = [
            Rat::from_integer(1.into()),
            Rat::from_integer(1.into()),
            Rat::from_integer(1.into()),
        ];
        assert!(!is_bitangent_line(&c, &dual).unwrap());
    }
}
