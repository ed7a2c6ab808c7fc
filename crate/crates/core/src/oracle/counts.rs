//! The core-tier counts: flexes, tangents from a point, tangent members,
//! nodal members, and flex points on a line.

use super::eliminate::{
    common_values, complex_roots_in, eliminate_z_to_unipoly, random_projectivity,
};
use super::roots::root_clusters_exact;
use super::{OracleConfig, OracleError};
use crate::curves::{CurvePencil, LineParam, PlaneCurve, X, XYZ, Y, Z};
use crate::exact::{det3, discriminant, pencil_discriminant, MultiPoly, Rat, UniPoly};
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn require_smooth(curve: &PlaneCurve) -> Result<(), OracleError> {
    if !curve.is_smooth()? {
        return Err(OracleError::Precondition(
            "curve is singular; the count assumes a smooth curve".into(),
        ));
    }
    Ok(())
}

/// Number of intersection points, with multiplicity, of a smooth curve with
/// its Hessian: 3d(d-2) flexes for a generic smooth curve of degree d >= 3.
/// Elimination is exact; each projected root is matched back to a fiber
/// point and verified on both equations.
pub fn count_flexes(curve: &PlaneCurve, cfg: &OracleConfig) -> Result<u32, OracleError> {
    require_smooth(curve)?;
    let d = curve.degree();
    if d == 2 {
        return Ok(0); // conic: constant Hessian, no flexes
    }
    if d < 2 {
        return Err(OracleError::Precondition("degree must be >= 2".into()));
    }
    let expected = d * 3 * (d - 2);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x666c6578);
    let mut last: Option<OracleError> = None;
    for _ in 0..cfg.retries {
        let t = random_projectivity(&mut rng);
        let c = curve.transform(&t);
        let h = match c.hessian() {
            Ok(h) => h,
            Err(_) => continue,
        };
        match count_matched_intersections(c.poly(), h.poly(), expected, cfg) {
            Ok(n) => return Ok(n),
            Err(e) => last = Some(e),
        }
    }
    Err(OracleError::RetriesExhausted(
        cfg.retries,
        format!("flex count: {}", last.map(|e| e.to_string()).unwrap_or_default()),
    ))
}

/// Number of tangency points of tangents drawn from an external point: the
/// intersection count of the curve with the polar of the point, d(d-1) for
/// a generic smooth curve.
pub fn count_tangents_from_point(
    curve: &PlaneCurve,
    point: &[Rat; 3],
    cfg: &OracleConfig,
) -> Result<u32, OracleError> {
    require_smooth(curve)?;
    if curve.eval(point).is_zero() {
        return Err(OracleError::Precondition(
            "the point lies on the curve; tangents from it degenerate".into(),
        ));
    }
    let d = curve.degree();
    let expected = d * (d - 1);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x706f6c61);
    let mut last: Option<OracleError> = None;
    for _ in 0..cfg.retries {
        let t = random_projectivity(&mut rng);
        let c = curve.transform(&t);
        let moved = t.apply_inverse_to_point(point);
        let polar = match c.polar(&moved) {
            Ok(p) => p,
            Err(_) => continue,
        };
        match count_matched_intersections(c.poly(), polar.poly(), expected, cfg) {
            Ok(n) => return Ok(n),
            Err(e) => last = Some(e),
        }
    }
    Err(OracleError::RetriesExhausted(
        cfg.retries,
        format!(
            "tangents from point: {}",
            last.map(|e| e.to_string()).unwrap_or_default()
        ),
    ))
}

/// Shared elimination-and-verify for intersections of two forms: resultant
/// with respect to z, exact squarefree split, root extraction, and fiber
/// matching of each projected root against both z-specializations.
fn count_matched_intersections(
    a: &MultiPoly,
    b: &MultiPoly,
    expected: u32,
    cfg: &OracleConfig,
) -> Result<u32, OracleError> {
    let eliminant = eliminate_z_to_unipoly(a, b, expected)?;
    let clusters = root_clusters_exact(&eliminant, cfg)?;
    let mut total = 0u32;
    for cl in &clusters {
        let x0 = cl.representative;
        let at = [("x", x0), ("y", Complex64::new(1.0, 0.0))];
        let za = complex_roots_in(a, "z", &at, cfg)?;
        let zb = complex_roots_in(b, "z", &at, cfg)?;
        let matched = common_values(&za, &zb, cfg.cluster_radius.sqrt());
        if matched.is_empty() {
            return Err(OracleError::Precondition(
                "projected root failed fiber matching".into(),
            ));
        }
        total += cl.multiplicity;
    }
    if total != expected {
        return Err(OracleError::Precondition(format!(
            "matched multiplicities sum to {total}, expected {expected}"
        )));
    }
    Ok(total)
}

fn draw_line(rng: &mut ChaCha8Rng) -> LineParam {
    loop {
        let mut pick = || {
            let mut p = [0i64; 3];
            for e in p.iter_mut() {
                *e = rng.random_range(-9..=9);
            }
            p
        };
        let base = pick();
        let dir = pick();
        if let Ok(line) = LineParam::from_i64(base, dir) {
            return line;
        }
    }
}

/// Exact restriction of both generators, with genericity checks: full
/// degree and no common zero on the line (over the complex numbers).
fn restrict_generators(
    pencil: &CurvePencil,
    line: &LineParam,
) -> Result<(UniPoly, UniPoly), OracleError> {
    let d = pencil.degree() as usize;
    let f = pencil.f().restrict_to_line(line)?;
    let g = pencil.g().restrict_to_line(line)?;
    if f.degree() != Some(d) || g.degree() != Some(d) {
        return Err(OracleError::Precondition(
            "restriction dropped degree (line through a generator's infinity point)".into(),
        ));
    }
    if f.gcd(&g).degree() != Some(0) {
        return Err(OracleError::Precondition(
            "a base point lies on the line".into(),
        ));
    }
    Ok((f, g))
}

/// Count of pencil members tangent to a given line: roots in t of the
/// discriminant of the restricted member, 2d - 2 for a generic pencil and
/// line.
pub fn tangent_members_on_line(
    pencil: &CurvePencil,
    line: &LineParam,
    cfg: &OracleConfig,
) -> Result<u32, OracleError> {
    let d = pencil.degree();
    let expected = 2 * d - 2;
    let (f, g) = restrict_generators(pencil, line)?;
    let member = &MultiPoly::from_unipoly("s", &f)
        + &(&MultiPoly::var("t") * &MultiPoly::from_unipoly("s", &g));
    let disc = discriminant(&member, "s")?;
    let disc_t = disc
        .to_unipoly()
        .ok_or_else(|| OracleError::Precondition("discriminant not univariate in t".into()))?;
    if disc_t.degree() != Some(expected as usize) {
        return Err(OracleError::Precondition(format!(
            "discriminant degree {:?}, expected {expected}",
            disc_t.degree()
        )));
    }
    let clusters = root_clusters_exact(&disc_t, cfg)?;
    if clusters.iter().any(|c| c.multiplicity > 1) {
        return Err(OracleError::Precondition(
            "tangency parameters collided; configuration not generic".into(),
        ));
    }
    Ok(clusters.len() as u32)
}

/// Tangent-member count with internally drawn generic lines and retry.
pub fn count_tangent_members(pencil: &CurvePencil, cfg: &OracleConfig) -> Result<u32, OracleError> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x74616e67);
    let mut last = String::new();
    for _ in 0..cfg.retries {
        let line = draw_line(&mut rng);
        match tangent_members_on_line(pencil, &line, cfg) {
            Ok(n) => return Ok(n),
            Err(e) => last = e.to_string(),
        }
    }
    Err(OracleError::RetriesExhausted(
        cfg.retries,
        format!("tangent members: {last}"),
    ))
}

/// Count of singular members of the pencil: the number of distinct roots of
/// the exact degree-3(d-1)^2 eliminant of the three partials of f + t g,
/// 3(d-1)^2 for a generic pencil.
pub fn count_nodal_members(pencil: &CurvePencil, cfg: &OracleConfig) -> Result<u32, OracleError> {
    let d = pencil.degree();
    let expected = 3 * (d - 1) * (d - 1);
    let disc = pencil_discriminant(pencil.f().poly(), pencil.g().poly(), XYZ, "t")?;
    if disc.is_zero() {
        return Err(OracleError::Precondition(
            "pencil has a non-reduced member; eliminant vanished".into(),
        ));
    }
    if disc.degree() != Some(expected as usize) {
        return Err(OracleError::Precondition(format!(
            "singular-member eliminant has degree {:?}, expected {expected} \
             (a member at infinity is singular)",
            disc.degree()
        )));
    }
    let clusters = root_clusters_exact(&disc, cfg)?;
    if clusters.iter().any(|c| c.multiplicity > 1) {
        return Err(OracleError::Precondition(
            "a member has more than one node; pencil not generic".into(),
        ));
    }
    Ok(clusters.len() as u32)
}

/// The Hessian determinant of the symbolic member f + t g, a polynomial in
/// x, y, z and t (t-degree at most 3).
fn symbolic_member_hessian(pencil: &CurvePencil, t: &str) -> MultiPoly {
    let member = pencil.member_symbolic(t);
    let rows: Vec<Vec<MultiPoly>> = XYZ
        .iter()
        .map(|u| {
            XYZ.iter()
                .map(|v| member.derivative(u).derivative(v))
                .collect()
        })
        .collect();
    det3(&rows)
}

/// Count of points on a line that are flexes of the member through them:
/// roots of the numerator of Hess(f + t g)(p(s)) along t = -f(s)/g(s),
/// which has exact degree 6d - 6 for a generic pencil and line.
pub fn flex_points_on_line(
    pencil: &CurvePencil,
    line: &LineParam,
    cfg: &OracleConfig,
) -> Result<u32, OracleError> {
    let d = pencil.degree();
    if d < 3 {
        return Err(OracleError::Precondition(
            "flexes on members need degree >= 3".into(),
        ));
    }
    let expected = (6 * d - 6) as usize;
    let (f, g) = restrict_generators(pencil, line)?;
    let hess = symbolic_member_hessian(pencil, "t");
    // restrict the Hessian along the line, keeping t symbolic
    let [bx, by, bz] = line.base();
    let [dx, dy, dz] = line.direction();
    let s = MultiPoly::var("s");
    let sub = |b: &Rat, dv: &Rat| &MultiPoly::constant(b.clone()) + &s.scale(dv);
    let restricted = hess
        .substitute(X, &sub(bx, dx))
        .substitute(Y, &sub(by, dy))
        .substitute(Z, &sub(bz, dz));
    // numerator of the substitution t = -f/g: sum_k c_k(s) (-f)^k g^(3-k)
    let coeffs_t = restricted.as_univariate_in("t");
    if coeffs_t.len() > 4 {
        return Err(OracleError::Precondition(
            "member Hessian has unexpected parameter degree".into(),
        ));
    }
    let minus_f = -&f;
    let mut numerator = UniPoly::zero();
    for (k, ck) in coeffs_t.iter().enumerate() {
        let ck_s = ck
            .to_unipoly()
            .ok_or_else(|| OracleError::Precondition("restriction not univariate".into()))?;
        let term = &(&ck_s * &minus_f.pow(k as u32)) * &g.pow(3 - k as u32);
        numerator = &numerator + &term;
    }
    if numerator.degree() != Some(expected) {
        return Err(OracleError::Precondition(format!(
            "flex numerator degree {:?}, expected {expected}",
            numerator.degree()
        )));
    }
    let clusters = root_clusters_exact(&numerator, cfg)?;
    if clusters.iter().any(|c| c.multiplicity > 1) {
        return Err(OracleError::Precondition(
            "flex points collided on the line; configuration not generic".into(),
        ));
    }
    // verify a sample fiber: each root s0 gives a point whose member's
    // Hessian vanishes there by construction; check that g(s0) stays away
    // from zero so the member is honest
    for cl in clusters.iter().take(4) {
        let gval = eval_unipoly_complex(&g, cl.representative);
        if gval.norm() < cfg.residual_tol {
            return Err(OracleError::Precondition(
                "flex point collided with the member at infinity".into(),
            ));
        }
    }
    Ok(clusters.len() as u32)
}

/// Flex-point count with internally drawn generic lines and retry.
pub fn count_flex_points_on_line(
    pencil: &CurvePencil,
    cfg: &OracleConfig,
) -> Result<u32, OracleError> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x666c7073);
    let mut last = String::new();
    for _ in 0..cfg.retries {
        let line = draw_line(&mut rng);
        match flex_points_on_line(pencil, &line, cfg) {
            Ok(n) => return Ok(n),
            Err(e) => last = e.to_string(),
        }
    }
    Err(OracleError::RetriesExhausted(
        cfg.retries,
        format!("flex points on line: {last}"),
    ))
}

pub(crate) fn eval_unipoly_complex(p: &UniPoly, z: Complex64) -> Complex64 {
    let max = p
        .coeffs()
        .iter()
        .map(|c| c.to_f64().map(f64::abs).unwrap_or(f64::INFINITY))
        .fold(0.0f64, f64::max)
        .max(1.0);
    let mut acc = Complex64::ZERO;
    for c in p.coeffs().iter().rev() {
        acc = acc * z + Complex64::new(c.to_f64().unwrap_or(0.0) / max, 0.0);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::fixtures;

    fn cfg(seed: u64) -> OracleConfig {
        OracleConfig::with_seed(seed)
    }

    #[test]
    fn fermat_cubic_has_nine_flexes() {
        let n = count_flexes(&PlaneCurve::fermat_cubic(), &cfg(11)).unwrap();
        assert_eq!(n, 9);
    }

    #[test]
    fn conic_tangent_count_from_point() {
        let conic = fixtures::random_smooth_curve(2, 31, 10).unwrap();
        let n = count_tangents_from_point(
            &conic,
            &[
                Rat::from_integer(2.into()),
                Rat::from_integer(3.into()),
                Rat::from_integer(1.into()),
            ],
            &cfg(31),
        )
        .unwrap();
        assert_eq!(n, 2);
    }

    #[test]
    fn conic_pencil_tangent_members() {
        let p = CurvePencil::random(2, 17, 10).unwrap();
        assert_eq!(count_tangent_members(&p, &cfg(17)).unwrap(), 2);
    }

    #[test]
    fn conic_pencil_nodal_members() {
        let p = CurvePencil::random(2, 23, 10).unwrap();
        assert_eq!(count_nodal_members(&p, &cfg(23)).unwrap(), 3);
    }

    #[test]
    fn cubic_pencil_flex_points_on_line() {
        let p = CurvePencil::random(3, 29, 10).unwrap();
        assert_eq!(count_flex_points_on_line(&p, &cfg(29)).unwrap(), 12);
    }

    #[test]
    fn singular_input_is_rejected() {
        let nodal = PlaneCurve::from_monomials(&[(0, 2, 1, 1), (3, 0, 0, -1), (2, 0, 1, -1)])
            .unwrap();
        assert!(count_flexes(&nodal, &cfg(1)).is_err());
    }
}
