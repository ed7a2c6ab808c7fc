//! The named counts, degrees and genera, each produced by its own
//! derivation route.

use super::classes::{bitangent_class_s, flex_class_s, pullback_m};
use super::recursion::{
    bitangent_recursion_increment, solve_parity_recursion, tritangent_recursion_increment,
};
use super::{d, ipoly, InvariantError};
use crate::chow::{plane_model_genus, PsiClass};
use crate::exact::{Rat, UniPoly};

fn half() -> Rat {
    Rat::new(1.into(), 2.into())
}

/// Dimension of the incidence variety of (line, contact points, curve)
/// triples with contact orders `m`: N_d + 2 - sum (m_i - 1), with
/// N_d = d(d+3)/2; requires d + 1 >= sum m_i so that the fiber description
/// (points on a line imposing independent conditions) applies.
pub fn incidence_dimension(m: &[u32], degree: i64) -> Result<i64, InvariantError> {
    if m.is_empty() || m.iter().any(|&mi| mi < 2) {
        return Err(InvariantError::Precondition(
            "contact orders must all be >= 2".into(),
        ));
    }
    let total: i64 = m.iter().map(|&mi| mi as i64).sum();
    if degree + 1 < total {
        return Err(InvariantError::Precondition(format!(
            "need d + 1 >= sum(m_i) = {total}, got d = {degree}"
        )));
    }
    let n_d = degree * (degree + 3) / 2;
    Ok(n_d + 2 - (total - m.len() as i64))
}

/// Total Chern class of the bundle of principal parts of order `level`
/// along lines: the product over k = 0..=level of (1 + (d-2k) zeta + k s1).
pub fn principal_parts_chern(level: u32) -> PsiClass {
    let mut acc = PsiClass::one();
    for k in 0..=level {
        let dk = &d() - &UniPoly::from_i64(2 * k as i64);
        let factor = &(&PsiClass::one() + &PsiClass::zeta().scale(&dk))
            + &PsiClass::sigma1().scale(&UniPoly::from_i64(k as i64));
        acc = &acc * &factor;
    }
    acc
}

/// Degree of the hyperflex locus: top Chern class of the order-3 principal
/// parts bundle, 18d^2 - 66d + 36 = 6(d-3)(3d-2).
pub fn hyperflex_degree() -> UniPoly {
    principal_parts_chern(3).degree_map()
}

/// Degrees of the flex-point curve and the flex-line curve of a pencil:
/// c_2 of the order-2 bundle paired with zeta and with s1, giving
/// (6d - 6, 3d(d-2)).
pub fn flex_degrees() -> (UniPoly, UniPoly) {
    let c2 = principal_parts_chern(2).graded_part(2);
    let against_zeta = (&c2 * &PsiClass::zeta()).degree_map();
    let against_sigma = (&c2 * &PsiClass::sigma1()).degree_map();
    (against_zeta, against_sigma)
}

/// Geometric genus of the flex curves, 12d^2 - 39d + 25: quoted from the
/// classical computation, consumed by the Severi route.
pub fn flex_curve_genus() -> UniPoly {
    ipoly(&[25, -39, 12])
}

/// Genus of the branch curve of the tangency cover: the flex-curve genus
/// drops by one per base point, 11d^2 - 39d + 25.
pub fn branch_curve_genus() -> UniPoly {
    &flex_curve_genus() - &d().pow(2)
}

/// Euler number of the tangency surface, 3 + d^2 + 3(d-1)^2.
pub fn euler_surface() -> UniPoly {
    let nodes = (&d() - &UniPoly::one()).pow(2).scale(&Rat::from_integer(3.into()));
    &(&UniPoly::from_i64(3) + &d().pow(2)) + &nodes
}

/// Number of singular members of a general pencil, 3(d-1)^2.
pub fn nodal_fiber_count() -> UniPoly {
    (&d() - &UniPoly::one()).pow(2).scale(&Rat::from_integer(3.into()))
}

/// Degree of the tangency cover of the dual plane, 2d - 2.
pub fn tangency_cover_degree() -> UniPoly {
    ipoly(&[-2, 2])
}

/// Cusp count of the branch curve by Severi's formula for a finite cover of
/// surfaces: kappa = 2 p_g(B) - 2 - e(S) + (2d-2) e(dual plane). Equals the
/// hyperflex degree, which is the cross-derivation the suite asserts.
pub fn severi_cusp_count() -> UniPoly {
    let two_pg = branch_curve_genus().scale(&Rat::from_integer(2.into()));
    let cover_euler = tangency_cover_degree().scale(&Rat::from_integer(3.into()));
    &(&(&two_pg - &UniPoly::from_i64(2)) - &euler_surface()) + &cover_euler
}

/// Which derivation the bitangent-line degree uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BitangentLineRoute {
    /// Pair the bitangent class with the pulled-back dual line class and
    /// halve (the curve is hit twice, once per contact point).
    ChernClass,
    /// Solve the conic degeneration recursion from the degree 2, 3 bases.
    Recursion,
}

/// Degree of the curve of bitangent lines, 2d(d-2)(d-3), by either route.
pub fn bitangent_line_degree(route: BitangentLineRoute) -> Result<UniPoly, InvariantError> {
    match route {
        BitangentLineRoute::ChernClass => {
            Ok(bitangent_class_s().pair(&pullback_m()).scale(&half()))
        }
        BitangentLineRoute::Recursion => solve_parity_recursion(
            &bitangent_recursion_increment().total(),
            [(2, 0), (3, 0)],
            "bitangent line degree",
        ),
    }
}

/// Sum of the two degrees of a correspondence on a rational curve: its
/// number of coincidence points.
pub fn correspondence_coincidences(a: &UniPoly, b: &UniPoly) -> UniPoly {
    a + b
}

/// Divisors of the point pencil of lines contained in a divisor of the
/// degree-(2d-4) series a pencil cuts on a conic: 2d - 5.
pub fn inscribed_g12_count() -> UniPoly {
    ipoly(&[-5, 2])
}

/// Degree of the curve of contact points of tangents from a general point:
/// (d(d-1) + d^2)/d = 2d - 1, with the division checked exactly.
pub fn contact_point_curve_degree() -> Result<UniPoly, InvariantError> {
    let numerator = &(&d() * &ipoly(&[-1, 1])) + &d().pow(2);
    numerator
        .exact_div(&d())
        .map_err(|_| InvariantError::Divisibility("contact point curve degree".into()))
}

/// Multiplicities with which degenerate bitangents count, and the
/// Hurwitz-derived multiplicities of the bitangent-point curve at base
/// points and nodes.
#[derive(Clone, Debug)]
pub struct ImproperMultiplicities {
    /// An improper bitangent (through a node, tangent elsewhere) counts twice.
    pub nu: u32,
    /// A line through two nodes counts four times.
    pub mu: u32,
    /// (d-3)(d+4) = d^2 + d - 12: bitangency count at a base point.
    pub e_b: UniPoly,
    /// d^2 - d - 6: bitangency count at a node.
    pub e_n: UniPoly,
}

/// nu = 2, mu = 4, and the Hurwitz ramification counts e_b, e_n for the
/// degree-(d-2) covers cut out by the lines through a base point (genus
/// d(d-1)/2 - 3) and through a node (genus (d-1)(d-2)/2 - 1).
pub fn improper_multiplicities() -> ImproperMultiplicities {
    let cover_degree = ipoly(&[-2, 1]);
    let base_genus = &(&d() * &ipoly(&[-1, 1])).scale(&half()) - &UniPoly::from_i64(3);
    let node_genus =
        &(&ipoly(&[-1, 1]) * &ipoly(&[-2, 1])).scale(&half()) - &UniPoly::one();
    ImproperMultiplicities {
        nu: 2,
        mu: 4,
        e_b: hurwitz_ramification(&base_genus, &cover_degree),
        e_n: hurwitz_ramification(&node_genus, &cover_degree),
    }
}

/// Total ramification of a degree-n cover of a rational curve by a genus-g
/// curve: R = 2g - 2 + 2n.
pub fn hurwitz_ramification(genus: &UniPoly, degree: &UniPoly) -> UniPoly {
    &(&genus.scale(&Rat::from_integer(2.into())) - &UniPoly::from_i64(2))
        + &degree.scale(&Rat::from_integer(2.into()))
}

/// Inverse of the Hurwitz count: g = (R + 2)/2 - n.
pub fn hurwitz_genus(degree: &UniPoly, ramification: &UniPoly) -> UniPoly {
    &(ramification + &UniPoly::from_i64(2)).scale(&half()) - degree
}

/// Hurwitz genus with an integrality check at integer degrees 3..=40.
pub fn hurwitz_genus_checked(
    degree: &UniPoly,
    ramification: &UniPoly,
    what: &'static str,
) -> Result<UniPoly, InvariantError> {
    let g = hurwitz_genus(degree, ramification);
    if !g.integer_valued_on(3, 40) {
        return Err(InvariantError::NonIntegral(what));
    }
    Ok(g)
}

/// Classical flex count 3d(d-2).
pub fn plucker_flexes() -> UniPoly {
    (&d() * &ipoly(&[-2, 1])).scale(&Rat::from_integer(3.into()))
}

/// Classical bitangent count d(d-2)(d^2-9)/2.
pub fn plucker_bitangents() -> UniPoly {
    let num = &(&d() * &ipoly(&[-2, 1])) * &ipoly(&[-9, 0, 1]);
    num.scale(&half())
}

/// Degree of the dual curve, d(d-1).
pub fn dual_degree() -> UniPoly {
    &d() * &ipoly(&[-1, 1])
}

/// Which derivation the bitangent-point degree uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BitangentPointRoute {
    /// H-coefficient of the bitangent class on the tangency surface.
    SurfaceClass,
    /// Plane counting: [2 * (bitangents per member) + d^2 e_b] / d.
    PlaneCount,
}

/// Degree of the curve of bitangency points, (d-3)(2d^2+5d-6).
pub fn bitangent_point_degree(route: BitangentPointRoute) -> Result<UniPoly, InvariantError> {
    match route {
        BitangentPointRoute::SurfaceClass => Ok(bitangent_class_s().h),
        BitangentPointRoute::PlaneCount => {
            let twice_bitangents = plucker_bitangents().scale(&Rat::from_integer(2.into()));
            let base_part = &d().pow(2) * &improper_multiplicities().e_b;
            (&twice_bitangents + &base_part)
                .exact_div(&d())
                .map_err(|_| InvariantError::Divisibility("bitangent point degree".into()))
        }
    }
}

/// Which derivation the bitangent-point arithmetic genus uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BitangentPointGenusRoute {
    /// Adjunction on the tangency surface.
    Adjunction,
    /// Plane-model degree/multiple-point arithmetic.
    PlaneModel,
}

/// Arithmetic genus of the bitangent-point curve,
/// 3d^5 - 19d^4 + 14d^3 + 120d^2 - 240d + 73.
pub fn bitangent_point_pa(route: BitangentPointGenusRoute) -> UniPoly {
    match route {
        BitangentPointGenusRoute::Adjunction => bitangent_class_s().adjunction_genus(),
        BitangentPointGenusRoute::PlaneModel => {
            let b = bitangent_class_s();
            let base_points = (d().pow(2), b.eb);
            let node_points = (nodal_fiber_count(), b.en);
            plane_model_genus(&b.h, &[base_points, node_points])
        }
    }
}

/// Degree of the flex-bitangent locus: the bitangent and flex curves on the
/// tangency surface meet in the flex bitangents plus the hyperflexes doubled
/// (hyperflexes are cusps of the flex curve), so the count is
/// B . D - 2 deg H_(4) = 3(d^2+6d-4)(d-3)(d-4).
pub fn flex_bitangent_degree() -> UniPoly {
    let meet = bitangent_class_s().pair(&flex_class_s());
    &meet - &hyperflex_degree().scale(&Rat::from_integer(2.into()))
}

/// The classical claim 3(d-4)(3d^3+5d^2-32d+18) for the flex-bitangent
/// degree, kept only to exhibit the disagreement (first at d = 5).
pub fn salmon_claimed_formula() -> UniPoly {
    (&ipoly(&[-4, 1]) * &ipoly(&[18, -32, 5, 3])).scale(&Rat::from_integer(3.into()))
}

/// Total ramification of the projection of the bitangent curve to the
/// pencil: hyperflexes (simple branch points), node tangents (two double
/// branch points per line, over 3(d-1)^2 nodal members), and flex
/// bitangents (contributing 4 each).
pub fn bitangent_curve_ramification() -> UniPoly {
    let node_part = &nodal_fiber_count().scale(&Rat::from_integer(2.into()))
        * &improper_multiplicities().e_n;
    let flex_bit_part = flex_bitangent_degree().scale(&Rat::from_integer(4.into()));
    &(&hyperflex_degree() + &node_part) + &flex_bit_part
}

/// Geometric genus of the bitangent curve by Hurwitz over the pencil:
/// 8d^4 - 13d^3 - 195d^2 + 582d - 287. The cover degree is d(d-2)(d^2-9)
/// (each bitangent line appears twice).
pub fn bitangent_curve_pg() -> Result<UniPoly, InvariantError> {
    let cover = plucker_bitangents().scale(&Rat::from_integer(2.into()));
    hurwitz_genus_checked(&cover, &bitangent_curve_ramification(), "bitangent curve genus")
}

/// Which derivation the tritangent degree uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TritangentRoute {
    /// (p_a - p_g)/3 of the bitangent curve: each tritangent produces three
    /// nodes.
    GenusDefect,
    /// Conic degeneration recursion from the degree 3, 4 bases.
    Recursion,
}

/// Degree of the tritangent locus, (d^2+3d-2)(d-3)(d-4)(d-5).
pub fn tritangent_degree(route: TritangentRoute) -> Result<UniPoly, InvariantError> {
    match route {
        TritangentRoute::GenusDefect => {
            let defect =
                &bitangent_point_pa(BitangentPointGenusRoute::Adjunction) - &bitangent_curve_pg()?;
            let third = defect.scale(&Rat::new(1.into(), 3.into()));
            if !third.integer_valued_on(3, 40) {
                return Err(InvariantError::Divisibility(
                    "genus defect is not divisible by 3".into(),
                ));
            }
            Ok(third)
        }
        TritangentRoute::Recursion => solve_parity_recursion(
            &tritangent_recursion_increment(),
            [(3, 0), (4, 0)],
            "tritangent degree",
        ),
    }
}

/// Geometric genus of the curve of bitangent lines: the bitangent curve is
/// a double cover of it branched at the hyperflexes, so
/// p_g = (2 p_g(B) - 2 - deg H_(4) + 4)/4
///     = 4d^4 - (13/2)d^3 - 102d^2 + (615/2)d - 152.
pub fn bitangent_line_genus() -> Result<UniPoly, InvariantError> {
    let two_pg = bitangent_curve_pg()?.scale(&Rat::from_integer(2.into()));
    let num = &(&two_pg - &UniPoly::from_i64(2)) - &hyperflex_degree();
    let g = (&num + &UniPoly::from_i64(4)).scale(&Rat::new(1.into(), 4.into()));
    if !g.integer_valued_on(4, 40) {
        return Err(InvariantError::NonIntegral("bitangent line genus"));
    }
    Ok(g)
}

/// Predicted count of extra nodes of the bitangent-line curve beyond the
/// triple points from tritangents: p_a - 3 * (tritangent count) - p_g,
/// a sextic in d. (At d = 3 it evaluates to 0; the suite flags the
/// divergent classical expectation of 12 as an informational row.)
pub fn extra_node_prediction() -> Result<UniPoly, InvariantError> {
    let m_degree = bitangent_line_degree(BitangentLineRoute::ChernClass)?;
    let tritangents = tritangent_degree(TritangentRoute::GenusDefect)?;
    let pa_minus_triples = plane_model_genus(&m_degree, &[(tritangents, UniPoly::from_i64(3))]);
    Ok(&pa_minus_triples - &bitangent_line_genus()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_i64;

    #[test]
    fn incidence_dimension_cases() {
        assert_eq!(incidence_dimension(&[3], 4).unwrap(), 14);
        assert_eq!(incidence_dimension(&[2, 2, 2], 6).unwrap(), 26);
        assert_eq!(incidence_dimension(&[2], 2).unwrap(), 6);
        assert!(incidence_dimension(&[2, 2, 2], 4).is_err());
        assert!(incidence_dimension(&[1], 4).is_err());
    }

    #[test]
    fn principal_parts_level_zero() {
        let c = principal_parts_chern(0);
        let expected = &PsiClass::one() + &PsiClass::zeta().scale(&d());
        assert_eq!(c, expected);
    }

    #[test]
    fn principal_parts_level_two_degree_two_part() {
        // pre-reduction display (3d^2-12d+8) z^2 + (6d-8) z s1 + 2 s1^2
        // must reduce to the computed c_2.
        let c2 = principal_parts_chern(2).graded_part(2);
        let display = &(&PsiClass::monomial(ipoly(&[8, -12, 3]), 0, 2)
            + &PsiClass::monomial(ipoly(&[-8, 6]), 1, 1))
            + &PsiClass::monomial(UniPoly::from_i64(2), 2, 0);
        assert_eq!(c2, display);
    }

    #[test]
    fn hyperflex_degree_expands_and_factors() {
        let h = hyperflex_degree();
        assert_eq!(h, ipoly(&[36, -66, 18]));
        let factored = (&ipoly(&[-3, 1]) * &ipoly(&[-2, 3])).scale(&rat_i64(6));
        assert_eq!(h, factored);
        assert_eq!(h.eval_i64(3), rat_i64(0));
        assert_eq!(h.eval_i64(4), rat_i64(60));
        assert_eq!(h.eval_i64(5), rat_i64(156));
    }

    #[test]
    fn flex_degrees_match_closed_forms() {
        let (points_on_line, lines_through_point) = flex_degrees();
        assert_eq!(points_on_line, ipoly(&[-6, 6]));
        assert_eq!(lines_through_point, ipoly(&[0, -6, 3]));
        assert_eq!(lines_through_point, plucker_flexes());
        assert_eq!(points_on_line.eval_i64(3), rat_i64(12));
        assert_eq!(lines_through_point.eval_i64(3), rat_i64(9));
        assert_eq!(points_on_line.eval_i64(4), rat_i64(18));
        assert_eq!(lines_through_point.eval_i64(4), rat_i64(24));
    }

    #[test]
    fn severi_route_equals_chern_route() {
        assert_eq!(severi_cusp_count(), hyperflex_degree());
        assert_eq!(severi_cusp_count().eval_i64(4), rat_i64(60));
        assert_eq!(severi_cusp_count().eval_i64(3), rat_i64(0));
    }

    #[test]
    fn flex_curve_genus_values() {
        assert_eq!(flex_curve_genus().eval_i64(3), rat_i64(16));
        assert_eq!(flex_curve_genus().eval_i64(4), rat_i64(61));
        assert_eq!(branch_curve_genus(), ipoly(&[25, -39, 11]));
    }

    #[test]
    fn euler_and_fiber_counts() {
        assert_eq!(euler_surface().eval_i64(1), rat_i64(4));
        assert_eq!(nodal_fiber_count().eval_i64(4), rat_i64(27));
        assert_eq!(tangency_cover_degree().eval_i64(2), rat_i64(2));
    }

    #[test]
    fn bitangent_line_degree_routes_agree() {
        let chern = bitangent_line_degree(BitangentLineRoute::ChernClass).unwrap();
        let rec = bitangent_line_degree(BitangentLineRoute::Recursion).unwrap();
        assert_eq!(chern, rec);
        // 2d(d-2)(d-3)
        let closed = (&(&d() * &ipoly(&[-2, 1])) * &ipoly(&[-3, 1])).scale(&rat_i64(2));
        assert_eq!(chern, closed);
        assert_eq!(chern.eval_i64(3), rat_i64(0));
        assert_eq!(chern.eval_i64(4), rat_i64(16));
        assert_eq!(chern.eval_i64(5), rat_i64(60));
    }

    #[test]
    fn correspondence_and_g12_counts() {
        let a = (&ipoly(&[-2, 1]) * &ipoly(&[-3, 1])).scale(&rat_i64(2));
        let b = (&ipoly(&[-2, 1]) * &ipoly(&[-3, 1])).scale(&rat_i64(4));
        let sum = correspondence_coincidences(&a, &b);
        assert_eq!(sum, (&ipoly(&[-2, 1]) * &ipoly(&[-3, 1])).scale(&rat_i64(6)));
        assert_eq!(inscribed_g12_count().eval_i64(4), rat_i64(3));
        assert_eq!(contact_point_curve_degree().unwrap(), ipoly(&[-1, 2]));
        assert_eq!(contact_point_curve_degree().unwrap().eval_i64(3), rat_i64(5));
    }

    #[test]
    fn hurwitz_and_improper_multiplicities() {
        let im = improper_multiplicities();
        assert_eq!(im.nu, 2);
        assert_eq!(im.mu, 4);
        assert_eq!(im.e_b, ipoly(&[-12, 1, 1]));
        assert_eq!(im.e_n, ipoly(&[-6, -1, 1]));
        assert_eq!(im.e_b.eval_i64(4), rat_i64(8));
        assert_eq!(im.e_n.eval_i64(4), rat_i64(6));
        // isomorphism has no ramification
        assert!(hurwitz_ramification(&UniPoly::zero(), &UniPoly::one()).is_zero());
        // e-coefficients of the bitangent class match
        let b = bitangent_class_s();
        assert_eq!(b.eb, im.e_b);
        assert_eq!(b.en, im.e_n);
    }

    #[test]
    fn nodal_quartic_bitangent_budget() {
        // 16 proper + 2 * 6 improper = 28 = plucker count at d = 4
        let im = improper_multiplicities();
        let improper = im.e_n.eval_i64(4);
        let total = plucker_bitangents().eval_i64(4);
        assert_eq!(total, rat_i64(28));
        assert_eq!(improper, rat_i64(6));
        assert_eq!(total - rat_i64(im.nu as i64) * improper, rat_i64(16));
    }

    #[test]
    fn plucker_values() {
        assert_eq!(plucker_bitangents().eval_i64(4), rat_i64(28));
        assert_eq!(plucker_flexes().eval_i64(3), rat_i64(9));
        assert_eq!(dual_degree().eval_i64(2), rat_i64(2));
    }

    #[test]
    fn bitangent_point_degree_routes() {
        let via_class = bitangent_point_degree(BitangentPointRoute::SurfaceClass).unwrap();
        let via_plane = bitangent_point_degree(BitangentPointRoute::PlaneCount).unwrap();
        assert_eq!(via_class, via_plane);
        assert_eq!(via_class, &ipoly(&[-3, 1]) * &ipoly(&[-6, 5, 2]));
        assert_eq!(via_class.eval_i64(4), rat_i64(46));
        assert_eq!(via_class.eval_i64(3), rat_i64(0));
    }

    #[test]
    fn bitangent_point_genus_routes() {
        let adj = bitangent_point_pa(BitangentPointGenusRoute::Adjunction);
        let pm = bitangent_point_pa(BitangentPointGenusRoute::PlaneModel);
        assert_eq!(adj, pm);
        assert_eq!(adj, ipoly(&[73, -240, 120, 14, -19, 3]));
        assert_eq!(adj.eval_i64(4), rat_i64(137));
    }

    #[test]
    fn flex_bitangent_against_classical_claim() {
        let ours = flex_bitangent_degree();
        assert_eq!(ours, ipoly(&[-144, 300, -102, -3, 3]));
        let factored = (&(&ipoly(&[-4, 6, 1]) * &ipoly(&[-3, 1])) * &ipoly(&[-4, 1]))
            .scale(&rat_i64(3));
        assert_eq!(ours, factored);
        assert_eq!(ours.eval_i64(4), rat_i64(0));
        assert_eq!(ours.eval_i64(5), rat_i64(306));
        assert_eq!(ours.eval_i64(6), rat_i64(1224));
        let salmon = salmon_claimed_formula();
        assert_ne!(ours, salmon);
        assert_eq!(ours.eval_i64(4), salmon.eval_i64(4));
        assert_eq!(salmon.eval_i64(5), rat_i64(1074));
    }

    #[test]
    fn ramification_is_the_sum_of_contributions() {
        assert_eq!(
            bitangent_curve_ramification(),
            ipoly(&[-576, 1200, -408, -30, 18])
        );
    }

    #[test]
    fn bitangent_curve_genus() {
        let pg = bitangent_curve_pg().unwrap();
        assert_eq!(pg, ipoly(&[-287, 582, -195, -13, 8]));
        assert_eq!(pg.eval_i64(4), rat_i64(137));
        assert_eq!(
            pg.eval_i64(4),
            bitangent_point_pa(BitangentPointGenusRoute::Adjunction).eval_i64(4)
        );
    }

    #[test]
    fn tritangent_routes_agree() {
        let gd = tritangent_degree(TritangentRoute::GenusDefect).unwrap();
        let rec = tritangent_degree(TritangentRoute::Recursion).unwrap();
        assert_eq!(gd, rec);
        let closed = &(&ipoly(&[-2, 3, 1]) * &ipoly(&[-3, 1])) * &(&ipoly(&[-4, 1]) * &ipoly(&[-5, 1]));
        assert_eq!(gd, closed);
        assert_eq!(gd.eval_i64(5), rat_i64(0));
        assert_eq!(gd.eval_i64(6), rat_i64(312));
        // p_a - p_g = 3d^5 - 27d^4 + 27d^3 + 315d^2 - 822d + 360
        let defect = &bitangent_point_pa(BitangentPointGenusRoute::Adjunction)
            - &bitangent_curve_pg().unwrap();
        assert_eq!(defect, ipoly(&[360, -822, 315, 27, -27, 3]));
    }

    #[test]
    fn bitangent_line_genus_and_extra_nodes() {
        let g = bitangent_line_genus().unwrap();
        let expected = UniPoly::from_coeffs(vec![
            rat_i64(-152),
            Rat::new(615.into(), 2.into()),
            rat_i64(-102),
            Rat::new((-13).into(), 2.into()),
            rat_i64(4),
        ]);
        assert_eq!(g, expected);
        assert_eq!(g.eval_i64(4), rat_i64(54));
        let extra = extra_node_prediction().unwrap();
        let sextic = UniPoly::from_coeffs(vec![
            rat_i64(-207),
            Rat::new(993.into(), 2.into()),
            rat_i64(-126),
            Rat::new((-287).into(), 2.into()),
            rat_i64(97),
            rat_i64(-23),
            rat_i64(2),
        ]);
        assert_eq!(extra, sextic);
        assert_eq!(extra.eval_i64(4), rat_i64(51));
        assert_eq!(extra.eval_i64(3), rat_i64(0));
    }
}
