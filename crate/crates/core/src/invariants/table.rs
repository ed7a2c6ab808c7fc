//! The invariant table: one row per (invariant, derivation route), with the
//! symbolic value, a factored display form that re-expands to it, per-degree
//! evaluations, and the cross-route agreement status.

use super::formulas::*;
use super::{ipoly, InvariantError};
use crate::exact::{Rat, UniPoly};
use serde::Serialize;
use std::fmt;

/// Stable identifiers for the tabulated invariants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InvariantId {
    HyperflexDegree,
    FlexBitangentDegree,
    TritangentDegree,
    FlexPointCurveDegree,
    FlexLineCurveDegree,
    FlexCurveGenus,
    BitangentLineDegree,
    BitangentLineGenus,
    BitangentPointDegree,
    BitangentPointArithmeticGenus,
    BitangentCurveGeometricGenus,
    ExtraNodePrediction,
    DualDegree,
    PluckerBitangentCount,
    EulerCharSurface,
    NodalMemberCount,
    TangencyCoverDegree,
    BasePointBitangencyCount,
    NodeBitangencyCount,
    SalmonFlexBitangentClaim,
}

impl fmt::Display for InvariantId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            InvariantId::HyperflexDegree => "hyperflex_degree",
            InvariantId::FlexBitangentDegree => "flex_bitangent_degree",
            InvariantId::TritangentDegree => "tritangent_degree",
            InvariantId::FlexPointCurveDegree => "flex_point_curve_degree",
            InvariantId::FlexLineCurveDegree => "flex_line_curve_degree",
            InvariantId::FlexCurveGenus => "flex_curve_genus",
            InvariantId::BitangentLineDegree => "bitangent_line_degree",
            InvariantId::BitangentLineGenus => "bitangent_line_genus",
            InvariantId::BitangentPointDegree => "bitangent_point_degree",
            InvariantId::BitangentPointArithmeticGenus => "bitangent_point_pa",
            InvariantId::BitangentCurveGeometricGenus => "bitangent_curve_pg",
            InvariantId::ExtraNodePrediction => "extra_node_prediction",
            InvariantId::DualDegree => "dual_degree",
            InvariantId::PluckerBitangentCount => "plucker_bitangents",
            InvariantId::EulerCharSurface => "euler_surface",
            InvariantId::NodalMemberCount => "nodal_member_count",
            InvariantId::TangencyCoverDegree => "tangency_cover_degree",
            InvariantId::BasePointBitangencyCount => "base_point_bitangency",
            InvariantId::NodeBitangencyCount => "node_bitangency",
            InvariantId::SalmonFlexBitangentClaim => "salmon_flex_bitangent_claim",
        };
        f.write_str(s)
    }
}

/// Which derivation produced a row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Derivation {
    Chern,
    Severi,
    Recursion,
    DoublePoint,
    Hurwitz,
    GenusDefect,
    ClosedForm,
    Elementary,
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Derivation::Chern => "chern",
            Derivation::Severi => "severi",
            Derivation::Recursion => "recursion",
            Derivation::DoublePoint => "double_point",
            Derivation::Hurwitz => "hurwitz",
            Derivation::GenusDefect => "genus_defect",
            Derivation::ClosedForm => "closed_form",
            Derivation::Elementary => "elementary",
        };
        f.write_str(s)
    }
}

/// A product of polynomial factors with a rational scalar; `expand` must
/// reproduce the row value exactly.
#[derive(Clone, Debug)]
pub struct FactoredPoly {
    pub scalar: Rat,
    pub factors: Vec<(UniPoly, u32)>,
}

impl FactoredPoly {
    pub fn new(scalar: i64, factors: &[&UniPoly]) -> Self {
        FactoredPoly {
            scalar: Rat::from_integer(scalar.into()),
            factors: factors.iter().map(|&f| (f.clone(), 1)).collect(),
        }
    }

    pub fn expand(&self) -> UniPoly {
        let mut acc = UniPoly::constant(self.scalar.clone());
        for (f, e) in &self.factors {
            acc = &acc * &f.pow(*e);
        }
        acc
    }
}

impl fmt::Display for FactoredPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use num_traits::One;
        let mut wrote = false;
        if !self.scalar.is_one() || self.factors.is_empty() {
            write!(f, "{}", crate::exact::format_rat(&self.scalar))?;
            wrote = true;
        }
        for (p, e) in &self.factors {
            if wrote {
                write!(f, "*")?;
            }
            write!(f, "({})", p.display("d"))?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
            wrote = true;
        }
        Ok(())
    }
}

/// One verification row of the symbolic table.
#[derive(Clone, Debug)]
pub struct InvariantRow {
    pub invariant: InvariantId,
    pub derivation: Derivation,
    pub value: UniPoly,
    pub factored: Option<FactoredPoly>,
    pub evaluations: Vec<(i64, Rat)>,
    pub routes_agree: bool,
}

fn dm(k: i64) -> UniPoly {
    ipoly(&[-k, 1])
}

/// All invariants, every available derivation route, evaluated at each
/// degree in `d_min..=d_max` and symbolically; `routes_agree` records
/// exact equality across the routes of the same invariant.
pub fn invariant_table(d_min: i64, d_max: i64) -> Result<Vec<InvariantRow>, InvariantError> {
    if d_min < 3 || d_min > d_max {
        return Err(InvariantError::Precondition(format!(
            "need 3 <= d_min <= d_max, got {d_min}..{d_max}"
        )));
    }

    let mut rows: Vec<InvariantRow> = Vec::new();
    let mut push_group =
        |invariant: InvariantId,
         routes: Vec<(Derivation, UniPoly)>,
         factored: Option<FactoredPoly>| {
            let agree = routes.windows(2).all(|w| w[0].1 == w[1].1);
            let factored_ok = factored
                .as_ref()
                .map(|f| f.expand() == routes[0].1)
                .unwrap_or(true);
            for (derivation, value) in routes {
                let evaluations = (d_min..=d_max).map(|k| (k, value.eval_i64(k))).collect();
                rows.push(InvariantRow {
                    invariant,
                    derivation,
                    value,
                    factored: factored.clone(),
                    evaluations,
                    routes_agree: agree && factored_ok,
                });
            }
        };

    let hyper = hyperflex_degree();
    push_group(
        InvariantId::HyperflexDegree,
        vec![
            (Derivation::Chern, hyper.clone()),
            (Derivation::Severi, severi_cusp_count()),
        ],
        Some(FactoredPoly::new(6, &[&dm(3), &ipoly(&[-2, 3])])),
    );

    push_group(
        InvariantId::FlexBitangentDegree,
        vec![(Derivation::DoublePoint, flex_bitangent_degree())],
        Some(FactoredPoly::new(3, &[&ipoly(&[-4, 6, 1]), &dm(3), &dm(4)])),
    );

    push_group(
        InvariantId::TritangentDegree,
        vec![
            (
                Derivation::GenusDefect,
                tritangent_degree(TritangentRoute::GenusDefect)?,
            ),
            (
                Derivation::Recursion,
                tritangent_degree(TritangentRoute::Recursion)?,
            ),
        ],
        Some(FactoredPoly::new(
            1,
            &[&ipoly(&[-2, 3, 1]), &dm(3), &dm(4), &dm(5)],
        )),
    );

    let (flex_points, flex_lines) = flex_degrees();
    push_group(
        InvariantId::FlexPointCurveDegree,
        vec![(Derivation::Chern, flex_points)],
        Some(FactoredPoly::new(6, &[&dm(1)])),
    );
    push_group(
        InvariantId::FlexLineCurveDegree,
        vec![(Derivation::Chern, flex_lines)],
        Some(FactoredPoly::new(3, &[&ipoly(&[0, 1]), &dm(2)])),
    );
    push_group(
        InvariantId::FlexCurveGenus,
        vec![(Derivation::ClosedForm, flex_curve_genus())],
        None,
    );

    push_group(
        InvariantId::BitangentLineDegree,
        vec![
            (
                Derivation::Chern,
                bitangent_line_degree(BitangentLineRoute::ChernClass)?,
            ),
            (
                Derivation::Recursion,
                bitangent_line_degree(BitangentLineRoute::Recursion)?,
            ),
        ],
        Some(FactoredPoly::new(2, &[&ipoly(&[0, 1]), &dm(2), &dm(3)])),
    );

    push_group(
        InvariantId::BitangentLineGenus,
        vec![(Derivation::Hurwitz, bitangent_line_genus()?)],
        None,
    );

    push_group(
        InvariantId::BitangentPointDegree,
        vec![
            (
                Derivation::DoublePoint,
                bitangent_point_degree(BitangentPointRoute::SurfaceClass)?,
            ),
            (
                Derivation::Elementary,
                bitangent_point_degree(BitangentPointRoute::PlaneCount)?,
            ),
        ],
        Some(FactoredPoly::new(1, &[&dm(3), &ipoly(&[-6, 5, 2])])),
    );

    push_group(
        InvariantId::BitangentPointArithmeticGenus,
        vec![
            (
                Derivation::DoublePoint,
                bitangent_point_pa(BitangentPointGenusRoute::Adjunction),
            ),
            (
                Derivation::Elementary,
                bitangent_point_pa(BitangentPointGenusRoute::PlaneModel),
            ),
        ],
        None,
    );

    push_group(
        InvariantId::BitangentCurveGeometricGenus,
        vec![(Derivation::Hurwitz, bitangent_curve_pg()?)],
        None,
    );

    push_group(
        InvariantId::ExtraNodePrediction,
        vec![(Derivation::GenusDefect, extra_node_prediction()?)],
        None,
    );

    push_group(
        InvariantId::DualDegree,
        vec![(Derivation::ClosedForm, dual_degree())],
        Some(FactoredPoly::new(1, &[&ipoly(&[0, 1]), &dm(1)])),
    );
    push_group(
        InvariantId::PluckerBitangentCount,
        vec![(Derivation::ClosedForm, plucker_bitangents())],
        None,
    );
    push_group(
        InvariantId::EulerCharSurface,
        vec![(Derivation::ClosedForm, euler_surface())],
        None,
    );
    push_group(
        InvariantId::NodalMemberCount,
        vec![(Derivation::ClosedForm, nodal_fiber_count())],
        Some(FactoredPoly {
            scalar: Rat::from_integer(3.into()),
            factors: vec![(dm(1), 2)],
        }),
    );
    push_group(
        InvariantId::TangencyCoverDegree,
        vec![(Derivation::ClosedForm, tangency_cover_degree())],
        Some(FactoredPoly::new(2, &[&dm(1)])),
    );

    let improper = improper_multiplicities();
    push_group(
        InvariantId::BasePointBitangencyCount,
        vec![
            (Derivation::Hurwitz, improper.e_b.clone()),
            (Derivation::DoublePoint, super::classes::bitangent_class_s().eb),
        ],
        Some(FactoredPoly::new(1, &[&dm(3), &ipoly(&[4, 1])])),
    );
    push_group(
        InvariantId::NodeBitangencyCount,
        vec![
            (Derivation::Hurwitz, improper.e_n.clone()),
            (Derivation::DoublePoint, super::classes::bitangent_class_s().en),
        ],
        Some(FactoredPoly::new(1, &[&dm(3), &ipoly(&[2, 1])])),
    );

    push_group(
        InvariantId::SalmonFlexBitangentClaim,
        vec![(Derivation::ClosedForm, salmon_claimed_formula())],
        Some(FactoredPoly::new(3, &[&dm(4), &ipoly(&[18, -32, 5, 3])])),
    );

    rows.sort_by(|a, b| (a.invariant, a.derivation).cmp(&(b.invariant, b.derivation)));
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_i64;

    #[test]
    fn table_is_consistent_and_factored_forms_expand() {
        let rows = invariant_table(4, 6).unwrap();
        assert!(rows.iter().all(|r| r.routes_agree));
        for row in &rows {
            if let Some(f) = &row.factored {
                assert_eq!(f.expand(), row.value, "factored form of {}", row.invariant);
            }
            assert_eq!(row.evaluations.len(), 3);
        }
    }

    #[test]
    fn hyperflex_row_values() {
        let rows = invariant_table(4, 6).unwrap();
        let hyper: Vec<_> = rows
            .iter()
            .filter(|r| r.invariant == InvariantId::HyperflexDegree)
            .collect();
        assert_eq!(hyper.len(), 2);
        for row in hyper {
            let vals: Vec<Rat> = row.evaluations.iter().map(|(_, v)| v.clone()).collect();
            assert_eq!(vals, vec![rat_i64(60), rat_i64(156), rat_i64(288)]);
        }
    }

    #[test]
    fn tritangent_row_at_base_and_beyond() {
        let rows = invariant_table(5, 6).unwrap();
        let tri: Vec<_> = rows
            .iter()
            .filter(|r| r.invariant == InvariantId::TritangentDegree)
            .collect();
        assert_eq!(tri.len(), 2);
        for row in tri {
            assert_eq!(row.evaluations[0].1, rat_i64(0));
            assert_eq!(row.evaluations[1].1, rat_i64(312));
        }
    }

    #[test]
    fn flex_bitangent_row_at_6() {
        let rows = invariant_table(6, 6).unwrap();
        let r = rows
            .iter()
            .find(|r| r.invariant == InvariantId::FlexBitangentDegree)
            .unwrap();
        assert_eq!(r.evaluations[0].1, rat_i64(1224));
    }

    #[test]
    fn rejects_bad_range() {
        assert!(invariant_table(2, 4).is_err());
        assert!(invariant_table(5, 4).is_err());
    }
}
