//! Distinguished classes on the product threefold (dual plane) x (pencil)
//! and their pullbacks to the tangency surface, feeding the double-point
//! formula that produces the bitangent curve class.

use super::{d, ipoly};
use crate::chow::{SurfaceDivClass, YClass};
use crate::exact::UniPoly;

/// c_1 of the tangent bundle of the threefold: 3M + 2q, the degree-one part
/// of (1 + 3M + 3M^2)(1 + 2q).
pub fn tangent_bundle_y_c1() -> YClass {
    &YClass::m().scale(&UniPoly::from_i64(3)) + &YClass::q().scale(&UniPoly::from_i64(2))
}

/// Pullback of the dual-plane line class: (2d-1)H - E_b - E_n.
pub fn pullback_m() -> SurfaceDivClass {
    SurfaceDivClass::new(ipoly(&[-1, 2]), UniPoly::one(), UniPoly::one())
}

/// Pullback of the pencil point class: dH - E_b.
pub fn pullback_q() -> SurfaceDivClass {
    SurfaceDivClass::new(d(), UniPoly::one(), UniPoly::zero())
}

/// Pushforward of the surface fundamental class: d(d-1) M + (2d-2) q.
pub fn pushforward_s() -> YClass {
    let dm1 = &d() * &ipoly(&[-1, 1]);
    &YClass::m().scale(&dm1) + &YClass::q().scale(&ipoly(&[-2, 2]))
}

/// f^* of c_1(T_Y): (8d-3)H - 5E_b - 3E_n.
pub fn pullback_tangent_y_c1() -> SurfaceDivClass {
    let three_m = pullback_m().scale(&UniPoly::from_i64(3));
    let two_q = pullback_q().scale(&UniPoly::from_i64(2));
    &three_m + &two_q
}

/// The double-point class f^* f_* [S] - f^* c_1(T_Y) + c_1(T_S).
pub fn double_point_class() -> SurfaceDivClass {
    let dm1 = &d() * &ipoly(&[-1, 1]);
    let pullback_pushforward =
        &pullback_m().scale(&dm1) + &pullback_q().scale(&ipoly(&[-2, 2]));
    &(&pullback_pushforward - &pullback_tangent_y_c1()) + &SurfaceDivClass::tangent_c1()
}

/// The flex curve class on the tangency surface: (6d-6)H - 3E_b - 2E_n.
pub fn flex_class_s() -> SurfaceDivClass {
    SurfaceDivClass::new(ipoly(&[-6, 6]), UniPoly::from_i64(3), UniPoly::from_i64(2))
}

/// The bitangent curve class: the double-point class minus twice the flex
/// class (the flex curve sits inside the double-point locus doubled).
pub fn bitangent_class_s() -> SurfaceDivClass {
    &double_point_class() - &flex_class_s().scale(&UniPoly::from_i64(2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pullback_m_selfintersects_to_cover_degree() {
        assert_eq!(pullback_m().self_intersection(), ipoly(&[-2, 2]));
    }

    #[test]
    fn pushforward_s_degrees() {
        // against M^2: 2d-2; against M q: d(d-1)
        let m2 = YClass::monomial(UniPoly::one(), 2, 0);
        let mq = YClass::monomial(UniPoly::one(), 1, 1);
        assert_eq!((&pushforward_s() * &m2).degree_map(), ipoly(&[-2, 2]));
        assert_eq!((&pushforward_s() * &mq).degree_map(), ipoly(&[0, -1, 1]));
    }

    #[test]
    fn pullback_of_tangent_c1() {
        assert_eq!(
            pullback_tangent_y_c1(),
            SurfaceDivClass::new(ipoly(&[-3, 8]), UniPoly::from_i64(5), UniPoly::from_i64(3))
        );
    }

    #[test]
    fn intermediate_pullback_pushforward() {
        // d(d-1)(2d+1) H - (d-1)(d+2) E_b - d(d-1) E_n
        let dm1 = &d() * &ipoly(&[-1, 1]);
        let cls = &pullback_m().scale(&dm1) + &pullback_q().scale(&ipoly(&[-2, 2]));
        assert_eq!(cls.h, &dm1 * &ipoly(&[1, 2]));
        assert_eq!(cls.eb, &ipoly(&[-1, 1]) * &ipoly(&[2, 1]));
        assert_eq!(cls.en, dm1);
    }

    #[test]
    fn double_point_class_coefficients() {
        let dp = double_point_class();
        assert_eq!(dp.h, ipoly(&[6, -9, -1, 2]));
        assert_eq!(dp.eb, ipoly(&[-6, 1, 1]));
        assert_eq!(dp.en, ipoly(&[-2, -1, 1]));
    }

    #[test]
    fn bitangent_class_factors_through_d_minus_3() {
        let b = bitangent_class_s();
        let dm3 = ipoly(&[-3, 1]);
        assert_eq!(b.h, &dm3 * &ipoly(&[-6, 5, 2]));
        assert_eq!(b.eb, &dm3 * &ipoly(&[4, 1]));
        assert_eq!(b.en, &dm3 * &ipoly(&[2, 1]));
    }

    #[test]
    fn bitangent_class_meets_pullback_m() {
        // 4d(d-2)(d-3) = 4d^3 - 20d^2 + 24d
        assert_eq!(
            bitangent_class_s().pair(&pullback_m()),
            ipoly(&[0, 24, -20, 4])
        );
    }
}
