//! Divisor classes on the tangency surface: the blow-up of the plane at the
//! d^2 base points of the pencil and at the 3(d-1)^2 nodes of its singular
//! members. Classes are written a H - b E_b - c E_n, where H is the line
//! pullback, E_b the sum of the exceptional curves over base points and E_n
//! the sum over nodes. The intersection pairing is diagonal:
//!
//!   H^2 = 1,  E_b^2 = -d^2,  E_n^2 = -3(d-1)^2,  mixed products 0,
//!
//! with values polynomial in d since the blown-up point counts are.

use crate::exact::UniPoly;
use std::ops::{Add, Neg, Sub};

/// a H - b E_b - c E_n with polynomial coefficients in d: `h` stores a,
/// `eb` stores b, `en` stores c.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SurfaceDivClass {
    pub h: UniPoly,
    pub eb: UniPoly,
    pub en: UniPoly,
}

fn d() -> UniPoly {
    UniPoly::var()
}

/// d^2, the number of base points.
fn base_count() -> UniPoly {
    d().pow(2)
}

/// 3(d-1)^2, the number of nodes of singular members.
fn node_count() -> UniPoly {
    (&d() - &UniPoly::one()).pow(2).scale(&crate::exact::rat_i64(3))
}

impl SurfaceDivClass {
    pub fn new(h: UniPoly, eb: UniPoly, en: UniPoly) -> Self {
        SurfaceDivClass { h, eb, en }
    }

    pub fn from_i64(h: i64, eb: i64, en: i64) -> Self {
        SurfaceDivClass::new(
            UniPoly::from_i64(h),
            UniPoly::from_i64(eb),
            UniPoly::from_i64(en),
        )
    }

    pub fn zero() -> Self {
        SurfaceDivClass::from_i64(0, 0, 0)
    }

    /// The canonical class -3H + E_b + E_n.
    pub fn canonical() -> Self {
        SurfaceDivClass::from_i64(-3, -1, -1)
    }

    /// First Chern class of the tangent bundle, 3H - E_b - E_n.
    pub fn tangent_c1() -> Self {
        SurfaceDivClass::from_i64(3, 1, 1)
    }

    /// The intersection pairing, a polynomial in d.
    pub fn pair(&self, other: &SurfaceDivClass) -> UniPoly {
        let hh = &self.h * &other.h;
        let bb = &(&self.eb * &other.eb) * &base_count();
        let nn = &(&self.en * &other.en) * &node_count();
        &(&hh - &bb) - &nn
    }

    pub fn self_intersection(&self) -> UniPoly {
        self.pair(self)
    }

    /// Adjunction genus 1 + (C^2 + C.K)/2 with K the canonical class.
    pub fn adjunction_genus(&self) -> UniPoly {
        let k = SurfaceDivClass::canonical();
        let total = &self.self_intersection() + &self.pair(&k);
        &UniPoly::one() + &total.scale(&crate::exact::Rat::new(1.into(), 2.into()))
    }

    pub fn scale(&self, p: &UniPoly) -> SurfaceDivClass {
        SurfaceDivClass::new(&self.h * p, &self.eb * p, &self.en * p)
    }
}

impl Add for &SurfaceDivClass {
    type Output = SurfaceDivClass;
    fn add(self, rhs: &SurfaceDivClass) -> SurfaceDivClass {
        SurfaceDivClass::new(&self.h + &rhs.h, &self.eb + &rhs.eb, &self.en + &rhs.en)
    }
}

impl Sub for &SurfaceDivClass {
    type Output = SurfaceDivClass;
    fn sub(self, rhs: &SurfaceDivClass) -> SurfaceDivClass {
        SurfaceDivClass::new(&self.h - &rhs.h, &self.eb - &rhs.eb, &self.en - &rhs.en)
    }
}

impl Neg for &SurfaceDivClass {
    type Output = SurfaceDivClass;
    fn neg(self) -> SurfaceDivClass {
        SurfaceDivClass::new(-&self.h, -&self.eb, -&self.en)
    }
}

/// Arithmetic genus of a plane model: (D-1)(D-2)/2 minus count*m(m-1)/2 for
/// each family of ordinary multiple points, all exact in d.
pub fn plane_model_genus(degree: &UniPoly, multiple_points: &[(UniPoly, UniPoly)]) -> UniPoly {
    let half = crate::exact::Rat::new(1.into(), 2.into());
    let dm1 = degree - &UniPoly::one();
    let dm2 = degree - &UniPoly::from_i64(2);
    let mut genus = (&dm1 * &dm2).scale(&half);
    for (count, mult) in multiple_points {
        let drop = &(mult * &(mult - &UniPoly::one())).scale(&half) * count;
        genus = &genus - &drop;
    }
    genus
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_i64;

    fn dd() -> UniPoly {
        UniPoly::var()
    }

    #[test]
    fn pullback_m_self_intersection_is_tangency_degree() {
        // ((2d-1)H - E_b - E_n)^2 = 2d - 2
        let c = SurfaceDivClass::new(
            UniPoly::from_int_coeffs(&[-1, 2]),
            UniPoly::one(),
            UniPoly::one(),
        );
        assert_eq!(c.self_intersection(), UniPoly::from_int_coeffs(&[-2, 2]));
    }

    #[test]
    fn mixed_products_vanish() {
        let h = SurfaceDivClass::from_i64(1, 0, 0);
        let eb = SurfaceDivClass::from_i64(0, -1, 0); // E_b itself
        assert!(h.pair(&eb).is_zero());
    }

    #[test]
    fn exceptional_self_intersections() {
        let en = SurfaceDivClass::from_i64(0, 0, -1); // E_n
        // E_n^2 = -3(d-1)^2
        let expected = -&(&dd() - &UniPoly::one()).pow(2).scale(&rat_i64(3));
        assert_eq!(en.self_intersection(), expected);
        let eb = SurfaceDivClass::from_i64(0, -1, 0);
        assert_eq!(eb.self_intersection(), -&dd().pow(2));
    }

    #[test]
    fn adjunction_on_plane_curve_class() {
        // dH has genus (d-1)(d-2)/2
        let c = SurfaceDivClass::new(dd(), UniPoly::zero(), UniPoly::zero());
        let expected = plane_model_genus(&dd(), &[]);
        assert_eq!(c.adjunction_genus(), expected);
        assert_eq!(
            expected,
            (&(&dd() - &UniPoly::one()) * &(&dd() - &UniPoly::from_i64(2)))
                .scale(&crate::exact::Rat::new(1.into(), 2.into()))
        );
    }

    #[test]
    fn smooth_quartic_genus_is_three() {
        let four = UniPoly::from_i64(4);
        assert_eq!(plane_model_genus(&four, &[]), UniPoly::from_i64(3));
    }

    #[test]
    fn pairing_symmetric_and_bilinear() {
        let a = SurfaceDivClass::new(dd(), UniPoly::from_i64(2), UniPoly::one());
        let b = SurfaceDivClass::new(UniPoly::from_int_coeffs(&[1, 1]), UniPoly::one(), dd());
        let c = SurfaceDivClass::from_i64(3, -1, 2);
        assert_eq!(a.pair(&b), b.pair(&a));
        let lhs = (&a + &b).pair(&c);
        let rhs = &a.pair(&c) + &b.pair(&c);
        assert_eq!(lhs, rhs);
    }
}
