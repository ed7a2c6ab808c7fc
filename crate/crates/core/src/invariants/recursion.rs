//! The degeneration recursion: replacing a degree-d pencil by (fixed conic) +
//! (degree d-2 pencil) expresses a contact count at degree d through the
//! same count at d-2 plus an explicit increment. Solving such a recursion
//! means producing the unique polynomial that interpolates both parity
//! chains from the base values and verifying it against the recursion as an
//! exact identity.

use super::{ipoly, InvariantError};
use crate::exact::{Rat, UniPoly};

/// Increment of the bitangent-line recursion, split by degeneration type:
/// lines tangent to the conic and a member (counted with the conic-tangency
/// multiplicity), lines through one conic-member intersection tangent
/// elsewhere, and lines through two intersection points.
#[derive(Clone, Debug)]
pub struct BitangentIncrement {
    /// 4(d-3): tangents common to the conic and some member.
    pub conic_member_tangents: UniPoly,
    /// 4(3d^2 - 19d + 28): through one intersection point, tangent elsewhere.
    pub through_one_point: UniPoly,
    /// 4(2d-5): through two intersection points.
    pub through_two_points: UniPoly,
}

impl BitangentIncrement {
    pub fn total(&self) -> UniPoly {
        &(&self.conic_member_tangents + &self.through_one_point) + &self.through_two_points
    }
}

/// The bitangent-line increment 4(d-3) + 4(3d^2-19d+28) + 4(2d-5),
/// which collapses to 4(d-2)(3d-10).
pub fn bitangent_recursion_increment() -> BitangentIncrement {
    BitangentIncrement {
        conic_member_tangents: ipoly(&[-12, 4]),
        through_one_point: ipoly(&[112, -76, 12]),
        through_two_points: ipoly(&[-20, 8]),
    }
}

/// The tritangent recursion increment 10d^4 - 112d^3 + 350d^2 - 56d - 720.
pub fn tritangent_recursion_increment() -> UniPoly {
    ipoly(&[-720, -56, 350, -112, 10])
}

/// Solves value(d) = value(d-2) + increment(d) given values at two
/// consecutive base degrees. The chains for both parities are evaluated far
/// enough to determine a polynomial of the expected degree; the candidate is
/// then verified exactly: candidate(d) - candidate(d-2) == increment(d) in
/// Q[d] and the base values match.
pub fn solve_parity_recursion(
    increment: &UniPoly,
    bases: [(i64, i64); 2],
    name: &'static str,
) -> Result<UniPoly, InvariantError> {
    let expected_degree = increment.degree().unwrap_or(0) + 1;
    let points_needed = expected_degree + 2;
    let mut points: Vec<(Rat, Rat)> = Vec::new();
    let mut chain = |start: i64, value0: i64, upto: i64| {
        let mut v = Rat::from_integer(value0.into());
        points.push((Rat::from_integer(start.into()), v.clone()));
        let mut arg = start + 2;
        while arg <= upto {
            v += increment.eval_i64(arg);
            points.push((Rat::from_integer(arg.into()), v.clone()));
            arg += 2;
        }
    };
    let top = bases[0].0 + 2 * points_needed as i64;
    chain(bases[0].0, bases[0].1, top);
    chain(bases[1].0, bases[1].1, top);
    let candidate = UniPoly::interpolate(&points);

    // exact verification against the recursion
    let shifted = candidate.compose(&ipoly(&[-2, 1]));
    if &(&candidate - &shifted) - increment != UniPoly::zero() {
        return Err(InvariantError::Recursion(name));
    }
    for (b, v) in bases {
        if candidate.eval_i64(b) != Rat::from_integer(v.into()) {
            return Err(InvariantError::Recursion(name));
        }
    }
    Ok(candidate)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_i64;

    #[test]
    fn bitangent_increment_collapses() {
        // 4(d-2)(3d-10)
        let compact = (&ipoly(&[-2, 1]) * &ipoly(&[-10, 3])).scale(&rat_i64(4));
        assert_eq!(bitangent_recursion_increment().total(), compact);
    }

    #[test]
    fn tritangent_increment_vanishes_at_5() {
        assert_eq!(tritangent_recursion_increment().eval_i64(5), rat_i64(0));
    }

    #[test]
    fn solve_simple_recursion() {
        // f(d) = f(d-2) + 4d - 4 with f(0) = 0, f(1) = 1 has f(d) = d^2.
        let inc = ipoly(&[-4, 4]);
        let f = solve_parity_recursion(&inc, [(0, 0), (1, 1)], "test").unwrap();
        assert_eq!(f, ipoly(&[0, 0, 1]));
    }

    #[test]
    fn inconsistent_bases_are_rejected() {
        // f(1) = 2 forces the odd chain onto d^2 + 1, which no single
        // polynomial can reconcile with the even chain d^2.
        let inc = ipoly(&[-4, 4]);
        assert!(solve_parity_recursion(&inc, [(0, 0), (1, 2)], "test").is_err());
    }

    #[test]
    fn recursion_with_negative_increment_degree_zero() {
        // value(d) = value(d-2) + 6, bases 0 -> linear 3d
        let f = solve_parity_recursion(&UniPoly::from_i64(6), [(0, 0), (1, 3)], "t").unwrap();
        assert_eq!(f, ipoly(&[0, 3]));
    }

}
