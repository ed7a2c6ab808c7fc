//! Sparse multivariate polynomials over the rationals.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors aligned with a
//! sorted variable list; the eliminants produced by the oracle can carry
//! hundreds of terms, which the sparse map handles without ceremony.

use super::{ExactError, Rat, UniPoly};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A multivariate polynomial: sorted variable names plus a sparse term map.
/// No zero coefficients are stored and unused variables are dropped, so
/// structural equality is semantic equality.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        MultiPoly {
            vars: Vec::new(),
            terms,
        }
    }

    pub fn from_i64(n: i64) -> Self {
        MultiPoly::constant(Rat::from_integer(n.into()))
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![1], Rat::one());
        MultiPoly {
            vars: vec![name.to_string()],
            terms,
        }
    }

    /// Builds from `(variable names, list of (exponents, coefficient))`.
    pub fn from_terms(vars: &[&str], terms: &[(&[u32], Rat)]) -> Self {
        let vars_owned: Vec<String> = vars.iter().map(|v| v.to_string()).collect();
        let mut map = BTreeMap::new();
        for (exps, c) in terms {
            if c.is_zero() {
                continue;
            }
            assert_eq!(exps.len(), vars_owned.len());
            let e = map.entry(exps.to_vec()).or_insert_with(Rat::zero);
            *e += c;
        }
        let mut p = MultiPoly {
            vars: vars_owned,
            terms: map,
        };
        p.normalize();
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn constant_value(&self) -> Option<Rat> {
        if self.is_zero() {
            return Some(Rat::zero());
        }
        if self.is_constant() {
            return Some(self.terms.values().next().unwrap().clone());
        }
        None
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> std::collections::btree_map::Iter<'_, Vec<u32>, Rat> {
        self.terms.iter()
    }

    /// Total degree, or `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Degree in one variable (0 if the variable does not occur).
    pub fn degree_in(&self, var: &str) -> u32 {
        match self.var_index(var) {
            None => 0,
            Some(i) => self.terms.keys().map(|e| e[i]).max().unwrap_or(0),
        }
    }

    /// `Some(deg)` when all terms share total degree `deg`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    fn var_index(&self, var: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == var)
    }

    /// Drops unused variables, keeping the representation canonical.
    fn normalize(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
        let used: Vec<bool> = (0..self.vars.len())
            .map(|i| self.terms.keys().any(|e| e[i] > 0))
            .collect();
        if used.iter().all(|&u| u) {
            return;
        }
        let keep: Vec<usize> = (0..self.vars.len()).filter(|&i| used[i]).collect();
        self.vars = keep.iter().map(|&i| self.vars[i].clone()).collect();
        let old = std::mem::take(&mut self.terms);
        for (e, c) in old {
            self.terms.insert(keep.iter().map(|&i| e[i]).collect(), c);
        }
    }

    /// Re-expresses both polynomials over the union of their variables.
    fn unify(&self, other: &MultiPoly) -> (Vec<String>, MultiPoly, MultiPoly) {
        if self.vars == other.vars {
            return (self.vars.clone(), self.clone(), other.clone());
        }
        let mut vars: Vec<String> = self.vars.iter().chain(other.vars.iter()).cloned().collect();
        vars.sort();
        vars.dedup();
        (
            vars.clone(),
            self.embed(&vars),
            other.embed(&vars),
        )
    }

    /// Re-indexes into a superset variable list (must contain all own vars).
    pub fn embed(&self, vars: &[String]) -> MultiPoly {
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("superset vars"))
            .collect();
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut exp = vec![0u32; vars.len()];
            for (i, &x) in e.iter().enumerate() {
                exp[map[i]] = x;
            }
            terms.insert(exp, c.clone());
        }
        MultiPoly {
            vars: vars.to_vec(),
            terms,
        }
    }

    pub fn scale(&self, c: &Rat) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = MultiPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self, var: &str) -> MultiPoly {
        let Some(i) = self.var_index(var) else {
            return MultiPoly::zero();
        };
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut exp = e.clone();
            exp[i] -= 1;
            terms.insert(exp, c * Rat::from_integer(e[i].into()));
        }
        let mut p = MultiPoly {
            vars: self.vars.clone(),
            terms,
        };
        p.normalize();
        p
    }

    /// Substitutes exact rational values for all variables.
    pub fn eval(&self, assign: &[(&str, Rat)]) -> Result<Rat, ExactError> {
        let p = self.eval_partial(assign);
        p.constant_value()
            .ok_or_else(|| ExactError::Invalid(format!("unassigned variables: {:?}", p.vars)))
    }

    /// Substitutes exact rational values for some variables.
    pub fn eval_partial(&self, assign: &[(&str, Rat)]) -> MultiPoly {
        let idx: Vec<Option<&Rat>> = self
            .vars
            .iter()
            .map(|v| assign.iter().find(|(n, _)| n == v).map(|(_, r)| r))
            .collect();
        let mut out = MultiPoly::zero();
        for (e, c) in &self.terms {
            let mut coeff = c.clone();
            let mut exp_terms: Vec<(&[u32], Rat)> = Vec::new();
            let mut exp = Vec::with_capacity(e.len());
            for (i, &x) in e.iter().enumerate() {
                match idx[i] {
                    Some(v) => {
                        for _ in 0..x {
                            coeff *= v;
                        }
                        exp.push(0);
                    }
                    None => exp.push(x),
                }
            }
            exp_terms.push((&exp, coeff));
            let vars_refs: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
            out = &out + &MultiPoly::from_terms(&vars_refs, &exp_terms);
        }
        out
    }

    /// Substitutes a polynomial for one variable.
    pub fn substitute(&self, var: &str, value: &MultiPoly) -> MultiPoly {
        let Some(i) = self.var_index(var) else {
            return self.clone();
        };
        // Collect by power of `var`, then Horner on the substituted value.
        let max_pow = self.degree_in(var);
        let mut by_pow: Vec<MultiPoly> = vec![MultiPoly::zero(); (max_pow + 1) as usize];
        let vars_refs: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        for (e, c) in &self.terms {
            let mut exp = e.clone();
            let k = exp[i];
            exp[i] = 0;
            let term = MultiPoly::from_terms(&vars_refs, &[(&exp, c.clone())]);
            by_pow[k as usize] = &by_pow[k as usize] + &term;
        }
        let mut acc = MultiPoly::zero();
        for part in by_pow.iter().rev() {
            acc = &(&acc * value) + part;
        }
        acc
    }

    /// Coefficients as polynomials in the remaining variables, ascending in
    /// powers of `var`.
    pub fn as_univariate_in(&self, var: &str) -> Vec<MultiPoly> {
        let deg = self.degree_in(var) as usize;
        let mut out = vec![MultiPoly::zero(); deg + 1];
        let Some(i) = self.var_index(var) else {
            out[0] = self.clone();
            return out;
        };
        let vars_refs: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        for (e, c) in &self.terms {
            let mut exp = e.clone();
            let k = exp[i] as usize;
            exp[i] = 0;
            let term = MultiPoly::from_terms(&vars_refs, &[(&exp, c.clone())]);
            out[k] = &out[k] + &term;
        }
        out
    }

    /// Rebuilds from ascending coefficients in `var`.
    pub fn from_univariate_in(var: &str, coeffs: &[MultiPoly]) -> MultiPoly {
        let v = MultiPoly::var(var);
        let mut acc = MultiPoly::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * &v) + c;
        }
        acc
    }

    /// Conversion to a dense univariate when at most one variable occurs.
    pub fn to_unipoly(&self) -> Option<UniPoly> {
        if self.vars.len() > 1 {
            return None;
        }
        if self.vars.is_empty() {
            return Some(match self.constant_value() {
                Some(c) => UniPoly::constant(c),
                None => UniPoly::zero(),
            });
        }
        let deg = self.terms.keys().map(|e| e[0]).max().unwrap_or(0) as usize;
        let mut coeffs = vec![Rat::zero(); deg + 1];
        for (e, c) in &self.terms {
            coeffs[e[0] as usize] = c.clone();
        }
        Some(UniPoly::from_coeffs(coeffs))
    }

    pub fn from_unipoly(var: &str, p: &UniPoly) -> MultiPoly {
        let vars = [var];
        let terms: Vec<(Vec<u32>, Rat)> = p
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (vec![k as u32], c.clone()))
            .collect();
        let term_refs: Vec<(&[u32], Rat)> =
            terms.iter().map(|(e, c)| (e.as_slice(), c.clone())).collect();
        MultiPoly::from_terms(&vars, &term_refs)
    }

    /// Exact multivariate division; `Err` when not divisible.
    pub fn exact_div(&self, div: &MultiPoly) -> Result<MultiPoly, ExactError> {
        if div.is_zero() {
            return Err(ExactError::Invalid("division by zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(MultiPoly::zero());
        }
        if let Some(c) = div.constant_value() {
            return Ok(self.scale(&(Rat::one() / c)));
        }
        let (vars, mut rem, d) = self.unify(div);
        let (dlead_exp, dlead_c) = d.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let mut quot = MultiPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        };
        while !rem.is_zero() {
            // binary ops drop unused variables; realign with the fixed list
            rem = rem.embed(&vars);
            let (rlead_exp, rlead_c) = rem
                .terms
                .iter()
                .next_back()
                .map(|(e, c)| (e.clone(), c.clone()))
                .unwrap();
            let mut qexp = Vec::with_capacity(rlead_exp.len());
            for (r, g) in rlead_exp.iter().zip(dlead_exp.iter()) {
                if r < g {
                    return Err(ExactError::Indivisible);
                }
                qexp.push(r - g);
            }
            let qc = &rlead_c / &dlead_c;
            let mono = MultiPoly {
                vars: vars.clone(),
                terms: BTreeMap::from([(qexp, qc)]),
            };
            rem = &rem - &(&mono * &d);
            quot = &quot + &mono;
        }
        quot.normalize();
        Ok(quot)
    }

    pub fn max_coeff_abs(&self) -> Rat {
        let mut best = Rat::zero();
        for c in self.terms.values() {
            let a = c.abs();
            if a > best {
                best = a;
            }
        }
        best
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let (vars, a, b) = self.unify(rhs);
        let mut terms = a.terms;
        for (e, c) in b.terms {
            match terms.get_mut(&e) {
                Some(t) => {
                    *t += c;
                    if t.is_zero() {
                        terms.remove(&e);
                    }
                }
                None => {
                    terms.insert(e, c);
                }
            }
        }
        let mut p = MultiPoly { vars, terms };
        p.normalize();
        p
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero();
        }
        let (vars, a, b) = self.unify(rhs);
        let mut terms: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let exp: Vec<u32> = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
                let prod = ca * cb;
                match terms.get_mut(&exp) {
                    Some(t) => {
                        *t += prod;
                        if t.is_zero() {
                            terms.remove(&exp);
                        }
                    }
                    None => {
                        terms.insert(exp, prod);
                    }
                }
            }
        }
        let mut p = MultiPoly { vars, terms };
        p.normalize();
        p
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let is_const_term = e.iter().all(|&x| x == 0);
            if is_const_term || !abs.is_one() {
                write!(f, "{}", super::unipoly::format_rat(&abs))?;
                if !is_const_term {
                    write!(f, "*")?;
                }
            }
            let mut started = false;
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                if started {
                    write!(f, "*")?;
                }
                started = true;
                write!(f, "{}", self.vars[i])?;
                if x > 1 {
                    write!(f, "^{x}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_i64;

    fn x() -> MultiPoly {
        MultiPoly::var("x")
    }
    fn y() -> MultiPoly {
        MultiPoly::var("y")
    }

    #[test]
    fn arithmetic_and_normalization() {
        let p = &(&x() + &y()) * &(&x() - &y());
        let q = &(&x() * &x()) - &(&y() * &y());
        assert_eq!(p, q);
        let z = &p - &q;
        assert!(z.is_zero());
        assert!(z.vars().is_empty());
    }

    #[test]
    fn substitution_expands() {
        // (x + y)^2 with y -> x - 1 gives (2x - 1)^2
        let p = (&x() + &y()).pow(2);
        let s = p.substitute("y", &(&x() - &MultiPoly::one()));
        let expected = (&x().scale(&rat_i64(2)) - &MultiPoly::one()).pow(2);
        assert_eq!(s, expected);
    }

    #[test]
    fn exact_division() {
        let p = (&x() + &y()).pow(3);
        let q = (&x() + &y()).pow(2);
        assert_eq!(p.exact_div(&q).unwrap(), &x() + &y());
        assert!((&p + &MultiPoly::one()).exact_div(&q).is_err());
    }

    #[test]
    fn univariate_view_roundtrip() {
        let p = &(&x().pow(2) * &y()) + &(&x() + &MultiPoly::from_i64(7));
        let coeffs = p.as_univariate_in("x");
        assert_eq!(coeffs.len(), 3);
        assert_eq!(MultiPoly::from_univariate_in("x", &coeffs), p);
    }

    #[test]
    fn homogeneity() {
        let p = &x().pow(3) + &(&x() * &y().pow(2));
        assert_eq!(p.homogeneous_degree(), Some(3));
        let q = &p + &x();
        assert_eq!(q.homogeneous_degree(), None);
    }
}
