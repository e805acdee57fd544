//! Monomial ideals in canonical form.
//!
//! A [`MonomialIdeal`] always holds its minimal generating set: a divisibility
//! antichain, sorted in the canonical monomial order. Minimalization is
//! applied eagerly after every operation, so ideal equality is plain
//! comparison of generator lists. The empty generator set is the zero ideal;
//! the set `{1}` is the unit ideal.

use std::fmt;
use std::sync::Arc;

use crate::monomial::Monomial;
use crate::vars::VariableSet;

/// Truncation bound for the standard-monomial enumeration used by the
/// brute-force oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct DegreeBound(pub u64);

/// A monomial ideal given by its minimal generating set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialIdeal {
    vars: Arc<VariableSet>,
    gens: Vec<Monomial>,
}

/// Reduces a generator list to the divisibility antichain, sorted canonically.
/// The result generates the same ideal as the input.
fn antichain(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_unstable();
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::new();
    'next: for g in gens {
        // kept is sorted by degree, so only earlier entries can divide g
        for k in &kept {
            if k.divides(&g) {
                continue 'next;
            }
        }
        kept.push(g);
    }
    kept
}

impl MonomialIdeal {
    /// The ideal generated by `gens`, minimalized. Panics if any generator's
    /// arity does not match the ambient.
    pub fn new(vars: Arc<VariableSet>, gens: Vec<Monomial>) -> Self {
        for g in &gens {
            assert_eq!(
                g.arity(),
                vars.arity(),
                "generator arity does not match the ambient variable set"
            );
        }
        MonomialIdeal { vars, gens: antichain(gens) }
    }

    pub fn zero(vars: Arc<VariableSet>) -> Self {
        MonomialIdeal { vars, gens: Vec::new() }
    }

    pub fn unit(vars: Arc<VariableSet>) -> Self {
        let unit = Monomial::unit(vars.arity());
        MonomialIdeal { vars, gens: vec![unit] }
    }

    pub fn vars(&self) -> &Arc<VariableSet> {
        &self.vars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_unit()
    }

    /// Proper means not the unit ideal (the zero ideal is proper).
    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    /// True iff every generator is a power of a single variable.
    pub fn is_pure_powers(&self) -> bool {
        self.gens.iter().all(|g| g.support().count() == 1)
    }

    pub fn max_gen_degree(&self) -> u64 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Largest exponent of `x_i` over all generators.
    pub fn max_exponent(&self, index: usize) -> u32 {
        self.gens.iter().map(|g| g.exponent(index)).max().unwrap_or(0)
    }

    fn check_ambient(&self, other: &MonomialIdeal) {
        assert_eq!(
            self.vars, other.vars,
            "operation requires matching ambient variable sets"
        );
    }

    /// Membership: some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        debug_assert_eq!(m.arity(), self.vars.arity());
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        self.check_ambient(other);
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        self.check_ambient(other);
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        MonomialIdeal { vars: self.vars.clone(), gens: antichain(gens) }
    }

    pub fn multiply(&self, other: &MonomialIdeal) -> MonomialIdeal {
        self.check_ambient(other);
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b));
            }
        }
        MonomialIdeal { vars: self.vars.clone(), gens: antichain(gens) }
    }

    /// `I^n`, minimalizing at each step. `n = 0` gives the unit ideal.
    pub fn power(&self, n: u32) -> MonomialIdeal {
        if n == 0 {
            return MonomialIdeal::unit(self.vars.clone());
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.multiply(self);
        }
        acc
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        self.check_ambient(other);
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        MonomialIdeal { vars: self.vars.clone(), gens: antichain(gens) }
    }

    /// n-ary intersection; the empty intersection is the unit ideal.
    pub fn intersect_many<'a, I>(vars: Arc<VariableSet>, ideals: I) -> MonomialIdeal
    where
        I: IntoIterator<Item = &'a MonomialIdeal>,
    {
        let mut acc = MonomialIdeal::unit(vars);
        for ideal in ideals {
            acc = acc.intersect(ideal);
        }
        acc
    }

    /// Colon by a single monomial: `I : m = <g / gcd(g, m)>`.
    pub fn colon_monomial(&self, m: &Monomial) -> MonomialIdeal {
        let gens = self.gens.iter().map(|g| g.colon(m)).collect();
        MonomialIdeal { vars: self.vars.clone(), gens: antichain(gens) }
    }

    /// Ideal quotient `I : J`. Panics if `J` is the zero ideal.
    pub fn colon(&self, other: &MonomialIdeal) -> MonomialIdeal {
        self.check_ambient(other);
        assert!(!other.is_zero(), "colon by the zero ideal is undefined");
        let mut acc: Option<MonomialIdeal> = None;
        for h in &other.gens {
            let part = self.colon_monomial(h);
            acc = Some(match acc {
                None => part,
                Some(prev) => prev.intersect(&part),
            });
        }
        acc.expect("nonzero ideal has at least one generator")
    }

    /// Saturation `I : J^inf`: the fixed point of repeated colon by `J`.
    /// Terminates because each step's ideal contains the previous one.
    pub fn saturate(&self, other: &MonomialIdeal) -> MonomialIdeal {
        assert!(!other.is_zero(), "saturation by the zero ideal is undefined");
        let mut current = self.clone();
        loop {
            let next = current.colon(other);
            if next == current {
                return current;
            }
            current = next;
        }
    }

    /// The radical: squarefree parts of the generators, minimalized.
    pub fn radical(&self) -> MonomialIdeal {
        let gens = self.gens.iter().map(Monomial::squarefree_part).collect();
        MonomialIdeal { vars: self.vars.clone(), gens: antichain(gens) }
    }

    /// All monomials of total degree at most `bound` that are NOT in the
    /// ideal, in canonical order. Brute-force oracle support.
    pub fn standard_monomials_below(&self, bound: DegreeBound) -> Vec<Monomial> {
        let mut out = Vec::new();
        let arity = self.vars.arity();
        let mut exps = vec![0u32; arity];
        enumerate_monomials(&mut exps, 0, bound.0, &mut |m: &Monomial| {
            if !self.contains(m) {
                out.push(m.clone());
            }
        });
        out.sort_unstable();
        out
    }
}

fn enumerate_monomials(
    exps: &mut Vec<u32>,
    index: usize,
    budget: u64,
    visit: &mut impl FnMut(&Monomial),
) {
    if index == exps.len() {
        visit(&Monomial::new(exps.clone()));
        return;
    }
    for e in 0..=budget {
        exps[index] = e as u32;
        enumerate_monomials(exps, index + 1, budget - e, visit);
    }
    exps[index] = 0;
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for g in &self.gens {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{}", g.display(&self.vars))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ideal;

    fn vars2() -> Arc<VariableSet> {
        VariableSet::new(["x", "y"]).unwrap()
    }

    fn ideal(text: &str, vars: &Arc<VariableSet>) -> MonomialIdeal {
        parse_ideal(text, vars).unwrap()
    }

    /// Membership oracle: two ideals generated in degree <= bound are equal
    /// iff they agree on all monomials of degree <= bound.
    fn agree_below(a: &MonomialIdeal, b: &MonomialIdeal, bound: u64) -> bool {
        a.standard_monomials_below(DegreeBound(bound)) == b.standard_monomials_below(DegreeBound(bound))
    }

    #[test]
    fn minimalize_prunes_divisible_generators() {
        let v = vars2();
        // x^2 | x^3
        assert_eq!(ideal("x^2, x^3", &v), ideal("x^2", &v));
        // {x*y, x^2*y, x*y^2} -> {x*y}
        assert_eq!(ideal("x*y, x^2*y, x*y^2", &v), ideal("x*y", &v));
        // {x^2, x^3, x*y} -> {x^2, x*y}
        assert_eq!(ideal("x^2, x^3, x*y", &v), ideal("x^2, x*y", &v));
        assert!(MonomialIdeal::zero(v).is_zero());
    }

    #[test]
    fn contains_checks_divisibility() {
        let v = vars2();
        let i = ideal("x^2, x*y", &v);
        assert!(i.contains(&Monomial::new(vec![2, 3])));
        assert!(!i.contains(&Monomial::new(vec![1, 0])));
        assert!(!MonomialIdeal::zero(v).contains(&Monomial::new(vec![1, 0])));
    }

    #[test]
    fn products_and_powers() {
        let v = vars2();
        assert_eq!(ideal("x, y", &v).power(2), ideal("x^2, x*y, y^2", &v));
        assert_eq!(ideal("x", &v).multiply(&ideal("y", &v)), ideal("x*y", &v));
        assert_eq!(ideal("x", &v).power(0), MonomialIdeal::unit(v.clone()));
        // pairwise products already minimal; cross-checked by the membership
        // oracle to degree 6
        let sq = ideal("x^2, x*y", &v).power(2);
        assert_eq!(sq, ideal("x^4, x^3*y, x^2*y^2", &v));
        let expect = ideal("x^4, x^3*y, x^2*y^2", &v);
        assert!(agree_below(&sq, &expect, 6));
    }

    #[test]
    fn intersections() {
        let v = vars2();
        assert_eq!(ideal("x", &v).intersect(&ideal("y", &v)), ideal("x*y", &v));
        let i = ideal("x", &v).intersect(&ideal("x^2, y", &v));
        assert_eq!(i, ideal("x^2, x*y", &v));
        assert!(agree_below(&i, &ideal("x^2, x*y", &v), 4));
        assert_eq!(
            ideal("x^2, y", &v).intersect(&ideal("x, y^2", &v)),
            ideal("x^2, x*y, y^2", &v)
        );
        // intersecting with the zero ideal yields zero, with the unit ideal is identity
        let z = MonomialIdeal::zero(v.clone());
        assert!(ideal("x", &v).intersect(&z).is_zero());
        assert_eq!(ideal("x", &v).intersect(&MonomialIdeal::unit(v.clone())), ideal("x", &v));
    }

    #[test]
    fn colon_quotients() {
        let v = vars2();
        assert_eq!(ideal("x^2, x*y", &v).colon(&ideal("x", &v)), ideal("x, y", &v));
        assert_eq!(ideal("x^2, x*y", &v).colon(&ideal("x, y", &v)), ideal("x", &v));
        let i = ideal("x^2, x*y", &v);
        assert_eq!(i.colon(&MonomialIdeal::unit(v.clone())), i);
    }

    #[test]
    fn saturations() {
        let v = vars2();
        assert_eq!(ideal("x^2, x*y", &v).saturate(&ideal("x, y", &v)), ideal("x", &v));
        assert_eq!(ideal("x", &v).saturate(&ideal("y", &v)), ideal("x", &v));
        // iterated colon of a (x,y)-primary-containing ideal runs up to the unit ideal
        assert!(ideal("x^2, x*y, y^3", &v).saturate(&ideal("y", &v)).is_unit());
    }

    #[test]
    fn radicals() {
        let v = vars2();
        assert_eq!(ideal("x^2, x*y", &v).radical(), ideal("x", &v));
        assert_eq!(ideal("x^2, y^3", &v).radical(), ideal("x, y", &v));
        let sqfree = ideal("x*y", &v);
        assert_eq!(sqfree.radical(), sqfree);
    }

    #[test]
    fn standard_monomials() {
        let v = vars2();
        let i = ideal("x^2, x*y", &v);
        let below: Vec<String> = i
            .standard_monomials_below(DegreeBound(2))
            .iter()
            .map(|m| m.display(&v).to_string())
            .collect();
        assert_eq!(below, vec!["1", "x", "y", "y^2"]);
        assert!(MonomialIdeal::unit(v.clone())
            .standard_monomials_below(DegreeBound(5))
            .is_empty());
        let zero = MonomialIdeal::zero(v.clone());
        assert_eq!(zero.standard_monomials_below(DegreeBound(1)).len(), 3);
    }
}
