//! Monomials as exponent vectors over a fixed ambient variable set.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::vars::VariableSet;

/// A monomial `x^a`, stored as the exponent vector `a`. The vector length
/// must match the arity of the ambient [`VariableSet`]; the unit monomial is
/// the all-zeros vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The monomial 1.
    pub fn unit(arity: usize) -> Self {
        Monomial { exps: vec![0; arity] }
    }

    /// The variable `x_i`.
    pub fn variable(index: usize, arity: usize) -> Self {
        Self::pure_power(index, 1, arity)
    }

    /// The pure power `x_i^e`.
    pub fn pure_power(index: usize, exp: u32, arity: usize) -> Self {
        let mut exps = vec![0; arity];
        exps[index] = exp;
        Monomial { exps }
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.exps[index]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    pub fn support_set(&self) -> BTreeSet<usize> {
        self.support().collect()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.arity(), other.arity());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Monomial { exps }
    }

    pub fn times_var(&self, index: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[index] = exps[index].checked_add(1).expect("exponent overflow");
        Monomial { exps }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        Monomial { exps }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect();
        Monomial { exps }
    }

    /// `self / gcd(self, divisor)`: the generator map of a colon by a monomial.
    pub fn colon(&self, divisor: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), divisor.arity());
        let exps = self
            .exps
            .iter()
            .zip(&divisor.exps)
            .map(|(a, b)| a - (*a).min(*b))
            .collect();
        Monomial { exps }
    }

    /// Exponents clamped to one: the generator of the radical.
    pub fn squarefree_part(&self) -> Monomial {
        let exps = self.exps.iter().map(|&e| e.min(1)).collect();
        Monomial { exps }
    }

    /// Drops all variables outside `keep` (sets their exponents to zero in a
    /// re-indexed vector over the restricted ring).
    pub fn restrict(&self, keep: &BTreeSet<usize>) -> Monomial {
        let exps = keep.iter().map(|&i| self.exps[i]).collect();
        Monomial { exps }
    }

    /// Re-embeds a restricted monomial into the full ring, placing exponent
    /// `j` of `self` at ambient index `keep[j]`.
    pub fn embed(&self, keep: &BTreeSet<usize>, arity: usize) -> Monomial {
        let mut exps = vec![0; arity];
        for (slot, &i) in keep.iter().enumerate() {
            exps[i] = self.exps[slot];
        }
        Monomial { exps }
    }

    pub fn display<'a>(&'a self, vars: &'a VariableSet) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, vars }
    }
}

/// Graded order: by total degree, ties broken so that earlier variables sort
/// first (`x^2 < x*y < y^2`). This is the canonical order used everywhere for
/// generator lists and standard-monomial enumeration.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    vars: &'a VariableSet,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.mono.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.vars.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
