//! Localization at monomial primes, socle dimensions, and the socle-sum
//! route to the index of reducibility.
//!
//! The index of reducibility of a proper ideal equals the sum over the
//! associated primes of the socle dimension of the localized quotient. For
//! monomial ideals every socle is spanned by monomials, so all dimensions
//! are monomial counts and no field arithmetic appears anywhere. This route
//! never touches the irreducible decomposition, which makes it the cheap way
//! to evaluate `ir` on large powers; agreement of the two routes is one of
//! the verification suite's core checks.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::decompose::{irreducible_decomposition, ir_components, PrimeSupport};
use crate::error::DecomposeError;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// A monomial ideal pushed into the sub-polynomial-ring on a prime's
/// variables. Variables outside the prime become units and disappear; the
/// residue field at the prime is never materialized, so every dimension over
/// it is a monomial count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalizedIdeal {
    pub prime: PrimeSupport,
    pub restricted: MonomialIdeal,
}

/// Localizes `ideal` at the monomial prime `prime`: every generator keeps
/// only its exponents on the prime's variables. The result can be the unit
/// ideal (exactly when no associated prime of `ideal` lies inside `prime`).
pub fn localize_at(ideal: &MonomialIdeal, prime: &PrimeSupport) -> LocalizedIdeal {
    let keep = prime.vars();
    let sub = ideal.vars().restrict(keep);
    let gens = ideal.gens().iter().map(|g| g.restrict(keep)).collect();
    LocalizedIdeal { prime: prime.clone(), restricted: MonomialIdeal::new(sub, gens) }
}

/// The socle dimension of the localized quotient at `prime`: the number of
/// monomials in `(I' : m) ∩ sat(I', m)` outside `I'`, where `I'` is the
/// localized ideal and `m` the maximal ideal of the restricted ring. The
/// count is finite; the enumeration carries a guard that aborts if a
/// candidate ever escapes the per-variable exponent box, which would signal
/// an implementation fault. Returns 0 exactly for non-associated primes.
pub fn socle_dimension_at(ideal: &MonomialIdeal, prime: &PrimeSupport) -> usize {
    let restricted = localize_at(ideal, prime).restricted;
    if restricted.is_unit() || restricted.is_zero() {
        return 0;
    }
    let arity = restricted.vars().arity();
    // every monomial of (I':m) \ I' has exponent < max exponent in each
    // variable; a variable absent from all generators forces emptiness
    let bounds: Vec<u32> = (0..arity).map(|j| restricted.max_exponent(j)).collect();
    if bounds.contains(&0) {
        return 0;
    }
    let maximal = MonomialIdeal::new(
        restricted.vars().clone(),
        (0..arity).map(|i| Monomial::variable(i, arity)).collect(),
    );
    let quotient = restricted.colon(&maximal);
    if quotient == restricted {
        return 0;
    }
    let saturation = restricted.saturate(&maximal);
    let torsion = quotient.intersect(&saturation);

    // walk the (finite) monomial set torsion \ restricted upward from the
    // generators of torsion
    let cap: u128 = bounds.iter().map(|&b| u128::from(b) + 1).product();
    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut queue: VecDeque<Monomial> = VecDeque::new();
    for g in torsion.gens() {
        if !restricted.contains(g) && seen.insert(g.clone()) {
            queue.push_back(g.clone());
        }
    }
    while let Some(s) = queue.pop_front() {
        for (j, &bound) in bounds.iter().enumerate() {
            let t = s.times_var(j);
            if restricted.contains(&t) || seen.contains(&t) {
                continue;
            }
            assert!(
                t.exponent(j) < bound && (seen.len() as u128) < cap,
                "socle enumeration escaped its finite box; this is a bug"
            );
            seen.insert(t.clone());
            queue.push_back(t);
        }
    }
    seen.len()
}

/// Union of generator supports.
fn union_support(ideal: &MonomialIdeal) -> BTreeSet<usize> {
    ideal.gens().iter().flat_map(|g| g.support_set()).collect()
}

/// Minimal primes computed from the radical, whose decomposition is cheap
/// because squarefree ideals have no embedded primes.
pub(crate) fn minimal_primes_of_radical(
    ideal: &MonomialIdeal,
) -> Result<BTreeSet<PrimeSupport>, DecomposeError> {
    let comps = irreducible_decomposition(&ideal.radical())?;
    Ok(comps.iter().filter_map(|c| c.support()).collect())
}

/// All monomial primes that could be associated to `ideal`: the subsets of
/// the union support containing at least one minimal prime.
pub(crate) fn candidate_primes(
    ideal: &MonomialIdeal,
) -> Result<BTreeSet<PrimeSupport>, DecomposeError> {
    let minimal = minimal_primes_of_radical(ideal)?;
    let support = union_support(ideal);
    let mut out = BTreeSet::new();
    for base in &minimal {
        let free: Vec<usize> = support.difference(base.vars()).copied().collect();
        for mask in 0u64..(1u64 << free.len()) {
            let mut vars = base.vars().clone();
            for (bit, &v) in free.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    vars.insert(v);
                }
            }
            out.insert(PrimeSupport::new(vars));
        }
    }
    Ok(out)
}

/// Associated primes detected by socle positivity, without computing any
/// irreducible decomposition of `ideal` itself. Agrees with
/// [`crate::decompose::associated_primes`]; empty for the zero ideal, whose
/// associated prime is the zero prime.
pub fn associated_primes_via_socle(
    ideal: &MonomialIdeal,
) -> Result<BTreeSet<PrimeSupport>, DecomposeError> {
    if ideal.is_unit() {
        return Err(DecomposeError::UnitIdeal);
    }
    if ideal.is_zero() {
        return Ok(BTreeSet::new());
    }
    Ok(candidate_primes(ideal)?
        .into_iter()
        .filter(|p| socle_dimension_at(ideal, p) > 0)
        .collect())
}

/// The index of reducibility as the socle sum over the associated primes.
/// The zero ideal is prime with `ir = 1`.
pub fn ir_socle(ideal: &MonomialIdeal) -> Result<u64, DecomposeError> {
    if ideal.is_unit() {
        return Err(DecomposeError::UnitIdeal);
    }
    if ideal.is_zero() {
        return Ok(1);
    }
    let mut total = 0u64;
    for p in candidate_primes(ideal)? {
        total += socle_dimension_at(ideal, &p) as u64;
    }
    Ok(total)
}

/// The index of reducibility. Computed by the socle route.
pub fn ir(ideal: &MonomialIdeal) -> Result<u64, DecomposeError> {
    ir_socle(ideal)
}

/// The index of reducibility with the dual-route cross-check: computes both
/// the socle sum and the component count and panics on disagreement, which
/// would signal an implementation bug.
pub fn ir_verified(ideal: &MonomialIdeal) -> Result<u64, DecomposeError> {
    let by_socle = ir_socle(ideal)?;
    let by_components = ir_components(ideal)?;
    assert_eq!(
        by_socle, by_components,
        "socle route and component count disagree on `{ideal}`; this is a bug"
    );
    Ok(by_socle)
}
