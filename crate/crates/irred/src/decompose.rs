//! Irreducible and primary decomposition of monomial ideals.
//!
//! A monomial ideal is irreducible exactly when it is generated by pure
//! variable powers. Every proper monomial ideal has a unique irredundant
//! irreducible decomposition; [`irreducible_decomposition`] computes it by
//! generator splitting. Grouping the components by radical yields the
//! canonical irredundant primary decomposition, whose embedded components are
//! all maximal embedded components.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::error::{DecomposeError, MaxEmbeddedError};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::socle::socle_dimension_at;
use crate::vars::VariableSet;

/// A monomial prime `<x_i : i in vars>`, stored as ambient variable indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeSupport {
    vars: BTreeSet<usize>,
}

impl PrimeSupport {
    /// Builds a prime support; the set must be nonempty.
    pub fn new(vars: BTreeSet<usize>) -> Self {
        assert!(!vars.is_empty(), "a monomial prime needs at least one variable");
        PrimeSupport { vars }
    }

    pub fn from_names(names: &[&str], ambient: &VariableSet) -> Option<Self> {
        let mut vars = BTreeSet::new();
        for name in names {
            vars.insert(ambient.index_of(name)?);
        }
        if vars.is_empty() {
            return None;
        }
        Some(PrimeSupport { vars })
    }

    pub fn vars(&self) -> &BTreeSet<usize> {
        &self.vars
    }

    pub fn height(&self) -> usize {
        self.vars.len()
    }

    pub fn contains(&self, other: &PrimeSupport) -> bool {
        other.vars.is_subset(&self.vars)
    }

    /// The prime as an ideal of the ambient ring.
    pub fn ideal(&self, ambient: &Arc<VariableSet>) -> MonomialIdeal {
        let gens = self
            .vars
            .iter()
            .map(|&i| Monomial::variable(i, ambient.arity()))
            .collect();
        MonomialIdeal::new(ambient.clone(), gens)
    }

    pub fn display<'a>(&'a self, ambient: &'a VariableSet) -> PrimeDisplay<'a> {
        PrimeDisplay { prime: self, ambient }
    }
}

pub struct PrimeDisplay<'a> {
    prime: &'a PrimeSupport,
    ambient: &'a VariableSet,
}

impl fmt::Display for PrimeDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.prime.vars.iter().map(|&i| self.ambient.name(i)).collect();
        write!(f, "({})", names.join(","))
    }
}

/// An irreducible monomial ideal `<x_i^{a_i} : i in domain>`, as the partial
/// map variable -> positive exponent. The empty map is the distinguished
/// zero-ideal component.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IrreducibleComponent {
    powers: BTreeMap<usize, u32>,
}

impl IrreducibleComponent {
    pub fn new(powers: BTreeMap<usize, u32>) -> Self {
        assert!(powers.values().all(|&e| e >= 1), "exponents must be positive");
        IrreducibleComponent { powers }
    }

    pub fn zero_component() -> Self {
        IrreducibleComponent { powers: BTreeMap::new() }
    }

    pub fn is_zero_component(&self) -> bool {
        self.powers.is_empty()
    }

    pub fn powers(&self) -> &BTreeMap<usize, u32> {
        &self.powers
    }

    /// Support of the component; `None` for the zero-ideal component, whose
    /// prime is the zero prime rather than a monomial prime.
    pub fn support(&self) -> Option<PrimeSupport> {
        if self.powers.is_empty() {
            return None;
        }
        Some(PrimeSupport { vars: self.powers.keys().copied().collect() })
    }

    pub fn as_ideal(&self, ambient: &Arc<VariableSet>) -> MonomialIdeal {
        let gens = self
            .powers
            .iter()
            .map(|(&i, &e)| Monomial::pure_power(i, e, ambient.arity()))
            .collect();
        MonomialIdeal::new(ambient.clone(), gens)
    }

    fn from_pure_powers(ideal: &MonomialIdeal) -> Self {
        debug_assert!(ideal.is_pure_powers() && !ideal.is_unit());
        let mut powers = BTreeMap::new();
        for g in ideal.gens() {
            let i = g.support().next().expect("pure power has one variable");
            powers.insert(i, g.exponent(i));
        }
        IrreducibleComponent { powers }
    }
}

/// A primary ideal together with its associated prime.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PrimaryComponent {
    ideal: MonomialIdeal,
    prime: PrimeSupport,
}

impl PrimaryComponent {
    /// Validates that `ideal` is `prime`-primary: its radical is the prime
    /// and every irreducible component has support equal to the prime.
    pub fn new(ideal: MonomialIdeal, prime: PrimeSupport) -> Result<Self, DecomposeError> {
        if ideal.is_unit() {
            return Err(DecomposeError::UnitIdeal);
        }
        if ideal.radical() != prime.ideal(ideal.vars()) {
            return Err(DecomposeError::NotPrimary);
        }
        let comps = irreducible_decomposition(&ideal)?;
        if !comps.iter().all(|c| c.support().as_ref() == Some(&prime)) {
            return Err(DecomposeError::NotPrimary);
        }
        Ok(PrimaryComponent { ideal, prime })
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn prime(&self) -> &PrimeSupport {
        &self.prime
    }
}

/// An irredundant primary decomposition of a target ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    target: MonomialIdeal,
    components: Vec<PrimaryComponent>,
}

impl Decomposition {
    pub fn target(&self) -> &MonomialIdeal {
        &self.target
    }

    pub fn components(&self) -> &[PrimaryComponent] {
        &self.components
    }
}

struct Splitter {
    vars: Arc<VariableSet>,
    memo: HashMap<Vec<Monomial>, Arc<BTreeSet<IrreducibleComponent>>>,
}

impl Splitter {
    fn solve(&mut self, ideal: &MonomialIdeal) -> Arc<BTreeSet<IrreducibleComponent>> {
        if let Some(hit) = self.memo.get(ideal.gens()) {
            return hit.clone();
        }
        let result = if ideal.is_pure_powers() {
            let mut set = BTreeSet::new();
            set.insert(IrreducibleComponent::from_pure_powers(ideal));
            set
        } else {
            // first mixed generator in canonical order; split off its lowest
            // variable power
            let mixed = ideal
                .gens()
                .iter()
                .find(|g| g.support().count() >= 2)
                .expect("non-pure ideal has a mixed generator")
                .clone();
            let i = mixed.support().next().expect("mixed generator has support");
            let power = Monomial::pure_power(i, mixed.exponent(i), self.vars.arity());
            let rest = mixed.colon(&power);
            let left = ideal.sum(&MonomialIdeal::new(self.vars.clone(), vec![power]));
            let right = ideal.sum(&MonomialIdeal::new(self.vars.clone(), vec![rest]));
            let mut set: BTreeSet<IrreducibleComponent> = (*self.solve(&left)).clone();
            set.extend((*self.solve(&right)).iter().cloned());
            set
        };
        let result = Arc::new(result);
        self.memo.insert(ideal.gens().to_vec(), result.clone());
        result
    }
}

/// Drops every component that contains the intersection of the others,
/// leaving the unique irredundant antichain.
fn irredundant_filter(
    vars: &Arc<VariableSet>,
    comps: BTreeSet<IrreducibleComponent>,
) -> Vec<IrreducibleComponent> {
    let comps: Vec<IrreducibleComponent> = comps.into_iter().collect();
    if comps.len() <= 1 {
        return comps;
    }
    let ideals: Vec<MonomialIdeal> = comps.iter().map(|c| c.as_ideal(vars)).collect();
    // prefix[i] = intersection of ideals[..i], suffix[i] = intersection of ideals[i+1..]
    let n = ideals.len();
    let mut prefix = Vec::with_capacity(n + 1);
    prefix.push(MonomialIdeal::unit(vars.clone()));
    for ideal in &ideals {
        let last = prefix.last().expect("nonempty").intersect(ideal);
        prefix.push(last);
    }
    let mut suffix = vec![MonomialIdeal::unit(vars.clone()); n + 1];
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1].intersect(&ideals[i]);
    }
    comps
        .into_iter()
        .enumerate()
        .filter(|(i, _)| {
            let others = prefix[*i].intersect(&suffix[i + 1]);
            !ideals[*i].contains_ideal(&others)
        })
        .map(|(_, c)| c)
        .collect()
}

/// The unique irredundant irreducible decomposition of a proper monomial
/// ideal, in canonical component order. The zero ideal decomposes as the
/// distinguished zero component.
pub fn irreducible_decomposition(
    ideal: &MonomialIdeal,
) -> Result<Vec<IrreducibleComponent>, DecomposeError> {
    if ideal.is_unit() {
        return Err(DecomposeError::UnitIdeal);
    }
    if ideal.is_zero() {
        return Ok(vec![IrreducibleComponent::zero_component()]);
    }
    let mut splitter = Splitter { vars: ideal.vars().clone(), memo: HashMap::new() };
    let comps = (*splitter.solve(ideal)).clone();
    Ok(irredundant_filter(ideal.vars(), comps))
}

/// The associated primes: supports of the irreducible components. For the
/// zero ideal the associated prime is the zero prime, which has no
/// `PrimeSupport`; the returned set is then empty.
pub fn associated_primes(ideal: &MonomialIdeal) -> Result<BTreeSet<PrimeSupport>, DecomposeError> {
    let comps = irreducible_decomposition(ideal)?;
    Ok(comps.iter().filter_map(IrreducibleComponent::support).collect())
}

fn minimal_of(primes: &BTreeSet<PrimeSupport>) -> BTreeSet<PrimeSupport> {
    primes
        .iter()
        .filter(|p| !primes.iter().any(|q| q != *p && p.contains(q)))
        .cloned()
        .collect()
}

/// Minimal elements of the associated primes under inclusion.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<BTreeSet<PrimeSupport>, DecomposeError> {
    Ok(minimal_of(&associated_primes(ideal)?))
}

/// Associated primes that strictly contain another associated prime.
pub fn embedded_primes(ideal: &MonomialIdeal) -> Result<BTreeSet<PrimeSupport>, DecomposeError> {
    let ass = associated_primes(ideal)?;
    let min = minimal_of(&ass);
    Ok(ass.into_iter().filter(|p| !min.contains(p)).collect())
}

/// Big height: the maximum height of a minimal prime.
pub fn bight(ideal: &MonomialIdeal) -> Result<u32, DecomposeError> {
    if ideal.is_zero() {
        return Err(DecomposeError::ZeroIdeal);
    }
    let min = minimal_primes(ideal)?;
    Ok(min.iter().map(|p| p.height() as u32).max().expect("proper nonzero ideal has a prime"))
}

/// Number of components of the irredundant irreducible decomposition.
pub fn ir_components(ideal: &MonomialIdeal) -> Result<u64, DecomposeError> {
    Ok(irreducible_decomposition(ideal)?.len() as u64)
}

/// Number of irreducible components supported exactly at `prime`.
pub fn ir_at_prime(ideal: &MonomialIdeal, prime: &PrimeSupport) -> Result<u64, DecomposeError> {
    let comps = irreducible_decomposition(ideal)?;
    Ok(comps
        .iter()
        .filter(|c| c.support().as_ref() == Some(prime))
        .count() as u64)
}

/// Groups the irreducible components by radical into the canonical
/// irredundant primary decomposition: one component per associated prime.
/// Every embedded component of this decomposition is a maximal embedded
/// component.
pub fn canonical_primary_decomposition(
    ideal: &MonomialIdeal,
) -> Result<Decomposition, DecomposeError> {
    if ideal.is_zero() {
        // the zero ideal is prime; it is its own (trivial) decomposition
        return Ok(Decomposition { target: ideal.clone(), components: Vec::new() });
    }
    let comps = irreducible_decomposition(ideal)?;
    let mut groups: BTreeMap<PrimeSupport, Vec<MonomialIdeal>> = BTreeMap::new();
    for c in &comps {
        let prime = c.support().expect("nonzero ideal has supported components");
        groups.entry(prime).or_default().push(c.as_ideal(ideal.vars()));
    }
    let components: Vec<PrimaryComponent> = groups
        .into_iter()
        .map(|(prime, ideals)| PrimaryComponent {
            ideal: MonomialIdeal::intersect_many(ideal.vars().clone(), ideals.iter()),
            prime,
        })
        .collect();
    let decomposition = Decomposition { target: ideal.clone(), components };
    debug_assert!(is_irredundant_primary_decomposition(ideal, decomposition.components()));
    Ok(decomposition)
}

/// Checks the three conditions for an irredundant primary decomposition:
/// the intersection equals the target, the primes are pairwise distinct, and
/// dropping any single component strictly enlarges the intersection.
pub fn is_irredundant_primary_decomposition(
    ideal: &MonomialIdeal,
    comps: &[PrimaryComponent],
) -> bool {
    if comps.is_empty() {
        return false;
    }
    let vars = ideal.vars().clone();
    let all = MonomialIdeal::intersect_many(vars.clone(), comps.iter().map(PrimaryComponent::ideal));
    if &all != ideal {
        return false;
    }
    let mut primes: Vec<&PrimeSupport> = comps.iter().map(PrimaryComponent::prime).collect();
    primes.sort();
    primes.dedup();
    if primes.len() != comps.len() {
        return false;
    }
    for skip in 0..comps.len() {
        let rest = MonomialIdeal::intersect_many(
            vars.clone(),
            comps
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .map(|(_, c)| c.ideal()),
        );
        if &rest == ideal {
            return false;
        }
    }
    true
}

/// Decides whether `candidate` is a maximal embedded component of `ideal`,
/// by comparing its component count with the socle dimension at its prime.
///
/// Preconditions checked here: the candidate's prime must be an embedded
/// prime of `ideal`, and the candidate must verifiably appear in some
/// irredundant primary decomposition (tested by mixing it with the canonical
/// components at all other primes). A mix-in failure is reported as
/// [`MaxEmbeddedError::MembershipNotVerified`], not as non-membership.
pub fn is_maximal_embedded_component(
    ideal: &MonomialIdeal,
    candidate: &PrimaryComponent,
) -> Result<bool, MaxEmbeddedError> {
    let embedded = embedded_primes(ideal).map_err(|_| MaxEmbeddedError::NotEmbedded)?;
    if !embedded.contains(candidate.prime()) {
        return Err(MaxEmbeddedError::NotEmbedded);
    }
    let canonical = canonical_primary_decomposition(ideal).expect("proper ideal decomposes");
    let mut mixed: Vec<PrimaryComponent> = canonical
        .components()
        .iter()
        .filter(|c| c.prime() != candidate.prime())
        .cloned()
        .collect();
    mixed.push(candidate.clone());
    if !is_irredundant_primary_decomposition(ideal, &mixed) {
        return Err(MaxEmbeddedError::MembershipNotVerified);
    }
    let count = ir_components(candidate.ideal()).expect("primary component is proper");
    Ok(count == socle_dimension_at(ideal, candidate.prime()) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::DegreeBound;
    use crate::parse::parse_ideal;

    fn vars(names: &[&str]) -> Arc<VariableSet> {
        VariableSet::new(names.iter().copied()).unwrap()
    }

    fn ideal(text: &str, v: &Arc<VariableSet>) -> MonomialIdeal {
        parse_ideal(text, v).unwrap()
    }

    fn comp_ideals(v: &Arc<VariableSet>, comps: &[IrreducibleComponent]) -> Vec<String> {
        comps.iter().map(|c| c.as_ideal(v).to_string()).collect()
    }

    #[test]
    fn splits_two_variable_example() {
        let v = vars(&["x", "y"]);
        let i = ideal("x^2, x*y", &v);
        let comps = irreducible_decomposition(&i).unwrap();
        assert_eq!(comp_ideals(&v, &comps), vec!["x", "y, x^2"]);
        // soundness oracle: the intersection agrees with the ideal
        let ideals: Vec<MonomialIdeal> = comps.iter().map(|c| c.as_ideal(&v)).collect();
        let inter = MonomialIdeal::intersect_many(v.clone(), ideals.iter());
        assert_eq!(
            inter.standard_monomials_below(DegreeBound(5)),
            i.standard_monomials_below(DegreeBound(5))
        );
    }

    #[test]
    fn triangle_edge_ideal_components_are_the_covers() {
        let v = vars(&["x", "y", "z"]);
        let comps = irreducible_decomposition(&ideal("x*y, y*z, z*x", &v)).unwrap();
        assert_eq!(comp_ideals(&v, &comps), vec!["x, y", "x, z", "y, z"]);
    }

    #[test]
    fn hexagon_edge_ideal_has_five_prime_components() {
        let v = VariableSet::numbered("x", 6);
        let hex = ideal("x1*x2, x2*x3, x3*x4, x4*x5, x5*x6, x6*x1", &v);
        let comps = irreducible_decomposition(&hex).unwrap();
        assert_eq!(comps.len(), 5);
        let mut supports: Vec<Vec<usize>> = comps
            .iter()
            .map(|c| c.support().unwrap().vars().iter().map(|&i| i + 1).collect())
            .collect();
        supports.sort();
        assert_eq!(
            supports,
            vec![
                vec![1, 2, 4, 5],
                vec![1, 3, 4, 6],
                vec![1, 3, 5],
                vec![2, 3, 5, 6],
                vec![2, 4, 6],
            ]
        );
        let heights: BTreeMap<usize, usize> =
            supports.iter().fold(BTreeMap::new(), |mut acc, s| {
                *acc.entry(s.len()).or_default() += 1;
                acc
            });
        assert_eq!(heights, BTreeMap::from([(3, 2), (4, 3)]));
        assert_eq!(bight(&hex).unwrap(), 4);
    }

    #[test]
    fn associated_minimal_and_embedded() {
        let v = vars(&["x", "y"]);
        let i = ideal("x^2, x*y", &v);
        let ass = associated_primes(&i).unwrap();
        assert_eq!(ass.len(), 2);
        let min = minimal_primes(&i).unwrap();
        let emb = embedded_primes(&i).unwrap();
        assert_eq!(min.len(), 1);
        assert_eq!(min.iter().next().unwrap().vars().len(), 1);
        assert_eq!(emb.len(), 1);
        assert_eq!(emb.iter().next().unwrap().vars().len(), 2);
        assert_eq!(bight(&i).unwrap(), 1);

        // a primary ideal has one associated prime and no embedded ones
        let primary = ideal("x^2, y^2", &v);
        assert_eq!(associated_primes(&primary).unwrap().len(), 1);
        assert!(embedded_primes(&primary).unwrap().is_empty());

        // prime ideal in a bigger ring
        let v3 = vars(&["x", "y", "z"]);
        assert_eq!(bight(&ideal("x, y", &v3)).unwrap(), 2);
        let tri = ideal("x*y, y*z, z*x", &v3);
        assert!(embedded_primes(&tri).unwrap().is_empty());
        assert_eq!(minimal_primes(&tri).unwrap().len(), 3);
    }

    #[test]
    fn component_counts() {
        let v = vars(&["x", "y"]);
        assert_eq!(ir_components(&ideal("x^2, x*y", &v)).unwrap(), 2);
        assert_eq!(ir_components(&ideal("x^3, y^4", &v)).unwrap(), 1);
        assert_eq!(ir_components(&MonomialIdeal::zero(v.clone())).unwrap(), 1);
        let i = ideal("x^2, x*y", &v);
        let px = PrimeSupport::from_names(&["x"], &v).unwrap();
        let pxy = PrimeSupport::from_names(&["x", "y"], &v).unwrap();
        let py = PrimeSupport::from_names(&["y"], &v).unwrap();
        assert_eq!(ir_at_prime(&i, &px).unwrap(), 1);
        assert_eq!(ir_at_prime(&i, &pxy).unwrap(), 1);
        assert_eq!(ir_at_prime(&i, &py).unwrap(), 0);
    }

    #[test]
    fn canonical_decomposition_groups_by_prime() {
        let v = vars(&["x", "y"]);
        let i = ideal("x^2, x*y", &v);
        let dec = canonical_primary_decomposition(&i).unwrap();
        let texts: Vec<String> = dec.components().iter().map(|c| c.ideal().to_string()).collect();
        assert_eq!(texts, vec!["x", "y, x^2"]);
        // an irreducible ideal is its own single component
        let irr = ideal("x^2, y^3", &v);
        let dec = canonical_primary_decomposition(&irr).unwrap();
        assert_eq!(dec.components().len(), 1);
        assert_eq!(dec.components()[0].ideal(), &irr);
    }

    #[test]
    fn irredundancy_checks() {
        let v = vars(&["x", "y"]);
        let i = ideal("x^2, x*y", &v);
        let px = PrimeSupport::from_names(&["x"], &v).unwrap();
        let pxy = PrimeSupport::from_names(&["x", "y"], &v).unwrap();
        let good = vec![
            PrimaryComponent { ideal: ideal("x", &v), prime: px.clone() },
            PrimaryComponent { ideal: ideal("x^2, y", &v), prime: pxy.clone() },
        ];
        assert!(is_irredundant_primary_decomposition(&i, &good));

        // duplicate prime
        let dup = vec![
            good[0].clone(),
            good[1].clone(),
            PrimaryComponent { ideal: ideal("x^3, y^2", &v), prime: pxy.clone() },
        ];
        assert!(!is_irredundant_primary_decomposition(&i, &dup));

        // wrong intersection
        let wrong = vec![
            good[0].clone(),
            PrimaryComponent { ideal: ideal("x, y^2", &v), prime: pxy.clone() },
        ];
        assert!(!is_irredundant_primary_decomposition(&i, &wrong));

        // non-maximal embedded component still gives a valid decomposition
        let non_maximal = vec![
            good[0].clone(),
            PrimaryComponent { ideal: ideal("x^2, x*y, y^2", &v), prime: pxy.clone() },
        ];
        assert!(is_irredundant_primary_decomposition(&i, &non_maximal));
    }

    #[test]
    fn maximal_embedded_component_predicate() {
        let v = vars(&["x", "y"]);
        let i = ideal("x^2, x*y", &v);
        let pxy = PrimeSupport::from_names(&["x", "y"], &v).unwrap();
        let canonical = PrimaryComponent { ideal: ideal("x^2, y", &v), prime: pxy.clone() };
        assert_eq!(is_maximal_embedded_component(&i, &canonical), Ok(true));
        for k in 2..6 {
            let smaller = PrimaryComponent {
                ideal: ideal(&format!("x^2, x*y, y^{k}"), &v),
                prime: pxy.clone(),
            };
            assert_eq!(is_maximal_embedded_component(&i, &smaller), Ok(false));
        }
        // not an embedded prime
        let px = PrimeSupport::from_names(&["x"], &v).unwrap();
        let at_min = PrimaryComponent { ideal: ideal("x", &v), prime: px };
        assert_eq!(
            is_maximal_embedded_component(&i, &at_min),
            Err(MaxEmbeddedError::NotEmbedded)
        );
        // fails the membership test: intersection misses the target
        let bogus = PrimaryComponent { ideal: ideal("x^3, y", &v), prime: pxy };
        assert_eq!(
            is_maximal_embedded_component(&i, &bogus),
            Err(MaxEmbeddedError::MembershipNotVerified)
        );
    }

    #[test]
    fn unit_ideal_is_rejected() {
        let v = vars(&["x", "y"]);
        let unit = MonomialIdeal::unit(v);
        assert_eq!(irreducible_decomposition(&unit), Err(DecomposeError::UnitIdeal));
    }
}
