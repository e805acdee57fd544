//! Seeded corpus generation and executable verification of the library's
//! structural statements at desk scale.
//!
//! Each verifier turns one statement into a pass/fail/skip report over a
//! concrete ideal. Failures carry a serialized witness sufficient to replay
//! the instance. Identical configuration always yields byte-identical
//! reports.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::decompose::{
    associated_primes, canonical_primary_decomposition, embedded_primes, ir_at_prime,
    ir_components, is_irredundant_primary_decomposition, is_maximal_embedded_component,
    PrimaryComponent, PrimeSupport,
};
use crate::error::SpecError;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::parse::parse_ideal;
use crate::powers::{ir_polynomial, symbolic_ir_polynomial, ScanConfig};
use crate::socle::{associated_primes_via_socle, ir, ir_socle, socle_dimension_at};
use crate::vars::VariableSet;

/// Deterministic corpus description: the same spec always produces the same
/// ideal list, bit for bit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusSpec {
    pub seed: u64,
    pub arity: u32,
    pub n_gens: u32,
    pub max_exp: u32,
    pub count: u32,
}

/// Draws `count` proper monomial ideals with exponents uniform in
/// `[0, max_exp]`, rejecting unit and zero draws, minimalized.
pub fn random_monomial_ideals(spec: &CorpusSpec) -> Result<Vec<MonomialIdeal>, SpecError> {
    if spec.arity < 1 || spec.n_gens < 1 || spec.max_exp < 1 {
        return Err(SpecError::Degenerate(format!(
            "arity, n_gens and max_exp must be positive (got {}, {}, {})",
            spec.arity, spec.n_gens, spec.max_exp
        )));
    }
    let vars = VariableSet::numbered("x", spec.arity as usize);
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut out = Vec::with_capacity(spec.count as usize);
    while out.len() < spec.count as usize {
        let gens: Vec<Monomial> = (0..spec.n_gens)
            .map(|_| {
                Monomial::new(
                    (0..spec.arity)
                        .map(|_| rng.gen_range(0..=spec.max_exp))
                        .collect(),
                )
            })
            .collect();
        let ideal = MonomialIdeal::new(vars.clone(), gens);
        if ideal.is_unit() || ideal.is_zero() {
            continue;
        }
        out.push(ideal);
    }
    Ok(out)
}

/// The statements the suite can check, with their stable wire identifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Statement {
    /// Dual-route count: component count equals the socle sum, totally and
    /// per prime.
    DualRouteCount,
    /// Additivity of `ir` over the canonical primary decomposition.
    AdditivitySufficiency,
    /// Perturbed (non-maximal) embedded components strictly inflate the sum.
    AdditivityNecessity,
    /// Per-prime component count equals the per-prime socle dimension.
    PerPrimeCount,
    /// Degree of the fitted power polynomial sits between `bight - 1` and
    /// `spread - 1`.
    PowerDegreeBounds,
    /// Degree of the fitted symbolic-power polynomial equals `bight - 1`.
    SymbolicDegree,
    /// Binomial formula for powers of monomial parameter ideals.
    ParameterBinomial,
}

impl Statement {
    pub const ALL: [Statement; 7] = [
        Statement::DualRouteCount,
        Statement::AdditivitySufficiency,
        Statement::AdditivityNecessity,
        Statement::PerPrimeCount,
        Statement::PowerDegreeBounds,
        Statement::SymbolicDegree,
        Statement::ParameterBinomial,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Statement::DualRouteCount => "lemma-2.3",
            Statement::AdditivitySufficiency => "thm-3.2-suff",
            Statement::AdditivityNecessity => "thm-3.2-nec",
            Statement::PerPrimeCount => "cor-3.4-i",
            Statement::PowerDegreeBounds => "thm-4.1",
            Statement::SymbolicDegree => "prop-symbolic",
            Statement::ParameterBinomial => "cor-5.3",
        }
    }
}

impl FromStr for Statement {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Statement::ALL
            .into_iter()
            .find(|st| st.id() == s)
            .ok_or_else(|| format!("unknown statement id `{s}`"))
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.id())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyResult {
    Pass,
    Fail,
    Skip,
}

impl VerifyResult {
    pub fn as_str(self) -> &'static str {
        match self {
            VerifyResult::Pass => "pass",
            VerifyResult::Fail => "fail",
            VerifyResult::Skip => "skip",
        }
    }
}

/// One verifier outcome on one instance. A fail's witness replays: feeding
/// it back through the same verifier reproduces the fail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub statement: Statement,
    pub instance: String,
    pub result: VerifyResult,
    pub witness: Option<Value>,
}

impl VerificationReport {
    fn pass(statement: Statement, instance: &str) -> Self {
        VerificationReport { statement, instance: instance.into(), result: VerifyResult::Pass, witness: None }
    }

    fn fail(statement: Statement, instance: &str, witness: Value) -> Self {
        VerificationReport {
            statement,
            instance: instance.into(),
            result: VerifyResult::Fail,
            witness: Some(witness),
        }
    }

    fn skip(statement: Statement, instance: &str, note: &str) -> Self {
        VerificationReport {
            statement,
            instance: instance.into(),
            result: VerifyResult::Skip,
            witness: Some(json!({ "note": note })),
        }
    }
}

fn instance_witness(ideal: &MonomialIdeal) -> Value {
    json!({
        "vars": ideal.vars().to_string(),
        "ideal": ideal.to_string(),
    })
}

fn prime_names(prime: &PrimeSupport, vars: &VariableSet) -> Vec<String> {
    prime.vars().iter().map(|&i| vars.name(i).to_string()).collect()
}

/// Dual-route check: the component count equals the socle sum, and the two
/// routes agree prime by prime.
pub fn verify_dual_route(ideal: &MonomialIdeal, instance: &str) -> VerificationReport {
    let statement = Statement::DualRouteCount;
    let by_components = ir_components(ideal).expect("proper ideal");
    let by_socle = ir_socle(ideal).expect("proper ideal");
    if by_components != by_socle {
        let mut witness = instance_witness(ideal);
        witness["ir_components"] = json!(by_components);
        witness["ir_socle"] = json!(by_socle);
        return VerificationReport::fail(statement, instance, witness);
    }
    for p in associated_primes(ideal).expect("proper ideal") {
        let at_prime = ir_at_prime(ideal, &p).expect("proper ideal");
        let socle = socle_dimension_at(ideal, &p) as u64;
        if at_prime != socle {
            let mut witness = instance_witness(ideal);
            witness["prime"] = json!(prime_names(&p, ideal.vars()));
            witness["ir_at_prime"] = json!(at_prime);
            witness["socle_dimension"] = json!(socle);
            return VerificationReport::fail(statement, instance, witness);
        }
    }
    VerificationReport::pass(statement, instance)
}

/// Per-prime counts agree across the union of both routes' associated
/// primes (a mismatch in either direction is a fail).
pub fn verify_per_prime_count(ideal: &MonomialIdeal, instance: &str) -> VerificationReport {
    let statement = Statement::PerPrimeCount;
    let mut primes = associated_primes(ideal).expect("proper ideal");
    primes.extend(associated_primes_via_socle(ideal).expect("proper ideal"));
    for p in primes {
        let at_prime = ir_at_prime(ideal, &p).expect("proper ideal");
        let socle = socle_dimension_at(ideal, &p) as u64;
        if at_prime != socle {
            let mut witness = instance_witness(ideal);
            witness["prime"] = json!(prime_names(&p, ideal.vars()));
            witness["ir_at_prime"] = json!(at_prime);
            witness["socle_dimension"] = json!(socle);
            return VerificationReport::fail(statement, instance, witness);
        }
    }
    VerificationReport::pass(statement, instance)
}

/// Additivity over the canonical decomposition, whose embedded components
/// are all maximal: the component-count sum must equal `ir` of the target.
pub fn verify_additivity_sufficiency(ideal: &MonomialIdeal, instance: &str) -> VerificationReport {
    let statement = Statement::AdditivitySufficiency;
    let decomposition = canonical_primary_decomposition(ideal).expect("proper ideal");
    let sum: u64 = decomposition
        .components()
        .iter()
        .map(|c| ir_components(c.ideal()).expect("component is proper"))
        .sum();
    let total = ir(ideal).expect("proper ideal");
    if sum == total {
        VerificationReport::pass(statement, instance)
    } else {
        let mut witness = instance_witness(ideal);
        witness["component_sum"] = json!(sum);
        witness["ir"] = json!(total);
        witness["components"] = json!(decomposition
            .components()
            .iter()
            .map(|c| c.ideal().to_string())
            .collect::<Vec<_>>());
        VerificationReport::fail(statement, instance, witness)
    }
}

/// Searches (seeded, bounded) for a strictly smaller primary component at an
/// embedded prime that still appears in an irredundant primary decomposition
/// of `ideal`. Returns `None` when the budget is exhausted.
pub fn perturb_embedded_component(
    ideal: &MonomialIdeal,
    prime: &PrimeSupport,
    seed: u64,
) -> Option<PrimaryComponent> {
    const BUDGET: usize = 500;
    let embedded = embedded_primes(ideal).ok()?;
    if !embedded.contains(prime) {
        return None;
    }
    let decomposition = canonical_primary_decomposition(ideal).expect("proper ideal");
    let canonical_at_p = decomposition
        .components()
        .iter()
        .find(|c| c.prime() == prime)?
        .clone();
    let others: Vec<PrimaryComponent> = decomposition
        .components()
        .iter()
        .filter(|c| c.prime() != prime)
        .cloned()
        .collect();
    let arity = ideal.vars().arity();
    let bump_max = (ideal.max_gen_degree() as u32).saturating_add(2).max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..BUDGET {
        let gens: Vec<Monomial> = prime
            .vars()
            .iter()
            .map(|&i| Monomial::pure_power(i, rng.gen_range(1..=bump_max), arity))
            .collect();
        let candidate = MonomialIdeal::new(ideal.vars().clone(), gens);
        if !candidate.contains_ideal(ideal) {
            continue;
        }
        let meet = canonical_at_p.ideal().intersect(&candidate);
        if &meet == canonical_at_p.ideal() {
            continue;
        }
        let perturbed = PrimaryComponent::new(meet, prime.clone())
            .expect("intersection of primary components at one prime is primary");
        let mut mixed = others.clone();
        mixed.push(perturbed.clone());
        if is_irredundant_primary_decomposition(ideal, &mixed) {
            return Some(perturbed);
        }
    }
    None
}

/// Necessity direction: wherever the perturbation search produces a
/// non-maximal embedded component, the mixed decomposition's component-count
/// sum must strictly exceed `ir`, and the component must fail the maximality
/// predicate. Skips when there is nothing to test.
pub fn verify_additivity_necessity(
    ideal: &MonomialIdeal,
    instance: &str,
    seed: u64,
) -> VerificationReport {
    let statement = Statement::AdditivityNecessity;
    let embedded = embedded_primes(ideal).expect("proper ideal");
    if embedded.is_empty() {
        return VerificationReport::skip(statement, instance, "no embedded primes");
    }
    let decomposition = canonical_primary_decomposition(ideal).expect("proper ideal");
    let total = ir(ideal).expect("proper ideal");
    let mut tested = false;
    for prime in &embedded {
        let Some(perturbed) = perturb_embedded_component(ideal, prime, seed) else {
            continue;
        };
        tested = true;
        let mut mixed: Vec<PrimaryComponent> = decomposition
            .components()
            .iter()
            .filter(|c| c.prime() != prime)
            .cloned()
            .collect();
        mixed.push(perturbed.clone());
        let sum: u64 = mixed
            .iter()
            .map(|c| ir_components(c.ideal()).expect("component is proper"))
            .sum();
        let maximal = is_maximal_embedded_component(ideal, &perturbed);
        if sum <= total || maximal != Ok(false) {
            let mut witness = instance_witness(ideal);
            witness["prime"] = json!(prime_names(prime, ideal.vars()));
            witness["perturbed"] = json!(perturbed.ideal().to_string());
            witness["mixed_sum"] = json!(sum);
            witness["ir"] = json!(total);
            witness["maximal_predicate"] = json!(format!("{maximal:?}"));
            return VerificationReport::fail(statement, instance, witness);
        }
    }
    if tested {
        VerificationReport::pass(statement, instance)
    } else {
        VerificationReport::skip(statement, instance, "no perturbation found within budget")
    }
}

/// Runs a power scan and checks the fitted degree against the bounds.
/// Skips honestly when the window does not certify a fit.
pub fn verify_power_degree_bounds(
    ideal: &MonomialIdeal,
    instance: &str,
    config: ScanConfig,
) -> VerificationReport {
    let statement = Statement::PowerDegreeBounds;
    let report = match ir_polynomial(ideal, config) {
        Ok(r) => r,
        Err(e) => return VerificationReport::skip(statement, instance, &e.to_string()),
    };
    match report.bounds_ok {
        Some(true) => VerificationReport::pass(statement, instance),
        Some(false) => {
            let mut witness = instance_witness(ideal);
            witness["ir_values"] = json!(report.ir_values);
            witness["bight"] = json!(report.bight);
            witness["analytic_spread"] = json!(report.analytic_spread);
            witness["fitted_degree"] =
                json!(report.fitted_ir.as_ref().and_then(|p| p.degree()));
            VerificationReport::fail(statement, instance, witness)
        }
        None => VerificationReport::skip(statement, instance, "not stabilized within the window"),
    }
}

/// Symbolic-power analogue: the fitted degree must equal `bight - 1`.
pub fn verify_symbolic_degree(
    ideal: &MonomialIdeal,
    instance: &str,
    config: ScanConfig,
) -> VerificationReport {
    let statement = Statement::SymbolicDegree;
    let report = match symbolic_ir_polynomial(ideal, config) {
        Ok(r) => r,
        Err(e) => return VerificationReport::skip(statement, instance, &e.to_string()),
    };
    match report.bounds_ok {
        Some(true) => VerificationReport::pass(statement, instance),
        Some(false) => {
            let mut witness = instance_witness(ideal);
            witness["ir_values"] = json!(report.ir_values);
            witness["bight"] = json!(report.bight);
            witness["fitted_degree"] =
                json!(report.fitted_ir.as_ref().and_then(|p| p.degree()));
            VerificationReport::fail(statement, instance, witness)
        }
        None => VerificationReport::skip(statement, instance, "not stabilized within the window"),
    }
}

/// Exact binomial coefficient, used for the parameter-ideal counts.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    u64::try_from(acc).expect("binomial fits in u64 at desk scale")
}

/// For the monomial parameter ideal `q = <x_i^{a_i}>` in `d` variables the
/// polynomial ring is Gorenstein and `ir(q^{n+1}) = C(n+d-1, d-1)`.
pub fn verify_parameter_binomial(exponents: &[u32], n_max: u32) -> VerificationReport {
    let statement = Statement::ParameterBinomial;
    let d = exponents.len();
    let instance = format!(
        "parameter-ideal[{}]",
        exponents.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
    );
    assert!(d >= 1 && exponents.iter().all(|&e| e >= 1), "parameter exponents must be positive");
    let vars = VariableSet::numbered("x", d);
    let q = MonomialIdeal::new(
        vars.clone(),
        exponents
            .iter()
            .enumerate()
            .map(|(i, &e)| Monomial::pure_power(i, e, d))
            .collect(),
    );
    for n in 0..=n_max {
        let power = q.power(n + 1);
        let got = ir(&power).expect("proper ideal");
        let expected = binomial(u64::from(n) + d as u64 - 1, d as u64 - 1);
        if got != expected {
            let mut witness = instance_witness(&q);
            witness["n"] = json!(n);
            witness["ir"] = json!(got);
            witness["expected"] = json!(expected);
            return VerificationReport::fail(statement, &instance, witness);
        }
    }
    VerificationReport::pass(statement, &instance)
}

/// The bundled set of worked examples every suite run includes.
pub fn fixed_examples() -> Vec<(String, MonomialIdeal)> {
    let two = VariableSet::new(["x", "y"]).unwrap();
    let three = VariableSet::new(["x", "y", "z"]).unwrap();
    let six = VariableSet::numbered("x", 6);
    let entries = [
        ("example:principal-times-max", parse_ideal("x^2, x*y", &two).unwrap()),
        ("example:max-ideal-2", parse_ideal("x, y", &two).unwrap()),
        ("example:param-2-3", parse_ideal("x^2, y^3", &two).unwrap()),
        ("example:triangle", parse_ideal("x*y, y*z, z*x", &three).unwrap()),
        ("example:max-ideal-3", parse_ideal("x, y, z", &three).unwrap()),
        (
            "example:hexagon",
            parse_ideal("x1*x2, x2*x3, x3*x4, x4*x5, x5*x6, x6*x1", &six).unwrap(),
        ),
    ];
    entries.into_iter().map(|(n, i)| (n.to_string(), i)).collect()
}

/// Parameter-exponent tuples checked by the binomial statement.
pub fn fixed_parameter_tuples() -> Vec<Vec<u32>> {
    vec![vec![1, 1], vec![2, 3], vec![1, 1, 1]]
}

/// Everything a suite run needs; fully determined by the seed unless
/// overridden.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub seed: u64,
    pub statements: Vec<Statement>,
    /// Window/cap for the asymptotic statements.
    pub scan: ScanConfig,
    /// Corpus blocks; all corpus instances feed the counting statements.
    pub corpus: Vec<CorpusSpec>,
    /// How many corpus ideals per block also feed the scan statements.
    pub scan_sample: usize,
    /// Window for the parameter-ideal binomial checks.
    pub parameter_n_max: u32,
}

impl SuiteConfig {
    pub fn for_seed(seed: u64) -> Self {
        SuiteConfig {
            seed,
            statements: Statement::ALL.to_vec(),
            // degree-4 fits need seven supporting points
            scan: ScanConfig::with_n_max(7),
            corpus: vec![
                CorpusSpec { seed, arity: 3, n_gens: 5, max_exp: 4, count: 100 },
                CorpusSpec { seed: seed.wrapping_add(1), arity: 4, n_gens: 6, max_exp: 4, count: 100 },
            ],
            scan_sample: 8,
            parameter_n_max: 5,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub reports: Vec<VerificationReport>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl SuiteOutcome {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

/// Runs the requested statements over the fixed examples plus the seeded
/// corpus and aggregates the reports, sorted by instance then statement.
pub fn run_suite(config: &SuiteConfig) -> SuiteOutcome {
    let mut instances = fixed_examples();
    let mut scan_instances: Vec<String> = instances.iter().map(|(n, _)| n.clone()).collect();
    for spec in &config.corpus {
        let ideals = random_monomial_ideals(spec).expect("suite corpus specs are valid");
        for (i, ideal) in ideals.into_iter().enumerate() {
            let name = format!("corpus-a{}-{:03}", spec.arity, i);
            if i < config.scan_sample {
                scan_instances.push(name.clone());
            }
            instances.push((name, ideal));
        }
    }
    let scan_set: BTreeSet<String> = scan_instances.into_iter().collect();

    let mut reports = Vec::new();
    for statement in &config.statements {
        match statement {
            Statement::DualRouteCount => {
                for (name, ideal) in &instances {
                    reports.push(verify_dual_route(ideal, name));
                }
            }
            Statement::AdditivitySufficiency => {
                for (name, ideal) in &instances {
                    reports.push(verify_additivity_sufficiency(ideal, name));
                }
            }
            Statement::AdditivityNecessity => {
                for (name, ideal) in &instances {
                    reports.push(verify_additivity_necessity(ideal, name, config.seed));
                }
            }
            Statement::PerPrimeCount => {
                for (name, ideal) in &instances {
                    reports.push(verify_per_prime_count(ideal, name));
                }
            }
            Statement::PowerDegreeBounds => {
                for (name, ideal) in &instances {
                    if scan_set.contains(name) {
                        reports.push(verify_power_degree_bounds(ideal, name, config.scan));
                    }
                }
            }
            Statement::SymbolicDegree => {
                for (name, ideal) in &instances {
                    if scan_set.contains(name) {
                        reports.push(verify_symbolic_degree(ideal, name, config.scan));
                    }
                }
            }
            Statement::ParameterBinomial => {
                for tuple in fixed_parameter_tuples() {
                    reports.push(verify_parameter_binomial(&tuple, config.parameter_n_max));
                }
                // two extra seeded tuples keep the statement honest beyond
                // the worked examples
                let mut rng = ChaCha8Rng::seed_from_u64(config.seed.wrapping_add(2));
                for _ in 0..2 {
                    let d = rng.gen_range(2..=3usize);
                    let tuple: Vec<u32> = (0..d).map(|_| rng.gen_range(1..=3u32)).collect();
                    reports.push(verify_parameter_binomial(&tuple, config.parameter_n_max.min(3)));
                }
            }
        }
    }
    reports.sort_by(|a, b| {
        a.instance
            .cmp(&b.instance)
            .then_with(|| a.statement.cmp(&b.statement))
    });
    let passed = reports.iter().filter(|r| r.result == VerifyResult::Pass).count();
    let failed = reports.iter().filter(|r| r.result == VerifyResult::Fail).count();
    let skipped = reports.iter().filter(|r| r.result == VerifyResult::Skip).count();
    SuiteOutcome { reports, passed, failed, skipped }
}
