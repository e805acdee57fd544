//! Power scans: the sequences `ir(I^n)`, `mu(I^n)` and `Ass(I^n)`, exact
//! polynomial fits with degree bounds, analytic spread, and symbolic powers.
//!
//! Powers are computed incrementally with minimalization at each step, so
//! `mu(I^n)` is read off the canonical generating set. Indices of
//! reducibility along a scan go through the socle route, which stays cheap
//! where the full irreducible decomposition of a high power would not.

use std::collections::BTreeSet;

use crate::decompose::{bight, PrimeSupport};
use crate::error::{DecomposeError, ScanError};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::ratpoly::{fit_polynomial, RationalPolynomial};
use crate::socle::{candidate_primes, minimal_primes_of_radical, socle_dimension_at};

/// Window and resource limits for scans.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanConfig {
    /// Largest power to compute.
    pub n_max: u32,
    /// Abort when a power accumulates more minimal generators than this.
    pub gen_cap: usize,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig { n_max: 8, gen_cap: 200_000 }
    }
}

impl ScanConfig {
    pub fn with_n_max(n_max: u32) -> Self {
        ScanConfig { n_max, ..Self::default() }
    }
}

/// Which power sequence a report describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanKind {
    Powers,
    SymbolicPowers,
}

/// The outcome of a power scan. `bounds_ok` means
/// `bight - 1 <= deg(fitted_ir) <= spread - 1` for ordinary powers and
/// `deg(fitted_ir) == bight - 1` for symbolic powers; it is `None` when the
/// required fits did not stabilize inside the window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    pub ideal: MonomialIdeal,
    pub kind: ScanKind,
    /// Inclusive power range `[1, n_max]`.
    pub n_range: (u32, u32),
    pub ir_values: Vec<u64>,
    pub mu_values: Vec<u64>,
    /// Smallest `n0` from which the associated primes are constant over the
    /// window (requiring at least three observations), if any.
    pub ass_stable_at: Option<u32>,
    pub fitted_ir: Option<RationalPolynomial>,
    pub fitted_mu: Option<RationalPolynomial>,
    pub bight: u32,
    /// `1 + deg(fitted_mu)`; `None` when the fit did not stabilize or for
    /// symbolic scans, where the fiber cone reading does not apply.
    pub analytic_spread: Option<u32>,
    pub bounds_ok: Option<bool>,
}

struct PowerScan {
    mu_values: Vec<u64>,
    ir_values: Vec<u64>,
    ass_sets: Vec<BTreeSet<PrimeSupport>>,
}

fn check_cap(ideal: &MonomialIdeal, cap: usize, n: u32) -> Result<(), ScanError> {
    if ideal.num_gens() > cap {
        return Err(ScanError::GeneratorCap { cap, n });
    }
    Ok(())
}

fn require_scannable(ideal: &MonomialIdeal) -> Result<(), ScanError> {
    if ideal.is_unit() {
        return Err(DecomposeError::UnitIdeal.into());
    }
    if ideal.is_zero() {
        return Err(DecomposeError::ZeroIdeal.into());
    }
    Ok(())
}

/// `I, I^2, ..., I^n_max`, minimalized at each step.
fn ordinary_powers(
    ideal: &MonomialIdeal,
    n_max: u32,
    cap: usize,
) -> Result<Vec<MonomialIdeal>, ScanError> {
    let mut powers = Vec::with_capacity(n_max as usize);
    let mut current = ideal.clone();
    for n in 1..=n_max {
        if n > 1 {
            current = current.multiply(ideal);
        }
        check_cap(&current, cap, n)?;
        powers.push(current.clone());
    }
    Ok(powers)
}

fn analyze_powers(
    ideal: &MonomialIdeal,
    powers: &[MonomialIdeal],
) -> Result<PowerScan, DecomposeError> {
    // associated primes of any power live among the candidates of the base
    // ideal: same minimal primes, support only shrinks
    let candidates = candidate_primes(ideal)?;
    let mut scan = PowerScan {
        mu_values: Vec::with_capacity(powers.len()),
        ir_values: Vec::with_capacity(powers.len()),
        ass_sets: Vec::with_capacity(powers.len()),
    };
    for power in powers {
        let mut ass = BTreeSet::new();
        let mut total = 0u64;
        for p in &candidates {
            let dim = socle_dimension_at(power, p) as u64;
            if dim > 0 {
                ass.insert(p.clone());
                total += dim;
            }
        }
        scan.mu_values.push(power.num_gens() as u64);
        scan.ir_values.push(total);
        scan.ass_sets.push(ass);
    }
    Ok(scan)
}

/// Smallest `n0` such that the associated primes are identical on
/// `[n0, n_max]`, provided that window has at least three entries.
fn stabilization_point(ass_sets: &[BTreeSet<PrimeSupport>]) -> Option<u32> {
    let n_max = ass_sets.len();
    if n_max < 3 {
        return None;
    }
    let last = ass_sets.last().expect("nonempty");
    let mut n0 = n_max; // 1-based power whose set starts the constant tail
    for (i, set) in ass_sets.iter().enumerate().rev() {
        if set == last {
            n0 = i + 1;
        } else {
            break;
        }
    }
    // need n_max - n0 >= 2 observations beyond the start
    if n_max - n0 >= 2 {
        Some(n0 as u32)
    } else {
        None
    }
}

/// `[ir(I^n) for n = 1..n_max]` via the socle route.
pub fn ir_sequence(
    ideal: &MonomialIdeal,
    config: ScanConfig,
) -> Result<Vec<u64>, ScanError> {
    require_scannable(ideal)?;
    let powers = ordinary_powers(ideal, config.n_max, config.gen_cap)?;
    Ok(analyze_powers(ideal, &powers)?.ir_values)
}

/// `[mu(I^n) for n = 1..n_max]`: minimal generator counts of the powers.
pub fn mu_sequence(
    ideal: &MonomialIdeal,
    config: ScanConfig,
) -> Result<Vec<u64>, ScanError> {
    require_scannable(ideal)?;
    let powers = ordinary_powers(ideal, config.n_max, config.gen_cap)?;
    Ok(powers.iter().map(|p| p.num_gens() as u64).collect())
}

/// Detects stabilization of `Ass(I^n)` inside the window. Returns the stable
/// set with its onset, or `None` when the window does not certify one;
/// stabilization always happens eventually but carries no effective bound.
pub fn ass_stabilization(
    ideal: &MonomialIdeal,
    config: ScanConfig,
) -> Result<Option<(BTreeSet<PrimeSupport>, u32)>, ScanError> {
    require_scannable(ideal)?;
    let powers = ordinary_powers(ideal, config.n_max, config.gen_cap)?;
    let scan = analyze_powers(ideal, &powers)?;
    Ok(stabilization_point(&scan.ass_sets)
        .map(|n0| (scan.ass_sets[(n0 - 1) as usize].clone(), n0)))
}

/// Analytic spread: one more than the degree of the Hilbert polynomial of
/// the fiber cone, whose value at `n` is `mu(I^n)`.
pub fn analytic_spread(ideal: &MonomialIdeal, config: ScanConfig) -> Result<u32, ScanError> {
    let mu = mu_sequence(ideal, config)?;
    let poly = fit_polynomial(&mu, 1)
        .map_err(|_| ScanError::NotStabilized { n_max: config.n_max })?;
    Ok(poly.degree().unwrap_or(0) as u32 + 1)
}

fn assemble_report(
    ideal: &MonomialIdeal,
    kind: ScanKind,
    config: ScanConfig,
    scan: PowerScan,
) -> Result<ScanReport, ScanError> {
    let big_height = bight(ideal)?;
    let ass_stable_at = stabilization_point(&scan.ass_sets);
    let fit_tail = |values: &[u64]| {
        ass_stable_at.and_then(|n0| {
            fit_polynomial(&values[(n0 - 1) as usize..], i64::from(n0)).ok()
        })
    };
    let fitted_ir = fit_tail(&scan.ir_values);
    let fitted_mu = fit_tail(&scan.mu_values);
    let analytic_spread = match kind {
        ScanKind::Powers => fitted_mu
            .as_ref()
            .map(|p| p.degree().unwrap_or(0) as u32 + 1),
        ScanKind::SymbolicPowers => None,
    };
    let ir_degree = fitted_ir.as_ref().map(|p| p.degree().unwrap_or(0) as u32);
    let bounds_ok = match kind {
        ScanKind::Powers => match (ir_degree, analytic_spread) {
            (Some(d), Some(ell)) => Some((big_height - 1..=ell - 1).contains(&d)),
            _ => None,
        },
        ScanKind::SymbolicPowers => ir_degree.map(|d| d == big_height - 1),
    };
    Ok(ScanReport {
        ideal: ideal.clone(),
        kind,
        n_range: (1, config.n_max),
        ir_values: scan.ir_values,
        mu_values: scan.mu_values,
        ass_stable_at,
        fitted_ir,
        fitted_mu,
        bight: big_height,
        analytic_spread,
        bounds_ok,
    })
}

/// Full ordinary-power scan: sequences, stabilization, tail fits, and the
/// `bight - 1 <= deg <= spread - 1` degree check. Unstabilized fits are
/// reported as absent rather than guessed.
pub fn ir_polynomial(ideal: &MonomialIdeal, config: ScanConfig) -> Result<ScanReport, ScanError> {
    require_scannable(ideal)?;
    let powers = ordinary_powers(ideal, config.n_max, config.gen_cap)?;
    let scan = analyze_powers(ideal, &powers)?;
    assemble_report(ideal, ScanKind::Powers, config, scan)
}

/// The `n`-th symbolic power: the intersection over the minimal primes of
/// the contraction of `I^n` localized there. For monomial ideals each
/// contraction is the saturation of `I^n` by the product of the variables
/// outside the prime.
pub fn symbolic_power(ideal: &MonomialIdeal, n: u32) -> Result<MonomialIdeal, ScanError> {
    require_scannable(ideal)?;
    assert!(n >= 1, "symbolic powers are defined for n >= 1");
    let vars = ideal.vars().clone();
    let arity = vars.arity();
    let minimal = minimal_primes_of_radical(ideal)?;
    let power = ideal.power(n);
    let mut parts = Vec::with_capacity(minimal.len());
    for prime in &minimal {
        let mut exps = vec![0u32; arity];
        for (i, e) in exps.iter_mut().enumerate() {
            if !prime.vars().contains(&i) {
                *e = 1;
            }
        }
        let complement = Monomial::new(exps);
        // complement = 1 when the prime covers every variable; saturation by
        // the unit ideal is the identity
        let divisor = MonomialIdeal::new(vars.clone(), vec![complement]);
        parts.push(power.saturate(&divisor));
    }
    Ok(MonomialIdeal::intersect_many(vars, parts.iter()))
}

fn symbolic_powers_list(
    ideal: &MonomialIdeal,
    n_max: u32,
    cap: usize,
) -> Result<Vec<MonomialIdeal>, ScanError> {
    let mut out = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        let power = symbolic_power(ideal, n)?;
        check_cap(&power, cap, n)?;
        out.push(power);
    }
    Ok(out)
}

/// Symbolic-power scan: fits `ir(I^(n))` over the window and checks that the
/// fitted degree equals `bight - 1` (recorded in `bounds_ok`).
pub fn symbolic_ir_polynomial(
    ideal: &MonomialIdeal,
    config: ScanConfig,
) -> Result<ScanReport, ScanError> {
    require_scannable(ideal)?;
    let powers = symbolic_powers_list(ideal, config.n_max, config.gen_cap)?;
    let scan = analyze_powers(ideal, &powers)?;
    assemble_report(ideal, ScanKind::SymbolicPowers, config, scan)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ideal;
    use crate::vars::VariableSet;
    use std::sync::Arc;

    fn vars(names: &[&str]) -> Arc<VariableSet> {
        VariableSet::new(names.iter().copied()).unwrap()
    }

    fn ideal(text: &str, v: &Arc<VariableSet>) -> MonomialIdeal {
        parse_ideal(text, v).unwrap()
    }

    fn cfg(n_max: u32) -> ScanConfig {
        ScanConfig::with_n_max(n_max)
    }

    #[test]
    fn ir_sequence_of_the_two_variable_example() {
        let v = vars(&["x", "y"]);
        let i = ideal("x^2, x*y", &v);
        assert_eq!(ir_sequence(&i, cfg(5)).unwrap(), vec![2, 3, 4, 5, 6]);
        let m = ideal("x, y", &v);
        assert_eq!(ir_sequence(&m, cfg(4)).unwrap(), vec![1, 2, 3, 4]);
        // parameter-like ideal: brute-force confirmed counts
        let q = ideal("x^2, y^3", &v);
        assert_eq!(ir_sequence(&q, cfg(3)).unwrap(), vec![1, 2, 3]);
    }

    #[test]
    fn mu_sequences() {
        let v = vars(&["x", "y"]);
        assert_eq!(mu_sequence(&ideal("x^2, x*y", &v), cfg(4)).unwrap(), vec![2, 3, 4, 5]);
        assert_eq!(mu_sequence(&ideal("x, y", &v), cfg(4)).unwrap(), vec![2, 3, 4, 5]);
        assert_eq!(mu_sequence(&ideal("x", &v), cfg(4)).unwrap(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn ass_stabilizes_immediately_for_the_running_examples() {
        let v = vars(&["x", "y"]);
        let i = ideal("x^2, x*y", &v);
        let (stable, n0) = ass_stabilization(&i, cfg(5)).unwrap().unwrap();
        assert_eq!(n0, 1);
        assert_eq!(stable.len(), 2);
        let p = ideal("x", &v);
        let (stable, n0) = ass_stabilization(&p, cfg(4)).unwrap().unwrap();
        assert_eq!(n0, 1);
        assert_eq!(stable.len(), 1);
    }

    #[test]
    fn analytic_spreads() {
        let v = vars(&["x", "y"]);
        assert_eq!(analytic_spread(&ideal("x^2, x*y", &v), cfg(6)).unwrap(), 2);
        assert_eq!(analytic_spread(&ideal("x", &v), cfg(5)).unwrap(), 1);
        let v3 = vars(&["x", "y", "z"]);
        assert_eq!(analytic_spread(&ideal("x*y, y*z, z*x", &v3), cfg(6)).unwrap(), 3);
    }

    #[test]
    fn scan_report_for_the_two_variable_example() {
        let v = vars(&["x", "y"]);
        let report = ir_polynomial(&ideal("x^2, x*y", &v), cfg(6)).unwrap();
        assert_eq!(report.ir_values, vec![2, 3, 4, 5, 6, 7]);
        assert_eq!(report.ass_stable_at, Some(1));
        let fitted = report.fitted_ir.expect("stabilized");
        assert_eq!(fitted, RationalPolynomial::from_integers(&[1, 1]));
        assert_eq!(report.bight, 1);
        assert_eq!(report.analytic_spread, Some(2));
        assert_eq!(report.bounds_ok, Some(true));
    }

    #[test]
    fn scan_report_shares_degree_and_spread_for_the_maximal_ideal() {
        let v = vars(&["x", "y"]);
        let report = ir_polynomial(&ideal("x, y", &v), cfg(6)).unwrap();
        let fitted = report.fitted_ir.expect("stabilized");
        assert_eq!(fitted, RationalPolynomial::from_integers(&[0, 1]));
        assert_eq!(report.bight, 2);
        assert_eq!(report.analytic_spread, Some(2));
        assert_eq!(report.bounds_ok, Some(true));
    }

    #[test]
    fn symbolic_powers_of_the_triangle() {
        let v = vars(&["x", "y", "z"]);
        let tri = ideal("x*y, y*z, z*x", &v);
        let s2 = symbolic_power(&tri, 2).unwrap();
        // x*y*z joins the square: it lies in every localized square
        let expected = tri.power(2).sum(&ideal("x*y*z", &v));
        assert_eq!(s2, expected);
        // and the inclusion I^n subset I^(n) is strict here
        assert!(s2.contains_ideal(&tri.power(2)));
        assert_ne!(s2, tri.power(2));
    }

    #[test]
    fn symbolic_powers_of_primes_are_ordinary_powers() {
        let v = vars(&["x", "y", "z"]);
        let p = ideal("x, y", &v);
        for n in 1..=3 {
            assert_eq!(symbolic_power(&p, n).unwrap(), p.power(n));
        }
    }

    #[test]
    fn symbolic_scan_of_the_two_variable_example() {
        let v = vars(&["x", "y"]);
        let i = ideal("x^2, x*y", &v);
        // symbolic powers strip the embedded part: I^(n) = <x^n>
        for n in 1..=4 {
            assert_eq!(symbolic_power(&i, n).unwrap(), ideal("x", &v).power(n));
        }
        let report = symbolic_ir_polynomial(&i, cfg(6)).unwrap();
        assert_eq!(report.ir_values, vec![1, 1, 1, 1, 1, 1]);
        let fitted = report.fitted_ir.expect("stabilized");
        assert_eq!(fitted.degree(), Some(0));
        assert_eq!(report.bounds_ok, Some(true));
    }

    #[test]
    fn per_prime_socle_sequences_fit_within_the_spread() {
        use crate::ratpoly::fit_polynomial;
        use crate::socle::socle_dimension_at;
        // at each stable prime the socle-dimension sequence of the powers is
        // eventually polynomial of degree at most spread - 1; for an
        // m-primary ideal in d variables the degree is exactly d - 1
        let v = vars(&["x", "y"]);
        let i = ideal("x^2, x*y", &v);
        let ell = analytic_spread(&i, cfg(8)).unwrap();
        for p in crate::decompose::associated_primes(&i).unwrap() {
            let dims: Vec<u64> = (1..=8)
                .map(|n| socle_dimension_at(&i.power(n), &p) as u64)
                .collect();
            let poly = fit_polynomial(&dims, 1).unwrap();
            assert!(poly.degree().unwrap_or(0) as u32 <= ell - 1, "prime {p:?}");
        }
        for (text, d) in [("x^2, y^3", 2u32), ("x, y", 2)] {
            let q = ideal(text, &v);
            let dims = ir_sequence(&q, cfg(8)).unwrap(); // single associated prime
            let poly = fit_polynomial(&dims, 1).unwrap();
            assert_eq!(poly.degree(), Some((d - 1) as usize), "{text}");
        }
        let v3 = vars(&["x", "y", "z"]);
        let q = ideal("x, y, z", &v3);
        let poly = fit_polynomial(&ir_sequence(&q, cfg(8)).unwrap(), 1).unwrap();
        assert_eq!(poly.degree(), Some(2));
    }

    #[test]
    fn generator_cap_is_enforced() {
        let v = vars(&["x", "y"]);
        let i = ideal("x^2, x*y", &v);
        let config = ScanConfig { n_max: 6, gen_cap: 4 };
        match ir_sequence(&i, config) {
            Err(ScanError::GeneratorCap { cap: 4, n }) => assert!(n > 1),
            other => panic!("expected a cap error, got {other:?}"),
        }
    }
}
