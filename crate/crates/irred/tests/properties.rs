//! Property tests for the algebraic invariants.

use std::collections::BTreeSet;
use std::sync::Arc;

use proptest::prelude::*;

use irred::{
    associated_primes, associated_primes_via_socle, canonical_primary_decomposition,
    embedded_primes, fit_polynomial, ir_at_prime, ir_components, ir_socle,
    irreducible_decomposition, localize_at, socle_dimension_at, symbolic_power, DegreeBound,
    Monomial, MonomialIdeal, PrimeSupport, RationalPolynomial, ScanConfig, VariableSet,
};

fn vars(arity: usize) -> Arc<VariableSet> {
    VariableSet::numbered("x", arity)
}

/// Random proper nonzero ideal in `arity` variables.
fn arb_ideal(arity: usize, max_exp: u32, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(
        prop::collection::vec(0..=max_exp, arity),
        1..=max_gens,
    )
    .prop_map(move |exps| {
        MonomialIdeal::new(vars(arity), exps.into_iter().map(Monomial::new).collect())
    })
    .prop_filter("need a proper nonzero ideal", |i| !i.is_unit() && !i.is_zero())
}

fn arb_monomial(arity: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, arity).prop_map(Monomial::new)
}

/// Same ideal, messier presentation: generators reversed plus a redundant
/// multiple of the first one.
fn messy_presentation(ideal: &MonomialIdeal) -> MonomialIdeal {
    let mut gens: Vec<Monomial> = ideal.gens().iter().rev().cloned().collect();
    let bump = gens.last().expect("nonzero").mul(&Monomial::variable(0, ideal.vars().arity()));
    gens.push(bump);
    MonomialIdeal::new(ideal.vars().clone(), gens)
}

/// Membership oracle bound: ideals generated in degree <= b agree iff their
/// standard monomials agree up to b.
fn oracle_equal(a: &MonomialIdeal, b: &MonomialIdeal, bound: u64) -> bool {
    a.standard_monomials_below(DegreeBound(bound)) == b.standard_monomials_below(DegreeBound(bound))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn minimalization_yields_a_generating_antichain(
        exps in prop::collection::vec(prop::collection::vec(0..=3u32, 3), 1..=6),
    ) {
        let raw: Vec<Monomial> = exps.into_iter().map(Monomial::new).collect();
        let ideal = MonomialIdeal::new(vars(3), raw.clone());
        // antichain: no generator divides another
        for (i, a) in ideal.gens().iter().enumerate() {
            for (j, b) in ideal.gens().iter().enumerate() {
                prop_assert!(i == j || !a.divides(b));
            }
        }
        // same ideal as the raw presentation, by direct divisibility
        let max_deg = raw.iter().map(Monomial::degree).max().unwrap_or(0) + 1;
        let mut exps_box = vec![0u32; 3];
        check_all_monomials(&mut exps_box, 0, max_deg, &mut |m| {
            let in_raw = raw.iter().any(|g| g.divides(m));
            prop_assert!(in_raw == ideal.contains(m));
            Ok(())
        })?;
    }

    #[test]
    fn operations_ignore_presentation(
        a in arb_ideal(3, 3, 4),
        b in arb_ideal(3, 3, 4),
    ) {
        let a2 = messy_presentation(&a);
        let b2 = messy_presentation(&b);
        prop_assert_eq!(a.intersect(&b), a2.intersect(&b2));
        prop_assert_eq!(a.colon(&b), a2.colon(&b2));
        prop_assert_eq!(a.multiply(&b), a2.multiply(&b2));
        prop_assert_eq!(a.saturate(&b), a2.saturate(&b2));
    }

    #[test]
    fn colon_distributes_over_intersection(
        a in arb_ideal(3, 3, 4),
        b in arb_ideal(3, 3, 4),
        m in arb_monomial(3, 2),
    ) {
        let lhs = a.intersect(&b).colon_monomial(&m);
        let rhs = a.colon_monomial(&m).intersect(&b.colon_monomial(&m));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn intersection_membership_is_conjunction(
        a in arb_ideal(3, 3, 4),
        b in arb_ideal(3, 3, 4),
    ) {
        let meet = a.intersect(&b);
        let bound = a.max_gen_degree().max(b.max_gen_degree()) + 2;
        let mut exps = vec![0u32; 3];
        check_all_monomials(&mut exps, 0, bound, &mut |m| {
            prop_assert!(meet.contains(m) == (a.contains(m) && b.contains(m)));
            Ok(())
        })?;
    }

    #[test]
    fn powers_add(a in arb_ideal(3, 2, 3), i in 1..=3u32, j in 1..=2u32) {
        prop_assert_eq!(a.power(i + j), a.power(i).multiply(&a.power(j)));
    }

    #[test]
    fn decomposition_is_sound_and_irredundant(ideal in arb_ideal(3, 3, 4)) {
        let comps = irreducible_decomposition(&ideal).unwrap();
        let ideals: Vec<MonomialIdeal> =
            comps.iter().map(|c| c.as_ideal(ideal.vars())).collect();
        let meet = MonomialIdeal::intersect_many(ideal.vars().clone(), ideals.iter());
        prop_assert_eq!(&meet, &ideal);
        prop_assert!(oracle_equal(&meet, &ideal, ideal.max_gen_degree() + 1));
        // dropping any component strictly enlarges the intersection
        for skip in 0..ideals.len() {
            let rest = MonomialIdeal::intersect_many(
                ideal.vars().clone(),
                ideals.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, c)| c),
            );
            prop_assert_ne!(&rest, &ideal);
        }
    }

    #[test]
    fn decomposition_is_canonical_under_presentation(ideal in arb_ideal(3, 3, 4)) {
        let messy = messy_presentation(&ideal);
        prop_assert_eq!(
            irreducible_decomposition(&ideal).unwrap(),
            irreducible_decomposition(&messy).unwrap()
        );
    }

    #[test]
    fn associated_primes_of_meets_stay_within_the_union(
        a in arb_ideal(3, 3, 4),
        b in arb_ideal(3, 3, 4),
    ) {
        let meet = a.intersect(&b);
        prop_assume!(!meet.is_zero());
        let of_meet = associated_primes(&meet).unwrap();
        let mut union = associated_primes(&a).unwrap();
        union.extend(associated_primes(&b).unwrap());
        prop_assert!(of_meet.is_subset(&union));
    }

    #[test]
    fn both_ir_routes_agree(ideal in arb_ideal(3, 4, 5)) {
        prop_assert_eq!(ir_components(&ideal).unwrap(), ir_socle(&ideal).unwrap());
        let by_decomposition = associated_primes(&ideal).unwrap();
        let by_socle = associated_primes_via_socle(&ideal).unwrap();
        prop_assert_eq!(&by_decomposition, &by_socle);
        for p in &by_decomposition {
            prop_assert_eq!(
                ir_at_prime(&ideal, p).unwrap(),
                socle_dimension_at(&ideal, p) as u64
            );
        }
        // socle positivity characterizes association: probe non-associated
        // candidate primes too
        let support: BTreeSet<usize> = (0..ideal.vars().arity()).collect();
        for mask in 1u32..(1 << ideal.vars().arity()) {
            let subset: BTreeSet<usize> = support
                .iter()
                .copied()
                .filter(|i| mask >> i & 1 == 1)
                .collect();
            let p = PrimeSupport::new(subset);
            let dim = socle_dimension_at(&ideal, &p);
            prop_assert_eq!(dim > 0, by_decomposition.contains(&p));
        }
    }

    #[test]
    fn ir_adds_over_canonical_components(ideal in arb_ideal(3, 4, 5)) {
        let dec = canonical_primary_decomposition(&ideal).unwrap();
        let sum: u64 = dec
            .components()
            .iter()
            .map(|c| ir_components(c.ideal()).unwrap())
            .sum();
        prop_assert_eq!(sum, ir_components(&ideal).unwrap());
    }

    #[test]
    fn localization_is_idempotent(ideal in arb_ideal(4, 3, 4), mask in 1u32..15) {
        let subset: BTreeSet<usize> = (0..4).filter(|i| mask >> i & 1 == 1).collect();
        let p = PrimeSupport::new(subset);
        let local = localize_at(&ideal, &p);
        let full: BTreeSet<usize> = (0..local.restricted.vars().arity()).collect();
        let again = localize_at(&local.restricted, &PrimeSupport::new(full));
        prop_assert_eq!(again.restricted, local.restricted);
    }

    #[test]
    fn symbolic_powers_contain_ordinary_powers(ideal in arb_ideal(3, 2, 3), n in 1..=3u32) {
        let symbolic = symbolic_power(&ideal, n).unwrap();
        prop_assert!(symbolic.contains_ideal(&ideal.power(n)));
        if embedded_primes(&ideal).unwrap().is_empty() {
            prop_assert_eq!(symbolic_power(&ideal, 1).unwrap(), ideal);
        }
    }

    #[test]
    fn fitting_recovers_integer_polynomials(
        coeffs in prop::collection::vec(0..=6i64, 1..=4),
    ) {
        let poly = RationalPolynomial::from_integers(&coeffs);
        let values: Vec<u64> = (1..=8i64)
            .map(|n| {
                let v = poly.evaluate_at(n);
                assert!(v.is_integer());
                u64::try_from(v.to_integer()).expect("nonnegative by construction")
            })
            .collect();
        let fitted = fit_polynomial(&values, 1).unwrap();
        prop_assert_eq!(fitted, poly);
    }

    #[test]
    fn spread_of_equigenerated_ideals_is_the_lattice_rank(
        pairs in prop::collection::vec((0..3usize, 0..3usize), 2..=4),
    ) {
        let gens: Vec<Monomial> = pairs
            .iter()
            .map(|&(i, j)| Monomial::variable(i, 3).mul(&Monomial::variable(j, 3)))
            .collect();
        let ideal = MonomialIdeal::new(vars(3), gens);
        let rank = lattice_rank(
            &ideal
                .gens()
                .iter()
                .map(|g| g.exponents().iter().map(|&e| i128::from(e)).collect())
                .collect::<Vec<Vec<i128>>>(),
        );
        let spread = irred::analytic_spread(&ideal, ScanConfig::with_n_max(8)).unwrap();
        prop_assert_eq!(spread as usize, rank);
    }
}

/// Fraction-free row reduction; exact at this scale.
#[allow(clippy::needless_range_loop)]
fn lattice_rank(rows: &[Vec<i128>]) -> usize {
    let mut m = rows.to_vec();
    let (n_rows, n_cols) = (m.len(), m[0].len());
    let mut rank = 0;
    let mut row = 0;
    for col in 0..n_cols {
        let Some(pivot) = (row..n_rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(row, pivot);
        for r in row + 1..n_rows {
            if m[r][col] != 0 {
                let (a, b) = (m[row][col], m[r][col]);
                for c in col..n_cols {
                    m[r][c] = m[r][c] * a - m[row][c] * b;
                }
            }
        }
        rank += 1;
        row += 1;
        if row == n_rows {
            break;
        }
    }
    rank
}

/// Visits every monomial of total degree <= budget.
fn check_all_monomials(
    exps: &mut Vec<u32>,
    index: usize,
    budget: u64,
    visit: &mut impl FnMut(&Monomial) -> Result<(), TestCaseError>,
) -> Result<(), TestCaseError> {
    if index == exps.len() {
        return visit(&Monomial::new(exps.clone()));
    }
    for e in 0..=budget {
        exps[index] = e as u32;
        check_all_monomials(exps, index + 1, budget - e, visit)?;
    }
    exps[index] = 0;
    Ok(())
}
