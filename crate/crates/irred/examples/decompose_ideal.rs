//! Irreducible and primary decomposition.
//!
//! Every proper monomial ideal is a finite intersection of ideals generated
//! by pure variable powers, in exactly one irredundant way. Grouping those
//! components by radical gives the canonical primary decomposition.
//!
//! ```bash
//! cargo run -p irred --example decompose_ideal
//! ```

use irred::{
    associated_primes, bight, canonical_primary_decomposition, embedded_primes,
    irreducible_decomposition, minimal_primes, parse_ideal, MonomialIdeal, VariableSet,
};

fn show(ideal: &MonomialIdeal) {
    let vars = ideal.vars();
    println!("I = ({ideal})");
    let comps = irreducible_decomposition(ideal).unwrap();
    println!("  irreducible components:");
    for c in &comps {
        println!("    ({})", c.as_ideal(vars));
    }
    let dec = canonical_primary_decomposition(ideal).unwrap();
    println!("  primary components:");
    for c in dec.components() {
        println!("    {} at {}", c.ideal(), c.prime().display(vars));
    }
    let names = |set: std::collections::BTreeSet<irred::PrimeSupport>| {
        set.iter()
            .map(|p| p.display(vars).to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    println!("  associated primes: {}", names(associated_primes(ideal).unwrap()));
    println!("  minimal:           {}", names(minimal_primes(ideal).unwrap()));
    println!("  embedded:          {}", names(embedded_primes(ideal).unwrap()));
    println!("  bight:             {}", bight(ideal).unwrap());
    println!();
}

fn main() {
    let two = VariableSet::new(["x", "y"]).unwrap();
    show(&parse_ideal("x^2, x*y", &two).unwrap());

    let three = VariableSet::new(["x", "y", "z"]).unwrap();
    show(&parse_ideal("x*y, y*z, z*x", &three).unwrap());

    // the edge ideal of the six-cycle: five prime components
    let six = VariableSet::numbered("x", 6);
    show(&parse_ideal("x1*x2, x2*x3, x3*x4, x4*x5, x5*x6, x6*x1", &six).unwrap());
}
