//! The index of reducibility by two independent routes.
//!
//! `ir(I)` counts the components of the irredundant irreducible
//! decomposition. It also equals the sum, over the associated primes, of the
//! socle dimension of the localized quotient; that route never decomposes
//! anything and is the one the power scans use. The two must always agree.
//!
//! ```bash
//! cargo run -p irred --example index_of_reducibility
//! ```

use irred::{
    associated_primes, ir_at_prime, ir_components, ir_verified, localize_at, parse_ideal,
    socle_dimension_at, VariableSet,
};

fn main() {
    let vars = VariableSet::new(["x", "y"]).unwrap();
    let ideal = parse_ideal("x^2, x*y", &vars).unwrap();
    println!("I = ({ideal})");

    println!("component count: {}", ir_components(&ideal).unwrap());
    for prime in associated_primes(&ideal).unwrap() {
        let local = localize_at(&ideal, &prime);
        println!(
            "  at {}: localized ideal ({}), socle dimension {}, components at the prime {}",
            prime.display(&vars),
            local.restricted,
            socle_dimension_at(&ideal, &prime),
            ir_at_prime(&ideal, &prime).unwrap(),
        );
    }
    // the cross-checked facade computes both routes and insists they agree
    println!("ir(I) = {}", ir_verified(&ideal).unwrap());

    // a deeper corner: the socle monomial of (x^5, y^5) sits in degree 8
    let deep = parse_ideal("x^5, y^5", &vars).unwrap();
    println!("ir(({deep})) = {}", ir_verified(&deep).unwrap());
}
