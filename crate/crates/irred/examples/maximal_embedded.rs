//! Maximal embedded components and additivity of the index of reducibility.
//!
//! Primary decompositions are not unique at embedded primes. The component
//! sum `ir(Q_1) + ... + ir(Q_n)` equals `ir(I)` exactly when every embedded
//! component is maximal among the candidates; swapping in a strictly smaller
//! member inflates the sum.
//!
//! ```bash
//! cargo run -p irred --example maximal_embedded
//! ```

use irred::harness::perturb_embedded_component;
use irred::{
    canonical_primary_decomposition, embedded_primes, ir, ir_components,
    is_irredundant_primary_decomposition, is_maximal_embedded_component, parse_ideal, VariableSet,
};

fn main() {
    let vars = VariableSet::new(["x", "y"]).unwrap();
    let ideal = parse_ideal("x^2, x*y", &vars).unwrap();
    println!("I = ({ideal}), ir(I) = {}", ir(&ideal).unwrap());

    let canonical = canonical_primary_decomposition(&ideal).unwrap();
    let sum: u64 = canonical
        .components()
        .iter()
        .map(|c| ir_components(c.ideal()).unwrap())
        .sum();
    println!("canonical decomposition:");
    for c in canonical.components() {
        println!(
            "  ({}) at {}  (ir = {})",
            c.ideal(),
            c.prime().display(&vars),
            ir_components(c.ideal()).unwrap(),
        );
    }
    println!("component sum = {sum} = ir(I): every embedded component is maximal\n");

    // perturb the embedded component into a strictly smaller valid one
    let embedded = embedded_primes(&ideal).unwrap().into_iter().next().unwrap();
    let perturbed = perturb_embedded_component(&ideal, &embedded, 42).expect("search succeeds");
    let mut mixed: Vec<_> = canonical
        .components()
        .iter()
        .filter(|c| c.prime() != &embedded)
        .cloned()
        .collect();
    mixed.push(perturbed.clone());
    assert!(is_irredundant_primary_decomposition(&ideal, &mixed));
    let mixed_sum: u64 = mixed.iter().map(|c| ir_components(c.ideal()).unwrap()).sum();
    println!(
        "perturbed component at {}: ({})",
        embedded.display(&vars),
        perturbed.ideal(),
    );
    println!(
        "  maximal? {:?}; mixed decomposition sum = {mixed_sum} > {}",
        is_maximal_embedded_component(&ideal, &perturbed).unwrap(),
        ir(&ideal).unwrap(),
    );
}
