//! Parsing, canonical forms, and the basic ideal algebra.
//!
//! ```bash
//! cargo run -p irred --example parse_and_canonical
//! ```

use irred::{parse_ideal, DegreeBound, MonomialIdeal, VariableSet};

fn main() {
    let vars = VariableSet::new(["x", "y"]).unwrap();

    // generators are minimalized on construction: x^3 is divisible by x^2
    let ideal = parse_ideal("x^2, x^3, x*y", &vars).unwrap();
    println!("canonical form: {ideal}");

    let other = parse_ideal("y^2, x", &vars).unwrap();
    println!("sum:            {}", ideal.sum(&other));
    println!("product:        {}", ideal.multiply(&other));
    println!("intersection:   {}", ideal.intersect(&other));
    println!("colon (I : J):  {}", ideal.colon(&other));
    println!("radical:        {}", ideal.radical());
    println!("square:         {}", ideal.power(2));
    println!(
        "saturation by (x, y): {}",
        ideal.saturate(&parse_ideal("x, y", &vars).unwrap())
    );

    // the monomials outside the ideal, up to a degree bound; this brute-force
    // view doubles as the equality oracle used throughout the test suite
    let standard: Vec<String> = ideal
        .standard_monomials_below(DegreeBound(3))
        .iter()
        .map(|m| m.display(&vars).to_string())
        .collect();
    println!("standard monomials of degree <= 3: {}", standard.join(", "));

    // zero and unit ideals have canonical representations too
    println!("zero ideal:  `{}`", MonomialIdeal::zero(vars.clone()));
    println!("unit ideal:  `{}`", MonomialIdeal::unit(vars));
}
