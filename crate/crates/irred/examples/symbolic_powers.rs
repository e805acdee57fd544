//! Symbolic powers and the exact degree of their ir polynomial.
//!
//! The n-th symbolic power keeps only the minimal-prime part of `I^n`. Its
//! index of reducibility is better behaved than the ordinary one: the fitted
//! polynomial has degree exactly `bight(I) - 1`.
//!
//! ```bash
//! cargo run -p irred --example symbolic_powers
//! ```

use irred::{ir, parse_ideal, symbolic_ir_polynomial, symbolic_power, ScanConfig, VariableSet};

fn main() {
    let vars = VariableSet::new(["x", "y", "z"]).unwrap();
    let triangle = parse_ideal("x*y, x*z, y*z", &vars).unwrap();
    println!("I = ({triangle})  (triangle edge ideal)");

    // x*y*z lies in every localization of I^2 but not in I^2 itself
    for n in 1..=3 {
        let ordinary = triangle.power(n);
        let symbolic = symbolic_power(&triangle, n).unwrap();
        println!(
            "  n = {n}: I^n has {} generators, I^({n}) has {} ({})",
            ordinary.num_gens(),
            symbolic.num_gens(),
            if ordinary == symbolic { "equal" } else { "strictly larger" },
        );
    }
    println!(
        "  ir(I^(n)) for n = 1..6: {:?}",
        (1..=6)
            .map(|n| ir(&symbolic_power(&triangle, n).unwrap()).unwrap())
            .collect::<Vec<_>>(),
    );
    let report = symbolic_ir_polynomial(&triangle, ScanConfig::with_n_max(6)).unwrap();
    let fitted = report.fitted_ir.as_ref().unwrap();
    println!(
        "  fitted: {fitted}, degree {} = bight - 1 = {} (checked: {})",
        fitted.degree().unwrap(),
        report.bight - 1,
        report.bounds_ok.unwrap(),
    );
    println!();

    // for the bipartite hexagon the symbolic and ordinary powers coincide
    let six = VariableSet::numbered("x", 6);
    let hexagon = parse_ideal("x1*x2, x2*x3, x3*x4, x4*x5, x5*x6, x6*x1", &six).unwrap();
    for n in 1..=3 {
        assert_eq!(symbolic_power(&hexagon, n).unwrap(), hexagon.power(n));
    }
    println!("hexagon: I^(n) = I^n for n = 1..3");
}
