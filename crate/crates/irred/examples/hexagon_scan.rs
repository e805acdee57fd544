//! The six-cycle edge ideal: a bipartite graph whose powers stay clean.
//!
//! The edge ideal of the hexagon decomposes into five prime components (the
//! minimal vertex covers), and because the graph is bipartite the associated
//! primes of every power are those same five primes. The fitted degree of
//! `ir(I^n)` is 3, strictly between the naive expectations: `bight - 1 = 3`
//! meets the lower bound while `spread - 1 = 4` stays out of reach.
//!
//! ```bash
//! cargo run -p irred --example hexagon_scan
//! ```

use std::time::Instant;

use irred::{ass_stabilization, ir_polynomial, parse_ideal, ScanConfig, VariableSet};

fn main() {
    let vars = VariableSet::numbered("x", 6);
    let hexagon = parse_ideal("x1*x2, x2*x3, x3*x4, x4*x5, x5*x6, x6*x1", &vars).unwrap();
    println!("I = ({hexagon})");

    let config = ScanConfig::with_n_max(7);
    let started = Instant::now();

    let (stable, onset) = ass_stabilization(&hexagon, config)
        .unwrap()
        .expect("stable from the first power");
    println!("Ass(I^n) constant from n = {onset}:");
    for prime in &stable {
        println!("  {}", prime.display(&vars));
    }

    let report = ir_polynomial(&hexagon, config).unwrap();
    println!("ir(I^n): {:?}", report.ir_values);
    println!("mu(I^n): {:?}", report.mu_values);
    let fitted = report.fitted_ir.as_ref().expect("stabilized");
    println!("fitted ir polynomial: {fitted} (degree {})", fitted.degree().unwrap());
    println!(
        "bight - 1 = {} <= {} <= {} = spread - 1  (bounds_ok: {})",
        report.bight - 1,
        fitted.degree().unwrap(),
        report.analytic_spread.unwrap() - 1,
        report.bounds_ok.unwrap(),
    );
    println!("scan took {:?}", started.elapsed());
}
