//! Scanning powers of an ideal: `ir(I^n)` becomes a polynomial.
//!
//! For large `n` the index of reducibility of `I^n` agrees with a polynomial
//! whose degree lies between `bight(I) - 1` and `ell(I) - 1`, where `ell` is
//! the analytic spread. The scan computes both sequences, certifies a tail,
//! fits exact rational polynomials, and checks the bounds.
//!
//! ```bash
//! cargo run -p irred --example power_scan
//! ```

use irred::report::{json_to_string, scan_report_csv, scan_report_json};
use irred::{analytic_spread, ir_polynomial, parse_ideal, ScanConfig, VariableSet};

fn main() {
    let vars = VariableSet::new(["x", "y"]).unwrap();
    // I = x * (x, y): one embedded prime, spread 2, big height 1
    let ideal = parse_ideal("x^2, x*y", &vars).unwrap();

    let config = ScanConfig::with_n_max(8);
    let report = ir_polynomial(&ideal, config).unwrap();

    println!("I = ({ideal})");
    println!("ir(I^n) for n = 1..8:  {:?}", report.ir_values);
    println!("mu(I^n) for n = 1..8:  {:?}", report.mu_values);
    println!(
        "fitted ir polynomial:  {}",
        report.fitted_ir.as_ref().expect("stabilizes immediately")
    );
    println!(
        "fitted mu polynomial:  {}",
        report.fitted_mu.as_ref().expect("stabilizes immediately")
    );
    println!("bight:                 {}", report.bight);
    println!("analytic spread:       {}", analytic_spread(&ideal, config).unwrap());
    println!(
        "degree bounds hold:    {}",
        report.bounds_ok.expect("both fits exist")
    );
    println!();
    println!("JSON report:\n{}", json_to_string(&scan_report_json(&report)));
    println!("CSV:\n{}", scan_report_csv(&report));
}
