//! Binomial counts for powers of monomial parameter ideals.
//!
//! For `q = (x_1^{a_1}, ..., x_d^{a_d})` in the full polynomial ring the
//! count is exact and independent of the exponents:
//! `ir(q^{n+1}) = C(n + d - 1, d - 1)` for every `n >= 0`.
//!
//! ```bash
//! cargo run -p irred --example parameter_ideals
//! ```

use irred::harness::{binomial, verify_parameter_binomial, VerifyResult};
use irred::{ir, parse_ideal, VariableSet};

fn main() {
    let cases: &[(&[&str], &str)] = &[
        (&["x", "y"], "x, y"),
        (&["x", "y"], "x^2, y^3"),
        (&["x", "y", "z"], "x, y, z"),
    ];
    for (names, text) in cases {
        let vars = VariableSet::new(names.iter().copied()).unwrap();
        let q = parse_ideal(text, &vars).unwrap();
        let d = vars.arity() as u64;
        println!("q = ({q}), d = {d}");
        for n in 0..=5u32 {
            let got = ir(&q.power(n + 1)).unwrap();
            let expected = binomial(u64::from(n) + d - 1, d - 1);
            println!("  ir(q^{}) = {:>2}   C({}, {}) = {:>2}", n + 1, got, u64::from(n) + d - 1, d - 1, expected);
            assert_eq!(got, expected);
        }
    }

    // the same check, packaged as a verifier report
    let report = verify_parameter_binomial(&[2, 3], 5);
    assert_eq!(report.result, VerifyResult::Pass);
    println!("\nverifier: {} on {} -> {}", report.statement.id(), report.instance, report.result.as_str());
}
