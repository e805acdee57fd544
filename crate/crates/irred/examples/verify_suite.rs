//! Running the verification suite from the library.
//!
//! The suite replays every structural statement the crate implements over
//! the bundled worked examples plus a seeded random corpus. Identical
//! configurations produce byte-identical reports.
//!
//! ```bash
//! cargo run -p irred --example verify_suite
//! ```

use irred::harness::{run_suite, CorpusSpec, SuiteConfig, VerifyResult};
use irred::report::{json_to_string, suite_json};
use irred::ScanConfig;

fn main() {
    // a trimmed corpus keeps the demo quick; `irred verify --suite all`
    // runs the full default corpus
    let mut config = SuiteConfig::for_seed(42);
    config.corpus = vec![CorpusSpec { seed: 42, arity: 3, n_gens: 5, max_exp: 4, count: 15 }];
    config.scan = ScanConfig::with_n_max(7);
    config.scan_sample = 3;

    let outcome = run_suite(&config);
    println!(
        "{} reports: {} pass, {} fail, {} skip",
        outcome.reports.len(),
        outcome.passed,
        outcome.failed,
        outcome.skipped
    );
    for report in &outcome.reports {
        if report.result != VerifyResult::Pass {
            println!("  {:<14} {:<24} {}", report.statement.id(), report.instance, report.result.as_str());
        }
    }
    assert!(outcome.all_passed());

    // the first few serialized reports, as `irred verify` emits them
    let value = suite_json(&outcome, config.seed);
    let text = json_to_string(&value);
    println!("\nJSON (first lines):");
    for line in text.lines().take(16) {
        println!("{line}");
    }
}
