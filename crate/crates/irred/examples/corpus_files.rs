//! Corpus files: named ideals under a declared variable set.
//!
//! The crate bundles the worked examples as corpus files; `irred gen-random`
//! emits the same format. Printing is canonical, so a canonical file
//! round-trips byte for byte.
//!
//! ```bash
//! cargo run -p irred --example corpus_files
//! ```

use irred::corpus::{bundled, CorpusFile};
use irred::harness::{random_monomial_ideals, CorpusSpec};
use irred::{ir, VariableSet};

fn main() {
    for (name, text) in bundled::all() {
        let corpus = CorpusFile::parse(text).unwrap();
        println!("bundled corpus `{name}` over ({}):", corpus.vars());
        for (entry, ideal) in corpus.entries() {
            println!("  {entry}: ({ideal})  ir = {}", ir(ideal).unwrap());
        }
        assert_eq!(corpus.to_text(), text, "canonical round-trip");
    }

    // a generated corpus is just another corpus file
    let spec = CorpusSpec { seed: 7, arity: 3, n_gens: 4, max_exp: 3, count: 3 };
    let ideals = random_monomial_ideals(&spec).unwrap();
    let vars = VariableSet::numbered("x", 3);
    let entries = ideals
        .into_iter()
        .enumerate()
        .map(|(i, ideal)| (format!("r{i:04}"), ideal))
        .collect();
    let generated = CorpusFile::new(vars, entries);
    println!("\ngenerated (seed 7):\n{}", generated.to_text());
    let reparsed = CorpusFile::parse(&generated.to_text()).unwrap();
    assert_eq!(reparsed, generated);
}
