//! Corpus files: a variable-set header followed by named ideal entries.
//!
//! ```text
//! vars: x1,x2,x3
//! # comment
//! triangle: x1*x2, x2*x3, x3*x1
//! ```
//!
//! Entry names are unique and every entry parses under the declared ambient.
//! Printing emits the canonical form (comments are not preserved), so
//! parse -> print -> parse is the identity.

use std::sync::Arc;

use crate::error::CorpusError;
use crate::ideal::MonomialIdeal;
use crate::parse::parse_ideal;
use crate::vars::VariableSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusFile {
    vars: Arc<VariableSet>,
    entries: Vec<(String, MonomialIdeal)>,
}

fn valid_entry_name(name: &str) -> bool {
    !name.is_empty()
        && name
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
}

impl CorpusFile {
    pub fn new(vars: Arc<VariableSet>, entries: Vec<(String, MonomialIdeal)>) -> Self {
        CorpusFile { vars, entries }
    }

    /// Parses corpus text; errors carry the offending line number.
    pub fn parse(text: &str) -> Result<Self, CorpusError> {
        let mut vars: Option<Arc<VariableSet>> = None;
        let mut entries: Vec<(String, MonomialIdeal)> = Vec::new();
        for (index, raw) in text.lines().enumerate() {
            let line = index + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let Some((key, value)) = trimmed.split_once(':') else {
                return Err(CorpusError::Malformed {
                    line,
                    detail: "expected `name: ideal` (or a `vars:` header)".into(),
                });
            };
            let key = key.trim();
            let value = value.trim();
            match &vars {
                None => {
                    if key != "vars" {
                        return Err(CorpusError::MissingHeader);
                    }
                    let parsed = VariableSet::parse_csv(value)
                        .map_err(|detail| CorpusError::Malformed { line, detail })?;
                    vars = Some(parsed);
                }
                Some(ambient) => {
                    if key == "vars" {
                        return Err(CorpusError::Malformed {
                            line,
                            detail: "duplicate `vars:` header".into(),
                        });
                    }
                    if !valid_entry_name(key) {
                        return Err(CorpusError::Malformed {
                            line,
                            detail: format!("invalid entry name `{key}`"),
                        });
                    }
                    if entries.iter().any(|(name, _)| name == key) {
                        return Err(CorpusError::DuplicateName { line, name: key.into() });
                    }
                    let ideal = parse_ideal(value, ambient)
                        .map_err(|source| CorpusError::Ideal { line, source })?;
                    entries.push((key.to_string(), ideal));
                }
            }
        }
        let vars = vars.ok_or(CorpusError::MissingHeader)?;
        Ok(CorpusFile { vars, entries })
    }

    /// Canonical corpus text: header plus one `name: ideal` line per entry,
    /// in entry order.
    pub fn to_text(&self) -> String {
        let mut out = format!("vars: {}\n", self.vars);
        for (name, ideal) in &self.entries {
            out.push_str(&format!("{name}: {ideal}\n"));
        }
        out
    }

    pub fn vars(&self) -> &Arc<VariableSet> {
        &self.vars
    }

    pub fn entries(&self) -> &[(String, MonomialIdeal)] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Option<&MonomialIdeal> {
        self.entries
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, ideal)| ideal)
    }
}

/// The corpus files shipped with the crate.
pub mod bundled {
    pub const TWO_VARS: &str = include_str!("../corpus/two-vars.corpus");
    pub const THREE_VARS: &str = include_str!("../corpus/three-vars.corpus");
    pub const SIX_VARS: &str = include_str!("../corpus/six-vars.corpus");

    pub fn all() -> [(&'static str, &'static str); 3] {
        [
            ("two-vars", TWO_VARS),
            ("three-vars", THREE_VARS),
            ("six-vars", SIX_VARS),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_header_entries_and_comments() {
        let text = "# corpus\nvars: x,y\n\nfirst: x^2, x*y\nsecond: x, y\n";
        let corpus = CorpusFile::parse(text).unwrap();
        assert_eq!(corpus.vars().arity(), 2);
        assert_eq!(corpus.entries().len(), 2);
        assert_eq!(corpus.get("first").unwrap().to_string(), "x^2, x*y");
    }

    #[test]
    fn round_trips_canonically() {
        let text = "vars: x,y\nfirst: x^2, x*y\n";
        let corpus = CorpusFile::parse(text).unwrap();
        assert_eq!(corpus.to_text(), text);
        let again = CorpusFile::parse(&corpus.to_text()).unwrap();
        assert_eq!(again, corpus);
    }

    #[test]
    fn bundled_corpora_round_trip_byte_identically() {
        for (name, text) in bundled::all() {
            let corpus = CorpusFile::parse(text).unwrap();
            assert_eq!(corpus.to_text(), text, "bundled corpus {name}");
        }
    }

    #[test]
    fn bundled_corpora_contain_the_worked_examples() {
        let two = CorpusFile::parse(bundled::TWO_VARS).unwrap();
        assert_eq!(two.get("principal-times-max").unwrap().to_string(), "x^2, x*y");
        assert!(two.get("max-ideal").is_some());
        assert!(two.get("param-2-3").is_some());
        let three = CorpusFile::parse(bundled::THREE_VARS).unwrap();
        assert_eq!(three.get("triangle").unwrap().num_gens(), 3);
        assert!(three.get("max-ideal").is_some());
        let six = CorpusFile::parse(bundled::SIX_VARS).unwrap();
        assert_eq!(six.get("hexagon").unwrap().num_gens(), 6);
        // at least three monomial parameter ideals across the files
        let parameter_entries = ["max-ideal", "param-2-3", "param-1-2-2"];
        let count = parameter_entries
            .iter()
            .filter(|n| two.get(n).is_some() || three.get(n).is_some())
            .count();
        assert!(count >= 3);
    }

    #[test]
    fn error_positions() {
        assert!(matches!(CorpusFile::parse(""), Err(CorpusError::MissingHeader)));
        assert!(matches!(
            CorpusFile::parse("first: x\nvars: x,y\n"),
            Err(CorpusError::MissingHeader)
        ));
        assert!(matches!(
            CorpusFile::parse("vars: x,y\na: x\na: y\n"),
            Err(CorpusError::DuplicateName { line: 3, .. })
        ));
        assert!(matches!(
            CorpusFile::parse("vars: x,y\na: z\n"),
            Err(CorpusError::Ideal { line: 2, .. })
        ));
        assert!(matches!(
            CorpusFile::parse("vars: x,y\nbad entry\n"),
            Err(CorpusError::Malformed { line: 2, .. })
        ));
    }
}
