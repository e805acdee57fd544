//! The ambient variable set of a polynomial ring.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

/// An ordered set of distinct variable names. The order is fixed for the
/// lifetime of a computation and is the order used for exponent vectors and
/// canonical printing.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VariableSet {
    names: Vec<String>,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl VariableSet {
    /// Builds a variable set, checking that names are distinct, nonempty and
    /// match `[A-Za-z][A-Za-z0-9_]*`.
    pub fn new<I, S>(names: I) -> Result<Arc<Self>, String>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err("variable set must contain at least one variable".into());
        }
        let mut seen = BTreeSet::new();
        for name in &names {
            if !valid_name(name) {
                return Err(format!("invalid variable name `{name}`"));
            }
            if !seen.insert(name.clone()) {
                return Err(format!("duplicate variable name `{name}`"));
            }
        }
        Ok(Arc::new(VariableSet { names }))
    }

    /// Parses a comma-separated list such as `x1,x2,x3`.
    pub fn parse_csv(text: &str) -> Result<Arc<Self>, String> {
        Self::new(text.split(',').map(|s| s.trim().to_string()))
    }

    /// Convenience constructor `x1..x<n>`.
    pub fn numbered(prefix: &str, arity: usize) -> Arc<Self> {
        Self::new((1..=arity).map(|i| format!("{prefix}{i}"))).expect("generated names are valid")
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The sub-ring variable set on `keep` (ambient order preserved).
    pub fn restrict(&self, keep: &BTreeSet<usize>) -> Arc<Self> {
        let names: Vec<String> = keep.iter().map(|&i| self.names[i].clone()).collect();
        VariableSet::new(names).expect("restriction of a valid set is valid")
    }
}

impl fmt::Display for VariableSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.names.join(","))
    }
}
