//! The ideal text grammar.
//!
//! ```text
//! ideal  := mono ("," mono)*
//! mono   := "1" | factor ("*" factor)*
//! factor := varname ("^" posint)?
//! ```
//!
//! Whitespace is insignificant; variable names match
//! `[A-Za-z][A-Za-z0-9_]*`. The ambient variable set is declared separately,
//! never inferred from the text. As an extension, the single token `0`
//! denotes the zero ideal, matching how the zero ideal prints.

use std::sync::Arc;

use crate::error::ParseError;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::vars::VariableSet;

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        Scanner { bytes: text.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn ident(&mut self) -> Option<(String, usize)> {
        self.skip_ws();
        let start = self.pos;
        let mut end = start;
        while end < self.bytes.len()
            && (self.bytes[end].is_ascii_alphanumeric() || self.bytes[end] == b'_')
        {
            end += 1;
        }
        if end == start || !self.bytes[start].is_ascii_alphabetic() {
            return None;
        }
        self.pos = end;
        Some((String::from_utf8_lossy(&self.bytes[start..end]).into_owned(), start))
    }

    fn number(&mut self) -> Result<u32, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.bytes.get(self.pos) == Some(&b'-') {
            return Err(ParseError::NegativeExponent { at: start });
        }
        let mut end = start;
        while end < self.bytes.len() && self.bytes[end].is_ascii_digit() {
            end += 1;
        }
        if end == start {
            return Err(ParseError::Malformed { at: start, detail: "expected an exponent".into() });
        }
        let text = std::str::from_utf8(&self.bytes[start..end]).expect("digits are ascii");
        self.pos = end;
        let value: u32 = text
            .parse()
            .map_err(|_| ParseError::Malformed { at: start, detail: "exponent out of range".into() })?;
        if value == 0 {
            return Err(ParseError::Malformed { at: start, detail: "exponent must be positive".into() });
        }
        Ok(value)
    }
}

fn parse_monomial(sc: &mut Scanner<'_>, vars: &VariableSet) -> Result<Monomial, ParseError> {
    let mut exps = vec![0u32; vars.arity()];
    // literal 1 is the unit monomial
    if sc.peek() == Some(b'1') {
        sc.bump();
        return Ok(Monomial::new(exps));
    }
    loop {
        let at = sc.pos;
        let (name, start) = sc.ident().ok_or_else(|| ParseError::Malformed {
            at,
            detail: "expected a variable name".into(),
        })?;
        let index = vars
            .index_of(&name)
            .ok_or(ParseError::UnknownVariable { name, at: start })?;
        let exp = if sc.peek() == Some(b'^') {
            sc.bump();
            sc.number()?
        } else {
            1
        };
        exps[index] = exps[index]
            .checked_add(exp)
            .ok_or(ParseError::Malformed { at: start, detail: "exponent overflow".into() })?;
        if sc.peek() == Some(b'*') {
            sc.bump();
        } else {
            break;
        }
    }
    Ok(Monomial::new(exps))
}

/// Parses the ideal grammar over a declared ambient, returning the generated
/// ideal in canonical (minimalized) form.
pub fn parse_ideal(text: &str, vars: &Arc<VariableSet>) -> Result<MonomialIdeal, ParseError> {
    let mut sc = Scanner::new(text);
    if sc.peek() == Some(b'0') {
        sc.bump();
        if sc.peek().is_some() {
            return Err(ParseError::Malformed {
                at: sc.pos,
                detail: "trailing input after the zero ideal".into(),
            });
        }
        return Ok(MonomialIdeal::zero(vars.clone()));
    }
    let mut gens = Vec::new();
    loop {
        gens.push(parse_monomial(&mut sc, vars)?);
        match sc.peek() {
            Some(b',') => {
                sc.bump();
            }
            Some(other) => {
                return Err(ParseError::Malformed {
                    at: sc.pos,
                    detail: format!("unexpected byte `{}`", other as char),
                });
            }
            None => break,
        }
    }
    Ok(MonomialIdeal::new(vars.clone(), gens))
}
