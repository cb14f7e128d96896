//! Reader for the line-oriented polynomial text format.
//!
//! ```text
//! # comment
//! vars x y
//! x^2 + 3/2*x*y
//! -y^2 + 1
//! ```

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::system::is_identifier;
use super::{Monomial, PolySystem, Polynomial, Rational};
use crate::error::{Error, Result};

pub fn parse_system(text: &str) -> Result<PolySystem> {
    let mut names: Option<Vec<String>> = None;
    let mut polys = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = strip_comment(raw);
        if line.trim().is_empty() {
            continue;
        }
        match &names {
            None => names = Some(parse_vars_line(line, line_no)?),
            Some(names) => polys.push(Parser::new(line, line_no, names).polynomial()?),
        }
    }
    let names = names.ok_or(Error::Syntax {
        line: 1,
        column: 1,
        message: "missing `vars` line".into(),
    })?;
    PolySystem::new(names, polys)
}

/// Parses a single polynomial over the given variables.
pub fn parse_polynomial(text: &str, var_names: &[String]) -> Result<Polynomial> {
    Parser::new(strip_comment(text), 1, var_names).polynomial()
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

fn parse_vars_line(line: &str, line_no: usize) -> Result<Vec<String>> {
    let mut words = word_columns(line);
    match words.next() {
        Some((_, "vars")) => {}
        Some((col, _)) => {
            return Err(Error::Syntax {
                line: line_no,
                column: col,
                message: "expected `vars` declaration".into(),
            })
        }
        None => unreachable!("blank lines are skipped"),
    }
    let mut names = Vec::new();
    let mut seen = HashSet::new();
    for (col, word) in words {
        if !is_identifier(word) {
            return Err(Error::Syntax {
                line: line_no,
                column: col,
                message: format!("invalid variable name `{word}`"),
            });
        }
        if !seen.insert(word) {
            return Err(Error::Syntax {
                line: line_no,
                column: col,
                message: format!("duplicate variable `{word}`"),
            });
        }
        names.push(word.to_string());
    }
    if names.is_empty() {
        return Err(Error::Syntax {
            line: line_no,
            column: line.len() + 1,
            message: "`vars` needs at least one variable".into(),
        });
    }
    Ok(names)
}

/// Whitespace-separated words with their 1-based character columns.
fn word_columns(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter()
        .map(move |(byte, w)| (line[..byte].chars().count() + 1, w))
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    names: &'a [String],
}

impl<'a> Parser<'a> {
    fn new(text: &str, line: usize, names: &'a [String]) -> Self {
        Parser {
            chars: text.chars().collect(),
            pos: 0,
            line,
            names,
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            line: self.line,
            column: self.pos + 1,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn polynomial(&mut self) -> Result<Polynomial> {
        let n = self.names.len();
        let mut terms = Vec::new();
        let mut negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        loop {
            let (coeff, mono) = self.term()?;
            terms.push((if negative { -coeff } else { coeff }, mono));
            match self.peek() {
                None => break,
                Some('+') => negative = false,
                Some('-') => negative = true,
                Some(c) => return Err(self.error(format!("unexpected `{c}`"))),
            }
            self.pos += 1;
        }
        Polynomial::from_terms(n, terms)
    }

    fn term(&mut self) -> Result<(Rational, Monomial)> {
        let mut exps = vec![0u32; self.names.len()];
        let coeff = match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let coeff = self.coefficient()?;
                if !self.eat('*') {
                    return Ok((coeff, Monomial::new(exps)));
                }
                coeff
            }
            Some(c) if c.is_ascii_alphabetic() => Rational::one(),
            Some(c) => return Err(self.error(format!("expected a term, found `{c}`"))),
            None => return Err(self.error("expected a term, found end of line")),
        };
        loop {
            self.power(&mut exps)?;
            if !self.eat('*') {
                break;
            }
        }
        Ok((coeff, Monomial::new(exps)))
    }

    fn coefficient(&mut self) -> Result<Rational> {
        let numer: BigInt = self.digits().expect("caller saw a digit").parse().unwrap();
        if !self.eat('/') {
            return Ok(Rational::from_integer(numer));
        }
        let col = self.pos + 1;
        let denom: BigInt = self
            .digits()
            .ok_or_else(|| self.error("expected denominator"))?
            .parse()
            .unwrap();
        if denom.is_zero() {
            return Err(Error::ZeroDenominator {
                line: self.line,
                column: col,
            });
        }
        Ok(Rational::new(numer, denom))
    }

    fn power(&mut self, exps: &mut [u32]) -> Result<()> {
        self.skip_ws();
        let start = self.pos;
        if !matches!(self.chars.get(self.pos), Some(c) if c.is_ascii_alphabetic()) {
            return Err(self.error("expected a variable"));
        }
        while matches!(self.chars.get(self.pos), Some(c) if c.is_ascii_alphanumeric() || *c == '_')
        {
            self.pos += 1;
        }
        let name: String = self.chars[start..self.pos].iter().collect();
        let var = self
            .names
            .iter()
            .position(|v| *v == name)
            .ok_or(Error::UnknownVariable {
                line: self.line,
                column: start + 1,
                name,
            })?;
        let exp = if self.eat('^') {
            let digits = self
                .digits()
                .ok_or_else(|| self.error("expected a positive integer exponent"))?;
            let exp: u32 = digits
                .parse()
                .map_err(|_| self.error("exponent out of range"))?;
            if exp == 0 {
                return Err(self.error("exponent must be at least 1"));
            }
            exp
        } else {
            1
        };
        exps[var] = exps[var].checked_add(exp).ok_or(Error::ExponentOverflow)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn parses_two_variable_system() {
        let sys = parse_system("vars x y\nx^2 + x*y\ny^2").unwrap();
        assert_eq!(sys.var_names(), ["x", "y"]);
        assert_eq!(sys.len(), 2);
        let f: Vec<_> = sys.polys()[0].support().cloned().collect();
        assert_eq!(f, vec![m(&[2, 0]), m(&[1, 1])]);
        assert_eq!(sys.polys()[1], Polynomial::monomial(m(&[0, 2])));
    }

    #[test]
    fn merges_like_terms() {
        let sys = parse_system("vars x\n3/2*x - 1/2*x").unwrap();
        assert_eq!(sys.polys()[0], Polynomial::monomial(m(&[1])));
    }

    #[test]
    fn rejects_negative_exponent() {
        let err = parse_system("vars x\nx^-1").unwrap_err();
        assert_eq!(
            err,
            Error::Syntax {
                line: 2,
                column: 3,
                message: "expected a positive integer exponent".into()
            }
        );
    }

    #[test]
    fn error_positions() {
        assert!(matches!(
            parse_system("vars x\n\n  x + z").unwrap_err(),
            Error::UnknownVariable {
                line: 3,
                column: 7,
                ..
            }
        ));
        assert!(matches!(
            parse_system("vars x\nx + 1/0").unwrap_err(),
            Error::ZeroDenominator { line: 2, column: 7 }
        ));
        assert!(matches!(
            parse_system("vars x\n2x").unwrap_err(),
            Error::Syntax {
                line: 2,
                column: 2,
                ..
            }
        ));
        assert!(matches!(
            parse_system("vars x\nx^0").unwrap_err(),
            Error::Syntax { .. }
        ));
        assert!(matches!(
            parse_system("vars x\nx +").unwrap_err(),
            Error::Syntax { .. }
        ));
        assert!(matches!(
            parse_system("x + y").unwrap_err(),
            Error::Syntax {
                line: 1,
                column: 1,
                ..
            }
        ));
        assert!(matches!(
            parse_system("vars x x").unwrap_err(),
            Error::Syntax { column: 8, .. }
        ));
        assert!(matches!(
            parse_system("# nothing\n").unwrap_err(),
            Error::Syntax { .. }
        ));
        assert!(matches!(
            parse_system("vars 1x").unwrap_err(),
            Error::Syntax { .. }
        ));
    }

    #[test]
    fn comments_blank_lines_and_signs() {
        let sys = parse_system(
            "# header\n\nvars a b_2  # trailing\n  - a*b_2 + 3 # c\n\n+ 2/4 * a ^ 2 * a\n",
        )
        .unwrap();
        assert_eq!(sys.len(), 2);
        assert_eq!(sys.polys()[0].to_text(sys.var_names()), "-a*b_2 + 3");
        assert_eq!(sys.polys()[1].to_text(sys.var_names()), "1/2*a^3");
    }

    #[test]
    fn print_then_parse_is_identity_on_example() {
        let text = "vars x y\nx^2 + x*y\ny^2\n";
        let sys = parse_system(text).unwrap();
        assert_eq!(sys.to_string(), text);
    }

    trait ToText {
        fn to_text(&self, names: &[String]) -> String;
    }

    impl ToText for Polynomial {
        fn to_text(&self, names: &[String]) -> String {
            self.display(names).to_string()
        }
    }

    fn arb_system() -> impl Strategy<Value = PolySystem> {
        (1usize..4).prop_flat_map(|n| {
            let term = (-20i64..20, 1i64..6, prop::collection::vec(0u32..4, n));
            let poly = prop::collection::vec(term, 0..5).prop_map(move |ts| {
                Polynomial::from_terms(
                    n,
                    ts.into_iter()
                        .map(|(a, b, e)| (Rational::new(a.into(), b.into()), Monomial::new(e))),
                )
                .unwrap()
            });
            prop::collection::vec(poly, 0..4)
                .prop_map(move |ps| PolySystem::with_default_names(n, ps).unwrap())
        })
    }

    proptest! {
        #[test]
        fn parse_print_round_trip(sys in arb_system()) {
            let printed = sys.to_string();
            let reparsed = parse_system(&printed).unwrap();
            prop_assert_eq!(&reparsed, &sys);
            prop_assert_eq!(reparsed.to_string(), printed);
        }
    }
}
