use std::collections::HashSet;
use std::fmt;

use super::{parse, Polynomial};
use crate::error::{Error, Result};

/// A named polynomial system `F = {f_1, ..., f_s}` over `n` variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolySystem {
    var_names: Vec<String>,
    polys: Vec<Polynomial>,
}

impl PolySystem {
    pub fn new(var_names: Vec<String>, polys: Vec<Polynomial>) -> Result<Self> {
        if var_names.is_empty() {
            return Err(Error::InvalidArgument(
                "a system needs at least one variable".into(),
            ));
        }
        let mut seen = HashSet::new();
        for name in &var_names {
            if !is_identifier(name) {
                return Err(Error::InvalidArgument(format!(
                    "invalid variable name `{name}`"
                )));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::InvalidArgument(format!(
                    "duplicate variable name `{name}`"
                )));
            }
        }
        let n = var_names.len();
        if let Some(p) = polys.iter().find(|p| p.dim() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: p.dim(),
            });
        }
        Ok(PolySystem { var_names, polys })
    }

    /// A system over `x1, ..., xn`.
    pub fn with_default_names(n: usize, polys: Vec<Polynomial>) -> Result<Self> {
        Self::new((1..=n).map(|i| format!("x{i}")).collect(), polys)
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse::parse_system(text)
    }

    pub fn n(&self) -> usize {
        self.var_names.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.var_names.iter().position(|v| v == name)
    }

    /// Same variables, different polynomials.
    pub fn with_polys(&self, polys: Vec<Polynomial>) -> Result<Self> {
        Self::new(self.var_names.clone(), polys)
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Display for PolySystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vars {}", self.var_names.join(" "))?;
        for p in &self.polys {
            writeln!(f, "{}", p.display(&self.var_names))?;
        }
        Ok(())
    }
}
