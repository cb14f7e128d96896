use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An exponent vector `x_1^e_1 * ... * x_n^e_n` of fixed ambient dimension.
///
/// The derived `Ord` is the plain lexicographic order on exponent vectors
/// (first variable most significant). It is used for canonical storage and as
/// the tie-break inside [`WeightOrder`](super::WeightOrder).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    /// The constant monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    /// The pure power `x_var^exp`.
    pub fn pure_power(n: usize, var: usize, exp: u32) -> Self {
        let mut e = vec![0; n];
        e[var] = exp;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn check_dim(&self, other: &Monomial) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_dim(other)?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_dim(other)?;
        Ok(Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        ))
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.check_dim(other)?;
        Ok(Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        ))
    }

    /// `true` iff `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check_dim(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / divisor`, or `None` when `divisor` does not divide `self`.
    pub fn checked_div(&self, divisor: &Monomial) -> Result<Option<Monomial>> {
        self.check_dim(divisor)?;
        Ok(self
            .0
            .iter()
            .zip(&divisor.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial))
    }

    pub fn is_coprime(&self, other: &Monomial) -> Result<bool> {
        self.check_dim(other)?;
        Ok(self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0))
    }

    /// The variable index when this monomial is `x_i^k` with `k >= 1`.
    ///
    /// The constant monomial is not a pure power.
    pub fn is_pure_power(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    /// Renders the monomial with the given variable names, e.g. `x^2*y`.
    pub fn display<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        MonomialDisplay { mono: self, names }
    }
}

struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    names: &'a [String],
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.mono.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(&self.names[i])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
