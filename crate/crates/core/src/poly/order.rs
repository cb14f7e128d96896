use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Monomial, Polynomial, Rational, Term};
use crate::error::{Error, Result};

/// A term order given by a strictly positive weight vector, with ties broken
/// by the lexicographic order on exponent vectors.
///
/// `a < b` iff `w.a < w.b`, or `w.a == w.b` and `a` is lex-smaller than `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightOrder {
    weights: Vec<Rational>,
    // weights scaled by the lcm of their denominators; same order, integer dot products
    scaled: Vec<BigInt>,
    small: Option<Vec<i64>>,
}

impl WeightOrder {
    pub fn new(weights: Vec<Rational>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidArgument(
                "weight vector must have at least one entry".into(),
            ));
        }
        if let Some((index, w)) = weights.iter().enumerate().find(|(_, w)| !w.is_positive()) {
            return Err(Error::NonPositiveWeight {
                index,
                value: w.to_string(),
            });
        }
        let denom = weights
            .iter()
            .fold(BigInt::one(), |acc, w| acc.lcm(w.denom()));
        let scaled: Vec<BigInt> = weights
            .iter()
            .map(|w| w.numer() * (&denom / w.denom()))
            .collect();
        let small = scaled.iter().map(|w| w.to_i64()).collect();
        Ok(WeightOrder {
            weights,
            scaled,
            small,
        })
    }

    pub fn from_integers<I: IntoIterator<Item = i64>>(weights: I) -> Result<Self> {
        Self::new(
            weights
                .into_iter()
                .map(|w| Rational::from_integer(BigInt::from(w)))
                .collect(),
        )
    }

    /// The all-ones order (total degree, lex tie-break).
    pub fn uniform(n: usize) -> Self {
        Self::new(vec![Rational::one(); n]).expect("n >= 1")
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    /// The primitive positive integer vector on the same ray as the weights.
    pub fn integer_weights(&self) -> Vec<BigInt> {
        let g = self.scaled.iter().fold(BigInt::zero(), |acc, w| acc.gcd(w));
        self.scaled.iter().map(|w| w / &g).collect()
    }

    /// Exact weighted degree `w.a`.
    pub fn weight_of(&self, a: &Monomial) -> Rational {
        self.weights
            .iter()
            .zip(a.exponents())
            .map(|(w, &e)| w * Rational::from_integer(BigInt::from(e)))
            .fold(Rational::zero(), |acc, x| acc + x)
    }

    fn check_dim(&self, a: &Monomial) -> Result<()> {
        if a.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: a.dim(),
            });
        }
        Ok(())
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        self.check_dim(a)?;
        self.check_dim(b)?;
        Ok(self.cmp_unchecked(a, b))
    }

    pub(crate) fn cmp_unchecked(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let by_weight = match &self.small {
            Some(w) => {
                let dot = |m: &Monomial| -> i128 {
                    w.iter()
                        .zip(m.exponents())
                        .map(|(&w, &e)| i128::from(w) * i128::from(e))
                        .sum()
                };
                dot(a).cmp(&dot(b))
            }
            None => {
                let dot = |m: &Monomial| -> BigInt {
                    self.scaled
                        .iter()
                        .zip(m.exponents())
                        .map(|(w, &e)| w * BigInt::from(e))
                        .sum()
                };
                dot(a).cmp(&dot(b))
            }
        };
        by_weight.then_with(|| a.cmp(b))
    }

    /// Index (into `f.terms()`) of the leading term.
    pub fn leading_index(&self, f: &Polynomial) -> Result<usize> {
        if f.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: f.dim(),
            });
        }
        let terms = f.terms();
        if terms.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        let mut best = 0;
        for i in 1..terms.len() {
            if self.cmp_unchecked(&terms[i].mono, &terms[best].mono) == Ordering::Greater {
                best = i;
            }
        }
        Ok(best)
    }

    pub fn leading_term<'a>(&self, f: &'a Polynomial) -> Result<&'a Term> {
        Ok(&f.terms()[self.leading_index(f)?])
    }
}
