use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{Monomial, Rational};
use crate::error::{Error, Result};

/// A nonzero coefficient attached to a monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Rational,
    pub mono: Monomial,
}

impl Term {
    pub fn new(coeff: Rational, mono: Monomial) -> Self {
        debug_assert!(!coeff.is_zero());
        Term { coeff, mono }
    }

    /// `self / other`, or `None` if the monomials do not divide.
    pub fn checked_div(&self, other: &Term) -> Result<Option<Term>> {
        Ok(self
            .mono
            .checked_div(&other.mono)?
            .map(|mono| Term::new(&self.coeff / &other.coeff, mono)))
    }
}

/// A sparse polynomial with exact rational coefficients.
///
/// Terms are kept in strictly descending lexicographic order of their
/// monomials, with no zero coefficients. This is a storage order only; the
/// leading term is always taken with respect to an explicit
/// [`WeightOrder`](super::WeightOrder).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    n: usize,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial {
            n,
            terms: Vec::new(),
        }
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Self::from_terms(n, [(c, Monomial::one(n))]).expect("constant monomial has dimension n")
    }

    pub fn monomial(mono: Monomial) -> Self {
        Polynomial {
            n: mono.dim(),
            terms: vec![Term::new(Rational::one(), mono)],
        }
    }

    /// Collects terms into canonical form: like monomials merged, zeros
    /// dropped, storage order restored.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Rational, Monomial)>,
    {
        let mut raw: Vec<(Rational, Monomial)> = Vec::new();
        for (c, m) in terms {
            if m.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: m.dim(),
                });
            }
            raw.push((c, m));
        }
        raw.sort_by(|a, b| b.1.cmp(&a.1));
        let mut out: Vec<Term> = Vec::with_capacity(raw.len());
        for (c, m) in raw {
            match out.last_mut() {
                Some(last) if last.mono == m => last.coeff += c,
                _ => out.push(Term { coeff: c, mono: m }),
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        Ok(Polynomial { n, terms: out })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `true` for a nonzero constant.
    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mono.is_one()
    }

    /// The support, in storage order.
    pub fn support(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter().map(|t| &t.mono)
    }

    pub fn coeff_of(&self, mono: &Monomial) -> Rational {
        self.terms
            .binary_search_by(|t| mono.cmp(&t.mono))
            .map(|i| self.terms[i].coeff.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    pub fn min_degree(&self) -> Option<u64> {
        self.terms.iter().map(|t| t.mono.degree()).min()
    }

    /// The common degree of all terms, if the polynomial is nonzero and homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let d = self.total_degree()?;
        (self.min_degree() == Some(d)).then_some(d)
    }

    fn check_dim(&self, other: &Polynomial) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(-&t.coeff, t.mono.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_dim(other)?;
        Ok(self.merge(other.terms.iter().cloned()))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_dim(other)?;
        Ok(self.merge(
            other
                .terms
                .iter()
                .map(|t| Term::new(-&t.coeff, t.mono.clone())),
        ))
    }

    /// `self * t`.
    pub fn mul_term(&self, t: &Term) -> Result<Polynomial> {
        if t.mono.dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: t.mono.dim(),
            });
        }
        // lex order is multiplicative, so storage order survives
        let terms = self
            .terms
            .iter()
            .map(|s| Ok(Term::new(&s.coeff * &t.coeff, s.mono.mul(&t.mono)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial { n: self.n, terms })
    }

    /// `self - t * other`.
    pub fn sub_mul_term(&self, t: &Term, other: &Polynomial) -> Result<Polynomial> {
        self.check_dim(other)?;
        let scaled = other.mul_term(&Term::new(-&t.coeff, t.mono.clone()))?;
        Ok(self.merge(scaled.terms))
    }

    /// Merges a descending term stream into `self`.
    fn merge<I: IntoIterator<Item = Term>>(&self, other: I) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len());
        let mut lhs = self.terms.iter().peekable();
        let mut rhs = other.into_iter().peekable();
        loop {
            let ord = match (lhs.peek(), rhs.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(a), Some(b)) => a.mono.cmp(&b.mono),
            };
            match ord {
                Ordering::Greater => out.push(lhs.next().unwrap().clone()),
                Ordering::Less => out.push(rhs.next().unwrap()),
                Ordering::Equal => {
                    let a = lhs.next().unwrap();
                    let b = rhs.next().unwrap();
                    let c = &a.coeff + b.coeff;
                    if !c.is_zero() {
                        out.push(Term::new(c, b.mono));
                    }
                }
            }
        }
        Polynomial {
            n: self.n,
            terms: out,
        }
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        PolyDisplay { poly: self, names }
    }
}

struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    names: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (i, t) in self.poly.terms.iter().enumerate() {
            let negative = t.coeff.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = t.coeff.abs();
            if t.mono.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", t.mono.display(self.names))?;
            } else {
                write!(f, "{abs}*{}", t.mono.display(self.names))?;
            }
        }
        Ok(())
    }
}
