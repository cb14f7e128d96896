//! S-polynomials, reduction to normal form and the Buchberger criterion.

use std::cmp::Ordering;

use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, Rational, Term, WeightOrder};

/// Which reducible monomial, and which reducer, a reduction step picks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReductionStrategy {
    /// Reduce the largest reducible monomial, using the lowest-index reducer
    /// whose leading monomial divides it.
    #[default]
    MaxLt,
    /// Take the lowest-index reducer that divides any monomial, and reduce the
    /// largest monomial it divides.
    FirstMatch,
}

/// One reduction step `h <- h - multiplier * reducers[reducer]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub reducer: usize,
    pub multiplier: Term,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    pub remainder: Polynomial,
}

impl ReductionTrace {
    /// Every intermediate polynomial, starting with `start` and ending with
    /// the replayed remainder.
    pub fn intermediates(
        &self,
        start: &Polynomial,
        reducers: &[Polynomial],
    ) -> Result<Vec<Polynomial>> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut h = start.clone();
        for step in &self.steps {
            let g = reducers.get(step.reducer).ok_or_else(|| {
                Error::InvalidArgument(format!("reducer index {} out of range", step.reducer))
            })?;
            let next = h.sub_mul_term(&step.multiplier, g)?;
            out.push(std::mem::replace(&mut h, next));
        }
        out.push(h);
        Ok(out)
    }

    pub fn replay(&self, start: &Polynomial, reducers: &[Polynomial]) -> Result<Polynomial> {
        Ok(self
            .intermediates(start, reducers)?
            .pop()
            .expect("at least the start polynomial"))
    }
}

fn nonzero(f: &Polynomial) -> Result<()> {
    if f.is_zero() {
        Err(Error::ZeroPolynomial)
    } else {
        Ok(())
    }
}

/// `S(f, g) = (L / lt(f)) f - (L / lt(g)) g` with `L = lcm(lm(f), lm(g))`,
/// where `lt` includes the leading coefficient.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: &WeightOrder) -> Result<Polynomial> {
    nonzero(f)?;
    nonzero(g)?;
    let lf = ord.leading_term(f)?;
    let lg = ord.leading_term(g)?;
    let l = lf.mono.lcm(&lg.mono)?;
    let tf = Term::new(
        Rational::one() / &lf.coeff,
        l.checked_div(&lf.mono)?.expect("lcm is a multiple"),
    );
    let tg = Term::new(
        Rational::one() / &lg.coeff,
        l.checked_div(&lg.mono)?.expect("lcm is a multiple"),
    );
    f.mul_term(&tf)?.sub_mul_term(&tg, g)
}

/// One reduction step of `f` by `g` at the leading term of `f`:
/// `f - t g` with `t = lt(f) / lt(g)`, or `None` if `lt(g)` does not divide
/// `lt(f)`.
pub fn reduce_step(
    f: &Polynomial,
    g: &Polynomial,
    ord: &WeightOrder,
) -> Result<Option<Polynomial>> {
    nonzero(f)?;
    nonzero(g)?;
    let lf = ord.leading_term(f)?;
    let lg = ord.leading_term(g)?;
    match lf.checked_div(lg)? {
        Some(t) => Ok(Some(f.sub_mul_term(&t, g)?)),
        None => Ok(None),
    }
}

/// Fully reduces `f` by `reducers`: on return no monomial of the remainder is
/// divisible by any reducer's leading monomial.
pub fn normal_form(
    f: &Polynomial,
    reducers: &[Polynomial],
    ord: &WeightOrder,
    strategy: ReductionStrategy,
) -> Result<ReductionTrace> {
    let lts = leading_terms(reducers, ord)?;
    if f.dim() != ord.dim() {
        return Err(Error::DimensionMismatch {
            expected: ord.dim(),
            found: f.dim(),
        });
    }
    let mut h = f.clone();
    let mut steps = Vec::new();
    while let Some((term_idx, reducer)) = pick(&h, &lts, ord, strategy) {
        let lt = lts[reducer];
        let t = h.terms()[term_idx]
            .checked_div(lt)?
            .expect("picked term is divisible");
        h = h.sub_mul_term(&t, &reducers[reducer])?;
        steps.push(ReductionStep {
            reducer,
            multiplier: t,
        });
    }
    Ok(ReductionTrace {
        steps,
        remainder: h,
    })
}

fn pick(
    h: &Polynomial,
    lts: &[&Term],
    ord: &WeightOrder,
    strategy: ReductionStrategy,
) -> Option<(usize, usize)> {
    let terms = h.terms();
    let larger = |a: usize, b: Option<usize>| match b {
        None => true,
        Some(b) => ord.cmp_unchecked(&terms[a].mono, &terms[b].mono) == Ordering::Greater,
    };
    match strategy {
        ReductionStrategy::MaxLt => {
            let mut best: Option<(usize, usize)> = None;
            for (i, t) in terms.iter().enumerate() {
                if !larger(i, best.map(|b| b.0)) {
                    continue;
                }
                if let Some(r) = lts.iter().position(|lt| lt.mono.divides_unchecked(&t.mono)) {
                    best = Some((i, r));
                }
            }
            best
        }
        ReductionStrategy::FirstMatch => lts.iter().enumerate().find_map(|(r, lt)| {
            let mut best = None;
            for (i, t) in terms.iter().enumerate() {
                if lt.mono.divides_unchecked(&t.mono) && larger(i, best) {
                    best = Some(i);
                }
            }
            best.map(|i| (i, r))
        }),
    }
}

fn leading_terms<'a>(polys: &'a [Polynomial], ord: &WeightOrder) -> Result<Vec<&'a Term>> {
    polys
        .iter()
        .map(|p| {
            nonzero(p)?;
            ord.leading_term(p)
        })
        .collect()
}

/// Leading monomials of every polynomial.
pub fn leading_monomials(polys: &[Polynomial], ord: &WeightOrder) -> Result<Vec<Monomial>> {
    Ok(leading_terms(polys, ord)?
        .into_iter()
        .map(|t| t.mono.clone())
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GbOptions {
    /// Skip S-pairs whose leading monomials are coprime (Buchberger's first
    /// criterion).
    pub skip_coprime: bool,
    pub strategy: ReductionStrategy,
}

impl Default for GbOptions {
    fn default() -> Self {
        GbOptions {
            skip_coprime: true,
            strategy: ReductionStrategy::MaxLt,
        }
    }
}

/// A pair whose S-polynomial does not reduce to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GbFailure {
    pub i: usize,
    pub j: usize,
    pub remainder: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GbReport {
    pub is_groebner: bool,
    /// The lexicographically smallest failing pair.
    pub failure: Option<GbFailure>,
    pub pairs_checked: usize,
    pub pairs_skipped: usize,
}

/// Buchberger's criterion: every S-pair reduces to zero over `polys`.
pub fn is_groebner_basis(
    polys: &[Polynomial],
    ord: &WeightOrder,
    opts: GbOptions,
) -> Result<GbReport> {
    if polys.is_empty() {
        return Err(Error::EmptySystem);
    }
    let lts = leading_terms(polys, ord)?;
    let mut report = GbReport {
        is_groebner: true,
        failure: None,
        pairs_checked: 0,
        pairs_skipped: 0,
    };
    for i in 0..polys.len() {
        for j in i + 1..polys.len() {
            if opts.skip_coprime && lts[i].mono.is_coprime(&lts[j].mono)? {
                report.pairs_skipped += 1;
                continue;
            }
            report.pairs_checked += 1;
            let s = s_polynomial(&polys[i], &polys[j], ord)?;
            let nf = normal_form(&s, polys, ord, opts.strategy)?;
            if !nf.remainder.is_zero() {
                report.is_groebner = false;
                report.failure = Some(GbFailure {
                    i,
                    j,
                    remainder: nf.remainder,
                });
                return Ok(report);
            }
        }
    }
    Ok(report)
}

/// `true` iff the leading monomials are pairwise coprime.
pub fn pairwise_coprime_lt(polys: &[Polynomial], ord: &WeightOrder) -> Result<bool> {
    let lms = leading_monomials(polys, ord)?;
    for i in 0..lms.len() {
        for j in i + 1..lms.len() {
            if !lms[i].is_coprime(&lms[j])? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Outcome of the pure-power test on leading monomials.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZeroDimCertificate {
    pub zero_dimensional: bool,
    /// Per variable, the first polynomial whose leading monomial is a pure
    /// power of it.
    pub witnesses: Vec<Option<usize>>,
    /// A polynomial with constant leading monomial, making the ideal the unit
    /// ideal.
    pub unit: Option<usize>,
}

/// Every variable has a pure power among the leading monomials, or some
/// leading monomial is the constant.
pub fn is_zero_dimensional_lt(
    polys: &[Polynomial],
    ord: &WeightOrder,
) -> Result<ZeroDimCertificate> {
    if polys.is_empty() {
        return Err(Error::EmptySystem);
    }
    let lms = leading_monomials(polys, ord)?;
    let mut witnesses = vec![None; ord.dim()];
    let mut unit = None;
    for (k, lm) in lms.iter().enumerate() {
        if lm.is_one() {
            unit.get_or_insert(k);
        } else if let Some(v) = lm.is_pure_power() {
            witnesses[v].get_or_insert(k);
        }
    }
    Ok(ZeroDimCertificate {
        zero_dimensional: unit.is_some() || witnesses.iter().all(Option::is_some),
        witnesses,
        unit,
    })
}
