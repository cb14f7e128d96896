//! Decision procedures for Gröbner basis detection.
//!
//! * [`detect_gbd_zero_dim`]: is there a weight order making `F` a Gröbner
//!   basis of a zero-dimensional ideal? Enumerates `n`-subsets of the
//!   polynomials carrying pure powers, assigns one variable to each member,
//!   realizes the forced pure-power leading terms by LP and checks the whole
//!   system under the resulting order.
//! * [`detect_sgbd`]: is there a weight order with pairwise coprime leading
//!   monomials?
//! * [`detect_gbd_bruteforce`]: exhaustive search over every realizable
//!   leading-term selection; the reference oracle for the other two.

use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{
    is_groebner_basis, is_zero_dimensional_lt, leading_monomials, pairwise_coprime_lt, GbOptions,
};
use crate::order_solver::{permutation_prunable, realize_leading_terms, TargetSelection};
use crate::poly::{Monomial, PolySystem, Polynomial, WeightOrder};

pub const DEFAULT_CAP: u64 = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetectionResult {
    pub verdict: Verdict,
    pub witness: Option<WeightOrder>,
    pub leading_terms: Option<Vec<Monomial>>,
    pub zero_dimensional: Option<bool>,
    /// Candidates (subset/assignment pairs, or selections) examined.
    pub subsets_examined: u64,
    pub diagnostics: String,
}

impl DetectionResult {
    fn no(examined: u64, diagnostics: impl Into<String>) -> Self {
        DetectionResult {
            verdict: Verdict::No,
            witness: None,
            leading_terms: None,
            zero_dimensional: None,
            subsets_examined: examined,
            diagnostics: diagnostics.into(),
        }
    }

    pub fn is_yes(&self) -> bool {
        self.verdict == Verdict::Yes
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DetectConfig {
    /// Upper bound on enumerated candidates before the search refuses.
    pub cap: u64,
    pub gb: GbOptions,
    /// Skip assignments ruled out by the permutation-product test.
    pub prune_permutations: bool,
}

impl Default for DetectConfig {
    fn default() -> Self {
        DetectConfig {
            cap: DEFAULT_CAP,
            gb: GbOptions::default(),
            prune_permutations: true,
        }
    }
}

/// `f = pure + mixed`, where `pure` holds the pure-power terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PureSplit {
    pub pure: Polynomial,
    pub mixed: Polynomial,
}

pub fn split_pure(f: &Polynomial) -> Result<PureSplit> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (pure, mixed): (Vec<_>, Vec<_>) = f
        .terms()
        .iter()
        .map(|t| (t.coeff.clone(), t.mono.clone()))
        .partition(|(_, m)| m.is_pure_power().is_some());
    Ok(PureSplit {
        pure: Polynomial::from_terms(f.dim(), pure)?,
        mixed: Polynomial::from_terms(f.dim(), mixed)?,
    })
}

fn validate(sys: &PolySystem) -> Result<()> {
    if sys.is_empty() {
        return Err(Error::EmptySystem);
    }
    if sys.polys().iter().any(Polynomial::is_zero) {
        return Err(Error::ZeroPolynomial);
    }
    Ok(())
}

fn yes(
    sys: &PolySystem,
    order: WeightOrder,
    zero_dimensional: Option<bool>,
    examined: u64,
    diagnostics: String,
) -> Result<DetectionResult> {
    let lts = leading_monomials(sys.polys(), &order)?;
    Ok(DetectionResult {
        verdict: Verdict::Yes,
        witness: Some(order),
        leading_terms: Some(lts),
        zero_dimensional,
        subsets_examined: examined,
        diagnostics,
    })
}

/// For each polynomial, the index of its highest pure power of each variable.
fn highest_pure_powers(f: &Polynomial) -> Vec<Option<usize>> {
    let mut best: Vec<Option<usize>> = vec![None; f.dim()];
    for (k, t) in f.terms().iter().enumerate() {
        if let Some(v) = t.mono.is_pure_power() {
            let better = match best[v] {
                None => true,
                Some(b) => t.mono.exponents()[v] > f.terms()[b].mono.exponents()[v],
            };
            if better {
                best[v] = Some(k);
            }
        }
    }
    best
}

/// Whether distinct polynomials can supply a pure power of every variable
/// (bipartite matching, variables on one side).
fn pure_powers_cover(n: usize, pure: &[Vec<Option<usize>>]) -> bool {
    fn augment(
        v: usize,
        pure: &[Vec<Option<usize>>],
        seen: &mut [bool],
        owner: &mut [Option<usize>],
    ) -> bool {
        for (p, powers) in pure.iter().enumerate() {
            if powers[v].is_none() || seen[p] {
                continue;
            }
            seen[p] = true;
            if owner[p].is_none_or(|w| augment(w, pure, seen, owner)) {
                owner[p] = Some(v);
                return true;
            }
        }
        false
    }
    let mut owner = vec![None; pure.len()];
    (0..n).all(|v| augment(v, pure, &mut vec![false; pure.len()], &mut owner))
}

fn gb_zero_dim_holds(sys: &PolySystem, order: &WeightOrder, cfg: &DetectConfig) -> Result<bool> {
    Ok(is_zero_dimensional_lt(sys.polys(), order)?.zero_dimensional
        && is_groebner_basis(sys.polys(), order, cfg.gb)?.is_groebner)
}

/// Decides whether some weight order makes `sys` a Gröbner basis of a
/// zero-dimensional ideal.
///
/// Candidates are pairs (n-subset of the polynomials with pure powers,
/// bijection from variables to subset members). Each member's target is its
/// highest pure power of the assigned variable; the targets are realized on
/// the subset alone and the full system is then checked under that order.
pub fn detect_gbd_zero_dim(sys: &PolySystem, cfg: &DetectConfig) -> Result<DetectionResult> {
    validate(sys)?;
    let n = sys.n();
    let polys = sys.polys();

    // a nonzero constant generates the unit ideal: every order works
    if let Some(k) = polys.iter().position(Polynomial::is_constant) {
        let order = WeightOrder::uniform(n);
        if gb_zero_dim_holds(sys, &order, cfg)? {
            return yes(
                sys,
                order,
                Some(true),
                0,
                format!("polynomial {} is a nonzero constant (unit ideal)", k + 1),
            );
        }
    }

    let pure_members: Vec<usize> = (0..polys.len())
        .filter(|&k| polys[k].support().any(|m| m.is_pure_power().is_some()))
        .collect();
    let pure: Vec<Vec<Option<usize>>> = pure_members
        .iter()
        .map(|&k| highest_pure_powers(&polys[k]))
        .collect();
    if !pure_powers_cover(n, &pure) {
        return Ok(DetectionResult::no(
            0,
            format!(
                "{} of {} polynomials carry pure powers; they cannot supply distinct pure powers of all {n} variables",
                pure_members.len(),
                polys.len()
            ),
        ));
    }

    let mut examined = 0u64;
    let mut pruned = 0u64;
    let mut infeasible = 0u64;
    let mut rejected = 0u64;
    for subset in (0..pure_members.len()).combinations(n) {
        let square = subset.iter().all(|&s| pure[s].iter().all(Option::is_some));
        for sigma in (0..n).permutations(n) {
            // member subset[i] takes variable sigma[i]
            let Some(sel) = subset
                .iter()
                .zip(&sigma)
                .map(|(&s, &v)| pure[s][v])
                .collect::<Option<Vec<usize>>>()
            else {
                continue;
            };
            examined += 1;
            if examined > cfg.cap {
                return Err(Error::CapExceeded {
                    needed: u128::from(examined),
                    cap: cfg.cap,
                });
            }
            if cfg.prune_permutations && square {
                let a: Vec<Vec<u64>> = subset
                    .iter()
                    .map(|&s| {
                        let f = &polys[pure_members[s]];
                        (0..n)
                            .map(|v| u64::from(f.terms()[pure[s][v].unwrap()].mono.exponents()[v]))
                            .collect()
                    })
                    .collect();
                if permutation_prunable(&a, &sigma)? {
                    pruned += 1;
                    continue;
                }
            }
            let members: Vec<Polynomial> = subset
                .iter()
                .map(|&s| polys[pure_members[s]].clone())
                .collect();
            let Some(order) = realize_leading_terms(n, &members, &TargetSelection(sel))? else {
                infeasible += 1;
                continue;
            };
            if gb_zero_dim_holds(sys, &order, cfg)? {
                let assignment = subset
                    .iter()
                    .zip(&sigma)
                    .map(|(&s, &v)| format!("f{}->{}", pure_members[s] + 1, sys.var_names()[v]))
                    .join(", ");
                return yes(
                    sys,
                    order,
                    Some(true),
                    examined,
                    format!("pure powers from {assignment}"),
                );
            }
            rejected += 1;
        }
    }
    Ok(DetectionResult::no(
        examined,
        format!("{examined} candidates: {pruned} pruned, {infeasible} unrealizable, {rejected} not a Gröbner basis"),
    ))
}

/// Decides whether some weight order gives pairwise coprime leading monomials.
pub fn detect_sgbd(sys: &PolySystem, cfg: &DetectConfig) -> Result<DetectionResult> {
    validate(sys)?;
    let n = sys.n();
    let polys = sys.polys();
    let mut chosen: Vec<usize> = Vec::with_capacity(polys.len());
    let mut examined = 0u64;

    fn dfs(
        n: usize,
        polys: &[Polynomial],
        chosen: &mut Vec<usize>,
        examined: &mut u64,
        cap: u64,
    ) -> Result<Option<WeightOrder>> {
        let k = chosen.len();
        if k == polys.len() {
            *examined += 1;
            if *examined > cap {
                return Err(Error::CapExceeded {
                    needed: u128::from(*examined),
                    cap,
                });
            }
            return realize_leading_terms(n, polys, &TargetSelection(chosen.clone()));
        }
        for (idx, t) in polys[k].terms().iter().enumerate() {
            let coprime = chosen
                .iter()
                .zip(polys)
                .all(|(&c, p)| p.terms()[c].mono.is_coprime(&t.mono).unwrap());
            if !coprime {
                continue;
            }
            chosen.push(idx);
            let found = dfs(n, polys, chosen, examined, cap)?;
            chosen.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }

    match dfs(n, polys, &mut chosen, &mut examined, cfg.cap)? {
        Some(order) => {
            assert!(
                pairwise_coprime_lt(polys, &order)?,
                "witness re-verification failed"
            );
            yes(
                sys,
                order,
                None,
                examined,
                format!("{examined} coprime selections examined"),
            )
        }
        None => Ok(DetectionResult::no(
            examined,
            if examined == 0 {
                "no choice of terms has pairwise coprime monomials".to_string()
            } else {
                format!("{examined} coprime selections examined, none realizable")
            },
        )),
    }
}

/// Exhaustive detection over every realizable leading-term selection.
///
/// Refuses with [`Error::CapExceeded`] when the number of selections (the
/// product of the support sizes) exceeds `cfg.cap`.
pub fn detect_gbd_bruteforce(
    sys: &PolySystem,
    require_zero_dim: bool,
    cfg: &DetectConfig,
) -> Result<DetectionResult> {
    validate(sys)?;
    let n = sys.n();
    let polys = sys.polys();
    let total = polys
        .iter()
        .try_fold(1u128, |acc, p| acc.checked_mul(p.len() as u128))
        .unwrap_or(u128::MAX);
    if total > u128::from(cfg.cap) {
        return Err(Error::CapExceeded {
            needed: total,
            cap: cfg.cap,
        });
    }

    struct Search<'a> {
        n: usize,
        sys: &'a PolySystem,
        require_zero_dim: bool,
        cfg: &'a DetectConfig,
        chosen: Vec<usize>,
        realizable: u64,
    }

    impl Search<'_> {
        fn run(&mut self) -> Result<Option<WeightOrder>> {
            let polys = self.sys.polys();
            let k = self.chosen.len();
            for idx in 0..polys[k].len() {
                self.chosen.push(idx);
                let prefix = &polys[..=k];
                // an unrealizable prefix rules out every completion
                if let Some(order) =
                    realize_leading_terms(self.n, prefix, &TargetSelection(self.chosen.clone()))?
                {
                    if k + 1 < polys.len() {
                        if let Some(found) = self.run()? {
                            return Ok(Some(found));
                        }
                    } else {
                        self.realizable += 1;
                        let zero_dim_ok = !self.require_zero_dim
                            || is_zero_dimensional_lt(polys, &order)?.zero_dimensional;
                        if zero_dim_ok && is_groebner_basis(polys, &order, self.cfg.gb)?.is_groebner
                        {
                            return Ok(Some(order));
                        }
                    }
                }
                self.chosen.pop();
            }
            Ok(None)
        }
    }

    let mut search = Search {
        n,
        sys,
        require_zero_dim,
        cfg,
        chosen: Vec::with_capacity(polys.len()),
        realizable: 0,
    };
    let found = search.run()?;
    let examined = search.realizable;
    match found {
        Some(order) => {
            let zero_dim = is_zero_dimensional_lt(polys, &order)?.zero_dimensional;
            yes(
                sys,
                order,
                Some(zero_dim),
                examined,
                format!("{examined} realizable selections examined out of {total}"),
            )
        }
        None => Ok(DetectionResult::no(
            examined,
            format!("{examined} realizable selections of {total}, none qualifies"),
        )),
    }
}
