use std::fmt;

use itertools::Itertools;
use rand::Rng;

use crate::error::{Error, Result};

/// A set-packing instance: are there `goal` pairwise disjoint sets among
/// `sets`, each a subset of `{1..universe}` with at most `size_cap` elements?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetPackingInstance {
    universe: usize,
    sets: Vec<Vec<usize>>,
    goal: usize,
    size_cap: usize,
}

impl SetPackingInstance {
    /// Elements are 1-based. Each set is sorted and deduplicated.
    pub fn new(
        universe: usize,
        sets: Vec<Vec<usize>>,
        goal: usize,
        size_cap: usize,
    ) -> Result<Self> {
        let invalid = |msg: String| Err(Error::InvalidInstance(msg));
        if universe == 0 {
            return invalid("universe must be positive".into());
        }
        if goal == 0 {
            return invalid("goal must be positive".into());
        }
        if size_cap == 0 {
            return invalid("size cap must be positive".into());
        }
        if sets.is_empty() {
            return invalid("family of sets is empty".into());
        }
        let mut normalized = Vec::with_capacity(sets.len());
        for (j, set) in sets.into_iter().enumerate() {
            let set: Vec<usize> = set.into_iter().sorted().dedup().collect();
            if set.is_empty() {
                return invalid(format!("set {} is empty", j + 1));
            }
            if let Some(e) = set.iter().find(|&&e| e == 0 || e > universe) {
                return invalid(format!(
                    "set {} has element {e} outside 1..={universe}",
                    j + 1
                ));
            }
            if set.len() > size_cap {
                return invalid(format!(
                    "set {} has {} elements, more than the cap {size_cap}",
                    j + 1,
                    set.len()
                ));
            }
            normalized.push(set);
        }
        Ok(SetPackingInstance {
            universe,
            sets: normalized,
            goal,
            size_cap,
        })
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn goal(&self) -> usize {
        self.goal
    }

    pub fn size_cap(&self) -> usize {
        self.size_cap
    }

    /// Reads the `universe` / one set per line / `goal` / `cap` format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut universe = None;
        let mut goal = None;
        let mut cap = None;
        let mut sets = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let syntax = |message: String| Error::Syntax {
                line: line_no,
                column: 1,
                message,
            };
            let number = |s: &str| -> Result<usize> {
                s.trim().parse().map_err(|_| {
                    syntax(format!(
                        "expected a non-negative integer, found `{}`",
                        s.trim()
                    ))
                })
            };
            let mut words = line.split_whitespace();
            match words.next() {
                Some(key @ ("universe" | "goal" | "cap")) => {
                    let value = words
                        .next()
                        .ok_or_else(|| syntax(format!("`{key}` needs a value")))?;
                    if words.next().is_some() {
                        return Err(syntax(format!("trailing input after `{key}`")));
                    }
                    let value = number(value)?;
                    let slot = match key {
                        "universe" => &mut universe,
                        "goal" => &mut goal,
                        _ => &mut cap,
                    };
                    if slot.replace(value).is_some() {
                        return Err(syntax(format!("duplicate `{key}`")));
                    }
                }
                _ => {
                    if universe.is_none() {
                        return Err(syntax("expected `universe` before the sets".into()));
                    }
                    sets.push(line.split(',').map(number).collect::<Result<Vec<_>>>()?);
                }
            }
        }
        let missing = |key: &str| Error::Syntax {
            line: text.lines().count().max(1),
            column: 1,
            message: format!("missing `{key}`"),
        };
        Self::new(
            universe.ok_or_else(|| missing("universe"))?,
            sets,
            goal.ok_or_else(|| missing("goal"))?,
            cap.ok_or_else(|| missing("cap"))?,
        )
    }

    /// A random instance with `k` sets of sizes `1..=size_cap`.
    pub fn random<R: Rng>(
        rng: &mut R,
        universe: usize,
        k: usize,
        goal: usize,
        size_cap: usize,
    ) -> Result<Self> {
        let cap = size_cap.min(universe).max(1);
        let sets = (0..k)
            .map(|_| {
                let size = rng.gen_range(1..=cap);
                rand::seq::index::sample(rng, universe, size)
                    .into_iter()
                    .map(|e| e + 1)
                    .collect()
            })
            .collect();
        Self::new(universe, sets, goal, size_cap)
    }
}

impl fmt::Display for SetPackingInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "universe {}", self.universe)?;
        for set in &self.sets {
            writeln!(f, "{}", set.iter().join(","))?;
        }
        writeln!(f, "goal {}", self.goal)?;
        writeln!(f, "cap {}", self.size_cap)
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Exhaustive set packing: the lex-first `goal`-subset of pairwise disjoint
/// sets (0-based indices), or `None`.
pub fn solve_set_packing_bruteforce(
    inst: &SetPackingInstance,
    cap: u64,
) -> Result<Option<Vec<usize>>> {
    let k = inst.sets.len();
    let c = inst.goal;
    let needed = binomial(k as u128, c as u128);
    if needed > u128::from(cap) {
        return Err(Error::CapExceeded { needed, cap });
    }
    let disjoint = |a: &[usize], b: &[usize]| a.iter().all(|e| !b.contains(e));
    Ok((0..k).combinations(c).find(|chosen| {
        chosen
            .iter()
            .tuple_combinations()
            .all(|(&i, &j)| disjoint(&inst.sets[i], &inst.sets[j]))
    }))
}
