//! Realizing a choice of leading terms by a positive weight vector.
//!
//! A selection of one target monomial `a_i` per polynomial is realizable iff
//! the system `G w > 0, w > 0` has a solution, where the rows of `G` are the
//! differences `a_i - b` over every other support monomial `b` of polynomial
//! `i`. The strict system is decided exactly by maximizing a common slack
//! `t` in `G w >= t, w >= t, t <= 1`.

mod simplex;

use itertools::Itertools;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, Rational, WeightOrder};

pub use simplex::{maximize, LpOutcome};

/// One target per polynomial, as an index into that polynomial's terms (in
/// storage order).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TargetSelection(pub Vec<usize>);

impl TargetSelection {
    pub fn targets<'a>(&'a self, polys: &'a [Polynomial]) -> impl Iterator<Item = &'a Monomial> {
        self.0.iter().zip(polys).map(|(&i, p)| &p.terms()[i].mono)
    }

    fn validate(&self, polys: &[Polynomial]) -> Result<()> {
        if self.0.len() != polys.len() {
            return Err(Error::InvalidArgument(format!(
                "selection has {} targets for {} polynomials",
                self.0.len(),
                polys.len()
            )));
        }
        for (poly, (&index, p)) in self.0.iter().zip(polys).enumerate() {
            if index >= p.len() {
                return Err(Error::TargetOutOfRange {
                    poly,
                    index,
                    len: p.len(),
                });
            }
        }
        Ok(())
    }
}

/// Difference vectors `target - other` for every non-target support monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaSystem {
    pub n: usize,
    pub rows: Vec<Vec<i64>>,
}

impl GammaSystem {
    /// `true` iff `G w > 0` and `w > 0` hold for the integer vector `w`.
    pub fn is_satisfied_by(&self, w: &[BigInt]) -> bool {
        w.len() == self.n
            && w.iter().all(|x| x.is_positive())
            && self.rows.iter().all(|row| {
                row.iter()
                    .zip(w)
                    .map(|(&g, x)| BigInt::from(g) * x)
                    .sum::<BigInt>()
                    .is_positive()
            })
    }
}

pub fn build_gamma(n: usize, polys: &[Polynomial], sel: &TargetSelection) -> Result<GammaSystem> {
    sel.validate(polys)?;
    let mut rows = Vec::new();
    for (&target, p) in sel.0.iter().zip(polys) {
        if p.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: p.dim(),
            });
        }
        let alpha = p.terms()[target].mono.exponents();
        for (k, t) in p.terms().iter().enumerate() {
            if k == target {
                continue;
            }
            let row: Vec<i64> = alpha
                .iter()
                .zip(t.mono.exponents())
                .map(|(&a, &b)| i64::from(a) - i64::from(b))
                .collect();
            debug_assert!(
                row.iter().any(|&d| d != 0),
                "support monomials are distinct"
            );
            rows.push(row);
        }
    }
    Ok(GammaSystem { n, rows })
}

/// A positive integer `w` with `G w >= 1` componentwise, or `None` when the
/// strict system is infeasible.
pub fn solve_strict_system(gamma: &GammaSystem) -> Result<Option<Vec<BigInt>>> {
    let n = gamma.n;
    if n == 0 {
        return Err(Error::InvalidArgument("dimension must be positive".into()));
    }
    if let Some(row) = gamma.rows.iter().find(|r| r.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: row.len(),
        });
    }
    if gamma.rows.is_empty() {
        return Ok(Some(vec![BigInt::one(); n]));
    }

    // variables (w_1..w_n, t); every constraint is written as `... <= b`, b >= 0
    let q = |v: i64| Rational::from_integer(BigInt::from(v));
    let mut a = Vec::with_capacity(gamma.rows.len() + n + 1);
    let mut b = Vec::with_capacity(a.capacity());
    for row in &gamma.rows {
        let mut r: Vec<Rational> = row.iter().map(|&g| q(-g)).collect();
        r.push(q(1));
        a.push(r);
        b.push(q(0));
    }
    for k in 0..n {
        let mut r = vec![q(0); n + 1];
        r[k] = q(-1);
        r[n] = q(1);
        a.push(r);
        b.push(q(0));
    }
    let mut r = vec![q(0); n + 1];
    r[n] = q(1);
    a.push(r);
    b.push(q(1));
    let mut c = vec![q(0); n + 1];
    c[n] = q(1);

    let x = match maximize(&c, &a, &b) {
        LpOutcome::Optimal { x, value } if value.is_positive() => x,
        LpOutcome::Optimal { .. } => return Ok(None),
        LpOutcome::Unbounded => unreachable!("t <= 1 bounds the objective"),
    };
    let w = &x[..n];
    let denom = w.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let ints: Vec<BigInt> = w.iter().map(|v| v.numer() * (&denom / v.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    let ints: Vec<BigInt> = ints.into_iter().map(|v| v / &g).collect();
    assert!(
        gamma.is_satisfied_by(&ints),
        "LP witness failed exact re-verification"
    );
    Ok(Some(ints))
}

/// A weight order under which `polys[i]` has leading monomial
/// `polys[i].terms()[sel[i]]` for every `i`, if one exists.
pub fn realize_leading_terms(
    n: usize,
    polys: &[Polynomial],
    sel: &TargetSelection,
) -> Result<Option<WeightOrder>> {
    let gamma = build_gamma(n, polys, sel)?;
    let Some(w) = solve_strict_system(&gamma)? else {
        return Ok(None);
    };
    let order = WeightOrder::new(w.into_iter().map(Rational::from_integer).collect())?;
    for (p, &target) in polys.iter().zip(&sel.0) {
        assert_eq!(
            order.leading_index(p)?,
            target,
            "realized order disagrees with the LP certificate"
        );
    }
    Ok(Some(order))
}

/// Whether the assignment `sigma` (row `i` takes column `sigma[i]`) of a
/// square matrix of pure-power exponents is ruled out by another permutation
/// with a strictly larger product `prod_i a[i][rho(i)]`.
///
/// `true` proves `sigma` unrealizable; `false` proves nothing.
pub fn permutation_prunable(a: &[Vec<u64>], sigma: &[usize]) -> Result<bool> {
    let n = a.len();
    if n == 0 || a.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidMatrix(
            "matrix must be square and nonempty".into(),
        ));
    }
    if a.iter().flatten().any(|&v| v == 0) {
        return Err(Error::InvalidMatrix("entries must be positive".into()));
    }
    if sigma.len() != n || !sigma.iter().copied().sorted().eq(0..n) {
        return Err(Error::InvalidMatrix(format!(
            "{sigma:?} is not a permutation of 0..{n}"
        )));
    }
    let product = |perm: &[usize]| -> BigUint {
        perm.iter()
            .enumerate()
            .map(|(i, &j)| BigUint::from(a[i][j]))
            .product()
    };
    let target = product(sigma);
    Ok((0..n)
        .permutations(n)
        .any(|rho| rho != sigma && product(&rho) > target))
}
