//! Dense-tableau primal simplex over exact rationals.
//!
//! Solves `max c.x  s.t.  A x <= b, x >= 0` for `b >= 0`, so the slack basis
//! is feasible from the start and no phase one is needed. Bland's rule keeps
//! degenerate pivots from cycling.

use num_traits::{Signed, Zero};

use crate::poly::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { x: Vec<Rational>, value: Rational },
    Unbounded,
}

pub fn maximize(c: &[Rational], a: &[Vec<Rational>], b: &[Rational]) -> LpOutcome {
    let nvars = c.len();
    let m = a.len();
    assert_eq!(b.len(), m);
    assert!(
        b.iter().all(|v| !v.is_negative()),
        "rhs must be non-negative"
    );
    let width = nvars + m + 1;
    let rhs = width - 1;

    let mut rows: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .enumerate()
        .map(|(i, (row, bi))| {
            assert_eq!(row.len(), nvars);
            let mut r = vec![Rational::zero(); width];
            r[..nvars].clone_from_slice(row);
            r[nvars + i] = Rational::from_integer(1.into());
            r[rhs] = bi.clone();
            r
        })
        .collect();
    // reduced costs; the objective value accumulates in the rhs slot
    let mut obj = vec![Rational::zero(); width];
    for (o, ci) in obj.iter_mut().zip(c) {
        *o = -ci;
    }
    let mut basis: Vec<usize> = (nvars..nvars + m).collect();

    while let Some(enter) = (0..rhs).find(|&j| obj[j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for (i, row) in rows.iter().enumerate() {
            if !row[enter].is_positive() {
                continue;
            }
            let ratio = &row[rhs] / &row[enter];
            let better = match &leave {
                None => true,
                Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        let Some((pr, _)) = leave else {
            return LpOutcome::Unbounded;
        };

        let pivot = rows[pr][enter].clone();
        for v in rows[pr].iter_mut() {
            *v /= &pivot;
        }
        let prow = rows[pr].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == pr || row[enter].is_zero() {
                continue;
            }
            let f = row[enter].clone();
            for (v, p) in row.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
        }
        if !obj[enter].is_zero() {
            let f = obj[enter].clone();
            for (v, p) in obj.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
        }
        basis[pr] = enter;
    }

    let mut x = vec![Rational::zero(); nvars];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < nvars {
            x[bv] = rows[i][rhs].clone();
        }
    }
    LpOutcome::Optimal {
        x,
        value: obj[rhs].clone(),
    }
}
