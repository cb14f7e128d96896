use num_bigint::BigInt;
use num_traits::One;

use super::SetPackingInstance;
use crate::error::{Error, Result};
use crate::poly::{Monomial, PolySystem, Polynomial, Rational, WeightOrder};

/// Variable layout and exponents of the set-packing encoding.
///
/// Variables are `X1..X_nu` followed by `Y{l}_{j}` for `l` in `1..=c` and `j`
/// in `1..=k`. Set `j` becomes `M_j = prod_{i in S_j} X_i` and polynomial `l`
/// is `f_l = sum_j Y{l}_{j}^{alpha_j} M_j` with `alpha_j = m - deg M_j`, so
/// every term has total degree exactly `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodingMap {
    pub universe: usize,
    pub num_sets: usize,
    pub goal: usize,
    pub degree: u32,
    /// `alpha_j`, one per set.
    pub alpha: Vec<u32>,
    /// `M_j` in the full variable layout.
    pub set_monomials: Vec<Monomial>,
}

impl EncodingMap {
    pub fn num_vars(&self) -> usize {
        self.universe + self.goal * self.num_sets
    }

    /// Index of `X_i` (0-based element `i`).
    pub fn x_var(&self, i: usize) -> usize {
        i
    }

    /// Index of `Y_{l,j}` (0-based polynomial `l`, set `j`).
    pub fn y_var(&self, l: usize, j: usize) -> usize {
        self.universe + l * self.num_sets + j
    }

    pub fn var_names(&self) -> Vec<String> {
        (1..=self.universe)
            .map(|i| format!("X{i}"))
            .chain(
                (1..=self.goal).flat_map(|l| (1..=self.num_sets).map(move |j| format!("Y{l}_{j}"))),
            )
            .collect()
    }

    /// The monomial `Y_{l,j}^{alpha_j} M_j` of polynomial `l`.
    pub fn term_monomial(&self, l: usize, j: usize) -> Monomial {
        let mut e = self.set_monomials[j].exponents().to_vec();
        e[self.y_var(l, j)] = self.alpha[j];
        Monomial::new(e)
    }
}

/// Encodes a set-packing instance as `goal` homogeneous polynomials of
/// degree `degree`. Every set must have fewer than `degree` elements.
pub fn encode_set_packing(
    inst: &SetPackingInstance,
    degree: u32,
) -> Result<(PolySystem, EncodingMap)> {
    if inst.size_cap() >= degree as usize {
        return Err(Error::InvalidInstance(format!(
            "size cap {} must be below the degree {degree}",
            inst.size_cap()
        )));
    }
    let universe = inst.universe();
    let k = inst.sets().len();
    let c = inst.goal();
    let n = universe + c * k;
    let set_monomials: Vec<Monomial> = inst
        .sets()
        .iter()
        .map(|set| {
            let mut e = vec![0u32; n];
            for &i in set {
                e[i - 1] = 1;
            }
            Monomial::new(e)
        })
        .collect();
    let alpha: Vec<u32> = set_monomials
        .iter()
        .map(|m| degree - m.degree() as u32)
        .collect();
    let map = EncodingMap {
        universe,
        num_sets: k,
        goal: c,
        degree,
        alpha,
        set_monomials,
    };
    let polys = (0..c)
        .map(|l| {
            Polynomial::from_terms(
                n,
                (0..k).map(|j| (Rational::one(), map.term_monomial(l, j))),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    for (l, f) in polys.iter().enumerate() {
        assert_eq!(f.len(), k);
        assert_eq!(
            f.homogeneous_degree(),
            Some(u64::from(degree)),
            "encoded polynomial {l} is not homogeneous"
        );
    }
    Ok((PolySystem::new(map.var_names(), polys)?, map))
}

/// The order built from a proposed packing, with the leading monomials it
/// induces and whether they come out pairwise coprime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackingWitness {
    pub order: WeightOrder,
    pub leading_terms: Vec<Monomial>,
    pub pairwise_coprime: bool,
}

/// Weight `m + 1` on `Y_{l, chosen[l]}` for each polynomial `l`, weight 1
/// elsewhere. Indices are 0-based.
pub fn packing_witness_order(map: &EncodingMap, chosen: &[usize]) -> Result<PackingWitness> {
    if chosen.len() != map.goal {
        return Err(Error::InvalidArgument(format!(
            "expected {} chosen sets, got {}",
            map.goal,
            chosen.len()
        )));
    }
    if let Some(&j) = chosen.iter().find(|&&j| j >= map.num_sets) {
        return Err(Error::InvalidArgument(format!(
            "set index {j} out of range for {} sets",
            map.num_sets
        )));
    }
    let mut weights = vec![Rational::one(); map.num_vars()];
    for (l, &j) in chosen.iter().enumerate() {
        weights[map.y_var(l, j)] = Rational::from_integer(BigInt::from(map.degree + 1));
    }
    let order = WeightOrder::new(weights)?;
    let leading_terms: Vec<Monomial> = (0..map.goal)
        .map(|l| {
            (0..map.num_sets)
                .map(|j| map.term_monomial(l, j))
                .max_by(|a, b| order.cmp_unchecked(a, b))
                .expect("at least one set")
        })
        .collect();
    for (l, &j) in chosen.iter().enumerate() {
        assert_eq!(leading_terms[l], map.term_monomial(l, j));
    }
    let pairwise_coprime = leading_terms.iter().enumerate().all(|(a, ma)| {
        leading_terms[a + 1..]
            .iter()
            .all(|mb| ma.is_coprime(mb).unwrap())
    });
    Ok(PackingWitness {
        order,
        leading_terms,
        pairwise_coprime,
    })
}

/// Reads back which set each polynomial's leading monomial encodes (0-based).
pub fn decode_selection(map: &EncodingMap, lts: &[Monomial]) -> Result<Vec<usize>> {
    if lts.len() != map.goal {
        return Err(Error::EncodingShape(format!(
            "expected {} leading monomials, got {}",
            map.goal,
            lts.len()
        )));
    }
    lts.iter()
        .enumerate()
        .map(|(l, lt)| {
            if lt.dim() != map.num_vars() {
                return Err(Error::DimensionMismatch {
                    expected: map.num_vars(),
                    found: lt.dim(),
                });
            }
            (0..map.num_sets)
                .find(|&j| map.term_monomial(l, j) == *lt)
                .ok_or_else(|| {
                    Error::EncodingShape(format!(
                        "{} is not a term of polynomial {}",
                        lt.display(&map.var_names()),
                        l + 1
                    ))
                })
        })
        .collect()
}
