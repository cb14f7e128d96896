use crate::error::{Error, Result};
use crate::poly::{Monomial, PolySystem, Polynomial};

/// All monomials of total degree `degree` in `n` variables, lex-descending.
pub fn monomials_of_degree(n: usize, degree: u32) -> Vec<Monomial> {
    fn fill(prefix: &mut Vec<u32>, n: usize, left: u32, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(left);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e);
            fill(prefix, n, left - e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        fill(&mut Vec::with_capacity(n), n, degree, &mut out);
    }
    out
}

/// `F' = F` followed by every monomial of degree `2m + 1`. Each member of `F`
/// must be homogeneous of degree `m`.
pub fn elevate_to_zero_dim(sys: &PolySystem, degree: u32) -> Result<PolySystem> {
    for (index, f) in sys.polys().iter().enumerate() {
        if f.homogeneous_degree() != Some(u64::from(degree)) {
            return Err(Error::NotHomogeneous { index, degree });
        }
    }
    let top = degree
        .checked_mul(2)
        .and_then(|d| d.checked_add(1))
        .ok_or(Error::ExponentOverflow)?;
    let mut polys = sys.polys().to_vec();
    polys.extend(
        monomials_of_degree(sys.n(), top)
            .into_iter()
            .map(Polynomial::monomial),
    );
    sys.with_polys(polys)
}
