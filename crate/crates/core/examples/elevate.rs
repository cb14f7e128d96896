// Adjoin all monomials of degree 2m+1 to a homogeneous system and compare
// Gröbner-ness of both systems under every small weight vector.
//
// $ cargo run --example elevate

use gbdetect::groebner::{is_groebner_basis, is_zero_dimensional_lt, GbOptions};
use gbdetect::reductions::elevate_to_zero_dim;
use gbdetect::{PolySystem, WeightOrder};

fn main() -> gbdetect::Result<()> {
    let sys = PolySystem::parse("vars x y\nx^2 + x*y\ny^2")?;
    let up = elevate_to_zero_dim(&sys, 2)?;
    println!("{} polynomials after elevation", up.len());

    for w1 in 1..=3 {
        for w2 in 1..=3 {
            let ord = WeightOrder::from_integers([w1, w2])?;
            let before = is_groebner_basis(sys.polys(), &ord, GbOptions::default())?.is_groebner;
            let after = is_groebner_basis(up.polys(), &ord, GbOptions::default())?.is_groebner
                && is_zero_dimensional_lt(up.polys(), &ord)?.zero_dimensional;
            println!("w = ({w1}, {w2}): F {before}, elevated {after}");
        }
    }
    Ok(())
}
