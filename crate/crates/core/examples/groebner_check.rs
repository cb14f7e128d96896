// S-polynomials, traced reduction and the Buchberger test under a fixed order.
//
// $ cargo run --example groebner_check

use gbdetect::groebner::{
    is_groebner_basis, is_zero_dimensional_lt, normal_form, s_polynomial, GbOptions,
    ReductionStrategy,
};
use gbdetect::{PolySystem, WeightOrder};

fn main() -> gbdetect::Result<()> {
    let sys = PolySystem::parse("vars x y\nx^2\nx*y + 1")?;
    let names = sys.var_names();
    let polys = sys.polys();
    let ord = WeightOrder::from_integers([1, 1])?;

    let s = s_polynomial(&polys[0], &polys[1], &ord)?;
    println!("S(f1, f2) = {}", s.display(names));
    println!(
        "remainder {}",
        normal_form(&s, polys, &ord, ReductionStrategy::MaxLt)?
            .remainder
            .display(names)
    );

    let h = gbdetect::poly::parse_polynomial("x^3*y + x^2*y^2", names)?;
    println!("reducing {}", h.display(names));
    let trace = normal_form(&h, polys, &ord, ReductionStrategy::MaxLt)?;
    for step in &trace.steps {
        println!(
            "  subtract ({}) * f{}",
            step.multiplier.mono.display(names),
            step.reducer + 1
        );
    }
    println!("remainder {}", trace.remainder.display(names));

    let report = is_groebner_basis(polys, &ord, GbOptions::default())?;
    println!("Gröbner basis: {}", report.is_groebner);

    let sys = PolySystem::parse("vars x y\nx^2 + x*y\ny^2")?;
    let ord = WeightOrder::from_integers([2, 1])?;
    let report = is_groebner_basis(sys.polys(), &ord, GbOptions::default())?;
    let cert = is_zero_dimensional_lt(sys.polys(), &ord)?;
    println!(
        "{{x^2 + x*y, y^2}} under (2,1): Gröbner basis {}, zero-dimensional {} (pure powers from {:?})",
        report.is_groebner, cert.zero_dimensional, cert.witnesses
    );
    Ok(())
}
