// Weight orders with a lex tie-break, and the leading terms they pick.
//
// $ cargo run --example term_orders

use gbdetect::{PolySystem, Rational, WeightOrder};

fn main() -> gbdetect::Result<()> {
    let sys = PolySystem::parse("vars x y\nx^2 + x*y + y^3")?;
    let names = sys.var_names();
    let f = &sys.polys()[0];

    for w in [[1, 1], [3, 1], [2, 1], [1, 2]] {
        let ord = WeightOrder::from_integers(w)?;
        println!(
            "w = {w:?}: leading term {}",
            ord.leading_term(f)?.mono.display(names)
        );
    }

    // rational weights work too; integer_weights gives the primitive integer ray
    let ord = WeightOrder::new(vec![
        Rational::new(1.into(), 2.into()),
        Rational::new(1.into(), 3.into()),
    ])?;
    println!("1/2,1/3 scales to {:?}", ord.integer_weights());
    println!("leading term {}", ord.leading_term(f)?.mono.display(names));
    Ok(())
}
