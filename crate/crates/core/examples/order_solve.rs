// Find a weight vector that makes chosen terms leading, by exact LP.
//
// $ cargo run --example order_solve

use gbdetect::order_solver::{build_gamma, realize_leading_terms, TargetSelection};
use gbdetect::PolySystem;

fn main() -> gbdetect::Result<()> {
    let sys = PolySystem::parse("vars x y z\nz + x*y^3\nx^2 + y*z")?;
    let names = sys.var_names();
    for sel in [vec![1, 0], vec![1, 1], vec![0, 1]] {
        let sel = TargetSelection(sel);
        let wanted: Vec<String> = sel
            .targets(sys.polys())
            .map(|m| m.display(names).to_string())
            .collect();
        let gamma = build_gamma(sys.n(), sys.polys(), &sel)?;
        match realize_leading_terms(sys.n(), sys.polys(), &sel)? {
            Some(order) => println!(
                "{}: realized by {:?} ({} strict inequalities)",
                wanted.join(", "),
                order.integer_weights(),
                gamma.rows.len()
            ),
            None => println!("{}: no positive weight vector works", wanted.join(", ")),
        }
    }
    Ok(())
}
