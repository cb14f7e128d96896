// Parse a polynomial system, do some arithmetic, print it back.
//
// $ cargo run --example parse_and_print

use gbdetect::poly::parse_polynomial;
use gbdetect::PolySystem;

fn main() -> gbdetect::Result<()> {
    let sys = PolySystem::parse(
        "# comments and blank lines are ignored
         vars x y z

         x^2*y - 3/2*z + 1
         y*z + x",
    )?;
    print!("{sys}");

    let names = sys.var_names();
    let f = &sys.polys()[0];
    let g = parse_polynomial("x - 1", names)?;
    let sum = f.add(&g)?;
    let diff = f.sub(&g)?;
    println!(
        "({}) + ({}) = {}",
        f.display(names),
        g.display(names),
        sum.display(names)
    );
    println!(
        "({}) - ({}) = {}",
        f.display(names),
        g.display(names),
        diff.display(names)
    );
    println!(
        "total degree {}, {} terms",
        diff.total_degree().unwrap(),
        diff.len()
    );

    match PolySystem::parse("vars x y\nx^-1 + y") {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
