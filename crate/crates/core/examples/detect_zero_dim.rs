// Search for a term order that makes a system a Gröbner basis of a
// zero-dimensional ideal, and cross-check against exhaustive search.
//
// $ cargo run --example detect_zero_dim

use gbdetect::detect::{detect_gbd_bruteforce, detect_gbd_zero_dim, DetectConfig};
use gbdetect::PolySystem;

fn main() -> gbdetect::Result<()> {
    let cfg = DetectConfig::default();
    for text in [
        "vars x y\nx^2 + x*y\ny^2",
        "vars x y z\nx^2 + y*z\ny^3 + x\nz^2 + x*y",
        "vars x y\nx*y",
        "vars x y\nx^2 + y^2\nx*y + y",
    ] {
        let sys = PolySystem::parse(text)?;
        let names = sys.var_names();
        let res = detect_gbd_zero_dim(&sys, &cfg)?;
        let oracle = detect_gbd_bruteforce(&sys, true, &cfg)?;
        println!("{}", text.replace('\n', "; "));
        println!(
            "  verdict {} (exhaustive search says {})",
            res.verdict, oracle.verdict
        );
        if let (Some(w), Some(lts)) = (&res.witness, &res.leading_terms) {
            let lts: Vec<String> = lts.iter().map(|m| m.display(names).to_string()).collect();
            println!(
                "  weights {:?}, leading terms {}",
                w.integer_weights(),
                lts.join(", ")
            );
        }
        println!("  {} candidates: {}", res.subsets_examined, res.diagnostics);
    }
    Ok(())
}
