// Set packing as structural Gröbner basis detection: encode an instance,
// detect a term order with pairwise coprime leading terms, decode the packing.
//
// $ cargo run --example set_packing

use gbdetect::detect::{detect_sgbd, DetectConfig};
use gbdetect::reductions::{
    decode_selection, encode_set_packing, solve_set_packing_bruteforce, SetPackingInstance,
};

fn main() -> gbdetect::Result<()> {
    let inst = SetPackingInstance::parse(
        "universe 4
         1,2
         2,3
         3,4
         goal 2
         cap 2",
    )?;
    let direct = solve_set_packing_bruteforce(&inst, 1_000)?;
    println!("direct search: {direct:?}");

    let (sys, map) = encode_set_packing(&inst, 3)?;
    print!("{sys}");
    let res = detect_sgbd(&sys, &DetectConfig::default())?;
    println!("sgbd verdict {}", res.verdict);
    if let Some(lts) = &res.leading_terms {
        let picked = decode_selection(&map, lts)?;
        let sets: Vec<&Vec<usize>> = picked.iter().map(|&j| &inst.sets()[j]).collect();
        println!("decoded packing {sets:?}");
    }
    Ok(())
}
