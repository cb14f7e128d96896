use std::fmt::Write as _;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::{read_input, Cli, Command, Done, GenCommand, Mode, EXIT_NO, EXIT_YES};
use crate::detect::{
    detect_gbd_bruteforce, detect_gbd_zero_dim, detect_sgbd, DetectConfig, DetectionResult,
};
use crate::error::{Error, Result};
use crate::groebner::{
    is_groebner_basis, is_zero_dimensional_lt, leading_monomials, pairwise_coprime_lt,
};
use crate::order_solver::{realize_leading_terms, TargetSelection};
use crate::poly::{parse_polynomial, Monomial, PolySystem, Rational, WeightOrder};
use crate::reductions::{
    elevate_to_zero_dim, encode_set_packing, solve_set_packing_bruteforce, SetPackingInstance,
};

pub(super) fn execute(cli: &Cli) -> Result<Done> {
    match &cli.command {
        Command::Detect { input, mode } => {
            let (text, bytes) = read_input(input)?;
            detect(&PolySystem::parse(&text)?, *mode, cli.cap, bytes)
        }
        Command::Verify { input, weights } => {
            let (text, bytes) = read_input(input)?;
            verify(&PolySystem::parse(&text)?, weights, bytes)
        }
        Command::Gen {
            what:
                GenCommand::SetPacking {
                    input,
                    degree,
                    universe,
                    sets,
                    goal,
                    size_cap,
                },
        } => {
            let (inst, bytes) = match input {
                Some(path) => {
                    let (text, bytes) = read_input(path)?;
                    (SetPackingInstance::parse(&text)?, bytes)
                }
                None => {
                    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
                    let inst =
                        SetPackingInstance::random(&mut rng, *universe, *sets, *goal, *size_cap)?;
                    let bytes = inst.to_string().into_bytes();
                    (inst, bytes)
                }
            };
            gen_set_packing(&inst, *degree, bytes)
        }
        Command::Elevate { input, degree } => {
            let (text, bytes) = read_input(input)?;
            elevate(&PolySystem::parse(&text)?, *degree, bytes)
        }
        Command::PackSolve { input } => {
            let (text, bytes) = read_input(input)?;
            pack_solve(&SetPackingInstance::parse(&text)?, cli.cap, bytes)
        }
        Command::OrderSolve { input, targets } => {
            let (text, bytes) = read_input(input)?;
            order_solve(&PolySystem::parse(&text)?, targets, bytes)
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn exit_for(b: bool) -> i32 {
    if b {
        EXIT_YES
    } else {
        EXIT_NO
    }
}

fn big_json(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) => json!(x),
        None => json!(v.to_string()),
    }
}

fn order_json(order: &WeightOrder) -> Value {
    json!({
        "weights": order.weights().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "integer_weights": order.integer_weights().iter().map(big_json).collect::<Vec<_>>(),
    })
}

fn integer_weights_text(order: &WeightOrder) -> String {
    order.integer_weights().iter().join(" ")
}

fn monomials_text(ms: &[Monomial], names: &[String]) -> Vec<String> {
    ms.iter().map(|m| m.display(names).to_string()).collect()
}

fn detect(sys: &PolySystem, mode: Mode, cap: u64, input: Vec<u8>) -> Result<Done> {
    let cfg = DetectConfig {
        cap,
        ..DetectConfig::default()
    };
    let res: DetectionResult = match mode {
        Mode::ZeroDim => detect_gbd_zero_dim(sys, &cfg)?,
        Mode::Sgbd => detect_sgbd(sys, &cfg)?,
        Mode::Brute => detect_gbd_bruteforce(sys, false, &cfg)?,
        Mode::BruteZeroDim => detect_gbd_bruteforce(sys, true, &cfg)?,
    };
    let names = sys.var_names();
    let lts = res
        .leading_terms
        .as_deref()
        .map(|l| monomials_text(l, names));

    let mut text = format!("verdict: {}\nmode: {}\n", res.verdict, mode.name());
    if let Some(order) = &res.witness {
        writeln!(text, "weights: {}", integer_weights_text(order)).unwrap();
    }
    if let Some(lts) = &lts {
        writeln!(text, "leading terms: {}", lts.join(", ")).unwrap();
    }
    if let Some(z) = res.zero_dimensional {
        writeln!(text, "zero-dimensional: {}", yes_no(z)).unwrap();
    }
    writeln!(text, "candidates examined: {}", res.subsets_examined).unwrap();
    writeln!(text, "note: {}", res.diagnostics).unwrap();

    let json = json!({
        "mode": mode.name(),
        "verdict": res.verdict,
        "witness": res.witness.as_ref().map(order_json),
        "leading_terms": lts,
        "zero_dimensional": res.zero_dimensional,
        "candidates_examined": res.subsets_examined,
        "diagnostics": res.diagnostics,
    });
    Ok(Done {
        code: exit_for(res.is_yes()),
        text,
        json,
        input,
    })
}

fn parse_weights(spec: &str) -> Result<WeightOrder> {
    let weights = spec
        .split(',')
        .map(|w| {
            let w = w.trim();
            Rational::from_str(w).map_err(|_| Error::InvalidArgument(format!("bad weight {w:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    WeightOrder::new(weights)
}

fn verify(sys: &PolySystem, weights: &str, input: Vec<u8>) -> Result<Done> {
    let order = parse_weights(weights)?;
    if order.dim() != sys.n() {
        return Err(Error::DimensionMismatch {
            expected: sys.n(),
            found: order.dim(),
        });
    }
    let polys = sys.polys();
    let report = is_groebner_basis(polys, &order, Default::default())?;
    let zero = is_zero_dimensional_lt(polys, &order)?;
    let coprime = pairwise_coprime_lt(polys, &order)?;
    let names = sys.var_names();
    let lts = monomials_text(&leading_monomials(polys, &order)?, names);

    let mut text = format!(
        "groebner basis: {}\nweights: {}\nleading terms: {}\n",
        yes_no(report.is_groebner),
        integer_weights_text(&order),
        lts.join(", ")
    );
    if let Some(fail) = &report.failure {
        writeln!(
            text,
            "failing pair: f{} f{} remainder {}",
            fail.i + 1,
            fail.j + 1,
            fail.remainder.display(names)
        )
        .unwrap();
    }
    writeln!(text, "zero-dimensional: {}", yes_no(zero.zero_dimensional)).unwrap();
    writeln!(text, "pairwise coprime: {}", yes_no(coprime)).unwrap();

    let json = json!({
        "groebner": report.is_groebner,
        "witness": order_json(&order),
        "leading_terms": lts,
        "failing_pair": report.failure.as_ref().map(|f| [f.i + 1, f.j + 1]),
        "remainder": report.failure.as_ref().map(|f| f.remainder.display(names).to_string()),
        "pairs_checked": report.pairs_checked,
        "pairs_skipped": report.pairs_skipped,
        "zero_dimensional": zero.zero_dimensional,
        "pairwise_coprime": coprime,
    });
    Ok(Done {
        code: exit_for(report.is_groebner),
        text,
        json,
        input,
    })
}

fn gen_set_packing(inst: &SetPackingInstance, degree: Option<u32>, input: Vec<u8>) -> Result<Done> {
    let degree = match degree {
        Some(d) => d,
        None => u32::try_from(inst.size_cap() + 1)
            .map_err(|_| Error::InvalidArgument("size cap too large".into()))?,
    };
    let (sys, map) = encode_set_packing(inst, degree)?;
    let text = sys.to_string();
    let json = json!({
        "instance": inst.to_string(),
        "degree": degree,
        "num_vars": map.num_vars(),
        "num_polys": sys.len(),
        "system": text,
    });
    Ok(Done {
        code: EXIT_YES,
        text,
        json,
        input,
    })
}

fn elevate(sys: &PolySystem, degree: Option<u32>, input: Vec<u8>) -> Result<Done> {
    let degree = match degree {
        Some(d) => d,
        None => {
            let first = sys.polys().first().ok_or(Error::EmptySystem)?;
            let d = first.homogeneous_degree().ok_or(Error::InvalidArgument(
                "first polynomial is not homogeneous".into(),
            ))?;
            u32::try_from(d).map_err(|_| Error::ExponentOverflow)?
        }
    };
    let up = elevate_to_zero_dim(sys, degree)?;
    let text = up.to_string();
    let json = json!({
        "degree": degree,
        "added": up.len() - sys.len(),
        "system": text,
    });
    Ok(Done {
        code: EXIT_YES,
        text,
        json,
        input,
    })
}

fn pack_solve(inst: &SetPackingInstance, cap: u64, input: Vec<u8>) -> Result<Done> {
    let found = solve_set_packing_bruteforce(inst, cap)?;
    let sets = found.map(|s| s.into_iter().map(|j| j + 1).collect::<Vec<_>>());
    let mut text = format!("packable: {}\n", yes_no(sets.is_some()));
    if let Some(s) = &sets {
        writeln!(text, "sets: {}", s.iter().join(" ")).unwrap();
    }
    let json = json!({
        "packable": sets.is_some(),
        "sets": sets,
    });
    Ok(Done {
        code: exit_for(sets.is_some()),
        text,
        json,
        input,
    })
}

fn parse_targets(sys: &PolySystem, spec: &str) -> Result<TargetSelection> {
    let parts: Vec<&str> = spec.split(';').map(str::trim).collect();
    if parts.len() != sys.len() {
        return Err(Error::InvalidArgument(format!(
            "expected {} targets, got {}",
            sys.len(),
            parts.len()
        )));
    }
    let sel = parts
        .iter()
        .zip(sys.polys())
        .enumerate()
        .map(|(i, (part, f))| {
            let t = parse_polynomial(part, sys.var_names())?;
            let mono = match t.terms() {
                [term] if term.coeff == Rational::from_integer(1.into()) => &term.mono,
                _ => {
                    return Err(Error::InvalidArgument(format!(
                        "target {part:?} is not a monomial"
                    )));
                }
            };
            f.terms()
                .iter()
                .position(|term| &term.mono == mono)
                .ok_or_else(|| {
                    Error::InvalidArgument(format!(
                        "target {part:?} is not in the support of polynomial {}",
                        i + 1
                    ))
                })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TargetSelection(sel))
}

fn order_solve(sys: &PolySystem, targets: &str, input: Vec<u8>) -> Result<Done> {
    let sel = parse_targets(sys, targets)?;
    let order = realize_leading_terms(sys.n(), sys.polys(), &sel)?;
    let mut text = format!("realizable: {}\n", yes_no(order.is_some()));
    if let Some(o) = &order {
        writeln!(text, "weights: {}", integer_weights_text(o)).unwrap();
    }
    let json = json!({
        "realizable": order.is_some(),
        "witness": order.as_ref().map(order_json),
    });
    Ok(Done {
        code: exit_for(order.is_some()),
        text,
        json,
        input,
    })
}
