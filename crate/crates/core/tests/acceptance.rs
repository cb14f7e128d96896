//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gbdetect::detect::{detect_gbd_bruteforce, detect_gbd_zero_dim, detect_sgbd, DetectConfig};
use gbdetect::groebner::{
    is_groebner_basis, is_zero_dimensional_lt, normal_form, s_polynomial, GbOptions,
    ReductionStrategy,
};
use gbdetect::order_solver::{build_gamma, solve_strict_system, TargetSelection};
use gbdetect::reductions::{
    elevate_to_zero_dim, encode_set_packing, monomials_of_degree, solve_set_packing_bruteforce,
    SetPackingInstance,
};
use gbdetect::{Monomial, PolySystem, Polynomial, WeightOrder};

type Criterion = (&'static str, fn() -> Verdict);

struct Verdict {
    pass: bool,
    detail: String,
}

impl Verdict {
    fn from_failures(failures: &[String], summary: String) -> Self {
        let mut detail = summary;
        for f in failures.iter().take(5) {
            detail.push_str("\n    ");
            detail.push_str(f);
        }
        if failures.len() > 5 {
            detail.push_str(&format!("\n    ... and {} more", failures.len() - 5));
        }
        Verdict {
            pass: failures.is_empty(),
            detail,
        }
    }
}

fn rat(c: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(c))
}

fn coeff(rng: &mut ChaCha8Rng) -> BigRational {
    let c: i64 = rng.gen_range(1..=3);
    rat(if rng.gen_bool(0.5) { c } else { -c })
}

fn random_monomial(rng: &mut ChaCha8Rng, n: usize, max_exp: u32) -> Monomial {
    Monomial::new((0..n).map(|_| rng.gen_range(0..=max_exp)).collect())
}

fn system(n: usize, polys: Vec<Polynomial>) -> PolySystem {
    PolySystem::with_default_names(n, polys).expect("valid system")
}

fn grid(n: usize, d: i64) -> impl Iterator<Item = Vec<i64>> {
    (0..n).map(|_| 1..=d).multi_cartesian_product()
}

fn weight(w: &[i64], m: &Monomial) -> i64 {
    w.iter()
        .zip(m.exponents())
        .map(|(&a, &e)| a * i64::from(e))
        .sum()
}

/// Every set-packing instance in the enumerated range: its encoding has a
/// term order with pairwise coprime leading monomials iff it packs.
fn set_packing_equivalence() -> Verdict {
    let mut failures = Vec::new();
    let mut instances = 0u64;
    let mut packable = 0u64;
    let cfg = DetectConfig::default();
    for m in [2u32, 3] {
        for universe in 1..=4usize {
            let subsets: Vec<Vec<usize>> = (1..m as usize)
                .flat_map(|size| (1..=universe).combinations(size))
                .collect();
            for k in 1..=4usize {
                for family in subsets.iter().cloned().combinations_with_replacement(k) {
                    for goal in 1..=3usize {
                        let inst =
                            SetPackingInstance::new(universe, family.clone(), goal, m as usize - 1)
                                .expect("enumerated instance is valid");
                        instances += 1;
                        let truth = solve_set_packing_bruteforce(&inst, u64::MAX)
                            .unwrap()
                            .is_some();
                        packable += u64::from(truth);
                        let (sys, _) = encode_set_packing(&inst, m).unwrap();
                        let got = detect_sgbd(&sys, &cfg).unwrap().is_yes();
                        if got != truth {
                            failures
                                .push(format!("m={m} {inst:?}: packing {truth}, detector {got}"));
                        }
                    }
                }
            }
        }
    }
    Verdict::from_failures(
        &failures,
        format!(
            "{instances} instances ({packable} packable), {} disagreements",
            failures.len()
        ),
    )
}

fn random_homogeneous(rng: &mut ChaCha8Rng, n: usize, m: u32) -> Polynomial {
    let monos = monomials_of_degree(n, m);
    let count = rng.gen_range(1..=monos.len());
    let chosen = monos.choose_multiple(rng, count).cloned();
    Polynomial::from_terms(n, chosen.map(|mono| (coeff(rng), mono)).collect::<Vec<_>>()).unwrap()
}

/// For every weight in {1..4}^n: F is a Gröbner basis iff its elevation is a
/// Gröbner basis with pure-power leading monomials.
fn elevation_equivalence() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    let mut failures = Vec::new();
    let mut checks = 0u64;
    let mut gb_count = 0u64;
    let systems = 500;
    for _ in 0..systems {
        let n = rng.gen_range(1..=3usize);
        let s = rng.gen_range(1..=3usize);
        let m = rng.gen_range(1..=2u32);
        let polys: Vec<Polynomial> = (0..s).map(|_| random_homogeneous(&mut rng, n, m)).collect();
        let sys = system(n, polys);
        let up = elevate_to_zero_dim(&sys, m).unwrap();
        for w in grid(n, 4) {
            let ord = WeightOrder::from_integers(w.iter().copied()).unwrap();
            let lhs = is_groebner_basis(sys.polys(), &ord, GbOptions::default())
                .unwrap()
                .is_groebner;
            let rhs = is_groebner_basis(up.polys(), &ord, GbOptions::default())
                .unwrap()
                .is_groebner
                && is_zero_dimensional_lt(up.polys(), &ord)
                    .unwrap()
                    .zero_dimensional;
            checks += 1;
            gb_count += u64::from(lhs);
            if lhs != rhs {
                failures.push(format!("w={w:?} system {sys:?}: F {lhs}, F' {rhs}"));
            }
        }
    }
    Verdict::from_failures(
        &failures,
        format!(
            "{systems} systems, {checks} (system, weight) checks, {gb_count} Gröbner, {} disagreements",
            failures.len()
        ),
    )
}

fn random_pure_power_system(rng: &mut ChaCha8Rng) -> PolySystem {
    let n = rng.gen_range(1..=3usize);
    let s = rng.gen_range(1..=5usize);
    let polys = (0..s)
        .map(|_| loop {
            let terms = rng.gen_range(1..=4usize);
            let mut monos = Vec::with_capacity(terms);
            if rng.gen_bool(0.85) {
                let v = rng.gen_range(0..n);
                monos.push(Monomial::pure_power(n, v, rng.gen_range(1..=3)));
            }
            while monos.len() < terms {
                monos.push(random_monomial(rng, n, 3));
            }
            let f = Polynomial::from_terms(
                n,
                monos
                    .into_iter()
                    .map(|m| (coeff(rng), m))
                    .collect::<Vec<_>>(),
            )
            .unwrap();
            if !f.is_zero() {
                break f;
            }
        })
        .collect();
    system(n, polys)
}

/// The pure-power subset detector agrees with exhaustive search over
/// leading-term selections, and its witnesses re-verify.
fn detector_vs_bruteforce() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    let cfg = DetectConfig::default();
    let mut failures = Vec::new();
    let mut yes = 0u64;
    let systems = 600;
    for _ in 0..systems {
        let sys = random_pure_power_system(&mut rng);
        let fast = detect_gbd_zero_dim(&sys, &cfg).unwrap();
        let slow = detect_gbd_bruteforce(&sys, true, &cfg).unwrap();
        if fast.is_yes() != slow.is_yes() {
            failures.push(format!(
                "{}: subset detector {}, exhaustive {}",
                sys.to_string().replace('\n', "; "),
                fast.verdict,
                slow.verdict
            ));
        }
        if let Some(w) = &fast.witness {
            yes += 1;
            let gb = is_groebner_basis(sys.polys(), w, GbOptions::default())
                .unwrap()
                .is_groebner;
            let zd = is_zero_dimensional_lt(sys.polys(), w)
                .unwrap()
                .zero_dimensional;
            if !(gb && zd) {
                failures.push(format!(
                    "{}: witness fails re-verification",
                    sys.to_string().replace('\n', "; ")
                ));
            }
        }
    }
    Verdict::from_failures(
        &failures,
        format!(
            "{systems} systems, {yes} yes, {} disagreements",
            failures.len()
        ),
    )
}

fn strict_feasible_on_grid(polys: &[Polynomial], sel: &[usize], n: usize, d: i64) -> bool {
    grid(n, d).any(|w| {
        polys.iter().zip(sel).all(|(f, &t)| {
            let target = weight(&w, &f.terms()[t].mono);
            f.terms()
                .iter()
                .enumerate()
                .all(|(i, term)| i == t || target > weight(&w, &term.mono))
        })
    })
}

/// `n! * M^(n-1)` for the largest absolute entry `M`: every feasible strict
/// system has a solution in `{1..D}^n` at this size.
fn sufficient_grid_bound(n: usize, rows: &[Vec<i64>]) -> i64 {
    let m = rows
        .iter()
        .flatten()
        .map(|v| v.abs())
        .max()
        .unwrap_or(1)
        .max(1);
    (1..=n as i64).product::<i64>() * m.pow(n as u32 - 1)
}

/// The exact LP decides the strict system the same way as exhaustive search
/// over the integer grid {1..D}^n with D = 1 + (max exponent)(rows).
fn lp_grid_completeness() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    let mut failures = Vec::new();
    let mut feasible = 0u64;
    let pairs = 1000;
    for _ in 0..pairs {
        let n = rng.gen_range(1..=3usize);
        let s = rng.gen_range(1..=3usize);
        let polys: Vec<Polynomial> = (0..s)
            .map(|_| loop {
                let terms = rng.gen_range(1..=4usize);
                let f = Polynomial::from_terms(
                    n,
                    (0..terms)
                        .map(|_| (rat(1), random_monomial(&mut rng, n, 3)))
                        .collect::<Vec<_>>(),
                )
                .unwrap();
                if !f.is_zero() {
                    break f;
                }
            })
            .collect();
        let sel: Vec<usize> = polys.iter().map(|f| rng.gen_range(0..f.len())).collect();
        let gamma = build_gamma(n, &polys, &TargetSelection(sel.clone())).unwrap();
        let witness = solve_strict_system(&gamma).unwrap();
        let solver = witness.is_some();
        let max_exp = polys
            .iter()
            .flat_map(|f| f.support().flat_map(|m| m.exponents().iter().copied()))
            .max()
            .unwrap_or(0);
        let rows: usize = polys.iter().map(|f| f.len() - 1).sum();
        let d = 1 + i64::from(max_exp) * rows as i64;
        let on_grid = strict_feasible_on_grid(&polys, &sel, n, d);
        feasible += u64::from(solver);
        if solver != on_grid {
            let display = system(n, polys.clone()).to_string().replace('\n', "; ");
            let note = match &witness {
                Some(w) => format!("LP witness {w:?} re-verifies: {}", gamma.is_satisfied_by(w)),
                None => "LP reports infeasible".to_string(),
            };
            let big = sufficient_grid_bound(n, &gamma.rows);
            failures.push(format!(
                "{display} targets {sel:?}: LP {solver}, grid(D={d}) {on_grid}; {note}; grid(D={big}) {}",
                strict_feasible_on_grid(&polys, &sel, n, big)
            ));
        }
    }
    Verdict::from_failures(
        &failures,
        format!(
            "{pairs} pairs, {feasible} feasible, {} disagreements",
            failures.len()
        ),
    )
}

/// Degree facts behind the elevation argument: S(f, t) against a degree
/// 2m+1 monomial has only terms of degree >= 2m+1; S(f, g) within F and
/// every intermediate of its reduction by F stay at degree <= 2m.
fn degree_bounds() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    let mut failures = Vec::new();
    let mut s_pairs = 0u64;
    let mut steps = 0u64;
    let systems = 250;
    for _ in 0..systems {
        let n = rng.gen_range(1..=3usize);
        let s = rng.gen_range(1..=3usize);
        let m = rng.gen_range(1..=2u32);
        let polys: Vec<Polynomial> = (0..s).map(|_| random_homogeneous(&mut rng, n, m)).collect();
        let w: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=4)).collect();
        let ord = WeightOrder::from_integers(w.iter().copied()).unwrap();
        let high = u64::from(2 * m + 1);
        for f in &polys {
            for t in monomials_of_degree(n, 2 * m + 1) {
                let sp = s_polynomial(f, &Polynomial::monomial(t.clone()), &ord).unwrap();
                s_pairs += 1;
                if let Some(low) = sp.min_degree() {
                    if low < high {
                        failures.push(format!(
                            "S(f, {t:?}) has a term of degree {low} < {high} (w={w:?})"
                        ));
                    }
                }
            }
        }
        for (i, j) in (0..s).tuple_combinations() {
            let sp = s_polynomial(&polys[i], &polys[j], &ord).unwrap();
            s_pairs += 1;
            if sp.total_degree().is_some_and(|d| d > u64::from(2 * m)) {
                failures.push(format!("S(f{i}, f{j}) exceeds degree {} (w={w:?})", 2 * m));
            }
            for strategy in [ReductionStrategy::MaxLt, ReductionStrategy::FirstMatch] {
                let trace = normal_form(&sp, &polys, &ord, strategy).unwrap();
                for h in trace.intermediates(&sp, &polys).unwrap() {
                    steps += 1;
                    if h.total_degree().is_some_and(|d| d > u64::from(2 * m)) {
                        failures.push(format!(
                            "reduction of S(f{i}, f{j}) reached degree above {}",
                            2 * m
                        ));
                    }
                }
            }
        }
    }
    Verdict::from_failures(
        &failures,
        format!(
            "{systems} systems, {s_pairs} S-polynomials, {steps} intermediates, {} violations",
            failures.len()
        ),
    )
}

/// `s` bivariate polynomials, each with pure powers of both variables and a
/// mixed term, with pseudo-random exponents and coefficients.
fn pure_rich_system(rng: &mut ChaCha8Rng, s: usize) -> PolySystem {
    let polys = (0..s)
        .map(|_| {
            let a = rng.gen_range(1..=4u32);
            let b = rng.gen_range(1..=4u32);
            let terms = vec![
                (coeff(rng), Monomial::new(vec![a, 0])),
                (coeff(rng), Monomial::new(vec![0, b])),
                (
                    coeff(rng),
                    Monomial::new(vec![rng.gen_range(1..=2), rng.gen_range(1..=2)]),
                ),
            ];
            Polynomial::from_terms(2, terms).unwrap()
        })
        .collect();
    system(2, polys)
}

fn time_detection(sys: &PolySystem) -> (Duration, u64) {
    let cfg = DetectConfig::default();
    let mut runs = 0u32;
    let mut examined = 0;
    let start = Instant::now();
    while runs < 3 || start.elapsed() < Duration::from_millis(200) {
        examined = detect_gbd_zero_dim(sys, &cfg).unwrap().subsets_examined;
        runs += 1;
    }
    (start.elapsed() / runs, examined)
}

/// With two variables, detection time grows at most cubically in the
/// number of polynomials on a family where every member carries pure powers.
fn scaling() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    let sizes = [10usize, 20, 40, 80];
    let mut points = Vec::new();
    let mut detail = String::new();
    for &s in &sizes {
        let sys = pure_rich_system(&mut rng, s);
        let (t, examined) = time_detection(&sys);
        detail.push_str(&format!(
            " s={s}: {:.3}ms ({examined} candidates);",
            t.as_secs_f64() * 1e3
        ));
        points.push(((s as f64).ln(), t.as_secs_f64().ln()));
    }
    let k = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / k;
    let my = points.iter().map(|p| p.1).sum::<f64>() / k;
    let slope = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum::<f64>()
        / points.iter().map(|p| (p.0 - mx).powi(2)).sum::<f64>();
    Verdict {
        pass: slope <= 3.0,
        detail: format!("log-log slope {slope:.2} (limit 3.00);{detail}"),
    }
}

fn cli_goldens() -> Verdict {
    let cases = common::load_cases().len();
    let problems = common::check_goldens(false);
    Verdict::from_failures(
        &problems,
        format!(
            "{cases} cases in text and JSON form, {} mismatches",
            problems.len()
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("set-packing encoding equivalence", set_packing_equivalence),
        (
            "elevation equivalence over weight grid",
            elevation_equivalence,
        ),
        (
            "zero-dim detector vs exhaustive search",
            detector_vs_bruteforce,
        ),
        ("exact LP vs integer grid", lp_grid_completeness),
        (
            "degree bounds of S-polynomials and reductions",
            degree_bounds,
        ),
        ("detection scaling in s for n = 2", scaling),
        ("CLI golden files", cli_goldens),
    ];
    let filter: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let id = (i + 1).to_string();
        if !filter.is_empty() && !filter.contains(&id) {
            continue;
        }
        let start = Instant::now();
        let v = check();
        let status = if v.pass { "PASS" } else { "FAIL" };
        failed += usize::from(!v.pass);
        println!(
            "{status} [{id}] {name}: {} ({:.1}s)",
            v.detail,
            start.elapsed().as_secs_f64()
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
