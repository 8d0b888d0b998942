//! End-to-end acceptance suite. Prints one PASS/FAIL line per criterion
//! and fails if any criterion fails.

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use sawstrip::algebra::{BigRat, Poly, RatFun};
use sawstrip::enumerate::{count_saws, count_saws_with, list_saws, EnumConfig};
use sawstrip::guess::{guess_auto, semi_rigorous_width2};
use sawstrip::lattice::{mirror_x, Step, StepWord, StripSpec};
use sawstrip::pipeline::{mu_table, BoundReport, MuStatus, PipelineConfig};
use sawstrip::width2::{
    closed_form_a, decompositions, full_gf, generate_northbound, gf_via_weighted_automaton, northbound_gf, piece_gf,
    Piece,
};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rat(n: i64) -> BigRat {
    BigRat::from_integer(n.into())
}

fn strip(lo: i64, hi: i64) -> StripSpec {
    StripSpec::new(lo, hi).unwrap()
}

fn theorem_reproduction() -> Outcome {
    let counts = count_saws(&strip(0, 1), 30);
    let series = full_gf().series(30).map_err(|e| e.to_string())?;
    for (n, c) in counts.iter().enumerate() {
        check(*c == closed_form_a(n as u64), || format!("closed form differs at n={n}"))?;
        check(series.coeffs()[n] == BigRat::from_integer(c.clone()), || {
            format!("series differs at n={n}")
        })?;
    }
    for (n, v) in [(0, 1), (1, 3), (5, 36), (7, 100), (15, 4876)] {
        check(counts[n] == BigInt::from(v), || format!("a_{n} = {} != {v}", counts[n]))?;
    }
    Ok(())
}

fn gf_identities() -> Outcome {
    let full = full_gf();
    check(full.num() == &Poly::from_ints(&[1, 2, 0, -1, -1, 0, 0, 1]), || {
        format!("numerator {}", full.num())
    })?;
    let one_minus = Poly::from_ints(&[1, -1]);
    let one_plus = Poly::from_ints(&[1, 1]);
    let fib = Poly::from_ints(&[1, -1, -1]);
    let den = &(&one_minus.pow(2) * &one_plus.pow(2)) * &fib;
    check(full.den() == &den, || format!("denominator {}", full.den()))?;
    let product = [Piece::U, Piece::LStar, Piece::I, Piece::UPrime]
        .into_iter()
        .map(piece_gf)
        .fold(RatFun::one(), |acc, g| &acc * &g);
    check(northbound_gf() == product, || "northbound != product".into())?;
    let via = gf_via_weighted_automaton().map_err(|e| e.to_string())?;
    check(northbound_gf() == via, || "northbound != automaton".into())
}

fn grammar_completeness() -> Outcome {
    let s = strip(0, 1);
    for n in 0..=12 {
        let north = generate_northbound(n);
        let south: BTreeSet<StepWord> = north.iter().map(mirror_x).collect();
        let overlap: BTreeSet<String> = north.intersection(&south).map(ToString::to_string).collect();
        let expected: BTreeSet<String> = match n {
            0 => [String::new()].into(),
            1 => ["r".to_string()].into(),
            _ => BTreeSet::new(),
        };
        check(overlap == expected, || format!("overlap at n={n}: {overlap:?}"))?;
        let union: BTreeSet<StepWord> = north.union(&south).cloned().collect();
        let oracle = list_saws(&s, n).map_err(|e| e.to_string())?;
        check(union == oracle, || format!("union != oracle at n={n}"))?;
        let tuples = decompositions(n);
        check(tuples.len() == north.len(), || format!("ambiguous grammar at n={n}"))?;
    }
    Ok(())
}

fn semi_rigorous() -> Outcome {
    let r = semi_rigorous_width2().map_err(|e| e.to_string())?;
    check(r.terms.len() == 16, || format!("{} oracle terms", r.terms.len()))?;
    check(r.matches_grammar_gf, || format!("guessed {:?}", r.guessed))?;
    check(r.fresh_terms_checked == 5 && r.fresh_terms_ok, || "fresh terms".into())
}

fn random_poly(rng: &mut StdRng, deg: usize, unit_constant: bool) -> Poly {
    let mut c: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-9..=9)).collect();
    if unit_constant {
        c[0] = 1;
    }
    if deg > 0 && c[deg] == 0 {
        c[deg] = if rng.gen_bool(0.5) { 1 } else { -1 };
    }
    Poly::from_ints(&c)
}

fn guesser_round_trip() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut done = 0;
    while done < 100 {
        let p = rng.gen_range(0..=5);
        let q = rng.gen_range(0..=5);
        let num = random_poly(&mut rng, p, false);
        if num.is_zero() {
            continue;
        }
        let den = random_poly(&mut rng, q, true);
        let gf = RatFun::normalize(num, den).map_err(|e| e.to_string())?;
        let n_terms = p + q + 1 + 2 + 2;
        let series = gf.series(n_terms - 1).map_err(|e| e.to_string())?;
        let terms: Vec<BigInt> = series.coeffs().iter().map(|c| c.to_integer()).collect();
        let got = guess_auto(&terms, 2).map_err(|e| e.to_string())?;
        check(got.as_ref().is_some_and(|g| g.gf == gf), || {
            format!("lost {gf}: got {:?}", got.map(|g| g.gf.to_string()))
        })?;
        done += 1;
    }
    Ok(())
}

fn bound_of(strips: &[StripSpec], n_train: Option<usize>, cfg: &PipelineConfig) -> Result<BoundReport, String> {
    let tol = BigRat::new(1.into(), BigInt::from(10).pow(12));
    let table = mu_table(strips, n_train, &tol, cfg).map_err(|e| e.to_string())?;
    match &table.entries[0].status {
        MuStatus::Bounded(b) => Ok((**b).clone()),
        MuStatus::Unconjectured { terms } => Err(format!("no validated gf from {terms} terms")),
        MuStatus::Failed(e) => Err(e.clone()),
    }
}

fn connective_bounds() -> Outcome {
    let cfg = PipelineConfig {
        holdout: 3,
        walk_cap: 1_500_000_000,
        max_terms: 40,
        ..PipelineConfig::default()
    };
    let b1 = bound_of(&[strip(0, 0)], Some(10), &cfg)?;
    check(b1.gf == RatFun::from_ints(&[1, 1], &[1, -1]).unwrap(), || format!("width 1 gf {}", b1.gf))?;
    check(b1.mu_lo == rat(1) && b1.mu_hi == rat(1), || "width 1 mu != 1".into())?;

    let b2 = bound_of(&[strip(0, 1)], Some(18), &cfg)?;
    let golden = BigRat::new(16180339887i64.into(), BigInt::from(10).pow(10));
    let eps = BigRat::new(1.into(), BigInt::from(10).pow(9));
    let close = |x: &BigRat| (x - &golden) <= eps && (&golden - x) <= eps;
    check(close(&b2.mu_lo) && close(&b2.mu_hi), || "width 2 mu off golden ratio".into())?;

    let b3 = bound_of(&[strip(0, 2)], None, &cfg).map_err(|e| format!("width 3: {e}"))?;
    check(b1.mu_lo <= b2.mu_hi && b2.mu_lo <= b3.mu_hi, || "mu not monotone in width".into())
}

fn oracle_consistency() -> Outcome {
    let strips = [strip(0, 0), strip(0, 1), strip(-1, 0), strip(0, 2), strip(-1, 1), strip(-2, 1)];
    for s in &strips {
        let counts = count_saws(s, 12);
        for (n, count) in counts.iter().enumerate() {
            let words = list_saws(s, n).map_err(|e| e.to_string())?;
            check(BigInt::from(words.len()) == *count, || format!("{s:?} n={n}: list != count"))?;
            let ups = words.iter().filter(|w| w.steps().first() == Some(&Step::U)).count();
            let downs = words.iter().filter(|w| w.steps().first() == Some(&Step::D)).count();
            check(ups == downs, || format!("{s:?} n={n}: u/d asymmetry"))?;
        }
    }
    for (narrow, wide) in [((0, 0), (0, 1)), ((0, 1), (0, 2)), ((0, 1), (-1, 1)), ((-1, 1), (-1, 2))] {
        let a = count_saws(&strip(narrow.0, narrow.1), 12);
        let b = count_saws(&strip(wide.0, wide.1), 12);
        check(a.iter().zip(&b).all(|(x, y)| x <= y), || format!("{narrow:?} vs {wide:?}"))?;
    }
    let s = strip(-1, 1);
    let reference = count_saws_with(&s, 14, &EnumConfig { workers: 1, ..EnumConfig::default() }).unwrap();
    for workers in [2, 3, 8] {
        for split_depth in [0, 1, 4, 9] {
            let cfg = EnumConfig {
                workers,
                split_depth,
                cap: None,
            };
            let got = count_saws_with(&s, 14, &cfg).map_err(|e| e.to_string())?;
            check(got == reference, || format!("schedule {workers}/{split_depth} differs"))?;
        }
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 7] = [
        ("1 theorem reproduction", theorem_reproduction),
        ("2 gf identities", gf_identities),
        ("3 grammar completeness", grammar_completeness),
        ("4 semi-rigorous proof", semi_rigorous),
        ("5 guesser round trip", guesser_round_trip),
        ("6 connective bounds", connective_bounds),
        ("7 oracle self-consistency", oracle_consistency),
    ];
    let mut failed = Vec::new();
    for (name, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS criterion {name} ({secs:.1}s)"),
            Err(e) => {
                println!("FAIL criterion {name} ({secs:.1}s): {e}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
