//! Command-line front end for the uvb engine.
//!
//! Words are passed as quoted strings in the letter syntax of the library
//! parser (`s1`, `S2` for an inverse, `r1`). Results go to standard output;
//! diagnostics go to standard error. Exit codes: 0 on success (boolean
//! queries print `true`/`false` and exit 0 either way), 1 when `selftest` or
//! `check-relations` finds a failure, 2 on parse errors, 3 on precondition
//! violations such as `conjugate-to-perm` on an element of infinite order.

use clap::{Parser, Subcommand};

use uvb::crystal::{
    braid_equal, in_braid_image, in_braid_image_with_lift, in_symmetric_crystal,
    project_abelianized, writhe, writhe_word,
};
use uvb::free2::Pair;
use uvb::normal::{check_relations, lambda_generator_word, normal_form, NormalForm};
use uvb::oracle::{
    brute_force_order, lambda_commutation_pattern_holds, random_element, random_f2_word,
    random_perm, random_sigma_word, random_word, Rng,
};
use uvb::perm::{adjacent_lift, bubble_lift};
use uvb::pure::PureElement;
use uvb::serial::{
    crystal_to_json, normal_form_to_json, order_to_json, pure_to_json, relation_report_to_json,
};
use uvb::torsion::{order_of, recompose, torsion_conjugator, Order};
use uvb::word::BraidWord;
use uvb::Error;

const DEFAULT_SELFTEST_SEED: u64 = 0x5eed_0001;

#[derive(Parser)]
#[command(name = "uvb", version, about = "Exact computation in unrestricted virtual braid groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the normal form of a word.
    Nf {
        word: String,
        /// Number of strands (default: inferred from the word).
        #[arg(long)]
        n: Option<usize>,
        /// Emit canonical JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Decide whether two words represent the same element.
    Eq {
        left: String,
        right: String,
        /// Number of strands (default: inferred jointly from both words).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Print the order of the element (a number, or "infinite").
    Order {
        word: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// For a finite-order element, print a pure element conjugating the
    /// permutation part to the element.
    ConjugateToPerm {
        word: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Decide membership in the embedded braid group.
    InImEta {
        word: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether two σ-only words are equal in the embedded braid group.
    CrystalEq {
        left: String,
        right: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Project to the abelianized crystal quotient.
    Project {
        word: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Decide membership in the symmetric crystal subgroup.
    InCn {
        word: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Print the writhe (σ-exponent sum) of a word.
    Writhe {
        word: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Check every defining relation instance; exits 1 on any failure.
    CheckRelations {
        /// Number of strands (default: 2 through 6).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Run the randomized property suites; exits 1 on any failure.
    Selftest {
        /// Seed for the deterministic trial streams.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        json: bool,
    },
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(cli.command));
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::NotTorsion | Error::RhoLetter { .. } | Error::NotCoboundary => 3,
        _ => 2,
    }
}

fn fail(e: Error) -> i32 {
    eprintln!("error: {e}");
    exit_code_for(&e)
}

fn parse_word(text: &str, n: Option<usize>) -> Result<BraidWord, Error> {
    BraidWord::parse(text, n)
}

/// Parses two words over the same strand count: an explicit `--n` applies to
/// both, otherwise the larger inferred count does.
fn parse_words(left: &str, right: &str, n: Option<usize>) -> Result<(BraidWord, BraidWord), Error> {
    let joint = match n {
        Some(m) => m,
        None => BraidWord::parse(left, None)?
            .n()
            .max(BraidWord::parse(right, None)?.n()),
    };
    Ok((BraidWord::parse(left, Some(joint))?, BraidWord::parse(right, Some(joint))?))
}

fn print_bool(value: bool, key: &str, json: bool) {
    if json {
        println!("{{\"{key}\":{value}}}");
    } else {
        println!("{value}");
    }
}

fn run(command: Command) -> i32 {
    match command {
        Command::Nf { word, n, json } => match parse_word(&word, n) {
            Ok(w) => {
                let v = normal_form(&w);
                if json {
                    println!("{}", normal_form_to_json(&v));
                } else {
                    println!("{v}");
                }
                0
            }
            Err(e) => fail(e),
        },
        Command::Eq { left, right, n, json } => match parse_words(&left, &right, n) {
            Ok((a, b)) => {
                print_bool(normal_form(&a) == normal_form(&b), "equal", json);
                0
            }
            Err(e) => fail(e),
        },
        Command::Order { word, n, json } => match parse_word(&word, n) {
            Ok(w) => {
                let order = order_of(&normal_form(&w));
                if json {
                    println!("{}", order_to_json(&order));
                } else {
                    println!("{order}");
                }
                0
            }
            Err(e) => fail(e),
        },
        Command::ConjugateToPerm { word, n, json } => match parse_word(&word, n) {
            Ok(w) => {
                let v = normal_form(&w);
                match torsion_conjugator(&v) {
                    Ok(conj) => {
                        debug_assert_eq!(recompose(&conj, v.perm()), v);
                        if json {
                            println!("{}", pure_to_json(&conj));
                        } else {
                            println!("{conj}");
                        }
                        0
                    }
                    Err(e) => fail(e),
                }
            }
            Err(e) => fail(e),
        },
        Command::InImEta { word, n, json } => match parse_word(&word, n) {
            Ok(w) => {
                print_bool(in_braid_image(&normal_form(&w)), "member", json);
                0
            }
            Err(e) => fail(e),
        },
        Command::CrystalEq { left, right, n, json } => match parse_words(&left, &right, n) {
            Ok((a, b)) => match braid_equal(&a, &b) {
                Ok(equal) => {
                    print_bool(equal, "equal", json);
                    0
                }
                Err(e) => fail(e),
            },
            Err(e) => fail(e),
        },
        Command::Project { word, n, json } => match parse_word(&word, n) {
            Ok(w) => {
                let c = project_abelianized(&normal_form(&w));
                if json {
                    println!("{}", crystal_to_json(&c));
                } else {
                    println!("{c}");
                }
                0
            }
            Err(e) => fail(e),
        },
        Command::InCn { word, n, json } => match parse_word(&word, n) {
            Ok(w) => {
                print_bool(in_symmetric_crystal(&normal_form(&w)), "member", json);
                0
            }
            Err(e) => fail(e),
        },
        Command::Writhe { word, n, json } => match parse_word(&word, n) {
            Ok(w) => {
                let value = writhe_word(&w);
                if json {
                    println!("{{\"writhe\":{value}}}");
                } else {
                    println!("{value}");
                }
                0
            }
            Err(e) => fail(e),
        },
        Command::CheckRelations { n, json } => run_check_relations(n, json),
        Command::Selftest { seed, json } => {
            run_selftest(seed.unwrap_or(DEFAULT_SELFTEST_SEED), json)
        }
    }
}

fn run_check_relations(n: Option<usize>, json: bool) -> i32 {
    let strand_counts: Vec<usize> = match n {
        Some(m) => vec![m],
        None => (2..=6).collect(),
    };
    let reports: Vec<_> = strand_counts.iter().map(|&m| check_relations(m)).collect();
    if json {
        let body: Vec<String> = reports.iter().map(relation_report_to_json).collect();
        println!("[{}]", body.join(","));
    } else {
        for report in &reports {
            println!(
                "n={}: {} checks, {} failures",
                report.n(),
                report.checks().len(),
                report.failures().count()
            );
            for failure in report.failures() {
                println!(
                    "  FAIL {} at {:?}: {} vs {}",
                    failure.family,
                    failure.indices,
                    failure.lhs.render(),
                    failure.rhs.render()
                );
            }
        }
    }
    if reports.iter().all(|r| r.all_passed()) {
        0
    } else {
        1
    }
}

#[derive(serde::Serialize)]
struct PropertyResult {
    name: &'static str,
    trials: usize,
    failures: usize,
    passed: bool,
    detail: String,
}

impl PropertyResult {
    fn new(name: &'static str, trials: usize, failures: usize, detail: String) -> Self {
        PropertyResult { name, trials, failures, passed: failures == 0, detail }
    }
}

#[derive(serde::Serialize)]
struct SelftestReport {
    seed: u64,
    passed: bool,
    properties: Vec<PropertyResult>,
}

fn run_selftest(seed: u64, json: bool) -> i32 {
    let master = Rng::new(seed);
    let properties = vec![
        prop_relations(),
        prop_commutation(),
        prop_generator_words(),
        prop_torsion_round_trip(master.derive(1)),
        prop_order_vs_brute_force(master.derive(2)),
        prop_coboundary_round_trip(master.derive(3)),
        prop_lift_independence(master.derive(4)),
        prop_homomorphisms(master.derive(5)),
    ];
    let passed = properties.iter().all(|p| p.passed);
    if json {
        let report = SelftestReport { seed, passed, properties };
        println!("{}", serde_json::to_string(&report).expect("encoding cannot fail"));
    } else {
        for p in &properties {
            let status = if p.passed { "PASS" } else { "FAIL" };
            println!("{}: {status} ({} trials, {} failures; {})", p.name, p.trials, p.failures, p.detail);
        }
        println!("selftest: {}", if passed { "PASS" } else { "FAIL" });
    }
    if passed {
        0
    } else {
        1
    }
}

fn prop_relations() -> PropertyResult {
    let mut trials = 0;
    let mut failures = 0;
    for n in 2..=6 {
        let report = check_relations(n);
        trials += report.checks().len();
        failures += report.failures().count();
    }
    PropertyResult::new("defining-relations", trials, failures, "all instances, 2..=6 strands".into())
}

fn prop_commutation() -> PropertyResult {
    let mut trials = 0;
    let mut failures = 0;
    for n in 2..=5 {
        trials += 1;
        if !lambda_commutation_pattern_holds(n) {
            failures += 1;
        }
    }
    PropertyResult::new(
        "pure-generator-commutation",
        trials,
        failures,
        "all ordered generator pairs, 2..=5 strands".into(),
    )
}

fn prop_generator_words() -> PropertyResult {
    let mut trials = 0;
    let mut failures = 0;
    for n in 2..=6 {
        for a in 1..=n {
            for b in 1..=n {
                if a == b {
                    continue;
                }
                trials += 1;
                let w = lambda_generator_word(n, a, b).expect("valid pair");
                let direct = NormalForm::from_pure(PureElement::generator(n, a, b, 1));
                if normal_form(&w) != direct {
                    failures += 1;
                }
            }
        }
    }
    PropertyResult::new(
        "generator-words",
        trials,
        failures,
        "words evaluate to single generators, 2..=6 strands".into(),
    )
}

fn random_pure(rng: &mut Rng, n: usize, letters: usize) -> PureElement {
    random_element(rng, n, letters, 0).pure().clone()
}

fn prop_torsion_round_trip(mut rng: Rng) -> PropertyResult {
    let trials = 200;
    let mut failures = 0;
    for _ in 0..trials {
        let n = rng.range(2, 6) as usize;
        let s = random_perm(&mut rng, n);
        let letters = rng.below(21) as usize;
        let g = NormalForm::from_pure(random_pure(&mut rng, n, letters));
        let w = g.mul(&NormalForm::from_perm(s.clone())).mul(&g.inv());
        let order_ok = order_of(&w) == Order::Finite(s.order());
        let recompose_ok = torsion_conjugator(&w)
            .map(|conj| recompose(&conj, w.perm()) == w)
            .unwrap_or(false);
        if !(order_ok && recompose_ok) {
            failures += 1;
        }
    }
    PropertyResult::new(
        "torsion-round-trip",
        trials,
        failures,
        "conjugated permutations keep their order and recompose".into(),
    )
}

fn prop_order_vs_brute_force(mut rng: Rng) -> PropertyResult {
    let trials = 200;
    let mut failures = 0;
    let mut finite = 0;
    for _ in 0..trials {
        let n = rng.range(2, 6) as usize;
        let pure_letters = rng.below(9) as usize;
        let rho_letters = rng.below(7) as usize;
        let v = random_element(&mut rng, n, pure_letters, rho_letters);
        let brute = brute_force_order(&v, v.perm().order());
        let agree = match order_of(&v) {
            Order::Finite(r) => {
                finite += 1;
                brute == Some(r)
            }
            Order::Infinite => brute.is_none(),
        };
        if !agree {
            failures += 1;
        }
    }
    PropertyResult::new(
        "order-vs-brute-force",
        trials,
        failures,
        format!("{finite} finite, {} infinite", trials - finite),
    )
}

fn prop_coboundary_round_trip(mut rng: Rng) -> PropertyResult {
    let trials = 200;
    let mut failures = 0;
    for _ in 0..trials {
        let lo = rng.range(1, 5) as usize;
        let hi = rng.range(lo as u64 + 1, 6) as usize;
        let pair = Pair::new(lo, hi);
        let letters = rng.below(31) as usize;
        let u = random_f2_word(&mut rng, pair, letters);
        let w = u.mul(&u.inv().swap_alpha());
        let ok = w
            .solve_alpha_coboundary()
            .map(|x| x.mul(&x.inv().swap_alpha()) == w)
            .unwrap_or(false);
        if !ok {
            failures += 1;
        }
    }
    PropertyResult::new(
        "swap-coboundary-round-trip",
        trials,
        failures,
        "constructed coboundaries solve and recompose".into(),
    )
}

fn prop_lift_independence(mut rng: Rng) -> PropertyResult {
    let trials = 100;
    let mut failures = 0;
    for t in 0..trials {
        let n = rng.range(2, 6) as usize;
        let v = if t % 2 == 0 {
            let len = rng.below(15) as usize;
            let w = random_sigma_word(&mut rng, n, len);
            normal_form(&w)
        } else {
            let pure_letters = rng.below(7) as usize;
            let rho_letters = rng.below(7) as usize;
            random_element(&mut rng, n, pure_letters, rho_letters)
        };
        let insertion = in_braid_image_with_lift(&v, adjacent_lift);
        let bubble = in_braid_image_with_lift(&v, bubble_lift);
        if insertion != bubble {
            failures += 1;
        }
    }
    PropertyResult::new(
        "membership-lift-independence",
        trials,
        failures,
        "insertion and bubble lifts agree".into(),
    )
}

fn prop_homomorphisms(mut rng: Rng) -> PropertyResult {
    let trials = 200;
    let mut failures = 0;
    for _ in 0..trials {
        let n = rng.range(2, 6) as usize;
        let budgets: Vec<usize> = (0..4).map(|_| rng.below(9) as usize).collect();
        let a = random_element(&mut rng, n, budgets[0], budgets[1]);
        let b = random_element(&mut rng, n, budgets[2], budgets[3]);
        let len = rng.below(25) as usize;
        let w = random_word(&mut rng, n, len);
        let writhe_additive = writhe(&a.mul(&b)) == writhe(&a) + writhe(&b);
        let writhe_word_matches = writhe_word(&w) == writhe(&normal_form(&w));
        let projection_multiplicative = project_abelianized(&a.mul(&b))
            == project_abelianized(&a).mul(&project_abelianized(&b));
        if !(writhe_additive && writhe_word_matches && projection_multiplicative) {
            failures += 1;
        }
    }
    PropertyResult::new(
        "writhe-and-projection",
        trials,
        failures,
        "writhe additive, word writhe matches, projection multiplicative".into(),
    )
}
