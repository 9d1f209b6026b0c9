//! Acceptance suite. Each test exercises one release criterion at its
//! stated tolerance and prints a pass/fail line; run with `--nocapture` to
//! see them:
//!
//! ```bash
//! cargo test -p plogic --test acceptance -- --nocapture
//! ```

mod common;

use std::panic::{catch_unwind, resume_unwind, UnwindSafe};
use std::time::{Duration, Instant};

use plogic::compress::{compress_with_stats, verify_equivalence};
use plogic::constraints::{build_system, Relation};
use plogic::revise::{auto_assess, bayes_update, world_conditionals, world_ratios, Assessment};
use plogic::solve::{entail_interval, target_interval_at};
use plogic::worlds::TruthValue::{DontCare as DC, False as F, True as T};
use plogic::{Belief, Sentence, Tableau, TruthValue, World};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn criterion<Run: FnOnce() + UnwindSafe>(
    number: usize,
    name: &str,
    budget: Option<Duration>,
    run: Run,
) {
    let start = Instant::now();
    let outcome = catch_unwind(run);
    let elapsed = start.elapsed();
    let in_budget = budget.is_none_or(|cap| elapsed <= cap);
    let status = if outcome.is_ok() && in_budget {
        "PASS"
    } else {
        "FAIL"
    };
    println!(
        "acceptance {number} ({name}): {status} [{:.3}s]",
        elapsed.as_secs_f64()
    );
    if let Err(panic) = outcome {
        resume_unwind(panic);
    }
    assert!(
        in_budget,
        "criterion {number} ran {elapsed:?}, budget {budget:?}"
    );
}

fn parse_all(texts: &[&str]) -> Vec<Sentence> {
    texts.iter().map(|t| Sentence::parse(t).unwrap()).collect()
}

fn conj_sentences() -> Vec<Sentence> {
    parse_all(&["A1", "A2", "A3", "A1 & A2 & A3 -> B", "B"])
}

fn conj_beliefs() -> Vec<Belief> {
    vec![
        Belief::point(0, 0.8).unwrap(),
        Belief::point(1, 0.7).unwrap(),
        Belief::point(2, 0.6).unwrap(),
        Belief::point(3, 0.8).unwrap(),
    ]
}

/// For each world of the two-valued tableau, the index of the compressed
/// world whose expansion contains it.
fn expansion_membership(compressed: &Tableau, original: &Tableau) -> Vec<usize> {
    let mut owner = std::collections::HashMap::new();
    for (j, world) in compressed.worlds().iter().enumerate() {
        for member in world.expand() {
            let previous = owner.insert(member, j);
            assert!(previous.is_none(), "expansions overlap");
        }
    }
    original.worlds().iter().map(|w| owner[w]).collect()
}

const FIXTURE_DIR: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/problems");

fn fixture(name: &str) -> String {
    format!("{FIXTURE_DIR}/{name}")
}

/// Criterion 1 — the closed-form schema generator: the five-world matrix is
/// reproduced cell for cell, and for n = 1..6 the n+2 worlds expand to
/// exactly the enumerated 2^(n+1).
#[test]
fn criterion_1_schema_generator() {
    criterion(1, "schema generator", Some(Duration::from_secs(1)), || {
        let tableau = Tableau::conjunctive_mp(3).unwrap();
        let expected: Vec<World> = vec![
            World::new(vec![T, T, T, T, T]),
            World::new(vec![T, T, T, F, F]),
            World::new(vec![T, T, F, T, DC]),
            World::new(vec![T, F, DC, T, DC]),
            World::new(vec![F, DC, DC, T, DC]),
        ];
        assert_eq!(tableau.worlds(), expected.as_slice());
        assert_eq!(tableau.sentences(), conj_sentences().as_slice());

        for n in 1..=6 {
            let schema = Tableau::conjunctive_mp(n).unwrap();
            assert_eq!(schema.world_count(), n + 2, "world count for n = {n}");
            let enumerated = Tableau::enumerate(schema.sentences().to_vec(), n + 1).unwrap();
            assert_eq!(enumerated.world_count(), 1 << (n + 1));
            assert_eq!(
                schema.expand().unwrap().world_set(),
                enumerated.world_set(),
                "expansion disagrees for n = {n}"
            );
        }
    });
}

/// Criterion 2 — enumeration reproduces both reference world inventories as
/// sets.
#[test]
fn criterion_2_enumeration() {
    criterion(2, "enumeration", Some(Duration::from_secs(1)), || {
        let tableau = Tableau::enumerate(conj_sentences(), 4).unwrap();
        let expected: Vec<[u8; 5]> = vec![
            [1, 1, 1, 1, 1],
            [1, 1, 1, 0, 0],
            [0, 0, 0, 1, 1],
            [0, 0, 0, 1, 0],
            [0, 0, 1, 1, 1],
            [0, 0, 1, 1, 0],
            [0, 1, 0, 1, 1],
            [0, 1, 0, 1, 0],
            [0, 1, 1, 1, 1],
            [0, 1, 1, 1, 0],
            [1, 0, 0, 1, 1],
            [1, 0, 0, 1, 0],
            [1, 0, 1, 1, 1],
            [1, 0, 1, 1, 0],
            [1, 1, 0, 1, 1],
            [1, 1, 0, 1, 0],
        ];
        let expected_set: std::collections::HashSet<Vec<TruthValue>> = expected
            .iter()
            .map(|row| row.iter().map(|b| TruthValue::from_bool(*b == 1)).collect())
            .collect();
        assert_eq!(tableau.world_count(), 16);
        assert_eq!(tableau.world_set(), expected_set);

        let triple = Tableau::enumerate(parse_all(&["Q", "Q -> R", "R"]), 2).unwrap();
        let expected_set: std::collections::HashSet<Vec<TruthValue>> =
            [vec![T, T, T], vec![T, F, F], vec![F, T, T], vec![F, T, F]]
                .into_iter()
                .collect();
        assert_eq!(triple.world_count(), 4);
        assert_eq!(triple.world_set(), expected_set);
    });
}

/// Criterion 3 — the five-world tableau with the reference priors produces
/// the eight-row system exactly, and the size ratio against the two-valued
/// system is exactly one half.
#[test]
fn criterion_3_constraint_generation() {
    criterion(3, "constraint generation", None, || {
        let schema = Tableau::conjunctive_mp(3).unwrap();
        let system = build_system(&schema, &conj_beliefs()).unwrap();

        let rows: Vec<(Vec<f64>, Relation, f64)> = system
            .constraints()
            .iter()
            .map(|c| (c.coeffs.clone(), c.relation, c.rhs))
            .collect();
        let expected: Vec<(Vec<f64>, Relation, f64)> = vec![
            (vec![1.0, 1.0, 1.0, 1.0, 0.0], Relation::Eq, 0.8),
            (vec![1.0, 1.0, 1.0, 0.0, 0.0], Relation::Le, 0.7),
            (vec![1.0, 1.0, 1.0, 0.0, 1.0], Relation::Ge, 0.7),
            (vec![1.0, 1.0, 0.0, 0.0, 0.0], Relation::Le, 0.6),
            (vec![1.0, 1.0, 0.0, 1.0, 1.0], Relation::Ge, 0.6),
            (vec![1.0, 0.0, 1.0, 1.0, 1.0], Relation::Eq, 0.8),
        ];
        assert_eq!(rows, expected);
        let target = system.sole_target().unwrap();
        assert_eq!(target.lower, vec![1.0, 0.0, 0.0, 0.0, 0.0]);
        assert_eq!(target.upper, vec![1.0, 0.0, 1.0, 1.0, 1.0]);

        let enumerated = Tableau::enumerate(conj_sentences(), 4).unwrap();
        let uncompressed = build_system(&enumerated, &conj_beliefs()).unwrap();
        assert_eq!(system.size(), 40);
        assert_eq!(uncompressed.size(), 80);
        let ratio = system.size() as f64 / uncompressed.size() as f64;
        assert_eq!(ratio, 0.5);
    });
}

/// Criterion 4 — the worked revision example: uniform representative
/// prior, auto assessments of 0.5, the (0.8, 0.8, 0.4, 0.6, 0.6) world
/// conditionals, the exact posterior, and both target intervals.
#[test]
fn criterion_4_worked_revision() {
    criterion(
        4,
        "worked revision example",
        Some(Duration::from_secs(1)),
        || {
            let schema = Tableau::conjunctive_mp(3).unwrap();
            let uniform = [0.2, 0.2, 0.2, 0.2, 0.2];

            let a2 = auto_assess(&schema, &uniform, 1, 0.7).unwrap();
            assert!((a2.value_at(4).unwrap() - 0.5).abs() < 1e-12);
            let a3 = auto_assess(&schema, &uniform, 2, 0.6).unwrap();
            assert!((a3.value_at(3).unwrap() - 0.5).abs() < 1e-12);
            assert!((a3.value_at(4).unwrap() - 0.5).abs() < 1e-12);

            let conditionals = world_conditionals(&schema, 2, 0.8, 0.4, &a3).unwrap();
            let expected_conditionals = [0.8, 0.8, 0.4, 0.6, 0.6];
            for (c, e) in conditionals.iter().zip(expected_conditionals) {
                assert!((c - e).abs() < 1e-12, "conditional {c} vs {e}");
            }

            let posterior = bayes_update(&uniform, &conditionals).unwrap();
            let exact = [0.25, 0.25, 0.125, 0.1875, 0.1875];
            let rounded = [0.25, 0.25, 0.12, 0.19, 0.19];
            for ((p, e), r) in posterior.iter().zip(exact).zip(rounded) {
                assert!((p - e).abs() < 1e-9, "posterior {p} vs {e}");
                // 0.125 sits exactly half a cent from the printed 0.12.
                assert!(
                    (p - r).abs() <= 0.005 + 1e-12,
                    "posterior {p} vs rounded {r}"
                );
            }

            let prior_interval = target_interval_at(&schema, &uniform, 4).unwrap();
            assert!((prior_interval.lo - 0.2).abs() < 1e-9);
            assert!((prior_interval.hi - 0.8).abs() < 1e-9);
            let posterior_interval = target_interval_at(&schema, &posterior, 4).unwrap();
            assert!((posterior_interval.lo - 0.25).abs() < 1e-9);
            assert!((posterior_interval.hi - 0.75).abs() < 1e-9);
        },
    );
}

/// Criterion 5 — compression is partition-preserving on 200 random
/// problems, and parity problems are fixed points with zero merges.
#[test]
fn criterion_5_compression_properties() {
    criterion(5, "compression properties", None, || {
        let mut rng = StdRng::seed_from_u64(0x5105);
        for case in 0..200 {
            let sentences = common::random_problem(&mut rng, 5);
            let source_count = sentences.len() - 1;
            let original = Tableau::enumerate(sentences, source_count).unwrap();
            let compressed = plogic::compress_tableau(&original).unwrap();
            assert!(compressed.world_count() <= original.world_count());
            assert!(
                verify_equivalence(&original, &compressed).unwrap(),
                "case {case} lost equivalence"
            );
        }

        for m in 2..=5 {
            let atoms: Vec<Sentence> = (1..=m).map(|i| Sentence::atom(format!("S{i}"))).collect();
            let xor = atoms
                .iter()
                .cloned()
                .rev()
                .reduce(|acc, s| Sentence::not(Sentence::iff(s, acc)))
                .unwrap();
            let mut sentences = atoms;
            sentences.push(xor);
            let count = sentences.len();
            let tableau = Tableau::enumerate(sentences, count - 1).unwrap();
            assert_eq!(tableau.world_count(), 1 << m);
            let (compressed, stats) = compress_with_stats(&tableau).unwrap();
            assert_eq!(compressed, tableau, "parity m = {m} changed");
            assert_eq!(stats.merges, 0);
        }
    });
}

/// Criterion 6 — entailment intervals are invariant under compression on
/// 100 random feasible problems, and the reference problem's global
/// interval matches an exhaustive 0.01-step grid oracle.
#[test]
fn criterion_6_solution_set_equivalence() {
    criterion(6, "solution-set equivalence", None, || {
        let mut rng = StdRng::seed_from_u64(0x50f7);
        for case in 0..100 {
            let sentences = common::random_problem(&mut rng, 4);
            let source_count = sentences.len() - 1;
            let target_index = source_count;
            let original = Tableau::enumerate(sentences, source_count).unwrap();
            let weights = common::random_simplex_point(&mut rng, original.world_count());
            let beliefs = common::priors_from_weights(&original, &weights);
            let compressed = plogic::compress_tableau(&original).unwrap();
            let full = entail_interval(&original, &beliefs, target_index).unwrap();
            let small = entail_interval(&compressed, &beliefs, target_index).unwrap();
            assert!(
                (full.lo - small.lo).abs() < 1e-9 && (full.hi - small.hi).abs() < 1e-9,
                "case {case}: {full} vs {small}"
            );

            // Projection direction: any two-valued optimum, summed onto the
            // compressed worlds, must satisfy the compressed system.
            let membership = expansion_membership(&compressed, &original);
            let full_system = plogic::build_system(&original, &beliefs).unwrap();
            let compressed_system = plogic::build_system(&compressed, &beliefs).unwrap();
            let (lower, upper) = plogic::bound_rows(&original, target_index).unwrap();
            for (objective, direction) in [
                (&lower, plogic::Direction::Minimize),
                (&upper, plogic::Direction::Maximize),
            ] {
                let vertex = plogic::solve_lp(objective, &full_system, direction)
                    .unwrap()
                    .optimal()
                    .unwrap()
                    .weights;
                let mut aggregated = vec![0.0; compressed.world_count()];
                for (i, &j) in membership.iter().enumerate() {
                    aggregated[j] += vertex[i];
                }
                assert!(
                    plogic::solve::feasible(&compressed_system, &aggregated).unwrap(),
                    "case {case}: projected vertex infeasible"
                );
            }
        }

        // Exhaustive integer grid in hundredths over the five compressed
        // worlds. Equality rows hold exactly on the grid, so the oracle is
        // float-free.
        let schema = Tableau::conjunctive_mp(3).unwrap();
        let mut grid_min = i64::MAX;
        let mut grid_max = i64::MIN;
        for w1 in 0..=100i64 {
            for w2 in 0..=100 - w1 {
                for w3 in 0..=100 - w1 - w2 {
                    for w4 in 0..=100 - w1 - w2 - w3 {
                        let w5 = 100 - w1 - w2 - w3 - w4;
                        if w1 + w2 + w3 + w4 != 80 {
                            continue; // Pr(A1) = 0.8
                        }
                        if w1 + w2 + w3 > 70 || w1 + w2 + w3 + w5 < 70 {
                            continue; // Pr(A2) = 0.7
                        }
                        if w1 + w2 > 60 || w1 + w2 + w4 + w5 < 60 {
                            continue; // Pr(A3) = 0.6
                        }
                        if w1 + w3 + w4 + w5 != 80 {
                            continue; // Pr(=>) = 0.8
                        }
                        grid_min = grid_min.min(w1);
                        grid_max = grid_max.max(w1 + w3 + w4 + w5);
                    }
                }
            }
        }
        assert_eq!(grid_min, 0);
        assert_eq!(grid_max, 80);
        let interval = entail_interval(&schema, &conj_beliefs(), 4).unwrap();
        assert!((interval.lo - grid_min as f64 / 100.0).abs() < 1e-9);
        assert!((interval.hi - grid_max as f64 / 100.0).abs() < 1e-9);
    });
}

/// Criterion 7 — posterior-form evidence built from a likelihood pair
/// yields the identical posterior for 100 random (p, a, b) triples.
#[test]
fn criterion_7_ratio_revision() {
    criterion(7, "ratio revision", None, || {
        let schema = Tableau::conjunctive_mp(3).unwrap();
        let mut rng = StdRng::seed_from_u64(0x7a71);
        let mut checked = 0;
        while checked < 100 {
            let weights = common::random_simplex_point(&mut rng, 5);
            let a = rng.random_range(0.01..1.0);
            let b = rng.random_range(0.01..1.0);
            let assessment = Assessment::new(
                &schema,
                2,
                [
                    (3, rng.random_range(0.0..1.0)),
                    (4, rng.random_range(0.0..1.0)),
                ]
                .into_iter()
                .collect(),
            )
            .unwrap();
            let p = plogic::revise::realized_prior(&schema, &weights, 2, &assessment).unwrap();
            if !(p > 1e-6 && p < 1.0 - 1e-6) {
                continue;
            }
            let posterior_prob = a * p / (a * p + b * (1.0 - p));
            let conditionals = world_conditionals(&schema, 2, a, b, &assessment).unwrap();
            let ratios = world_ratios(&schema, 2, posterior_prob, p, &assessment).unwrap();
            let via_likelihood = bayes_update(&weights, &conditionals).unwrap();
            let via_ratio = bayes_update(&weights, &ratios).unwrap();
            for (x, y) in via_likelihood.iter().zip(&via_ratio) {
                assert!((x - y).abs() < 1e-9, "p={p} a={a} b={b}: {x} vs {y}");
            }
            checked += 1;
        }
    });
}

/// Criterion 8 — the command-line surface: byte-exact reference outputs and
/// compression-invariant entailment on every fixture.
#[test]
fn criterion_8_cli() {
    criterion(8, "command-line interface", None, || {
        let conj = fixture("conj_mp.plp");
        let evidence = fixture("conj_mp_likelihood.plev");

        let entail = plogic::cli::run(&["entail", &conj]);
        assert_eq!(entail.code, 0, "stderr: {}", entail.stderr);
        assert_eq!(entail.stdout, "[0.000000, 0.800000]\n");

        let revise = plogic::cli::run(&["revise", &conj, "--evidence", &evidence]);
        assert_eq!(revise.code, 0, "stderr: {}", revise.stderr);
        let lines: Vec<&str> = revise.stdout.lines().collect();
        assert!(lines.contains(&"0.250000 0.250000 0.125000 0.187500 0.187500"));
        assert!(lines.contains(&"[0.250000, 0.750000]"));

        let stats = plogic::cli::run(&["stats", &conj]);
        assert_eq!(stats.code, 0);
        assert!(stats
            .stdout
            .lines()
            .any(|line| line == "compression-ratio 0.500000"));

        let mut fixtures: Vec<_> = std::fs::read_dir(FIXTURE_DIR)
            .unwrap()
            .map(|entry| entry.unwrap().path())
            .filter(|path| path.extension().is_some_and(|ext| ext == "plp"))
            .collect();
        fixtures.sort();
        assert!(fixtures.len() >= 5);
        for path in fixtures {
            let path = path.to_string_lossy().into_owned();
            let compressed = plogic::cli::run(&["entail", &path]);
            let uncompressed = plogic::cli::run(&["entail", &path, "--no-compress"]);
            assert_eq!(
                compressed.stdout, uncompressed.stdout,
                "{path} differs under --no-compress"
            );
            assert_eq!(
                compressed.code, uncompressed.code,
                "{path} exit codes differ"
            );
        }
    });
}
