//! Shared generators for the integration suites: seeded random sentences,
//! problems, and simplex points.

use plogic::{Belief, Sentence, Tableau};
use rand::rngs::StdRng;
use rand::Rng;

pub fn random_sentence(rng: &mut StdRng, atoms: &[&str], depth: usize) -> Sentence {
    if depth == 0 || rng.random_range(0..3) == 0 {
        return Sentence::atom(atoms[rng.random_range(0..atoms.len())]);
    }
    match rng.random_range(0..5) {
        0 => Sentence::not(random_sentence(rng, atoms, depth - 1)),
        1 => Sentence::and(
            random_sentence(rng, atoms, depth - 1),
            random_sentence(rng, atoms, depth - 1),
        ),
        2 => Sentence::or(
            random_sentence(rng, atoms, depth - 1),
            random_sentence(rng, atoms, depth - 1),
        ),
        3 => Sentence::implies(
            random_sentence(rng, atoms, depth - 1),
            random_sentence(rng, atoms, depth - 1),
        ),
        _ => Sentence::iff(
            random_sentence(rng, atoms, depth - 1),
            random_sentence(rng, atoms, depth - 1),
        ),
    }
}

/// A random sentence list over at most four atoms. The last sentence plays
/// the target.
pub fn random_problem(rng: &mut StdRng, max_sentences: usize) -> Vec<Sentence> {
    const POOL: [&str; 4] = ["P", "Q", "R", "S"];
    let atom_count = rng.random_range(2..=POOL.len());
    let count = rng.random_range(2..=max_sentences);
    (0..count)
        .map(|_| random_sentence(rng, &POOL[..atom_count], 2))
        .collect()
}

/// A strictly positive random point on the probability simplex.
pub fn random_simplex_point(rng: &mut StdRng, len: usize) -> Vec<f64> {
    let raw: Vec<f64> = (0..len)
        .map(|_| -rng.random_range(1e-6..1.0f64).ln())
        .collect();
    let total: f64 = raw.iter().sum();
    raw.into_iter().map(|x| x / total).collect()
}

/// Point priors read off a feasible weight vector, one per source sentence,
/// so the resulting system is feasible by construction.
pub fn priors_from_weights(tableau: &Tableau, weights: &[f64]) -> Vec<Belief> {
    (0..tableau.source_count())
        .map(|index| {
            let (lower, _) = plogic::bound_rows(tableau, index).unwrap();
            let p: f64 = lower.iter().zip(weights).map(|(a, w)| a * w).sum();
            Belief::point(index, p.clamp(0.0, 1.0)).unwrap()
        })
        .collect()
}
