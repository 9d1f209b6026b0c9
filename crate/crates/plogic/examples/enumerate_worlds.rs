//! Enumerate the possible worlds of a sentence set.
//!
//! The worlds of `{Q, Q -> R}` with target `R` are the four consistent
//! truth-value columns; the prior of each sentence is the total weight of
//! the worlds where it is true.

use plogic::{Sentence, Tableau};

fn main() -> plogic::Result<()> {
    let sentences = vec![
        Sentence::parse("Q")?,
        Sentence::parse("Q -> R")?,
        Sentence::parse("R")?,
    ];
    let tableau = Tableau::enumerate(sentences, 2)?;

    println!("{} consistent worlds:", tableau.world_count());
    print!("{}", tableau.render());

    // Row views recover the matrix one sentence at a time.
    let row = tableau.row(2)?;
    let true_worlds: Vec<usize> = row
        .iter()
        .enumerate()
        .filter(|(_, v)| **v == plogic::TruthValue::True)
        .map(|(j, _)| j + 1)
        .collect();
    println!("target R is true in worlds {true_worlds:?}");
    Ok(())
}
