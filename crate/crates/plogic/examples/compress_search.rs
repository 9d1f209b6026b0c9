//! Greedy don't-care compression of an enumerated tableau.
//!
//! Without schema knowledge the tool falls back to searching for world
//! pairs that differ in a single component. The result is always an exact
//! partition of the original worlds, but how much it shrinks depends on the
//! problem: parity targets do not shrink at all.

use plogic::compress::{compress_with_stats, verify_equivalence};
use plogic::{Sentence, Tableau};

fn main() -> plogic::Result<()> {
    let sentences = vec![
        Sentence::parse("A1")?,
        Sentence::parse("A2")?,
        Sentence::parse("A3")?,
        Sentence::parse("A1 & A2 & A3 -> B")?,
        Sentence::parse("B")?,
    ];
    let original = Tableau::enumerate(sentences, 4)?;
    let (compressed, stats) = compress_with_stats(&original)?;
    println!(
        "search: {} worlds -> {} worlds ({} merges in {} passes)",
        original.world_count(),
        compressed.world_count(),
        stats.merges,
        stats.passes
    );
    print!("{}", compressed.render());
    assert!(verify_equivalence(&original, &compressed)?);

    // The schema generator beats the greedy search on this family: it
    // reaches n + 2 worlds where the search stops earlier.
    let schema = Tableau::conjunctive_mp(3)?;
    println!("schema form reaches {} worlds", schema.world_count());

    // Worst case: the parity function. Every pair of worlds differs in at
    // least two components, so no merge is ever possible.
    let parity = vec![
        Sentence::parse("S1")?,
        Sentence::parse("S2")?,
        Sentence::parse("S3")?,
        Sentence::parse("!(S1 <-> !(S2 <-> S3))")?,
    ];
    let tableau = Tableau::enumerate(parity, 3)?;
    let (after, stats) = compress_with_stats(&tableau)?;
    println!(
        "parity: {} worlds -> {} worlds ({} merges)",
        tableau.world_count(),
        after.world_count(),
        stats.merges
    );
    Ok(())
}
