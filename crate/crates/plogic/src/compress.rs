//! Search-based tableau compression.
//!
//! Two worlds merge when their truth vectors agree everywhere except a
//! single component where one is true and the other false; the merged world
//! carries a don't-care there. Merging partitions the original world set:
//! the expansions of the merged worlds stay pairwise disjoint and their
//! union is unchanged, which is what lets the weight of a compressed world
//! be read as the probability of a union of mutually exclusive worlds.
//!
//! The search is a greedy fixpoint: each pass scans world pairs in
//! lexicographic index order, consumes each world in at most one merge, and
//! passes repeat until none merges. The result is deterministic but not
//! guaranteed to be minimal.

use crate::error::{Error, Result};
use crate::worlds::{Tableau, TruthValue, World};

/// Counters reported by [`compress_with_stats`]: passes that performed at
/// least one merge, and total merges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompressStats {
    pub passes: usize,
    pub merges: usize,
}

/// Merges two worlds that differ in exactly one true/false component,
/// or returns `None` when they don't. Don't-care entries match only other
/// don't-cares.
pub fn merge_pair(a: &World, b: &World) -> Result<Option<World>> {
    if a.len() != b.len() {
        return Err(Error::WorldLengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let mut flip = None;
    for (i, (x, y)) in a.values().iter().zip(b.values()).enumerate() {
        if x == y {
            continue;
        }
        let opposites = matches!(
            (x, y),
            (TruthValue::True, TruthValue::False) | (TruthValue::False, TruthValue::True)
        );
        if !opposites || flip.is_some() {
            return Ok(None);
        }
        flip = Some(i);
    }
    let Some(i) = flip else {
        // Identical vectors; tableaux never hold duplicates, so there is
        // nothing to merge.
        return Ok(None);
    };
    let mut values = a.values().to_vec();
    values[i] = TruthValue::DontCare;
    Ok(Some(World::new(values)))
}

/// Compresses a tableau to fixpoint.
pub fn compress_tableau(tableau: &Tableau) -> Result<Tableau> {
    Ok(compress_with_stats(tableau)?.0)
}

/// Compresses a tableau and reports merge statistics.
pub fn compress_with_stats(tableau: &Tableau) -> Result<(Tableau, CompressStats)> {
    let mut worlds: Vec<World> = tableau.worlds().to_vec();
    let mut stats = CompressStats {
        passes: 0,
        merges: 0,
    };
    loop {
        let (next, merged) = one_pass(&worlds)?;
        if merged == 0 {
            break;
        }
        stats.passes += 1;
        stats.merges += merged;
        worlds = next;
    }
    let compressed = Tableau::new(tableau.sentences().to_vec(), worlds, tableau.source_count())?;
    Ok((compressed, stats))
}

fn one_pass(worlds: &[World]) -> Result<(Vec<World>, usize)> {
    let mut used = vec![false; worlds.len()];
    let mut out = Vec::with_capacity(worlds.len());
    let mut merged = 0;
    for i in 0..worlds.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let mut result = None;
        for j in (i + 1)..worlds.len() {
            if used[j] {
                continue;
            }
            if let Some(m) = merge_pair(&worlds[i], &worlds[j])? {
                used[j] = true;
                merged += 1;
                result = Some(m);
                break;
            }
        }
        out.push(result.unwrap_or_else(|| worlds[i].clone()));
    }
    Ok((out, merged))
}

/// True iff the compressed tableau expands to exactly the original's world
/// set with pairwise-disjoint expansions. The original is expected to be
/// two-valued; its world list is compared as a set.
pub fn verify_equivalence(original: &Tableau, compressed: &Tableau) -> Result<bool> {
    if original.sentences() != compressed.sentences() {
        return Err(Error::SentenceListMismatch);
    }
    let expanded = match compressed.expand() {
        Ok(t) => t,
        Err(Error::OverlappingExpansions) => return Ok(false),
        Err(e) => return Err(e),
    };
    Ok(expanded.world_set() == original.world_set())
}
