//! Possible worlds and three-valued tableaux.
//!
//! A world assigns a truth value to every sentence of a problem. Plain
//! enumeration produces two-valued worlds; compression and the closed-form
//! schema generator introduce the third value, "don't care", which stands
//! for both completions at once. A tableau keeps the sentence list together
//! with its worlds; the invariant that makes don't-care weights meaningful
//! is that the expansions of distinct worlds never overlap, so each
//! two-valued world belongs to exactly one compressed world.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::sentence::{AtomTable, Sentence};

/// Default limit on the number of distinct atoms `enumerate` will accept.
pub const DEFAULT_ATOM_CAP: usize = 20;

/// Three-valued truth assignment for one sentence in one world.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TruthValue {
    True,
    False,
    DontCare,
}

impl TruthValue {
    pub fn symbol(self) -> char {
        match self {
            TruthValue::True => '1',
            TruthValue::False => '0',
            TruthValue::DontCare => '*',
        }
    }

    pub fn from_bool(b: bool) -> TruthValue {
        if b {
            TruthValue::True
        } else {
            TruthValue::False
        }
    }
}

/// One column of a tableau: a truth value per sentence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct World(Vec<TruthValue>);

impl World {
    pub fn new(values: Vec<TruthValue>) -> World {
        World(values)
    }

    pub fn values(&self) -> &[TruthValue] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dc_count(&self) -> usize {
        self.0
            .iter()
            .filter(|v| **v == TruthValue::DontCare)
            .count()
    }

    pub fn is_two_valued(&self) -> bool {
        self.dc_count() == 0
    }

    /// All two-valued completions, substituting true/false for each
    /// don't-care independently. Exactly `2^dc_count` worlds, generated in
    /// descending binary order with the leftmost don't-care as the most
    /// significant bit.
    pub fn expand(&self) -> Vec<World> {
        let dc_positions: Vec<usize> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, v)| **v == TruthValue::DontCare)
            .map(|(i, _)| i)
            .collect();
        let k = dc_positions.len();
        let mut out = Vec::with_capacity(1 << k);
        for code in (0..(1u64 << k)).rev() {
            let mut values = self.0.clone();
            for (bit, &pos) in dc_positions.iter().enumerate() {
                values[pos] = TruthValue::from_bool((code >> (k - 1 - bit)) & 1 == 1);
            }
            out.push(World(values));
        }
        out
    }

    /// True when some two-valued world lies in both expansions.
    pub(crate) fn overlaps(&self, other: &World) -> bool {
        self.len() == other.len()
            && self
                .0
                .iter()
                .zip(other.values())
                .all(|(a, b)| a == b || *a == TruthValue::DontCare || *b == TruthValue::DontCare)
    }
}

/// An ordered sentence list plus its worlds. The leading `source_count`
/// sentences are sources; the rest are targets.
#[derive(Debug, Clone, PartialEq)]
pub struct Tableau {
    sentences: Vec<Sentence>,
    worlds: Vec<World>,
    source_count: usize,
}

impl Tableau {
    /// Builds a tableau from parts, checking shape, world distinctness, and
    /// pairwise disjointness of expansions. Realizability of each expanded
    /// world by some atom assignment is the caller's responsibility.
    pub fn new(
        sentences: Vec<Sentence>,
        worlds: Vec<World>,
        source_count: usize,
    ) -> Result<Tableau> {
        if sentences.is_empty() {
            return Err(Error::InvalidTableau("no sentences".into()));
        }
        if worlds.is_empty() {
            return Err(Error::InvalidTableau("no worlds".into()));
        }
        if source_count > sentences.len() {
            return Err(Error::InvalidTableau(format!(
                "source count {source_count} exceeds sentence count {}",
                sentences.len()
            )));
        }
        for world in &worlds {
            if world.len() != sentences.len() {
                return Err(Error::InvalidTableau(format!(
                    "world length {} does not match sentence count {}",
                    world.len(),
                    sentences.len()
                )));
            }
        }
        let mut seen: HashSet<&World> = HashSet::new();
        for world in &worlds {
            if !seen.insert(world) {
                return Err(Error::InvalidTableau("duplicate worlds".into()));
            }
        }
        // Distinct two-valued worlds cannot overlap, so the quadratic check
        // only runs when don't-cares are present (small tableaux).
        if worlds.iter().any(|w| !w.is_two_valued()) {
            for (i, a) in worlds.iter().enumerate() {
                for b in &worlds[i + 1..] {
                    if a.overlaps(b) {
                        return Err(Error::OverlappingExpansions);
                    }
                }
            }
        }
        Ok(Tableau {
            sentences,
            worlds,
            source_count,
        })
    }

    /// Enumerates the consistent two-valued worlds of a sentence list with
    /// the default atom cap.
    pub fn enumerate(sentences: Vec<Sentence>, source_count: usize) -> Result<Tableau> {
        Tableau::enumerate_capped(sentences, source_count, DEFAULT_ATOM_CAP)
    }

    /// Enumerates worlds by visiting every atom assignment in descending
    /// binary order (first atom as the most significant bit, true = 1) and
    /// keeping the first occurrence of each sentence truth vector.
    pub fn enumerate_capped(
        sentences: Vec<Sentence>,
        source_count: usize,
        atom_cap: usize,
    ) -> Result<Tableau> {
        if sentences.is_empty() {
            return Err(Error::InvalidTableau("no sentences".into()));
        }
        let table = AtomTable::from_sentences(&sentences);
        let atom_count = table.len();
        if atom_count > atom_cap {
            return Err(Error::AtomCapExceeded {
                atoms: atom_count,
                cap: atom_cap,
            });
        }
        let compiled: Vec<Compiled> = sentences
            .iter()
            .map(|s| Compiled::build(s, &table))
            .collect();
        let mut seen: HashSet<Vec<TruthValue>> = HashSet::new();
        let mut worlds = Vec::new();
        for code in (0..(1u64 << atom_count)).rev() {
            let vector: Vec<TruthValue> = compiled
                .iter()
                .map(|c| TruthValue::from_bool(c.eval(code, atom_count)))
                .collect();
            if seen.insert(vector.clone()) {
                worlds.push(World(vector));
            }
        }
        Tableau::new(sentences, worlds, source_count)
    }

    /// Closed-form tableau for the "conjunctive antecedent implies
    /// consequent" schema with `n` antecedents: sentences
    /// `[A1..An, A1 & … & An -> B, B]` and exactly `n + 2` worlds — one with
    /// everything true, one with the implication and consequent false, and
    /// one per antecedent that falsifies it while earlier antecedents stay
    /// true and later ones become don't-care.
    pub fn conjunctive_mp(n: usize) -> Result<Tableau> {
        if n < 1 {
            return Err(Error::InvalidTableau(
                "schema requires at least one antecedent".into(),
            ));
        }
        let antecedents: Vec<Sentence> = (1..=n).map(|i| Sentence::atom(format!("A{i}"))).collect();
        let consequent = Sentence::atom("B");
        let conjunction = antecedents
            .iter()
            .cloned()
            .reduce(Sentence::and)
            .expect("n >= 1");
        let mut sentences = antecedents;
        sentences.push(Sentence::implies(conjunction, consequent.clone()));
        sentences.push(consequent);
        Tableau::new(sentences, conjunctive_mp_worlds(n), n + 1)
    }

    /// Replaces every world by its two-valued expansion. Fails if two
    /// expansions share a world.
    pub fn expand(&self) -> Result<Tableau> {
        let mut seen: HashSet<World> = HashSet::new();
        let mut worlds = Vec::new();
        for world in &self.worlds {
            for expanded in world.expand() {
                if !seen.insert(expanded.clone()) {
                    return Err(Error::OverlappingExpansions);
                }
                worlds.push(expanded);
            }
        }
        Tableau::new(self.sentences.clone(), worlds, self.source_count)
    }

    pub fn sentences(&self) -> &[Sentence] {
        &self.sentences
    }

    pub fn worlds(&self) -> &[World] {
        &self.worlds
    }

    pub fn source_count(&self) -> usize {
        self.source_count
    }

    pub fn sentence_count(&self) -> usize {
        self.sentences.len()
    }

    pub fn world_count(&self) -> usize {
        self.worlds.len()
    }

    /// Index of the single target sentence, when there is exactly one.
    pub fn sole_target_index(&self) -> Result<usize> {
        if self.source_count + 1 == self.sentences.len() {
            Ok(self.source_count)
        } else {
            Err(Error::InvalidTableau(format!(
                "expected exactly one target, found {}",
                self.sentences.len() - self.source_count
            )))
        }
    }

    /// Row view of the matrix: the truth value of one sentence across all
    /// worlds.
    pub fn row(&self, sentence_index: usize) -> Result<Vec<TruthValue>> {
        if sentence_index >= self.sentences.len() {
            return Err(Error::SentenceIndexOutOfRange {
                index: sentence_index,
                count: self.sentences.len(),
            });
        }
        Ok(self
            .worlds
            .iter()
            .map(|w| w.values()[sentence_index])
            .collect())
    }

    pub fn row_has_dc(&self, sentence_index: usize) -> Result<bool> {
        Ok(self.row(sentence_index)?.contains(&TruthValue::DontCare))
    }

    /// The worlds as an order-insensitive set of truth vectors.
    pub fn world_set(&self) -> HashSet<Vec<TruthValue>> {
        self.worlds.iter().map(|w| w.values().to_vec()).collect()
    }

    /// Text rendering: one row per sentence, entries `1`, `0`, `*`.
    pub fn render(&self) -> String {
        let labels: Vec<String> = self.sentences.iter().map(|s| s.to_string()).collect();
        let width = labels.iter().map(|l| l.chars().count()).max().unwrap_or(0);
        let mut out = String::new();
        for (i, label) in labels.iter().enumerate() {
            let entries: Vec<String> = self
                .worlds
                .iter()
                .map(|w| w.values()[i].symbol().to_string())
                .collect();
            let pad = " ".repeat(width - label.chars().count());
            let _ = writeln!(out, "{label}{pad}  {}", entries.join(" "));
        }
        out
    }
}

/// Worlds of the conjunctive-modus-ponens schema, columns ordered as the
/// tableau prints them: all-true, all-antecedents-true-with-false-
/// implication, then the falsified-antecedent worlds from the last
/// antecedent back to the first.
pub(crate) fn conjunctive_mp_worlds(n: usize) -> Vec<World> {
    use TruthValue::{DontCare, False, True};
    let len = n + 2;
    let mut worlds = Vec::with_capacity(n + 2);
    worlds.push(World(vec![True; len]));
    let mut all_but = vec![True; len];
    all_but[n] = False;
    all_but[n + 1] = False;
    worlds.push(World(all_but));
    for i in (1..=n).rev() {
        let mut values = Vec::with_capacity(len);
        for j in 1..=n {
            values.push(match j.cmp(&i) {
                std::cmp::Ordering::Less => True,
                std::cmp::Ordering::Equal => False,
                std::cmp::Ordering::Greater => DontCare,
            });
        }
        values.push(True);
        values.push(DontCare);
        worlds.push(World(values));
    }
    worlds
}

/// Sentence compiled against an atom table, evaluated on assignment codes
/// where atom `i` is true iff bit `atom_count - 1 - i` of the code is set.
enum Compiled {
    Atom(usize),
    Not(Box<Compiled>),
    And(Box<Compiled>, Box<Compiled>),
    Or(Box<Compiled>, Box<Compiled>),
    Implies(Box<Compiled>, Box<Compiled>),
    Iff(Box<Compiled>, Box<Compiled>),
}

impl Compiled {
    fn build(sentence: &Sentence, table: &AtomTable) -> Compiled {
        match sentence {
            Sentence::Atom(name) => {
                Compiled::Atom(table.index_of(name).expect("atom registered in table"))
            }
            Sentence::Not(c) => Compiled::Not(Box::new(Compiled::build(c, table))),
            Sentence::And(l, r) => Compiled::And(
                Box::new(Compiled::build(l, table)),
                Box::new(Compiled::build(r, table)),
            ),
            Sentence::Or(l, r) => Compiled::Or(
                Box::new(Compiled::build(l, table)),
                Box::new(Compiled::build(r, table)),
            ),
            Sentence::Implies(l, r) => Compiled::Implies(
                Box::new(Compiled::build(l, table)),
                Box::new(Compiled::build(r, table)),
            ),
            Sentence::Iff(l, r) => Compiled::Iff(
                Box::new(Compiled::build(l, table)),
                Box::new(Compiled::build(r, table)),
            ),
        }
    }

    fn eval(&self, code: u64, atom_count: usize) -> bool {
        match self {
            Compiled::Atom(i) => (code >> (atom_count - 1 - i)) & 1 == 1,
            Compiled::Not(c) => !c.eval(code, atom_count),
            Compiled::And(l, r) => l.eval(code, atom_count) && r.eval(code, atom_count),
            Compiled::Or(l, r) => l.eval(code, atom_count) || r.eval(code, atom_count),
            Compiled::Implies(l, r) => !l.eval(code, atom_count) || r.eval(code, atom_count),
            Compiled::Iff(l, r) => l.eval(code, atom_count) == r.eval(code, atom_count),
        }
    }
}
