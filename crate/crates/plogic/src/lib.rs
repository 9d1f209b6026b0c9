//! Probabilistic-logic entailment with three-valued constraint compression.
//!
//! `plogic` enumerates the possible worlds of a propositional sentence set,
//! compresses them with a third "don't care" truth value, derives the linear
//! constraint system the worlds impose on sentence probabilities, bounds the
//! target sentence's probability with two linear programs, and revises a
//! chosen representative prior against evidence with Bayes' rule.
//!
//! The compressed system can be dramatically smaller than the two-valued one
//! while keeping exactly the same solutions for the target probability: a
//! modus ponens with `n` conjoined antecedents needs only `n + 2` worlds
//! instead of `2^(n+1)`.
//!
//! ## Examples
//!
//! Each capability has a runnable example:
//!
//! ```bash
//! cargo run -p plogic --example enumerate_worlds    # worlds of a sentence set
//! cargo run -p plogic --example schema_tableau      # closed-form n+2 world tableau
//! cargo run -p plogic --example compress_search     # greedy merging, worst cases
//! cargo run -p plogic --example entailment_bounds   # constraint systems and bounds
//! cargo run -p plogic --example revision_likelihood # Bayes revision, likelihood form
//! cargo run -p plogic --example revision_posterior  # Bayes revision, posterior form
//! cargo run -p plogic --example problem_files       # the .plp/.plev file formats
//! ```
//!
//! ## Library tour
//!
//! - [`sentence`] — formula AST, parser, and two-valued evaluation.
//! - [`worlds`] — possible-world enumeration, the conjunctive-modus-ponens
//!   schema generator, and don't-care expansion.
//! - [`compress`] — greedy pair merging with partition-preserving
//!   verification.
//! - [`constraints`] — beliefs and the linear systems they induce.
//! - [`solve`] — a dense two-phase simplex and entailment intervals.
//! - [`revise`] — assessments, world conditionals, and Bayes updates.
//! - [`cli`] — the `plogic` command-line tool and its file formats.
//!
//! ```
//! use plogic::{Belief, Sentence, Tableau};
//!
//! let sentences = vec![
//!     Sentence::parse("Q").unwrap(),
//!     Sentence::parse("Q -> R").unwrap(),
//!     Sentence::parse("R").unwrap(),
//! ];
//! let tableau = Tableau::enumerate(sentences, 2).unwrap();
//! let beliefs = vec![
//!     Belief::point(0, 0.7).unwrap(),
//!     Belief::point(1, 0.9).unwrap(),
//! ];
//! let bounds = plogic::solve::entail_interval(&tableau, &beliefs, 2).unwrap();
//! assert!((bounds.lo - 0.6).abs() < 1e-9);
//! assert!((bounds.hi - 0.9).abs() < 1e-9);
//! ```

pub mod cli;
pub mod compress;
pub mod constraints;
pub mod error;
pub mod revise;
pub mod sentence;
pub mod solve;
pub mod worlds;

pub use compress::{compress_tableau, compress_with_stats, merge_pair, verify_equivalence};
pub use constraints::{bound_rows, build_system, Belief, BeliefKind, ConstraintSystem};
pub use error::{Error, Result};
pub use revise::{
    apply_evidence, select_prior, Assessment, Evidence, EvidenceForm, PriorStrategy, RevisionResult,
};
pub use sentence::{AtomTable, Sentence};
pub use solve::{entail_interval, solve_lp, Direction, Interval, LpOutcome};
pub use worlds::{Tableau, TruthValue, World, DEFAULT_ATOM_CAP};
