//! From beliefs to probability bounds on the target sentence.
//!
//! Point priors on the source sentences constrain the weights of the
//! compressed worlds; two linear programs then bound the target's prior
//! from below and above. Don't-care rows turn equalities into bound pairs,
//! and interval priors are supported directly.

use plogic::solve::entail_interval;
use plogic::{build_system, Belief, Tableau};

fn main() -> plogic::Result<()> {
    let tableau = Tableau::conjunctive_mp(3)?;
    let beliefs = vec![
        Belief::point(0, 0.8)?,
        Belief::point(1, 0.7)?,
        Belief::point(2, 0.6)?,
        Belief::point(3, 0.8)?,
    ];

    let system = build_system(&tableau, &beliefs)?;
    println!("constraint rows over {} worlds:", system.world_count());
    print!("{}", system.render_rows());

    let bounds = entail_interval(&tableau, &beliefs, 4)?;
    println!("Pr(B) in {bounds}");

    // An interval prior bounds the lower sum by its top and the upper sum
    // by its bottom.
    let chain = vec![
        plogic::Sentence::parse("Q")?,
        plogic::Sentence::parse("Q -> R")?,
        plogic::Sentence::parse("R")?,
    ];
    let tableau = Tableau::enumerate(chain, 2)?;
    let beliefs = vec![Belief::interval(0, 0.5, 0.7)?, Belief::point(1, 0.9)?];
    let bounds = entail_interval(&tableau, &beliefs, 2)?;
    println!("with Pr(Q) in [0.5, 0.7] and Pr(Q -> R) = 0.9: Pr(R) in {bounds}");
    Ok(())
}
