//! Bayesian revision of a representative prior, likelihood form.
//!
//! Revision works on one chosen solution of the constraint system. The
//! don't-care cells of the evidence sentence are first replaced by assessed
//! Pr(S|world) values consistent with that solution; the per-world evidence
//! conditionals then follow, and Bayes' rule gives the posterior over
//! worlds and the revised target interval.

use plogic::revise::{auto_assess, bayes_update, select_prior, world_conditionals, PriorStrategy};
use plogic::solve::target_interval_at;
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

    // The analyst picks any solution of the system; here the uniform one.
    let prior = select_prior(&system, PriorStrategy::User(&[0.2; 5]))?;
    println!("prior over worlds: {prior:?}");
    println!(
        "target interval at the prior: {}",
        target_interval_at(&tableau, &prior, 4)?
    );

    // Fill the don't-care cells of A3 consistently with Pr(A3) = 0.6.
    let assessment = auto_assess(&tableau, &prior, 2, 0.6)?;
    println!(
        "assessed Pr(A3|world) at don't-cares: {:?}",
        assessment.values()
    );

    // Evidence bearing on A3: Pr(E|A3) = 0.8, Pr(E|!A3) = 0.4.
    let conditionals = world_conditionals(&tableau, 2, 0.8, 0.4, &assessment)?;
    println!("world conditionals: {conditionals:?}");

    let posterior = bayes_update(&prior, &conditionals)?;
    println!("posterior over worlds: {posterior:?}");
    println!(
        "target interval after revision: {}",
        target_interval_at(&tableau, &posterior, 4)?
    );
    Ok(())
}
