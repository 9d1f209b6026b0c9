//! Bayesian revision from a posterior probability instead of likelihoods.
//!
//! When the analyst knows Pr(S|E) rather than Pr(E|S) and Pr(E|!S), the
//! posterior-to-prior ratios replace the conditionals in Bayes' formula;
//! dividing everything by Pr(E) cancels in normalization, so the posterior
//! over worlds comes out identical.

use plogic::revise::{auto_assess, bayes_update, realized_prior, world_conditionals, world_ratios};
use plogic::Tableau;

fn main() -> plogic::Result<()> {
    let tableau = Tableau::conjunctive_mp(3)?;
    let prior = vec![0.2; 5];
    let assessment = auto_assess(&tableau, &prior, 2, 0.6)?;

    // Likelihood route.
    let conditionals = world_conditionals(&tableau, 2, 0.8, 0.4, &assessment)?;
    let via_likelihood = bayes_update(&prior, &conditionals)?;

    // Posterior route: the pair (0.8, 0.4) at prior 0.6 corresponds to
    // Pr(A3|E) = 0.8 * 0.6 / (0.8 * 0.6 + 0.4 * 0.4) = 0.75.
    let p = realized_prior(&tableau, &prior, 2, &assessment)?;
    let ratios = world_ratios(&tableau, 2, 0.75, p, &assessment)?;
    println!("posterior-to-prior ratios: {ratios:?}");
    let via_posterior = bayes_update(&prior, &ratios)?;

    println!("posterior via likelihoods: {via_likelihood:?}");
    println!("posterior via ratios:      {via_posterior:?}");
    let agree = via_likelihood
        .iter()
        .zip(&via_posterior)
        .all(|(a, b)| (a - b).abs() < 1e-9);
    assert!(agree);
    println!("identical to 1e-9");
    Ok(())
}
