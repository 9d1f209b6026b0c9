//! Bayesian revision of a representative prior over compressed worlds.
//!
//! Revision against evidence works on one chosen feasible weight vector
//! rather than the whole feasible set. Where the evidence sentence is true
//! or false in a world, its conditional is just Pr(E|S) or Pr(E|¬S); where
//! it is don't-care, the analyst first assesses Pr(S|j) for that world, and
//! the conditional becomes the assessment-weighted average of the two.
//! Posterior-form evidence replaces the conditionals with posterior-to-
//! prior ratios, which normalize to the same posterior.

use std::collections::BTreeMap;

use crate::constraints::{bound_rows, validate_probability, ConstraintSystem};
use crate::error::{Error, Result};
use crate::solve::{feasible, solve_lp, target_interval_at, Direction, Interval};
use crate::worlds::{Tableau, TruthValue};

/// Tolerance for assessment consistency checks against a prior.
pub const ASSESSMENT_TOL: f64 = 1e-6;

/// Pr(sentence | world) estimates for the don't-care cells of one sentence.
#[derive(Debug, Clone, PartialEq)]
pub struct Assessment {
    sentence_index: usize,
    values: BTreeMap<usize, f64>,
}

impl Assessment {
    /// Validates that every key is a don't-care cell of the sentence's row
    /// and every value is a probability.
    pub fn new(
        tableau: &Tableau,
        sentence_index: usize,
        values: BTreeMap<usize, f64>,
    ) -> Result<Assessment> {
        let row = tableau.row(sentence_index)?;
        for (&world, &value) in &values {
            if world >= row.len() || row[world] != TruthValue::DontCare {
                return Err(Error::AssessmentKeyNotDc {
                    sentence: sentence_index,
                    world,
                });
            }
            if !(0.0..=1.0).contains(&value) {
                return Err(Error::AssessmentOutOfRange(value));
            }
        }
        Ok(Assessment {
            sentence_index,
            values,
        })
    }

    pub fn empty(sentence_index: usize) -> Assessment {
        Assessment {
            sentence_index,
            values: BTreeMap::new(),
        }
    }

    pub fn sentence_index(&self) -> usize {
        self.sentence_index
    }

    pub fn values(&self) -> &BTreeMap<usize, f64> {
        &self.values
    }

    pub fn value_at(&self, world: usize) -> Option<f64> {
        self.values.get(&world).copied()
    }
}

/// Evidence bearing on one sentence, in likelihood or posterior form.
#[derive(Debug, Clone, PartialEq)]
pub struct Evidence {
    sentence_index: usize,
    form: EvidenceForm,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EvidenceForm {
    /// Pr(E | S) and Pr(E | ¬S).
    Likelihood { given_true: f64, given_false: f64 },
    /// Pr(S | E).
    Posterior { probability: f64 },
}

impl Evidence {
    pub fn likelihood(
        sentence_index: usize,
        given_true: f64,
        given_false: f64,
    ) -> Result<Evidence> {
        Ok(Evidence {
            sentence_index,
            form: EvidenceForm::Likelihood {
                given_true: validate_probability(given_true)?,
                given_false: validate_probability(given_false)?,
            },
        })
    }

    pub fn posterior(sentence_index: usize, probability: f64) -> Result<Evidence> {
        Ok(Evidence {
            sentence_index,
            form: EvidenceForm::Posterior {
                probability: validate_probability(probability)?,
            },
        })
    }

    pub fn sentence_index(&self) -> usize {
        self.sentence_index
    }

    pub fn form(&self) -> EvidenceForm {
        self.form
    }
}

/// How to pick the representative prior.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PriorStrategy<'a> {
    /// Validate and use this vector.
    User(&'a [f64]),
    /// Average of the two vertices found by the target-bound programs;
    /// feasible by convexity.
    Midpoint,
    /// Any simplex-optimal basic feasible solution.
    Vertex,
}

/// Everything the revision pipeline produces for one evidence observation.
#[derive(Debug, Clone, PartialEq)]
pub struct RevisionResult {
    /// Per-world conditionals Pr(E|j), or posterior-to-prior ratios for
    /// posterior-form evidence.
    pub world_factors: Vec<f64>,
    pub posterior: Vec<f64>,
    pub target_interval: Interval,
    pub target_point: Option<f64>,
}

/// Runs one full revision against a chosen prior: world factors from the
/// evidence, the Bayes update, and the revised target interval, plus a
/// point estimate when the target's own don't-cares are assessed. For
/// posterior-form evidence the sentence prior is the one realized by the
/// weights and the assessment.
pub fn apply_evidence(
    tableau: &Tableau,
    prior: &[f64],
    evidence: &Evidence,
    evidence_assessment: &Assessment,
    target_index: usize,
    target_assessment: Option<&Assessment>,
) -> Result<RevisionResult> {
    let sentence = evidence.sentence_index();
    let world_factors = match evidence.form() {
        EvidenceForm::Likelihood {
            given_true,
            given_false,
        } => world_conditionals(
            tableau,
            sentence,
            given_true,
            given_false,
            evidence_assessment,
        )?,
        EvidenceForm::Posterior { probability } => {
            let realized = realized_prior(tableau, prior, sentence, evidence_assessment)?;
            world_ratios(
                tableau,
                sentence,
                probability,
                realized,
                evidence_assessment,
            )?
        }
    };
    let posterior = bayes_update(prior, &world_factors)?;
    let target_interval = target_interval_at(tableau, &posterior, target_index)?;
    let target_point = target_assessment
        .map(|a| posterior_target_point(tableau, &posterior, target_index, a))
        .transpose()?;
    Ok(RevisionResult {
        world_factors,
        posterior,
        target_interval,
        target_point,
    })
}

/// Chooses a representative prior solving the system.
pub fn select_prior(system: &ConstraintSystem, strategy: PriorStrategy<'_>) -> Result<Vec<f64>> {
    match strategy {
        PriorStrategy::User(weights) => {
            if feasible(system, weights)? {
                Ok(weights.to_vec())
            } else {
                Err(Error::InfeasibleWeights)
            }
        }
        PriorStrategy::Midpoint => {
            let target = system.sole_target()?;
            let at_min = solve_lp(&target.lower, system, Direction::Minimize)?
                .optimal()?
                .weights;
            let at_max = solve_lp(&target.upper, system, Direction::Maximize)?
                .optimal()?
                .weights;
            Ok(at_min
                .iter()
                .zip(&at_max)
                .map(|(a, b)| (a + b) / 2.0)
                .collect())
        }
        PriorStrategy::Vertex => {
            let zero = vec![0.0; system.world_count()];
            Ok(solve_lp(&zero, system, Direction::Minimize)?
                .optimal()?
                .weights)
        }
    }
}

/// Fills every don't-care cell of a sentence with the single value that
/// makes the assessed prior match `prior_p` under `weights`:
/// `c = (p − lower·W) / Σ(don't-care weights)`.
pub fn auto_assess(
    tableau: &Tableau,
    weights: &[f64],
    sentence_index: usize,
    prior_p: f64,
) -> Result<Assessment> {
    let row = tableau.row(sentence_index)?;
    expect_width(tableau, weights)?;
    let (lower, _) = bound_rows(tableau, sentence_index)?;
    let base: f64 = lower.iter().zip(weights).map(|(a, w)| a * w).sum();
    let dc_cells: Vec<usize> = row
        .iter()
        .enumerate()
        .filter(|(_, v)| **v == TruthValue::DontCare)
        .map(|(j, _)| j)
        .collect();
    if dc_cells.is_empty() {
        return Err(Error::NothingToAssess {
            index: sentence_index,
        });
    }
    let dc_mass: f64 = dc_cells.iter().map(|&j| weights[j]).sum();
    if dc_mass <= 1e-9 {
        if (prior_p - base).abs() <= 1e-9 {
            // No weight to apportion and nothing left to explain.
            let values = dc_cells.iter().map(|&j| (j, 0.0)).collect();
            return Assessment::new(tableau, sentence_index, values);
        }
        return Err(Error::ZeroDcMass {
            prior: prior_p,
            base,
        });
    }
    let c = (prior_p - base) / dc_mass;
    if !(-1e-9..=1.0 + 1e-9).contains(&c) {
        return Err(Error::AssessmentOutOfRange(c));
    }
    let c = c.clamp(0.0, 1.0);
    let values = dc_cells.iter().map(|&j| (j, c)).collect();
    Assessment::new(tableau, sentence_index, values)
}

/// True iff `lower·W + Σ a_j W_j` reproduces the prior within 1e-6.
pub fn check_assessment(
    tableau: &Tableau,
    weights: &[f64],
    sentence_index: usize,
    prior_p: f64,
    assessment: &Assessment,
) -> Result<bool> {
    Ok(
        (realized_prior(tableau, weights, sentence_index, assessment)? - prior_p).abs()
            <= ASSESSMENT_TOL,
    )
}

/// The sentence's prior realized by a weight vector and an assessment of
/// its don't-care cells.
pub fn realized_prior(
    tableau: &Tableau,
    weights: &[f64],
    sentence_index: usize,
    assessment: &Assessment,
) -> Result<f64> {
    let row = tableau.row(sentence_index)?;
    expect_width(tableau, weights)?;
    let mut total = 0.0;
    for (j, value) in row.iter().enumerate() {
        match value {
            TruthValue::True => total += weights[j],
            TruthValue::False => {}
            TruthValue::DontCare => {
                let a = assessment.value_at(j).ok_or(Error::MissingAssessment {
                    sentence: sentence_index,
                    world: j,
                })?;
                total += a * weights[j];
            }
        }
    }
    Ok(total)
}

/// Per-world conditionals Pr(E|j) for likelihood evidence on a sentence:
/// Pr(E|S) where it is true, Pr(E|¬S) where false, and the assessment-
/// weighted average where don't-care.
pub fn world_conditionals(
    tableau: &Tableau,
    sentence_index: usize,
    given_true: f64,
    given_false: f64,
    assessment: &Assessment,
) -> Result<Vec<f64>> {
    let row = tableau.row(sentence_index)?;
    row.iter()
        .enumerate()
        .map(|(j, value)| match value {
            TruthValue::True => Ok(given_true),
            TruthValue::False => Ok(given_false),
            TruthValue::DontCare => {
                let a = assessment.value_at(j).ok_or(Error::MissingAssessment {
                    sentence: sentence_index,
                    world: j,
                })?;
                Ok(a * given_true + (1.0 - a) * given_false)
            }
        })
        .collect()
}

/// Posterior-to-prior ratios for posterior-form evidence. The sentence's
/// prior must be strictly interior so neither ratio divides by zero.
pub fn world_ratios(
    tableau: &Tableau,
    sentence_index: usize,
    posterior_probability: f64,
    prior_p: f64,
    assessment: &Assessment,
) -> Result<Vec<f64>> {
    if !(prior_p > 0.0 && prior_p < 1.0) {
        return Err(Error::DegeneratePrior(prior_p));
    }
    let ratio_true = posterior_probability / prior_p;
    let ratio_false = (1.0 - posterior_probability) / (1.0 - prior_p);
    let row = tableau.row(sentence_index)?;
    row.iter()
        .enumerate()
        .map(|(j, value)| match value {
            TruthValue::True => Ok(ratio_true),
            TruthValue::False => Ok(ratio_false),
            TruthValue::DontCare => {
                let a = assessment.value_at(j).ok_or(Error::MissingAssessment {
                    sentence: sentence_index,
                    world: j,
                })?;
                Ok(a * ratio_true + (1.0 - a) * ratio_false)
            }
        })
        .collect()
}

/// Bayes' rule over worlds: posterior_j = factor_j · W_j / Σ factor · W.
pub fn bayes_update(prior: &[f64], factors: &[f64]) -> Result<Vec<f64>> {
    if prior.len() != factors.len() {
        return Err(Error::WidthMismatch {
            expected: prior.len(),
            actual: factors.len(),
        });
    }
    let total: f64 = prior.iter().zip(factors).map(|(w, c)| w * c).sum();
    if total <= 1e-12 {
        return Err(Error::ZeroLikelihood);
    }
    Ok(prior
        .iter()
        .zip(factors)
        .map(|(w, c)| (w * c / total).max(0.0))
        .collect())
}

/// Point estimate for the target under a posterior: worlds where the target
/// is true contribute fully, don't-care worlds by their assessed share.
pub fn posterior_target_point(
    tableau: &Tableau,
    posterior: &[f64],
    target_index: usize,
    assessment: &Assessment,
) -> Result<f64> {
    expect_width(tableau, posterior)?;
    realized_prior(tableau, posterior, target_index, assessment)
}

fn expect_width(tableau: &Tableau, weights: &[f64]) -> Result<()> {
    if weights.len() != tableau.world_count() {
        return Err(Error::WidthMismatch {
            expected: tableau.world_count(),
            actual: weights.len(),
        });
    }
    Ok(())
}
