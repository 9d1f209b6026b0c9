//! Linear constraint systems over world weights.
//!
//! A sentence row with no don't-cares pins the sentence's prior to one sum
//! of world weights, so a point belief becomes an equality. A row with
//! don't-cares only brackets the prior: some unknown share of each
//! don't-care world's weight counts toward the sentence being true, so a
//! point belief becomes a pair of opposite-sense inequalities — the lower
//! bounding sum omits the don't-care worlds, the upper bounding sum includes
//! them. Interval beliefs bound the lower sum by the interval's top and the
//! upper sum by its bottom. Every system implicitly carries the
//! normalization (weights sum to one) and non-negativity constraints.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::worlds::{Tableau, TruthValue};

/// Tolerance used when validating probabilities read from input.
pub const PROBABILITY_TOL: f64 = 1e-9;

/// A prior belief about one source sentence.
#[derive(Debug, Clone, PartialEq)]
pub struct Belief {
    sentence_index: usize,
    kind: BeliefKind,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BeliefKind {
    Point(f64),
    Interval { lo: f64, hi: f64 },
}

impl Belief {
    pub fn point(sentence_index: usize, p: f64) -> Result<Belief> {
        Ok(Belief {
            sentence_index,
            kind: BeliefKind::Point(validate_probability(p)?),
        })
    }

    pub fn interval(sentence_index: usize, lo: f64, hi: f64) -> Result<Belief> {
        let lo = validate_probability(lo)?;
        let hi = validate_probability(hi)?;
        if lo > hi {
            return Err(Error::InvalidInterval { lo, hi });
        }
        Ok(Belief {
            sentence_index,
            kind: BeliefKind::Interval { lo, hi },
        })
    }

    pub fn sentence_index(&self) -> usize {
        self.sentence_index
    }

    pub fn kind(&self) -> BeliefKind {
        self.kind
    }
}

/// Validates a probability, absorbing up to [`PROBABILITY_TOL`] of rounding.
pub fn validate_probability(p: f64) -> Result<f64> {
    if !p.is_finite() || !(-PROBABILITY_TOL..=1.0 + PROBABILITY_TOL).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    Ok(p.clamp(0.0, 1.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

impl std::fmt::Display for Relation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Relation::Le => "<=",
            Relation::Eq => "=",
            Relation::Ge => ">=",
        })
    }
}

/// One linear row: `coeffs · W <relation> rhs`. Coefficients are 0 or 1,
/// one per world.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearConstraint {
    pub coeffs: Vec<f64>,
    pub relation: Relation,
    pub rhs: f64,
}

/// The target's bound rows: `lower · W` and `upper · W` bracket the
/// sentence's prior. They carry no right-hand side; entailment optimizes
/// them.
#[derive(Debug, Clone, PartialEq)]
pub struct TargetBounds {
    pub sentence_index: usize,
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
}

impl TargetBounds {
    fn bound_row_count(&self) -> usize {
        if self.lower == self.upper {
            1
        } else {
            2
        }
    }
}

/// Belief-derived constraints plus target bound rows over a fixed number of
/// worlds. Normalization and non-negativity are always present implicitly;
/// [`crate::solve`] enforces them.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstraintSystem {
    world_count: usize,
    constraints: Vec<LinearConstraint>,
    targets: Vec<TargetBounds>,
}

impl ConstraintSystem {
    /// A system with no sentence-derived rows.
    pub fn empty(world_count: usize) -> ConstraintSystem {
        ConstraintSystem {
            world_count,
            constraints: Vec::new(),
            targets: Vec::new(),
        }
    }

    pub fn world_count(&self) -> usize {
        self.world_count
    }

    pub fn constraints(&self) -> &[LinearConstraint] {
        &self.constraints
    }

    pub fn targets(&self) -> &[TargetBounds] {
        &self.targets
    }

    pub fn sole_target(&self) -> Result<&TargetBounds> {
        match self.targets.as_slice() {
            [t] => Ok(t),
            _ => Err(Error::InvalidTableau(format!(
                "expected exactly one target, found {}",
                self.targets.len()
            ))),
        }
    }

    /// System size: sentence-derived rows (a target row with don't-cares
    /// counts its two bounds) times the world count. Normalization and
    /// non-negativity are excluded.
    pub fn size(&self) -> usize {
        let rows = self.constraints.len()
            + self
                .targets
                .iter()
                .map(TargetBounds::bound_row_count)
                .sum::<usize>();
        rows * self.world_count
    }

    /// Text dump, one row per line: `coeffs… <rel> rhs`, belief rows first,
    /// then the normalization row.
    pub fn render_rows(&self) -> String {
        let mut out = String::new();
        for c in &self.constraints {
            let _ = writeln!(
                out,
                "{} {} {}",
                coeff_text(&c.coeffs),
                c.relation,
                format_probability(c.rhs)
            );
        }
        let _ = writeln!(
            out,
            "{} = {}",
            coeff_text(&vec![1.0; self.world_count]),
            format_probability(1.0)
        );
        out
    }
}

fn coeff_text(coeffs: &[f64]) -> String {
    coeffs
        .iter()
        .map(|c| format!("{}", c.round() as i64))
        .collect::<Vec<_>>()
        .join(" ")
}

fn format_probability(p: f64) -> String {
    let p = if p == 0.0 { 0.0 } else { p };
    format!("{p:.6}")
}

/// Lower and upper bound rows for one sentence: the lower row selects worlds
/// where the sentence is true, the upper row also selects don't-care worlds.
pub fn bound_rows(tableau: &Tableau, sentence_index: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    let row = tableau.row(sentence_index)?;
    let lower: Vec<f64> = row
        .iter()
        .map(|v| if *v == TruthValue::True { 1.0 } else { 0.0 })
        .collect();
    let upper: Vec<f64> = row
        .iter()
        .map(|v| {
            if matches!(v, TruthValue::True | TruthValue::DontCare) {
                1.0
            } else {
                0.0
            }
        })
        .collect();
    Ok((lower, upper))
}

/// Builds the constraint system for a tableau and prior beliefs. Beliefs
/// must attach to source sentences; every target contributes its bound rows.
pub fn build_system(tableau: &Tableau, beliefs: &[Belief]) -> Result<ConstraintSystem> {
    let mut constraints = Vec::new();
    for belief in beliefs {
        let index = belief.sentence_index();
        if index >= tableau.source_count() {
            return Err(Error::BeliefOnNonSource { index });
        }
        let (lower, upper) = bound_rows(tableau, index)?;
        match belief.kind() {
            BeliefKind::Point(p) => {
                if lower == upper {
                    constraints.push(LinearConstraint {
                        coeffs: lower,
                        relation: Relation::Eq,
                        rhs: p,
                    });
                } else {
                    constraints.push(LinearConstraint {
                        coeffs: lower,
                        relation: Relation::Le,
                        rhs: p,
                    });
                    constraints.push(LinearConstraint {
                        coeffs: upper,
                        relation: Relation::Ge,
                        rhs: p,
                    });
                }
            }
            BeliefKind::Interval { lo, hi } => {
                constraints.push(LinearConstraint {
                    coeffs: lower,
                    relation: Relation::Le,
                    rhs: hi,
                });
                constraints.push(LinearConstraint {
                    coeffs: upper,
                    relation: Relation::Ge,
                    rhs: lo,
                });
            }
        }
    }
    let mut targets = Vec::new();
    for index in tableau.source_count()..tableau.sentence_count() {
        let (lower, upper) = bound_rows(tableau, index)?;
        targets.push(TargetBounds {
            sentence_index: index,
            lower,
            upper,
        });
    }
    Ok(ConstraintSystem {
        world_count: tableau.world_count(),
        constraints,
        targets,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sentence::Sentence;
    use crate::worlds::World;

    fn schema3() -> Tableau {
        Tableau::conjunctive_mp(3).unwrap()
    }

    fn point(i: usize, p: f64) -> Belief {
        Belief::point(i, p).unwrap()
    }

    #[test]
    fn bound_rows_for_dc_sentence() {
        let t = schema3();
        let (lower, upper) = bound_rows(&t, 1).unwrap();
        assert_eq!(lower, vec![1.0, 1.0, 1.0, 0.0, 0.0]);
        assert_eq!(upper, vec![1.0, 1.0, 1.0, 0.0, 1.0]);
    }

    #[test]
    fn bound_rows_for_target() {
        let t = schema3();
        let (lower, upper) = bound_rows(&t, 4).unwrap();
        assert_eq!(lower, vec![1.0, 0.0, 0.0, 0.0, 0.0]);
        assert_eq!(upper, vec![1.0, 0.0, 1.0, 1.0, 1.0]);
    }

    #[test]
    fn bound_rows_coincide_without_dc() {
        let t = schema3();
        let (lower, upper) = bound_rows(&t, 0).unwrap();
        assert_eq!(lower, upper);
        assert_eq!(lower, vec![1.0, 1.0, 1.0, 1.0, 0.0]);
    }

    #[test]
    fn bound_rows_reject_bad_index() {
        assert!(bound_rows(&schema3(), 9).is_err());
    }

    #[test]
    fn builds_the_eight_row_reference_system() {
        let t = schema3();
        let beliefs = vec![point(0, 0.8), point(1, 0.7), point(2, 0.6), point(3, 0.8)];
        let system = build_system(&t, &beliefs).unwrap();
        let expected = vec![
            LinearConstraint {
                coeffs: vec![1.0, 1.0, 1.0, 1.0, 0.0],
                relation: Relation::Eq,
                rhs: 0.8,
            },
            LinearConstraint {
                coeffs: vec![1.0, 1.0, 1.0, 0.0, 0.0],
                relation: Relation::Le,
                rhs: 0.7,
            },
            LinearConstraint {
                coeffs: vec![1.0, 1.0, 1.0, 0.0, 1.0],
                relation: Relation::Ge,
                rhs: 0.7,
            },
            LinearConstraint {
                coeffs: vec![1.0, 1.0, 0.0, 0.0, 0.0],
                relation: Relation::Le,
                rhs: 0.6,
            },
            LinearConstraint {
                coeffs: vec![1.0, 1.0, 0.0, 1.0, 1.0],
                relation: Relation::Ge,
                rhs: 0.6,
            },
            LinearConstraint {
                coeffs: vec![1.0, 0.0, 1.0, 1.0, 1.0],
                relation: Relation::Eq,
                rhs: 0.8,
            },
        ];
        assert_eq!(system.constraints(), expected.as_slice());
        let target = system.sole_target().unwrap();
        assert_eq!(target.sentence_index, 4);
        assert_eq!(target.lower, vec![1.0, 0.0, 0.0, 0.0, 0.0]);
        assert_eq!(target.upper, vec![1.0, 0.0, 1.0, 1.0, 1.0]);
        assert_eq!(system.size(), 40);
    }

    #[test]
    fn empty_beliefs_leave_only_the_target_rows() {
        let t = schema3();
        let system = build_system(&t, &[]).unwrap();
        assert!(system.constraints().is_empty());
        assert_eq!(system.targets().len(), 1);
    }

    #[test]
    fn interval_belief_becomes_opposite_bounds() {
        let t = schema3();
        let belief = Belief::interval(2, 0.5, 0.7).unwrap();
        let system = build_system(&t, &[belief]).unwrap();
        let expected = vec![
            LinearConstraint {
                coeffs: vec![1.0, 1.0, 0.0, 0.0, 0.0],
                relation: Relation::Le,
                rhs: 0.7,
            },
            LinearConstraint {
                coeffs: vec![1.0, 1.0, 0.0, 1.0, 1.0],
                relation: Relation::Ge,
                rhs: 0.5,
            },
        ];
        assert_eq!(system.constraints(), expected.as_slice());
    }

    /// Projection oracle for the interval translation: a weight vector over
    /// the compressed worlds is admissible exactly when some apportionment
    /// of each don't-care world's weight puts the sentence's prior inside
    /// the belief interval. The reachable prior range comes from the
    /// expansion semantics of each world, not from the bound rows.
    #[test]
    fn interval_system_matches_apportionment_oracle() {
        let t = schema3();
        let sentence_index = 2;
        let (lo, hi) = (0.5, 0.7);
        let system =
            build_system(&t, &[Belief::interval(sentence_index, lo, hi).unwrap()]).unwrap();

        let reachable = |w: &[f64]| -> (f64, f64) {
            let mut min = 0.0;
            let mut max = 0.0;
            for (j, world) in t.worlds().iter().enumerate() {
                let members = world.expand();
                let true_members = members
                    .iter()
                    .filter(|m| m.values()[sentence_index] == TruthValue::True)
                    .count();
                if true_members == members.len() {
                    min += w[j];
                    max += w[j];
                } else if true_members > 0 {
                    // Mixed expansion: any share of this weight can count.
                    max += w[j];
                }
            }
            (min, max)
        };

        // 0.1-step grid over the 5-world simplex.
        let steps = 10i32;
        let mut checked = 0;
        for a in 0..=steps {
            for b in 0..=steps - a {
                for c in 0..=steps - a - b {
                    for d in 0..=steps - a - b - c {
                        let e = steps - a - b - c - d;
                        let w: Vec<f64> = [a, b, c, d, e]
                            .iter()
                            .map(|v| f64::from(*v) / f64::from(steps))
                            .collect();
                        let implementation = system.constraints().iter().all(|con| {
                            let value: f64 = con.coeffs.iter().zip(&w).map(|(c, x)| c * x).sum();
                            match con.relation {
                                Relation::Le => value <= con.rhs + 1e-9,
                                Relation::Ge => value >= con.rhs - 1e-9,
                                Relation::Eq => (value - con.rhs).abs() <= 1e-9,
                            }
                        });
                        let (min, max) = reachable(&w);
                        let oracle = min <= hi + 1e-9 && max >= lo - 1e-9;
                        assert_eq!(implementation, oracle, "w = {w:?}");
                        checked += 1;
                    }
                }
            }
        }
        assert_eq!(checked, 1001);
    }

    #[test]
    fn rejects_belief_on_target() {
        let t = schema3();
        let err = build_system(&t, &[point(4, 0.5)]).unwrap_err();
        assert_eq!(err, Error::BeliefOnNonSource { index: 4 });
    }

    #[test]
    fn rejects_out_of_range_probabilities() {
        assert!(Belief::point(0, 1.5).is_err());
        assert!(Belief::point(0, -0.2).is_err());
        assert!(Belief::interval(0, 0.8, 0.3).is_err());
        // Values within tolerance clamp instead of failing.
        assert_eq!(
            Belief::point(0, 1.0 + 1e-12).unwrap().kind(),
            BeliefKind::Point(1.0)
        );
    }

    #[test]
    fn uncompressed_system_reproduces_the_equality_form() {
        let sentences: Vec<Sentence> = ["A1", "A2", "A3", "A1 & A2 & A3 -> B", "B"]
            .iter()
            .map(|t| Sentence::parse(t).unwrap())
            .collect();
        let t = Tableau::enumerate(sentences, 4).unwrap();
        let beliefs = vec![point(0, 0.8), point(1, 0.7), point(2, 0.6), point(3, 0.8)];
        let system = build_system(&t, &beliefs).unwrap();
        assert_eq!(system.constraints().len(), 4);
        assert!(system
            .constraints()
            .iter()
            .all(|c| c.relation == Relation::Eq));
        assert_eq!(system.size(), 80);
    }

    #[test]
    fn empty_system_has_size_zero() {
        assert_eq!(ConstraintSystem::empty(5).size(), 0);
    }

    #[test]
    fn lower_sum_never_exceeds_upper_sum() {
        let t = schema3();
        for i in 0..t.sentence_count() {
            let (lower, upper) = bound_rows(&t, i).unwrap();
            assert!(lower.iter().zip(&upper).all(|(l, u)| l <= u));
        }
    }

    #[test]
    fn renders_diffable_rows() {
        let t = Tableau::new(
            vec![Sentence::parse("Q").unwrap(), Sentence::parse("R").unwrap()],
            vec![
                World::new(vec![TruthValue::DontCare, TruthValue::True]),
                World::new(vec![TruthValue::True, TruthValue::False]),
            ],
            1,
        )
        .unwrap();
        let system = build_system(&t, &[point(0, 0.25)]).unwrap();
        assert_eq!(
            system.render_rows(),
            "0 1 <= 0.250000\n1 1 >= 0.250000\n1 1 = 1.000000\n"
        );
        assert_eq!(system.world_count(), 2);
    }
}
