//! Linear programming over world weights.
//!
//! A dense two-phase primal simplex with Bland's anti-cycling rule. The
//! systems here are tiny once compressed, so the tableau is kept dense and
//! reduced costs are recomputed from the cost vector each iteration. The
//! normalization row confines every feasible point to the weight simplex,
//! which keeps the programs bounded.

use crate::constraints::{bound_rows, build_system, Belief, ConstraintSystem, Relation};
use crate::error::{Error, Result};
use crate::worlds::Tableau;

/// Pivot tolerance for the simplex.
pub const PIVOT_TOL: f64 = 1e-9;
/// Looser tolerance used to accept user-supplied weight vectors.
pub const FEASIBILITY_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Minimize,
    Maximize,
}

/// An optimal vertex: objective value and the weight vector attaining it.
#[derive(Debug, Clone, PartialEq)]
pub struct LpOptimum {
    pub value: f64,
    pub weights: Vec<f64>,
}

/// Outcome of a linear program. Unboundedness cannot occur on the weight
/// simplex and surfaces as [`Error::Unbounded`] instead.
#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal(LpOptimum),
    Infeasible,
}

impl LpOutcome {
    pub fn optimal(self) -> Result<LpOptimum> {
        match self {
            LpOutcome::Optimal(opt) => Ok(opt),
            LpOutcome::Infeasible => Err(Error::Infeasible),
        }
    }
}

/// A probability interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    /// Validates the pair as probabilities (within 1e-9) and clamps the
    /// endpoints into `[0, 1]`.
    pub fn new(lo: f64, hi: f64) -> Result<Interval> {
        const TOL: f64 = 1e-9;
        if !lo.is_finite() || !hi.is_finite() || lo < -TOL || hi > 1.0 + TOL || lo > hi + TOL {
            return Err(Error::InvalidInterval { lo, hi });
        }
        // Adding 0.0 turns a clamped -0.0 into +0.0 so it never prints a
        // minus sign.
        let lo = lo.clamp(0.0, 1.0) + 0.0;
        let hi = hi.clamp(0.0, 1.0) + 0.0;
        Ok(Interval { lo: lo.min(hi), hi })
    }

    pub fn contains(&self, p: f64) -> bool {
        self.lo - 1e-9 <= p && p <= self.hi + 1e-9
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{:.6}, {:.6}]", self.lo, self.hi)
    }
}

/// Solves `direction objective · W` subject to the system's constraints,
/// normalization, and non-negativity.
pub fn solve_lp(
    objective: &[f64],
    system: &ConstraintSystem,
    direction: Direction,
) -> Result<LpOutcome> {
    let n = system.world_count();
    if objective.len() != n {
        return Err(Error::WidthMismatch {
            expected: n,
            actual: objective.len(),
        });
    }
    if n == 0 {
        return Err(Error::WidthMismatch {
            expected: 1,
            actual: 0,
        });
    }
    for c in system.constraints() {
        if c.coeffs.len() != n {
            return Err(Error::WidthMismatch {
                expected: n,
                actual: c.coeffs.len(),
            });
        }
    }
    let mut simplex = Simplex::assemble(system);
    if !simplex.phase_one()? {
        return Ok(LpOutcome::Infeasible);
    }
    let signed: Vec<f64> = match direction {
        Direction::Minimize => objective.to_vec(),
        Direction::Maximize => objective.iter().map(|c| -c).collect(),
    };
    let value = simplex.phase_two(&signed)?;
    let weights = simplex.extract(n);
    let value = match direction {
        Direction::Minimize => value,
        Direction::Maximize => -value,
    };
    Ok(LpOutcome::Optimal(LpOptimum { value, weights }))
}

/// Checks a weight vector against every constraint, normalization, and
/// non-negativity within [`FEASIBILITY_TOL`].
pub fn feasible(system: &ConstraintSystem, weights: &[f64]) -> Result<bool> {
    if weights.len() != system.world_count() {
        return Err(Error::WidthMismatch {
            expected: system.world_count(),
            actual: weights.len(),
        });
    }
    if weights.iter().any(|w| *w < -FEASIBILITY_TOL) {
        return Ok(false);
    }
    let total: f64 = weights.iter().sum();
    if (total - 1.0).abs() > FEASIBILITY_TOL {
        return Ok(false);
    }
    Ok(system.constraints().iter().all(|c| {
        let value: f64 = c.coeffs.iter().zip(weights).map(|(a, w)| a * w).sum();
        match c.relation {
            Relation::Le => value <= c.rhs + FEASIBILITY_TOL,
            Relation::Ge => value >= c.rhs - FEASIBILITY_TOL,
            Relation::Eq => (value - c.rhs).abs() <= FEASIBILITY_TOL,
        }
    }))
}

/// Entailment interval for the target sentence: the minimum of its lower
/// bound row and the maximum of its upper bound row over all feasible
/// weight vectors, one linear program each.
pub fn entail_interval(
    tableau: &Tableau,
    beliefs: &[Belief],
    target_index: usize,
) -> Result<Interval> {
    let system = build_system(tableau, beliefs)?;
    let (lower, upper) = bound_rows(tableau, target_index)?;
    let lo = solve_lp(&lower, &system, Direction::Minimize)?
        .optimal()?
        .value;
    let hi = solve_lp(&upper, &system, Direction::Maximize)?
        .optimal()?
        .value;
    Interval::new(lo, hi)
}

/// Target interval at one chosen weight vector: `[lower · W, upper · W]`.
/// The vector must lie on the weight simplex within [`FEASIBILITY_TOL`].
pub fn target_interval_at(
    tableau: &Tableau,
    weights: &[f64],
    target_index: usize,
) -> Result<Interval> {
    if weights.len() != tableau.world_count() {
        return Err(Error::WidthMismatch {
            expected: tableau.world_count(),
            actual: weights.len(),
        });
    }
    let total: f64 = weights.iter().sum();
    if (total - 1.0).abs() > FEASIBILITY_TOL || weights.iter().any(|w| *w < -FEASIBILITY_TOL) {
        return Err(Error::InfeasibleWeights);
    }
    let (lower, upper) = bound_rows(tableau, target_index)?;
    let lo: f64 = lower.iter().zip(weights).map(|(a, w)| a * w).sum();
    let hi: f64 = upper.iter().zip(weights).map(|(a, w)| a * w).sum();
    Interval::new(lo, hi)
}

/// Dense simplex tableau in standard form. Columns are the structural
/// variables, then slacks/surpluses, then artificials, then the right-hand
/// side.
struct Simplex {
    rows: Vec<Vec<f64>>,
    basis: Vec<usize>,
    structural: usize,
    slack: usize,
    artificial: usize,
}

impl Simplex {
    fn assemble(system: &ConstraintSystem) -> Simplex {
        let n = system.world_count();
        // Normalization joins the explicit rows as an equality.
        let mut specs: Vec<(Vec<f64>, Relation, f64)> = system
            .constraints()
            .iter()
            .map(|c| (c.coeffs.clone(), c.relation, c.rhs))
            .collect();
        specs.push((vec![1.0; n], Relation::Eq, 1.0));

        let slack = specs
            .iter()
            .filter(|(_, r, _)| matches!(r, Relation::Le | Relation::Ge))
            .count();
        let artificial = specs
            .iter()
            .filter(|(_, r, _)| matches!(r, Relation::Ge | Relation::Eq))
            .count();
        let columns = n + slack + artificial + 1;
        let mut rows = Vec::with_capacity(specs.len());
        let mut basis = Vec::with_capacity(specs.len());
        let mut next_slack = 0;
        let mut next_artificial = 0;
        for (coeffs, relation, rhs) in specs {
            let mut row = vec![0.0; columns];
            // rhs must be nonnegative for the starting basis; probabilities
            // already are, but flip defensively.
            let flip = rhs < 0.0;
            let sign = if flip { -1.0 } else { 1.0 };
            for (j, a) in coeffs.iter().enumerate() {
                row[j] = a * sign;
            }
            row[columns - 1] = rhs * sign;
            let relation = if flip {
                match relation {
                    Relation::Le => Relation::Ge,
                    Relation::Ge => Relation::Le,
                    Relation::Eq => Relation::Eq,
                }
            } else {
                relation
            };
            let basic = match relation {
                Relation::Le => {
                    let col = n + next_slack;
                    next_slack += 1;
                    row[col] = 1.0;
                    col
                }
                Relation::Ge => {
                    let surplus = n + next_slack;
                    next_slack += 1;
                    row[surplus] = -1.0;
                    let col = n + slack + next_artificial;
                    next_artificial += 1;
                    row[col] = 1.0;
                    col
                }
                Relation::Eq => {
                    let col = n + slack + next_artificial;
                    next_artificial += 1;
                    row[col] = 1.0;
                    col
                }
            };
            rows.push(row);
            basis.push(basic);
        }
        Simplex {
            rows,
            basis,
            structural: n,
            slack,
            artificial,
        }
    }

    fn columns(&self) -> usize {
        self.structural + self.slack + self.artificial
    }

    fn is_artificial(&self, column: usize) -> bool {
        column >= self.structural + self.slack
    }

    fn rhs(&self, row: usize) -> f64 {
        self.rows[row][self.columns()]
    }

    /// Minimizes `cost · x` from the current basis with Bland's rule:
    /// entering column is the smallest index with a negative reduced cost,
    /// leaving row breaks ratio ties by the smallest basic variable.
    fn minimize(&mut self, cost: &[f64], allow_artificial: bool) -> Result<()> {
        loop {
            let mut entering = None;
            for j in 0..self.columns() {
                if !allow_artificial && self.is_artificial(j) {
                    continue;
                }
                if self.basis.contains(&j) {
                    continue;
                }
                if self.reduced_cost(cost, j) < -PIVOT_TOL {
                    entering = Some(j);
                    break;
                }
            }
            let Some(j) = entering else {
                return Ok(());
            };
            let mut leaving: Option<(usize, f64)> = None;
            for i in 0..self.rows.len() {
                let a = self.rows[i][j];
                if a > PIVOT_TOL {
                    let ratio = self.rhs(i) / a;
                    let better = match leaving {
                        None => true,
                        Some((best_row, best_ratio)) => {
                            ratio < best_ratio - PIVOT_TOL
                                || (ratio < best_ratio + PIVOT_TOL
                                    && self.basis[i] < self.basis[best_row])
                        }
                    };
                    if better {
                        leaving = Some((i, ratio));
                    }
                }
            }
            let Some((pivot_row, _)) = leaving else {
                return Err(Error::Unbounded);
            };
            self.pivot(pivot_row, j);
        }
    }

    fn reduced_cost(&self, cost: &[f64], column: usize) -> f64 {
        let direct = cost.get(column).copied().unwrap_or(0.0);
        let basic: f64 = (0..self.rows.len())
            .map(|i| cost.get(self.basis[i]).copied().unwrap_or(0.0) * self.rows[i][column])
            .sum();
        direct - basic
    }

    fn objective_value(&self, cost: &[f64]) -> f64 {
        (0..self.rows.len())
            .map(|i| cost.get(self.basis[i]).copied().unwrap_or(0.0) * self.rhs(i))
            .sum()
    }

    fn pivot(&mut self, pivot_row: usize, pivot_col: usize) {
        let width = self.columns() + 1;
        let factor = self.rows[pivot_row][pivot_col];
        for j in 0..width {
            self.rows[pivot_row][j] /= factor;
        }
        for i in 0..self.rows.len() {
            if i == pivot_row {
                continue;
            }
            let multiple = self.rows[i][pivot_col];
            if multiple == 0.0 {
                continue;
            }
            for j in 0..width {
                self.rows[i][j] -= multiple * self.rows[pivot_row][j];
            }
        }
        self.basis[pivot_row] = pivot_col;
    }

    /// Phase 1: minimize the artificial mass. Returns false on infeasible.
    fn phase_one(&mut self) -> Result<bool> {
        let mut cost = vec![0.0; self.columns()];
        for (j, c) in cost.iter_mut().enumerate() {
            if j >= self.structural + self.slack {
                *c = 1.0;
            }
        }
        self.minimize(&cost, true)?;
        if self.objective_value(&cost) > PIVOT_TOL {
            return Ok(false);
        }
        // Pivot leftover artificials out of the basis where possible;
        // rows that stay artificial are redundant and inert.
        for i in 0..self.rows.len() {
            if !self.is_artificial(self.basis[i]) {
                continue;
            }
            let replacement =
                (0..self.structural + self.slack).find(|j| self.rows[i][*j].abs() > PIVOT_TOL);
            if let Some(j) = replacement {
                self.pivot(i, j);
            }
        }
        Ok(true)
    }

    /// Phase 2: minimize the real objective over non-artificial columns.
    fn phase_two(&mut self, objective: &[f64]) -> Result<f64> {
        let mut cost = vec![0.0; self.columns()];
        cost[..objective.len()].copy_from_slice(objective);
        self.minimize(&cost, false)?;
        Ok(self.objective_value(&cost))
    }

    fn extract(&self, n: usize) -> Vec<f64> {
        let mut weights = vec![0.0; n];
        for i in 0..self.rows.len() {
            let var = self.basis[i];
            if var < n {
                weights[var] = self.rhs(i).max(0.0);
            }
        }
        weights
    }
}
