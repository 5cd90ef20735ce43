//! Dense two-phase simplex over exact rationals.
//!
//! Problems are `maximize c·x subject to rows, x >= 0`. The solver reports a
//! certificate against the caller's original constraint list:
//!
//! - optimal: multipliers `y` with `y_r >= 0` on `<=` rows, `y_r <= 0` on
//!   `>=` rows, free on `=` rows, `Aᵀy >= c` and `b·y = c·x*`;
//! - infeasible: multipliers with the same sign pattern, `Aᵀy >= 0` and
//!   `b·y < 0` (a Farkas ray).
//!
//! Pivoting follows Bland's lowest-index rule, which both fixes the pivot
//! sequence and rules out cycling.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::constraints::{LinearConstraint, Sense};
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Variable {
    pub key: u32,
    pub label: String,
}

/// `maximize objective · x` subject to `constraints` and `x >= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpProblem {
    pub variables: Vec<Variable>,
    pub objective: BTreeMap<u32, Rational>,
    pub constraints: Vec<LinearConstraint>,
}

impl LpProblem {
    pub fn new(
        variables: Vec<Variable>,
        objective: BTreeMap<u32, Rational>,
        constraints: Vec<LinearConstraint>,
    ) -> Result<Self> {
        let p = LpProblem { variables, objective, constraints };
        p.validate()?;
        Ok(p)
    }

    /// Maximize the plain sum of all variables.
    pub fn maximize_sum(variables: Vec<Variable>, constraints: Vec<LinearConstraint>) -> Result<Self> {
        let objective = variables.iter().map(|v| (v.key, Rational::one())).collect();
        Self::new(variables, objective, constraints)
    }

    pub fn validate(&self) -> Result<()> {
        let mut seen = std::collections::BTreeSet::new();
        for v in &self.variables {
            if !seen.insert(v.key) {
                return Err(Error::params(format!("variable key {} declared twice", v.key)));
            }
        }
        let undeclared = |k: &u32| !seen.contains(k);
        if let Some(k) = self.objective.keys().find(|k| undeclared(k)) {
            return Err(Error::params(format!("objective references undeclared variable {k}")));
        }
        for (idx, c) in self.constraints.iter().enumerate() {
            if let Some(k) = c.coefficients.keys().find(|k| undeclared(k)) {
                return Err(Error::params(format!(
                    "constraint {idx} ({}) references undeclared variable {k}",
                    c.provenance
                )));
            }
        }
        Ok(())
    }

    fn dense_row(&self, c: &LinearConstraint) -> Vec<Rational> {
        self.variables.iter().map(|v| c.coefficient(v.key)).collect()
    }

    fn dense_objective(&self) -> Vec<Rational> {
        self.variables
            .iter()
            .map(|v| self.objective.get(&v.key).cloned().unwrap_or_else(Rational::zero))
            .collect()
    }

    /// Objective value at `x` (indexed like `variables`).
    pub fn objective_value(&self, x: &[Rational]) -> Rational {
        self.dense_objective().iter().zip(x).map(|(c, v)| c * v).fold(Rational::zero(), |a, t| a + t)
    }

    pub fn point(&self, x: &[Rational]) -> BTreeMap<u32, Rational> {
        self.variables.iter().map(|v| v.key).zip(x.iter().cloned()).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

impl fmt::Display for LpStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LpStatus::Optimal => "optimal",
            LpStatus::Infeasible => "infeasible",
            LpStatus::Unbounded => "unbounded",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSolution {
    pub status: LpStatus,
    /// Present when optimal.
    pub optimum: Option<Rational>,
    /// One value per variable when optimal; empty otherwise.
    pub primal: Vec<Rational>,
    /// One multiplier per original constraint (optimality dual or Farkas ray);
    /// empty when unbounded.
    pub dual: Vec<Rational>,
    pub pivots: usize,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Column {
    Structural,
    Slack,
    Surplus,
    Artificial,
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    kinds: Vec<Column>,
    basis: Vec<usize>,
    /// The column that formed the initial identity for each row.
    unit_col: Vec<usize>,
    /// Row normalization factor (±1) applied so that `rhs >= 0`.
    row_sign: Vec<bool>,
    pivots: usize,
}

impl Tableau {
    fn build(p: &LpProblem) -> Self {
        let n = p.variables.len();
        let m = p.constraints.len();
        let mut kinds = vec![Column::Structural; n];
        let mut extra: Vec<(usize, Column, bool)> = Vec::new(); // (row, kind, positive)
        let mut rows = Vec::with_capacity(m);
        let mut rhs = Vec::with_capacity(m);
        let mut row_sign = Vec::with_capacity(m);
        let mut unit_col = vec![0; m];
        for (r, c) in p.constraints.iter().enumerate() {
            let mut row = p.dense_row(c);
            let mut b = c.rhs.clone();
            let mut sense = c.sense;
            let flip = b.is_negative();
            if flip {
                row.iter_mut().for_each(|v| *v = -v.clone());
                b = -b;
                sense = match sense {
                    Sense::Le => Sense::Ge,
                    Sense::Ge => Sense::Le,
                    Sense::Eq => Sense::Eq,
                };
            }
            match sense {
                Sense::Le => extra.push((r, Column::Slack, true)),
                Sense::Ge => {
                    extra.push((r, Column::Surplus, false));
                    extra.push((r, Column::Artificial, true));
                }
                Sense::Eq => extra.push((r, Column::Artificial, true)),
            }
            rows.push(row);
            rhs.push(b);
            row_sign.push(flip);
        }
        let total = n + extra.len();
        for row in rows.iter_mut() {
            row.resize(total, Rational::zero());
        }
        for (offset, (r, kind, positive)) in extra.into_iter().enumerate() {
            let col = n + offset;
            rows[r][col] = if positive { Rational::one() } else { -Rational::one() };
            kinds.push(kind);
            if kind != Column::Surplus {
                unit_col[r] = col;
            }
        }
        let basis = unit_col.clone();
        Tableau { rows, rhs, kinds, basis, unit_col, row_sign, pivots: 0 }
    }

    fn width(&self) -> usize {
        self.kinds.len()
    }

    fn pivot(&mut self, pr: usize, pc: usize) {
        let inv = Rational::one() / &self.rows[pr][pc];
        let nz: Vec<usize> = (0..self.width()).filter(|&j| !self.rows[pr][j].is_zero()).collect();
        for &j in &nz {
            self.rows[pr][j] *= &inv;
        }
        self.rhs[pr] *= &inv;
        let pivot_row = self.rows[pr].clone();
        let pivot_rhs = self.rhs[pr].clone();
        for r in 0..self.rows.len() {
            if r == pr || self.rows[r][pc].is_zero() {
                continue;
            }
            let f = self.rows[r][pc].clone();
            for &j in &nz {
                let delta = &f * &pivot_row[j];
                self.rows[r][j] -= delta;
            }
            self.rhs[r] -= &f * &pivot_rhs;
        }
        self.basis[pr] = pc;
        self.pivots += 1;
    }

    fn reduced_costs(&self, cost: &[Rational]) -> Vec<Rational> {
        let mut d = cost.to_vec();
        for (r, &b) in self.basis.iter().enumerate() {
            if cost[b].is_zero() {
                continue;
            }
            for (j, dj) in d.iter_mut().enumerate() {
                if !self.rows[r][j].is_zero() {
                    *dj -= &cost[b] * &self.rows[r][j];
                }
            }
        }
        d
    }

    fn objective(&self, cost: &[Rational]) -> Rational {
        self.basis
            .iter()
            .zip(&self.rhs)
            .map(|(&b, v)| &cost[b] * v)
            .fold(Rational::zero(), |a, t| a + t)
    }

    /// Runs Bland-rule pivots to optimality. Returns `false` on unboundedness.
    fn optimize(&mut self, cost: &[Rational], allowed: impl Fn(usize) -> bool) -> bool {
        loop {
            let d = self.reduced_costs(cost);
            let Some(enter) = (0..self.width()).find(|&j| allowed(j) && d[j].is_positive()) else {
                return true;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for r in 0..self.rows.len() {
                let a = &self.rows[r][enter];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[r] / a;
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => ratio < *best || (ratio == *best && self.basis[r] < self.basis[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, enter),
                None => return false,
            }
        }
    }

    /// Multipliers for the original rows given the final reduced costs.
    fn multipliers(&self, cost: &[Rational], d: &[Rational]) -> Vec<Rational> {
        (0..self.rows.len())
            .map(|r| {
                let u = self.unit_col[r];
                let y = &cost[u] - &d[u];
                if self.row_sign[r] {
                    -y
                } else {
                    y
                }
            })
            .collect()
    }
}

/// Solve `p` exactly.
pub fn solve(p: &LpProblem) -> LpSolution {
    let n = p.variables.len();
    let mut t = Tableau::build(p);
    let width = t.width();
    let is_art = |kinds: &[Column], j: usize| kinds[j] == Column::Artificial;

    // phase 1: maximize -Σ artificials
    let phase1: Vec<Rational> = t
        .kinds
        .iter()
        .map(|k| if *k == Column::Artificial { -Rational::one() } else { Rational::zero() })
        .collect();
    if t.kinds.contains(&Column::Artificial) {
        t.optimize(&phase1, |_| true);
        let value = t.objective(&phase1);
        if value.is_negative() {
            let d = t.reduced_costs(&phase1);
            let dual = t.multipliers(&phase1, &d);
            return LpSolution {
                status: LpStatus::Infeasible,
                optimum: None,
                primal: Vec::new(),
                dual,
                pivots: t.pivots,
            };
        }
        // drive zero-level artificials out where the row allows it
        for r in 0..t.rows.len() {
            if !is_art(&t.kinds, t.basis[r]) {
                continue;
            }
            if let Some(j) = (0..width).find(|&j| !is_art(&t.kinds, j) && !t.rows[r][j].is_zero()) {
                t.pivot(r, j);
            }
        }
    }

    // phase 2
    let dense = p.dense_objective();
    let mut cost = vec![Rational::zero(); width];
    cost[..n].clone_from_slice(&dense);
    let kinds = t.kinds.clone();
    if !t.optimize(&cost, |j| kinds[j] != Column::Artificial) {
        return LpSolution {
            status: LpStatus::Unbounded,
            optimum: None,
            primal: Vec::new(),
            dual: Vec::new(),
            pivots: t.pivots,
        };
    }
    let mut primal = vec![Rational::zero(); n];
    for (r, &b) in t.basis.iter().enumerate() {
        if b < n {
            primal[b] = t.rhs[r].clone();
        }
    }
    let d = t.reduced_costs(&cost);
    let dual = t.multipliers(&cost, &d);
    let optimum = p.objective_value(&primal);
    LpSolution { status: LpStatus::Optimal, optimum: Some(optimum), primal, dual, pivots: t.pivots }
}

/// First condition a certificate fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateViolation {
    Shape(String),
    PrimalNegative { variable: String },
    PrimalInfeasible { constraint: usize, provenance: String },
    ObjectiveMismatch,
    DualSign { constraint: usize, provenance: String },
    DualFeasibility { variable: String },
    DualityGap,
    FarkasNotNegative,
    NotCertifiable(LpStatus),
}

impl fmt::Display for CertificateViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use CertificateViolation::*;
        match self {
            Shape(msg) => write!(f, "shape: {msg}"),
            PrimalNegative { variable } => write!(f, "primal-feasibility: {variable} is negative"),
            PrimalInfeasible { constraint, provenance } => {
                write!(f, "primal-feasibility: constraint {constraint} ({provenance}) violated")
            }
            ObjectiveMismatch => write!(f, "objective: primal objective differs from claimed optimum"),
            DualSign { constraint, provenance } => {
                write!(f, "dual-feasibility: multiplier of constraint {constraint} ({provenance}) has the wrong sign")
            }
            DualFeasibility { variable } => {
                write!(f, "dual-feasibility: reduced cost of {variable} is violated")
            }
            DualityGap => write!(f, "duality-gap: dual objective differs from primal objective"),
            FarkasNotNegative => write!(f, "farkas: combined right-hand side is not negative"),
            NotCertifiable(s) => write!(f, "status {s} carries no certificate"),
        }
    }
}

/// Check a solution using exact arithmetic only, with no simplex state.
pub fn verify_certificate(p: &LpProblem, s: &LpSolution) -> std::result::Result<(), CertificateViolation> {
    use CertificateViolation::*;
    let m = p.constraints.len();
    if s.dual.len() != m {
        return Err(Shape(format!("{} multipliers for {m} constraints", s.dual.len())));
    }
    for (idx, (c, y)) in p.constraints.iter().zip(&s.dual).enumerate() {
        let ok = match c.sense {
            Sense::Le => !y.is_negative(),
            Sense::Ge => !y.is_positive(),
            Sense::Eq => true,
        };
        if !ok {
            return Err(DualSign { constraint: idx, provenance: c.provenance.to_string() });
        }
    }
    // Aᵀy per variable
    let combined: Vec<Rational> = p
        .variables
        .iter()
        .map(|v| {
            p.constraints
                .iter()
                .zip(&s.dual)
                .filter(|(_, y)| !y.is_zero())
                .map(|(c, y)| c.coefficient(v.key) * y)
                .fold(Rational::zero(), |a, t| a + t)
        })
        .collect();
    let dual_value = p
        .constraints
        .iter()
        .zip(&s.dual)
        .map(|(c, y)| &c.rhs * y)
        .fold(Rational::zero(), |a, t| a + t);

    match s.status {
        LpStatus::Optimal => {
            if s.primal.len() != p.variables.len() {
                return Err(Shape(format!(
                    "{} primal values for {} variables",
                    s.primal.len(),
                    p.variables.len()
                )));
            }
            if let Some((v, _)) = p.variables.iter().zip(&s.primal).find(|(_, x)| x.is_negative()) {
                return Err(PrimalNegative { variable: v.label.clone() });
            }
            let point = p.point(&s.primal);
            if let Some(idx) = p.constraints.iter().position(|c| !c.is_satisfied(&point)) {
                return Err(PrimalInfeasible { constraint: idx, provenance: p.constraints[idx].provenance.to_string() });
            }
            let value = p.objective_value(&s.primal);
            if s.optimum.as_ref() != Some(&value) {
                return Err(ObjectiveMismatch);
            }
            for (v, a) in p.variables.iter().zip(&combined) {
                let c = p.objective.get(&v.key).cloned().unwrap_or_else(Rational::zero);
                if *a < c {
                    return Err(DualFeasibility { variable: v.label.clone() });
                }
            }
            if dual_value != value {
                return Err(DualityGap);
            }
            Ok(())
        }
        LpStatus::Infeasible => {
            if let Some((v, _)) = p.variables.iter().zip(&combined).find(|(_, a)| a.is_negative()) {
                return Err(DualFeasibility { variable: v.label.clone() });
            }
            if !dual_value.is_negative() {
                return Err(FarkasNotNegative);
            }
            Ok(())
        }
        LpStatus::Unbounded => Err(NotCertifiable(LpStatus::Unbounded)),
    }
}

pub fn check_certificate(p: &LpProblem, s: &LpSolution) -> bool {
    verify_certificate(p, s).is_ok()
}
