//! Bound orchestration: parameter normalization, Johnson recursion, LP
//! assembly and size descent.
//!
//! A query for `A(n, d, w)` is first normalized. Small cases are answered
//! exactly; the rest are bounded by the minimum of the trivial bound
//! `C(n, w)`, the Johnson recursion, the LP bound `⌊max Σ A_{2i}⌋ + 1` and an
//! optional externally known bound. When the `columns` family is selected
//! that minimum seeds a descent: for each assumed size `M` the LP with the
//! size-dependent constraints and `Σ A_{2i} = M - 1` is solved, and an
//! infeasible system rules out size `M` (and hence every larger size).

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Mutex;

use log::debug;
use serde::{Deserialize, Serialize};

use crate::combinatorics::binomial_u64;
use crate::constraints::{
    binary_constraints, binary_size_equality, column_constraints, d_equal_constraints, deduplicate,
    delsarte_constraints, pair_and_set_constraints, size_equality, t_cap_constraints, CodeParams,
    ColumnSides, Family, LinearConstraint, PeerBoundSet, Provenance,
};
use crate::error::{Error, Result};
use crate::lp::{check_certificate, solve, LpProblem, LpSolution, LpStatus, Variable};
use crate::rational::{floor_plus_one, Rational};
use crate::tbound::{TBound, TBoundTable};

/// Outcome of [`normalize`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Normalized {
    Exact { value: u64, rule: String, steps: Vec<String> },
    Canonical { params: CodeParams, steps: Vec<String> },
}

impl Normalized {
    pub fn steps(&self) -> &[String] {
        match self {
            Normalized::Exact { steps, .. } | Normalized::Canonical { steps, .. } => steps,
        }
    }
}

/// Reduce `(n, d, w)` to an exact value or to canonical parameters with
/// `d` even, `4 <= d < 2w <= n`.
pub fn normalize(n: u32, d: u32, w: u32) -> Result<Normalized> {
    if n == 0 || d == 0 {
        return Err(Error::params(format!("A({n},{d},{w}): n and d must be positive")));
    }
    if w > n {
        return Err(Error::params(format!("A({n},{d},{w}): weight exceeds length")));
    }
    if n > 64 {
        return Err(Error::params(format!("A({n},{d},{w}): lengths above 64 are not supported")));
    }
    let mut steps = Vec::new();
    let mut d = d;
    let mut w = w;
    if d % 2 == 1 {
        steps.push(format!("odd distance: d {d} -> {}", d + 1));
        d += 1;
    }
    if 2 * w > n {
        steps.push(format!("complement: w {w} -> {}", n - w));
        w = n - w;
    }
    let exact = |value: u64, rule: &str, steps: Vec<String>| Normalized::Exact { value, rule: rule.to_string(), steps };
    if d == 2 {
        let v = binomial_u64(n as i64, w as i64).expect("n <= 64");
        return Ok(exact(v, "A(n,2,w) = C(n,w)", steps));
    }
    if 2 * w < d {
        return Ok(exact(1, "A(n,d,w) = 1 when 2w < d", steps));
    }
    if 2 * w == d {
        return Ok(exact((n / w) as u64, "A(n,2w,w) = floor(n/w)", steps));
    }
    Ok(Normalized::Canonical { params: CodeParams::new(n, d, w)?, steps })
}

/// Which query a result answers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Query {
    ConstantWeight { n: u32, d: u32, w: u32 },
    Binary { n: u32, d: u32 },
}

impl fmt::Display for Query {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Query::ConstantWeight { n, d, w } => write!(f, "A({n},{d},{w})"),
            Query::Binary { n, d } => write!(f, "A({n},{d})"),
        }
    }
}

/// How a bound was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Exact,
    Trivial,
    Johnson,
    Lp,
    KnownBound,
    Descent,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Exact => "exact",
            Method::Trivial => "trivial",
            Method::Johnson => "johnson",
            Method::Lp => "lp",
            Method::KnownBound => "known-bound",
            Method::Descent => "descent",
        })
    }
}

/// What an LP node proves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Claim {
    /// `A <= ⌊optimum⌋ + 1`.
    UpperBound { bound: u64 },
    /// No code of exactly this size exists.
    SizeExcluded { size: u64 },
    /// The system for this size is feasible; descent stops here.
    SizeFeasible { size: u64 },
    /// Optimal but no finite bound follows (e.g. the optimum overflows).
    None,
}

/// One solved LP with the constraints that went into it.
#[derive(Debug, Clone)]
pub struct LpNode {
    pub size: Option<u64>,
    pub problem: LpProblem,
    pub solution: LpSolution,
    pub claim: Claim,
}

impl LpNode {
    pub fn provenance(&self) -> Vec<String> {
        self.problem.constraints.iter().map(|c| c.provenance.to_string()).collect()
    }

    pub fn is_certified(&self) -> bool {
        check_certificate(&self.problem, &self.solution)
    }
}

/// Everything that went into a bound.
#[derive(Debug, Clone, Default)]
pub struct Derivation {
    pub normalization: Vec<String>,
    /// `(method, value)` for every bound that was considered.
    pub candidates: Vec<(Method, u64)>,
    pub johnson: Vec<String>,
    /// Sub-query answers the Johnson candidate rests on.
    pub johnson_cells: Vec<CellEntry>,
    pub lp_nodes: Vec<LpNode>,
    pub t_entries: Vec<TBound>,
}

#[derive(Debug, Clone)]
pub struct BoundResult {
    pub query: Query,
    pub canonical: Option<CodeParams>,
    pub bound: u64,
    pub method: Method,
    pub derivation: Derivation,
}

impl BoundResult {
    pub fn certificates_verify(&self) -> bool {
        self.derivation.lp_nodes.iter().all(LpNode::is_certified)
            && self.derivation.johnson_cells.iter().filter_map(|c| c.lp.as_ref()).all(LpNode::is_certified)
    }
}

/// Descent test used for each assumed size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum DescentMode {
    /// Add `Σ A = M - 1` and test feasibility.
    #[default]
    Infeasibility,
    /// Maximize `Σ A` and rule out `M` when `⌊max⌋ + 1 < M`.
    MaxForm,
}

#[derive(Debug, Clone)]
pub struct EngineConfig {
    pub families: BTreeSet<Family>,
    /// Column subset sizes `k`; `None` means `1..=min(n, 8)`.
    pub column_ks: Option<Vec<u32>>,
    pub column_sides: ColumnSides,
    pub descent_mode: DescentMode,
    pub use_johnson: bool,
    /// Externally established upper bound on the top-level query.
    pub known_bound: Option<u64>,
    pub max_descent_steps: u64,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            families: [Family::Delsarte, Family::TCap, Family::Pairs, Family::DPairs].into_iter().collect(),
            column_ks: None,
            column_sides: ColumnSides::Both,
            descent_mode: DescentMode::Infeasibility,
            use_johnson: true,
            known_bound: None,
            max_descent_steps: 10_000,
        }
    }
}

impl EngineConfig {
    pub fn with_families(families: impl IntoIterator<Item = Family>) -> Self {
        EngineConfig { families: families.into_iter().collect(), ..Default::default() }
    }

    pub fn ks_for(&self, n: u32) -> Vec<u32> {
        match &self.column_ks {
            Some(ks) => ks.clone(),
            None => (1..=n.min(8)).collect(),
        }
    }
}

/// Bound engine with a per-instance memo of sub-query answers.
pub struct Engine {
    table: TBoundTable,
    config: EngineConfig,
    memo: Mutex<HashMap<(u32, u32, u32), CellEntry>>,
}

/// Memoized answer for a sub-query, with the LP that supported it.
#[derive(Debug, Clone)]
pub struct CellEntry {
    pub params: CodeParams,
    pub bound: u64,
    pub lp: Option<LpNode>,
}

fn cw_variables(p: &CodeParams) -> Vec<Variable> {
    p.halves().map(|i| Variable { key: i, label: format!("A{}", 2 * i) }).collect()
}

fn binary_variables(n: u32, d: u32) -> Vec<Variable> {
    (d..=n).map(|i| Variable { key: i, label: format!("A{i}") }).collect()
}

impl Engine {
    pub fn new(table: TBoundTable, config: EngineConfig) -> Self {
        Engine { table, config, memo: Mutex::new(HashMap::new()) }
    }

    pub fn config(&self) -> &EngineConfig {
        &self.config
    }

    pub fn table(&self) -> &TBoundTable {
        &self.table
    }

    /// Size-independent constraints for the selected families.
    pub fn base_constraints(&self, p: &CodeParams) -> Result<(Vec<LinearConstraint>, Vec<TBound>)> {
        let fam = &self.config.families;
        let mut rows = Vec::new();
        let mut used = Vec::new();
        if fam.contains(&Family::Delsarte) {
            rows.extend(delsarte_constraints(p));
        }
        if fam.iter().any(Family::needs_peers) {
            let (peers, t) = PeerBoundSet::from_table(p, &self.table);
            used = t;
            if fam.contains(&Family::TCap) {
                rows.extend(t_cap_constraints(p, &peers)?);
            }
            if fam.contains(&Family::Pairs) {
                rows.extend(pair_and_set_constraints(p, &peers)?);
            }
            if fam.contains(&Family::DPairs) {
                rows.extend(d_equal_constraints(p, &peers)?);
            }
        }
        Ok((rows, used))
    }

    fn solve_node(&self, variables: Vec<Variable>, rows: Vec<LinearConstraint>, size: Option<u64>) -> Result<LpNode> {
        let problem = LpProblem::maximize_sum(variables, deduplicate(rows))?;
        let solution = solve(&problem);
        let claim = match (solution.status, size) {
            (LpStatus::Optimal, None) => match floor_plus_one(solution.optimum.as_ref().unwrap()) {
                Some(bound) => Claim::UpperBound { bound },
                None => Claim::None,
            },
            (LpStatus::Optimal, Some(m)) => Claim::SizeFeasible { size: m },
            (LpStatus::Infeasible, Some(m)) => Claim::SizeExcluded { size: m },
            (LpStatus::Infeasible, None) => {
                return Err(Error::Internal(
                    "size-independent constraint system is infeasible; a generator emitted an invalid row".into(),
                ))
            }
            (LpStatus::Unbounded, _) => Claim::None,
        };
        Ok(LpNode { size, problem, solution, claim })
    }

    /// `⌊max Σ A_{2i}⌋ + 1` over the size-independent families.
    /// Returns `None` for the bound when the LP is unbounded.
    pub fn lp_bound(&self, p: &CodeParams) -> Result<(Option<u64>, LpNode, Vec<TBound>)> {
        let (rows, used) = self.base_constraints(p)?;
        let node = self.solve_node(cw_variables(p), rows, None)?;
        let bound = match node.claim {
            Claim::UpperBound { bound } => Some(bound),
            _ => None,
        };
        Ok((bound, node, used))
    }

    /// One descent test at assumed size `m`.
    pub fn size_test(&self, p: &CodeParams, m: u64, mode: DescentMode) -> Result<(bool, LpNode)> {
        let (mut rows, _) = self.base_constraints(p)?;
        if self.config.families.contains(&Family::Columns) && m >= 2 {
            rows.extend(column_constraints(p, m, &self.config.ks_for(p.n), self.config.column_sides)?);
        }
        match mode {
            DescentMode::Infeasibility => {
                rows.push(size_equality(p, m));
                let node = self.solve_node(cw_variables(p), rows, Some(m))?;
                let excluded = node.solution.status == LpStatus::Infeasible;
                Ok((excluded, node))
            }
            DescentMode::MaxForm => {
                let problem = LpProblem::maximize_sum(cw_variables(p), deduplicate(rows))?;
                let solution = solve(&problem);
                let excluded = match solution.status {
                    LpStatus::Infeasible => true,
                    LpStatus::Optimal => {
                        floor_plus_one(solution.optimum.as_ref().unwrap()).is_some_and(|b| b < m)
                    }
                    LpStatus::Unbounded => false,
                };
                let claim = match solution.status {
                    LpStatus::Optimal => match floor_plus_one(solution.optimum.as_ref().unwrap()) {
                        Some(bound) => Claim::UpperBound { bound },
                        None => Claim::None,
                    },
                    LpStatus::Infeasible => Claim::SizeExcluded { size: m },
                    LpStatus::Unbounded => Claim::None,
                };
                Ok((excluded, LpNode { size: Some(m), problem, solution, claim }))
            }
        }
    }

    /// Descend from the proven bound `start`; returns the first size that is
    /// not ruled out, with every LP solved on the way.
    pub fn m_descent(&self, p: &CodeParams, start: u64) -> Result<(u64, Vec<LpNode>)> {
        let mut m = start;
        let mut nodes = Vec::new();
        let mut steps = 0;
        while m >= 2 && steps < self.config.max_descent_steps {
            let (excluded, node) = self.size_test(p, m, self.config.descent_mode)?;
            nodes.push(node);
            steps += 1;
            if !excluded {
                break;
            }
            debug!("{p}: size {m} excluded");
            m -= 1;
        }
        Ok((m, nodes))
    }

    /// Johnson recursion with both branches; sub-queries go through
    /// [`Engine::cell_bound`].
    pub fn johnson_bound(&self, p: &CodeParams) -> Result<(u64, Vec<String>)> {
        let (n, d, w) = (p.n, p.d, p.w);
        let down = self.cell_bound(n - 1, d, w - 1)?;
        let first = (n as u128 * down as u128 / w as u128) as u64;
        let same = self.cell_bound(n - 1, d, w)?;
        let second = (n as u128 * same as u128 / (n - w) as u128) as u64;
        let notes = vec![
            format!("A({n},{d},{w}) <= floor({n}/{w} * A({},{d},{}) = {down}) = {first}", n - 1, w - 1),
            format!("A({n},{d},{w}) <= floor({n}/{} * A({},{d},{w}) = {same}) = {second}", n - w, n - 1),
        ];
        Ok((first.min(second), notes))
    }

    /// Memoized bound for a sub-query: exact cases, trivial, Johnson and
    /// the size-independent LP. No descent and no external bound.
    pub fn cell_bound(&self, n: u32, d: u32, w: u32) -> Result<u64> {
        let p = match normalize(n, d, w)? {
            Normalized::Exact { value, .. } => return Ok(value),
            Normalized::Canonical { params, .. } => params,
        };
        let key = (p.n, p.d, p.w);
        if let Some(entry) = self.memo.lock().unwrap().get(&key) {
            return Ok(entry.bound);
        }
        let mut best = binomial_u64(p.n as i64, p.w as i64).expect("n <= 64");
        if self.config.use_johnson {
            best = best.min(self.johnson_bound(&p)?.0);
        }
        let (lp, node, _) = self.lp_bound(&p)?;
        if let Some(lp) = lp {
            best = best.min(lp);
        }
        let lp = (node.solution.status != LpStatus::Unbounded).then_some(node);
        self.memo.lock().unwrap().insert(key, CellEntry { params: p, bound: best, lp });
        Ok(best)
    }

    /// Memoized cells reachable from `p` through the Johnson recursion,
    /// ordered by parameters. Empty when the recursion is disabled.
    pub fn johnson_cells(&self, p: &CodeParams) -> Vec<CellEntry> {
        if !self.config.use_johnson {
            return Vec::new();
        }
        let memo = self.memo.lock().unwrap();
        let mut seen = BTreeSet::new();
        let mut stack = vec![*p];
        let mut out = Vec::new();
        while let Some(q) = stack.pop() {
            for (n, w) in [(q.n - 1, q.w - 1), (q.n - 1, q.w)] {
                if let Ok(Normalized::Canonical { params, .. }) = normalize(n, q.d, w) {
                    if seen.insert(params) {
                        if let Some(entry) = memo.get(&(params.n, params.d, params.w)) {
                            out.push(entry.clone());
                        }
                        stack.push(params);
                    }
                }
            }
        }
        out.sort_by_key(|e| e.params);
        out
    }

    /// Full bound for `A(n, d, w)`, using the configured known bound.
    pub fn bound(&self, n: u32, d: u32, w: u32) -> Result<BoundResult> {
        self.bound_with_known(n, d, w, self.config.known_bound)
    }

    /// Full bound for `A(n, d, w)` with an explicit external upper bound.
    pub fn bound_with_known(&self, n: u32, d: u32, w: u32, known: Option<u64>) -> Result<BoundResult> {
        let query = Query::ConstantWeight { n, d, w };
        let mut derivation = Derivation::default();
        let p = match normalize(n, d, w)? {
            Normalized::Exact { value, rule, steps } => {
                derivation.normalization = steps;
                derivation.normalization.push(rule);
                derivation.candidates.push((Method::Exact, value));
                return Ok(BoundResult { query, canonical: None, bound: value, method: Method::Exact, derivation });
            }
            Normalized::Canonical { params, steps } => {
                derivation.normalization = steps;
                params
            }
        };

        let mut candidates = vec![(Method::Trivial, binomial_u64(p.n as i64, p.w as i64).expect("n <= 64"))];
        if self.config.use_johnson {
            let (j, notes) = self.johnson_bound(&p)?;
            derivation.johnson = notes;
            derivation.johnson_cells = self.johnson_cells(&p);
            candidates.push((Method::Johnson, j));
        }
        let (lp, node, used) = self.lp_bound(&p)?;
        derivation.t_entries = used;
        derivation.lp_nodes.push(node);
        if let Some(lp) = lp {
            candidates.push((Method::Lp, lp));
        }
        if let Some(k) = known {
            candidates.push((Method::KnownBound, k));
        }
        let (mut method, mut bound) = *candidates
            .iter()
            .min_by_key(|(_, v)| *v)
            .expect("trivial candidate present");

        if self.config.families.contains(&Family::Columns) {
            let (m, nodes) = self.m_descent(&p, bound)?;
            derivation.lp_nodes.extend(nodes);
            if m < bound {
                candidates.push((Method::Descent, m));
                method = Method::Descent;
                bound = m;
            }
        }
        derivation.candidates = candidates;
        Ok(BoundResult { query, canonical: Some(p), bound, method, derivation })
    }

    /// Bound for unrestricted binary codes `A(n, d)`.
    ///
    /// Uses the Delsarte inequalities; with the `columns` family the parity
    /// and split inequalities drive a size descent.
    pub fn binary_bound(&self, n: u32, d: u32) -> Result<BoundResult> {
        let query = Query::Binary { n, d };
        if n == 0 || d == 0 {
            return Err(Error::params(format!("A({n},{d}): n and d must be positive")));
        }
        if n > 62 {
            return Err(Error::params(format!("A({n},{d}): lengths above 62 are not supported")));
        }
        let mut derivation = Derivation::default();
        let exact = |value: u64, rule: &str, mut derivation: Derivation| {
            derivation.normalization.push(rule.to_string());
            derivation.candidates.push((Method::Exact, value));
            Ok(BoundResult { query, canonical: None, bound: value, method: Method::Exact, derivation })
        };
        if d == 1 {
            return exact(1u64 << n, "A(n,1) = 2^n", derivation);
        }
        if d > n {
            return exact(1, "A(n,d) = 1 when d > n", derivation);
        }

        let mut candidates = vec![(Method::Trivial, 1u64 << n)];
        let use_delsarte = self.config.families.contains(&Family::Delsarte);
        let rows = if use_delsarte { binary_constraints(n, d, None)? } else { Vec::new() };
        let node = self.solve_node(binary_variables(n, d), rows, None)?;
        if let Claim::UpperBound { bound } = node.claim {
            candidates.push((Method::Lp, bound));
        }
        derivation.lp_nodes.push(node);
        if let Some(k) = self.config.known_bound {
            candidates.push((Method::KnownBound, k));
        }
        let (mut method, mut bound) = *candidates.iter().min_by_key(|(_, v)| *v).unwrap();

        if self.config.families.contains(&Family::Columns) {
            let mut m = bound;
            let mut steps = 0;
            while m >= 2 && steps < self.config.max_descent_steps {
                let mut rows = binary_constraints(n, d, Some(m))?;
                if !use_delsarte {
                    rows.retain(|r| !matches!(r.provenance, Provenance::BinaryDelsarte { .. }));
                }
                rows.push(binary_size_equality(n, d, m));
                let node = self.solve_node(binary_variables(n, d), rows, Some(m))?;
                let excluded = node.solution.status == LpStatus::Infeasible;
                derivation.lp_nodes.push(node);
                steps += 1;
                if !excluded {
                    break;
                }
                m -= 1;
            }
            if m < bound {
                candidates.push((Method::Descent, m));
                method = Method::Descent;
                bound = m;
            }
        }
        derivation.candidates = candidates;
        Ok(BoundResult { query, canonical: None, bound, method, derivation })
    }
}

/// Convenience: the optimum of the max-form LP at size `m` (size-independent
/// families plus the column rows at `m`), as used for cross-checking.
pub fn max_form_optimum(engine: &Engine, p: &CodeParams, m: u64) -> Result<(Option<Rational>, LpNode)> {
    let (_, node) = engine.size_test(p, m, DescentMode::MaxForm)?;
    Ok((node.solution.optimum.clone(), node))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exact_value(n: u32, d: u32, w: u32) -> Option<u64> {
        match normalize(n, d, w).unwrap() {
            Normalized::Exact { value, .. } => Some(value),
            Normalized::Canonical { .. } => None,
        }
    }

    #[test]
    fn normalization_examples() {
        assert_eq!(exact_value(6, 3, 2), Some(3));
        assert_eq!(exact_value(10, 2, 4), Some(210));
        match normalize(27, 8, 14).unwrap() {
            Normalized::Canonical { params, .. } => assert_eq!(params, CodeParams::new(27, 8, 13).unwrap()),
            other => panic!("{other:?}"),
        }
        assert_eq!(exact_value(9, 10, 4), Some(1));
        assert!(normalize(4, 2, 5).is_err());
        assert!(normalize(0, 2, 0).is_err());
    }

    #[test]
    fn normalization_is_idempotent() {
        for n in 1..=14 {
            for d in 1..=n + 1 {
                for w in 0..=n {
                    if let Normalized::Canonical { params, .. } = normalize(n, d, w).unwrap() {
                        match normalize(params.n, params.d, params.w).unwrap() {
                            Normalized::Canonical { params: again, steps } => {
                                assert_eq!(again, params);
                                assert!(steps.is_empty());
                            }
                            other => panic!("{other:?}"),
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn johnson_small_case() {
        let engine = Engine::new(TBoundTable::seed(), EngineConfig::with_families([]));
        let (j, _) = engine.johnson_bound(&CodeParams::new(6, 4, 3).unwrap()).unwrap();
        assert_eq!(j, 4);
    }

    #[test]
    fn johnson_reaches_the_disjoint_support_case() {
        let engine = Engine::new(TBoundTable::seed(), EngineConfig::default());
        for (n, w) in [(9, 3), (12, 4), (10, 5)] {
            assert_eq!(engine.cell_bound(n, 2 * w, w).unwrap(), (n / w) as u64);
        }
    }

    #[test]
    fn memo_is_order_independent() {
        let a = Engine::new(TBoundTable::seed(), EngineConfig::default());
        let b = Engine::new(TBoundTable::seed(), EngineConfig::default());
        let cells = [(10, 4, 4), (11, 4, 5), (9, 4, 3), (12, 6, 5)];
        let forward: Vec<u64> = cells.iter().map(|&(n, d, w)| a.cell_bound(n, d, w).unwrap()).collect();
        let mut backward: Vec<u64> = cells.iter().rev().map(|&(n, d, w)| b.cell_bound(n, d, w).unwrap()).collect();
        backward.reverse();
        assert_eq!(forward, backward);
    }

    #[test]
    fn exact_answers_skip_the_lp() {
        let engine = Engine::new(TBoundTable::seed(), EngineConfig::default());
        let r = engine.bound(10, 2, 4).unwrap();
        assert_eq!((r.bound, r.method), (210, Method::Exact));
        assert!(r.derivation.lp_nodes.is_empty());
    }

    #[test]
    fn binary_exact_cases() {
        let engine = Engine::new(TBoundTable::seed(), EngineConfig::default());
        assert_eq!(engine.binary_bound(5, 1).unwrap().bound, 32);
        assert_eq!(engine.binary_bound(5, 6).unwrap().bound, 1);
        assert!(engine.binary_bound(4, 2).unwrap().bound >= 8);
    }

    #[test]
    fn empty_descent_matches_plain_bound() {
        let plain = Engine::new(TBoundTable::seed(), EngineConfig::default());
        let mut cfg = EngineConfig::default();
        cfg.families.insert(Family::Columns);
        cfg.column_ks = Some(Vec::new());
        let descent = Engine::new(TBoundTable::seed(), cfg);
        for (n, d, w) in [(10, 4, 4), (12, 6, 5), (11, 4, 3)] {
            assert_eq!(plain.bound(n, d, w).unwrap().bound, descent.bound(n, d, w).unwrap().bound);
        }
    }
}
