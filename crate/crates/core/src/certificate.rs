//! Self-contained bound certificates.
//!
//! A bundle records every LP that contributed to a bound together with its
//! primal and dual vectors, the non-LP bounds the result relied on, and a
//! sha256 digest of everything else. Verification needs no T table and no
//! generator code: each LP certificate is rechecked in exact arithmetic, the
//! claim of each LP is recomputed from its own rows, and the final bound is
//! re-derived from those claims.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::combinatorics::binomial_u64;
use crate::constraints::{CodeParams, LinearConstraint, Provenance, Sense};
use crate::engine::{normalize, BoundResult, Claim, LpNode, Method, Normalized, Query};
use crate::error::{Error, Result};
use crate::lp::{verify_certificate, LpProblem, LpSolution, LpStatus, Variable};
use crate::rational::{floor_plus_one, parse, to_text};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintRecord {
    pub provenance: Provenance,
    pub sense: Sense,
    pub coefficients: BTreeMap<u32, String>,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LpCertificate {
    /// Assumed code size for size-dependent systems.
    pub size: Option<u64>,
    pub variables: Vec<Variable>,
    pub objective: BTreeMap<u32, String>,
    pub constraints: Vec<ConstraintRecord>,
    pub status: LpStatus,
    pub optimum: Option<String>,
    pub primal: Vec<String>,
    pub dual: Vec<String>,
    pub claim: Claim,
}

/// A sub-query of the Johnson recursion and the LP that bounded it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellCertificate {
    pub params: CodeParams,
    pub lp: Option<LpCertificate>,
}

/// A bound stated without its own LP. Exact, trivial and Johnson values are
/// recomputed during verification; a known bound is taken as given.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrustedBound {
    pub source: Method,
    pub value: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateBundle {
    pub format: u32,
    pub query: Query,
    pub canonical: Option<CodeParams>,
    pub claimed_bound: u64,
    pub method: Method,
    pub trusted: Vec<TrustedBound>,
    pub lps: Vec<LpCertificate>,
    pub cells: Vec<CellCertificate>,
    pub digest: String,
}

/// What a successful verification established.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifiedBound {
    pub query: Query,
    pub bound: u64,
    pub lps_checked: usize,
    pub cells_checked: usize,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::CertificateInvalid(msg.into())
}

fn record(c: &LinearConstraint) -> ConstraintRecord {
    ConstraintRecord {
        provenance: c.provenance.clone(),
        sense: c.sense,
        coefficients: c.coefficients.iter().map(|(k, v)| (*k, to_text(v))).collect(),
        rhs: to_text(&c.rhs),
    }
}

impl LpCertificate {
    pub fn from_node(node: &LpNode) -> Self {
        let p = &node.problem;
        let s = &node.solution;
        LpCertificate {
            size: node.size,
            variables: p.variables.clone(),
            objective: p.objective.iter().map(|(k, v)| (*k, to_text(v))).collect(),
            constraints: p.constraints.iter().map(record).collect(),
            status: s.status,
            optimum: s.optimum.as_ref().map(to_text),
            primal: s.primal.iter().map(to_text).collect(),
            dual: s.dual.iter().map(to_text).collect(),
            claim: node.claim,
        }
    }

    /// Rebuild the problem and solution from the text fields.
    pub fn decode(&self) -> Result<(LpProblem, LpSolution)> {
        let parse_map = |m: &BTreeMap<u32, String>| -> Result<BTreeMap<_, _>> {
            m.iter().map(|(k, v)| Ok((*k, parse(v)?))).collect()
        };
        let constraints = self
            .constraints
            .iter()
            .map(|r| {
                let coeffs = parse_map(&r.coefficients)?;
                Ok(LinearConstraint { sense: r.sense, coefficients: coeffs, rhs: parse(&r.rhs)?, provenance: r.provenance.clone() })
            })
            .collect::<Result<Vec<_>>>()?;
        let problem = LpProblem::new(self.variables.clone(), parse_map(&self.objective)?, constraints)
            .map_err(|e| Error::CertificateFormat(e.to_string()))?;
        let parse_vec = |v: &[String]| v.iter().map(|x| parse(x)).collect::<Result<Vec<_>>>();
        let solution = LpSolution {
            status: self.status,
            optimum: self.optimum.as_deref().map(parse).transpose()?,
            primal: parse_vec(&self.primal)?,
            dual: parse_vec(&self.dual)?,
            pivots: 0,
        };
        Ok((problem, solution))
    }
}

fn size_of_row(p: &Provenance) -> Option<u64> {
    use Provenance::*;
    match p {
        ColumnsMinus { m, .. }
        | ColumnsPlus { m, .. }
        | SizeEquality { m }
        | BinaryParity { m, .. }
        | BinarySplitMinus { m, .. }
        | BinarySplitPlus { m, .. } => Some(*m),
        _ => None,
    }
}

/// The claim an LP supports, derived only from its rows and verified status.
fn derive_claim(problem: &LpProblem, solution: &LpSolution, size: Option<u64>) -> Result<Claim> {
    let sizes: Vec<u64> = problem.constraints.iter().filter_map(|c| size_of_row(&c.provenance)).collect();
    if sizes.iter().any(|&m| Some(m) != size) {
        return Err(invalid("size-dependent rows disagree with the recorded size"));
    }
    let has_equality = problem.constraints.iter().any(|c| matches!(c.provenance, Provenance::SizeEquality { .. }));
    if has_equality {
        let m = size.expect("rows carry a size");
        let row = problem
            .constraints
            .iter()
            .find(|c| matches!(c.provenance, Provenance::SizeEquality { .. }))
            .unwrap();
        let all_ones = problem.variables.iter().all(|v| row.coefficient(v.key) == crate::rational::int(1))
            && row.coefficients.len() == problem.variables.len();
        if row.sense != Sense::Eq || !all_ones || row.rhs != crate::rational::int(m as i64 - 1) {
            return Err(invalid(format!("size-equality row does not state a code of size {m}")));
        }
    }
    let bound = solution.optimum.as_ref().and_then(floor_plus_one);
    Ok(match (solution.status, size) {
        (LpStatus::Infeasible, Some(m)) => Claim::SizeExcluded { size: m },
        (LpStatus::Infeasible, None) => return Err(invalid("infeasible LP with no assumed size proves nothing")),
        (LpStatus::Optimal, Some(m)) if has_equality => Claim::SizeFeasible { size: m },
        (LpStatus::Optimal, _) => bound.map_or(Claim::None, |bound| Claim::UpperBound { bound }),
        (LpStatus::Unbounded, _) => Claim::None,
    })
}

fn exact_value(query: Query) -> Option<u64> {
    match query {
        Query::ConstantWeight { n, d, w } => match normalize(n, d, w).ok()? {
            Normalized::Exact { value, .. } => Some(value),
            Normalized::Canonical { .. } => None,
        },
        Query::Binary { n, d } if n <= 62 && d >= 1 => match (d, d > n) {
            (1, _) => Some(1u64 << n),
            (_, true) => Some(1),
            _ => None,
        },
        Query::Binary { .. } => None,
    }
}

fn trivial_value(query: Query, canonical: Option<CodeParams>) -> Option<u64> {
    match query {
        Query::ConstantWeight { .. } => {
            let p = canonical?;
            binomial_u64(p.n as i64, p.w as i64)
        }
        Query::Binary { n, .. } => 1u64.checked_shl(n),
    }
}

impl CertificateBundle {
    pub fn from_result(result: &BoundResult) -> Result<Self> {
        let lps = result
            .derivation
            .lp_nodes
            .iter()
            .filter(|n| n.solution.status != LpStatus::Unbounded)
            .map(LpCertificate::from_node)
            .collect();
        let trusted = result
            .derivation
            .candidates
            .iter()
            .filter(|(m, _)| matches!(m, Method::Exact | Method::Trivial | Method::Johnson | Method::KnownBound))
            .map(|&(source, value)| TrustedBound { source, value })
            .collect();
        let cells = result
            .derivation
            .johnson_cells
            .iter()
            .map(|c| CellCertificate { params: c.params, lp: c.lp.as_ref().map(LpCertificate::from_node) })
            .collect();
        let mut bundle = CertificateBundle {
            format: FORMAT_VERSION,
            query: result.query,
            canonical: result.canonical,
            claimed_bound: result.bound,
            method: result.method,
            trusted,
            lps,
            cells,
            digest: String::new(),
        };
        bundle.digest = bundle.compute_digest()?;
        Ok(bundle)
    }

    pub fn compute_digest(&self) -> Result<String> {
        let mut body = self.clone();
        body.digest.clear();
        let bytes = serde_json::to_vec(&body)?;
        Ok(hex::encode(Sha256::digest(&bytes)))
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::CertificateFormat(e.to_string()))
    }

    /// Recheck everything; the error names the first failing condition.
    pub fn verify(&self) -> Result<VerifiedBound> {
        if self.format != FORMAT_VERSION {
            return Err(Error::CertificateFormat(format!("unsupported format version {}", self.format)));
        }
        if let Some(p) = self.canonical {
            CodeParams::new(p.n, p.d, p.w).map_err(|e| invalid(e.to_string()))?;
            match (self.query, normalize_query(self.query)) {
                (Query::ConstantWeight { .. }, Some(q)) if q == p => {}
                _ => return Err(invalid(format!("canonical parameters {p} do not match {}", self.query))),
            }
        }

        let mut upper: Option<u64> = None;
        let lower_of = |v: u64, upper: &mut Option<u64>| *upper = Some(upper.map_or(v, |u| u.min(v)));
        let mut excluded = std::collections::BTreeSet::new();
        for (idx, lp) in self.lps.iter().enumerate() {
            let (problem, solution) = lp.decode()?;
            let expected_vars = expected_variables(self.query, self.canonical);
            if let Some(keys) = expected_vars {
                let got: Vec<u32> = problem.variables.iter().map(|v| v.key).collect();
                if got != keys {
                    return Err(invalid(format!("lp {idx}: variables do not match {}", self.query)));
                }
            }
            verify_certificate(&problem, &solution).map_err(|v| invalid(format!("lp {idx}: {v}")))?;
            let claim = derive_claim(&problem, &solution, lp.size).map_err(|e| invalid(format!("lp {idx}: {e}")))?;
            if claim != lp.claim {
                return Err(invalid(format!("lp {idx}: recorded claim {:?} does not follow (expected {claim:?})", lp.claim)));
            }
            match (claim, lp.size) {
                (Claim::UpperBound { bound }, None) => lower_of(bound, &mut upper),
                (Claim::UpperBound { bound }, Some(m)) if bound < m => {
                    excluded.insert(m);
                }
                (Claim::SizeExcluded { size }, _) => {
                    excluded.insert(size);
                }
                _ => {}
            }
        }
        for t in &self.trusted {
            let recomputed = match t.source {
                Method::Exact => Some(exact_value(self.query)),
                Method::Trivial => Some(trivial_value(self.query, self.canonical)),
                Method::Johnson => Some(Some(self.johnson_value()?)),
                _ => None,
            };
            if let Some(r) = recomputed {
                if r != Some(t.value) {
                    return Err(invalid(format!("{} bound {} does not recompute", t.source, t.value)));
                }
            }
            lower_of(t.value, &mut upper);
        }
        let mut bound = upper.ok_or_else(|| invalid("no upper bound to start from"))?;
        while bound >= 2 && excluded.contains(&bound) {
            bound -= 1;
        }
        if bound != self.claimed_bound {
            return Err(invalid(format!(
                "claimed bound {} but the recorded proofs give {bound}",
                self.claimed_bound
            )));
        }
        let digest = self.compute_digest()?;
        if digest != self.digest {
            return Err(invalid("digest mismatch: the certificate was altered after it was issued"));
        }
        Ok(VerifiedBound { query: self.query, bound, lps_checked: self.lps.len(), cells_checked: self.cells.len() })
    }
}

impl CertificateBundle {
    /// Johnson value of the canonical query, rebuilt from the recorded cells.
    fn johnson_value(&self) -> Result<u64> {
        let p = self.canonical.ok_or_else(|| invalid("Johnson bound without canonical parameters"))?;
        let mut cells = BTreeMap::new();
        for (idx, c) in self.cells.iter().enumerate() {
            CodeParams::new(c.params.n, c.params.d, c.params.w).map_err(|e| invalid(format!("cell {idx}: {e}")))?;
            if cells.insert(c.params, (idx, c)).is_some() {
                return Err(invalid(format!("cell {idx}: {} recorded twice", c.params)));
            }
        }
        let mut cache = BTreeMap::new();
        johnson_of(&p, &cells, &mut cache)
    }
}

type CellMap<'a> = BTreeMap<CodeParams, (usize, &'a CellCertificate)>;

fn johnson_of(p: &CodeParams, cells: &CellMap, cache: &mut BTreeMap<CodeParams, u64>) -> Result<u64> {
    let down = cell_value(p.n - 1, p.d, p.w - 1, cells, cache)?;
    let same = cell_value(p.n - 1, p.d, p.w, cells, cache)?;
    let first = (p.n as u128 * down as u128 / p.w as u128) as u64;
    let second = (p.n as u128 * same as u128 / (p.n - p.w) as u128) as u64;
    Ok(first.min(second))
}

fn cell_value(n: u32, d: u32, w: u32, cells: &CellMap, cache: &mut BTreeMap<CodeParams, u64>) -> Result<u64> {
    let p = match normalize(n, d, w).map_err(|e| invalid(e.to_string()))? {
        Normalized::Exact { value, .. } => return Ok(value),
        Normalized::Canonical { params, .. } => params,
    };
    if let Some(&v) = cache.get(&p) {
        return Ok(v);
    }
    let &(idx, cell) = cells.get(&p).ok_or_else(|| invalid(format!("Johnson cell {p} is missing")))?;
    let mut best = binomial_u64(p.n as i64, p.w as i64).expect("n <= 64");
    best = best.min(johnson_of(&p, cells, cache)?);
    if let Some(lp) = &cell.lp {
        if lp.size.is_some() {
            return Err(invalid(format!("cell {idx}: size-dependent LP in a Johnson cell")));
        }
        let (problem, solution) = lp.decode()?;
        let keys: Vec<u32> = problem.variables.iter().map(|v| v.key).collect();
        if keys != p.halves().collect::<Vec<_>>() {
            return Err(invalid(format!("cell {idx}: variables do not match {p}")));
        }
        verify_certificate(&problem, &solution).map_err(|v| invalid(format!("cell {idx}: {v}")))?;
        let claim = derive_claim(&problem, &solution, None).map_err(|e| invalid(format!("cell {idx}: {e}")))?;
        if claim != lp.claim {
            return Err(invalid(format!("cell {idx}: recorded claim does not follow")));
        }
        if let Claim::UpperBound { bound } = claim {
            best = best.min(bound);
        }
    }
    cache.insert(p, best);
    Ok(best)
}

fn normalize_query(q: Query) -> Option<CodeParams> {
    match q {
        Query::ConstantWeight { n, d, w } => match normalize(n, d, w).ok()? {
            Normalized::Canonical { params, .. } => Some(params),
            Normalized::Exact { .. } => None,
        },
        Query::Binary { .. } => None,
    }
}

fn expected_variables(q: Query, canonical: Option<CodeParams>) -> Option<Vec<u32>> {
    match q {
        Query::ConstantWeight { .. } => canonical.map(|p| p.halves().collect()),
        Query::Binary { n, d } => Some((d..=n).collect()),
    }
}

/// Parse and verify certificate text.
pub fn verify_text(text: &str) -> Result<VerifiedBound> {
    CertificateBundle::from_json(text)?.verify()
}
