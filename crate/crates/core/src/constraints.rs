//! Linear constraints on the distance distribution.
//!
//! For constant-weight codes the variables are `A_{2i}` for `i` in
//! `H = {d/2, ..., w}` and a constraint's coefficient map is keyed by the
//! half-distance `i`. For unrestricted binary codes the variables are `A_i`
//! for `i = d..=n`, keyed by the distance `i` itself. `A_0 = 1` is folded
//! into the right-hand side in both cases.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{binomial, delsarte_q, krawtchouk, krawtchouk_minus, krawtchouk_plus};
use crate::error::{Error, Result};
use crate::rational::{frac, int, Rational};
use crate::tbound::{DoublyParams, TBound, TBoundTable};

/// Normalized constant-weight parameters: `d` even and `4 <= d < 2w <= n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CodeParams {
    pub n: u32,
    pub d: u32,
    pub w: u32,
}

impl CodeParams {
    pub fn new(n: u32, d: u32, w: u32) -> Result<Self> {
        if !d.is_multiple_of(2) || d < 4 || d >= 2 * w || 2 * w > n {
            return Err(Error::params(format!(
                "({n},{d},{w}) is not normalized: need d even and 4 <= d < 2w <= n"
            )));
        }
        if n > 64 {
            return Err(Error::params(format!("n = {n}: lengths above 64 are not supported")));
        }
        Ok(CodeParams { n, d, w })
    }

    /// The half-distance index set `H = {d/2, ..., w}`.
    pub fn halves(&self) -> impl Iterator<Item = u32> + Clone {
        self.d / 2..=self.w
    }
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.n, self.d, self.w)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sense {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "=")]
    Eq,
}

impl fmt::Display for Sense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sense::Le => "<=",
            Sense::Ge => ">=",
            Sense::Eq => "=",
        })
    }
}

/// Which of the two conditional inequalities of a distance-`d` pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DVariant {
    /// Reduced coefficient `(P_j - P_ji) / (P_j P_ij)` on `A_{2i}`.
    ReduceFirst,
    /// Reduced coefficient `(P_i - P_ij) / (P_i P_ji)` on `A_{2j}`.
    ReduceSecond,
    /// Plain `A_{2i}/P_i + A_{2j}/P_j` form.
    Plain,
}

impl fmt::Display for DVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DVariant::ReduceFirst => "reduce-first",
            DVariant::ReduceSecond => "reduce-second",
            DVariant::Plain => "plain",
        })
    }
}

/// Which generator produced a constraint, with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Provenance {
    Delsarte { k: u32 },
    TCap { i: u32 },
    Pair { i: u32, j: u32 },
    Set { members: Vec<u32> },
    DPair { i: u32, j: u32, variant: DVariant },
    DSet { members: Vec<u32>, i: u32, j: u32, variant: DVariant },
    ColumnsMinus { k: u32, m: u64 },
    ColumnsPlus { k: u32, m: u64 },
    SizeEquality { m: u64 },
    BinaryDelsarte { k: u32 },
    BinaryParity { k: u32, m: u64 },
    BinarySplitMinus { k: u32, m: u64 },
    BinarySplitPlus { k: u32, m: u64 },
}

fn fmt_set(members: &[u32]) -> String {
    let parts: Vec<String> = members.iter().map(u32::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Provenance::*;
        match self {
            Delsarte { k } => write!(f, "delsarte({k})"),
            TCap { i } => write!(f, "t-cap({i})"),
            Pair { i, j } => write!(f, "pair({i},{j})"),
            Set { members } => write!(f, "set({})", fmt_set(members)),
            DPair { i, j, variant } => write!(f, "d-pair({i},{j},{variant})"),
            DSet { members, i, j, variant } => {
                write!(f, "d-set({},{i},{j},{variant})", fmt_set(members))
            }
            ColumnsMinus { k, m } => write!(f, "columns-minus({k},M={m})"),
            ColumnsPlus { k, m } => write!(f, "columns-plus({k},M={m})"),
            SizeEquality { m } => write!(f, "size-equality(M={m})"),
            BinaryDelsarte { k } => write!(f, "binary-delsarte({k})"),
            BinaryParity { k, m } => write!(f, "binary-parity({k},M={m})"),
            BinarySplitMinus { k, m } => write!(f, "binary-split-minus({k},M={m})"),
            BinarySplitPlus { k, m } => write!(f, "binary-split-plus({k},M={m})"),
        }
    }
}

/// `Σ coefficients[i] · x_i  (sense)  rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearConstraint {
    pub sense: Sense,
    pub coefficients: BTreeMap<u32, Rational>,
    pub rhs: Rational,
    pub provenance: Provenance,
}

impl LinearConstraint {
    /// Builds a constraint, dropping zero coefficients.
    pub fn new(
        sense: Sense,
        coefficients: impl IntoIterator<Item = (u32, Rational)>,
        rhs: Rational,
        provenance: Provenance,
    ) -> Self {
        let coefficients = coefficients.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        LinearConstraint { sense, coefficients, rhs, provenance }
    }

    pub fn coefficient(&self, i: u32) -> Rational {
        self.coefficients.get(&i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Left-hand side at `point`; missing variables count as zero.
    pub fn evaluate(&self, point: &BTreeMap<u32, Rational>) -> Rational {
        self.coefficients
            .iter()
            .filter_map(|(i, c)| point.get(i).map(|x| c * x))
            .fold(Rational::zero(), |acc, t| acc + t)
    }

    pub fn is_satisfied(&self, point: &BTreeMap<u32, Rational>) -> bool {
        let lhs = self.evaluate(point);
        match self.sense {
            Sense::Le => lhs <= self.rhs,
            Sense::Ge => lhs >= self.rhs,
            Sense::Eq => lhs == self.rhs,
        }
    }

    /// The constraint scaled by a positive factor so that all coefficients
    /// and the right-hand side are coprime integers.
    pub fn primitive_integer_form(&self) -> (BTreeMap<u32, BigInt>, BigInt) {
        let values = self.coefficients.values().chain(std::iter::once(&self.rhs));
        let lcm = values.clone().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        let scaled: Vec<BigInt> = values.map(|v| (v * Rational::from_integer(lcm.clone())).to_integer()).collect();
        let gcd = scaled.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
        let gcd = if gcd.is_zero() { BigInt::one() } else { gcd };
        let mut it = scaled.into_iter().map(|v| v / &gcd);
        let coeffs = self.coefficients.keys().map(|&i| (i, it.next().unwrap())).collect();
        (coeffs, it.next().unwrap())
    }

    /// Human form such as `A22 + 6A24 + 26A26 <= 26`, after integer scaling.
    /// `scale` maps a variable key to the distance used in its label.
    pub fn display_with(&self, scale: u32) -> String {
        let (coeffs, rhs) = self.primitive_integer_form();
        let mut out = String::new();
        for (idx, (i, c)) in coeffs.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            out.push_str(&format!("A{}", i * scale));
        }
        if out.is_empty() {
            out.push('0');
        }
        format!("{out} {} {rhs}", self.sense)
    }
}

/// Constraint families selectable for the constant-weight LP.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Delsarte,
    TCap,
    Pairs,
    DPairs,
    Columns,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::Delsarte, Family::TCap, Family::Pairs, Family::DPairs, Family::Columns];

    pub fn name(&self) -> &'static str {
        match self {
            Family::Delsarte => "delsarte",
            Family::TCap => "t-cap",
            Family::Pairs => "pairs",
            Family::DPairs => "d-pairs",
            Family::Columns => "columns",
        }
    }

    /// Whether the family's constraints depend on an assumed code size.
    pub fn needs_size(&self) -> bool {
        matches!(self, Family::Columns)
    }

    /// Whether the family needs bounds on `T`.
    pub fn needs_peers(&self) -> bool {
        matches!(self, Family::TCap | Family::Pairs | Family::DPairs)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s.trim())
            .ok_or_else(|| {
                Error::params(format!(
                    "unknown constraint family {s:?} (known: delsarte, t-cap, pairs, d-pairs, columns)"
                ))
            })
    }
}

pub fn parse_families(list: &str) -> Result<BTreeSet<Family>> {
    list.split(',').filter(|s| !s.trim().is_empty()).map(str::parse).collect()
}

/// Which side(s) of the column-count inequalities to emit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum ColumnSides {
    Minus,
    Plus,
    #[default]
    Both,
}

impl FromStr for ColumnSides {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "minus" => Ok(ColumnSides::Minus),
            "plus" => Ok(ColumnSides::Plus),
            "both" => Ok(ColumnSides::Both),
            other => Err(Error::params(format!("unknown column side {other:?} (minus, plus, both)"))),
        }
    }
}

/// Integer caps on `|S_{2i}(c)|` for every codeword `c`.
///
/// `single[i] = P_i >= T(i, w, i, n-w, d)`. `cross[(a, b)] = P_ab` bounds
/// `|S_{2a}(c)|` whenever `|S_{2b}(c)| >= 1`, for pairs with `m_{a,b} = d`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PeerBoundSet {
    pub single: BTreeMap<u32, u64>,
    pub cross: BTreeMap<(u32, u32), u64>,
}

impl PeerBoundSet {
    /// Fill every `P_i` and every `P_ab` (for `m_{a,b} = d`) from the T oracle.
    /// Returns the peers together with the T answers consulted.
    pub fn from_table(p: &CodeParams, table: &TBoundTable) -> (Self, Vec<TBound>) {
        let mut peers = PeerBoundSet::default();
        let mut used = Vec::new();
        for i in p.halves() {
            let key = DoublyParams::new(i, p.w, i, p.n - p.w, p.d).expect("i <= w <= n - w");
            let t = table.lookup(key);
            peers.single.insert(i, t.bound);
            used.push(t);
        }
        for i in p.halves() {
            for j in p.halves() {
                if i != j && max_distance(i, j, p) == p.d {
                    // bound on |S_2i| given S_2j nonempty comes from the (j, i) block shape
                    let key = cross_block_params(j, i, p).expect("m = d checked");
                    let t = table.lookup(key);
                    peers.cross.insert((i, j), t.bound);
                    used.push(t);
                }
            }
        }
        (peers, used)
    }

    pub fn p(&self, i: u32) -> Result<u64> {
        self.single
            .get(&i)
            .copied()
            .ok_or_else(|| Error::params(format!("peer bound P_{i} missing")))
    }

    /// `P_ab`: cap on `|S_{2a}|` when `S_{2b}` is nonempty.
    pub fn p_cross(&self, a: u32, b: u32) -> Result<u64> {
        self.cross
            .get(&(a, b))
            .copied()
            .ok_or_else(|| Error::params(format!("peer bound P_{{{a},{b}}} missing")))
    }
}

/// Largest distance between a vector of `V_i` and one of `V_j`.
pub fn max_distance(i: u32, j: u32, p: &CodeParams) -> u32 {
    let s = i + j;
    let fold = |t: u32| if s <= t { s } else { 2 * t - s };
    fold(p.w) + fold(p.n - p.w)
}

fn block_weight(i: u32, j: u32, t: u32) -> u32 {
    (i + j).abs_diff(t)
}

fn block_length(i: u32, j: u32, t: u32) -> u32 {
    if t < i + j {
        i
    } else {
        t - i
    }
}

/// Block shape bounding `|S_{2j}(c)|` once `S_{2i}(c)` is nonempty.
pub fn cross_block_params(i: u32, j: u32, p: &CodeParams) -> Result<DoublyParams> {
    if i == j || max_distance(i, j, p) != p.d {
        return Err(Error::params(format!(
            "cross-block shape needs i != j with m_(i,j) = d; got i={i}, j={j}, m={}",
            max_distance(i, j, p)
        )));
    }
    let (w, rest) = (p.w, p.n - p.w);
    DoublyParams::new(
        block_weight(i, j, w),
        block_length(i, j, w),
        block_weight(i, j, rest),
        block_length(i, j, rest),
        p.d,
    )
}

pub fn delsarte_constraints(p: &CodeParams) -> Vec<LinearConstraint> {
    let (n, w) = (p.n as i64, p.w as i64);
    (1..=p.w)
        .map(|k| {
            let coeffs = p
                .halves()
                .map(|i| (i, delsarte_q(k as i64, i as i64, n, w).expect("k <= w, i in H")));
            LinearConstraint::new(Sense::Ge, coeffs, int(-1), Provenance::Delsarte { k })
        })
        .collect()
}

pub fn t_cap_constraints(p: &CodeParams, peers: &PeerBoundSet) -> Result<Vec<LinearConstraint>> {
    p.halves()
        .map(|i| {
            Ok(LinearConstraint::new(
                Sense::Le,
                [(i, int(1))],
                int(peers.p(i)?),
                Provenance::TCap { i },
            ))
        })
        .collect()
}

/// All maximal cliques of size at least two in the graph on `nodes` whose
/// edges are the pairs accepted by `adjacent`. Output is sorted.
fn maximal_cliques(nodes: &[u32], adjacent: impl Fn(u32, u32) -> bool) -> Vec<Vec<u32>> {
    let len = nodes.len();
    let nbr: Vec<u64> = (0..len)
        .map(|a| {
            (0..len)
                .filter(|&b| b != a && adjacent(nodes[a], nodes[b]))
                .fold(0u64, |m, b| m | (1 << b))
        })
        .collect();
    let mut out = Vec::new();
    fn bron_kerbosch(r: u64, mut p: u64, mut x: u64, nbr: &[u64], out: &mut Vec<u64>) {
        if p == 0 && x == 0 {
            out.push(r);
            return;
        }
        while p != 0 {
            let v = p.trailing_zeros() as usize;
            bron_kerbosch(r | (1 << v), p & nbr[v], x & nbr[v], nbr, out);
            p &= !(1 << v);
            x |= 1 << v;
        }
    }
    let all = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
    let mut masks = Vec::new();
    bron_kerbosch(0, all, 0, &nbr, &mut masks);
    for m in masks {
        if m.count_ones() >= 2 {
            out.push((0..len).filter(|&b| m & (1 << b) != 0).map(|b| nodes[b]).collect());
        }
    }
    out.sort();
    out
}

/// `Σ_{i ∈ H1} A_{2i} / P_i <= 1` for every maximal `H1` whose pairs all have
/// `m_{i,j} < d`.
pub fn pair_and_set_constraints(p: &CodeParams, peers: &PeerBoundSet) -> Result<Vec<LinearConstraint>> {
    let nodes: Vec<u32> = p.halves().collect();
    let cliques = maximal_cliques(&nodes, |a, b| max_distance(a, b, p) < p.d);
    cliques
        .into_iter()
        .map(|members| {
            let coeffs = members
                .iter()
                .map(|&i| Ok((i, frac(1, peers.p(i)?))))
                .collect::<Result<Vec<_>>>()?;
            let provenance = if members.len() == 2 {
                Provenance::Pair { i: members[0], j: members[1] }
            } else {
                Provenance::Set { members }
            };
            Ok(LinearConstraint::new(Sense::Le, coeffs, int(1), provenance))
        })
        .collect()
}

/// Greedy extension of the pair `{i, j}` by every `k` that is at distance
/// `< d` (in the `m` sense) from all current members.
pub fn extend_distance_pair(i: u32, j: u32, p: &CodeParams) -> Vec<u32> {
    let mut members = vec![i, j];
    for k in p.halves() {
        if k != i && k != j && members.iter().all(|&l| max_distance(k, l, p) < p.d) {
            members.push(k);
        }
    }
    members.sort_unstable();
    members
}

/// Conditional inequalities for pairs with `m_{i,j} = d`, extended by every
/// compatible third index.
pub fn d_equal_constraints(p: &CodeParams, peers: &PeerBoundSet) -> Result<Vec<LinearConstraint>> {
    let mut out = Vec::new();
    let halves: Vec<u32> = p.halves().collect();
    for (a, &i) in halves.iter().enumerate() {
        for &j in &halves[a + 1..] {
            if max_distance(i, j, p) != p.d {
                continue;
            }
            let members = extend_distance_pair(i, j, p);
            let (pi, pj) = (peers.p(i)?, peers.p(j)?);
            let (pij, pji) = (peers.p_cross(i, j)?, peers.p_cross(j, i)?);
            let condition = frac(pij, pi) + frac(pji, pj);
            let one = int(1);

            let rest: Vec<(u32, Rational)> = members
                .iter()
                .filter(|&&k| k != i && k != j)
                .map(|&k| Ok((k, frac(1, peers.p(k)?))))
                .collect::<Result<_>>()?;
            let provenance = |variant| {
                if rest.is_empty() {
                    Provenance::DPair { i, j, variant }
                } else {
                    Provenance::DSet { members: members.clone(), i, j, variant }
                }
            };
            let emit = |ci: Rational, cj: Rational, variant| {
                let coeffs = [(i, ci), (j, cj)].into_iter().chain(rest.iter().cloned());
                LinearConstraint::new(Sense::Le, coeffs, int(1), provenance(variant))
            };

            if condition >= one {
                let to_big = |v: u64| BigInt::from(v);
                let reduce_first = Rational::new(
                    to_big(pj) - to_big(pji),
                    to_big(pj) * to_big(pij),
                );
                let reduce_second = Rational::new(
                    to_big(pi) - to_big(pij),
                    to_big(pi) * to_big(pji),
                );
                out.push(emit(reduce_first, frac(1, pj), DVariant::ReduceFirst));
                out.push(emit(frac(1, pi), reduce_second, DVariant::ReduceSecond));
            }
            if condition <= one {
                out.push(emit(frac(1, pi), frac(1, pj), DVariant::Plain));
            }
        }
    }
    Ok(out)
}

/// Right-hand side of the odd-parity column-count inequality for an assumed
/// size `m`, with its quotient/remainder split.
pub fn column_rhs(n: u32, w: u32, k: u32, m: u64) -> (Rational, BigInt, BigInt) {
    let total = binomial(n as i64, k as i64);
    let m_big = BigInt::from(m);
    let (q, r) = (&m_big * krawtchouk_minus(k as i64, n as i64, w as i64)).div_rem(&total);
    let body = (&total - &r) * &q * (&m_big - &q) + &r * (&q + 1) * (&m_big - &q - 1);
    (Rational::new(BigInt::from(2) * body, m_big), q, r)
}

/// Column-count inequalities for an assumed code size `m >= 2`.
pub fn column_constraints(p: &CodeParams, m: u64, ks: &[u32], sides: ColumnSides) -> Result<Vec<LinearConstraint>> {
    if m < 2 {
        return Err(Error::params(format!("column constraints need M >= 2, got {m}")));
    }
    let n = p.n as i64;
    let mut out = Vec::new();
    for &k in ks {
        if k == 0 || k > p.n {
            continue;
        }
        let (rhs, _, _) = column_rhs(p.n, p.w, k, m);
        if matches!(sides, ColumnSides::Minus | ColumnSides::Both) {
            let coeffs = p.halves().map(|i| (i, int(krawtchouk_minus(k as i64, n, 2 * i as i64))));
            out.push(LinearConstraint::new(Sense::Le, coeffs, rhs.clone(), Provenance::ColumnsMinus { k, m }));
        }
        if matches!(sides, ColumnSides::Plus | ColumnSides::Both) {
            let coeffs = p.halves().map(|i| (i, -int(krawtchouk_plus(k as i64, n, 2 * i as i64))));
            let shift = int((BigInt::from(m) - 1) * binomial(n, k as i64));
            out.push(LinearConstraint::new(Sense::Le, coeffs, rhs - shift, Provenance::ColumnsPlus { k, m }));
        }
    }
    Ok(out)
}

/// `Σ_{i ∈ H} A_{2i} = m - 1`.
pub fn size_equality(p: &CodeParams, m: u64) -> LinearConstraint {
    LinearConstraint::new(
        Sense::Eq,
        p.halves().map(|i| (i, int(1))),
        int(m.saturating_sub(1)),
        Provenance::SizeEquality { m },
    )
}

/// `(M1, M2)` pair counts used by the split binary inequalities.
pub fn split_counts(m: u64) -> (Rational, Rational) {
    let mm = BigInt::from(m);
    if m.is_multiple_of(2) {
        (Rational::new(&mm * &mm, 4.into()), Rational::new(&mm * (&mm - 2), 4.into()))
    } else {
        (Rational::new(&mm * &mm - 1, 4.into()), Rational::new((&mm - 1) * (&mm - 1), 4.into()))
    }
}

/// Delsarte inequalities for unrestricted binary codes, variables `A_i`
/// for `i = d..=n`. With a size `m`, also the parity-refined right-hand
/// sides and both split inequalities for every `k`.
pub fn binary_constraints(n: u32, d: u32, m: Option<u64>) -> Result<Vec<LinearConstraint>> {
    if d == 0 || d > n {
        return Err(Error::params(format!("binary constraints need 1 <= d <= n, got n={n}, d={d}")));
    }
    if m == Some(0) {
        return Err(Error::params("binary constraints need M >= 1"));
    }
    let nn = n as i64;
    let vars = d..=n;
    let mut out = Vec::new();
    for k in 0..=n {
        let kk = k as i64;
        let total = int(binomial(nn, kk));
        let kraw = |i: u32| (i, int(krawtchouk(kk, nn, i as i64)));
        out.push(LinearConstraint::new(
            Sense::Ge,
            vars.clone().map(kraw),
            -total.clone(),
            Provenance::BinaryDelsarte { k },
        ));
        let Some(m) = m else { continue };
        let mr = int(m);
        let refined = if m % 2 == 1 { (int(1) - &mr) / &mr * &total } else { -total.clone() };
        out.push(LinearConstraint::new(
            Sense::Ge,
            vars.clone().map(kraw),
            refined,
            Provenance::BinaryParity { k, m },
        ));
        let (m1, m2) = split_counts(m);
        out.push(LinearConstraint::new(
            Sense::Le,
            vars.clone().map(|i| (i, int(krawtchouk_minus(kk, nn, i as i64)))),
            int(2) * m1 / &mr * &total,
            Provenance::BinarySplitMinus { k, m },
        ));
        out.push(LinearConstraint::new(
            Sense::Le,
            vars.clone().map(|i| (i, -int(krawtchouk_plus(kk, nn, i as i64)))),
            -(int(2) * m2 / &mr * &total),
            Provenance::BinarySplitPlus { k, m },
        ));
    }
    Ok(out)
}

/// `Σ_{i=d}^{n} A_i = m - 1`.
pub fn binary_size_equality(n: u32, d: u32, m: u64) -> LinearConstraint {
    LinearConstraint::new(Sense::Eq, (d..=n).map(|i| (i, int(1))), int(m.saturating_sub(1)), Provenance::SizeEquality { m })
}

/// Drop constraints that are implied by another one with a positively
/// proportional left-hand side, and vacuous `0 <= c` rows. Survivors keep
/// their original form and relative order.
pub fn deduplicate(constraints: Vec<LinearConstraint>) -> Vec<LinearConstraint> {
    // Inequalities are compared in `<=` form, scaled so the first nonzero
    // coefficient has magnitude one.
    let key_of = |c: &LinearConstraint| -> (bool, Vec<(u32, Rational)>, Rational) {
        let flip = c.sense == Sense::Ge;
        let sign = |v: &Rational| if flip { -v.clone() } else { v.clone() };
        let scale = c.coefficients.values().next().map(|v| v.abs()).unwrap_or_else(|| int(1));
        let coeffs = c.coefficients.iter().map(|(&i, v)| (i, sign(v) / &scale)).collect();
        (c.sense == Sense::Eq, coeffs, sign(&c.rhs) / &scale)
    };

    // Direction (`<=`-normalized or equality) and scaled coefficients.
    type Shape = (bool, Vec<(u32, Rational)>);
    let mut best: HashMap<Shape, (usize, Rational)> = HashMap::new();
    let mut seen_eq: HashSet<(Vec<(u32, Rational)>, Rational)> = HashSet::new();
    let mut keep = vec![false; constraints.len()];
    for (idx, c) in constraints.iter().enumerate() {
        let (is_eq, coeffs, rhs) = key_of(c);
        if !is_eq && coeffs.is_empty() && rhs >= Rational::zero() {
            continue;
        }
        if is_eq {
            // equalities only collapse on exact repeats
            if seen_eq.insert((coeffs, rhs)) {
                keep[idx] = true;
            }
            continue;
        }
        match best.get(&(false, coeffs.clone())) {
            Some((_, existing)) if *existing <= rhs => {}
            Some((prev, _)) => {
                keep[*prev] = false;
                keep[idx] = true;
                best.insert((false, coeffs), (idx, rhs));
            }
            None => {
                keep[idx] = true;
                best.insert((false, coeffs), (idx, rhs));
            }
        }
    }
    constraints
        .into_iter()
        .zip(keep)
        .filter_map(|(c, k)| k.then_some(c))
        .collect()
}
