//! Explicit codes as ground truth.
//!
//! Small instances are solved exactly by maximum-clique search over the
//! compatibility graph of candidate words; larger ones get randomized greedy
//! codes. Codes are also used to check the per-codeword inequalities and the
//! column-count identities directly, independently of the LP generators.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{binomial, binomial_u64, krawtchouk_minus, krawtchouk_plus};
use crate::constraints::{CodeParams, PeerBoundSet};
use crate::error::{Error, Result};
use crate::rational::{frac, Rational};

/// Largest number of candidate words any search will enumerate.
pub const CANDIDATE_GUARD: u64 = 2_000_000;
/// Largest compatibility graph the exact search will build.
pub const CLIQUE_GUARD: usize = 1 << 14;
/// Largest number of column subsets the identity checks will walk.
pub const COLUMN_GUARD: u64 = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CodeKind {
    ConstantWeight { w: u32 },
    /// Weight `w1` on the first `n1` coordinates and `w2` on the last `n2`.
    Doubly { w1: u32, n1: u32, w2: u32, n2: u32 },
    Binary,
}

impl fmt::Display for CodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeKind::ConstantWeight { .. } => f.write_str("constant-weight"),
            CodeKind::Doubly { w1, n1, w2, n2 } => write!(f, "doubly({w1},{n1},{w2},{n2})"),
            CodeKind::Binary => f.write_str("binary"),
        }
    }
}

fn mask(bits: u32) -> u64 {
    if bits >= 64 {
        u64::MAX
    } else {
        (1u64 << bits) - 1
    }
}

/// All `n`-bit words of weight `w`, in increasing order.
fn words_of_weight(n: u32, w: u32) -> Vec<u64> {
    if w > n {
        return Vec::new();
    }
    if w == 0 {
        return vec![0];
    }
    let mut out = Vec::new();
    let mut v = mask(w);
    let limit = mask(n);
    loop {
        out.push(v);
        if v == limit & !mask(n - w) {
            break;
        }
        // next word with the same popcount
        let t = v | (v - 1);
        v = (t + 1) | (((!t & (t + 1)) - 1) >> (v.trailing_zeros() + 1));
    }
    out
}

impl CodeKind {
    fn check(&self, n: u32) -> Result<()> {
        if n == 0 || n > 64 {
            return Err(Error::params(format!("code length {n} outside 1..=64")));
        }
        match *self {
            CodeKind::ConstantWeight { w } if w > n => Err(Error::params(format!("weight {w} exceeds length {n}"))),
            CodeKind::Doubly { w1, n1, w2, n2 } if n1 + n2 != n || w1 > n1 || w2 > n2 => {
                Err(Error::params(format!("doubly shape ({w1},{n1},{w2},{n2}) does not fit length {n}")))
            }
            _ => Ok(()),
        }
    }

    pub fn admits(&self, n: u32, word: u64) -> bool {
        if word & !mask(n) != 0 {
            return false;
        }
        match *self {
            CodeKind::ConstantWeight { w } => word.count_ones() == w,
            CodeKind::Doubly { w1, n1, w2, .. } => {
                (word & mask(n1)).count_ones() == w1 && (word >> n1).count_ones() == w2
            }
            CodeKind::Binary => true,
        }
    }

    /// Number of admissible words, saturating.
    pub fn candidate_count(&self, n: u32) -> u64 {
        let c = |a: u32, b: u32| binomial_u64(a as i64, b as i64).unwrap_or(u64::MAX);
        match *self {
            CodeKind::ConstantWeight { w } => c(n, w),
            CodeKind::Doubly { w1, n1, w2, n2 } => c(n1, w1).saturating_mul(c(n2, w2)),
            CodeKind::Binary => 1u64.checked_shl(n).unwrap_or(u64::MAX),
        }
    }

    fn enumerate(&self, n: u32) -> Result<Vec<u64>> {
        self.check(n)?;
        let count = self.candidate_count(n);
        if count > CANDIDATE_GUARD {
            return Err(Error::Guard(format!(
                "{count} candidate words of kind {self} at n = {n} exceed the limit of {CANDIDATE_GUARD}"
            )));
        }
        Ok(match *self {
            CodeKind::ConstantWeight { w } => words_of_weight(n, w),
            CodeKind::Doubly { w1, n1, w2, n2 } => {
                let low = words_of_weight(n1, w1);
                words_of_weight(n2, w2)
                    .into_iter()
                    .flat_map(|hi| low.iter().map(move |&lo| lo | (hi << n1)))
                    .collect()
            }
            CodeKind::Binary => (0..count).collect(),
        })
    }

    fn random_word(&self, n: u32, rng: &mut ChaCha8Rng) -> u64 {
        let pick = |len: u32, weight: u32, rng: &mut ChaCha8Rng| -> u64 {
            let mut positions: Vec<u32> = (0..len).collect();
            positions.partial_shuffle(rng, weight as usize);
            positions[..weight as usize].iter().fold(0, |acc, &p| acc | (1 << p))
        };
        match *self {
            CodeKind::ConstantWeight { w } => pick(n, w, rng),
            CodeKind::Doubly { w1, n1, w2, n2 } => pick(n1, w1, rng) | (pick(n2, w2, rng) << n1),
            CodeKind::Binary => rng.gen::<u64>() & mask(n),
        }
    }
}

fn distance(a: u64, b: u64) -> u32 {
    (a ^ b).count_ones()
}

/// A code whose shape and minimum distance were checked on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplicitCode {
    n: u32,
    d: u32,
    kind: CodeKind,
    words: Vec<u64>,
}

impl ExplicitCode {
    pub fn new(n: u32, d: u32, kind: CodeKind, words: Vec<u64>) -> Result<Self> {
        kind.check(n)?;
        if d == 0 {
            return Err(Error::params("minimum distance must be positive"));
        }
        for (idx, &u) in words.iter().enumerate() {
            if !kind.admits(n, u) {
                return Err(Error::params(format!("word {} does not have shape {kind}", format_word(u, n))));
            }
            for &v in &words[..idx] {
                if distance(u, v) < d {
                    return Err(Error::params(format!(
                        "words {} and {} are at distance {} < {d}",
                        format_word(v, n),
                        format_word(u, n),
                        distance(u, v)
                    )));
                }
            }
        }
        Ok(ExplicitCode { n, d, kind, words })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn kind(&self) -> CodeKind {
        self.kind
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Smallest pairwise distance, if there are two words.
    pub fn min_distance(&self) -> Option<u32> {
        let mut best = None;
        for (idx, &u) in self.words.iter().enumerate() {
            for &v in &self.words[..idx] {
                let t = distance(u, v);
                best = Some(best.map_or(t, |b: u32| b.min(t)));
            }
        }
        best
    }

    /// `counts[t]` = number of codewords at distance `t` from `word`.
    pub fn sphere_counts(&self, word: u64) -> Vec<u64> {
        let mut counts = vec![0u64; self.n as usize + 1];
        for &v in &self.words {
            if v != word {
                counts[distance(word, v) as usize] += 1;
            }
        }
        counts
    }

    /// Witness text: header `n d w kind`, then one `0`/`1` line per word
    /// (first character is coordinate 0).
    pub fn to_text(&self) -> String {
        let w = match self.kind {
            CodeKind::ConstantWeight { w } => w.to_string(),
            CodeKind::Doubly { w1, w2, .. } => (w1 + w2).to_string(),
            CodeKind::Binary => "-".to_string(),
        };
        let mut out = format!("{} {} {} {}\n", self.n, self.d, w, self.kind);
        for &u in &self.words {
            out.push_str(&format_word(u, self.n));
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::params("empty witness"))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 4 {
            return Err(Error::params(format!("witness header {header:?} is not `n d w kind`")));
        }
        let num = |s: &str| s.parse::<u32>().map_err(|_| Error::params(format!("bad number {s:?} in witness header")));
        let (n, d) = (num(fields[0])?, num(fields[1])?);
        let kind = match fields[3] {
            "constant-weight" => CodeKind::ConstantWeight { w: num(fields[2])? },
            "binary" => CodeKind::Binary,
            other => parse_doubly(other)?,
        };
        let words = lines.map(|l| parse_word(l.trim(), n)).collect::<Result<Vec<_>>>()?;
        ExplicitCode::new(n, d, kind, words)
    }
}

fn parse_doubly(s: &str) -> Result<CodeKind> {
    let inner = s
        .strip_prefix("doubly(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::params(format!("unknown code kind {s:?}")))?;
    let v = inner
        .split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| Error::params(format!("bad doubly shape {s:?}"))))
        .collect::<Result<Vec<_>>>()?;
    match v[..] {
        [w1, n1, w2, n2] => Ok(CodeKind::Doubly { w1, n1, w2, n2 }),
        _ => Err(Error::params(format!("bad doubly shape {s:?}"))),
    }
}

pub fn format_word(u: u64, n: u32) -> String {
    (0..n).map(|b| if u >> b & 1 == 1 { '1' } else { '0' }).collect()
}

pub fn parse_word(s: &str, n: u32) -> Result<u64> {
    if s.len() != n as usize {
        return Err(Error::params(format!("word {s:?} does not have length {n}")));
    }
    s.chars().enumerate().try_fold(0u64, |acc, (b, ch)| match ch {
        '0' => Ok(acc),
        '1' => Ok(acc | 1 << b),
        _ => Err(Error::params(format!("word {s:?} contains {ch:?}"))),
    })
}

impl FromStr for ExplicitCode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ExplicitCode::from_text(s)
    }
}

/// Fixed-size bitset over graph vertices.
#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn clear(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }
    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }
    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
    fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn first(&self) -> Option<usize> {
        self.0.iter().enumerate().find(|(_, &w)| w != 0).map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// Branch-and-bound maximum clique with greedy-coloring bounds and orbit
/// pruning.
///
/// Vertices are words. The symmetry group in use permutes coordinates within
/// each cell of a partition of `0..n` (plus translations when `translate` is
/// set, for unrestricted binary codes). It acts transitively on the vertices,
/// and once words are chosen their pointwise stabilizer is the product of the
/// symmetric groups on the refined cells, whose orbits on the remaining words
/// are fixed by per-cell weights of `word ^ anchor`. Each branch tries one
/// representative per orbit, and an explored orbit is dropped from the
/// candidates since any clique through another member maps onto it.
struct CliqueSearch {
    adj: Vec<Bits>,
    words: Vec<u64>,
    translate: bool,
    best: Vec<usize>,
}

impl CliqueSearch {
    fn run(adj: Vec<Bits>, words: Vec<u64>, blocks: Vec<u64>, translate: bool) -> Vec<usize> {
        let mut search = CliqueSearch { adj, words, translate, best: Vec::new() };
        // The group is transitive, so the first word can be fixed.
        let root = 0;
        let cells = search.refine(&blocks, root, root);
        let mut current = vec![root];
        let cand = search.adj[root].clone();
        if cand.is_empty() {
            search.best = current;
        } else {
            search.expand(cand, &mut current, &cells);
        }
        search.best
    }

    /// Cells after fixing vertex `v`, relative to the first chosen vertex.
    fn refine(&self, cells: &[u64], anchor: usize, v: usize) -> Vec<u64> {
        let split = if v == anchor {
            if self.translate {
                return cells.to_vec();
            }
            self.words[v]
        } else {
            self.words[v] ^ self.words[anchor]
        };
        cells
            .iter()
            .flat_map(|&c| [c & split, c & !split])
            .filter(|&c| c != 0)
            .collect()
    }

    /// Vertices of `cand` in color order, with the color count bound.
    fn color(&self, cand: &Bits) -> Vec<(usize, usize)> {
        let mut uncolored = cand.clone();
        let mut order = Vec::with_capacity(cand.count());
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut avail = uncolored.clone();
            while let Some(v) = avail.first() {
                avail.clear(v);
                uncolored.clear(v);
                for (a, b) in avail.0.iter_mut().zip(&self.adj[v].0) {
                    *a &= !b;
                }
                order.push((v, color));
            }
        }
        order
    }

    fn expand(&mut self, mut cand: Bits, current: &mut Vec<usize>, cells: &[u64]) {
        let order = self.color(&cand);
        let anchor = self.words[current[0]];
        let symmetric = cells.iter().any(|c| c.count_ones() > 1);
        let key = |v: usize| -> Vec<u32> { cells.iter().map(|c| ((self.words[v] ^ anchor) & c).count_ones()).collect() };
        let keys: HashMap<usize, Vec<u32>> =
            if symmetric { order.iter().map(|&(v, _)| (v, key(v))).collect() } else { HashMap::new() };
        for &(v, color) in order.iter().rev() {
            if !cand.contains(v) {
                continue;
            }
            if current.len() + color <= self.best.len() {
                return;
            }
            current.push(v);
            let next = cand.and(&self.adj[v]);
            if next.is_empty() {
                if current.len() > self.best.len() {
                    self.best = current.clone();
                }
            } else {
                let refined = self.refine(cells, current[0], v);
                self.expand(next, current, &refined);
            }
            current.pop();
            if symmetric {
                let orbit = &keys[&v];
                for &(u, _) in &order {
                    if &keys[&u] == orbit {
                        cand.clear(u);
                    }
                }
            } else {
                cand.clear(v);
            }
        }
    }
}

/// Exact maximum size of a code of the given shape and minimum distance,
/// with a witness. Refuses instances beyond the search guards.
pub fn exhaustive_max(n: u32, d: u32, kind: CodeKind) -> Result<ExplicitCode> {
    if d == 0 {
        return Err(Error::params("minimum distance must be positive"));
    }
    kind.check(n)?;
    let count = kind.candidate_count(n);
    if count > CLIQUE_GUARD as u64 {
        return Err(Error::Guard(format!(
            "{count} candidate words of kind {kind} at n = {n} exceed the exact-search limit of {CLIQUE_GUARD}"
        )));
    }
    let words = kind.enumerate(n)?;
    if words.is_empty() {
        return ExplicitCode::new(n, d, kind, Vec::new());
    }
    let len = words.len();
    let adj: Vec<Bits> = words
        .iter()
        .map(|&u| {
            let mut row = Bits::empty(len);
            for (j, &v) in words.iter().enumerate() {
                if distance(u, v) >= d {
                    row.set(j);
                }
            }
            row
        })
        .collect();
    let blocks = match kind {
        CodeKind::Doubly { n1, .. } => vec![mask(n1), mask(n) & !mask(n1)],
        _ => vec![mask(n)],
    };
    let blocks: Vec<u64> = blocks.into_iter().filter(|&c| c != 0).collect();
    let translate = kind == CodeKind::Binary;
    let mut clique: Vec<u64> =
        CliqueSearch::run(adj, words.clone(), blocks, translate).into_iter().map(|i| words[i]).collect();
    clique.sort_unstable();
    ExplicitCode::new(n, d, kind, clique)
}

/// Randomized greedy code, deterministic in `seed`. Small spaces are
/// enumerated in shuffled order; larger ones are sampled.
pub fn greedy_lower_bound(n: u32, d: u32, kind: CodeKind, seed: u64) -> Result<ExplicitCode> {
    const ENUMERATE_LIMIT: u64 = 200_000;
    const SAMPLE_ATTEMPTS: usize = 20_000;
    kind.check(n)?;
    if d == 0 {
        return Err(Error::params("minimum distance must be positive"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut code: Vec<u64> = Vec::new();
    let offer = |u: u64, code: &mut Vec<u64>| {
        if code.iter().all(|&v| distance(u, v) >= d) {
            code.push(u);
        }
    };
    if kind.candidate_count(n) <= ENUMERATE_LIMIT {
        let mut words = kind.enumerate(n)?;
        words.shuffle(&mut rng);
        for u in words {
            offer(u, &mut code);
        }
    } else {
        for _ in 0..SAMPLE_ATTEMPTS {
            let u = kind.random_word(n, &mut rng);
            offer(u, &mut code);
        }
    }
    ExplicitCode::new(n, d, kind, code)
}

/// `A_t = (1/|C|) Σ_c |S_t(c)|` for `t = 0..=n`.
pub fn distance_distribution(code: &ExplicitCode) -> Result<BTreeMap<u32, Rational>> {
    if code.is_empty() {
        return Err(Error::params("distance distribution of an empty code"));
    }
    let mut pairs = vec![0u64; code.n as usize + 1];
    for (idx, &u) in code.words.iter().enumerate() {
        for &v in &code.words[..idx] {
            pairs[distance(u, v) as usize] += 2;
        }
    }
    let m = code.len() as u64;
    let mut out: BTreeMap<u32, Rational> = (0..=code.n).map(|t| (t, frac(pairs[t as usize], m))).collect();
    out.insert(0, frac(1, 1));
    Ok(out)
}

/// Distribution keyed the way the LP variables are: half-distances for
/// constant-weight codes, distances otherwise. Distance zero is omitted.
pub fn lp_point(code: &ExplicitCode) -> Result<BTreeMap<u32, Rational>> {
    let dist = distance_distribution(code)?;
    Ok(match code.kind {
        CodeKind::ConstantWeight { .. } => {
            dist.into_iter().filter(|(t, _)| *t > 0 && t % 2 == 0).map(|(t, a)| (t / 2, a)).collect()
        }
        _ => dist.into_iter().filter(|(t, _)| *t > 0).collect(),
    })
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LemmaReport {
    pub checks: u64,
    pub violations: Vec<String>,
}

impl LemmaReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.violations.push(what());
        }
    }
}

/// Largest distance between words of weight `w` at distances `2i` and `2j`
/// from a common word of weight `w`.
fn pair_reach(i: u32, j: u32, n: u32, w: u32) -> u32 {
    let s = i + j;
    s.min(2 * w - s) + s.min(2 * (n - w) - s)
}

/// Per-codeword check of the sphere caps, the exclusion rule for pairs that
/// cannot coexist, the conditional caps for pairs at reach exactly `d`, and
/// the three weighted inequalities built from them.
pub fn verify_lemmas(code: &ExplicitCode, p: &CodeParams, peers: &PeerBoundSet) -> Result<LemmaReport> {
    if code.kind != (CodeKind::ConstantWeight { w: p.w }) || code.n != p.n || code.d < p.d {
        return Err(Error::params(format!(
            "code ({} {} {}) does not match {p}",
            code.n, code.d, code.kind
        )));
    }
    let halves: Vec<u32> = p.halves().collect();
    let mut report = LemmaReport::default();
    for &c in &code.words {
        let counts = code.sphere_counts(c);
        let s = |i: u32| counts[2 * i as usize];
        for &i in &halves {
            let cap = peers.p(i)?;
            report.check(s(i) <= cap, || format!("{}: |S_{}| = {} > {cap}", format_word(c, p.n), 2 * i, s(i)));
        }
        for &i in &halves {
            for &j in &halves {
                if i >= j && pair_reach(i, j, p.n, p.w) < p.d {
                    continue;
                }
                let reach = pair_reach(i, j, p.n, p.w);
                if reach < p.d {
                    report.check(s(i) == 0 || s(j) == 0, || {
                        format!("{}: S_{} and S_{} both nonempty", format_word(c, p.n), 2 * i, 2 * j)
                    });
                } else if reach == p.d && i != j {
                    // cap on S_2i once S_2j is nonempty
                    let cap = peers.p_cross(i, j)?;
                    report.check(s(j) == 0 || s(i) <= cap, || {
                        format!("{}: |S_{}| = {} > {cap} with S_{} nonempty", format_word(c, p.n), 2 * i, s(i), 2 * j)
                    });
                    if i < j {
                        check_weighted(&mut report, c, p, peers, i, j, s(i), s(j))?;
                    }
                }
            }
        }
    }
    Ok(report)
}

#[allow(clippy::too_many_arguments)]
fn check_weighted(
    report: &mut LemmaReport,
    c: u64,
    p: &CodeParams,
    peers: &PeerBoundSet,
    i: u32,
    j: u32,
    si: u64,
    sj: u64,
) -> Result<()> {
    let (pi, pj) = (peers.p(i)? as i128, peers.p(j)? as i128);
    let (pij, pji) = (peers.p_cross(i, j)? as i128, peers.p_cross(j, i)? as i128);
    let (si, sj) = (si as i128, sj as i128);
    // everything multiplied through by the positive denominators
    let cond = pij * pj + pji * pi - pi * pj;
    let word = format_word(c, p.n);
    if cond >= 0 {
        let lhs = (pj - pji) * si + pij * sj;
        report.check(lhs <= pj * pij, || format!("{word}: reduce-first ({i},{j}) fails"));
        let lhs = pji * si + (pi - pij) * sj;
        report.check(lhs <= pi * pji, || format!("{word}: reduce-second ({i},{j}) fails"));
    }
    if cond <= 0 {
        report.check(pj * si + pi * sj <= pi * pj, || format!("{word}: plain ({i},{j}) fails"));
    }
    Ok(())
}

/// Both sides of the column-count identities for one `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnReport {
    pub k: u32,
    pub subsets: u64,
    /// `Σ_K wt(K)` and `M · P_k^-(n; w)`, for constant-weight codes.
    pub one_row: Option<(BigInt, BigInt)>,
    /// Odd-parity `2 × k` submatrices counted over row pairs and over columns.
    pub odd_by_pairs: BigInt,
    pub odd_by_columns: BigInt,
    /// Even-parity counts, likewise.
    pub even_by_pairs: BigInt,
    pub even_by_columns: BigInt,
    /// Largest odd count allowed by the column-weight total.
    pub odd_ceiling: Option<BigInt>,
}

impl ColumnReport {
    pub fn holds(&self) -> bool {
        self.one_row.as_ref().is_none_or(|(a, b)| a == b)
            && self.odd_by_pairs == self.odd_by_columns
            && self.even_by_pairs == self.even_by_columns
            && self.odd_ceiling.as_ref().is_none_or(|cap| self.odd_by_columns <= *cap)
    }
}

/// Walk every `k`-subset of columns and compare the row-pair and column
/// counts. Refuses more than [`COLUMN_GUARD`] subsets.
pub fn verify_column_identities(code: &ExplicitCode, k: u32) -> Result<ColumnReport> {
    let n = code.n;
    if k == 0 || k > n {
        return Err(Error::params(format!("column subset size {k} outside 1..={n}")));
    }
    let subsets = binomial(n as i64, k as i64).to_u64().unwrap_or(u64::MAX);
    if subsets > COLUMN_GUARD {
        return Err(Error::Guard(format!("C({n},{k}) = {subsets} column subsets exceed {COLUMN_GUARD}")));
    }
    let m = code.len() as i64;
    let mut weight_total = BigInt::zero();
    let mut odd_cols = BigInt::zero();
    let mut even_cols = BigInt::zero();
    for cols in words_of_weight(n, k) {
        let wt = code.words.iter().filter(|&&u| (u & cols).count_ones() % 2 == 1).count() as i64;
        weight_total += wt;
        odd_cols += 2 * wt * (m - wt);
        even_cols += wt * (wt - 1) + (m - wt) * (m - wt - 1);
    }
    let (nn, kk) = (n as i64, k as i64);
    let mut odd_pairs = BigInt::zero();
    let mut even_pairs = BigInt::zero();
    for (idx, &u) in code.words.iter().enumerate() {
        for &v in &code.words[..idx] {
            let t = distance(u, v) as i64;
            odd_pairs += 2 * krawtchouk_minus(kk, nn, t);
            even_pairs += 2 * krawtchouk_plus(kk, nn, t);
        }
    }
    let (one_row, odd_ceiling) = match code.kind {
        CodeKind::ConstantWeight { w } if m > 0 => {
            let target = BigInt::from(m) * krawtchouk_minus(kk, nn, w as i64);
            let total = binomial(nn, kk);
            let (q, r) = (&target / &total, &target % &total);
            let mb = BigInt::from(m);
            let cap = 2 * ((&total - &r) * &q * (&mb - &q) + &r * (&q + 1) * (&mb - &q - 1));
            (Some((weight_total, target)), Some(cap))
        }
        _ => (None, None),
    };
    Ok(ColumnReport {
        k,
        subsets,
        one_row,
        odd_by_pairs: odd_pairs,
        odd_by_columns: odd_cols,
        even_by_pairs: even_pairs,
        even_by_columns: even_cols,
        odd_ceiling,
    })
}
