//! Upper bounds on `T(w1, n1, w2, n2, d)`, the largest size of a
//! doubly-constant-weight code: `w1` ones among the first `n1` coordinates,
//! `w2` ones among the last `n2`, minimum distance `d`.
//!
//! A query is answered by the minimum of
//!
//! 1. the exact identities (block swap, per-block complement, `d = 2`,
//!    `2w1 + 2w2 <= d`, and `w1 = 0` reducing to a constant-weight value),
//! 2. an entry of a [`TBoundTable`] loaded from data,
//! 3. two containment fallbacks that are always valid:
//!    `T <= C(n1,w1) C(n2,w2)` and `T <= A(n1+n2, d, w1+w2)` when the latter
//!    is exactly known.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use log::warn;
use serde::{Deserialize, Serialize};

use crate::combinatorics::binomial_u64;
use crate::engine::{normalize, Normalized};
use crate::error::{Error, Result};

const SEED_TABLE: &str = include_str!("../data/tbounds_seed.csv");

/// Parameters of a doubly-constant-weight code. `d` is kept even.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DoublyParams {
    pub w1: u32,
    pub n1: u32,
    pub w2: u32,
    pub n2: u32,
    pub d: u32,
}

impl DoublyParams {
    /// Validates the shape and bumps odd `d` to `d + 1`, which leaves `T` unchanged.
    pub fn new(w1: u32, n1: u32, w2: u32, n2: u32, d: u32) -> Result<Self> {
        if w1 > n1 || w2 > n2 {
            return Err(Error::params(format!(
                "T({w1},{n1},{w2},{n2},{d}): block weight exceeds block length"
            )));
        }
        if d == 0 {
            return Err(Error::params("T(...): minimum distance must be positive"));
        }
        if n1 + n2 > 64 {
            return Err(Error::params(format!(
                "T({w1},{n1},{w2},{n2},{d}): total length above 64 is not supported"
            )));
        }
        let d = if d % 2 == 1 { d + 1 } else { d };
        Ok(DoublyParams { w1, n1, w2, n2, d })
    }

    pub fn is_canonical(&self) -> bool {
        canonicalize(*self) == *self
    }
}

impl fmt::Display for DoublyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{},{},{},{})", self.w1, self.n1, self.w2, self.n2, self.d)
    }
}

/// Complement each block to its lighter side, then order the blocks.
pub fn canonicalize(p: DoublyParams) -> DoublyParams {
    let a = (p.w1.min(p.n1 - p.w1), p.n1);
    let b = (p.w2.min(p.n2 - p.w2), p.n2);
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    DoublyParams { w1: lo.0, n1: lo.1, w2: hi.0, n2: hi.1, d: p.d }
}

/// Where a bound on `T` came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "detail", rename_all = "kebab-case")]
pub enum TSource {
    Identity(String),
    Table(String),
    BinomialFallback,
    ContainmentFallback,
}

impl fmt::Display for TSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TSource::Identity(rule) => write!(f, "identity: {rule}"),
            TSource::Table(prov) => write!(f, "table: {prov}"),
            TSource::BinomialFallback => write!(f, "fallback: C(n1,w1)C(n2,w2)"),
            TSource::ContainmentFallback => write!(f, "fallback: A(n1+n2,d,w1+w2)"),
        }
    }
}

/// An answered `T` query.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TBound {
    pub key: DoublyParams,
    pub bound: u64,
    pub source: TSource,
}

impl TBound {
    /// Whether the value is exact or backed by data (rather than a fallback).
    pub fn is_informed(&self) -> bool {
        matches!(self.source, TSource::Identity(_) | TSource::Table(_))
    }
}

/// Exact value of `T` when one of the identities applies to the canonical key.
pub fn exact_t(p: DoublyParams) -> Option<(u64, &'static str)> {
    let weight = 2 * (p.w1 + p.w2);
    if weight < p.d {
        return Some((1, "2w1+2w2 < d"));
    }
    if p.d <= 2 {
        let v = binomial_u64(p.n1 as i64, p.w1 as i64)?
            .checked_mul(binomial_u64(p.n2 as i64, p.w2 as i64)?)?;
        return Some((v, "d = 2"));
    }
    if p.w1 == 0 {
        return match normalize(p.n2, p.d, p.w2) {
            Ok(Normalized::Exact { value, .. }) => Some((value, "w1 = 0")),
            _ => None,
        };
    }
    if weight == p.d {
        let v = (p.n1 / p.w1).min(p.n2 / p.w2) as u64;
        return Some((v, "d = 2w1+2w2"));
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TEntry {
    pub bound: u64,
    pub provenance: String,
}

/// Upper bounds on `T` keyed by canonical parameters.
#[derive(Debug, Clone, Default)]
pub struct TBoundTable {
    entries: BTreeMap<DoublyParams, TEntry>,
}

impl TBoundTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// The table embedded in the crate.
    pub fn seed() -> Self {
        Self::parse(SEED_TABLE).expect("embedded seed table parses")
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&DoublyParams, &TEntry)> {
        self.entries.iter()
    }

    pub fn get(&self, p: DoublyParams) -> Option<&TEntry> {
        self.entries.get(&canonicalize(p))
    }

    /// Insert a bound; a second entry for the same canonical key is an error.
    pub fn insert(&mut self, p: DoublyParams, bound: u64, provenance: impl Into<String>) -> Result<()> {
        if bound == 0 {
            return Err(Error::params(format!("{p}: stored bound must be at least 1")));
        }
        let key = canonicalize(p);
        if self.entries.contains_key(&key) {
            return Err(Error::DuplicateKey(key.to_string()));
        }
        self.entries.insert(key, TEntry { bound, provenance: provenance.into() });
        Ok(())
    }

    /// Merge `other` into `self`, keeping the smaller bound on shared keys.
    pub fn merge(&mut self, other: TBoundTable) {
        for (key, entry) in other.entries {
            match self.entries.get(&key) {
                Some(existing) if existing.bound <= entry.bound => {}
                _ => {
                    self.entries.insert(key, entry);
                }
            }
        }
    }

    /// Parse the `w1,n1,w2,n2,d,bound,provenance` text format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut table = TBoundTable::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.splitn(7, ',').map(str::trim).collect();
            if fields.len() != 7 {
                return Err(Error::TableParse {
                    line: line_no,
                    message: format!("expected 7 comma-separated fields, found {}", fields.len()),
                });
            }
            let num = |i: usize| -> Result<u64> {
                fields[i].parse::<u64>().map_err(|_| Error::TableParse {
                    line: line_no,
                    message: format!("field {} is not a nonnegative integer: {:?}", i + 1, fields[i]),
                })
            };
            let small = |i: usize| -> Result<u32> {
                u32::try_from(num(i)?).map_err(|_| Error::TableParse {
                    line: line_no,
                    message: format!("field {} out of range", i + 1),
                })
            };
            let p = DoublyParams::new(small(0)?, small(1)?, small(2)?, small(3)?, small(4)?)
                .map_err(|e| Error::TableParse { line: line_no, message: e.to_string() })?;
            let bound = num(5)?;
            match table.insert(p, bound, fields[6]) {
                Ok(()) => {}
                Err(Error::DuplicateKey(key)) => {
                    return Err(Error::TableParse {
                        line: line_no,
                        message: format!("duplicate canonical key {key}"),
                    })
                }
                Err(e) => return Err(Error::TableParse { line: line_no, message: e.to_string() }),
            }
        }
        Ok(table)
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::parse(&text)
    }

    /// Best available upper bound on `T(p)`. Never fails; a weak fallback is
    /// returned when nothing better is known.
    pub fn lookup(&self, p: DoublyParams) -> TBound {
        lookup_t(p, self)
    }
}

/// See [`TBoundTable::lookup`].
pub fn lookup_t(p: DoublyParams, table: &TBoundTable) -> TBound {
    let key = canonicalize(p);
    let mut best: Option<(u64, TSource)> = None;
    let mut offer = |value: u64, source: TSource| {
        if best.as_ref().is_none_or(|(b, _)| value < *b) {
            best = Some((value, source));
        }
    };

    let exact = exact_t(key);
    if let Some((value, rule)) = exact {
        offer(value, TSource::Identity(rule.to_string()));
    }
    if let Some(entry) = table.entries.get(&key) {
        if let Some((value, _)) = exact {
            if value != entry.bound {
                warn!(
                    "{key}: table entry {} ({}) disagrees with exact value {value}",
                    entry.bound, entry.provenance
                );
            }
        }
        offer(entry.bound, TSource::Table(entry.provenance.clone()));
    }
    if let Ok(Normalized::Exact { value, .. }) = normalize(key.n1 + key.n2, key.d, key.w1 + key.w2) {
        offer(value, TSource::ContainmentFallback);
    }
    let product = binomial_u64(key.n1 as i64, key.w1 as i64)
        .zip(binomial_u64(key.n2 as i64, key.w2 as i64))
        .and_then(|(a, b)| a.checked_mul(b))
        .unwrap_or(u64::MAX);
    offer(product.max(1), TSource::BinomialFallback);

    let (bound, source) = best.expect("binomial fallback always offered");
    TBound { key, bound, source }
}
