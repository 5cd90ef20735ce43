//! Exact rationals, backed by `num_rational::BigRational`.
//!
//! Values always live in lowest terms with a positive denominator. The
//! text form used by every file format is `"p/q"`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

pub fn frac(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Lossless `"p/q"` text form.
pub fn to_text(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::CertificateFormat(format!("not a rational: {s:?}"));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let p: BigInt = p.trim().parse().map_err(|_| bad())?;
    let q: BigInt = q.trim().parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

/// Largest integer not exceeding `r`.
pub fn floor(r: &Rational) -> BigInt {
    r.numer().div_floor(r.denom())
}

/// `(⌊r⌋ + 1)` as `u64`, or `None` when it does not fit or `r < 0`.
pub fn floor_plus_one(r: &Rational) -> Option<u64> {
    let f = floor(r) + BigInt::one();
    if f.is_negative() {
        return None;
    }
    u64::try_from(f).ok()
}

pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}
