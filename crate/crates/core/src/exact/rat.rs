//! Scalar helpers over arbitrary-precision rationals.
//!
//! `BigRational` already keeps values in canonical form (positive
//! denominator, reduced fraction, zero as `0/1`), so it is used directly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ExactError;

/// Exact rational scalar.
pub type Rat = BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `p/q` as a rational. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Parses a rational token of the form `[-]p` or `[-]p/q` (decimal, `q > 0`).
pub fn parse_rat(token: &str) -> Result<Rat, ExactError> {
    let bad = || ExactError::BadToken(token.to_string());
    let (negative, body) = match token.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, token),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    let (num, den) = match body.split_once('/') {
        Some((p, q)) if digits(p) && digits(q) => (p, q),
        None if digits(body) => (body, "1"),
        _ => return Err(bad()),
    };
    let mut p: BigInt = num.parse().map_err(|_| bad())?;
    let q: BigInt = den.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    if negative {
        p = -p;
    }
    Ok(Rat::new(p, q))
}

/// Renders a rational as `p` or `p/q`.
pub fn format_rat(value: &Rat) -> String {
    value.to_string()
}

/// Smallest positive multiple of `v` with integer entries and gcd 1.
///
/// The zero vector is returned unchanged. The sign of every entry is kept.
pub fn primitive_integer_vector(v: &[Rat]) -> Vec<Rat> {
    if v.iter().all(Zero::is_zero) {
        return v.to_vec();
    }
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let gcd = ints
        .iter()
        .filter(|x| !x.is_zero())
        .fold(BigInt::zero(), |acc, x| acc.gcd(x));
    ints.into_iter()
        .map(|x| Rat::from_integer(x / &gcd))
        .collect()
}

/// Scales a vector with a positive minimum so that its minimum entry is one.
pub fn normalize_min_one(v: &[Rat]) -> Vec<Rat> {
    let min = v.iter().min().cloned().unwrap_or_else(Rat::one);
    debug_assert!(min.is_positive());
    v.iter().map(|x| x / &min).collect()
}

/// `max |x_i|`, zero for an empty slice.
pub fn inf_norm(v: &[Rat]) -> Rat {
    v.iter().map(|x| x.abs()).max().unwrap_or_else(Rat::zero)
}

/// Inner product of two equally long vectors.
pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Converts a slice of small integers.
pub fn rat_vec(values: &[i64]) -> Vec<Rat> {
    values.iter().map(|&v| rat(v)).collect()
}
