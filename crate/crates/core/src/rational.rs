//! Exact arithmetic helpers over arbitrary-precision integers and rationals.

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Signed, Zero};

use crate::Error;

/// Arbitrary-precision integer.
pub type Int = BigInt;
/// Exact rational number, always stored reduced with a positive denominator.
pub type Rational = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(v: i64) -> Rational {
    Rational::from_integer(int(v))
}

/// `n/d` as an exact rational.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(int(n), int(d))
}

pub fn factorial(n: u32) -> Int {
    let mut out = Int::one();
    for k in 2..=u64::from(n) {
        out *= Int::from(k);
    }
    out
}

pub fn binomial(n: u32, k: u32) -> Int {
    if k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut out = Int::one();
    for i in 0..u64::from(k) {
        out = out * Int::from(u64::from(n) - i) / Int::from(i + 1);
    }
    out
}

/// `(Σ counts)! / Π counts_i!`, the number of arrangements of a multiset.
pub fn multinomial(counts: &[u32]) -> Int {
    let total: u32 = counts.iter().sum();
    let mut out = factorial(total);
    for &c in counts {
        out /= factorial(c);
    }
    out
}

/// `base^exp` for a nonnegative base as an integer.
pub fn pow_int(base: u64, exp: u32) -> Int {
    Int::from(base).pow(exp)
}

/// `base^exp` for positive `base` and a possibly negative exponent.
pub fn pow_signed(base: u64, exp: i64) -> Rational {
    assert!(base > 0, "pow_signed needs a positive base");
    let mag = Int::from(base).pow(exp.unsigned_abs() as u32);
    if exp >= 0 {
        Rational::from_integer(mag)
    } else {
        Rational::new(Int::one(), mag)
    }
}

/// Render a rational in canonical `p/q` form (`p` alone when q = 1).
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `p/q` or a bare integer `p` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let bad = || Error::Parse(format!("cannot parse rational from {s:?}"));
    let parse_int = |t: &str| t.parse::<Int>().map_err(|_| bad());
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s.trim())?)),
        Some((n, d)) => {
            let denom = parse_int(d.trim())?;
            if denom.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(parse_int(n.trim())?, denom))
        }
    }
}

/// True when the rational is a nonnegative integer.
pub fn is_nonneg_integer(r: &Rational) -> bool {
    r.is_integer() && r.numer().sign() != Sign::Minus
}

pub fn is_positive(r: &Rational) -> bool {
    r.is_positive()
}

pub fn is_negative(r: &Rational) -> bool {
    r.is_negative()
}

/// Absolute value.
pub fn abs(r: &Rational) -> Rational {
    r.abs()
}
