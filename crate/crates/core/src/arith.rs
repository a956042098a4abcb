//! Exact integer and rational arithmetic plus binomial coefficients.
//!
//! Nothing here touches floating point. Natural and integer values are
//! arbitrary precision; rationals are kept reduced with a positive
//! denominator, so equal values always compare equal structurally.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::ParseRationalError;

/// Arbitrary-precision non-negative integer.
pub type Natural = BigUint;
/// Arbitrary-precision signed integer.
pub type Integer = BigInt;
/// Reduced fraction with a strictly positive denominator.
pub type Rational = BigRational;

/// `n!`
pub fn factorial(n: u64) -> Natural {
    (2..=n).fold(Natural::one(), |acc, i| acc * i)
}

/// `binomial(n, k)` for natural arguments; zero when `k > n`.
///
/// Uses the running product `c <- c * (n - i) / (i + 1)`, where each
/// division is exact because `c * (n - i)` is `(i + 1) * binomial(n, i + 1)`.
pub fn binomial(n: u64, k: u64) -> Natural {
    if k > n {
        return Natural::zero();
    }
    let k = k.min(n - k);
    let mut c = Natural::one();
    for i in 0..k {
        c *= n - i;
        c /= i + 1;
    }
    c
}

/// Signed convenience wrapper: `binomial(n, k)` as an [`Integer`].
pub fn binom(n: u64, k: u64) -> Integer {
    Integer::from(binomial(n, k))
}

/// Full row `binomial(n, 0..=n)`, built incrementally.
pub fn binomial_row(n: u64) -> Vec<Natural> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut c = Natural::one();
    row.push(c.clone());
    for i in 0..n {
        c *= n - i;
        c /= i + 1;
        row.push(c.clone());
    }
    row
}

/// Generalized binomial coefficient `x(x-1)...(x-k+1) / k!` for rational `x`.
pub fn binomial_gen(x: &Rational, k: u64) -> Rational {
    let mut num = Rational::one();
    let mut term = x.clone();
    for _ in 0..k {
        if term.is_zero() {
            return Rational::zero();
        }
        num *= &term;
        term -= Rational::one();
    }
    num / Rational::from_integer(Integer::from(factorial(k)))
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(Integer::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(Integer::from(p), Integer::from(q))
}

/// `(-1)^e` as an integer sign.
pub fn sign_pow(e: u64) -> Integer {
    if e.is_multiple_of(2) {
        Integer::one()
    } else {
        -Integer::one()
    }
}

/// Parses `"p/q"`, `"p"`, or a signed integer into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let bad = || ParseRationalError(s.to_string());
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: Integer = p.parse().map_err(|_| bad())?;
    let q: Integer = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

/// Renders as `p/q`, or a bare integer when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exact quotient `a / b`, or `None` when `b` does not divide `a`.
pub fn exact_div(a: &Integer, b: &Integer) -> Option<Integer> {
    if b.is_zero() {
        return None;
    }
    let (q, r) = a.div_rem(b);
    r.is_zero().then_some(q)
}

/// True when the value is an integer (denominator one).
pub fn is_integral(r: &Rational) -> bool {
    r.denom().is_one()
}
