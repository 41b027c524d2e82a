//! Exact rational scalars.
//!
//! Every quantity in the kernel is a [`Rational`]: an arbitrary-precision
//! fraction kept in canonical form (reduced, positive denominator). There is
//! no floating point anywhere in the computational paths.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational in canonical form: `gcd(|numer|, denom) = 1`
/// and `denom > 0`. Arithmetic is exact.
pub type Rational = num_rational::BigRational;

/// Builds the canonical rational `numer/denom`, rejecting a zero denominator.
pub fn rational(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Rational> {
    let d: BigInt = denom.into();
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(numer.into(), d))
}

/// Integer shorthand.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Fraction shorthand; panics on a zero denominator (test/helper use).
pub fn frac(n: i64, d: i64) -> Rational {
    assert!(d != 0, "zero denominator");
    Rational::new(n.into(), d.into())
}

/// Parses `"p/q"` or `"n"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n
                .trim()
                .parse()
                .map_err(|_| Error::InvalidConfig(format!("bad rational literal {s:?}")))?;
            let d: BigInt = d
                .trim()
                .parse()
                .map_err(|_| Error::InvalidConfig(format!("bad rational literal {s:?}")))?;
            rational(n, d)
        }
        None => {
            let n: BigInt = s
                .parse()
                .map_err(|_| Error::InvalidConfig(format!("bad rational literal {s:?}")))?;
            Ok(Rational::from_integer(n))
        }
    }
}

/// Rescales a slice of rationals to coprime integers with the first nonzero
/// entry positive. The all-zero slice is returned unchanged.
///
/// This is the canonical representative convention used for projective
/// triples, decomposition pairs and nullspace basis vectors.
pub fn canonical_coprime(values: &[Rational]) -> Vec<Rational> {
    let mut den = BigInt::one();
    for v in values {
        den = den.lcm(v.denom());
    }
    let mut ints: Vec<BigInt> = values.iter().map(|v| v.numer() * (&den / v.denom())).collect();
    let mut g = BigInt::zero();
    for n in &ints {
        g = g.gcd(n);
    }
    if g.is_zero() {
        return values.to_vec();
    }
    for n in &mut ints {
        *n /= &g;
    }
    if let Some(first) = ints.iter().find(|n| !n.is_zero()) {
        if first.is_negative() {
            for n in &mut ints {
                *n = -(n.clone());
            }
        }
    }
    ints.into_iter().map(Rational::from_integer).collect()
}

/// `r^exp` by repeated multiplication (exponents here are tiny).
pub fn pow_rat(r: &Rational, exp: usize) -> Rational {
    let mut out = Rational::one();
    for _ in 0..exp {
        out *= r;
    }
    out
}
