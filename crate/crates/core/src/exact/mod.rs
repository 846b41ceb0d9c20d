//! Exact scalars, polynomials in the level `r`, and correlation functions
//! stored as sums of negative powers of pairwise differences.

mod corrfn;
mod mpoly;
mod poly;
mod render;

pub use corrfn::{CorrFn, DiffExponent, RDegree};
pub use mpoly::MultiPoly;
pub use poly::PolyR;
pub use render::Format;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// `2^e` for possibly negative `e`.
pub fn pow2(e: i64) -> Rational {
    let mag = Rational::from_integer(BigInt::one() << e.unsigned_abs());
    if e >= 0 {
        mag
    } else {
        mag.recip()
    }
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Generalized binomial coefficient `binom(top, k)` for any integer `top`.
pub fn binomial(top: i64, k: u64) -> BigInt {
    let mut num = BigInt::one();
    for i in 0..k as i64 {
        num *= BigInt::from(top - i);
    }
    num / factorial(k)
}

/// Parses `"p"`, `"-p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(p))
        }
    }
}

/// Integer value of `q` when it is a positive integer.
pub fn as_positive_int(q: &Rational) -> Option<u32> {
    if q.is_integer() && q.is_positive() {
        q.to_integer().try_into().ok()
    } else {
        None
    }
}
