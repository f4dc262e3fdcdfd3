//! Exact rational scalars.
//!
//! All coefficients in this crate are arbitrary-precision rationals, kept
//! reduced with positive denominator by `num`'s `BigRational`.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Fraction `n/d`. Panics on `d == 0`.
pub fn ratq(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_zero(r: &Rat) -> bool {
    r.is_zero()
}

/// Parses `"p"` or `"p/q"` with optional sign.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let num: BigInt = num_str.parse().map_err(|_| Error::Parse {
        pos: 0,
        msg: format!("invalid rational {s:?}"),
    })?;
    let den: BigInt = match den_str {
        Some(d) => d.parse().map_err(|_| Error::Parse {
            pos: 0,
            msg: format!("invalid rational {s:?}"),
        })?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::Parse {
            pos: 0,
            msg: format!("zero denominator in {s:?}"),
        });
    }
    Ok(Rat::new(num, den))
}

/// `r^k` for a non-negative exponent.
pub fn rat_pow(r: &Rat, k: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..k {
        acc *= r;
    }
    acc
}

/// Exact integer k-th power test is never needed; signum is.
pub fn signum(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        assert_eq!(parse_rat("3/2").unwrap(), ratq(3, 2));
        assert_eq!(parse_rat("-7").unwrap(), rat(-7));
        assert_eq!(parse_rat(" 4/-6 ").unwrap(), ratq(-2, 3));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn pow() {
        assert_eq!(rat_pow(&ratq(1, 2), 3), ratq(1, 8));
        assert_eq!(rat_pow(&rat(-3), 2), rat(9));
        assert_eq!(rat_pow(&rat(5), 0), rat(1));
    }
}
