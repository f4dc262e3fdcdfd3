//! Laurent polynomials in the degeneration parameter.
//!
//! The rank-6 limit only ever produces finite-tailed expansions, so a
//! (shift, polynomial) pair is enough: `value = e^shift * body(e)` with the
//! body's constant term nonzero unless the whole value is zero.

use std::fmt;

use num::traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rat::Rat;
use crate::unipoly::UniPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    shift: i64,
    body: UniPoly,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self {
            shift: 0,
            body: UniPoly::zero(),
        }
    }

    pub fn from_rat(c: Rat) -> Self {
        Self::new(0, UniPoly::constant(c))
    }

    pub fn one() -> Self {
        Self::from_rat(Rat::one())
    }

    /// `c * e^k`
    pub fn monomial(c: Rat, k: i64) -> Self {
        Self::new(k, UniPoly::constant(c))
    }

    pub fn new(shift: i64, body: UniPoly) -> Self {
        let mut v = Self { shift, body };
        v.normalize();
        v
    }

    fn normalize(&mut self) {
        if self.body.is_zero() {
            self.shift = 0;
            return;
        }
        let low = self
            .body
            .coeffs()
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero body");
        if low > 0 {
            self.body = UniPoly::from_coeffs(self.body.coeffs()[low..].to_vec());
            self.shift += low as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    /// The e-adic valuation: lowest exponent with nonzero coefficient.
    pub fn order(&self) -> Result<i64> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self.shift)
    }

    /// Coefficient of the lowest-order term.
    pub fn leading_coeff(&self) -> Rat {
        self.body.coeff(0)
    }

    pub fn coeff_at(&self, k: i64) -> Rat {
        if self.is_zero() || k < self.shift {
            return Rat::zero();
        }
        self.body.coeff((k - self.shift) as usize)
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let shift = self.shift.min(other.shift);
        let pad = |p: &Self| -> UniPoly {
            let k = (p.shift - shift) as usize;
            let mut coeffs = vec![Rat::zero(); k];
            coeffs.extend_from_slice(p.body.coeffs());
            UniPoly::from_coeffs(coeffs)
        };
        Self::new(shift, pad(self).add(&pad(other)))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            shift: if self.is_zero() { 0 } else { self.shift },
            body: self.body.neg(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        Self::new(self.shift + other.shift, self.body.mul(&other.body))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(self.shift, self.body.scale(c))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.body.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = self.shift + i as i64;
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*e")?,
                _ => write!(f, "{c}*e^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn order_of_shifted_values() {
        // e^-3 (1 + e) has order -3
        let v = LaurentPoly::new(-3, UniPoly::from_i64(&[1, 1]));
        assert_eq!(v.order().unwrap(), -3);
        assert_eq!(v.leading_coeff(), rat(1));
        // constant 5 has order 0
        assert_eq!(LaurentPoly::from_rat(rat(5)).order().unwrap(), 0);
        // e^2 + e^5 has order 2
        let w = LaurentPoly::new(0, UniPoly::from_i64(&[0, 0, 1, 0, 0, 1]));
        assert_eq!(w.order().unwrap(), 2);
        assert!(LaurentPoly::zero().order().is_err());
    }

    #[test]
    fn arithmetic_and_cancellation() {
        let a = LaurentPoly::monomial(rat(1), -2);
        let b = LaurentPoly::monomial(rat(-1), -2);
        assert!(a.add(&b).is_zero());
        let c = a.add(&LaurentPoly::monomial(rat(3), 1));
        assert_eq!(c.order().unwrap(), -2);
        assert_eq!(c.coeff_at(1), rat(3));
        assert_eq!(c.mul(&c).order().unwrap(), -4);
        assert_eq!(c.mul(&c).coeff_at(-1), rat(6));
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let v = LaurentPoly::new(-1, UniPoly::from_i64(&[1, 1]));
        assert_eq!(v.pow(3), v.mul(&v).mul(&v));
        assert_eq!(v.pow(0), LaurentPoly::one());
    }
}
