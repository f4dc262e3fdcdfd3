//! Deterministic seeded randomness.
//!
//! Every "generic" choice in the crate (coordinate changes, separating
//! linear forms, sampled parameters) flows from a single user seed through
//! the xorshift64* generator below, so any verdict can be reproduced
//! bit-for-bit from the seed recorded in its report.
//!
//! Generator: xorshift64* with shift triple (12, 25, 27) and the multiplier
//! 0x2545F4914F6CDD1D. The state is initialised as `seed XOR
//! 0x9E3779B97F4A7C15`, replaced by the constant itself when that XOR is
//! zero (xorshift state must be nonzero).

use crate::rat::{rat, Rat};

const INIT_MIX: u64 = 0x9E3779B97F4A7C15;
const MULTIPLIER: u64 = 0x2545F4914F6CDD1D;

#[derive(Debug, Clone)]
pub struct XorShift64Star {
    state: u64,
}

impl XorShift64Star {
    pub fn new(seed: u64) -> Self {
        let mut state = seed ^ INIT_MIX;
        if state == 0 {
            state = INIT_MIX;
        }
        Self { state }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        x.wrapping_mul(MULTIPLIER)
    }

    /// Uniform integer in `lo..=hi`.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        debug_assert!(lo <= hi);
        let span = (hi - lo + 1) as u64;
        lo + (self.next_u64() % span) as i64
    }

    /// Uniform nonzero integer in `lo..=hi` (the range must contain one).
    pub fn nonzero_int_in(&mut self, lo: i64, hi: i64) -> i64 {
        loop {
            let v = self.int_in(lo, hi);
            if v != 0 {
                return v;
            }
        }
    }

    /// Small random rational with numerator in `-bound..=bound` and
    /// denominator in `1..=den_bound`.
    pub fn rat_in(&mut self, bound: i64, den_bound: i64) -> Rat {
        let n = self.int_in(-bound, bound);
        let d = self.int_in(1, den_bound);
        Rat::new(n.into(), d.into())
    }

    /// Small nonzero random rational.
    pub fn nonzero_rat_in(&mut self, bound: i64, den_bound: i64) -> Rat {
        let n = self.nonzero_int_in(-bound, bound);
        let d = self.int_in(1, den_bound);
        Rat::new(n.into(), d.into())
    }

    /// Vector of small integers as rationals, not all zero.
    pub fn nonzero_int_vec(&mut self, len: usize, bound: i64) -> Vec<Rat> {
        loop {
            let v: Vec<Rat> = (0..len).map(|_| rat(self.int_in(-bound, bound))).collect();
            if v.iter().any(|c| !num::Zero::is_zero(c)) {
                return v;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_streams() {
        let mut a = XorShift64Star::new(42);
        let mut b = XorShift64Star::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn seed_zero_is_valid() {
        let mut r = XorShift64Star::new(0);
        let first = r.next_u64();
        assert_ne!(first, 0);
        assert_ne!(first, r.next_u64());
    }

    #[test]
    fn ranges_respected() {
        let mut r = XorShift64Star::new(7);
        for _ in 0..200 {
            let v = r.int_in(-5, 5);
            assert!((-5..=5).contains(&v));
            assert_ne!(r.nonzero_int_in(-3, 3), 0);
        }
    }
}
