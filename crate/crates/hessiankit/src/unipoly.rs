//! Univariate polynomials over exact rationals: the eliminant toolbox.
//!
//! Provides Yun's squarefree factorization and rational-root extraction,
//! which back the radicality tests and rational-point recovery of the
//! zero-dimensional analysis.

use std::fmt;

use num::bigint::{BigInt, BigUint};
use num::traits::{One, Signed, Zero};
use num::Integer;

use crate::error::{Error, Result};
use crate::rat::Rat;

/// Dense univariate polynomial, coefficients lowest degree first. The top
/// coefficient is nonzero unless the polynomial is zero (empty vector).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    /// `x`
    pub fn var() -> Self {
        Self::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| crate::rat::rat(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial has none.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Rat::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Self::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|v| v * c).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&self.leading_coeff().recip())
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * Rat::from_integer(BigInt::from(i + 1)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact Euclidean division.
    pub fn divrem(&self, div: &Self) -> (Self, Self) {
        assert!(!div.is_zero(), "division by zero polynomial");
        let dd = div.coeffs.len() - 1;
        let lc = div.leading_coeff();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1;
            let factor = rem[k].clone() / &lc;
            if !factor.is_zero() {
                quot[k - dd] = factor.clone();
                for (j, c) in div.coeffs.iter().enumerate() {
                    let idx = k - dd + j;
                    let delta = c * &factor;
                    rem[idx] -= delta;
                }
            }
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
            if rem.len() <= dd {
                break;
            }
        }
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    /// Monic gcd; content is normalized away at each step to keep the
    /// integers small.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_integer().0;
        let mut b = other.primitive_integer().0;
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.primitive_integer().0;
        }
        a.monic()
    }

    /// gcd(self, derivative) is constant.
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        if self.is_constant() {
            return true;
        }
        self.gcd(&self.derivative()).is_constant()
    }

    /// Rescales to coprime integer coefficients with positive leading
    /// coefficient; returns the primitive polynomial and the factor taken out
    /// (so `self = factor * primitive`).
    pub fn primitive_integer(&self) -> (Self, Rat) {
        if self.is_zero() {
            return (Self::zero(), Rat::one());
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in &self.coeffs {
            num_gcd = num_gcd.gcd(&(c.numer() * (&den_lcm / c.denom())));
        }
        let mut factor = Rat::new(num_gcd, den_lcm);
        if self.leading_coeff().is_negative() {
            factor = -factor;
        }
        (self.scale(&factor.clone().recip()), factor)
    }

    /// Yun's squarefree factorization over characteristic zero:
    /// `self = lc * prod f_i^{m_i}` with the `f_i` monic, squarefree,
    /// pairwise coprime, and the multiplicities `m_i` distinct.
    pub fn squarefree_factorization(&self) -> Result<Vec<(UniPoly, u32)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_constant() {
            return Ok(Vec::new());
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.divrem(&a0).0;
        let mut c = fp.divrem(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut out: Vec<(UniPoly, u32)> = Vec::new();
        let mut mult = 1u32;
        loop {
            let a = b.gcd(&d);
            if !a.is_constant() {
                out.push((a.clone(), mult));
            }
            b = b.divrem(&a).0;
            if b.is_constant() {
                break;
            }
            c = d.divrem(&a).0;
            d = c.sub(&b.derivative());
            mult += 1;
        }
        // merge equal multiplicities cannot occur in Yun; sanity-check reassembly
        debug_assert_eq!(
            {
                let mut acc = UniPoly::constant(self.leading_coeff());
                for (fac, m) in &out {
                    acc = acc.mul(&fac.pow(*m));
                }
                acc
            },
            *self
        );
        Ok(out)
    }

    /// Product of the distinct monic irreducible-free factors (the radical).
    pub fn squarefree_part(&self) -> Result<UniPoly> {
        let mut acc = UniPoly::one();
        for (f, _) in self.squarefree_factorization()? {
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    /// All rational roots, found from divisors of the trailing and leading
    /// integer coefficients after clearing denominators, each candidate
    /// verified by exact evaluation. Output is sorted and duplicate-free.
    pub fn rational_roots(&self) -> Result<Vec<Rat>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut roots: Vec<Rat> = Vec::new();
        // roots of the squarefree factors, factor by factor (smaller coefficients)
        for (factor, _) in self.squarefree_factorization()? {
            roots.extend(rational_roots_squarefree(&factor));
        }
        roots.sort();
        roots.dedup();
        Ok(roots)
    }
}

/// Divisor grids explode for the 20-digit coefficients of typical
/// eliminants; beyond this magnitude the modular finder takes over.
const DIVISOR_METHOD_LIMIT: u64 = 1_000_000_000_000;

fn rational_roots_squarefree(g: &UniPoly) -> Vec<Rat> {
    let (mut p, _) = g.primitive_integer();
    let mut roots = Vec::new();
    // strip powers of x
    let mut low = 0usize;
    while low < p.coeffs.len() && p.coeffs[low].is_zero() {
        low += 1;
    }
    if low > 0 {
        roots.push(Rat::zero());
        p = UniPoly::from_coeffs(p.coeffs[low..].to_vec());
    }
    if p.is_constant() {
        return roots;
    }
    if p.degree() == Some(1) {
        roots.push(-p.coeff(0) / p.coeff(1));
        return roots;
    }
    let a0 = p.coeff(0).numer().magnitude().clone();
    let an = p.leading_coeff().numer().magnitude().clone();
    let limit = BigUint::from(DIVISOR_METHOD_LIMIT);
    let candidates: Vec<Rat> = if a0 <= limit && an <= limit {
        // divisor grid over leading/trailing coefficients, pruned by the
        // Cauchy bound on root magnitude
        let bound = cauchy_bound(&p);
        let num_divs = divisors(&a0);
        let den_divs = divisors(&an);
        let mut cands = Vec::new();
        for q in &den_divs {
            for pn in &num_divs {
                let cand = Rat::new(BigInt::from(pn.clone()), BigInt::from(q.clone()));
                if cand > bound {
                    continue;
                }
                cands.push(cand.clone());
                cands.push(-cand);
            }
        }
        cands
    } else {
        let coeffs: Vec<BigInt> = p.coeffs.iter().map(|c| c.numer().clone()).collect();
        crate::modroots::rational_roots_modular(&coeffs)
            .into_iter()
            .map(|(n, d)| Rat::new(n, d))
            .collect()
    };
    for cand in candidates {
        if p.eval(&cand).is_zero() {
            roots.push(cand);
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

fn cauchy_bound(p: &UniPoly) -> Rat {
    let lc = p.leading_coeff().abs();
    let max = p
        .coeffs
        .iter()
        .take(p.coeffs.len() - 1)
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(Rat::zero);
    Rat::one() + max / lc
}

/// All positive divisors, via full factorization (trial division plus
/// Pollard rho for any large cofactor).
fn divisors(n: &BigUint) -> Vec<BigUint> {
    if n.is_zero() {
        return vec![];
    }
    let mut factors: Vec<(BigUint, u32)> = Vec::new();
    factorize(n.clone(), &mut factors);
    factors.sort();
    let mut merged: Vec<(BigUint, u32)> = Vec::new();
    for (p, e) in factors {
        if let Some(last) = merged.last_mut() {
            if last.0 == p {
                last.1 += e;
                continue;
            }
        }
        merged.push((p, e));
    }
    let mut divs = vec![BigUint::one()];
    for (p, e) in merged {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigUint::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

fn factorize(mut n: BigUint, out: &mut Vec<(BigUint, u32)>) {
    if n.is_one() || n.is_zero() {
        return;
    }
    for small in 2u64..=9999 {
        let p = BigUint::from(small);
        if &p * &p > n {
            break;
        }
        let mut e = 0u32;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    }
    if n.is_one() {
        return;
    }
    if is_probable_prime(&n) {
        out.push((n, 1));
        return;
    }
    let d = pollard_rho(&n);
    factorize(d.clone(), out);
    factorize(n / d, out);
}

fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    if n == &two {
        return true;
    }
    if (n % &two).is_zero() {
        return false;
    }
    let n_minus_1 = n - BigUint::one();
    let mut d = n_minus_1.clone();
    let mut s = 0u32;
    while (&d % &two).is_zero() {
        d /= &two;
        s += 1;
    }
    // deterministic for n < 3.3e24, overwhelming beyond
    for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let a = BigUint::from(a);
        if &a >= n {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        let mut composite = true;
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                composite = false;
                break;
            }
        }
        if composite {
            return false;
        }
    }
    true
}

fn pollard_rho(n: &BigUint) -> BigUint {
    let one = BigUint::one();
    let mut c = BigUint::from(1u32);
    loop {
        let mut x = BigUint::from(2u32);
        let mut y = BigUint::from(2u32);
        let mut d = one.clone();
        while d.is_one() {
            x = (&x * &x + &c) % n;
            y = (&y * &y + &c) % n;
            y = (&y * &y + &c) % n;
            let diff = if x > y { &x - &y } else { &y - &x };
            if diff.is_zero() {
                break;
            }
            d = diff.gcd(n);
        }
        if !d.is_one() && &d != n {
            return d;
        }
        c += 1u32;
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{abs}")?,
                1 if abs.is_one() => write!(f, "u")?,
                1 => write!(f, "{abs}*u")?,
                _ if abs.is_one() => write!(f, "u^{i}")?,
                _ => write!(f, "{abs}*u^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratq};

    #[test]
    fn divrem_exact() {
        // (u^2 - 1) = (u - 1)(u + 1)
        let f = UniPoly::from_i64(&[-1, 0, 1]);
        let d = UniPoly::from_i64(&[-1, 1]);
        let (q, r) = f.divrem(&d);
        assert!(r.is_zero());
        assert_eq!(q, UniPoly::from_i64(&[1, 1]));
    }

    #[test]
    fn squarefree_u2_um1() {
        // u^2(u-1) -> [(u,2),(u-1,1)]
        let f = UniPoly::from_i64(&[0, 0, 1]).mul(&UniPoly::from_i64(&[-1, 1]));
        let facs = f.squarefree_factorization().unwrap();
        let mut sorted = facs.clone();
        sorted.sort_by_key(|(_, m)| *m);
        assert_eq!(
            sorted,
            vec![
                (UniPoly::from_i64(&[-1, 1]), 1),
                (UniPoly::from_i64(&[0, 1]), 2)
            ]
        );
    }

    #[test]
    fn squarefree_input_passes_through() {
        let g = UniPoly::from_i64(&[-6, 1, 1]).scale(&ratq(3, 7));
        let facs = g.squarefree_factorization().unwrap();
        assert_eq!(facs, vec![(UniPoly::from_i64(&[-6, 1, 1]), 1)]);
        assert!(g.is_squarefree());
    }

    #[test]
    fn squarefree_isolates_cube() {
        // (u^2-2)^3 (u^2-3)
        let a = UniPoly::from_i64(&[-2, 0, 1]);
        let b = UniPoly::from_i64(&[-3, 0, 1]);
        let f = a.pow(3).mul(&b);
        let mut facs = f.squarefree_factorization().unwrap();
        facs.sort_by_key(|(_, m)| *m);
        assert_eq!(facs, vec![(b, 1), (a, 3)]);
    }

    #[test]
    fn reassembly_property() {
        let f = UniPoly::from_i64(&[2, -3, 0, 5]).mul(&UniPoly::from_i64(&[1, 1]).pow(2));
        let facs = f.squarefree_factorization().unwrap();
        let mut acc = UniPoly::constant(f.leading_coeff());
        for (fac, m) in &facs {
            acc = acc.mul(&fac.pow(*m));
        }
        assert_eq!(acc, f);
    }

    #[test]
    fn rational_roots_basic() {
        assert_eq!(
            UniPoly::from_i64(&[-1, 0, 1]).rational_roots().unwrap(),
            vec![rat(-1), rat(1)]
        );
        assert!(UniPoly::from_i64(&[-2, 0, 1])
            .rational_roots()
            .unwrap()
            .is_empty());
        assert_eq!(
            UniPoly::from_i64(&[1, -3, 2]).rational_roots().unwrap(),
            vec![ratq(1, 2), rat(1)]
        );
    }

    #[test]
    fn rational_roots_with_zero_and_fractions() {
        // u * (u - 5/3)^2
        let f = UniPoly::from_coeffs(vec![Rat::zero(), Rat::one()])
            .mul(&UniPoly::from_coeffs(vec![ratq(-5, 3), rat(1)]).pow(2));
        assert_eq!(f.rational_roots().unwrap(), vec![rat(0), ratq(5, 3)]);
        assert!(UniPoly::zero().rational_roots().is_err());
    }

    #[test]
    fn roots_with_large_coefficients() {
        // roots 1009/997 and -2003 force factoring moderately large integers
        let f = UniPoly::from_coeffs(vec![ratq(-1009, 997), rat(1)])
            .mul(&UniPoly::from_i64(&[2003, 1]))
            .mul(&UniPoly::from_i64(&[7, 0, 3]));
        let roots = f.rational_roots().unwrap();
        assert_eq!(roots, vec![rat(-2003), ratq(1009, 997)]);
    }
}
