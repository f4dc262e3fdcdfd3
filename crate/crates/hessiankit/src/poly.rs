//! Sparse multivariate polynomials over exact rationals.
//!
//! Rings are explicit small contexts (at most [`MAX_VARS`] variables, tagged
//! by name prefix) so that x-space polynomials and t-space pencil ideals can
//! never be mixed silently. Terms live in a `BTreeMap` keyed by exponent
//! vector; monomial orders are comparators applied on top, not part of the
//! stored representation.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::traits::{One, Signed, Zero};
use num::BigInt;
use num::Integer;

use crate::error::{Error, Result};
use crate::linalg::RatMatrix;
use crate::rat::Rat;
use crate::unipoly::UniPoly;

/// Fixed exponent-array width; every ring in this crate has at most 4 variables.
pub const MAX_VARS: usize = 4;

/// Variable-name tag. `X` prints `x0..x3`, `T` prints `t0..t3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum VarTag {
    X,
    T,
}

impl VarTag {
    fn prefix(self) -> &'static str {
        match self {
            VarTag::X => "x",
            VarTag::T => "t",
        }
    }
}

/// A polynomial ring context: variable count plus name tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ring {
    tag: VarTag,
    nvars: u8,
}

impl Ring {
    pub fn new(tag: VarTag, nvars: usize) -> Self {
        assert!(nvars >= 1 && nvars <= MAX_VARS, "unsupported variable count");
        Self {
            tag,
            nvars: nvars as u8,
        }
    }

    /// The x-ring `Q[x0..x3]` of cubic surfaces.
    pub fn x4() -> Self {
        Self::new(VarTag::X, 4)
    }

    /// The t-ring `Q[t0..t3]` of pencil parameters.
    pub fn t4() -> Self {
        Self::new(VarTag::T, 4)
    }

    /// The affine chart ring `Q[t0..t2]`.
    pub fn t3() -> Self {
        Self::new(VarTag::T, 3)
    }

    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    pub fn tag(&self) -> VarTag {
        self.tag
    }

    pub fn var_name(&self, i: usize) -> String {
        format!("{}{}", self.tag.prefix(), i)
    }

    pub fn describe(&self) -> String {
        format!("{}[0..{}]", self.tag.prefix(), self.nvars() - 1)
    }
}

/// Exponent vector of a monomial. Entries past the ring's variable count
/// stay zero; the derived `Ord` is only used as a canonical map key.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
}

impl Monomial {
    pub fn one() -> Self {
        Self {
            exps: [0; MAX_VARS],
        }
    }

    pub fn var(i: usize) -> Self {
        let mut m = Self::one();
        m.exps[i] = 1;
        m
    }

    pub fn from_exps(exps: &[u16]) -> Self {
        let mut m = Self::one();
        m.exps[..exps.len()].copy_from_slice(exps);
        m
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn exps(&self) -> &[u16; MAX_VARS] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut exps = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i] + other.exps[i];
        }
        Self { exps }
    }

    pub fn divides(&self, other: &Self) -> bool {
        (0..MAX_VARS).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn div(&self, other: &Self) -> Self {
        let mut exps = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            debug_assert!(other.exps[i] >= self.exps[i]);
            exps[i] = other.exps[i] - self.exps[i];
        }
        Self { exps }
    }

    pub fn lcm(&self, other: &Self) -> Self {
        let mut exps = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i].max(other.exps[i]);
        }
        Self { exps }
    }

    pub fn coprime(&self, other: &Self) -> bool {
        (0..MAX_VARS).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    /// `Some(i)` when the monomial is a positive power of the single variable `i`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    /// Only variables with index `< k` appear.
    pub fn supported_below(&self, k: usize) -> bool {
        self.exps[k..].iter().all(|&e| e == 0)
    }

    /// No variable with index `< k` appears.
    pub fn supported_at_or_above(&self, k: usize) -> bool {
        self.exps[..k].iter().all(|&e| e == 0)
    }

    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut exps = [0u16; MAX_VARS];
        for (new, &old) in perm.iter().enumerate() {
            exps[new] = self.exps[old];
        }
        Self { exps }
    }
}

/// Total monomial orders. `Block { elim }` compares the first `elim`
/// variables degrevlex first, which gives the elimination property needed by
/// `eliminate`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrder {
    DegRevLex,
    Lex,
    Block { elim: usize },
}

fn cmp_degrevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            // smaller exponent in the last differing slot wins
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

fn cmp_lex(a: &[u16], b: &[u16]) -> Ordering {
    for i in 0..a.len() {
        if a[i] != b[i] {
            return a[i].cmp(&b[i]);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, nvars: usize, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (&a.exps[..nvars], &b.exps[..nvars]);
        match self {
            MonomialOrder::DegRevLex => cmp_degrevlex(ea, eb),
            MonomialOrder::Lex => cmp_lex(ea, eb),
            MonomialOrder::Block { elim } => {
                let k = (*elim).min(nvars);
                match cmp_degrevlex(&ea[..k], &eb[..k]) {
                    Ordering::Equal => cmp_degrevlex(&ea[k..], &eb[k..]),
                    o => o,
                }
            }
        }
    }
}

/// Sparse multivariate polynomial over `Rat`, in an explicit [`Ring`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    ring: Ring,
    terms: BTreeMap<Monomial, Rat>,
}

pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

impl MultiPoly {
    pub fn zero(ring: Ring) -> Self {
        Self {
            ring,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: Ring, c: Rat) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn one(ring: Ring) -> Self {
        Self::constant(ring, Rat::one())
    }

    pub fn var(ring: Ring, i: usize) -> Self {
        assert!(i < ring.nvars());
        let mut p = Self::zero(ring);
        p.terms.insert(Monomial::var(i), Rat::one());
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rat)>>(ring: Ring, iter: I) -> Self {
        let mut p = Self::zero(ring);
        for (m, c) in iter {
            p.add_term(&m, c);
        }
        p
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, m: &Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(m);
                }
            }
            None => {
                self.terms.insert(*m, c);
            }
        }
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(
                self.ring.describe(),
                other.ring.describe(),
            ));
        }
        Ok(())
    }

    /// Checked arithmetic entry point; the operator impls below assume
    /// matching rings and panic otherwise.
    pub fn arith(a: &Self, b: &Self, op: ArithOp) -> Result<Self> {
        a.check_ring(b)?;
        Ok(match op {
            ArithOp::Add => a.add(b),
            ArithOp::Sub => a.sub(b),
            ArithOp::Mul => a.mul(b),
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        let mut out = Self::zero(self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(&ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.ring);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.ring);
        }
        let mut out = Self::zero(self.ring);
        for (mm, cc) in &self.terms {
            out.terms.insert(mm.mul(m), cc * c);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.ring);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// `Some(d)` when every monomial has total degree `d`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let d = it.next()?.degree();
        it.all(|m| m.degree() == d).then_some(d)
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn differentiate(&self, i: usize) -> Self {
        assert!(i < self.ring.nvars());
        let mut out = Self::zero(self.ring);
        for (m, c) in &self.terms {
            let e = m.exp(i);
            if e == 0 {
                continue;
            }
            let mut exps = *m.exps();
            exps[i] -= 1;
            out.add_term(&Monomial { exps }, c * Rat::from_integer(BigInt::from(e)));
        }
        out
    }

    /// Substitutes `x_i := sum_j M[i][j] x_j` (an invertible change of
    /// coordinates). Degree is preserved.
    pub fn linear_substitute(&self, m: &RatMatrix) -> Result<Self> {
        let n = self.ring.nvars();
        if m.rows() != n || m.cols() != n {
            return Err(Error::IndexOutOfRange(format!(
                "substitution matrix must be {n}x{n}"
            )));
        }
        if m.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
        // image of each variable, then powers as needed
        let images: Vec<MultiPoly> = (0..n)
            .map(|i| {
                let mut p = Self::zero(self.ring);
                for j in 0..n {
                    p.add_term(&Monomial::var(j), m.get(i, j).clone());
                }
                p
            })
            .collect();
        let max_exp: Vec<u16> = (0..n)
            .map(|i| self.terms.keys().map(|mm| mm.exp(i)).max().unwrap_or(0))
            .collect();
        let mut powers: Vec<Vec<MultiPoly>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut ps = vec![Self::one(self.ring)];
            for k in 1..=max_exp[i] as usize {
                let next = ps[k - 1].mul(&images[i]);
                ps.push(next);
            }
            powers.push(ps);
        }
        let mut out = Self::zero(self.ring);
        for (mono, c) in &self.terms {
            let mut term = Self::constant(self.ring, c.clone());
            for i in 0..n {
                let e = mono.exp(i) as usize;
                if e > 0 {
                    term = term.mul(&powers[i][e]);
                }
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.ring.nvars());
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, p) in point.iter().enumerate() {
                for _ in 0..m.exp(i) {
                    t *= p;
                }
            }
            acc += t;
        }
        acc
    }

    /// Sets variable `i` to a constant, producing a polynomial in a ring with
    /// one variable fewer (the remaining variables shift down past `i`).
    pub fn substitute_value(&self, i: usize, value: &Rat, new_ring: Ring) -> Self {
        assert_eq!(new_ring.nvars(), self.ring.nvars() - 1);
        let mut out = Self::zero(new_ring);
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            for _ in 0..m.exp(i) {
                coeff *= value;
            }
            let mut exps = [0u16; MAX_VARS];
            let mut k = 0;
            for j in 0..self.ring.nvars() {
                if j != i {
                    exps[k] = m.exp(j);
                    k += 1;
                }
            }
            out.add_term(&Monomial { exps }, coeff);
        }
        out
    }

    /// Relabels variables: new variable `j` gets old variable `perm[j]`.
    pub fn permute_vars(&self, perm: &[usize], new_ring: Ring) -> Self {
        let mut out = Self::zero(new_ring);
        for (m, c) in &self.terms {
            out.add_term(&m.permute(perm), c.clone());
        }
        out
    }

    /// Leading term in the given order.
    pub fn leading_term(&self, order: MonomialOrder) -> Option<(Monomial, Rat)> {
        let n = self.ring.nvars();
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(n, a, b))
            .map(|(m, c)| (*m, c.clone()))
    }

    /// Rescales so coefficients are coprime integers and the leading
    /// coefficient (in the given order) is positive. No-op on zero.
    pub fn primitive_part(&self, order: MonomialOrder) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            let scaled = c.numer() * (&den_lcm / c.denom());
            num_gcd = num_gcd.gcd(&scaled);
        }
        let factor = Rat::new(den_lcm, num_gcd);
        let mut out = self.scale(&factor);
        let (_, lc) = out.leading_term(order).expect("nonzero");
        if lc.is_negative() {
            out = out.neg();
        }
        out
    }

    /// Interprets a polynomial that only uses variable `var` as univariate.
    pub fn to_unipoly(&self, var: usize) -> Result<UniPoly> {
        let mut coeffs = vec![Rat::zero(); self.total_degree().unwrap_or(0) as usize + 1];
        for (m, c) in &self.terms {
            if m.pure_power_var().map_or(!m.is_one(), |v| v != var) {
                return Err(Error::Internal(format!(
                    "polynomial is not univariate in {}",
                    self.ring.var_name(var)
                )));
            }
            coeffs[m.exp(var) as usize] = c.clone();
        }
        Ok(UniPoly::from_coeffs(coeffs))
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // print degrevlex-descending for readability
        let n = self.ring.nvars();
        let mut ts: Vec<(&Monomial, &Rat)> = self.terms.iter().collect();
        ts.sort_by(|(a, _), (b, _)| MonomialOrder::DegRevLex.cmp(n, b, a));
        for (idx, (m, c)) in ts.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -(*c).clone() } else { (*c).clone() };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for i in 0..n {
                match m.exp(i) {
                    0 => {}
                    1 => factors.push(self.ring.var_name(i)),
                    e => factors.push(format!("{}^{}", self.ring.var_name(i), e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratq};

    fn x(i: usize) -> MultiPoly {
        MultiPoly::var(Ring::x4(), i)
    }

    #[test]
    fn difference_of_squares() {
        let lhs = x(0).add(&x(1)).mul(&x(0).sub(&x(1)));
        let rhs = x(0).mul(&x(0)).sub(&x(1).mul(&x(1)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn absorbing_zero_and_cancellation() {
        let f = x(0).pow(3).add(&x(1).pow(3));
        assert!(f.mul(&MultiPoly::zero(Ring::x4())).is_zero());
        let g = f.add(&x(0).pow(3).neg());
        assert_eq!(g, x(1).pow(3));
        assert_eq!(g.num_terms(), 1);
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let f = MultiPoly::var(Ring::x4(), 0);
        let g = MultiPoly::var(Ring::t4(), 0);
        assert!(matches!(
            MultiPoly::arith(&f, &g, ArithOp::Add),
            Err(Error::RingMismatch(_, _))
        ));
    }

    #[test]
    fn differentiate_power_rule_and_absent_var() {
        let f = x(0).pow(3);
        assert_eq!(f.differentiate(0), x(0).pow(2).scale(&rat(3)));
        let g = x(0).mul(&x(1)).mul(&x(2));
        assert!(g.differentiate(3).is_zero());
    }

    #[test]
    fn cayley_partial() {
        // d/dx0 of x0x1x2+x0x1x3+x0x2x3+x1x2x3 = x1x2+x1x3+x2x3
        let cayley = x(0)
            .mul(&x(1))
            .mul(&x(2))
            .add(&x(0).mul(&x(1)).mul(&x(3)))
            .add(&x(0).mul(&x(2)).mul(&x(3)))
            .add(&x(1).mul(&x(2)).mul(&x(3)));
        let expect = x(1)
            .mul(&x(2))
            .add(&x(1).mul(&x(3)))
            .add(&x(2).mul(&x(3)));
        assert_eq!(cayley.differentiate(0), expect);
    }

    #[test]
    fn linear_substitute_binomial() {
        // x0^3 under x0 -> x0+x1
        let mut m = RatMatrix::identity(4);
        m.set(0, 1, rat(1));
        let f = x(0).pow(3);
        let g = f.linear_substitute(&m).unwrap();
        let expect = x(0).add(&x(1)).pow(3);
        assert_eq!(g, expect);
        assert_eq!(g.coefficient(&Monomial::from_exps(&[2, 1, 0, 0])), rat(3));
    }

    #[test]
    fn linear_substitute_round_trip_and_singular() {
        let mut m = RatMatrix::identity(4);
        m.set(0, 1, rat(2));
        m.set(2, 3, rat(-1));
        let f = x(0)
            .pow(3)
            .add(&x(1).mul(&x(2)).mul(&x(3)).scale(&ratq(5, 3)));
        let g = f.linear_substitute(&m).unwrap();
        let minv = m.inverse().unwrap();
        assert_eq!(g.linear_substitute(&minv).unwrap(), f);

        let sing = RatMatrix::zeros(4, 4);
        assert_eq!(f.linear_substitute(&sing), Err(Error::SingularMatrix));
    }

    #[test]
    fn identity_substitution() {
        let f = x(0).pow(2).mul(&x(3)).sub(&x(1).pow(3));
        assert_eq!(f.linear_substitute(&RatMatrix::identity(4)).unwrap(), f);
    }

    #[test]
    fn degrevlex_vs_lex() {
        let n = 3;
        let a = Monomial::from_exps(&[1, 1, 0]);
        let b = Monomial::from_exps(&[0, 0, 2]);
        // same degree; degrevlex prefers the one with smaller last exponent
        assert_eq!(MonomialOrder::DegRevLex.cmp(n, &a, &b), Ordering::Greater);
        assert_eq!(MonomialOrder::Lex.cmp(n, &a, &b), Ordering::Greater);
        let c = Monomial::from_exps(&[0, 3, 0]);
        let d = Monomial::from_exps(&[1, 0, 0]);
        assert_eq!(MonomialOrder::DegRevLex.cmp(n, &c, &d), Ordering::Greater);
        assert_eq!(MonomialOrder::Lex.cmp(n, &c, &d), Ordering::Less);
    }

    #[test]
    fn block_order_eliminates() {
        // any monomial containing an eliminated variable beats any kept-only monomial
        let n = 4;
        let elim = MonomialOrder::Block { elim: 2 };
        let with_elim = Monomial::from_exps(&[1, 0, 0, 0]);
        let kept_only = Monomial::from_exps(&[0, 0, 5, 5]);
        assert_eq!(elim.cmp(n, &with_elim, &kept_only), Ordering::Greater);
    }

    #[test]
    fn display_and_primitive_part() {
        let f = x(0)
            .pow(2)
            .scale(&ratq(2, 3))
            .sub(&x(1).mul(&x(2)).scale(&ratq(4, 3)));
        let p = f.primitive_part(MonomialOrder::DegRevLex);
        assert_eq!(p, x(0).pow(2).sub(&x(1).mul(&x(2)).scale(&rat(2))));
        assert_eq!(p.to_string(), "x0^2 - 2*x1*x2");
    }
}
