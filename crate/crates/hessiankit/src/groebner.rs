//! Buchberger-based ideal engine.
//!
//! Reduced Groebner bases (Gebauer-Moeller pair elimination, normal
//! selection strategy), normal forms, elimination by block orders, standard
//! monomials of zero-dimensional quotients, multiplication-operator
//! characteristic polynomials, Seidenberg radicality, and multiplicity
//! profiles. Everything is exact over the rationals; intermediate
//! polynomials are kept as primitive integer vectors to control coefficient
//! growth.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num::traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::RatMatrix;
use crate::poly::{Monomial, MonomialOrder, MultiPoly, Ring};
use crate::rat::Rat;
use crate::rng::XorShift64Star;
use crate::unipoly::UniPoly;

/// A finitely generated ideal in an explicit ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<MultiPoly>,
}

impl Ideal {
    /// Zero generators are dropped; all generators must share the ring.
    pub fn new(ring: Ring, gens: Vec<MultiPoly>) -> Self {
        assert!(gens.iter().all(|g| g.ring() == ring), "ring mismatch");
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Self { ring, gens }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }
}

/// A reduced Groebner basis: monic elements, no leading monomial divides
/// another, every element fully reduced against the rest, sorted ascending
/// by leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    order: MonomialOrder,
    elems: Vec<MultiPoly>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn elements(&self) -> &[MultiPoly] {
        &self.elems
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elems
            .iter()
            .map(|g| g.leading_term(self.order).expect("nonzero").0)
            .collect()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.elems.len() == 1 && self.elems[0].leading_term(self.order).unwrap().0.is_one()
    }

    pub fn as_ideal(&self) -> Ideal {
        Ideal::new(self.ring, self.elems.clone())
    }
}

/// Standard monomials (those not divisible by any leading monomial) of a
/// zero-dimensional quotient; its cardinality is the quotient degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientBasis {
    monomials: Vec<Monomial>,
}

impl QuotientBasis {
    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn degree(&self) -> usize {
        self.monomials.len()
    }
}

/// Multiset of local multiplicities of a zero-dimensional scheme:
/// (multiplicity, number of points with that multiplicity).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityProfile {
    entries: Vec<(u32, usize)>,
}

impl MultiplicityProfile {
    pub fn new(mut entries: Vec<(u32, usize)>) -> Self {
        entries.retain(|&(_, c)| c > 0);
        entries.sort();
        Self { entries }
    }

    pub fn entries(&self) -> &[(u32, usize)] {
        &self.entries
    }

    /// Scheme length: sum of multiplicity times count.
    pub fn total_degree(&self) -> usize {
        self.entries
            .iter()
            .map(|&(m, c)| m as usize * c)
            .sum()
    }

    /// Number of distinct points.
    pub fn point_count(&self) -> usize {
        self.entries.iter().map(|&(_, c)| c).sum()
    }

    pub fn is_all_simple(&self) -> bool {
        self.entries.iter().all(|&(m, _)| m == 1)
    }
}

impl fmt::Display for MultiplicityProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (m, c)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({m}, {c})")?;
        }
        write!(f, "}}")
    }
}

// ---------------------------------------------------------------------------
// internal ordered representation
// ---------------------------------------------------------------------------

/// Terms sorted strictly descending in the active order.
#[derive(Debug, Clone)]
struct OrdPoly {
    terms: Vec<(Monomial, Rat)>,
}

impl OrdPoly {
    fn from_multi(p: &MultiPoly, order: MonomialOrder, nvars: usize) -> Self {
        let mut terms: Vec<(Monomial, Rat)> =
            p.terms().map(|(m, c)| (*m, c.clone())).collect();
        terms.sort_by(|(a, _), (b, _)| order.cmp(nvars, b, a));
        Self { terms }
    }

    fn to_multi(&self, ring: Ring) -> MultiPoly {
        MultiPoly::from_terms(ring, self.terms.iter().map(|(m, c)| (*m, c.clone())))
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn lc(&self) -> &Rat {
        &self.terms[0].1
    }

    /// self + c * x^m * g, merging sorted term lists.
    fn add_scaled(
        &self,
        g: &OrdPoly,
        m: &Monomial,
        c: &Rat,
        order: MonomialOrder,
        nvars: usize,
    ) -> OrdPoly {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() && j < g.terms.len() {
            let gm = g.terms[j].0.mul(m);
            match order.cmp(nvars, &self.terms[i].0, &gm) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((gm, &g.terms[j].1 * c));
                    j += 1;
                }
                Ordering::Equal => {
                    let coeff = &self.terms[i].1 + &g.terms[j].1 * c;
                    if !coeff.is_zero() {
                        out.push((gm, coeff));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        for (gm, gc) in &g.terms[j..] {
            out.push((gm.mul(m), gc * c));
        }
        OrdPoly { terms: out }
    }

    /// Rescale to coprime integer coefficients, positive leading coefficient.
    fn normalize_content(&mut self) {
        if self.is_zero() {
            return;
        }
        use num::Integer;
        let mut den_lcm = num::BigInt::one();
        for (_, c) in &self.terms {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = num::BigInt::zero();
        for (_, c) in &self.terms {
            num_gcd = num_gcd.gcd(&(c.numer() * (&den_lcm / c.denom())));
        }
        let mut factor = Rat::new(den_lcm, num_gcd);
        if num::traits::Signed::is_negative(&self.terms[0].1) {
            factor = -factor;
        }
        for (_, c) in self.terms.iter_mut() {
            *c *= &factor;
        }
    }

    fn monic(&mut self) {
        if self.is_zero() {
            return;
        }
        let inv = self.lc().clone().recip();
        for (_, c) in self.terms.iter_mut() {
            *c *= &inv;
        }
    }
}

struct Reducer {
    order: MonomialOrder,
    nvars: usize,
}

impl Reducer {
    /// Full normal form: no monomial of the remainder is divisible by any
    /// basis leading monomial.
    fn reduce(&self, f: OrdPoly, basis: &[OrdPoly]) -> OrdPoly {
        let mut work = f;
        let mut rem: Vec<(Monomial, Rat)> = Vec::new();
        'outer: while !work.is_zero() {
            let (m, c) = work.terms[0].clone();
            for g in basis {
                if g.is_zero() {
                    continue;
                }
                if g.lm().divides(&m) {
                    let qm = g.lm().div(&m);
                    let qc = -(&c / g.lc());
                    work = work.add_scaled(g, &qm, &qc, self.order, self.nvars);
                    debug_assert!(
                        work.is_zero()
                            || self.order.cmp(self.nvars, work.lm(), &m) == Ordering::Less
                    );
                    continue 'outer;
                }
            }
            rem.push((m, c));
            work.terms.remove(0);
        }
        OrdPoly { terms: rem }
    }

    fn s_poly(&self, f: &OrdPoly, g: &OrdPoly) -> OrdPoly {
        let l = f.lm().lcm(g.lm());
        let mf = f.lm().div(&l);
        let mg = g.lm().div(&l);
        let zero = OrdPoly { terms: Vec::new() };
        let a = zero.add_scaled(f, &mf, &f.lc().clone().recip(), self.order, self.nvars);
        a.add_scaled(g, &mg, &(-g.lc().clone().recip()), self.order, self.nvars)
    }
}

// ---------------------------------------------------------------------------
// Buchberger with Gebauer-Moeller pair elimination
// ---------------------------------------------------------------------------

/// Computes the reduced Groebner basis of the ideal in the given order.
/// Deterministic for fixed input and order. Termination is guaranteed;
/// the zero ideal yields an empty basis.
pub fn buchberger(ideal: &Ideal, order: MonomialOrder) -> GroebnerBasis {
    let ring = ideal.ring();
    let nvars = ring.nvars();
    let red = Reducer { order, nvars };

    let mut basis: Vec<OrdPoly> = Vec::new();
    // pair (i, j, lcm) with i < j
    let mut pairs: Vec<(usize, usize, Monomial)> = Vec::new();

    let add_element = |basis: &mut Vec<OrdPoly>,
                       pairs: &mut Vec<(usize, usize, Monomial)>,
                       mut h: OrdPoly| {
        h.normalize_content();
        let t = basis.len();
        let lt = *h.lm();

        // new pairs (i, t), pruned by the Gebauer-Moeller M/F/B criteria
        let mut cand: Vec<(usize, Monomial)> = (0..t)
            .filter(|&i| !basis[i].is_zero())
            .map(|i| (i, basis[i].lm().lcm(&lt)))
            .collect();
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new(); // (i, lcm, coprime)
        while let Some((i, li)) = cand.pop() {
            let coprime = basis[i].lm().coprime(&lt);
            let dominated = !coprime
                && (cand.iter().any(|(_, lj)| lj.divides(&li) && *lj != li)
                    || kept
                        .iter()
                        .any(|(_, lj, _)| lj.divides(&li) && *lj != li)
                    || kept.iter().any(|(_, lj, _)| *lj == li));
            if !dominated {
                kept.push((i, li, coprime));
            }
        }
        // old pairs pruned by the chain criterion
        pairs.retain(|(i, j, lij)| {
            !lt.divides(lij)
                || basis[*i].lm().lcm(&lt) == *lij
                || basis[*j].lm().lcm(&lt) == *lij
        });
        for (i, li, coprime) in kept {
            if !coprime {
                pairs.push((i, t, li));
            }
        }
        basis.push(h);
    };

    for g in ideal.generators() {
        let g0 = OrdPoly::from_multi(g, order, nvars);
        let r = red.reduce(g0, &basis);
        if !r.is_zero() {
            add_element(&mut basis, &mut pairs, r);
        }
    }

    while !pairs.is_empty() {
        // normal selection: smallest lcm in the order, ties by index
        let mut best = 0;
        for k in 1..pairs.len() {
            let c = order.cmp(nvars, &pairs[k].2, &pairs[best].2);
            if c == Ordering::Less
                || (c == Ordering::Equal && (pairs[k].0, pairs[k].1) < (pairs[best].0, pairs[best].1))
            {
                best = k;
            }
        }
        let (i, j, _) = pairs.swap_remove(best);
        let s = red.s_poly(&basis[i], &basis[j]);
        let r = red.reduce(s, &basis);
        if !r.is_zero() {
            add_element(&mut basis, &mut pairs, r);
        }
    }

    // minimalize: keep ascending-by-LM elements whose LM no kept LM divides
    basis.retain(|g| !g.is_zero());
    basis.sort_by(|a, b| order.cmp(nvars, a.lm(), b.lm()));
    let mut minimal: Vec<OrdPoly> = Vec::new();
    for g in basis {
        if !minimal.iter().any(|m| m.lm().divides(g.lm())) {
            minimal.push(g);
        }
    }
    // interreduce tails, then make monic
    for i in 0..minimal.len() {
        let self_poly = minimal[i].clone();
        let others: Vec<OrdPoly> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, p)| p.clone())
            .collect();
        let mut r = red.reduce(self_poly, &others);
        r.monic();
        minimal[i] = r;
    }

    // present descending by leading monomial
    minimal.reverse();
    let elems = minimal.iter().map(|p| p.to_multi(ring)).collect::<Vec<_>>();

    let gb = GroebnerBasis { ring, order, elems };
    debug_assert!(ideal
        .generators()
        .iter()
        .all(|g| normal_form(g, &gb).unwrap().is_zero()));
    gb
}

/// Remainder of `f` on division by the basis: no monomial of the result is
/// divisible by any leading monomial. `f` is in the ideal iff the result is
/// zero.
pub fn normal_form(f: &MultiPoly, gb: &GroebnerBasis) -> Result<MultiPoly> {
    if f.ring() != gb.ring {
        return Err(Error::RingMismatch(
            f.ring().describe(),
            gb.ring.describe(),
        ));
    }
    let nvars = gb.ring.nvars();
    let red = Reducer {
        order: gb.order,
        nvars,
    };
    let basis: Vec<OrdPoly> = gb
        .elems
        .iter()
        .map(|g| OrdPoly::from_multi(g, gb.order, nvars))
        .collect();
    let r = red.reduce(OrdPoly::from_multi(f, gb.order, nvars), &basis);
    Ok(r.to_multi(gb.ring))
}

/// Certificate check: every S-polynomial of the basis reduces to zero and
/// every original generator has normal form zero.
pub fn verify_buchberger_certificate(gb: &GroebnerBasis, original: &Ideal) -> bool {
    let nvars = gb.ring.nvars();
    let red = Reducer {
        order: gb.order,
        nvars,
    };
    let basis: Vec<OrdPoly> = gb
        .elems
        .iter()
        .map(|g| OrdPoly::from_multi(g, gb.order, nvars))
        .collect();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let s = red.s_poly(&basis[i], &basis[j]);
            if !red.reduce(s, &basis).is_zero() {
                return false;
            }
        }
    }
    original
        .generators()
        .iter()
        .all(|g| normal_form(g, gb).map_or(false, |r| r.is_zero()))
}

/// Generators of the elimination ideal `I` intersected with the subring in
/// the kept variables, via a block-elimination order. The result lives in
/// the same ring but uses only kept variables. Keeping every variable
/// returns the ideal itself (up to basis).
pub fn eliminate(ideal: &Ideal, keep: &[usize]) -> Ideal {
    let ring = ideal.ring();
    let n = ring.nvars();
    let mut keep_sorted: Vec<usize> = keep.to_vec();
    keep_sorted.sort_unstable();
    keep_sorted.dedup();
    assert!(keep_sorted.iter().all(|&v| v < n), "variable out of range");
    let elim_vars: Vec<usize> = (0..n).filter(|v| !keep_sorted.contains(v)).collect();
    if elim_vars.is_empty() {
        let gb = buchberger(ideal, MonomialOrder::DegRevLex);
        return gb.as_ideal();
    }
    // move eliminated variables to the front
    let perm: Vec<usize> = elim_vars
        .iter()
        .chain(keep_sorted.iter())
        .copied()
        .collect();
    let fwd: Vec<MultiPoly> = ideal
        .generators()
        .iter()
        .map(|g| {
            // new variable p reads old variable perm[p]
            g.permute_vars(&perm, ring)
        })
        .collect();
    let gb = buchberger(
        &Ideal::new(ring, fwd),
        MonomialOrder::Block {
            elim: elim_vars.len(),
        },
    );
    let k = elim_vars.len();
    let mut back = vec![0usize; n];
    for (new, &old) in perm.iter().enumerate() {
        back[old] = new;
    }
    let kept_gens: Vec<MultiPoly> = gb
        .elements()
        .iter()
        .filter(|g| g.terms().all(|(m, _)| m.supported_at_or_above(k)))
        .map(|g| g.permute_vars(&back, ring))
        .collect();
    Ideal::new(ring, kept_gens)
}

/// All standard monomials of the quotient when it is finite-dimensional.
/// Signals `PositiveDimensional` when some variable has no pure power among
/// the leading monomials.
pub fn quotient_basis(gb: &GroebnerBasis) -> Result<QuotientBasis> {
    let nvars = gb.ring.nvars();
    let lms = gb.leading_monomials();
    if lms.iter().any(|m| m.is_one()) {
        // unit ideal: empty variety, zero-dimensional quotient of degree 0
        return Ok(QuotientBasis {
            monomials: Vec::new(),
        });
    }
    for v in 0..nvars {
        if !lms.iter().any(|m| m.pure_power_var() == Some(v)) {
            return Err(Error::PositiveDimensional);
        }
    }
    let mut seen: BTreeSet<Monomial> = BTreeSet::new();
    let mut queue = vec![Monomial::one()];
    while let Some(m) = queue.pop() {
        if seen.contains(&m) || lms.iter().any(|l| l.divides(&m)) {
            continue;
        }
        seen.insert(m);
        for v in 0..nvars {
            queue.push(m.mul(&Monomial::var(v)));
        }
    }
    let mut monomials: Vec<Monomial> = seen.into_iter().collect();
    monomials.sort_by(|a, b| MonomialOrder::DegRevLex.cmp(nvars, a, b));
    Ok(QuotientBasis { monomials })
}

/// Matrix of multiplication by `u` on the quotient, in the standard-monomial
/// basis.
fn mult_matrix(gb: &GroebnerBasis, qb: &QuotientBasis, u: &MultiPoly) -> Result<RatMatrix> {
    let d = qb.degree();
    let index_of = |m: &Monomial| -> usize {
        qb.monomials()
            .iter()
            .position(|x| x == m)
            .expect("normal form stays within the standard monomials")
    };
    let mut mat = RatMatrix::zeros(d, d);
    for (j, b) in qb.monomials().iter().enumerate() {
        let prod = u.mul_term(b, &Rat::one());
        let nf = normal_form(&prod, gb)?;
        for (m, c) in nf.terms() {
            mat.set(index_of(m), j, c.clone());
        }
    }
    Ok(mat)
}

/// Characteristic polynomial of multiplication by the linear form `u` on the
/// finite-dimensional quotient. Its roots are the values of `u` at the
/// points of the variety, with algebraic multiplicity equal to the local
/// multiplicity.
pub fn mult_charpoly(gb: &GroebnerBasis, u: &MultiPoly) -> Result<UniPoly> {
    let qb = quotient_basis(gb)?;
    mult_matrix(gb, &qb, u)?.charpoly()
}

/// Generator of `I` intersected with `Q[x_var]` for a zero-dimensional
/// ideal (monic), via elimination.
pub fn eliminant(ideal: &Ideal, var: usize) -> Result<UniPoly> {
    let el = eliminate(ideal, &[var]);
    let mut gens = el.generators().to_vec();
    if gens.is_empty() {
        return Err(Error::PositiveDimensional);
    }
    if gens.len() > 1 {
        // a reduced elimination basis of a principal ideal has one element
        return Err(Error::Internal(format!(
            "elimination ideal in one variable with {} generators",
            gens.len()
        )));
    }
    Ok(gens.remove(0).to_unipoly(var)?.monic())
}

/// Deterministic generic linear form with small seeded coefficients.
pub fn seeded_linear_form(ring: Ring, rng: &mut XorShift64Star) -> MultiPoly {
    let coeffs = rng.nonzero_int_vec(ring.nvars(), 9);
    let mut u = MultiPoly::zero(ring);
    for (i, c) in coeffs.into_iter().enumerate() {
        u.add_term(&Monomial::var(i), c);
    }
    u
}

/// Joint zero-dimensional analysis: quotient degree, per-variable
/// eliminants, Seidenberg radicality, number of distinct points, and the
/// multiplicity profile from a verified separating linear form.
#[derive(Debug, Clone)]
pub struct ZeroDimAnalysis {
    pub degree: usize,
    pub point_count: usize,
    pub radical: bool,
    pub profile: MultiplicityProfile,
    pub eliminants: Vec<UniPoly>,
    pub separating_form: MultiPoly,
    pub separation_retries: u32,
}

pub fn analyze_zero_dim(
    gb: &GroebnerBasis,
    rng: &mut XorShift64Star,
    retry_limit: u32,
) -> Result<ZeroDimAnalysis> {
    let qb = quotient_basis(gb)?;
    let degree = qb.degree();
    if degree == 0 {
        return Ok(ZeroDimAnalysis {
            degree: 0,
            point_count: 0,
            radical: true,
            profile: MultiplicityProfile::new(vec![]),
            eliminants: Vec::new(),
            separating_form: MultiPoly::zero(gb.ring()),
            separation_retries: 0,
        });
    }
    let ideal = gb.as_ideal();
    let nvars = gb.ring().nvars();
    let mut eliminants = Vec::with_capacity(nvars);
    for v in 0..nvars {
        eliminants.push(eliminant(&ideal, v)?);
    }
    // Seidenberg: zero-dimensional ideal over Q is radical iff every
    // eliminant is squarefree
    let radical = eliminants.iter().all(|g| g.is_squarefree());
    let point_count = if radical {
        degree
    } else {
        // degree of the radical ideal I + <squarefree parts of eliminants>
        let mut gens = ideal.generators().to_vec();
        for (v, g) in eliminants.iter().enumerate() {
            gens.push(unipoly_to_multi(&g.squarefree_part()?, gb.ring(), v));
        }
        let rad_gb = buchberger(&Ideal::new(gb.ring(), gens), gb.order());
        quotient_basis(&rad_gb)?.degree()
    };

    let mut retries = 0u32;
    loop {
        let u = seeded_linear_form(gb.ring(), rng);
        let cp = mult_matrix(gb, &qb, &u)?.charpoly()?;
        let facs = cp.squarefree_factorization()?;
        let sqf_degree: usize = facs
            .iter()
            .map(|(f, _)| f.degree().unwrap_or(0))
            .sum();
        if sqf_degree == point_count {
            // u separates the points: the multiplicity-m factor collects
            // exactly the points of local multiplicity m
            let profile = MultiplicityProfile::new(
                facs.iter()
                    .map(|(f, m)| (*m, f.degree().unwrap_or(0)))
                    .collect(),
            );
            if profile.total_degree() != degree {
                return Err(Error::Internal(format!(
                    "profile degree {} does not match quotient degree {}",
                    profile.total_degree(),
                    degree
                )));
            }
            // hard cross-check of the two radicality certificates
            if profile.is_all_simple() != radical {
                return Err(Error::Internal(
                    "Seidenberg radicality disagrees with the charpoly profile".into(),
                ));
            }
            return Ok(ZeroDimAnalysis {
                degree,
                point_count,
                radical,
                profile,
                eliminants,
                separating_form: u,
                separation_retries: retries,
            });
        }
        retries += 1;
        if retries > retry_limit {
            return Err(Error::SeparationFailure { retries });
        }
    }
}

/// Multiplicity profile via a verified separating seeded linear form.
pub fn multiplicity_profile(
    gb: &GroebnerBasis,
    rng: &mut XorShift64Star,
    retry_limit: u32,
) -> Result<MultiplicityProfile> {
    Ok(analyze_zero_dim(gb, rng, retry_limit)?.profile)
}

/// Seidenberg radicality for zero-dimensional ideals, cross-checked against
/// the squarefreeness of a generic multiplication charpoly.
pub fn is_radical_zero_dim(gb: &GroebnerBasis, rng: &mut XorShift64Star) -> Result<bool> {
    Ok(analyze_zero_dim(gb, rng, 8)?.radical)
}

/// Embeds a univariate polynomial as a multivariate one in variable `var`.
pub fn unipoly_to_multi(g: &UniPoly, ring: Ring, var: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(ring);
    for (k, c) in g.coeffs().iter().enumerate() {
        let mut exps = [0u16; crate::poly::MAX_VARS];
        exps[var] = k as u16;
        out.add_term(&Monomial::from_exps(&exps), c.clone());
    }
    out
}
