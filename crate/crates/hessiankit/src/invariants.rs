//! Fundamental invariants of quaternary cubics on pentahedral data: the
//! sigma/I formulas, weighted-projective points, the degeneration family
//! with its exact limit, pentahedron recovery from rank-2 kernels, and the
//! sampled consistency check that the rank-2 verdict tracks the vanishing
//! of the degree-40 invariant.

use std::fmt;

use num::traits::{One, Zero};

use crate::cubic::{
    intersection_analysis, make_normal_form, AnalysisOptions, Cubic, DimensionClass,
    NormalFormParams, RationalPointsOutcome,
};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::linalg::RatMatrix;
use crate::rat::{rat, rat_pow, Rat};
use crate::rng::XorShift64Star;

/// Weighted projective weights of `(I8, I16, I24, I32, I40)`.
pub const WEIGHTS: [u32; 5] = [1, 2, 3, 4, 5];

/// Polynomial degrees of the five invariants in the cubic's coefficients.
pub const DEGREES: [u32; 5] = [8, 16, 24, 32, 40];

/// Elementary symmetric functions of the five pentahedral coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaVector(pub [Rat; 5]);

pub fn sigma(c: &[Rat; 5]) -> SigmaVector {
    let mut e = [
        Rat::zero(),
        Rat::zero(),
        Rat::zero(),
        Rat::zero(),
        Rat::zero(),
    ];
    for ci in c {
        for k in (1..5).rev() {
            let bump = &e[k - 1] * ci;
            e[k] += bump;
        }
        e[0] += ci;
    }
    SigmaVector(e)
}

/// `(I8, I16, I24, I32, I40)` as a point of `P(1,2,3,4,5)`; never all zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantPoint {
    entries: [Rat; 5],
}

impl InvariantPoint {
    pub fn new(entries: [Rat; 5]) -> Result<Self> {
        if entries.iter().all(|e| e.is_zero()) {
            return Err(Error::AllZero);
        }
        Ok(Self { entries })
    }

    pub fn from_i64(entries: [i64; 5]) -> Result<Self> {
        Self::new(entries.map(rat))
    }

    pub fn entries(&self) -> &[Rat; 5] {
        &self.entries
    }

    pub fn i40(&self) -> &Rat {
        &self.entries[4]
    }

    pub fn i40_is_zero(&self) -> bool {
        self.entries[4].is_zero()
    }
}

impl fmt::Display for InvariantPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{} : {} : {} : {} : {}]",
            self.entries[0], self.entries[1], self.entries[2], self.entries[3], self.entries[4]
        )
    }
}

/// The Salmon invariants on pentahedral coefficients:
/// `I8 = s4^2 - 4 s3 s5`, `I16 = s5^3 s1`, `I24 = s5^4 s4`,
/// `I32 = s5^6 s2`, `I40 = s5^8`.
pub fn salmon_from_pentahedral(c: &[Rat; 5]) -> Result<InvariantPoint> {
    let SigmaVector([s1, s2, s3, s4, s5]) = sigma(c);
    let i8 = &s4 * &s4 - rat(4) * &s3 * &s5;
    let s5p3 = rat_pow(&s5, 3);
    let i16 = &s5p3 * &s1;
    let i24 = &s5p3 * &s5 * &s4;
    let s5p6 = rat_pow(&s5, 6);
    let i32 = &s5p6 * &s2;
    let i40 = &s5p6 * &s5 * &s5;
    InvariantPoint::new([i8, i16, i24, i32, i40])
}

/// Equality in weighted projective space over the algebraic closure,
/// decided without root extraction: the zero patterns must match and every
/// pair of nonzero entries must satisfy the cross-power relation
/// `P_a^{w_b} Q_b^{w_a} = P_b^{w_a} Q_a^{w_b}`.
pub fn wp_equal(p: &InvariantPoint, q: &InvariantPoint) -> bool {
    for k in 0..5 {
        if p.entries[k].is_zero() != q.entries[k].is_zero() {
            return false;
        }
    }
    for a in 0..5 {
        if p.entries[a].is_zero() {
            continue;
        }
        for b in a + 1..5 {
            if p.entries[b].is_zero() {
                continue;
            }
            let lhs = rat_pow(&p.entries[a], WEIGHTS[b]) * rat_pow(&q.entries[b], WEIGHTS[a]);
            let rhs = rat_pow(&p.entries[b], WEIGHTS[a]) * rat_pow(&q.entries[a], WEIGHTS[b]);
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Invariants of the degenerating family as Laurent data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentInvariantPoint {
    pub entries: [LaurentPoly; 5],
}

fn laurent_sigma(c: &[LaurentPoly; 5]) -> [LaurentPoly; 5] {
    let mut e = std::array::from_fn(|_| LaurentPoly::zero());
    for ci in c {
        for k in (1..5).rev() {
            let bump = e[k - 1].mul(ci);
            e[k] = e[k].add(&bump);
        }
        e[0] = e[0].add(ci);
    }
    e
}

/// The sigma/I formulas evaluated on Laurent coefficient tuples.
pub fn laurent_salmon(c: &[LaurentPoly; 5]) -> LaurentInvariantPoint {
    let [s1, s2, s3, s4, s5] = laurent_sigma(c);
    let i8 = s4.mul(&s4).sub(&s3.mul(&s5).scale(&rat(4)));
    let s5p3 = s5.pow(3);
    let i16 = s5p3.mul(&s1);
    let i24 = s5p3.mul(&s5).mul(&s4);
    let s5p6 = s5p3.mul(&s5p3);
    let i32 = s5p6.mul(&s2);
    let i40 = s5p6.mul(&s5).mul(&s5);
    LaurentInvariantPoint {
        entries: [i8, i16, i24, i32, i40],
    }
}

/// Pentahedral coefficient tuple of the degenerating family of a rank-6
/// cubic, as Laurent polynomials:
/// `(l0^-3 e^-3, l1^-3 e^-3, l2^-3 e^-3, 1 + e^-1, e^-1)`.
/// The pentahedral reading is in the rescaled coordinates
/// `(e l0 x0, e l1 x1, e l2 x2, x3)`; the weighted-projective point is
/// insensitive to that change.
pub fn epsilon_family(lambda: &[Rat; 3]) -> Result<[LaurentPoly; 5]> {
    if lambda.iter().any(|l| l.is_zero()) {
        return Err(Error::InvalidParams("lambda entries must be nonzero".into()));
    }
    let cube_inv = |l: &Rat| rat_pow(l, 3).recip();
    Ok([
        LaurentPoly::monomial(cube_inv(&lambda[0]), -3),
        LaurentPoly::monomial(cube_inv(&lambda[1]), -3),
        LaurentPoly::monomial(cube_inv(&lambda[2]), -3),
        LaurentPoly::from_rat(Rat::one()).add(&LaurentPoly::monomial(Rat::one(), -1)),
        LaurentPoly::monomial(Rat::one(), -1),
    ])
}

/// Exact limit of the family's invariants in `P(1,2,3,4,5)`: with
/// `tau = min ord(I_d)/w_d` over nonzero entries, entry `d` of the limit is
/// the leading coefficient when its ratio attains `tau` and zero otherwise.
pub fn limit_invariants(lambda: &[Rat; 3]) -> Result<InvariantPoint> {
    let family = epsilon_family(lambda)?;
    let lp = laurent_salmon(&family);
    // tau as an exact rational: compare ord_a / w_a < ord_b / w_b by
    // cross-multiplying with the positive weights
    let mut tau: Option<(i64, i64)> = None; // (ord, weight)
    for (k, entry) in lp.entries.iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let ord = entry.order()?;
        let w = WEIGHTS[k] as i64;
        let smaller = match tau {
            None => true,
            Some((o, wo)) => ord * wo < o * w,
        };
        if smaller {
            tau = Some((ord, w));
        }
    }
    let (tau_ord, tau_w) = tau.ok_or(Error::AllZero)?;
    let entries = std::array::from_fn(|k| {
        let entry = &lp.entries[k];
        if entry.is_zero() {
            return Rat::zero();
        }
        let ord = entry.order().expect("nonzero");
        let w = WEIGHTS[k] as i64;
        if ord * tau_w == tau_ord * w {
            entry.leading_coeff()
        } else {
            Rat::zero()
        }
    });
    InvariantPoint::new(entries)
}

/// Closed form of the rank-6 limit point:
/// `[1 - 4 S1 : S2 : 2 S3 : S3 S1 : 0]` in the elementary symmetric
/// functions `S_k` of `(l0^3, l1^3, l2^3)`.
pub fn rank6_closed_form(lambda: &[Rat; 3]) -> Result<InvariantPoint> {
    if lambda.iter().any(|l| l.is_zero()) {
        return Err(Error::InvalidParams("lambda entries must be nonzero".into()));
    }
    let a = rat_pow(&lambda[0], 3);
    let b = rat_pow(&lambda[1], 3);
    let c = rat_pow(&lambda[2], 3);
    let s1 = &a + &b + &c;
    let s2 = &a * &b + &a * &c + &b * &c;
    let s3 = &a * &b * &c;
    InvariantPoint::new([
        Rat::one() - rat(4) * &s1,
        s2,
        rat(2) * &s3,
        &s3 * &s1,
        Rat::zero(),
    ])
}

// ---------------------------------------------------------------------------
// pentahedron recovery
// ---------------------------------------------------------------------------

/// A Sylvester pentahedron: five planes (first nonzero coefficient 1, any
/// four linearly independent) and five nonzero coefficients with
/// `sum c_i L_i^3 = f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pentahedron {
    pub planes: [[Rat; 4]; 5],
    pub coefficients: [Rat; 5],
}

impl Pentahedron {
    /// Rescales every plane so its first nonzero coefficient is 1,
    /// absorbing the cube of each scalar into the coefficient, and sorts
    /// the plane/coefficient pairs. Two representations of the same cubic
    /// normalize identically.
    pub fn normalized(&self) -> Pentahedron {
        let mut pairs: Vec<([Rat; 4], Rat)> = self
            .planes
            .iter()
            .zip(&self.coefficients)
            .map(|(plane, c)| {
                let s = plane
                    .iter()
                    .find(|v| !v.is_zero())
                    .cloned()
                    .expect("plane is nonzero");
                let inv = s.clone().recip();
                let scaled: [Rat; 4] = std::array::from_fn(|i| &plane[i] * &inv);
                (scaled, c * rat_pow(&s, 3))
            })
            .collect();
        pairs.sort_by(|a, b| a.0.cmp(&b.0));
        Pentahedron {
            planes: std::array::from_fn(|i| pairs[i].0.clone()),
            coefficients: std::array::from_fn(|i| pairs[i].1.clone()),
        }
    }

    /// Expands `sum c_i L_i^3` back to a cubic.
    pub fn to_cubic(&self) -> Result<Cubic> {
        let ring = crate::poly::Ring::x4();
        let mut f = crate::poly::MultiPoly::zero(ring);
        for (plane, c) in self.planes.iter().zip(&self.coefficients) {
            let mut l = crate::poly::MultiPoly::zero(ring);
            for (i, a) in plane.iter().enumerate() {
                l.add_term(&crate::poly::Monomial::var(i), a.clone());
            }
            f = f.add(&l.pow(3).scale(c));
        }
        Cubic::from_poly(&f)
    }
}

fn canonical_rowspace(rows: Vec<Vec<Rat>>) -> (usize, RatMatrix) {
    let m = RatMatrix::from_rows(rows);
    let (rank, red, _) = m.rref();
    let canon = RatMatrix::from_fn(rank, 4, |i, j| red.get(i, j).clone());
    (rank, canon)
}

/// Kernel-grouping recovery of the unique pentahedral representation of a
/// cubic whose rank-2 locus consists of 10 rational reduced points: the
/// kernels of the 10 rank-2 quadrics are the pentahedron edges, the
/// 3-spaces holding exactly 4 edges are its faces, and their annihilators
/// are the planes; the coefficients come from one exact linear solve.
pub fn recover_pentahedron(f: &Cubic, seed: u64) -> Result<Pentahedron> {
    let report = intersection_analysis(f, &AnalysisOptions::with_points(seed))?;
    if report.dimension_class != DimensionClass::ZeroDimensional
        || report.degree != Some(10)
        || report.radical != Some(true)
    {
        return Err(Error::NotPentahedralRational(
            "rank-2 locus is not 10 reduced points".into(),
        ));
    }
    let points = match report.rational_points {
        RationalPointsOutcome::Complete(p) => p,
        RationalPointsOutcome::Incomplete { found, expected } => {
            return Err(Error::NotPentahedralRational(format!(
                "only {} of {} rank-2 points are rational",
                found.len(),
                expected
            )));
        }
        RationalPointsOutcome::NotComputed => {
            return Err(Error::Internal("points were requested".into()));
        }
    };

    // pentahedron edges: the 2-dimensional kernels
    let kernels: Vec<Vec<Vec<Rat>>> = points
        .iter()
        .map(|q| {
            let (rank, ker) = q.rref_kernel();
            debug_assert_eq!(rank, 2);
            ker
        })
        .collect();

    // candidate faces: 3-spaces spanned by two edges
    let mut faces: Vec<RatMatrix> = Vec::new();
    for a in 0..kernels.len() {
        for b in a + 1..kernels.len() {
            let mut rows = kernels[a].clone();
            rows.extend(kernels[b].iter().cloned());
            let (rank, canon) = canonical_rowspace(rows);
            if rank == 3 && !faces.contains(&canon) {
                faces.push(canon);
            }
        }
    }
    // a face must contain exactly 4 of the 10 edges
    let mut true_faces: Vec<RatMatrix> = Vec::new();
    for face in faces {
        let mut contained = 0;
        for ker in &kernels {
            let mut rows: Vec<Vec<Rat>> = (0..3).map(|i| face.row(i).to_vec()).collect();
            rows.extend(ker.iter().cloned());
            if canonical_rowspace(rows).0 == 3 {
                contained += 1;
            }
        }
        if contained == 4 {
            true_faces.push(face);
        }
    }
    if true_faces.len() != 5 {
        return Err(Error::NotPentahedralRational(format!(
            "edge grouping produced {} faces instead of 5",
            true_faces.len()
        )));
    }

    // planes: the 1-dimensional annihilator of each face
    let mut planes: Vec<[Rat; 4]> = Vec::new();
    for face in &true_faces {
        let (_, ker) = face.rref_kernel();
        if ker.len() != 1 {
            return Err(Error::Internal("face annihilator is not a line".into()));
        }
        planes.push(std::array::from_fn(|i| ker[0][i].clone()));
    }
    planes.sort();
    let planes: [[Rat; 4]; 5] = planes.try_into().expect("five planes");

    // any 4 of the 5 planes must be independent
    for skip in 0..5 {
        let rows: Vec<Vec<Rat>> = (0..5)
            .filter(|&i| i != skip)
            .map(|i| planes[i].to_vec())
            .collect();
        if canonical_rowspace(rows).0 != 4 {
            return Err(Error::NotPentahedralRational(
                "recovered planes are not in general position".into(),
            ));
        }
    }

    // solve sum c_i L_i^3 = f exactly: 20 equations, 5 unknowns
    let cubes: Vec<Cubic> = planes
        .iter()
        .map(|p| {
            let ring = crate::poly::Ring::x4();
            let mut l = crate::poly::MultiPoly::zero(ring);
            for (i, a) in p.iter().enumerate() {
                l.add_term(&crate::poly::Monomial::var(i), a.clone());
            }
            Cubic::from_poly(&l.pow(3))
        })
        .collect::<Result<_>>()?;
    let triples: Vec<[u8; 3]> = {
        let mut t = Vec::new();
        for i in 0..4u8 {
            for j in i..4 {
                for k in j..4 {
                    t.push([i, j, k]);
                }
            }
        }
        t
    };
    let mut aug = RatMatrix::zeros(20, 6);
    for (row, t) in triples.iter().enumerate() {
        for (col, cube) in cubes.iter().enumerate() {
            aug.set(
                row,
                col,
                cube.coefficient(t[0] as usize, t[1] as usize, t[2] as usize),
            );
        }
        aug.set(
            row,
            5,
            f.coefficient(t[0] as usize, t[1] as usize, t[2] as usize),
        );
    }
    let (rank, red, pivots) = aug.rref();
    if pivots.contains(&5) {
        return Err(Error::NotPentahedralRational(
            "linear system for the coefficients is inconsistent".into(),
        ));
    }
    if rank != 5 {
        return Err(Error::NotPentahedralRational(
            "coefficient solution is not unique".into(),
        ));
    }
    let coefficients: [Rat; 5] = std::array::from_fn(|i| red.get(i, 5).clone());
    if coefficients.iter().any(|c| c.is_zero()) {
        return Err(Error::NotPentahedralRational(
            "a recovered coefficient vanishes".into(),
        ));
    }
    let pent = Pentahedron {
        planes,
        coefficients,
    };
    if pent.to_cubic()? != *f {
        return Err(Error::Internal(
            "recovered pentahedron does not reproduce the cubic".into(),
        ));
    }
    Ok(pent)
}

// ---------------------------------------------------------------------------
// sampled theorem verification
// ---------------------------------------------------------------------------

/// Five seeded planes with any four independent, and five nonzero
/// coefficients.
pub fn random_pentahedron(rng: &mut XorShift64Star) -> Pentahedron {
    let planes: [[Rat; 4]; 5] = loop {
        let cand: [[Rat; 4]; 5] =
            std::array::from_fn(|_| std::array::from_fn(|_| rat(rng.int_in(-3, 3))));
        let ok = (0..5).all(|skip| {
            let rows: Vec<Vec<Rat>> = (0..5)
                .filter(|&i| i != skip)
                .map(|i| cand[i].to_vec())
                .collect();
            canonical_rowspace(rows).0 == 4
        });
        if ok {
            break cand;
        }
    };
    let coefficients: [Rat; 5] = std::array::from_fn(|_| rat(rng.nonzero_int_in(-9, 9)));
    Pentahedron {
        planes,
        coefficients,
    }
}

#[derive(Debug, Clone)]
pub struct TheoremCase {
    pub family: &'static str,
    pub params: String,
    pub case_seed: u64,
    pub i40_zero: bool,
    pub on_hd: bool,
    pub profile: Option<String>,
    pub consistent: bool,
    pub note: String,
}

#[derive(Debug, Clone)]
pub struct TheoremReport {
    pub seed: u64,
    pub cases: Vec<TheoremCase>,
    pub consistent: bool,
}

/// Samples pentahedral cubics (expecting nonzero I40 and an off-locus
/// verdict) and rank-6 cubics (expecting vanishing I40, an on-locus verdict,
/// and the 4-simple/3-double profile); failures are report entries, never
/// panics.
pub fn verify_theorem(seed: u64, n_pentahedral: usize, n_rank6: usize) -> TheoremReport {
    let mut rng = XorShift64Star::new(seed);
    let mut cases = Vec::new();

    for idx in 0..n_pentahedral {
        let case_seed = rng.next_u64();
        let mut case_rng = XorShift64Star::new(case_seed);
        let pent = random_pentahedron(&mut case_rng);
        let params = format!(
            "planes={:?} c={:?}",
            pent.planes
                .iter()
                .map(|p| p.iter().map(|v| v.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            pent.coefficients
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
        );
        let case = match build_pentahedral_case(&pent, case_seed, idx) {
            Ok(c) => c,
            Err(e) => TheoremCase {
                family: "pentahedral",
                params: params.clone(),
                case_seed,
                i40_zero: false,
                on_hd: true,
                profile: None,
                consistent: false,
                note: format!("analysis error: {e}"),
            },
        };
        cases.push(TheoremCase { params, ..case });
    }

    for _ in 0..n_rank6 {
        let case_seed = rng.next_u64();
        let mut case_rng = XorShift64Star::new(case_seed);
        let lambda: [Rat; 3] = std::array::from_fn(|_| case_rng.nonzero_rat_in(5, 3));
        let params = format!(
            "lambda=[{}, {}, {}]",
            lambda[0], lambda[1], lambda[2]
        );
        let case = match build_rank6_case(&lambda, case_seed) {
            Ok(c) => c,
            Err(e) => TheoremCase {
                family: "rank6",
                params: params.clone(),
                case_seed,
                i40_zero: false,
                on_hd: false,
                profile: None,
                consistent: false,
                note: format!("analysis error: {e}"),
            },
        };
        cases.push(TheoremCase { params, ..case });
    }

    let consistent = cases.iter().all(|c| c.consistent);
    TheoremReport {
        seed,
        cases,
        consistent,
    }
}

fn build_pentahedral_case(
    pent: &Pentahedron,
    case_seed: u64,
    _idx: usize,
) -> Result<TheoremCase> {
    let f = pent.to_cubic()?;
    let inv = salmon_from_pentahedral(&pent.coefficients)?;
    let i40_zero = inv.i40_is_zero();
    let report = intersection_analysis(&f, &AnalysisOptions::seeded(case_seed))?;
    let on_hd = report.on_hessian_discriminant;
    let consistent = !i40_zero && !on_hd;
    Ok(TheoremCase {
        family: "pentahedral",
        params: String::new(),
        case_seed,
        i40_zero,
        on_hd,
        profile: report.profile.map(|p| p.to_string()),
        consistent,
        note: String::new(),
    })
}

fn build_rank6_case(lambda: &[Rat; 3], case_seed: u64) -> Result<TheoremCase> {
    let f = make_normal_form(&NormalFormParams::Rank6(lambda.clone()))?;
    let limit = limit_invariants(lambda)?;
    let i40_zero = limit.i40_is_zero();
    let report = intersection_analysis(&f, &AnalysisOptions::seeded(case_seed))?;
    let on_hd = report.on_hessian_discriminant;
    let profile_ok = report
        .profile
        .as_ref()
        .map(|p| p.entries() == [(1, 4), (2, 3)])
        .unwrap_or(false);
    let consistent = i40_zero && on_hd && profile_ok;
    Ok(TheoremCase {
        family: "rank6",
        params: String::new(),
        case_seed,
        i40_zero,
        on_hd,
        profile: report.profile.map(|p| p.to_string()),
        consistent,
        note: String::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratq;

    #[test]
    fn sigma_examples() {
        let SigmaVector(s) = sigma(&[rat(1), rat(1), rat(1), rat(1), rat(1)]);
        assert_eq!(s, [rat(5), rat(10), rat(10), rat(5), rat(1)]);
        let SigmaVector(s) = sigma(&[rat(1), rat(0), rat(0), rat(0), rat(0)]);
        assert_eq!(s, [rat(1), rat(0), rat(0), rat(0), rat(0)]);
        let SigmaVector(s) = sigma(&[rat(1), rat(2), rat(3), rat(4), rat(5)]);
        assert_eq!(s, [rat(15), rat(85), rat(225), rat(274), rat(120)]);
    }

    #[test]
    fn sigma_round_trip_against_product_expansion() {
        // prod (u + c_i) has coefficients (1, s1, ..., s5)
        let c = [ratq(1, 2), rat(-3), rat(7), ratq(2, 5), rat(1)];
        let SigmaVector(s) = sigma(&c);
        let mut poly = crate::unipoly::UniPoly::one();
        for ci in &c {
            poly = poly.mul(&crate::unipoly::UniPoly::from_coeffs(vec![
                ci.clone(),
                Rat::one(),
            ]));
        }
        for k in 1..=5 {
            assert_eq!(poly.coeff(5 - k), s[k - 1]);
        }
    }

    #[test]
    fn salmon_all_ones() {
        let p = salmon_from_pentahedral(&std::array::from_fn(|_| rat(1))).unwrap();
        assert_eq!(
            p.entries(),
            &[rat(-15), rat(5), rat(5), rat(10), rat(1)]
        );
    }

    #[test]
    fn salmon_with_zero_coefficient() {
        // one vanishing coefficient kills s5 and with it everything past I8
        let p = salmon_from_pentahedral(&[rat(1), rat(1), rat(1), rat(1), rat(0)]).unwrap();
        assert_eq!(p.entries(), &[rat(1), rat(0), rat(0), rat(0), rat(0)]);
        assert!(p.i40_is_zero());
    }

    #[test]
    fn wp_equal_examples() {
        let p = InvariantPoint::from_i64([-15, 5, 5, 10, 1]).unwrap();
        assert!(wp_equal(&p, &p));
        let q = InvariantPoint::from_i64([-30, 20, 40, 160, 32]).unwrap();
        assert!(wp_equal(&p, &q));
        let r = InvariantPoint::from_i64([1, 0, 0, 0, 0]).unwrap();
        let s = InvariantPoint::from_i64([1, 1, 0, 0, 0]).unwrap();
        assert!(!wp_equal(&r, &s));
        assert!(InvariantPoint::from_i64([0, 0, 0, 0, 0]).is_err());
    }

    #[test]
    fn scaling_all_coefficients_is_wp_trivial() {
        let c = [rat(1), rat(2), rat(3), rat(4), rat(5)];
        let p = salmon_from_pentahedral(&c).unwrap();
        let scaled: [Rat; 5] = std::array::from_fn(|i| &c[i] * rat(7));
        let q = salmon_from_pentahedral(&scaled).unwrap();
        assert!(wp_equal(&p, &q));
        // entrywise law: I_d(s c) = s^d I_d(c)
        for k in 0..5 {
            assert_eq!(
                q.entries()[k],
                rat_pow(&rat(7), DEGREES[k]) * &p.entries()[k]
            );
        }
    }

    #[test]
    fn epsilon_family_all_ones() {
        let fam = epsilon_family(&[rat(1), rat(1), rat(1)]).unwrap();
        for i in 0..3 {
            assert_eq!(fam[i], LaurentPoly::monomial(rat(1), -3));
        }
        assert_eq!(
            fam[3],
            LaurentPoly::from_rat(rat(1)).add(&LaurentPoly::monomial(rat(1), -1))
        );
        assert_eq!(fam[4], LaurentPoly::monomial(rat(1), -1));
        assert!(epsilon_family(&[rat(0), rat(1), rat(1)]).is_err());
    }

    #[test]
    fn limit_all_ones() {
        let p = limit_invariants(&[rat(1), rat(1), rat(1)]).unwrap();
        let expect = InvariantPoint::from_i64([-11, 3, 2, 3, 0]).unwrap();
        assert!(wp_equal(&p, &expect), "got {p}");
        assert!(p.i40_is_zero());
    }

    #[test]
    fn closed_form_values() {
        let p = rank6_closed_form(&[rat(1), rat(1), rat(1)]).unwrap();
        assert_eq!(p.entries(), &[rat(-11), rat(3), rat(2), rat(3), rat(0)]);
        let q = rank6_closed_form(&[rat(1), rat(1), rat(-1)]).unwrap();
        assert_eq!(q.entries(), &[rat(-3), rat(-1), rat(-2), rat(-1), rat(0)]);
    }

    /// Coefficient map of `(sum_m l_m x_m)^3` over sorted triples, with
    /// Laurent coefficients; an independent multinomial oracle.
    fn cube_expansion(l: &[LaurentPoly; 4]) -> std::collections::BTreeMap<[u8; 3], LaurentPoly> {
        let mut out = std::collections::BTreeMap::new();
        for i in 0..4u8 {
            for j in i..4 {
                for k in j..4 {
                    let perm = if i == k {
                        1
                    } else if i == j || j == k {
                        3
                    } else {
                        6
                    };
                    let coeff = l[i as usize]
                        .mul(&l[j as usize])
                        .mul(&l[k as usize])
                        .scale(&rat(perm));
                    out.insert([i, j, k], coeff);
                }
            }
        }
        out
    }

    #[test]
    fn family_limit_is_the_rank6_cubic() {
        // expand the degenerating family symbolically: every coefficient
        // must be pole-free and its constant term must match the rank-6
        // normal form coefficient-by-coefficient
        for lambda in [
            [rat(1), rat(1), rat(1)],
            [rat(2), rat(-1), ratq(1, 2)],
            [ratq(-3, 2), rat(5), rat(1)],
        ] {
            let c = epsilon_family(&lambda).unwrap();
            let eps = |k: i64| LaurentPoly::monomial(Rat::one(), k);
            let zero = LaurentPoly::zero();
            let mut total: std::collections::BTreeMap<[u8; 3], LaurentPoly> =
                std::collections::BTreeMap::new();
            let mut add_piece = |coeff: &LaurentPoly, linear: [LaurentPoly; 4]| {
                for (t, v) in cube_expansion(&linear) {
                    let bump = v.mul(coeff);
                    let slot = total.entry(t).or_insert_with(LaurentPoly::zero);
                    *slot = slot.add(&bump);
                }
            };
            for i in 0..3 {
                let mut linear = [zero.clone(), zero.clone(), zero.clone(), zero.clone()];
                linear[i] = eps(1).scale(&lambda[i]);
                add_piece(&c[i], linear);
            }
            add_piece(
                &c[3],
                [zero.clone(), zero.clone(), zero.clone(), LaurentPoly::one()],
            );
            add_piece(
                &c[4],
                [
                    eps(1).scale(&-&lambda[0]),
                    eps(1).scale(&-&lambda[1]),
                    eps(1).scale(&-&lambda[2]),
                    LaurentPoly::from_rat(rat(-1)),
                ],
            );
            let f = make_normal_form(&NormalFormParams::Rank6(lambda.clone())).unwrap();
            for i in 0..4u8 {
                for j in i..4 {
                    for k in j..4 {
                        let coeff = total
                            .get(&[i, j, k])
                            .cloned()
                            .unwrap_or_else(LaurentPoly::zero);
                        if !coeff.is_zero() {
                            assert!(
                                coeff.order().unwrap() >= 0,
                                "pole in coefficient ({i},{j},{k})"
                            );
                        }
                        assert_eq!(
                            coeff.coeff_at(0),
                            f.coefficient(i as usize, j as usize, k as usize),
                            "constant term of ({i},{j},{k}) for lambda {lambda:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn limit_matches_closed_form() {
        let mut rng = XorShift64Star::new(9);
        for _ in 0..20 {
            let lambda: [Rat; 3] = std::array::from_fn(|_| rng.nonzero_rat_in(6, 4));
            let a = limit_invariants(&lambda).unwrap();
            let b = rank6_closed_form(&lambda).unwrap();
            assert!(wp_equal(&a, &b), "lambda {lambda:?}: {a} vs {b}");
            assert!(a.i40_is_zero());
        }
    }
}
