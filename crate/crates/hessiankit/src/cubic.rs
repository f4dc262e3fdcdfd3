//! Everything attached to a single quaternary cubic: symmetric tensor and
//! Hessian slices, the polar 3-plane in Stiefel and Pluecker coordinates,
//! the annihilator of degree 2, the rank-2 pencil ideal, the intersection
//! analysis with its membership verdict, rational-point extraction, and the
//! classical normal-form generators.

use std::collections::BTreeMap;
use std::fmt;

use num::traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groebner::{
    analyze_zero_dim, buchberger, Ideal, MultiplicityProfile,
};
use crate::linalg::RatMatrix;
use crate::poly::{Monomial, MonomialOrder, MultiPoly, Ring};
use crate::rat::{rat, Rat};
use crate::rng::XorShift64Star;

/// Column order of the 4x10 Stiefel matrix: index pairs (j, k) with j <= k
/// in lexicographic order.
pub const STIEFEL_COLUMNS: [(usize, usize); 10] = [
    (0, 0),
    (0, 1),
    (0, 2),
    (0, 3),
    (1, 1),
    (1, 2),
    (1, 3),
    (2, 2),
    (2, 3),
    (3, 3),
];

/// A quaternary cubic, stored as its 20 coefficients `c_{ijk}` on sorted
/// index triples. At least one coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cubic {
    coeffs: BTreeMap<[u8; 3], Rat>,
}

fn sorted_triple(i: usize, j: usize, k: usize) -> [u8; 3] {
    let mut t = [i as u8, j as u8, k as u8];
    t.sort_unstable();
    t
}

/// Number of distinct permutations of a sorted index triple.
fn permutation_count(t: &[u8; 3]) -> i64 {
    if t[0] == t[2] {
        1
    } else if t[0] == t[1] || t[1] == t[2] {
        3
    } else {
        6
    }
}

impl Cubic {
    pub fn from_coeffs(entries: Vec<((usize, usize, usize), Rat)>) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for ((i, j, k), c) in entries {
            if i > 3 || j > 3 || k > 3 {
                return Err(Error::IndexOutOfRange(format!("triple ({i},{j},{k})")));
            }
            if c.is_zero() {
                continue;
            }
            *coeffs
                .entry(sorted_triple(i, j, k))
                .or_insert_with(Rat::zero) += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        if coeffs.is_empty() {
            return Err(Error::NotACubic("all coefficients vanish".into()));
        }
        Ok(Self { coeffs })
    }

    /// Coefficient extraction from a homogeneous degree-3 polynomial in the
    /// x-ring.
    pub fn from_poly(f: &MultiPoly) -> Result<Self> {
        if f.ring() != Ring::x4() {
            return Err(Error::RingMismatch(
                f.ring().describe(),
                Ring::x4().describe(),
            ));
        }
        if f.is_zero() {
            return Err(Error::NotACubic("zero polynomial".into()));
        }
        if f.homogeneous_degree() != Some(3) {
            return Err(Error::NotACubic(format!(
                "degree {:?}, homogeneous degree 3 required",
                f.total_degree()
            )));
        }
        let mut entries = Vec::new();
        for (m, c) in f.terms() {
            let mut idx = Vec::new();
            for v in 0..4 {
                for _ in 0..m.exp(v) {
                    idx.push(v);
                }
            }
            entries.push(((idx[0], idx[1], idx[2]), c.clone()));
        }
        Self::from_coeffs(entries)
    }

    pub fn to_poly(&self) -> MultiPoly {
        let mut f = MultiPoly::zero(Ring::x4());
        for (t, c) in &self.coeffs {
            let mut exps = [0u16; 4];
            for &i in t {
                exps[i as usize] += 1;
            }
            f.add_term(&Monomial::from_exps(&exps), c.clone());
        }
        f
    }

    /// `c_{ijk}` for any index order.
    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> Rat {
        self.coeffs
            .get(&sorted_triple(i, j, k))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    /// Symmetric tensor entry `T_{ijk} = c_{ijk} / lambda`, lambda the
    /// number of distinct permutations of the triple.
    pub fn tensor_entry(&self, i: usize, j: usize, k: usize) -> Rat {
        let t = sorted_triple(i, j, k);
        match self.coeffs.get(&t) {
            Some(c) => c / rat(permutation_count(&t)),
            None => Rat::zero(),
        }
    }

    /// The cubic composed with `x -> Mx`.
    pub fn linear_substitute(&self, m: &RatMatrix) -> Result<Self> {
        Self::from_poly(&self.to_poly().linear_substitute(m)?)
    }

    pub fn coefficients(&self) -> impl Iterator<Item = (&[u8; 3], &Rat)> {
        self.coeffs.iter()
    }

    /// Serializes as the coefficient-map text format, e.g.
    /// `{"000": "1", "012": "-3/2"}` with non-decreasing index triples.
    pub fn to_coeff_map_json(&self) -> String {
        let mut obj = serde_json::Map::new();
        for (t, c) in &self.coeffs {
            obj.insert(
                format!("{}{}{}", t[0], t[1], t[2]),
                serde_json::Value::String(c.to_string()),
            );
        }
        serde_json::Value::Object(obj).to_string()
    }

    pub fn from_coeff_map_json(text: &str) -> Result<Self> {
        let v: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Parse {
            pos: 0,
            msg: format!("invalid coefficient map: {e}"),
        })?;
        let obj = v.as_object().ok_or_else(|| Error::Parse {
            pos: 0,
            msg: "coefficient map must be a JSON object".into(),
        })?;
        let mut entries = Vec::new();
        for (key, val) in obj {
            let digits: Vec<usize> = key
                .chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<Vec<_>>>()
                .filter(|d| d.len() == 3 && d.iter().all(|&x| x < 4))
                .ok_or_else(|| Error::Parse {
                    pos: 0,
                    msg: format!("bad index triple {key:?}"),
                })?;
            if digits.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!("index triple {key:?} must be non-decreasing"),
                });
            }
            let s = val.as_str().ok_or_else(|| Error::Parse {
                pos: 0,
                msg: format!("coefficient for {key:?} must be a string"),
            })?;
            entries.push(((digits[0], digits[1], digits[2]), crate::rat::parse_rat(s)?));
        }
        Self::from_coeffs(entries)
    }
}

impl fmt::Display for Cubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

// ---------------------------------------------------------------------------
// slices, Stiefel/Pluecker, annihilator
// ---------------------------------------------------------------------------

/// The four symmetric slices `(T_{mjk})_{j,k}` of the cubic's tensor. Their
/// span is the polar 3-plane; `6 * sum_m x_m * slice_m` equals the Hessian
/// matrix of the cubic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymSlices {
    slices: [RatMatrix; 4],
}

impl SymSlices {
    pub fn slices(&self) -> &[RatMatrix; 4] {
        &self.slices
    }

    /// 4x10 Stiefel matrix: row m lists `T_{mjk}` over the fixed column
    /// order.
    pub fn stiefel_matrix(&self) -> RatMatrix {
        RatMatrix::from_fn(4, 10, |m, col| {
            let (j, k) = STIEFEL_COLUMNS[col];
            self.slices[m].get(j, k).clone()
        })
    }

    /// The symmetric pencil `M(t) = sum_m t_m slice_m` as a matrix of linear
    /// forms in the t-ring.
    pub fn pencil(&self) -> Vec<Vec<MultiPoly>> {
        let ring = Ring::t4();
        (0..4)
            .map(|i| {
                (0..4)
                    .map(|j| {
                        let mut e = MultiPoly::zero(ring);
                        for m in 0..4 {
                            e.add_term(&Monomial::var(m), self.slices[m].get(i, j).clone());
                        }
                        e
                    })
                    .collect()
            })
            .collect()
    }

    /// Evaluates the pencil at a rational t-vector.
    pub fn pencil_at(&self, t: &[Rat]) -> RatMatrix {
        let mut acc = RatMatrix::zeros(4, 4);
        for m in 0..4 {
            acc = acc.add(&self.slices[m].scale(&t[m]));
        }
        acc
    }
}

/// Hessian slices of the cubic. Errors with `ConeOrDegenerate` when the
/// slices do not span a 3-plane (the cubic is, up to coordinates, a
/// polynomial in at most 3 variables).
pub fn hessian_slices(f: &Cubic) -> Result<SymSlices> {
    let slices = std::array::from_fn(|m| {
        RatMatrix::from_fn(4, 4, |j, k| f.tensor_entry(m, j, k))
    });
    let s = SymSlices { slices };
    if s.stiefel_matrix().rank() < 4 {
        return Err(Error::ConeOrDegenerate);
    }
    // construction-time identity: 6 * sum_m x_m slice_m = Hessian(f)
    let fx = f.to_poly();
    for i in 0..4 {
        for j in 0..4 {
            let hess_ij = fx.differentiate(i).differentiate(j);
            let mut lhs = MultiPoly::zero(Ring::x4());
            for m in 0..4 {
                lhs.add_term(
                    &Monomial::var(m),
                    rat(6) * s.slices[m].get(i, j),
                );
            }
            if lhs != hess_ij {
                return Err(Error::Internal(
                    "slice identity 6*sum x_m slice_m = Hess(f) failed".into(),
                ));
            }
        }
    }
    Ok(s)
}

/// Stiefel and Pluecker coordinates of the polar 3-plane. The 210 Pluecker
/// values are the 4x4 minors over lexicographically ordered column
/// 4-subsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolarSubspace {
    pub stiefel: RatMatrix,
    pub pluecker: Vec<Rat>,
}

/// Lexicographically ordered 4-subsets of 0..10.
pub fn pluecker_column_subsets() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(210);
    for a in 0..10 {
        for b in a + 1..10 {
            for c in b + 1..10 {
                for d in c + 1..10 {
                    out.push([a, b, c, d]);
                }
            }
        }
    }
    out
}

pub fn polar_subspace(f: &Cubic) -> Result<PolarSubspace> {
    let slices = hessian_slices(f)?;
    let stiefel = slices.stiefel_matrix();
    let rows = [0, 1, 2, 3];
    let mut pluecker = Vec::with_capacity(210);
    for cols in pluecker_column_subsets() {
        pluecker.push(stiefel.minor(&rows, &cols)?);
    }
    debug_assert!(pluecker.iter().any(|p| !p.is_zero()));
    Ok(PolarSubspace { stiefel, pluecker })
}

/// Basis of the degree-2 part of the annihilator: the kernel of the
/// catalecticant map from quadrics to linear forms, returned as symmetric
/// matrices `A` with `trace(A * slice_m) = 0` for every slice. For a cubic
/// with 4-dimensional polar span the basis has 6 elements.
pub fn annihilator_quadrics(f: &Cubic) -> Vec<RatMatrix> {
    // column (i,j) of the catalecticant pairs the matrix-entry coordinate
    // a_ij with the slices: diagonal entries once, off-diagonal twice
    let cat = RatMatrix::from_fn(4, 10, |m, col| {
        let (i, j) = STIEFEL_COLUMNS[col];
        let t = f.tensor_entry(m, i, j);
        if i == j {
            t
        } else {
            rat(2) * t
        }
    });
    let (_, kernel) = cat.rref_kernel();
    kernel
        .into_iter()
        .map(|v| {
            let mut a = RatMatrix::zeros(4, 4);
            for (col, &(i, j)) in STIEFEL_COLUMNS.iter().enumerate() {
                a.set(i, j, v[col].clone());
                a.set(j, i, v[col].clone());
            }
            a
        })
        .collect()
}

// ---------------------------------------------------------------------------
// rank-2 pencil ideal
// ---------------------------------------------------------------------------

fn det3(m: &[Vec<MultiPoly>], rows: [usize; 3], cols: [usize; 3]) -> MultiPoly {
    let e = |i: usize, j: usize| &m[rows[i]][cols[j]];
    let mut acc = MultiPoly::zero(m[0][0].ring());
    for (sign, p) in [
        (1, [0usize, 1, 2]),
        (1, [1, 2, 0]),
        (1, [2, 0, 1]),
        (-1, [0, 2, 1]),
        (-1, [1, 0, 2]),
        (-1, [2, 1, 0]),
    ] {
        // permutation p maps column position -> row position choice
        let term = e(p[0], 0).mul(e(p[1], 1)).mul(e(p[2], 2));
        acc = if sign > 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// The ideal of 3x3 minors of the symmetric pencil `M(t)`, in the t-ring.
/// Transpose-duplicate minors are dropped: 10 homogeneous cubic generators.
pub fn rank2_pencil_ideal(f: &Cubic) -> Result<Ideal> {
    let slices = hessian_slices(f)?;
    let pencil = slices.pencil();
    let subsets: [[usize; 3]; 4] = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
    let mut gens = Vec::with_capacity(10);
    for (a, rows) in subsets.iter().enumerate() {
        for cols in subsets.iter().skip(a) {
            let g = det3(&pencil, *rows, *cols);
            gens.push(g.primitive_part(MonomialOrder::DegRevLex));
        }
    }
    debug_assert_eq!(gens.len(), 10);
    Ok(Ideal::new(Ring::t4(), gens))
}

// ---------------------------------------------------------------------------
// intersection analysis
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DimensionClass {
    Empty,
    ZeroDimensional,
    PositiveDimensional,
}

impl fmt::Display for DimensionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimensionClass::Empty => write!(f, "empty"),
            DimensionClass::ZeroDimensional => write!(f, "zero_dimensional"),
            DimensionClass::PositiveDimensional => write!(f, "positive_dimensional"),
        }
    }
}

/// Seeds and retry counts behind a verdict, for reproducibility.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedRecord {
    pub seed: u64,
    pub retry_limit: u32,
    pub coordinate_retries: u32,
    pub separation_retries: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RationalPointsOutcome {
    NotComputed,
    Complete(Vec<RatMatrix>),
    Incomplete {
        found: Vec<RatMatrix>,
        expected: usize,
    },
}

#[derive(Debug, Clone)]
pub struct IntersectionReport {
    pub dimension_class: DimensionClass,
    pub degree: Option<usize>,
    pub profile: Option<MultiplicityProfile>,
    pub radical: Option<bool>,
    pub on_hessian_discriminant: bool,
    pub rational_points: RationalPointsOutcome,
    pub seeds: SeedRecord,
}

#[derive(Debug, Clone)]
pub struct AnalysisOptions {
    pub seed: u64,
    pub retry_limit: u32,
    pub rational_points: bool,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        Self {
            seed: 0,
            retry_limit: 8,
            rational_points: false,
        }
    }
}

impl AnalysisOptions {
    pub fn seeded(seed: u64) -> Self {
        Self {
            seed,
            ..Self::default()
        }
    }

    pub fn with_points(seed: u64) -> Self {
        Self {
            seed,
            retry_limit: 8,
            rational_points: true,
        }
    }
}

/// Seeded invertible square matrix with small integer entries.
pub fn random_invertible_matrix(rng: &mut XorShift64Star, n: usize, bound: i64) -> RatMatrix {
    loop {
        let m = RatMatrix::from_fn(n, n, |_, _| rat(rng.int_in(-bound, bound)));
        if !m.det().is_zero() {
            return m;
        }
    }
}

/// Krull dimension of `R/I` from the initial ideal: the largest set of
/// variables not containing the support of any leading monomial.
fn combinatorial_dimension(lms: &[Monomial], nvars: usize) -> usize {
    let mut best = 0;
    for subset in 0u32..(1 << nvars) {
        let contains_support = |m: &Monomial| {
            (0..nvars).all(|v| m.exp(v) == 0 || subset & (1 << v) != 0)
        };
        if lms.iter().any(|m| contains_support(m)) {
            continue;
        }
        best = best.max(subset.count_ones() as usize);
    }
    best
}

/// Decides membership on the Hessian discriminant by analyzing the scheme
/// cut out by the rank-2 pencil ideal.
///
/// Pipeline: seeded random invertible change of t-coordinates; check that
/// the hyperplane `t3 = 0` misses the scheme (every remaining variable has a
/// power lying in the ideal plus `t3`); dehomogenize `t3 = 1`; quotient
/// degree, multiplicity profile and radicality of the affine ideal; verdict
/// `on HD = not (zero-dimensional of degree 10 and radical)`. When every
/// retry keeps hitting the hyperplane the scheme is positive-dimensional,
/// which is certified exactly through the initial-ideal dimension.
pub fn intersection_analysis(f: &Cubic, opts: &AnalysisOptions) -> Result<IntersectionReport> {
    let ideal = rank2_pencil_ideal(f)?;
    let mut rng = XorShift64Star::new(opts.seed);

    let mut coordinate_retries = 0u32;
    let mut chart: Option<(RatMatrix, Ideal)> = None;
    for attempt in 0..=opts.retry_limit {
        let change = if attempt == 0 {
            RatMatrix::identity(4)
        } else {
            random_invertible_matrix(&mut rng, 4, 5)
        };
        let moved: Vec<MultiPoly> = ideal
            .generators()
            .iter()
            .map(|g| g.linear_substitute(&change))
            .collect::<Result<_>>()?;
        // restrict to the hyperplane t3 = 0 and demand the cone there is
        // only the origin: every variable has a pure power among the
        // leading monomials, equivalently some power of each t_i has
        // normal form 0 modulo ideal + <t3>
        let at_infinity: Vec<MultiPoly> = moved
            .iter()
            .map(|g| g.substitute_value(3, &Rat::zero(), Ring::t3()))
            .collect();
        let gb_inf = buchberger(&Ideal::new(Ring::t3(), at_infinity), MonomialOrder::DegRevLex);
        let lms = gb_inf.leading_monomials();
        let only_origin = (0..3).all(|v| {
            lms.iter()
                .any(|m| m.is_one() || m.pure_power_var() == Some(v))
        });
        if only_origin {
            let affine: Vec<MultiPoly> = moved
                .iter()
                .map(|g| g.substitute_value(3, &Rat::one(), Ring::t3()))
                .collect();
            chart = Some((change, Ideal::new(Ring::t3(), affine)));
            break;
        }
        coordinate_retries += 1;
    }

    let Some((change, affine_ideal)) = chart else {
        // every seeded chart met the scheme at infinity; certify that the
        // scheme really is positive-dimensional via the initial ideal
        let gb = buchberger(&ideal, MonomialOrder::DegRevLex);
        let cone_dim = combinatorial_dimension(&gb.leading_monomials(), 4);
        if cone_dim < 2 {
            return Err(Error::Internal(format!(
                "chart retries exhausted but cone dimension is {cone_dim}"
            )));
        }
        return Ok(IntersectionReport {
            dimension_class: DimensionClass::PositiveDimensional,
            degree: None,
            profile: None,
            radical: None,
            on_hessian_discriminant: true,
            rational_points: RationalPointsOutcome::NotComputed,
            seeds: SeedRecord {
                seed: opts.seed,
                retry_limit: opts.retry_limit,
                coordinate_retries,
                separation_retries: 0,
            },
        });
    };

    let gb_aff = buchberger(&affine_ideal, MonomialOrder::DegRevLex);
    let analysis = analyze_zero_dim(&gb_aff, &mut rng, opts.retry_limit)?;

    if analysis.degree == 0 {
        // cannot happen for a proper pencil: a 3-plane meets the degree-10
        // variety; reported faithfully anyway
        return Ok(IntersectionReport {
            dimension_class: DimensionClass::Empty,
            degree: Some(0),
            profile: None,
            radical: None,
            on_hessian_discriminant: true,
            rational_points: RationalPointsOutcome::NotComputed,
            seeds: SeedRecord {
                seed: opts.seed,
                retry_limit: opts.retry_limit,
                coordinate_retries,
                separation_retries: 0,
            },
        });
    }

    let on_hd = !(analysis.degree == 10 && analysis.radical);
    let rational_points = if opts.rational_points {
        let slices = hessian_slices(f)?;
        extract_rational_points(&slices, &change, &affine_ideal, &analysis)?
    } else {
        RationalPointsOutcome::NotComputed
    };

    Ok(IntersectionReport {
        dimension_class: DimensionClass::ZeroDimensional,
        degree: Some(analysis.degree),
        profile: Some(analysis.profile.clone()),
        radical: Some(analysis.radical),
        on_hessian_discriminant: on_hd,
        rational_points,
        seeds: SeedRecord {
            seed: opts.seed,
            retry_limit: opts.retry_limit,
            coordinate_retries,
            separation_retries: analysis.separation_retries,
        },
    })
}

/// Candidate grid from per-variable eliminant roots, filtered by exact
/// membership, re-embedded as rank-2 symmetric matrices and projectively
/// normalized.
fn extract_rational_points(
    slices: &SymSlices,
    change: &RatMatrix,
    affine_ideal: &Ideal,
    analysis: &crate::groebner::ZeroDimAnalysis,
) -> Result<RationalPointsOutcome> {
    let roots: Vec<Vec<Rat>> = analysis
        .eliminants
        .iter()
        .map(|g| g.rational_roots())
        .collect::<Result<_>>()?;
    let mut found: Vec<RatMatrix> = Vec::new();
    for r0 in &roots[0] {
        for r1 in &roots[1] {
            for r2 in &roots[2] {
                let pt = [r0.clone(), r1.clone(), r2.clone()];
                if !affine_ideal
                    .generators()
                    .iter()
                    .all(|g| g.eval(&pt).is_zero())
                {
                    continue;
                }
                // back to original coordinates: t = change * (r, 1)
                let t = change.mul_vec(&[
                    pt[0].clone(),
                    pt[1].clone(),
                    pt[2].clone(),
                    Rat::one(),
                ]);
                let q = slices.pencil_at(&t);
                if q.rank() != 2 {
                    return Err(Error::Internal(
                        "pencil point does not have rank 2".into(),
                    ));
                }
                found.push(q.projective_normalized());
            }
        }
    }
    found.sort_by_key(|m| m.to_string());
    found.dedup();
    if found.len() == analysis.point_count {
        Ok(RationalPointsOutcome::Complete(found))
    } else {
        Ok(RationalPointsOutcome::Incomplete {
            found,
            expected: analysis.point_count,
        })
    }
}

/// Spec-shaped convenience: all rational points of the rank-2 locus, or
/// `IncompleteRationalPoints` when irrational points remain.
pub fn rational_points(f: &Cubic, seed: u64) -> Result<Vec<RatMatrix>> {
    let report = intersection_analysis(f, &AnalysisOptions::with_points(seed))?;
    match report.rational_points {
        RationalPointsOutcome::Complete(pts) => Ok(pts),
        RationalPointsOutcome::Incomplete { found, expected } => {
            Err(Error::IncompleteRationalPoints {
                found: found.len(),
                expected,
            })
        }
        RationalPointsOutcome::NotComputed => Err(Error::PositiveDimensional),
    }
}

// ---------------------------------------------------------------------------
// normal forms
// ---------------------------------------------------------------------------

/// Parameters for the classical normal forms of quaternary cubics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormalFormParams {
    /// `c0 x0^3 + c1 x1^3 + c2 x2^3 + c3 x3^3 + c4 (-x0-x1-x2-x3)^3`.
    /// Zero values are allowed (degenerate regime) but at least one
    /// coefficient must be nonzero.
    Pentahedral([Rat; 5]),
    /// `(x0^3 + x1^3 + x2^3) - x3^2 (3 l0 x0 + 3 l1 x1 + 3 l2 x2 - x3)`,
    /// all `l_i` nonzero.
    Rank6([Rat; 3]),
    /// `m0 x0^3 + x1^3 + x2^3 - 3 x0 (m1 x0 x1 + x0 x2 + m2 x3^2)`,
    /// all `m_i` nonzero.
    AltRank6([Rat; 3]),
    /// `x3 (x1^2 - x0 x2) + x1 (x0 - (1+r0) x1 + r0 x2)(x0 - (r1+r2) x1 + r1 r2 x2)`,
    /// `r_i` outside {0, 1} and pairwise different.
    SingularGeneric([Rat; 3]),
}

pub fn make_normal_form(p: &NormalFormParams) -> Result<Cubic> {
    let ring = Ring::x4();
    let x = |i: usize| MultiPoly::var(ring, i);
    let poly = match p {
        NormalFormParams::Pentahedral(c) => {
            if c.iter().all(|ci| ci.is_zero()) {
                return Err(Error::InvalidParams(
                    "pentahedral coefficients all zero".into(),
                ));
            }
            let sum_neg = x(0).add(&x(1)).add(&x(2)).add(&x(3)).neg();
            let mut f = sum_neg.pow(3).scale(&c[4]);
            for i in 0..4 {
                f = f.add(&x(i).pow(3).scale(&c[i]));
            }
            f
        }
        NormalFormParams::Rank6(l) => {
            if l.iter().any(|li| li.is_zero()) {
                return Err(Error::InvalidParams("rank-6 parameters must be nonzero".into()));
            }
            let mut bracket = x(3).neg();
            for i in 0..3 {
                bracket = bracket.add(&x(i).scale(&(rat(3) * &l[i])));
            }
            x(0).pow(3)
                .add(&x(1).pow(3))
                .add(&x(2).pow(3))
                .sub(&x(3).pow(2).mul(&bracket))
        }
        NormalFormParams::AltRank6(m) => {
            if m.iter().any(|mi| mi.is_zero()) {
                return Err(Error::InvalidParams(
                    "alternative rank-6 parameters must be nonzero".into(),
                ));
            }
            let inner = x(0)
                .mul(&x(1))
                .scale(&m[1])
                .add(&x(0).mul(&x(2)))
                .add(&x(3).pow(2).scale(&m[2]));
            x(0).pow(3)
                .scale(&m[0])
                .add(&x(1).pow(3))
                .add(&x(2).pow(3))
                .sub(&x(0).mul(&inner).scale(&rat(3)))
        }
        NormalFormParams::SingularGeneric(r) => {
            let [r0, r1, r2] = r;
            for v in r {
                if v.is_zero() || v.is_one() {
                    return Err(Error::InvalidParams(
                        "singular parameters must avoid 0 and 1".into(),
                    ));
                }
            }
            if r0 == r1 || r0 == r2 || r1 == r2 {
                return Err(Error::InvalidParams(
                    "singular parameters must be pairwise different".into(),
                ));
            }
            let quad = x(1).pow(2).sub(&x(0).mul(&x(2)));
            let lin1 = x(0)
                .sub(&x(1).scale(&(Rat::one() + r0)))
                .add(&x(2).scale(r0));
            let lin2 = x(0)
                .sub(&x(1).scale(&(r1 + r2)))
                .add(&x(2).scale(&(r1 * r2)));
            x(3).mul(&quad).add(&x(1).mul(&lin1).mul(&lin2))
        }
    };
    Cubic::from_poly(&poly)
}

pub fn cayley_cubic() -> Cubic {
    let ring = Ring::x4();
    let x = |i: usize| MultiPoly::var(ring, i);
    let f = x(0)
        .mul(&x(1))
        .mul(&x(2))
        .add(&x(0).mul(&x(1)).mul(&x(3)))
        .add(&x(0).mul(&x(2)).mul(&x(3)))
        .add(&x(1).mul(&x(2)).mul(&x(3)));
    Cubic::from_poly(&f).expect("cayley cubic is a cubic")
}

pub fn fermat_cubic() -> Cubic {
    let ring = Ring::x4();
    let f = (0..4).fold(MultiPoly::zero(ring), |acc, i| {
        acc.add(&MultiPoly::var(ring, i).pow(3))
    });
    Cubic::from_poly(&f).expect("fermat cubic is a cubic")
}

/// Degree of the Hurwitz form of a variety of degree `p >= 2` and sectional
/// genus `g >= 0`: `2p + 2g - 2`.
pub fn hurwitz_degree(p: i64, g: i64) -> Result<i64> {
    if p < 2 || g < 0 {
        return Err(Error::InvalidParams(format!(
            "need degree >= 2 and genus >= 0, got ({p}, {g})"
        )));
    }
    Ok(2 * p + 2 * g - 2)
}

/// Symmetric matrix of the quadric `L * M` for linear forms with the given
/// coefficient vectors.
pub fn symmetric_product_quadric(l: &[Rat; 4], m: &[Rat; 4]) -> RatMatrix {
    RatMatrix::from_fn(4, 4, |i, j| (&l[i] * &m[j] + &l[j] * &m[i]) / rat(2))
}
