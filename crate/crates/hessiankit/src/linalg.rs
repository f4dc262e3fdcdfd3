//! Exact dense rational linear algebra for small matrices.
//!
//! Determinants and minors go through fraction-free Bareiss elimination;
//! characteristic polynomials use the division-free Berkowitz scheme, which
//! is what the multiplication-operator analysis of zero-dimensional ideals
//! relies on.

use std::fmt;

use num::traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rat::Rat;
use crate::unipoly::UniPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_fn<F: FnMut(usize, usize) -> Rat>(rows: usize, cols: usize, mut f: F) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn diag(entries: &[Rat]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = Rat::zero();
            for k in 0..self.cols {
                acc += self.get(i, k) * other.get(k, j);
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for k in 0..self.cols {
                    acc += self.get(i, k) * &v[k];
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * c)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row echelon form: returns (rank, rref, pivot columns).
    pub fn rref(&self) -> (usize, Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).clone().recip();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let f = m.get(i, c).clone();
                    for j in c..m.cols {
                        let v = m.get(i, j) - m.get(r, j) * &f;
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (r, m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().0
    }

    /// Exact kernel basis. Vectors are linearly independent, span the null
    /// space, and are normalized so the first nonzero coordinate is 1;
    /// `rank + kernel.len() == cols`.
    pub fn rref_kernel(&self) -> (usize, Vec<Vec<Rat>>) {
        let (rank, m, pivots) = self.rref();
        let mut kernel = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m.get(row, free).clone();
            }
            let lead = v.iter().find(|c| !c.is_zero()).cloned().expect("nonzero");
            let inv = lead.recip();
            for c in v.iter_mut() {
                *c *= &inv;
            }
            kernel.push(v);
        }
        debug_assert_eq!(rank + kernel.len(), self.cols);
        (rank, kernel)
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NonSquare);
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Rat::one());
        }
        let (_, red, pivots) = aug.rref();
        if pivots.len() < n || pivots[..n].iter().enumerate().any(|(i, &p)| p != i) {
            return Err(Error::SingularMatrix);
        }
        Ok(Self::from_fn(n, n, |i, j| red.get(i, n + j).clone()))
    }

    /// Fraction-free Bareiss determinant.
    pub fn det(&self) -> Rat {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Rat::one();
        }
        let mut m = self.clone();
        let mut sign = 1i32;
        let mut prev = Rat::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m.get(i, k).is_zero()) else {
                    return Rat::zero();
                };
                m.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (m.get(i, j) * m.get(k, k) - m.get(i, k) * m.get(k, j)) / &prev;
                    m.set(i, j, v);
                }
                m.set(i, k, Rat::zero());
            }
            prev = m.get(k, k).clone();
        }
        let d = m.get(n - 1, n - 1).clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }

    /// Exact determinant of the submatrix on the given row and column index
    /// sets (strictly increasing).
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<Rat> {
        if rows.len() != cols.len() {
            return Err(Error::IndexOutOfRange(
                "minor needs equally many rows and columns".into(),
            ));
        }
        if rows.windows(2).any(|w| w[0] >= w[1]) || cols.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::IndexOutOfRange(
                "minor index sets must be strictly increasing".into(),
            ));
        }
        if rows.iter().any(|&i| i >= self.rows) || cols.iter().any(|&j| j >= self.cols) {
            return Err(Error::IndexOutOfRange("minor index out of range".into()));
        }
        let sub = Self::from_fn(rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j]).clone()
        });
        Ok(sub.det())
    }

    /// Monic characteristic polynomial `det(uI - M)` by the Berkowitz
    /// division-free scheme.
    pub fn charpoly(&self) -> Result<UniPoly> {
        if !self.is_square() {
            return Err(Error::NonSquare);
        }
        let n = self.rows;
        if n == 0 {
            return Ok(UniPoly::one());
        }
        // coefficients highest degree first
        let mut v = vec![Rat::one(), -self.get(0, 0).clone()];
        for i in 1..n {
            // principal (i+1)x(i+1) leading submatrix
            let s = i + 1;
            let mut q = vec![Rat::one(), -self.get(i, i).clone()];
            // w starts as the column A[0..i][i]
            let mut w: Vec<Rat> = (0..i).map(|r| self.get(r, i).clone()).collect();
            for _ in 2..=s {
                let mut dot = Rat::zero();
                for c in 0..i {
                    dot += self.get(i, c) * &w[c];
                }
                q.push(-dot);
                // w = B * w with B the i x i leading block
                let mut next = vec![Rat::zero(); i];
                for (r, slot) in next.iter_mut().enumerate() {
                    for c in 0..i {
                        *slot += self.get(r, c) * &w[c];
                    }
                }
                w = next;
            }
            // Toeplitz product: new[r] = sum_c q[r-c] * v[c]
            let mut new_v = vec![Rat::zero(); s + 1];
            for (r, slot) in new_v.iter_mut().enumerate() {
                for (c, vc) in v.iter().enumerate() {
                    if r >= c && r - c < q.len() {
                        *slot += &q[r - c] * vc;
                    }
                }
            }
            v = new_v;
        }
        v.reverse();
        Ok(UniPoly::from_coeffs(v))
    }

    /// Projective normalization: scales so the first nonzero entry in
    /// row-major order equals 1. Zero matrices pass through.
    pub fn projective_normalized(&self) -> Self {
        match self.data.iter().find(|c| !c.is_zero()) {
            Some(lead) => self.scale(&lead.clone().recip()),
            None => self.clone(),
        }
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratq};

    #[test]
    fn kernel_of_identity_and_zero() {
        let (rank, ker) = RatMatrix::identity(4).rref_kernel();
        assert_eq!(rank, 4);
        assert!(ker.is_empty());

        let (rank, ker) = RatMatrix::zeros(4, 4).rref_kernel();
        assert_eq!(rank, 0);
        assert_eq!(ker.len(), 4);
        for (i, v) in ker.iter().enumerate() {
            let mut e = vec![rat(0); 4];
            e[i] = rat(1);
            assert_eq!(*v, e);
        }
    }

    #[test]
    fn kernel_of_rank2_quadric() {
        // diag(1,-1,0,0) i.e. x0^2 - x1^2
        let m = RatMatrix::diag(&[rat(1), rat(-1), rat(0), rat(0)]);
        let (rank, ker) = m.rref_kernel();
        assert_eq!(rank, 2);
        assert_eq!(ker, vec![vec![rat(0), rat(0), rat(1), rat(0)], vec![
            rat(0),
            rat(0),
            rat(0),
            rat(1)
        ]]);
    }

    #[test]
    fn kernel_vectors_satisfy_mv_zero() {
        let m = RatMatrix::from_rows(vec![
            vec![rat(1), rat(2), rat(3), rat(4)],
            vec![rat(2), rat(4), rat(6), rat(8)],
            vec![rat(0), rat(1), rat(1), ratq(1, 2)],
        ]);
        let (rank, ker) = m.rref_kernel();
        assert_eq!(rank + ker.len(), 4);
        for v in &ker {
            assert!(m.mul_vec(v).iter().all(|c| c.is_zero()));
            assert_eq!(v.iter().find(|c| !c.is_zero()).unwrap(), &rat(1));
        }
    }

    #[test]
    fn minors() {
        let m = RatMatrix::from_rows(vec![
            vec![rat(5), rat(1)],
            vec![rat(7), rat(2)],
        ]);
        assert_eq!(m.minor(&[0], &[1]).unwrap(), rat(1));
        assert_eq!(m.minor(&[0, 1], &[0, 1]).unwrap(), rat(3));
        assert!(m.minor(&[1, 1], &[0, 1]).is_err());
        assert!(m.minor(&[0, 1], &[0, 5]).is_err());
    }

    #[test]
    fn bareiss_det_with_fractions() {
        let m = RatMatrix::from_rows(vec![
            vec![ratq(1, 2), rat(2), rat(0)],
            vec![rat(3), ratq(-1, 3), rat(1)],
            vec![rat(0), rat(4), rat(1)],
        ]);
        // cofactor check done by hand: det = 1/2*(-1/3-4) - 2*(3-0) = -13/6 - 6
        assert_eq!(m.det(), ratq(-49, 6));
    }

    #[test]
    fn charpoly_examples() {
        let m = RatMatrix::diag(&[rat(2), rat(-3)]);
        // (u-2)(u+3) = u^2 + u - 6
        assert_eq!(m.charpoly().unwrap(), UniPoly::from_i64(&[-6, 1, 1]));

        let z = RatMatrix::zeros(3, 3);
        assert_eq!(z.charpoly().unwrap(), UniPoly::from_i64(&[0, 0, 0, 1]));

        // companion matrix of u^3 - 2
        let c = RatMatrix::from_rows(vec![
            vec![rat(0), rat(0), rat(2)],
            vec![rat(1), rat(0), rat(0)],
            vec![rat(0), rat(1), rat(0)],
        ]);
        assert_eq!(c.charpoly().unwrap(), UniPoly::from_i64(&[-2, 0, 0, 1]));
        assert!(RatMatrix::zeros(2, 3).charpoly().is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let m = RatMatrix::from_rows(vec![
            vec![rat(1), rat(2), rat(0)],
            vec![rat(0), rat(1), rat(4)],
            vec![rat(1), rat(0), rat(1)],
        ]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.matmul(&inv), RatMatrix::identity(3));
        assert!(RatMatrix::zeros(3, 3).inverse().is_err());
    }
}
