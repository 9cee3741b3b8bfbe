use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::rat::Rat;

/// Dense matrix over exact rationals, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
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

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        RatMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let nr = rows.len();
        let nc = if nr == 0 { 0 } else { rows[0].len() };
        assert!(rows.iter().all(|r| r.len() == nc), "ragged rows");
        RatMatrix {
            rows: nr,
            cols: nc,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Integer-literal rows, mainly for tests and fixed tables.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rat::from_int(x)).collect())
                .collect(),
        )
    }

    pub fn from_columns(cols: Vec<Vec<Rat>>) -> Self {
        let nc = cols.len();
        let nr = if nc == 0 { 0 } else { cols[0].len() };
        assert!(cols.iter().all(|c| c.len() == nr), "ragged columns");
        Self::from_fn(nr, nc, |r, c| cols[c][r].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> Vec<Rat> {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn column(&self, c: usize) -> Vec<Rat> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }

    pub fn scale(&self, s: &Rat) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| self.get(r, c) * s)
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c) * &v[c]).sum())
            .collect()
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &RatMatrix) -> Self {
        assert_eq!(self.cols, other.cols, "column count mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        RatMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &RatMatrix) -> Self {
        assert_eq!(self.rows, other.rows, "row count mismatch");
        Self::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        })
    }

    /// In-place reduction to reduced row echelon form.
    /// Returns the pivot column of each pivot row, in order.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pr = 0;
        for pc in 0..self.cols {
            if pr == self.rows {
                break;
            }
            let Some(src) = (pr..self.rows).find(|&r| !self.get(r, pc).is_zero()) else {
                continue;
            };
            if src != pr {
                for c in 0..self.cols {
                    self.data.swap(src * self.cols + c, pr * self.cols + c);
                }
            }
            let inv = self.get(pr, pc).recip();
            for c in pc..self.cols {
                let v = self.get(pr, c) * &inv;
                self.set(pr, c, v);
            }
            for r in 0..self.rows {
                if r != pr && !self.get(r, pc).is_zero() {
                    let f = self.get(r, pc).clone();
                    for c in pc..self.cols {
                        let v = self.get(r, c) - &(&f * self.get(pr, c));
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(pc);
            pr += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Deterministic basis of `{x : self · x = 0}`.
    ///
    /// One vector per free column, ordered by free column index; the free
    /// coordinate is set to 1 and pivot coordinates are read off the
    /// reduced echelon form.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m.get(row, free);
            }
            basis.push(v);
        }
        basis
    }

    /// A particular solution of `self · x = b`, with every free variable
    /// set to zero; `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(b.len(), self.rows, "rhs length mismatch");
        let mut aug = Self::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                b[r].clone()
            }
        });
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(row, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = self.hstack(&Self::identity(n));
        let pivots = aug.rref();
        if pivots.len() != n {
            return Err(Error::SingularMatrix);
        }
        Ok(Self::from_fn(n, n, |r, c| aug.get(r, n + c).clone()))
    }

    pub fn det(&self) -> Rat {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rat::one();
        for p in 0..n {
            let Some(src) = (p..n).find(|&r| !m.get(r, p).is_zero()) else {
                return Rat::zero();
            };
            if src != p {
                for c in 0..n {
                    m.data.swap(src * n + c, p * n + c);
                }
                det = -det;
            }
            let piv = m.get(p, p).clone();
            det *= &piv;
            let inv = piv.recip();
            for r in p + 1..n {
                if m.get(r, p).is_zero() {
                    continue;
                }
                let f = m.get(r, p) * &inv;
                for c in p..n {
                    let v = m.get(r, c) - &(&f * m.get(p, c));
                    m.set(r, c, v);
                }
            }
        }
        det
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Add for &RatMatrix {
    type Output = RatMatrix;
    fn add(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        RatMatrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c) + rhs.get(r, c))
    }
}

impl Sub for &RatMatrix {
    type Output = RatMatrix;
    fn sub(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        RatMatrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c) - rhs.get(r, c))
    }
}

impl Neg for &RatMatrix {
    type Output = RatMatrix;
    fn neg(self) -> RatMatrix {
        RatMatrix::from_fn(self.rows, self.cols, |r, c| -self.get(r, c))
    }
}

impl Mul for &RatMatrix {
    type Output = RatMatrix;
    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        RatMatrix::from_fn(self.rows, rhs.cols, |r, c| {
            (0..self.cols).map(|k| self.get(r, k) * rhs.get(k, c)).sum()
        })
    }
}

/// Rank of the span of a list of coordinate vectors.
pub fn span_rank(vectors: &[Vec<Rat>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    RatMatrix::from_rows(vectors.to_vec()).rank()
}

/// Whether `v` lies in the span of `basis` (all as coordinate vectors).
pub fn in_span(basis: &[Vec<Rat>], v: &[Rat]) -> bool {
    if v.iter().all(Rat::is_zero) {
        return true;
    }
    if basis.is_empty() {
        return false;
    }
    let m = RatMatrix::from_columns(basis.to_vec());
    m.solve(v).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;
    use proptest::prelude::*;

    #[test]
    fn kernel_of_identity_is_empty() {
        assert!(RatMatrix::identity(2).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_of_zero_map_is_full() {
        let b = RatMatrix::zeros(2, 2).kernel_basis();
        assert_eq!(b.len(), 2);
        assert_eq!(b[0], vec![Rat::one(), Rat::zero()]);
        assert_eq!(b[1], vec![Rat::zero(), Rat::one()]);
    }

    #[test]
    fn kernel_of_rank_one_matrix() {
        let m = RatMatrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        let b = m.kernel_basis();
        assert_eq!(b, vec![vec![rat(-2, 1), rat(1, 1)]]);
    }

    #[test]
    fn solve_identity_returns_rhs() {
        let m = RatMatrix::identity(3);
        let b = vec![rat(1, 2), rat(-3, 1), rat(0, 1)];
        assert_eq!(m.solve(&b).unwrap(), b);
    }

    #[test]
    fn solve_underdetermined_sets_free_vars_to_zero() {
        let m = RatMatrix::from_int_rows(&[&[1, 1]]);
        assert_eq!(m.solve(&[rat(2, 1)]).unwrap(), vec![rat(2, 1), rat(0, 1)]);
    }

    #[test]
    fn solve_inconsistent_is_none() {
        let m = RatMatrix::from_int_rows(&[&[1], &[1]]);
        assert!(m.solve(&[rat(1, 1), rat(2, 1)]).is_none());
    }

    #[test]
    fn inverse_round_trip() {
        let m = RatMatrix::from_int_rows(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
        assert!((&inv * &m).is_identity());
        assert!(RatMatrix::zeros(2, 2).inverse().is_err());
    }

    #[test]
    fn det_matches_hand_values() {
        let m = RatMatrix::from_int_rows(&[&[1, 2], &[3, 4]]);
        assert_eq!(m.det(), rat(-2, 1));
        let s = RatMatrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(s.det(), Rat::zero());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        /// rank + nullity = number of columns, and every kernel vector is annihilated.
        #[test]
        fn rank_nullity(entries in proptest::collection::vec(-4i64..=4, 12)) {
            let m = RatMatrix::from_fn(3, 4, |r, c| Rat::from_int(entries[r * 4 + c]));
            let kernel = m.kernel_basis();
            prop_assert_eq!(m.rank() + kernel.len(), 4);
            for v in &kernel {
                prop_assert!(m.mul_vec(v).iter().all(Rat::is_zero));
            }
        }

        /// Any consistent solve reproduces the right-hand side exactly.
        #[test]
        fn solve_is_exact(entries in proptest::collection::vec(-4i64..=4, 12),
                          x in proptest::collection::vec(-3i64..=3, 4)) {
            let m = RatMatrix::from_fn(3, 4, |r, c| Rat::from_int(entries[r * 4 + c]));
            let x: Vec<Rat> = x.into_iter().map(Rat::from_int).collect();
            let b = m.mul_vec(&x);
            let sol = m.solve(&b).expect("constructed system is consistent");
            prop_assert_eq!(m.mul_vec(&sol), b);
        }
    }
}
