//! Dense GF(2) matrices with word-packed rows.
//!
//! Every elimination routine works on a copy; matrices are never mutated by
//! rank, kernel or row-space queries.

use std::fmt;

use crate::bits::BitVector;
use crate::error::{Error, Result};
use crate::gf2poly::BinaryPolynomial;

#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BitVector>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BitVector::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<BitVector>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch(format!(
                "row of length {} in a matrix with {cols} columns",
                bad.len()
            )));
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data: rows,
        })
    }

    /// Parses rows of `0`/`1` characters. Convenient in tests.
    pub fn from_strs(rows: &[&str]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .map(|r| BitVector::from_bools(&r.bytes().map(|b| b == b'1').collect::<Vec<_>>()))
            .collect();
        Self::from_rows(cols, data)
    }

    /// `Circ(p, n)`: entry `(i, j)` is the coefficient of `x^((i − j) mod n)`,
    /// so the first column is the coefficient vector and column `j` is its
    /// cyclic downward shift by `j`.
    pub fn circulant(p: &BinaryPolynomial, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroModulus);
        }
        if let Some(degree) = p.degree().filter(|&d| d >= n) {
            return Err(Error::PolynomialTooWide { degree, n });
        }
        let exps: Vec<usize> = p.exponents().collect();
        let data = (0..n)
            .map(|i| BitVector::from_ones(n, exps.iter().map(|&e| (i + n - e) % n)))
            .collect();
        Ok(Self {
            rows: n,
            cols: n,
            data,
        })
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.data[i].set(j, value);
    }

    pub fn row(&self, i: usize) -> &BitVector {
        &self.data[i]
    }

    pub fn row_vectors(&self) -> &[BitVector] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BitVector::is_zero)
    }

    /// GF(2) row rank.
    pub fn rank(&self) -> usize {
        RowSpace::new(self).rank()
    }

    /// Basis of the right kernel `{v : m·v = 0}`, one vector per free column
    /// of the reduced row echelon form.
    pub fn kernel_basis(&self) -> Vec<BitVector> {
        let space = RowSpace::new(self);
        let mut is_pivot = vec![false; self.cols];
        for &p in &space.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = BitVector::zeros(self.cols);
                v.set(f, true);
                for (row, &p) in space.rows.iter().zip(&space.pivots) {
                    if row.get(f) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect()
    }

    /// Whether `v` is a GF(2) combination of the rows.
    pub fn row_space_contains(&self, v: &BitVector) -> Result<bool> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok(RowSpace::new(self).contains(v))
    }

    /// `m · v` as a vector with one entry per row.
    pub fn mul_vec(&self, v: &BitVector) -> Result<BitVector> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok(BitVector::from_bools(
            &self.data.iter().map(|r| r.dot(v)).collect::<Vec<_>>(),
        ))
    }

    /// Block concatenation `[a | b]`.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "hstack of {} and {} rows",
                self.rows, other.rows
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.concat(b))
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols + other.cols,
            data,
        })
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for (i, row) in self.data.iter().enumerate() {
            for j in row.ones() {
                t.set(j, i, true);
            }
        }
        t
    }

    pub fn mat_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "product of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc = BitVector::zeros(other.cols);
                for j in row.ones() {
                    acc.xor_assign(&other.data[j]);
                }
                acc
            })
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for row in &self.data {
            for j in 0..self.cols {
                f.write_str(if row.get(j) { "1" } else { "." })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Reduced row echelon basis of a row space, for repeated membership tests.
#[derive(Clone, Debug)]
pub struct RowSpace {
    cols: usize,
    rows: Vec<BitVector>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(m: &BitMatrix) -> Self {
        let mut rows = m.data.clone();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..m.cols {
            let Some(found) = (rank..rows.len()).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(rank, found);
            let pivot_row = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && row.get(col) {
                    row.xor_assign(&pivot_row);
                }
            }
            pivots.push(col);
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rows.truncate(rank);
        Self {
            cols: m.cols,
            rows,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[BitVector] {
        &self.rows
    }

    /// Residue of `v` after clearing every pivot position.
    pub fn reduce(&self, v: &BitVector) -> BitVector {
        assert_eq!(v.len(), self.cols, "vector length does not match row space");
        let mut r = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if r.get(p) {
                r.xor_assign(row);
            }
        }
        r
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the space; returns false if it was already inside.
    pub fn insert(&mut self, v: &BitVector) -> bool {
        let r = self.reduce(v);
        let Some(p) = r.ones().next() else {
            return false;
        };
        for row in &mut self.rows {
            if row.get(p) {
                row.xor_assign(&r);
            }
        }
        self.rows.push(r);
        self.pivots.push(p);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(s: &str) -> BinaryPolynomial {
        s.parse().unwrap()
    }

    /// Independent rank oracle: counts the distinct vectors in the span of
    /// the rows (2^rank of them) by closure.
    fn span_rank_oracle(m: &BitMatrix) -> usize {
        let mut span = std::collections::HashSet::new();
        span.insert(BitVector::zeros(m.cols()));
        for row in m.row_vectors() {
            let next: Vec<_> = span
                .iter()
                .map(|v| {
                    let mut w = v.clone();
                    w.xor_assign(row);
                    w
                })
                .collect();
            span.extend(next);
        }
        span.len().trailing_zeros() as usize
    }

    #[test]
    fn circulant_layout() {
        assert_eq!(
            BitMatrix::circulant(&poly("1"), 3).unwrap(),
            BitMatrix::identity(3)
        );
        let c = BitMatrix::circulant(&poly("x"), 3).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(c.get(i, j), (i + 3 - j) % 3 == 1, "({i},{j})");
            }
        }
        // First column is the coefficient vector.
        let c = BitMatrix::circulant(&poly("1+x^2"), 5).unwrap();
        let col0: Vec<bool> = (0..5).map(|i| c.get(i, 0)).collect();
        assert_eq!(col0, vec![true, false, true, false, false]);
        assert!(matches!(
            BitMatrix::circulant(&poly("x^5"), 5),
            Err(Error::PolynomialTooWide { degree: 5, n: 5 })
        ));
    }

    #[test]
    fn rank_examples() {
        let c = BitMatrix::circulant(&poly("1+x"), 4).unwrap();
        assert_eq!(span_rank_oracle(&c), 3);
        assert_eq!(c.rank(), 3);
        assert_eq!(BitMatrix::identity(5).rank(), 5);
        assert_eq!(BitMatrix::zeros(4, 7).rank(), 0);
        let c6 = BitMatrix::circulant(&poly("1+x"), 6).unwrap();
        assert_eq!(span_rank_oracle(&c6), 5);
        assert_eq!(c6.rank(), 5);
    }

    #[test]
    fn kernel_examples() {
        assert!(BitMatrix::identity(4).kernel_basis().is_empty());
        let k = BitMatrix::zeros(2, 3).kernel_basis();
        assert_eq!(k.len(), 3);
        assert_eq!(BitMatrix::from_rows(3, k).unwrap().rank(), 3);

        let a = BitMatrix::circulant(&poly("1+x"), 5).unwrap();
        let b = BitMatrix::circulant(&poly("1+x^2"), 5).unwrap();
        let hx = a.hstack(&b).unwrap();
        assert_eq!(span_rank_oracle(&hx), 4);
        assert_eq!(hx.kernel_basis().len(), 6);
    }

    #[test]
    fn row_space_examples() {
        let m = BitMatrix::from_strs(&["1100", "0110"]).unwrap();
        assert!(m.row_space_contains(&BitVector::zeros(4)).unwrap());
        assert!(m
            .row_space_contains(&BitVector::from_ones(4, [0, 2]))
            .unwrap());
        assert!(!m.row_space_contains(&BitVector::from_ones(4, [0])).unwrap());
        let id = BitMatrix::identity(6);
        assert!(id
            .row_space_contains(&BitVector::from_ones(6, [1, 4, 5]))
            .unwrap());
        assert!(m.row_space_contains(&BitVector::zeros(3)).is_err());
    }

    #[test]
    fn block_operations() {
        let h = BitMatrix::identity(2)
            .hstack(&BitMatrix::identity(2))
            .unwrap();
        assert_eq!(h, BitMatrix::from_strs(&["1010", "0101"]).unwrap());
        let a = BitMatrix::circulant(&poly("1+x"), 5).unwrap();
        let b = BitMatrix::circulant(&poly("1+x^2"), 5).unwrap();
        assert_eq!(a.mat_mul(&b).unwrap(), b.mat_mul(&a).unwrap());
        assert!(a.hstack(&BitMatrix::identity(3)).is_err());
        assert!(a.mat_mul(&BitMatrix::zeros(3, 3)).is_err());
    }

    #[test]
    fn row_space_insert_tracks_rank() {
        let mut space = RowSpace::new(&BitMatrix::zeros(0, 5));
        assert!(space.insert(&BitVector::from_ones(5, [0, 1])));
        assert!(space.insert(&BitVector::from_ones(5, [1, 2])));
        assert!(!space.insert(&BitVector::from_ones(5, [0, 2])));
        assert_eq!(space.rank(), 2);
        assert!(space.contains(&BitVector::from_ones(5, [0, 2])));
    }

    fn random_matrix() -> impl Strategy<Value = BitMatrix> {
        (1usize..12, 1usize..12).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(any::<bool>(), c), r).prop_map(
                move |rows| {
                    BitMatrix::from_rows(c, rows.iter().map(|b| BitVector::from_bools(b)).collect())
                        .unwrap()
                },
            )
        })
    }

    fn poly_below(n: usize) -> impl Strategy<Value = BinaryPolynomial> {
        proptest::collection::vec(0..n, 0..6).prop_map(BinaryPolynomial::from_exponents)
    }

    proptest! {
        #[test]
        fn rank_is_transpose_invariant(m in random_matrix()) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
            prop_assert_eq!(m.rank(), span_rank_oracle(&m));
            prop_assert!(m.rank() <= m.rows().min(m.cols()));
            prop_assert_eq!(m.transpose().transpose(), m);
        }

        #[test]
        fn kernel_vectors_are_independent_solutions(m in random_matrix()) {
            let k = m.kernel_basis();
            prop_assert_eq!(k.len(), m.cols() - m.rank());
            for v in &k {
                prop_assert!(m.mul_vec(v).unwrap().is_zero());
            }
            prop_assert_eq!(BitMatrix::from_rows(m.cols(), k.clone()).unwrap().rank(), k.len());
        }

        #[test]
        fn circulant_is_a_ring_homomorphism(n in 1usize..30, a in poly_below(30), b in poly_below(30)) {
            let a = a.reduce_mod(n);
            let b = b.reduce_mod(n);
            let ca = BitMatrix::circulant(&a, n).unwrap();
            let cb = BitMatrix::circulant(&b, n).unwrap();
            prop_assert_eq!(ca.mat_mul(&cb).unwrap(), BitMatrix::circulant(&a.mul_mod(&b, n), n).unwrap());
        }

        #[test]
        fn circulant_rank_matches_gcd_degree(n in 1usize..40, a in poly_below(40)) {
            let a = a.reduce_mod(n);
            let g = a.gcd(&BinaryPolynomial::cyclic_modulus(n)).unwrap();
            prop_assert_eq!(BitMatrix::circulant(&a, n).unwrap().rank(), n - g.degree().unwrap());
        }
    }
}
