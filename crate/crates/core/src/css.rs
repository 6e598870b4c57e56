//! CSS codes given by two orthogonal parity-check matrices.

use std::fmt;

use rayon::prelude::*;

use crate::bits::BitVector;
use crate::error::{Error, Result};
use crate::gf2matrix::{BitMatrix, RowSpace};

/// Default bound on the kernel dimension the exhaustive oracle will sweep.
pub const DEFAULT_ORACLE_CAP: usize = 26;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// Logical operators in `ker H_X \ rs(H_Z)`.
    X,
    /// Logical operators in `ker H_Z \ rs(H_X)`.
    Z,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    /// No logical operator exists (`k = 0`).
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("infinite"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CssCode {
    h_x: BitMatrix,
    h_z: BitMatrix,
}

impl CssCode {
    pub fn new(h_x: BitMatrix, h_z: BitMatrix) -> Result<Self> {
        if h_x.cols() != h_z.cols() {
            return Err(Error::ShapeMismatch(format!(
                "H_X has {} columns, H_Z has {}",
                h_x.cols(),
                h_z.cols()
            )));
        }
        if !h_x.mat_mul(&h_z.transpose())?.is_zero() {
            return Err(Error::NotOrthogonal);
        }
        Ok(Self { h_x, h_z })
    }

    pub fn h_x(&self) -> &BitMatrix {
        &self.h_x
    }

    pub fn h_z(&self) -> &BitMatrix {
        &self.h_z
    }

    /// Number of physical qubits.
    pub fn length(&self) -> usize {
        self.h_x.cols()
    }

    /// `k = length − rank H_X − rank H_Z`.
    pub fn dimension(&self) -> usize {
        self.length() - self.h_x.rank() - self.h_z.rank()
    }

    fn matrices(&self, side: Side) -> (&BitMatrix, &BitMatrix) {
        match side {
            Side::X => (&self.h_x, &self.h_z),
            Side::Z => (&self.h_z, &self.h_x),
        }
    }

    pub fn is_logical(&self, side: Side, v: &BitVector) -> Result<bool> {
        let (check, stabilizers) = self.matrices(side);
        Ok(check.mul_vec(v)?.is_zero() && !stabilizers.row_space_contains(v)?)
    }

    /// `H_X·v = 0` and `v ∉ rs(H_Z)`.
    pub fn is_logical_x(&self, v: &BitVector) -> Result<bool> {
        self.is_logical(Side::X, v)
    }

    pub fn is_logical_z(&self, v: &BitVector) -> Result<bool> {
        self.is_logical(Side::Z, v)
    }

    /// Dimension of the kernel the oracle would sweep for `side`.
    pub fn kernel_dimension(&self, side: Side) -> usize {
        let (check, _) = self.matrices(side);
        check.cols() - check.rank()
    }

    /// Basis of the kernel of the check matrix ordered as
    /// `[stabilizer basis | logical representatives]`; returns the basis and
    /// the number of stabilizer vectors at its front.
    fn split_kernel_basis(&self, side: Side) -> (Vec<BitVector>, usize) {
        let (check, stabilizers) = self.matrices(side);
        let mut span = RowSpace::new(stabilizers);
        let mut basis: Vec<BitVector> = span.basis().to_vec();
        let stabilizer_rank = basis.len();
        for v in check.kernel_basis() {
            if span.insert(&v) {
                basis.push(v);
            }
        }
        (basis, stabilizer_rank)
    }

    /// Minimum weight of a logical operator on `side`, by enumerating every
    /// kernel vector.
    ///
    /// The kernel is swept in Gray-code order, so each step XORs a single
    /// basis vector. The basis is split so that a vector is a stabilizer
    /// exactly when its coefficients on the logical representatives vanish,
    /// which removes the membership test from the inner loop. The top
    /// coefficients are fixed per rayon task.
    pub fn exhaustive_distance(&self, side: Side, cap: usize) -> Result<Distance> {
        let dimension = self.kernel_dimension(side);
        if dimension > cap || dimension >= 64 {
            return Err(Error::KernelTooLarge { dimension, cap });
        }
        let (basis, stabilizer_rank) = self.split_kernel_basis(side);
        debug_assert_eq!(basis.len(), dimension);
        if basis.len() == stabilizer_rank {
            return Ok(Distance::Infinite);
        }
        let words: Vec<&[u64]> = basis.iter().map(|v| v.words()).collect();
        let width = self.length().div_ceil(64);
        let fixed_bits = dimension.min(8);
        let free_bits = dimension - fixed_bits;
        let best = (0u64..1 << fixed_bits)
            .into_par_iter()
            .filter_map(|prefix| sweep_chunk(&words, width, stabilizer_rank, free_bits, prefix))
            .min();
        Ok(best.map_or(Distance::Infinite, Distance::Finite))
    }
}

fn sweep_chunk(
    basis: &[&[u64]],
    width: usize,
    stabilizer_rank: usize,
    free_bits: usize,
    prefix: u64,
) -> Option<usize> {
    let mut current = vec![0u64; width];
    let mut mask = prefix << free_bits;
    for j in 0..basis.len() - free_bits {
        if (prefix >> j) & 1 == 1 {
            xor_into(&mut current, basis[free_bits + j]);
        }
    }
    let logical_mask = !0u64 << stabilizer_rank;
    let weight = |v: &[u64]| v.iter().map(|w| w.count_ones() as usize).sum::<usize>();
    let mut best = (mask & logical_mask != 0).then(|| weight(&current));
    for step in 1u64..1 << free_bits {
        let bit = step.trailing_zeros() as usize;
        xor_into(&mut current, basis[bit]);
        mask ^= 1 << bit;
        if mask & logical_mask != 0 {
            let w = weight(&current);
            if best.is_none_or(|b| w < b) {
                best = Some(w);
            }
        }
    }
    best
}

#[inline]
fn xor_into(acc: &mut [u64], v: &[u64]) {
    for (a, b) in acc.iter_mut().zip(v) {
        *a ^= b;
    }
}
