//! Two-dimensional integer lattices.
//!
//! The lattice attached to `GB(1 + x, 1 + x^α, n)` is the kernel of
//! `(x, y) ↦ x + α·y mod n`, with basis `(n, 0), (−α, 1)`. All norms are
//! exact integers (squared Euclidean, L1); floating point only appears in
//! [`ShortestVector::length`].

use serde::{Deserialize, Serialize};

use crate::arithmetic::{isqrt_ceil, isqrt_floor};
use crate::error::{Error, Result};

pub type Vector2 = [i64; 2];

pub fn norm_sq(v: Vector2) -> u64 {
    (v[0] as i128 * v[0] as i128 + v[1] as i128 * v[1] as i128) as u64
}

pub fn norm_l1(v: Vector2) -> u64 {
    v[0].unsigned_abs() + v[1].unsigned_abs()
}

fn dot(a: Vector2, b: Vector2) -> i128 {
    a[0] as i128 * b[0] as i128 + a[1] as i128 * b[1] as i128
}

/// Nearest integer to `num / den` for `den > 0`.
fn div_round(num: i128, den: i128) -> i128 {
    (2 * num + den).div_euclid(2 * den)
}

/// Ordering used for deterministic witnesses: L1 norm, then `x`, then `y`.
fn witness_key(v: &Vector2) -> (u64, i64, i64) {
    (norm_l1(*v), v[0], v[1])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Lattice2D {
    pub b1: Vector2,
    pub b2: Vector2,
}

impl Lattice2D {
    pub fn new(b1: Vector2, b2: Vector2) -> Result<Self> {
        let l = Self { b1, b2 };
        if l.signed_det() == 0 {
            return Err(Error::InvalidInput(format!(
                "degenerate lattice basis {b1:?}, {b2:?}"
            )));
        }
        Ok(l)
    }

    /// `Z(n, 0) ⊕ Z(−α, 1)`.
    pub fn gb(alpha: usize, n: usize) -> Result<Self> {
        if alpha == 0 || alpha >= n {
            return Err(Error::InvalidInput(format!(
                "alpha = {alpha} must lie in [1, n - 1] for n = {n}"
            )));
        }
        Self::new([n as i64, 0], [-(alpha as i64), 1])
    }

    fn signed_det(&self) -> i128 {
        self.b1[0] as i128 * self.b2[1] as i128 - self.b1[1] as i128 * self.b2[0] as i128
    }

    /// Index of the lattice in `Z²`.
    pub fn det(&self) -> u64 {
        self.signed_det().unsigned_abs() as u64
    }

    /// Membership by Cramer's rule: `t` is in the lattice iff both
    /// coordinates `adj(B)·t / det(B)` are integers.
    pub fn contains(&self, t: Vector2) -> bool {
        let det = self.signed_det();
        let (x, y) = (t[0] as i128, t[1] as i128);
        let c1 = self.b2[1] as i128 * x - self.b2[0] as i128 * y;
        let c2 = -(self.b1[1] as i128) * x + self.b1[0] as i128 * y;
        c1 % det == 0 && c2 % det == 0
    }

    /// Lagrange–Gauss reduction. The result satisfies `‖b1‖ ≤ ‖b2‖` and
    /// `|⟨b1, b2⟩| ≤ ‖b1‖²/2`, so `b1` is a shortest nonzero vector.
    pub fn gauss_reduce(&self) -> Self {
        let (mut b1, mut b2) = (self.b1, self.b2);
        if norm_sq(b1) > norm_sq(b2) {
            std::mem::swap(&mut b1, &mut b2);
        }
        loop {
            let mu = div_round(dot(b1, b2), norm_sq(b1) as i128);
            b2 = [
                (b2[0] as i128 - mu * b1[0] as i128) as i64,
                (b2[1] as i128 - mu * b1[1] as i128) as i64,
            ];
            if norm_sq(b2) >= norm_sq(b1) {
                break;
            }
            std::mem::swap(&mut b1, &mut b2);
        }
        Self { b1, b2 }
    }

    pub fn lambda_euclid(&self) -> ShortestVector {
        let reduced = self.gauss_reduce();
        ShortestVector {
            vector: reduced.b1,
            norm_sq: norm_sq(reduced.b1),
        }
    }

    /// All nonzero lattice vectors with L1 norm at most `radius`, ordered by
    /// `(L1, x, y)`. Both members of each `±` pair are listed.
    pub fn enumerate_short(&self, radius: u64) -> Vec<Vector2> {
        if radius == 0 {
            return Vec::new();
        }
        let reduced = self.gauss_reduce();
        let det = reduced.det() as u128;
        // Any v = c1·b1 + c2·b2 with ‖v‖₂ ≤ ‖v‖₁ ≤ radius has
        // |c1| ≤ radius·‖b2‖/det and |c2| ≤ radius·‖b1‖/det.
        let bound = |other: Vector2| -> i64 {
            let num = radius as u128 * radius as u128 * norm_sq(other) as u128;
            isqrt_ceil(num.div_ceil(det * det) as u64) as i64
        };
        let (bound1, bound2) = (bound(reduced.b2), bound(reduced.b1));
        let mut out = Vec::new();
        for c1 in -bound1..=bound1 {
            for c2 in -bound2..=bound2 {
                if c1 == 0 && c2 == 0 {
                    continue;
                }
                let v = [
                    c1 * reduced.b1[0] + c2 * reduced.b2[0],
                    c1 * reduced.b1[1] + c2 * reduced.b2[1],
                ];
                if norm_l1(v) <= radius {
                    out.push(v);
                }
            }
        }
        out.sort_by_key(witness_key);
        out
    }

    /// Minimum L1 norm of a nonzero lattice vector with its witness. The
    /// search radius is the L1 norm of the reduced `b1`, which is itself in
    /// the ball.
    pub fn min_l1(&self) -> MinL1 {
        let radius = norm_l1(self.gauss_reduce().b1);
        let witness = self.enumerate_short(radius)[0];
        MinL1 {
            norm: norm_l1(witness),
            witness,
        }
    }

    pub fn summary(&self) -> LatticeSummary {
        let reduced = self.gauss_reduce();
        let min = self.min_l1();
        LatticeSummary {
            reduced_basis: [reduced.b1, reduced.b2],
            lambda_sq: norm_sq(reduced.b1),
            min_l1: min.norm,
            min_l1_witness: min.witness,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShortestVector {
    pub vector: Vector2,
    pub norm_sq: u64,
}

impl ShortestVector {
    /// `λ` as a float, for display only.
    pub fn length(&self) -> f64 {
        (self.norm_sq as f64).sqrt()
    }

    /// `⌈λ⌉`, computed exactly.
    pub fn length_ceil(&self) -> u64 {
        isqrt_ceil(self.norm_sq)
    }

    pub fn length_floor(&self) -> u64 {
        isqrt_floor(self.norm_sq)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinL1 {
    pub norm: u64,
    pub witness: Vector2,
}

/// The lattice quantities recorded in catalogs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeSummary {
    pub reduced_basis: [Vector2; 2],
    pub lambda_sq: u64,
    pub min_l1: u64,
    pub min_l1_witness: Vector2,
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Scans the box `|x|, |y| ≤ bound` with the defining congruence.
    fn scan(alpha: i64, n: i64, bound: i64) -> Vec<Vector2> {
        let mut out = Vec::new();
        for x in -bound..=bound {
            for y in -bound..=bound {
                if (x, y) != (0, 0) && (x + alpha * y).rem_euclid(n) == 0 {
                    out.push([x, y]);
                }
            }
        }
        out
    }

    fn scan_lambda_sq(alpha: i64, n: i64) -> u64 {
        scan(alpha, n, n).into_iter().map(norm_sq).min().unwrap()
    }

    fn scan_min_l1(alpha: i64, n: i64) -> u64 {
        scan(alpha, n, n).into_iter().map(norm_l1).min().unwrap()
    }

    #[test]
    fn gb_lattice_examples() {
        let l = Lattice2D::gb(2, 5).unwrap();
        assert_eq!((l.b1, l.b2, l.det()), ([5, 0], [-2, 1], 5));
        let kitaev = Lattice2D::gb(4, 16).unwrap();
        assert!(kitaev.contains([0, 4]));
        assert!(Lattice2D::gb(1, 2).unwrap().contains([1, 1]));
        assert!(Lattice2D::gb(0, 5).is_err());
        assert!(Lattice2D::gb(5, 5).is_err());
        assert!(Lattice2D::new([1, 2], [2, 4]).is_err());
    }

    #[test]
    fn contains_examples() {
        let l = Lattice2D::gb(2, 5).unwrap();
        assert!(l.contains([0, 0]));
        assert!(l.contains([1, 2]));
        assert!(!l.contains([1, 1]));
    }

    #[test]
    fn reduce_examples() {
        let r = Lattice2D::gb(2, 5).unwrap().gauss_reduce();
        assert_eq!(scan_lambda_sq(2, 5), 5);
        assert_eq!(norm_sq(r.b1), 5);
        let square = Lattice2D::new([4, 0], [0, 4]).unwrap().gauss_reduce();
        assert_eq!((norm_sq(square.b1), norm_sq(square.b2)), (16, 16));
        let kitaev = Lattice2D::gb(3, 9).unwrap();
        assert_eq!(scan_lambda_sq(3, 9), 9);
        assert_eq!(kitaev.lambda_euclid().norm_sq, 9);
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(Lattice2D::gb(2, 5).unwrap().lambda_euclid().norm_sq, 5);
        assert_eq!(scan_lambda_sq(5, 13), 13);
        assert_eq!(Lattice2D::gb(5, 13).unwrap().lambda_euclid().norm_sq, 13);
        for m in 2..=9usize {
            let s = Lattice2D::gb(m, m * m).unwrap().lambda_euclid();
            assert_eq!(s.norm_sq, (m * m) as u64);
            assert_eq!(s.length_ceil(), m as u64);
        }
    }

    #[test]
    fn min_l1_examples() {
        let m = Lattice2D::gb(2, 5).unwrap().min_l1();
        assert_eq!(m.norm, 3);
        // Ties among (±1, ±2), (±2, ∓1) resolve to the smallest x, then y.
        assert_eq!(m.witness, [-2, 1]);

        assert_eq!(scan_min_l1(5, 13), 5);
        let m = Lattice2D::gb(5, 13).unwrap().min_l1();
        assert_eq!((m.norm, m.witness), (5, [-3, -2]));

        assert_eq!(scan_min_l1(31, 74), 12);
        let m = Lattice2D::gb(31, 74).unwrap().min_l1();
        assert_eq!((m.norm, m.witness), (12, [-7, 5]));
    }

    #[test]
    fn enumerate_short_examples() {
        let l = Lattice2D::gb(2, 5).unwrap();
        let expected: Vec<Vector2> = {
            let mut v: Vec<_> = scan(2, 5, 3)
                .into_iter()
                .filter(|&t| norm_l1(t) <= 3)
                .collect();
            v.sort_by_key(witness_key);
            v
        };
        assert_eq!(l.enumerate_short(3), expected);
        assert!(l.enumerate_short(3).contains(&[1, 2]));
        assert!(l.enumerate_short(3).contains(&[-1, -2]));

        let l = Lattice2D::gb(1, 2).unwrap();
        let short = l.enumerate_short(2);
        for v in [
            [1, 1],
            [-1, -1],
            [2, 0],
            [-2, 0],
            [0, 2],
            [0, -2],
            [1, -1],
            [-1, 1],
        ] {
            assert!(short.contains(&v), "{v:?}");
        }
        assert_eq!(short.len(), 8);

        assert!(Lattice2D::gb(2, 5).unwrap().enumerate_short(1).is_empty());
    }

    fn gb_params() -> impl Strategy<Value = (usize, usize)> {
        (2usize..400).prop_flat_map(|n| (1..n, Just(n)))
    }

    proptest! {
        #[test]
        fn reduction_preserves_lattice((alpha, n) in gb_params()) {
            let l = Lattice2D::gb(alpha, n).unwrap();
            let r = l.gauss_reduce();
            prop_assert_eq!(r.det(), l.det());
            prop_assert!(norm_sq(r.b1) <= norm_sq(r.b2));
            prop_assert!(2 * dot(r.b1, r.b2).abs() <= norm_sq(r.b1) as i128);
            for x in -12i64..=12 {
                for y in -12i64..=12 {
                    prop_assert_eq!(l.contains([x, y]), r.contains([x, y]));
                    prop_assert_eq!(l.contains([x, y]), (x + alpha as i64 * y).rem_euclid(n as i64) == 0);
                }
            }
        }

        #[test]
        fn shortest_vectors_match_scan((alpha, n) in gb_params()) {
            prop_assume!(n <= 150);
            let l = Lattice2D::gb(alpha, n).unwrap();
            prop_assert_eq!(l.lambda_euclid().norm_sq, scan_lambda_sq(alpha as i64, n as i64));
            prop_assert_eq!(l.min_l1().norm, scan_min_l1(alpha as i64, n as i64));
        }

        #[test]
        fn min_l1_dominates_lambda((alpha, n) in gb_params()) {
            let l = Lattice2D::gb(alpha, n).unwrap();
            prop_assert!(l.min_l1().norm >= l.lambda_euclid().length_ceil());
        }

        #[test]
        fn enumerated_vectors_are_members((alpha, n) in gb_params(), radius in 1u64..30) {
            let l = Lattice2D::gb(alpha, n).unwrap();
            let short = l.enumerate_short(radius);
            for &v in &short {
                prop_assert!(l.contains(v));
                prop_assert!(norm_l1(v) <= radius && v != [0, 0]);
            }
            let mut dedup = short.clone();
            dedup.dedup();
            prop_assert_eq!(dedup.len(), short.len());
        }
    }
}
