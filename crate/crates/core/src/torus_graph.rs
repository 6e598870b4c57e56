//! The graph whose vertex–edge incidence matrix is `H_X = [A | B]` for
//! `GB(1 + x, 1 + x^α, n)`.
//!
//! Vertices are `Z/nZ`. Edge `h_k` (index `k < n`) joins `k` and `k + 1`;
//! edge `h_{n+k}` joins `k` and `k + α`. An edge subset is a length-`2n`
//! GF(2) vector in that order. Cycles are kernel vectors of `H_X`, faces are
//! rows of `H_Z`, and a logical operator is a cycle that is not a sum of
//! faces.

use serde::{Deserialize, Serialize};

use crate::bits::BitVector;
use crate::css::CssCode;
use crate::error::{Error, Result};
use crate::gbcode::GbSpec;
use crate::gf2matrix::BitMatrix;
use crate::lattice::{Lattice2D, Vector2};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TorusGraph {
    n: usize,
    alpha: usize,
}

/// An edge subset of the torus graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeVector(pub BitVector);

impl EdgeVector {
    pub fn weight(&self) -> usize {
        self.0.weight()
    }

    pub fn bits(&self) -> &BitVector {
        &self.0
    }

    /// Sorted edge indices, the serialized form of certificates.
    pub fn edge_indices(&self) -> Vec<usize> {
        self.0.ones().collect()
    }

    pub fn from_edge_indices(len: usize, indices: &[usize]) -> Result<Self> {
        if let Some(&bad) = indices.iter().find(|&&i| i >= len) {
            return Err(Error::InvalidInput(format!(
                "edge index {bad} outside [0, {len})"
            )));
        }
        Ok(Self(BitVector::from_ones(len, indices.iter().copied())))
    }

    pub fn sum(&self, other: &EdgeVector) -> EdgeVector {
        let mut v = self.0.clone();
        v.xor_assign(&other.0);
        EdgeVector(v)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Step {
    PlusOne,
    MinusOne,
    PlusAlpha,
    MinusAlpha,
}

/// A walk given by its start vertex and step sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Walk {
    pub start: usize,
    pub steps: Vec<Step>,
}

impl Walk {
    pub fn new(start: usize, steps: Vec<Step>) -> Self {
        Self { start, steps }
    }

    /// `|t.x|` unit steps in the sign of `t.x`, then `|t.y|` α-steps in the
    /// sign of `t.y`.
    pub fn staircase(start: usize, t: Vector2) -> Self {
        let x_step = if t[0] >= 0 {
            Step::PlusOne
        } else {
            Step::MinusOne
        };
        let y_step = if t[1] >= 0 {
            Step::PlusAlpha
        } else {
            Step::MinusAlpha
        };
        let steps = std::iter::repeat_n(x_step, t[0].unsigned_abs() as usize)
            .chain(std::iter::repeat_n(y_step, t[1].unsigned_abs() as usize))
            .collect();
        Self { start, steps }
    }

    /// Net displacement in `Z²`: `(n₁ − n₋₁, n_α − n₋α)`.
    pub fn lift(&self) -> Vector2 {
        self.steps.iter().fold([0, 0], |[x, y], step| match step {
            Step::PlusOne => [x + 1, y],
            Step::MinusOne => [x - 1, y],
            Step::PlusAlpha => [x, y + 1],
            Step::MinusAlpha => [x, y - 1],
        })
    }

    /// Vertices visited, starting with `start`. Works for any `α`, including
    /// the degenerate values the graph type refuses.
    pub fn vertices_mod(&self, n: usize, alpha: usize) -> Vec<usize> {
        let mut v = self.start % n;
        let mut out = vec![v];
        for step in &self.steps {
            v = match step {
                Step::PlusOne => (v + 1) % n,
                Step::MinusOne => (v + n - 1) % n,
                Step::PlusAlpha => (v + alpha) % n,
                Step::MinusAlpha => (v + n - alpha % n) % n,
            };
            out.push(v);
        }
        out
    }

    /// Edges traversed an odd number of times, by raw edge index.
    pub fn edge_vector_mod(&self, n: usize, alpha: usize) -> EdgeVector {
        let vertices = self.vertices_mod(n, alpha);
        let edges = self
            .steps
            .iter()
            .zip(&vertices)
            .map(|(step, &v)| match step {
                Step::PlusOne => v,
                Step::MinusOne => (v + n - 1) % n,
                Step::PlusAlpha => n + v,
                Step::MinusAlpha => n + (v + n - alpha % n) % n,
            });
        EdgeVector(BitVector::from_ones(2 * n, edges))
    }
}

/// Staircase edge set realizing displacement `t` from `start`, for any
/// `1 ≤ α < n`. Errors when `t` is not a lattice vector, since the walk
/// would not close.
pub fn staircase_edges(n: usize, alpha: usize, t: Vector2, start: usize) -> Result<EdgeVector> {
    let lattice = Lattice2D::gb(alpha, n)?;
    if !lattice.contains(t) {
        return Err(Error::WalkDoesNotClose { x: t[0], y: t[1] });
    }
    Ok(Walk::staircase(start, t).edge_vector_mod(n, alpha))
}

impl TorusGraph {
    /// Requires `1 < α < n − 1`; for `α ∈ {1, n − 1}` unit and α-edges run
    /// between the same neighbours and the graph picture breaks down.
    pub fn new(n: usize, alpha: usize) -> Result<Self> {
        if !(1 < alpha && alpha + 1 < n) {
            return Err(Error::DegenerateGraph { alpha, n });
        }
        Ok(Self { n, alpha })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn spec(&self) -> GbSpec {
        GbSpec::canonical(self.alpha, self.n).expect("1 < alpha < n - 1")
    }

    pub fn code(&self) -> CssCode {
        self.spec().build().expect("canonical spec builds")
    }

    pub fn lattice(&self) -> Lattice2D {
        Lattice2D::gb(self.alpha, self.n).expect("1 < alpha < n - 1")
    }

    /// Endpoints of edge `h_i`.
    pub fn edge(&self, i: usize) -> (usize, usize) {
        let n = self.n;
        assert!(i < 2 * n, "edge index {i} out of range");
        if i < n {
            (i, (i + 1) % n)
        } else {
            (i - n, (i - n + self.alpha) % n)
        }
    }

    /// The `n × 2n` vertex–edge incidence matrix.
    pub fn incidence_matrix(&self) -> BitMatrix {
        let mut m = BitMatrix::zeros(self.n, 2 * self.n);
        for i in 0..2 * self.n {
            let (u, v) = self.edge(i);
            m.set(u, i, true);
            m.set(v, i, true);
        }
        m
    }

    /// Square `p → p+1 → p+1+α → p+α → p`; row `p` of `H_Z`.
    pub fn face(&self, p: usize) -> EdgeVector {
        let (n, a) = (self.n, self.alpha);
        let p = p % n;
        EdgeVector(BitVector::from_ones(
            2 * n,
            [p, n + (p + 1) % n, (p + a) % n, n + p],
        ))
    }

    /// The four edges at vertex `p`; row `p` of `H_X`.
    pub fn cocycle(&self, p: usize) -> EdgeVector {
        let (n, a) = (self.n, self.alpha);
        let p = p % n;
        EdgeVector(BitVector::from_ones(
            2 * n,
            [p, (p + n - 1) % n, n + p, n + (p + n - a) % n],
        ))
    }

    pub fn walk_vertices(&self, walk: &Walk) -> Vec<usize> {
        walk.vertices_mod(self.n, self.alpha)
    }

    pub fn walk_edges(&self, walk: &Walk) -> EdgeVector {
        walk.edge_vector_mod(self.n, self.alpha)
    }

    pub fn is_closed(&self, walk: &Walk) -> bool {
        let vertices = self.walk_vertices(walk);
        vertices.first() == vertices.last()
    }

    pub fn staircase(&self, t: Vector2, start: usize) -> Result<EdgeVector> {
        staircase_edges(self.n, self.alpha, t, start)
    }

    /// Whether `v` is a GF(2) sum of faces, i.e. lies in `rs(H_Z)`.
    pub fn is_sum_of_faces(&self, v: &EdgeVector) -> Result<bool> {
        self.code().h_z().row_space_contains(&v.0)
    }
}
