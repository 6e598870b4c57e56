//! Certified minimum distance of `GB(1 + x, 1 + x^α, n)`.
//!
//! The lower bound is `⌈λ(L)⌉` for the lattice `L = Z(n, 0) ⊕ Z(−α, 1)`,
//! valid for `n ≥ 6`. The upper bound is the weight of an explicit logical
//! operator, a staircase cycle realizing a short lattice vector. When they
//! meet the distance is exact; otherwise the exhaustive oracle settles small
//! codes and larger ones are reported as an interval.

use serde::{Deserialize, Serialize};

use crate::arithmetic::{gcd, isqrt_ceil, mod_inverse};
use crate::css::{Side, DEFAULT_ORACLE_CAP};
use crate::error::{Error, Result};
use crate::gbcode::GbSpec;
use crate::gf2matrix::RowSpace;
use crate::lattice::{norm_l1, norm_sq, Lattice2D, Vector2};
use crate::torus_graph::{staircase_edges, EdgeVector};

/// Smallest `n` covered by the lattice lower bound.
pub const MIN_LATTICE_BOUND_N: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Largest kernel dimension the exhaustive oracle may sweep.
    pub oracle_cap: usize,
    /// Use the parity-refined lower bound when closing the sandwich.
    pub parity_refinement: bool,
    /// Extra L1 radius beyond the minimum when searching certificates.
    pub certificate_slack: u64,
    /// Run the oracle on both sides whenever it is affordable, recording
    /// `d_X` and `d_Z` even when the sandwich already closed.
    pub verify_with_oracle: bool,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            oracle_cap: DEFAULT_ORACLE_CAP,
            parity_refinement: true,
            certificate_slack: 0,
            verify_with_oracle: true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LowerBound {
    /// `⌈λ⌉`.
    pub value: u64,
    pub lambda_sq: u64,
    /// `n ≥ 6`; below that the value is the lattice quantity, not a proven bound.
    pub hypothesis_met: bool,
}

fn check_alpha(alpha: usize, n: usize) -> Result<()> {
    if n < 2 || alpha == 0 || alpha >= n {
        return Err(Error::InvalidInput(format!(
            "alpha = {alpha} must lie in [1, n - 1] for n = {n}"
        )));
    }
    Ok(())
}

/// `d ≥ ⌈λ(L)⌉` with `λ²` computed exactly.
pub fn lattice_lower_bound(alpha: usize, n: usize) -> Result<LowerBound> {
    check_alpha(alpha, n)?;
    let lambda_sq = Lattice2D::gb(alpha, n)?.lambda_euclid().norm_sq;
    Ok(LowerBound {
        value: isqrt_ceil(lambda_sq),
        lambda_sq,
        hypothesis_met: n >= MIN_LATTICE_BOUND_N,
    })
}

/// Lower bound for `GB(1 + x^u, 1 + x^v, n)` with `gcd(u, n) = 1` and
/// `n > max(6, u, v)`, through `α = v·u⁻¹ mod n`.
pub fn lattice_lower_bound_uv(u: usize, v: usize, n: usize) -> Result<LowerBound> {
    if n <= MIN_LATTICE_BOUND_N.max(u).max(v) {
        return Err(Error::InvalidInput(format!(
            "n = {n} must exceed max(6, u = {u}, v = {v})"
        )));
    }
    if gcd(u as u64, n as u64) != 1 {
        return Err(Error::InvalidInput(format!(
            "u = {u} is not coprime with n = {n}"
        )));
    }
    let inverse = mod_inverse(u as u64, n as u64).expect("u is a unit") as usize;
    let alpha = v * inverse % n;
    lattice_lower_bound(alpha, n)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub weight: usize,
    pub edges: EdgeVector,
    /// Lattice vector the staircase realizes.
    pub displacement: Vector2,
    pub start: usize,
}

/// Lightest logical staircase among lattice vectors with L1 norm at most
/// `min_l1 + slack`, scanned in `(L1, x, y)` order from vertex 0.
pub fn upper_bound_certificate(alpha: usize, n: usize, slack: u64) -> Result<Certificate> {
    check_alpha(alpha, n)?;
    let lattice = Lattice2D::gb(alpha, n)?;
    let code = GbSpec::canonical(alpha, n)?.build()?;
    let stabilizers = RowSpace::new(code.h_z());
    let radius = lattice.min_l1().norm + slack;
    let mut best: Option<Certificate> = None;
    for t in lattice.enumerate_short(radius) {
        let edges = staircase_edges(n, alpha, t, 0)?;
        let weight = edges.weight();
        if best.as_ref().is_some_and(|b| b.weight <= weight) {
            continue;
        }
        if code.h_x().mul_vec(edges.bits())?.is_zero() && !stabilizers.contains(edges.bits()) {
            best = Some(Certificate {
                weight,
                edges,
                displacement: t,
                start: 0,
            });
        }
    }
    best.ok_or(Error::NoCertificate { alpha, n })
}

/// Smallest integer `≥ ‖t‖₂` with the parity of `|t.x| + |t.y|`.
///
/// A cycle lifting to `t` has length `n₁ + n₋₁ + n_α + n₋α`, which has the
/// parity of `t.x + t.y` and is at least `‖t‖₂`.
pub fn parity_bound(t: Vector2) -> u64 {
    let ceil = isqrt_ceil(norm_sq(t));
    if ceil % 2 == norm_l1(t) % 2 {
        ceil
    } else {
        ceil + 1
    }
}

/// `max(⌈λ⌉, min_t parity_bound(t))` over nonzero lattice vectors in the
/// minimal L1 ball. Requires `1 < α < n − 1`.
pub fn parity_refined_lower(alpha: usize, n: usize) -> Result<u64> {
    if !(1 < alpha && alpha + 1 < n) {
        return Err(Error::DegenerateGraph { alpha, n });
    }
    let lattice = Lattice2D::gb(alpha, n)?;
    let lattice_bound = lattice_lower_bound(alpha, n)?.value;
    let refined = lattice
        .enumerate_short(lattice.min_l1().norm)
        .into_iter()
        .map(parity_bound)
        .min()
        .expect("the minimal L1 ball contains its witness");
    Ok(lattice_bound.max(refined))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Certified lower bound equals the certificate weight.
    SandwichClosed,
    /// Exhaustive enumeration of the kernel.
    OracleConfirmed,
    /// Only `lower ≤ d ≤ upper` is known.
    IntervalOnly,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::SandwichClosed => "sandwich-closed",
            Method::OracleConfirmed => "oracle-confirmed",
            Method::IntervalOnly => "interval-only",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LowerBoundSource {
    Lattice,
    ParityRefined,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ZSide {
    /// `d_Z` computed by the oracle and equal to `d_X`.
    OracleVerified,
    /// `d_Z = d_X` taken from the symmetry of GB codes.
    AssumedEqual,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceReport {
    pub n: usize,
    pub alpha: usize,
    /// `⌈λ⌉` from the lattice.
    pub lower_bound: u64,
    pub lambda_sq: u64,
    pub lattice_bound_proven: bool,
    pub parity_refined_lower: Option<u64>,
    pub upper_bound: u64,
    /// Sorted edge indices of the certificate; its weight is `upper_bound`.
    pub certificate: Vec<usize>,
    pub certificate_displacement: Vector2,
    pub exact: Option<u64>,
    pub method: Method,
    pub closed_by: Option<LowerBoundSource>,
    pub d_x_oracle: Option<u64>,
    pub d_z_oracle: Option<u64>,
    pub z_side: ZSide,
}

impl DistanceReport {
    /// Best lower bound the report stands behind.
    pub fn certified_lower(&self) -> u64 {
        if let Some(d) = self.exact {
            return d;
        }
        let lattice = if self.lattice_bound_proven {
            self.lower_bound
        } else {
            0
        };
        lattice.max(self.parity_refined_lower.unwrap_or(0))
    }

    /// Exact distance when known, otherwise the certified upper bound.
    pub fn distance(&self) -> u64 {
        self.exact.unwrap_or(self.upper_bound)
    }

    pub fn certificate_vector(&self) -> Result<EdgeVector> {
        EdgeVector::from_edge_indices(2 * self.n, &self.certificate)
    }
}

/// Assembles bounds, certificate and, when affordable, oracle results.
pub fn determine(alpha: usize, n: usize, budget: &Budget) -> Result<DistanceReport> {
    check_alpha(alpha, n)?;
    let lattice_bound = lattice_lower_bound(alpha, n)?;
    let certificate = upper_bound_certificate(alpha, n, budget.certificate_slack)?;
    let upper = certificate.weight as u64;
    let parity = (budget.parity_refinement && 1 < alpha && alpha + 1 < n)
        .then(|| parity_refined_lower(alpha, n))
        .transpose()?;

    let mut exact = None;
    let mut method = Method::IntervalOnly;
    let mut closed_by = None;
    if lattice_bound.hypothesis_met {
        if lattice_bound.value == upper {
            (exact, method, closed_by) = (
                Some(upper),
                Method::SandwichClosed,
                Some(LowerBoundSource::Lattice),
            );
        } else if parity == Some(upper) {
            (exact, method, closed_by) = (
                Some(upper),
                Method::SandwichClosed,
                Some(LowerBoundSource::ParityRefined),
            );
        }
    }

    let code = GbSpec::canonical(alpha, n)?.build()?;
    let affordable = code.kernel_dimension(Side::X) <= budget.oracle_cap;
    let run_oracle = affordable && (exact.is_none() || budget.verify_with_oracle);
    let (mut d_x_oracle, mut d_z_oracle) = (None, None);
    if run_oracle {
        d_x_oracle = code
            .exhaustive_distance(Side::X, budget.oracle_cap)?
            .finite()
            .map(|d| d as u64);
        if budget.verify_with_oracle && code.kernel_dimension(Side::Z) <= budget.oracle_cap {
            d_z_oracle = code
                .exhaustive_distance(Side::Z, budget.oracle_cap)?
                .finite()
                .map(|d| d as u64);
        }
        // The oracle is authoritative wherever it runs.
        if exact != d_x_oracle {
            (exact, method, closed_by) = (d_x_oracle, Method::OracleConfirmed, None);
        }
    }
    let z_side = match (d_x_oracle, d_z_oracle) {
        (Some(x), Some(z)) if x == z => ZSide::OracleVerified,
        _ => ZSide::AssumedEqual,
    };

    Ok(DistanceReport {
        n,
        alpha,
        lower_bound: lattice_bound.value,
        lambda_sq: lattice_bound.lambda_sq,
        lattice_bound_proven: lattice_bound.hypothesis_met,
        parity_refined_lower: parity,
        upper_bound: upper,
        certificate: certificate.edges.edge_indices(),
        certificate_displacement: certificate.displacement,
        exact,
        method,
        closed_by,
        d_x_oracle,
        d_z_oracle,
        z_side,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::css::Distance;

    fn oracle(alpha: usize, n: usize) -> u64 {
        let code = GbSpec::canonical(alpha, n).unwrap().build().unwrap();
        match code.exhaustive_distance(Side::X, 26).unwrap() {
            Distance::Finite(d) => d as u64,
            Distance::Infinite => panic!("canonical codes have k = 2"),
        }
    }

    #[test]
    fn lattice_bound_examples() {
        let b = lattice_lower_bound(2, 5).unwrap();
        assert_eq!((b.lambda_sq, b.value, b.hypothesis_met), (5, 3, false));
        let b = lattice_lower_bound(5, 13).unwrap();
        assert_eq!((b.lambda_sq, b.value, b.hypothesis_met), (13, 4, true));
        let b = lattice_lower_bound(4, 16).unwrap();
        assert_eq!((b.value, b.hypothesis_met), (4, true));
        assert!(lattice_lower_bound(0, 7).is_err());
        assert!(lattice_lower_bound(7, 7).is_err());
    }

    #[test]
    fn general_pair_bound_examples() {
        for alpha in 1..20 {
            assert_eq!(
                lattice_lower_bound_uv(1, alpha, 20).unwrap(),
                lattice_lower_bound(alpha, 20).unwrap()
            );
        }
        let b = lattice_lower_bound_uv(3, 1, 10).unwrap();
        assert!(Lattice2D::gb(7, 10).unwrap().contains([3, 1]));
        assert_eq!((b.lambda_sq, b.value), (10, 4));
        assert!(lattice_lower_bound_uv(2, 3, 8).is_err());
        assert!(lattice_lower_bound_uv(1, 9, 9).is_err());
    }

    #[test]
    fn certificate_examples() {
        let c = upper_bound_certificate(2, 5, 0).unwrap();
        assert_eq!(c.weight, 3);
        let c = upper_bound_certificate(31, 74, 0).unwrap();
        assert_eq!((c.weight, c.displacement), (12, [-7, 5]));
        let c = upper_bound_certificate(4, 17, 0).unwrap();
        assert_eq!(c.weight, 5);
        let code = GbSpec::canonical(4, 17).unwrap().build().unwrap();
        assert!(code.is_logical_x(c.edges.bits()).unwrap());
        assert_eq!(upper_bound_certificate(1, 2, 0).unwrap().weight, 2);
    }

    #[test]
    fn slack_never_worsens_the_certificate() {
        for (alpha, n) in [(5, 13), (7, 50), (12, 29)] {
            let tight = upper_bound_certificate(alpha, n, 0).unwrap().weight;
            let loose = upper_bound_certificate(alpha, n, 2).unwrap().weight;
            assert!(loose <= tight);
        }
    }

    #[test]
    fn parity_examples() {
        assert_eq!(parity_bound([2, -3]), 5);
        assert_eq!(parity_bound([1, 5]), 6);
        assert_eq!(parity_refined_lower(5, 13).unwrap(), 5);
        assert_eq!(oracle(5, 13), 5);
        assert_eq!(parity_refined_lower(2, 5).unwrap(), 3);
        assert_eq!(oracle(2, 5), 3);
        assert_eq!(parity_refined_lower(3, 9).unwrap(), 3);
        assert_eq!(oracle(3, 9), 3);
        assert!(parity_refined_lower(1, 9).is_err());
    }

    #[test]
    fn determine_examples() {
        let r = determine(2, 5, &Budget::default()).unwrap();
        assert_eq!((r.exact, r.method), (Some(3), Method::OracleConfirmed));
        assert_eq!(r.z_side, ZSide::OracleVerified);

        let r = determine(5, 13, &Budget::default()).unwrap();
        assert_eq!((r.exact, r.method), (Some(5), Method::SandwichClosed));
        assert_eq!(r.closed_by, Some(LowerBoundSource::ParityRefined));
        assert_eq!(r.d_x_oracle, Some(5));

        let r = determine(7, 50, &Budget::default()).unwrap();
        assert_eq!(r.upper_bound, 8);
        assert!(r.exact.is_none() || r.exact == Some(8));
    }

    #[test]
    fn determine_without_refinement_or_oracle() {
        let budget = Budget {
            oracle_cap: 0,
            parity_refinement: false,
            verify_with_oracle: false,
            ..Budget::default()
        };
        let r = determine(5, 13, &budget).unwrap();
        assert_eq!((r.exact, r.method), (None, Method::IntervalOnly));
        assert_eq!((r.lower_bound, r.upper_bound), (4, 5));
        assert_eq!(r.z_side, ZSide::AssumedEqual);
        assert_eq!(r.certified_lower(), 4);
    }

    #[test]
    fn determine_is_deterministic() {
        let budget = Budget::default();
        assert_eq!(
            determine(18, 25, &budget).unwrap(),
            determine(18, 25, &budget).unwrap()
        );
    }

    #[test]
    fn bounds_bracket_the_oracle() {
        for n in 3..=20 {
            for alpha in 1..n {
                let d = oracle(alpha, n);
                let lattice = lattice_lower_bound(alpha, n).unwrap();
                if lattice.hypothesis_met {
                    assert!(lattice.value <= d, "n={n} alpha={alpha}");
                }
                let upper = upper_bound_certificate(alpha, n, 0).unwrap().weight as u64;
                assert!(d <= upper, "n={n} alpha={alpha}");
                if 1 < alpha && alpha + 1 < n {
                    assert!(
                        parity_refined_lower(alpha, n).unwrap() <= d,
                        "n={n} alpha={alpha}"
                    );
                }
            }
        }
    }

    #[test]
    fn certificate_is_tight_on_small_codes() {
        // Not claimed by the report, which keeps exact and interval apart;
        // recorded here as evidence for the open question.
        for n in 6..=22 {
            for alpha in 2..n - 1 {
                let upper = upper_bound_certificate(alpha, n, 0).unwrap().weight as u64;
                assert_eq!(oracle(alpha, n), upper, "n={n} alpha={alpha}");
            }
        }
    }

    #[test]
    fn lemma_bound_for_divisors_of_one_plus_alpha_squared() {
        for n in 6..400usize {
            for alpha in 1..n {
                if (alpha * alpha + 1) % n == 0 {
                    assert!(lattice_lower_bound(alpha, n).unwrap().value >= isqrt_ceil(n as u64));
                }
            }
        }
    }
}
