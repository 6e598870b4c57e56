use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{is_admissible, sqrt_minus_one_all};
use crate::distance::{determine, Budget, DistanceReport};
use crate::error::{Error, Result};
use crate::gbcode::GbSpec;
use crate::gf2poly::BinaryPolynomial;
use crate::lattice::{Lattice2D, LatticeSummary};

/// Environment variable capping the sweep's worker threads.
pub const THREADS_ENV: &str = "GBCODEX_THREADS";

/// `GB(1 + x, 1 + x^m, m²)`, the `[[2m², 2, m]]` toric code.
pub fn kitaev_spec(m: usize) -> Result<GbSpec> {
    if m == 0 {
        return Err(Error::InvalidInput("m must be at least 1".into()));
    }
    let n = m * m;
    GbSpec::new_reduced(
        BinaryPolynomial::binomial(1),
        BinaryPolynomial::binomial(m),
        n,
    )
}

/// `GB(1 + x^(2t²+1), x + x^(2t²), 2t² + 2t + 1)`, the `[[d² + 1, 2, d]]`
/// code with `d = 2t + 1`.
pub fn optimized_kitaev_spec(t: usize) -> Result<GbSpec> {
    if t == 0 {
        return Err(Error::InvalidInput("t must be at least 1".into()));
    }
    let n = 2 * t * t + 2 * t + 1;
    GbSpec::new_reduced(
        BinaryPolynomial::from_exponents([0, 2 * t * t + 1]),
        BinaryPolynomial::from_exponents([1, 2 * t * t]),
        n,
    )
}

pub fn optimized_kitaev_distance(t: usize) -> u64 {
    2 * t as u64 + 1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Kitaev,
    OptimizedKitaev,
    New,
}

impl Provenance {
    pub fn as_str(&self) -> &'static str {
        match self {
            Provenance::Kitaev => "kitaev",
            Provenance::OptimizedKitaev => "optimized-kitaev",
            Provenance::New => "new",
        }
    }
}

/// Which known family a length-`2n`, distance-`d` code matches, if any.
pub fn provenance(n: usize, d: u64) -> Provenance {
    let m = d as usize;
    if m >= 1 && m * m == n {
        return Provenance::Kitaev;
    }
    if d % 2 == 1 && d >= 3 {
        let t = (m - 1) / 2;
        if 2 * t * t + 2 * t + 1 == n {
            return Provenance::OptimizedKitaev;
        }
    }
    Provenance::New
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    /// Largest code length `2n` included.
    pub max_length: usize,
    pub budget: Budget,
    /// Seed for the non-residue search.
    pub seed: u64,
    /// Worker cap; falls back to `GBCODEX_THREADS`, then rayon's default.
    pub threads: Option<usize>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            max_length: 200,
            budget: Budget::default(),
            seed: 0x6762_636f_6465,
            threads: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub n: usize,
    /// Representative root, the smaller of `α` and `n − α` unless the other
    /// gave a strictly better report.
    pub alpha: usize,
    pub mirror_alpha: usize,
    pub length: usize,
    pub k: usize,
    /// Exact distance when known, else the certified upper bound.
    pub d: u64,
    pub report: DistanceReport,
    pub lattice: LatticeSummary,
    pub provenance: Provenance,
}

impl CatalogEntry {
    pub fn parameters(&self) -> (usize, usize, u64) {
        (self.length, self.k, self.d)
    }
}

fn entry(n: usize, alpha: usize, budget: &Budget) -> Result<CatalogEntry> {
    let report = determine(alpha, n, budget)?;
    let code = GbSpec::canonical(alpha, n)?.build()?;
    let d = report.distance();
    Ok(CatalogEntry {
        n,
        alpha,
        mirror_alpha: n - alpha,
        length: 2 * n,
        k: code.dimension(),
        d,
        lattice: Lattice2D::gb(alpha, n)?.summary(),
        provenance: provenance(n, d),
        report,
    })
}

/// Larger distance first, then exact over interval, then smaller `α`.
fn better(a: &CatalogEntry, b: &CatalogEntry) -> bool {
    let key = |e: &CatalogEntry| (e.d, e.report.exact.is_some(), std::cmp::Reverse(e.alpha));
    key(a) > key(b)
}

/// Jobs `(n, α)` with `α ≤ n − α`, one per mirror pair.
fn jobs(config: &SweepConfig) -> Result<Vec<(usize, usize)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut jobs = Vec::new();
    for n in 2..=config.max_length / 2 {
        if !is_admissible(n as u64) {
            continue;
        }
        for alpha in sqrt_minus_one_all(n as u64, &mut rng)? {
            let alpha = alpha as usize;
            if alpha <= n - alpha {
                jobs.push((n, alpha));
            }
        }
    }
    Ok(jobs)
}

fn thread_cap(config: &SweepConfig) -> Option<usize> {
    config.threads.or_else(|| {
        std::env::var(THREADS_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .filter(|&t: &usize| t > 0)
    })
}

/// Best code per admissible `n` with `2n ≤ max_length`, sorted by `(d, length)`.
pub fn sweep_catalog(config: &SweepConfig) -> Result<Vec<CatalogEntry>> {
    let jobs = jobs(config)?;
    let run = || -> Result<Vec<CatalogEntry>> {
        jobs.par_iter()
            .map(|&(n, alpha)| entry(n, alpha, &config.budget))
            .collect()
    };
    let results = match thread_cap(config) {
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::InvalidInput(format!("thread pool: {e}")))?
            .install(run)?,
        None => run()?,
    };

    let mut best: Vec<CatalogEntry> = Vec::new();
    for candidate in results {
        match best.iter_mut().find(|e| e.n == candidate.n) {
            Some(current) if better(&candidate, current) => *current = candidate,
            Some(_) => {}
            None => best.push(candidate),
        }
    }
    best.sort_by_key(|e| (e.d, e.length));
    Ok(best)
}
