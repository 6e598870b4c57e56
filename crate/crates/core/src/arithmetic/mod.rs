//! Integer arithmetic: factorisation, square roots of −1 modulo `n`, and
//! the search over admissible lengths.
//!
//! `n` divides `1 + α²` for some `α` exactly when `n = 2^e ∏ pᵢ^εᵢ` with
//! `e ∈ {0, 1}` and every `pᵢ ≡ 1 (mod 4)`; such `n` are called admissible.
//! For those, every nonzero vector of the GB lattice has squared norm
//! divisible by `n`, so `λ ≥ √n`.

mod sweep;

pub use sweep::{
    kitaev_spec, optimized_kitaev_distance, optimized_kitaev_spec, provenance, sweep_catalog,
    CatalogEntry, Provenance, SweepConfig,
};

use rand::Rng;

use crate::error::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    (old_r == 1).then(|| old_s.rem_euclid(m as i128) as u64)
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// `⌊√x⌋` by integer Newton iteration.
pub fn isqrt_floor(x: u64) -> u64 {
    if x < 2 {
        return x;
    }
    let x = x as u128;
    let mut guess = 1u128 << (64 - (x as u64).leading_zeros()).div_ceil(2);
    loop {
        let next = (guess + x / guess) / 2;
        if next >= guess {
            return guess as u64;
        }
        guess = next;
    }
}

/// `⌈√x⌉`.
pub fn isqrt_ceil(x: u64) -> u64 {
    let r = isqrt_floor(x);
    if r * r == x {
        r
    } else {
        r + 1
    }
}

/// Prime factorisation as `(prime, exponent)` pairs with increasing primes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization(pub Vec<(u64, u32)>);

impl Factorization {
    pub fn product(&self) -> u64 {
        self.0.iter().map(|&(p, e)| p.pow(e)).product()
    }

    /// Number of distinct odd primes.
    pub fn odd_prime_count(&self) -> usize {
        self.0.iter().filter(|&&(p, _)| p != 2).count()
    }
}

/// Trial division; intended for `n ≤ 10⁶` or so.
pub fn factorize(mut n: u64) -> Factorization {
    assert!(n >= 1, "factorize needs n >= 1");
    let mut factors = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        factors.push((n, 1));
    }
    Factorization(factors)
}

/// `n = 2^e ∏ pᵢ^εᵢ` with `e ≤ 1` and `pᵢ ≡ 1 (mod 4)`. Includes `n = 1, 2`.
pub fn is_admissible(n: u64) -> bool {
    n >= 1
        && factorize(n)
            .0
            .iter()
            .all(|&(p, e)| if p == 2 { e == 1 } else { p % 4 == 1 })
}

/// Attempts before falling back to a deterministic scan of candidates.
const RANDOM_ATTEMPTS: usize = 64;

/// A root of `r² ≡ −1 (mod p)` for a prime `p ≡ 1 (mod 4)`.
///
/// For a quadratic non-residue `a`, `a^((p−1)/4)` squares to `−1`; random
/// candidates are tried first, then `a = 2, 3, …` in order.
fn sqrt_minus_one_mod_prime<R: Rng + ?Sized>(p: u64, rng: &mut R) -> u64 {
    let quarter = (p - 1) / 4;
    let try_candidate = |a: u64| {
        let r = pow_mod(a, quarter, p);
        (mul_mod(r, r, p) == p - 1).then_some(r)
    };
    (0..RANDOM_ATTEMPTS)
        .find_map(|_| try_candidate(rng.gen_range(2..p)))
        .or_else(|| (2..p).find_map(try_candidate))
        .expect("a prime p = 1 mod 4 has a quadratic non-residue")
}

/// Both residues `r` with `r² ≡ −1 (mod p^eps)`, ascending.
///
/// The root modulo `p` is Hensel-lifted one power at a time with
/// `r ← r − (r² + 1)·(2r)⁻¹`.
pub fn sqrt_minus_one_mod_prime_power<R: Rng + ?Sized>(
    p: u64,
    eps: u32,
    rng: &mut R,
) -> Result<Vec<u64>> {
    if p % 4 != 1 || eps == 0 {
        return Err(Error::NoSquareRootOfMinusOne(p.saturating_pow(eps)));
    }
    let mut r = sqrt_minus_one_mod_prime(p, rng);
    let mut modulus = p;
    for _ in 1..eps {
        modulus *= p;
        let f = (mul_mod(r, r, modulus) + 1) % modulus;
        let inv = mod_inverse(2 * r % modulus, modulus).expect("2r is a unit modulo p^k");
        r = (r + modulus - mul_mod(f, inv, modulus)) % modulus;
    }
    debug_assert_eq!(mul_mod(r, r, modulus), modulus - 1);
    let mut roots = vec![r, modulus - r];
    roots.sort_unstable();
    Ok(roots)
}

/// Every `α ∈ [1, n − 1]` with `α² ≡ −1 (mod n)`, ascending.
///
/// Roots for each prime-power component are combined by the Chinese
/// remainder theorem; a factor 2 contributes the single residue 1. There are
/// `2^s` roots where `s` counts the odd primes, except `n = 1` (none) and
/// `n = 2` (just `1`).
pub fn sqrt_minus_one_all<R: Rng + ?Sized>(n: u64, rng: &mut R) -> Result<Vec<u64>> {
    if !is_admissible(n) {
        return Err(Error::NoSquareRootOfMinusOne(n));
    }
    if n == 1 {
        return Ok(Vec::new());
    }
    let mut modulus = 1u64;
    let mut residues = vec![0u64];
    for (p, e) in factorize(n).0 {
        let (component_modulus, component_roots) = if p == 2 {
            (2, vec![1])
        } else {
            (p.pow(e), sqrt_minus_one_mod_prime_power(p, e, rng)?)
        };
        let inv = mod_inverse(modulus % component_modulus, component_modulus)
            .expect("prime-power components are pairwise coprime");
        let combined = modulus * component_modulus;
        residues = residues
            .iter()
            .flat_map(|&a| {
                component_roots.iter().map(move |&b| {
                    let diff = (b + component_modulus - a % component_modulus) % component_modulus;
                    (a + modulus * mul_mod(diff, inv, component_modulus)) % combined
                })
            })
            .collect();
        modulus = combined;
    }
    residues.sort_unstable();
    Ok(residues)
}
