//! Generalized bicycle codes `GB(A, B, n)` and the equivalences that reduce
//! any weight-two pair to the canonical `GB(1 + x, 1 + x^α, n)`.
//!
//! Two transformations preserve the code parameters:
//!
//! - multiplying `A` and `B` by monomials `xⁱ`, `xʲ` (a permutation of each
//!   half of the qubits), used by [`GbSpec::shift_normalize`];
//! - substituting `x → x^k` with `gcd(k, n) = 1`, used by
//!   [`canonicalize_w2`].
//!
//! Swapping `A` and `B` also gives an equivalent code.

use crate::arithmetic::{gcd, mod_inverse};
use crate::css::CssCode;
use crate::error::{Error, Result};
use crate::gf2matrix::BitMatrix;
use crate::gf2poly::BinaryPolynomial;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GbSpec {
    a: BinaryPolynomial,
    b: BinaryPolynomial,
    n: usize,
}

impl GbSpec {
    pub fn new(a: BinaryPolynomial, b: BinaryPolynomial, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroModulus);
        }
        for p in [&a, &b] {
            if let Some(degree) = p.degree().filter(|&d| d >= n) {
                return Err(Error::PolynomialTooWide { degree, n });
            }
        }
        Ok(Self { a, b, n })
    }

    /// Reduces both generators modulo `xⁿ − 1` before building the spec.
    pub fn new_reduced(a: BinaryPolynomial, b: BinaryPolynomial, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroModulus);
        }
        Self::new(a.reduce_mod(n), b.reduce_mod(n), n)
    }

    pub fn parse(a: &str, b: &str, n: usize) -> Result<Self> {
        Self::new(a.parse()?, b.parse()?, n)
    }

    /// `GB(1 + x, 1 + x^α, n)`, reduced modulo `xⁿ − 1`.
    pub fn canonical(alpha: usize, n: usize) -> Result<Self> {
        Self::new_reduced(
            BinaryPolynomial::binomial(1),
            BinaryPolynomial::binomial(alpha),
            n,
        )
    }

    pub fn a(&self) -> &BinaryPolynomial {
        &self.a
    }

    pub fn b(&self) -> &BinaryPolynomial {
        &self.b
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn length(&self) -> usize {
        2 * self.n
    }

    /// `H_X = [A | B]`, `H_Z = [Bᵀ | Aᵀ]` with `A = Circ(a, n)`, `B = Circ(b, n)`.
    pub fn build(&self) -> Result<CssCode> {
        let a = BitMatrix::circulant(&self.a, self.n)?;
        let b = BitMatrix::circulant(&self.b, self.n)?;
        let h_x = a.hstack(&b)?;
        let h_z = b.transpose().hstack(&a.transpose())?;
        CssCode::new(h_x, h_z)
    }

    /// `k = 2·deg gcd(a, b, xⁿ − 1)`.
    pub fn dimension_formula(&self) -> usize {
        let g = BinaryPolynomial::gcd_with_cyclic(&self.a, &self.b, self.n);
        2 * g.degree().expect("gcd with x^n - 1 is nonzero")
    }

    /// Multiplies each generator by the monomial that moves its lowest
    /// exponent to zero.
    pub fn shift_normalize(&self) -> Result<Self> {
        let shift = |p: &BinaryPolynomial| -> Result<BinaryPolynomial> {
            let low = p.lowest_exponent().ok_or(Error::ZeroGenerator)?;
            Ok(p.shift_mod(self.n - low, self.n))
        };
        Self::new(shift(&self.a)?, shift(&self.b)?, self.n)
    }

    /// Applies `xⁱ·A`, `xʲ·B` modulo `xⁿ − 1`.
    pub fn shifted(&self, i: usize, j: usize) -> Self {
        Self {
            a: self.a.shift_mod(i % self.n, self.n),
            b: self.b.shift_mod(j % self.n, self.n),
            n: self.n,
        }
    }

    /// Applies `x → x^k` to both generators.
    pub fn substituted(&self, k: usize) -> Self {
        Self {
            a: self.a.substitute_power(k, self.n),
            b: self.b.substitute_power(k, self.n),
            n: self.n,
        }
    }

    pub fn swapped(&self) -> Self {
        Self {
            a: self.b.clone(),
            b: self.a.clone(),
            n: self.n,
        }
    }

    /// Reduces a pair of weight-two generators to canonical form. The
    /// generators are shift-normalized to `1 + x^u`, `1 + x^v` first.
    pub fn canonicalize(&self, mirror: bool) -> Result<CanonicalW2> {
        let normalized = self.shift_normalize()?;
        let exponent = |p: &BinaryPolynomial| -> Result<usize> {
            let exps: Vec<usize> = p.exponents().collect();
            match exps.as_slice() {
                [0, e] => Ok(*e),
                _ => Err(Error::NotWeightTwo(p.to_string())),
            }
        };
        let u = exponent(normalized.a())?;
        let v = exponent(normalized.b())?;
        canonicalize_w2(u, v, self.n, mirror)
    }
}

/// Canonical weight-two GB code `GB(1 + x, 1 + x^alpha, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalW2 {
    pub alpha: usize,
    pub n: usize,
    /// Generators were exchanged because only `v` was coprime with `n`.
    pub swapped: bool,
    /// `alpha` was replaced by `n − alpha` to bring it below `n / 2`.
    pub mirrored: bool,
}

impl CanonicalW2 {
    pub fn spec(&self) -> GbSpec {
        GbSpec::canonical(self.alpha, self.n).expect("canonical alpha lies in [1, n - 1]")
    }
}

/// Reduces `GB(1 + x^u, 1 + x^v, n)` to `GB(1 + x, 1 + x^α, n)` with
/// `α = v·u⁻¹ mod n`, substituting `x → x^(u⁻¹)`.
///
/// When `u` is not invertible but `v` is, the generators are swapped first.
/// When neither is, no canonical form is attempted.
///
/// With `mirror`, `α > n/2` is replaced by `n − α`: shifting `1 + x^α` by
/// `x^(n−α)` gives `1 + x^(n−α)`, an equivalent code.
pub fn canonicalize_w2(u: usize, v: usize, n: usize, mirror: bool) -> Result<CanonicalW2> {
    if n < 2 {
        return Err(Error::InvalidInput(format!(
            "canonical weight-two form needs n >= 2, got {n}"
        )));
    }
    let (u, v) = (u % n, v % n);
    for e in [u, v] {
        if e == 0 {
            return Err(Error::NotWeightTwo(format!(
                "1 + x^{e} vanishes modulo x^{n} - 1"
            )));
        }
    }
    let (swapped, (u, v)) = if gcd(u as u64, n as u64) == 1 {
        (false, (u, v))
    } else if gcd(v as u64, n as u64) == 1 {
        (true, (v, u))
    } else {
        return Err(Error::NotReducible { u, v, n });
    };
    let inverse = mod_inverse(u as u64, n as u64).expect("u is a unit");
    let mut alpha = ((v as u128 * inverse as u128) % n as u128) as usize;
    let mirrored = mirror && 2 * alpha > n;
    if mirrored {
        alpha = n - alpha;
    }
    Ok(CanonicalW2 {
        alpha,
        n,
        swapped,
        mirrored,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::css::Side;
    use proptest::prelude::*;

    fn poly(s: &str) -> BinaryPolynomial {
        s.parse().unwrap()
    }

    /// (length, k, exhaustive d_X) with `None` when the oracle cannot run.
    fn parameters(spec: &GbSpec, cap: usize) -> (usize, usize, Option<crate::css::Distance>) {
        let code = spec.build().unwrap();
        (
            code.length(),
            code.dimension(),
            code.exhaustive_distance(Side::X, cap).ok(),
        )
    }

    #[test]
    fn build_examples() {
        let code = GbSpec::parse("1+x", "1+x^2", 5).unwrap().build().unwrap();
        assert_eq!((code.length(), code.dimension()), (10, 2));
        let kitaev = GbSpec::parse("1+x", "1+x^3", 9).unwrap().build().unwrap();
        assert_eq!((kitaev.length(), kitaev.dimension()), (18, 2));
        let full_rank = GbSpec::parse("1", "1", 3).unwrap().build().unwrap();
        assert_eq!(full_rank.dimension(), 0);
        assert!(matches!(
            GbSpec::parse("1+x^5", "1", 5),
            Err(Error::PolynomialTooWide { degree: 5, n: 5 })
        ));
    }

    #[test]
    fn dimension_formula_examples() {
        assert_eq!(
            GbSpec::parse("1+x", "1+x^2", 5)
                .unwrap()
                .dimension_formula(),
            2
        );
        assert_eq!(GbSpec::parse("1", "1", 9).unwrap().dimension_formula(), 0);
        for n in 2..=50 {
            for alpha in 1..n {
                assert_eq!(GbSpec::canonical(alpha, n).unwrap().dimension_formula(), 2);
            }
        }
    }

    #[test]
    fn shift_normalize_examples() {
        let s = GbSpec::parse("x+x^3", "1+x^2", 7)
            .unwrap()
            .shift_normalize()
            .unwrap();
        assert_eq!((s.a(), s.b()), (&poly("1+x^2"), &poly("1+x^2")));
        let s = GbSpec::parse("x^2", "x^5", 9)
            .unwrap()
            .shift_normalize()
            .unwrap();
        assert_eq!((s.a(), s.b()), (&poly("1"), &poly("1")));
        let s = GbSpec::parse("1+x^3", "x+x^2", 5)
            .unwrap()
            .shift_normalize()
            .unwrap();
        assert_eq!((s.a(), s.b()), (&poly("1+x^3"), &poly("1+x")));
        assert!(matches!(
            GbSpec::parse("0", "1", 4).unwrap().shift_normalize(),
            Err(Error::ZeroGenerator)
        ));
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(canonicalize_w2(1, 2, 5, false).unwrap().alpha, 2);
        assert_eq!((3 * 7) % 10, 1);
        let c = canonicalize_w2(3, 1, 10, false).unwrap();
        assert_eq!((c.alpha, c.swapped, c.mirrored), (7, false, false));
        let mirrored = canonicalize_w2(3, 1, 10, true).unwrap();
        assert_eq!((mirrored.alpha, mirrored.mirrored), (3, true));

        let before = GbSpec::parse("1+x^3", "1+x", 10).unwrap();
        let after = GbSpec::canonical(7, 10).unwrap();
        assert_eq!(parameters(&before, 26), parameters(&after, 26));
    }

    #[test]
    fn canonicalize_swaps_or_refuses() {
        let c = canonicalize_w2(2, 3, 8, false).unwrap();
        assert!(c.swapped);
        // 2·3⁻¹ mod 8 = 2·3 = 6.
        assert_eq!(c.alpha, 6);
        assert!(matches!(
            canonicalize_w2(2, 4, 8, false),
            Err(Error::NotReducible { .. })
        ));
        assert!(matches!(
            canonicalize_w2(3, 5, 5, false),
            Err(Error::NotWeightTwo(_))
        ));
    }

    #[test]
    fn canonicalize_from_spec_handles_shifted_generators() {
        let spec = GbSpec::parse("1+x^3", "x+x^2", 5).unwrap();
        let c = spec.canonicalize(false).unwrap();
        assert_eq!((c.alpha, c.n), (2, 5));
        assert!(matches!(
            GbSpec::parse("1+x+x^2", "1+x", 5)
                .unwrap()
                .canonicalize(false),
            Err(Error::NotWeightTwo(_))
        ));
    }

    fn sparse_poly(n: usize) -> impl Strategy<Value = BinaryPolynomial> {
        proptest::collection::vec(0..n, 1..=3).prop_map(BinaryPolynomial::from_exponents)
    }

    fn random_spec() -> impl Strategy<Value = GbSpec> {
        (1usize..=40).prop_flat_map(|n| {
            (sparse_poly(n), sparse_poly(n)).prop_map(move |(a, b)| GbSpec::new(a, b, n).unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn dimension_formula_matches_rank(spec in random_spec()) {
            prop_assert_eq!(spec.dimension_formula(), spec.build().unwrap().dimension());
        }

        #[test]
        fn shift_normalize_preserves_parameters(spec in random_spec()) {
            prop_assume!(!spec.a().is_zero() && !spec.b().is_zero());
            let code = spec.build().unwrap();
            prop_assume!(code.kernel_dimension(Side::X) <= 22);
            prop_assert_eq!(parameters(&spec, 22), parameters(&spec.shift_normalize().unwrap(), 22));
        }

        #[test]
        fn canonical_form_preserves_parameters(n in 3usize..=16, u in 1usize..16, v in 1usize..16) {
            let (u, v) = (u % n, v % n);
            prop_assume!(u != 0 && v != 0 && gcd(u as u64, n as u64) == 1);
            let original = GbSpec::new(BinaryPolynomial::binomial(u), BinaryPolynomial::binomial(v), n).unwrap();
            let canonical = canonicalize_w2(u, v, n, false).unwrap().spec();
            prop_assert_eq!(parameters(&original, 22), parameters(&canonical, 22));
        }

        #[test]
        fn mirror_preserves_parameters(n in 3usize..=18, alpha in 1usize..18) {
            let alpha = alpha % n;
            prop_assume!(alpha != 0);
            prop_assert_eq!(
                parameters(&GbSpec::canonical(alpha, n).unwrap(), 22),
                parameters(&GbSpec::canonical(n - alpha, n).unwrap(), 22)
            );
        }
    }
}
