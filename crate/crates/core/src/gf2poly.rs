//! Polynomials over GF(2) and the quotient ring `F₂[x]/(xⁿ − 1)`.
//!
//! Coefficients are packed into 64-bit words, bit `i` holding the
//! coefficient of `xⁱ`. The word vector carries no trailing zero words, so
//! structural equality is polynomial equality.

use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BinaryPolynomial {
    words: Vec<u64>,
}

impl BinaryPolynomial {
    pub fn zero() -> Self {
        Self { words: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// `x^e`.
    pub fn monomial(e: usize) -> Self {
        let mut p = Self::zero();
        p.toggle(e);
        p
    }

    /// Sum of `x^e` over the given exponents; repeated exponents cancel.
    pub fn from_exponents(exponents: impl IntoIterator<Item = usize>) -> Self {
        let mut p = Self::zero();
        for e in exponents {
            p.toggle(e);
        }
        p
    }

    /// `1 + x^e`, the building block of weight-two generators. Note that
    /// `binomial(0)` is the zero polynomial.
    pub fn binomial(e: usize) -> Self {
        Self::from_exponents([0, e])
    }

    /// `xⁿ − 1` (equal to `xⁿ + 1` over GF(2)).
    pub fn cyclic_modulus(n: usize) -> Self {
        Self::binomial(n)
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    /// Highest exponent with a nonzero coefficient; `None` for the zero
    /// polynomial.
    pub fn degree(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * WORD_BITS + (WORD_BITS - 1 - last.leading_zeros() as usize))
    }

    pub fn lowest_exponent(&self) -> Option<usize> {
        self.exponents().next()
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words
            .get(i / WORD_BITS)
            .is_some_and(|w| (w >> (i % WORD_BITS)) & 1 == 1)
    }

    /// Exponents with nonzero coefficient, ascending.
    pub fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD_BITS + bit)
            })
        })
    }

    fn toggle(&mut self, e: usize) {
        let wi = e / WORD_BITS;
        if wi >= self.words.len() {
            self.words.resize(wi + 1, 0);
        }
        self.words[wi] ^= 1u64 << (e % WORD_BITS);
        self.trim();
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    fn xor_shifted(&mut self, other: &Self, shift: usize) {
        if other.is_zero() {
            return;
        }
        let word_shift = shift / WORD_BITS;
        let bit_shift = shift % WORD_BITS;
        let needed = other.words.len() + word_shift + 1;
        if self.words.len() < needed {
            self.words.resize(needed, 0);
        }
        for (i, &w) in other.words.iter().enumerate() {
            self.words[i + word_shift] ^= w << bit_shift;
            if bit_shift != 0 {
                self.words[i + word_shift + 1] ^= w >> (WORD_BITS - bit_shift);
            }
        }
        self.trim();
    }

    /// Full product in `F₂[x]`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for e in self.exponents() {
            out.xor_shifted(other, e);
        }
        out
    }

    /// Reduction modulo `xⁿ − 1`: exponents wrap modulo `n`.
    ///
    /// # Panics
    ///
    /// Panics if `n == 0`.
    pub fn reduce_mod(&self, n: usize) -> Self {
        assert!(n > 0, "modulus x^n - 1 needs n >= 1");
        if self.degree().is_none_or(|d| d < n) {
            return self.clone();
        }
        Self::from_exponents(self.exponents().map(|e| e % n))
    }

    /// `p · q mod (xⁿ − 1)`.
    pub fn mul_mod(&self, other: &Self, n: usize) -> Self {
        self.mul(other).reduce_mod(n)
    }

    /// `xⁱ · p mod (xⁿ − 1)`.
    pub fn shift_mod(&self, i: usize, n: usize) -> Self {
        Self::from_exponents(self.reduce_mod(n).exponents().map(|e| (e + i) % n))
    }

    /// `p(x^k) mod (xⁿ − 1)`: every exponent `i` maps to `i·k mod n`, and
    /// colliding terms cancel.
    pub fn substitute_power(&self, k: usize, n: usize) -> Self {
        assert!(n > 0, "modulus x^n - 1 needs n >= 1");
        let k = (k % n) as u128;
        Self::from_exponents(
            self.exponents()
                .map(|e| ((e as u128 * k) % n as u128) as usize),
        )
    }

    /// Euclidean division; returns `(quotient, remainder)`.
    ///
    /// # Panics
    ///
    /// Panics on division by zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let mut quotient = Self::zero();
        let mut rem = self.clone();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let shift = rd - dd;
            quotient.toggle(shift);
            rem.xor_shifted(divisor, shift);
        }
        (quotient, rem)
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Greatest common divisor by Euclid. Over GF(2) the result is monic
    /// automatically.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdUndefined);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        Ok(a)
    }

    /// `gcd(a, b, xⁿ − 1)`, composed as `gcd(gcd(a, b), xⁿ − 1)`.
    pub fn gcd_with_cyclic(a: &Self, b: &Self, n: usize) -> Self {
        let modulus = Self::cyclic_modulus(n);
        match a.gcd(b) {
            Ok(g) => g.gcd(&modulus),
            // gcd(0, 0) is undefined but gcd(0, 0, xⁿ − 1) = xⁿ − 1.
            Err(_) => Ok(modulus),
        }
        .expect("x^n - 1 is nonzero for n >= 1")
    }
}

impl Add for &BinaryPolynomial {
    type Output = BinaryPolynomial;

    fn add(self, rhs: Self) -> BinaryPolynomial {
        let mut out = self.clone();
        out.xor_shifted(rhs, 0);
        out
    }
}

impl Add for BinaryPolynomial {
    type Output = BinaryPolynomial;

    fn add(self, rhs: Self) -> BinaryPolynomial {
        &self + &rhs
    }
}

impl fmt::Display for BinaryPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, e) in self.exponents().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            match e {
                0 => f.write_str("1")?,
                1 => f.write_str("x")?,
                _ => write!(f, "x^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryPolynomial({self})")
    }
}

/// Parses `term ("+" term)*` with `term := "1" | "x" | "x^" int | "0"`.
/// Whitespace around terms is ignored. Terms add over GF(2), so `x+x`
/// parses to zero.
impl FromStr for BinaryPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut poly = Self::zero();
        let mut offset = 0;
        for raw in s.split('+') {
            let lead = raw.len() - raw.trim_start().len();
            let term = raw.trim();
            let position = offset + lead;
            let err = |message: &str| Error::Parse {
                position,
                message: format!("{message} in term {term:?}"),
            };
            match term {
                "" => return Err(err("empty term")),
                "0" => {}
                "1" => poly.toggle(0),
                "x" => poly.toggle(1),
                _ => {
                    let exp = term
                        .strip_prefix("x^")
                        .ok_or_else(|| err("expected 1, x or x^<int>"))?;
                    let e: usize = exp.parse().map_err(|_| err("invalid exponent"))?;
                    poly.toggle(e);
                }
            }
            offset += raw.len() + 1;
        }
        Ok(poly)
    }
}
