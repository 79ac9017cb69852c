use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{join_base, padded_decimal, trim_zeros, CoeffRepr, Coefficient, Ring};
use crate::{Error, Result};

/// An element of Z\[ω\] = Z\[x\] / (1 + x + ⋯ + x^(p−1)).
///
/// The representative has degree at most p − 2 in ω. The only relation
/// imposed is that the p-th roots of unity sum to zero, so the quotient is
/// taken by 1 + x + ⋯ + x^(p−1) for every p, prime or not.
///
/// Integer constants (including zero and one produced through
/// [`Zero`]/[`One`]) are not tied to a base and combine with elements of any
/// base. Operators panic when two bound elements disagree on p; the checked
/// [`cyclo_add`](CyclotomicElement::cyclo_add) and
/// [`cyclo_mul`](CyclotomicElement::cyclo_mul) return an error instead.
#[derive(Debug, Clone)]
pub struct CyclotomicElement {
    // 0 marks an integer constant valid in every ring.
    base: u32,
    // Trimmed; at most p − 1 entries.
    coeffs: Vec<BigInt>,
}

impl CyclotomicElement {
    /// Reduce an arbitrary polynomial in ω to canonical form.
    pub fn new(p: u32, coeffs: Vec<BigInt>) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidBase(p.into()));
        }
        Ok(Self::reduce(p, coeffs))
    }

    /// An integer constant, valid in every base.
    pub fn constant(c: impl Into<BigInt>) -> Self {
        let mut coeffs = vec![c.into()];
        trim_zeros(&mut coeffs);
        Self { base: 0, coeffs }
    }

    /// The base p, or `None` for an unbound integer constant.
    pub fn p(&self) -> Option<u32> {
        (self.base != 0).then_some(self.base)
    }

    /// Canonical coefficients in ω, padded to length p − 1 (length 1 for an
    /// unbound constant).
    pub fn coeffs(&self) -> Vec<BigInt> {
        let width = if self.base == 0 { 1 } else { self.base as usize - 1 };
        let mut out = self.coeffs.clone();
        out.resize(width, BigInt::zero());
        out
    }

    pub fn cyclo_add(&self, other: &Self) -> Result<Self> {
        let base = join_base(self.base, other.base)?;
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < other.coeffs.len() {
            coeffs.resize(other.coeffs.len(), BigInt::zero());
        }
        for (c, o) in coeffs.iter_mut().zip(&other.coeffs) {
            *c += o;
        }
        trim_zeros(&mut coeffs);
        Ok(Self { base, coeffs })
    }

    pub fn cyclo_mul(&self, other: &Self) -> Result<Self> {
        let base = join_base(self.base, other.base)?;
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Ok(Self { base, coeffs: vec![] });
        }
        let mut prod = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                prod[i + j] += a * b;
            }
        }
        if base == 0 {
            // two constants
            trim_zeros(&mut prod);
            return Ok(Self { base, coeffs: prod });
        }
        Ok(Self::reduce(base, prod))
    }

    /// Fold exponents modulo p (ω^p = 1), then eliminate ω^(p−1) using
    /// ω^(p−1) = −(1 + ω + ⋯ + ω^(p−2)).
    fn reduce(p: u32, coeffs: Vec<BigInt>) -> Self {
        let p_us = p as usize;
        let mut folded = vec![BigInt::zero(); p_us];
        for (i, c) in coeffs.into_iter().enumerate() {
            folded[i % p_us] += c;
        }
        let top = folded.pop().expect("p >= 2");
        if !top.is_zero() {
            for c in folded.iter_mut() {
                *c -= &top;
            }
        }
        trim_zeros(&mut folded);
        Self { base: p, coeffs: folded }
    }

    fn checked(result: Result<Self>) -> Self {
        result.unwrap_or_else(|e| panic!("{e}"))
    }
}

/// ω^k in base p; k is reduced modulo p first.
pub fn omega_pow(p: u32, k: i64) -> CyclotomicElement {
    assert!(p >= 2, "base p must be at least 2");
    let e = k.rem_euclid(i64::from(p)) as usize;
    let mut coeffs = vec![BigInt::zero(); e + 1];
    coeffs[e] = BigInt::one();
    CyclotomicElement::reduce(p, coeffs)
}

impl PartialEq for CyclotomicElement {
    fn eq(&self, other: &Self) -> bool {
        // Constants compare equal across bases; anything involving ω needs
        // the same base.
        self.coeffs == other.coeffs && (self.base == other.base || self.coeffs.len() <= 1)
    }
}

impl Eq for CyclotomicElement {}

impl Zero for CyclotomicElement {
    fn zero() -> Self {
        Self { base: 0, coeffs: vec![] }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for CyclotomicElement {
    fn one() -> Self {
        Self::constant(1)
    }
}

impl Add for CyclotomicElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::checked(self.cyclo_add(&rhs))
    }
}

impl Sub for CyclotomicElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::checked(self.cyclo_add(&-rhs))
    }
}

impl Neg for CyclotomicElement {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            base: self.base,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for CyclotomicElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::checked(self.cyclo_mul(&rhs))
    }
}

impl<'a> AddAssign<&'a CyclotomicElement> for CyclotomicElement {
    fn add_assign(&mut self, rhs: &'a Self) {
        *self = Self::checked(self.cyclo_add(rhs));
    }
}

impl<'a> SubAssign<&'a CyclotomicElement> for CyclotomicElement {
    fn sub_assign(&mut self, rhs: &'a Self) {
        *self = Self::checked(self.cyclo_add(&-rhs.clone()));
    }
}

impl Coefficient for CyclotomicElement {
    fn scale(&self, k: &BigInt) -> Self {
        let mut coeffs: Vec<BigInt> = self.coeffs.iter().map(|c| c * k).collect();
        trim_zeros(&mut coeffs);
        Self { base: self.base, coeffs }
    }

    fn repr(&self, width: usize) -> CoeffRepr {
        CoeffRepr::Vector(padded_decimal(&self.coeffs, width))
    }
}

impl Ring for CyclotomicElement {}

impl fmt::Display for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let unit = match i {
                0 => String::new(),
                1 => "ω".to_string(),
                _ => format!("ω^{i}"),
            };
            let mag = c.abs();
            let body = if unit.is_empty() {
                mag.to_string()
            } else if mag.is_one() {
                unit
            } else {
                format!("{mag}{unit}")
            };
            match (first, c.is_negative()) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}
