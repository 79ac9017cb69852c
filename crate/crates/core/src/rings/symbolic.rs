use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{join_base, padded_decimal, trim_zeros, CoeffRepr, Coefficient};
use crate::{Error, Result};

/// An integer linear form in the entries of a generic zero-sum vector
/// (a_0, …, a_(p−1)).
///
/// a_(p−1) is eliminated as −(a_0 + ⋯ + a_(p−2)), so the form is stored as
/// its coefficients on a_0..a_(p−2) and two forms are equal exactly when
/// their coefficient vectors are. Forms are closed under addition and
/// integer scaling only.
#[derive(Debug, Clone)]
pub struct SymbolicForm {
    // 0 only for the zero form, which is valid in every base.
    base: u32,
    // Trimmed; at most p − 1 entries.
    coeffs: Vec<BigInt>,
}

impl SymbolicForm {
    /// Build a form from coefficients on a_0..a_(p−2).
    pub fn new(p: u32, coeffs: Vec<BigInt>) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidBase(p.into()));
        }
        let width = p as usize - 1;
        if coeffs.len() > width {
            return Err(Error::LengthMismatch { expected: width, found: coeffs.len() });
        }
        let mut coeffs = coeffs;
        trim_zeros(&mut coeffs);
        Ok(Self { base: p, coeffs })
    }

    pub fn p(&self) -> Option<u32> {
        (self.base != 0).then_some(self.base)
    }

    /// Coefficients on a_0..a_(p−2), padded to length p − 1.
    pub fn coeffs(&self) -> Vec<BigInt> {
        let mut out = self.coeffs.clone();
        out.resize((self.base as usize).saturating_sub(1), BigInt::zero());
        out
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
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

    /// Substitute concrete values for a_0..a_(p−1). Only the first p − 1
    /// values are read; the caller guarantees the vector sums to zero.
    pub fn specialize<C: Coefficient>(&self, values: &[C]) -> Result<C> {
        if let Some(p) = self.p() {
            if values.len() != p as usize {
                return Err(Error::LengthMismatch { expected: p as usize, found: values.len() });
            }
        }
        let mut acc = C::zero();
        for (c, v) in self.coeffs.iter().zip(values) {
            acc += &v.scale(c);
        }
        Ok(acc)
    }

    fn checked(result: Result<Self>) -> Self {
        result.unwrap_or_else(|e| panic!("{e}"))
    }
}

/// The form a_i in base p. For i = p − 1 this is −a_0 − ⋯ − a_(p−2).
pub fn symbolic_basis(p: u32, i: usize) -> Result<SymbolicForm> {
    if p < 2 {
        return Err(Error::InvalidBase(p.into()));
    }
    let width = p as usize - 1;
    if i > width {
        return Err(Error::IndexOutOfRange { index: i, len: p as usize });
    }
    let coeffs = if i == width {
        vec![-BigInt::one(); width]
    } else {
        let mut c = vec![BigInt::zero(); i + 1];
        c[i] = BigInt::one();
        c
    };
    SymbolicForm::new(p, coeffs)
}

impl PartialEq for SymbolicForm {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && (self.base == other.base || self.coeffs.is_empty())
    }
}

impl Eq for SymbolicForm {}

impl Zero for SymbolicForm {
    fn zero() -> Self {
        Self { base: 0, coeffs: vec![] }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl Add for SymbolicForm {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::checked(self.try_add(&rhs))
    }
}

impl Sub for SymbolicForm {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::checked(self.try_add(&-rhs))
    }
}

impl Neg for SymbolicForm {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            base: self.base,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<'a> AddAssign<&'a SymbolicForm> for SymbolicForm {
    fn add_assign(&mut self, rhs: &'a Self) {
        *self = Self::checked(self.try_add(rhs));
    }
}

impl<'a> SubAssign<&'a SymbolicForm> for SymbolicForm {
    fn sub_assign(&mut self, rhs: &'a Self) {
        *self = Self::checked(self.try_add(&-rhs.clone()));
    }
}

impl Coefficient for SymbolicForm {
    fn scale(&self, k: &BigInt) -> Self {
        let mut coeffs: Vec<BigInt> = self.coeffs.iter().map(|c| c * k).collect();
        trim_zeros(&mut coeffs);
        Self { base: self.base, coeffs }
    }

    fn repr(&self, width: usize) -> CoeffRepr {
        CoeffRepr::Vector(padded_decimal(&self.coeffs, width))
    }
}

/// Renders as a linear form, e.g. `a_0+a_1` or `-2a_0-a_1`.
impl fmt::Display for SymbolicForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "a_{i}")?;
            first = false;
        }
        Ok(())
    }
}
