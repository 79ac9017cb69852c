//! Exact coefficient rings.
//!
//! Every polynomial in this crate is generic over a [`Coefficient`], which is
//! a Z-module: values can be added, negated and scaled by integers. That is
//! all the factorization machinery needs, since every divisor and every
//! multiplier it uses has integer coefficients. Types that also support a
//! full product implement [`Ring`].
//!
//! Three coefficient types are provided:
//!
//! - [`BigInt`] for concrete integer vectors,
//! - [`CyclotomicElement`] for Z\[ω\] with 1 + ω + ⋯ + ω^(p−1) = 0,
//! - [`SymbolicForm`] for integer linear forms in a zero-sum vector a_0..a_(p−1).

mod cyclotomic;
mod symbolic;

use std::fmt::{Debug, Display};
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

pub use cyclotomic::{omega_pow, CyclotomicElement};
pub use symbolic::{symbolic_basis, SymbolicForm};

/// Serialized shape of one coefficient: a decimal string for integers, or
/// an array of decimal strings for vector-valued ring elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum CoeffRepr {
    Scalar(String),
    Vector(Vec<String>),
}

/// An exact Z-module used as polynomial coefficients.
pub trait Coefficient:
    Clone
    + Debug
    + Display
    + PartialEq
    + Zero
    + Add<Output = Self>
    + Sub<Output = Self>
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + Send
    + Sync
{
    /// Multiply by an integer.
    fn scale(&self, k: &BigInt) -> Self;

    /// Decimal representation, padded to `width` components for
    /// vector-valued rings (ignored by scalar rings).
    fn repr(&self, width: usize) -> CoeffRepr;

    /// True when the printed form is a single term and needs no parentheses
    /// when used as a multiplier.
    fn is_atomic(&self) -> bool {
        let s = self.to_string();
        !s.chars().skip(1).any(|c| c == '+' || c == '-')
    }
}

/// A commutative ring with identity.
pub trait Ring: Coefficient + One + std::ops::Mul<Output = Self> {}

impl Coefficient for BigInt {
    fn scale(&self, k: &BigInt) -> Self {
        self * k
    }

    fn repr(&self, _width: usize) -> CoeffRepr {
        CoeffRepr::Scalar(self.to_string())
    }
}

impl Ring for BigInt {}

/// Trim trailing zeros from a coefficient vector.
pub(crate) fn trim_zeros(coeffs: &mut Vec<BigInt>) {
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
}

/// Pad `coeffs` with zeros to `width` components and render as decimals.
pub(crate) fn padded_decimal(coeffs: &[BigInt], width: usize) -> Vec<String> {
    let mut out: Vec<String> = coeffs.iter().map(ToString::to_string).collect();
    while out.len() < width {
        out.push("0".to_string());
    }
    out
}

/// Combine the bases of two operands. Base 0 marks a value that is valid in
/// every ring (integer constants, zero), so it adopts the other operand's base.
pub(crate) fn join_base(left: u32, right: u32) -> crate::Result<u32> {
    match (left, right) {
        (0, r) => Ok(r),
        (l, 0) => Ok(l),
        (l, r) if l == r => Ok(l),
        (l, r) => Err(crate::Error::ModulusMismatch { left: l, right: r }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bigint_scale_and_repr() {
        let x = BigInt::from(-7);
        assert_eq!(x.scale(&BigInt::from(3)), BigInt::from(-21));
        assert_eq!(x.repr(4), CoeffRepr::Scalar("-7".into()));
        assert!(x.is_atomic());
    }

    #[test]
    fn join_base_rules() {
        assert_eq!(join_base(0, 5).unwrap(), 5);
        assert_eq!(join_base(3, 0).unwrap(), 3);
        assert_eq!(join_base(0, 0).unwrap(), 0);
        assert!(join_base(3, 5).is_err());
    }
}
