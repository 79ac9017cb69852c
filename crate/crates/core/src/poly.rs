//! Dense univariate polynomials over a [`Coefficient`] ring.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::rings::{CoeffRepr, Coefficient, Ring};
use crate::{Error, Result};

/// Coefficients are stored lowest degree first with no trailing zeros, so
/// the zero polynomial is the empty vector.
#[derive(Debug, Clone, PartialEq)]
pub struct DensePolynomial<C> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> DensePolynomial<C> {
    pub fn new(coeffs: Vec<C>) -> Self {
        let mut poly = Self { coeffs };
        poly.trim();
        poly
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    /// c·x^k.
    pub fn monomial(c: C, k: usize) -> Self {
        let mut coeffs = vec![C::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of x^i, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    /// Exponents with a nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    /// Multiply by x^k.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.scale(k)).collect())
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> DensePolynomial<D> {
        DensePolynomial::new(self.coeffs.iter().map(f).collect())
    }

    pub fn try_map<D: Coefficient>(&self, f: impl Fn(&C) -> Result<D>) -> Result<DensePolynomial<D>> {
        Ok(DensePolynomial::new(self.coeffs.iter().map(f).collect::<Result<_>>()?))
    }

    /// Product with an integer polynomial. Skips zero coefficients of the
    /// multiplier, so sparse multipliers like 1 − x^k stay cheap.
    pub fn mul_int(&self, other: &DensePolynomial<BigInt>) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (j, b) in other.coeffs.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            for (i, a) in self.coeffs.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                out[i + j] += &a.scale(b);
            }
        }
        Self::new(out)
    }

    /// Multiply by 1 − x^k in place of a general product.
    pub fn mul_one_minus_x_pow(&self, k: usize) -> Self {
        let mut out = self.clone();
        if self.is_zero() {
            return out;
        }
        out.coeffs.resize(self.coeffs.len() + k, C::zero());
        for (i, c) in self.coeffs.iter().enumerate() {
            out.coeffs[i + k] -= c;
        }
        out.trim();
        out
    }

    /// Exact quotient by 1 − x^k, computed lowest degree first through
    /// q_i = f_i + q_(i−k). Fails with the residue f − q·(1 − x^k) when
    /// the division is not exact.
    pub fn div_one_minus_x_pow(&self, k: usize) -> Result<Self> {
        assert!(k >= 1, "divisor 1 - x^0 is zero");
        let Some(deg) = self.degree() else {
            return Ok(Self::zero());
        };
        if deg < k {
            return Err(self.not_divisible(self.clone()));
        }
        let qlen = deg - k + 1;
        let mut q: Vec<C> = Vec::with_capacity(qlen);
        for i in 0..qlen {
            let mut c = self.coeffs[i].clone();
            if i >= k {
                c += &q[i - k];
            }
            q.push(c);
        }
        let q = Self::new(q);
        let residue = self.clone() - q.mul_one_minus_x_pow(k);
        if residue.is_zero() {
            Ok(q)
        } else {
            Err(self.not_divisible(residue))
        }
    }

    /// Exact quotient by an integer polynomial whose leading or trailing
    /// coefficient is ±1. Long division runs from whichever end carries the
    /// unit; the result is checked by multiplying back.
    pub fn exact_div(&self, divisor: &DensePolynomial<BigInt>) -> Result<Self> {
        let Some(dg) = divisor.degree() else {
            return Err(Error::NonUnitDivisor);
        };
        let lead = &divisor.coeffs[dg];
        let low = divisor.coeffs.iter().position(|c| !c.is_zero()).expect("nonzero divisor");
        let trail = &divisor.coeffs[low];
        let Some(df) = self.degree() else {
            return Ok(Self::zero());
        };
        if df < dg {
            return Err(self.not_divisible(self.clone()));
        }
        let qlen = df - dg + 1;
        let mut q = vec![C::zero(); qlen];
        if lead.abs().is_one() {
            let mut rem = self.coeffs.clone();
            for i in (0..qlen).rev() {
                let c = rem[i + dg].scale(lead);
                if c.is_zero() {
                    continue;
                }
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    if !d.is_zero() {
                        rem[i + j] -= &c.scale(d);
                    }
                }
                q[i] = c;
            }
            let rem = Self::new(rem);
            if !rem.is_zero() {
                return Err(self.not_divisible(rem));
            }
            return Ok(Self::new(q));
        }
        if trail.abs().is_one() && low == 0 {
            // solve for q from the constant term upward
            let mut rem = self.coeffs.clone();
            for i in 0..qlen {
                let c = rem[i].scale(trail);
                if c.is_zero() {
                    continue;
                }
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    if !d.is_zero() && i + j < rem.len() {
                        rem[i + j] -= &c.scale(d);
                    }
                }
                q[i] = c;
            }
            let q = Self::new(q);
            let residue = self.clone() - q.mul_int(divisor);
            if !residue.is_zero() {
                return Err(self.not_divisible(residue));
            }
            return Ok(q);
        }
        Err(Error::NonUnitDivisor)
    }

    fn not_divisible(&self, remainder: Self) -> Error {
        Error::NotDivisible {
            remainder: remainder.coeffs.iter().map(ToString::to_string).collect(),
        }
    }

    /// JSON-ready coefficients, lowest degree first; vector-valued
    /// coefficients are padded to `width` components.
    pub fn repr(&self, width: usize) -> Vec<CoeffRepr> {
        self.coeffs.iter().map(|c| c.repr(width)).collect()
    }
}

impl DensePolynomial<BigInt> {
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        Self::new(vec![BigInt::one()])
    }
}

impl<C: Ring> DensePolynomial<C> {
    /// Schoolbook product over a full ring.
    pub fn mul_ring(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += &(a.clone() * b.clone());
            }
        }
        Self::new(out)
    }
}

impl<C: Coefficient> Add for DensePolynomial<C> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        for (a, b) in long.coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        long.trim();
        long
    }
}

impl<C: Coefficient> Sub for DensePolynomial<C> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<C: Coefficient> Neg for DensePolynomial<C> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<C: Ring> Mul for DensePolynomial<C> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ring(&rhs)
    }
}

impl<C: Coefficient> Serialize for DensePolynomial<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.repr(0).serialize(serializer)
    }
}

/// Human-readable form, e.g. `a_0 + (a_0+a_1)x + a_1x^4` or `1 - x - x^2 + x^3`.
impl<C: Coefficient> fmt::Display for DensePolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let var = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            let text = c.to_string();
            let (negative, mag) = match text.strip_prefix('-') {
                Some(rest) if c.is_atomic() => (true, rest.to_string()),
                _ => (false, text),
            };
            let body = if var.is_empty() {
                mag
            } else if mag == "1" {
                var
            } else if c.is_atomic() {
                format!("{mag}{var}")
            } else {
                format!("({mag}){var}")
            };
            match (first, negative) {
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
