//! The polynomials F_N(x; A) = Σ a_(v_p(n)) x^n, the divisor
//! Q_N(x) = ∏_(m<N) (1 − x^(p^m)), and the cofactor P_N with F_N = P_N·Q_N.
//!
//! P_N is built two ways that are checked against each other: by exact
//! division of F_N by Q_N one binomial at a time ([`factor_f`]), and by the
//! recursive construction over prefix-sum vectors ([`build_p_recursive`]).

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::poly::DensePolynomial;
use crate::rings::Coefficient;
use crate::sequence::{digit_sum_mod, ptm_block, PtmParams};
use crate::zero_sum::ZeroSumVector;
use crate::{Error, Result};

/// Positions c_j that may carry a nonzero coefficient of P_N.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct IndexVector(pub Vec<u64>);

impl IndexVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, j: u64) -> bool {
        self.0.binary_search(&j).is_ok()
    }
}

fn check_base<C>(params: &PtmParams, a: &ZeroSumVector<C>) -> Result<()>
where
    C: Coefficient,
{
    if a.p() != params.p() {
        return Err(Error::LengthMismatch { expected: params.p() as usize, found: a.p() as usize });
    }
    Ok(())
}

fn pow_usize(p: u32, e: u32) -> usize {
    (p as usize).pow(e)
}

/// F_N(x; A): the coefficient of x^n is A\[v_p(n)\].
pub fn build_f<C: Coefficient>(params: &PtmParams, a: &ZeroSumVector<C>) -> Result<DensePolynomial<C>> {
    check_base(params, a)?;
    let coeffs = ptm_block(params).into_iter().map(|v| a.get(v as usize).clone()).collect();
    Ok(DensePolynomial::new(coeffs))
}

/// F_N through F_N = Σ_k x^(k·p^(N−1)) F_(N−1)(x; A_k).
pub fn build_f_by_recurrence<C: Coefficient>(
    params: &PtmParams,
    a: &ZeroSumVector<C>,
) -> Result<DensePolynomial<C>> {
    check_base(params, a)?;
    let Some(parent) = params.parent() else {
        return build_f(params, a);
    };
    let step = parent.block_len() as usize;
    let mut acc = DensePolynomial::zero();
    for k in 0..params.p() {
        let part = build_f_by_recurrence(&parent, &a.cyclic_shift(i64::from(k)))?;
        acc = acc + part.shift(k as usize * step);
    }
    Ok(acc)
}

/// Q_N(x) = ∏_(m=0)^(N−1) (1 − x^(p^m)), by shift-and-subtract.
pub fn build_q(params: &PtmParams) -> DensePolynomial<BigInt> {
    let mut q = DensePolynomial::one();
    for m in 0..params.n() {
        q = q.mul_one_minus_x_pow(pow_usize(params.p(), m));
    }
    q
}

/// C_1 = (0, …, p−2); C_N = C_(N−1)(0) # ⋯ # C_(N−1)(p−2) where
/// C_(N−1)(k) offsets every index by k·p^(N−1).
pub fn build_c_indices(params: &PtmParams) -> IndexVector {
    let p = u64::from(params.p());
    let mut c: Vec<u64> = (0..p - 1).collect();
    let mut step = p;
    for _ in 1..params.n() {
        let base = c.clone();
        c.clear();
        for k in 0..p - 1 {
            c.extend(base.iter().map(|j| j + k * step));
        }
        step *= p;
    }
    IndexVector(c)
}

/// P_N resolved recursively.
///
/// Base case: the coefficient of x^m is a_0 + ⋯ + a_m for m ≤ p − 2.
/// Step: P_N(A) = Σ_(k=0)^(p−2) x^(k·p^(N−1)) P_(N−1)(B_k) where
/// B_k = A_0 + ⋯ + A_k is the k-th prefix sum of cyclic shifts.
pub fn build_p_recursive<C: Coefficient>(
    params: &PtmParams,
    a: &ZeroSumVector<C>,
) -> Result<DensePolynomial<C>> {
    check_base(params, a)?;
    let Some(parent) = params.parent() else {
        let mut running = C::zero();
        let coeffs = a.entries()[..a.entries().len() - 1]
            .iter()
            .map(|e| {
                running += e;
                running.clone()
            })
            .collect();
        return Ok(DensePolynomial::new(coeffs));
    };
    let step = parent.block_len() as usize;
    let mut acc = DensePolynomial::zero();
    for (k, b) in a.prefix_sum_vectors().iter().enumerate() {
        acc = acc + build_p_recursive(&parent, b)?.shift(k * step);
    }
    Ok(acc)
}

/// P_N = F_N / Q_N by successive exact division by each 1 − x^(p^m).
///
/// A [`Error::NotDivisible`] here means F_N was not built from a zero-sum
/// vector or the arithmetic is broken.
pub fn factor_f<C: Coefficient>(params: &PtmParams, a: &ZeroSumVector<C>) -> Result<DensePolynomial<C>> {
    let mut quotient = build_f(params, a)?;
    for m in 0..params.n() {
        quotient = quotient.div_one_minus_x_pow(pow_usize(params.p(), m))?;
    }
    Ok(quotient)
}

/// Multiplicity of the root x = 1, by repeated exact division by 1 − x.
pub fn vanishing_order_at_one<C: Coefficient>(f: &DensePolynomial<C>) -> Result<u32> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut order = 0;
    let mut current = f.clone();
    while let Ok(q) = current.div_one_minus_x_pow(1) {
        current = q;
        order += 1;
    }
    Ok(order)
}

/// Σ_(n<p^N) n^m · A\[v_p(n)\], with 0^0 = 1. This is the m-th derivative of
/// F_N(e^θ; A) at θ = 0, evaluated as a finite sum.
pub fn weighted_power_sum<C: Coefficient>(params: &PtmParams, a: &ZeroSumVector<C>, m: u32) -> Result<C> {
    check_base(params, a)?;
    let mut acc = C::zero();
    for n in 0..params.block_len() {
        let weight = if m == 0 { BigInt::one() } else { num_traits::pow(BigInt::from(n), m as usize) };
        if weight.is_zero() {
            continue;
        }
        acc += &a.get(digit_sum_mod(n, params.p()) as usize).scale(&weight);
    }
    Ok(acc)
}

/// deg Q_N = 1 + p + ⋯ + p^(N−1).
pub fn q_degree(params: &PtmParams) -> usize {
    (0..params.n()).map(|m| pow_usize(params.p(), m)).sum()
}

/// Everything computed for one (p, N, A): both constructions of F and P,
/// plus the divisor.
#[derive(Debug, Clone)]
pub struct Factorization<C> {
    pub f: DensePolynomial<C>,
    pub q: DensePolynomial<BigInt>,
    pub p_division: DensePolynomial<C>,
    pub p_recursive: DensePolynomial<C>,
    pub f_recurrence_agrees: bool,
    pub product_matches: bool,
}

impl<C: Coefficient> Factorization<C> {
    pub fn compute(params: &PtmParams, a: &ZeroSumVector<C>) -> Result<Self> {
        let f = build_f(params, a)?;
        let q = build_q(params);
        let p_division = factor_f(params, a)?;
        let p_recursive = build_p_recursive(params, a)?;
        let f_recurrence_agrees = build_f_by_recurrence(params, a)? == f;
        let product_matches = p_division.mul_int(&q) == f;
        Ok(Self { f, q, p_division, p_recursive, f_recurrence_agrees, product_matches })
    }

    pub fn verified(&self) -> bool {
        self.f_recurrence_agrees && self.product_matches && self.p_division == self.p_recursive
    }
}
