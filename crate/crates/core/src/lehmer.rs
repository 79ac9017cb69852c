//! Lehmer's construction: for weights μ_0..μ_M and every tuple
//! (a_0, …, a_M) ∈ {0..p−1}^(M+1), the value a_0μ_0 + ⋯ + a_Mμ_M goes to
//! class (a_0 + ⋯ + a_M) mod p. The classes have equal power sums through
//! degree M.
//!
//! The generating product has M + 1 factors, one per weight, indexed
//! m = 0..M. With μ_m = p^m it becomes
//! ∏_(m=0)^M (1 + ωx^(p^m) + ⋯ + ω^(p−1)x^((p−1)p^m)) = Σ_(n<p^(M+1)) ω^(v_p(n)) x^n,
//! which [`verify_product_identity`] checks coefficient by coefficient in
//! Z\[ω\].

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::partition::{EspReport, PowerSumTable};
use crate::poly::DensePolynomial;
use crate::rings::{omega_pow, CyclotomicElement};
use crate::sequence::{digit_sum_mod, Budget};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LehmerSpec {
    p: u32,
    mu: Vec<u64>,
}

impl LehmerSpec {
    pub fn new(p: u32, mu: Vec<i64>, budget: Budget) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidBase(p.into()));
        }
        if mu.is_empty() {
            return Err(Error::EmptyWeights);
        }
        if let Some((index, &value)) = mu.iter().enumerate().find(|(_, &v)| v < 1) {
            return Err(Error::NonPositiveWeight { index, value });
        }
        budget.admit(p, mu.len() as u32)?;
        Ok(Self { p, mu: mu.into_iter().map(|v| v as u64).collect() })
    }

    /// μ_m = p^m for m = 0..=M; reproduces Prouhet's partition.
    pub fn prouhet(p: u32, m: u32, budget: Budget) -> Result<Self> {
        budget.admit(p, m + 1)?;
        let mu = (0..=m).map(|e| i64::from(p).pow(e)).collect();
        Self::new(p, mu, budget)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn mu(&self) -> &[u64] {
        &self.mu
    }

    /// M = len(μ) − 1.
    pub fn degree(&self) -> u32 {
        self.mu.len() as u32 - 1
    }

    /// Visit every tuple as (digit sum, value), odometer order with a_0
    /// varying fastest.
    fn for_each_tuple(&self, mut visit: impl FnMut(u32, &BigInt)) {
        let p = self.p;
        let mus: Vec<BigInt> = self.mu.iter().map(|&m| BigInt::from(m)).collect();
        let mut digits = vec![0u32; self.mu.len()];
        let mut value = BigInt::zero();
        let mut digit_sum = 0u32;
        loop {
            visit(digit_sum % p, &value);
            let mut i = 0;
            loop {
                if i == digits.len() {
                    return;
                }
                if digits[i] + 1 < p {
                    digits[i] += 1;
                    digit_sum += 1;
                    value += &mus[i];
                    break;
                }
                digit_sum -= digits[i];
                value -= &mus[i] * BigInt::from(digits[i]);
                digits[i] = 0;
                i += 1;
            }
        }
    }
}

/// Class k is a multiset of values, stored as value → multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifiedMultiset {
    classes: Vec<BTreeMap<BigInt, u64>>,
}

impl ClassifiedMultiset {
    pub fn classes(&self) -> &[BTreeMap<BigInt, u64>] {
        &self.classes
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.classes.iter().flat_map(|c| c.values()).sum()
    }

    /// Class k as a sorted list, repeated by multiplicity.
    pub fn expanded(&self, k: usize) -> Vec<BigInt> {
        self.classes[k]
            .iter()
            .flat_map(|(v, &mult)| std::iter::repeat_n(v.clone(), mult as usize))
            .collect()
    }

    /// Row m holds Σ mult·v^m per class, 0^0 = 1.
    pub fn power_sum_table(&self, max_degree: u32) -> PowerSumTable {
        let mut rows = vec![vec![BigInt::zero(); self.classes.len()]; max_degree as usize + 1];
        for (k, class) in self.classes.iter().enumerate() {
            for (value, &mult) in class {
                let mut pw = BigInt::from(mult);
                for row in rows.iter_mut() {
                    row[k] += &pw;
                    pw *= value;
                }
            }
        }
        PowerSumTable::from_rows(rows)
    }
}

#[derive(Serialize)]
struct Entry {
    value: String,
    multiplicity: u64,
}

impl Serialize for ClassifiedMultiset {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let classes: Vec<Vec<Entry>> = self
            .classes
            .iter()
            .map(|c| {
                c.iter()
                    .map(|(v, &multiplicity)| Entry { value: v.to_string(), multiplicity })
                    .collect()
            })
            .collect();
        classes.serialize(serializer)
    }
}

pub fn lehmer_expand(spec: &LehmerSpec) -> ClassifiedMultiset {
    let mut classes = vec![BTreeMap::new(); spec.p as usize];
    spec.for_each_tuple(|k, value| {
        *classes[k as usize].entry(value.clone()).or_insert(0) += 1;
    });
    ClassifiedMultiset { classes }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LehmerReport {
    pub classes: ClassifiedMultiset,
    pub power_sums: PowerSumTable,
    pub esp: EspReport,
}

/// Equal multiset power sums for m = 0..=M.
pub fn lehmer_verify(spec: &LehmerSpec) -> LehmerReport {
    lehmer_verify_through(spec, spec.degree())
}

/// As [`lehmer_verify`], checking through an arbitrary degree.
pub fn lehmer_verify_through(spec: &LehmerSpec, through_degree: u32) -> LehmerReport {
    let classes = lehmer_expand(spec);
    let power_sums = classes.power_sum_table(through_degree);
    let esp = power_sums.esp_report(through_degree);
    LehmerReport { classes, power_sums, esp }
}

/// Σ over tuples of ω^(a_0+⋯+a_M) (a_0μ_0 + ⋯ + a_Mμ_M)^m in Z\[ω\]: the
/// m-th derivative at θ = 0 of the product, as a finite sum.
pub fn lehmer_weighted_sum(spec: &LehmerSpec, m: u32) -> CyclotomicElement {
    let p = spec.p;
    let powers: Vec<CyclotomicElement> = (0..i64::from(p)).map(|k| omega_pow(p, k)).collect();
    let mut acc = CyclotomicElement::zero();
    spec.for_each_tuple(|k, value| {
        let weight = if m == 0 { BigInt::one() } else { num_traits::pow(value.clone(), m as usize) };
        if !weight.is_zero() {
            acc += &crate::rings::Coefficient::scale(&powers[k as usize], &weight);
        }
    });
    acc
}

/// One coefficient where the two sides of the product identity differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoefficientDiff {
    pub exponent: usize,
    pub product: Vec<String>,
    pub series: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub p: u32,
    pub m: u32,
    pub coefficients: usize,
    pub holds: bool,
    pub mismatches: Vec<CoefficientDiff>,
}

/// ∏_(m=0)^M (Σ_j ω^j x^(j·p^m)), expanded by repeated multiplication.
pub fn root_of_unity_product(p: u32, m: u32, budget: Budget) -> Result<DensePolynomial<CyclotomicElement>> {
    budget.admit(p, m + 1)?;
    let mut acc = DensePolynomial::new(vec![CyclotomicElement::one()]);
    let mut step = 1usize;
    for _ in 0..=m {
        let mut factor = vec![CyclotomicElement::zero(); (p as usize - 1) * step + 1];
        for j in 0..p as usize {
            factor[j * step] = omega_pow(p, j as i64);
        }
        acc = acc.mul_ring(&DensePolynomial::new(factor));
        step *= p as usize;
    }
    Ok(acc)
}

/// Σ_(n<p^(M+1)) ω^(v_p(n)) x^n.
pub fn root_of_unity_series(p: u32, m: u32, budget: Budget) -> Result<DensePolynomial<CyclotomicElement>> {
    let len = budget.admit(p, m + 1)?;
    Ok(DensePolynomial::new((0..len).map(|n| omega_pow(p, i64::from(digit_sum_mod(n, p)))).collect()))
}

pub fn product_identity_report(p: u32, m: u32, budget: Budget) -> Result<IdentityReport> {
    if p < 2 {
        return Err(Error::InvalidBase(p.into()));
    }
    let lhs = root_of_unity_product(p, m, budget)?;
    let rhs = root_of_unity_series(p, m, budget)?;
    let width = p as usize - 1;
    let len = lhs.coeffs().len().max(rhs.coeffs().len());
    let mismatches: Vec<CoefficientDiff> = (0..len)
        .filter_map(|i| {
            let (l, r) = (lhs.coeff(i), rhs.coeff(i));
            (l != r).then(|| CoefficientDiff {
                exponent: i,
                product: pad(&l, width),
                series: pad(&r, width),
            })
        })
        .collect();
    Ok(IdentityReport { p, m, coefficients: len, holds: mismatches.is_empty(), mismatches })
}

fn pad(c: &CyclotomicElement, width: usize) -> Vec<String> {
    let mut v: Vec<String> = c.coeffs().iter().map(ToString::to_string).collect();
    v.resize(width, "0".into());
    v
}

/// True when the product and the series agree exactly.
pub fn verify_product_identity(p: u32, m: u32, budget: Budget) -> Result<bool> {
    Ok(product_identity_report(p, m, budget)?.holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::prouhet_partition;
    use crate::sequence::PtmParams;

    fn spec(p: u32, mu: &[i64]) -> LehmerSpec {
        LehmerSpec::new(p, mu.to_vec(), Budget::DEFAULT).unwrap()
    }

    fn bigs(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn validation() {
        assert_eq!(
            LehmerSpec::new(2, vec![1, 0, 3], Budget::DEFAULT).unwrap_err(),
            Error::NonPositiveWeight { index: 1, value: 0 }
        );
        assert_eq!(LehmerSpec::new(2, vec![], Budget::DEFAULT).unwrap_err(), Error::EmptyWeights);
        assert!(LehmerSpec::new(1, vec![1], Budget::DEFAULT).is_err());
        assert!(matches!(
            LehmerSpec::new(3, vec![1; 5], Budget(100)).unwrap_err(),
            Error::BudgetExceeded { .. }
        ));
    }

    #[test]
    fn binary_powers_give_prouhet_classes() {
        let classes = lehmer_expand(&spec(2, &[1, 2, 4, 8]));
        assert_eq!(classes.expanded(0), bigs(&[0, 3, 5, 6, 9, 10, 12, 15]));
        assert_eq!(classes.expanded(1), bigs(&[1, 2, 4, 7, 8, 11, 13, 14]));
        let report = lehmer_verify(&spec(2, &[1, 2, 4, 8]));
        assert_eq!(report.esp.equal_up_to, Some(3));
        let sums: Vec<i64> = vec![8, 60, 620, 7200];
        for (m, s) in sums.into_iter().enumerate() {
            assert_eq!(report.power_sums.get(m, 0), &BigInt::from(s));
            assert_eq!(report.power_sums.get(m, 1), &BigInt::from(s));
        }
    }

    #[test]
    fn collisions_keep_multiplicity() {
        let classes = lehmer_expand(&spec(2, &[1, 1]));
        assert_eq!(classes.expanded(0), bigs(&[0, 2]));
        assert_eq!(classes.expanded(1), bigs(&[1, 1]));
        assert_eq!(classes.classes()[1][&BigInt::from(1)], 2);
        assert_eq!(classes.total_multiplicity(), 4);
        let report = lehmer_verify(&spec(2, &[1, 1]));
        assert_eq!(report.power_sums.rows(), &[bigs(&[2, 2]), bigs(&[2, 2])]);
    }

    #[test]
    fn ternary_weights_by_hand() {
        // tuples (a0, a1) with value a0 + 2 a1 and class (a0 + a1) mod 3
        let mut expect: Vec<Vec<i64>> = vec![vec![]; 3];
        for a0 in 0..3 {
            for a1 in 0..3 {
                expect[(a0 + a1) % 3].push(a0 as i64 + 2 * a1 as i64);
            }
        }
        let classes = lehmer_expand(&spec(3, &[1, 2]));
        for (k, mut e) in expect.into_iter().enumerate() {
            e.sort_unstable();
            assert_eq!(classes.expanded(k), bigs(&e));
        }
        assert_eq!(lehmer_verify(&spec(3, &[1, 2])).esp.equal_up_to, Some(1));
    }

    #[test]
    fn three_weights_by_brute_force() {
        let mu = [3i64, 7, 11];
        let mut sums = [[0i64; 3]; 3];
        for a0 in 0..3i64 {
            for a1 in 0..3i64 {
                for a2 in 0..3i64 {
                    let v = a0 * mu[0] + a1 * mu[1] + a2 * mu[2];
                    let k = ((a0 + a1 + a2) % 3) as usize;
                    for (m, row) in sums.iter_mut().enumerate() {
                        row[k] += v.pow(m as u32);
                    }
                }
            }
        }
        for row in &sums {
            assert!(row.iter().all(|s| *s == row[0]));
        }
        let report = lehmer_verify(&spec(3, &mu));
        assert_eq!(report.esp.equal_up_to, Some(2));
        for (m, row) in sums.iter().enumerate() {
            assert_eq!(report.power_sums.rows()[m], bigs(row));
        }
    }

    #[test]
    fn weighted_sum_vanishes_through_degree() {
        let s = spec(2, &[1]);
        assert!(lehmer_weighted_sum(&s, 0).is_zero());
        let s = spec(3, &[1, 2]);
        for m in 0..=1 {
            assert!(lehmer_weighted_sum(&s, m).is_zero(), "m={m}");
        }
        // direct enumeration of the nine tuples
        let mut expect = CyclotomicElement::zero();
        for a0 in 0..3i64 {
            for a1 in 0..3i64 {
                let v = BigInt::from((a0 + 2 * a1).pow(3));
                expect += &crate::rings::Coefficient::scale(&omega_pow(3, a0 + a1), &v);
            }
        }
        let got = lehmer_weighted_sum(&s, 3);
        assert!(!got.is_zero());
        assert_eq!(got, expect);
    }

    #[test]
    fn product_identity_small_cases() {
        assert!(verify_product_identity(3, 0, Budget::DEFAULT).unwrap());
        let lhs = root_of_unity_product(3, 0, Budget::DEFAULT).unwrap();
        assert_eq!(lhs.coeffs(), &[CyclotomicElement::one(), omega_pow(3, 1), omega_pow(3, 2)]);
        for m in 0..=5 {
            assert!(verify_product_identity(2, m, Budget::DEFAULT).unwrap());
        }
    }

    #[test]
    fn classical_product_has_sign_coefficients() {
        let lhs = root_of_unity_product(2, 3, Budget::DEFAULT).unwrap();
        let signs: Vec<CyclotomicElement> = [1i64, -1, -1, 1, -1, 1, 1, -1, -1, 1, 1, -1, 1, -1, -1, 1]
            .iter()
            .map(|&s| CyclotomicElement::constant(s))
            .collect();
        assert_eq!(lhs.coeffs(), signs.as_slice());
    }

    #[test]
    fn report_lists_mismatches() {
        let report = product_identity_report(5, 2, Budget::DEFAULT).unwrap();
        assert!(report.holds);
        assert_eq!(report.coefficients, 125);
        assert!(product_identity_report(5, 2, Budget(100)).is_err());
    }

    #[test]
    fn prouhet_weights_match_partition() {
        for p in 2..=4 {
            for m in 0..=3 {
                let classes = lehmer_expand(&LehmerSpec::prouhet(p, m, Budget::DEFAULT).unwrap());
                let part = prouhet_partition(&PtmParams::for_degree(p, m, Budget::DEFAULT).unwrap());
                for k in 0..p as usize {
                    assert!(classes.classes()[k].values().all(|&c| c == 1));
                    assert_eq!(classes.expanded(k), part.class(k).iter().map(|&n| BigInt::from(n)).collect::<Vec<_>>());
                }
            }
        }
    }

    #[test]
    fn json_shape() {
        let classes = lehmer_expand(&spec(2, &[1, 1]));
        let v = serde_json::to_value(&classes).unwrap();
        assert_eq!(
            v,
            serde_json::json!([
                [{"value": "0", "multiplicity": 1}, {"value": "2", "multiplicity": 1}],
                [{"value": "1", "multiplicity": 2}]
            ])
        );
    }
}
