//! Length-p coefficient vectors whose entries sum to zero, with the cyclic
//! shifts A_k and the prefix sums B_k = A_0 + ⋯ + A_k.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::rings::{omega_pow, symbolic_basis, Coefficient, CyclotomicElement, SymbolicForm};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct ZeroSumVector<C> {
    entries: Vec<C>,
}

impl<C: Coefficient> ZeroSumVector<C> {
    /// Validates p ≥ 2 and Σ entries = 0.
    pub fn new(entries: Vec<C>) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::InvalidBase(entries.len() as u64));
        }
        let sum = entries.iter().fold(C::zero(), |mut acc, e| {
            acc += e;
            acc
        });
        if !sum.is_zero() {
            return Err(Error::NotZeroSum { sum: sum.to_string() });
        }
        Ok(Self { entries })
    }

    pub fn p(&self) -> u32 {
        self.entries.len() as u32
    }

    pub fn entries(&self) -> &[C] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> &C {
        &self.entries[i]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// The k-th left cyclic shift: entry j is a_((j+k) mod p).
    pub fn cyclic_shift(&self, k: i64) -> Self {
        let p = self.entries.len();
        let k = k.rem_euclid(p as i64) as usize;
        let mut entries = self.entries.clone();
        entries.rotate_left(k);
        Self { entries }
    }

    /// B_0, …, B_(p−2) with B_k = A_0 + ⋯ + A_k componentwise.
    pub fn prefix_sum_vectors(&self) -> Vec<Self> {
        let p = self.entries.len();
        let mut out = Vec::with_capacity(p - 1);
        let mut acc = self.clone();
        out.push(acc.clone());
        for k in 1..p - 1 {
            acc = acc.add(&self.cyclic_shift(k as i64));
            out.push(acc.clone());
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| {
                let mut s = a.clone();
                s += b;
                s
            })
            .collect();
        Self { entries }
    }

    pub fn neg(&self) -> Self {
        Self { entries: self.entries.iter().cloned().map(|e| -e).collect() }
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Result<ZeroSumVector<D>> {
        ZeroSumVector::new(self.entries.iter().map(f).collect())
    }
}

impl ZeroSumVector<BigInt> {
    pub fn from_ints(values: &[i64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| BigInt::from(v)).collect())
    }

    /// a_j = 1, a_k = −1, every other entry 0.
    pub fn indicator(p: u32, j: usize, k: usize) -> Result<Self> {
        let len = p as usize;
        for idx in [j, k] {
            if idx >= len {
                return Err(Error::IndexOutOfRange { index: idx, len });
            }
        }
        let mut entries = vec![BigInt::zero(); len];
        entries[j] += 1;
        entries[k] -= 1;
        Self::new(entries)
    }
}

impl ZeroSumVector<CyclotomicElement> {
    /// (1, ω, ω², …, ω^(p−1)).
    pub fn roots_of_unity(p: u32) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidBase(p.into()));
        }
        Self::new((0..i64::from(p)).map(|k| omega_pow(p, k)).collect())
    }
}

impl ZeroSumVector<SymbolicForm> {
    /// The generic vector (a_0, …, a_(p−1)).
    pub fn symbolic(p: u32) -> Result<Self> {
        let entries = (0..p as usize)
            .map(|i| symbolic_basis(p, i))
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }

    /// Substitute a concrete zero-sum vector for the generic one.
    pub fn specialize<C: Coefficient>(&self, values: &ZeroSumVector<C>) -> Result<ZeroSumVector<C>> {
        let entries = self
            .entries
            .iter()
            .map(|f| f.specialize(values.entries()))
            .collect::<Result<Vec<_>>>()?;
        ZeroSumVector::new(entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> ZeroSumVector<BigInt> {
        ZeroSumVector::from_ints(v).unwrap()
    }

    #[test]
    fn rejects_nonzero_sum() {
        let err = ZeroSumVector::from_ints(&[1, 2, 3]).unwrap_err();
        assert_eq!(err, Error::NotZeroSum { sum: "6".into() });
        assert!(ZeroSumVector::from_ints(&[0]).is_err());
    }

    #[test]
    fn shift_examples() {
        let a = ZeroSumVector::symbolic(3).unwrap();
        assert_eq!(a.cyclic_shift(0), a);
        let s1 = a.cyclic_shift(1);
        assert_eq!(s1.entries(), &[a.get(1).clone(), a.get(2).clone(), a.get(0).clone()]);
        assert_eq!(s1.cyclic_shift(2), a);
        assert_eq!(a.cyclic_shift(-1), a.cyclic_shift(2));
    }

    #[test]
    fn prefix_sums_p2() {
        let a = ints(&[5, -5]);
        let b = a.prefix_sum_vectors();
        assert_eq!(b, vec![a.clone()]);
        assert_eq!(a.cyclic_shift(1).neg(), a);
    }

    #[test]
    fn prefix_sums_p3() {
        let a = ints(&[1, 1, -2]);
        let b = a.prefix_sum_vectors();
        assert_eq!(b.len(), 2);
        assert_eq!(b[0], a);
        assert_eq!(b[1], ints(&[2, -1, -1]));
        assert_eq!(b[1], a.cyclic_shift(2).neg());
    }

    #[test]
    fn last_prefix_sum_is_negated_last_shift() {
        for p in 2..=7 {
            let a = ZeroSumVector::symbolic(p).unwrap();
            let b = a.prefix_sum_vectors();
            assert_eq!(b.last().unwrap(), &a.cyclic_shift(i64::from(p) - 1).neg(), "p={p}");
        }
    }

    #[test]
    fn indicator_and_roots() {
        let v = ZeroSumVector::indicator(4, 2, 0).unwrap();
        assert_eq!(v, ints(&[-1, 0, 1, 0]));
        assert!(ZeroSumVector::indicator(3, 3, 0).is_err());
        for p in 2..=7 {
            assert_eq!(ZeroSumVector::roots_of_unity(p).unwrap().p(), p);
        }
    }

    #[test]
    fn specialization_recovers_the_concrete_vector() {
        let a = ZeroSumVector::symbolic(4).unwrap();
        let concrete = ints(&[3, -1, 4, -6]);
        assert_eq!(a.specialize(&concrete).unwrap(), concrete);
    }
}
