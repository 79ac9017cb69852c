//! Prouhet's partition of {0, …, p^(M+1) − 1} by n ∈ S_(v_p(n)), and exact
//! power-sum tables for checking equal sums of like powers.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::sequence::{digit_sum_mod, PtmParams};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Partition {
    #[serde(skip)]
    params: Option<PtmParams>,
    classes: Vec<Vec<u64>>,
}

impl Partition {
    /// An arbitrary family of classes, checked only for pairwise
    /// disjointness.
    pub fn from_classes(classes: Vec<Vec<u64>>) -> Result<Self> {
        if classes.len() < 2 {
            return Err(Error::InvalidPartition("need at least two classes".into()));
        }
        let mut all: Vec<u64> = classes.iter().flatten().copied().collect();
        all.sort_unstable();
        if all.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidPartition("classes overlap".into()));
        }
        Ok(Self { params: None, classes })
    }

    pub fn params(&self) -> Option<&PtmParams> {
        self.params.as_ref()
    }

    pub fn classes(&self) -> &[Vec<u64>] {
        &self.classes
    }

    pub fn class(&self, k: usize) -> &[u64] {
        &self.classes[k]
    }
}

/// S_0, …, S_(p−1) over {0, …, p^N − 1}; `params.degree()` is M.
pub fn prouhet_partition(params: &PtmParams) -> Partition {
    let p = params.p();
    let per_class = (params.block_len() / u64::from(p)) as usize;
    let mut classes = vec![Vec::with_capacity(per_class); p as usize];
    for n in 0..params.block_len() {
        classes[digit_sum_mod(n, p) as usize].push(n);
    }
    Partition { params: Some(*params), classes }
}

/// Σ_(n∈S) n^m with 0^0 = 1.
pub fn power_sum(set: &[u64], m: u32) -> BigInt {
    if m == 0 {
        return BigInt::from(set.len());
    }
    set.iter().map(|&n| num_traits::pow(BigInt::from(n), m as usize)).sum()
}

/// Row m holds s_0(m), …, s_(p−1)(m).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSumTable {
    rows: Vec<Vec<BigInt>>,
}

impl PowerSumTable {
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        Self { rows }
    }

    /// Table through degree `max_degree` for plain sets.
    pub fn for_sets(sets: &[Vec<u64>], max_degree: u32) -> Self {
        let mut rows = vec![vec![BigInt::zero(); sets.len()]; max_degree as usize + 1];
        for (k, set) in sets.iter().enumerate() {
            for &n in set {
                let base = BigInt::from(n);
                let mut pw = BigInt::one();
                for row in rows.iter_mut() {
                    row[k] += &pw;
                    pw *= &base;
                }
            }
        }
        Self { rows }
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn get(&self, m: usize, k: usize) -> &BigInt {
        &self.rows[m][k]
    }

    pub fn max_degree(&self) -> usize {
        self.rows.len() - 1
    }

    /// Compare classes degree by degree through `through_degree`, which is
    /// clamped to the table's height.
    pub fn esp_report(&self, through_degree: u32) -> EspReport {
        let top = (through_degree as usize).min(self.max_degree());
        for (m, row) in self.rows.iter().enumerate().take(top + 1) {
            if let Some(k) = row.iter().position(|s| s != &row[0]) {
                return EspReport {
                    checked_through: top as u32,
                    equal_up_to: m.checked_sub(1).map(|v| v as u32),
                    first_violation: Some(Violation { m: m as u32, j: 0, k: k as u32 }),
                };
            }
        }
        EspReport {
            checked_through: top as u32,
            equal_up_to: Some(top as u32),
            first_violation: None,
        }
    }
}

impl Serialize for PowerSumTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        rows.serialize(serializer)
    }
}

/// Degree m where s_j(m) ≠ s_k(m).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub m: u32,
    pub j: u32,
    pub k: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EspReport {
    pub checked_through: u32,
    /// Largest m' such that every class agrees for all m ≤ m'; `None` when
    /// the class sizes already differ.
    pub equal_up_to: Option<u32>,
    pub first_violation: Option<Violation>,
}

impl EspReport {
    pub fn holds_through(&self, m: u32) -> bool {
        self.equal_up_to.is_some_and(|e| e >= m)
    }
}

pub fn power_sum_table(part: &Partition, max_degree: u32) -> PowerSumTable {
    PowerSumTable::for_sets(part.classes(), max_degree)
}

/// Check equal sums of like powers for m = 0..=through_degree.
pub fn verify_esp(part: &Partition, through_degree: u32) -> EspReport {
    power_sum_table(part, through_degree).esp_report(through_degree)
}
