//! The generalized Prouhet-Thue-Morse sequence v_p(n): the sum of the
//! base-p digits of n, reduced mod p.

use serde::Serialize;

use crate::{Error, Result};

/// Upper bound on the number of terms any enumeration may produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Budget(pub u64);

impl Budget {
    pub const DEFAULT: Budget = Budget(10_000_000);

    /// Check that `base^exp` terms fit, returning the count.
    pub fn admit(self, base: u32, exp: u32) -> Result<u64> {
        match u64::from(base).checked_pow(exp) {
            Some(n) if n <= self.0 => Ok(n),
            Some(n) => Err(Error::BudgetExceeded { required: n.to_string(), budget: self.0 }),
            None => Err(Error::BudgetExceeded {
                required: format!("{base}^{exp}"),
                budget: self.0,
            }),
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// Base p and block exponent N. A block covers 0..p^N; for partitions the
/// degree is M = N − 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PtmParams {
    p: u32,
    n: u32,
    #[serde(skip)]
    len: u64,
}

impl PtmParams {
    pub fn new(p: u32, n: u32) -> Result<Self> {
        Self::with_budget(p, n, Budget::DEFAULT)
    }

    pub fn with_budget(p: u32, n: u32, budget: Budget) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidBase(p.into()));
        }
        if n < 1 {
            return Err(Error::InvalidExponent(n));
        }
        let len = budget.admit(p, n)?;
        Ok(Self { p, n, len })
    }

    /// Parameters for degree M, i.e. N = M + 1.
    pub fn for_degree(p: u32, m: u32, budget: Budget) -> Result<Self> {
        Self::with_budget(p, m + 1, budget)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// M = N − 1.
    pub fn degree(&self) -> u32 {
        self.n - 1
    }

    /// p^N.
    pub fn block_len(&self) -> u64 {
        self.len
    }

    /// The parameters one level down (N − 1), if N > 1.
    pub fn parent(&self) -> Option<Self> {
        (self.n > 1).then(|| Self { p: self.p, n: self.n - 1, len: self.len / u64::from(self.p) })
    }
}

pub(crate) fn digit_sum_mod(mut n: u64, p: u32) -> u32 {
    let p = u64::from(p);
    let mut s = 0u64;
    while n > 0 {
        s += n % p;
        n /= p;
    }
    (s % p) as u32
}

/// v_p(n) for p ≥ 2.
pub fn vp(n: u64, p: u32) -> Result<u32> {
    if p < 2 {
        return Err(Error::InvalidBase(p.into()));
    }
    Ok(digit_sum_mod(n, p))
}

/// v_p(0), …, v_p(p^N − 1) by digit extraction.
pub fn ptm_block(params: &PtmParams) -> Vec<u32> {
    (0..params.block_len()).map(|n| digit_sum_mod(n, params.p())).collect()
}

/// The same block built by concatenation: block N is p copies of block
/// N − 1 with class labels shifted by 0, 1, …, p − 1 (mod p).
pub fn ptm_block_by_concatenation(params: &PtmParams) -> Vec<u32> {
    let p = params.p();
    let mut block: Vec<u32> = (0..p).collect();
    for _ in 1..params.n() {
        let prev = block.len();
        block.reserve(prev * (p as usize - 1));
        for k in 1..p {
            for i in 0..prev {
                block.push((block[i] + k) % p);
            }
        }
    }
    block
}
