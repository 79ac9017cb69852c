//! Exact constructions for the Prouhet-Tarry-Escott problem.
//!
//! The generalized Prouhet-Thue-Morse sequence v_p(n) splits
//! {0, …, p^(M+1) − 1} into p classes with equal power sums through degree
//! M. This crate builds those classes, the polynomials
//! F_N(x; A) = Σ a_(v_p(n)) x^n for zero-sum vectors A, their factorization
//! F_N = P_N · ∏(1 − x^(p^m)), and Lehmer's weighted generalization, all in
//! exact arithmetic.
//!
//! Polynomials and zero-sum vectors are generic over the coefficient ring;
//! the aliases below fix the three rings in use.

pub mod error;
pub mod lehmer;
pub mod partition;
pub mod poly;
pub mod polyfactor;
pub mod rings;
pub mod sequence;
pub mod zero_sum;

pub use error::{Error, Result};
pub use lehmer::{
    lehmer_expand, lehmer_verify, lehmer_verify_through, lehmer_weighted_sum, product_identity_report,
    verify_product_identity, ClassifiedMultiset, IdentityReport, LehmerReport, LehmerSpec,
};
pub use partition::{
    power_sum, power_sum_table, prouhet_partition, verify_esp, EspReport, Partition, PowerSumTable, Violation,
};
pub use poly::DensePolynomial;
pub use polyfactor::{
    build_c_indices, build_f, build_f_by_recurrence, build_p_recursive, build_q, factor_f,
    vanishing_order_at_one, weighted_power_sum, Factorization, IndexVector,
};
pub use rings::{omega_pow, symbolic_basis, CoeffRepr, Coefficient, CyclotomicElement, Ring, SymbolicForm};
pub use sequence::{ptm_block, ptm_block_by_concatenation, vp, Budget, PtmParams};
pub use zero_sum::ZeroSumVector;

pub use num_bigint::BigInt;
pub use num_traits::{One, Zero};

pub type IntPolynomial = DensePolynomial<BigInt>;
pub type CyclotomicPolynomial = DensePolynomial<CyclotomicElement>;
pub type SymbolicPolynomial = DensePolynomial<SymbolicForm>;

pub type IntVector = ZeroSumVector<BigInt>;
pub type CyclotomicVector = ZeroSumVector<CyclotomicElement>;
pub type SymbolicVector = ZeroSumVector<SymbolicForm>;
