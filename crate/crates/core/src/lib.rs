//! Radicals, abc-tuple quality, and exhaustive searches for equal sums of
//! like powers.
//!
//! - [`arith`]: factorization, radicals, coprimality, exact powers.
//! - [`tuples`]: enumerating coprime `(k+1)`-tuples and ranking them by quality.
//! - [`powersum`]: searching `x_1^n + ... + x_k^n = z^n`.
//! - [`audit`]: the exact inequality chain evaluated on one solution.
//! - [`store`]: JSONL/CSV export and resumable checkpoints.

pub mod arith;
pub mod audit;
pub mod error;
pub mod pool;
pub mod powersum;
pub mod store;
pub mod tuples;

pub use arith::{big_pow, factorize, gcd_all, is_coprime, radical, radical_of_set, CoprimeMode, Factorization};
pub use error::{Error, Result};
pub use pool::WorkerPool;
pub use tuples::{AbcTuple, Epsilon, Verdict};
pub use powersum::{PowerSumSolution, SolutionFilter};
pub use audit::{audit_chain, ProofAudit};
