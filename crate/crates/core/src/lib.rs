//! Exact q-series arithmetic for MacMahon's generalized sum-of-divisors
//! generating functions `A_k` and `C_k`.
//!
//! The crate is organised bottom-up:
//!
//! - [`series`]: truncated power series over the rationals, q-Pochhammer
//!   products, divisor sums and the Eisenstein series `E2`, `E4`, `E6`.
//! - [`macmahon`]: partition-sum oracles, the three series routes to `A_k`
//!   and `C_k`, rescaled Chebyshev polynomials and the theta series `F`, `G`.
//! - [`quasimodular`]: exact decomposition of a series in the ring generated
//!   by `E2`, `E4`, `E6`, and the divisor-power fit for `a_{n,k}`.
//! - [`verify`]: every identity as an executable check with a structured
//!   report.
//!
//! All arithmetic is exact. A passing check at order `N` certifies the
//! identity coefficientwise through `q^N`; it is evidence, not a proof.

pub mod error;
pub mod macmahon;
pub mod quasimodular;
pub mod rational;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use macmahon::{BivarSeries, Family, IntPolynomial, Parity};
pub use num_bigint::{BigInt, BigUint};
pub use quasimodular::{QMDecomposition, QMMonomial};
pub use rational::Rational;
pub use series::QSeries;
pub use verify::{Mismatch, Status, VerificationReport};
