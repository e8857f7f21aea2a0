//! Exact-arithmetic toolkit for LLT polynomials and e-positivity experiments.
//!
//! Everything is computed over `Z[q,t]` (or its fraction field) with
//! arbitrary-precision integer coefficients; no floating point anywhere.
//!
//! The crate is organized in layers:
//! - [`ring`]: bivariate polynomials and reduced rational functions in `q`, `t`,
//!   plus q-analog constructors and the `q -> 1+q` substitution.
//! - [`symfunc`]: symmetric functions over the rational-function coefficient
//!   ring: the six classical bases, exact conversions, plethystic evaluation,
//!   skewing operators and the Hall scalar product.
//! - [`dyck`]: Dyck paths, parking functions, dinv statistics, the sweep map
//!   image and marked removable corners.
//! - [`llt`]: LLT polynomials by three routes (parking-function sum,
//!   compatible-permutation sum, and the linear operator algorithm).
//! - [`hall_littlewood`]: the creation operators `B_a`, `Bt_a`, `C_a`,
//!   compositional words, `E_{n,k}` by three routes and balanced-path reports.
//! - [`macdonald`]: the `t = 1` Macdonald specialization and its positivity
//!   certificate.
//! - [`epositivity`]: the `q -> 1+q` e-expansion, the poset expansion
//!   algorithm, the downset/weight recursion, Kreweras polynomials and the
//!   nabla-e_n sum.

pub mod dyck;
pub mod epositivity;
pub mod error;
pub mod hall_littlewood;
pub mod llt;
pub mod macdonald;
pub mod ring;
pub mod symfunc;

pub use error::Error;

/// Convenience alias used by all fallible operations in this crate.
pub type Result<T> = std::result::Result<T, Error>;
