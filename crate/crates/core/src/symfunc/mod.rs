//! Symmetric functions over the exact rational-function coefficient ring.
//!
//! The six classical bases (elementary, homogeneous, power-sum, monomial,
//! Schur, forgotten) are supported with exact conversions that round-trip
//! identically. The forgotten basis is defined as `f_mu = omega(m_mu)`, the
//! convention under which `<e_lambda, f_mu> = delta`, which is tested against
//! the dual-basis Cauchy expansion.

mod composition;
mod functionals;
mod partition;
mod plethysm;
mod straighten;
mod symf;
pub(crate) mod transition;

pub use composition::{
    compositions, compositions_with_length, distinct_rearrangements, Composition,
};
pub use functionals::{hall_scalar, p1_derivative, p1_derivative_full, perp, PerpKind};
pub use partition::{partitions, Partition};
pub use plethysm::{eval_scalar, eval_x_times, plethysm_eval, Alphabet, PlethResult};
pub use straighten::straighten_schur;
pub use symf::{Basis, SymF};
