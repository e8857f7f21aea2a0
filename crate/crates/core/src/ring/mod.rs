//! Exact arithmetic in `Z[q,t]` and its fraction field.
//!
//! [`BivarPoly`] stores a canonical sparse polynomial with big-integer
//! coefficients; [`BivarRat`] keeps a reduced numerator/denominator pair so
//! that equal values always have identical representations. Final results in
//! this domain are polynomials, so every denominator produced along the way
//! must cancel exactly; the reduced form doubles as a correctness check.

mod gcd;
mod poly;
mod qanalog;
mod rat;

pub use poly::BivarPoly;
pub use qanalog::{q_analog, q_binomial, q_int, q_pochhammer, QAnalogKind};
pub use rat::BivarRat;
