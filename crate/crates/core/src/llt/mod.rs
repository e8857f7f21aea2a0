//! LLT polynomials by three routes: the definitional parking-function sum,
//! the compatible-permutation sum over a marked path, and the linear-time
//! operator word driver. All three agree exactly; the equivalence is
//! exercised by the verification suites.

mod cm;
mod sums;
mod word;

pub use cm::{cm_bracket, cm_minus, cm_plus, cm_run, cm_step, CmStep, YSymF};
pub use sums::{llt_classical, llt_marked};
pub use word::{encode_word, LLTWord};
