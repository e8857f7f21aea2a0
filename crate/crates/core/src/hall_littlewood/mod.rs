//! The creation operators `B_a`, `Bt_a` and `C_a`, compositional operator
//! words, the `E_{n,k}` family by three routes, the bigraded aggregate
//! `sum_k t^{n-k} Et_{n,k}`, balanced-path comparisons, and the positive
//! tableau expansion of `B_a e_mu` at `q -> 1+q`.

mod balanced;
mod enk;
mod ops;
mod tableaux;

pub use balanced::{balanced_identity, BalancedReport, PathComparison, PathRelation};
pub use enk::{dh_poly, e_nk, e_nk_poch, enk_twist, EnkMethod};
pub use ops::{apply_hl, b_word, word, HLKind};
pub use tableaux::b_positive_tableaux;
