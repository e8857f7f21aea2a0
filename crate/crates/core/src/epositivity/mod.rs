//! The q -> 1+q substitution and e-expansions; the poset expansion algorithm
//! for classical, column and unicellular LLTs; the possible-downset weight
//! recursion; the zero-area recursion; the dinv mass identity; Kreweras
//! polynomials; and the combinatorial nabla e_n.

mod conjecture;
mod eexpand;
mod nabla;
mod recursion;
mod theorems;

pub use conjecture::{
    conjecture_expansion_classical, conjecture_expansion_for_path, conjecture_expansion_from_pairs,
    conjecture_expansion_marked, conjecture_term,
};
pub use eexpand::{e_expansion, shift_and_e_expand, EExpansion};
pub use nabla::{kreweras_relation_check, nabla_en, nabla_hilbert_at};
pub use recursion::{
    areaprime_recursion, downset_reports, downset_weight, possible_downsets, DownsetReport,
};
pub use theorems::{dinv_mass_check, kreweras_poly, staircase_recursion_check};
