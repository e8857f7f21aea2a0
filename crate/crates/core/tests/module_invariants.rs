//! Cross-module invariants at the spec's stated bounds that are not already
//! covered by the per-module unit tests or the acceptance gate.

use lltlab_core::dyck::{enum_dyck, DyckPath};
use lltlab_core::epositivity::{nabla_en, shift_and_e_expand};
use lltlab_core::hall_littlewood::{apply_hl, HLKind};
use lltlab_core::llt::llt_classical;
use lltlab_core::symfunc::{partitions, Basis, SymF};

/// Every `B_a e_mu` with `a + |mu| <= 7` has a nonnegative shifted
/// e-expansion.
#[test]
fn creation_on_elementary_is_shift_positive() {
    for a in 1..=7u32 {
        for d in 0..=(7 - a) {
            for mu in partitions(d) {
                let emu = SymF::basis_element(Basis::E, mu.clone());
                let f = apply_hl(HLKind::B, a, &emu).unwrap();
                let ee = shift_and_e_expand(&f).unwrap();
                assert!(ee.is_positive(), "a={a} mu={mu}: {ee}");
            }
        }
    }
}

/// Shifted classical LLTs are e-positive for every path with n <= 5 (the
/// n = 6 family runs in the acceptance gate).
#[test]
fn classical_llts_are_shift_positive() {
    for n in 1..=5usize {
        for d in enum_dyck(n).unwrap() {
            let ee = shift_and_e_expand(&llt_classical(&d).unwrap()).unwrap();
            assert!(ee.is_positive(), "path {d}");
        }
    }
}

/// The bivariate nabla sum is shift-positive with `t` left formal.
#[test]
fn nabla_is_shift_positive() {
    for n in 1..=5u32 {
        let ee = shift_and_e_expand(&nabla_en(n).unwrap()).unwrap();
        assert!(ee.is_positive(), "n={n}");
    }
}

/// The full column worked instance at n = 8 (coarea [0,1,1,1,2,2,6,6] with
/// marks (2,5) and (6,7)): the downset recursion and the poset expansion
/// both agree with the operator route.
#[test]
fn column_instance_routes_agree() {
    use lltlab_core::dyck::MarkedPath;
    use lltlab_core::epositivity::{areaprime_recursion, conjecture_expansion_marked};
    use lltlab_core::llt::cm_run;

    let z = DyckPath::from_coarea(&[0, 1, 1, 1, 2, 2, 6, 6]).unwrap();
    let marks = [(2, 5), (6, 7)].into_iter().collect();
    let m = MarkedPath::new(z, marks).unwrap();
    let reference = cm_run(&m);
    let rec = areaprime_recursion(&m).unwrap();
    assert!(rec.equivalent(&reference));
    let conjectured = conjecture_expansion_marked(&m);
    let shifted = shift_and_e_expand(&reference).unwrap();
    assert_eq!(conjectured, shifted);
    assert!(conjectured.is_positive());
}

/// Bound errors surface as errors, not panics.
#[test]
fn bounds_are_enforced() {
    assert!(llt_classical(&DyckPath::zero_area(9)).is_err());
    assert!(lltlab_core::llt::llt_marked(&lltlab_core::dyck::MarkedPath::unmarked(
        DyckPath::zero_area(9)
    ))
    .is_err());
    assert!(nabla_en(8).is_err());
    assert!(lltlab_core::epositivity::kreweras_poly(13).is_err());
    assert!(lltlab_core::macdonald::htilde_t1(&lltlab_core::symfunc::Partition::from(vec![
        10
    ]))
    .is_err());
    assert!(lltlab_core::hall_littlewood::e_nk(
        8,
        1,
        lltlab_core::hall_littlewood::EnkMethod::Poch
    )
    .is_err());
    assert!(lltlab_core::hall_littlewood::balanced_identity(7, 1).is_err());
    assert!(enum_dyck(13).is_err());
}
