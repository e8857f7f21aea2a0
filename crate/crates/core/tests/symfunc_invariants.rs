//! Cross-basis invariants for the symmetric function layer.

use lltlab_core::ring::{BivarPoly, BivarRat};
use lltlab_core::symfunc::{
    hall_scalar, partitions, plethysm_eval, Alphabet, Basis, Partition, SymF,
};

use proptest::prelude::*;

const ALL_BASES: [Basis; 6] = [
    Basis::E,
    Basis::H,
    Basis::P,
    Basis::M,
    Basis::S,
    Basis::F,
];

/// Every basis element of degree <= 7 round-trips exactly through every
/// other basis.
#[test]
fn conversion_round_trips_exactly() {
    for d in 0..=7u32 {
        for lam in partitions(d) {
            for &src in &ALL_BASES {
                let f = SymF::basis_element(src, lam.clone());
                for &via in &ALL_BASES {
                    let back = f.convert(via).convert(src);
                    assert_eq!(back, f, "degree {d} {lam} {src:?} via {via:?}");
                }
            }
        }
    }
}

#[test]
fn pivot_examples() {
    // h_2 = e_1^2 - e_2
    let h2 = SymF::gen(Basis::H, 2).convert(Basis::E);
    assert_eq!(h2.coeff(&Partition::ones(2)), BivarRat::one());
    assert_eq!(
        h2.coeff(&Partition::single(2)),
        BivarRat::from(BivarPoly::constant(-1))
    );
    // p_2 = e_1^2 - 2 e_2 (Newton identity)
    let p2 = SymF::gen(Basis::P, 2).convert(Basis::E);
    assert_eq!(
        p2.coeff(&Partition::single(2)),
        BivarRat::from(BivarPoly::constant(-2))
    );
    // e_1 = m_1
    let e1 = SymF::gen(Basis::E, 1).convert(Basis::M);
    assert_eq!(e1.coeff(&Partition::single(1)), BivarRat::one());
    assert_eq!(e1.num_terms(), 1);
}

/// `<h_lambda, m_mu> = delta` and `<e_lambda, f_mu> = delta`; the latter is
/// the defining duality of the forgotten basis.
#[test]
fn hall_dualities() {
    for d in 0..=6u32 {
        let parts = partitions(d);
        for a in &parts {
            for b in &parts {
                let delta = if a == b {
                    BivarRat::one()
                } else {
                    BivarRat::zero()
                };
                let h = SymF::basis_element(Basis::H, a.clone());
                let m = SymF::basis_element(Basis::M, b.clone());
                assert_eq!(hall_scalar(&h, &m), delta, "h/m duality {a} {b}");
                let e = SymF::basis_element(Basis::E, a.clone());
                let f = SymF::basis_element(Basis::F, b.clone());
                assert_eq!(hall_scalar(&e, &f), delta, "e/f duality {a} {b}");
            }
        }
    }
}

#[test]
fn omega_is_isometric_involution() {
    for d in 1..=5u32 {
        for lam in partitions(d) {
            for mu in partitions(d) {
                let a = SymF::basis_element(Basis::S, lam.clone());
                let b = SymF::basis_element(Basis::M, mu.clone());
                assert_eq!(
                    hall_scalar(&a.omega(), &b.omega()),
                    hall_scalar(&a, &b),
                    "{lam} {mu}"
                );
            }
        }
    }
}

fn small_rat() -> impl Strategy<Value = BivarRat> {
    (-3i64..=3, 0u32..=2).prop_map(|(c, dq)| BivarRat::from(BivarPoly::monomial(c, dq, 0)))
}

fn small_symf(basis: Basis) -> impl Strategy<Value = SymF> {
    let lams: Vec<Partition> = (0..=4u32).flat_map(partitions).collect();
    proptest::collection::vec((0..lams.len(), small_rat()), 0..4).prop_map(move |terms| {
        let mut f = SymF::zero(basis);
        for (i, c) in terms {
            f.add_term(lams[i].clone(), c);
        }
        f
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Ring axioms with exact equality on random mixed-degree inputs.
    #[test]
    fn symf_ring_axioms(a in small_symf(Basis::S), b in small_symf(Basis::S), c in small_symf(Basis::S)) {
        let ab_c = a.mul(&b).mul(&c);
        let a_bc = a.mul(&b.mul(&c));
        prop_assert!(ab_c.equivalent(&a_bc));
        let dist = a.mul(&b.add(&c));
        let dist2 = a.mul(&b).add(&a.mul(&c));
        prop_assert!(dist.equivalent(&dist2));
    }

    /// shift_q is a ring homomorphism.
    #[test]
    fn shift_q_is_homomorphism(a in small_symf(Basis::P), b in small_symf(Basis::P)) {
        let lhs = a.mul(&b).shift_q();
        let rhs = a.shift_q().mul(&b.shift_q());
        prop_assert!(lhs.equivalent(&rhs));
    }

    /// Conversion round trips on random mixed sums.
    #[test]
    fn random_round_trip(f in small_symf(Basis::E)) {
        for &via in &ALL_BASES {
            prop_assert_eq!(f.convert(via).convert(Basis::E), f.clone());
        }
    }

    /// plethysm at X is the identity on random inputs.
    #[test]
    fn plethysm_x_identity(f in small_symf(Basis::M)) {
        let r = plethysm_eval(&f, &Alphabet::X).unwrap().into_sym();
        prop_assert!(r.equivalent(&f));
    }
}
