//! The Hall scalar product and the operators derived from it: skewing by
//! `e_r` / `h_r` (adjoints of multiplication) and differentiation in `p_1`.

use crate::ring::BivarRat;

use super::symf::{Basis, SymF};
use super::transition;
use super::Partition;

/// Which multiplication operator to take the adjoint of.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PerpKind {
    E,
    H,
}

/// Hall scalar product `<F, G>`, computed in the power-sum basis where
/// `<p_lambda, p_mu> = delta z_lambda`.
pub fn hall_scalar(f: &SymF, g: &SymF) -> BivarRat {
    let a = f.convert(Basis::P);
    let b = g.convert(Basis::P);
    let mut acc = BivarRat::zero();
    for (l, c) in a.terms() {
        let d = b.coeff(l);
        if d.is_zero() {
            continue;
        }
        let z = BivarRat::from(crate::ring::BivarPoly::constant(l.z()));
        acc += &(&(c * &d) * &z);
    }
    acc
}

/// `p_k^perp = k d/dp_k` applied to a power-sum expansion.
fn p_perp_once(k: u32, f: &SymF) -> SymF {
    debug_assert_eq!(f.basis(), Basis::P);
    let mut out = SymF::zero(Basis::P);
    for (l, c) in f.terms() {
        let mult = l.multiplicity(k);
        if mult == 0 {
            continue;
        }
        let reduced = l.remove_part(k).expect("part present");
        let factor = BivarRat::from(i64::from(mult) * i64::from(k));
        out.add_term(reduced, c * &factor);
    }
    out
}

/// Skewing: the Hall-adjoint of multiplication by `e_r` (resp. `h_r`).
/// On the Schur basis `e_r^perp` removes vertical r-strips and `h_r^perp`
/// horizontal ones; here it is computed in the power-sum basis where the
/// adjoint of `p_k` is `k d/dp_k`.
pub fn perp(kind: PerpKind, r: u32, f: &SymF) -> SymF {
    if r == 0 {
        return f.clone();
    }
    let gen = match kind {
        PerpKind::E => transition::e_in_p(r),
        PerpKind::H => transition::h_in_p(r),
    };
    let fp = f.convert(Basis::P);
    let mut out = SymF::zero(Basis::P);
    for (nu, c) in gen.iter() {
        let mut cur = fp.clone();
        for &part in nu.parts() {
            cur = p_perp_once(part, &cur);
            if cur.is_zero() {
                break;
            }
        }
        if !cur.is_zero() {
            out = out.add(&cur.scale(c));
        }
    }
    out.convert(f.basis())
}

/// Formal derivative with respect to `p_1`.
pub fn p1_derivative(f: &SymF) -> SymF {
    let fp = f.convert(Basis::P);
    let mut out = SymF::zero(Basis::P);
    for (l, c) in fp.terms() {
        let mult = l.multiplicity(1);
        if mult == 0 {
            continue;
        }
        let reduced = l.remove_part(1).expect("part present");
        out.add_term(reduced, c * &BivarRat::from(i64::from(mult)));
    }
    out.convert(f.basis())
}

/// Coefficient of `p_1^n` in a degree-`n` symmetric function, times `n!`;
/// equivalently `d/dp_1` applied `n` times. This is the Hilbert-series
/// functional used by the nabla checks.
pub fn p1_derivative_full(f: &SymF) -> BivarRat {
    let n = f.max_degree();
    let fp = f.convert(Basis::P);
    let c = fp.coeff(&Partition::ones(n as usize));
    let mut fact = num_bigint::BigInt::from(1);
    for i in 1..=n as i64 {
        fact *= i;
    }
    &c * &BivarRat::from(crate::ring::BivarPoly::constant(fact))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::BivarPoly;

    #[test]
    fn perp_spec_examples() {
        // e_1^perp s_(1) = 1
        let s1 = SymF::gen(Basis::S, 1);
        assert!(perp(PerpKind::E, 1, &s1).equivalent(&SymF::one(Basis::S)));
        // h_1^perp e_2 = e_1
        let e2 = SymF::gen(Basis::E, 2);
        assert!(perp(PerpKind::H, 1, &e2).equivalent(&SymF::gen(Basis::E, 1)));
        // e_2^perp e_2 = 1
        assert!(perp(PerpKind::E, 2, &e2).equivalent(&SymF::one(Basis::E)));
    }

    #[test]
    fn perp_is_adjoint() {
        // <e_2 g, f> = <g, e_2^perp f> on a few elements of degree 4
        let g = SymF::basis_element(Basis::S, Partition::from(vec![2]));
        let e2 = SymF::gen(Basis::E, 2);
        for lam in super::super::partitions(4) {
            let f = SymF::basis_element(Basis::S, lam);
            let lhs = hall_scalar(&e2.convert(Basis::S).mul(&g), &f);
            let rhs = hall_scalar(&g, &perp(PerpKind::E, 2, &f));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn p1_examples() {
        // d/dp_1 (p_1^2) = 2 p_1
        let p11 = SymF::basis_element(Basis::P, Partition::ones(2));
        let d = p1_derivative(&p11);
        assert_eq!(
            d.coeff(&Partition::ones(1)),
            BivarRat::from(BivarPoly::constant(2))
        );
        assert_eq!(p1_derivative_full(&p11), BivarRat::from(2));
    }

    #[test]
    fn omega_examples() {
        // omega e_n = h_n
        let en = SymF::gen(Basis::E, 4);
        assert!(en.omega().equivalent(&SymF::gen(Basis::H, 4)));
        // omega is an involution across bases
        for lam in super::super::partitions(5) {
            let s = SymF::basis_element(Basis::S, lam.clone());
            assert!(s.omega().omega().equivalent(&s));
            assert_eq!(s.omega().coeff(&lam.conjugate()), BivarRat::one());
        }
    }

    #[test]
    fn hall_scalar_e_mu_sign_schur() {
        // <e_mu, s_{1^n}> = 1 for every mu of n
        for n in 1..=5u32 {
            let s1n = SymF::basis_element(Basis::S, Partition::ones(n as usize));
            for mu in super::super::partitions(n) {
                let emu = SymF::basis_element(Basis::E, mu);
                assert!(hall_scalar(&emu, &s1n).is_one());
            }
        }
    }
}
