use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::dyck::{enum_dyck, enum_pf};
use crate::error::Error;
use crate::ring::BivarPoly;
use crate::symfunc::{p1_derivative_full, straighten_schur, Basis, Partition, SymF};
use crate::Result;

use super::theorems::kreweras_poly;

/// The combinatorial `nabla e_n`: the sum over all parking functions of all
/// Dyck paths of `q^{dinv} t^{area} s_{pides}`, straightened.
pub fn nabla_en(n: u32) -> Result<SymF> {
    if n > 7 {
        return Err(Error::BoundExceeded {
            what: "nabla_en n",
            got: n as i64,
            max: 7,
        });
    }
    if n == 0 {
        return Ok(SymF::one(Basis::S));
    }
    let mut terms: BTreeMap<Partition, BivarPoly> = BTreeMap::new();
    for d in enum_dyck(n as usize)? {
        let area = d.area();
        for pf in enum_pf(&d) {
            let stats = pf.statistics();
            if let Some((sign, lam)) = straighten_schur(stats.pides.parts()) {
                let c = BivarPoly::monomial(i64::from(sign), stats.dinv, area);
                let entry = terms.entry(lam).or_default();
                *entry += &c;
            }
        }
    }
    terms.retain(|_, c| !c.is_zero());
    let mut f = SymF::zero(Basis::S);
    for (l, c) in terms {
        f.add_term(l, c.into());
    }
    assert!(
        f.convert(Basis::E).has_polynomial_coeffs(),
        "nabla e_n must have a polynomial e-expansion"
    );
    Ok(f)
}

/// The Hilbert-series value `d^n/dp_1^n (nabla e_n)` at numeric `(q, t)`.
pub fn nabla_hilbert_at(n: u32, q: i64, t: i64) -> Result<BigInt> {
    let f = nabla_en(n)?;
    let h = p1_derivative_full(&f);
    let p = h
        .as_polynomial()
        .expect("Hilbert series of nabla e_n is polynomial")
        .clone();
    Ok(p.eval(&BigInt::from(q), &BigInt::from(t)))
}

/// The Kreweras relation: `P_n(1+q) = d^n/dp_1^n (nabla e_n at q=1, t->1+q)`.
pub fn kreweras_relation_check(n: u32) -> Result<bool> {
    let f = nabla_en(n)?;
    let h = p1_derivative_full(&f);
    let p = h
        .as_polynomial()
        .expect("Hilbert series of nabla e_n is polynomial")
        .clone();
    // q = 1, then rename t -> 1+q
    let at_q1 = p.subst(&BivarPoly::one(), &BivarPoly::t());
    let relabeled = at_q1.subst(&BivarPoly::zero(), &BivarPoly::one_plus_q());
    let expect = kreweras_poly(n)?.shift_q();
    Ok(relabeled == expect)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::BivarRat;

    #[test]
    fn nabla_one_is_e1() {
        let f = nabla_en(1).unwrap();
        assert!(f.equivalent(&SymF::gen(Basis::E, 1)));
    }

    #[test]
    fn nabla_two_hilbert_series() {
        // 1 + q + t
        let f = nabla_en(2).unwrap();
        let h = crate::symfunc::p1_derivative_full(&f);
        let expect =
            BivarRat::from(BivarPoly::one() + BivarPoly::q() + BivarPoly::t());
        assert_eq!(h, expect);
        assert_eq!(nabla_hilbert_at(2, 2, 1).unwrap(), BigInt::from(4));
    }

    #[test]
    fn connected_graph_sequence_prefix() {
        assert_eq!(nabla_hilbert_at(1, 2, 1).unwrap(), BigInt::from(1));
        assert_eq!(nabla_hilbert_at(2, 2, 1).unwrap(), BigInt::from(4));
        assert_eq!(nabla_hilbert_at(3, 2, 1).unwrap(), BigInt::from(38));
    }

    #[test]
    fn kreweras_relation_small() {
        for n in 1..=4u32 {
            assert!(kreweras_relation_check(n).unwrap(), "n={n}");
        }
    }
}
