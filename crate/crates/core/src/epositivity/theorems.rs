use crate::dyck::{path_dinv, DyckPath};
use crate::error::Error;
use crate::llt::llt_classical;
use crate::macdonald::single_row_llt;
use crate::ring::{q_binomial, q_pochhammer, BivarPoly, BivarRat};
use crate::symfunc::{Basis, SymF};
use crate::Result;

use super::shift_and_e_expand;

/// Verify the zero-area recursion
/// `L_n = sum_{k=1}^n e_k (-1)^{k-1} (q;q)_{k-1} [n-1 choose k-1]_q L_{n-k}`
/// where `L_m = (q;q)_m h_m[X/(1-q)]`, exactly.
pub fn staircase_recursion_check(n: u32) -> Result<bool> {
    if n > 9 {
        return Err(Error::BoundExceeded {
            what: "staircase recursion n",
            got: n as i64,
            max: 9,
        });
    }
    if n < 1 {
        return Ok(true);
    }
    let lhs = single_row_llt(n).convert(Basis::P);
    let mut rhs = SymF::zero(Basis::P);
    for k in 1..=n {
        let sign = if k % 2 == 1 { 1 } else { -1 };
        let coeff = q_pochhammer(k - 1).mul_scalar(&sign.into()) * q_binomial(n - 1, k - 1);
        let term = SymF::gen(Basis::E, k)
            .convert(Basis::P)
            .mul(&single_row_llt(n - k).convert(Basis::P))
            .scale(&BivarRat::from(coeff));
        rhs = rhs.add(&term);
    }
    Ok(lhs.equivalent(&rhs))
}

/// The mass identity for a path's shifted LLT: the sum of all e-expansion
/// coefficients equals `(1+q)^{dinv(D)}`.
pub fn dinv_mass_check(d: &DyckPath) -> Result<bool> {
    if d.n() > 7 {
        return Err(Error::BoundExceeded {
            what: "dinv mass check n",
            got: d.n() as i64,
            max: 7,
        });
    }
    let ee = shift_and_e_expand(&llt_classical(d)?)?;
    let mass = ee.coefficient_mass();
    Ok(mass == BivarPoly::one_plus_q().pow(path_dinv(d)))
}

/// The Kreweras polynomials:
/// `P_{n+1} = sum_{i=0}^n C(n,i) [i+1]_q P_i P_{n-i}`, `P_0 = 1`.
pub fn kreweras_poly(n: u32) -> Result<BivarPoly> {
    if n > 12 {
        return Err(Error::BoundExceeded {
            what: "kreweras n",
            got: n as i64,
            max: 12,
        });
    }
    let mut table: Vec<BivarPoly> = vec![BivarPoly::one()];
    for m in 0..n {
        // binomials C(m, i)
        let mut binom = num_bigint::BigInt::from(1);
        let mut next = BivarPoly::zero();
        for i in 0..=m {
            let term = crate::ring::q_int(i + 1) * (&table[i as usize] * &table[(m - i) as usize]);
            next += &term.mul_scalar(&binom);
            // C(m, i+1) = C(m, i) * (m - i) / (i + 1)
            binom = binom * (m - i) / (i + 1);
        }
        table.push(next);
    }
    Ok(table.swap_remove(n as usize))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::q_int;

    #[test]
    fn staircase_recursion_base_cases() {
        // n = 2: e_1^2 + (q-1) e_2 on both sides
        assert!(staircase_recursion_check(2).unwrap());
        let l2 = single_row_llt(2);
        let mut expect = SymF::zero(Basis::E);
        expect.add_term(crate::symfunc::Partition::ones(2), BivarRat::one());
        expect.add_term(
            crate::symfunc::Partition::single(2),
            BivarPoly::q_minus_one().into(),
        );
        assert!(l2.equivalent(&expect));
        // L_1 = e_1
        assert!(single_row_llt(1).equivalent(&SymF::gen(Basis::E, 1)));
    }

    #[test]
    fn staircase_recursion_middle() {
        for n in 2..=6u32 {
            assert!(staircase_recursion_check(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn mass_check_examples() {
        // worked example: (1+q)^5
        let d = DyckPath::new(vec![0, 1, 2, 1, 2, 2]).unwrap();
        assert!(dinv_mass_check(&d).unwrap());
        // zero-area: (1+q)^{n(n-1)/2}
        assert!(dinv_mass_check(&DyckPath::zero_area(4)).unwrap());
        // n = 1
        assert!(dinv_mass_check(&DyckPath::new(vec![0]).unwrap()).unwrap());
    }

    #[test]
    fn kreweras_small_values() {
        assert_eq!(kreweras_poly(0).unwrap(), BivarPoly::one());
        assert_eq!(kreweras_poly(1).unwrap(), BivarPoly::one());
        // P_2 = 1 + [2]_q = 2 + q
        assert_eq!(
            kreweras_poly(2).unwrap(),
            BivarPoly::constant(2) + BivarPoly::q()
        );
        // P_3 = C(2,0)[1] P_0 P_2 + C(2,1)[2] P_1 P_1 + C(2,2)[3] P_2 P_0
        let p2 = BivarPoly::constant(2) + BivarPoly::q();
        let expect = &p2 + &(q_int(2).mul_scalar(&2.into())) + q_int(3) * p2.clone();
        assert_eq!(kreweras_poly(3).unwrap(), expect);
    }
}
