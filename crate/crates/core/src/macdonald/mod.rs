//! The `t = 1` specialization of the modified Macdonald polynomials:
//! `htilde_t1(mu) = prod_i (q;q)_{mu_i} h_{mu_i}[X/(1-q)]`, its e-basis
//! positivity certificate, and the forgotten-basis plethysm formulas that
//! prove it.

use crate::error::Error;
use crate::ring::{q_int, q_pochhammer, BivarPoly, BivarRat};
use crate::symfunc::{
    distinct_rearrangements, eval_x_times, partitions, Basis, Composition, Partition,
    SymF,
};
use crate::Result;

/// The distinct rearrangements of a partition's parts.
#[derive(Clone, Debug)]
pub struct RearrangementSet {
    pub mu: Partition,
    pub elements: Vec<Composition>,
}

impl RearrangementSet {
    pub fn new(mu: Partition) -> Self {
        let elements = distinct_rearrangements(&mu);
        RearrangementSet { mu, elements }
    }
}

fn check_mu(mu: &Partition, what: &'static str) -> Result<()> {
    if mu.size() > 9 {
        return Err(Error::BoundExceeded {
            what,
            got: mu.size() as i64,
            max: 9,
        });
    }
    Ok(())
}

/// `prod_i (q;q)_{mu_i} h_{mu_i}[X/(1-q)]`: every denominator cancels
/// (asserted) and the result is returned in the e basis.
pub fn htilde_t1(mu: &Partition) -> Result<SymF> {
    check_mu(mu, "htilde_t1 |mu|")?;
    let over = BivarRat::new(BivarPoly::one(), BivarPoly::one() - BivarPoly::q())?;
    let mut acc = SymF::one(Basis::P);
    for &part in mu.parts() {
        let factor = eval_x_times(&SymF::gen(Basis::H, part), &over)
            .scale(&BivarRat::from(q_pochhammer(part)));
        acc = acc.mul(&factor);
    }
    let e = acc.convert(Basis::E);
    assert!(
        e.has_polynomial_coeffs(),
        "t=1 specialization must clear every denominator"
    );
    Ok(e)
}

/// `f_mu[1/(1-q)]` via the rearrangement formula
/// `(-1)^{|mu|-l} sum_{a in DR(mu)} prod_i 1/(1 - q^{a_i + ... + a_l})`
/// (suffix sums), as an exact reduced rational function.
pub fn forgotten_pleth(mu: &Partition) -> Result<BivarRat> {
    check_mu(mu, "forgotten_pleth |mu|")?;
    let mut acc = BivarRat::zero();
    for a in distinct_rearrangements(mu) {
        let mut term = BivarRat::one();
        let mut suffix = 0u32;
        for &part in a.parts().iter().rev() {
            suffix += part;
            let denom = BivarPoly::one() - BivarPoly::monomial(1, suffix, 0);
            term = &term * &BivarRat::new(BivarPoly::one(), denom)?;
        }
        acc += &term;
    }
    if mu.eps() < 0 {
        acc = -acc;
    }
    Ok(acc)
}

/// The positivity certificate `Pi_mu(q) = sum_{a in DR(mu)} prod_{i in S(a)}
/// [i]_q` where `S(a)` removes the prefix sums of `a` from `{1..m}`; in
/// `N[q]` by construction.
pub fn pi_mu(mu: &Partition) -> Result<BivarPoly> {
    check_mu(mu, "pi_mu |mu|")?;
    let m = mu.size();
    let mut acc = BivarPoly::zero();
    for a in distinct_rearrangements(mu) {
        let mut prefix_sums = Vec::with_capacity(a.len());
        let mut run = 0u32;
        for &part in a.parts() {
            run += part;
            prefix_sums.push(run);
        }
        let mut term = BivarPoly::one();
        for i in 1..=m {
            if !prefix_sums.contains(&i) {
                term = term * q_int(i);
            }
        }
        acc += &term;
    }
    Ok(acc)
}

/// Check, for every `mu` of `m`, the certificate identity
/// `(q;q)_m f_mu[1/(1-q)] = Pi_mu(q) (q-1)^{m - l(mu)}` and the resulting
/// positivity of the shifted `htilde_t1(mu)` e-expansion.
pub fn forgotten_certificate_check(m: u32) -> Result<bool> {
    if m > 8 {
        return Err(Error::BoundExceeded {
            what: "certificate check m",
            got: m as i64,
            max: 8,
        });
    }
    let poch = BivarRat::from(q_pochhammer(m));
    for mu in partitions(m) {
        let lhs = &poch * &forgotten_pleth(&mu)?;
        let rhs = pi_mu(&mu)? * BivarPoly::q_minus_one().pow(m - mu.len() as u32);
        if lhs != BivarRat::from(rhs) {
            return Ok(false);
        }
        // the corollary: the shifted certificate lands in N[q]
        let Some(cert) = lhs.as_polynomial() else {
            return Ok(false);
        };
        if !cert.shift_q().is_nonneg() {
            return Ok(false);
        }
        let shifted = crate::epositivity::shift_and_e_expand(&htilde_t1(&mu)?)?;
        if !shifted.is_positive() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The single-row specialization `(q;q)_n h_n[X/(1-q)]`: the zero-area-path
/// LLT that drives the no-area recursion.
pub fn single_row_llt(n: u32) -> SymF {
    htilde_t1(&if n == 0 {
        Partition::empty()
    } else {
        Partition::single(n)
    })
    .expect("n <= 9")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::eval_scalar;

    #[test]
    fn ones_gives_e1_power() {
        for n in 1..=4usize {
            let r = htilde_t1(&Partition::ones(n)).unwrap();
            let expect = SymF::gen(Basis::E, 1).pow(n as u32);
            assert!(r.equivalent(&expect));
        }
    }

    #[test]
    fn two_one_factors() {
        // (h_2 + q e_2) * e_1
        let r = htilde_t1(&Partition::from(vec![2, 1])).unwrap();
        let h2 = SymF::gen(Basis::H, 2).convert(Basis::P);
        let e2 = SymF::gen(Basis::E, 2)
            .convert(Basis::P)
            .scale(&BivarRat::from(BivarPoly::q()));
        let expect = h2.add(&e2).mul(&SymF::gen(Basis::P, 1));
        assert!(r.equivalent(&expect));
    }

    #[test]
    fn forgotten_pleth_examples() {
        // mu = (m): (-1)^{m-1}/(1 - q^m)
        for m in 1..=4u32 {
            let r = forgotten_pleth(&Partition::single(m)).unwrap();
            let sign = if m % 2 == 1 { 1 } else { -1 };
            let expect = BivarRat::new(
                BivarPoly::constant(sign),
                BivarPoly::one() - BivarPoly::monomial(1, m, 0),
            )
            .unwrap();
            assert_eq!(r, expect, "m={m}");
        }
        // mu = (1,1): 1/((1-q)(1-q^2))
        let r = forgotten_pleth(&Partition::ones(2)).unwrap();
        let expect = BivarRat::new(
            BivarPoly::one(),
            (BivarPoly::one() - BivarPoly::q())
                * (BivarPoly::one() - BivarPoly::monomial(1, 2, 0)),
        )
        .unwrap();
        assert_eq!(r, expect);
    }

    #[test]
    fn forgotten_pleth_matches_dual_expansion() {
        // e-basis coefficients of h_m[X/(1-q)] are f_mu[1/(1-q)]
        let over = BivarRat::new(BivarPoly::one(), BivarPoly::one() - BivarPoly::q()).unwrap();
        for m in 1..=5u32 {
            let hm = eval_x_times(&SymF::gen(Basis::H, m), &over).convert(Basis::E);
            for mu in partitions(m) {
                assert_eq!(
                    hm.coeff(&mu),
                    forgotten_pleth(&mu).unwrap(),
                    "m={m} mu={mu}"
                );
            }
        }
    }

    #[test]
    fn pi_mu_examples() {
        // mu = (m): [1][2]...[m-1]
        let r = pi_mu(&Partition::single(4)).unwrap();
        let expect = q_int(1) * q_int(2) * q_int(3);
        assert_eq!(r, expect);
        // mu = (1^m): 1
        assert_eq!(pi_mu(&Partition::ones(4)).unwrap(), BivarPoly::one());
        // mu = (2,1): [1] + [2] = 2 + q
        let r = pi_mu(&Partition::from(vec![2, 1])).unwrap();
        assert_eq!(r, BivarPoly::constant(2) + BivarPoly::q());
    }

    #[test]
    fn certificate_small() {
        for m in 1..=5u32 {
            assert!(forgotten_certificate_check(m).unwrap(), "m={m}");
        }
    }

    #[test]
    fn forgotten_single_monomial_value() {
        // f_mu at the single monomial q equals (-1)^{m-l} |DR(mu)| q^m
        for m in 1..=6u32 {
            for mu in partitions(m) {
                let f = SymF::basis_element(Basis::F, mu.clone());
                let got = eval_scalar(&f, &BivarRat::from(BivarPoly::q()));
                let count = distinct_rearrangements(&mu).len() as i64;
                let sign = i64::from(mu.eps());
                let expect = BivarRat::from(BivarPoly::monomial(sign * count, m, 0));
                assert_eq!(got, expect, "mu={mu}");
            }
        }
    }

    #[test]
    fn rearrangement_set_sizes() {
        let rs = RearrangementSet::new(Partition::from(vec![2, 1, 1]));
        assert_eq!(rs.elements.len(), 3);
    }
}
