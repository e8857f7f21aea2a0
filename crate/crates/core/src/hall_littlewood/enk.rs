use crate::error::Error;
use crate::ring::{q_pochhammer, BivarPoly, BivarRat};
use crate::symfunc::{compositions_with_length, plethysm_eval, Alphabet, Basis, SymF};
use crate::Result;

use super::ops::{word, HLKind};

/// Which route computes `E_{n,k}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnkMethod {
    /// solve the triangular Pochhammer system for `e_n[X(1-z)/(1-q)]`
    Poch,
    /// sum `C_{a_1}...C_{a_k} 1` over compositions of `n` with `k` parts
    Comp,
    /// sum `B_{a_1}...B_{a_k} 1`, returning the twisted variant `Et_{n,k}`
    BWord,
}

impl EnkMethod {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "poch" => Ok(EnkMethod::Poch),
            "comp" => Ok(EnkMethod::Comp),
            "bword" => Ok(EnkMethod::BWord),
            _ => Err(Error::Parse(format!("unknown E_nk method {s:?}"))),
        }
    }
}

fn check_bounds(n: u32, k: u32) -> Result<()> {
    if n > 7 {
        return Err(Error::BoundExceeded {
            what: "E_nk n",
            got: n as i64,
            max: 7,
        });
    }
    if k < 1 || k > n {
        return Err(Error::BoundExceeded {
            what: "E_nk k",
            got: k as i64,
            max: n as i64,
        });
    }
    Ok(())
}

/// `E_{n,k}` for `poch`/`comp`; `bword` returns
/// `Et_{n,k} = (-1/q)^{n-k} omega E_{n,k}[X;1/q]` (a q-polynomial, asserted).
pub fn e_nk(n: u32, k: u32, method: EnkMethod) -> Result<SymF> {
    check_bounds(n, k)?;
    match method {
        EnkMethod::Poch => Ok(e_nk_poch(n)?.swap_remove(k as usize)),
        EnkMethod::Comp => e_nk_comp(n, k),
        EnkMethod::BWord => e_nk_bword(n, k),
    }
}

/// Solve `e_n[X(1-z)/(1-q)] = sum_k ((z;q)_k/(q;q)_k) E_{n,k}` for all `k` at
/// once; returns a vector indexed by `k` (entry 0 unused and asserted zero).
pub fn e_nk_poch(n: u32) -> Result<Vec<SymF>> {
    let en = SymF::gen(Basis::E, n);
    let lhs = match plethysm_eval(&en, &Alphabet::XTimesOneMinusZOverOneMinusQ)? {
        crate::symfunc::PlethResult::AuxPoly(v) => v,
        _ => unreachable!(),
    };
    let mut lhs: Vec<SymF> = lhs;
    lhs.resize(n as usize + 1, SymF::zero(Basis::P));
    // basis polynomials (z;q)_k / (q;q)_k as z-coefficient vectors
    let z_poch = |k: u32| -> Vec<BivarRat> {
        let mut coeffs = vec![BivarRat::one()];
        for i in 0..k {
            // multiply by (1 - z q^i)
            let qi = BivarRat::from(BivarPoly::monomial(1, i, 0));
            let mut next = vec![BivarRat::zero(); coeffs.len() + 1];
            for (j, c) in coeffs.iter().enumerate() {
                next[j] += c;
                let m = -&(c * &qi);
                next[j + 1] += &m;
            }
            coeffs = next;
        }
        let denom = BivarRat::from(q_pochhammer(k)).recip().expect("nonzero");
        coeffs.iter().map(|c| c * &denom).collect()
    };
    let mut out = vec![SymF::zero(Basis::P); n as usize + 1];
    for k in (1..=n).rev() {
        let basis = z_poch(k);
        let lead = basis[k as usize].clone();
        let coeff = lhs[k as usize].scale(&lead.recip().expect("nonzero leading"));
        for (j, b) in basis.iter().enumerate() {
            if !b.is_zero() {
                lhs[j] = lhs[j].sub(&coeff.scale(b));
            }
        }
        out[k as usize] = coeff;
    }
    // for n >= 1 nothing of z-degree 0 may remain
    for f in &lhs {
        assert!(f.is_zero(), "Pochhammer system left a nonzero remainder");
    }
    Ok(out)
}

fn e_nk_comp(n: u32, k: u32) -> Result<SymF> {
    let mut acc = SymF::zero(Basis::P);
    for alpha in compositions_with_length(n, k) {
        acc = acc.add(&word(HLKind::C, &alpha)?.convert(Basis::P));
    }
    Ok(acc)
}

/// `Et_{n,k} = sum_{l(alpha)=k} B_alpha 1`; asserted to be the exact q-power
/// twist of the Pochhammer route.
fn e_nk_bword(n: u32, k: u32) -> Result<SymF> {
    let mut acc = SymF::zero(Basis::E);
    for alpha in compositions_with_length(n, k) {
        acc = acc.add(&word(HLKind::B, &alpha)?.convert(Basis::E));
    }
    assert!(
        acc.has_polynomial_coeffs(),
        "B-word sums must be polynomial"
    );
    Ok(acc)
}

/// The exact twist `(-1/q)^{n-k} omega F[X;1/q]` relating the two variants;
/// the result of applying it to `E_{n,k}` must land back in polynomials.
pub fn enk_twist(f: &SymF, n: u32, k: u32) -> SymF {
    let inverted = f.map_coeffs(|c| c.invert_q());
    let sign = if (n - k).is_multiple_of(2) { 1 } else { -1 };
    let front = BivarRat::from(sign) / BivarRat::from(BivarPoly::q()).pow(n - k);
    inverted.omega().scale(&front)
}

/// `sum_k t^{n-k} Et_{n,k}`: the bigraded aggregate of the operator words.
/// Exact bivariate polynomial coefficients, asserted.
pub fn dh_poly(n: u32) -> Result<SymF> {
    if n > 7 {
        return Err(Error::BoundExceeded {
            what: "dh_poly n",
            got: n as i64,
            max: 7,
        });
    }
    let mut acc = SymF::zero(Basis::E);
    for k in 1..=n {
        let t_pow = BivarRat::from(BivarPoly::monomial(1, 0, n - k));
        acc = acc.add(&e_nk(n, k, EnkMethod::BWord)?.scale(&t_pow));
    }
    assert!(acc.has_polynomial_coeffs());
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::Partition;

    #[test]
    fn e11_is_e1() {
        for m in [EnkMethod::Poch, EnkMethod::Comp] {
            let r = e_nk(1, 1, m).unwrap();
            assert!(r.equivalent(&SymF::gen(Basis::E, 1)), "{m:?}");
        }
        let r = e_nk(1, 1, EnkMethod::BWord).unwrap();
        assert!(r.equivalent(&SymF::gen(Basis::E, 1)));
    }

    #[test]
    fn routes_agree_small() {
        for n in 1..=4u32 {
            for k in 1..=n {
                let poch = e_nk(n, k, EnkMethod::Poch).unwrap();
                let comp = e_nk(n, k, EnkMethod::Comp).unwrap();
                assert!(poch.equivalent(&comp), "poch/comp n={n} k={k}");
                let bword = e_nk(n, k, EnkMethod::BWord).unwrap();
                let twist = enk_twist(&poch, n, k);
                assert!(
                    bword.equivalent(&twist),
                    "bword/twist n={n} k={k}: {bword} vs {}",
                    twist.convert(Basis::E)
                );
                // the twist of E_nk is polynomial
                assert!(twist.convert(Basis::E).has_polynomial_coeffs());
            }
        }
    }

    #[test]
    fn sum_over_k_is_en() {
        for n in 1..=4u32 {
            let mut acc = SymF::zero(Basis::P);
            for k in 1..=n {
                acc = acc.add(&e_nk(n, k, EnkMethod::Poch).unwrap().convert(Basis::P));
            }
            assert!(acc.equivalent(&SymF::gen(Basis::E, n)), "n={n}");
        }
    }

    #[test]
    fn dh2_golden() {
        // e_1^2 + (q+t-1) e_2
        let r = dh_poly(2).unwrap().convert(Basis::E);
        assert_eq!(r.coeff(&Partition::ones(2)), BivarRat::one());
        let c = BivarPoly::q() + BivarPoly::t() - BivarPoly::one();
        assert_eq!(r.coeff(&Partition::single(2)), BivarRat::from(c));
    }
}
