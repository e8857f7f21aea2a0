//! Plethystic evaluation. The alphabet grammar is closed: evaluation is the
//! unique ring homomorphism determined on power sums by
//! `p_k[A+B] = p_k[A] + p_k[B]`, `p_k[gamma y] = gamma(q^k,t^k) y^k`,
//! `p_k[X/(1-q)] = p_k/(1-q^k)`, and `p_k[gamma X] = gamma(q^k,t^k) p_k`.

use crate::ring::{BivarPoly, BivarRat};
use crate::Result;

use super::symf::{Basis, SymF};
use super::Partition;

/// The supported plethystic alphabets.
#[derive(Clone, Debug)]
pub enum Alphabet {
    /// `X` (identity)
    X,
    /// `X/(1-q)`
    XOverOneMinusQ,
    /// `gamma * X` for a scalar rational function `gamma`
    XTimes(BivarRat),
    /// `X(1-z)` with `z` a formal series variable; result graded by z-power
    XTimesOneMinusZ,
    /// `X(1-z)/(1-q)`
    XTimesOneMinusZOverOneMinusQ,
    /// `X + gamma*y` with `y` an auxiliary variable; result graded by y-power
    XPlusGammaY(BivarRat),
    /// `X - gamma*y`
    XMinusGammaY(BivarRat),
    /// the pure alphabet `1/(1-q)`
    OneOverOneMinusQ,
    /// a pure scalar alphabet `gamma`
    Scalar(BivarRat),
}

/// Result of a plethystic evaluation: either a plain symmetric function, a
/// polynomial in one auxiliary variable with symmetric-function coefficients,
/// or a scalar.
#[derive(Clone, Debug)]
pub enum PlethResult {
    Sym(SymF),
    /// coefficients of `y^0, y^1, ...` (or `z^j` for the z-alphabets)
    AuxPoly(Vec<SymF>),
    Scalar(BivarRat),
}

impl PlethResult {
    pub fn into_sym(self) -> SymF {
        match self {
            PlethResult::Sym(f) => f,
            _ => panic!("plethysm result is not a plain symmetric function"),
        }
    }
}

/// Evaluate `F` at the given alphabet.
pub fn plethysm_eval(f: &SymF, alphabet: &Alphabet) -> Result<PlethResult> {
    match alphabet {
        Alphabet::X => Ok(PlethResult::Sym(f.clone())),
        Alphabet::XOverOneMinusQ => {
            let gamma = BivarRat::new(BivarPoly::one(), BivarPoly::one() - BivarPoly::q())?;
            Ok(PlethResult::Sym(eval_x_times(f, &gamma)))
        }
        Alphabet::XTimes(gamma) => Ok(PlethResult::Sym(eval_x_times(f, gamma))),
        Alphabet::XTimesOneMinusZ => Ok(PlethResult::AuxPoly(eval_x_one_minus_z(f, false)?)),
        Alphabet::XTimesOneMinusZOverOneMinusQ => {
            Ok(PlethResult::AuxPoly(eval_x_one_minus_z(f, true)?))
        }
        Alphabet::XPlusGammaY(gamma) => Ok(PlethResult::AuxPoly(eval_x_pm_gamma_y(f, gamma, false))),
        Alphabet::XMinusGammaY(gamma) => Ok(PlethResult::AuxPoly(eval_x_pm_gamma_y(f, gamma, true))),
        Alphabet::OneOverOneMinusQ => {
            let gamma = BivarRat::new(BivarPoly::one(), BivarPoly::one() - BivarPoly::q())?;
            Ok(PlethResult::Scalar(eval_scalar(f, &gamma)))
        }
        Alphabet::Scalar(gamma) => Ok(PlethResult::Scalar(eval_scalar(f, gamma))),
    }
}

/// `F[gamma X]`: each `p_k` picks up the factor `gamma(q^k, t^k)`.
pub fn eval_x_times(f: &SymF, gamma: &BivarRat) -> SymF {
    let fp = f.convert(Basis::P);
    let mut out = SymF::zero(Basis::P);
    for (l, c) in fp.terms() {
        let mut factor = c.clone();
        for &part in l.parts() {
            factor = &factor * &gamma.adams(part);
        }
        out.add_term(l.clone(), factor);
    }
    out
}

/// `F[gamma]` for a pure scalar alphabet: `p_k -> gamma(q^k, t^k)`.
pub fn eval_scalar(f: &SymF, gamma: &BivarRat) -> BivarRat {
    let fp = f.convert(Basis::P);
    let mut out = BivarRat::zero();
    for (l, c) in fp.terms() {
        let mut factor = c.clone();
        for &part in l.parts() {
            factor = &factor * &gamma.adams(part);
        }
        out += &factor;
    }
    out
}

/// `F[X(1-z)]` (optionally divided by `1-q`): z-graded coefficients.
fn eval_x_one_minus_z(f: &SymF, over_one_minus_q: bool) -> Result<Vec<SymF>> {
    let fp = f.convert(Basis::P);
    let deg = fp.max_degree() as usize;
    let mut out = vec![SymF::zero(Basis::P); deg + 1];
    for (l, c) in fp.terms() {
        let mut base = c.clone();
        if over_one_minus_q {
            for &part in l.parts() {
                let denom = BivarPoly::one() - BivarPoly::monomial(1, part, 0);
                base = &base * &BivarRat::new(BivarPoly::one(), denom)?;
            }
        }
        // expand prod_i (1 - z^{l_i}) into z-degrees
        let mut zpoly: Vec<BivarRat> = vec![BivarRat::zero(); l.size() as usize + 1];
        zpoly[0] = BivarRat::one();
        for &part in l.parts() {
            let mut next = vec![BivarRat::zero(); zpoly.len()];
            for (j, v) in zpoly.iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                next[j] += v;
                let hi = j + part as usize;
                if hi < next.len() {
                    let neg = -v;
                    next[hi] += &neg;
                }
            }
            zpoly = next;
        }
        for (j, v) in zpoly.into_iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            if j >= out.len() {
                out.resize(j + 1, SymF::zero(Basis::P));
            }
            out[j].add_term(l.clone(), &base * &v);
        }
    }
    Ok(out)
}

/// `F[X +/- gamma*y]`: y-graded coefficients. Each part either stays on `X`
/// or moves to the `gamma*y` monomial.
fn eval_x_pm_gamma_y(f: &SymF, gamma: &BivarRat, minus: bool) -> Vec<SymF> {
    let fp = f.convert(Basis::P);
    let deg = fp.max_degree() as usize;
    let mut out = vec![SymF::zero(Basis::P); deg + 1];
    for (l, c) in fp.terms() {
        let parts = l.parts();
        let m = parts.len();
        // iterate over subsets of positions to move onto y
        for mask in 0u32..(1 << m) {
            let mut coeff = c.clone();
            let mut stay: Vec<u32> = Vec::new();
            let mut ypow = 0u32;
            for (i, &part) in parts.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    let mut g = gamma.adams(part);
                    if minus {
                        g = -&g;
                    }
                    coeff = &coeff * &g;
                    ypow += part;
                } else {
                    stay.push(part);
                }
            }
            let lam = Partition::from_unsorted(stay).expect("positive parts");
            out[ypow as usize].add_term(lam, coeff);
        }
    }
    while out.len() > 1 && out.last().map(|f| f.is_zero()).unwrap_or(false) {
        out.pop();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::q_pochhammer;

    #[test]
    fn identity_alphabet() {
        let f = SymF::basis_element(Basis::S, Partition::from(vec![2, 1]));
        match plethysm_eval(&f, &Alphabet::X).unwrap() {
            PlethResult::Sym(g) => assert_eq!(g, f),
            _ => panic!(),
        }
    }

    #[test]
    fn p2_at_x_over_one_minus_q() {
        // p_2 -> p_2/(1-q^2)
        let p2 = SymF::gen(Basis::P, 2);
        let r = plethysm_eval(&p2, &Alphabet::XOverOneMinusQ).unwrap().into_sym();
        let expect = BivarRat::new(
            BivarPoly::one(),
            BivarPoly::one() - BivarPoly::monomial(1, 2, 0),
        )
        .unwrap();
        assert_eq!(r.coeff(&Partition::single(2)), expect);
        assert_eq!(r.num_terms(), 1);
    }

    #[test]
    fn e1_at_x_plus_gamma_y() {
        // e_1[X + (q-1)y] = e_1 + (q-1) y
        let e1 = SymF::gen(Basis::E, 1);
        let gamma = BivarRat::from(BivarPoly::q_minus_one());
        let r = match plethysm_eval(&e1, &Alphabet::XPlusGammaY(gamma.clone())).unwrap() {
            PlethResult::AuxPoly(v) => v,
            _ => panic!(),
        };
        assert_eq!(r.len(), 2);
        assert!(r[0].equivalent(&SymF::gen(Basis::E, 1)));
        assert_eq!(r[1].coeff(&Partition::empty()), gamma);
    }

    #[test]
    fn pochhammer_h2_at_x_over_one_minus_q() {
        // (q;q)_2 h_2[X/(1-q)] = h_2 + q e_2
        let h2 = SymF::gen(Basis::H, 2);
        let r = plethysm_eval(&h2, &Alphabet::XOverOneMinusQ)
            .unwrap()
            .into_sym()
            .scale(&BivarRat::from(q_pochhammer(2)));
        let expect = SymF::gen(Basis::H, 2).add(
            &SymF::gen(Basis::E, 2)
                .convert(Basis::H)
                .scale(&BivarRat::from(BivarPoly::q())),
        );
        assert!(r.equivalent(&expect));
        // and the result is polynomial in the e basis
        assert!(r.convert(Basis::E).has_polynomial_coeffs());
    }

    #[test]
    fn plethysm_at_x_is_identity_property() {
        for lam in super::super::partitions(5) {
            let f = SymF::basis_element(Basis::M, lam);
            let r = plethysm_eval(&f, &Alphabet::X).unwrap().into_sym();
            assert!(r.equivalent(&f));
        }
    }
}
