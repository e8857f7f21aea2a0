use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::ring::BivarPoly;
use crate::symfunc::{Basis, Partition, SymF};
use crate::Result;

/// An e-basis expansion with polynomial coefficients:
/// `sum_lambda a_lambda(q[,t]) e_lambda`, stored exactly.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct EExpansion {
    terms: BTreeMap<Partition, BivarPoly>,
}

impl EExpansion {
    pub fn new() -> Self {
        EExpansion::default()
    }

    pub fn from_terms(terms: BTreeMap<Partition, BivarPoly>) -> Self {
        let terms = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        EExpansion { terms }
    }

    pub fn add_term(&mut self, lambda: Partition, c: BivarPoly) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(lambda) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let v = e.get() + &c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BivarPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> BivarPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The positivity flag: every coefficient lies in `N[q,t]`.
    pub fn is_positive(&self) -> bool {
        self.terms.values().all(|c| c.is_nonneg())
    }

    /// Sum of all coefficients (the total mass `sum_mu P_mu`).
    pub fn coefficient_mass(&self) -> BivarPoly {
        let mut acc = BivarPoly::zero();
        for c in self.terms.values() {
            acc += c;
        }
        acc
    }

    pub fn to_symf(&self) -> SymF {
        let mut f = SymF::zero(Basis::E);
        for (l, c) in &self.terms {
            f.add_term(l.clone(), c.clone().into());
        }
        f
    }
}

impl fmt::Display for EExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_symf())
    }
}

/// Extract the e-basis expansion of a symmetric function, requiring every
/// coefficient to be a polynomial.
pub fn e_expansion(f: &SymF) -> Result<EExpansion> {
    let e = f.convert(Basis::E);
    let mut out = EExpansion::new();
    for (l, c) in e.terms() {
        let p = c.as_polynomial().ok_or_else(|| {
            Error::RationalCoefficient(format!("coefficient of e{l} is {c}"))
        })?;
        out.add_term(l.clone(), p.clone());
    }
    Ok(out)
}

/// Convert to the e basis and substitute `q -> 1+q` in every coefficient.
pub fn shift_and_e_expand(f: &SymF) -> Result<EExpansion> {
    let e = e_expansion(f)?;
    let mut out = EExpansion::new();
    for (l, c) in e.terms() {
        out.add_term(l.clone(), c.shift_q());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::BivarRat;

    #[test]
    fn shift_example_s2_plus_q_s11() {
        // s_2 + q s_{11} -> e-basis e_1^2 + (q-1) e_2 -> shift e_1^2 + q e_2
        let mut f = SymF::zero(Basis::S);
        f.add_term(Partition::from(vec![2]), BivarRat::one());
        f.add_term(Partition::ones(2), BivarPoly::q().into());
        let ee = shift_and_e_expand(&f).unwrap();
        assert_eq!(ee.coeff(&Partition::ones(2)), BivarPoly::one());
        assert_eq!(ee.coeff(&Partition::single(2)), BivarPoly::q());
        assert!(ee.is_positive());
        assert_eq!(ee.to_string(), "q*e[2]+e[1,1]");
    }

    #[test]
    fn e2_is_fixed() {
        let e2 = SymF::gen(Basis::E, 2);
        let ee = shift_and_e_expand(&e2).unwrap();
        assert_eq!(ee.coeff(&Partition::single(2)), BivarPoly::one());
        assert_eq!(ee.num_terms(), 1);
        assert!(ee.is_positive());
    }

    #[test]
    fn rational_coefficients_rejected() {
        let mut f = SymF::zero(Basis::E);
        f.add_term(Partition::single(1), BivarRat::from_frac(1, 2));
        assert!(shift_and_e_expand(&f).is_err());
    }
}
