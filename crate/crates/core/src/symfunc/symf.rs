use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::ring::{BivarPoly, BivarRat};
use crate::Result;

use super::transition;
use super::Partition;

/// The six classical bases of the ring of symmetric functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    /// elementary
    E,
    /// complete homogeneous
    H,
    /// power sum
    P,
    /// monomial
    M,
    /// Schur
    S,
    /// forgotten (omega image of the monomial basis)
    F,
}

impl Basis {
    pub fn letter(self) -> char {
        match self {
            Basis::E => 'e',
            Basis::H => 'h',
            Basis::P => 'p',
            Basis::M => 'm',
            Basis::S => 's',
            Basis::F => 'f',
        }
    }

    pub fn parse(s: &str) -> Result<Basis> {
        match s {
            "e" => Ok(Basis::E),
            "h" => Ok(Basis::H),
            "p" => Ok(Basis::P),
            "m" => Ok(Basis::M),
            "s" => Ok(Basis::S),
            "f" => Ok(Basis::F),
            _ => Err(Error::Parse(format!("unknown basis {s:?}"))),
        }
    }

    /// Bases in which multiplication is concatenation of index partitions.
    pub fn is_multiplicative(self) -> bool {
        matches!(self, Basis::E | Basis::H | Basis::P)
    }
}

/// A symmetric function: a basis tag plus a finite map from partitions to
/// rational-function coefficients. No zero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymF {
    basis: Basis,
    terms: BTreeMap<Partition, BivarRat>,
}

impl SymF {
    pub fn zero(basis: Basis) -> Self {
        SymF {
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// The constant 1 (empty partition).
    pub fn one(basis: Basis) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Partition::empty(), BivarRat::one());
        SymF { basis, terms }
    }

    /// The degree-`n` generator of the basis: `e_n`, `h_n`, `p_n`,
    /// `m_(n) = p_n`, `s_(n) = h_n`, `f_(n)`. For `n = 0` this is 1.
    pub fn gen(basis: Basis, n: u32) -> Self {
        if n == 0 {
            return SymF::one(basis);
        }
        SymF::basis_element(basis, Partition::single(n))
    }

    /// The basis element indexed by `lambda` with coefficient 1.
    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, BivarRat::one());
        SymF { basis, terms }
    }

    pub fn from_terms(basis: Basis, terms: BTreeMap<Partition, BivarRat>) -> Self {
        let terms = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        SymF { basis, terms }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BivarRat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, lambda: &Partition) -> BivarRat {
        self.terms.get(lambda).cloned().unwrap_or_else(BivarRat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, lambda: Partition, c: BivarRat) {
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

    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(|l| l.size()).max().unwrap_or(0)
    }

    /// True when every coefficient lies in `Z[q,t]`.
    pub fn has_polynomial_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.is_polynomial())
    }

    pub fn scale(&self, c: &BivarRat) -> SymF {
        if c.is_zero() {
            return SymF::zero(self.basis);
        }
        let terms = self
            .terms
            .iter()
            .map(|(l, v)| (l.clone(), v * c))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        SymF {
            basis: self.basis,
            terms,
        }
    }

    pub fn scale_poly(&self, p: &BivarPoly) -> SymF {
        self.scale(&BivarRat::from(p.clone()))
    }

    pub fn add(&self, other: &SymF) -> SymF {
        assert_eq!(
            self.basis, other.basis,
            "cannot add symmetric functions in different bases"
        );
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SymF) -> SymF {
        self.add(&other.negate())
    }

    pub fn negate(&self) -> SymF {
        let terms = self
            .terms
            .iter()
            .map(|(l, c)| (l.clone(), -c))
            .collect();
        SymF {
            basis: self.basis,
            terms,
        }
    }

    /// Product. In a multiplicative basis this is index concatenation; other
    /// bases route through the power sums.
    pub fn mul(&self, other: &SymF) -> SymF {
        assert_eq!(
            self.basis, other.basis,
            "cannot multiply symmetric functions in different bases"
        );
        if self.basis.is_multiplicative() {
            let mut out = SymF::zero(self.basis);
            for (l1, c1) in &self.terms {
                for (l2, c2) in &other.terms {
                    out.add_term(l1.union(l2), c1 * c2);
                }
            }
            out
        } else {
            let a = self.convert(Basis::P);
            let b = other.convert(Basis::P);
            a.mul(&b).convert(self.basis)
        }
    }

    pub fn pow(&self, e: u32) -> SymF {
        let mut acc = SymF::one(self.basis);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact change of basis. Round-trips are exact identities.
    pub fn convert(&self, target: Basis) -> SymF {
        if self.basis == target {
            return self.clone();
        }
        let mut out = SymF::zero(target);
        // work degree by degree
        let mut by_degree: BTreeMap<u32, Vec<(&Partition, &BivarRat)>> = BTreeMap::new();
        for (l, c) in &self.terms {
            by_degree.entry(l.size()).or_default().push((l, c));
        }
        for (d, terms) in by_degree {
            let parts = transition::partitions_of(d);
            let index = transition::partition_index(d);
            // vector in the source basis
            let mut v = vec![BivarRat::zero(); parts.len()];
            for (l, c) in terms {
                v[index[l]] = (*c).clone();
            }
            let w = if self.basis == Basis::P {
                v
            } else {
                transition::apply(&transition::to_p_matrix(self.basis, d), &v)
            };
            let u = if target == Basis::P {
                w
            } else {
                transition::apply(&transition::from_p_matrix(target, d), &w)
            };
            for (i, c) in u.into_iter().enumerate() {
                out.add_term(parts[i].clone(), c);
            }
        }
        out
    }

    /// Value equality across bases (converts both to the power-sum basis).
    pub fn equivalent(&self, other: &SymF) -> bool {
        if self.basis == other.basis {
            return self == other;
        }
        self.convert(Basis::P) == other.convert(Basis::P)
    }

    /// Map every coefficient (dropping terms that become zero).
    pub fn map_coeffs<Fm: Fn(&BivarRat) -> BivarRat>(&self, f: Fm) -> SymF {
        let terms = self
            .terms
            .iter()
            .map(|(l, c)| (l.clone(), f(c)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        SymF {
            basis: self.basis,
            terms,
        }
    }

    /// The involution omega: swaps `e <-> h`, transposes Schur indices,
    /// multiplies `p_lambda` by its sign, and swaps `m <-> f`.
    pub fn omega(&self) -> SymF {
        match self.basis {
            Basis::E => SymF {
                basis: Basis::H,
                terms: self.terms.clone(),
            },
            Basis::H => SymF {
                basis: Basis::E,
                terms: self.terms.clone(),
            },
            Basis::M => SymF {
                basis: Basis::F,
                terms: self.terms.clone(),
            },
            Basis::F => SymF {
                basis: Basis::M,
                terms: self.terms.clone(),
            },
            Basis::S => {
                let terms = self
                    .terms
                    .iter()
                    .map(|(l, c)| (l.conjugate(), c.clone()))
                    .collect();
                SymF {
                    basis: Basis::S,
                    terms,
                }
            }
            Basis::P => {
                let terms = self
                    .terms
                    .iter()
                    .map(|(l, c)| {
                        let c = if l.eps() < 0 { -c } else { c.clone() };
                        (l.clone(), c)
                    })
                    .collect();
                SymF {
                    basis: Basis::P,
                    terms,
                }
            }
        }
    }

    /// Substitute `q -> 1+q` in every coefficient.
    pub fn shift_q(&self) -> SymF {
        self.map_coeffs(|c| c.shift_q())
    }
}

impl fmt::Display for SymF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let letter = self.basis.letter();
        let mut first = true;
        for (l, c) in &self.terms {
            let cs = c.to_string();
            let body = if l.is_empty() {
                cs
            } else {
                let idx: Vec<String> = l.parts().iter().map(|p| p.to_string()).collect();
                let base = format!("{letter}[{}]", idx.join(","));
                if c.is_one() {
                    base
                } else if cs == "-1" {
                    format!("-{base}")
                } else if needs_parens(&cs) {
                    format!("({cs})*{base}")
                } else {
                    format!("{cs}*{base}")
                }
            };
            if first {
                write!(f, "{body}")?;
                first = false;
            } else if body.starts_with('-') {
                write!(f, "{body}")?;
            } else {
                write!(f, "+{body}")?;
            }
        }
        Ok(())
    }
}

/// A coefficient needs parentheses when it is a sum or a quotient.
pub(crate) fn needs_parens(s: &str) -> bool {
    s.contains('/') || s[1..].contains('+') || s[1..].contains('-')
}
