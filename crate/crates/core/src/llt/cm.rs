use std::collections::BTreeMap;

use crate::dyck::MarkedPath;
use crate::ring::{BivarPoly, BivarRat};
use crate::symfunc::{perp, Basis, PerpKind, SymF};

use super::word::encode_word;

/// An element of the operator algebra's carrier space: a polynomial in the
/// active variables `y_1..y_k` whose coefficients are symmetric functions
/// with coefficients in the `q` fraction field. Coefficients are plain
/// polynomials in `q` after every complete operator step; the intermediate
/// divided differences never divide at all, and the one genuine division
/// (by `q-1` in the bracket) is asserted exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YSymF {
    k: usize,
    /// y-exponent vector (length k) -> symmetric function (power-sum basis)
    terms: BTreeMap<Vec<u32>, SymF>,
}

impl YSymF {
    /// The constant 1 in zero variables.
    pub fn one() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Vec::new(), SymF::one(Basis::P));
        YSymF { k: 0, terms }
    }

    pub fn from_sym(f: &SymF) -> Self {
        let mut terms = BTreeMap::new();
        let fp = f.convert(Basis::P);
        if !fp.is_zero() {
            terms.insert(Vec::new(), fp);
        }
        YSymF { k: 0, terms }
    }

    pub fn vars(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &SymF)> {
        self.terms.iter()
    }

    /// Extract the plain symmetric function when no variables remain.
    pub fn into_sym(self) -> SymF {
        assert_eq!(self.k, 0, "variables still active");
        self.terms
            .into_iter()
            .next()
            .map(|(_, f)| f)
            .unwrap_or_else(|| SymF::zero(Basis::P))
    }

    fn add_term(&mut self, key: Vec<u32>, f: SymF) {
        debug_assert_eq!(key.len(), self.k);
        if f.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(f);
            }
            Entry::Occupied(mut e) => {
                let v = e.get().add(&f);
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add(&self, other: &YSymF) -> YSymF {
        assert_eq!(self.k, other.k);
        let mut out = self.clone();
        for (key, f) in &other.terms {
            out.add_term(key.clone(), f.clone());
        }
        out
    }

    pub fn sub(&self, other: &YSymF) -> YSymF {
        self.add(&other.scale(&BivarRat::from(-1)))
    }

    pub fn scale(&self, c: &BivarRat) -> YSymF {
        if c.is_zero() {
            return YSymF {
                k: self.k,
                terms: BTreeMap::new(),
            };
        }
        let terms = self
            .terms
            .iter()
            .map(|(key, f)| (key.clone(), f.scale(c)))
            .collect();
        YSymF { k: self.k, terms }
    }

    /// Swap `y_i` and `y_{i+1}` (1-based `i`).
    fn swap_vars(&self, i: usize) -> YSymF {
        let mut out = YSymF {
            k: self.k,
            terms: BTreeMap::new(),
        };
        for (key, f) in &self.terms {
            let mut key = key.clone();
            key.swap(i - 1, i);
            out.add_term(key, f.clone());
        }
        out
    }

    /// Divided difference `(F - s_i F)/(y_{i+1} - y_i)`, exact term by term:
    /// for exponents `a < b` at slots `i, i+1`,
    /// `(y_i^a y_{i+1}^b - y_i^b y_{i+1}^a)/(y_{i+1} - y_i)
    ///  = sum_{j=0}^{b-a-1} y_i^{a+j} y_{i+1}^{b-1-j}`.
    fn divided_difference(&self, i: usize) -> YSymF {
        let mut out = YSymF {
            k: self.k,
            terms: BTreeMap::new(),
        };
        for (key, f) in &self.terms {
            let a = key[i - 1];
            let b = key[i];
            if a == b {
                continue;
            }
            let (lo, hi, positive) = if a < b { (a, b, true) } else { (b, a, false) };
            for j in 0..(hi - lo) {
                let mut k2 = key.clone();
                k2[i - 1] = lo + j;
                k2[i] = hi - 1 - j;
                let piece = if positive {
                    f.clone()
                } else {
                    f.negate()
                };
                out.add_term(k2, piece);
            }
        }
        out
    }

    /// `T_i F = s_i F + (q-1) y_i (F - s_i F)/(y_{i+1} - y_i)`.
    pub fn ti(&self, i: usize) -> YSymF {
        assert!(i >= 1 && i < self.k, "T_i needs 1 <= i < k");
        let swapped = self.swap_vars(i);
        let dd = self.divided_difference(i);
        let mut shifted = YSymF {
            k: self.k,
            terms: BTreeMap::new(),
        };
        let qm1 = BivarRat::from(BivarPoly::q_minus_one());
        for (key, f) in &dd.terms {
            let mut k2 = key.clone();
            k2[i - 1] += 1;
            shifted.add_term(k2, f.scale(&qm1));
        }
        swapped.add(&shifted)
    }

    /// Plethystic alphabet shift `F[X + (q-1) y_j]` (`sign = +1`) or
    /// `F[X - (q-1) y_j]` (`sign = -1`), acting on the symmetric-function
    /// coefficients; `(q-1)y_j` is the difference of monomials `q y_j - y_j`,
    /// so the shift expands as
    /// `sum_{a,b} c_a d_b y_j^{a+b} h_a^perp e_b^perp F` with
    /// `(c,d) = (q, -1)` for `+` and `(1, -q)` for `-`.
    fn shift_x_qm1(&self, j: usize, plus: bool) -> YSymF {
        let mut out = YSymF {
            k: self.k,
            terms: BTreeMap::new(),
        };
        for (key, f) in &self.terms {
            let deg = f.max_degree();
            for a in 0..=deg {
                let ha = perp(PerpKind::H, a, f);
                if ha.is_zero() {
                    continue;
                }
                for b in 0..=(deg - a) {
                    let hab = perp(PerpKind::E, b, &ha);
                    if hab.is_zero() {
                        continue;
                    }
                    // coefficient: plus: q^a (-1)^b ; minus: (-q)^b
                    let mut c = if plus {
                        BivarPoly::monomial(1, a, 0)
                    } else {
                        BivarPoly::monomial(1, b, 0)
                    };
                    if b % 2 == 1 {
                        c = -c;
                    }
                    let mut k2 = key.clone();
                    k2[j - 1] += a + b;
                    out.add_term(k2, hab.scale(&BivarRat::from(c)));
                }
            }
        }
        out
    }

    /// Append a fresh last variable slot (exponent 0).
    fn push_var(&self) -> YSymF {
        let mut out = YSymF {
            k: self.k + 1,
            terms: BTreeMap::new(),
        };
        for (key, f) in &self.terms {
            let mut k2 = key.clone();
            k2.push(0);
            out.add_term(k2, f.clone());
        }
        out
    }

    /// Group by the exponent of the last variable and drop the slot.
    fn pop_var(&self) -> Vec<YSymF> {
        assert!(self.k >= 1);
        let mut out: Vec<YSymF> = Vec::new();
        for (key, f) in &self.terms {
            let d = key[self.k - 1] as usize;
            while out.len() <= d {
                out.push(YSymF {
                    k: self.k - 1,
                    terms: BTreeMap::new(),
                });
            }
            let mut k2 = key.clone();
            k2.pop();
            out[d].add_term(k2, f.clone());
        }
        out
    }

    /// Multiply every coefficient by `e_m[X]` of the ambient alphabet.
    fn mul_e(&self, m: u32) -> YSymF {
        let em = SymF::gen(Basis::E, m).convert(Basis::P);
        let terms = self
            .terms
            .iter()
            .map(|(key, f)| (key.clone(), f.mul(&em)))
            .collect();
        YSymF { k: self.k, terms }
    }
}

/// Operator step selector for the word driver.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CmStep {
    Plus,
    Minus,
    Bracket,
}

/// `d_+^k F = T_1 ... T_k (F[X + (q-1) y_{k+1}])`: one more variable out.
pub fn cm_plus(k: usize, f: &YSymF) -> YSymF {
    assert_eq!(f.vars(), k, "d_+^k needs k active variables");
    let mut g = f.push_var().shift_x_qm1(k + 1, true);
    for i in (1..=k).rev() {
        g = g.ti(i);
    }
    g
}

/// `d_-^k F`: expand `F[X - (q-1) y_k]` by powers of `y_k`, multiply by
/// `-sum_i (-1/y_k)^i e_i[X]` and keep the `y_k^{-1}` coefficient:
/// the result is `sum_d (-1)^d e_{d+1}[X] G_d` over the finitely many
/// `y_k`-degrees `d` present (bounded by the `y_k`-degree of `F` plus its
/// X-degree, asserted by construction of the expansion).
pub fn cm_minus(k: usize, f: &YSymF) -> YSymF {
    assert_eq!(f.vars(), k, "d_-^k needs k active variables");
    assert!(k >= 1, "d_- needs at least one variable");
    let y_deg = f.terms.keys().map(|key| key[k - 1]).max().unwrap_or(0);
    let x_deg = f.terms.values().map(|g| g.max_degree()).max().unwrap_or(0);
    let shifted = f.shift_x_qm1(k, false);
    let by_deg = shifted.pop_var();
    assert!(
        by_deg.len() as u32 <= y_deg + x_deg + 1,
        "only finitely many elementary terms may contribute"
    );
    let mut out = YSymF {
        k: k - 1,
        terms: BTreeMap::new(),
    };
    for (d, g) in by_deg.into_iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let signed = if d % 2 == 0 {
            g.mul_e(d as u32 + 1)
        } else {
            g.mul_e(d as u32 + 1).scale(&BivarRat::from(-1))
        };
        out = out.add(&signed);
    }
    out
}

/// `[d_-, d_+]^k F = (d_-^{k+1} d_+^k F - d_+^{k-1} d_-^k F)/(q-1)`,
/// with the division by `q-1` asserted exact.
pub fn cm_bracket(k: usize, f: &YSymF) -> YSymF {
    assert!(k >= 1, "bracket needs k >= 1");
    let first = cm_minus(k + 1, &cm_plus(k, f));
    let second = cm_plus(k - 1, &cm_minus(k, f));
    let diff = first.sub(&second);
    let inv = BivarRat::new(BivarPoly::one(), BivarPoly::q_minus_one()).expect("nonzero");
    let out = diff.scale(&inv);
    // exactness: the power-sum coefficients carry integer denominators from
    // basis conversions, but no q or t may survive in a reduced denominator
    for (_, g) in out.terms() {
        for (_, c) in g.terms() {
            assert!(
                c.den().deg_q() == 0 && c.den().deg_t() == 0,
                "bracket division by q-1 was not exact"
            );
        }
    }
    out
}

/// One operator step at the current variable count.
pub fn cm_step(mode: CmStep, k: usize, f: &YSymF) -> YSymF {
    match mode {
        CmStep::Plus => cm_plus(k, f),
        CmStep::Minus => cm_minus(k, f),
        CmStep::Bracket => cm_bracket(k, f),
    }
}

/// Run the word driver on a marked path: scan the reverse of the encoded
/// word, applying `d_+` for 1, `d_-` for 0 and the bracket for 2. Linear in
/// the number of steps of the path.
pub fn cm_run(m: &MarkedPath) -> SymF {
    let word = encode_word(m);
    let mut out = YSymF::one();
    let mut k = 0usize;
    for &symbol in word.symbols().iter().rev() {
        match symbol {
            1 => {
                out = cm_plus(k, &out);
                k += 1;
            }
            2 => {
                out = cm_bracket(k, &out);
            }
            0 => {
                assert!(k >= 1, "malformed word: k went negative");
                out = cm_minus(k, &out);
                k -= 1;
            }
            _ => unreachable!("alphabet is 0/1/2"),
        }
        // coefficients stay polynomial in q after every complete step
        debug_assert!(out.terms().all(|(_, g)| g
            .terms()
            .all(|(_, c)| c.den().deg_q() == 0 && c.den().deg_t() == 0)));
    }
    assert_eq!(k, 0, "word must return to zero active variables");
    out.into_sym().convert(Basis::S)
}
