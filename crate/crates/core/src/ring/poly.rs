use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A polynomial in `q` and `t` with big-integer coefficients.
///
/// Invariants: no zero coefficient is ever stored, so two equal polynomials
/// have identical term maps. The monomial order is lexicographic on
/// `(deg_q, deg_t)`; the leading term is the maximal key under that order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BivarPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        BivarPoly::default()
    }

    pub fn one() -> Self {
        BivarPoly::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        BivarPoly::monomial(c, 0, 0)
    }

    /// The variable `q`.
    pub fn q() -> Self {
        BivarPoly::monomial(1, 1, 0)
    }

    /// The variable `t`.
    pub fn t() -> Self {
        BivarPoly::monomial(1, 0, 1)
    }

    /// `1 + q`, the shift target.
    pub fn one_plus_q() -> Self {
        BivarPoly::one() + BivarPoly::q()
    }

    /// `q - 1`.
    pub fn q_minus_one() -> Self {
        BivarPoly::q() - BivarPoly::one()
    }

    pub fn monomial<T: Into<BigInt>>(c: T, deg_q: u32, deg_t: u32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((deg_q, deg_t), c);
        }
        BivarPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0, 0).is_one()
    }

    /// Returns the constant value if the polynomial has degree zero.
    pub fn as_constant(&self) -> Option<BigInt> {
        if self.is_zero() {
            Some(BigInt::zero())
        } else if self.terms.len() == 1 {
            self.terms.get(&(0, 0)).cloned()
        } else {
            None
        }
    }

    pub fn coeff(&self, deg_q: u32, deg_t: u32) -> BigInt {
        self.terms.get(&(deg_q, deg_t)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn deg_q(&self) -> u32 {
        self.terms.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn deg_t(&self) -> u32 {
        self.terms.keys().map(|k| k.1).max().unwrap_or(0)
    }

    /// Leading term under the lexicographic `(deg_q, deg_t)` order.
    pub fn leading(&self) -> Option<((u32, u32), &BigInt)> {
        self.terms.iter().next_back().map(|(k, c)| (*k, c))
    }

    /// True when every coefficient is a nonnegative integer. This is the
    /// positivity predicate used by all downstream e-positivity checks.
    pub fn is_nonneg(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub(crate) fn insert_add(&mut self, key: (u32, u32), c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn pow(&self, e: u32) -> BivarPoly {
        let mut acc = BivarPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn mul_scalar(&self, c: &BigInt) -> BivarPoly {
        if c.is_zero() {
            return BivarPoly::zero();
        }
        let terms = self.terms.iter().map(|(k, v)| (*k, v * c)).collect();
        BivarPoly { terms }
    }

    /// Substitute `q -> q_image`, `t -> t_image` simultaneously.
    pub fn subst(&self, q_image: &BivarPoly, t_image: &BivarPoly) -> BivarPoly {
        // Powers are cached up to the maximal degree in each variable.
        let mut q_pows = vec![BivarPoly::one()];
        for _ in 0..self.deg_q() {
            q_pows.push(q_pows.last().unwrap() * q_image);
        }
        let mut t_pows = vec![BivarPoly::one()];
        for _ in 0..self.deg_t() {
            t_pows.push(t_pows.last().unwrap() * t_image);
        }
        let mut out = BivarPoly::zero();
        for (&(dq, dt), c) in &self.terms {
            let m = (&q_pows[dq as usize] * &t_pows[dt as usize]).mul_scalar(c);
            out += &m;
        }
        out
    }

    /// The substitution `q -> 1 + q` (`t` untouched).
    pub fn shift_q(&self) -> BivarPoly {
        self.subst(&BivarPoly::one_plus_q(), &BivarPoly::t())
    }

    /// Raise each variable to the k-th power: `q -> q^k`, `t -> t^k`.
    /// This is the coefficient transform induced by the plethystic power map.
    pub fn adams(&self, k: u32) -> BivarPoly {
        let terms = self
            .terms
            .iter()
            .map(|(&(dq, dt), c)| ((dq * k, dt * k), c.clone()))
            .collect();
        BivarPoly { terms }
    }

    /// Numeric evaluation at integer points.
    pub fn eval(&self, q: &BigInt, t: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for (&(dq, dt), c) in &self.terms {
            acc += c * q.pow(dq) * t.pow(dt);
        }
        acc
    }

    /// Exact division; returns `None` when `self` is not a multiple of `d`.
    pub fn exact_div(&self, d: &BivarPoly) -> Option<BivarPoly> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let mut rem = self.clone();
        let mut quot = BivarPoly::zero();
        let ((dq, dt), dc) = d.leading().unwrap();
        while let Some(((rq, rt), rc)) = rem.leading() {
            // Leading monomial of the remainder must be divisible in both the
            // exponents and the coefficient, or the division is not exact.
            if rq < dq || rt < dt {
                return None;
            }
            let (quo, r) = num_integer::div_rem(rc.clone(), dc.clone());
            if !r.is_zero() {
                return None;
            }
            let m = BivarPoly::monomial(quo, rq - dq, rt - dt);
            rem = &rem - &(&m * d);
            quot += &m;
        }
        Some(quot)
    }

    /// Greatest common divisor, normalized with positive leading coefficient.
    pub fn gcd(&self, other: &BivarPoly) -> BivarPoly {
        super::gcd::poly_gcd(self, other)
    }

    /// Integer content (gcd of all coefficients), nonnegative.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = num_integer::gcd(g, c.clone());
        }
        g
    }

    /// View as a dense vector of coefficients of powers of `q`, each entry a
    /// dense `t`-polynomial (used by the gcd routines).
    pub(crate) fn to_q_coeffs(&self) -> Vec<Vec<BigInt>> {
        let dq = self.deg_q() as usize;
        let dt = self.deg_t() as usize;
        let mut out = vec![vec![BigInt::zero(); dt + 1]; dq + 1];
        for (&(a, b), c) in &self.terms {
            out[a as usize][b as usize] = c.clone();
        }
        out
    }

    pub(crate) fn from_q_coeffs(coeffs: Vec<Vec<BigInt>>) -> BivarPoly {
        let mut out = BivarPoly::zero();
        for (a, tp) in coeffs.into_iter().enumerate() {
            for (b, c) in tp.into_iter().enumerate() {
                out.insert_add((a as u32, b as u32), c);
            }
        }
        out
    }
}

impl AddAssign<&BivarPoly> for BivarPoly {
    fn add_assign(&mut self, rhs: &BivarPoly) {
        for (k, c) in &rhs.terms {
            self.insert_add(*k, c.clone());
        }
    }
}

impl Add for &BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: BivarPoly) -> BivarPoly {
        &self + &rhs
    }
}

impl Sub for &BivarPoly {
    type Output = BivarPoly;
    fn sub(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.insert_add(*k, -c.clone());
        }
        out
    }
}

impl Sub for BivarPoly {
    type Output = BivarPoly;
    fn sub(self, rhs: BivarPoly) -> BivarPoly {
        &self - &rhs
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        let terms = self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect();
        BivarPoly { terms }
    }
}

impl Neg for BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        -&self
    }
}

impl Mul for &BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = BivarPoly::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.insert_add((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: BivarPoly) -> BivarPoly {
        &self * &rhs
    }
}

impl Mul<BivarPoly> for &BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: BivarPoly) -> BivarPoly {
        self * &rhs
    }
}

impl Mul<&BivarPoly> for BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        &self * rhs
    }
}

impl From<i64> for BivarPoly {
    fn from(v: i64) -> Self {
        BivarPoly::constant(v)
    }
}

/// Canonical text form: terms in descending `(deg_q, deg_t)` order, e.g.
/// `q^3+2*q^2` or `2*q^2*t-1`.
impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(dq, dt), c) in self.terms.iter().rev() {
            let mut piece = String::new();
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || (dq == 0 && dt == 0) {
                factors.push(abs.to_string());
            }
            if dq == 1 {
                factors.push("q".into());
            } else if dq > 1 {
                factors.push(format!("q^{dq}"));
            }
            if dt == 1 {
                factors.push("t".into());
            } else if dt > 1 {
                factors.push(format!("t^{dt}"));
            }
            piece.push_str(&factors.join("*"));
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            write!(f, "{piece}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_zero_pruning() {
        let p = BivarPoly::q() - BivarPoly::q();
        assert!(p.is_zero());
        assert_eq!(p, BivarPoly::zero());
    }

    #[test]
    fn display_canonical() {
        let p = BivarPoly::monomial(1, 3, 0) + BivarPoly::monomial(2, 2, 0);
        assert_eq!(p.to_string(), "q^3+2*q^2");
        let m = BivarPoly::monomial(2, 2, 1) - BivarPoly::one();
        assert_eq!(m.to_string(), "2*q^2*t-1");
        assert_eq!(BivarPoly::zero().to_string(), "0");
    }

    #[test]
    fn shift_q_examples() {
        // q^2 -> 1 + 2q + q^2
        let p = BivarPoly::monomial(1, 2, 0);
        let expect = BivarPoly::one() + BivarPoly::monomial(2, 1, 0) + BivarPoly::monomial(1, 2, 0);
        assert_eq!(p.shift_q(), expect);
        // q - 1 -> q
        let p = BivarPoly::q_minus_one();
        assert_eq!(p.shift_q(), BivarPoly::q());
    }

    #[test]
    fn exact_div_detects_non_multiples() {
        let a = BivarPoly::one() - BivarPoly::monomial(1, 2, 0); // 1 - q^2
        let b = BivarPoly::one() - BivarPoly::q();
        let q = a.exact_div(&b).unwrap();
        assert_eq!(q, BivarPoly::one() + BivarPoly::q());
        let c = BivarPoly::one() + BivarPoly::monomial(1, 2, 0);
        assert!(c.exact_div(&b).is_none());
        // coefficient divisibility matters too: q is not a multiple of 2
        assert!(BivarPoly::q().exact_div(&BivarPoly::constant(2)).is_none());
    }

    #[test]
    fn eval_and_adams() {
        let p = BivarPoly::q() * BivarPoly::t() + BivarPoly::one();
        assert_eq!(
            p.eval(&BigInt::from(2), &BigInt::from(3)),
            BigInt::from(7)
        );
        let a = p.adams(2);
        assert_eq!(a, BivarPoly::monomial(1, 2, 2) + BivarPoly::one());
    }
}
