use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::Error;
use crate::Result;

use super::BivarPoly;

/// A reduced rational function `num/den` in `q`, `t` over the integers.
///
/// Invariants: `den` is nonzero, `gcd(num, den)` is a unit, and the leading
/// coefficient of `den` (lexicographic `(deg_q, deg_t)` order) is positive.
/// Equal values therefore always have identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BivarRat {
    num: BivarPoly,
    den: BivarPoly,
}

impl BivarRat {
    pub fn new(num: BivarPoly, den: BivarPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: BivarPoly, den: BivarPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return BivarRat {
                num,
                den: BivarPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let mut num = num.exact_div(&g).expect("gcd must divide numerator");
        let mut den = den.exact_div(&g).expect("gcd must divide denominator");
        if den.leading().map(|(_, c)| c.is_negative()).unwrap_or(false) {
            num = -num;
            den = -den;
        }
        BivarRat { num, den }
    }

    pub fn zero() -> Self {
        BivarRat {
            num: BivarPoly::zero(),
            den: BivarPoly::one(),
        }
    }

    pub fn one() -> Self {
        BivarPoly::one().into()
    }

    pub fn from_frac<A: Into<BigInt>, B: Into<BigInt>>(a: A, b: B) -> Self {
        BivarRat::new(BivarPoly::constant(a), BivarPoly::constant(b))
            .expect("nonzero denominator")
    }

    pub fn num(&self) -> &BivarPoly {
        &self.num
    }

    pub fn den(&self) -> &BivarPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the reduced denominator is 1, i.e. the value lies in `Z[q,t]`.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Extract the polynomial value, if the denominator is 1.
    pub fn as_polynomial(&self) -> Option<&BivarPoly> {
        if self.is_polynomial() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn recip(&self) -> Result<BivarRat> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(BivarRat::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &BivarRat) -> Result<BivarRat> {
        Ok(self * &rhs.recip()?)
    }

    /// Substitute `q -> 1+q` in numerator and denominator.
    pub fn shift_q(&self) -> BivarRat {
        BivarRat::reduced(self.num.shift_q(), self.den.shift_q())
    }

    /// `q -> q^k`, `t -> t^k` (the coefficient transform used by plethysm on
    /// power sums).
    pub fn adams(&self, k: u32) -> BivarRat {
        BivarRat::reduced(self.num.adams(k), self.den.adams(k))
    }

    /// Substitute `q -> 1/q`, exactly: `f(1/q, t)` as a reduced rational
    /// function (pure q-power denominators appear as needed).
    pub fn invert_q(&self) -> BivarRat {
        let dn = self.num.deg_q();
        let dd = self.den.deg_q();
        let rev = |p: &BivarPoly, d: u32| -> BivarPoly {
            let mut out = BivarPoly::zero();
            for (&(a, b), c) in p.terms() {
                out.insert_add((d - a, b), c.clone());
            }
            out
        };
        // f(1/q) = q^dd * num_rev / (q^dn * den_rev), cleared to polynomials
        let num = rev(&self.num, dn) * BivarPoly::monomial(1, dd, 0);
        let den = rev(&self.den, dd) * BivarPoly::monomial(1, dn, 0);
        BivarRat::reduced(num, den)
    }

    /// General substitution applied to numerator and denominator.
    pub fn subst(&self, q_image: &BivarPoly, t_image: &BivarPoly) -> Result<BivarRat> {
        BivarRat::new(
            self.num.subst(q_image, t_image),
            self.den.subst(q_image, t_image),
        )
    }

    pub fn mul_poly(&self, p: &BivarPoly) -> BivarRat {
        BivarRat::reduced(&self.num * p, self.den.clone())
    }

    pub fn pow(&self, e: u32) -> BivarRat {
        // num and den are coprime, so the powers are too
        BivarRat {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }
}

impl From<BivarPoly> for BivarRat {
    fn from(p: BivarPoly) -> Self {
        BivarRat {
            num: p,
            den: BivarPoly::one(),
        }
    }
}

impl From<i64> for BivarRat {
    fn from(v: i64) -> Self {
        BivarPoly::constant(v).into()
    }
}

impl Add for &BivarRat {
    type Output = BivarRat;
    fn add(self, rhs: &BivarRat) -> BivarRat {
        BivarRat::reduced(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &BivarRat {
    type Output = BivarRat;
    fn sub(self, rhs: &BivarRat) -> BivarRat {
        self + &(-rhs)
    }
}

impl Mul for &BivarRat {
    type Output = BivarRat;
    fn mul(self, rhs: &BivarRat) -> BivarRat {
        BivarRat::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Panics on division by zero; use [`BivarRat::checked_div`] for a fallible
/// version.
impl Div for &BivarRat {
    type Output = BivarRat;
    fn div(self, rhs: &BivarRat) -> BivarRat {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &BivarRat {
    type Output = BivarRat;
    fn neg(self) -> BivarRat {
        BivarRat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl AddAssign<&BivarRat> for BivarRat {
    fn add_assign(&mut self, rhs: &BivarRat) {
        *self = &*self + rhs;
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for BivarRat {
            type Output = BivarRat;
            fn $method(self, rhs: BivarRat) -> BivarRat {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&BivarRat> for BivarRat {
            type Output = BivarRat;
            fn $method(self, rhs: &BivarRat) -> BivarRat {
                (&self).$method(rhs)
            }
        }
        impl $trait<BivarRat> for &BivarRat {
            type Output = BivarRat;
            fn $method(self, rhs: BivarRat) -> BivarRat {
                self.$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for BivarRat {
    type Output = BivarRat;
    fn neg(self) -> BivarRat {
        -&self
    }
}

impl fmt::Display for BivarRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &BivarPoly| {
            let s = p.to_string();
            if p.num_terms() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}
