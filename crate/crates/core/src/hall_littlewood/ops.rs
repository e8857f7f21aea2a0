use crate::error::Error;
use crate::ring::{BivarPoly, BivarRat};
use crate::symfunc::{perp, Basis, Composition, PerpKind, SymF};
use crate::Result;

/// The three creation operators: `B_a`, its omega conjugate `Bt_a`, and the
/// `C_a` operator whose compositional words build `E_{n,k}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HLKind {
    B,
    Btilde,
    C,
}

impl HLKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "B" => Ok(HLKind::B),
            "Bt" | "Btilde" => Ok(HLKind::Btilde),
            "C" => Ok(HLKind::C),
            _ => Err(Error::Parse(format!("unknown operator {s:?}"))),
        }
    }
}

/// `B_a F = sum_{r,s} (-1)^s q^r e_{a+r+s} e_r^perp h_s^perp F`; the sum
/// truncates at `r + s <= deg F`.
fn apply_b(a: u32, f: &SymF) -> SymF {
    let deg = f.max_degree();
    let fp = f.convert(Basis::P);
    let mut out = SymF::zero(Basis::P);
    for s in 0..=deg {
        let hs = perp(PerpKind::H, s, &fp);
        if hs.is_zero() {
            continue;
        }
        for r in 0..=(deg - s) {
            let er_hs = perp(PerpKind::E, r, &hs);
            if er_hs.is_zero() {
                continue;
            }
            let sign = if s % 2 == 0 { 1 } else { -1 };
            let coeff = BivarRat::from(BivarPoly::monomial(sign, r, 0));
            let e_top = SymF::gen(Basis::E, a + r + s).convert(Basis::P);
            out = out.add(&e_top.mul(&er_hs).scale(&coeff));
        }
    }
    out
}

/// `C_a F = (-1/q)^{a-1} sum_{r,s} (-1)^s q^{-r} h_{a+r+s} e_s^perp h_r^perp F`
/// (coefficients live in the fraction field; denominators are pure q-powers).
fn apply_c(a: u32, f: &SymF) -> SymF {
    let deg = f.max_degree();
    let fp = f.convert(Basis::P);
    let mut out = SymF::zero(Basis::P);
    let q = BivarRat::from(BivarPoly::q());
    for r in 0..=deg {
        let hr = perp(PerpKind::H, r, &fp);
        if hr.is_zero() {
            continue;
        }
        for s in 0..=(deg - r) {
            let es_hr = perp(PerpKind::E, s, &hr);
            if es_hr.is_zero() {
                continue;
            }
            let sign = if s % 2 == 0 { 1i64 } else { -1 };
            let coeff = BivarRat::from(sign) / q.pow(r);
            let h_top = SymF::gen(Basis::H, a + r + s).convert(Basis::P);
            out = out.add(&h_top.mul(&es_hr).scale(&coeff));
        }
    }
    let front = if a % 2 == 1 {
        BivarRat::one() / q.pow(a - 1)
    } else {
        -(BivarRat::one() / q.pow(a - 1))
    };
    out.scale(&front)
}

/// Apply one creation operator. `a >= 1`.
pub fn apply_hl(kind: HLKind, a: u32, f: &SymF) -> Result<SymF> {
    if a < 1 {
        return Err(Error::NegativeArg("operator index must be at least 1"));
    }
    let out = match kind {
        HLKind::B => apply_b(a, f),
        HLKind::Btilde => apply_b(a, &f.omega()).omega(),
        HLKind::C => apply_c(a, f),
    };
    Ok(out.convert(f.basis()))
}

/// `B_{p_1} B_{p_2} ... B_{p_k} 1` (rightmost factor applied first).
pub fn b_word(p: &Composition) -> Result<SymF> {
    word(HLKind::B, p)
}

/// Apply a word of creation operators to 1, rightmost first.
pub fn word(kind: HLKind, p: &Composition) -> Result<SymF> {
    if p.size() > 8 {
        return Err(Error::BoundExceeded {
            what: "operator word size",
            got: p.size() as i64,
            max: 8,
        });
    }
    let mut acc = SymF::one(Basis::E);
    for &a in p.parts().iter().rev() {
        acc = apply_hl(kind, a, &acc)?;
    }
    Ok(acc)
}
