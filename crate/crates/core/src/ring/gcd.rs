//! Polynomial gcd in `Z[q,t]`, computed as a primitive pseudo-remainder
//! sequence in `q` over the coefficient ring `Z[t]` (itself handled with a
//! primitive PRS over `Z`). Degrees in this crate are tiny, so the plain
//! primitive PRS is plenty.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::BivarPoly;

type TPoly = Vec<BigInt>; // dense coefficients of powers of t

fn tp_trim(p: &mut TPoly) {
    while p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
}

fn tp_is_zero(p: &TPoly) -> bool {
    p.is_empty()
}

fn tp_neg(p: &TPoly) -> TPoly {
    p.iter().map(|c| -c).collect()
}

fn tp_mul(a: &TPoly, b: &TPoly) -> TPoly {
    if tp_is_zero(a) || tp_is_zero(b) {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    tp_trim(&mut out);
    out
}

fn tp_sub(a: &TPoly, b: &TPoly) -> TPoly {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    tp_trim(&mut out);
    out
}

fn tp_scale(a: &TPoly, c: &BigInt) -> TPoly {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

fn tp_shift(a: &TPoly, by: usize) -> TPoly {
    if tp_is_zero(a) {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); by];
    out.extend_from_slice(a);
    out
}

fn tp_content_int(a: &TPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = num_integer::gcd(g, c.clone());
    }
    g
}

fn tp_div_int(a: &TPoly, c: &BigInt) -> TPoly {
    a.iter().map(|x| x / c).collect()
}

/// Exact division in Z[t]; panics if not exact (callers guarantee it).
fn tp_exact_div(a: &TPoly, b: &TPoly) -> TPoly {
    assert!(!tp_is_zero(b), "division by zero t-polynomial");
    if tp_is_zero(a) {
        return Vec::new();
    }
    let mut rem = a.clone();
    let mut quot = vec![BigInt::zero(); a.len().saturating_sub(b.len()) + 1];
    let bl = b.last().unwrap().clone();
    while !tp_is_zero(&rem) {
        assert!(rem.len() >= b.len(), "inexact t-polynomial division");
        let rl = rem.last().unwrap();
        let (q, r) = num_integer::div_rem(rl.clone(), bl.clone());
        assert!(r.is_zero(), "inexact t-polynomial division");
        let shift = rem.len() - b.len();
        quot[shift] = q.clone();
        rem = tp_sub(&rem, &tp_shift(&tp_scale(b, &q), shift));
    }
    tp_trim(&mut quot);
    quot
}

/// Pseudo-remainder in Z[t]: scale-as-you-go variant, so every subtraction is
/// exact by construction. The result is `lc(g)^k * f mod g` for some `k`.
fn tp_prem(f: &TPoly, g: &TPoly) -> TPoly {
    let mut r = f.clone();
    let lcg = g.last().unwrap().clone();
    while !tp_is_zero(&r) && r.len() >= g.len() {
        let lcr = r.last().unwrap().clone();
        let shift = r.len() - g.len();
        r = tp_sub(&tp_scale(&r, &lcg), &tp_shift(&tp_scale(g, &lcr), shift));
    }
    r
}

fn tp_primitive(p: TPoly) -> TPoly {
    if tp_is_zero(&p) {
        return p;
    }
    let c = tp_content_int(&p);
    tp_div_int(&p, &c)
}

fn tp_positive(mut p: TPoly) -> TPoly {
    if p.last().map(|c| c.is_negative()).unwrap_or(false) {
        p = tp_neg(&p);
    }
    p
}

/// gcd in Z[t] via integer content + primitive PRS.
fn tp_gcd(a: &TPoly, b: &TPoly) -> TPoly {
    if tp_is_zero(a) {
        return tp_positive(b.clone());
    }
    if tp_is_zero(b) {
        return tp_positive(a.clone());
    }
    let ca = tp_content_int(a);
    let cb = tp_content_int(b);
    let cg = num_integer::gcd(ca.clone(), cb.clone());
    let mut f = tp_div_int(a, &ca);
    let mut g = tp_div_int(b, &cb);
    if f.len() < g.len() {
        std::mem::swap(&mut f, &mut g);
    }
    while !tp_is_zero(&g) {
        let r = tp_primitive(tp_prem(&f, &g));
        f = g;
        g = r;
    }
    tp_positive(tp_scale(&tp_primitive(f), &cg))
}

// ---- bivariate layer: polynomials in q over Z[t] ----

type QPoly = Vec<TPoly>;

fn qp_trim(p: &mut QPoly) {
    while p.last().map(tp_is_zero).unwrap_or(false) {
        p.pop();
    }
}

fn qp_is_zero(p: &QPoly) -> bool {
    p.is_empty()
}

fn qp_content(p: &QPoly) -> TPoly {
    let mut g: TPoly = Vec::new();
    for c in p {
        if !tp_is_zero(c) {
            g = tp_gcd(&g, c);
        }
    }
    g
}

fn qp_div_t(p: &QPoly, d: &TPoly) -> QPoly {
    p.iter()
        .map(|c| if tp_is_zero(c) { Vec::new() } else { tp_exact_div(c, d) })
        .collect()
}

fn qp_scale_t(p: &QPoly, d: &TPoly) -> QPoly {
    p.iter().map(|c| tp_mul(c, d)).collect()
}

fn qp_sub(a: &QPoly, b: &QPoly) -> QPoly {
    let mut out = vec![Vec::new(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] = x.clone();
    }
    for (i, y) in b.iter().enumerate() {
        out[i] = tp_sub(&out[i], y);
    }
    qp_trim(&mut out);
    out
}

fn qp_shift(a: &QPoly, by: usize) -> QPoly {
    if qp_is_zero(a) {
        return Vec::new();
    }
    let mut out: QPoly = vec![Vec::new(); by];
    out.extend(a.iter().cloned());
    out
}

/// Pseudo-remainder in (Z[t])[q], scale-as-you-go.
fn qp_prem(f: &QPoly, g: &QPoly) -> QPoly {
    let mut r = f.clone();
    let lcg = g.last().unwrap().clone();
    while !qp_is_zero(&r) && r.len() >= g.len() {
        let lcr = r.last().unwrap().clone();
        let shift = r.len() - g.len();
        let scaled_r = qp_scale_t(&r, &lcg);
        let sub = qp_shift(&qp_scale_t(g, &lcr), shift);
        r = qp_sub(&scaled_r, &sub);
    }
    r
}

pub(super) fn poly_gcd(a: &BivarPoly, b: &BivarPoly) -> BivarPoly {
    if a.is_zero() {
        return positive_leading(b.clone());
    }
    if b.is_zero() {
        return positive_leading(a.clone());
    }
    let to_qp = |p: &BivarPoly| -> QPoly {
        let mut qp: QPoly = p
            .to_q_coeffs()
            .into_iter()
            .map(|mut t| {
                tp_trim(&mut t);
                t
            })
            .collect();
        qp_trim(&mut qp);
        qp
    };
    let mut f = to_qp(a);
    let mut g = to_qp(b);

    let cf = qp_content(&f);
    let cg = qp_content(&g);
    let cc = tp_gcd(&cf, &cg);
    f = qp_div_t(&f, &cf);
    g = qp_div_t(&g, &cg);
    if f.len() < g.len() {
        std::mem::swap(&mut f, &mut g);
    }
    while !qp_is_zero(&g) {
        let mut r = qp_prem(&f, &g);
        let cr = qp_content(&r);
        if !tp_is_zero(&cr) {
            r = qp_div_t(&r, &cr);
        }
        f = g;
        g = r;
    }
    let f = qp_scale_t(&f, &cc);
    positive_leading(BivarPoly::from_q_coeffs(f))
}

fn positive_leading(p: BivarPoly) -> BivarPoly {
    match p.leading() {
        Some((_, c)) if c.is_negative() => -&p,
        _ => p,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> BivarPoly {
        BivarPoly::q()
    }
    fn t() -> BivarPoly {
        BivarPoly::t()
    }
    fn one() -> BivarPoly {
        BivarPoly::one()
    }

    #[test]
    fn gcd_univariate_q() {
        // gcd(1-q^2, 1-q) normalizes to q-1 (positive leading coefficient)
        let a = one() - q().pow(2);
        let b = one() - q();
        let g = a.gcd(&b);
        assert_eq!(g, q() - one());
    }

    #[test]
    fn gcd_with_t() {
        let a = (q() - t()) * (q() + one());
        let b = (q() - t()) * (q() + t());
        assert_eq!(a.gcd(&b), q() - t());
    }

    #[test]
    fn gcd_integer_content() {
        let a = BivarPoly::constant(6) * q();
        let b = BivarPoly::constant(4) * q();
        assert_eq!(a.gcd(&b), BivarPoly::constant(2) * q());
    }

    #[test]
    fn gcd_coprime() {
        let a = q() + one();
        let b = q() - one();
        assert_eq!(a.gcd(&b), one());
    }

    #[test]
    fn gcd_t_only() {
        let a = t().pow(2) - one();
        let b = t() - one();
        assert_eq!(a.gcd(&b), t() - one());
    }

    #[test]
    fn gcd_mixed_content() {
        // content in Z[t]: both are multiples of (t+1)
        let a = (t() + one()) * (q() - one());
        let b = (t() + one()) * (q() + one());
        assert_eq!(a.gcd(&b), t() + one());
    }
}
