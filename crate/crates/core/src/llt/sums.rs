use std::collections::BTreeMap;

use crate::dyck::{descent_composition_of_inverse, enum_pf, DyckPath, MarkedPath};
use crate::error::Error;
use crate::ring::BivarPoly;
use crate::symfunc::{straighten_schur, Basis, Partition, SymF};
use crate::Result;

fn assemble(terms: BTreeMap<Partition, BivarPoly>) -> SymF {
    let mut f = SymF::zero(Basis::S);
    for (l, c) in terms {
        f.add_term(l, c.into());
    }
    // every LLT produced here must have a denominator-free e-expansion
    assert!(
        f.convert(Basis::E).has_polynomial_coeffs(),
        "LLT e-expansion has non-polynomial coefficients"
    );
    f
}

/// The definitional parking-function sum:
/// `sum_PF q^{dinv(PF)} s_{pides(PF)}` with each composition-indexed Schur
/// straightened. Returns a Schur-basis symmetric function.
pub fn llt_classical(d: &DyckPath) -> Result<SymF> {
    if d.n() > 8 {
        return Err(Error::BoundExceeded {
            what: "llt_classical n",
            got: d.n() as i64,
            max: 8,
        });
    }
    let mut terms: BTreeMap<Partition, BivarPoly> = BTreeMap::new();
    for pf in enum_pf(d) {
        let stats = pf.statistics();
        if let Some((sign, lam)) = straighten_schur(stats.pides.parts()) {
            let c = BivarPoly::monomial(i64::from(sign), stats.dinv, 0);
            let entry = terms.entry(lam).or_default();
            *entry += &c;
        }
    }
    terms.retain(|_, c| !c.is_zero());
    Ok(assemble(terms))
}

/// The compatible-permutation sum for a marked path `(Z, T)`:
/// permutations with `sigma_{n+1-r} < sigma_{n+1-s}` for every mark `(r,s)`,
/// each contributing `q^{dinv} s_{pides}` where a dot pair `(i,j)` counts
/// iff `sigma_{n+1-j} > sigma_{n+1-i}`.
pub fn llt_marked(m: &MarkedPath) -> Result<SymF> {
    let n = m.n();
    if n > 8 {
        return Err(Error::BoundExceeded {
            what: "llt_marked n",
            got: n as i64,
            max: 8,
        });
    }
    // positions are 0-indexed: sigma_{n+1-r} is sigma[n-r]
    let dots: Vec<(usize, usize)> = m
        .path()
        .path_dinvset()
        .into_iter()
        .map(|(i, j)| (n - i as usize, n - j as usize))
        .collect();
    let marks: Vec<(usize, usize)> = m
        .marks()
        .iter()
        .map(|&(r, s)| (n - r as usize, n - s as usize))
        .collect();
    let mut terms: BTreeMap<Partition, BivarPoly> = BTreeMap::new();
    let mut sigma: Vec<u32> = (1..=n as u32).collect();
    permute(&mut sigma, 0, &mut |sigma| {
        for &(pr, ps) in &marks {
            if sigma[pr] >= sigma[ps] {
                return;
            }
        }
        let dinv = dots
            .iter()
            .filter(|&&(pi, pj)| sigma[pj] > sigma[pi])
            .count() as u32;
        let pides = descent_composition_of_inverse(sigma);
        if let Some((sign, lam)) = straighten_schur(pides.parts()) {
            let c = BivarPoly::monomial(i64::from(sign), dinv, 0);
            let entry = terms.entry(lam).or_default();
            *entry += &c;
        }
    });
    terms.retain(|_, c| !c.is_zero());
    Ok(assemble(terms))
}

fn permute(v: &mut Vec<u32>, k: usize, visit: &mut impl FnMut(&Vec<u32>)) {
    if k == v.len() {
        visit(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, visit);
        v.swap(k, i);
    }
}
