use std::collections::{BTreeSet, HashMap};

use crate::dyck::{DyckPath, MarkedPath};
use crate::error::Error;
use crate::ring::{BivarPoly, BivarRat};
use crate::symfunc::{Basis, SymF};
use crate::Result;

/// One possible downset of `n` together with its weight and the residual
/// marked path left after deleting its cells.
#[derive(Clone, Debug)]
pub struct DownsetReport {
    pub labels: BTreeSet<u32>,
    pub weight: BivarPoly,
    pub residual_path: DyckPath,
    pub residual_marks: BTreeSet<(u32, u32)>,
}

/// All label sets `S = {i_1 < ... < i_k = n}` such that every consecutive
/// pair is a mark or a dot, and marks are downward closed on `S`
/// (`(i,j) in T` with `j in S` forces `i in S`). Ordered lexicographically
/// on the sorted labels.
pub fn possible_downsets(z: &DyckPath, t: &BTreeSet<(u32, u32)>) -> Vec<BTreeSet<u32>> {
    let n = z.n() as u32;
    if n == 0 {
        return Vec::new();
    }
    let dots = z.path_dinvset();
    let mut edges: BTreeSet<(u32, u32)> = dots;
    edges.extend(t.iter().copied());
    let mut out: Vec<BTreeSet<u32>> = Vec::new();
    // grow chains downward from n
    let mut chain: Vec<u32> = vec![n];
    fn rec(
        edges: &BTreeSet<(u32, u32)>,
        t: &BTreeSet<(u32, u32)>,
        chain: &mut Vec<u32>,
        out: &mut Vec<BTreeSet<u32>>,
    ) {
        let set: BTreeSet<u32> = chain.iter().copied().collect();
        if t.iter().all(|&(i, j)| !set.contains(&j) || set.contains(&i)) {
            out.push(set);
        }
        let low = *chain.last().unwrap();
        for p in (1..low).rev() {
            if edges.contains(&(p, low)) {
                chain.push(p);
                rec(edges, t, chain, out);
                chain.pop();
            }
        }
    }
    rec(&edges, t, &mut chain, &mut out);
    out.sort_by(|a, b| {
        let av: Vec<u32> = a.iter().copied().collect();
        let bv: Vec<u32> = b.iter().copied().collect();
        av.cmp(&bv)
    });
    out
}

/// The weight of a possible downset:
/// `q^{f(S)} * prod_{t in S minus max} w_t` where `up(t)` counts dots from
/// `t` into larger members of `S`, `w_t = q^{up(t)}` when a mark connects `t`
/// to a larger member of `S` and `q^{up(t)} - 1` otherwise, and `f(S)` counts
/// dots from members of `S` to larger non-members.
pub fn downset_weight(
    z: &DyckPath,
    t: &BTreeSet<(u32, u32)>,
    s: &BTreeSet<u32>,
) -> Result<BivarPoly> {
    if !possible_downsets(z, t).contains(s) {
        return Err(Error::NotPossibleDownset(format!("{s:?} for {z} / {t:?}")));
    }
    let dots = z.path_dinvset();
    let max = *s.iter().next_back().expect("nonempty downset");
    let mut weight = BivarPoly::one();
    for &a in s {
        if a == max {
            continue;
        }
        let up = s
            .iter()
            .filter(|&&b| b > a && dots.contains(&(a, b)))
            .count() as u32;
        let marked = t.iter().any(|&(i, j)| i == a && j > a && s.contains(&j));
        let w = if marked {
            BivarPoly::monomial(1, up, 0)
        } else {
            BivarPoly::monomial(1, up, 0) - BivarPoly::one()
        };
        weight = weight * w;
    }
    let free = dots
        .iter()
        .filter(|&&(a, b)| s.contains(&a) && !s.contains(&b))
        .count() as u32;
    Ok(weight * BivarPoly::monomial(1, free, 0))
}

/// Relabel a mark after deleting the labels in `s`: survivors shift down by
/// the number of deleted labels below them.
fn mark_image(s: &BTreeSet<u32>, t: &BTreeSet<(u32, u32)>) -> BTreeSet<(u32, u32)> {
    let shift = |x: u32| x - s.iter().filter(|&&d| d < x).count() as u32;
    t.iter()
        .filter(|&&(i, j)| !s.contains(&i) && !s.contains(&j))
        .map(|&(i, j)| (shift(i), shift(j)))
        .collect()
}

/// Possible downsets with weights and residual data. The residual marks are
/// the deletion image of `t`: a mark survives when neither of its rows is
/// deleted, and surviving labels close up. A surviving mark's East and North
/// steps stay adjacent, so it is still a removable corner of the residual.
pub fn downset_reports(z: &DyckPath, t: &BTreeSet<(u32, u32)>) -> Result<Vec<DownsetReport>> {
    let mut out = Vec::new();
    for s in possible_downsets(z, t) {
        let weight = downset_weight(z, t, &s)?;
        let residual_path = z.delete_cells(&s);
        let residual_marks = mark_image(&s, t);
        debug_assert!(residual_marks.is_subset(&residual_path.corners()));
        out.push(DownsetReport {
            labels: s,
            weight,
            residual_path,
            residual_marks,
        });
    }
    Ok(out)
}

type MemoKey = (Vec<u32>, Vec<(u32, u32)>);

/// The downset recursion for the (unshifted) LLT of a marked path:
/// `sum_S e_{|S|} weight_S(q) * recurse(residual)`; the empty path
/// contributes 1.
pub fn areaprime_recursion(m: &MarkedPath) -> Result<SymF> {
    let mut memo: HashMap<MemoKey, SymF> = HashMap::new();
    areaprime_inner(m.path(), m.marks(), &mut memo)
}

fn areaprime_inner(
    z: &DyckPath,
    t: &BTreeSet<(u32, u32)>,
    memo: &mut HashMap<MemoKey, SymF>,
) -> Result<SymF> {
    if z.n() == 0 {
        return Ok(SymF::one(Basis::P));
    }
    let key = (z.area_word().to_vec(), t.iter().copied().collect::<Vec<_>>());
    if let Some(f) = memo.get(&key) {
        return Ok(f.clone());
    }
    let mut acc = SymF::zero(Basis::P);
    for report in downset_reports(z, t)? {
        let rec = areaprime_inner(&report.residual_path, &report.residual_marks, memo)?;
        let ek = SymF::gen(Basis::E, report.labels.len() as u32).convert(Basis::P);
        acc = acc.add(&ek.mul(&rec).scale(&BivarRat::from(report.weight)));
    }
    memo.insert(key, acc.clone());
    Ok(acc)
}
