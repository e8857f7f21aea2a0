use std::collections::BTreeSet;

use crate::dyck::{forced_pairs, maximal_pf_and_dinvset, DyckPath, MarkedPath};
use crate::error::Error;
use crate::ring::BivarPoly;
use crate::symfunc::Partition;
use crate::Result;

use super::EExpansion;

/// Peel the poset generated by the pairs in `edges` (each `(a,b)` meaning
/// `a < b` in the order): repeatedly take the downset of the largest
/// remaining label, record its size, and delete it. Reachability is
/// recomputed on the surviving labels each round; since whole downsets are
/// removed, nothing reachable ever passes through a removed label.
pub(crate) fn peel_partition(n: usize, down: &[u32]) -> Partition {
    debug_assert!(n <= 32);
    let mut alive: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let mut sizes: Vec<u32> = Vec::new();
    while alive != 0 {
        let top = 31 - alive.leading_zeros() as usize;
        let mut reach: u32 = 1 << top;
        let mut frontier: u32 = reach;
        while frontier != 0 {
            let mut next: u32 = 0;
            let mut f = frontier;
            while f != 0 {
                let b = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= down[b] & alive & !reach;
            }
            reach |= next;
            frontier = next;
        }
        sizes.push(reach.count_ones());
        alive &= !reach;
    }
    Partition::from_unsorted(sizes).expect("positive sizes")
}

/// The e-index produced by one subset `S` together with the fixed pairs `T`:
/// the multiset of downset sizes peeled from the poset generated by
/// `S union T`.
pub fn conjecture_term(
    n: usize,
    s_edges: &BTreeSet<(u32, u32)>,
    t_edges: &BTreeSet<(u32, u32)>,
) -> Partition {
    let mut down = vec![0u32; n];
    for &(a, b) in s_edges.iter().chain(t_edges.iter()) {
        down[(b - 1) as usize] |= 1 << (a - 1);
    }
    peel_partition(n, &down)
}

/// The conjectured e-expansion from a dinv set and a pair set `T`:
/// `sum_{S subset dinvset} q^{|S|} e_{mu(S,T)}`.
pub fn conjecture_expansion_from_pairs(
    n: usize,
    dinvset: &BTreeSet<(u32, u32)>,
    t_edges: &BTreeSet<(u32, u32)>,
) -> EExpansion {
    let edges: Vec<(u32, u32)> = dinvset.iter().copied().collect();
    let m = edges.len();
    assert!(m < 31, "dinv set too large to enumerate");
    let mut base = vec![0u32; n];
    for &(a, b) in t_edges {
        base[(b - 1) as usize] |= 1 << (a - 1);
    }
    let mut out = EExpansion::new();
    for mask in 0u64..(1u64 << m) {
        let mut down = base.clone();
        let mut bits = mask;
        while bits != 0 {
            let e = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let (a, b) = edges[e];
            down[(b - 1) as usize] |= 1 << (a - 1);
        }
        let lam = peel_partition(n, &down);
        out.add_term(lam, BivarPoly::monomial(1, mask.count_ones(), 0));
    }
    out
}

/// Classical form: `T = forced(D)`, summing over subsets of `dinvset(D)`.
pub fn conjecture_expansion_classical(d: &DyckPath) -> EExpansion {
    let (_, dinvset) = maximal_pf_and_dinvset(d);
    let forced = forced_pairs(d);
    conjecture_expansion_from_pairs(d.n(), &dinvset, &forced)
}

/// Column form on a Dyck path `D` with `T` a subset of its forced pairs.
pub fn conjecture_expansion_for_path(
    d: &DyckPath,
    t_edges: &BTreeSet<(u32, u32)>,
) -> Result<EExpansion> {
    let forced = forced_pairs(d);
    if !t_edges.is_subset(&forced) {
        return Err(Error::NotForcedPairs(format!(
            "{t_edges:?} not within {forced:?}"
        )));
    }
    let (_, dinvset) = maximal_pf_and_dinvset(d);
    Ok(conjecture_expansion_from_pairs(d.n(), &dinvset, t_edges))
}

/// Column form on a marked sweep image `(Z, T)`: the dots under `Z` are the
/// dinv set and the marks are `T`.
pub fn conjecture_expansion_marked(m: &MarkedPath) -> EExpansion {
    conjecture_expansion_from_pairs(m.n(), &m.path().path_dinvset(), m.marks())
}
