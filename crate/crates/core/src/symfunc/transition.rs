//! Per-degree transition matrices between the classical bases and the power
//! sums, computed on demand and cached. Degrees stay below 10 here, so the
//! tables are tiny; the cache fill is idempotent and safe under concurrent
//! initialization.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::ring::BivarRat;

use super::symf::Basis;
use super::{partitions, Partition};

/// Row-major matrix over the coefficient field.
pub(crate) type Mat = Vec<Vec<BivarRat>>;

/// Expansion in the power-sum basis: partition -> coefficient.
pub(crate) type PExp = BTreeMap<Partition, BivarRat>;

fn pexp_add(m: &mut PExp, lam: Partition, c: BivarRat) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match m.entry(lam) {
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

fn pexp_mul(a: &PExp, b: &PExp) -> PExp {
    let mut out = PExp::new();
    for (l1, c1) in a {
        for (l2, c2) in b {
            pexp_add(&mut out, l1.union(l2), c1 * c2);
        }
    }
    out
}

fn pexp_scale(a: &PExp, c: &BivarRat) -> PExp {
    a.iter()
        .map(|(l, v)| (l.clone(), v * c))
        .filter(|(_, v)| !v.is_zero())
        .collect()
}

struct Caches {
    partitions: RwLock<HashMap<u32, Arc<Vec<Partition>>>>,
    indexes: RwLock<HashMap<u32, Arc<HashMap<Partition, usize>>>>,
    to_p: RwLock<HashMap<(Basis, u32), Arc<Mat>>>,
    from_p: RwLock<HashMap<(Basis, u32), Arc<Mat>>>,
    e_in_p: RwLock<Vec<Arc<PExp>>>,
    h_in_p: RwLock<Vec<Arc<PExp>>>,
}

fn caches() -> &'static Caches {
    static CACHES: OnceLock<Caches> = OnceLock::new();
    CACHES.get_or_init(|| Caches {
        partitions: RwLock::new(HashMap::new()),
        indexes: RwLock::new(HashMap::new()),
        to_p: RwLock::new(HashMap::new()),
        from_p: RwLock::new(HashMap::new()),
        e_in_p: RwLock::new(Vec::new()),
        h_in_p: RwLock::new(Vec::new()),
    })
}

pub(crate) fn partitions_of(d: u32) -> Arc<Vec<Partition>> {
    if let Some(p) = caches().partitions.read().unwrap().get(&d) {
        return p.clone();
    }
    let computed = Arc::new(partitions(d));
    caches()
        .partitions
        .write()
        .unwrap()
        .entry(d)
        .or_insert(computed)
        .clone()
}

pub(crate) fn partition_index(d: u32) -> Arc<HashMap<Partition, usize>> {
    if let Some(p) = caches().indexes.read().unwrap().get(&d) {
        return p.clone();
    }
    let map: HashMap<Partition, usize> = partitions_of(d)
        .iter()
        .enumerate()
        .map(|(i, l)| (l.clone(), i))
        .collect();
    let computed = Arc::new(map);
    caches()
        .indexes
        .write()
        .unwrap()
        .entry(d)
        .or_insert(computed)
        .clone()
}

/// `e_n` expanded in power sums, via Newton's identity
/// `n e_n = sum_{i=1}^{n} (-1)^{i-1} p_i e_{n-i}`.
pub(crate) fn e_in_p(n: u32) -> Arc<PExp> {
    grow_newton(n, &caches().e_in_p, true)
}

/// `h_n` expanded in power sums, via `n h_n = sum_{i=1}^{n} p_i h_{n-i}`.
pub(crate) fn h_in_p(n: u32) -> Arc<PExp> {
    grow_newton(n, &caches().h_in_p, false)
}

fn grow_newton(n: u32, cache: &RwLock<Vec<Arc<PExp>>>, alternating: bool) -> Arc<PExp> {
    {
        let table = cache.read().unwrap();
        if let Some(e) = table.get(n as usize) {
            return e.clone();
        }
    }
    let mut table = cache.write().unwrap();
    if table.is_empty() {
        let mut one = PExp::new();
        one.insert(Partition::empty(), BivarRat::one());
        table.push(Arc::new(one));
    }
    while table.len() <= n as usize {
        let m = table.len() as u32;
        let mut acc = PExp::new();
        for i in 1..=m {
            let sign = if alternating && i % 2 == 0 { -1i64 } else { 1 };
            let prev = table[(m - i) as usize].clone();
            for (l, c) in prev.iter() {
                pexp_add(
                    &mut acc,
                    l.union(&Partition::single(i)),
                    c * &BivarRat::from(sign),
                );
            }
        }
        let acc = pexp_scale(&acc, &BivarRat::from_frac(1, m as i64));
        table.push(Arc::new(acc));
    }
    table[n as usize].clone()
}

/// Product of `e`/`h` generators for the partition.
fn gen_product(lam: &Partition, gen: fn(u32) -> Arc<PExp>) -> PExp {
    let mut acc = PExp::new();
    acc.insert(Partition::empty(), BivarRat::one());
    for &part in lam.parts() {
        acc = pexp_mul(&acc, &gen(part));
    }
    acc
}

/// Schur function in the complete homogeneous basis by the Jacobi-Trudi
/// determinant, expanded over permutations with zero-pruning.
fn schur_in_h(lam: &Partition) -> BTreeMap<Partition, BigInt> {
    let l = lam.len();
    let mut out: BTreeMap<Partition, BigInt> = BTreeMap::new();
    if l == 0 {
        out.insert(Partition::empty(), BigInt::one());
        return out;
    }
    // entry(i, j) = lam_i + j - i   (1-based), h index or None when negative
    let entry = |i: usize, j: usize| -> Option<u32> {
        let v = lam.parts()[i] as i64 + j as i64 - i as i64;
        if v < 0 {
            None
        } else {
            Some(v as u32)
        }
    };
    fn rec(
        row: usize,
        l: usize,
        used: &mut Vec<bool>,
        picked: &mut Vec<u32>,
        sign: i8,
        entry: &dyn Fn(usize, usize) -> Option<u32>,
        out: &mut BTreeMap<Partition, BigInt>,
    ) {
        if row == l {
            let parts: Vec<u32> = picked.iter().copied().filter(|&x| x > 0).collect();
            let lam = Partition::from_unsorted(parts).expect("positive parts");
            *out.entry(lam).or_default() += BigInt::from(sign);
            return;
        }
        for col in 0..l {
            if used[col] {
                continue;
            }
            if let Some(idx) = entry(row, col) {
                used[col] = true;
                picked.push(idx);
                // parity of the permutation built so far
                let swaps = used[..col].iter().filter(|&&u| u).count();
                let s = if (col - swaps) % 2 == 0 { sign } else { -sign };
                rec(row + 1, l, used, picked, s, entry, out);
                picked.pop();
                used[col] = false;
            }
        }
    }
    let mut used = vec![false; l];
    let mut picked = Vec::with_capacity(l);
    rec(0, l, &mut used, &mut picked, 1, &entry, &mut out);
    out.retain(|_, c| !c.is_zero());
    out
}

/// Number of functions assigning each part of `nu` to a column of `mu` so
/// that each column's parts sum to its capacity; this is the coefficient of
/// `m_mu` in `p_nu`.
fn p_in_m_count(nu: &Partition, mu: &Partition) -> BigInt {
    fn rec(
        parts: &[u32],
        remaining: &mut Vec<u32>,
        memo: &mut HashMap<(usize, Vec<u32>), BigInt>,
        idx: usize,
    ) -> BigInt {
        if idx == parts.len() {
            return if remaining.iter().all(|&r| r == 0) {
                BigInt::one()
            } else {
                BigInt::zero()
            };
        }
        // completions depend only on the multiset of remainders
        let mut key = remaining.clone();
        key.sort_unstable();
        if let Some(v) = memo.get(&(idx, key.clone())) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        let part = parts[idx];
        for j in 0..remaining.len() {
            if remaining[j] < part {
                continue;
            }
            remaining[j] -= part;
            total += rec(parts, remaining, memo, idx + 1);
            remaining[j] += part;
        }
        memo.insert((idx, key), total.clone());
        total
    }
    let mut remaining: Vec<u32> = mu.parts().to_vec();
    let mut memo = HashMap::new();
    rec(nu.parts(), &mut remaining, &mut memo, 0)
}

/// Column `j` of the matrix is the p-expansion of the `j`-th basis element of
/// degree `d`; stored row-major as `mat[i][j]`.
pub(crate) fn to_p_matrix(basis: Basis, d: u32) -> Arc<Mat> {
    assert_ne!(basis, Basis::P);
    if let Some(m) = caches().to_p.read().unwrap().get(&(basis, d)) {
        return m.clone();
    }
    let parts = partitions_of(d);
    let index = partition_index(d);
    let n = parts.len();
    let mut mat = vec![vec![BivarRat::zero(); n]; n];
    let fill = |mat: &mut Mat, j: usize, exp: &PExp| {
        for (l, c) in exp {
            mat[index[l]][j] = c.clone();
        }
    };
    match basis {
        Basis::E => {
            for (j, lam) in parts.iter().enumerate() {
                fill(&mut mat, j, &gen_product(lam, e_in_p));
            }
        }
        Basis::H => {
            for (j, lam) in parts.iter().enumerate() {
                fill(&mut mat, j, &gen_product(lam, h_in_p));
            }
        }
        Basis::S => {
            for (j, lam) in parts.iter().enumerate() {
                let in_h = schur_in_h(lam);
                let mut exp = PExp::new();
                for (hidx, coeff) in in_h {
                    let coeff = BivarRat::from(crate::ring::BivarPoly::constant(coeff));
                    let prod = gen_product(&hidx, h_in_p);
                    for (l, c) in prod {
                        pexp_add(&mut exp, l, &c * &coeff);
                    }
                }
                fill(&mut mat, j, &exp);
            }
        }
        Basis::M => {
            // invert the integer matrix [coefficient of m_mu in p_nu]
            let mut a = vec![vec![BivarRat::zero(); n]; n];
            for (j, nu) in parts.iter().enumerate() {
                for (i, mu) in parts.iter().enumerate() {
                    let c = p_in_m_count(nu, mu);
                    if !c.is_zero() {
                        a[i][j] = BivarRat::from(crate::ring::BivarPoly::constant(c));
                    }
                }
            }
            mat = invert(&a);
        }
        Basis::F => {
            // f_lambda = omega(m_lambda): flip the sign of each p_nu entry
            let m = to_p_matrix(Basis::M, d);
            for (i, nu) in parts.iter().enumerate() {
                for j in 0..n {
                    let c = &m[i][j];
                    if !c.is_zero() {
                        mat[i][j] = if nu.eps() < 0 { -c } else { c.clone() };
                    }
                }
            }
        }
        Basis::P => unreachable!(),
    }
    let computed = Arc::new(mat);
    caches()
        .to_p
        .write()
        .unwrap()
        .entry((basis, d))
        .or_insert(computed)
        .clone()
}

pub(crate) fn from_p_matrix(basis: Basis, d: u32) -> Arc<Mat> {
    assert_ne!(basis, Basis::P);
    if let Some(m) = caches().from_p.read().unwrap().get(&(basis, d)) {
        return m.clone();
    }
    let computed = Arc::new(invert(&to_p_matrix(basis, d)));
    caches()
        .from_p
        .write()
        .unwrap()
        .entry((basis, d))
        .or_insert(computed)
        .clone()
}

pub(crate) fn apply(mat: &Mat, v: &[BivarRat]) -> Vec<BivarRat> {
    let n = v.len();
    let mut out = vec![BivarRat::zero(); n];
    for (j, coeff) in v.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        for i in 0..n {
            let m = &mat[i][j];
            if !m.is_zero() {
                out[i] += &(m * coeff);
            }
        }
    }
    out
}

/// Exact Gauss-Jordan inversion over the rational-function field.
fn invert(mat: &Mat) -> Mat {
    let n = mat.len();
    let mut a: Mat = mat.to_vec();
    let mut inv: Mat = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BivarRat::one() } else { BivarRat::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("transition matrix is invertible");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        let pinv = p.recip().expect("nonzero pivot");
        for j in 0..n {
            a[col][j] = &a[col][j] * &pinv;
            inv[col][j] = &inv[col][j] * &pinv;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let s = &a[col][j] * &f;
                a[r][j] = &a[r][j] - &s;
                let s = &inv[col][j] * &f;
                inv[r][j] = &inv[r][j] - &s;
            }
        }
    }
    inv
}
