use crate::dyck::DyckPath;
use crate::error::Error;
use crate::llt::llt_classical;
use crate::ring::BivarRat;
use crate::symfunc::{compositions_with_length, Basis, Composition, SymF};
use crate::Result;

use super::ops::b_word;

/// How an operator word relates to the LLT of its balanced path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathRelation {
    Equal,
    /// proportional by this monomial factor (b_word = factor * llt)
    MonomialFactor(BivarRat),
    Different,
}

#[derive(Clone, Debug)]
pub struct PathComparison {
    /// operator word, leftmost applied last
    pub word: Composition,
    /// balanced path with North runs = reversed word, bottom to top
    pub path: DyckPath,
    pub relation: PathRelation,
}

/// Report for the balanced-path identity at `(n, k)`: the sum of all
/// length-`k` operator words equals the sum of classical LLTs over balanced
/// paths with `k` diagonal hits.
#[derive(Clone, Debug)]
pub struct BalancedReport {
    pub n: u32,
    pub k: u32,
    pub lhs: SymF,
    pub rhs: SymF,
    pub aggregate_equal: bool,
    pub per_path: Vec<PathComparison>,
}

impl BalancedReport {
    pub fn all_paths_equal(&self) -> bool {
        self.per_path
            .iter()
            .all(|c| c.relation == PathRelation::Equal)
    }
}

fn compare(bw: &SymF, llt: &SymF) -> PathRelation {
    if bw.equivalent(llt) {
        return PathRelation::Equal;
    }
    // proportionality test: identical support, constant coefficient ratio
    let a = bw.convert(Basis::S);
    let b = llt.convert(Basis::S);
    if a.num_terms() != b.num_terms() {
        return PathRelation::Different;
    }
    let mut ratio: Option<BivarRat> = None;
    for (lam, ca) in a.terms() {
        let cb = b.coeff(lam);
        if cb.is_zero() {
            return PathRelation::Different;
        }
        let r = ca / &cb;
        match &ratio {
            None => ratio = Some(r),
            Some(prev) if *prev == r => {}
            _ => return PathRelation::Different,
        }
    }
    match ratio {
        Some(r) => PathRelation::MonomialFactor(r),
        None => PathRelation::Equal,
    }
}

/// Compute both sides of the balanced-path identity and a per-path
/// comparison; the per-word correspondence pairs the word `(a_1..a_k)` with
/// the balanced path whose North runs from the bottom are `(a_k..a_1)`.
pub fn balanced_identity(n: u32, k: u32) -> Result<BalancedReport> {
    if n > 6 {
        return Err(Error::BoundExceeded {
            what: "balanced_identity n",
            got: n as i64,
            max: 6,
        });
    }
    if k < 1 || k > n {
        return Err(Error::BoundExceeded {
            what: "balanced_identity k",
            got: k as i64,
            max: n as i64,
        });
    }
    let mut lhs = SymF::zero(Basis::S);
    let mut rhs = SymF::zero(Basis::S);
    let mut per_path = Vec::new();
    for alpha in compositions_with_length(n, k) {
        let bw = b_word(&alpha)?.convert(Basis::S);
        let runs: Vec<u32> = alpha.parts().iter().rev().copied().collect();
        let path = DyckPath::balanced(&runs);
        let llt = llt_classical(&path)?;
        let relation = compare(&bw, &llt);
        lhs = lhs.add(&bw);
        rhs = rhs.add(&llt.convert(Basis::S));
        per_path.push(PathComparison {
            word: alpha,
            path,
            relation,
        });
    }
    let aggregate_equal = lhs.equivalent(&rhs);
    Ok(BalancedReport {
        n,
        k,
        lhs,
        rhs,
        aggregate_equal,
        per_path,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n2_cases() {
        // B_2 1 = e_2 = LLT of the single-column path [0,1]
        let r = balanced_identity(2, 1).unwrap();
        assert!(r.aggregate_equal);
        assert!(r.all_paths_equal());
        assert_eq!(r.per_path[0].path, DyckPath::new(vec![0, 1]).unwrap());
        // B_1 B_1 1 = LLT of [0,0]
        let r = balanced_identity(2, 2).unwrap();
        assert!(r.aggregate_equal);
        assert!(r.all_paths_equal());
    }

    #[test]
    fn aggregate_small() {
        for n in 1..=4u32 {
            for k in 1..=n {
                let r = balanced_identity(n, k).unwrap();
                assert!(r.aggregate_equal, "n={n} k={k}");
            }
        }
    }
}
