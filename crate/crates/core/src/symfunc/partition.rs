use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::Error;
use crate::Result;

/// An integer partition: weakly decreasing positive parts.
///
/// Partitions of equal size are ordered lexicographically descending on the
/// parts, so iteration over a `BTreeMap<Partition, _>` lists `[6]` before
/// `[5,1]` before `[4,2]`, matching the conventional display order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("zero part".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts not weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts the given positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn single(part: u32) -> Self {
        assert!(part > 0);
        Partition { parts: vec![part] }
    }

    /// `1^n`, the all-ones partition.
    pub fn ones(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let mut out = Vec::with_capacity(cols);
        for c in 1..=cols as u32 {
            out.push(self.parts.iter().filter(|&&p| p >= c).count() as u32);
        }
        Partition { parts: out }
    }

    /// Multiplicity of `part`.
    pub fn multiplicity(&self, part: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == part).count() as u32
    }

    /// `z_lambda = prod_i i^{m_i} m_i!`, the centralizer size.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        let mut i = 0;
        while i < self.parts.len() {
            let part = self.parts[i];
            let mut mult = 0u32;
            while i < self.parts.len() && self.parts[i] == part {
                mult += 1;
                i += 1;
            }
            z *= BigInt::from(part).pow(mult);
            for m in 1..=mult {
                z *= BigInt::from(m);
            }
        }
        z
    }

    /// `(-1)^{|lambda| - l(lambda)}`, the sign of omega on `p_lambda`.
    pub fn eps(&self) -> i8 {
        if (self.size() as usize - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Merge the part multisets (product of basis elements in a
    /// multiplicative basis).
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts: Vec<u32> = self
            .parts
            .iter()
            .chain(other.parts.iter())
            .copied()
            .collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Remove one copy of `part`; None if absent.
    pub fn remove_part(&self, part: u32) -> Option<Partition> {
        let pos = self.parts.iter().position(|&p| p == part)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Some(Partition { parts })
    }

    pub fn parse(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad partition entry {p:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::from_unsorted(parts)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl From<Vec<u32>> for Partition {
    /// Convenience for literals; panics when not weakly decreasing.
    fn from(parts: Vec<u32>) -> Self {
        Partition::new(parts).expect("valid partition literal")
    }
}

/// All partitions of `n`, in the order induced by [`Partition`]'s `Ord`
/// (lexicographically descending).
pub fn partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        let top = max.min(remaining);
        for part in (1..=top).rev() {
            current.push(part);
            rec(remaining - part, part, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_count() {
        assert_eq!(partitions(0).len(), 1);
        assert_eq!(partitions(5).len(), 7);
        assert_eq!(partitions(9).len(), 30);
    }

    #[test]
    fn ordering_is_display_order() {
        let ps = partitions(4);
        let strs: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
        assert_eq!(strs, ["[4]", "[3,1]", "[2,2]", "[2,1,1]", "[1,1,1,1]"]);
        let mut sorted = ps.clone();
        sorted.sort();
        assert_eq!(sorted, ps);
    }

    #[test]
    fn conjugate_involution() {
        for p in partitions(7) {
            assert_eq!(p.conjugate().conjugate(), p);
        }
        assert_eq!(
            Partition::from(vec![3, 1]).conjugate(),
            Partition::from(vec![2, 1, 1])
        );
    }

    #[test]
    fn z_values() {
        assert_eq!(Partition::ones(3).z(), BigInt::from(6));
        assert_eq!(Partition::single(3).z(), BigInt::from(3));
        assert_eq!(Partition::from(vec![2, 1]).z(), BigInt::from(2));
        assert_eq!(Partition::from(vec![2, 2]).z(), BigInt::from(8));
    }

    #[test]
    fn rejects_invalid() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }
}
