use std::fmt;

use crate::error::Error;
use crate::Result;

use super::Partition;

/// A composition: an ordered sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition("zero part".into()));
        }
        Ok(Composition { parts })
    }

    pub fn empty() -> Self {
        Composition::default()
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

    /// Sort the parts into a partition.
    pub fn to_partition(&self) -> Partition {
        Partition::from_unsorted(self.parts.clone()).expect("positive parts")
    }

    /// The composition of `n` determined by a descent set `d` (0-indexed
    /// descent positions, each in `1..n`).
    pub fn from_descents(descents: &[usize], n: usize) -> Composition {
        let mut parts = Vec::with_capacity(descents.len() + 1);
        let mut prev = 0;
        for &d in descents {
            parts.push((d - prev) as u32);
            prev = d;
        }
        if n > prev {
            parts.push((n - prev) as u32);
        }
        Composition { parts }
    }

    pub fn parse(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(Composition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad composition entry {p:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<u32>> for Composition {
    /// Convenience for literals; panics on zero parts.
    fn from(parts: Vec<u32>) -> Self {
        Composition::new(parts).expect("valid composition literal")
    }
}

/// All compositions of `n` (ordered by length, then lexicographically).
pub fn compositions(n: u32) -> Vec<Composition> {
    let mut out = Vec::new();
    for k in 1..=n.max(1) {
        out.extend(compositions_with_length(n, k));
    }
    if n == 0 {
        out.push(Composition::empty());
    }
    out
}

/// Compositions of `n` with exactly `k` parts, lexicographic order.
pub fn compositions_with_length(n: u32, k: u32) -> Vec<Composition> {
    let mut out = Vec::new();
    if k == 0 {
        if n == 0 {
            out.push(Composition::empty());
        }
        return out;
    }
    let mut current = Vec::with_capacity(k as usize);
    fn rec(remaining: u32, slots: u32, current: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if slots == 1 {
            if remaining >= 1 {
                current.push(remaining);
                out.push(Composition {
                    parts: current.clone(),
                });
                current.pop();
            }
            return;
        }
        for part in 1..=remaining.saturating_sub(slots - 1) {
            current.push(part);
            rec(remaining - part, slots - 1, current, out);
            current.pop();
        }
    }
    rec(n, k, &mut current, &mut out);
    out
}

/// The distinct rearrangements of the parts of a partition, in lexicographic
/// order. The count is the multinomial coefficient of the part multiplicities.
pub fn distinct_rearrangements(mu: &Partition) -> Vec<Composition> {
    let mut pool: Vec<u32> = mu.parts().to_vec();
    pool.sort_unstable();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(pool.len());
    fn rec(pool: &mut Vec<u32>, current: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if pool.is_empty() {
            out.push(Composition {
                parts: current.clone(),
            });
            return;
        }
        let mut last = None;
        for i in 0..pool.len() {
            if last == Some(pool[i]) {
                continue;
            }
            last = Some(pool[i]);
            let v = pool.remove(i);
            current.push(v);
            rec(pool, current, out);
            current.pop();
            pool.insert(i, v);
        }
    }
    rec(&mut pool, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(4).len(), 8);
        assert_eq!(compositions_with_length(6, 3).len(), 10);
        assert_eq!(compositions_with_length(3, 5).len(), 0);
    }

    #[test]
    fn descent_composition() {
        assert_eq!(
            Composition::from_descents(&[2, 3], 6),
            Composition::from(vec![2, 1, 3])
        );
        assert_eq!(
            Composition::from_descents(&[], 4),
            Composition::from(vec![4])
        );
    }

    #[test]
    fn rearrangement_count_is_multinomial() {
        let mu = Partition::from(vec![4, 3, 3, 2, 1, 1]);
        // 6!/(1! 2! 1! 2!) = 180
        assert_eq!(distinct_rearrangements(&mu).len(), 180);
        let mu = Partition::from(vec![2, 1]);
        let rearr = distinct_rearrangements(&mu);
        assert_eq!(rearr.len(), 2);
    }
}
