use std::fmt;

use crate::dyck::MarkedPath;

/// The 0/1/2 word driving the operator algorithm: `0` = North, `1` = East,
/// `2` = a marked removable corner's East-North pair compressed to one
/// symbol. In the uncompressed word every prefix stays weakly above the
/// diagonal; `#0 + #2 = #1 + #2 = n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LLTWord {
    symbols: Vec<u8>,
}

impl LLTWord {
    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }
}

impl fmt::Display for LLTWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.symbols.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Encode a marked path as its step word with each marked corner's
/// East-North pair replaced by a single `2`.
pub fn encode_word(m: &MarkedPath) -> LLTWord {
    let path = m.path();
    let n = path.n();
    let marked_rows: Vec<bool> = {
        let mut v = vec![false; n + 1];
        for &(_, j) in m.marks() {
            v[j as usize] = true;
        }
        v
    };
    let mut symbols = Vec::with_capacity(2 * n - m.marks().len());
    let mut x = 0u32;
    for (j, &marked) in marked_rows.iter().enumerate().skip(1) {
        let xj = path.column(j);
        let easts = xj - x;
        if marked {
            debug_assert!(easts >= 1, "marked corner row must follow an East step");
            symbols.resize(symbols.len() + easts as usize - 1, 1);
            symbols.push(2);
        } else {
            symbols.resize(symbols.len() + easts as usize, 1);
            symbols.push(0);
        }
        x = xj;
    }
    symbols.resize(symbols.len() + (n as u32 - x) as usize, 1);
    let zeros = symbols.iter().filter(|&&s| s == 0).count();
    let ones = symbols.iter().filter(|&&s| s == 1).count();
    let twos = symbols.iter().filter(|&&s| s == 2).count();
    debug_assert_eq!(zeros + twos, n);
    debug_assert_eq!(ones + twos, n);
    LLTWord { symbols }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyck::DyckPath;

    #[test]
    fn worked_example_word() {
        // Z = [0,0,1,1,1,2] with all three corners marked
        let z = DyckPath::new(vec![0, 0, 1, 1, 1, 2]).unwrap();
        let m = MarkedPath::fully_marked(z);
        let w = encode_word(&m);
        assert_eq!(w.symbols(), &[0, 2, 0, 2, 2, 0, 1, 1, 1]);
    }

    #[test]
    fn unmarked_is_step_word() {
        let z = DyckPath::new(vec![0, 0, 1, 1, 1, 2]).unwrap();
        let w = encode_word(&MarkedPath::unmarked(z));
        assert_eq!(w.symbols(), &[0, 1, 0, 0, 1, 0, 1, 0, 0, 1, 1, 1]);
    }

    #[test]
    fn zero_area_two_marked() {
        let z = DyckPath::zero_area(2);
        let w = encode_word(&MarkedPath::fully_marked(z));
        assert_eq!(w.symbols(), &[0, 2, 1]);
    }

    #[test]
    fn paper_column_example_word() {
        // coarea [0,0,0,2,4,4,4,6]: corners [[2,4],[4,5],[6,8]], first two marked
        let z = DyckPath::from_coarea(&[0, 0, 0, 2, 4, 4, 4, 6]).unwrap();
        let corners: Vec<(u32, u32)> = z.corners().into_iter().collect();
        assert_eq!(corners, vec![(2, 4), (4, 5), (6, 8)]);
        let marks = [(2u32, 4u32), (4, 5)].into_iter().collect();
        let m = MarkedPath::new(z, marks).unwrap();
        let w = encode_word(&m);
        // 8 North-ish symbols and 8 East-ish symbols, two compressed
        assert_eq!(w.len(), 14);
        assert_eq!(w.symbols().iter().filter(|&&s| s == 2).count(), 2);
    }
}
