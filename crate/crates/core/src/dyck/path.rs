use std::collections::BTreeSet;
use std::fmt;

use crate::error::Error;
use crate::Result;

/// A Dyck path in the `n x n` square, stored by its area word: `a_i` is the
/// diagonal of the cell adjacent to the `i`-th North step, bottom to top.
/// Valid words satisfy `a_1 = 0` and `a_{i+1} <= a_i + 1`. The empty path
/// (`n = 0`) is allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    area_word: Vec<u32>,
}

impl DyckPath {
    pub fn new(area_word: Vec<u32>) -> Result<Self> {
        if let Some(&first) = area_word.first() {
            if first != 0 {
                return Err(Error::InvalidAreaWord(format!(
                    "first letter must be 0: {area_word:?}"
                )));
            }
        }
        if area_word.windows(2).any(|w| w[1] > w[0] + 1) {
            return Err(Error::InvalidAreaWord(format!(
                "letters may rise by at most one: {area_word:?}"
            )));
        }
        Ok(DyckPath { area_word })
    }

    /// Ingest a coarea list `Z[j] = (j-1) - a_j` (cells weakly to the left of
    /// the path in row `j`).
    pub fn from_coarea(coarea: &[u32]) -> Result<Self> {
        let mut word = Vec::with_capacity(coarea.len());
        for (j, &z) in coarea.iter().enumerate() {
            let row = j as u32;
            if z > row {
                return Err(Error::InvalidCoareaWord(format!(
                    "entry {z} exceeds its row index in {coarea:?}"
                )));
            }
            word.push(row - z);
        }
        DyckPath::new(word).map_err(|e| Error::InvalidCoareaWord(e.to_string()))
    }

    pub fn empty() -> Self {
        DyckPath {
            area_word: Vec::new(),
        }
    }

    /// Zero-area path `[0,0,...,0]`.
    pub fn zero_area(n: usize) -> Self {
        DyckPath {
            area_word: vec![0; n],
        }
    }

    /// Staircase path `[0,1,...,n-1]`.
    pub fn staircase(n: usize) -> Self {
        DyckPath {
            area_word: (0..n as u32).collect(),
        }
    }

    /// Balanced path whose North-run lengths, bottom to top, are `runs`;
    /// each North run is immediately followed by an East run of equal length.
    pub fn balanced(runs: &[u32]) -> Self {
        let mut word = Vec::new();
        for &r in runs {
            word.extend(0..r);
        }
        DyckPath { area_word: word }
    }

    pub fn n(&self) -> usize {
        self.area_word.len()
    }

    pub fn area_word(&self) -> &[u32] {
        &self.area_word
    }

    pub fn area(&self) -> u32 {
        self.area_word.iter().sum()
    }

    /// Column (x-coordinate) of the `j`-th North step, 1-based `j`.
    pub fn column(&self, j: usize) -> u32 {
        (j as u32 - 1) - self.area_word[j - 1]
    }

    /// Step word: `false` = North, `true` = East, from `(0,0)` to `(n,n)`.
    pub fn steps(&self) -> Vec<bool> {
        let n = self.n();
        let mut steps = Vec::with_capacity(2 * n);
        let mut x = 0u32;
        for j in 1..=n {
            let xj = self.column(j);
            steps.resize(steps.len() + (xj - x) as usize, true);
            steps.push(false);
            x = xj;
        }
        steps.resize(steps.len() + (n as u32 - x) as usize, true);
        steps
    }

    /// True when every North run is immediately followed by an East run of
    /// equal length.
    pub fn is_balanced(&self) -> bool {
        let steps = self.steps();
        let mut i = 0;
        while i < steps.len() {
            let mut north = 0;
            while i < steps.len() && !steps[i] {
                north += 1;
                i += 1;
            }
            let mut east = 0;
            while i < steps.len() && steps[i] {
                east += 1;
                i += 1;
            }
            if north != east {
                return false;
            }
        }
        true
    }

    /// North-run lengths of a balanced path, bottom to top.
    pub fn diagonal_runs(&self) -> Vec<u32> {
        let mut runs = Vec::new();
        for &a in &self.area_word {
            if a == 0 {
                runs.push(1);
            } else {
                *runs.last_mut().expect("area word starts at 0") += 1;
            }
        }
        runs
    }

    /// Removable corners: pairs `(i, j)` with `i = j - a_j - 1` at rows `j`
    /// whose North step is immediately preceded by an East step.
    pub fn corners(&self) -> BTreeSet<(u32, u32)> {
        let mut out = BTreeSet::new();
        for j in 2..=self.n() {
            let a = self.area_word[j - 1];
            if a <= self.area_word[j - 2] {
                out.insert((j as u32 - a - 1, j as u32));
            }
        }
        out
    }

    /// The dot pairs under the path: `{(i,j) : 1 <= j-i <= a_j}`. There is
    /// exactly one pair per area cell.
    pub fn path_dinvset(&self) -> BTreeSet<(u32, u32)> {
        let mut out = BTreeSet::new();
        for j in 1..=self.n() {
            let a = self.area_word[j - 1];
            for i in (j as u32 - a)..j as u32 {
                out.insert((i, j as u32));
            }
        }
        out
    }

    /// Delete, for each label `s` in `S`, the North step of row `s` and the
    /// East step of column `s`, splicing the remainder. The result is always
    /// a valid path (asserted).
    pub fn delete_cells(&self, s: &BTreeSet<u32>) -> DyckPath {
        let n = self.n();
        debug_assert!(s.iter().all(|&x| x >= 1 && x as usize <= n));
        let mut word = Vec::with_capacity(n - s.len());
        for j in 1..=n {
            if s.contains(&(j as u32)) {
                continue;
            }
            let xj = self.column(j);
            // surviving East steps before this North step: columns 1..=xj
            // minus the deleted ones
            let x = xj - s.iter().filter(|&&c| c <= xj).count() as u32;
            let row = word.len() as u32; // 0-based row index of the new path
            assert!(
                row >= x,
                "cell deletion produced an invalid path: row {row} column {x}"
            );
            word.push(row - x);
        }
        DyckPath::new(word).expect("cell deletion preserves validity")
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(DyckPath::empty());
        }
        let word = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad area word entry {p:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(word)
    }

    pub fn parse_coarea(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(DyckPath::empty());
        }
        let word = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad coarea entry {p:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::from_coarea(&word)
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.area_word.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// All `Catalan(n)` Dyck paths of size `n`, in lexicographic area-word order.
pub fn enum_dyck(n: usize) -> Result<Vec<DyckPath>> {
    if !(1..=12).contains(&n) {
        return Err(Error::BoundExceeded {
            what: "enum_dyck n",
            got: n as i64,
            max: 12,
        });
    }
    let mut out = Vec::new();
    let mut word: Vec<u32> = Vec::with_capacity(n);
    fn rec(n: usize, word: &mut Vec<u32>, out: &mut Vec<DyckPath>) {
        if word.len() == n {
            out.push(DyckPath {
                area_word: word.clone(),
            });
            return;
        }
        let top = word.last().map(|&a| a + 1).unwrap_or(0);
        for a in 0..=top {
            word.push(a);
            rec(n, word, out);
            word.pop();
        }
    }
    rec(n, &mut word, &mut out);
    Ok(out)
}
