use std::collections::BTreeSet;

use crate::error::Error;
use crate::symfunc::Composition;
use crate::Result;

use super::DyckPath;

/// A parking function: a Dyck path together with a labeling of the North
/// steps by the cars `1..n`, increasing up each column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParkingFunction {
    path: DyckPath,
    cars: Vec<u32>, // cars[j-1] = car in row j
}

/// The statistics attached to a parking function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PfStats {
    pub dinv: u32,
    /// dinv pairs recorded as car pairs `(a, b)` with `a < b`
    pub dinv_pairs: BTreeSet<(u32, u32)>,
    pub area: u32,
    /// reading word: cars by diagonals, highest first, right to left
    pub sigma: Vec<u32>,
    /// descent composition of the inverse of the reading word
    pub pides: Composition,
}

impl ParkingFunction {
    pub fn new(path: DyckPath, cars: Vec<u32>) -> Result<Self> {
        let n = path.n();
        if cars.len() != n {
            return Err(Error::InvalidParkingFunction(format!(
                "expected {n} cars, got {}",
                cars.len()
            )));
        }
        let mut seen = vec![false; n + 1];
        for &c in &cars {
            if c < 1 || c as usize > n || seen[c as usize] {
                return Err(Error::InvalidParkingFunction(format!(
                    "cars must be a permutation of 1..{n}: {cars:?}"
                )));
            }
            seen[c as usize] = true;
        }
        let word = path.area_word();
        for i in 0..n.saturating_sub(1) {
            if word[i + 1] == word[i] + 1 && cars[i + 1] < cars[i] {
                return Err(Error::InvalidParkingFunction(format!(
                    "cars must increase up each column: rows {}/{}",
                    i + 1,
                    i + 2
                )));
            }
        }
        Ok(ParkingFunction { path, cars })
    }

    pub fn path(&self) -> &DyckPath {
        &self.path
    }

    pub fn cars(&self) -> &[u32] {
        &self.cars
    }

    /// Car in 1-based row `j`.
    pub fn car(&self, j: usize) -> u32 {
        self.cars[j - 1]
    }

    /// dinv, reading word, pides and area.
    ///
    /// A primary pair is two cars in the same diagonal with the left one
    /// smaller; a secondary pair has the left car one diagonal higher and
    /// larger. The reading word scans diagonals from the highest down,
    /// right to left within each.
    pub fn statistics(&self) -> PfStats {
        let n = self.path.n();
        let word = self.path.area_word();
        let mut dinv_pairs = BTreeSet::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                let (ai, aj) = (word[i - 1], word[j - 1]);
                let (ci, cj) = (self.car(i), self.car(j));
                let hit = (ai == aj && ci < cj) || (ai == aj + 1 && ci > cj);
                if hit {
                    dinv_pairs.insert((ci.min(cj), ci.max(cj)));
                }
            }
        }
        // reading order: diagonal descending, then column descending
        let mut rows: Vec<usize> = (1..=n).collect();
        rows.sort_by(|&a, &b| {
            word[b - 1]
                .cmp(&word[a - 1])
                .then_with(|| self.path.column(b).cmp(&self.path.column(a)))
        });
        let sigma: Vec<u32> = rows.iter().map(|&r| self.car(r)).collect();
        let pides = descent_composition_of_inverse(&sigma);
        PfStats {
            dinv: dinv_pairs.len() as u32,
            dinv_pairs,
            area: self.path.area(),
            sigma,
            pides,
        }
    }
}

/// pides: the descent composition of the inverse word (w_i = position of the
/// value i in sigma; a descent at i means i sits to the right of i+1).
pub fn descent_composition_of_inverse(sigma: &[u32]) -> Composition {
    let n = sigma.len();
    let mut pos = vec![0usize; n + 1];
    for (i, &v) in sigma.iter().enumerate() {
        pos[v as usize] = i;
    }
    let descents: Vec<usize> = (1..n).filter(|&i| pos[i] > pos[i + 1]).collect();
    Composition::from_descents(&descents, n)
}

/// The maximal parking function: cars assigned by sorting cells by
/// (diagonal ascending, column ascending), so the reading word is `n...321`.
pub fn maximal_pf(path: &DyckPath) -> ParkingFunction {
    let n = path.n();
    let word = path.area_word();
    let mut rows: Vec<usize> = (1..=n).collect();
    rows.sort_by(|&a, &b| {
        word[a - 1]
            .cmp(&word[b - 1])
            .then_with(|| path.column(a).cmp(&path.column(b)))
    });
    let mut cars = vec![0u32; n];
    for (car, &row) in rows.iter().enumerate() {
        cars[row - 1] = car as u32 + 1;
    }
    ParkingFunction::new(path.clone(), cars).expect("maximal labeling is column increasing")
}

/// `dinvset(D)`: the dinv pairs of the maximal parking function, as car
/// pairs `(a, b)`, `a < b`.
pub fn maximal_pf_and_dinvset(path: &DyckPath) -> (ParkingFunction, BTreeSet<(u32, u32)>) {
    let pf = maximal_pf(path);
    let stats = pf.statistics();
    (pf, stats.dinv_pairs)
}

/// The dinv of the path itself: the dinv of its maximal parking function.
pub fn path_dinv(path: &DyckPath) -> u32 {
    maximal_pf(path).statistics().dinv
}

/// `forced(D)`: car pairs of the maximal labeling sitting vertically
/// adjacent in one column (the lower car below the higher).
pub fn forced_pairs(path: &DyckPath) -> BTreeSet<(u32, u32)> {
    let pf = maximal_pf(path);
    let word = path.area_word();
    let mut out = BTreeSet::new();
    for i in 1..path.n() {
        if word[i] == word[i - 1] + 1 {
            out.insert((pf.car(i), pf.car(i + 1)));
        }
    }
    out
}

/// All column-increasing labelings of the path.
pub fn enum_pf(path: &DyckPath) -> Vec<ParkingFunction> {
    let n = path.n();
    if n == 0 {
        return vec![ParkingFunction {
            path: path.clone(),
            cars: Vec::new(),
        }];
    }
    // columns are maximal runs of rows i, i+1 with a_{i+1} = a_i + 1
    let word = path.area_word();
    let mut columns: Vec<Vec<usize>> = Vec::new();
    for j in 1..=n {
        if j == 1 || word[j - 1] != word[j - 2] + 1 {
            columns.push(vec![j]);
        } else {
            columns.last_mut().unwrap().push(j);
        }
    }
    let mut out = Vec::new();
    let mut cars = vec![0u32; n];
    fn rec(
        columns: &[Vec<usize>],
        ci: usize,
        available: &[u32],
        cars: &mut Vec<u32>,
        path: &DyckPath,
        out: &mut Vec<ParkingFunction>,
    ) {
        if ci == columns.len() {
            out.push(ParkingFunction {
                path: path.clone(),
                cars: cars.clone(),
            });
            return;
        }
        let size = columns[ci].len();
        // choose which cars go in this column; they sort increasing upward
        let m = available.len();
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let chosen: Vec<u32> = idx.iter().map(|&i| available[i]).collect();
            for (k, &row) in columns[ci].iter().enumerate() {
                cars[row - 1] = chosen[k];
            }
            let mut rest: Vec<u32> = Vec::with_capacity(m - size);
            let mut take = idx.iter().peekable();
            for (i, &v) in available.iter().enumerate() {
                if take.peek() == Some(&&i) {
                    take.next();
                } else {
                    rest.push(v);
                }
            }
            rec(columns, ci + 1, &rest, cars, path, out);
            // next combination
            let mut k = size;
            loop {
                if k == 0 {
                    return;
                }
                k -= 1;
                if idx[k] != k + m - size {
                    idx[k] += 1;
                    for j in k + 1..size {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }
    let available: Vec<u32> = (1..=n as u32).collect();
    rec(&columns, 0, &available, &mut cars, path, &mut out);
    out
}
