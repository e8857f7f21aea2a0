use std::collections::BTreeSet;

use crate::error::Error;
use crate::Result;

use super::parking::maximal_pf_and_dinvset;
use super::DyckPath;

/// A Dyck path with a set of marked removable corners. All corners marked
/// realizes the classical Dyck-path LLT of the zeta preimage; no corners
/// marked is the unicellular case; anything in between is a column LLT.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedPath {
    path: DyckPath,
    marks: BTreeSet<(u32, u32)>,
}

impl MarkedPath {
    pub fn new(path: DyckPath, marks: BTreeSet<(u32, u32)>) -> Result<Self> {
        let corners = path.corners();
        if !marks.is_subset(&corners) {
            return Err(Error::InvalidMarks(format!(
                "marks {marks:?} not within corners {corners:?} of {path}"
            )));
        }
        Ok(MarkedPath { path, marks })
    }

    pub fn unmarked(path: DyckPath) -> Self {
        MarkedPath {
            path,
            marks: BTreeSet::new(),
        }
    }

    pub fn fully_marked(path: DyckPath) -> Self {
        let marks = path.corners();
        MarkedPath { path, marks }
    }

    pub fn path(&self) -> &DyckPath {
        &self.path
    }

    pub fn marks(&self) -> &BTreeSet<(u32, u32)> {
        &self.marks
    }

    pub fn n(&self) -> usize {
        self.path.n()
    }

    /// Parse a marks argument: `all`, `none`, or a list like `1:2,2:4`.
    pub fn parse_marks(path: &DyckPath, spec: &str) -> Result<BTreeSet<(u32, u32)>> {
        match spec.trim() {
            "all" => Ok(path.corners()),
            "none" | "" => Ok(BTreeSet::new()),
            list => {
                let mut out = BTreeSet::new();
                for pair in list.split(',') {
                    let (a, b) = pair
                        .split_once(':')
                        .ok_or_else(|| Error::Parse(format!("bad mark {pair:?}, want i:j")))?;
                    let a = a.trim().parse::<u32>().map_err(|e| {
                        Error::Parse(format!("bad mark row {a:?}: {e}"))
                    })?;
                    let b = b.trim().parse::<u32>().map_err(|e| {
                        Error::Parse(format!("bad mark row {b:?}: {e}"))
                    })?;
                    out.insert((a, b));
                }
                let corners = path.corners();
                if !out.is_subset(&corners) {
                    return Err(Error::InvalidMarks(format!(
                        "marks {out:?} not within corners {corners:?}"
                    )));
                }
                Ok(out)
            }
        }
    }
}

/// The sweep-map image of a Dyck path, with its forced pairs placed as marks
/// at the removable corners of the image.
///
/// The area word of the image is `b_j = #{i < j : (i,j) in dinvset(D)}`,
/// which is well defined because the dinv pairs ending at `j` form a
/// contiguous interval ending at `j-1` (asserted). The construction also
/// asserts `area(zeta(D)) = dinv(D)` and `corners(zeta(D)) = forced(D)`.
pub fn zeta_and_corners(path: &DyckPath) -> MarkedPath {
    let n = path.n();
    let (_, dinvset) = maximal_pf_and_dinvset(path);
    let mut word = Vec::with_capacity(n);
    for j in 1..=n as u32 {
        let sources: Vec<u32> = dinvset
            .iter()
            .filter(|&&(_, b)| b == j)
            .map(|&(a, _)| a)
            .collect();
        let b = sources.len() as u32;
        // contiguous interval ending at j-1: this is what makes the area-word
        // rule well defined
        for (k, &src) in sources.iter().enumerate() {
            assert_eq!(
                src,
                j - b + k as u32,
                "dinv sources of {j} are not a contiguous interval in {path}"
            );
        }
        word.push(b);
    }
    let zeta = DyckPath::new(word).expect("zeta image has a valid area word");
    assert_eq!(zeta.area() as usize, dinvset.len(), "area(zeta) = dinv");
    let forced = super::parking::forced_pairs(path);
    let corners = zeta.corners();
    assert_eq!(corners, forced, "corners of the image are the forced pairs");
    assert_eq!(
        zeta.path_dinvset(),
        dinvset,
        "dots under the image are the dinv pairs"
    );
    MarkedPath {
        path: zeta,
        marks: forced,
    }
}
