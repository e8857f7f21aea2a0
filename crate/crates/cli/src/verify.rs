//! Verification suites: exhaustive exact checks over bounded instance
//! families, reported with first-class counterexamples. Every suite is
//! deterministic given `(suite, bound)`; the sampled suite uses a fixed
//! seed. Instances run on a rayon pool and reports merge in instance order.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use anyhow::{bail, Result};
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use lltlab_core::dyck::{enum_dyck, zeta_and_corners, DyckPath, MarkedPath};
use lltlab_core::epositivity::{
    areaprime_recursion, conjecture_expansion_classical, conjecture_expansion_marked,
    dinv_mass_check, kreweras_relation_check, nabla_hilbert_at, possible_downsets,
    shift_and_e_expand, staircase_recursion_check,
};
use lltlab_core::hall_littlewood::{
    apply_hl, b_positive_tableaux, b_word, balanced_identity, dh_poly, e_nk, enk_twist, EnkMethod,
    HLKind, PathRelation,
};
use lltlab_core::llt::{cm_run, llt_classical, llt_marked};
use lltlab_core::macdonald::forgotten_certificate_check;
use lltlab_core::ring::BivarPoly;
use lltlab_core::symfunc::{compositions, partitions, Basis, SymF};

/// One failed instance: what was checked, what was expected, what came out.
#[derive(Clone, Debug)]
pub struct Failure {
    pub instance: String,
    pub expected: String,
    pub got: String,
}

/// Machine-readable outcome of one suite run; empty failures means pass.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub suite: String,
    pub bound: u32,
    pub instances: usize,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

impl VerifyReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "suite": self.suite,
            "bound": self.bound,
            "instances": self.instances,
            "pass": self.pass(),
            "failures": self.failures.iter().map(|f| json!({
                "instance": f.instance,
                "expected": f.expected,
                "got": f.got,
            })).collect::<Vec<_>>(),
            "notes": self.notes,
            "elapsed_ms": self.elapsed.as_millis() as u64,
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "suite {} (bound {}): {} over {} instances in {:.2?}\n",
            self.suite,
            self.bound,
            if self.pass() { "PASS" } else { "FAIL" },
            self.instances,
            self.elapsed
        ));
        for f in &self.failures {
            out.push_str(&format!(
                "  counterexample {}\n    expected {}\n    got      {}\n",
                f.instance, f.expected, f.got
            ));
        }
        for n in &self.notes {
            out.push_str(&format!("  note: {n}\n"));
        }
        out
    }
}

/// Names accepted by `verify --suite`.
pub const SUITES: &[&str] = &[
    "conj31",
    "conj32",
    "recursion",
    "cmroute",
    "cmsample",
    "zeta",
    "prop31",
    "thm31",
    "kreweras",
    "nabla",
    "macdonald",
    "bpos",
    "btableaux",
    "enk",
    "dh",
    "balanced",
];

pub fn run_suite(suite: &str, bound: u32) -> Result<VerifyReport> {
    let start = Instant::now();
    let mut report = match suite {
        "conj31" => conj31(bound)?,
        "conj32" => conj32(bound)?,
        "recursion" => recursion(bound)?,
        "cmroute" => cmroute(bound)?,
        "cmsample" => cmsample(bound)?,
        "zeta" => zeta_suite(bound)?,
        "prop31" => prop31(bound)?,
        "thm31" => thm31(bound)?,
        "kreweras" => kreweras(bound)?,
        "nabla" => nabla(bound)?,
        "macdonald" => macdonald(bound)?,
        "bpos" => bpos(bound)?,
        "btableaux" => btableaux(bound)?,
        "enk" => enk_suite(bound)?,
        "dh" => dh_suite(bound)?,
        "balanced" => balanced_suite(bound)?,
        _ => bail!("unknown suite {suite:?}; expected one of {SUITES:?}"),
    };
    report.elapsed = start.elapsed();
    Ok(report)
}

fn blank(suite: &str, bound: u32) -> VerifyReport {
    VerifyReport {
        suite: suite.to_string(),
        bound,
        instances: 0,
        failures: Vec::new(),
        notes: Vec::new(),
        elapsed: Duration::ZERO,
    }
}

/// Run `check` over the instances in parallel, merging in instance order.
fn run_instances<I, F>(report: &mut VerifyReport, instances: Vec<I>, check: F)
where
    I: Send + Sync,
    F: Fn(&I) -> Option<Failure> + Sync,
{
    report.instances += instances.len();
    let failures: Vec<Failure> = instances
        .par_iter()
        .map(&check)
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    report.failures.extend(failures);
}

fn all_paths_upto(n: u32) -> Vec<DyckPath> {
    (1..=n as usize)
        .flat_map(|k| enum_dyck(k).expect("bounded enumeration"))
        .collect()
}

/// All `(Z, T)` with `T` a subset of the corners of `Z`, sizes `1..=n`.
fn all_marked_upto(n: u32) -> Vec<MarkedPath> {
    let mut out = Vec::new();
    for z in all_paths_upto(n) {
        let corners: Vec<(u32, u32)> = z.corners().into_iter().collect();
        for mask in 0u32..(1 << corners.len()) {
            let marks: BTreeSet<(u32, u32)> = corners
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &c)| c)
                .collect();
            out.push(MarkedPath::new(z.clone(), marks).expect("corner subsets"));
        }
    }
    out
}

fn conj31(bound: u32) -> Result<VerifyReport> {
    let mut report = blank("conj31", bound);
    run_instances(&mut report, all_paths_upto(bound), |d| {
        let conjectured = conjecture_expansion_classical(d);
        let direct = shift_and_e_expand(&llt_classical(d).ok()?).ok()?;
        if conjectured == direct {
            None
        } else {
            Some(Failure {
                instance: format!("D = [{d}]"),
                expected: direct.to_string(),
                got: conjectured.to_string(),
            })
        }
    });
    Ok(report)
}

fn conj32(bound: u32) -> Result<VerifyReport> {
    let mut report = blank("conj32", bound);
    run_instances(&mut report, all_marked_upto(bound), |m| {
        let conjectured = conjecture_expansion_marked(m);
        let direct = shift_and_e_expand(&llt_marked(m).ok()?).ok()?;
        if conjectured == direct {
            None
        } else {
            Some(Failure {
                instance: format!("Z = [{}], T = {:?}", m.path(), m.marks()),
                expected: direct.to_string(),
                got: conjectured.to_string(),
            })
        }
    });
    Ok(report)
}

fn recursion(bound: u32) -> Result<VerifyReport> {
    let mut report = blank("recursion", bound);
    run_instances(&mut report, all_marked_upto(bound), |m| {
        let rec = areaprime_recursion(m).ok()?;
        let direct = llt_marked(m).ok()?;
        if rec.equivalent(&direct) {
            None
        } else {
            Some(Failure {
                instance: format!("Z = [{}], T = {:?}", m.path(), m.marks()),
                expected: direct.convert(Basis::S).to_string(),
                got: rec.convert(Basis::S).to_string(),
            })
        }
    });
    Ok(report)
}

/// The uniform q-power offset `c` with `a = q^c b`, when one exists.
fn q_offset(a: &SymF, b: &SymF) -> Option<i64> {
    if a.is_zero() && b.is_zero() {
        return Some(0);
    }
    let a = a.convert(Basis::S);
    let b = b.convert(Basis::S);
    if a.num_terms() != b.num_terms() {
        return None;
    }
    let mut offset: Option<i64> = None;
    for (lam, ca) in a.terms() {
        let cb = b.coeff(lam);
        if cb.is_zero() {
            return None;
        }
        let ratio = ca / &cb;
        if !ratio.den().is_one() && ratio.den().num_terms() != 1 {
            return None;
        }
        let num = ratio.num();
        if num.num_terms() != 1 {
            return None;
        }
        let ((nq, nt), nc) = num.leading()?;
        let ((dq, dt), dc) = ratio.den().leading()?;
        if nt != dt || nc != &BigInt::from(1) || dc != &BigInt::from(1) {
            return None;
        }
        let c = nq as i64 - dq as i64;
        match offset {
            None => offset = Some(c),
            Some(prev) if prev == c => {}
            _ => return None,
        }
    }
    offset
}

fn cmroute(bound: u32) -> Result<VerifyReport> {
    let mut report = blank("cmroute", bound);
    let offsets: std::sync::Mutex<BTreeSet<i64>> = std::sync::Mutex::new(BTreeSet::new());
    run_instances(&mut report, all_marked_upto(bound), |m| {
        let fast = cm_run(m);
        let direct = llt_marked(m).ok()?;
        if fast.equivalent(&direct) {
            offsets.lock().unwrap().insert(0);
            return None;
        }
        if let Some(c) = q_offset(&fast, &direct) {
            offsets.lock().unwrap().insert(c);
            return Some(Failure {
                instance: format!(
                    "Z = [{}], T = {:?} (uniform offset q^{c})",
                    m.path(),
                    m.marks()
                ),
                expected: direct.to_string(),
                got: fast.to_string(),
            });
        }
        Some(Failure {
            instance: format!("Z = [{}], T = {:?}", m.path(), m.marks()),
            expected: direct.to_string(),
            got: fast.to_string(),
        })
    });
    let offsets = offsets.into_inner().unwrap();
    report
        .notes
        .push(format!("observed operator/permutation q-offsets: {offsets:?}"));
    Ok(report)
}

fn zeta_suite(bound: u32) -> Result<VerifyReport> {
    let mut report = blank("zeta", bound);
    run_instances(&mut report, all_paths_upto(bound), |d| {
        let image = zeta_and_corners(d);
        let via_image = llt_marked(&image).ok()?;
        let direct = llt_classical(d).ok()?;
        if via_image.equivalent(&direct) {
            None
        } else {
            Some(Failure {
                instance: format!("D = [{d}]"),
                expected: direct.to_string(),
                got: via_image.to_string(),
            })
        }
    });
    Ok(report)
}

/// Seeded random `(Z, T)` instances at sizes 6 and 7, checked against the
/// operator route: the poset expansion must equal the shifted cm value and
/// the downset recursion must equal the plain cm value.
fn cmsample(count: u32) -> Result<VerifyReport> {
    let mut report = blank("cmsample", count);
    let mut rng = ChaCha8Rng::seed_from_u64(0x6c6c746c6162);
    let mut instances = Vec::new();
    let pool6 = enum_dyck(6)?;
    let pool7 = enum_dyck(7)?;
    for i in 0..count {
        let pool = if i % 2 == 0 { &pool6 } else { &pool7 };
        let z = pool.choose(&mut rng).expect("nonempty pool").clone();
        let corners: Vec<(u32, u32)> = z.corners().into_iter().collect();
        let marks: BTreeSet<(u32, u32)> = corners
            .iter()
            .filter(|_| rng.gen_bool(0.5))
            .copied()
            .collect();
        instances.push(MarkedPath::new(z, marks).expect("corner subsets"));
    }
    run_instances(&mut report, instances, |m| {
        let reference = cm_run(m);
        let conjectured = conjecture_expansion_marked(m);
        let shifted = shift_and_e_expand(&reference).ok()?;
        if conjectured != shifted {
            return Some(Failure {
                instance: format!("Z = [{}], T = {:?} (poset expansion)", m.path(), m.marks()),
                expected: shifted.to_string(),
                got: conjectured.to_string(),
            });
        }
        let rec = areaprime_recursion(m).ok()?;
        if !rec.equivalent(&reference) {
            return Some(Failure {
                instance: format!("Z = [{}], T = {:?} (downset recursion)", m.path(), m.marks()),
                expected: reference.to_string(),
                got: rec.convert(Basis::S).to_string(),
            });
        }
        None
    });
    // the column instance's possible-downset count is pinned here as well
    let z = DyckPath::from_coarea(&[0, 1, 1, 1, 2, 2, 6, 6])?;
    let t: BTreeSet<(u32, u32)> = [(2, 5), (6, 7)].into_iter().collect();
    let n_downsets = possible_downsets(&z, &t).len();
    report.instances += 1;
    if n_downsets != 12 {
        report.failures.push(Failure {
            instance: "column instance possible-downset count".into(),
            expected: "12".into(),
            got: n_downsets.to_string(),
        });
    }
    Ok(report)
}

fn prop31(bound: u32) -> Result<VerifyReport> {
    let mut report = blank("prop31", bound);
    run_instances(&mut report, enum_dyck(bound as usize)?, |d| {
        match dinv_mass_check(d) {
            Ok(true) => None,
            Ok(false) => Some(Failure {
                instance: format!("D = [{d}]"),
                expected: "(1+q)^dinv(D)".into(),
                got: "different coefficient mass".into(),
            }),
            Err(e) => Some(Failure {
                instance: format!("D = [{d}]"),
                expected: "check to run".into(),
                got: e.to_string(),
            }),
        }
    });
    Ok(report)
}

fn thm31(bound: u32) -> Result<VerifyReport> {
    let mut report = blank("thm31", bound);
    run_instances(&mut report, (2..=bound).collect::<Vec<_>>(), |&n| {
        match staircase_recursion_check(n) {
            Ok(true) => None,
            Ok(false) => Some(Failure {
                instance: format!("n = {n}"),
                expected: "zero-area recursion to hold".into(),
                got: "sides differ".into(),
            }),
            Err(e) => Some(Failure {
                instance: format!("n = {n}"),
                expected: "check to run".into(),
                got: e.to_string(),
            }),
        }
    });
    Ok(report)
}

fn kreweras(bound: u32) -> Result<VerifyReport> {
    let mut report = blank("kreweras", bound);
    run_instances(&mut report, (1..=bound).collect::<Vec<_>>(), |&n| {
        match kreweras_relation_check(n) {
            Ok(true) => None,
            Ok(false) => Some(Failure {
                instance: format!("n = {n}"),
                expected: "P_n(1+q) to match the Hilbert specialization".into(),
                got: "sides differ".into(),
            }),
            Err(e) => Some(Failure {
                instance: format!("n = {n}"),
                expected: "check to run".into(),
                got: e.to_string(),
            }),
        }
    });
    Ok(report)
}

/// Hilbert values at `(q,t) = (2,1)`: the connected-graph counts.
const CONNECTED_GRAPHS: [u64; 6] = [1, 4, 38, 728, 26704, 1866256];

fn nabla(bound: u32) -> Result<VerifyReport> {
    let mut report = blank("nabla", bound);
    if bound as usize > CONNECTED_GRAPHS.len() {
        bail!(
            "nabla suite has reference values only for n <= {}",
            CONNECTED_GRAPHS.len()
        );
    }
    run_instances(&mut report, (1..=bound).collect::<Vec<_>>(), |&n| {
        let got = match nabla_hilbert_at(n, 2, 1) {
            Ok(v) => v,
            Err(e) => {
                return Some(Failure {
                    instance: format!("n = {n}"),
                    expected: "evaluation".into(),
                    got: e.to_string(),
                })
            }
        };
        let expected = BigInt::from(CONNECTED_GRAPHS[(n - 1) as usize]);
        if got == expected {
            None
        } else {
            Some(Failure {
                instance: format!("n = {n}"),
                expected: expected.to_string(),
                got: got.to_string(),
            })
        }
    });
    Ok(report)
}

fn macdonald(bound: u32) -> Result<VerifyReport> {
    let mut report = blank("macdonald", bound);
    run_instances(&mut report, (1..=bound).collect::<Vec<_>>(), |&m| {
        match forgotten_certificate_check(m) {
            Ok(true) => None,
            Ok(false) => Some(Failure {
                instance: format!("m = {m}"),
                expected: "certificate identity and positivity".into(),
                got: "failed".into(),
            }),
            Err(e) => Some(Failure {
                instance: format!("m = {m}"),
                expected: "check to run".into(),
                got: e.to_string(),
            }),
        }
    });
    Ok(report)
}

fn bpos(bound: u32) -> Result<VerifyReport> {
    let mut report = blank("bpos", bound);
    let words: Vec<_> = (1..=bound).flat_map(compositions).collect();
    run_instances(&mut report, words, |p| {
        let f = match b_word(p) {
            Ok(f) => f,
            Err(e) => {
                return Some(Failure {
                    instance: format!("p = {p}"),
                    expected: "word to apply".into(),
                    got: e.to_string(),
                })
            }
        };
        match shift_and_e_expand(&f) {
            Ok(ee) if ee.is_positive() => None,
            Ok(ee) => Some(Failure {
                instance: format!("p = {p}"),
                expected: "nonnegative shifted e-expansion".into(),
                got: ee.to_string(),
            }),
            Err(e) => Some(Failure {
                instance: format!("p = {p}"),
                expected: "polynomial e-expansion".into(),
                got: e.to_string(),
            }),
        }
    });
    Ok(report)
}

fn btableaux(bound: u32) -> Result<VerifyReport> {
    let mut report = blank("btableaux", bound);
    let mut instances = Vec::new();
    for a in 1..=bound {
        for d in 0..=(bound - a) {
            for mu in partitions(d) {
                instances.push((a, mu));
            }
        }
    }
    run_instances(&mut report, instances, |(a, mu)| {
        let emu = SymF::basis_element(Basis::E, mu.clone());
        let op = apply_hl(HLKind::B, *a, &emu).ok()?;
        let shifted = shift_and_e_expand(&op).ok()?;
        let tab = b_positive_tableaux(*a, mu).ok()?;
        if tab == shifted {
            None
        } else {
            Some(Failure {
                instance: format!("a = {a}, mu = {mu}"),
                expected: shifted.to_string(),
                got: tab.to_string(),
            })
        }
    });
    Ok(report)
}

fn enk_suite(bound: u32) -> Result<VerifyReport> {
    let mut report = blank("enk", bound);
    let mut instances = Vec::new();
    for n in 1..=bound {
        for k in 1..=n {
            instances.push((n, k));
        }
    }
    run_instances(&mut report, instances, |&(n, k)| {
        let poch = e_nk(n, k, EnkMethod::Poch).ok()?;
        let comp = e_nk(n, k, EnkMethod::Comp).ok()?;
        if !poch.equivalent(&comp) {
            return Some(Failure {
                instance: format!("E({n},{k}) poch vs comp"),
                expected: poch.convert(Basis::H).to_string(),
                got: comp.convert(Basis::H).to_string(),
            });
        }
        let bword = e_nk(n, k, EnkMethod::BWord).ok()?;
        let twist = enk_twist(&poch, n, k);
        if !bword.equivalent(&twist) {
            return Some(Failure {
                instance: format!("E({n},{k}) bword vs twist"),
                expected: twist.convert(Basis::E).to_string(),
                got: bword.convert(Basis::E).to_string(),
            });
        }
        if !twist.convert(Basis::E).has_polynomial_coeffs() {
            return Some(Failure {
                instance: format!("E({n},{k}) twist"),
                expected: "polynomial coefficients".into(),
                got: twist.convert(Basis::E).to_string(),
            });
        }
        None
    });
    // sum over k recovers e_n
    let sums: Vec<u32> = (1..=bound).collect();
    run_instances(&mut report, sums, |&n| {
        let mut acc = SymF::zero(Basis::P);
        for k in 1..=n {
            acc = acc.add(&e_nk(n, k, EnkMethod::Poch).ok()?.convert(Basis::P));
        }
        if acc.equivalent(&SymF::gen(Basis::E, n)) {
            None
        } else {
            Some(Failure {
                instance: format!("sum of E({n},k)"),
                expected: format!("e[{n}]"),
                got: acc.convert(Basis::E).to_string(),
            })
        }
    });
    Ok(report)
}

fn dh_suite(bound: u32) -> Result<VerifyReport> {
    let mut report = blank("dh", bound);
    // golden value at n = 2: e_1^2 + (q+t-1) e_2
    report.instances += 1;
    let d2 = dh_poly(2)?.convert(Basis::E);
    let expect = "(q+t-1)*e[2]+e[1,1]";
    let got = d2.to_string();
    if got != expect {
        report.failures.push(Failure {
            instance: "dh_poly(2)".into(),
            expected: expect.into(),
            got,
        });
    }
    let mut symmetric = Vec::new();
    run_instances(&mut report, (1..=bound).collect::<Vec<_>>(), |&n| {
        let f = match dh_poly(n) {
            Ok(f) => f,
            Err(e) => {
                return Some(Failure {
                    instance: format!("n = {n}"),
                    expected: "computation".into(),
                    got: e.to_string(),
                })
            }
        };
        match shift_and_e_expand(&f) {
            Ok(ee) if ee.is_positive() => None,
            Ok(ee) => Some(Failure {
                instance: format!("n = {n}"),
                expected: "nonnegative shifted e-expansion".into(),
                got: ee.to_string(),
            }),
            Err(e) => Some(Failure {
                instance: format!("n = {n}"),
                expected: "polynomial e-expansion".into(),
                got: e.to_string(),
            }),
        }
    });
    for n in 1..=bound {
        let f = dh_poly(n)?.convert(Basis::E);
        let swapped = f.map_coeffs(|c| {
            c.subst(&BivarPoly::t(), &BivarPoly::q())
                .expect("polynomial substitution")
        });
        symmetric.push((n, f.equivalent(&swapped)));
    }
    report.notes.push(format!(
        "q<->t symmetry status (reported as data, not asserted): {symmetric:?}"
    ));
    Ok(report)
}

fn balanced_suite(bound: u32) -> Result<VerifyReport> {
    let mut report = blank("balanced", bound);
    let mut instances = Vec::new();
    for n in 1..=bound {
        for k in 1..=n {
            instances.push((n, k));
        }
    }
    let notes: std::sync::Mutex<Vec<String>> = std::sync::Mutex::new(Vec::new());
    run_instances(&mut report, instances, |&(n, k)| {
        let rep = match balanced_identity(n, k) {
            Ok(r) => r,
            Err(e) => {
                return Some(Failure {
                    instance: format!("n = {n}, k = {k}"),
                    expected: "report".into(),
                    got: e.to_string(),
                })
            }
        };
        for c in &rep.per_path {
            if c.relation != PathRelation::Equal {
                notes.lock().unwrap().push(format!(
                    "word {} vs path [{}]: {:?}",
                    c.word, c.path, c.relation
                ));
            }
        }
        if rep.aggregate_equal {
            None
        } else {
            Some(Failure {
                instance: format!("n = {n}, k = {k}"),
                expected: rep.rhs.to_string(),
                got: rep.lhs.to_string(),
            })
        }
    });
    let notes = notes.into_inner().unwrap();
    if notes.is_empty() {
        report
            .notes
            .push("every operator word equals its balanced-path LLT exactly".into());
    } else {
        report.notes.extend(notes);
    }
    Ok(report)
}
