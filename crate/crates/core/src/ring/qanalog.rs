use crate::error::Error;
use crate::Result;

use super::BivarPoly;

/// The three q-analog constructors exposed on the CLI.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QAnalogKind {
    /// `[k]_q = 1 + q + ... + q^{k-1}`
    Int,
    /// `(q;q)_k = (1-q)(1-q^2)...(1-q^k)`
    Pochhammer,
    /// Gaussian binomial coefficient
    Binomial,
}

/// `[k]_q = 1 + q + ... + q^{k-1}`; `[0]_q = 0`.
pub fn q_int(k: u32) -> BivarPoly {
    let mut p = BivarPoly::zero();
    for i in 0..k {
        p += &BivarPoly::monomial(1, i, 0);
    }
    p
}

/// `(q;q)_k = (1-q)(1-q^2)...(1-q^k)`; the empty product is 1.
pub fn q_pochhammer(k: u32) -> BivarPoly {
    let mut p = BivarPoly::one();
    for i in 1..=k {
        p = p * (BivarPoly::one() - BivarPoly::monomial(1, i, 0));
    }
    p
}

/// Gaussian binomial `[n choose k]_q`, computed by the q-Pascal recurrence
/// `[n k] = [n-1 k-1] + q^k [n-1 k]` so every intermediate value stays in
/// `N[q]`.
pub fn q_binomial(n: u32, k: u32) -> BivarPoly {
    if k > n {
        return BivarPoly::zero();
    }
    let k = k.min(n - k);
    let mut row = vec![BivarPoly::one()]; // [m choose 0..] for growing m
    for m in 1..=n {
        let width = (k.min(m) + 1) as usize;
        let mut next = Vec::with_capacity(width);
        next.push(BivarPoly::one());
        for j in 1..width {
            let left = &row[j - 1];
            let up = if j < row.len() {
                &row[j] * BivarPoly::monomial(1, j as u32, 0)
            } else {
                BivarPoly::zero()
            };
            next.push(left + &up);
        }
        row = next;
    }
    row[k as usize].clone()
}

/// Spec-level entry point with argument validation.
pub fn q_analog(kind: QAnalogKind, args: &[i64]) -> Result<BivarPoly> {
    let check = |v: i64| -> Result<u32> {
        if v < 0 {
            Err(Error::NegativeArg("q-analog arguments must be nonnegative"))
        } else {
            Ok(v as u32)
        }
    };
    match kind {
        QAnalogKind::Int => {
            let [k] = args else {
                return Err(Error::Parse("int takes one argument".into()));
            };
            Ok(q_int(check(*k)?))
        }
        QAnalogKind::Pochhammer => {
            let [k] = args else {
                return Err(Error::Parse("pochhammer takes one argument".into()));
            };
            Ok(q_pochhammer(check(*k)?))
        }
        QAnalogKind::Binomial => {
            let [n, k] = args else {
                return Err(Error::Parse("binomial takes two arguments".into()));
            };
            let (n, k) = (check(*n)?, check(*k)?);
            if k > n {
                return Err(Error::BoundExceeded {
                    what: "binomial k",
                    got: k as i64,
                    max: n as i64,
                });
            }
            Ok(q_binomial(n, k))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn q_int_examples() {
        assert_eq!(q_int(2), BivarPoly::one() + BivarPoly::q());
        assert_eq!(q_int(0), BivarPoly::zero());
    }

    #[test]
    fn pochhammer_empty_product() {
        assert_eq!(q_pochhammer(0), BivarPoly::one());
    }

    /// Independent oracle: `[n choose k]_q = sum over partitions inside the
    /// (n-k) x k box of q^{|lambda|}`, by brute-force enumeration.
    fn box_partition_sum(rows: u32, cols: u32) -> BivarPoly {
        fn rec(max: u32, rows_left: u32, acc: u32, out: &mut BivarPoly) {
            if rows_left == 0 {
                *out += &BivarPoly::monomial(1, acc, 0);
                return;
            }
            for part in 0..=max {
                rec(part, rows_left - 1, acc + part, out);
            }
        }
        let mut out = BivarPoly::zero();
        rec(cols, rows, 0, &mut out);
        out
    }

    #[test]
    fn binomial_matches_box_partition_oracle() {
        // frozen from the oracle: [5 choose 3]_q counts partitions in a 2x3 box
        for (n, k) in [(5u32, 3u32), (6, 2), (7, 4), (4, 4), (4, 0)] {
            let expect = box_partition_sum(n - k, k);
            assert_eq!(q_binomial(n, k), expect, "n={n} k={k}");
        }
        assert_eq!(
            q_binomial(5, 3).eval(&BigInt::from(1), &BigInt::from(1)),
            BigInt::from(10)
        );
    }

    #[test]
    fn q_analog_rejects_bad_args() {
        assert!(q_analog(QAnalogKind::Int, &[-1]).is_err());
        assert!(q_analog(QAnalogKind::Binomial, &[3, 5]).is_err());
        assert!(q_analog(QAnalogKind::Binomial, &[5, 3]).is_ok());
    }

    #[test]
    fn pochhammer_shift_example() {
        // (q;q)_2 under q -> 1+q expands to q^3 + 2q^2
        let p = q_pochhammer(2).shift_q();
        let expect = BivarPoly::monomial(1, 3, 0) + BivarPoly::monomial(2, 2, 0);
        assert_eq!(p, expect);
    }
}
