use super::Partition;

/// Straighten a composition-indexed Schur function.
///
/// With `delta = (l-1, ..., 1, 0)`, returns `None` when `alpha + delta` has a
/// repeated entry (the function is zero), otherwise the sign of the sorting
/// permutation together with the partition `sort(alpha + delta) - delta`.
pub fn straighten_schur(alpha: &[u32]) -> Option<(i8, Partition)> {
    let l = alpha.len();
    if l == 0 {
        return Some((1, Partition::empty()));
    }
    let mut beta: Vec<i64> = alpha
        .iter()
        .enumerate()
        .map(|(i, &a)| a as i64 + (l - 1 - i) as i64)
        .collect();
    // sort descending, tracking the permutation sign via inversion count
    let mut sign = 1i8;
    for i in 1..beta.len() {
        let mut j = i;
        while j > 0 && beta[j] > beta[j - 1] {
            beta.swap(j, j - 1);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && beta[j] == beta[j - 1] {
            return None;
        }
    }
    let parts: Vec<u32> = beta
        .iter()
        .enumerate()
        .map(|(i, &b)| (b - (l - 1 - i) as i64) as u32)
        .filter(|&p| p > 0)
        .collect();
    Some((sign, Partition::new(parts).expect("sorted straightening")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn straighten_examples() {
        // already a partition
        assert_eq!(
            straighten_schur(&[2, 1]),
            Some((1, Partition::from(vec![2, 1])))
        );
        // alpha + delta = (2,2) repeats
        assert_eq!(straighten_schur(&[1, 2]), None);
        // alpha + delta = (1,3): one transposition
        assert_eq!(
            straighten_schur(&[0, 3]),
            Some((-1, Partition::from(vec![2, 1])))
        );
        // trailing zero entries vanish from the partition
        assert_eq!(
            straighten_schur(&[2, 0]),
            Some((1, Partition::from(vec![2])))
        );
        assert_eq!(straighten_schur(&[]), Some((1, Partition::empty())));
    }

    #[test]
    fn straighten_descent_compositions_are_partitions_or_cancel() {
        // compositions with strictly increasing adjacent pairs cancel in pairs
        assert_eq!(straighten_schur(&[1, 2, 3]), None);
        assert_eq!(
            straighten_schur(&[1, 1, 1]),
            Some((1, Partition::ones(3)))
        );
    }
}
