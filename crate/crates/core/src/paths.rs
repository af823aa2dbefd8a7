//! Brute-force enumeration of Schröder paths from `(0,0)` to `(2n,0)` with
//! steps `U = (1,1)`, `D = (1,-1)`, `H = (2,0)`, never going below the axis.
//!
//! Used as an independent oracle for the moment sequences: weighting each
//! level step by `c` and each down step by `b` gives `mu~_n`.

use crate::algebra::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Up,
    Down,
    Level,
}

/// Visits every Schröder path of semilength `n` in lexicographic order
/// `U < D < H`.
pub fn for_each_path(n: usize, mut visit: impl FnMut(&[Step])) {
    let mut path = Vec::with_capacity(2 * n);
    walk(2 * n, 0, 0, &mut path, &mut visit);
}

fn walk(len: usize, x: usize, y: usize, path: &mut Vec<Step>, visit: &mut impl FnMut(&[Step])) {
    if x == len {
        if y == 0 {
            visit(path);
        }
        return;
    }
    let remaining = len - x;
    if y < remaining {
        path.push(Step::Up);
        walk(len, x + 1, y + 1, path, visit);
        path.pop();
    }
    if y > 0 {
        path.push(Step::Down);
        walk(len, x + 1, y - 1, path, visit);
        path.pop();
    }
    if remaining >= 2 + y {
        path.push(Step::Level);
        walk(len, x + 2, y, path, visit);
        path.pop();
    }
}

/// Number of `UD` factors.
pub fn peaks(path: &[Step]) -> usize {
    path.windows(2)
        .filter(|w| w[0] == Step::Up && w[1] == Step::Down)
        .count()
}

pub fn level_steps(path: &[Step]) -> usize {
    path.iter().filter(|&&s| s == Step::Level).count()
}

/// `counts[k]` is the number of paths of semilength `n` with `k` level steps.
pub fn count_by_level_steps(n: usize) -> Vec<u64> {
    let mut counts = vec![0; n + 1];
    for_each_path(n, |p| counts[level_steps(p)] += 1);
    counts
}

/// `counts[k]` is the number of paths of semilength `n` with `k` peaks.
pub fn count_by_peaks(n: usize) -> Vec<u64> {
    let mut counts = vec![0; n + 1];
    for_each_path(n, |p| counts[peaks(p)] += 1);
    counts
}

/// Sum over paths of `c^(level steps) b^(down steps)`.
pub fn weighted_count<S: Scalar>(n: usize, b: &S, c: &S) -> S {
    let mut by_levels = vec![0u64; n + 1];
    for_each_path(n, |p| by_levels[level_steps(p)] += 1);
    by_levels
        .iter()
        .enumerate()
        .map(|(k, &m)| S::from_i64(m as i64) * c.pow(k as u32) * b.pow((n - k) as u32))
        .fold(S::zero(), |a, x| a + x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::int;

    #[test]
    fn small_semilengths() {
        let mut all = Vec::new();
        for_each_path(2, |p| all.push(p.to_vec()));
        assert_eq!(all.len(), 6);
        assert!(all.contains(&vec![Step::Level, Step::Level]));
        assert!(all.contains(&vec![Step::Up, Step::Level, Step::Down]));
        let totals: Vec<u64> = (0..=6).map(|n| count_by_level_steps(n).iter().sum()).collect();
        assert_eq!(totals, [1, 2, 6, 22, 90, 394, 1806]);
    }

    #[test]
    fn refinements() {
        assert_eq!(count_by_level_steps(3), [5, 10, 6, 1]);
        assert_eq!(count_by_peaks(3), [5, 10, 6, 1]);
        for n in 0..=6 {
            assert_eq!(count_by_peaks(n), count_by_level_steps(n));
        }
        assert_eq!(weighted_count(2, &int(1), &int(2)), int(2 + 3 * 2 + 4));
    }
}
