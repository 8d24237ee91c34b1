//! Segmental LCS: the longest string with a single `f`-segmentation that
//! embeds into both texts.
//!
//! Two solvers are provided. The baseline evaluates
//! `C(i,j,h) = max{C(i,j-1,h), C(i-1,j,h), x + C(i-x,j-x,h-1)}` with
//! `x = lcsuf(T1[1..i], T2[1..j])` in `O(f n1 n2)` time. The diagonal
//! solver fills sparse tables of shortest-prefix lengths and, with the
//! default schedule, runs in `O(f · n2 · (n1 - ℓ + 1))` time where
//! `ℓ = slcs(T1, T2, f)`.

mod baseline;
mod diagonal;

pub use baseline::{ChainTable, SlcsWitness};
pub use diagonal::{DiagonalLevel, DiagonalRun, DiagonalTable, Schedule};

use crate::lce::{LcsufIndex, LcsufMode};
use crate::text::Budget;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SlcsAlgo {
    #[default]
    Diagonal,
    Baseline,
}

/// More than `min(n1, n2)` non-empty segments never help.
fn effective_budget(t1: &[u8], t2: &[u8], f: Budget) -> usize {
    f.get().min(t1.len().min(t2.len())).max(1)
}

fn shorter_first<'a>(t1: &'a [u8], t2: &'a [u8]) -> (&'a [u8], &'a [u8]) {
    if t1.len() <= t2.len() {
        (t1, t2)
    } else {
        (t2, t1)
    }
}

/// `slcs(t1, t2, f)` with the diagonal solver.
pub fn slcs(t1: &[u8], t2: &[u8], f: Budget) -> usize {
    slcs_diagonal(t1, t2, f)
}

pub fn slcs_with(t1: &[u8], t2: &[u8], f: Budget, algo: SlcsAlgo) -> usize {
    match algo {
        SlcsAlgo::Diagonal => slcs_diagonal(t1, t2, f),
        SlcsAlgo::Baseline => slcs_baseline(t1, t2, f),
    }
}

pub fn slcs_baseline(t1: &[u8], t2: &[u8], f: Budget) -> usize {
    slcs_baseline_counted(t1, t2, f).0
}

/// Baseline solver plus the number of table cells it evaluated.
pub fn slcs_baseline_counted(t1: &[u8], t2: &[u8], f: Budget) -> (usize, u64) {
    let f = effective_budget(t1, t2, f);
    let (a, b) = shorter_first(t1, t2);
    let lcsuf = LcsufIndex::build(a, b, LcsufMode::Auto);
    baseline::baseline_counted(a, b, f, &lcsuf)
}

pub fn slcs_diagonal(t1: &[u8], t2: &[u8], f: Budget) -> usize {
    slcs_diagonal_run(t1, t2, f, Schedule::default(), false).length
}

/// Diagonal solver with per-table counters; `keep_tables` retains every
/// computed sparse cell instead of only the live ones.
pub fn slcs_diagonal_run(t1: &[u8], t2: &[u8], f: Budget, schedule: Schedule, keep_tables: bool) -> DiagonalRun {
    let f = effective_budget(t1, t2, f);
    let (a, b) = shorter_first(t1, t2);
    let lcsuf = LcsufIndex::build(a, b, LcsufMode::Auto);
    diagonal::run(a, b, f, &lcsuf, schedule, keep_tables)
}

/// A witness for `slcs(t1, t2, f)` recovered from the full chain table.
/// Embeddings are given in the caller's `t1`/`t2` order.
pub fn slcs_witness(t1: &[u8], t2: &[u8], f: Budget) -> SlcsWitness {
    baseline::witness(t1, t2, effective_budget(t1, t2, f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::verify_embedding;

    fn b(f: usize) -> Budget {
        Budget::new(f).unwrap()
    }

    const T1: &[u8] = b"abcabbac";
    const T2: &[u8] = b"bcbcbbca";

    #[test]
    fn golden_answers_per_budget() {
        for (f, want) in [(1, 3), (2, 4), (3, 5)] {
            assert_eq!(slcs_baseline(T1, T2, b(f)), want, "baseline f={f}");
            assert_eq!(slcs_diagonal(T1, T2, b(f)), want, "diagonal f={f}");
        }
        let run = slcs_diagonal_run(T1, T2, b(3), Schedule::LevelMajor, false);
        assert_eq!(run.per_budget, vec![3, 4, 5]);
        let run = slcs_diagonal_run(T1, T2, b(3), Schedule::DiagonalMajor, false);
        assert_eq!(run.length, 5);
        assert_eq!(run.diagonals, vec![3, 3, 3]);
    }

    #[test]
    fn single_symbol() {
        assert_eq!(slcs_diagonal(b"a", b"a", b(1)), 1);
        assert_eq!(slcs_baseline(b"a", b"a", b(1)), 1);
        assert_eq!(slcs_diagonal(b"a", b"b", b(1)), 0);
    }

    #[test]
    fn identical_texts() {
        let t = b"abcabcbbac";
        for f in 1..4 {
            assert_eq!(slcs_diagonal(t, t, b(f)), t.len());
            assert_eq!(slcs_baseline(t, t, b(f)), t.len());
        }
        for schedule in [Schedule::LevelMajor, Schedule::DiagonalMajor] {
            let run = slcs_diagonal_run(t, t, b(1), schedule, false);
            assert_eq!(run.total_visits(), t.len() as u64);
        }
    }

    #[test]
    fn empty_inputs() {
        assert_eq!(slcs(b"", b"abc", b(2)), 0);
        assert_eq!(slcs_baseline(b"abc", b"", b(2)), 0);
        let w = slcs_witness(b"", b"abc", b(2));
        assert_eq!(w.length, 0);
        assert!(verify_embedding(b"", &w.in_t1));
        assert!(verify_embedding(b"abc", &w.in_t2));
    }

    #[test]
    fn order_of_arguments_is_irrelevant() {
        assert_eq!(slcs(b"abycdef", b"abcxdexf", b(2)), 4);
        assert_eq!(slcs(b"abcxdexf", b"abycdef", b(2)), 4);
    }

    #[test]
    fn two_segment_witness() {
        let w = slcs_witness(b"abcxdexf", b"abycdef", b(2));
        assert_eq!(w.length, 4);
        assert_eq!(w.segmentation.concat().len(), 4);
        assert!(w.segmentation.len() <= 2);
        assert!(verify_embedding(b"abcxdexf", &w.in_t1));
        assert!(verify_embedding(b"abycdef", &w.in_t2));
    }

    #[test]
    fn trivial_witness() {
        let w = slcs_witness(b"abc", b"abc", b(1));
        assert_eq!(w.length, 3);
        assert_eq!(w.segmentation.segments(), &[b"abc".to_vec()]);
        assert_eq!(w.in_t1.starts, vec![1]);
        assert_eq!(w.in_t2.starts, vec![1]);
    }

    #[test]
    fn huge_budget_is_clamped() {
        assert_eq!(slcs_baseline(T1, T2, b(usize::MAX)), 5);
        assert_eq!(slcs_diagonal(T1, T2, b(1 << 40)), 5);
    }
}
