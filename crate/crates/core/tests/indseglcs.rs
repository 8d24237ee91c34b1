mod common;

use std::collections::HashSet;

use common::{all_strings, b, text};
use proptest::prelude::*;
use segsub::indseglcs::{indseglcs, indseglcs_with, segmentation_score, FamilyChoice, Score};
use segsub::oracle::{classic_lcs, indseglcs_profile, OracleLimits};
use segsub::seglcs::slcs;
use segsub::is_segmental_subsequence;

/// The factorization `(v_0, u_1, v_1, ..., u_h[, v_h])` of `t` selected by `mask`:
/// maximal runs of selected positions are the segments, the rest are gaps.
fn factorization(t: &[u8], mask: u32) -> (Vec<Vec<u8>>, Vec<u8>, bool) {
    let mut parts: Vec<Vec<u8>> = vec![Vec::new()];
    let mut picked = Vec::new();
    let mut in_segment = false;
    for (i, &c) in t.iter().enumerate() {
        let sel = mask >> i & 1 == 1;
        if sel {
            picked.push(c);
        }
        if sel != in_segment {
            parts.push(Vec::new());
            in_segment = sel;
        }
        parts.last_mut().unwrap().push(c);
    }
    (parts, picked, in_segment)
}

#[test]
fn worked_examples() {
    assert_eq!(indseglcs(b"abcxdexf", b"abycdef", b(2), b(2)), 5);
    assert_eq!(indseglcs(b"abcxdexf", b"abycdef", b(3), b(2)), 6);
    assert_eq!(indseglcs(b"abac", b"acbc", b(2), b(2)), 3);
}

#[test]
fn score_examples() {
    assert_eq!(segmentation_score::<&[u8]>(&[b""]), Score(0));
    assert_eq!(segmentation_score(&[&b"ab"[..], b"c", b"d"]), Score(2));
}

#[test]
fn score_characterizes_membership_exhaustively() {
    for n in 0..=7 {
        for t in all_strings(2, n) {
            let mut best: std::collections::HashMap<Vec<u8>, i64> = Default::default();
            for mask in 0..1u32 << n {
                let (parts, picked, _) = factorization(&t, mask);
                let score = segmentation_score(&parts).0;
                let e = best.entry(picked).or_insert(i64::MIN);
                *e = (*e).max(score);
            }
            for f in 1..=n.max(1) {
                for (u, &score) in &best {
                    let member = is_segmental_subsequence(&t, u, b(f));
                    assert_eq!(member, score >= n as i64 - 2 * f as i64, "t={t:?} u={u:?} f={f}");
                }
            }
        }
    }
}

#[test]
fn segment_ending_scores_have_opposite_parity() {
    for n in 1..=9 {
        let t = vec![b'a'; n];
        for mask in 0..1u32 << n {
            let (parts, _, ends_in_segment) = factorization(&t, mask);
            if !ends_in_segment {
                continue;
            }
            let h = (parts.len() - 1).div_ceil(2);
            let score = segmentation_score(&parts).0;
            assert_eq!(score, n as i64 - 2 * h as i64 + 1);
            assert_ne!(score.rem_euclid(2), (n as i64).rem_euclid(2));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn matches_bruteforce(t1 in text(3, 0..=9), t2 in text(3, 0..=9)) {
        let profile = indseglcs_profile(&t1, &t2, OracleLimits::default()).unwrap();
        for f1 in 1..=6 {
            for f2 in 1..=6 {
                let want = profile.query(b(f1), b(f2));
                for choice in [FamilyChoice::Auto, FamilyChoice::Count, FamilyChoice::Score] {
                    prop_assert_eq!(indseglcs_with(&t1, &t2, b(f1), b(f2), choice), want, "f1={} f2={}", f1, f2);
                }
            }
        }
    }

    #[test]
    fn dominates_shared_segmentation(t1 in text(3, 0..=20), t2 in text(3, 0..=20), f in 1usize..6) {
        prop_assert!(indseglcs(&t1, &t2, b(f), b(f)) >= slcs(&t1, &t2, b(f)));
    }

    #[test]
    fn monotone_in_each_budget(t1 in text(2, 0..=14), t2 in text(2, 0..=14)) {
        for f1 in 1..8 {
            for f2 in 1..8 {
                let v = indseglcs(&t1, &t2, b(f1), b(f2));
                prop_assert!(indseglcs(&t1, &t2, b(f1 + 1), b(f2)) >= v);
                prop_assert!(indseglcs(&t1, &t2, b(f1), b(f2 + 1)) >= v);
            }
        }
    }

    #[test]
    fn forced_families_agree(t1 in text(3, 0..=16), t2 in text(3, 0..=16), f1 in 1usize..9, f2 in 1usize..9) {
        let count = indseglcs_with(&t1, &t2, b(f1), b(f2), FamilyChoice::Count);
        let score = indseglcs_with(&t1, &t2, b(f1), b(f2), FamilyChoice::Score);
        prop_assert_eq!(count, score);
        prop_assert_eq!(indseglcs(&t1, &t2, b(f1), b(f2)), count);
    }

    #[test]
    fn half_length_budgets_give_classic_lcs(t1 in text(3, 0..=40), t2 in text(3, 0..=40)) {
        let f1 = t1.len().div_ceil(2).max(1);
        let f2 = t2.len().div_ceil(2).max(1);
        prop_assert_eq!(indseglcs(&t1, &t2, b(f1), b(f2)), classic_lcs(&t1, &t2));
    }
}

#[test]
fn distinct_factorizations_cover_every_subsequence() {
    let t = b"abcab";
    let subs: HashSet<Vec<u8>> = (0..1u32 << t.len()).map(|m| factorization(t, m).1).collect();
    assert_eq!(subs.len(), 28);
}
