//! Exponential-time reference implementations.
//!
//! Everything here enumerates embeddings or subsequences explicitly and
//! shares no code with the polynomial solvers, so the two can be checked
//! against each other.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::text::Budget;

/// Size limits for the brute-force routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_len: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { max_len: 14 }
    }
}

impl OracleLimits {
    pub fn with_max_len(max_len: usize) -> Self {
        OracleLimits { max_len }
    }

    fn check(&self, texts: &[&[u8]]) -> Result<()> {
        for t in texts {
            if t.len() > self.max_len {
                return Err(Error::SizeLimit { len: t.len(), limit: self.max_len });
            }
        }
        Ok(())
    }
}

/// Smallest `f` with `p ∈ SegSub^f(t)`, or `None` if `p` is not a subsequence.
pub fn min_segments_bruteforce(t: &[u8], p: &[u8], limits: OracleLimits) -> Result<Option<usize>> {
    limits.check(&[t, p])?;
    Ok(min_segments_unchecked(t, p))
}

fn min_segments_unchecked(t: &[u8], p: &[u8]) -> Option<usize> {
    if p.is_empty() {
        return Some(1);
    }
    let mut best = usize::MAX;
    search_min_segments(t, p, 0, None, 1, &mut best);
    (best != usize::MAX).then_some(best)
}

/// Match `p[j..]` into `t[from..]`; `last` is the text index of `p[j-1]`.
fn search_min_segments(
    t: &[u8],
    p: &[u8],
    j: usize,
    last: Option<usize>,
    segments: usize,
    best: &mut usize,
) {
    if j == p.len() {
        *best = (*best).min(segments);
        return;
    }
    if segments >= *best {
        return;
    }
    let from = last.map_or(0, |k| k + 1);
    // contiguous extension first so that good bounds are found early
    if let Some(k) = last {
        if k + 1 < t.len() && t[k + 1] == p[j] {
            search_min_segments(t, p, j + 1, Some(k + 1), segments, best);
        }
    }
    let opened = if last.is_some() { segments + 1 } else { segments };
    if opened >= *best {
        return;
    }
    let skip_start = if last.is_some() { from + 1 } else { from };
    let remaining = p.len() - j;
    for k in skip_start..t.len() {
        if t.len() - k < remaining {
            break;
        }
        if t[k] == p[j] {
            search_min_segments(t, p, j + 1, Some(k), opened, best);
        }
    }
}

/// Break masks of every embedding of `u` into `t`: bit `j-1` is set when
/// `u[j]` does not immediately follow `u[j-1]` in the text. Only the
/// inclusion-minimal masks are returned.
fn minimal_break_masks(t: &[u8], u: &[u8]) -> Vec<u32> {
    let mut masks = HashSet::new();
    collect_masks(t, u, 0, None, 0, &mut masks);
    let all: Vec<u32> = masks.into_iter().collect();
    let mut minimal: Vec<u32> = all
        .iter()
        .copied()
        .filter(|&m| !all.iter().any(|&o| o != m && o & m == o))
        .collect();
    minimal.sort_unstable();
    minimal
}

fn collect_masks(t: &[u8], u: &[u8], j: usize, last: Option<usize>, mask: u32, out: &mut HashSet<u32>) {
    if j == u.len() {
        out.insert(mask);
        return;
    }
    let from = last.map_or(0, |k| k + 1);
    for k in from..t.len() {
        if t.len() - k < u.len() - j {
            break;
        }
        if t[k] != u[j] {
            continue;
        }
        let mask = match last {
            Some(prev) if k != prev + 1 => mask | (1 << (j - 1)),
            _ => mask,
        };
        collect_masks(t, u, j + 1, Some(k), mask, out);
    }
}

fn is_subsequence(t: &[u8], u: &[u8]) -> bool {
    let mut it = t.iter();
    u.iter().all(|c| it.any(|d| d == c))
}

/// All distinct subsequences of `s`, longest first.
fn distinct_subsequences(s: &[u8]) -> Vec<Vec<u8>> {
    let n = s.len();
    let mut seen = HashSet::new();
    for bits in 0u32..(1u32 << n) {
        let u: Vec<u8> = (0..n).filter(|&k| bits >> k & 1 == 1).map(|k| s[k]).collect();
        seen.insert(u);
    }
    let mut out: Vec<Vec<u8>> = seen.into_iter().collect();
    out.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    out
}

/// `slcs(t1, t2, f)` for every budget at once: entry `f` of the returned
/// vector (for `1 <= f <= min(|t1|, |t2|) + 1`) is the answer for budget
/// `f`; larger budgets share the last entry. Entry 0 is unused and 0.
pub fn slcs_profile(t1: &[u8], t2: &[u8], limits: OracleLimits) -> Result<Vec<usize>> {
    limits.check(&[t1, t2])?;
    let (short, long) = if t1.len() <= t2.len() { (t1, t2) } else { (t2, t1) };
    let max_f = short.len() + 1;
    let mut profile = vec![0usize; max_f + 1];
    let mut settled = vec![false; max_f + 1];
    settled[0] = true;
    for u in distinct_subsequences(short) {
        if u.is_empty() || settled.iter().all(|&s| s) {
            break;
        }
        if !is_subsequence(long, &u) {
            continue;
        }
        let a = minimal_break_masks(short, &u);
        let b = minimal_break_masks(long, &u);
        let need = a
            .iter()
            .flat_map(|x| b.iter().map(move |y| (x | y).count_ones() as usize + 1))
            .min()
            .expect("u embeds in both texts");
        for f in need..=max_f {
            if !settled[f] {
                profile[f] = u.len();
                settled[f] = true;
            }
        }
    }
    Ok(profile)
}

/// Length of a longest string with one `f`-segmentation embeddable in both texts.
pub fn slcs_bruteforce(t1: &[u8], t2: &[u8], f: Budget, limits: OracleLimits) -> Result<usize> {
    let profile = slcs_profile(t1, t2, limits)?;
    Ok(profile[f.get().min(profile.len() - 1)])
}

/// Every distinct common subsequence with its minimum segment count in each text.
#[derive(Debug, Clone)]
pub struct IndProfile {
    entries: Vec<(usize, usize, usize)>,
}

impl IndProfile {
    pub fn query(&self, f1: Budget, f2: Budget) -> usize {
        self.entries
            .iter()
            .filter(|&&(_, a, b)| a <= f1.get() && b <= f2.get())
            .map(|&(len, _, _)| len)
            .max()
            .unwrap_or(0)
    }
}

pub fn indseglcs_profile(t1: &[u8], t2: &[u8], limits: OracleLimits) -> Result<IndProfile> {
    limits.check(&[t1, t2])?;
    let (short, other) = if t1.len() <= t2.len() { (t1, t2) } else { (t2, t1) };
    let mut entries = Vec::new();
    for u in distinct_subsequences(short) {
        let (Some(a), Some(b)) = (min_segments_unchecked(t1, &u), min_segments_unchecked(t2, &u)) else {
            debug_assert!(!is_subsequence(other, &u));
            continue;
        };
        entries.push((u.len(), a, b));
    }
    Ok(IndProfile { entries })
}

/// `mxl(SegSub^{f1}(t1) ∩ SegSub^{f2}(t2))` by subsequence enumeration.
pub fn indseglcs_bruteforce(
    t1: &[u8],
    t2: &[u8],
    f1: Budget,
    f2: Budget,
    limits: OracleLimits,
) -> Result<usize> {
    Ok(indseglcs_profile(t1, t2, limits)?.query(f1, f2))
}

/// Does some factor of `t` of length at most `h` contain `p` as a subsequence?
pub fn episode_bruteforce(t: &[u8], p: &[u8], h: usize, limits: OracleLimits) -> Result<bool> {
    limits.check(&[t, p])?;
    if p.is_empty() {
        return Ok(true);
    }
    for start in 0..t.len() {
        for end in start + 1..=t.len().min(start + h) {
            if is_subsequence(&t[start..end], p) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Textbook quadratic LCS length.
pub fn classic_lcs(a: &[u8], b: &[u8]) -> usize {
    let mut prev = vec![0usize; b.len() + 1];
    let mut curr = vec![0usize; b.len() + 1];
    for &ca in a {
        for (j, &cb) in b.iter().enumerate() {
            curr[j + 1] = if ca == cb { prev[j] + 1 } else { prev[j + 1].max(curr[j]) };
        }
        std::mem::swap(&mut prev, &mut curr);
    }
    prev[b.len()]
}

/// Longest common substring length by direct comparison of every start pair.
pub fn longest_common_substring(a: &[u8], b: &[u8]) -> usize {
    let mut best = 0;
    for i in 0..a.len() {
        for j in 0..b.len() {
            let run = a[i..].iter().zip(&b[j..]).take_while(|(x, y)| x == y).count();
            best = best.max(run);
        }
    }
    best
}
