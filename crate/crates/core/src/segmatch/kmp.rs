//! Linear-time machinery for budgets `f <= 2`: KMP automata, the
//! `lpf`/`lsf`/`llpf` arrays, and the two-pass `O(m)`-space decision.

/// KMP automaton of a pattern. Its state after reading a text prefix is the
/// length of the longest pattern prefix that is a suffix of what was read.
#[derive(Debug, Clone)]
pub struct KmpAutomaton<'p> {
    pattern: &'p [u8],
    /// `fail[q]`: length of the longest proper border of `pattern[..q]`.
    fail: Vec<usize>,
}

impl<'p> KmpAutomaton<'p> {
    pub fn new(pattern: &'p [u8]) -> Self {
        let m = pattern.len();
        let mut fail = vec![0usize; m + 1];
        let mut k = 0;
        for q in 1..m {
            while k > 0 && pattern[q] != pattern[k] {
                k = fail[k];
            }
            if pattern[q] == pattern[k] {
                k += 1;
            }
            fail[q + 1] = k;
        }
        KmpAutomaton { pattern, fail }
    }

    pub fn pattern_len(&self) -> usize {
        self.pattern.len()
    }

    /// One transition. A full match falls back along the failure link
    /// before consuming the next symbol.
    #[inline]
    pub fn step(&self, mut state: usize, c: u8) -> usize {
        let m = self.pattern.len();
        if m == 0 {
            return 0;
        }
        if state == m {
            state = self.fail[m];
        }
        while state > 0 && self.pattern[state] != c {
            state = self.fail[state];
        }
        if self.pattern[state] == c {
            state += 1;
        }
        state
    }

    /// States after each symbol of `text`.
    pub fn run<'a, I>(&'a self, text: I) -> impl Iterator<Item = usize> + 'a
    where
        I: IntoIterator<Item = u8>,
        I::IntoIter: 'a,
    {
        text.into_iter().scan(0usize, move |state, c| {
            *state = self.step(*state, c);
            Some(*state)
        })
    }
}

/// `lpf[i]` for `i = 1..=n` (returned 0-based): longest prefix of `p`
/// ending at text position `i`.
pub fn compute_lpf(t: &[u8], p: &[u8]) -> Vec<usize> {
    KmpAutomaton::new(p).run(t.iter().copied()).collect()
}

/// `lsf[i]` for `i = 1..=n` (returned 0-based): longest suffix of `p`
/// starting at text position `i`. Computed right to left with the
/// automaton of the reversed pattern.
pub fn compute_lsf(t: &[u8], p: &[u8]) -> Vec<usize> {
    let rev: Vec<u8> = p.iter().rev().copied().collect();
    let auto = KmpAutomaton::new(&rev);
    let mut out: Vec<usize> = auto.run(t.iter().rev().copied()).collect();
    out.reverse();
    out
}

/// Running maximum of `lpf`.
pub fn compute_llpf(lpf: &[usize]) -> Vec<usize> {
    lpf.iter()
        .scan(0usize, |best, &v| {
            *best = (*best).max(v);
            Some(*best)
        })
        .collect()
}

/// `(position, value)` pairs, 1-based, where `llpf` strictly increases.
pub fn llpf_breakpoints(lpf: impl IntoIterator<Item = usize>) -> Vec<(usize, usize)> {
    let mut best = 0;
    let mut out = Vec::new();
    for (k, v) in lpf.into_iter().enumerate() {
        if v > best {
            best = v;
            out.push((k + 1, v));
        }
    }
    out
}

/// Expands a breakpoint list back into `llpf[1..=n]`.
pub fn llpf_from_breakpoints(breakpoints: &[(usize, usize)], n: usize) -> Vec<usize> {
    let mut out = vec![0usize; n];
    let mut cur = 0;
    let mut next = breakpoints.iter().peekable();
    for (k, slot) in out.iter_mut().enumerate() {
        while let Some(&&(pos, v)) = next.peek() {
            if pos > k + 1 {
                break;
            }
            cur = v;
            next.next();
        }
        *slot = cur;
    }
    out
}

/// Materialized `lpf`, `lsf`, `llpf` and the `llpf` breakpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorderArrays {
    pub lpf: Vec<usize>,
    pub lsf: Vec<usize>,
    pub llpf: Vec<usize>,
    pub breakpoints: Vec<(usize, usize)>,
}

impl BorderArrays {
    pub fn compute(t: &[u8], p: &[u8]) -> Self {
        let lpf = compute_lpf(t, p);
        let lsf = compute_lsf(t, p);
        let llpf = compute_llpf(&lpf);
        let breakpoints = llpf_breakpoints(lpf.iter().copied());
        BorderArrays { lpf, lsf, llpf, breakpoints }
    }
}

/// Auxiliary storage used by one [`seg2_linear_with_stats`] call.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Seg2Stats {
    pub breakpoints: usize,
    /// 1-based `i` at which `llpf[i] + lsf[i+1] >= m` was first seen, scanning right to left.
    pub split: Option<usize>,
}

/// Decides `p ∈ SegSub^2(t)` in `O(n + m)` time and `O(m)` space.
pub fn seg2_linear(t: &[u8], p: &[u8]) -> bool {
    seg2_linear_with_stats(t, p).0
}

pub fn seg2_linear_with_stats(t: &[u8], p: &[u8]) -> (bool, Seg2Stats) {
    let m = p.len();
    let n = t.len();
    let mut stats = Seg2Stats::default();
    if m == 0 {
        return (true, stats);
    }
    if m > n {
        return (false, stats);
    }

    // pass 1: only the llpf breakpoints survive
    let forward = KmpAutomaton::new(p);
    let breakpoints = llpf_breakpoints(forward.run(t.iter().copied()));
    stats.breakpoints = breakpoints.len();
    // an occurrence ending at position n has no i < n to pair with
    if breakpoints.last().is_some_and(|&(_, v)| v == m) {
        return (true, stats);
    }

    // pass 2: lsf streamed right to left, never stored
    let rev: Vec<u8> = p.iter().rev().copied().collect();
    let backward = KmpAutomaton::new(&rev);
    let mut lsf_state = 0usize;
    let mut bp = breakpoints.len();
    for i in (1..n).rev() {
        // feed T[i+1]
        lsf_state = backward.step(lsf_state, t[i]);
        while bp > 0 && breakpoints[bp - 1].0 > i {
            bp -= 1;
        }
        let llpf_i = if bp == 0 { 0 } else { breakpoints[bp - 1].1 };
        if llpf_i + lsf_state >= m {
            stats.split = Some(i);
            return (true, stats);
        }
    }
    (false, stats)
}

/// Exact occurrence test through the forward automaton.
pub fn occurs(t: &[u8], p: &[u8]) -> bool {
    p.is_empty() || KmpAutomaton::new(p).run(t.iter().copied()).any(|q| q == p.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    const T: &[u8] = b"baacababbabcaacaabcba";
    const P: &[u8] = b"abbabaca";

    #[test]
    fn golden_arrays() {
        let a = BorderArrays::compute(T, P);
        assert_eq!(a.lpf, vec![0, 1, 1, 0, 1, 2, 1, 2, 3, 4, 5, 0, 1, 1, 0, 1, 1, 2, 0, 0, 1]);
        assert_eq!(a.llpf, vec![0, 1, 1, 1, 1, 2, 2, 2, 3, 4, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5]);
        assert_eq!(a.lsf, vec![0, 1, 3, 2, 1, 0, 1, 0, 0, 1, 0, 2, 1, 3, 2, 1, 1, 0, 0, 0, 1]);
        assert_eq!(a.breakpoints, vec![(2, 1), (6, 2), (9, 3), (10, 4), (11, 5)]);
        assert_eq!(llpf_from_breakpoints(&a.breakpoints, T.len()), a.llpf);
    }

    #[test]
    fn golden_decision() {
        let (yes, stats) = seg2_linear_with_stats(T, P);
        assert!(yes);
        // llpf[13] + lsf[14] = 5 + 3 is the first hit from the right
        assert_eq!(stats.split, Some(13));
        assert_eq!(stats.breakpoints, 5);
        assert!(!occurs(T, P));
    }

    #[test]
    fn empty_pattern() {
        assert_eq!(compute_lpf(b"abc", b""), vec![0, 0, 0]);
        assert_eq!(compute_lsf(b"abc", b""), vec![0, 0, 0]);
        assert!(seg2_linear(b"abc", b""));
        assert!(seg2_linear(b"", b""));
    }

    #[test]
    fn pattern_equals_text() {
        let t = b"abaab";
        assert_eq!(*compute_lpf(t, t).last().unwrap(), 5);
        assert_eq!(compute_lsf(t, t)[0], 5);
        assert!(seg2_linear(t, t));
        assert!(seg2_linear(b"a", b"a"));
    }

    #[test]
    fn small_decisions() {
        assert!(!seg2_linear(b"01", b"00"));
        assert!(seg2_linear(b"axxxxa", b"aa"));
        assert!(seg2_linear(b"aa", b"aa"));
        assert!(!seg2_linear(b"abacb", b"aab"));
        assert!(seg2_linear(b"xxab", b"ab"));
    }

    #[test]
    fn repeated_full_matches() {
        // overlapping occurrences keep reporting m
        assert_eq!(compute_lpf(b"aaaa", b"aa"), vec![1, 2, 2, 2]);
        assert_eq!(compute_lsf(b"aaaa", b"aa"), vec![2, 2, 2, 1]);
    }
}
