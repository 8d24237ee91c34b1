//! Longest common suffix of two prefixes, `lcsuf(T1[1..i], T2[1..j])`.
//!
//! Two interchangeable backends: a quadratic table filled by
//! `X[i,j] = X[i-1,j-1] + 1` on matching symbols, and a suffix array with
//! LCP array and sparse-table RMQ over `rev(T1) · # · rev(T2)`.

use crate::error::{Error, Result};

/// Above this many cells `LcsufMode::Auto` switches to the suffix array.
pub const QUADRATIC_CELL_LIMIT: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LcsufMode {
    #[default]
    Auto,
    Quadratic,
    SuffixArray,
}

#[derive(Debug, Clone)]
enum Backend {
    Quadratic { table: Vec<u32>, width: usize },
    SuffixArray { rank: Vec<u32>, rmq: SparseTable },
}

#[derive(Debug, Clone)]
pub struct LcsufIndex {
    n1: usize,
    n2: usize,
    backend: Backend,
}

impl LcsufIndex {
    pub fn build(t1: &[u8], t2: &[u8], mode: LcsufMode) -> Self {
        let (n1, n2) = (t1.len(), t2.len());
        let quadratic = match mode {
            LcsufMode::Quadratic => true,
            LcsufMode::SuffixArray => false,
            LcsufMode::Auto => (n1 + 1).saturating_mul(n2 + 1) <= QUADRATIC_CELL_LIMIT,
        };
        let backend = if quadratic {
            let width = n2 + 1;
            let mut table = vec![0u32; (n1 + 1) * width];
            for i in 1..=n1 {
                for j in 1..=n2 {
                    if t1[i - 1] == t2[j - 1] {
                        table[i * width + j] = table[(i - 1) * width + j - 1] + 1;
                    }
                }
            }
            Backend::Quadratic { table, width }
        } else {
            // bytes keep their value, the separator is 256
            let mut s: Vec<u32> = Vec::with_capacity(n1 + n2 + 1);
            s.extend(t1.iter().rev().map(|&c| c as u32));
            s.push(256);
            s.extend(t2.iter().rev().map(|&c| c as u32));
            let sa = suffix_array(&s);
            let mut rank = vec![0u32; s.len()];
            for (r, &p) in sa.iter().enumerate() {
                rank[p as usize] = r as u32;
            }
            let lcp = lcp_array(&s, &sa, &rank);
            Backend::SuffixArray { rank, rmq: SparseTable::new(lcp) }
        };
        LcsufIndex { n1, n2, backend }
    }

    pub fn mode(&self) -> LcsufMode {
        match self.backend {
            Backend::Quadratic { .. } => LcsufMode::Quadratic,
            Backend::SuffixArray { .. } => LcsufMode::SuffixArray,
        }
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.n1, self.n2)
    }

    /// Checked query; `i = 0` or `j = 0` gives 0.
    pub fn query(&self, i: usize, j: usize) -> Result<usize> {
        if i > self.n1 || j > self.n2 {
            return Err(Error::IndexOutOfRange { i, j, n1: self.n1, n2: self.n2 });
        }
        Ok(self.get(i, j))
    }

    /// Unchecked query for the solvers' inner loops.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> usize {
        debug_assert!(i <= self.n1 && j <= self.n2);
        if i == 0 || j == 0 {
            return 0;
        }
        match &self.backend {
            Backend::Quadratic { table, width } => table[i * width + j] as usize,
            Backend::SuffixArray { rank, rmq } => {
                let a = rank[self.n1 - i] as usize;
                let b = rank[self.n1 + 1 + self.n2 - j] as usize;
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                rmq.min(lo + 1, hi) as usize
            }
        }
    }
}

/// Prefix-doubling suffix array, `O(n log^2 n)`.
fn suffix_array(s: &[u32]) -> Vec<u32> {
    let n = s.len();
    let mut sa: Vec<u32> = (0..n as u32).collect();
    if n <= 1 {
        return sa;
    }
    let mut rank: Vec<u32> = s.to_vec();
    let mut next = vec![0u32; n];
    let mut k = 1;
    loop {
        // rank + 1 so that "past the end" (0) sorts first
        let key = |p: u32| {
            let p = p as usize;
            let second = if p + k < n { rank[p + k] + 1 } else { 0 };
            (rank[p], second)
        };
        sa.sort_unstable_by_key(|&p| key(p));
        next[sa[0] as usize] = 0;
        for w in 1..n {
            let bump = (key(sa[w - 1]) != key(sa[w])) as u32;
            next[sa[w] as usize] = next[sa[w - 1] as usize] + bump;
        }
        std::mem::swap(&mut rank, &mut next);
        if rank[sa[n - 1] as usize] as usize == n - 1 {
            break;
        }
        k *= 2;
    }
    sa
}

/// Kasai et al.; `lcp[r]` is the LCP of suffixes `sa[r-1]` and `sa[r]`, `lcp[0] = 0`.
fn lcp_array(s: &[u32], sa: &[u32], rank: &[u32]) -> Vec<u32> {
    let n = s.len();
    let mut lcp = vec![0u32; n];
    let mut h = 0usize;
    for p in 0..n {
        let r = rank[p] as usize;
        if r == 0 {
            h = 0;
            continue;
        }
        let q = sa[r - 1] as usize;
        while p + h < n && q + h < n && s[p + h] == s[q + h] {
            h += 1;
        }
        lcp[r] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}

#[derive(Debug, Clone)]
struct SparseTable {
    levels: Vec<Vec<u32>>,
}

impl SparseTable {
    fn new(base: Vec<u32>) -> Self {
        let mut levels = vec![base];
        let mut width = 1;
        while 2 * width <= levels[0].len() {
            let prev = levels.last().unwrap();
            let next: Vec<u32> = (0..prev.len() - width).map(|k| prev[k].min(prev[k + width])).collect();
            levels.push(next);
            width *= 2;
        }
        SparseTable { levels }
    }

    /// Minimum over the inclusive range `lo..=hi`.
    #[inline]
    fn min(&self, lo: usize, hi: usize) -> u32 {
        let level = (usize::BITS - 1 - (hi - lo + 1).leading_zeros()) as usize;
        let row = &self.levels[level];
        row[lo].min(row[hi + 1 - (1 << level)])
    }
}
