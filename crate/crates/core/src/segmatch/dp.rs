//! `O(nm)` dynamic program for the minimum number of segments.
//!
//! `D[i,j]` is the cost of turning `T[1..i]` into `P[1..j]` when the last
//! operation deleted `T[i]`; `E[i,j]` drops that restriction. Starting an
//! interior block deletion costs one, prefix deletions are free, and the
//! free suffix deletion is realised by minimising `E[i,m]` over `i`.

use std::fmt::Write as _;

/// Smallest `f` such that `p ∈ SegSub^f(t)`, or `None` when `p` is not a
/// subsequence of `t`. Keeps two rows per table.
pub fn min_segments(t: &[u8], p: &[u8]) -> Option<usize> {
    let (n, m) = (t.len(), p.len());
    if m == 0 {
        return Some(1);
    }
    let inf = n + m + 1;
    let mut d_prev = vec![inf; m + 1];
    let mut e_prev = vec![inf; m + 1];
    d_prev[0] = 0;
    e_prev[0] = 0;
    let mut d_cur = vec![0usize; m + 1];
    let mut e_cur = vec![0usize; m + 1];
    let mut best = inf;
    for i in 1..=n {
        d_cur[0] = 0;
        e_cur[0] = 0;
        for j in 1..=m {
            let d = d_prev[j].min((e_prev[j] + 1).min(inf));
            d_cur[j] = d;
            e_cur[j] = if t[i - 1] == p[j - 1] { e_prev[j - 1].min(d) } else { d };
        }
        best = best.min(e_cur[m]);
        std::mem::swap(&mut d_prev, &mut d_cur);
        std::mem::swap(&mut e_prev, &mut e_cur);
    }
    (best < inf).then_some(best + 1)
}

/// Full `(n+1) x (m+1)` `D` and `E` tables, kept for inspection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinSegTables {
    n: usize,
    m: usize,
    inf: usize,
    d: Vec<usize>,
    e: Vec<usize>,
}

impl MinSegTables {
    pub fn compute(t: &[u8], p: &[u8]) -> Self {
        let (n, m) = (t.len(), p.len());
        let inf = n + m + 1;
        let w = m + 1;
        let mut d = vec![inf; (n + 1) * w];
        let mut e = vec![inf; (n + 1) * w];
        for i in 0..=n {
            d[i * w] = 0;
            e[i * w] = 0;
        }
        for i in 1..=n {
            for j in 1..=m {
                let dv = d[(i - 1) * w + j].min((e[(i - 1) * w + j] + 1).min(inf));
                d[i * w + j] = dv;
                e[i * w + j] = if t[i - 1] == p[j - 1] { e[(i - 1) * w + j - 1].min(dv) } else { dv };
            }
        }
        MinSegTables { n, m, inf, d, e }
    }

    pub fn infinity(&self) -> usize {
        self.inf
    }

    pub fn d(&self, i: usize, j: usize) -> usize {
        self.d[i * (self.m + 1) + j]
    }

    pub fn e(&self, i: usize, j: usize) -> usize {
        self.e[i * (self.m + 1) + j]
    }

    /// `d = min_{1<=i<=n} E[i,m]`, or `E[0,0] = 0` for an empty pattern.
    pub fn min_cost(&self) -> Option<usize> {
        if self.m == 0 {
            return Some(0);
        }
        (1..=self.n).map(|i| self.e(i, self.m)).filter(|&v| v < self.inf).min()
    }

    pub fn min_segments(&self) -> Option<usize> {
        self.min_cost().map(|d| d + 1)
    }

    /// Tab-separated rows of `D` then `E`, each under a one-word header, `inf` for the sentinel.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (name, table) in [("D", &self.d), ("E", &self.e)] {
            out.push_str(name);
            out.push('\n');
            for row in table.chunks(self.m + 1) {
                let cells: Vec<String> = row
                    .iter()
                    .map(|&v| if v >= self.inf { "inf".to_string() } else { v.to_string() })
                    .collect();
                let _ = writeln!(out, "{}", cells.join("\t"));
            }
        }
        out
    }
}
