//! Solution-length-sensitive solver over sparse diagonal tables.
//!
//! `L(i, s, h)` is the shortest prefix length `j` of `T2` such that
//! `slcs(T1[1..i], T2[1..j], h) = s`, or infinity. Tables are filled one
//! diagonal `diag = i - s` at a time, left to right; a diagonal stops at
//! its first infinite cell.
//!
//! Cell `(i, s)` of `L_h` reads only diagonal `diag - 1` of `L_h` and
//! diagonal `diag` of `L_{h-1}`, so the tables can be swept in two orders:
//!
//! - `LevelMajor` finishes `L_1`, then `L_2`, and so on. Each table stops
//!   once no remaining diagonal can reach below its own deepest finite
//!   row, which yields `slcs(T1, T2, h)` for every `h` but costs
//!   `n2 · (n1 - ℓ_h + 1)` per table; with `ℓ_1` small that is quadratic.
//! - `DiagonalMajor` advances all tables one diagonal at a time and stops
//!   on the bound of `L_f` alone, for `f · n2 · (n1 - ℓ_f + 1)` work and
//!   `O(f · n1)` live cells.

use std::fmt::Write as _;

use crate::lce::LcsufIndex;

/// Diagonals of one table `L_h`: `diags[d][s - 1] = L(d + s, s, h)`.
/// Cells outside the stored prefixes read as infinity.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DiagonalLevel {
    diags: Vec<Vec<u32>>,
}

impl DiagonalLevel {
    pub fn diagonals(&self) -> &[Vec<u32>] {
        &self.diags
    }
}

/// Computed sparse cells of every table, for inspection and table dumps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalTable {
    inf: u32,
    levels: Vec<DiagonalLevel>,
}

impl DiagonalTable {
    pub fn infinity(&self) -> u32 {
        self.inf
    }

    /// Level `h` for `1 <= h <= f`.
    pub fn level(&self, h: usize) -> &DiagonalLevel {
        &self.levels[h - 1]
    }

    pub fn budget(&self) -> usize {
        self.levels.len()
    }

    /// All computed cells as `(h, i, s, value)` with `None` for infinity.
    pub fn cells(&self) -> Vec<(usize, usize, usize, Option<usize>)> {
        let mut out = Vec::new();
        for (hk, level) in self.levels.iter().enumerate() {
            for (d, diag) in level.diags.iter().enumerate() {
                for (sk, &v) in diag.iter().enumerate() {
                    let value = (v < self.inf).then_some(v as usize);
                    out.push((hk + 1, d + sk + 1, sk + 1, value));
                }
            }
        }
        out
    }

    /// One `h diag s value` line per computed cell, `inf` for the sentinel.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (hk, level) in self.levels.iter().enumerate() {
            for (d, diag) in level.diags.iter().enumerate() {
                for (sk, &v) in diag.iter().enumerate() {
                    let value = if v >= self.inf { "inf".to_string() } else { v.to_string() };
                    let _ = writeln!(out, "{} {} {} {}", hk + 1, d, sk + 1, value);
                }
            }
        }
        out
    }
}

/// Order in which the sparse tables are swept.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Schedule {
    #[default]
    DiagonalMajor,
    LevelMajor,
}

/// Outcome of one diagonal-solver run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalRun {
    pub length: usize,
    /// `MaxVIdx[h]` for `h = 1..=f`: the deepest finite row of each table.
    /// Under `LevelMajor` this is `slcs(T1, T2, h)`; under `DiagonalMajor`
    /// only the last entry is guaranteed to be, the others are lower bounds.
    pub per_budget: Vec<usize>,
    /// Inner-loop iterations (one `lcsuf` query each) per table.
    pub visits: Vec<u64>,
    /// Number of diagonals processed per table.
    pub diagonals: Vec<usize>,
    pub tables: Option<DiagonalTable>,
}

impl DiagonalRun {
    pub fn total_visits(&self) -> u64 {
        self.visits.iter().sum()
    }
}

/// Expects `t1` to be the shorter text and `f >= 1`.
pub(crate) fn run(
    t1: &[u8],
    t2: &[u8],
    f: usize,
    lcsuf: &LcsufIndex,
    schedule: Schedule,
    keep_tables: bool,
) -> DiagonalRun {
    match schedule {
        Schedule::LevelMajor => level_major(t1.len(), t2.len(), f, lcsuf, keep_tables),
        Schedule::DiagonalMajor => diagonal_major(t1.len(), t2.len(), f, lcsuf, keep_tables),
    }
}

fn level_major(n1: usize, n2: usize, f: usize, lcsuf: &LcsufIndex, keep_tables: bool) -> DiagonalRun {
    let inf = n2 as u32 + 1;
    let mut per_budget = Vec::with_capacity(f);
    let mut visits = Vec::with_capacity(f);
    let mut diagonals = Vec::with_capacity(f);
    let mut kept = Vec::new();
    // level h = 0: L(i, 0, 0) = 0, everything else infinite
    let mut prev = DiagonalLevel::default();

    for _h in 1..=f {
        let mut cur = DiagonalLevel::default();
        let mut max_row = 0usize;
        let mut count = 0u64;
        let mut diag = 0usize;
        while diag + max_row < n1 {
            let left = diag.checked_sub(1).map(|d| cur.diags[d].as_slice());
            let lower = prev.diags.get(diag).map_or(&[][..], Vec::as_slice);
            let (cells, reached) = fill_diagonal(diag, n1, n2, inf, left, lower, lcsuf, &mut count);
            cur.diags.push(cells);
            max_row = max_row.max(reached);
            diag += 1;
        }
        per_budget.push(max_row);
        visits.push(count);
        diagonals.push(diag);
        if keep_tables {
            kept.push(cur.clone());
        }
        prev = cur;
    }

    DiagonalRun {
        length: per_budget.last().copied().unwrap_or(0),
        per_budget,
        visits,
        diagonals,
        tables: keep_tables.then_some(DiagonalTable { inf, levels: kept }),
    }
}

fn diagonal_major(n1: usize, n2: usize, f: usize, lcsuf: &LcsufIndex, keep_tables: bool) -> DiagonalRun {
    let inf = n2 as u32 + 1;
    let mut per_budget = vec![0usize; f];
    let mut visits = vec![0u64; f];
    let mut kept = vec![DiagonalLevel::default(); if keep_tables { f } else { 0 }];
    // last[h - 1] is diagonal `diag - 1` of L_h
    let mut last: Vec<Vec<u32>> = vec![Vec::new(); f];
    let mut diag = 0usize;

    while diag + per_budget[f - 1] < n1 {
        for h in 0..f {
            // done[h - 1] already holds diagonal `diag` of L_{h-1}
            let (done, rest) = last.split_at_mut(h);
            let lower = done.last().map_or(&[][..], Vec::as_slice);
            let left = (diag > 0).then_some(rest[0].as_slice());
            let (cells, reached) = fill_diagonal(diag, n1, n2, inf, left, lower, lcsuf, &mut visits[h]);
            per_budget[h] = per_budget[h].max(reached);
            if keep_tables {
                kept[h].diags.push(cells.clone());
            }
            rest[0] = cells;
        }
        diag += 1;
    }

    DiagonalRun {
        length: per_budget[f - 1],
        per_budget,
        visits,
        diagonals: vec![diag; f],
        tables: keep_tables.then_some(DiagonalTable { inf, levels: kept }),
    }
}

/// `L(diag + s, s, ·)` from the stored prefix of one diagonal.
#[inline]
fn cell(diag: &[u32], s: usize, inf: u32) -> u32 {
    if s == 0 {
        0
    } else {
        diag.get(s - 1).copied().unwrap_or(inf)
    }
}

/// Fills diagonal `diag` of `L_h` from diagonal `diag - 1` of `L_h` (`left`,
/// absent for the first diagonal) and diagonal `diag` of `L_{h-1}` (`lower`).
/// Returns the cells and the deepest finite row reached.
#[allow(clippy::too_many_arguments)]
fn fill_diagonal(
    diag: usize,
    n1: usize,
    n2: usize,
    inf: u32,
    left: Option<&[u32]>,
    lower: &[u32],
    lcsuf: &LcsufIndex,
    visits: &mut u64,
) -> (Vec<u32>, usize) {
    let mut cells: Vec<u32> = Vec::new();
    let mut j = 1usize;
    for s in 1..=n1 - diag {
        let i = s + diag;
        // L(i-1, s, h)
        let above = left.map_or(inf, |d| cell(d, s, inf));
        let mut found = None;
        while j <= n2 {
            *visits += 1;
            let x = lcsuf.get(i, j).min(s);
            if j as u32 == above {
                found = Some(j);
                break;
            }
            if x > 0 {
                // L(i-x, s-x, h-1) sits on the same diagonal
                let base = cell(lower, s - x, inf);
                if base < inf && j >= x + base as usize {
                    found = Some(j);
                    break;
                }
            }
            j += 1;
        }
        match found {
            Some(hit) => {
                cells.push(hit as u32);
                j = hit + 1;
            }
            None => {
                cells.push(inf);
                return (cells, s - 1);
            }
        }
    }
    (cells, n1 - diag)
}
