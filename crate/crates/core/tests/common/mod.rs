#![allow(dead_code)]

use proptest::prelude::*;
use segsub::Budget;

pub fn b(f: usize) -> Budget {
    Budget::new(f).unwrap()
}

/// Strings over the first `alphabet` lowercase letters.
pub fn text(alphabet: u8, len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0..alphabet, len).prop_map(|v| v.into_iter().map(|c| b'a' + c).collect())
}

/// All strings over `a..a+alphabet` of length exactly `n`.
pub fn all_strings(alphabet: u8, n: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|s| {
                (0..alphabet).map(move |c| {
                    let mut t = s.clone();
                    t.push(b'a' + c);
                    t
                })
            })
            .collect();
    }
    out
}

use segsub::lce::{LcsufIndex, LcsufMode};
use segsub::seglcs::{ChainTable, DiagonalRun};

/// Exhaustive `L(i, s, h)` from the chain table, `n2 + 1` where no prefix of `t2` reaches `s`.
pub fn exhaustive_l(t1: &[u8], t2: &[u8], f: usize) -> impl Fn(usize, usize, usize) -> usize {
    let (n1, n2) = (t1.len(), t2.len());
    let table = ChainTable::compute(t1, t2, f);
    let inf = n2 + 1;
    move |i, s, h| {
        if s == 0 {
            return 0;
        }
        if h == 0 || i > n1 {
            return inf;
        }
        (0..=n2).find(|&j| table.get(i, j, h) >= s).unwrap_or(inf)
    }
}

/// `L(i,s,h) <= L(i-1,s,h)` and `L(i,s,h) > L(i-1,s-1,h)` on every finite computed cell,
/// reading absent cells as infinity. Returns the number of cells checked.
pub fn check_cell_monotonicity(run: &DiagonalRun) -> Result<usize, String> {
    let tables = run.tables.as_ref().ok_or("tables were not kept")?;
    let inf = tables.infinity() as usize;
    let mut checked = 0;
    for h in 1..=tables.budget() {
        let level = tables.level(h);
        let get = |i: usize, s: usize| -> usize {
            if s == 0 {
                return 0;
            }
            if i < s {
                return inf;
            }
            level.diagonals().get(i - s).and_then(|d| d.get(s - 1)).map_or(inf, |&v| v as usize)
        };
        for (d, diag) in level.diagonals().iter().enumerate() {
            for (k, &v) in diag.iter().enumerate() {
                let (s, i, v) = (k + 1, d + k + 1, v as usize);
                if v >= inf {
                    continue;
                }
                if v > get(i - 1, s) {
                    return Err(format!("L({i},{s},{h}) = {v} > L({},{s},{h})", i - 1));
                }
                if v <= get(i - 1, s - 1) {
                    return Err(format!("L({i},{s},{h}) = {v} <= L({},{},{h})", i - 1, s - 1));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}

/// `L(i,s,h) = min{ L(i-1,s,h), j_{i,s,h} }` on the exhaustive table, where
/// `j_{i,s,h} = min{ j : j >= L(i-x,s-x,h-1) + x, x = min(lcsuf(T1[1..i], T2[1..j]), s) }`.
pub fn check_shortest_prefix_recurrence(t1: &[u8], t2: &[u8], f: usize) -> Result<usize, String> {
    let (n1, n2) = (t1.len(), t2.len());
    let l = exhaustive_l(t1, t2, f);
    let lcsuf = LcsufIndex::build(t1, t2, LcsufMode::Quadratic);
    let inf = n2 + 1;
    let mut checked = 0;
    for h in 1..=f {
        for i in 1..=n1 {
            for s in 1..=n1 {
                let jm = (1..=n2)
                    .find(|&j| {
                        let x = lcsuf.get(i, j).min(s);
                        let base = l(i - x, s - x, h - 1);
                        base < inf && j >= base + x
                    })
                    .unwrap_or(inf);
                let want = l(i - 1, s, h).min(jm);
                if l(i, s, h) != want {
                    return Err(format!("L({i},{s},{h}) = {} but recurrence gives {want}", l(i, s, h)));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}
