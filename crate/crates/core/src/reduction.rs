//! Bounded-window episode matching reduced to segmental pattern matching.
//!
//! For binary `t` (length `n`), `p` (length `m`) and window bound `h`:
//!
//! ```text
//! t' = ($0)^(2n-2) $$ t[1] $$ t[2] $$ ... $$ t[n] $$ (0$)^(2n-2)
//! p' = $^(2n) p $^(2n)
//! f  = 3n + m + h - 4
//! ```
//!
//! Some factor of `t` of length at most `h` contains `p` as a subsequence
//! iff `p' ∈ SegSub^f(t')`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::oracle::{episode_bruteforce, OracleLimits};
use crate::segmatch::sege;
use crate::text::Budget;

pub const SEPARATOR: u8 = b'$';

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EpisodeReduction {
    #[serde(serialize_with = "crate::serde_bytes_lossy")]
    pub text: Vec<u8>,
    #[serde(serialize_with = "crate::serde_bytes_lossy")]
    pub pattern: Vec<u8>,
    pub budget: usize,
}

impl EpisodeReduction {
    pub fn budget(&self) -> Budget {
        Budget::new(self.budget).expect("reduction budget is positive")
    }
}

fn check_binary(s: &[u8]) -> Result<()> {
    match s.iter().find(|&&c| c != b'0' && c != b'1') {
        Some(&c) => Err(Error::NonBinary(c)),
        None => Ok(()),
    }
}

pub fn build_episode_reduction(t: &[u8], p: &[u8], h: usize) -> Result<EpisodeReduction> {
    check_binary(t)?;
    check_binary(p)?;
    let (n, m) = (t.len(), p.len());
    if n == 0 || m == 0 {
        return Err(Error::InvalidSpec("text and pattern must be non-empty".into()));
    }
    if h == 0 || h > n {
        return Err(Error::BoundOutOfRange { h, n });
    }
    let flank = 2 * n - 2;
    let mut text = Vec::with_capacity(11 * n - 6);
    for _ in 0..flank {
        text.extend_from_slice(b"$0");
    }
    text.extend_from_slice(b"$$");
    for &c in t {
        text.push(c);
        text.extend_from_slice(b"$$");
    }
    for _ in 0..flank {
        text.extend_from_slice(b"0$");
    }

    let mut pattern = Vec::with_capacity(m + 4 * n);
    pattern.resize(2 * n, SEPARATOR);
    pattern.extend_from_slice(p);
    pattern.resize(m + 4 * n, SEPARATOR);

    Ok(EpisodeReduction { text, pattern, budget: 3 * n + m + h - 4 })
}

/// Evaluates both sides of the reduction independently and reports whether they agree.
pub fn check_reduction_equivalence(t: &[u8], p: &[u8], h: usize, limits: OracleLimits) -> Result<bool> {
    let reduced = build_episode_reduction(t, p, h)?;
    let direct = episode_bruteforce(t, p, h, limits)?;
    let via_sege = sege(&reduced.text, &reduced.pattern, reduced.budget());
    Ok(direct == via_sege)
}
