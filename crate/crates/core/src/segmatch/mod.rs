//! Segment-constrained pattern matching: the quadratic dynamic program for
//! arbitrary budgets and the linear two-automata algorithm for `f <= 2`.

mod dp;
mod kmp;

pub use dp::{min_segments, MinSegTables};
pub use kmp::{
    compute_llpf, compute_lpf, compute_lsf, llpf_breakpoints, llpf_from_breakpoints, occurs, seg2_linear,
    seg2_linear_with_stats, BorderArrays, KmpAutomaton, Seg2Stats,
};

use crate::error::{Error, Result};
use crate::text::Budget;

/// Which decision procedure [`sege_with`] uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SegeAlgo {
    /// Linear-time path for `f <= 2`, dynamic program otherwise.
    #[default]
    Auto,
    /// Always the dynamic program.
    Dp,
    /// Linear-time path only; rejects budgets above 2.
    Kmp2,
}

/// Decides `p ∈ SegSub^f(t)`.
pub fn sege(t: &[u8], p: &[u8], f: Budget) -> bool {
    sege_with(t, p, f, SegeAlgo::Auto).expect("auto dispatch is infallible")
}

pub fn sege_with(t: &[u8], p: &[u8], f: Budget, algo: SegeAlgo) -> Result<bool> {
    let linear = |f: usize| if f == 1 { occurs(t, p) } else { seg2_linear(t, p) };
    match algo {
        SegeAlgo::Dp => Ok(min_segments(t, p).is_some_and(|k| k <= f.get())),
        SegeAlgo::Auto if f.get() <= 2 => Ok(linear(f.get())),
        SegeAlgo::Auto => Ok(min_segments(t, p).is_some_and(|k| k <= f.get())),
        SegeAlgo::Kmp2 if f.get() <= 2 => Ok(linear(f.get())),
        SegeAlgo::Kmp2 => Err(Error::InvalidSpec(format!("the linear algorithm needs f <= 2, got {f}"))),
    }
}
