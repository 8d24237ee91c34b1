//! Embedding a pattern into a text, or finding a common subsequence of two
//! texts, when the match may be cut into a bounded number of contiguous pieces.
//!
//! A string `P` is an `f`-segmental subsequence of `T` when `P = u_1 ⋯ u_f`
//! and the segments occur in `T` in order, separated by arbitrary gaps.
//! The crate decides and minimises `f` for a pattern ([`segmatch`]),
//! computes segmental LCS lengths with a shared segmentation ([`seglcs`])
//! or with independent budgets per text ([`indseglcs`]), and ships
//! brute-force references ([`oracle`]), an episode-matching reduction
//! ([`reduction`]) and a differential/benchmark harness ([`harness`]).

pub mod cli;
pub mod embedding;
pub mod error;
pub mod harness;
pub mod indseglcs;
pub mod lce;
pub mod oracle;
pub mod reduction;
pub mod seglcs;
pub mod segmatch;
pub mod text;

pub use embedding::{verify_embedding, Embedding, Segmentation};
pub use error::{Error, Result};
pub use text::{Budget, Text};

/// Is `p ∈ SegSub^f(t)`?
pub fn is_segmental_subsequence(t: &[u8], p: &[u8], f: Budget) -> bool {
    segmatch::min_segments(t, p).is_some_and(|k| k <= f.get())
}

pub(crate) fn serde_bytes_lossy<S: serde::Serializer>(bytes: &[u8], s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&String::from_utf8_lossy(bytes))
}
