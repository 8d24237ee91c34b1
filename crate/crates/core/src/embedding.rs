//! Segmentations of a pattern and their embeddings into a text.

use serde::Serialize;

/// An ordered split `(u_1, ..., u_f)` of a pattern; segments may be empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Segmentation {
    segments: Vec<Vec<u8>>,
}

impl Segmentation {
    /// The single empty segment, i.e. the 1-segmentation of the empty string.
    pub fn empty() -> Self {
        Segmentation { segments: vec![Vec::new()] }
    }

    /// Returns `None` for an empty segment list; a segmentation has at least one segment.
    pub fn new(segments: Vec<Vec<u8>>) -> Option<Self> {
        if segments.is_empty() {
            None
        } else {
            Some(Segmentation { segments })
        }
    }

    pub fn segments(&self) -> &[Vec<u8>] {
        &self.segments
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of non-empty segments.
    pub fn non_empty_count(&self) -> usize {
        self.segments.iter().filter(|s| !s.is_empty()).count()
    }

    /// `u_1 ... u_f`.
    pub fn concat(&self) -> Vec<u8> {
        self.segments.concat()
    }
}

/// A segmentation together with the 1-based start position of each segment
/// in some text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Embedding {
    pub segmentation: Segmentation,
    pub starts: Vec<usize>,
}

impl Embedding {
    pub fn new(segmentation: Segmentation, starts: Vec<usize>) -> Self {
        Embedding { segmentation, starts }
    }
}

/// Checks that `t = p·u_1·g_1 ⋯ g_{f-1}·u_f·s` with each `u_k` starting at
/// its claimed position. Malformed position lists yield `false`.
pub fn verify_embedding(t: &[u8], e: &Embedding) -> bool {
    let segments = e.segmentation.segments();
    if segments.len() != e.starts.len() {
        return false;
    }
    // 1-based position of the first symbol not yet consumed
    let mut next_free = 1usize;
    for (seg, &start) in segments.iter().zip(&e.starts) {
        if start < next_free || start > t.len() + 1 {
            return false;
        }
        let end = start - 1 + seg.len();
        if end > t.len() || &t[start - 1..end] != seg.as_slice() {
            return false;
        }
        next_free = end + 1;
    }
    true
}
