//! Texts and segment budgets.

use std::fmt;
use std::num::NonZeroUsize;
use std::ops::Deref;

use crate::error::{Error, Result};

/// An immutable byte string.
///
/// Storage is 0-based; the documented formulas throughout the crate use
/// 1-based positions, so `T[i]` in a comment is `text[i - 1]` in code.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Text(Box<[u8]>);

impl Text {
    pub fn new(symbols: impl Into<Box<[u8]>>) -> Self {
        Text(symbols.into())
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Symbol at 1-based position `i`.
    pub fn at(&self, i: usize) -> Option<u8> {
        i.checked_sub(1).and_then(|k| self.0.get(k).copied())
    }

    /// The factor `T[i..j]` (1-based, inclusive); empty when `i > j`.
    pub fn slice(&self, i: usize, j: usize) -> &[u8] {
        if i > j || i == 0 {
            return &[];
        }
        &self.0[i - 1..j.min(self.0.len())]
    }
}

impl Deref for Text {
    type Target = [u8];

    fn deref(&self) -> &[u8] {
        &self.0
    }
}

impl AsRef<[u8]> for Text {
    fn as_ref(&self) -> &[u8] {
        &self.0
    }
}

impl From<&[u8]> for Text {
    fn from(s: &[u8]) -> Self {
        Text(s.into())
    }
}

impl From<Vec<u8>> for Text {
    fn from(s: Vec<u8>) -> Self {
        Text(s.into_boxed_slice())
    }
}

impl From<&str> for Text {
    fn from(s: &str) -> Self {
        Text(s.as_bytes().into())
    }
}

impl fmt::Debug for Text {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Text({:?})", String::from_utf8_lossy(&self.0))
    }
}

impl fmt::Display for Text {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&String::from_utf8_lossy(&self.0))
    }
}

/// A positive segment budget `f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Budget(NonZeroUsize);

impl Budget {
    pub const ONE: Budget = Budget(NonZeroUsize::MIN);

    pub fn new(f: usize) -> Result<Self> {
        NonZeroUsize::new(f)
            .map(Budget)
            .ok_or(Error::InvalidBudget(0))
    }

    /// Accepts signed input as it arrives from CLI or FFI callers.
    pub fn from_signed(f: i64) -> Result<Self> {
        if f <= 0 {
            return Err(Error::InvalidBudget(f));
        }
        Budget::new(f as usize)
    }

    pub fn get(self) -> usize {
        self.0.get()
    }

    pub fn clamp_to(self, max: usize) -> Budget {
        Budget::new(self.get().min(max)).unwrap_or(Budget::ONE)
    }
}

impl TryFrom<usize> for Budget {
    type Error = Error;

    fn try_from(f: usize) -> Result<Self> {
        Budget::new(f)
    }
}

impl fmt::Display for Budget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
