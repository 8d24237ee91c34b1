use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum InstanceKind {
    Sege,
    Seglcs,
    Indseglcs,
}

/// Parameters for [`generate_instance`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceSpec {
    pub kind: InstanceKind,
    /// Length of the text (`sege`) or of `t1`.
    pub len1: usize,
    /// Length of the pattern (`sege`) or of `t2`; ignored when `similarity` is set.
    pub len2: usize,
    pub alphabet: usize,
    pub seed: u64,
    /// When set, `t2` is `t1` with this many substitutions at distinct random positions.
    pub similarity: Option<usize>,
    pub f1: usize,
    pub f2: Option<usize>,
}

impl InstanceSpec {
    pub fn new(kind: InstanceKind, len1: usize, len2: usize, alphabet: usize, seed: u64) -> Self {
        InstanceSpec { kind, len1, len2, alphabet, seed, similarity: None, f1: 1, f2: None }
    }
}

/// The instance file format: one JSON object per instance. For `sege`,
/// `t1` is the text and `t2` the pattern.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub kind: InstanceKind,
    pub t1: String,
    pub t2: String,
    pub f1: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub f2: Option<usize>,
}

impl Instance {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("instances serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::InvalidSpec(e.to_string()))
    }
}

pub(crate) fn random_text(rng: &mut impl Rng, len: usize, alphabet: usize) -> Vec<u8> {
    (0..len).map(|_| b'a' + rng.gen_range(0..alphabet) as u8).collect()
}

/// Replaces `edits` symbols of `t` at distinct positions with different symbols.
pub(crate) fn substitute(rng: &mut impl Rng, t: &[u8], edits: usize, alphabet: usize) -> Vec<u8> {
    let mut out = t.to_vec();
    for pos in sample(rng, t.len(), edits) {
        let old = (out[pos] - b'a') as usize;
        let shift = rng.gen_range(1..alphabet);
        out[pos] = b'a' + ((old + shift) % alphabet) as u8;
    }
    out
}

pub fn generate_instance(spec: &InstanceSpec) -> Result<Instance> {
    if spec.alphabet == 0 || spec.alphabet > 26 {
        return Err(Error::InvalidSpec(format!("alphabet size {} outside 1..=26", spec.alphabet)));
    }
    if spec.f1 == 0 || spec.f2 == Some(0) {
        return Err(Error::InvalidSpec("budgets must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let t1 = random_text(&mut rng, spec.len1, spec.alphabet);
    let t2 = match spec.similarity {
        Some(k) if k > spec.len1 => {
            return Err(Error::InvalidSpec(format!("{k} edits exceed text length {}", spec.len1)))
        }
        Some(k) if k > 0 && spec.alphabet < 2 => {
            return Err(Error::InvalidSpec("substitutions need an alphabet of size >= 2".into()))
        }
        Some(k) => substitute(&mut rng, &t1, k, spec.alphabet),
        None => random_text(&mut rng, spec.len2, spec.alphabet),
    };
    let f2 = match spec.kind {
        InstanceKind::Indseglcs => Some(spec.f2.unwrap_or(spec.f1)),
        _ => None,
    };
    Ok(Instance {
        kind: spec.kind,
        t1: String::from_utf8(t1).expect("ascii"),
        t2: String::from_utf8(t2).expect("ascii"),
        f1: spec.f1,
        f2,
    })
}
