//! Longest common subsequence under independent segment budgets:
//! `mxl(SegSub^{f1}(T1) ∩ SegSub^{f2}(T2))`.
//!
//! Each side is tracked by one of two table families. The *count* family
//! indexes by the number of segments used (`B`: any subsequence of the
//! prefix, `F`: last segment is a suffix of the prefix). The *score*
//! family indexes by a lower bound on the factorization score
//! `S(w_0, ..., w_m) = |w_0| + Σ (|w_j| - 1)` (`B̄`: factorization ends in a
//! gap, `F̄`: ends in a segment); a subsequence is `f`-segmental iff some
//! factorization scores at least `|T| - 2f`, which makes the score family
//! small when `f` is close to `|T| / 2`.

use serde::Serialize;

use crate::text::Budget;

const NEG_INF: i32 = i32::MIN / 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Count,
    Score,
}

/// Family selection policy for [`indseglcs_with`]; a forced family applies to both sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FamilyChoice {
    #[default]
    Auto,
    Count,
    Score,
}

/// Per-text table parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SideConfig {
    pub n: usize,
    /// Budget clamped to `⌈n/2⌉`.
    pub f: usize,
    pub family: Family,
    /// Largest table parameter: `f` for the count family, `max(0, n - 2f)` for the score family.
    pub range: usize,
}

impl SideConfig {
    pub fn new(n: usize, f: Budget, choice: FamilyChoice) -> Self {
        let f = f.get().min(n.div_ceil(2));
        let threshold = n.saturating_sub(2 * f);
        let family = match choice {
            FamilyChoice::Auto if f <= threshold => Family::Count,
            FamilyChoice::Auto => Family::Score,
            FamilyChoice::Count => Family::Count,
            FamilyChoice::Score => Family::Score,
        };
        let range = match family {
            Family::Count => f,
            Family::Score => threshold,
        };
        SideConfig { n, f, family, range }
    }

    fn kinds(&self) -> [Kind; 2] {
        match self.family {
            Family::Count => [Kind::B, Kind::F],
            Family::Score => [Kind::BBar, Kind::FBar],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    /// `SegSub^p`
    B,
    /// `SegSuf^p`
    F,
    /// `Seg_b^p`
    BBar,
    /// `Seg_f^p`
    FBar,
}

impl Kind {
    /// Slot of this kind within its family's pair of tables.
    fn slot(self) -> usize {
        match self {
            Kind::B | Kind::BBar => 0,
            Kind::F | Kind::FBar => 1,
        }
    }

    /// Predecessors `(Y, p')` when the last text symbol is not used.
    fn phi(self, p: usize) -> &'static [(Kind, usize)] {
        // offsets are subtracted from p; a 0 offset keeps p
        match (self, p) {
            (Kind::B, _) => &[(Kind::B, 0), (Kind::F, 0)],
            (Kind::F, 0) => &[],
            (Kind::F, _) => &[(Kind::B, 1), (Kind::F, 1)],
            (Kind::BBar, 0) => &[(Kind::BBar, 0), (Kind::FBar, 0)],
            (Kind::BBar, _) => &[(Kind::BBar, 1), (Kind::FBar, 0)],
            (Kind::FBar, _) => &[],
        }
    }

    /// Predecessors `(Y, p')` when the last text symbol ends the subsequence.
    fn psi(self, p: usize) -> &'static [(Kind, usize)] {
        match (self, p) {
            (Kind::B, 0) | (Kind::F, 0) => &[],
            (Kind::B, _) => &[(Kind::B, 1), (Kind::F, 1)],
            (Kind::F, _) => &[(Kind::B, 1), (Kind::F, 0)],
            (Kind::BBar, _) => &[],
            (Kind::FBar, 0) => &[(Kind::BBar, 0), (Kind::FBar, 0)],
            (Kind::FBar, _) => &[(Kind::BBar, 0), (Kind::FBar, 1)],
        }
    }

    /// Value on the `i1 = 0` / `i2 = 0` boundary, where only the empty string remains.
    fn empty_value(self, p: usize, i: usize) -> i32 {
        let member = match self {
            Kind::B => true,
            Kind::F => p > 0,
            Kind::BBar => p <= i,
            Kind::FBar => false,
        };
        if member {
            0
        } else {
            NEG_INF
        }
    }
}

/// One `i1`-layer of all four tables, indexed `[slot1][slot2][(i2, p1, p2)]`.
struct Layer {
    cells: Vec<i32>,
    n2: usize,
    g1: usize,
    g2: usize,
}

impl Layer {
    fn new(n2: usize, g1: usize, g2: usize) -> Self {
        Layer { cells: vec![NEG_INF; 4 * (n2 + 1) * (g1 + 1) * (g2 + 1)], n2, g1, g2 }
    }

    #[inline]
    fn index(&self, k1: Kind, k2: Kind, i2: usize, p1: usize, p2: usize) -> usize {
        let table = k1.slot() * 2 + k2.slot();
        (((table * (self.n2 + 1) + i2) * (self.g1 + 1)) + p1) * (self.g2 + 1) + p2
    }

    #[inline]
    fn get(&self, k1: Kind, k2: Kind, i2: usize, p1: usize, p2: usize) -> i32 {
        self.cells[self.index(k1, k2, i2, p1, p2)]
    }

    #[inline]
    fn set(&mut self, k1: Kind, k2: Kind, i2: usize, p1: usize, p2: usize, v: i32) {
        let k = self.index(k1, k2, i2, p1, p2);
        self.cells[k] = v;
    }
}

/// `mxl(SegSub^{f1}(t1) ∩ SegSub^{f2}(t2))` with automatic family selection.
pub fn indseglcs(t1: &[u8], t2: &[u8], f1: Budget, f2: Budget) -> usize {
    indseglcs_with(t1, t2, f1, f2, FamilyChoice::Auto)
}

pub fn indseglcs_with(t1: &[u8], t2: &[u8], f1: Budget, f2: Budget, choice: FamilyChoice) -> usize {
    let side1 = SideConfig::new(t1.len(), f1, choice);
    let side2 = SideConfig::new(t2.len(), f2, choice);
    solve(t1, t2, side1, side2)
}

fn solve(t1: &[u8], t2: &[u8], side1: SideConfig, side2: SideConfig) -> usize {
    let (n1, n2) = (t1.len(), t2.len());
    let (g1, g2) = (side1.range, side2.range);
    let kinds1 = side1.kinds();
    let kinds2 = side2.kinds();

    let mut prev = Layer::new(n2, g1, g2);
    let mut cur = Layer::new(n2, g1, g2);

    // i1 = 0
    for &k1 in &kinds1 {
        for &k2 in &kinds2 {
            for i2 in 0..=n2 {
                for p1 in 0..=g1 {
                    for p2 in 0..=g2 {
                        let v = k1.empty_value(p1, 0).min(k2.empty_value(p2, i2));
                        prev.set(k1, k2, i2, p1, p2, v);
                    }
                }
            }
        }
    }

    for i1 in 1..=n1 {
        for &k1 in &kinds1 {
            for &k2 in &kinds2 {
                for p1 in 0..=g1 {
                    for p2 in 0..=g2 {
                        let v = k1.empty_value(p1, i1).min(k2.empty_value(p2, 0));
                        cur.set(k1, k2, 0, p1, p2, v);
                    }
                }
            }
        }
        for i2 in 1..=n2 {
            let matched = t1[i1 - 1] == t2[i2 - 1];
            for &k1 in &kinds1 {
                for &k2 in &kinds2 {
                    for p1 in 0..=g1 {
                        for p2 in 0..=g2 {
                            let mut best = NEG_INF;
                            // drop T2[i2]
                            for &(y2, q) in k2.phi(p2) {
                                best = best.max(cur.get(k1, y2, i2 - 1, p1, p2 - q));
                            }
                            // drop T1[i1]
                            for &(y1, q) in k1.phi(p1) {
                                best = best.max(prev.get(y1, k2, i2, p1 - q, p2));
                            }
                            if matched {
                                for &(y1, q1) in k1.psi(p1) {
                                    for &(y2, q2) in k2.psi(p2) {
                                        let base = prev.get(y1, y2, i2 - 1, p1 - q1, p2 - q2);
                                        if base >= 0 {
                                            best = best.max(base + 1);
                                        }
                                    }
                                }
                            }
                            cur.set(k1, k2, i2, p1, p2, best);
                        }
                    }
                }
            }
        }
        std::mem::swap(&mut prev, &mut cur);
    }

    let mut answer = NEG_INF;
    for &k1 in &kinds1 {
        for &k2 in &kinds2 {
            answer = answer.max(prev.get(k1, k2, n2, g1, g2));
        }
    }
    // the empty string is always common
    answer.max(0) as usize
}

/// Score `|w_0| + Σ_{j>=1} (|w_j| - 1)` of a factorization `(w_0, ..., w_m)`.
/// Non-negative whenever `w_1, ..., w_m` are non-empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Score(pub i64);

pub fn segmentation_score<S: AsRef<[u8]>>(factorization: &[S]) -> Score {
    let mut parts = factorization.iter().map(|w| w.as_ref().len() as i64);
    let head = parts.next().unwrap_or(0);
    Score(head + parts.map(|len| len - 1).sum::<i64>())
}
