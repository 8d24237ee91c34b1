use crate::embedding::{Embedding, Segmentation};
use crate::lce::{LcsufIndex, LcsufMode};

/// `C(n1, n2, f)` by the cubic chain recurrence, keeping two `h`-layers.
/// Returns the length and the number of cells evaluated.
pub(crate) fn baseline_counted(t1: &[u8], t2: &[u8], f: usize, lcsuf: &LcsufIndex) -> (usize, u64) {
    let (n1, n2) = (t1.len(), t2.len());
    let w = n2 + 1;
    let mut prev = vec![0u32; (n1 + 1) * w];
    let mut cur = vec![0u32; (n1 + 1) * w];
    let mut visits = 0u64;
    for _h in 1..=f {
        for i in 1..=n1 {
            for j in 1..=n2 {
                let x = lcsuf.get(i, j);
                let z = x as u32 + prev[(i - x) * w + j - x];
                cur[i * w + j] = z.max(cur[i * w + j - 1]).max(cur[(i - 1) * w + j]);
            }
        }
        visits += (n1 * n2) as u64;
        std::mem::swap(&mut prev, &mut cur);
    }
    (prev[n1 * w + n2] as usize, visits)
}

/// The full `(n1+1) x (n2+1) x (f+1)` table `C(i, j, h) = slcs(T1[1..i], T2[1..j], h)`.
#[derive(Debug, Clone)]
pub struct ChainTable {
    n1: usize,
    n2: usize,
    f: usize,
    cells: Vec<u32>,
}

impl ChainTable {
    pub fn compute(t1: &[u8], t2: &[u8], f: usize) -> Self {
        let lcsuf = LcsufIndex::build(t1, t2, LcsufMode::Auto);
        Self::compute_with(t1, t2, f, &lcsuf)
    }

    pub(crate) fn compute_with(t1: &[u8], t2: &[u8], f: usize, lcsuf: &LcsufIndex) -> Self {
        let (n1, n2) = (t1.len(), t2.len());
        let mut table = ChainTable { n1, n2, f, cells: vec![0; (n1 + 1) * (n2 + 1) * (f + 1)] };
        for h in 1..=f {
            for i in 1..=n1 {
                for j in 1..=n2 {
                    let x = lcsuf.get(i, j);
                    let z = x as u32 + table.raw(i - x, j - x, h - 1);
                    let v = z.max(table.raw(i, j - 1, h)).max(table.raw(i - 1, j, h));
                    let k = table.index(i, j, h);
                    table.cells[k] = v;
                }
            }
        }
        table
    }

    #[inline]
    fn index(&self, i: usize, j: usize, h: usize) -> usize {
        (h * (self.n1 + 1) + i) * (self.n2 + 1) + j
    }

    #[inline]
    fn raw(&self, i: usize, j: usize, h: usize) -> u32 {
        self.cells[self.index(i, j, h)]
    }

    pub fn get(&self, i: usize, j: usize, h: usize) -> usize {
        self.raw(i, j, h) as usize
    }

    pub fn budget(&self) -> usize {
        self.f
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.n1, self.n2)
    }

    /// Traceback from `(n1, n2, f)`: segments with their 1-based starts in each text.
    pub(crate) fn traceback(&self, t1: &[u8], lcsuf: &LcsufIndex) -> (Vec<Vec<u8>>, Vec<usize>, Vec<usize>) {
        let (mut i, mut j, mut h) = (self.n1, self.n2, self.f);
        let mut segments = Vec::new();
        let mut starts1 = Vec::new();
        let mut starts2 = Vec::new();
        while h > 0 && self.get(i, j, h) > 0 {
            let v = self.get(i, j, h);
            if j > 0 && self.get(i, j - 1, h) == v {
                j -= 1;
            } else if i > 0 && self.get(i - 1, j, h) == v {
                i -= 1;
            } else {
                let x = lcsuf.get(i, j);
                debug_assert_eq!(x + self.get(i - x, j - x, h - 1), v);
                if x > 0 {
                    segments.push(t1[i - x..i].to_vec());
                    starts1.push(i - x + 1);
                    starts2.push(j - x + 1);
                }
                i -= x;
                j -= x;
                h -= 1;
            }
        }
        segments.reverse();
        starts1.reverse();
        starts2.reverse();
        (segments, starts1, starts2)
    }
}

/// A longest common `f`-segmental string with its embeddings into both texts.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct SlcsWitness {
    pub length: usize,
    pub segmentation: Segmentation,
    pub in_t1: Embedding,
    pub in_t2: Embedding,
}

pub(crate) fn witness(t1: &[u8], t2: &[u8], f: usize) -> SlcsWitness {
    let lcsuf = LcsufIndex::build(t1, t2, LcsufMode::Auto);
    let table = ChainTable::compute_with(t1, t2, f, &lcsuf);
    let length = table.get(t1.len(), t2.len(), f);
    let (segments, s1, s2) = table.traceback(t1, &lcsuf);
    let (segmentation, s1, s2) = match Segmentation::new(segments) {
        Some(seg) => (seg, s1, s2),
        None => (Segmentation::empty(), vec![1], vec![1]),
    };
    SlcsWitness {
        length,
        in_t1: Embedding::new(segmentation.clone(), s1),
        in_t2: Embedding::new(segmentation.clone(), s2),
        segmentation,
    }
}
