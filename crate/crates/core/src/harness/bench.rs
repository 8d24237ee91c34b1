use std::fmt::Write as _;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::generate::{random_text, substitute};
use crate::seglcs::{slcs_baseline_counted, slcs_diagonal_run, Schedule};
use crate::text::Budget;

/// Column order of [`to_csv`].
pub const CSV_HEADER: &str = "family,algorithm,n1,n2,f,ell,wall_ns,cell_visits";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BenchFamily {
    /// `t2` is `t1` with this many substitutions.
    Similarity { edits: usize },
    /// Independent uniform texts.
    Random,
    Identical,
}

impl BenchFamily {
    pub fn name(&self) -> String {
        match self {
            BenchFamily::Similarity { edits } => format!("similarity{edits}"),
            BenchFamily::Random => "random".into(),
            BenchFamily::Identical => "identical".into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BenchAlgo {
    Diagonal,
    Baseline,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchSpec {
    pub families: Vec<BenchFamily>,
    /// Text lengths; both texts have this length.
    pub sizes: Vec<usize>,
    pub f: usize,
    pub alphabet: usize,
    pub repetitions: usize,
    pub seed: u64,
    pub algorithms: Vec<BenchAlgo>,
}

impl Default for BenchSpec {
    fn default() -> Self {
        BenchSpec {
            families: vec![BenchFamily::Similarity { edits: 2 }, BenchFamily::Random, BenchFamily::Identical],
            sizes: vec![250, 500, 1000, 2000],
            f: 4,
            alphabet: 4,
            repetitions: 3,
            seed: 0,
            algorithms: vec![BenchAlgo::Diagonal, BenchAlgo::Baseline],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BenchRow {
    pub family: String,
    pub algorithm: String,
    pub n1: usize,
    pub n2: usize,
    pub f: usize,
    pub ell: usize,
    /// Median over repetitions.
    pub wall_ns: u128,
    pub cell_visits: u64,
}

/// Builds the benchmark pair for one family and size.
pub fn family_instance(family: BenchFamily, n: usize, alphabet: usize, seed: u64) -> (Vec<u8>, Vec<u8>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64).rotate_left(32));
    let t1 = random_text(&mut rng, n, alphabet);
    let t2 = match family {
        BenchFamily::Similarity { edits } => substitute(&mut rng, &t1, edits.min(n), alphabet.max(2)),
        BenchFamily::Random => random_text(&mut rng, n, alphabet),
        BenchFamily::Identical => t1.clone(),
    };
    (t1, t2)
}

fn median(mut xs: Vec<u128>) -> u128 {
    xs.sort_unstable();
    xs[xs.len() / 2]
}

pub fn benchmark(spec: &BenchSpec) -> Vec<BenchRow> {
    let f = Budget::new(spec.f.max(1)).expect("positive");
    let reps = spec.repetitions.max(1);
    let mut rows = Vec::new();
    for &family in &spec.families {
        for &n in &spec.sizes {
            let (t1, t2) = family_instance(family, n, spec.alphabet.max(1), spec.seed);
            for &algo in &spec.algorithms {
                let mut times = Vec::with_capacity(reps);
                let mut outcome = (0, 0);
                for _ in 0..reps {
                    let start = Instant::now();
                    outcome = match algo {
                        BenchAlgo::Diagonal => {
                            let run = slcs_diagonal_run(&t1, &t2, f, Schedule::DiagonalMajor, false);
                            (run.length, run.total_visits())
                        }
                        BenchAlgo::Baseline => slcs_baseline_counted(&t1, &t2, f),
                    };
                    times.push(start.elapsed().as_nanos());
                }
                rows.push(BenchRow {
                    family: family.name(),
                    algorithm: format!("{algo:?}").to_lowercase(),
                    n1: t1.len(),
                    n2: t2.len(),
                    f: spec.f,
                    ell: outcome.0,
                    wall_ns: median(times),
                    cell_visits: outcome.1,
                });
            }
        }
    }
    rows.sort_by(|a, b| (&a.family, &a.algorithm, a.n1, a.n2).cmp(&(&b.family, &b.algorithm, b.n1, b.n2)));
    rows
}

pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            r.family, r.algorithm, r.n1, r.n2, r.f, r.ell, r.wall_ns, r.cell_visits
        );
    }
    out
}
