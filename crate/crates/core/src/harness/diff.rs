use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::generate::{random_text, Instance, InstanceKind};
use crate::error::Result;
use crate::indseglcs::indseglcs;
use crate::oracle::{self, OracleLimits};
use crate::seglcs::{slcs_baseline, slcs_diagonal_run, Schedule};
use crate::segmatch::{min_segments, sege_with, SegeAlgo};
use crate::text::Budget;

/// Deliberate solver perturbations for checking that the harness notices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Clamp IndSegLCS budgets to `⌈n/2⌉ - 1` instead of `⌈n/2⌉`.
    BudgetClampOffByOne,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffConfig {
    pub count: usize,
    pub max_len: usize,
    pub max_alphabet: usize,
    pub seed: u64,
    pub fault: Option<Fault>,
}

impl Default for DiffConfig {
    fn default() -> Self {
        DiffConfig { count: 1000, max_len: 10, max_alphabet: 3, seed: 0, fault: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub check: String,
    pub instance: Instance,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct DiffReport {
    pub cases: usize,
    pub checks: u64,
    pub mismatches: Vec<Mismatch>,
}

impl DiffReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

struct Recorder<'a> {
    report: &'a mut DiffReport,
}

impl Recorder<'_> {
    fn check<T: PartialEq + std::fmt::Debug>(&mut self, check: &str, instance: impl Fn() -> Instance, expected: T, actual: T) {
        self.report.checks += 1;
        if expected != actual {
            self.report.mismatches.push(Mismatch {
                check: check.to_string(),
                instance: instance(),
                expected: format!("{expected:?}"),
                actual: format!("{actual:?}"),
            });
        }
    }
}

fn b(f: usize) -> Budget {
    Budget::new(f).expect("positive budget")
}

fn instance(kind: InstanceKind, t1: &[u8], t2: &[u8], f1: usize, f2: Option<usize>) -> Instance {
    Instance {
        kind,
        t1: String::from_utf8_lossy(t1).into_owned(),
        t2: String::from_utf8_lossy(t2).into_owned(),
        f1,
        f2,
    }
}

/// Runs every polynomial solver against the brute-force oracles on
/// `count` random instances, over every budget up to `max_len + 1`.
pub fn differential_run(config: &DiffConfig) -> Result<DiffReport> {
    let limits = OracleLimits::with_max_len(config.max_len.max(OracleLimits::default().max_len));
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut report = DiffReport::default();
    for _ in 0..config.count {
        let sigma = rng.gen_range(1..=config.max_alphabet.max(1));
        let len1 = rng.gen_range(0..=config.max_len);
        let t1 = random_text(&mut rng, len1, sigma);
        // patterns are drawn as subsequences of the text half of the time
        let t2 = if rng.gen_bool(0.5) && !t1.is_empty() {
            t1.iter().copied().filter(|_| rng.gen_bool(0.6)).collect()
        } else {
            let len2 = rng.gen_range(0..=config.max_len);
            random_text(&mut rng, len2, sigma)
        };
        run_case(&t1, &t2, limits, config.fault, &mut Recorder { report: &mut report })?;
        report.cases += 1;
    }
    Ok(report)
}

fn run_case(t1: &[u8], t2: &[u8], limits: OracleLimits, fault: Option<Fault>, rec: &mut Recorder) -> Result<()> {
    let max_f = t1.len().max(t2.len()) + 1;

    let want = oracle::min_segments_bruteforce(t1, t2, limits)?;
    rec.check("min_segments", || instance(InstanceKind::Sege, t1, t2, 1, None), want, min_segments(t1, t2));
    for f in 1..=max_f {
        let expected = want.is_some_and(|k| k <= f);
        let inst = || instance(InstanceKind::Sege, t1, t2, f, None);
        rec.check("sege/dp", inst, expected, sege_with(t1, t2, b(f), SegeAlgo::Dp)?);
        rec.check("sege/auto", inst, expected, sege_with(t1, t2, b(f), SegeAlgo::Auto)?);
    }

    let profile = oracle::slcs_profile(t1, t2, limits)?;
    for f in 1..=max_f {
        let expected = profile[f.min(profile.len() - 1)];
        let inst = || instance(InstanceKind::Seglcs, t1, t2, f, None);
        rec.check("slcs/baseline", inst, expected, slcs_baseline(t1, t2, b(f)));
        let run = |s| slcs_diagonal_run(t1, t2, b(f), s, false).length;
        rec.check("slcs/diagonal", inst, expected, run(Schedule::DiagonalMajor));
        rec.check("slcs/diagonal-level-major", inst, expected, run(Schedule::LevelMajor));
    }

    let ind = oracle::indseglcs_profile(t1, t2, limits)?;
    let clamp = |f: usize, n: usize| match fault {
        Some(Fault::BudgetClampOffByOne) => f.min(n.div_ceil(2).saturating_sub(1)).max(1),
        None => f,
    };
    for f1 in 1..=t1.len().div_ceil(2) + 1 {
        for f2 in 1..=t2.len().div_ceil(2) + 1 {
            let expected = ind.query(b(f1), b(f2));
            let actual = indseglcs(t1, t2, b(clamp(f1, t1.len())), b(clamp(f2, t2.len())));
            rec.check("indseglcs", || instance(InstanceKind::Indseglcs, t1, t2, f1, Some(f2)), expected, actual);
        }
    }
    Ok(())
}
