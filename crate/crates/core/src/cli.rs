//! Command-line front end. `dispatch` is the whole program; the binary
//! only wires it to the process streams.

use std::ffi::{OsStr, OsString};
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::Error;
use crate::harness::{self, BenchAlgo, BenchFamily, BenchSpec, DiffConfig, InstanceKind, InstanceSpec};
use crate::indseglcs::{indseglcs_with, FamilyChoice};
use crate::oracle::{self, OracleLimits};
use crate::reduction::{build_episode_reduction, check_reduction_equivalence};
use crate::seglcs::{slcs_baseline, slcs_diagonal_run, slcs_witness, Schedule};
use crate::segmatch::{min_segments, sege_with, SegeAlgo};
use crate::text::Budget;

pub const EXIT_USAGE: i32 = 2;
pub const EXIT_SIZE_LIMIT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "segsub", version, about = "Segmental subsequence matching and segmental LCS")]
#[command(allow_negative_numbers = true)]
struct Cli {
    /// Emit a single JSON object instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

/// A string argument: inline bytes, or `@path` for raw file contents.
#[derive(Debug, Clone)]
struct Input(OsString);

impl Input {
    fn bytes(&self) -> Result<Vec<u8>, Error> {
        let raw = os_bytes(&self.0);
        match raw.strip_prefix(b"@") {
            Some(path) => {
                let path = PathBuf::from(OsStr::new(&String::from_utf8_lossy(path).into_owned()));
                let mut data = std::fs::read(&path)
                    .map_err(|e| Error::InvalidSpec(format!("cannot read {}: {e}", path.display())))?;
                if data.ends_with(b"\n") {
                    data.pop();
                    if data.ends_with(b"\r") {
                        data.pop();
                    }
                }
                Ok(data)
            }
            None => Ok(raw),
        }
    }
}

#[cfg(unix)]
fn os_bytes(s: &OsStr) -> Vec<u8> {
    use std::os::unix::ffi::OsStrExt;
    s.as_bytes().to_vec()
}

#[cfg(not(unix))]
fn os_bytes(s: &OsStr) -> Vec<u8> {
    s.to_string_lossy().into_owned().into_bytes()
}

fn parse_input(s: &str) -> Result<Input, String> {
    Ok(Input(OsString::from(s)))
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether the pattern is an F-segmental subsequence of the text.
    Sege {
        #[arg(long, value_parser = parse_input)]
        text: Input,
        #[arg(long, value_parser = parse_input)]
        pattern: Input,
        #[arg(long)]
        segments: i64,
        #[arg(long, value_enum, default_value_t = SegeAlgoArg::Auto)]
        algo: SegeAlgoArg,
    },
    /// Minimum number of segments, or `nil`.
    Minsege {
        #[arg(long, value_parser = parse_input)]
        text: Input,
        #[arg(long, value_parser = parse_input)]
        pattern: Input,
    },
    /// Segmental LCS length with a shared segmentation.
    Seglcs {
        #[arg(long, value_parser = parse_input)]
        t1: Input,
        #[arg(long, value_parser = parse_input)]
        t2: Input,
        #[arg(long)]
        segments: i64,
        #[arg(long, value_enum, default_value_t = SlcsAlgoArg::Diagonal)]
        algo: SlcsAlgoArg,
        /// Also print a witness segmentation and its start positions (uses the baseline solver).
        #[arg(long)]
        witness: bool,
        /// Print the diagonal solver's sparse tables as `h diag s value` lines.
        #[arg(long)]
        dump_tables: bool,
        /// Sweep order of the diagonal solver.
        #[arg(long, value_enum, default_value_t = ScheduleArg::DiagonalMajor)]
        schedule: ScheduleArg,
    },
    /// LCS under independent segment budgets for each text.
    Indseglcs {
        #[arg(long, value_parser = parse_input)]
        t1: Input,
        #[arg(long, value_parser = parse_input)]
        t2: Input,
        #[arg(long)]
        f1: i64,
        #[arg(long)]
        f2: i64,
        #[arg(long, value_enum, default_value_t = FamilyArg::Auto)]
        force_family: FamilyArg,
    },
    /// Build the SegE instance for a bounded-window episode matching instance.
    ReduceEpisode {
        #[arg(long, value_parser = parse_input)]
        text: Input,
        #[arg(long, value_parser = parse_input)]
        pattern: Input,
        #[arg(long)]
        bound: usize,
        /// Compare both sides of the equivalence by brute force.
        #[arg(long)]
        verify: bool,
        /// Also write the instance file (JSON) to this path.
        #[arg(long)]
        instance: Option<PathBuf>,
    },
    /// Generate random instances, one JSON object per line.
    Gen(GenArgs),
    /// Differential test of every solver against the brute-force oracles.
    Difftest {
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        max_len: usize,
        #[arg(long, default_value_t = 3)]
        max_alphabet: usize,
    },
    /// Benchmark the SegLCS solvers and print CSV.
    Bench {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_delimiter = ',', default_values_t = vec![250, 500, 1000, 2000])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 4)]
        segments: usize,
        #[arg(long, default_value_t = 4)]
        alphabet: usize,
        #[arg(long, default_value_t = 3)]
        reps: usize,
        /// Substitutions in the similarity family.
        #[arg(long, default_value_t = 2)]
        edits: usize,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: InstanceKind,
    #[arg(long)]
    len1: usize,
    #[arg(long, default_value_t = 0)]
    len2: usize,
    #[arg(long, default_value_t = 2)]
    alphabet: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    count: usize,
    #[arg(long)]
    similarity: Option<usize>,
    #[arg(long, default_value_t = 1)]
    f1: usize,
    #[arg(long)]
    f2: Option<usize>,
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SegeAlgoArg {
    Auto,
    Dp,
    Kmp2,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SlcsAlgoArg {
    Diagonal,
    Baseline,
    Oracle,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ScheduleArg {
    DiagonalMajor,
    LevelMajor,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    Count,
    Score,
    Auto,
}

/// Result of a subcommand before rendering.
struct Outcome {
    text: String,
    json: Value,
    code: i32,
}

impl Outcome {
    fn ok(text: impl Into<String>, json: Value) -> Self {
        Outcome { text: text.into(), json, code: 0 }
    }
}

fn lossy(bytes: &[u8]) -> String {
    String::from_utf8_lossy(bytes).into_owned()
}

/// Parses `args` (program name first), runs the subcommand and returns the exit code.
pub fn dispatch<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match run(cli.command) {
        Ok(outcome) => {
            let _ = if cli.json {
                writeln!(out, "{}", outcome.json)
            } else {
                write!(out, "{}", outcome.text)
            };
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::SizeLimit { .. } => EXIT_SIZE_LIMIT,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn run(command: Command) -> Result<Outcome, Error> {
    match command {
        Command::Sege { text, pattern, segments, algo } => {
            let (t, p) = (text.bytes()?, pattern.bytes()?);
            let f = Budget::from_signed(segments)?;
            let algo = match algo {
                SegeAlgoArg::Auto => SegeAlgo::Auto,
                SegeAlgoArg::Dp => SegeAlgo::Dp,
                SegeAlgoArg::Kmp2 => SegeAlgo::Kmp2,
            };
            let yes = sege_with(&t, &p, f, algo)?;
            Ok(Outcome {
                text: if yes { "yes\n" } else { "no\n" }.into(),
                json: json!({ "answer": yes }),
                code: if yes { 0 } else { 1 },
            })
        }
        Command::Minsege { text, pattern } => {
            let k = min_segments(&text.bytes()?, &pattern.bytes()?);
            let text = k.map_or_else(|| "nil".to_string(), |k| k.to_string());
            Ok(Outcome::ok(text + "\n", json!({ "answer": k })))
        }
        Command::Seglcs { t1, t2, segments, algo, witness, dump_tables, schedule } => {
            let schedule = match schedule {
                ScheduleArg::DiagonalMajor => Schedule::DiagonalMajor,
                ScheduleArg::LevelMajor => Schedule::LevelMajor,
            };
            let (a, b) = (t1.bytes()?, t2.bytes()?);
            let f = Budget::from_signed(segments)?;
            let mut json = serde_json::Map::new();
            let mut text: String;
            let length = if witness {
                let w = slcs_witness(&a, &b, f);
                let segs: Vec<String> = w.segmentation.segments().iter().map(|s| lossy(s)).collect();
                let join = |xs: &[usize]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("\t");
                text = format!(
                    "{}\nsegments\t{}\nt1\t{}\nt2\t{}\n",
                    w.length,
                    segs.join("\t"),
                    join(&w.in_t1.starts),
                    join(&w.in_t2.starts)
                );
                json.insert(
                    "witness".into(),
                    json!({ "segments": segs, "t1": w.in_t1.starts, "t2": w.in_t2.starts }),
                );
                w.length
            } else {
                let length = match algo {
                    SlcsAlgoArg::Diagonal => slcs_diagonal_run(&a, &b, f, schedule, false).length,
                    SlcsAlgoArg::Baseline => slcs_baseline(&a, &b, f),
                    SlcsAlgoArg::Oracle => oracle::slcs_bruteforce(&a, &b, f, OracleLimits::default())?,
                };
                text = format!("{length}\n");
                length
            };
            if dump_tables {
                let run = slcs_diagonal_run(&a, &b, f, schedule, true);
                let dump = run.tables.expect("tables kept").dump();
                text.push_str(&dump);
                json.insert("tables".into(), Value::String(dump));
            }
            json.insert("answer".into(), json!(length));
            json.insert("length".into(), json!(length));
            Ok(Outcome::ok(text, Value::Object(json)))
        }
        Command::Indseglcs { t1, t2, f1, f2, force_family } => {
            let choice = match force_family {
                FamilyArg::Auto => FamilyChoice::Auto,
                FamilyArg::Count => FamilyChoice::Count,
                FamilyArg::Score => FamilyChoice::Score,
            };
            let length = indseglcs_with(
                &t1.bytes()?,
                &t2.bytes()?,
                Budget::from_signed(f1)?,
                Budget::from_signed(f2)?,
                choice,
            );
            Ok(Outcome::ok(format!("{length}\n"), json!({ "answer": length, "length": length })))
        }
        Command::ReduceEpisode { text, pattern, bound, verify, instance } => {
            let (t, p) = (text.bytes()?, pattern.bytes()?);
            let r = build_episode_reduction(&t, &p, bound)?;
            let mut out = format!("{}\n{}\n{}\n", lossy(&r.text), lossy(&r.pattern), r.budget);
            let mut json = json!({ "answer": r });
            let mut code = 0;
            if let Some(path) = instance {
                let inst = harness::Instance {
                    kind: InstanceKind::Sege,
                    t1: lossy(&r.text),
                    t2: lossy(&r.pattern),
                    f1: r.budget,
                    f2: None,
                };
                std::fs::write(&path, inst.to_json() + "\n")
                    .map_err(|e| Error::InvalidSpec(format!("cannot write {}: {e}", path.display())))?;
            }
            if verify {
                let agree = check_reduction_equivalence(&t, &p, bound, OracleLimits::default())?;
                out.push_str(if agree { "equivalent\n" } else { "NOT equivalent\n" });
                json["verified"] = json!(agree);
                code = if agree { 0 } else { 1 };
            }
            Ok(Outcome { text: out, json, code })
        }
        Command::Gen(args) => {
            let mut lines = String::new();
            let mut all = Vec::new();
            for k in 0..args.count {
                let spec = InstanceSpec {
                    kind: args.kind,
                    len1: args.len1,
                    len2: args.len2,
                    alphabet: args.alphabet,
                    seed: args.seed.wrapping_add(k as u64),
                    similarity: args.similarity,
                    f1: args.f1,
                    f2: args.f2,
                };
                let inst = harness::generate_instance(&spec)?;
                lines.push_str(&inst.to_json());
                lines.push('\n');
                all.push(inst);
            }
            if let Some(path) = args.csv {
                std::fs::write(&path, &lines)
                    .map_err(|e| Error::InvalidSpec(format!("cannot write {}: {e}", path.display())))?;
            }
            Ok(Outcome::ok(lines, json!({ "answer": all })))
        }
        Command::Difftest { count, seed, max_len, max_alphabet } => {
            let cfg = DiffConfig { count, seed, max_len, max_alphabet, fault: None };
            let report = harness::differential_run(&cfg)?;
            let mut text = format!(
                "cases {} checks {} mismatches {}\n",
                report.cases,
                report.checks,
                report.mismatches.len()
            );
            for m in &report.mismatches {
                text.push_str(&serde_json::to_string(m).expect("serializable"));
                text.push('\n');
            }
            let code = if report.is_clean() { 0 } else { 1 };
            Ok(Outcome { text, json: json!({ "answer": report }), code })
        }
        Command::Bench { seed, sizes, segments, alphabet, reps, edits, csv } => {
            let spec = BenchSpec {
                families: vec![BenchFamily::Similarity { edits }, BenchFamily::Random, BenchFamily::Identical],
                sizes,
                f: segments.max(1),
                alphabet,
                repetitions: reps,
                seed,
                algorithms: vec![BenchAlgo::Diagonal, BenchAlgo::Baseline],
            };
            let rows = harness::benchmark(&spec);
            let table = harness::to_csv(&rows);
            let text = match csv {
                Some(path) => {
                    std::fs::write(&path, &table)
                        .map_err(|e| Error::InvalidSpec(format!("cannot write {}: {e}", path.display())))?;
                    format!("wrote {} rows to {}\n", rows.len(), path.display())
                }
                None => table,
            };
            Ok(Outcome::ok(text, json!({ "answer": rows })))
        }
    }
}
