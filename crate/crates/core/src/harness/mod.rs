//! Instance generation, differential testing against the oracles, and
//! counter-based benchmarks.

mod bench;
mod diff;
mod generate;

pub use bench::{benchmark, family_instance, to_csv, BenchAlgo, BenchFamily, BenchRow, BenchSpec, CSV_HEADER};
pub use diff::{differential_run, DiffConfig, DiffReport, Fault, Mismatch};
pub use generate::{generate_instance, Instance, InstanceKind, InstanceSpec};
