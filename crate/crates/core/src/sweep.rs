//! Construct-and-check sweeps over family parameters.

use std::fmt::Write as _;
use std::num::NonZeroUsize;
use std::thread;

use crate::bounds::degree_count_bound;
use crate::constructors::{construct_with, tvs_formula, ConstructError, Verification};
use crate::families::{cycle_partitions, FamilyError, FamilySpec};
use crate::labeling::{verify, Label};

/// Two-regular sweeps cover partitions with at most this many cycles.
pub const MAX_SWEEP_CYCLES: usize = 4;

/// One family instance: its formula value, lower bound and construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub spec: FamilySpec,
    pub n: usize,
    pub formula: Label,
    pub bound: u64,
    pub max_label: Label,
    pub verified: bool,
}

impl SweepRow {
    pub fn compute(spec: &FamilySpec) -> Result<Self, ConstructError> {
        let cert = construct_with(spec, Verification::Skip)?;
        let report = verify(&cert.graph, &cert.labeling)?;
        Ok(Self {
            spec: spec.clone(),
            n: cert.graph.vertex_count(),
            formula: tvs_formula(spec),
            bound: degree_count_bound(&cert.graph)?.0,
            max_label: report.max_label_used,
            verified: report.is_irregular,
        })
    }

    /// Irregular, and formula, bound and largest label all agree.
    pub fn passes(&self) -> bool {
        self.verified && self.formula == self.bound && self.formula == self.max_label
    }
}

/// Instances of `family` for parameters `from..=to`. For two-regular graphs
/// the parameter is the vertex count and every cycle partition with at most
/// [`MAX_SWEEP_CYCLES`] cycles is included.
pub fn sweep_specs(family: &str, from: usize, to: usize) -> Result<Vec<FamilySpec>, FamilyError> {
    if family == "two-regular" {
        return Ok((from..=to)
            .flat_map(|n| cycle_partitions(n, MAX_SWEEP_CYCLES))
            .map(FamilySpec::TwoRegular)
            .collect());
    }
    (from..=to)
        .map(|n| {
            let spec = FamilySpec::from_name(family, n)?;
            spec.validate()?;
            Ok(spec)
        })
        .collect()
}

/// Computes rows across threads; results keep the order of `specs`.
pub fn run_sweep(specs: &[FamilySpec]) -> Vec<Result<SweepRow, ConstructError>> {
    let workers = thread::available_parallelism().map_or(1, NonZeroUsize::get);
    let chunk = specs.len().div_ceil(workers).max(1);
    thread::scope(|scope| {
        let handles: Vec<_> = specs
            .chunks(chunk)
            .map(|part| scope.spawn(move || part.iter().map(SweepRow::compute).collect::<Vec<_>>()))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("sweep worker panicked"))
            .collect()
    })
}

pub fn format_table(rows: &[SweepRow]) -> String {
    let width = rows
        .iter()
        .map(|r| r.spec.to_string().len())
        .max()
        .unwrap_or(0)
        .max("family".len());
    let mut out = format!(
        "{:<width$}  {:>5}  {:>7}  {:>5}  {:>9}  {}\n",
        "family", "n", "formula", "bound", "max_label", "verified"
    );
    for r in rows {
        let _ = writeln!(
            out,
            "{:<width$}  {:>5}  {:>7}  {:>5}  {:>9}  {}",
            r.spec.to_string(),
            r.n,
            r.formula,
            r.bound,
            r.max_label,
            r.verified
        );
    }
    out
}
