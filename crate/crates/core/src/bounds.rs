//! Counting lower bounds on the total vertex irregularity strength.
//!
//! If `m` vertices have degree at most `r`, their weights are distinct values
//! in `[δ + 1, (r + 1)k]` under any `k`-irregular labeling, so
//! `k >= ⌈(m + δ) / (r + 1)⌉`. Taking `r = Δ` gives the classical
//! `⌈(n + δ) / (Δ + 1)⌉`; smaller `r` recovers the sharper bounds for
//! wheels, helms and friendship graphs.

use crate::graph::{Graph, GraphError};

/// Both bounds for a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundReport {
    pub baca_bound: u64,
    pub degree_count_bound: u64,
    pub best: u64,
    /// Degree class attaining [`BoundReport::degree_count_bound`].
    pub witness_degree: usize,
}

fn ceil_div(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

/// `⌈(n + δ) / (Δ + 1)⌉`.
pub fn baca_bound(g: &Graph) -> Result<u64, GraphError> {
    g.require_no_isolated()?;
    let n = g.vertex_count() as u64;
    let min = g.min_degree().unwrap_or(0) as u64;
    let max = g.max_degree().unwrap_or(0) as u64;
    Ok(ceil_div(n + min, max + 1))
}

/// Maximum over degree classes `r` of `⌈(n_{<=r} + δ) / (r + 1)⌉`, with the
/// smallest maximizing `r`.
pub fn degree_count_bound(g: &Graph) -> Result<(u64, usize), GraphError> {
    g.require_no_isolated()?;
    let max_degree = g.max_degree().unwrap_or(0);
    let mut per_degree = vec![0u64; max_degree + 1];
    for d in g.degrees() {
        per_degree[d] += 1;
    }
    let min = g.min_degree().unwrap_or(0) as u64;
    let mut at_most = 0;
    let mut best = (0, 0);
    for (r, &count) in per_degree.iter().enumerate() {
        at_most += count;
        if count == 0 {
            continue;
        }
        let k = ceil_div(at_most + min, r as u64 + 1);
        if k > best.0 {
            best = (k, r);
        }
    }
    Ok(best)
}

pub fn bound_report(g: &Graph) -> Result<BoundReport, GraphError> {
    let baca_bound = baca_bound(g)?;
    let (degree_count_bound, witness_degree) = degree_count_bound(g)?;
    Ok(BoundReport {
        baca_bound,
        degree_count_bound,
        best: baca_bound.max(degree_count_bound),
        witness_degree,
    })
}
