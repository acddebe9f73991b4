//! Cycles, paths and disjoint unions of cycles.
//!
//! On a cycle, a vertex between two `1`-edges has sum 2, between a `1`-edge
//! and an `s`-edge sum `s + 1`, and between two `s`-edges sum `2s`. Laying
//! the edges out as a run of `1`s, an alternating `s, 1, ...` stretch and a
//! run of `s`s therefore fixes the size of each of the three classes.

use crate::families::{generate, FamilySpec};
use crate::labeling::{vertex_sums, Label};

use super::{assign_run, certify, ConstructError, ConstructionCertificate};

/// Edge layout `1^a (s 1)^b s^c` along a cycle or path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SegmentPlan {
    /// Leading edges labeled 1.
    pub a: usize,
    /// Number of alternating `(s, 1)` pairs.
    pub b: usize,
    /// Trailing edges labeled `s`.
    pub c: usize,
}

impl SegmentPlan {
    /// Plan for `C_n` at `s = ⌈(n + 2) / 3⌉`.
    ///
    /// The class sizes `(|V_2|, |V_{s+1}|, |V_{2s}|) = (a − 1, 2b + 2, c − 1)`
    /// are `(s − 1, s, n + 1 − 2s)` for even `s` and `(s, s − 1, n + 1 − 2s)`
    /// for odd `s`.
    pub fn for_cycle(n: usize) -> Self {
        let s = (n + 2).div_ceil(3);
        let plan = if s.is_multiple_of(2) {
            Self {
                a: s,
                b: (s - 2) / 2,
                c: n + 2 - 2 * s,
            }
        } else {
            Self {
                a: s + 1,
                b: (s - 3) / 2,
                c: n + 2 - 2 * s,
            }
        };
        debug_assert!(plan.a >= 1 && plan.c >= 1);
        debug_assert_eq!(plan.edge_count(), n);
        plan
    }

    /// Plan for `P_n`, `n >= 3`, at `s = ⌈(n + 1) / 3⌉`. Here the low class
    /// holds the sum-1 end, so it has `a` members rather than `a − 1`.
    pub fn for_path(n: usize) -> Self {
        let s = (n + 1).div_ceil(3);
        let plan = if s.is_multiple_of(2) {
            Self {
                a: s - 1,
                b: (s - 2) / 2,
                c: n + 2 - 2 * s,
            }
        } else {
            Self {
                a: s,
                b: (s - 3) / 2,
                c: n + 2 - 2 * s,
            }
        };
        debug_assert!(plan.a >= 1 && plan.c >= 1);
        debug_assert_eq!(plan.edge_count(), n - 1);
        plan
    }

    pub fn edge_count(&self) -> usize {
        self.a + 2 * self.b + self.c
    }

    pub fn edge_labels(&self, s: Label) -> Vec<Label> {
        let mut labels = vec![1; self.a];
        for _ in 0..self.b {
            labels.extend([s, 1]);
        }
        labels.extend(std::iter::repeat_n(s, self.c));
        labels
    }
}

/// Cycle-style vertex labels for vertices with sums in `{2, s + 1, 2s}`.
///
/// With `n` vertices, the weights come out as exactly `[3, n + 2]`.
fn cycle_vertex_labels(sums: &[Label], s: Label) -> Vec<Label> {
    let class =
        |target: Label| -> Vec<usize> { (0..sums.len()).filter(|&v| sums[v] == target).collect() };
    let (low, mid, high) = (class(2), class(s + 1), class(2 * s));
    debug_assert_eq!(low.len() + mid.len() + high.len(), sums.len());
    let mut labels = vec![0; sums.len()];
    if s.is_multiple_of(2) {
        // weights [3, s + 1], [s + 2, 2s + 1], [2s + 2, n + 2]
        assign_run(&mut labels, &low, 1);
        assign_run(&mut labels, &mid, 1);
    } else {
        // weights [3, s + 2], [s + 3, 2s + 1], [2s + 2, n + 2]
        assign_run(&mut labels, &low, 1);
        assign_run(&mut labels, &mid, 2);
    }
    assign_run(&mut labels, &high, 2);
    labels
}

pub fn construct_cycle(n: usize) -> Result<ConstructionCertificate, ConstructError> {
    let spec = FamilySpec::Cycle(n);
    let (graph, _) = generate(&spec)?;
    let s = (n + 2).div_ceil(3) as Label;
    let edge_labels = SegmentPlan::for_cycle(n).edge_labels(s);
    let sums = vertex_sums(&graph, &edge_labels)?;
    let vertex_labels = cycle_vertex_labels(&sums, s);
    certify(spec, graph, vertex_labels, edge_labels, s)
}

pub fn construct_path(n: usize) -> Result<ConstructionCertificate, ConstructError> {
    let spec = FamilySpec::Path(n);
    let (graph, _) = generate(&spec)?;
    if n == 2 {
        return certify(spec, graph, vec![1, 2], vec![1], 2);
    }
    let s = (n + 1).div_ceil(3) as Label;
    let plan = SegmentPlan::for_path(n);
    let edge_labels = plan.edge_labels(s);

    // Edge i joins v_i and v_{i+1}. Classes by position:
    // low  = v_0 (sum 1) and the interior of the 1-run (sum 2)
    // mid  = v_{n-1} (sum s) and v_a ..= v_{a+2b} (sum s + 1)
    // high = interior of the s-run (sum 2s)
    let (a, b) = (plan.a, plan.b);
    let low: Vec<usize> = (0..a).collect();
    let mid: Vec<usize> = (a..=a + 2 * b).collect();
    let high: Vec<usize> = (a + 2 * b + 1..n - 1).collect();
    let right_end = n - 1;

    let mut labels = vec![0; n];
    // weights: low fills [2, |low| + 1], mid continues, high is [2s + 1, n + 1]
    assign_run(&mut labels, &low[..1], 1);
    assign_run(&mut labels, &low[1..], 1);
    if s.is_multiple_of(2) {
        labels[right_end] = 1;
        assign_run(&mut labels, &mid, 1);
    } else {
        labels[right_end] = 2;
        assign_run(&mut labels, &mid, 2);
    }
    assign_run(&mut labels, &high, 1);
    certify(spec, graph, labels, edge_labels, s)
}

/// How many vertices of one cycle land in each vertex-sum class.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CycleClassCounts {
    /// Vertices with sum 2.
    pub low: usize,
    /// Vertices with sum `s + 1`.
    pub mid: usize,
    /// Vertices with sum `2s`.
    pub high: usize,
}

impl CycleClassCounts {
    pub fn total(&self) -> usize {
        self.low + self.mid + self.high
    }

    /// A cycle can realize these counts iff it is all-1, all-`s`, or has an
    /// even, positive number of label changes.
    pub fn is_realizable(&self) -> bool {
        let uniform = self.total() == self.low || self.total() == self.high;
        uniform || (self.mid >= 2 && self.mid.is_multiple_of(2))
    }

    /// Labels around one cycle: `1^(low+1) (s 1)^(mid/2 − 1) s^(high+1)`, or
    /// a constant labeling for uniform counts.
    fn edge_labels(&self, s: Label) -> Vec<Label> {
        let len = self.total();
        if self.mid == 0 {
            let label = if self.low == len { 1 } else { s };
            return vec![label; len];
        }
        let mut labels = vec![1; self.low + 1];
        for _ in 1..self.mid / 2 {
            labels.extend([s, 1]);
        }
        labels.extend(std::iter::repeat_n(s, self.high + 1));
        labels
    }
}

/// Distributes the class targets over the cycles of a two-regular graph.
///
/// Targets are `(s, s − 1, n + 1 − 2s)` for odd `s` and
/// `(s − 1, s, n + 1 − 2s)` for even `s`. Cycles are taken shortest first:
/// whole cycles are labeled 1 while they fit in the low target, the next
/// cycle opens with a run of 1s covering the rest of it, the alternating
/// stretch follows, and everything after is labeled `s`. If the low
/// remainder `a` leaves exactly one free vertex on its cycle, that cycle
/// takes `a − 1` and the following cycle takes the last one.
///
/// Returns counts indexed like `lengths`.
pub fn plan_two_regular(lengths: &[usize]) -> Result<Vec<CycleClassCounts>, ConstructError> {
    let fail = |reason: String| ConstructError::Plan {
        lengths: lengths.to_vec(),
        reason,
    };
    let n: usize = lengths.iter().sum();
    let s = (n + 2).div_ceil(3);
    let (low_target, mid_target) = if s.is_multiple_of(2) {
        (s - 1, s)
    } else {
        (s, s - 1)
    };
    let high_target = (n + 1)
        .checked_sub(2 * s)
        .ok_or_else(|| fail(format!("n = {n} is too small for s = {s}")))?;

    let mut order: Vec<usize> = (0..lengths.len()).collect();
    order.sort_by_key(|&c| lengths[c]);
    let mut counts = vec![CycleClassCounts::default(); lengths.len()];

    // whole cycles of 1s
    let mut low_left = low_target;
    let mut next = 0;
    while next < order.len() && lengths[order[next]] <= low_left {
        counts[order[next]].low = lengths[order[next]];
        low_left -= lengths[order[next]];
        next += 1;
    }

    // partial 1-run on the next cycle, possibly spilling one vertex forward
    if low_left > 0 {
        let first = *order
            .get(next)
            .ok_or_else(|| fail("no cycle left for the remaining sum-2 vertices".into()))?;
        if lengths[first] >= low_left + 2 {
            counts[first].low = low_left;
        } else {
            counts[first].low = low_left - 1;
            let second = *order
                .get(next + 1)
                .ok_or_else(|| fail("no cycle to take the last sum-2 vertex".into()))?;
            counts[second].low = 1;
        }
    }

    // alternating stretch, then s everywhere else
    let mut mid_left = mid_target;
    let mut high_left = high_target;
    for (rank, &c) in order.iter().enumerate().skip(next) {
        let free = lengths[c] - counts[c].low;
        let is_last = rank + 1 == order.len();
        let mid = if is_last {
            mid_left
        } else if mid_left >= free - free % 2 {
            free - free % 2
        } else {
            mid_left
        };
        let high = free
            .checked_sub(mid)
            .ok_or_else(|| fail(format!("cycle {c} cannot hold {mid} sum-(s+1) vertices")))?;
        if high > high_left {
            return Err(fail(format!("ran out of sum-2s vertices at cycle {c}")));
        }
        counts[c].mid = mid;
        counts[c].high = high;
        mid_left -= mid;
        high_left -= high;
        if !counts[c].is_realizable() {
            return Err(fail(format!("cycle {c} would get counts {:?}", counts[c])));
        }
    }
    if mid_left != 0 || high_left != 0 {
        return Err(fail("class targets not exhausted".into()));
    }
    Ok(counts)
}

pub fn construct_two_regular(lengths: &[usize]) -> Result<ConstructionCertificate, ConstructError> {
    let spec = FamilySpec::TwoRegular(lengths.to_vec());
    let (graph, order) = generate(&spec)?;
    if lengths.len() == 1 {
        let cycle = construct_cycle(lengths[0])?;
        return certify(
            spec,
            graph,
            cycle.labeling.vertex_labels().to_vec(),
            cycle.labeling.edge_labels().to_vec(),
            cycle.claimed_s,
        );
    }
    let n = graph.vertex_count();
    let s = (n + 2).div_ceil(3) as Label;
    let counts = plan_two_regular(lengths)?;
    let mut edge_labels = vec![0; n];
    for (c, count) in counts.iter().enumerate() {
        // component c owns edges offset..offset + len in cycle order
        let offset = order.component_offsets()[c];
        let labels = count.edge_labels(s);
        edge_labels[offset..offset + labels.len()].copy_from_slice(&labels);
    }
    let sums = vertex_sums(&graph, &edge_labels)?;
    let vertex_labels = cycle_vertex_labels(&sums, s);
    certify(spec, graph, vertex_labels, edge_labels, s)
}
