//! Optimal total vertex irregular labelings for each supported family.
//!
//! Every construction follows the same two phases. First the edges are
//! labeled with only `1` and `s`, which splits the vertices into a handful of
//! vertex-sum classes of controlled size. Then each class, taken in index
//! order, receives a run of consecutive vertex labels so that the weight
//! ranges of the classes tile an interval without overlap.

mod complete;
mod cycles;
mod fixtures;
mod prism_wheel;
mod triangles;

use thiserror::Error;

use crate::bounds;
use crate::families::{generate, FamilyError, FamilySpec};
use crate::graph::{Graph, GraphError};
use crate::labeling::{self, Label, SumDistribution, TotalLabeling};

pub use complete::{construct_complete, construct_complete_bipartite};
pub use cycles::{
    construct_cycle, construct_path, construct_two_regular, plan_two_regular, CycleClassCounts,
    SegmentPlan,
};
pub use fixtures::{FixtureLabeling, HELM_FIXTURES, WHEEL_FIXTURES};
pub use prism_wheel::{construct_prism, construct_wheel};
pub use triangles::{construct_friendship, construct_helm, TriangleType};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("construction for {family} is not irregular: vertices {0} and {1} share a weight", witness.0, witness.1)]
    NotIrregular {
        family: String,
        witness: (usize, usize),
    },
    #[error("cannot distribute vertex sums over cycles {lengths:?}: {reason}")]
    Plan { lengths: Vec<usize>, reason: String },
}

/// Whether a constructor re-checks its own output before returning it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verification {
    Always,
    Skip,
}

impl Default for Verification {
    /// `Always` in debug builds, `Skip` in release builds.
    fn default() -> Self {
        if cfg!(debug_assertions) {
            Self::Always
        } else {
            Self::Skip
        }
    }
}

/// A labeling together with what it claims.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionCertificate {
    pub family: FamilySpec,
    pub graph: Graph,
    pub labeling: TotalLabeling,
    pub claimed_s: Label,
    /// Vertex-sum classes of the edge labeling alone.
    pub distribution_before_vertex_labels: SumDistribution,
}

/// The total vertex irregularity strength of the family, in closed form.
pub fn tvs_formula(spec: &FamilySpec) -> Label {
    let ceil = |a: usize, b: usize| a.div_ceil(b) as Label;
    match *spec {
        FamilySpec::Cycle(n) => ceil(n + 2, 3),
        // a single edge needs two distinct weights from labels summing to 2 or 3
        FamilySpec::Path(2) => 2,
        FamilySpec::Path(n) => ceil(n + 1, 3),
        FamilySpec::Prism(n) => ceil(n, 2) + 1,
        FamilySpec::Wheel(n) => ceil(n + 3, 4),
        FamilySpec::Helm(n) => ceil(n + 1, 2),
        FamilySpec::Friendship(n) => ceil(2 * n + 2, 3),
        FamilySpec::Complete(_) => 2,
        FamilySpec::CompleteBipartiteNN(_) => 3,
        FamilySpec::TwoRegular(ref lengths) => ceil(lengths.iter().sum::<usize>() + 2, 3),
    }
}

/// Builds the labeling for any family, checking it in debug builds.
pub fn construct(spec: &FamilySpec) -> Result<ConstructionCertificate, ConstructError> {
    construct_with(spec, Verification::default())
}

pub fn construct_with(
    spec: &FamilySpec,
    verification: Verification,
) -> Result<ConstructionCertificate, ConstructError> {
    spec.validate()?;
    let cert = match *spec {
        FamilySpec::Cycle(n) => construct_cycle(n)?,
        FamilySpec::Path(n) => construct_path(n)?,
        FamilySpec::Prism(n) => construct_prism(n)?,
        FamilySpec::Wheel(n) => construct_wheel(n)?,
        FamilySpec::Helm(n) => construct_helm(n)?,
        FamilySpec::Friendship(n) => construct_friendship(n)?,
        FamilySpec::Complete(n) => construct_complete(n)?,
        FamilySpec::CompleteBipartiteNN(n) => construct_complete_bipartite(n)?,
        FamilySpec::TwoRegular(ref lengths) => construct_two_regular(lengths)?,
    };
    if verification == Verification::Always {
        check(&cert)?;
    }
    Ok(cert)
}

/// Confirms a certificate is irregular within its claimed maximum.
pub fn check(cert: &ConstructionCertificate) -> Result<(), ConstructError> {
    let report = labeling::verify(&cert.graph, &cert.labeling)?;
    if let Some(witness) = report.duplicate_weight_witness {
        return Err(ConstructError::NotIrregular {
            family: cert.family.to_string(),
            witness,
        });
    }
    debug_assert!(report.max_label_used <= cert.claimed_s);
    Ok(())
}

/// Whether the family's lower bound meets its formula, i.e. whether a
/// construction at the formula value is optimal.
pub fn bound_matches_formula(spec: &FamilySpec) -> Result<bool, ConstructError> {
    let (g, _) = generate(spec)?;
    Ok(bounds::degree_count_bound(&g)?.0 == tvs_formula(spec))
}

/// Completes an edge labeling with the pointwise smallest weights.
///
/// Vertices are visited by ascending vertex sum (ties by index); each takes
/// the smallest weight above the previous one that its own sum allows.
/// Returns `None` when some vertex would need a label above `s`. Because all
/// feasible weight windows `[sum + 1, sum + s]` have the same width, this
/// succeeds whenever any completion with labels in `1..=s` exists.
pub fn greedy_vertex_completion(
    g: &Graph,
    edge_labels: &[Label],
    s: Label,
) -> Result<Option<TotalLabeling>, GraphError> {
    let sums = labeling::vertex_sums(g, edge_labels)?;
    let Some(vertex_labels) = greedy_labels_for_sums(&sums, s) else {
        return Ok(None);
    };
    let s = s.max(edge_labels.iter().copied().max().unwrap_or(1));
    TotalLabeling::new(vertex_labels, edge_labels.to_vec(), s).map(Some)
}

/// Vertex labels from [`greedy_vertex_completion`] for precomputed sums.
pub(crate) fn greedy_labels_for_sums(sums: &[Label], s: Label) -> Option<Vec<Label>> {
    let mut order: Vec<usize> = (0..sums.len()).collect();
    order.sort_by_key(|&v| (sums[v], v));
    let mut labels = vec![0; sums.len()];
    let mut previous: Label = 0;
    for v in order {
        let weight = (previous + 1).max(sums[v] + 1);
        let label = weight - sums[v];
        if label > s {
            return None;
        }
        labels[v] = label;
        previous = weight;
    }
    Some(labels)
}

/// Gives `vertices` the consecutive labels `first, first + 1, ...`.
fn assign_run(labels: &mut [Label], vertices: &[usize], first: Label) {
    for (offset, &v) in vertices.iter().enumerate() {
        labels[v] = first + offset as Label;
    }
}

/// Packages labels for `spec` into a certificate.
fn certify(
    spec: FamilySpec,
    graph: Graph,
    vertex_labels: Vec<Label>,
    edge_labels: Vec<Label>,
    s: Label,
) -> Result<ConstructionCertificate, ConstructError> {
    let distribution = labeling::sum_distribution(&graph, &edge_labels)?;
    let labeling = TotalLabeling::new(vertex_labels, edge_labels, s)?;
    let cert = ConstructionCertificate {
        family: spec,
        graph,
        labeling,
        claimed_s: s,
        distribution_before_vertex_labels: distribution,
    };
    if Verification::default() == Verification::Always {
        check(&cert)?;
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::weight_profile;

    fn cycle_graph(n: usize) -> Graph {
        generate(&FamilySpec::Cycle(n)).unwrap().0
    }

    #[test]
    fn formula_values() {
        assert_eq!(tvs_formula(&FamilySpec::Cycle(10)), 4);
        assert_eq!(tvs_formula(&FamilySpec::Prism(4)), 3);
        assert_eq!(tvs_formula(&FamilySpec::TwoRegular(vec![3, 3])), 3);
        assert_eq!(tvs_formula(&FamilySpec::Friendship(1)), 2);
        assert_eq!(tvs_formula(&FamilySpec::Friendship(4)), 4);
        assert_eq!(tvs_formula(&FamilySpec::Wheel(6)), 3);
        assert_eq!(tvs_formula(&FamilySpec::Helm(4)), 3);
        assert_eq!(tvs_formula(&FamilySpec::Complete(17)), 2);
        assert_eq!(tvs_formula(&FamilySpec::CompleteBipartiteNN(9)), 3);
        assert_eq!(tvs_formula(&FamilySpec::Path(2)), 2);
        assert_eq!(tvs_formula(&FamilySpec::Path(7)), 3);
    }

    #[test]
    fn greedy_on_ten_cycle() {
        let g = cycle_graph(10);
        let cert = construct_cycle(10).unwrap();
        let lab = greedy_vertex_completion(&g, cert.labeling.edge_labels(), 4)
            .unwrap()
            .unwrap();
        let mut w = weight_profile(&g, &lab).unwrap().weights;
        w.sort_unstable();
        assert_eq!(w, (3..=12).collect::<Vec<_>>());
    }

    #[test]
    fn greedy_fails_when_class_is_too_big() {
        let g = cycle_graph(4);
        assert_eq!(greedy_vertex_completion(&g, &[1; 4], 2).unwrap(), None);
    }

    #[test]
    fn greedy_single_class() {
        for n in 3..8 {
            let g = cycle_graph(n);
            let lab = greedy_vertex_completion(&g, &vec![1; n], n as Label)
                .unwrap()
                .unwrap();
            let mut labels = lab.vertex_labels().to_vec();
            labels.sort_unstable();
            assert_eq!(labels, (1..=n as Label).collect::<Vec<_>>());
            assert!(labeling::verify(&g, &lab).unwrap().is_irregular);
        }
    }

    #[test]
    fn greedy_length_mismatch() {
        assert!(greedy_vertex_completion(&cycle_graph(3), &[1, 1], 2).is_err());
    }

    #[test]
    fn invalid_spec_is_rejected() {
        assert!(matches!(
            construct(&FamilySpec::Wheel(2)),
            Err(ConstructError::Family(FamilyError::TooSmall { .. }))
        ));
    }

    #[test]
    fn check_reports_a_witness() {
        let mut cert = construct_cycle(3).unwrap();
        cert.labeling = TotalLabeling::new(vec![1; 3], vec![1; 3], 2).unwrap();
        assert!(matches!(
            check(&cert),
            Err(ConstructError::NotIrregular {
                witness: (0, 1),
                ..
            })
        ));
    }
}
