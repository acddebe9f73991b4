//! Total labelings, vertex sums, weights and the irregularity check.
//!
//! For a total labeling `λ`, the vertex sum of `v` is the sum of the labels on
//! the edges incident to `v`, and its weight is that sum plus `λ(v)`. A
//! labeling is irregular when all weights are pairwise distinct.

use std::collections::{BTreeMap, HashMap};

use crate::graph::{Graph, GraphError};

/// Label values. Weights are bounded by `(Δ + 1) · s`, which fits comfortably
/// for any graph that fits in memory; sums are still computed with checked
/// arithmetic.
pub type Label = u64;

/// Positive labels on every vertex and every edge, with a declared maximum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalLabeling {
    vertex_labels: Vec<Label>,
    edge_labels: Vec<Label>,
    s: Label,
}

impl TotalLabeling {
    /// Validates that every label lies in `1..=s`.
    pub fn new(
        vertex_labels: Vec<Label>,
        edge_labels: Vec<Label>,
        s: Label,
    ) -> Result<Self, GraphError> {
        if s == 0 {
            return Err(GraphError::ZeroMaxLabel);
        }
        for (what, labels) in [("vertex", &vertex_labels), ("edge", &edge_labels)] {
            for (index, &label) in labels.iter().enumerate() {
                if label == 0 {
                    return Err(GraphError::ZeroLabel { what, index });
                }
                if label > s {
                    return Err(GraphError::LabelExceedsMax {
                        what,
                        index,
                        label,
                        s,
                    });
                }
            }
        }
        Ok(Self {
            vertex_labels,
            edge_labels,
            s,
        })
    }

    /// Like [`TotalLabeling::new`] with `s` set to the largest label present.
    pub fn with_tight_max(
        vertex_labels: Vec<Label>,
        edge_labels: Vec<Label>,
    ) -> Result<Self, GraphError> {
        let s = vertex_labels
            .iter()
            .chain(&edge_labels)
            .copied()
            .max()
            .unwrap_or(1)
            .max(1);
        Self::new(vertex_labels, edge_labels, s)
    }

    pub fn vertex_labels(&self) -> &[Label] {
        &self.vertex_labels
    }

    pub fn edge_labels(&self) -> &[Label] {
        &self.edge_labels
    }

    /// The declared maximum label.
    pub fn s(&self) -> Label {
        self.s
    }

    /// Largest label actually used, which may be below [`TotalLabeling::s`].
    pub fn max_label_used(&self) -> Label {
        self.vertex_labels
            .iter()
            .chain(&self.edge_labels)
            .copied()
            .max()
            .unwrap_or(0)
    }

    fn check_lengths(&self, g: &Graph) -> Result<(), GraphError> {
        if self.vertex_labels.len() != g.vertex_count() {
            return Err(GraphError::LengthMismatch {
                what: "vertex labels",
                expected: g.vertex_count(),
                actual: self.vertex_labels.len(),
            });
        }
        check_edge_len(g, &self.edge_labels)
    }
}

fn check_edge_len(g: &Graph, edge_labels: &[Label]) -> Result<(), GraphError> {
    if edge_labels.len() != g.edge_count() {
        return Err(GraphError::LengthMismatch {
            what: "edge labels",
            expected: g.edge_count(),
            actual: edge_labels.len(),
        });
    }
    Ok(())
}

/// Per-vertex sums and weights derived from a labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightProfile {
    pub vertex_sums: Vec<Label>,
    pub weights: Vec<Label>,
}

/// Vertex sums induced by an edge labeling alone.
pub fn vertex_sums(g: &Graph, edge_labels: &[Label]) -> Result<Vec<Label>, GraphError> {
    check_edge_len(g, edge_labels)?;
    (0..g.vertex_count())
        .map(|v| {
            g.incident_edges(v)
                .iter()
                .try_fold(0 as Label, |acc, &e| acc.checked_add(edge_labels[e]))
                .ok_or(GraphError::Overflow { vertex: v })
        })
        .collect()
}

pub fn weight_profile(g: &Graph, lab: &TotalLabeling) -> Result<WeightProfile, GraphError> {
    lab.check_lengths(g)?;
    let vertex_sums = vertex_sums(g, &lab.edge_labels)?;
    let weights = vertex_sums
        .iter()
        .zip(&lab.vertex_labels)
        .enumerate()
        .map(|(v, (&sum, &label))| {
            sum.checked_add(label)
                .ok_or(GraphError::Overflow { vertex: v })
        })
        .collect::<Result<_, _>>()?;
    Ok(WeightProfile {
        vertex_sums,
        weights,
    })
}

/// Outcome of checking a labeling for irregularity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub is_irregular: bool,
    pub max_label_used: Label,
    /// Two vertices with equal weight, smallest second index first.
    pub duplicate_weight_witness: Option<(usize, usize)>,
    /// `(min, max)` weight; `None` only for the empty graph.
    pub weight_range: Option<(Label, Label)>,
}

pub fn verify(g: &Graph, lab: &TotalLabeling) -> Result<VerificationReport, GraphError> {
    let profile = weight_profile(g, lab)?;
    let mut first_with_weight = HashMap::with_capacity(profile.weights.len());
    let mut witness = None;
    for (v, &w) in profile.weights.iter().enumerate() {
        if let Some(&u) = first_with_weight.get(&w) {
            witness = Some((u, v));
            break;
        }
        first_with_weight.insert(w, v);
    }
    let weight_range = profile
        .weights
        .iter()
        .min()
        .zip(profile.weights.iter().max())
        .map(|(&lo, &hi)| (lo, hi));
    Ok(VerificationReport {
        is_irregular: witness.is_none(),
        max_label_used: lab.max_label_used(),
        duplicate_weight_witness: witness,
        weight_range,
    })
}

/// Number of vertices in each vertex-sum class, ascending by sum.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SumDistribution {
    classes: Vec<(Label, usize)>,
}

impl SumDistribution {
    /// Classes from `(sum, count)` pairs; zero counts are dropped and equal
    /// sums merged.
    pub fn from_pairs<I: IntoIterator<Item = (Label, usize)>>(pairs: I) -> Self {
        let mut map = BTreeMap::new();
        for (sum, count) in pairs {
            if count > 0 {
                *map.entry(sum).or_insert(0) += count;
            }
        }
        Self {
            classes: map.into_iter().collect(),
        }
    }

    pub fn classes(&self) -> &[(Label, usize)] {
        &self.classes
    }

    pub fn counts(&self) -> Vec<usize> {
        self.classes.iter().map(|&(_, c)| c).collect()
    }

    pub fn count_of(&self, sum: Label) -> usize {
        self.classes
            .iter()
            .find(|&&(s, _)| s == sum)
            .map_or(0, |&(_, c)| c)
    }

    pub fn total(&self) -> usize {
        self.classes.iter().map(|&(_, c)| c).sum()
    }
}

pub fn sum_distribution(g: &Graph, edge_labels: &[Label]) -> Result<SumDistribution, GraphError> {
    let sums = vertex_sums(g, edge_labels)?;
    Ok(SumDistribution::from_pairs(
        sums.into_iter().map(|s| (s, 1)),
    ))
}
