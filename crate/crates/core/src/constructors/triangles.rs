//! Helm and friendship graphs.

use crate::families::{generate, FamilySpec};
use crate::labeling::Label;

use super::cycles::construct_cycle;
use super::fixtures::HELM_FIXTURES;
use super::{assign_run, certify, ConstructError, ConstructionCertificate};

/// Edge pattern on one friendship triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangleType {
    /// All three edges 1; both outer vertices have sum 2.
    I,
    /// Spokes `s`, base 1; both outer vertices have sum `s + 1`.
    II,
    /// All three edges `s`; both outer vertices have sum `2s`.
    III,
}

impl TriangleType {
    /// Labels for `(spoke, spoke, base)`.
    pub fn edge_labels(self, s: Label) -> [Label; 3] {
        match self {
            Self::I => [1, 1, 1],
            Self::II => [s, s, 1],
            Self::III => [s, s, s],
        }
    }

    /// Vertex sum of each non-central vertex.
    pub fn outer_sum(self, s: Label) -> Label {
        match self {
            Self::I => 2,
            Self::II => s + 1,
            Self::III => 2 * s,
        }
    }
}

/// `H_n` at `s = ⌈(n + 1) / 2⌉`.
///
/// Pendant edges at rim vertices `0..s` get 1; every other edge gets `s`.
/// Classes: pendants with sum 1 and `s`, rim vertices with sum `3s + 1` and
/// `4s`. For `n >= 5` the center has at least five `s`-edges and outweighs
/// everything else. `H_3` and `H_4` use stored labelings.
pub fn construct_helm(n: usize) -> Result<ConstructionCertificate, ConstructError> {
    let spec = FamilySpec::Helm(n);
    let (graph, _) = generate(&spec)?;
    if let Some(fixture) = HELM_FIXTURES.iter().find(|f| f.n == n) {
        return certify(
            spec,
            graph,
            fixture.vertex_labels.to_vec(),
            fixture.edge_labels.to_vec(),
            fixture.s,
        );
    }
    let s = (n + 1).div_ceil(2);
    let sl = s as Label;
    let mut edge_labels = vec![sl; 2 * n];
    edge_labels.extend((0..n).map(|i| if i < s { 1 } else { sl }));

    let rim_light: Vec<usize> = (0..s).collect();
    let rim_heavy: Vec<usize> = (s..n).collect();
    let pendant_light: Vec<usize> = (n..n + s).collect();
    let pendant_heavy: Vec<usize> = (n + s..2 * n).collect();

    let mut labels = vec![0; 2 * n + 1];
    assign_run(&mut labels, &pendant_light, 1); // [2, s + 1]
    assign_run(&mut labels, &pendant_heavy, 2); // [s + 2, n + 1]
    assign_run(&mut labels, &rim_light, 1); // [3s + 2, 4s + 1]
    assign_run(&mut labels, &rim_heavy, 2); // [4s + 2, n + 1 + 3s]
    labels[2 * n] = 1;
    certify(spec, graph, labels, edge_labels, sl)
}

/// Triangle types in triangle order for `F_n`, `n >= 2`.
///
/// Even `s = 2a`: `a` of type I, `a − 1` of type II. Odd `s = 2a + 1`: `a`
/// of each. The rest are type III.
pub(crate) fn friendship_types(n: usize) -> Vec<TriangleType> {
    let s = (2 * n + 2).div_ceil(3);
    let (first, second) = if s.is_multiple_of(2) {
        (s / 2, s / 2 - 1)
    } else {
        ((s - 1) / 2, (s - 1) / 2)
    };
    let mut types = vec![TriangleType::I; first];
    types.extend(std::iter::repeat_n(TriangleType::II, second));
    types.extend(std::iter::repeat_n(TriangleType::III, n - first - second));
    types
}

/// `F_n` at `s = ⌈(2n + 2) / 3⌉`; `F_1` is the triangle.
///
/// Non-central weights tile `[3, 2n + 2]`. The center gets label `s`; with at
/// least one type II or III triangle its weight is at least `3s + 2`.
pub fn construct_friendship(n: usize) -> Result<ConstructionCertificate, ConstructError> {
    let spec = FamilySpec::Friendship(n);
    let (graph, _) = generate(&spec)?;
    if n == 1 {
        let triangle = construct_cycle(3)?;
        // both graphs are on {0, 1, 2}; carry edge labels over by endpoints
        let mut edge_labels = vec![0; 3];
        for (e, &(u, v)) in graph.edges().iter().enumerate() {
            let source = triangle.graph.find_edge(u, v).expect("same vertex set");
            edge_labels[e] = triangle.labeling.edge_labels()[source];
        }
        let vertex_labels = triangle.labeling.vertex_labels().to_vec();
        return certify(spec, graph, vertex_labels, edge_labels, triangle.claimed_s);
    }
    let s = (2 * n + 2).div_ceil(3) as Label;
    let types = friendship_types(n);
    let edge_labels: Vec<Label> = types.iter().flat_map(|t| t.edge_labels(s)).collect();

    let members = |wanted: TriangleType| -> Vec<usize> {
        types
            .iter()
            .enumerate()
            .filter(|&(_, &t)| t == wanted)
            .flat_map(|(t, _)| [2 * t, 2 * t + 1])
            .collect()
    };
    let mut labels = vec![0; 2 * n + 1];
    if s.is_multiple_of(2) {
        assign_run(&mut labels, &members(TriangleType::I), 1); // [3, s + 2]
        assign_run(&mut labels, &members(TriangleType::II), 2); // [s + 3, 2s]
    } else {
        assign_run(&mut labels, &members(TriangleType::I), 1); // [3, s + 1]
        assign_run(&mut labels, &members(TriangleType::II), 1); // [s + 2, 2s]
    }
    assign_run(&mut labels, &members(TriangleType::III), 1); // [2s + 1, 2n + 2]
    labels[2 * n] = s;
    certify(spec, graph, labels, edge_labels, s)
}
