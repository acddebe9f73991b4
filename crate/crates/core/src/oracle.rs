//! Exact total vertex irregularity strength for small graphs.
//!
//! The search branches on edge labels only. Once every edge at a vertex is
//! fixed its sum is known and its admissible weights are `[sum + 1, sum + k]`.
//! All these windows have width `k`, so whether the closed vertices can still
//! get distinct weights is decided exactly by the sorted greedy assignment;
//! that check prunes every branch and, at a leaf, yields the vertex labels.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::bounds::degree_count_bound;
use crate::constructors::greedy_labels_for_sums;
use crate::graph::{EdgeId, Graph, GraphError};
use crate::labeling::{Label, TotalLabeling};

pub const DEFAULT_MAX_NODES: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("k must be at least 1")]
    InvalidK,
    #[error("search budget needs max_nodes >= 1 and max_k >= 1")]
    InvalidBudget,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Limits on a search. `max_nodes` counts edge-label assignments.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_k: Label,
}

impl SearchBudget {
    pub fn new(max_nodes: u64, max_k: Label) -> Result<Self, OracleError> {
        if max_nodes == 0 || max_k == 0 {
            return Err(OracleError::InvalidBudget);
        }
        Ok(Self { max_nodes, max_k })
    }

    /// `10^7` nodes and `k` up to the vertex count.
    pub fn default_for(g: &Graph) -> Self {
        Self {
            max_nodes: DEFAULT_MAX_NODES,
            max_k: (g.vertex_count() as Label).max(1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleStatus {
    /// A `k`-irregular labeling exists; `witness` is one.
    Exact {
        k: Label,
        witness: TotalLabeling,
    },
    /// No labeling with labels in `1..=k` is irregular.
    InfeasibleAt(Label),
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub status: OracleStatus,
    /// Edge-label assignments made.
    pub nodes: u64,
}

impl OracleResult {
    pub fn exact_k(&self) -> Option<Label> {
        match self.status {
            OracleStatus::Exact { k, .. } => Some(k),
            _ => None,
        }
    }
}

/// Edge order in which each step closes a vertex as early as possible:
/// repeatedly take the vertex with the fewest unordered edges left (ties by
/// index) and append those edges in edge order.
pub fn branching_order(g: &Graph) -> Vec<EdgeId> {
    let mut placed = vec![false; g.edge_count()];
    let mut remaining: Vec<usize> = g.degrees();
    let mut order = Vec::with_capacity(g.edge_count());
    while order.len() < g.edge_count() {
        let v = (0..g.vertex_count())
            .filter(|&v| remaining[v] > 0)
            .min_by_key(|&v| (remaining[v], v))
            .expect("unplaced edges have endpoints with remaining degree");
        for &e in g.incident_edges(v) {
            if !placed[e] {
                placed[e] = true;
                order.push(e);
                let (a, b) = g.edge(e);
                remaining[a] -= 1;
                remaining[b] -= 1;
            }
        }
    }
    order
}

struct Search<'g> {
    graph: &'g Graph,
    k: Label,
    order: Vec<EdgeId>,
    /// Vertices whose last edge is `order[p]`.
    closes: Vec<Vec<usize>>,
    labels: Vec<Label>,
    sums: Vec<Label>,
    closed: BTreeMap<Label, usize>,
    nodes: u64,
    max_nodes: u64,
}

enum Outcome {
    Found,
    Exhausted,
    OutOfBudget,
}

impl<'g> Search<'g> {
    fn new(graph: &'g Graph, k: Label, max_nodes: u64) -> Self {
        let order = branching_order(graph);
        let mut last_position = vec![0; graph.vertex_count()];
        for (p, &e) in order.iter().enumerate() {
            let (a, b) = graph.edge(e);
            last_position[a] = p;
            last_position[b] = p;
        }
        let mut closes = vec![Vec::new(); order.len()];
        for (v, &p) in last_position.iter().enumerate() {
            closes[p].push(v);
        }
        Self {
            graph,
            k,
            order,
            closes,
            labels: vec![0; graph.edge_count()],
            sums: vec![0; graph.vertex_count()],
            closed: BTreeMap::new(),
            nodes: 0,
            max_nodes,
        }
    }

    /// Whether the closed vertices can still receive distinct weights.
    fn closed_feasible(&self) -> bool {
        let mut previous: Label = 0;
        for (&sum, &count) in &self.closed {
            let first = (previous + 1).max(sum + 1);
            let last = first + count as Label - 1;
            if last - sum > self.k {
                return false;
            }
            previous = last;
        }
        true
    }

    fn run(&mut self, depth: usize) -> Outcome {
        if depth == self.order.len() {
            return Outcome::Found;
        }
        let e = self.order[depth];
        let (a, b) = self.graph.edge(e);
        for label in 1..=self.k {
            if self.nodes >= self.max_nodes {
                return Outcome::OutOfBudget;
            }
            self.nodes += 1;
            match self.try_label(depth, e, a, b, label) {
                Outcome::Exhausted => {}
                other => return other,
            }
        }
        Outcome::Exhausted
    }

    fn try_label(&mut self, depth: usize, e: EdgeId, a: usize, b: usize, label: Label) -> Outcome {
        self.labels[e] = label;
        self.sums[a] += label;
        self.sums[b] += label;
        let closing = std::mem::take(&mut self.closes[depth]);
        for &v in &closing {
            *self.closed.entry(self.sums[v]).or_insert(0) += 1;
        }
        let outcome = if closing.is_empty() || self.closed_feasible() {
            self.run(depth + 1)
        } else {
            Outcome::Exhausted
        };
        if !matches!(outcome, Outcome::Found) {
            for &v in &closing {
                let entry = self
                    .closed
                    .get_mut(&self.sums[v])
                    .expect("closed sum recorded");
                *entry -= 1;
                if *entry == 0 {
                    self.closed.remove(&self.sums[v]);
                }
            }
            self.sums[a] -= label;
            self.sums[b] -= label;
            self.labels[e] = 0;
        }
        self.closes[depth] = closing;
        outcome
    }

    fn witness(&self) -> TotalLabeling {
        let vertex_labels = greedy_labels_for_sums(&self.sums, self.k)
            .expect("leaf reached only when the closed set is feasible");
        TotalLabeling::new(vertex_labels, self.labels.clone(), self.k).expect("labels lie in 1..=k")
    }
}

fn check_inputs(g: &Graph, k: Label, budget: &SearchBudget) -> Result<(), OracleError> {
    if k == 0 {
        return Err(OracleError::InvalidK);
    }
    if budget.max_nodes == 0 || budget.max_k == 0 {
        return Err(OracleError::InvalidBudget);
    }
    g.require_no_isolated()?;
    Ok(())
}

/// Decides whether `g` has a `k`-irregular labeling.
pub fn feasible_at(
    g: &Graph,
    k: Label,
    budget: &SearchBudget,
) -> Result<OracleResult, OracleError> {
    check_inputs(g, k, budget)?;
    let mut search = Search::new(g, k, budget.max_nodes);
    let status = match search.run(0) {
        Outcome::Found => OracleStatus::Exact {
            k,
            witness: search.witness(),
        },
        Outcome::Exhausted => OracleStatus::InfeasibleAt(k),
        Outcome::OutOfBudget => OracleStatus::BudgetExceeded,
    };
    Ok(OracleResult {
        status,
        nodes: search.nodes,
    })
}

/// [`feasible_at`] with the first branching edge's `k` choices searched on
/// separate threads. Each task gets the full node budget; node counts are
/// summed. When no task runs out of budget the status and witness equal the
/// sequential ones.
pub fn feasible_at_parallel(
    g: &Graph,
    k: Label,
    budget: &SearchBudget,
) -> Result<OracleResult, OracleError> {
    check_inputs(g, k, budget)?;
    let outcomes: Vec<(Outcome, u64, Option<TotalLabeling>)> = std::thread::scope(|scope| {
        let handles: Vec<_> = (1..=k)
            .map(|first| {
                scope.spawn(move || {
                    let mut search = Search::new(g, k, budget.max_nodes);
                    let e = search.order[0];
                    let (a, b) = g.edge(e);
                    search.nodes = 1;
                    let outcome = search.try_label(0, e, a, b, first);
                    let witness = matches!(outcome, Outcome::Found).then(|| search.witness());
                    (outcome, search.nodes, witness)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("search task panicked"))
            .collect()
    });
    let nodes = outcomes.iter().map(|(_, n, _)| n).sum();
    for (outcome, _, witness) in outcomes {
        match outcome {
            Outcome::Exhausted => continue,
            Outcome::OutOfBudget => {
                return Ok(OracleResult {
                    status: OracleStatus::BudgetExceeded,
                    nodes,
                })
            }
            Outcome::Found => {
                return Ok(OracleResult {
                    status: OracleStatus::Exact {
                        k,
                        witness: witness.expect("found implies witness"),
                    },
                    nodes,
                })
            }
        }
    }
    Ok(OracleResult {
        status: OracleStatus::InfeasibleAt(k),
        nodes,
    })
}

/// Smallest `k` with a `k`-irregular labeling, trying `k` upward from the
/// degree-counting lower bound. The node budget is shared across all `k`.
/// If every `k <= max_k` is infeasible the status is `InfeasibleAt(max_k)`.
pub fn exact_tvs(g: &Graph, budget: &SearchBudget) -> Result<OracleResult, OracleError> {
    if budget.max_nodes == 0 || budget.max_k == 0 {
        return Err(OracleError::InvalidBudget);
    }
    let (lower, _) = degree_count_bound(g)?;
    let mut nodes = 0;
    for k in lower..=budget.max_k {
        if nodes >= budget.max_nodes {
            return Ok(OracleResult {
                status: OracleStatus::BudgetExceeded,
                nodes,
            });
        }
        let remaining = SearchBudget {
            max_nodes: budget.max_nodes - nodes,
            max_k: budget.max_k,
        };
        let result = feasible_at(g, k, &remaining)?;
        nodes += result.nodes;
        match result.status {
            OracleStatus::InfeasibleAt(_) => continue,
            status => return Ok(OracleResult { status, nodes }),
        }
    }
    Ok(OracleResult {
        status: OracleStatus::InfeasibleAt(budget.max_k),
        nodes,
    })
}
