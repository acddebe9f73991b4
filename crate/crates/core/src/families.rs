//! Generators for the supported graph families.
//!
//! Each generator fixes a canonical vertex and edge order that the
//! constructors rely on. Formulas elsewhere are written with 1-based indices
//! (`v_1 .. v_n`); here `v_i` is vertex `i - 1`.
//!
//! | family | vertices | edges |
//! |---|---|---|
//! | `Cycle(n)` | `v_i = i` | `(i, i+1 mod n)` |
//! | `Path(n)` | `v_i = i` | `(i, i+1)` |
//! | `Prism(n)` | outer `v_i = i`, inner `w_i = n+i` | outer cycle, inner cycle, rungs `(i, n+i)` |
//! | `Wheel(n)` | rim `0..n`, center `n` | rim cycle, spokes `(i, n)` |
//! | `Helm(n)` | rim `0..n`, pendants `n..2n`, center `2n` | rim cycle, spokes, pendant edges `(i, n+i)` |
//! | `Friendship(n)` | triangle `t` uses `2t`, `2t+1`; center `2n` | per triangle: `(2t, c)`, `(2t+1, c)`, `(2t, 2t+1)` |
//! | `Complete(n)` | `0..n` | `(i, j)`, `i < j`, lexicographic |
//! | `CompleteBipartiteNN(n)` | `v_i = i`, `w_j = n+j` | `(i, n+j)`, lexicographic in `(i, j)` |
//! | `TwoRegular(lengths)` | components laid out in the given order | each component as `Cycle` |

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family} requires n >= {min}, got {n}")]
    TooSmall {
        family: &'static str,
        min: usize,
        n: usize,
    },
    #[error("two-regular component {index} has length {length}; cycles need at least 3 vertices")]
    ShortCycle { index: usize, length: usize },
    #[error("two-regular graph needs at least one cycle length")]
    NoCycles,
    #[error("unknown family '{0}'")]
    UnknownFamily(String),
    #[error("malformed family parameter '{0}'")]
    BadParameter(String),
}

/// A graph family together with its size parameter(s).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Cycle(usize),
    Path(usize),
    Prism(usize),
    Wheel(usize),
    Helm(usize),
    Friendship(usize),
    Complete(usize),
    CompleteBipartiteNN(usize),
    /// Disjoint union of cycles with the given lengths.
    TwoRegular(Vec<usize>),
}

impl FamilySpec {
    /// Family names as accepted on the command line.
    pub const NAMES: [&'static str; 9] = [
        "cycle",
        "path",
        "prism",
        "wheel",
        "helm",
        "friendship",
        "complete",
        "complete-bipartite",
        "two-regular",
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Self::Cycle(_) => "cycle",
            Self::Path(_) => "path",
            Self::Prism(_) => "prism",
            Self::Wheel(_) => "wheel",
            Self::Helm(_) => "helm",
            Self::Friendship(_) => "friendship",
            Self::Complete(_) => "complete",
            Self::CompleteBipartiteNN(_) => "complete-bipartite",
            Self::TwoRegular(_) => "two-regular",
        }
    }

    /// Builds a single-parameter family by name.
    pub fn from_name(name: &str, n: usize) -> Result<Self, FamilyError> {
        Ok(match name {
            "cycle" => Self::Cycle(n),
            "path" => Self::Path(n),
            "prism" => Self::Prism(n),
            "wheel" => Self::Wheel(n),
            "helm" => Self::Helm(n),
            "friendship" => Self::Friendship(n),
            "complete" => Self::Complete(n),
            "complete-bipartite" => Self::CompleteBipartiteNN(n),
            "two-regular" => Self::TwoRegular(vec![n]),
            other => return Err(FamilyError::UnknownFamily(other.to_string())),
        })
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        let (min, n) = match *self {
            Self::Cycle(n) => (3, n),
            Self::Path(n) => (2, n),
            Self::Prism(n) => (3, n),
            Self::Wheel(n) => (3, n),
            Self::Helm(n) => (3, n),
            Self::Friendship(n) => (1, n),
            Self::Complete(n) => (3, n),
            Self::CompleteBipartiteNN(n) => (3, n),
            Self::TwoRegular(ref lengths) => {
                if lengths.is_empty() {
                    return Err(FamilyError::NoCycles);
                }
                if let Some((index, &length)) = lengths.iter().enumerate().find(|(_, &l)| l < 3) {
                    return Err(FamilyError::ShortCycle { index, length });
                }
                return Ok(());
            }
        };
        if n < min {
            return Err(FamilyError::TooSmall {
                family: self.name(),
                min,
                n,
            });
        }
        Ok(())
    }

    /// Number of vertices of the generated graph.
    pub fn vertex_count(&self) -> usize {
        match *self {
            Self::Cycle(n) | Self::Path(n) | Self::Complete(n) => n,
            Self::Prism(n) | Self::CompleteBipartiteNN(n) => 2 * n,
            Self::Wheel(n) => n + 1,
            Self::Helm(n) | Self::Friendship(n) => 2 * n + 1,
            Self::TwoRegular(ref lengths) => lengths.iter().sum(),
        }
    }
}

impl fmt::Display for FamilySpec {
    /// `name:n`, or `two-regular:l1,l2,...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Cycle(n)
            | Self::Path(n)
            | Self::Prism(n)
            | Self::Wheel(n)
            | Self::Helm(n)
            | Self::Friendship(n)
            | Self::Complete(n)
            | Self::CompleteBipartiteNN(n) => write!(f, "{}:{}", self.name(), n),
            Self::TwoRegular(lengths) => {
                write!(f, "two-regular:")?;
                for (i, l) in lengths.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{l}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let (name, param) = text
            .split_once(':')
            .ok_or_else(|| FamilyError::BadParameter(text.to_string()))?;
        let name = name.trim();
        if name == "two-regular" {
            return Ok(Self::TwoRegular(parse_lengths(param)?));
        }
        let n = param
            .trim()
            .parse()
            .map_err(|_| FamilyError::BadParameter(param.to_string()))?;
        Self::from_name(name, n)
    }
}

/// Parses a comma-separated list of cycle lengths.
pub fn parse_lengths(text: &str) -> Result<Vec<usize>, FamilyError> {
    text.split(',')
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|_| FamilyError::BadParameter(text.to_string()))
        })
        .collect()
}

/// What a vertex is within its family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    /// Cycle, path, rim or outer-cycle vertex `v_{i+1}`.
    Cycle(usize),
    /// Inner-cycle vertex `w_{i+1}` of a prism.
    Inner(usize),
    Center,
    /// Pendant attached to rim vertex `i` of a helm.
    Pendant(usize),
    /// Non-central vertex `slot` (0 or 1) of friendship triangle `triangle`.
    Triangle {
        triangle: usize,
        slot: usize,
    },
    /// Vertex `v_{i+1}` or `w_{i+1}` of `K_{n,n}`; `side` is 0 for `v`, 1 for `w`.
    Part {
        side: usize,
        index: usize,
    },
    /// Position `position` on cycle `component` of a two-regular graph,
    /// `component` indexing the caller's length list.
    Component {
        component: usize,
        position: usize,
    },
}

/// The role of every vertex, indexed by vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalOrder {
    roles: Vec<Role>,
    /// Component indices sorted by ascending length (stable); empty for
    /// families other than two-regular.
    components_ascending: Vec<usize>,
    /// First vertex of each component, in the caller's order.
    component_offsets: Vec<usize>,
}

impl CanonicalOrder {
    pub fn roles(&self) -> &[Role] {
        &self.roles
    }

    pub fn role(&self, v: usize) -> Role {
        self.roles[v]
    }

    pub fn vertex_of(&self, role: Role) -> Option<usize> {
        self.roles.iter().position(|&r| r == role)
    }

    pub fn components_ascending(&self) -> &[usize] {
        &self.components_ascending
    }

    pub fn component_offsets(&self) -> &[usize] {
        &self.component_offsets
    }
}

fn cycle_edges(offset: usize, len: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..len).map(move |i| (offset + i, offset + (i + 1) % len))
}

/// Builds the graph of `spec` and the role of every vertex.
pub fn generate(spec: &FamilySpec) -> Result<(Graph, CanonicalOrder), FamilyError> {
    spec.validate()?;
    let mut components_ascending = Vec::new();
    let mut component_offsets = Vec::new();
    let (n, edges, roles): (usize, Vec<(usize, usize)>, Vec<Role>) = match *spec {
        FamilySpec::Cycle(n) => (
            n,
            cycle_edges(0, n).collect(),
            (0..n).map(Role::Cycle).collect(),
        ),
        FamilySpec::Path(n) => (
            n,
            (0..n - 1).map(|i| (i, i + 1)).collect(),
            (0..n).map(Role::Cycle).collect(),
        ),
        FamilySpec::Prism(n) => {
            let edges = cycle_edges(0, n)
                .chain(cycle_edges(n, n))
                .chain((0..n).map(|i| (i, n + i)))
                .collect();
            let roles = (0..n)
                .map(Role::Cycle)
                .chain((0..n).map(Role::Inner))
                .collect();
            (2 * n, edges, roles)
        }
        FamilySpec::Wheel(n) => {
            let edges = cycle_edges(0, n).chain((0..n).map(|i| (i, n))).collect();
            let roles = (0..n).map(Role::Cycle).chain([Role::Center]).collect();
            (n + 1, edges, roles)
        }
        FamilySpec::Helm(n) => {
            let center = 2 * n;
            let edges = cycle_edges(0, n)
                .chain((0..n).map(|i| (i, center)))
                .chain((0..n).map(|i| (i, n + i)))
                .collect();
            let roles = (0..n)
                .map(Role::Cycle)
                .chain((0..n).map(Role::Pendant))
                .chain([Role::Center])
                .collect();
            (2 * n + 1, edges, roles)
        }
        FamilySpec::Friendship(n) => {
            let center = 2 * n;
            let edges = (0..n)
                .flat_map(|t| [(2 * t, center), (2 * t + 1, center), (2 * t, 2 * t + 1)])
                .collect();
            let roles = (0..2 * n)
                .map(|v| Role::Triangle {
                    triangle: v / 2,
                    slot: v % 2,
                })
                .chain([Role::Center])
                .collect();
            (2 * n + 1, edges, roles)
        }
        FamilySpec::Complete(n) => (
            n,
            (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .collect(),
            (0..n).map(Role::Cycle).collect(),
        ),
        FamilySpec::CompleteBipartiteNN(n) => (
            2 * n,
            (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, n + j)))
                .collect(),
            (0..2 * n)
                .map(|v| Role::Part {
                    side: v / n,
                    index: v % n,
                })
                .collect(),
        ),
        FamilySpec::TwoRegular(ref lengths) => {
            let mut edges = Vec::new();
            let mut roles = Vec::new();
            let mut offset = 0;
            for (component, &len) in lengths.iter().enumerate() {
                component_offsets.push(offset);
                edges.extend(cycle_edges(offset, len));
                roles.extend((0..len).map(|position| Role::Component {
                    component,
                    position,
                }));
                offset += len;
            }
            components_ascending = (0..lengths.len()).collect();
            components_ascending.sort_by_key(|&c| lengths[c]);
            (offset, edges, roles)
        }
    };
    let graph = Graph::new(n, edges).expect("family generators emit simple graphs");
    Ok((
        graph,
        CanonicalOrder {
            roles,
            components_ascending,
            component_offsets,
        },
    ))
}

/// Cycle-length lists summing to `n` with at most `max_parts` cycles, each of
/// length at least 3, as non-decreasing lists in lexicographic order.
pub fn cycle_partitions(n: usize, max_parts: usize) -> Vec<Vec<usize>> {
    fn extend(
        left: usize,
        min: usize,
        parts_left: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if left == 0 {
            out.push(prefix.clone());
            return;
        }
        if parts_left == 0 {
            return;
        }
        for part in min..=left {
            prefix.push(part);
            extend(left - part, part, parts_left - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(n, 3, max_parts, &mut Vec::new(), &mut out);
    out
}
