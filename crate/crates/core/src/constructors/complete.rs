use crate::families::{generate, FamilySpec};
use crate::labeling::Label;

use super::{certify, ConstructError, ConstructionCertificate};

/// `K_n` with labels in `{1, 2}`.
///
/// With 1-based indices, `v_i v_j` gets 1 iff `i + j <= n + 1`. Then
/// `v_i` has sum `n + i − 2` while `2i < n + 2` and `n + i − 3` after, so
/// vertex label 1 up to `i = ⌈n/2⌉` and 2 beyond makes every weight
/// `n + i − 1`. Weights are exactly `[n, 2n − 1]`.
pub fn construct_complete(n: usize) -> Result<ConstructionCertificate, ConstructError> {
    let spec = FamilySpec::Complete(n);
    let (graph, _) = generate(&spec)?;
    // i + j <= n + 1 with i = p + 1, j = q + 1
    let edge_labels = graph
        .edges()
        .iter()
        .map(|&(p, q)| if p + q < n { 1 } else { 2 })
        .collect();
    let pivot = n.div_ceil(2);
    let vertex_labels = (0..n).map(|p| if p < pivot { 1 } else { 2 }).collect();
    certify(spec, graph, vertex_labels, edge_labels, 2)
}

/// `K_{n,n}` with labels in `{1, 2, 3}`.
///
/// `v_i w_j` gets 1 iff `i + j <= n + 1`, else 3, so both `v_i` and `w_i`
/// have sum `n + 2(i − 1)`; labels 1 on `v_i` and 2 on `w_i` separate them.
/// Weights are exactly `[n + 1, 3n]`.
pub fn construct_complete_bipartite(n: usize) -> Result<ConstructionCertificate, ConstructError> {
    let spec = FamilySpec::CompleteBipartiteNN(n);
    let (graph, _) = generate(&spec)?;
    let edge_labels = graph
        .edges()
        .iter()
        .map(|&(v, w)| {
            let (i, j) = (v, w - n);
            if i + j < n {
                1
            } else {
                3
            }
        })
        .collect();
    let vertex_labels: Vec<Label> = (0..2 * n).map(|v| if v < n { 1 } else { 2 }).collect();
    certify(spec, graph, vertex_labels, edge_labels, 3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::{vertex_sums, weight_profile};

    #[test]
    fn small_complete_graphs() {
        let cert = construct_complete(4).unwrap();
        let sums = vertex_sums(&cert.graph, cert.labeling.edge_labels()).unwrap();
        assert_eq!(sums, vec![3, 4, 4, 5]);
        assert_eq!(cert.labeling.vertex_labels(), &[1, 1, 2, 2]);
        assert_eq!(
            weight_profile(&cert.graph, &cert.labeling).unwrap().weights,
            vec![4, 5, 6, 7]
        );
        let cert = construct_complete(3).unwrap();
        let sums = vertex_sums(&cert.graph, cert.labeling.edge_labels()).unwrap();
        assert_eq!(sums, vec![2, 3, 3]);
        assert_eq!(cert.labeling.vertex_labels(), &[1, 1, 2]);
    }

    #[test]
    fn complete_weights_and_sums() {
        for n in 3..40 {
            let cert = construct_complete(n).unwrap();
            let nl = n as Label;
            let sums = vertex_sums(&cert.graph, cert.labeling.edge_labels()).unwrap();
            for i in 1..=n {
                let il = i as Label;
                let expected = if 2 * i < n + 2 {
                    nl + il - 2
                } else {
                    nl + il - 3
                };
                assert_eq!(sums[i - 1], expected, "K_{n}, v_{i}");
            }
            let w = weight_profile(&cert.graph, &cert.labeling).unwrap().weights;
            assert_eq!(w, (nl..=2 * nl - 1).collect::<Vec<_>>());
        }
    }

    #[test]
    fn bipartite_four() {
        let cert = construct_complete_bipartite(4).unwrap();
        let sums = vertex_sums(&cert.graph, cert.labeling.edge_labels()).unwrap();
        assert_eq!(sums, vec![4, 6, 8, 10, 4, 6, 8, 10]);
        let mut w = weight_profile(&cert.graph, &cert.labeling).unwrap().weights;
        w.sort_unstable();
        assert_eq!(w, (5..=12).collect::<Vec<_>>());
    }

    #[test]
    fn bipartite_weights() {
        for n in 3..30 {
            let cert = construct_complete_bipartite(n).unwrap();
            let nl = n as Label;
            let mut w = weight_profile(&cert.graph, &cert.labeling).unwrap().weights;
            w.sort_unstable();
            assert_eq!(w, (nl + 1..=3 * nl).collect::<Vec<_>>(), "K_{n},{n}");
        }
    }
}
