use crate::families::{generate, FamilySpec};
use crate::labeling::{vertex_sums, Label};

use super::cycles::SegmentPlan;
use super::fixtures::WHEEL_FIXTURES;
use super::{assign_run, certify, ConstructError, ConstructionCertificate};

/// `D_n` at `s = ⌈n/2⌉ + 1`.
///
/// Outer cycle all 1, inner cycle all `s`; the first `s − 1` rungs get 1 and
/// the other `n + 1 − s` get `s`. Outer sums are 3 or `s + 2`, inner sums
/// `2s + 1` or `3s`, giving weights `[4, n + 3] ∪ [2s + 2, n + 2s + 1]`.
pub fn construct_prism(n: usize) -> Result<ConstructionCertificate, ConstructError> {
    let spec = FamilySpec::Prism(n);
    let (graph, _) = generate(&spec)?;
    let s = n.div_ceil(2) + 1;
    let light_rungs = s - 1;

    let mut edge_labels = vec![1 as Label; n];
    edge_labels.extend(std::iter::repeat_n(s as Label, n));
    edge_labels.extend((0..n).map(|i| if i < light_rungs { 1 } else { s as Label }));

    let outer_light: Vec<usize> = (0..light_rungs).collect();
    let outer_heavy: Vec<usize> = (light_rungs..n).collect();
    let inner_light: Vec<usize> = (n..n + light_rungs).collect();
    let inner_heavy: Vec<usize> = (n + light_rungs..2 * n).collect();

    let mut labels = vec![0; 2 * n];
    assign_run(&mut labels, &outer_light, 1); // [4, s + 2]
    assign_run(&mut labels, &outer_heavy, 1); // [s + 3, n + 3]
    assign_run(&mut labels, &inner_light, 1); // [2s + 2, 3s]
    assign_run(&mut labels, &inner_heavy, 1); // [3s + 1, n + 2s + 1]
    certify(spec, graph, labels, edge_labels, s as Label)
}

/// `W_n` at `s = ⌈(n + 3) / 4⌉`.
///
/// For `n >= 7` the rim is a cycle layout with rim classes
/// `(|U_2|, |U_{s+1}|, |U_{2s}|) = (n + 2 − 3s, 2s − 2, s)`. Spokes to `U_2`
/// get 1, spokes to `U_{2s}` get `s`, and `U_{s+1}` splits evenly by rim
/// index. The center then sees `2s − 1 >= 5` spokes labeled `s`, which lifts
/// its weight above every rim weight. Smaller wheels use stored labelings.
pub fn construct_wheel(n: usize) -> Result<ConstructionCertificate, ConstructError> {
    let spec = FamilySpec::Wheel(n);
    let (graph, _) = generate(&spec)?;
    if let Some(fixture) = WHEEL_FIXTURES.iter().find(|f| f.n == n) {
        return certify(
            spec,
            graph,
            fixture.vertex_labels.to_vec(),
            fixture.edge_labels.to_vec(),
            fixture.s,
        );
    }
    let s = (n + 3).div_ceil(4);
    let plan = SegmentPlan {
        a: n + 3 - 3 * s,
        b: s - 2,
        c: s + 1,
    };
    debug_assert_eq!(plan.edge_count(), n);
    let sl = s as Label;
    let mut edge_labels = plan.edge_labels(sl);

    // rim sums from the rim edges alone (edge i joins rim vertices i, i+1)
    let rim_sum = |v: usize| edge_labels[(v + n - 1) % n] + edge_labels[v];
    let rim_sums: Vec<Label> = (0..n).map(rim_sum).collect();
    let mut mid_seen = 0;
    let mut spokes = Vec::with_capacity(n);
    for &sum in &rim_sums {
        let spoke = if sum == 2 {
            1
        } else if sum == 2 * sl {
            sl
        } else {
            mid_seen += 1;
            if mid_seen < s {
                1
            } else {
                sl
            }
        };
        spokes.push(spoke);
    }
    edge_labels.extend(&spokes);

    let sums = vertex_sums(&graph, &edge_labels)?;
    let class = |target: Label| -> Vec<usize> { (0..n).filter(|&v| sums[v] == target).collect() };
    let mut labels = vec![0; n + 1];
    assign_run(&mut labels, &class(3), 1); // [4, n + 5 − 3s]
    assign_run(&mut labels, &class(sl + 2), 1); // [s + 3, 2s + 1]
    assign_run(&mut labels, &class(2 * sl + 1), 1); // [2s + 2, 3s]
    assign_run(&mut labels, &class(3 * sl), 1); // [3s + 1, 4s]
    labels[n] = 1;
    certify(spec, graph, labels, edge_labels, sl)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::weight_profile;

    fn sorted_weights(cert: &ConstructionCertificate) -> Vec<Label> {
        let mut w = weight_profile(&cert.graph, &cert.labeling).unwrap().weights;
        w.sort_unstable();
        w
    }

    #[test]
    fn prism_three() {
        let cert = construct_prism(3).unwrap();
        assert_eq!(cert.claimed_s, 3);
        assert_eq!(&cert.labeling.edge_labels()[6..], &[1, 1, 3]);
        assert_eq!(sorted_weights(&cert).len(), 6);
    }

    #[test]
    fn prism_four() {
        let cert = construct_prism(4).unwrap();
        assert_eq!(
            cert.distribution_before_vertex_labels.classes(),
            &[(3, 2), (5, 2), (7, 2), (9, 2)]
        );
        assert_eq!(sorted_weights(&cert), (4..=11).collect::<Vec<_>>());
    }

    #[test]
    fn prism_weight_ranges() {
        for n in 3..50 {
            let cert = construct_prism(n).unwrap();
            let s = cert.claimed_s;
            let nl = n as Label;
            let expected: Vec<Label> = (4..=nl + 3).chain(2 * s + 2..=nl + 2 * s + 1).collect();
            assert_eq!(sorted_weights(&cert), expected, "D_{n}");
        }
    }

    #[test]
    fn wheel_seven() {
        let cert = construct_wheel(7).unwrap();
        let s = 3;
        let d = &cert.distribution_before_vertex_labels;
        // rim classes 3, s + 2, 2s + 1, 3s
        assert_eq!(
            [
                d.count_of(3),
                d.count_of(s + 2),
                d.count_of(2 * s + 1),
                d.count_of(3 * s)
            ],
            [0, 2, 2, 3]
        );
        let sums = crate::labeling::vertex_sums(&cert.graph, cert.labeling.edge_labels()).unwrap();
        assert!(sums[7] >= 5 * s);
    }

    #[test]
    fn wheel_rim_weights() {
        for n in 7..60 {
            let cert = construct_wheel(n).unwrap();
            let s = cert.claimed_s;
            let nl = n as Label;
            let w = weight_profile(&cert.graph, &cert.labeling).unwrap().weights;
            let mut rim = w[..n].to_vec();
            rim.sort_unstable();
            let expected: Vec<Label> = (4..=nl + 5 - 3 * s).chain(s + 3..=4 * s).collect();
            assert_eq!(rim, expected, "W_{n}");
            assert!(w[n] > 4 * s);
            let edges = cert.labeling.edge_labels();
            assert_eq!(
                edges[n..].iter().filter(|&&l| l == s).count(),
                2 * s as usize - 1
            );
        }
    }

    #[test]
    fn small_wheels_use_fixtures() {
        for (n, s) in [(3, 2), (4, 2), (5, 2), (6, 3)] {
            let cert = construct_wheel(n).unwrap();
            assert_eq!(cert.claimed_s, s);
            assert!(cert.labeling.max_label_used() <= s);
        }
    }
}
