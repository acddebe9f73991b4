//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use tvs_core::bounds::{baca_bound, degree_count_bound};
use tvs_core::constructors::{
    construct_with, greedy_vertex_completion, tvs_formula, ConstructionCertificate, Verification,
    HELM_FIXTURES, WHEEL_FIXTURES,
};
use tvs_core::families::{cycle_partitions, generate, FamilySpec};
use tvs_core::graph::Graph;
use tvs_core::labeling::{verify, weight_profile, Label, TotalLabeling};
use tvs_core::oracle::{exact_tvs, SearchBudget};

/// Every comparison below is on integers and must match exactly.
const TOLERANCE: Label = 0;
const SEED: u64 = 0x7e57_ab1e;
const RANDOM_TWO_REGULAR: usize = 30;
const RANDOM_TRIALS: usize = 200;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

#[allow(clippy::absurd_extreme_comparisons)]
fn within(a: Label, b: Label) -> bool {
    a.abs_diff(b) <= TOLERANCE
}

fn build(spec: &FamilySpec) -> Result<ConstructionCertificate, String> {
    construct_with(spec, Verification::Skip).map_err(|e| format!("{spec}: {e}"))
}

/// Irregular, and largest label = formula = counting bound.
fn check_instance(spec: &FamilySpec) -> Result<(), String> {
    let cert = build(spec)?;
    let report = verify(&cert.graph, &cert.labeling).map_err(|e| e.to_string())?;
    let formula = tvs_formula(spec);
    let bound = degree_count_bound(&cert.graph)
        .map_err(|e| e.to_string())?
        .0;
    if !report.is_irregular {
        return Err(format!(
            "{spec}: duplicate weights at {:?}",
            report.duplicate_weight_witness
        ));
    }
    if !within(report.max_label_used, formula) || !within(bound, formula) {
        return Err(format!(
            "{spec}: max label {}, formula {formula}, bound {bound}",
            report.max_label_used
        ));
    }
    Ok(())
}

fn family_ranges() -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    specs.extend((3..=60).map(FamilySpec::Cycle));
    specs.extend((2..=60).map(FamilySpec::Path));
    specs.extend((3..=40).map(FamilySpec::Prism));
    specs.extend((3..=40).map(FamilySpec::Wheel));
    specs.extend((3..=40).map(FamilySpec::Helm));
    specs.extend((1..=40).map(FamilySpec::Friendship));
    specs.extend((3..=30).map(FamilySpec::Complete));
    specs.extend((3..=20).map(FamilySpec::CompleteBipartiteNN));
    specs
}

fn random_cycle_lengths(rng: &mut StdRng, max_total: usize) -> Vec<usize> {
    let total = rng.gen_range(3..=max_total);
    let mut left = total;
    let mut lengths = Vec::new();
    while left > 0 {
        // keep any remainder at 0 or >= 3
        let options: Vec<usize> = (3..=left)
            .filter(|&p| left - p == 0 || left - p >= 3)
            .collect();
        let part = options[rng.gen_range(0..options.len())];
        lengths.push(part);
        left -= part;
    }
    lengths
}

fn construction_sweep() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED);
    let mut specs = family_ranges();
    specs.extend(
        (0..RANDOM_TWO_REGULAR).map(|_| FamilySpec::TwoRegular(random_cycle_lengths(&mut rng, 60))),
    );
    for spec in &specs {
        check_instance(spec)?;
    }
    Ok(format!("{} instances", specs.len()))
}

fn oracle_equivalence() -> Outcome {
    let mut specs = Vec::new();
    specs.extend((3..=8).map(FamilySpec::Cycle));
    specs.extend((2..=8).map(FamilySpec::Path));
    specs.push(FamilySpec::Prism(3));
    specs.extend((3..=7).map(FamilySpec::Wheel));
    specs.push(FamilySpec::Helm(3));
    specs.extend((1..=3).map(FamilySpec::Friendship));
    specs.extend((3..=5).map(FamilySpec::Complete));
    specs.push(FamilySpec::CompleteBipartiteNN(3));
    specs.extend(
        (6..=8)
            .flat_map(|n| cycle_partitions(n, usize::MAX))
            .map(FamilySpec::TwoRegular),
    );
    let mut nodes = 0;
    for spec in &specs {
        let (g, _) = generate(spec).map_err(|e| e.to_string())?;
        let result = exact_tvs(&g, &SearchBudget::default_for(&g)).map_err(|e| e.to_string())?;
        nodes += result.nodes;
        match result.exact_k() {
            Some(k) if within(k, tvs_formula(spec)) => {}
            other => {
                return Err(format!(
                    "{spec}: oracle {other:?}, formula {}",
                    tvs_formula(spec)
                ));
            }
        }
    }
    Ok(format!("{} instances, {nodes} search nodes", specs.len()))
}

fn spot_checks() -> Outcome {
    let mut cases = vec![(FamilySpec::Cycle(3), 2)];
    cases.extend((3..=30).map(|n| (FamilySpec::Complete(n), 2)));
    cases.extend((3..=20).map(|n| (FamilySpec::CompleteBipartiteNN(n), 3)));
    cases.extend((3..=40).map(|n| (FamilySpec::Prism(n), n.div_ceil(2) as Label + 1)));
    for (spec, expected) in &cases {
        let cert = build(spec)?;
        let used = verify(&cert.graph, &cert.labeling).map_err(|e| e.to_string())?;
        let bound = degree_count_bound(&cert.graph)
            .map_err(|e| e.to_string())?
            .0;
        if !used.is_irregular
            || !within(used.max_label_used, *expected)
            || !within(bound, *expected)
        {
            return Err(format!(
                "{spec}: expected {expected}, constructed {}, bound {bound}",
                used.max_label_used
            ));
        }
    }
    Ok(format!("{} values", cases.len()))
}

fn weight_intervals() -> Outcome {
    let mut cases: Vec<(FamilySpec, Label, Label)> = Vec::new();
    for n in 3..=60usize {
        let nl = n as Label;
        cases.push((FamilySpec::Cycle(n), 3, nl + 2));
    }
    for n in 2..=60usize {
        cases.push((FamilySpec::Path(n), 2, n as Label + 1));
    }
    for n in 3..=30usize {
        let nl = n as Label;
        cases.push((FamilySpec::Complete(n), nl, 2 * nl - 1));
    }
    for n in 3..=20usize {
        let nl = n as Label;
        cases.push((FamilySpec::CompleteBipartiteNN(n), nl + 1, 3 * nl));
    }
    for (spec, lo, hi) in &cases {
        let cert = build(spec)?;
        let mut weights = weight_profile(&cert.graph, &cert.labeling)
            .map_err(|e| e.to_string())?
            .weights;
        weights.sort_unstable();
        let expected: Vec<Label> = (*lo..=*hi).collect();
        let matches = weights.len() == expected.len()
            && weights.iter().zip(&expected).all(|(&w, &e)| within(w, e));
        if !matches {
            return Err(format!(
                "{spec}: weights {weights:?}, expected [{lo}, {hi}]"
            ));
        }
    }
    Ok(format!("{} instances", cases.len()))
}

/// A random simple graph on `n` vertices with minimum degree at least 1.
fn random_graph(rng: &mut StdRng, n: usize) -> Graph {
    let density = rng.gen_range(0.2..0.9);
    let mut edges = Vec::new();
    let mut degree = vec![0; n];
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                edges.push((u, v));
                degree[u] += 1;
                degree[v] += 1;
            }
        }
    }
    for u in 0..n {
        if degree[u] == 0 {
            let mut v = rng.gen_range(0..n - 1);
            if v >= u {
                v += 1;
            }
            edges.push((u.min(v), u.max(v)));
            degree[u] += 1;
            degree[v] += 1;
        }
    }
    Graph::new(n, edges).expect("generated graph is simple")
}

/// Whether some vertex labels in `1..=s` make the weights distinct.
fn exhaustive_completion(g: &Graph, edge_labels: &[Label], s: Label) -> bool {
    let n = g.vertex_count();
    let mut labels = vec![1; n];
    loop {
        let lab = TotalLabeling::new(labels.clone(), edge_labels.to_vec(), s.max(1))
            .expect("labels in range");
        if verify(g, &lab).expect("shapes agree").is_irregular {
            return true;
        }
        let mut i = 0;
        while i < n && labels[i] == s {
            labels[i] = 1;
            i += 1;
        }
        if i == n {
            return false;
        }
        labels[i] += 1;
    }
}

fn greedy_dominance() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED + 1);
    let mut feasible = 0;
    for trial in 0..RANDOM_TRIALS {
        let n = rng.gen_range(2..=8);
        let g = random_graph(&mut rng, n);
        let s: Label = rng.gen_range(2..=4);
        let edge_labels: Vec<Label> = (0..g.edge_count())
            .map(|_| if rng.gen_bool(0.5) { 1 } else { s })
            .collect();
        let greedy = greedy_vertex_completion(&g, &edge_labels, s)
            .map_err(|e| e.to_string())?
            .is_some();
        let exhaustive = exhaustive_completion(&g, &edge_labels, s);
        if greedy != exhaustive {
            return Err(format!(
                "trial {trial}: greedy {greedy}, exhaustive {exhaustive}, edges {:?}, labels {edge_labels:?}",
                g.edges()
            ));
        }
        feasible += usize::from(greedy);
    }
    Ok(format!("{RANDOM_TRIALS} labelings, {feasible} completable"))
}

fn bound_soundness() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED + 2);
    for trial in 0..RANDOM_TRIALS {
        let n = rng.gen_range(2..=8);
        let g = random_graph(&mut rng, n);
        let baca = baca_bound(&g).map_err(|e| e.to_string())?;
        let count = degree_count_bound(&g).map_err(|e| e.to_string())?.0;
        let result = exact_tvs(&g, &SearchBudget::default_for(&g)).map_err(|e| e.to_string())?;
        let Some(k) = result.exact_k() else {
            return Err(format!(
                "trial {trial}: oracle gave {:?} on {:?}",
                result.status,
                g.edges()
            ));
        };
        if !(k >= count && count >= baca) {
            return Err(format!(
                "trial {trial}: exact {k}, counting {count}, classical {baca}"
            ));
        }
    }
    Ok(format!("{RANDOM_TRIALS} graphs"))
}

fn two_regular_partitions() -> Outcome {
    let mut total = 0;
    for n in 6..=30usize {
        let s = (n + 2).div_ceil(3) as Label;
        for lengths in cycle_partitions(n, 4) {
            let spec = FamilySpec::TwoRegular(lengths);
            let cert = build(&spec)?;
            let report = verify(&cert.graph, &cert.labeling).map_err(|e| e.to_string())?;
            if !report.is_irregular || !within(report.max_label_used, s) {
                return Err(format!("{spec}: {report:?}"));
            }
            total += 1;
        }
    }
    Ok(format!("{total} partitions"))
}

fn fixture_regeneration() -> Outcome {
    let cases = WHEEL_FIXTURES
        .iter()
        .map(|f| (FamilySpec::Wheel(f.n), f))
        .chain(HELM_FIXTURES.iter().map(|f| (FamilySpec::Helm(f.n), f)));
    let expected: [Label; 6] = [2, 2, 2, 3, 2, 3];
    let mut seen = Vec::new();
    for ((spec, fixture), want) in cases.zip(expected) {
        let (g, _) = generate(&spec).map_err(|e| e.to_string())?;
        let lab = TotalLabeling::new(
            fixture.vertex_labels.to_vec(),
            fixture.edge_labels.to_vec(),
            fixture.s,
        )
        .map_err(|e| e.to_string())?;
        if !verify(&g, &lab).map_err(|e| e.to_string())?.is_irregular {
            return Err(format!("{spec}: stored labeling is not irregular"));
        }
        let oracle = exact_tvs(&g, &SearchBudget::default_for(&g))
            .map_err(|e| e.to_string())?
            .exact_k();
        let formula = tvs_formula(&spec);
        if !within(fixture.s, want) || !within(formula, want) || oracle != Some(want) {
            return Err(format!(
                "{spec}: stored {}, formula {formula}, oracle {oracle:?}, expected {want}",
                fixture.s
            ));
        }
        seen.push(format!("{spec}={}", fixture.s));
    }
    Ok(seen.join(" "))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("construction matches formula and bound", construction_sweep),
        ("oracle equals formula up to 8 vertices", oracle_equivalence),
        ("published values", spot_checks),
        ("weight intervals", weight_intervals),
        ("greedy completion is exact", greedy_dominance),
        ("lower bounds are sound", bound_soundness),
        (
            "two-regular partitions with at most 4 cycles",
            two_regular_partitions,
        ),
        ("stored fixtures", fixture_regeneration),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail} ({elapsed:.2}s)", i + 1),
            Err(detail) => {
                failures += 1;
                println!("FAIL {} {name}: {detail} ({elapsed:.2}s)", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
