//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so every line is printed even when an earlier criterion fails.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use relaxcolor::reductions::default_clique_size;
use relaxcolor::verify::{
    all_graphs, check_collapse_ratio_exhaustive, check_cost_limits, check_gadget, check_gadget_repair,
    check_lreduction_gap_exhaustive, check_mis_equivalence, oracle_opt, random_graph, RandomGraphSpec,
    ReductionCertificate, AGREEMENT_SCHEMES,
};
use relaxcolor::{solve_exact, solve_half_approx, solve_r12_structural, ColorScheme, Coloring, CostParams, Graph};

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn scheme(r: usize, k: usize) -> ColorScheme {
    ColorScheme::new(r, k).unwrap()
}

fn sample(rng: &mut ChaCha8Rng, n_range: std::ops::RangeInclusive<usize>, probabilities: &[f64]) -> Graph {
    let spec = RandomGraphSpec {
        n: rng.gen_range(n_range),
        edge_probability: probabilities[rng.gen_range(0..probabilities.len())],
        seed: rng.gen(),
    };
    random_graph(spec).unwrap()
}

fn first_failure(certs: &[ReductionCertificate]) -> String {
    match certs.iter().find(|c| !c.holds) {
        Some(c) => format!("; first failure: {}", serde_json::to_string(c).unwrap()),
        None => String::new(),
    }
}

fn oracle_agreement() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut mismatches = Vec::new();
    let graphs = 600;
    for _ in 0..graphs {
        // p = 1/2 samples labelled graphs on n vertices uniformly
        let g = sample(&mut rng, 1..=6, &[0.5]);
        for (r, k) in AGREEMENT_SCHEMES {
            let s = scheme(r, k);
            let exact = solve_exact(&g, s).unwrap().value();
            let oracle = oracle_opt(&g, s).unwrap();
            if exact != oracle {
                mismatches.push(format!("{:?} {s}: {exact:?} vs {oracle:?}", g.edges()));
            }
        }
        let structural = solve_r12_structural(&g).unwrap().value;
        if Some(structural) != oracle_opt(&g, scheme(1, 2)).unwrap() {
            mismatches.push(format!("{:?} structural {structural}", g.edges()));
        }
    }
    outcome(
        mismatches.is_empty(),
        format!(
            "{graphs} graphs x {} schemes, {} mismatches {:?}",
            AGREEMENT_SCHEMES.len(),
            mismatches.len(),
            mismatches.first()
        ),
    )
}

fn half_approximation() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let (mut below_half, mut below_opt, mut small) = (0, 0, 0);
    for _ in 0..1000 {
        let g = sample(&mut rng, 1..=30, &[0.2, 0.5, 0.8]);
        let s = [scheme(2, 2), scheme(2, 3), scheme(3, 3)][rng.gen_range(0..3)];
        let half = solve_half_approx(&g, s).unwrap();
        let m = g.edge_count() as u64;
        if half.value < m.div_ceil(2) {
            below_half += 1;
        }
        if g.vertex_count() <= 7 {
            small += 1;
            if 2 * half.value < oracle_opt(&g, s).unwrap().unwrap() {
                below_opt += 1;
            }
        }
    }
    outcome(
        below_half == 0 && below_opt == 0,
        format!("1000 graphs: {below_half} below ceil(m/2); {small} with n <= 7, {below_opt} below opt/2"),
    )
}

fn mis_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut graphs: Vec<Graph> = (1..=4).flat_map(all_graphs).collect();
    let exhaustive = graphs.len();
    graphs.extend((0..300).map(|_| sample(&mut rng, 1..=6, &[0.2, 0.5, 0.8])));
    let certs: Vec<_> = graphs
        .iter()
        .map(|g| check_mis_equivalence(g, default_clique_size(g.vertex_count())).unwrap())
        .collect();
    let thresholds: u64 = certs.iter().map(|c| c.count("thresholds")).sum();
    let cross: u64 = certs.iter().map(|c| c.count("enumeration_cross_checks")).sum();
    let failed = certs.iter().filter(|c| !c.holds).count();
    outcome(
        failed == 0,
        format!(
            "{exhaustive} exhaustive + 300 random graphs, {thresholds} thresholds, {cross} enumeration cross-checks, {failed} counterexamples{}",
            first_failure(&certs)
        ),
    )
}

fn collapse_ratio() -> Outcome {
    let certs: Vec<_> = (1..=5)
        .flat_map(all_graphs)
        .map(|g| check_collapse_ratio_exhaustive(&g, 3).unwrap())
        .collect();
    let colorings: u64 = certs.iter().map(|c| c.count("colorings")).sum();
    let worst = certs.iter().filter_map(|c| c.measured_alpha).fold(0.0, f64::max);
    let failed = certs.iter().filter(|c| !c.holds).count();
    outcome(
        failed == 0 && worst <= 2.0,
        format!(
            "{} graphs, {colorings} feasible (1,3) colorings, worst ratio {worst} (bound 2), {failed} violations{}",
            certs.len(),
            first_failure(&certs)
        ),
    )
}

fn gadget_properties() -> Outcome {
    let certs: Vec<_> = (2..=5).map(|k| check_gadget(k).unwrap()).collect();
    let counts: Vec<_> = certs.iter().map(|c| c.count("conflict_free")).collect();
    outcome(
        certs.iter().all(|c| c.holds),
        format!("k = 2..5, conflict-free colorings {counts:?}{}", first_failure(&certs)),
    )
}

fn lreduction_gap() -> Outcome {
    let mut certs = Vec::new();
    for g in (1..=4).flat_map(all_graphs) {
        for k in [3, 4] {
            for r in 2..=k {
                certs.push(check_lreduction_gap_exhaustive(&g, k, r).unwrap());
            }
        }
    }
    let total = |key: &str| certs.iter().map(|c| c.count(key)).sum::<u64>();
    let failed = certs.iter().filter(|c| !c.holds).count();
    outcome(
        failed == 0,
        format!(
            "{} instances, {} distinct-clique colorings, {} repeated-clique colorings, {} flagged, {failed} violations{}",
            certs.len(),
            total("distinct_clique_colors"),
            total("repeated_clique_color"),
            total("flagged_outside_conflicts"),
            first_failure(&certs)
        ),
    )
}

fn gadget_repair() -> Outcome {
    let mut certs = Vec::new();
    let mut seed = 0;
    for g in (1..=3).flat_map(all_graphs) {
        for r in [2, 3] {
            seed += 1;
            certs.push(check_gadget_repair(&g, 3, r, 50, seed).unwrap());
        }
    }
    let colorings: u64 = certs.iter().map(|c| c.count("colorings")).sum();
    let failed = certs.iter().filter(|c| !c.holds).count();
    outcome(
        failed == 0 && colorings >= 1000,
        format!(
            "{colorings} colorings over {} instances, {failed} violations{}",
            certs.len(),
            first_failure(&certs)
        ),
    )
}

fn cost_correspondences() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut certs = Vec::new();
    let total = |certs: &[ReductionCertificate], key: &str| certs.iter().map(|c| c.count(key)).sum::<u64>();
    while total(&certs, "linear_cases") < 1000
        || total(&certs, "large_p_pairs") < 500
        || total(&certs, "small_p_pairs") < 500
    {
        let g = sample(&mut rng, 4..=10, &[0.3, 0.5, 0.8]);
        certs.push(check_cost_limits(&g, 50, rng.gen()).unwrap());
    }

    // the hand-built K4 pairs: max kappa 1 vs 3, and 1 vs 3 conflicted vertices
    let k4 = Graph::complete(4);
    let cost = |c: &[usize], p: f64| {
        relaxcolor::generalized_cost(&k4, &Coloring::new(c.to_vec()), CostParams::new(p).unwrap()).unwrap()
    };
    let p_large = 4f64.ln() / 3f64.ln() + 1.0;
    let built_large = cost(&[0, 0, 1, 2], p_large) < cost(&[0, 0, 0, 1], p_large);
    let path = Graph::path(4);
    let pcost = |c: &[usize], p: f64| {
        relaxcolor::generalized_cost(&path, &Coloring::new(c.to_vec()), CostParams::new(p).unwrap()).unwrap()
    };
    // [0,0,1,1]: 4 conflicted vertices, kappa 1 each; [0,0,0,1]: 3 conflicted
    let built_small = pcost(&[0, 0, 0, 1], 0.5 * (4f64 / 3.0).ln() / 2f64.ln())
        < pcost(&[0, 0, 1, 1], 0.5 * (4f64 / 3.0).ln() / 2f64.ln());

    let failed = certs.iter().filter(|c| !c.holds).count();
    outcome(
        failed == 0 && built_large && built_small,
        format!(
            "{} p = 1 colorings, {} large-p pairs, {} small-p pairs, {} relabelings, {failed} violations{}",
            total(&certs, "linear_cases"),
            total(&certs, "large_p_pairs"),
            total(&certs, "small_p_pairs"),
            total(&certs, "relabel_cases"),
            first_failure(&certs)
        ),
    )
}

fn run_twice(dir: &Path, args: &[&str], files: &[&str]) -> Result<(), String> {
    let bin = env!("CARGO_BIN_EXE_relaxcolor");
    let mut runs = Vec::new();
    for _ in 0..2 {
        let out = Command::new(bin)
            .args(args)
            .current_dir(dir)
            .output()
            .map_err(|e| e.to_string())?;
        if !out.status.success() {
            return Err(format!(
                "{args:?} exited with {}: {}",
                out.status,
                String::from_utf8_lossy(&out.stderr)
            ));
        }
        let contents: Vec<Vec<u8>> = files
            .iter()
            .map(|f| std::fs::read(dir.join(f)).unwrap_or_default())
            .collect();
        runs.push((out.stdout, contents));
    }
    if runs[0] != runs[1] {
        return Err(format!("{args:?} produced different output"));
    }
    Ok(())
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let cases: Vec<(Vec<&str>, Vec<&str>)> = vec![
        (
            vec![
                "gen",
                "--n",
                "9",
                "--edge-probability",
                "0.4",
                "--seed",
                "5",
                "--k",
                "3",
                "--r",
                "2",
                "--out",
                "g.txt",
            ],
            vec!["g.txt"],
        ),
        (
            vec![
                "solve",
                "g.txt",
                "--method",
                "exact",
                "--c",
                "10",
                "--coloring-out",
                "exact.col",
            ],
            vec!["exact.col"],
        ),
        (
            vec!["solve", "g.txt", "--method", "greedy", "--coloring-out", "greedy.col"],
            vec!["greedy.col"],
        ),
        (
            vec!["solve", "g.txt", "--method", "half", "--coloring-out", "half.col"],
            vec!["half.col"],
        ),
        (
            vec![
                "solve",
                "g.txt",
                "--method",
                "local",
                "--seed",
                "11",
                "--coloring-out",
                "local.col",
            ],
            vec!["local.col"],
        ),
        (
            vec![
                "solve",
                "g.txt",
                "--method",
                "local",
                "--objective",
                "generalized",
                "--p",
                "0.5,2",
                "--seed",
                "3",
                "--coloring-out",
                "gen.col",
            ],
            vec!["gen.col"],
        ),
        (
            vec![
                "solve",
                "g.txt",
                "--method",
                "local",
                "--objective",
                "defective",
                "--seed",
                "3",
                "--coloring-out",
                "def.col",
            ],
            vec!["def.col"],
        ),
        (vec!["eval", "g.txt", "local.col", "--p", "0.5,1,3"], vec![]),
        (
            vec!["gen", "--n", "4", "--seed", "6", "--out", "small.txt"],
            vec!["small.txt"],
        ),
        (
            vec![
                "reduce",
                "small.txt",
                "--reduction",
                "clique-augment",
                "--out",
                "aug.txt",
            ],
            vec!["aug.txt", "aug.txt.json"],
        ),
        (
            vec![
                "reduce",
                "g.txt",
                "--reduction",
                "lred-multigraph",
                "--k",
                "4",
                "--out",
                "lm.txt",
            ],
            vec!["lm.txt", "lm.txt.json"],
        ),
        (
            vec![
                "reduce",
                "g.txt",
                "--reduction",
                "lred-expand",
                "--k",
                "3",
                "--out",
                "ex.txt",
            ],
            vec!["ex.txt", "ex.txt.json"],
        ),
        (
            vec![
                "solve",
                "aug.txt",
                "--method",
                "structural12",
                "--coloring-out",
                "aug.col",
            ],
            vec!["aug.col"],
        ),
        (
            vec![
                "verify", "--suite", "all", "--seed", "4", "--graphs", "3", "--trials", "40", "--max-n", "4",
            ],
            vec![],
        ),
    ];
    for (args, files) in &cases {
        if let Err(e) = run_twice(dir.path(), args, files) {
            return outcome(false, e);
        }
    }
    outcome(
        true,
        format!("{} commands rerun with byte-identical output", cases.len()),
    )
}

type Criterion = (&'static str, Duration, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 oracle agreement", Duration::from_secs(60), oracle_agreement),
        ("2 half approximation", Duration::from_secs(30), half_approximation),
        ("3 independent set equivalence", Duration::MAX, mis_equivalence),
        ("4 collapse ratio", Duration::MAX, collapse_ratio),
        ("5 gadget properties", Duration::from_secs(10), gadget_properties),
        ("6 reduction gap", Duration::from_secs(120), lreduction_gap),
        ("7 gadget repair", Duration::MAX, gadget_repair),
        ("8 cost correspondences", Duration::MAX, cost_correspondences),
        ("9 determinism", Duration::MAX, determinism),
    ];
    let mut failed = 0;
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let ok = result.ok && elapsed <= limit;
        failed += usize::from(!ok);
        let budget = if limit == Duration::MAX {
            String::new()
        } else {
            format!(" of {}s", limit.as_secs())
        };
        println!(
            "{} criterion {name}: {} [{:.2}s{budget}]",
            if ok { "PASS" } else { "FAIL" },
            result.detail,
            elapsed.as_secs_f64()
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
