//! Acceptance suite: one test per criterion, each printing a PASS line
//! (visible with `-- --nocapture`). Criteria with stated runtime budgets
//! assert against them; measured times are orders of magnitude below.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use fracton_codes::diagnostics::{
    confinement_scan, default_sparsities, ensemble_confinement_scan, isolability_check,
    linear_slope, log_log_slope, mean_k_by_size, rank_deficiency_scan, EnsembleSpec, SamplingMode,
};
use fracton_codes::gf2::{BitMatrix, Distance, SearchBudget};
use fracton_codes::graphs::{configuration_model_bipartite, BipartiteDegreeSpec, Graph};
use fracton_codes::products::{
    checkerboard_code, color_code_lp, haah_code, hgp, predicted_hgp_params,
    sierpinski_prism_code, xcube_code, CssCode,
};
use fracton_codes::registry::SeedRegistry;
use fracton_codes::seeds::{
    ising_code, laplacian_code, pinwheel_code, repetition_code, ClassicalCode, CodeMetadata,
    Topology, frustrated_laplacian,
};
use fracton_codes::tiling::TilingGraph;
use fracton_codes_cli::commands::figures::checkerboard_window_error;

use rand::SeedableRng;
use rand_xoshiro::Xoshiro256StarStar;

fn pass(criterion: u32, label: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    assert!(
        elapsed < budget,
        "criterion {criterion} exceeded its runtime budget: {elapsed:?} >= {budget:?}"
    );
    println!("[acceptance] criterion {criterion:2} ({label}): PASS in {elapsed:.2?}");
}

fn rep(n: usize) -> ClassicalCode {
    repetition_code(n, Topology::Cyclic).unwrap()
}

#[test]
fn criterion_01_toric_code_exactness() {
    let started = Instant::now();
    for n in [3usize, 4, 5] {
        let code = hgp(&rep(n), &rep(n)).unwrap();
        assert_eq!(code.n_q(), 2 * n * n, "n_q at n={n}");
        assert_eq!(code.k_q(), 2, "k_q at n={n}");
        let d = code.distance(&SearchBudget::default());
        assert!(d.exact, "distance must be exact at n={n}");
        assert_eq!(d.distance, Distance::Finite(n), "d_q at n={n}");
        let predicted = predicted_hgp_params(&rep(n), &rep(n), &SearchBudget::default());
        assert_eq!(predicted.n_q, code.n_q());
        assert_eq!(predicted.k_q, code.k_q());
        assert_eq!(predicted.d_q, d.distance);
    }
    pass(1, "toric exactness", started, Duration::from_secs(10));
}

#[test]
fn criterion_02_parameter_identities_on_random_pairs() {
    let started = Instant::now();
    let mut rng = Xoshiro256StarStar::seed_from_u64(20240817);
    for trial in 0..50 {
        let dims = |r: &mut Xoshiro256StarStar| {
            use rand::Rng;
            (r.gen_range(1..=12), r.gen_range(2..=12))
        };
        let (m1, n1) = dims(&mut rng);
        let (m2, n2) = dims(&mut rng);
        let c1 = ClassicalCode::from_matrix(
            BitMatrix::random_with_density(m1, n1, 0.4, &mut rng),
            CodeMetadata::adhoc("random"),
        );
        let c2 = ClassicalCode::from_matrix(
            BitMatrix::random_with_density(m2, n2, 0.4, &mut rng),
            CodeMetadata::adhoc("random"),
        );
        let code = hgp(&c1, &c2).unwrap();
        assert_eq!(code.n_q(), c1.n() * c2.n() + c1.m() * c2.m(), "trial {trial}");
        assert_eq!(
            code.k_q(),
            c1.k() * c2.k() + c1.k_transpose() * c2.k_transpose(),
            "trial {trial}"
        );
        assert_eq!(code.k_x_transpose(), c1.k_transpose() * c2.k(), "trial {trial}");
        assert_eq!(code.k_z_transpose(), c1.k() * c2.k_transpose(), "trial {trial}");
    }
    pass(2, "parameter identity suite", started, Duration::from_secs(60));
}

#[test]
fn criterion_03_css_commutation_everywhere() {
    let started = Instant::now();
    let mut rng = Xoshiro256StarStar::seed_from_u64(5);
    let check = |code: &CssCode, label: &str| {
        assert!(
            code.h_x().matmul(&code.h_z().transpose()).is_zero(),
            "commutation failed for {label}"
        );
    };
    for n in [3usize, 4, 5] {
        check(&hgp(&rep(n), &rep(n)).unwrap(), "toric");
    }
    for _ in 0..10 {
        let c1 = ClassicalCode::from_matrix(
            BitMatrix::random_with_density(3, 5, 0.4, &mut rng),
            CodeMetadata::adhoc("random"),
        );
        let c2 = ClassicalCode::from_matrix(
            BitMatrix::random_with_density(4, 6, 0.4, &mut rng),
            CodeMetadata::adhoc("random"),
        );
        check(&hgp(&c1, &c2).unwrap(), "random hgp");
    }
    for l in [2usize, 3] {
        check(&haah_code(l).unwrap(), "haah");
        check(&checkerboard_code(l).unwrap(), "checkerboard");
        check(&sierpinski_prism_code(l).unwrap(), "sierpinski-prism");
        check(&color_code_lp(l).unwrap(), "color-code");
        check(&xcube_code(l).unwrap(), "xcube");
    }
    pass(3, "CSS commutation", started, Duration::from_secs(60));
}

/// Decode a Prufer sequence into a labeled tree.
fn tree_from_prufer(sequence: &[usize], n: usize) -> Graph {
    let mut degree = vec![1usize; n];
    for &v in sequence {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    let mut seq = sequence.to_vec();
    for _ in 0..sequence.len() {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        let v = seq.remove(0);
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let remaining: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    if remaining.len() == 2 {
        edges.push((remaining[0], remaining[1]));
    }
    Graph::from_edges(n, edges)
}

#[test]
fn criterion_04_laplacian_rank_facts() {
    let started = Instant::now();
    assert_eq!(laplacian_code(&Graph::cycle(4)).unwrap().k(), 2);
    assert_eq!(laplacian_code(&Graph::cycle(5)).unwrap().k(), 1);
    assert_eq!(laplacian_code(&Graph::complete(4)).unwrap().k(), 3);
    assert_eq!(laplacian_code(&Graph::complete(5)).unwrap().k(), 1);
    // every labeled tree on up to 8 vertices, via Prufer enumeration
    let mut trees_checked = 0usize;
    for n in 1..=8usize {
        if n <= 2 {
            let g = if n == 1 { Graph::new(1) } else { Graph::path(2) };
            assert_eq!(laplacian_code(&g).unwrap().k(), 1);
            trees_checked += 1;
            continue;
        }
        let len = n - 2;
        let total = n.pow(len as u32);
        for idx in 0..total {
            let mut sequence = Vec::with_capacity(len);
            let mut rest = idx;
            for _ in 0..len {
                sequence.push(rest % n);
                rest /= n;
            }
            let tree = tree_from_prufer(&sequence, n);
            assert_eq!(tree.edge_count(), n - 1);
            assert_eq!(laplacian_code(&tree).unwrap().k(), 1, "tree {sequence:?}");
            trees_checked += 1;
        }
    }
    assert_eq!(trees_checked, 1 + 1 + 3 + 16 + 125 + 1296 + 16807 + 262144);
    pass(4, "Laplacian rank facts", started, Duration::from_secs(300));
}

#[test]
fn criterion_05_rank_deficiency_scaling() {
    let started = Instant::now();
    let registry = SeedRegistry::with_builtins();
    let sizes = [100usize, 200, 300, 400, 500];
    let trials = 200;

    let ldpc = rank_deficiency_scan(
        &registry,
        &EnsembleSpec::new("typical-ldpc"),
        &sizes,
        trials,
        7,
    )
    .unwrap();
    for r in &ldpc {
        assert!(r.k >= r.n / 4, "imbalance floor violated: k={} n={}", r.k, r.n);
    }
    let ldpc_means = mean_k_by_size(&ldpc);
    let ldpc_points: Vec<(f64, f64)> =
        ldpc_means.iter().map(|&(n, k)| (n as f64, k)).collect();
    let exponent = log_log_slope(&ldpc_points);
    assert!(exponent >= 0.9, "LDPC k-vs-n exponent {exponent} below 0.9");

    let laplacian = rank_deficiency_scan(
        &registry,
        &EnsembleSpec::new("laplacian"),
        &sizes,
        trials,
        7,
    )
    .unwrap();
    let lap_means = mean_k_by_size(&laplacian);
    for &(n, mean_k) in &lap_means {
        assert!(mean_k <= 4.0, "laplacian mean k at n={n} is {mean_k}");
    }
    let lap_points: Vec<(f64, f64)> = lap_means.iter().map(|&(n, k)| (n as f64, k)).collect();
    let slope = linear_slope(&lap_points);
    assert!(
        slope < 0.002,
        "laplacian mean k slope {slope} suggests an increasing trend"
    );
    pass(5, "rank-deficiency scaling", started, Duration::from_secs(600));
}

#[test]
fn criterion_06_confinement_curves_nondecreasing() {
    let started = Instant::now();
    let registry = SeedRegistry::with_builtins();
    for name in ["typical-ldpc", "laplacian"] {
        // the ensemble curve: 100 members x 10 samples = 10^3 trials/point
        let curve = ensemble_confinement_scan(
            &registry,
            &EnsembleSpec::new(name),
            300,
            &default_sparsities(),
            100,
            10,
            7,
        )
        .unwrap();
        let pairs = curve.non_monotone_pairs();
        assert!(
            pairs <= 1,
            "{name}: {pairs} non-monotone adjacent pairs (allowed 1)"
        );
    }
    pass(6, "confinement monotonicity", started, Duration::from_secs(900));
}

#[test]
fn criterion_07_square_lattice_non_confinement() {
    let started = Instant::now();
    let code = laplacian_code(&Graph::torus_grid(20, 20)).unwrap();
    // rotated-frame checkerboard rectangles of growing size: always 4
    for half_extent in [2usize, 4, 6, 8] {
        let error = checkerboard_window_error(20, (10, 10), half_extent, half_extent);
        assert!(error.weight() >= 8 || half_extent == 2);
        let syndrome = code.matrix().mul_vector(&error).weight();
        assert_eq!(syndrome, 4, "window half-extent {half_extent}");
    }
    // and the biased sampler finds the plateau on its own
    let curve = confinement_scan(&code, &default_sparsities(), 400, SamplingMode::Biased, 5)
        .unwrap();
    let mut large_rows = 0;
    for row in &curve.rows {
        if row.trials > 0 && row.target_weight >= 8 {
            large_rows += 1;
            assert_eq!(
                row.min_syndrome_weight,
                Some(4),
                "weight-{} bucket has min syndrome {:?}",
                row.target_weight,
                row.min_syndrome_weight
            );
        }
    }
    assert!(large_rows >= 2, "sampler reached only {large_rows} large buckets");
    pass(7, "square-lattice witness", started, Duration::from_secs(300));
}

#[test]
fn criterion_08_pinwheel_scaling() {
    let started = Instant::now();
    let mut points = Vec::new();
    let mut distances = Vec::new();
    for generation in [3usize, 4, 5] {
        let build = pinwheel_code(generation, 7).unwrap();
        points.push((build.code.n() as f64, build.code.k() as f64));
        if generation <= 4 {
            let d = build.code.distance(&SearchBudget {
                exhaustive_limit: 28,
                search_rounds: 200,
                seed: 1,
            });
            assert!(d.exact, "distance at generation {generation} must be exact");
            distances.push(d.distance.finite().unwrap());
        }
    }
    let exponent = log_log_slope(&points);
    assert!(
        (0.35..=0.65).contains(&exponent),
        "k exponent {exponent} outside 0.5 +/- 0.15"
    );
    let ratio = distances[1] as f64 / distances[0] as f64;
    assert!(ratio >= 3.0, "d({}) / d({}) = {ratio} below 3", distances[1], distances[0]);
    pass(8, "pinwheel scaling", started, Duration::from_secs(1800));
}

#[test]
fn criterion_09_pinwheel_frustration() {
    let started = Instant::now();
    for generation in 2..=5usize {
        let tiling = TilingGraph::generate(generation).unwrap();
        let h = frustrated_laplacian(&tiling);
        let ones = fracton_codes::gf2::BitVector::ones(tiling.vertex_count());
        assert_eq!(h.mul_vector(&ones), ones, "generation {generation}");
    }
    pass(9, "pinwheel frustration", started, Duration::from_secs(120));
}

#[test]
fn criterion_10_named_model_counts() {
    let started = Instant::now();
    // k values recorded from the rank computation on first build
    let haah_k = [(2usize, 6usize), (3, 2)];
    let xcube_k = [(2usize, 9usize), (3, 15)];
    for (l, expected_k) in haah_k {
        let code = haah_code(l).unwrap();
        assert_eq!(code.n_q(), 2 * l.pow(3), "haah n_q at L={l}");
        assert_eq!(code.k_q(), expected_k, "haah k_q at L={l}");
    }
    for (l, expected_k) in xcube_k {
        let code = xcube_code(l).unwrap();
        assert_eq!(code.n_q(), 3 * l.pow(3), "xcube n_q at L={l}");
        assert_eq!(code.k_q(), expected_k, "xcube k_q at L={l}");
    }
    pass(10, "named-model counts", started, Duration::from_secs(60));
}

#[test]
fn criterion_11_isolability_cases() {
    let started = Instant::now();
    let rep_report = isolability_check(&rep(12));
    assert!(rep_report.passes);
    assert_eq!(rep_report.components[0].cycle_rank, 1);

    let ising = ising_code(&Graph::torus_grid(5, 5));
    let ising_report = isolability_check(&ising);
    assert!(!ising_report.passes);
    assert!(ising_report.components.iter().any(|c| c.cycle_rank >= 2));

    let spec = BipartiteDegreeSpec::from_bit_side(80, 3, 4).unwrap();
    let mut without_pair_checks = 0;
    for seed in 0..100u64 {
        let sample = configuration_model_bipartite(&spec, seed).unwrap();
        let code = fracton_codes::seeds::typical_ldpc(&sample.graph).unwrap();
        let tanner = code.tanner();
        let has_pair_check =
            (0..tanner.check_count()).any(|c| tanner.check_degree(c) == 2);
        let report = isolability_check(&code);
        if !has_pair_check {
            without_pair_checks += 1;
            assert!(report.passes, "seed {seed} has no two-valent checks yet fails");
        }
    }
    assert!(without_pair_checks >= 50, "ensemble unexpectedly full of pair checks");
    pass(11, "isolability", started, Duration::from_secs(300));
}

fn run_figure(binary: &str, out_dir: &Path, args: &[&str]) {
    let status = Command::new(binary)
        .args(args)
        .arg("--out")
        .arg(out_dir)
        .stdout(std::process::Stdio::null())
        .status()
        .expect("figure command runs");
    assert!(status.success(), "{args:?} failed");
}

fn read_csvs(dir: &Path) -> Vec<(String, String)> {
    let mut out = Vec::new();
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_some_and(|e| e == "csv") {
            out.push((
                path.file_name().unwrap().to_string_lossy().into_owned(),
                std::fs::read_to_string(&path).unwrap(),
            ));
        }
    }
    out.sort();
    out
}

#[test]
fn criterion_12_byte_identical_reruns() {
    let started = Instant::now();
    let binary = env!("CARGO_BIN_EXE_fracton-codes");
    let configs = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../configs");
    let base = std::env::temp_dir().join(format!("fracton-acceptance-{}", std::process::id()));
    let commands: [(&str, Vec<&str>); 3] = [
        ("fig2", vec!["fig2"]),
        ("fig3", vec!["fig3"]),
        ("laplacian-square-demo", vec!["laplacian-square-demo"]),
    ];
    let config_files = ["fig2.json", "fig3.json", "laplacian-square.json"];
    for ((name, command), config) in commands.iter().zip(config_files) {
        let config_path = configs.join(config);
        let config_arg = config_path.to_string_lossy().into_owned();
        let mut runs = Vec::new();
        for run in 0..2 {
            let dir = base.join(format!("{name}-{run}"));
            std::fs::create_dir_all(&dir).unwrap();
            let mut args: Vec<&str> = command.clone();
            args.push("--config");
            args.push(&config_arg);
            run_figure(binary, &dir, &args);
            runs.push(read_csvs(&dir));
        }
        assert!(!runs[0].is_empty(), "{name} produced no CSV files");
        assert_eq!(runs[0], runs[1], "{name} reruns differ");
    }
    std::fs::remove_dir_all(&base).ok();
    pass(12, "byte-identical reruns", started, Duration::from_secs(1800));
}
