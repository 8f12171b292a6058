use std::path::Path;

use anyhow::{ensure, Result};
use clap::Args;

use fracton_codes::diagnostics::{
    confinement_csv, confinement_scan, ensemble_confinement_csv, ensemble_confinement_scan, log_log_slope, mean_k_by_size, rank_deficiency_scan, rank_scan_csv,
    SamplingMode,
};
use fracton_codes::gf2::{BitVector, SearchBudget};
use fracton_codes::graphs::Graph;
use fracton_codes::io::write_witness;
use fracton_codes::registry::SeedRegistry;
use fracton_codes::seeds::{laplacian_code, pinwheel_code_with_offset};
use fracton_codes::tiling::TilingGraph;

use crate::config::{load_config, Fig2Config, Fig3Config, LaplacianSquareConfig};
use crate::outputs::{config_hash, provenance_line, resolve_out_dir, write_config, write_csv, write_text};
use crate::svgplot::Plot;

#[derive(Args, Debug, Clone)]
pub struct Fig2Args {
    #[arg(long)]
    pub config: Option<std::path::PathBuf>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub rank_trials: Option<usize>,
    #[arg(long)]
    pub confinement_members: Option<usize>,
}

pub fn run_fig2(args: Fig2Args, out: Option<&Path>) -> Result<()> {
    let dir = resolve_out_dir(out)?;
    let mut config: Fig2Config = load_config(args.config.as_deref())?;
    if let Some(s) = args.seed {
        config.seed = s;
    }
    if let Some(t) = args.rank_trials {
        config.rank_trials = t;
    }
    if let Some(m) = args.confinement_members {
        config.confinement_members = m;
    }
    let hash = config_hash(&config);
    let provenance = provenance_line(&hash);
    write_config(&dir.join("fig2.config.json"), &config)?;
    let registry = SeedRegistry::with_builtins();

    // rank-deficiency panel
    let mut all_records = Vec::new();
    let mut rank_plot = Plot::new("Logical bits vs system size", "n", "mean k").log_log();
    for spec in &config.ensembles {
        let records = rank_deficiency_scan(
            &registry,
            spec,
            &config.sizes,
            config.rank_trials,
            config.seed,
        )?;
        let means = mean_k_by_size(&records);
        let points: Vec<(f64, f64)> = means.iter().map(|&(n, k)| (n as f64, k)).collect();
        let exponent = log_log_slope(&points);
        println!(
            "{}: fitted exponent of log k vs log n = {exponent:.3}",
            spec.construction
        );
        rank_plot = rank_plot.with_series(&spec.construction, points);
        all_records.extend(records);
    }
    let rank_csv = dir.join("fig2_rank.csv");
    write_csv(&rank_csv, &provenance, &rank_scan_csv(&all_records))?;
    write_text(&dir.join("fig2_rank.svg"), &rank_plot.to_svg(&provenance))?;

    // confinement panel
    let mut conf_plot = Plot::new(
        "Minimum syndrome density vs error sparsity",
        "|e|/n",
        "min |s|/m (ensemble mean)",
    );
    for spec in &config.ensembles {
        let curve = ensemble_confinement_scan(
            &registry,
            spec,
            config.confinement_size,
            &config.sparsities,
            config.confinement_members,
            config.confinement_trials,
            config.seed,
        )?;
        let mut witness_files = Vec::with_capacity(curve.rows.len());
        for (i, row) in curve.rows.iter().enumerate() {
            match &row.witness {
                Some(support) => {
                    let file = format!("fig2_confinement_{}_w{i}.witness", spec.construction);
                    write_witness(&dir.join(&file), support)?;
                    witness_files.push(Some(file));
                }
                None => witness_files.push(None),
            }
        }
        let csv = dir.join(format!("fig2_confinement_{}.csv", spec.construction));
        write_csv(
            &csv,
            &provenance,
            &ensemble_confinement_csv(&curve, &witness_files),
        )?;
        println!(
            "{}: confinement curve has {} non-monotone pairs, growth {:.1}x",
            spec.construction,
            curve.non_monotone_pairs(),
            curve.growth_ratio().unwrap_or(f64::NAN)
        );
        conf_plot = conf_plot.with_series(
            &spec.construction,
            curve
                .rows
                .iter()
                .map(|r| (r.sparsity, r.mean_min_density))
                .collect(),
        );
    }
    write_text(&dir.join("fig2_confinement.svg"), &conf_plot.to_svg(&provenance))?;
    println!("fig2 artifacts written to {}", dir.display());
    Ok(())
}

#[derive(Args, Debug, Clone)]
pub struct Fig3Args {
    #[arg(long)]
    pub config: Option<std::path::PathBuf>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Comma-separated depletion periods.
    #[arg(long, value_delimiter = ',')]
    pub periods: Vec<usize>,
    /// Comma-separated generations.
    #[arg(long, value_delimiter = ',')]
    pub generations: Vec<usize>,
}

pub fn run_fig3(args: Fig3Args, out: Option<&Path>) -> Result<()> {
    let dir = resolve_out_dir(out)?;
    let mut config: Fig3Config = load_config(args.config.as_deref())?;
    if let Some(s) = args.seed {
        config.seed = s;
    }
    if !args.periods.is_empty() {
        config.periods = args.periods;
    }
    if !args.generations.is_empty() {
        config.generations = args.generations;
    }
    let hash = config_hash(&config);
    let provenance = provenance_line(&hash);
    write_config(&dir.join("fig3.config.json"), &config)?;

    for &generation in &config.tiling_svg_generations {
        let tiling = TilingGraph::generate(generation)?;
        write_text(
            &dir.join(format!("fig3_tiling_n{generation}.svg")),
            &tiling.to_svg(),
        )?;
        write_text(
            &dir.join(format!("fig3_tiling_n{generation}.graph")),
            &tiling.graph().to_text(),
        )?;
        write_text(
            &dir.join(format!("fig3_tiling_n{generation}.coords")),
            &tiling.coords_text(),
        )?;
    }

    let budget = SearchBudget {
        exhaustive_limit: config.exhaustive_limit,
        search_rounds: config.distance_rounds,
        seed: config.seed,
    };
    let mut csv = String::from("p,generation,n,m,k,kT,d,d_exact\n");
    let mut k_plot = Plot::new("Logical bits", "n", "k").log_log();
    let mut d_plot = Plot::new("Code distance", "n", "d").log_log();
    for &p in &config.periods {
        let mut k_points = Vec::new();
        let mut d_points = Vec::new();
        for &generation in &config.generations {
            let build = pinwheel_code_with_offset(generation, p, config.depletion_offset)?;
            let code = &build.code;
            let d = code.distance(&budget);
            let d_value = d
                .distance
                .finite()
                .map(|v| v.to_string())
                .unwrap_or_else(|| "inf".into());
            csv.push_str(&format!(
                "{p},{generation},{},{},{},{},{d_value},{}\n",
                code.n(),
                code.m(),
                code.k(),
                code.k_transpose(),
                d.exact
            ));
            k_points.push((code.n() as f64, code.k() as f64));
            if let Some(v) = d.distance.finite() {
                d_points.push((code.n() as f64, v as f64));
            }
            if !build.guard.clean() {
                println!("warning: p={p} N={generation}: light boundary codeword found");
            }
        }
        println!(
            "p={p}: k exponent {:.3}, d exponent {:.3}",
            log_log_slope(&k_points),
            log_log_slope(&d_points)
        );
        k_plot = k_plot.with_series(&format!("p={p}"), k_points);
        d_plot = d_plot.with_series(&format!("p={p}"), d_points);
    }
    write_csv(&dir.join("fig3_scaling.csv"), &provenance, &csv)?;
    write_text(&dir.join("fig3_k.svg"), &k_plot.to_svg(&provenance))?;
    write_text(&dir.join("fig3_d.svg"), &d_plot.to_svg(&provenance))?;
    println!("fig3 artifacts written to {}", dir.display());
    Ok(())
}

#[derive(Args, Debug, Clone)]
pub struct LaplacianSquareArgs {
    #[arg(long)]
    pub config: Option<std::path::PathBuf>,
    #[arg(long)]
    pub side: Option<usize>,
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
}

/// Alternating-pattern error on a rotated-frame rectangle of the torus:
/// cells of the even sublattice within the window `|x+y - u0| <= a`,
/// `|x-y - v0| <= b` (centered modulo). The pattern terminates cleanly on
/// diagonal cuts, exciting only the four window corners.
pub fn checkerboard_window_error(
    side: usize,
    center: (usize, usize),
    a: usize,
    b: usize,
) -> BitVector {
    let l = side as i64;
    let (cx, cy) = (center.0 as i64, center.1 as i64);
    let (u0, v0) = (cx + cy, cx - cy);
    let centered = |d: i64, modulus: i64| -> i64 {
        let m = d.rem_euclid(modulus);
        if m > modulus / 2 {
            m - modulus
        } else {
            m
        }
    };
    let mut support = Vec::new();
    for y in 0..l {
        for x in 0..l {
            if (x + y) % 2 != 0 {
                continue;
            }
            // wrap vectors shift (u, v) by (2L, 0) and (0, 2L) together
            let du = centered(x + y - u0, 2 * l);
            let dv = centered(x - y - v0, 2 * l);
            let inside = (du.abs() <= a as i64 && dv.abs() <= b as i64)
                || (centered(du + l, 2 * l).abs() <= a as i64
                    && centered(dv + l, 2 * l).abs() <= b as i64);
            if inside {
                support.push((y * l + x) as usize);
            }
        }
    }
    BitVector::from_support(side * side, &support)
}

pub fn run_laplacian_square(args: LaplacianSquareArgs, out: Option<&Path>) -> Result<()> {
    let dir = resolve_out_dir(out)?;
    let mut config: LaplacianSquareConfig = load_config(args.config.as_deref())?;
    if let Some(s) = args.side {
        config.side = s;
    }
    if let Some(t) = args.trials {
        config.trials = t;
    }
    if let Some(s) = args.seed {
        config.seed = s;
    }
    ensure!(config.side.is_multiple_of(2), "side must be even for the alternating codeword");
    let hash = config_hash(&config);
    let provenance = provenance_line(&hash);
    write_config(&dir.join("laplacian_square.config.json"), &config)?;

    let code = laplacian_code(&Graph::torus_grid(config.side, config.side))?;
    println!(
        "torus {0}x{0} Laplacian code: n = {1}, k = {2}",
        config.side,
        code.n(),
        code.k()
    );

    // the explicit counterexample: growing windows, syndrome pinned at 4
    println!("checkerboard-window errors (rotated-frame rectangles):");
    let center = (config.side / 2, config.side / 2);
    let mut demo_witness: Option<BitVector> = None;
    for half_extent in [2usize, 4, 6, 8] {
        let error = checkerboard_window_error(config.side, center, half_extent, half_extent);
        let syndrome = code.matrix().mul_vector(&error);
        println!(
            "  half-extent {half_extent}: |e| = {:3}, |s| = {}",
            error.weight(),
            syndrome.weight()
        );
        ensure!(
            syndrome.weight() == 4,
            "window error should excite exactly the four corners"
        );
        demo_witness = Some(error);
    }
    if let Some(error) = &demo_witness {
        println!("largest window error region ('#' = flipped bit):");
        for y in 0..config.side {
            let row: String = (0..config.side)
                .map(|x| if error.get(y * config.side + x) { '#' } else { '.' })
                .collect();
            println!("  {row}");
        }
        write_witness(&dir.join("laplacian_square_window.witness"), &error.support())?;
    }

    let curve = confinement_scan(
        &code,
        &config.sparsities,
        config.trials,
        SamplingMode::Biased,
        config.seed,
    )?;
    let mut witness_files = Vec::with_capacity(curve.rows.len());
    for (i, row) in curve.rows.iter().enumerate() {
        match &row.witness {
            Some(support) => {
                let file = format!("laplacian_square_w{i}.witness");
                write_witness(&dir.join(&file), support)?;
                witness_files.push(Some(file));
            }
            None => witness_files.push(None),
        }
    }
    let csv_path = dir.join("laplacian_square_confinement.csv");
    write_csv(&csv_path, &provenance, &confinement_csv(&curve, &witness_files))?;
    let plateau: Vec<_> = curve
        .rows
        .iter()
        .filter(|r| r.trials > 0 && r.target_weight >= 8)
        .map(|r| r.min_syndrome_weight.unwrap_or(usize::MAX))
        .collect();
    println!(
        "biased sampler: weights >= 8 reach min syndrome weights {plateau:?} \
         (bounded, not growing: no confinement)"
    );
    println!("wrote {}", csv_path.display());
    Ok(())
}
