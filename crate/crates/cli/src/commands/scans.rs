use std::path::Path;

use anyhow::Result;
use clap::Args;

use fracton_codes::diagnostics::{
    confinement_csv, confinement_scan, default_sparsities, distance_report, isolability_check,
    isolability_csv, rank_deficiency_scan, rank_scan_csv, CodeRef, SamplingMode,
};
use fracton_codes::gf2::SearchBudget;
use fracton_codes::io::write_witness;
use fracton_codes::registry::SeedRegistry;

use crate::config::{load_config, RankScanConfig};
use crate::outputs::{config_hash, provenance_line, resolve_out_dir, write_config, write_csv};
use crate::spec_input::{parse_key_value, resolve_code};

#[derive(Args, Debug, Clone)]
pub struct RankScanArgs {
    /// JSON config; flags override its fields.
    #[arg(long)]
    pub config: Option<std::path::PathBuf>,
    /// Ensemble construction name.
    #[arg(long)]
    pub ensemble: Option<String>,
    /// Extra construction parameters, key=value.
    #[arg(long = "param")]
    pub params: Vec<String>,
    /// Comma-separated sizes.
    #[arg(long, value_delimiter = ',')]
    pub sizes: Vec<usize>,
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Output stem.
    #[arg(long)]
    pub name: Option<String>,
}

pub fn run_rank_scan(args: RankScanArgs, out: Option<&Path>) -> Result<()> {
    let dir = resolve_out_dir(out)?;
    let mut config: RankScanConfig = load_config(args.config.as_deref())?;
    if let Some(e) = args.ensemble {
        config.ensemble = fracton_codes::diagnostics::EnsembleSpec::new(&e);
    }
    for raw in &args.params {
        let (key, value) = parse_key_value(raw)?;
        config.ensemble = config.ensemble.clone().with_param(&key, value);
    }
    if !args.sizes.is_empty() {
        config.sizes = args.sizes;
    }
    if let Some(t) = args.trials {
        config.trials = t;
    }
    if let Some(s) = args.seed {
        config.seed = s;
    }
    if let Some(n) = args.name {
        config.name = n;
    }

    let registry = SeedRegistry::with_builtins();
    let records = rank_deficiency_scan(
        &registry,
        &config.ensemble,
        &config.sizes,
        config.trials,
        config.seed,
    )?;
    let hash = config_hash(&config);
    let csv_path = dir.join(format!("{}.csv", config.name));
    write_csv(&csv_path, &provenance_line(&hash), &rank_scan_csv(&records))?;
    write_config(&dir.join(format!("{}.config.json", config.name)), &config)?;
    println!("wrote {} ({} records)", csv_path.display(), records.len());
    Ok(())
}

#[derive(Args, Debug, Clone)]
pub struct ConfinementArgs {
    /// Code input: file stem or inline spec.
    pub code: String,
    #[arg(long, value_enum, default_value = "uniform")]
    pub mode: ModeArg,
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    /// Comma-separated sparsities; defaults to 0.01..0.30.
    #[arg(long, value_delimiter = ',')]
    pub sparsities: Vec<f64>,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    #[arg(long, default_value = "confinement")]
    pub name: String,
}

#[derive(clap::ValueEnum, Debug, Clone, Copy, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeArg {
    Uniform,
    Biased,
}

impl From<ModeArg> for SamplingMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Uniform => SamplingMode::Uniform,
            ModeArg::Biased => SamplingMode::Biased,
        }
    }
}

pub fn run_confinement(args: ConfinementArgs, out: Option<&Path>) -> Result<()> {
    let dir = resolve_out_dir(out)?;
    let registry = SeedRegistry::with_builtins();
    let code = resolve_code(&registry, &args.code, args.seed)?;
    let sparsities = if args.sparsities.is_empty() {
        default_sparsities()
    } else {
        args.sparsities.clone()
    };
    let curve = confinement_scan(
        &code,
        &sparsities,
        args.trials,
        args.mode.into(),
        args.seed,
    )?;
    let record = serde_json::json!({
        "code": args.code,
        "mode": format!("{:?}", args.mode),
        "trials": args.trials,
        "sparsities": sparsities,
        "seed": args.seed,
    });
    let hash = config_hash(&record);
    let mut witness_files = Vec::with_capacity(curve.rows.len());
    for (i, row) in curve.rows.iter().enumerate() {
        match &row.witness {
            Some(support) => {
                let file = format!("{}_w{i}.witness", args.name);
                write_witness(&dir.join(&file), support)?;
                witness_files.push(Some(file));
            }
            None => witness_files.push(None),
        }
    }
    let csv_path = dir.join(format!("{}.csv", args.name));
    write_csv(
        &csv_path,
        &provenance_line(&hash),
        &confinement_csv(&curve, &witness_files),
    )?;
    write_config(&dir.join(format!("{}.config.json", args.name)), &record)?;
    println!(
        "wrote {} ({} sparsity points, mode {:?})",
        csv_path.display(),
        curve.rows.len(),
        args.mode
    );
    Ok(())
}

#[derive(Args, Debug, Clone)]
pub struct IsolabilityArgs {
    /// Code input: file stem or inline spec.
    pub code: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value = "isolability")]
    pub name: String,
}

pub fn run_isolability(args: IsolabilityArgs, out: Option<&Path>) -> Result<()> {
    let dir = resolve_out_dir(out)?;
    let registry = SeedRegistry::with_builtins();
    let code = resolve_code(&registry, &args.code, args.seed)?;
    let report = isolability_check(&code);
    let record = serde_json::json!({ "code": args.code, "seed": args.seed });
    let hash = config_hash(&record);
    let csv_path = dir.join(format!("{}.csv", args.name));
    write_csv(&csv_path, &provenance_line(&hash), &isolability_csv(&report))?;
    println!(
        "{}: {} two-valent checks, {} components, verdict: {}",
        args.code,
        report.degree_two_checks,
        report.components.len(),
        if report.passes { "isolable" } else { "NOT isolable" }
    );
    println!("wrote {}", csv_path.display());
    Ok(())
}

#[derive(Args, Debug, Clone)]
pub struct DistanceArgs {
    /// Code input: file stem or inline spec. With --css, the stem of a
    /// written CSS pair.
    pub code: String,
    /// Treat the input as a CSS code stem (reads .hx.hmat / .hz.hmat).
    #[arg(long)]
    pub css: bool,
    #[arg(long, default_value_t = 28)]
    pub exhaustive_limit: usize,
    #[arg(long, default_value_t = 400)]
    pub rounds: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Also write the witness support to this file.
    #[arg(long)]
    pub witness_out: Option<String>,
}

pub fn run_distance(args: DistanceArgs, out: Option<&Path>) -> Result<()> {
    let budget = SearchBudget {
        exhaustive_limit: args.exhaustive_limit,
        search_rounds: args.rounds,
        seed: args.seed,
    };
    let report = if args.css {
        let stem = Path::new(&args.code);
        let h_x = fracton_codes::io::read_matrix(&stem_with(stem, "hx.hmat"))?;
        let h_z = fracton_codes::io::read_matrix(&stem_with(stem, "hz.hmat"))?;
        let code = fracton_codes::products::CssCode::new(
            h_x,
            h_z,
            fracton_codes::seeds::CodeMetadata::adhoc("file"),
        )?;
        distance_report(CodeRef::Css(&code), &budget)
    } else {
        let registry = SeedRegistry::with_builtins();
        let code = resolve_code(&registry, &args.code, args.seed)?;
        distance_report(CodeRef::Classical(&code), &budget)
    };
    println!(
        "d = {}  ({})",
        report.distance,
        if report.exact { "exact" } else { "upper bound" }
    );
    if let Some(out_file) = args.witness_out {
        if let Some(support) = &report.witness_support {
            let dir = resolve_out_dir(out)?;
            let path = dir.join(&out_file);
            write_witness(&path, support)?;
            println!("wrote witness {}", path.display());
        }
    }
    Ok(())
}

fn stem_with(stem: &Path, suffix: &str) -> std::path::PathBuf {
    let mut name = stem
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    name.push('.');
    name.push_str(suffix);
    stem.with_file_name(name)
}
