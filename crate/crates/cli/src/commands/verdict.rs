use std::path::Path;

use anyhow::Result;
use clap::Args;

use fracton_codes::diagnostics::{fracton_verdict, run_seed_diagnostics, FractonClass};
use fracton_codes::registry::SeedRegistry;

use crate::config::{default_seed_verdict, load_config, VerdictConfig};
use crate::outputs::{config_hash, provenance_line, resolve_out_dir, write_config, write_text};

#[derive(Args, Debug, Clone)]
pub struct VerdictArgs {
    #[arg(long)]
    pub config: Option<std::path::PathBuf>,
    /// First seed construction (replaces the config entry with defaults).
    #[arg(long)]
    pub seed1: Option<String>,
    /// Second seed construction.
    #[arg(long)]
    pub seed2: Option<String>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value = "verdict")]
    pub name: String,
}

pub fn run(args: VerdictArgs, out: Option<&Path>) -> Result<()> {
    let dir = resolve_out_dir(out)?;
    let mut config: VerdictConfig = load_config(args.config.as_deref())?;
    if let Some(name) = &args.seed1 {
        config.seed1 = default_seed_verdict(name);
    }
    if let Some(name) = &args.seed2 {
        config.seed2 = default_seed_verdict(name);
    }
    if let Some(s) = args.seed {
        config.seed = s;
    }
    let hash = config_hash(&config);
    write_config(&dir.join(format!("{}.config.json", args.name)), &config)?;

    let registry = SeedRegistry::with_builtins();
    let first = run_seed_diagnostics(
        &registry,
        &config.seed1.spec,
        &config.seed1.plan,
        config.seed,
        config.thresholds,
    )?;
    let second = run_seed_diagnostics(
        &registry,
        &config.seed2.spec,
        &config.seed2.plan,
        config.seed ^ 0x9e3779b97f4a7c15,
        config.thresholds,
    )?;
    for seed in [&first, &second] {
        println!(
            "{}: rank exponent {:.3} (deficient: {}), confinement growth {:?} \
             ({} inversions, confining: {}), isolability failures {}/{}",
            seed.ensemble,
            seed.rank.fitted_exponent,
            seed.rank.rank_deficient,
            seed.confinement.growth_ratio,
            seed.confinement.non_monotone_pairs,
            seed.confinement.confining,
            seed.isolability.failures,
            seed.isolability.samples,
        );
    }
    let verdict = fracton_verdict(first, second);
    let label = match verdict.class {
        FractonClass::NotFracton => "not a fracton candidate",
        FractonClass::TypeICandidate => "Type-I fracton candidate",
        FractonClass::TypeIICandidate => "Type-II fracton candidate",
    };
    println!("verdict: {label}");
    for reason in &verdict.reasons {
        println!("  - {reason}");
    }
    let mut report = serde_json::to_value(&verdict)?;
    if let Some(obj) = report.as_object_mut() {
        obj.insert(
            "provenance".into(),
            serde_json::Value::String(provenance_line(&hash)),
        );
    }
    let path = dir.join(format!("{}.json", args.name));
    write_text(&path, &(serde_json::to_string_pretty(&report)? + "\n"))?;
    println!("wrote {}", path.display());
    Ok(())
}
