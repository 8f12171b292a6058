use std::path::Path;

use anyhow::Result;
use clap::Args;
use serde_json::json;

use fracton_codes::gf2::SearchBudget;
use fracton_codes::io::{write_classical_code, DistanceMeta};
use fracton_codes::registry::{SeedParams, SeedRegistry};
use fracton_codes::seeds::pinwheel_code_with_offset;

use crate::outputs::{config_hash, provenance_line, resolve_out_dir};

#[derive(Args, Debug, Clone, serde::Serialize)]
pub struct GenSeedArgs {
    /// Construction name: repetition | laplacian | typical-ldpc | pinwheel.
    pub construction: String,
    /// Block length for repetition / laplacian / typical-ldpc.
    #[arg(long)]
    pub n: Option<usize>,
    /// Cyclic repetition topology (the default).
    #[arg(long, conflicts_with = "open")]
    pub cyclic: bool,
    /// Open-chain repetition topology.
    #[arg(long)]
    pub open: bool,
    /// Tiling generation.
    #[arg(long = "N", visible_alias = "generation")]
    pub generation: Option<usize>,
    /// Boundary depletion period.
    #[arg(long = "p", visible_alias = "period")]
    pub period: Option<usize>,
    /// Boundary depletion offset.
    #[arg(long)]
    pub offset: Option<usize>,
    #[arg(long)]
    pub d_variable: Option<usize>,
    #[arg(long)]
    pub d_check: Option<usize>,
    #[arg(long)]
    pub d_low: Option<usize>,
    #[arg(long)]
    pub d_high: Option<usize>,
    /// Sampling seed for randomized constructions.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output file stem (defaults to the construction name).
    #[arg(long)]
    pub name: Option<String>,
    /// Skip the minimum-weight searches.
    #[arg(long)]
    pub no_distance: bool,
    /// Randomized-search rounds when the kernel is too large to enumerate.
    #[arg(long, default_value_t = 400)]
    pub distance_rounds: usize,
}

pub fn assemble_params(args: &GenSeedArgs) -> SeedParams {
    let mut params = SeedParams::new();
    if let Some(n) = args.n {
        params.set("n", n);
    }
    if args.open {
        params.set("topology", "open");
    } else if args.cyclic {
        params.set("topology", "cyclic");
    }
    if let Some(g) = args.generation {
        params.set("generation", g);
    }
    if let Some(p) = args.period {
        params.set("period", p);
    }
    if let Some(o) = args.offset {
        params.set("offset", o);
    }
    if let Some(v) = args.d_variable {
        params.set("d_variable", v);
    }
    if let Some(v) = args.d_check {
        params.set("d_check", v);
    }
    if let Some(v) = args.d_low {
        params.set("d_low", v);
    }
    if let Some(v) = args.d_high {
        params.set("d_high", v);
    }
    params
}

pub fn run(args: GenSeedArgs, out: Option<&Path>) -> Result<()> {
    let dir = resolve_out_dir(out)?;
    let registry = SeedRegistry::with_builtins();
    let construction = registry.get(&args.construction)?;
    let params = assemble_params(&args);
    let code = construction.build(&params, args.seed)?;

    let budget = SearchBudget {
        search_rounds: args.distance_rounds,
        ..SearchBudget::with_seed(args.seed)
    };
    let (distance, transpose_distance) = if args.no_distance {
        (None, None)
    } else {
        let d = code.distance(&budget);
        let dt = code.transpose_distance(&budget);
        (
            Some(DistanceMeta::new(d.distance, d.exact)),
            Some(DistanceMeta::new(dt.distance, dt.exact)),
        )
    };

    let hash = config_hash(&args);
    let name = args.name.clone().unwrap_or_else(|| args.construction.clone());
    let provenance = json!({ "provenance": provenance_line(&hash) });
    let paths = write_classical_code(&dir, &name, &code, distance.clone(), transpose_distance, provenance)?;

    let d_text = match &distance {
        Some(DistanceMeta { value: Some(d), exact }) => {
            format!("{d}{}", if *exact { "" } else { " (upper bound)" })
        }
        Some(DistanceMeta { value: None, .. }) => "inf".to_string(),
        None => "skipped".to_string(),
    };
    println!(
        "wrote {} and {}",
        paths.matrix.display(),
        paths.metadata.display()
    );
    println!(
        "[n, k, d] = [{}, {}, {}]  m = {}  kT = {}",
        code.n(),
        code.k(),
        d_text,
        code.m(),
        code.k_transpose()
    );

    if args.construction == "pinwheel" {
        let generation = params.usize("generation")?;
        let period = params.usize("period")?;
        let offset = params.usize_or("offset", 0)?;
        let build = pinwheel_code_with_offset(generation, period, offset)?;
        println!(
            "boundary depletion: removed {} of {} boundary checks",
            build.removed_checks.len(),
            build.tiling.boundary_count()
        );
        if build.guard.clean() {
            println!(
                "boundary guard: no codeword of weight < {} hugs the boundary ({})",
                build.guard.weight_threshold,
                if build.guard.exhaustive {
                    "exhaustive"
                } else {
                    "basis pairs only"
                }
            );
        } else {
            println!(
                "boundary guard: WARNING, light boundary-supported codeword found \
                 (weight {}); consider a larger period",
                build.guard.offender.as_ref().map(|o| o.weight()).unwrap_or(0)
            );
        }
    }
    Ok(())
}
