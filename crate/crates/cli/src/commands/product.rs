use std::path::Path;

use anyhow::{anyhow, Result};
use clap::{Args, Subcommand};
use serde_json::json;

use fracton_codes::diagnostics::superselection_count;
use fracton_codes::gf2::SearchBudget;
use fracton_codes::io::{write_css_code, DistanceMeta};
use fracton_codes::products::{hgp, predicted_hgp_params, threefold_product, CssCode};
use fracton_codes::registry::{ModelRegistry, ProductFamily, SeedRegistry};

use crate::outputs::{config_hash, provenance_line, resolve_out_dir};
use crate::spec_input::resolve_code;

#[derive(Args, Debug, Clone, serde::Serialize)]
pub struct ProductArgs {
    #[command(subcommand)]
    pub kind: ProductKind,
}

#[derive(Subcommand, Debug, Clone, serde::Serialize)]
pub enum ProductKind {
    /// Hypergraph product of two classical codes (file stems or inline
    /// specs like "repetition:n=3").
    Hgp {
        seed1: String,
        seed2: String,
        #[arg(long)]
        name: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Skip the quantum minimum-weight search.
        #[arg(long)]
        no_distance: bool,
    },
    /// Lifted product of a named translation-invariant model.
    Lp {
        #[arg(long)]
        model: String,
        #[arg(long = "L")]
        l: usize,
        #[arg(long)]
        name: Option<String>,
    },
    /// Threefold product: either a named model or three classical codes.
    Threefold {
        #[arg(long)]
        model: Option<String>,
        #[arg(long = "L")]
        l: Option<usize>,
        /// Three code inputs when no named model is requested.
        inputs: Vec<String>,
        #[arg(long)]
        name: Option<String>,
    },
}

pub fn run(args: ProductArgs, out: Option<&Path>) -> Result<()> {
    let dir = resolve_out_dir(out)?;
    let hash = config_hash(&args);
    let provenance = json!({ "provenance": provenance_line(&hash) });
    let registry = SeedRegistry::with_builtins();
    let models = ModelRegistry::with_builtins();

    match args.kind {
        ProductKind::Hgp {
            seed1,
            seed2,
            name,
            seed,
            no_distance,
        } => {
            let c1 = resolve_code(&registry, &seed1, seed)?;
            let c2 = resolve_code(&registry, &seed2, seed)?;
            let code = hgp(&c1, &c2)?;
            let budget = SearchBudget::with_seed(seed);
            let predicted = predicted_hgp_params(&c1, &c2, &budget);
            let (d_text, d_meta) = if no_distance {
                ("skipped".to_string(), None)
            } else {
                let d = code.distance(&budget);
                (
                    format!("{}{}", d.distance, if d.exact { "" } else { " (upper bound)" }),
                    Some(DistanceMeta::new(d.distance, d.exact)),
                )
            };
            let sectors = superselection_count(&code);
            println!(
                "measured  [[{}, {}, {}]]  k_XT = {}  k_ZT = {}  sectors = 2^{}",
                code.n_q(),
                code.k_q(),
                d_text,
                code.k_x_transpose(),
                code.k_z_transpose(),
                sectors.exponent
            );
            println!(
                "predicted [[{}, {}, {}]]  k_XT = {}  k_ZT = {}",
                predicted.n_q, predicted.k_q, predicted.d_q, predicted.k_x_transpose, predicted.k_z_transpose
            );
            if sectors.hgp_identity_holds == Some(false) {
                return Err(anyhow!("superselection cross-check failed"));
            }
            write_named(&dir, name.as_deref().unwrap_or("hgp"), &code, d_meta, provenance)
        }
        ProductKind::Lp { model, l, name } => {
            let entry = models.get(&model)?;
            if entry.family() != ProductFamily::Lifted {
                return Err(anyhow!(
                    "{model:?} is not a lifted-product model (try: {})",
                    models.names_in_family(ProductFamily::Lifted).join(", ")
                ));
            }
            let code = entry.build(l)?;
            print_css(&code);
            write_named(&dir, name.as_deref().unwrap_or(&model), &code, None, provenance)
        }
        ProductKind::Threefold {
            model,
            l,
            inputs,
            name,
        } => {
            let code: CssCode = match (model, l, inputs.as_slice()) {
                (Some(model), Some(l), []) => {
                    let entry = models.get(&model)?;
                    if entry.family() != ProductFamily::Threefold {
                        return Err(anyhow!(
                            "{model:?} is not a threefold model (try: {})",
                            models.names_in_family(ProductFamily::Threefold).join(", ")
                        ));
                    }
                    entry.build(l)?
                }
                (None, None, [a, b, c]) => {
                    let c1 = resolve_code(&registry, a, 0)?;
                    let c2 = resolve_code(&registry, b, 0)?;
                    let c3 = resolve_code(&registry, c, 0)?;
                    threefold_product(&c1, &c2, &c3)?
                }
                _ => {
                    return Err(anyhow!(
                        "threefold needs either --model NAME --L SIZE or exactly three code inputs"
                    ))
                }
            };
            print_css(&code);
            write_named(
                &dir,
                name.as_deref().unwrap_or("threefold"),
                &code,
                None,
                provenance,
            )
        }
    }
}

fn print_css(code: &CssCode) {
    println!(
        "n_q = {}  k_q = {}  k_XT = {}  k_ZT = {}  sectors = 2^{}",
        code.n_q(),
        code.k_q(),
        code.k_x_transpose(),
        code.k_z_transpose(),
        code.superselection_exponent()
    );
}

fn write_named(
    dir: &Path,
    name: &str,
    code: &CssCode,
    distance: Option<DistanceMeta>,
    provenance: serde_json::Value,
) -> Result<()> {
    let paths = write_css_code(dir, name, code, distance, provenance)?;
    println!(
        "wrote {}, {}, {}",
        paths.h_x.display(),
        paths.h_z.display(),
        paths.metadata.display()
    );
    Ok(())
}
