//! Output directory resolution and provenance stamping.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};

/// Environment variable naming the default output directory.
pub const OUT_DIR_ENV: &str = "FRACTON_CODES_OUT";

pub fn resolve_out_dir(flag: Option<&Path>) -> Result<PathBuf> {
    let dir = match flag {
        Some(d) => d.to_path_buf(),
        None => match std::env::var_os(OUT_DIR_ENV) {
            Some(d) => PathBuf::from(d),
            None => PathBuf::from("."),
        },
    };
    fs::create_dir_all(&dir)
        .with_context(|| format!("creating output directory {}", dir.display()))?;
    Ok(dir)
}

/// FNV-1a over the canonical config serialization; embedded in every
/// generated artifact so reruns are attributable.
pub fn config_hash(config: &impl serde::Serialize) -> String {
    let canonical = serde_json::to_string(config).expect("config serializes");
    let mut hash: u64 = 0xcbf29ce484222325;
    for byte in canonical.bytes() {
        hash ^= byte as u64;
        hash = hash.wrapping_mul(0x100000001b3);
    }
    format!("{hash:016x}")
}

pub fn provenance_line(hash: &str) -> String {
    format!(
        "config_hash={hash} tool=fracton-codes version={}",
        env!("CARGO_PKG_VERSION")
    )
}

/// Write a CSV with a leading `# provenance` comment line.
pub fn write_csv(path: &Path, provenance: &str, body: &str) -> Result<()> {
    let contents = format!("# {provenance}\n{body}");
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

pub fn write_text(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

/// Serialize the resolved config next to the artifacts it produced.
pub fn write_config(path: &Path, config: &impl serde::Serialize) -> Result<()> {
    let text = serde_json::to_string_pretty(config).context("serializing config")?;
    write_text(path, &(text + "\n"))
}
