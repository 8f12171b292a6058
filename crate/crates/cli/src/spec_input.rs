//! Code inputs on the command line: a path to a written `.hmat` stem, or
//! an inline construction spec `name:key=value,key=value`.

use std::path::{Path, PathBuf};

use anyhow::{anyhow, Result};

use fracton_codes::io::read_classical_code;
use fracton_codes::registry::{SeedParams, SeedRegistry};
use fracton_codes::seeds::ClassicalCode;

pub fn parse_key_value(raw: &str) -> Result<(String, serde_json::Value)> {
    let (key, value) = raw
        .split_once('=')
        .ok_or_else(|| anyhow!("expected key=value, got {raw:?}"))?;
    let json_value = if let Ok(v) = value.parse::<u64>() {
        serde_json::Value::from(v)
    } else if let Ok(v) = value.parse::<f64>() {
        serde_json::Value::from(v)
    } else {
        serde_json::Value::from(value)
    };
    Ok((key.to_string(), json_value))
}

/// Load a code from `<stem>.hmat` or build one from an inline spec.
pub fn resolve_code(registry: &SeedRegistry, raw: &str, default_seed: u64) -> Result<ClassicalCode> {
    let as_path = Path::new(raw);
    let stem: PathBuf = if as_path.extension().is_some_and(|e| e == "hmat") {
        as_path.with_extension("")
    } else {
        as_path.to_path_buf()
    };
    if stem.with_extension("hmat").exists() {
        return Ok(read_classical_code(&stem)?);
    }
    if let Some((name, rest)) = raw.split_once(':') {
        let construction = registry.get(name)?;
        let mut params = SeedParams::new();
        let mut seed = default_seed;
        for part in rest.split(',').filter(|p| !p.is_empty()) {
            let (key, value) = parse_key_value(part)?;
            if key == "seed" {
                seed = value
                    .as_u64()
                    .ok_or_else(|| anyhow!("seed must be an integer"))?;
            } else {
                params.set(&key, value);
            }
        }
        return Ok(construction.build(&params, seed)?);
    }
    Err(anyhow!(
        "{raw:?} is neither an existing code file stem nor an inline spec like \
         \"repetition:n=3\" (known constructions: {})",
        registry.names().join(", ")
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inline_specs_build_codes() {
        let registry = SeedRegistry::with_builtins();
        let code = resolve_code(&registry, "repetition:n=3", 0).unwrap();
        assert_eq!((code.n(), code.k()), (3, 1));
        let code = resolve_code(&registry, "pinwheel:generation=2,period=5", 0).unwrap();
        assert_eq!(code.metadata().construction, "pinwheel");
    }

    #[test]
    fn unknown_input_is_a_usage_error() {
        let registry = SeedRegistry::with_builtins();
        assert!(resolve_code(&registry, "nonesuch", 0).is_err());
    }
}
