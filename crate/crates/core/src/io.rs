//! On-disk formats: matrix text files with JSON metadata sidecars.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::json;
use thiserror::Error;

use crate::error::FormatError;
use crate::gf2::{BitMatrix, Distance, SparseBitMatrix};
use crate::products::CssCode;
use crate::seeds::{ClassicalCode, CodeMetadata};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Format {
        path: PathBuf,
        source: FormatError,
    },
    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },
}

fn write_file(path: &Path, contents: &str) -> Result<(), IoError> {
    fs::write(path, contents).map_err(|source| IoError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn read_file(path: &Path) -> Result<String, IoError> {
    fs::read_to_string(path).map_err(|source| IoError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn write_matrix(path: &Path, m: &BitMatrix) -> Result<(), IoError> {
    write_file(path, &m.to_sparse().to_text())
}

pub fn read_matrix(path: &Path) -> Result<BitMatrix, IoError> {
    let text = read_file(path)?;
    let sparse = SparseBitMatrix::from_text(&text).map_err(|source| IoError::Format {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(sparse.to_dense())
}

/// Cached distance values for the sidecar.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DistanceMeta {
    pub value: Option<usize>,
    pub exact: bool,
}

impl DistanceMeta {
    pub fn new(distance: Distance, exact: bool) -> Self {
        Self {
            value: distance.finite(),
            exact,
        }
    }
}

/// The metadata sidecar of a classical code file.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassicalCodeMeta {
    pub construction: String,
    pub params: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub k_transpose: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distance: Option<DistanceMeta>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transpose_distance: Option<DistanceMeta>,
    #[serde(default)]
    pub provenance: serde_json::Value,
}

/// Paths of a written classical code: `<stem>.hmat` and `<stem>.meta.json`.
#[derive(Clone, Debug)]
pub struct CodePaths {
    pub matrix: PathBuf,
    pub metadata: PathBuf,
}

pub fn write_classical_code(
    dir: &Path,
    name: &str,
    code: &ClassicalCode,
    distance: Option<DistanceMeta>,
    transpose_distance: Option<DistanceMeta>,
    provenance: serde_json::Value,
) -> Result<CodePaths, IoError> {
    let matrix = dir.join(format!("{name}.hmat"));
    let metadata = dir.join(format!("{name}.meta.json"));
    write_matrix(&matrix, code.matrix())?;
    let meta = ClassicalCodeMeta {
        construction: code.metadata().construction.clone(),
        params: code.metadata().params.clone(),
        seed: code.metadata().seed,
        n: code.n(),
        m: code.m(),
        k: code.k(),
        k_transpose: code.k_transpose(),
        distance,
        transpose_distance,
        provenance,
    };
    let text = serde_json::to_string_pretty(&meta).map_err(|source| IoError::Json {
        path: metadata.clone(),
        source,
    })?;
    write_file(&metadata, &text)?;
    Ok(CodePaths { matrix, metadata })
}

/// Read a code back from `<stem>.hmat` (+ sidecar when present).
pub fn read_classical_code(stem: &Path) -> Result<ClassicalCode, IoError> {
    let matrix_path = stem.with_extension("hmat");
    let h = read_matrix(&matrix_path)?;
    let meta_path = stem.with_extension("meta.json");
    let metadata = if meta_path.exists() {
        let text = read_file(&meta_path)?;
        let meta: ClassicalCodeMeta =
            serde_json::from_str(&text).map_err(|source| IoError::Json {
                path: meta_path.clone(),
                source,
            })?;
        let mut md = CodeMetadata::new(&meta.construction, meta.params);
        md.seed = meta.seed;
        md
    } else {
        CodeMetadata::new("file", json!({ "path": stem.display().to_string() }))
    };
    Ok(ClassicalCode::from_matrix(h, metadata))
}

/// Metadata sidecar of a CSS code pair.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CssCodeMeta {
    pub construction: String,
    pub params: serde_json::Value,
    pub n_q: usize,
    pub k_q: usize,
    pub k_x_transpose: usize,
    pub k_z_transpose: usize,
    pub superselection_exponent: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distance: Option<DistanceMeta>,
    #[serde(default)]
    pub provenance: serde_json::Value,
}

#[derive(Clone, Debug)]
pub struct CssPaths {
    pub h_x: PathBuf,
    pub h_z: PathBuf,
    pub metadata: PathBuf,
}

pub fn write_css_code(
    dir: &Path,
    name: &str,
    code: &CssCode,
    distance: Option<DistanceMeta>,
    provenance: serde_json::Value,
) -> Result<CssPaths, IoError> {
    let h_x = dir.join(format!("{name}.hx.hmat"));
    let h_z = dir.join(format!("{name}.hz.hmat"));
    let metadata = dir.join(format!("{name}.meta.json"));
    write_matrix(&h_x, code.h_x())?;
    write_matrix(&h_z, code.h_z())?;
    let meta = CssCodeMeta {
        construction: code.metadata().construction.clone(),
        params: code.metadata().params.clone(),
        n_q: code.n_q(),
        k_q: code.k_q(),
        k_x_transpose: code.k_x_transpose(),
        k_z_transpose: code.k_z_transpose(),
        superselection_exponent: code.superselection_exponent(),
        distance,
        provenance,
    };
    let text = serde_json::to_string_pretty(&meta).map_err(|source| IoError::Json {
        path: metadata.clone(),
        source,
    })?;
    write_file(&metadata, &text)?;
    Ok(CssPaths { h_x, h_z, metadata })
}

/// Support-list witness file: one ascending index per line.
pub fn write_witness(path: &Path, support: &[usize]) -> Result<(), IoError> {
    let mut text = String::new();
    for i in support {
        text.push_str(&i.to_string());
        text.push('\n');
    }
    write_file(path, &text)
}
