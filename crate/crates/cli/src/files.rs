//! File-format loaders for the subcommands: SW model files (JSON) and
//! intersection-form matrix literals.

use anyhow::{Context, Result};
use fourfold_core::{IntegerMatrix, SurfaceClass};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

/// A model file for candidate enumeration: characteristic numbers, the
/// intersection form, and the constraining surfaces. Unlike a full
/// manifold model, no closed-manifold Betti arithmetic is imposed.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub euler: i64,
    pub signature: i64,
    pub form: Vec<Vec<i64>>,
    pub surfaces: Vec<SurfaceEntry>,
    #[serde(default)]
    pub dual_labels: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SurfaceEntry {
    pub label: String,
    pub genus: u32,
    pub vector: Vec<i64>,
}

pub struct LoadedModel {
    pub euler: i64,
    pub signature: i64,
    pub form: IntegerMatrix,
    pub surfaces: Vec<SurfaceClass>,
    pub dual_labels: Vec<String>,
}

impl ModelFile {
    pub fn load(path: &std::path::Path) -> Result<ModelFile> {
        let text =
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
    }

    pub fn resolve(&self) -> Result<LoadedModel> {
        let form = IntegerMatrix::from_rows(&self.form);
        anyhow::ensure!(form.is_square(), "form matrix must be square");
        let rank = form.rows();
        let surfaces = self
            .surfaces
            .iter()
            .map(|s| {
                anyhow::ensure!(
                    s.vector.len() == rank,
                    "surface {:?} vector length {} does not match form rank {rank}",
                    s.label,
                    s.vector.len()
                );
                let vector: Vec<BigInt> = s.vector.iter().map(|&x| BigInt::from(x)).collect();
                Ok(SurfaceClass::new(&s.label, s.genus, vector, &form))
            })
            .collect::<Result<Vec<_>>>()?;
        let dual_labels = match &self.dual_labels {
            Some(labels) => {
                anyhow::ensure!(
                    labels.len() == rank,
                    "expected {rank} dual labels, got {}",
                    labels.len()
                );
                labels.clone()
            }
            None => (0..rank).map(|i| format!("x{}", i + 1)).collect(),
        };
        Ok(LoadedModel {
            euler: self.euler,
            signature: self.signature,
            form,
            surfaces,
            dual_labels,
        })
    }
}

pub fn load_matrix(path: &std::path::Path) -> Result<IntegerMatrix> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    IntegerMatrix::parse_literal(&text).with_context(|| format!("parsing {}", path.display()))
}
