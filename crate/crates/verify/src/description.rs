//! JSON descriptions of coordinate superalgebras.
//!
//! ```json
//! {
//!   "name": "q1",
//!   "scalars": "Q",
//!   "basis": [{"label": "1", "parity": 0}, {"label": "ν", "parity": 1}],
//!   "unit": ["1", "0"],
//!   "products": [{"i": 1, "j": 1, "coefficients": {"0": "1"}}]
//! }
//! ```
//!
//! Products that are not listed are zero.

use std::collections::BTreeMap;
use std::path::Path;

use queerhom::assoc::SuperAlgebra;
use queerhom::{FieldSpec, GradedSpace, Parity, SparseVec};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// How many violations a load error lists.
pub const MAX_REPORTED: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisEntry {
    pub label: String,
    pub parity: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductEntry {
    pub i: usize,
    pub j: usize,
    /// Output index (as a decimal string key) to scalar string.
    pub coefficients: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDescription {
    pub name: String,
    pub scalars: String,
    pub basis: Vec<BasisEntry>,
    pub unit: Vec<String>,
    #[serde(default)]
    pub products: Vec<ProductEntry>,
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid algebra description ({} problem(s)):\n  {}", .0.len(), .0.join("\n  "))]
    Invalid(Vec<String>),
}

impl AlgebraDescription {
    pub fn from_json(text: &str) -> Result<Self, LoadError> {
        Ok(serde_json::from_str(text)?)
    }

    /// The description of an existing algebra, listing nonzero products only.
    pub fn from_algebra(a: &SuperAlgebra) -> Self {
        let dim = a.dim();
        let unit = (0..dim).map(|i| a.unit().get(i).map_or_else(|| "0".to_string(), ToString::to_string)).collect();
        let products = a
            .products()
            .iter()
            .map(|(&(i, j), v)| ProductEntry {
                i,
                j,
                coefficients: v.iter().map(|(k, x)| (k.to_string(), x.to_string())).collect(),
            })
            .collect();
        AlgebraDescription {
            name: a.name().to_string(),
            scalars: a.field().to_string(),
            basis: (0..dim)
                .map(|i| BasisEntry { label: a.space().label(i).to_string(), parity: a.parity(i).bit() })
                .collect(),
            unit,
            products,
        }
    }

    /// Parses every field and validates the axioms. Collects up to
    /// [`MAX_REPORTED`] problems before giving up.
    pub fn build(&self) -> Result<SuperAlgebra, LoadError> {
        let mut problems = Vec::new();
        let field: FieldSpec = match self.scalars.parse() {
            Ok(f) => f,
            Err(e) => return Err(LoadError::Invalid(vec![format!("scalars: {e}")])),
        };
        let dim = self.basis.len();
        let mut basis = Vec::with_capacity(dim);
        for (k, b) in self.basis.iter().enumerate() {
            match Parity::from_bit(b.parity) {
                Some(p) => basis.push((b.label.clone(), p)),
                None => problems.push(format!("basis[{k}] `{}`: parity must be 0 or 1, got {}", b.label, b.parity)),
            }
        }
        let space = match GradedSpace::new(basis) {
            Ok(s) => Some(s),
            Err(e) => {
                problems.push(e.to_string());
                None
            }
        };
        if self.unit.len() != dim {
            problems.push(format!("unit has {} coefficients for a basis of {dim}", self.unit.len()));
        }
        let scalar = |what: String, text: &str, problems: &mut Vec<String>| match field.parse(text) {
            Ok(x) => Some(x),
            Err(e) => {
                problems.push(format!("{what}: {e}"));
                None
            }
        };
        let unit: Vec<(usize, _)> = self
            .unit
            .iter()
            .enumerate()
            .filter_map(|(k, t)| scalar(format!("unit[{k}]"), t, &mut problems).map(|x| (k, x)))
            .collect();
        let mut products = BTreeMap::new();
        for (n, p) in self.products.iter().enumerate() {
            if p.i >= dim || p.j >= dim {
                problems.push(format!("products[{n}]: index ({}, {}) outside a basis of {dim}", p.i, p.j));
                continue;
            }
            let mut entries = Vec::new();
            for (key, text) in &p.coefficients {
                match key.parse::<usize>() {
                    Ok(k) if k < dim => {
                        if let Some(x) = scalar(format!("products[{n}][{key}]"), text, &mut problems) {
                            entries.push((k, x));
                        }
                    }
                    _ => problems.push(format!("products[{n}]: output index `{key}` outside a basis of {dim}")),
                }
            }
            if products.insert((p.i, p.j), SparseVec::from_entries(entries)).is_some() {
                problems.push(format!("products[{n}]: duplicate entry for ({}, {})", p.i, p.j));
            }
        }
        let space = match space {
            Some(s) if problems.is_empty() => s,
            _ => {
                problems.truncate(MAX_REPORTED);
                return Err(LoadError::Invalid(problems));
            }
        };
        let alg = SuperAlgebra::unchecked(&self.name, field, space, products, SparseVec::from_entries(unit));
        let report = alg.validate();
        if report.is_empty() {
            Ok(alg)
        } else {
            Err(LoadError::Invalid(report.violations.iter().take(MAX_REPORTED).map(ToString::to_string).collect()))
        }
    }
}

pub fn load_algebra(path: impl AsRef<Path>) -> Result<SuperAlgebra, LoadError> {
    let path = path.as_ref();
    let text =
        std::fs::read_to_string(path).map_err(|source| LoadError::Io { path: path.display().to_string(), source })?;
    AlgebraDescription::from_json(&text)?.build()
}
