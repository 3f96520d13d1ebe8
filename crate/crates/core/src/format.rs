//! JSON algebra files and the row syntax used on the command line.
//!
//! ```json
//! {"field": "Q", "dim": 2, "basis": ["z", "z^2"],
//!  "products": [{"left": 0, "right": 0, "result": {"1": "1"}},
//!               {"left": 0, "right": 1, "result": {"1": "1"}}]}
//! ```
//!
//! `field` is `"Q"`, `"Q(i)"` or `{"GF": p}`; products not listed are zero.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::matrix::zero_vector;
use crate::exactmath::{FieldDescriptor, Scalar, Vector};
use crate::leibcore::{default_labels, LeibnizAlgebra};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldSpec {
    Named(String),
    Prime {
        #[serde(rename = "GF")]
        gf: u64,
    },
}

impl FieldSpec {
    pub fn descriptor(&self) -> Result<FieldDescriptor> {
        match self {
            FieldSpec::Named(name) => match name.as_str() {
                "Q" => Ok(FieldDescriptor::Rationals),
                "Q(i)" => Ok(FieldDescriptor::GaussianRationals),
                other => Err(Error::Parse(format!("unknown field {other:?}; expected \"Q\", \"Q(i)\" or {{\"GF\": p}}"))),
            },
            FieldSpec::Prime { gf } => FieldDescriptor::prime_field(*gf),
        }
    }

    pub fn from_descriptor(field: FieldDescriptor) -> FieldSpec {
        match field {
            FieldDescriptor::PrimeField(p) => FieldSpec::Prime { gf: u64::from(p.get()) },
            other => FieldSpec::Named(other.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductEntry {
    pub left: usize,
    pub right: usize,
    /// Basis index (as a decimal string) to coefficient.
    pub result: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub field: FieldSpec,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default)]
    pub products: Vec<ProductEntry>,
}

/// Largest dimension accepted from a file. The dense multiplication tables
/// take `dim³` scalars.
pub const MAX_FILE_DIM: usize = 256;

impl AlgebraFile {
    /// Builds the algebra without checking the Leibniz identity.
    pub fn to_unvalidated(&self) -> Result<LeibnizAlgebra> {
        let field = self.field.descriptor()?;
        if self.dim == 0 {
            return Err(Error::ZeroDimension);
        }
        if self.dim > MAX_FILE_DIM {
            return Err(Error::InvalidParameter(format!("dim {} exceeds the file limit {MAX_FILE_DIM}", self.dim)));
        }
        let mut products = Vec::with_capacity(self.products.len());
        for (n, entry) in self.products.iter().enumerate() {
            let mut row = zero_vector(field, self.dim);
            for (key, value) in &entry.result {
                let k: usize = key
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("product {n}: result key {key:?} is not an index")))?;
                if k >= self.dim {
                    return Err(Error::IndexOutOfRange { index: k, dim: self.dim });
                }
                row[k] = Scalar::parse(field, value)
                    .map_err(|e| Error::Parse(format!("product {n}, entry {key}: {e}")))?;
            }
            products.push(((entry.left, entry.right), row));
        }
        LeibnizAlgebra::new(field, self.dim, self.basis.clone(), products)
    }

    /// Builds and validates the algebra.
    pub fn to_algebra(&self) -> Result<LeibnizAlgebra> {
        let a = self.to_unvalidated()?;
        a.validate_leibniz().map_err(Error::NotLeibniz)?;
        Ok(a)
    }

    /// Canonical file: products sorted by `(left, right)`, zero entries dropped,
    /// basis labels kept only when they differ from the defaults.
    pub fn from_algebra(a: &LeibnizAlgebra) -> AlgebraFile {
        let products = a
            .products()
            .map(|(&(left, right), row)| ProductEntry {
                left,
                right,
                result: row
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k.to_string(), c.to_string()))
                    .collect(),
            })
            .collect();
        let labels = a.labels().to_vec();
        AlgebraFile {
            field: FieldSpec::from_descriptor(a.field()),
            dim: a.dim(),
            basis: (labels != default_labels(a.dim())).then_some(labels),
            products,
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("algebra files serialize");
        text.push('\n');
        text
    }
}

/// Parses and validates an algebra file.
pub fn parse_algebra_json(text: &str) -> Result<LeibnizAlgebra> {
    let file: AlgebraFile = serde_json::from_str(text)?;
    file.to_algebra()
}

pub fn load_algebra(path: &Path) -> Result<LeibnizAlgebra> {
    parse_algebra_json(&std::fs::read_to_string(path)?)
}

pub fn algebra_to_json(a: &LeibnizAlgebra) -> String {
    AlgebraFile::from_algebra(a).to_json()
}

pub fn save_algebra(a: &LeibnizAlgebra, path: &Path) -> Result<()> {
    std::fs::write(path, algebra_to_json(a))?;
    Ok(())
}

/// Rows separated by `;`, entries by `,`: `"1,0,-1;0,1,2"`.
pub fn parse_rows(field: FieldDescriptor, dim: usize, text: &str) -> Result<Vec<Vector>> {
    let mut rows = Vec::new();
    for (r, chunk) in text.split(';').enumerate() {
        if chunk.trim().is_empty() {
            continue;
        }
        let row: Vector = chunk
            .split(',')
            .map(|t| Scalar::parse(field, t))
            .collect::<Result<_>>()
            .map_err(|e| Error::Parse(format!("row {r}: {e}")))?;
        if row.len() != dim {
            return Err(Error::Parse(format!("row {r} has {} entries, expected {dim}", row.len())));
        }
        rows.push(row);
    }
    Ok(rows)
}

pub fn format_row(v: &[Scalar]) -> String {
    v.iter().map(Scalar::to_string).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    const EX1: &str = r#"{"field": "Q", "dim": 2, "basis": ["z", "z^2"],
        "products": [{"left": 0, "right": 0, "result": {"1": "1"}},
                     {"left": 0, "right": 1, "result": {"1": "1"}}]}"#;

    #[test]
    fn loads_example1() {
        let a = parse_algebra_json(EX1).unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.field(), FieldDescriptor::Rationals);
        assert_eq!(a.labels(), &["z", "z^2"]);
    }

    #[test]
    fn round_trip_is_canonical() {
        let a = parse_algebra_json(EX1).unwrap();
        let text = algebra_to_json(&a);
        let b = parse_algebra_json(&text).unwrap();
        assert_eq!(a, b);
        assert_eq!(algebra_to_json(&b), text);
        let gf = r#"{"field": {"GF": 5}, "dim": 1, "products": []}"#;
        let a = parse_algebra_json(gf).unwrap();
        assert!(algebra_to_json(&a).contains("\"GF\": 5"));
        assert!(!algebra_to_json(&a).contains("basis"));
    }

    #[test]
    fn rejects_bad_files() {
        let gaussian_in_q = EX1.replace(r#""1": "1"}}]"#, r#""1": "2i"}}]"#);
        assert!(matches!(parse_algebra_json(&gaussian_in_q), Err(Error::Parse(_))));
        let out_of_range = r#"{"field": "Q", "dim": 3, "products": [{"left": 5, "right": 0, "result": {}}]}"#;
        assert!(matches!(parse_algebra_json(out_of_range), Err(Error::IndexOutOfRange { index: 5, dim: 3 })));
        let zero = r#"{"field": "Q", "dim": 0}"#;
        assert!(matches!(parse_algebra_json(zero), Err(Error::ZeroDimension)));
        let not_leibniz = EX1.replace(r#"{"left": 0, "right": 1, "result": {"1": "1"}}"#, r#"{"left": 0, "right": 1, "result": {"0": "1"}}"#);
        assert!(matches!(parse_algebra_json(&not_leibniz), Err(Error::NotLeibniz(_))));
        let Err(Error::Json(e)) = parse_algebra_json("{\"field\": \"Q\",\n \"dim\": }") else {
            panic!()
        };
        assert_eq!(e.line(), 2);
        assert!(parse_algebra_json(r#"{"field": "R", "dim": 1}"#).is_err());
        let huge = r#"{"field": "Q", "dim": 1000000000}"#;
        assert!(matches!(parse_algebra_json(huge), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn row_syntax() {
        let q = FieldDescriptor::Rationals;
        let rows = parse_rows(q, 2, "1,-1; 0,1/2").unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(format_row(&rows[1]), "0,1/2");
        assert!(parse_rows(q, 2, "1,2,3").is_err());
        assert!(parse_rows(q, 2, "").unwrap().is_empty());
    }
}
