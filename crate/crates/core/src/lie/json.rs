//! JSON exchange format for algebras (1-based indices, exact coefficient strings).

use serde::{Deserialize, Serialize};

use super::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Field, Rational, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub dim: usize,
    pub labels: Vec<String>,
    pub field: FieldJson,
    pub brackets: Vec<BracketJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldJson {
    Named(String),
    Prime { p: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketJson {
    pub i: usize,
    pub j: usize,
    pub out: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub k: usize,
    pub c: String,
}

impl FieldJson {
    pub fn to_field(&self) -> Result<Field> {
        match self {
            FieldJson::Named(s) if s == "Q" => Ok(Field::Rationals),
            FieldJson::Named(s) => Err(Error::Parse(format!("unknown field `{s}`"))),
            FieldJson::Prime { p } => Field::prime(*p),
        }
    }

    pub fn from_field(field: Field) -> Self {
        match field {
            Field::Rationals => FieldJson::Named("Q".into()),
            Field::Prime(p) => FieldJson::Prime { p },
        }
    }
}

impl AlgebraJson {
    /// Structural conversion; the Jacobi identity is not checked here.
    pub fn to_algebra(&self) -> Result<LieAlgebra> {
        let field = self.field.to_field()?;
        let n = self.dim;
        if self.labels.len() != n {
            return Err(Error::Parse(format!("{} labels for dimension {n}", self.labels.len())));
        }
        let mut brackets = Vec::with_capacity(self.brackets.len());
        for b in &self.brackets {
            if b.i == 0 || b.j == 0 || b.i > n || b.j > n {
                return Err(Error::Parse(format!("bracket index ({}, {}) out of range 1..={n}", b.i, b.j)));
            }
            let mut v = field.zero_vec(n);
            for t in &b.out {
                if t.k == 0 || t.k > n {
                    return Err(Error::Parse(format!("output index {} out of range 1..={n}", t.k)));
                }
                let r: Rational = t.c.parse().map_err(|e| Error::Parse(format!("{e}")))?;
                v[t.k - 1] = &v[t.k - 1] + &field.from_rational(&r)?;
            }
            brackets.push(((b.i - 1, b.j - 1), v));
        }
        LieAlgebra::new(field, self.labels.clone(), brackets)
    }

    pub fn from_algebra(l: &LieAlgebra) -> Self {
        let brackets = l
            .nonzero_brackets()
            .map(|(i, j, s)| BracketJson {
                i: i + 1,
                j: j + 1,
                out: s.iter().map(|(k, c)| TermJson { k: k + 1, c: scalar_string(c) }).collect(),
            })
            .collect();
        AlgebraJson { dim: l.dim(), labels: l.labels().to_vec(), field: FieldJson::from_field(l.field()), brackets }
    }
}

fn scalar_string(c: &Scalar) -> String {
    c.to_string()
}

impl LieAlgebra {
    pub fn from_json_str(s: &str) -> Result<LieAlgebra> {
        let j: AlgebraJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        j.to_algebra()
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&AlgebraJson::from_algebra(self)).expect("serializable")
    }
}
