use serde::Serialize;

use crate::covers::{diagonal_square_dim, exterior_cover};
use crate::error::Result;
use crate::homology::schur_multiplier;
use crate::lie::{AlgebraJson, LieAlgebra};
use crate::recognize::recognize;

/// The invariants of one algebra. Field order is the serialization order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub key: String,
    pub field: String,
    pub dim: usize,
    pub derived_dim: usize,
    pub class: usize,
    pub center_dim: usize,
    pub multiplier_dim: usize,
    pub exterior_square_dim: usize,
    pub exterior_square: String,
    pub diagonal_square_dim: usize,
    pub tensor_square_dim: usize,
    pub tensor_square: String,
    pub exterior_center_dim: usize,
    pub capable: bool,
    pub algebra: AlgebraJson,
}

pub const CSV_HEADER: [&str; 14] = [
    "key",
    "field",
    "dim",
    "derived_dim",
    "class",
    "center_dim",
    "multiplier_dim",
    "exterior_square_dim",
    "exterior_square",
    "diagonal_square_dim",
    "tensor_square_dim",
    "tensor_square",
    "exterior_center_dim",
    "capable",
];

impl InvariantReport {
    pub fn compute(key: &str, l: &LieAlgebra) -> Result<Self> {
        let class = l.nilpotency_class()?;
        let cover = exterior_cover(l)?;
        let ext = cover.exterior_square();
        let diag = diagonal_square_dim(l);
        let tensor = ext.direct_sum(&LieAlgebra::abelian(l.field(), diag))?;
        let zext = cover.exterior_center();
        Ok(InvariantReport {
            key: key.to_string(),
            field: l.field().to_string(),
            dim: l.dim(),
            derived_dim: l.derived_subalgebra().dim(),
            class,
            center_dim: l.center().dim(),
            multiplier_dim: schur_multiplier(l).dim,
            exterior_square_dim: ext.dim(),
            exterior_square: recognize(&ext).to_string(),
            diagonal_square_dim: diag,
            tensor_square_dim: tensor.dim(),
            tensor_square: recognize(&tensor).to_string(),
            exterior_center_dim: zext.dim(),
            capable: zext.is_zero(),
            algebra: AlgebraJson::from_algebra(l),
        })
    }

    /// `dim L⊗L = dim L∧L + dim L□L` and `dim L∧L = dim M(L) + dim L²`.
    pub fn is_consistent(&self) -> bool {
        self.tensor_square_dim == self.exterior_square_dim + self.diagonal_square_dim
            && self.exterior_square_dim == self.multiplier_dim + self.derived_dim
            && self.capable == (self.exterior_center_dim == 0)
    }

    pub fn csv_record(&self) -> Vec<String> {
        vec![
            self.key.clone(),
            self.field.clone(),
            self.dim.to_string(),
            self.derived_dim.to_string(),
            self.class.to_string(),
            self.center_dim.to_string(),
            self.multiplier_dim.to_string(),
            self.exterior_square_dim.to_string(),
            self.exterior_square.clone(),
            self.diagonal_square_dim.to_string(),
            self.tensor_square_dim.to_string(),
            self.tensor_square.clone(),
            self.exterior_center_dim.to_string(),
            self.capable.to_string(),
        ]
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn pretty(&self) -> String {
        let rows = [
            ("algebra", self.key.clone()),
            ("field", self.field.clone()),
            ("dim L", self.dim.to_string()),
            ("dim L^2", self.derived_dim.to_string()),
            ("class", self.class.to_string()),
            ("dim Z(L)", self.center_dim.to_string()),
            ("M(L)", format!("A({})", self.multiplier_dim)),
            ("L ∧ L", format!("{} (dim {})", self.exterior_square, self.exterior_square_dim)),
            ("L □ L", format!("A({})", self.diagonal_square_dim)),
            ("L ⊗ L", format!("{} (dim {})", self.tensor_square, self.tensor_square_dim)),
            ("dim Z∧(L)", self.exterior_center_dim.to_string()),
            ("capable", if self.capable { "yes" } else { "no" }.to_string()),
        ];
        let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
        rows.iter().map(|(k, v)| format!("{k}{}  {v}\n", " ".repeat(width - k.chars().count()))).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build, CatalogKey};

    #[test]
    fn heisenberg_two() {
        let l = build(&CatalogKey::indexed(5, 4)).unwrap().algebra;
        let r = InvariantReport::compute("L5_4", &l).unwrap();
        assert_eq!(r.multiplier_dim, 5);
        assert_eq!(r.exterior_square, "A(6)");
        assert_eq!(r.diagonal_square_dim, 10);
        assert_eq!(r.tensor_square, "A(16)");
        assert!(!r.capable);
        assert!(r.is_consistent());
        assert_eq!(r.csv_record().len(), CSV_HEADER.len());
        assert!(r.pretty().contains("capable"));
    }
}
