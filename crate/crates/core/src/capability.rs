//! Capability verdicts: `L` is capable exactly when `Z∧(L) = 0`.

use serde::Serialize;

use crate::catalog::{build, list_up_to, CatalogKey};
use crate::covers::{exterior_center, exterior_cover, exterior_square};
use crate::error::{Error, Result};
use crate::homology::{induced_map_is_injective, multiplier_dim};
use crate::lie::LieAlgebra;
use crate::linalg::{Scalar, Subspace};
use crate::par::{self, Execution};
use crate::recognize::{recognize, Fingerprint};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapabilityReport {
    /// Catalog key or fingerprint of the algebra.
    pub subject: String,
    pub exterior_center_dim: usize,
    pub capable: bool,
    /// Basis of `Z∧(L)`; empty exactly when capable.
    pub witnesses: Vec<Vec<Scalar>>,
}

pub fn is_capable(l: &LieAlgebra) -> Result<CapabilityReport> {
    report_for(Fingerprint::of(l).to_string(), l)
}

fn report_for(subject: String, l: &LieAlgebra) -> Result<CapabilityReport> {
    let z = exterior_center(l)?;
    Ok(CapabilityReport {
        subject,
        exterior_center_dim: z.dim(),
        capable: z.is_zero(),
        witnesses: z.basis_vectors().to_vec(),
    })
}

/// `dim M(L) = dim M(L/K) − dim(L² ∩ K)` for a central line `K`, which holds
/// exactly when `K ⊆ Z∧(L)`.
pub fn dagger_test(l: &LieAlgebra, k: &Subspace) -> Result<bool> {
    if k.ambient_dim() != l.dim() {
        return Err(Error::DimensionMismatch { expected: l.dim(), found: k.ambient_dim() });
    }
    if k.dim() != 1 {
        return Err(Error::WrongDimension { expected: 1, found: k.dim() });
    }
    if !l.is_central(k)? {
        return Err(Error::NotCentral);
    }
    let (q, _) = l.quotient(k)?;
    let meet = l.derived_subalgebra().intersect(k)?.dim();
    Ok(multiplier_dim(l) + meet == multiplier_dim(&q))
}

/// Central lines used to probe `Z(L)`: each RREF basis vector of the center,
/// the sums of consecutive ones, and the sum of all of them.
pub fn test_central_lines(l: &LieAlgebra) -> Vec<Subspace> {
    let f = l.field();
    let n = l.dim();
    let z = l.center();
    let b = z.basis_vectors();
    let mut vectors: Vec<Vec<Scalar>> = b.to_vec();
    let add = |u: &[Scalar], v: &[Scalar]| u.iter().zip(v).map(|(x, y)| x + y).collect::<Vec<_>>();
    for w in b.windows(2) {
        vectors.push(add(&w[0], &w[1]));
    }
    if b.len() > 2 {
        vectors.push(b.iter().fold(f.zero_vec(n), |acc, v| add(&acc, v)));
    }
    vectors.into_iter().map(|v| Subspace::span(f, n, [v]).expect("sizes")).collect()
}

/// The three capability indicators for one central line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TriangleRow {
    pub dagger: bool,
    pub in_exterior_center: bool,
    pub injective: bool,
}

impl TriangleRow {
    pub fn agrees(&self) -> bool {
        self.dagger == self.in_exterior_center && self.in_exterior_center == self.injective
    }
}

pub fn consistency_triangle(l: &LieAlgebra) -> Result<Vec<TriangleRow>> {
    let z = exterior_center(l)?;
    test_central_lines(l)
        .iter()
        .map(|k| {
            Ok(TriangleRow {
                dagger: dagger_test(l, k)?,
                in_exterior_center: k.is_subspace_of(&z)?,
                injective: induced_map_is_injective(l, k)?,
            })
        })
        .collect()
}

fn checked_keys(max_dim: usize, epsilons: &[crate::linalg::Rational]) -> Result<Vec<CatalogKey>> {
    if max_dim > 6 {
        return Err(Error::UnsupportedDimension(max_dim));
    }
    list_up_to(max_dim, epsilons)
}

/// Per-key capability reports for the whole catalog up to `max_dim`.
pub fn catalog_capability(
    max_dim: usize,
    epsilons: &[crate::linalg::Rational],
    exec: Execution,
) -> Result<Vec<(CatalogKey, CapabilityReport)>> {
    let keys = checked_keys(max_dim, epsilons)?;
    par::map(exec, &keys, |k| {
        let l = build(k)?.algebra;
        Ok((k.clone(), report_for(k.to_string(), &l)?))
    })
    .into_iter()
    .collect()
}

/// Catalog entries of dimension `≤ max_dim` with `Z∧(L) ≠ 0`.
pub fn noncapable_census(
    max_dim: usize,
    epsilons: &[crate::linalg::Rational],
    exec: Execution,
) -> Result<Vec<CatalogKey>> {
    Ok(catalog_capability(max_dim, epsilons, exec)?.into_iter().filter(|(_, r)| !r.capable).map(|(k, _)| k).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub key: CatalogKey,
    pub square_label: String,
    pub square_exterior_center_dim: usize,
}

/// `Z∧(L∧L)` for every nonabelian catalog entry up to `max_dim`.
pub fn exterior_square_capability_sweep(
    max_dim: usize,
    epsilons: &[crate::linalg::Rational],
    exec: Execution,
) -> Result<Vec<SweepRow>> {
    let keys = checked_keys(max_dim, epsilons)?;
    let rows: Vec<Result<Option<SweepRow>>> = par::map(exec, &keys, |k| {
        let l = build(k)?.algebra;
        if l.is_abelian() {
            return Ok(None);
        }
        let w = exterior_square(&l)?;
        Ok(Some(SweepRow {
            key: k.clone(),
            square_label: recognize(&w).to_string(),
            square_exterior_center_dim: exterior_center(&w)?.dim(),
        }))
    });
    Ok(rows.into_iter().collect::<Result<Vec<_>>>()?.into_iter().flatten().collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Theorem2Outcome {
    /// `dim Z∧(L∧L) ≤ dim M(L/Z∧(L))`.
    Holds {
        lhs: usize,
        rhs: usize,
    },
    Violated {
        lhs: usize,
        rhs: usize,
    },
    /// The hypothesis is not met; this is not a failure.
    Skipped {
        reason: String,
    },
}

/// Dimension form of the bound `Z∧(L∧L) ↪ M(L/Z∧(L))` under the hypothesis
/// that `L²/Z∧(L)` is capable.
pub fn theorem2_bound_check(l: &LieAlgebra) -> Result<Theorem2Outcome> {
    if l.is_abelian() {
        return Ok(Theorem2Outcome::Skipped { reason: "abelian".into() });
    }
    if l.dim() < 3 {
        return Ok(Theorem2Outcome::Skipped { reason: "dimension below 3".into() });
    }
    let cover = exterior_cover(l)?;
    let zl = cover.exterior_center();
    let (q, _) = l.quotient(&zl)?;
    let (derived_mod, _) = q.subalgebra(&q.derived_subalgebra())?;
    if !exterior_center(&derived_mod)?.is_zero() {
        return Ok(Theorem2Outcome::Skipped { reason: "L²/Z∧(L) is not capable".into() });
    }
    let lhs = exterior_center(&cover.exterior_square())?.dim();
    let rhs = multiplier_dim(&q);
    Ok(if lhs <= rhs { Theorem2Outcome::Holds { lhs, rhs } } else { Theorem2Outcome::Violated { lhs, rhs } })
}
