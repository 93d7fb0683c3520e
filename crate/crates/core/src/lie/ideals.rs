//! Ideal calculus on structure-constant algebras.

use super::algebra::{bracket_spaces, brackets_within, LieAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, Subspace};

/// A linear map between algebras, `target_dim x source_dim`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraMap {
    matrix: Matrix,
}

impl AlgebraMap {
    pub fn new(matrix: Matrix) -> Self {
        AlgebraMap { matrix }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn source_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn target_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        self.matrix.apply(v)
    }

    pub fn kernel(&self) -> Subspace {
        self.matrix.kernel()
    }

    pub fn image(&self) -> Subspace {
        self.matrix.image()
    }

    pub fn is_surjective(&self) -> bool {
        self.matrix.rank() == self.target_dim()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &AlgebraMap) -> Result<AlgebraMap> {
        Ok(AlgebraMap { matrix: other.matrix.mul(&self.matrix)? })
    }

    /// Checks `f([e_i, e_j]) = [f(e_i), f(e_j)]` on all basis pairs.
    pub fn is_homomorphism(&self, source: &LieAlgebra, target: &LieAlgebra) -> Result<bool> {
        let (n, m) = (source.dim(), target.dim());
        if self.source_dim() != n || self.target_dim() != m {
            return Ok(false);
        }
        let images: Vec<Vec<Scalar>> = (0..n).map(|j| self.matrix.column(j)).collect();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self.apply(&source.bracket_basis(i, j))?;
                let rhs = target.bracket(&images[i], &images[j])?;
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

impl LieAlgebra {
    /// `L² = [L, L]`.
    pub fn derived_subalgebra(&self) -> Subspace {
        let n = self.dim();
        let vectors = self.nonzero_brackets().map(|(_, _, s)| {
            let mut v = self.field().zero_vec(n);
            for (k, x) in s {
                v[*k] = x.clone();
            }
            v
        });
        Subspace::span(self.field(), n, vectors).expect("table vectors are homogeneous")
    }

    /// `{x : [x, L] ⊆ s}`; with `s = 0` this is the center.
    pub fn centralizer_modulo(&self, s: &Subspace) -> Result<Subspace> {
        let n = self.dim();
        if s.ambient_dim() != n {
            return Err(Error::DimensionMismatch { expected: n, found: s.ambient_dim() });
        }
        let qc = s.quotient_coords(&Subspace::full(self.field(), n))?;
        let proj = qc.matrix();
        let k = proj.rows();
        // Row (j, t): x ↦ t-th quotient coordinate of [x, e_j].
        let mut rows = Vec::with_capacity(n * k);
        let images: Vec<Vec<Vec<Scalar>>> = (0..n)
            .map(|j| (0..n).map(|i| proj.apply(&self.bracket_basis(i, j))).collect::<Result<_>>())
            .collect::<Result<_>>()?;
        for img in &images {
            for t in 0..k {
                rows.push(img.iter().map(|col| col[t].clone()).collect());
            }
        }
        Ok(Matrix::from_rows(self.field(), n, rows)?.kernel())
    }

    pub fn center(&self) -> Subspace {
        self.centralizer_modulo(&Subspace::zero(self.field(), self.dim())).expect("matching dimensions")
    }

    /// `{x : [x, s] = 0}`.
    pub fn centralizer_of(&self, s: &Subspace) -> Result<Subspace> {
        let n = self.dim();
        let mut rows = Vec::new();
        for v in s.basis_vectors() {
            let ad = self.ad_matrix(v)?;
            // [x, v] = -ad(v) x, so the kernel of ad(v) is what we need.
            rows.extend(ad.row_vecs());
        }
        if rows.is_empty() {
            return Ok(Subspace::full(self.field(), n));
        }
        Ok(Matrix::from_rows(self.field(), n, rows)?.kernel())
    }

    /// `γ_1 = L ⊇ γ_2 = L² ⊇ …`, listed until it stabilizes (the last
    /// entry repeats only if the algebra is not nilpotent).
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full = Subspace::full(self.field(), self.dim());
        let mut series = vec![full.clone()];
        loop {
            let last = series.last().unwrap();
            if last.is_zero() {
                break;
            }
            let next = bracket_spaces(self, last, &full).expect("same algebra");
            let stable = next.dim() == last.dim();
            series.push(next);
            if stable {
                break;
            }
        }
        series
    }

    /// `Z_1 = Z(L) ⊆ Z_2 ⊆ …`, up to stabilization.
    pub fn upper_central_series(&self) -> Vec<Subspace> {
        let mut series = vec![self.center()];
        loop {
            let last = series.last().unwrap();
            let next = self.centralizer_modulo(last).expect("same algebra");
            if next.dim() == last.dim() {
                break;
            }
            series.push(next);
        }
        series
    }

    /// Largest `c` with `γ_c ≠ 0`; 0 for the zero algebra.
    pub fn nilpotency_class(&self) -> Result<usize> {
        let series = self.lower_central_series();
        if !series.last().unwrap().is_zero() {
            return Err(Error::NotNilpotent);
        }
        Ok(series.len() - 1)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_class().is_ok()
    }

    /// `dim L − dim L²`, the size of a minimal generating set of a nilpotent algebra.
    pub fn minimal_generator_count(&self) -> Result<usize> {
        self.nilpotency_class()?;
        Ok(self.dim() - self.derived_subalgebra().dim())
    }

    pub fn is_ideal(&self, s: &Subspace) -> Result<bool> {
        if s.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: s.ambient_dim() });
        }
        let full = Subspace::full(self.field(), self.dim());
        brackets_within(self, s, &full, s)
    }

    pub fn is_central(&self, s: &Subspace) -> Result<bool> {
        s.is_subspace_of(&self.center())
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> Result<bool> {
        if s.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: s.ambient_dim() });
        }
        brackets_within(self, s, s, s)
    }

    /// Quotient by an ideal, with the projection. The quotient basis is the
    /// images of the basis vectors at the non-pivot columns of `ideal`.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(LieAlgebra, AlgebraMap)> {
        if ideal.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: ideal.ambient_dim() });
        }
        if !self.is_ideal(ideal)? {
            return Err(Error::NotAnIdeal);
        }
        Ok(self.quotient_unchecked(ideal))
    }

    /// [`quotient`](Self::quotient) without the ideal check, for callers
    /// that established it already.
    pub(crate) fn quotient_unchecked(&self, ideal: &Subspace) -> (LieAlgebra, AlgebraMap) {
        let n = self.dim();
        let free = ideal.free_columns();
        let k = free.len();
        let mut proj = Matrix::zeros(self.field(), k, n);
        for (t, &f) in free.iter().enumerate() {
            proj.set(t, f, self.field().one());
            for (row, &p) in ideal.basis_vectors().iter().zip(ideal.pivots()) {
                if !row[f].is_zero() {
                    proj.set(t, p, -&row[f]);
                }
            }
        }
        let mut brackets = Vec::new();
        for a in 0..k {
            for b in a + 1..k {
                let w = self.bracket_basis(free[a], free[b]);
                if w.iter().any(|x| !x.is_zero()) {
                    brackets.push(((a, b), proj.apply(&w).expect("dimensions agree")));
                }
            }
        }
        let labels = free.iter().map(|&f| self.labels()[f].clone()).collect();
        let q = LieAlgebra::new(self.field(), labels, brackets).expect("well-formed quotient table");
        (q, AlgebraMap::new(proj))
    }

    /// The subalgebra spanned by `s`, in the basis of `s`'s RREF rows, with
    /// its inclusion map.
    pub fn subalgebra(&self, s: &Subspace) -> Result<(LieAlgebra, AlgebraMap)> {
        if !self.is_subalgebra(s)? {
            return Err(Error::NotApplicable("subspace is not closed under the bracket".into()));
        }
        let rows = s.basis_vectors();
        let k = rows.len();
        let mut brackets = Vec::new();
        for a in 0..k {
            for b in a + 1..k {
                let w = self.bracket(&rows[a], &rows[b])?;
                if w.iter().any(|x| !x.is_zero()) {
                    brackets.push(((a, b), s.coordinates(&w)?.expect("closed subalgebra")));
                }
            }
        }
        let labels = super::algebra::default_labels(k);
        let sub = LieAlgebra::new(self.field(), labels, brackets)?;
        let incl = Matrix::from_columns(self.field(), self.dim(), rows)?;
        Ok((sub, AlgebraMap::new(incl)))
    }
}
