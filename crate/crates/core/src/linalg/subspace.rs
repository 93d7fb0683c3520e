use super::matrix::Matrix;
use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

/// Incrementally maintained reduced row echelon basis.
///
/// Rows are kept sorted by pivot column and fully reduced, so the basis
/// after any sequence of insertions is the unique RREF of their span.
#[derive(Debug, Clone)]
pub struct Echelon {
    field: Field,
    ambient: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: Field, ambient: usize) -> Self {
        Echelon { field, ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<Scalar>> {
        self.rows
    }

    /// Subtracts the span from `v` in place, leaving the normal form
    /// (zero in every pivot column).
    pub fn reduce(&self, v: &mut [Scalar]) {
        debug_assert_eq!(v.len(), self.ambient);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, r) in v[p..].iter_mut().zip(&row[p..]) {
                x.sub_mul_assign(&f, r);
            }
        }
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<Scalar>) -> bool {
        self.reduce(&mut v);
        let Some(q) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[q].inv();
        for x in v[q..].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if row[q].is_zero() {
                continue;
            }
            let f = row[q].clone();
            for (x, r) in row[q..].iter_mut().zip(&v[q..]) {
                x.sub_mul_assign(&f, r);
            }
        }
        let at = self.pivots.partition_point(|&p| p < q);
        self.pivots.insert(at, q);
        self.rows.insert(at, v);
        true
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Scalar::is_zero)
    }

    /// Basis of `{x : row . x = 0 for every row}`, i.e. the kernel of the
    /// matrix whose rows were inserted.
    pub fn null_space(&self) -> Subspace {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let vectors = (0..self.ambient).filter(|&f| !is_pivot[f]).map(|f| {
            let mut v = self.field.unit_vec(self.ambient, f);
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                v[p] = -&row[f];
            }
            v
        });
        Subspace::span(self.field, self.ambient, vectors).expect("homogeneous vectors")
    }

    pub fn into_subspace(self) -> Subspace {
        Subspace { field: self.field, ambient: self.ambient, rows: self.rows, pivots: self.pivots }
    }
}

/// A linear subspace of `field^ambient` stored by its canonical RREF basis,
/// so equal subspaces compare equal structurally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace { field, ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            rows: (0..ambient).map(|i| field.unit_vec(ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span<I>(field: Field, ambient: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        let mut ech = Echelon::new(field, ambient);
        for v in vectors {
            check_vector(field, ambient, &v)?;
            if ech.rank() < ambient {
                ech.insert(v);
            }
        }
        Ok(ech.into_subspace())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that are not pivots, in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    pub fn basis_vectors(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn basis(&self) -> Matrix {
        Matrix::from_rows(self.field, self.ambient, self.rows.clone()).expect("homogeneous rows")
    }

    pub fn echelon(&self) -> Echelon {
        Echelon { field: self.field, ambient: self.ambient, rows: self.rows.clone(), pivots: self.pivots.clone() }
    }

    /// Normal form of `v` modulo this subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        check_vector(self.field, self.ambient, v)?;
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let f = w[p].clone();
            for (x, r) in w[p..].iter_mut().zip(&row[p..]) {
                x.sub_mul_assign(&f, r);
            }
        }
        Ok(w)
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        Ok(self.reduce(v)?.iter().all(Scalar::is_zero))
    }

    /// Coefficients of `v` in the RREF basis, or `None` if `v` is not in the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    /// Linear combination of the basis rows with the given coefficients.
    pub fn combination(&self, coeffs: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.field.zero_vec(self.ambient);
        for (c, row) in coeffs.iter().zip(&self.rows) {
            if c.is_zero() {
                continue;
            }
            for (o, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *o = &*o + &(c * r);
                }
            }
        }
        out
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_compatible(other)?;
        for v in &self.rows {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let mut ech = self.echelon();
        for v in &other.rows {
            ech.insert(v.clone());
        }
        Ok(ech.into_subspace())
    }

    /// Intersection via the Zassenhaus construction.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let n = self.ambient;
        let mut ech = Echelon::new(self.field, 2 * n);
        for u in &self.rows {
            let mut row = u.clone();
            row.extend(u.iter().cloned());
            ech.insert(row);
        }
        for v in &other.rows {
            let mut row = v.clone();
            row.extend(self.field.zero_vec(n));
            ech.insert(row);
        }
        let vectors: Vec<Vec<Scalar>> =
            ech.rows().iter().zip(ech.pivots()).filter(|(_, &p)| p >= n).map(|(row, _)| row[n..].to_vec()).collect();
        Subspace::span(self.field, n, vectors)
    }

    /// Vectors of `other` (taken from its RREF basis, in order) that
    /// extend a basis of `self` to a basis of `self + other`.
    pub fn complement_from(&self, other: &Subspace) -> Result<Vec<Vec<Scalar>>> {
        self.check_compatible(other)?;
        let mut ech = self.echelon();
        Ok(other.rows.iter().filter(|v| ech.insert((*v).clone())).cloned().collect())
    }

    /// Coordinates on `w / self`, for `self ⊆ w`.
    pub fn quotient_coords(&self, w: &Subspace) -> Result<QuotientCoords> {
        if !self.is_subspace_of(w)? {
            return Err(Error::NotContained);
        }
        let complement = self.complement_from(w)?;
        let dw = w.dim();
        let du = self.dim();
        // S: rows of (U basis ++ complement) written in W's RREF coordinates.
        let s_rows: Vec<Vec<Scalar>> =
            self.rows.iter().chain(&complement).map(|v| w.pivots.iter().map(|&p| v[p].clone()).collect()).collect();
        let s = Matrix::from_rows(self.field, dw, s_rows)?;
        let s_inv = s.inverse().expect("basis change within W is invertible");
        let k = dw - du;
        let mut map = Matrix::zeros(self.field, k, self.ambient);
        for (t, &pc) in w.pivots.iter().enumerate() {
            for j in 0..k {
                map.set(j, pc, s_inv.get(t, du + j).clone());
            }
        }
        Ok(QuotientCoords { map, domain: w.clone(), complement })
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        if self.field != other.field {
            return Err(Error::MixedFields);
        }
        Ok(())
    }
}

fn check_vector(field: Field, ambient: usize, v: &[Scalar]) -> Result<()> {
    if v.len() != ambient {
        return Err(Error::DimensionMismatch { expected: ambient, found: v.len() });
    }
    if v.iter().any(|x| x.field() != field) {
        return Err(Error::MixedFields);
    }
    Ok(())
}

/// Linear coordinates on a quotient `W / U`.
#[derive(Debug, Clone)]
pub struct QuotientCoords {
    map: Matrix,
    domain: Subspace,
    complement: Vec<Vec<Scalar>>,
}

impl QuotientCoords {
    pub fn dim(&self) -> usize {
        self.map.rows()
    }

    /// Coordinate vector of `w`; fails when `w` lies outside the domain.
    pub fn apply(&self, w: &[Scalar]) -> Result<Vec<Scalar>> {
        if !self.domain.contains(w)? {
            return Err(Error::NotContained);
        }
        self.map.apply(w)
    }

    /// Vectors of the domain whose classes form the coordinate basis.
    pub fn section(&self) -> &[Vec<Scalar>] {
        &self.complement
    }

    pub fn matrix(&self) -> &Matrix {
        &self.map
    }
}
