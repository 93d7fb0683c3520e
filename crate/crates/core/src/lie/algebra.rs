use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{Echelon, Field, Matrix, Scalar, Subspace};

/// Sparse vector: `(index, coefficient)` pairs, sorted by index, no zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

/// `(i, j, &[(k, c)])` for `[x_i, x_j] = sum c * x_k`, 1-based.
pub type IntRelation<'a> = (usize, usize, &'a [(usize, i64)]);

/// A finite-dimensional Lie algebra given by structure constants.
///
/// Only brackets `[e_i, e_j]` with `i < j` are stored; the rest follow
/// from antisymmetry. Construction does not check the Jacobi identity,
/// call [`LieAlgebra::validate`] for that.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    field: Field,
    labels: Vec<String>,
    table: Vec<SparseVec>,
}

/// First basis triple at which the Jacobi identity fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub residual: Vec<Scalar>,
}

impl fmt::Display for JacobiViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r: Vec<String> = self.residual.iter().map(ToString::to_string).collect();
        write!(
            f,
            "Jacobi identity fails for basis triple ({}, {}, {}): residual [{}]",
            self.i + 1,
            self.j + 1,
            self.k + 1,
            r.join(", ")
        )
    }
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

pub fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

impl LieAlgebra {
    /// Builds an algebra from 0-based bracket data `((i, j), [e_i, e_j])`.
    ///
    /// Pairs with `i > j` are stored negated; `i == j` must have a zero
    /// output. Repeated pairs are rejected.
    pub fn new<I>(field: Field, labels: Vec<String>, brackets: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), Vec<Scalar>)>,
    {
        let n = labels.len();
        let mut table = vec![SparseVec::new(); n * n.saturating_sub(1) / 2];
        let mut seen = vec![false; table.len()];
        for ((i, j), out) in brackets {
            if i >= n || j >= n {
                return Err(Error::DimensionMismatch { expected: n, found: i.max(j) + 1 });
            }
            if out.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: out.len() });
            }
            if out.iter().any(|x| x.field() != field) {
                return Err(Error::MixedFields);
            }
            if i == j {
                if out.iter().any(|x| !x.is_zero()) {
                    return Err(Error::Parse(format!("nonzero bracket [e{0}, e{0}]", i + 1)));
                }
                continue;
            }
            let (a, b, negate) = if i < j { (i, j, false) } else { (j, i, true) };
            let idx = pair_index(n, a, b);
            if seen[idx] {
                return Err(Error::Parse(format!("bracket [e{}, e{}] given twice", a + 1, b + 1)));
            }
            seen[idx] = true;
            table[idx] = out
                .into_iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(k, x)| (k, if negate { -x } else { x }))
                .collect();
        }
        Ok(LieAlgebra { field, labels, table })
    }

    /// Builds an algebra from 1-based integer relations
    /// `[x_i, x_j] = sum c * x_k`, written `(i, j, &[(k, c)])`.
    pub fn from_relations(field: Field, dim: usize, relations: &[IntRelation<'_>]) -> Result<Self> {
        let brackets = relations.iter().map(|&(i, j, out)| {
            let mut v = field.zero_vec(dim);
            for &(k, c) in out {
                v[k - 1] = &v[k - 1] + &field.from_int(c);
            }
            ((i - 1, j - 1), v)
        });
        Self::new(field, default_labels(dim), brackets)
    }

    pub fn abelian(field: Field, n: usize) -> Self {
        LieAlgebra { field, labels: default_labels(n), table: vec![SparseVec::new(); n * n.saturating_sub(1) / 2] }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: labels.len() });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(Vec::is_empty)
    }

    /// Stored constants for `i < j`.
    pub fn structure(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[pair_index(self.dim(), i, j)]
    }

    /// Nonzero stored brackets `(i, j, [e_i, e_j])` with `i < j`.
    pub fn nonzero_brackets(&self) -> impl Iterator<Item = (usize, usize, &[(usize, Scalar)])> + '_ {
        let n = self.dim();
        (0..n)
            .flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
            .map(move |(i, j)| (i, j, self.structure(i, j)))
            .filter(|(_, _, s)| !s.is_empty())
    }

    /// `[e_i, e_j]` as a dense vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut v = self.field.zero_vec(self.dim());
        self.add_basis_bracket(&mut v, i, j, &self.field.one());
        v
    }

    /// `acc += c * [e_i, e_j]`.
    fn add_basis_bracket(&self, acc: &mut [Scalar], i: usize, j: usize, c: &Scalar) {
        if i == j {
            return;
        }
        let (a, b, c) = if i < j { (i, j, c.clone()) } else { (j, i, -c) };
        for (k, x) in self.structure(a, b) {
            acc[*k] = &acc[*k] + &(&c * x);
        }
    }

    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vec<Scalar>> {
        let n = self.dim();
        for w in [u, v] {
            if w.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: w.len() });
            }
            if w.iter().any(|x| x.field() != self.field) {
                return Err(Error::MixedFields);
            }
        }
        let nu: Vec<usize> = (0..n).filter(|&i| !u[i].is_zero()).collect();
        let nv: Vec<usize> = (0..n).filter(|&i| !v[i].is_zero()).collect();
        let mut acc = self.field.zero_vec(n);
        for &i in &nu {
            for &j in &nv {
                if i != j {
                    self.add_basis_bracket(&mut acc, i, j, &(&u[i] * &v[j]));
                }
            }
        }
        Ok(acc)
    }

    /// Matrix of `ad(x) = [x, -]` acting on column vectors.
    pub fn ad_matrix(&self, x: &[Scalar]) -> Result<Matrix> {
        let n = self.dim();
        let cols: Vec<Vec<Scalar>> =
            (0..n).map(|j| self.bracket(x, &self.field.unit_vec(n, j))).collect::<Result<_>>()?;
        Matrix::from_columns(self.field, n, &cols)
    }

    /// Checks antisymmetry and the Jacobi identity on every basis triple.
    pub fn validate(&self) -> Result<(), JacobiViolation> {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let mut acc = self.field.zero_vec(n);
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        // [e_a, [e_b, e_c]]
                        let inner = self.bracket_basis(b, c);
                        for (m, x) in inner.iter().enumerate() {
                            if !x.is_zero() {
                                self.add_basis_bracket(&mut acc, a, m, x);
                            }
                        }
                    }
                    if acc.iter().any(|x| !x.is_zero()) {
                        return Err(JacobiViolation { i, j, k, residual: acc });
                    }
                }
            }
        }
        Ok(())
    }

    /// Like [`validate`](Self::validate) but mapped into the crate error.
    pub fn validated(self) -> Result<Self> {
        match self.validate() {
            Ok(()) => Ok(self),
            Err(v) => Err(Error::JacobiViolation { i: v.i + 1, j: v.j + 1, k: v.k + 1 }),
        }
    }

    /// Direct sum `self ⊕ other`; labels are prefixed `a.` and `b.`.
    pub fn direct_sum(&self, other: &LieAlgebra) -> Result<LieAlgebra> {
        if self.field != other.field {
            return Err(Error::MixedFields);
        }
        let (n, m) = (self.dim(), other.dim());
        let labels =
            self.labels.iter().map(|l| format!("a.{l}")).chain(other.labels.iter().map(|l| format!("b.{l}"))).collect();
        let shift = |s: &[(usize, Scalar)], off: usize| {
            let mut v = self.field.zero_vec(n + m);
            for (k, x) in s {
                v[k + off] = x.clone();
            }
            v
        };
        let brackets = self
            .nonzero_brackets()
            .map(|(i, j, s)| ((i, j), shift(s, 0)))
            .chain(other.nonzero_brackets().map(|(i, j, s)| ((i + n, j + n), shift(s, n))))
            .collect::<Vec<_>>();
        LieAlgebra::new(self.field, labels, brackets)
    }

    /// Algebra in the basis given by the rows of `basis` (row `i` is the
    /// new `e'_i` in old coordinates). Fails if `basis` is singular.
    pub fn change_basis(&self, basis: &Matrix) -> Result<LieAlgebra> {
        let n = self.dim();
        if basis.rows() != n || basis.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, found: basis.rows() });
        }
        let inv = basis.inverse().ok_or(Error::NotApplicable("singular basis change".into()))?;
        // Coordinates of w in the new basis: c with c * basis = w, i.e. c = w * inv.
        let inv_t = inv.transpose();
        let rows = basis.row_vecs();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let w = self.bracket(&rows[i], &rows[j])?;
                if w.iter().any(|x| !x.is_zero()) {
                    brackets.push(((i, j), inv_t.apply(&w)?));
                }
            }
        }
        LieAlgebra::new(self.field, default_labels(n), brackets)
    }
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra(dim {}, {}", self.dim(), self.field)?;
        for (i, j, s) in self.nonzero_brackets() {
            let terms: Vec<String> = s.iter().map(|(k, c)| format!("{c}*{}", self.labels[*k])).collect();
            write!(f, "; [{}, {}] = {}", self.labels[i], self.labels[j], terms.join(" + "))?;
        }
        write!(f, ")")
    }
}

/// Span of all `[u, v]` with `u` in `a`, `v` in `b`.
pub fn bracket_spaces(l: &LieAlgebra, a: &Subspace, b: &Subspace) -> Result<Subspace> {
    let mut out = Echelon::new(l.field(), l.dim());
    for u in a.basis_vectors() {
        for v in b.basis_vectors() {
            out.insert(l.bracket(u, v)?);
        }
    }
    Ok(out.into_subspace())
}

/// Whether every `[u, v]`, `u ∈ a`, `v ∈ b`, lies in `target`.
pub(crate) fn brackets_within(l: &LieAlgebra, a: &Subspace, b: &Subspace, target: &Subspace) -> Result<bool> {
    for u in a.basis_vectors() {
        for v in b.basis_vectors() {
            if !target.contains(&l.bracket(u, v)?)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
