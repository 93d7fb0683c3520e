//! Schur multipliers from the Chevalley–Eilenberg complex
//! `Λ³L → Λ²L → L` with trivial coefficients.

use crate::error::{Error, Result};
use crate::lie::{AlgebraMap, LieAlgebra};
use crate::linalg::{Matrix, QuotientCoords, Scalar, Subspace};

/// Lexicographic coordinates on `Λ²` and `Λ³` of an `n`-dimensional space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExteriorBasis {
    pub n: usize,
    pub pairs: Vec<(usize, usize)>,
    pub triples: Vec<(usize, usize, usize)>,
}

impl ExteriorBasis {
    pub fn new(n: usize) -> Self {
        let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let triples = (0..n).flat_map(|i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| (i, j, k)))).collect();
        ExteriorBasis { n, pairs, triples }
    }

    /// Index of `e_i ∧ e_j` for `i < j`.
    pub fn pair_index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j);
        i * (2 * self.n - i - 1) / 2 + (j - i - 1)
    }

    /// `acc += c · (e_i ∧ e_j)`, normalizing order and sign.
    fn add_wedge(&self, acc: &mut [Scalar], i: usize, j: usize, c: &Scalar) {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => {
                let t = self.pair_index(i, j);
                acc[t] = &acc[t] + c;
            }
            std::cmp::Ordering::Greater => {
                let t = self.pair_index(j, i);
                acc[t] = &acc[t] - c;
            }
            std::cmp::Ordering::Equal => {}
        }
    }
}

/// `d₂ : Λ²L → L`, `e_i ∧ e_j ↦ [e_i, e_j]`.
pub fn ce_d2(l: &LieAlgebra) -> Matrix {
    let basis = ExteriorBasis::new(l.dim());
    let cols: Vec<Vec<Scalar>> = basis.pairs.iter().map(|&(i, j)| l.bracket_basis(i, j)).collect();
    Matrix::from_columns(l.field(), l.dim(), &cols).expect("square table")
}

/// `d₃ : Λ³L → Λ²L`, `x∧y∧z ↦ [x,y]∧z − [x,z]∧y + [y,z]∧x`.
pub fn ce_d3(l: &LieAlgebra) -> Matrix {
    let basis = ExteriorBasis::new(l.dim());
    let f = l.field();
    let one = f.one();
    let cols: Vec<Vec<Scalar>> = basis
        .triples
        .iter()
        .map(|&(x, y, z)| {
            let mut acc = f.zero_vec(basis.pairs.len());
            for (a, b, c, sign) in [(x, y, z, one.clone()), (x, z, y, -&one), (y, z, x, one.clone())] {
                for (k, coeff) in l.structure(a, b) {
                    basis.add_wedge(&mut acc, *k, c, &(coeff * &sign));
                }
            }
            acc
        })
        .collect();
    Matrix::from_columns(f, basis.pairs.len(), &cols).expect("square table")
}

/// `M(L) = ker d₂ / im d₃`, with a fixed complement of the boundaries.
#[derive(Debug, Clone)]
pub struct MultiplierResult {
    pub dim: usize,
    pub cycles: Subspace,
    pub boundaries: Subspace,
    coords: QuotientCoords,
}

impl MultiplierResult {
    /// Representative cycles whose classes form the chosen basis of `M(L)`:
    /// the earliest RREF cycles (lexicographic `Λ²` order) independent
    /// modulo the boundaries.
    pub fn basis(&self) -> &[Vec<Scalar>] {
        self.coords.section()
    }

    /// Coordinates of the class of a cycle in the chosen basis.
    pub fn class_of(&self, cycle: &[Scalar]) -> Result<Vec<Scalar>> {
        self.coords.apply(cycle)
    }
}

pub fn schur_multiplier(l: &LieAlgebra) -> MultiplierResult {
    let cycles = ce_d2(l).kernel();
    let boundaries = ce_d3(l).image();
    let coords = boundaries.quotient_coords(&cycles).expect("d2 ∘ d3 = 0");
    MultiplierResult { dim: cycles.dim() - boundaries.dim(), cycles, boundaries, coords }
}

pub fn multiplier_dim(l: &LieAlgebra) -> usize {
    let n = l.dim();
    let pairs = n * n.saturating_sub(1) / 2;
    let rank_d2 = l.derived_subalgebra().dim();
    pairs - rank_d2 - ce_d3(l).rank()
}

/// Matrix of `Λ²f : Λ²V → Λ²W` for a linear map `f : V → W`.
pub fn wedge_square(map: &AlgebraMap) -> Matrix {
    let m = map.matrix();
    let (src, tgt) = (ExteriorBasis::new(m.cols()), ExteriorBasis::new(m.rows()));
    let f = m.field();
    let cols: Vec<Vec<Scalar>> = src
        .pairs
        .iter()
        .map(|&(i, j)| {
            let (fi, fj) = (m.column(i), m.column(j));
            let mut acc = f.zero_vec(tgt.pairs.len());
            for (a, b) in &tgt.pairs {
                let c = &(&fi[*a] * &fj[*b]) - &(&fi[*b] * &fj[*a]);
                if !c.is_zero() {
                    acc[tgt.pair_index(*a, *b)] = c;
                }
            }
            acc
        })
        .collect();
    Matrix::from_columns(f, tgt.pairs.len(), &cols).expect("consistent sizes")
}

/// Matrix of `M(L) → M(L/N)` for a central ideal `N`, in the chosen bases.
pub fn induced_multiplier_map(l: &LieAlgebra, n: &Subspace) -> Result<Matrix> {
    if n.ambient_dim() != l.dim() {
        return Err(Error::DimensionMismatch { expected: l.dim(), found: n.ambient_dim() });
    }
    if !l.is_central(n)? {
        return Err(Error::NotCentral);
    }
    let (q, proj) = l.quotient_unchecked(n);
    let (ml, mq) = (schur_multiplier(l), schur_multiplier(&q));
    let wedge = wedge_square(&proj);
    let cols: Vec<Vec<Scalar>> = ml.basis().iter().map(|z| mq.class_of(&wedge.apply(z)?)).collect::<Result<_>>()?;
    Matrix::from_columns(l.field(), mq.dim, &cols)
}

pub fn induced_map_is_injective(l: &LieAlgebra, n: &Subspace) -> Result<bool> {
    let m = induced_multiplier_map(l, n)?;
    Ok(m.rank() == m.cols())
}

/// `dim (L ∧ L) = dim M(L) + dim L²`.
pub fn exterior_square_dim(l: &LieAlgebra) -> usize {
    multiplier_dim(l) + l.derived_subalgebra().dim()
}

/// `dim (L □ L) = (n−m)(n−m+1)/2` with `n = dim L`, `m = dim L²`.
pub fn diagonal_dim(l: &LieAlgebra) -> usize {
    let a = l.dim() - l.derived_subalgebra().dim();
    a * (a + 1) / 2
}

pub fn tensor_square_dim(l: &LieAlgebra) -> usize {
    exterior_square_dim(l) + diagonal_dim(l)
}

fn abelianization_dim(l: &LieAlgebra) -> usize {
    l.dim() - l.derived_subalgebra().dim()
}

/// `dim (H⊕K)∧(H⊕K) = dim H∧H + dim K∧K + dim H/H² · dim K/K²`.
pub fn kunneth_exterior_dim(h: &LieAlgebra, k: &LieAlgebra) -> usize {
    exterior_square_dim(h) + exterior_square_dim(k) + abelianization_dim(h) * abelianization_dim(k)
}

/// `dim (H⊕K)⊗(H⊕K) = dim H⊗H + dim K⊗K + dim H⊗K + dim K⊗H`, where the
/// cross terms reduce to tensor products of abelianizations.
pub fn kunneth_tensor_dim(h: &LieAlgebra, k: &LieAlgebra) -> usize {
    tensor_square_dim(h) + tensor_square_dim(k) + 2 * abelianization_dim(h) * abelianization_dim(k)
}

/// `d₂ ∘ d₃ = 0`, which holds exactly when the Jacobi identity does.
pub fn boundaries_are_cycles(l: &LieAlgebra) -> bool {
    ce_d2(l).mul(&ce_d3(l)).map(|m| m.is_zero()).unwrap_or(false)
}

/// Basis of the 2-cocycles `ω : Λ²L → F` (those vanishing on `im d₃`),
/// as row vectors in `Λ²` coordinates.
pub fn cocycles(l: &LieAlgebra) -> Subspace {
    ce_d3(l).transpose().kernel()
}

/// The central extension `L ⊕ F^s` with `[x, y] = [x, y]_L + Σ ω_t(x, y) c_t`.
/// Each `ω_t` must be a cocycle, otherwise the Jacobi identity fails.
pub fn central_extension(l: &LieAlgebra, forms: &[Vec<Scalar>]) -> Result<LieAlgebra> {
    let n = l.dim();
    let s = forms.len();
    let basis = ExteriorBasis::new(n);
    let f = l.field();
    let mut brackets = Vec::new();
    for (t, &(i, j)) in basis.pairs.iter().enumerate() {
        let mut v = f.zero_vec(n + s);
        for (k, c) in l.structure(i, j) {
            v[*k] = c.clone();
        }
        for (r, form) in forms.iter().enumerate() {
            if form.len() != basis.pairs.len() {
                return Err(Error::DimensionMismatch { expected: basis.pairs.len(), found: form.len() });
            }
            v[n + r] = form[t].clone();
        }
        if v.iter().any(|x| !x.is_zero()) {
            brackets.push(((i, j), v));
        }
    }
    let mut labels = l.labels().to_vec();
    labels.extend((1..=s).map(|r| format!("c{r}")));
    LieAlgebra::new(f, labels, brackets)?.validated()
}

/// A central extension by `s` random cocycles with small integer weights.
pub fn random_central_extension<R: rand::Rng>(l: &LieAlgebra, s: usize, rng: &mut R) -> Result<LieAlgebra> {
    let z = cocycles(l);
    let f = l.field();
    let forms: Vec<Vec<Scalar>> = (0..s)
        .map(|_| {
            let coeffs: Vec<Scalar> = (0..z.dim()).map(|_| f.from_int(rng.gen_range(-2..=2))).collect();
            z.combination(&coeffs)
        })
        .collect();
    central_extension(l, &forms)
}
