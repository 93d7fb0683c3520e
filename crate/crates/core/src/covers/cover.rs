//! The exterior cover `L* = F/[R,F]` of a nilpotent algebra and what it
//! carries: `L∧L`, the Hopf multiplier and the exterior center.

use rand::Rng;

use super::hall::{free_nilpotent, FreeNilpotent};
use crate::error::{Error, Result};
use crate::lie::{AlgebraMap, LieAlgebra};
use crate::linalg::{Echelon, Matrix, Scalar, Subspace};

#[derive(Debug, Clone)]
pub struct Cover {
    pub star: LieAlgebra,
    /// `L* → L`.
    pub pi: AlgebraMap,
    /// `R/[R,F]`, which equals `(R∩F²)/[R,F]` and `ker pi`.
    pub multiplier_part: Subspace,
    /// `F²/[R,F] ≅ L∧L`.
    pub derived_part: Subspace,
    pub generators: usize,
    pub free_class: usize,
    pub free_dim: usize,
}

impl Cover {
    /// `L∧L` as a standalone algebra, in the RREF basis of `derived_part`.
    pub fn exterior_square(&self) -> LieAlgebra {
        self.star.subalgebra(&self.derived_part).expect("F² is an ideal").0
    }

    /// `Z∧(L) = pi(Z(L*))`.
    pub fn exterior_center(&self) -> Subspace {
        let images =
            self.star.center().basis_vectors().iter().map(|z| self.pi.apply(z).expect("sizes")).collect::<Vec<_>>();
        Subspace::span(self.star.field(), self.pi.target_dim(), images).expect("sizes")
    }
}

/// The default lift: unit vectors at the non-pivot columns of `L²`.
pub fn default_lift(l: &LieAlgebra) -> Vec<Vec<Scalar>> {
    let f = l.field();
    l.derived_subalgebra().free_columns().iter().map(|&c| f.unit_vec(l.dim(), c)).collect()
}

/// Another minimal generating set: a random invertible recombination of the
/// default lift, shifted by random elements of `L²`.
pub fn random_lift<R: Rng>(l: &LieAlgebra, rng: &mut R) -> Vec<Vec<Scalar>> {
    let f = l.field();
    let base = default_lift(l);
    let d = base.len();
    let derived = l.derived_subalgebra();
    loop {
        let mix = Matrix::from_rows(
            f,
            d,
            (0..d).map(|_| (0..d).map(|_| f.from_int(rng.gen_range(-3..=3))).collect()).collect(),
        )
        .expect("square");
        if mix.rank() < d {
            continue;
        }
        return (0..d)
            .map(|i| {
                let mut v = f.zero_vec(l.dim());
                for (j, b) in base.iter().enumerate() {
                    let c = mix.get(i, j);
                    for (x, y) in v.iter_mut().zip(b) {
                        *x = &*x + &(c * y);
                    }
                }
                for row in derived.basis_vectors() {
                    let c = f.from_int(rng.gen_range(-2..=2));
                    for (x, y) in v.iter_mut().zip(row) {
                        *x = &*x + &(&c * y);
                    }
                }
                v
            })
            .collect();
    }
}

pub fn exterior_cover(l: &LieAlgebra) -> Result<Cover> {
    let c = l.nilpotency_class()?;
    cover_with(l, &default_lift(l), c + 1)
}

/// Builds the cover from an explicit minimal generating set inside
/// `F(d, free_class)`; `free_class` must exceed the class of `l`.
pub fn cover_with(l: &LieAlgebra, lift: &[Vec<Scalar>], free_class: usize) -> Result<Cover> {
    let c = l.nilpotency_class()?;
    let d = l.minimal_generator_count()?;
    if lift.len() != d {
        return Err(Error::WrongDimension { expected: d, found: lift.len() });
    }
    if free_class <= c {
        return Err(Error::NotApplicable(format!("free class {free_class} does not exceed class {c}")));
    }
    let f = l.field();
    let n = l.dim();
    let mut modulo = l.derived_subalgebra().echelon();
    for g in lift {
        if g.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: g.len() });
        }
        if !modulo.insert(g.clone()) {
            return Err(Error::NotApplicable("lift does not generate the algebra".into()));
        }
    }

    let free: FreeNilpotent = free_nilpotent(d, free_class, f)?;
    let fl = &free.algebra;
    let m = fl.dim();
    let mut images: Vec<Vec<Scalar>> = Vec::with_capacity(m);
    for w in &free.words {
        let img = match w.tree {
            super::hall::HallTree::Generator(g) => lift[g].clone(),
            super::hall::HallTree::Bracket(u, v) => l.bracket(&images[u], &images[v])?,
        };
        images.push(img);
    }
    let phi = Matrix::from_columns(f, n, &images)?;
    let relations = phi.kernel();

    // [R,F] is spanned by brackets of R with the generators alone, since
    // [r,[x,y]] = [[r,x],y] − [[r,y],x] and [r,x] ∈ R.
    let mut rf = Echelon::new(f, m);
    for r in relations.basis_vectors() {
        for g in 0..d {
            rf.insert(fl.bracket(r, &f.unit_vec(m, g))?);
        }
    }
    let rf = rf.into_subspace();
    debug_assert!(m > 300 || fl.is_ideal(&rf).unwrap());

    let (star, proj) = fl.quotient_unchecked(&rf);
    let kept = rf.free_columns();
    let pi_cols: Vec<Vec<Scalar>> = kept.iter().map(|&t| images[t].clone()).collect();
    let pi = AlgebraMap::new(Matrix::from_columns(f, n, &pi_cols)?);
    let project = |vs: Vec<Vec<Scalar>>| -> Result<Subspace> {
        let imgs = vs.iter().map(|v| proj.apply(v)).collect::<Result<Vec<_>>>()?;
        Subspace::span(f, star.dim(), imgs)
    };
    let multiplier_part = project(relations.basis_vectors().to_vec())?;
    let derived_part = project(free.derived_words().map(|w| f.unit_vec(m, w)).collect())?;
    Ok(Cover { star, pi, multiplier_part, derived_part, generators: d, free_class, free_dim: m })
}

pub fn exterior_square(l: &LieAlgebra) -> Result<LieAlgebra> {
    Ok(exterior_cover(l)?.exterior_square())
}

pub fn exterior_center(l: &LieAlgebra) -> Result<Subspace> {
    Ok(exterior_cover(l)?.exterior_center())
}

/// `dim L□L = (n−m)(n−m+1)/2`, `n = dim L`, `m = dim L²`.
pub fn diagonal_square_dim(l: &LieAlgebra) -> usize {
    let a = l.dim() - l.derived_subalgebra().dim();
    a * (a + 1) / 2
}

/// `L⊗L ≅ (L∧L) ⊕ (L□L)` with the diagonal part abelian.
pub fn tensor_square(l: &LieAlgebra) -> Result<LieAlgebra> {
    let ext = exterior_square(l)?;
    ext.direct_sum(&LieAlgebra::abelian(l.field(), diagonal_square_dim(l)))
}
