//! Recognition of the algebra families that occur as exterior and tensor
//! squares of small nilpotent algebras: `A(k)`, `H(m)⊕A(k)`, `L5,8⊕A(k)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::catalog::{build_in, CatalogKey};
use crate::error::{Error, Result};
use crate::homology::multiplier_dim;
use crate::lie::LieAlgebra;
use crate::linalg::{Echelon, Matrix, Scalar, Subspace};

/// Isomorphism invariants of a Lie algebra. Every entry is computed from
/// canonical subspaces, so it does not depend on the chosen basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fingerprint {
    pub dim: usize,
    pub derived_dim: usize,
    pub center_dim: usize,
    /// `None` when the algebra is not nilpotent.
    pub class: Option<usize>,
    pub lower_central: Vec<usize>,
    pub upper_central: Vec<usize>,
    pub derived_center_dim: usize,
    /// `dim C_L(γ_i)` along the lower central series.
    pub centralizer_dims: Vec<usize>,
    pub multiplier_dim: usize,
}

impl Fingerprint {
    pub fn of(l: &LieAlgebra) -> Self {
        let lcs = l.lower_central_series();
        let center = l.center();
        let derived = l.derived_subalgebra();
        Fingerprint {
            dim: l.dim(),
            derived_dim: derived.dim(),
            center_dim: center.dim(),
            class: l.nilpotency_class().ok(),
            lower_central: lcs.iter().map(Subspace::dim).collect(),
            upper_central: l.upper_central_series().iter().map(Subspace::dim).collect(),
            derived_center_dim: derived.intersect(&center).expect("same ambient").dim(),
            centralizer_dims: lcs.iter().map(|g| l.centralizer_of(g).expect("same ambient").dim()).collect(),
            multiplier_dim: multiplier_dim(l),
        }
    }
}

fn dots(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(".")
}

fn undots(s: &str) -> Result<Vec<usize>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split('.').map(|t| t.parse().map_err(|_| Error::Parse(format!("bad number `{t}`")))).collect()
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let class = self.class.map_or("-".to_string(), |c| c.to_string());
        write!(
            f,
            "dim={};der={};z={};class={};lcs={};ucs={};derz={};cent={};m={}",
            self.dim,
            self.derived_dim,
            self.center_dim,
            class,
            dots(&self.lower_central),
            dots(&self.upper_central),
            self.derived_center_dim,
            dots(&self.centralizer_dims),
            self.multiplier_dim
        )
    }
}

impl FromStr for Fingerprint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut fields = std::collections::HashMap::new();
        for part in s.split(';') {
            let (k, v) = part.split_once('=').ok_or_else(|| Error::Parse(format!("bad fingerprint field `{part}`")))?;
            fields.insert(k, v);
        }
        let get =
            |k: &str| fields.get(k).copied().ok_or_else(|| Error::Parse(format!("missing fingerprint field `{k}`")));
        let num =
            |k: &str| -> Result<usize> { get(k)?.parse().map_err(|_| Error::Parse(format!("bad value for `{k}`"))) };
        let class = match get("class")? {
            "-" => None,
            c => Some(c.parse().map_err(|_| Error::Parse("bad class".into()))?),
        };
        Ok(Fingerprint {
            dim: num("dim")?,
            derived_dim: num("der")?,
            center_dim: num("z")?,
            class,
            lower_central: undots(get("lcs")?)?,
            upper_central: undots(get("ucs")?)?,
            derived_center_dim: num("derz")?,
            centralizer_dims: undots(get("cent")?)?,
            multiplier_dim: num("m")?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum IsoType {
    Abelian(usize),
    HeisenbergSum { m: usize, k: usize },
    L58Sum(usize),
    Unrecognized(Fingerprint),
}

impl IsoType {
    pub fn dim(&self) -> usize {
        match self {
            IsoType::Abelian(k) => *k,
            IsoType::HeisenbergSum { m, k } => 2 * m + 1 + k,
            IsoType::L58Sum(k) => 5 + k,
            IsoType::Unrecognized(fp) => fp.dim,
        }
    }

    /// The model algebra for a recognized label.
    pub fn model(&self, field: crate::linalg::Field) -> Option<LieAlgebra> {
        let with_abelian = |core: LieAlgebra, k: usize| {
            if k == 0 {
                core
            } else {
                core.direct_sum(&LieAlgebra::abelian(field, k)).expect("same field")
            }
        };
        match self {
            IsoType::Abelian(k) => Some(LieAlgebra::abelian(field, *k)),
            IsoType::HeisenbergSum { m, k } => {
                let h = build_in(&CatalogKey::Heisenberg(*m), field).ok()?.algebra;
                Some(with_abelian(h, *k))
            }
            IsoType::L58Sum(k) => {
                let core = build_in(&CatalogKey::indexed(5, 8), field).ok()?.algebra;
                Some(with_abelian(core, *k))
            }
            IsoType::Unrecognized(_) => None,
        }
    }
}

impl fmt::Display for IsoType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsoType::Abelian(k) => write!(f, "A({k})"),
            IsoType::HeisenbergSum { m, k: 0 } => write!(f, "H({m})"),
            IsoType::HeisenbergSum { m, k } => write!(f, "H({m})+A({k})"),
            IsoType::L58Sum(0) => write!(f, "L5_8"),
            IsoType::L58Sum(k) => write!(f, "L5_8+A({k})"),
            IsoType::Unrecognized(fp) => write!(f, "UNRECOGNIZED[{fp}]"),
        }
    }
}

fn parenthesized(s: &str, head: &str) -> Option<usize> {
    s.strip_prefix(head)?.strip_prefix('(')?.strip_suffix(')')?.parse().ok()
}

impl FromStr for IsoType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(fp) = s.strip_prefix("UNRECOGNIZED[").and_then(|r| r.strip_suffix(']')) {
            return Ok(IsoType::Unrecognized(fp.parse()?));
        }
        let (core, k) = match s.split_once('+') {
            Some((core, rest)) => {
                let k = parenthesized(rest, "A").ok_or_else(|| Error::Parse(format!("bad label `{s}`")))?;
                (core, Some(k))
            }
            None => (s, None),
        };
        if let Some(n) = parenthesized(core, "A") {
            return match k {
                None => Ok(IsoType::Abelian(n)),
                Some(_) => Err(Error::Parse(format!("bad label `{s}`"))),
            };
        }
        if let Some(m) = parenthesized(core, "H") {
            return Ok(IsoType::HeisenbergSum { m, k: k.unwrap_or(0) });
        }
        if core == "L5_8" {
            return Ok(IsoType::L58Sum(k.unwrap_or(0)));
        }
        Err(Error::Parse(format!("bad label `{s}`")))
    }
}

/// A decomposition `L ≅ H(m) ⊕ A(k)` with the basis exhibiting it: rows
/// `u1, v1, …, um, vm, z, a1, …, ak` with `[ui, vi] = z`.
#[derive(Debug, Clone)]
pub struct HeisenbergDecomposition {
    pub m: usize,
    pub k: usize,
    pub basis: Matrix,
}

fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (x, y) in acc.iter_mut().zip(v) {
        *x = &*x + &(c * y);
    }
}

/// Symplectic reduction of the form `(x, y) ↦ [x, y] / z`.
pub fn heisenberg_decomposition(l: &LieAlgebra) -> Result<HeisenbergDecomposition> {
    let derived = l.derived_subalgebra();
    if derived.dim() != 1 {
        return Err(Error::NotApplicable(format!("dim L² = {}, expected 1", derived.dim())));
    }
    if !l.is_central(&derived)? {
        return Err(Error::NotApplicable("class exceeds 2".into()));
    }
    let f = l.field();
    let n = l.dim();
    let z = derived.basis_vectors()[0].clone();
    let p = derived.pivots()[0];
    let form = |x: &[Scalar], y: &[Scalar]| -> Scalar { l.bracket(x, y).expect("sizes")[p].clone() };

    let mut pool: Vec<Vec<Scalar>> = (0..n).map(|i| f.unit_vec(n, i)).collect();
    let mut pairs = Vec::new();
    loop {
        let hit = (0..pool.len())
            .flat_map(|a| (a + 1..pool.len()).map(move |b| (a, b)))
            .find(|&(a, b)| !form(&pool[a], &pool[b]).is_zero());
        let Some((a, b)) = hit else { break };
        let v = pool.remove(b);
        let u = pool.remove(a);
        let scale = form(&u, &v).inv();
        let v: Vec<Scalar> = v.iter().map(|x| &scale * x).collect();
        for w in pool.iter_mut() {
            let (wu, wv) = (form(w, &u), form(w, &v));
            axpy(w, &wu, &v);
            axpy(w, &-&wv, &u);
        }
        pairs.push((u, v));
    }
    // The pool now spans the radical Z(L); split it as ⟨z⟩ ⊕ complement.
    let mut radical = Echelon::new(f, n);
    radical.insert(z.clone());
    let abelian: Vec<Vec<Scalar>> = pool.into_iter().filter(|w| radical.insert(w.clone())).collect();
    let m = pairs.len();
    let k = abelian.len();
    let mut rows = Vec::with_capacity(n);
    for (u, v) in pairs {
        rows.push(u);
        rows.push(v);
    }
    rows.push(z);
    rows.extend(abelian);
    let basis = Matrix::from_rows(f, n, rows)?;
    let model = IsoType::HeisenbergSum { m, k }.model(f).expect("recognized label");
    if !same_table(&l.change_basis(&basis)?, &model) {
        return Err(Error::NotApplicable("symplectic basis does not reproduce the Heisenberg table".into()));
    }
    Ok(HeisenbergDecomposition { m, k, basis })
}

fn same_table(a: &LieAlgebra, b: &LieAlgebra) -> bool {
    a.dim() == b.dim() && a.clone().with_labels(b.labels().to_vec()).map(|x| &x == b).unwrap_or(false)
}

/// Basis `x1, …, x5, c1, …, ck` exhibiting `L ≅ L5,8 ⊕ A(k)`, if one exists.
pub fn l58_decomposition(l: &LieAlgebra) -> Option<(usize, Matrix)> {
    let f = l.field();
    let n = l.dim();
    let derived = l.derived_subalgebra();
    let center = l.center();
    if derived.dim() != 2 || !derived.is_subspace_of(&center).ok()? || n != center.dim() + 3 {
        return None;
    }
    let k = center.dim() - 2;
    let extra = derived.complement_from(&center).ok()?;
    let v: Vec<Vec<Scalar>> = center.free_columns().iter().map(|&c| f.unit_vec(n, c)).collect();
    // Kernel of Λ²V → L², spanned by a e12 + b e13 + c e23.
    let images = [l.bracket(&v[0], &v[1]).ok()?, l.bracket(&v[0], &v[2]).ok()?, l.bracket(&v[1], &v[2]).ok()?];
    let kernel = Matrix::from_columns(f, n, &images).ok()?.kernel();
    if kernel.dim() != 1 {
        return None;
    }
    let w = &kernel.basis_vectors()[0];
    // The plane W ⊂ V with ∧²W = ⟨w⟩ is the kernel of (c, −b, a).
    let functional = vec![w[2].clone(), -&w[1], w[0].clone()];
    let plane = Matrix::from_rows(f, 3, vec![functional.clone()]).ok()?.kernel();
    let combine = |t: &[Scalar]| {
        let mut out = f.zero_vec(n);
        for (c, b) in t.iter().zip(&v) {
            axpy(&mut out, c, b);
        }
        out
    };
    let outside = (0..3).find(|&i| !functional[i].is_zero())?;
    let x1 = v[outside].clone();
    let x2 = combine(&plane.basis_vectors()[0]);
    let x3 = combine(&plane.basis_vectors()[1]);
    let x4 = l.bracket(&x1, &x2).ok()?;
    let x5 = l.bracket(&x1, &x3).ok()?;
    let mut rows = vec![x1, x2, x3, x4, x5];
    rows.extend(extra);
    let basis = Matrix::from_rows(f, n, rows).ok()?;
    let model = IsoType::L58Sum(k).model(f)?;
    if same_table(&l.change_basis(&basis).ok()?, &model) {
        Some((k, basis))
    } else {
        None
    }
}

/// Identifies `L` within the three candidate families, each verified by an
/// explicit basis change onto the model table.
pub fn recognize(l: &LieAlgebra) -> IsoType {
    if l.is_abelian() {
        return IsoType::Abelian(l.dim());
    }
    let derived = l.derived_subalgebra().dim();
    if derived == 1 {
        if let Ok(h) = heisenberg_decomposition(l) {
            return IsoType::HeisenbergSum { m: h.m, k: h.k };
        }
    }
    if derived == 2 {
        if let Some((k, _)) = l58_decomposition(l) {
            return IsoType::L58Sum(k);
        }
    }
    IsoType::Unrecognized(Fingerprint::of(l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build;
    use crate::linalg::Field;

    fn alg(s: &str) -> LieAlgebra {
        build(&s.parse::<CatalogKey>().unwrap()).unwrap().algebra
    }

    #[test]
    fn labels_round_trip() {
        for s in ["A(6)", "H(1)+A(3)", "H(2)", "L5_8+A(1)", "L5_8"] {
            assert_eq!(s.parse::<IsoType>().unwrap().to_string(), s);
        }
        let fp = IsoType::Unrecognized(Fingerprint::of(&alg("L6_18")));
        assert_eq!(fp.to_string().parse::<IsoType>().unwrap(), fp);
        assert!("A(2)+A(1)".parse::<IsoType>().is_err());
    }

    #[test]
    fn heisenberg_cases() {
        let h = heisenberg_decomposition(&alg("H2")).unwrap();
        assert_eq!((h.m, h.k), (2, 0));
        let h = heisenberg_decomposition(&alg("L4_2")).unwrap();
        assert_eq!((h.m, h.k), (1, 1));
        assert!(matches!(heisenberg_decomposition(&alg("L5_8")), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn recognizes_models() {
        assert_eq!(recognize(&LieAlgebra::abelian(Field::Rationals, 7)), IsoType::Abelian(7));
        assert_eq!(recognize(&alg("L5_8")), IsoType::L58Sum(0));
        assert_eq!(recognize(&alg("L6_26")), IsoType::Unrecognized(Fingerprint::of(&alg("L6_26"))));
        assert!(matches!(recognize(&alg("L6_22(e=1)")), IsoType::Unrecognized(_)));
    }
}
