//! Nilpotent Lie algebras of dimension at most 6, plus the abelian and
//! Heisenberg families in every size.
//!
//! Relations are 1-based: `(i, j, &[(k, c)])` reads `[x_i, x_j] = Σ c·x_k`.
//! The four parameterized entries carry an `ε` placeholder coefficient
//! (marked by [`EPS`]) that is substituted at build time.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lie::{default_labels, LieAlgebra};
use crate::linalg::{Field, Rational, Scalar};

/// Coefficient slot standing for the family parameter.
const EPS: i64 = i64::MIN;

type Relation = (usize, usize, &'static [(usize, i64)]);

/// Indices of the ε-families in dimension 6.
pub const EPSILON_FAMILIES: [usize; 4] = [19, 21, 22, 24];

/// Default sample of family parameters: degenerate, a square class, a
/// non-square class and a sign change.
pub fn default_epsilons() -> Vec<Rational> {
    vec![Rational::zero(), Rational::one(), Rational::from_int(-1), Rational::from_int(2)]
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CatalogKey {
    Abelian(usize),
    Heisenberg(usize),
    Indexed { dim: usize, index: usize, epsilon: Option<Rational> },
}

impl CatalogKey {
    pub fn indexed(dim: usize, index: usize) -> Self {
        CatalogKey::Indexed { dim, index, epsilon: None }
    }

    pub fn with_epsilon(dim: usize, index: usize, epsilon: Rational) -> Self {
        CatalogKey::Indexed { dim, index, epsilon: Some(epsilon) }
    }

    pub fn dim(&self) -> usize {
        match self {
            CatalogKey::Abelian(n) => *n,
            CatalogKey::Heisenberg(m) => 2 * m + 1,
            CatalogKey::Indexed { dim, .. } => *dim,
        }
    }

    pub fn epsilon(&self) -> Option<&Rational> {
        match self {
            CatalogKey::Indexed { epsilon, .. } => epsilon.as_ref(),
            _ => None,
        }
    }

    pub fn is_parameterized(&self) -> bool {
        matches!(self, CatalogKey::Indexed { dim: 6, index, .. } if EPSILON_FAMILIES.contains(index))
    }
}

impl fmt::Display for CatalogKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogKey::Abelian(n) => write!(f, "A{n}"),
            CatalogKey::Heisenberg(m) => write!(f, "H{m}"),
            CatalogKey::Indexed { dim, index, epsilon: None } => write!(f, "L{dim}_{index}"),
            CatalogKey::Indexed { dim, index, epsilon: Some(e) } => write!(f, "L{dim}_{index}(e={e})"),
        }
    }
}

impl FromStr for CatalogKey {
    type Err = Error;

    /// Parses `A3`, `H2`, `L5_4` and `L6_19(e=2)`.
    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownKey(s.to_string());
        let t = s.trim();
        let num = |x: &str| x.parse::<usize>().map_err(|_| unknown());
        if let Some(rest) = t.strip_prefix('A') {
            return Ok(CatalogKey::Abelian(num(rest)?));
        }
        if let Some(rest) = t.strip_prefix('H') {
            let m = num(rest)?;
            if m == 0 {
                return Err(unknown());
            }
            return Ok(CatalogKey::Heisenberg(m));
        }
        let rest = t.strip_prefix('L').ok_or_else(unknown)?;
        let (body, epsilon) = match rest.split_once('(') {
            Some((body, param)) => {
                let value = param.strip_suffix(')').and_then(|p| p.trim().strip_prefix("e=")).ok_or_else(unknown)?;
                let e: Rational = value.trim().parse().map_err(|_| unknown())?;
                (body, Some(e))
            }
            None => (rest, None),
        };
        let (d, k) = body.split_once('_').ok_or_else(unknown)?;
        Ok(CatalogKey::Indexed { dim: num(d)?, index: num(k)?, epsilon })
    }
}

/// A constructed catalog algebra.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub key: CatalogKey,
    pub algebra: LieAlgebra,
    /// Descriptive structure remark; never used in computations.
    pub structure_note: &'static str,
}

fn indexed_data(dim: usize, index: usize) -> Option<(&'static [Relation], &'static str)> {
    const H1: &[Relation] = &[(1, 2, &[(3, 1)])];
    const L43: &[Relation] = &[(1, 2, &[(3, 1)]), (1, 3, &[(4, 1)])];
    const L5: [&[Relation]; 9] = [
        &[],
        H1,
        L43,
        &[(1, 2, &[(5, 1)]), (3, 4, &[(5, 1)])],
        &[(1, 2, &[(3, 1)]), (1, 3, &[(5, 1)]), (2, 4, &[(5, 1)])],
        &[(1, 2, &[(3, 1)]), (1, 3, &[(4, 1)]), (1, 4, &[(5, 1)]), (2, 3, &[(5, 1)])],
        &[(1, 2, &[(3, 1)]), (1, 3, &[(4, 1)]), (1, 4, &[(5, 1)])],
        &[(1, 2, &[(4, 1)]), (1, 3, &[(5, 1)])],
        &[(1, 2, &[(3, 1)]), (1, 3, &[(4, 1)]), (2, 3, &[(5, 1)])],
    ];
    const L5_NOTES: [&str; 9] = ["A(5)", "H(1) + A(2)", "L4_3 + A(1)", "H(2)", "A(1) x| L4_3", "", "", "", ""];
    const L6: [(&[Relation], &str); 19] = [
        (&[(1, 2, &[(3, 1)]), (1, 3, &[(6, 1)]), (4, 5, &[(6, 1)])], ""),
        (
            &[(1, 2, &[(3, 1)]), (1, 3, &[(4, 1)]), (1, 4, &[(6, 1)]), (2, 3, &[(6, 1)]), (2, 5, &[(6, 1)])],
            "A(1) x| L5_6",
        ),
        (&[(1, 2, &[(3, 1)]), (1, 3, &[(4, 1)]), (1, 4, &[(6, 1)]), (2, 5, &[(6, 1)])], "A(1) x| L5_7"),
        (
            &[(1, 2, &[(3, 1)]), (1, 3, &[(5, 1)]), (2, 4, &[(5, 1)]), (1, 5, &[(6, 1)]), (3, 4, &[(6, 1)])],
            "A(1) x| L5_7",
        ),
        (
            &[
                (1, 2, &[(3, 1)]),
                (1, 3, &[(4, 1)]),
                (1, 4, &[(5, 1)]),
                (2, 3, &[(5, 1)]),
                (2, 5, &[(6, 1)]),
                (3, 4, &[(6, -1)]),
            ],
            "",
        ),
        (
            &[
                (1, 2, &[(3, 1)]),
                (1, 3, &[(4, 1)]),
                (1, 4, &[(5, 1)]),
                (2, 3, &[(5, 1)]),
                (1, 5, &[(6, 1)]),
                (2, 4, &[(6, 1)]),
            ],
            "",
        ),
        (&[(1, 2, &[(3, 1)]), (1, 3, &[(4, 1)]), (1, 4, &[(5, 1)]), (2, 5, &[(6, 1)]), (3, 4, &[(6, -1)])], ""),
        (&[(1, 2, &[(3, 1)]), (1, 3, &[(4, 1)]), (1, 4, &[(5, 1)]), (1, 5, &[(6, 1)]), (2, 3, &[(6, 1)])], ""),
        (&[(1, 2, &[(3, 1)]), (1, 3, &[(4, 1)]), (1, 4, &[(5, 1)]), (1, 5, &[(6, 1)])], ""),
        (&[(1, 2, &[(4, 1)]), (1, 3, &[(5, 1)]), (1, 5, &[(6, 1)]), (2, 4, &[(6, 1)]), (3, 5, &[(6, EPS)])], ""),
        (&[(1, 2, &[(4, 1)]), (1, 3, &[(5, 1)]), (1, 5, &[(6, 1)]), (2, 4, &[(6, 1)])], ""),
        (&[(1, 2, &[(3, 1)]), (1, 3, &[(4, 1)]), (2, 3, &[(5, 1)]), (1, 4, &[(6, 1)]), (2, 5, &[(6, EPS)])], ""),
        (&[(1, 2, &[(5, 1)]), (1, 3, &[(6, 1)]), (2, 4, &[(6, EPS)]), (3, 4, &[(5, 1)])], ""),
        (&[(1, 2, &[(3, 1)]), (1, 3, &[(5, 1)]), (1, 4, &[(6, 1)]), (2, 4, &[(5, 1)])], ""),
        (&[(1, 2, &[(3, 1)]), (1, 3, &[(5, 1)]), (1, 4, &[(6, EPS)]), (2, 3, &[(6, 1)]), (2, 4, &[(5, 1)])], ""),
        (&[(1, 2, &[(3, 1)]), (1, 3, &[(5, 1)]), (1, 4, &[(6, 1)])], ""),
        (&[(1, 2, &[(4, 1)]), (1, 3, &[(5, 1)]), (2, 3, &[(6, 1)])], ""),
        (&[(1, 2, &[(3, 1)]), (1, 3, &[(5, 1)]), (2, 4, &[(6, 1)])], ""),
        (&[(1, 2, &[(3, 1)]), (1, 3, &[(4, 1)]), (1, 4, &[(5, 1)]), (2, 3, &[(6, 1)])], ""),
    ];
    const L6_LOW_NOTES: [&str; 9] = [
        "L5_1 + A(1)",
        "L5_2 + A(1)",
        "L5_3 + A(1)",
        "L5_4 + A(1)",
        "L5_5 + A(1)",
        "L5_6 + A(1)",
        "L5_7 + A(1)",
        "L5_8 + A(1)",
        "L5_9 + A(1)",
    ];
    match (dim, index) {
        (3, 1) => Some((&[], "A(3)")),
        (3, 2) => Some((H1, "H(1) = A(1) x| A(2)")),
        (4, 1) => Some((&[], "A(4)")),
        (4, 2) => Some((H1, "H(1) + A(1)")),
        (4, 3) => Some((L43, "A(1) x| A(3)")),
        (5, k @ 1..=9) => Some((L5[k - 1], L5_NOTES[k - 1])),
        (6, k @ 1..=9) => Some((L5[k - 1], L6_LOW_NOTES[k - 1])),
        (6, k @ 10..=28) => Some(L6[k - 10]),
        _ => None,
    }
}

fn heisenberg(field: Field, m: usize) -> LieAlgebra {
    let n = 2 * m + 1;
    let brackets = (0..m).map(|i| ((2 * i, 2 * i + 1), field.unit_vec(n, n - 1)));
    let mut labels = default_labels(2 * m);
    labels.push("x".into());
    LieAlgebra::new(field, labels, brackets).expect("Heisenberg relations are well formed")
}

/// Builds the algebra for `key` over `Q`.
pub fn build(key: &CatalogKey) -> Result<CatalogEntry> {
    build_in(key, Field::Rationals)
}

/// Builds the algebra for `key` over the given field.
pub fn build_in(key: &CatalogKey, field: Field) -> Result<CatalogEntry> {
    let (algebra, structure_note) = match key {
        CatalogKey::Abelian(n) => (LieAlgebra::abelian(field, *n), ""),
        CatalogKey::Heisenberg(m) => {
            if *m == 0 {
                return Err(Error::UnknownKey(key.to_string()));
            }
            (heisenberg(field, *m), "")
        }
        CatalogKey::Indexed { dim, index, epsilon } => {
            let (relations, note) = indexed_data(*dim, *index).ok_or_else(|| Error::UnknownKey(key.to_string()))?;
            let eps = match (key.is_parameterized(), epsilon) {
                (true, Some(e)) => Some(field.from_rational(e)?),
                (true, None) => return Err(Error::EpsilonRequired(key.to_string())),
                (false, Some(_)) => return Err(Error::EpsilonForbidden(key.to_string())),
                (false, None) => None,
            };
            (relations_algebra(field, *dim, relations, eps.as_ref())?, note)
        }
    };
    Ok(CatalogEntry { key: key.clone(), algebra, structure_note })
}

fn relations_algebra(field: Field, dim: usize, relations: &[Relation], eps: Option<&Scalar>) -> Result<LieAlgebra> {
    let brackets = relations.iter().map(|&(i, j, out)| {
        let mut v = field.zero_vec(dim);
        for &(k, c) in out {
            let coeff = if c == EPS { eps.expect("parameter present").clone() } else { field.from_int(c) };
            v[k - 1] = &v[k - 1] + &coeff;
        }
        ((i - 1, j - 1), v)
    });
    LieAlgebra::new(field, default_labels(dim), brackets)
}

/// Number of catalog indices in each dimension.
pub fn index_count(dim: usize) -> Option<usize> {
    match dim {
        3 => Some(2),
        4 => Some(3),
        5 => Some(9),
        6 => Some(28),
        _ => None,
    }
}

/// All catalog keys of dimension `dim`, with each ε-family expanded over
/// the default parameter sample.
pub fn list(dim: usize) -> Result<Vec<CatalogKey>> {
    list_with_epsilons(dim, &default_epsilons())
}

pub fn list_with_epsilons(dim: usize, epsilons: &[Rational]) -> Result<Vec<CatalogKey>> {
    match dim {
        1 | 2 => Ok(vec![CatalogKey::Abelian(dim)]),
        3..=6 => {
            let count = index_count(dim).unwrap();
            let mut keys = Vec::new();
            for index in 1..=count {
                let key = CatalogKey::indexed(dim, index);
                if key.is_parameterized() {
                    keys.extend(epsilons.iter().map(|e| CatalogKey::with_epsilon(dim, index, e.clone())));
                } else {
                    keys.push(key);
                }
            }
            Ok(keys)
        }
        _ => Err(Error::UnsupportedDimension(dim)),
    }
}

/// Every key of dimension `1..=max_dim`.
pub fn list_up_to(max_dim: usize, epsilons: &[Rational]) -> Result<Vec<CatalogKey>> {
    if max_dim > 6 {
        return Err(Error::UnsupportedDimension(max_dim));
    }
    let mut keys = Vec::new();
    for d in 1..=max_dim {
        keys.extend(list_with_epsilons(d, epsilons)?);
    }
    Ok(keys)
}

/// Whether two nonzero members of the same ε-family are isomorphic:
/// true iff `δ/ε` is a square in the field.
pub fn epsilon_equivalent(a: &CatalogKey, b: &CatalogKey, field: Field) -> Result<bool> {
    let (
        CatalogKey::Indexed { dim: d1, index: k1, epsilon: Some(e1) },
        CatalogKey::Indexed { dim: d2, index: k2, epsilon: Some(e2) },
    ) = (a, b)
    else {
        return Err(Error::NotParameterized);
    };
    if (d1, k1) != (d2, k2) || !a.is_parameterized() {
        return Err(Error::NotParameterized);
    }
    let (e1, e2) = (field.from_rational(e1)?, field.from_rational(e2)?);
    if e1.is_zero() || e2.is_zero() {
        return Err(Error::ZeroEpsilonComparison);
    }
    Ok((&e2 / &e1).is_square())
}
