//! Independent reference computations shared by the integration tests. They
//! use plain integer arithmetic and their own exterior-power indexing, so
//! they share no code with the library beyond reading structure constants.
#![allow(dead_code)]

use liecap::catalog::{build, CatalogKey};
use liecap::lie::LieAlgebra;
use liecap::linalg::{Field, Matrix, Scalar, Subspace};

pub fn alg(key: &str) -> LieAlgebra {
    build(&key.parse::<CatalogKey>().unwrap()).unwrap().algebra
}

/// Structure constants as integers: `t[i][j][k]` is the coefficient of
/// `e_k` in `[e_i, e_j]`. Rational tables are multiplied by a common
/// denominator `D`; the bracket `D·[x, y]` gives an isomorphic algebra
/// (via `x ↦ x/D`), so every invariant used here is unchanged.
pub fn int_table(l: &LieAlgebra) -> Vec<Vec<Vec<i128>>> {
    let n = l.dim();
    let mut frac = vec![vec![vec![(0i128, 1i128); n]; n]; n];
    let mut common_den = 1i128;
    for (i, row) in frac.iter_mut().enumerate() {
        for (j, out) in row.iter_mut().enumerate() {
            for (k, c) in l.bracket_basis(i, j).iter().enumerate() {
                let text = c.to_string();
                let (num, den) = match text.split_once('/') {
                    Some((a, b)) => (a.parse().unwrap(), b.parse().unwrap()),
                    None => (text.parse().expect("rational structure constant"), 1),
                };
                common_den = lcm(common_den, den);
                out[k] = (num, den);
            }
        }
    }
    frac.iter()
        .map(|row| row.iter().map(|out| out.iter().map(|&(a, b)| a * (common_den / b)).collect()).collect())
        .collect()
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: i128, b: i128) -> i128 {
    a / gcd(a, b) * b
}

/// Rank over Q by fraction-free (Bareiss) elimination.
pub fn rank(mut m: Vec<Vec<i128>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut r = 0;
    let mut prev = 1i128;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

fn pair_index(n: usize) -> Vec<Vec<Option<usize>>> {
    let mut idx = vec![vec![None; n]; n];
    for (t, (i, j)) in pairs(n).into_iter().enumerate() {
        idx[i][j] = Some(t);
    }
    idx
}

/// Adds `c · e_a ∧ e_b` to a vector in `Λ²` coordinates.
fn add_wedge(v: &mut [i128], idx: &[Vec<Option<usize>>], a: usize, b: usize, c: i128) {
    if a < b {
        v[idx[a][b].unwrap()] += c;
    } else if b < a {
        v[idx[b][a].unwrap()] -= c;
    }
}

/// `(rank ∂₂, rank ∂₃)` of the Chevalley–Eilenberg chain complex.
pub fn boundary_ranks(l: &LieAlgebra) -> (usize, usize) {
    let t = int_table(l);
    let d2: Vec<Vec<i128>> = pairs(l.dim()).into_iter().map(|(i, j)| t[i][j].clone()).collect();
    (rank(d2), rank(d3_columns(l)))
}

/// `dim H₂(L)` from the chain complex ranks.
pub fn multiplier_dim(l: &LieAlgebra) -> usize {
    let n = l.dim();
    let (r2, r3) = boundary_ranks(l);
    n * n.saturating_sub(1) / 2 - r2 - r3
}

pub fn derived_dim(l: &LieAlgebra) -> usize {
    boundary_ranks(l).0
}

/// `dim L∧L = dim Λ²L − rank ∂₃`.
pub fn exterior_square_dim(l: &LieAlgebra) -> usize {
    let n = l.dim();
    n * n.saturating_sub(1) / 2 - boundary_ranks(l).1
}

/// Columns of `∂₃` (images of `x∧y∧z`, `x<y<z`) in `Λ²` coordinates.
pub fn d3_columns(l: &LieAlgebra) -> Vec<Vec<i128>> {
    let t = int_table(l);
    let n = l.dim();
    let idx = pair_index(n);
    let pairs = n * n.saturating_sub(1) / 2;
    let mut cols = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                let mut v = vec![0i128; pairs];
                for (a, b, c, s) in [(x, y, z, 1), (x, z, y, -1), (y, z, x, 1)] {
                    for (k, coeff) in t[a][b].iter().enumerate() {
                        add_wedge(&mut v, &idx, k, c, s * coeff);
                    }
                }
                cols.push(v);
            }
        }
    }
    cols
}

/// The pairs `(i, j)`, `i < j`, in `Λ²` coordinate order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// `[e_i, e_j] ∧ [e_p, e_q]` in `Λ²` coordinates.
pub fn bracket_wedge(l: &LieAlgebra, (i, j): (usize, usize), (p, q): (usize, usize)) -> Vec<i128> {
    let t = int_table(l);
    let n = l.dim();
    let idx = pair_index(n);
    let mut v = vec![0i128; n * n.saturating_sub(1) / 2];
    for (a, ca) in t[i][j].iter().enumerate() {
        for (b, cb) in t[p][q].iter().enumerate() {
            add_wedge(&mut v, &idx, a, b, ca * cb);
        }
    }
    v
}

/// `Z∧(L) = { l : l ∧ x ∈ im ∂₃ for every x }`, computed in `Λ²L`.
pub fn exterior_center(l: &LieAlgebra) -> Subspace {
    let n = l.dim();
    let q = Field::Rationals;
    let npairs = n * n.saturating_sub(1) / 2;
    let idx = pair_index(n);
    let to_q = |v: &[i128]| v.iter().map(|&x| q.from_int(x as i64)).collect::<Vec<Scalar>>();
    let boundaries = Subspace::span(q, npairs, d3_columns(l).iter().map(|c| to_q(c))).unwrap();
    let columns: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            (0..n)
                .flat_map(|x| {
                    let mut w = vec![0i128; npairs];
                    add_wedge(&mut w, &idx, i, x, 1);
                    boundaries.reduce(&to_q(&w)).unwrap()
                })
                .collect()
        })
        .collect();
    Matrix::from_columns(q, n * npairs, &columns).unwrap().kernel()
}
