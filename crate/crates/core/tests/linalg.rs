use liecap::linalg::{Field, Matrix, Rational, Scalar, Subspace};
use proptest::prelude::*;

const Q: Field = Field::Rationals;

fn small_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-4i64..=4, c), r))
}

fn to_matrix(field: Field, rows: &[Vec<i64>]) -> Matrix {
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    Matrix::from_ints(field, &refs)
}

/// `P · diag(1,…,1,0,…,0) · Q` with unimodular `P`, `Q` built from
/// elementary row operations, so the rank is `r` over every field.
fn known_rank(n: usize, r: usize, ops: &[(usize, usize, i64)]) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j && i < r)).collect()).collect();
    for (step, &(a, b, k)) in ops.iter().enumerate() {
        let (a, b) = (a % n, b % n);
        if a == b {
            continue;
        }
        if step % 2 == 0 {
            let src = m[b].clone();
            for (x, y) in m[a].iter_mut().zip(src) {
                *x += k * y;
            }
        } else {
            for row in m.iter_mut() {
                row[a] += k * row[b];
            }
        }
    }
    m
}

fn rational(n: i64, d: i64) -> Scalar {
    Scalar::Rational(Rational::new(n, d))
}

proptest! {
    #[test]
    fn rref_is_idempotent(rows in small_matrix(6, 6)) {
        let m = to_matrix(Q, &rows);
        let once = m.rref();
        let twice = once.matrix.rref();
        prop_assert_eq!(&once.matrix, &twice.matrix);
        prop_assert_eq!(once.rank, twice.rank);
    }

    #[test]
    fn row_and_column_rank_agree(rows in small_matrix(6, 7)) {
        let m = to_matrix(Q, &rows);
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn rank_nullity(rows in small_matrix(6, 7)) {
        let m = to_matrix(Q, &rows);
        let k = m.kernel();
        prop_assert_eq!(k.dim() + m.rank(), m.cols());
        for v in k.basis_vectors() {
            prop_assert!(m.apply(v).unwrap().iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn rank_is_field_independent_for_unimodular_products(
        n in 2usize..6,
        r in 0usize..6,
        ops in prop::collection::vec((0usize..6, 0usize..6, -3i64..=3), 0..12),
    ) {
        let r = r.min(n);
        let rows = known_rank(n, r, &ops);
        prop_assert_eq!(to_matrix(Q, &rows).rank(), r);
        for p in [3, 5, 7] {
            prop_assert_eq!(to_matrix(Field::prime(p).unwrap(), &rows).rank(), r);
        }
    }

    #[test]
    fn sum_is_canonical(a in small_matrix(3, 5), b in small_matrix(3, 5)) {
        let cols = a[0].len().min(b[0].len());
        let trim = |m: &[Vec<i64>]| m.iter().map(|r| r[..cols].to_vec()).collect::<Vec<_>>();
        let u = to_matrix(Q, &trim(&a)).image_of_rows();
        let v = to_matrix(Q, &trim(&b)).image_of_rows();
        let uv = u.sum(&v).unwrap();
        prop_assert_eq!(&uv, &v.sum(&u).unwrap());
        prop_assert_eq!(uv.dim() + u.intersect(&v).unwrap().dim(), u.dim() + v.dim());
    }

    #[test]
    fn rational_arithmetic_is_exact(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000) {
        let (x, y) = (rational(a, b), rational(c, d));
        prop_assert_eq!(&(&(&x + &y) - &y), &x);
        if !y.is_zero() {
            prop_assert_eq!(&(&(&x * &y) / &y), &x);
        }
    }

    #[test]
    fn modular_arithmetic_is_exact(a in 0i64..1000, b in 1i64..1000, p in prop::sample::select(vec![3u64, 5, 7, 101])) {
        let f = Field::prime(p).unwrap();
        let (x, y) = (f.from_int(a), f.from_int(b));
        prop_assert_eq!(&(&(&x + &y) - &y), &x);
        if !y.is_zero() {
            prop_assert_eq!(&(&(&x * &y) / &y), &x);
        }
    }
}

trait RowSpace {
    fn image_of_rows(&self) -> Subspace;
}

impl RowSpace for Matrix {
    fn image_of_rows(&self) -> Subspace {
        Subspace::span(self.field(), self.cols(), self.row_vecs()).unwrap()
    }
}

#[test]
fn rref_examples() {
    let id = Matrix::identity(Q, 3);
    assert_eq!(id.rref().matrix, id);
    assert_eq!(id.rank(), 3);
    let zero = Matrix::zeros(Q, 2, 4);
    assert_eq!(zero.rref().rank, 0);
    let m = Matrix::from_ints(Q, &[&[1, 2], &[2, 4]]);
    assert_eq!(m.rref().matrix, Matrix::from_ints(Q, &[&[1, 2], &[0, 0]]));
}

#[test]
fn mixed_fields_rejected() {
    let f5 = Field::prime(5).unwrap();
    let rows = vec![vec![Q.one(), f5.one()]];
    assert_eq!(Matrix::from_rows(Q, 2, rows).unwrap_err(), liecap::Error::MixedFields);
}

#[test]
fn even_and_large_primes_rejected() {
    assert!(Field::prime(2).is_err());
    assert!(Field::prime(9).is_err());
    assert!(Field::prime(1 << 31).is_err());
}

#[test]
fn subspace_examples() {
    let u = Subspace::span(Q, 2, [vec![Q.one(), Q.one()]]).unwrap();
    let v = Subspace::span(Q, 2, [Q.unit_vec(2, 1)]).unwrap();
    assert_eq!(u.sum(&v).unwrap().dim(), 2);
    assert_eq!(u.intersect(&v).unwrap().dim(), 0);
    assert_eq!(u.sum(&u).unwrap(), u);
    assert_eq!(u.intersect(&u).unwrap(), u);

    let xy = Subspace::span(Q, 4, [Q.unit_vec(4, 0), Q.unit_vec(4, 1)]).unwrap();
    let zw = Subspace::span(Q, 4, [Q.unit_vec(4, 2), Q.unit_vec(4, 3)]).unwrap();
    assert!(xy.sum(&zw).unwrap().is_full());
    assert!(xy.intersect(&zw).unwrap().is_zero());
    assert_eq!(xy.quotient_coords(&zw).unwrap_err(), liecap::Error::NotContained);
}

#[test]
fn quotient_coordinates_vanish_exactly_on_the_subspace() {
    let w = Subspace::full(Q, 3);
    let u = Subspace::span(Q, 3, [vec![Q.one(), Q.from_int(2), Q.zero()]]).unwrap();
    let qc = u.quotient_coords(&w).unwrap();
    assert_eq!(qc.dim(), 2);
    assert!(qc.apply(&[Q.from_int(3), Q.from_int(6), Q.zero()]).unwrap().iter().all(Scalar::is_zero));
    assert!(!qc.apply(&Q.unit_vec(3, 2)).unwrap().iter().all(Scalar::is_zero));
}
