//! Exact arithmetic against independent oracles: cyclic convolution in the
//! group ring for products, floating-point evaluation for zero tests, and
//! dense schoolbook formulas for matrices.

use hopfdual::exactmath::{inverse, kernel, rank, CycScalar, Matrix, SparseVec};
use proptest::prelude::*;

const ORDERS: &[u64] = &[1, 2, 3, 4, 5, 6, 8, 12];

fn conv(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    let mut out = vec![0; n];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[(i + j) % n] += x * y;
        }
    }
    out
}

fn numeric(a: &[i64], n: u64) -> (f64, f64) {
    a.iter().enumerate().fold((0.0, 0.0), |(re, im), (k, &c)| {
        let t = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
        (re + c as f64 * t.cos(), im + c as f64 * t.sin())
    })
}

fn group_ring_elt() -> impl Strategy<Value = (u64, Vec<i64>, Vec<i64>)> {
    prop::sample::select(ORDERS).prop_flat_map(|n| {
        let v = prop::collection::vec(-4i64..=4, n as usize);
        (Just(n), v.clone(), v)
    })
}

proptest! {
    #[test]
    fn product_matches_group_ring((n, a, b) in group_ring_elt()) {
        let x = CycScalar::from_ints(n, &a);
        let y = CycScalar::from_ints(n, &b);
        prop_assert_eq!(&x * &y, CycScalar::from_ints(n, &conv(&a, &b, n as usize)));
    }

    #[test]
    fn zero_test_matches_numeric_evaluation((n, a, _b) in group_ring_elt()) {
        let (re, im) = numeric(&a, n);
        prop_assert_eq!(CycScalar::from_ints(n, &a).is_zero(), re.abs() < 1e-9 && im.abs() < 1e-9);
    }

    #[test]
    fn field_axioms((n, a, b) in group_ring_elt(), c in prop::collection::vec(-3i64..=3, 12)) {
        let x = CycScalar::from_ints(n, &a);
        let y = CycScalar::from_ints(n, &b);
        let z = CycScalar::from_ints(n, &c[..n as usize]);
        prop_assert_eq!(&(&x + &y) * &z, &(&x * &z) + &(&y * &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&(&x - &y) + &y, x.clone());
        if !x.is_zero() {
            prop_assert!((&x * &x.inv()).is_one());
        }
    }

    #[test]
    fn embedding_is_a_ring_map((n, a, b) in group_ring_elt(), m in 1u64..4) {
        let x = CycScalar::from_ints(n, &a);
        let y = CycScalar::from_ints(n, &b);
        let l = n * m;
        prop_assert_eq!((&x * &y).embed(l), &x.embed(l) * &y.embed(l));
        prop_assert_eq!(x.embed(l), x.clone());
    }

    #[test]
    fn literals_round_trip((n, a, _b) in group_ring_elt(), den in 1i64..5) {
        let x = &CycScalar::from_ints(n, &a) * &CycScalar::from_int(n, den).inv();
        let back = match x.short_literal() {
            Some(s) => CycScalar::parse(n, &s).unwrap(),
            None => CycScalar::from_coeff_strings(n, &x.coeff_strings()).unwrap(),
        };
        prop_assert_eq!(back, x);
    }

    #[test]
    fn roots_of_unity_have_their_order(k in 0i64..24, idx in 0usize..ORDERS.len()) {
        let n = ORDERS[idx];
        let z = CycScalar::root_of_unity(n, k);
        prop_assert!(z.pow(n as i64).is_one());
        prop_assert_eq!(z.pow(-1), CycScalar::root_of_unity(n, -k));
    }
}

fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, cols), rows)
}

fn to_matrix(m: &[Vec<i64>]) -> Matrix {
    Matrix::from_dense_rows(
        &m.iter()
            .map(|r| r.iter().map(|&v| CycScalar::from_int(1, v)).collect())
            .collect::<Vec<_>>(),
    )
}

fn dense_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    (0..a.len())
        .map(|i| (0..b[0].len()).map(|j| (0..b.len()).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

fn dense_kron(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let (p, q) = (b.len(), b[0].len());
    (0..a.len() * p)
        .map(|i| (0..a[0].len() * q).map(|j| a[i / p][j / q] * b[i % p][j % q]).collect())
        .collect()
}

proptest! {
    #[test]
    fn mul_and_kron_match_dense(a in small_matrix(3, 4), b in small_matrix(4, 2), c in small_matrix(2, 3)) {
        prop_assert_eq!(to_matrix(&a).mul(&to_matrix(&b)), to_matrix(&dense_mul(&a, &b)));
        prop_assert_eq!(to_matrix(&a).kron(&to_matrix(&c)), to_matrix(&dense_kron(&a, &c)));
    }

    #[test]
    fn kron_is_functorial(a in small_matrix(2, 3), b in small_matrix(3, 2), c in small_matrix(2, 2), d in small_matrix(2, 2)) {
        let (a, b, c, d) = (to_matrix(&a), to_matrix(&b), to_matrix(&c), to_matrix(&d));
        prop_assert_eq!(a.kron(&c).mul(&b.kron(&d)), a.mul(&b).kron(&c.mul(&d)));
    }

    #[test]
    fn kernel_and_rank(a in small_matrix(3, 5)) {
        let m = to_matrix(&a);
        let ker = kernel(&m);
        prop_assert_eq!(rank(&m) + ker.len(), 5);
        for v in &ker {
            prop_assert!(m.apply(v).is_zero());
        }
    }

    #[test]
    fn inverse_of_unitriangular(a in small_matrix(4, 4)) {
        let mut u = a.clone();
        for i in 0..4 {
            for j in 0..4 {
                u[i][j] = if i == j { 1 } else if j > i { a[i][j] } else { 0 };
            }
        }
        let m = to_matrix(&u);
        let inv = inverse(&m).unwrap();
        prop_assert!(inv.mul(&m).is_identity());
        prop_assert!(m.mul(&inv).is_identity());
    }
}

#[test]
fn singular_matrix_has_no_inverse() {
    let m = to_matrix(&[vec![1, 2], vec![2, 4]]);
    assert!(inverse(&m).is_err());
}

#[test]
fn tensor_index_convention() {
    // e_i ⊗ e_j sits at i·dim2 + j
    let v = SparseVec::unit(1).kron(&SparseVec::unit(2), 3);
    assert_eq!(v, SparseVec::unit(5));
}

#[test]
fn mixed_orders_compare_after_embedding() {
    let i4 = CycScalar::root_of_unity(4, 1);
    let i12 = CycScalar::root_of_unity(12, 3);
    assert_eq!(i4, i12);
    assert!((&i4 * &i4 + CycScalar::one(1)).is_zero());
}
