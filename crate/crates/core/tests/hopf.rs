//! Hopf algebra verification, the antipode solver and Hopf pairings.

use hopfdual::catalog::io::{load_hopf, save_hopf, Registry};
use hopfdual::catalog::*;
use hopfdual::exactmath::{CycScalar, Matrix, SparseVec};
use hopfdual::hopf::*;
use hopfdual::nichols::{materialize_nichols, hilbert_series, rank_one, sl21_braidings};
use hopfdual::Error;
use proptest::prelude::*;

/// `(k choose j)_ζ` from the Pascal rule `(k,j) = (k−1,j−1) + ζ^j (k−1,j)`.
fn q_binomial(k: usize, j: usize, zeta: &CycScalar) -> CycScalar {
    let mut row = vec![CycScalar::one(1)];
    for n in 1..=k {
        let mut next = vec![CycScalar::zero(1); n + 1];
        for i in 0..=n {
            let mut v = CycScalar::zero(1);
            if i > 0 {
                v = &v + &row[i - 1];
            }
            if i < n {
                v = &v + &(&zeta.pow(i as i64) * &row[i]);
            }
            next[i] = v;
        }
        row = next;
    }
    row[j].clone()
}

/// Structure constants of `x^a g^b` (index `a·N + b`) with `g x = t·x g`,
/// `Δ(x) = g^e⊗x + x⊗1`, `x^d = 0`, `g^N = 1`.
fn taft_oracle(n: usize, d: usize, t: &CycScalar, e: usize) -> (Matrix, Matrix) {
    let idx = |a: usize, b: usize| a * n + b;
    let dim = n * d;
    let mut mu = vec![SparseVec::new(); dim * dim];
    for (a, b, c, dd) in itertools::iproduct!(0..d, 0..n, 0..d, 0..n) {
        if a + c < d {
            // g^b x^c = t^{bc} x^c g^b
            mu[idx(a, b) * dim + idx(c, dd)] =
                SparseVec::from_entries([(idx(a + c, (b + dd) % n), t.pow((b * c) as i64))]);
        }
    }
    // Δ(x^k) = Σ_j (k choose j)_ζ x^j g^{e(k−j)} ⊗ x^{k−j} with ζ = t^e
    let zeta = t.pow(e as i64);
    let mut delta = Vec::with_capacity(dim);
    for (k, m) in itertools::iproduct!(0..d, 0..n) {
        let terms = (0..=k).map(|j| {
            let left = idx(j, (e * (k - j) + m) % n);
            let right = idx(k - j, m);
            (left * dim + right, q_binomial(k, j, &zeta))
        });
        delta.push(SparseVec::from_entries(terms));
    }
    (Matrix::from_columns(dim, mu), Matrix::from_columns(dim * dim, delta))
}

const TAFT_PARAMS: &[(usize, usize, usize)] = &[(2, 2, 1), (3, 3, 1), (4, 2, 2), (4, 4, 1), (6, 3, 2), (6, 6, 5), (8, 4, 2)];

#[test]
fn hat_and_check_taft_match_closed_formulas() {
    for &(n, d, c) in TAFT_PARAMS {
        let q = CycScalar::root_of_unity(n as u64, 1);
        let hat = hat_taft(n, d, c).unwrap();
        let (mu, delta) = taft_oracle(n, d, &q.pow(c as i64), 1);
        assert_eq!(hat.mu.as_ref(), &mu, "hat_taft({n},{d},{c}) product");
        assert_eq!(hat.delta.as_ref(), &delta, "hat_taft({n},{d},{c}) coproduct");
        let check = check_taft(n, d, c).unwrap();
        let (mu, delta) = taft_oracle(n, d, &q, c);
        assert_eq!(check.mu.as_ref(), &mu, "check_taft({n},{d},{c}) product");
        assert_eq!(check.delta.as_ref(), &delta, "check_taft({n},{d},{c}) coproduct");
    }
}

#[test]
fn hat_taft_4_2_2_relations() {
    let h = hat_taft(4, 2, 2).unwrap();
    assert_eq!(h.dim, 8);
    let p = TaftParams::new(4, 2, 2).unwrap();
    let g = SparseVec::unit(p.index(0, 1));
    let x = SparseVec::unit(p.index(1, 0));
    let mut g4 = h.unit_vector();
    for _ in 0..4 {
        g4 = h.mul_vec(&g4, &g);
    }
    assert_eq!(g4, h.unit_vector());
    assert!(h.mul_vec(&x, &x).is_zero());
    assert_eq!(h.mul_vec(&g, &x), h.mul_vec(&x, &g).neg());
    // Δ(x) = g⊗x + x⊗1
    let dx = h.delta.column(p.index(1, 0));
    let expect = SparseVec::from_entries([
        (p.index(0, 1) * 8 + p.index(1, 0), CycScalar::one(1)),
        (p.index(1, 0) * 8 + p.index(0, 0), CycScalar::one(1)),
    ]);
    assert_eq!(dx, &expect);
}

#[test]
fn check_taft_4_2_2_coproduct() {
    let h = check_taft(4, 2, 2).unwrap();
    let p = TaftParams::new(4, 2, 2).unwrap();
    let expect = SparseVec::from_entries([
        (p.index(0, 2) * 8 + p.index(1, 0), CycScalar::one(1)),
        (p.index(1, 0) * 8 + p.index(0, 0), CycScalar::one(1)),
    ]);
    assert_eq!(h.delta.column(p.index(1, 0)), &expect);
}

#[test]
fn antipode_solver_matches_closed_form() {
    // S(g) = g⁻¹ and S(x) = −g⁻¹x for Δ(x) = g⊗x + x⊗1
    for &(n, d, c) in TAFT_PARAMS {
        let h = hat_taft(n, d, c).unwrap();
        let (s, sinv) = solve_antipode(&h).unwrap();
        let p = TaftParams::new(n, d, c).unwrap();
        let ginv = SparseVec::unit(p.index(0, n - 1));
        assert_eq!(s.column(p.index(0, 1)), &ginv);
        let expect = h.mul_vec(&ginv, &SparseVec::unit(p.index(1, 0))).neg();
        assert_eq!(s.column(p.index(1, 0)), &expect);
        assert!(s.mul(&sinv).is_identity());
        assert_eq!(&s, h.s.as_ref());
    }
}

#[test]
fn every_catalog_algebra_verifies() {
    let s3 = GroupPresentation::s3();
    let algebras = vec![
        group_algebra(&s3, "C[S3]").unwrap(),
        function_algebra(&s3, "C^S3").unwrap(),
        cyclic_group_algebra(5).unwrap(),
        taft(3, 2).unwrap(),
        taft(4, 1).unwrap(),
        hat_taft(6, 3, 2).unwrap(),
        check_taft(6, 3, 2).unwrap(),
    ];
    for h in algebras {
        let r = verify_hopf(&h).unwrap();
        assert!(r.passed(), "{}: {}", h.name, r.summary());
        let (op, cop) = op_cop_variants(&h).unwrap();
        assert!(verify_hopf(&op).unwrap().passed());
        assert!(verify_hopf(&cop).unwrap().passed());
    }
}

#[test]
fn nichols_algebras_verify_in_the_graded_category() {
    let (m, _) = sl21_braidings(3).unwrap();
    for b in [rank_one(4, 1).unwrap(), m] {
        let alg = materialize_nichols(&hilbert_series(&b, 10)).unwrap();
        let r = verify_hopf(&alg.hopf).unwrap();
        assert!(r.passed(), "{}", r.summary());
    }
}

#[test]
fn broken_coassociativity_is_reported_with_a_witness() {
    let h = taft(2, 1).unwrap();
    let mut doc = save_hopf(&h);
    let entry = doc.delta.iter_mut().find(|e| (e.0, e.1, e.2) == (2, 2, 0)).unwrap();
    entry.3 = hopfdual::catalog::io::ScalarLit::Short("2".into());
    match load_hopf(&doc, &Registry::new()) {
        Err(Error::Verification(r)) => {
            let c = r.get("coassociativity").unwrap();
            assert!(!c.passed);
            assert!(c.witness.as_ref().unwrap().contains("input"));
        }
        other => panic!("expected a verification failure, got {other:?}"),
    }
}

#[test]
fn cyclic_pairing_is_non_degenerate_with_inverse_copairing() {
    for (n, k) in [(2, 1), (3, 2), (4, 1), (4, 3), (6, 5)] {
        let a = cyclic_group_algebra(n).unwrap();
        let w = cyclic_pairing_values(n, k).unwrap();
        let p = HopfPairing::from_values(a.clone(), a.clone(), &w).unwrap();
        assert!(verify_pairing(&p).unwrap().passed());
        let p = invert_pairing(&p).unwrap();
        let r = verify_pairing(&p).unwrap();
        assert!(r.passed(), "{}", r.summary());
        let (plus, minus) = pairing_variants(&p).unwrap();
        assert!(plus.omega_inv.is_some() && minus.omega_inv.is_some());
    }
    assert!(cyclic_pairing_values(4, 2).is_err());
}

#[test]
fn evaluation_pairing_needs_an_abelian_group() {
    let z2 = GroupPresentation::cyclic(2, "s");
    let a = group_algebra(&z2, "C[Z2]").unwrap();
    let b = function_algebra(&z2, "C^Z2").unwrap();
    let p = HopfPairing::from_values(a, b, &evaluation_values(&z2)).unwrap();
    assert!(verify_pairing(&p).unwrap().passed());

    let s3 = GroupPresentation::s3();
    let a = group_algebra(&s3, "C[S3]").unwrap();
    let b = function_algebra(&s3, "C^S3").unwrap();
    let p = HopfPairing::from_values(a, b, &evaluation_values(&s3)).unwrap();
    assert!(!verify_pairing(&p).unwrap().passed());
}

#[test]
fn degenerate_pairing_is_rejected() {
    let a = cyclic_group_algebra(2).unwrap();
    let w = Matrix::from_columns(2, vec![SparseVec::unit(0), SparseVec::unit(0)]);
    let p = HopfPairing::from_values(a.clone(), a, &w).unwrap();
    assert!(invert_pairing(&p).is_err());
}

#[test]
fn taft_parameters_are_validated() {
    assert!(matches!(hat_taft(4, 3, 1), Err(Error::BadParams(_))));
    // q^2 has order 2, not 4
    assert!(matches!(hat_taft(4, 4, 2), Err(Error::BadParams(_))));
    assert!(matches!(taft(4, 2), Err(Error::BadParams(_))));
}

#[test]
fn semidirect_groups_are_checked() {
    let n = GroupPresentation::cyclic(3, "r");
    let q = GroupPresentation::cyclic(2, "s");
    // r ↦ r² is an automorphism; r ↦ 1 for the non-trivial element is not
    assert!(GroupPresentation::semidirect(&n, &q, vec![vec![0, 1, 2], vec![0, 2, 1]]).is_ok());
    assert!(GroupPresentation::semidirect(&n, &q, vec![vec![0, 1, 2], vec![0, 0, 0]]).is_err());
    let s3 = GroupPresentation::s3();
    assert_eq!(s3.order, 6);
    let r = s3.labels.iter().position(|l| l == "r").unwrap();
    let s = s3.labels.iter().position(|l| l == "s").unwrap();
    // s r s⁻¹ = r²
    assert_eq!(s3.labels[s3.mul(s3.mul(s, r), s3.inv(s))], "r^2");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn random_taft_parameters(n in 2usize..9, dsel in 0usize..8, csel in 0usize..8) {
        let divisors: Vec<usize> = (2..=n).filter(|d| n % d == 0).collect();
        let d = divisors[dsel % divisors.len()];
        let cs: Vec<usize> = (1..n).filter(|&c| {
            let o = n / num_integer::gcd(n, c);
            o == d
        }).collect();
        prop_assume!(!cs.is_empty());
        let c = cs[csel % cs.len()];
        let h = hat_taft(n, d, c).unwrap();
        prop_assert!(verify_hopf(&h).unwrap().passed());
        let q = CycScalar::root_of_unity(n as u64, 1);
        let (mu, delta) = taft_oracle(n, d, &q.pow(c as i64), 1);
        prop_assert_eq!(h.mu.as_ref(), &mu);
        prop_assert_eq!(h.delta.as_ref(), &delta);
    }

    #[test]
    fn products_of_cyclic_groups(m in 1usize..5, k in 1usize..5) {
        let a = GroupPresentation::cyclic(m, "a");
        let b = GroupPresentation::cyclic(k, "b");
        let trivial = vec![(0..m).collect::<Vec<_>>(); k];
        let g = GroupPresentation::semidirect(&a, &b, trivial).unwrap();
        let h = group_algebra(&g, "C[G]").unwrap();
        prop_assert!(verify_hopf(&h).unwrap().passed());
        let f = function_algebra(&g, "C^G").unwrap();
        prop_assert!(verify_hopf(&f).unwrap().passed());
        let p = HopfPairing::from_values(h, f, &evaluation_values(&g)).unwrap();
        prop_assert!(verify_pairing(&p).unwrap().passed());
    }
}
