//! Acceptance criteria, one test per criterion. Every comparison is exact;
//! runtime limits are pinned below and measured around the computation only.

use std::sync::Arc;
use std::time::{Duration, Instant};

use hopfdual::catalog::*;
use hopfdual::exactmath::*;
use hopfdual::hopf::*;
use hopfdual::nichols::*;
use hopfdual::partialdual::*;
use hopfdual::radford::*;
use hopfdual::report::Report;
use hopfdual::yd::*;
use itertools::Itertools;

/// Limits for the timed criteria. Debug builds run these well inside the
/// limits on a laptop; the limits guard against complexity regressions.
const TAFT_LIMIT: Duration = Duration::from_secs(5);
const INVOLUTIVITY_LIMIT: Duration = Duration::from_secs(5);
const RANK_ONE_LIMIT: Duration = Duration::from_secs(1);
const RANK_TWO_N3_LIMIT: Duration = Duration::from_secs(10);
const RANK_TWO_N4_LIMIT: Duration = Duration::from_secs(120);

const TAFT_CASES: [(usize, usize, usize); 5] = [(2, 2, 1), (3, 3, 1), (4, 2, 2), (4, 4, 1), (6, 3, 2)];

fn assert_passes(what: &str, r: &Report) {
    assert!(r.passed(), "{what}: {}", r.summary());
}

fn assert_within(what: &str, start: Instant, limit: Duration) {
    let took = start.elapsed();
    println!("{what}: {took:?} (limit {limit:?})");
    assert!(took < limit, "{what} took {took:?}, limit {limit:?}");
}

fn strip(mut p: Vec<usize>) -> Vec<usize> {
    while p.len() > 1 && p.last() == Some(&0) {
        p.pop();
    }
    p
}

/// `1 + t^s + … + t^{(m−1)s}`.
fn geometric(m: usize, s: usize) -> Vec<usize> {
    let mut p = vec![0; (m - 1) * s + 1];
    for k in 0..m {
        p[k * s] = 1;
    }
    p
}

/// `x^k g^m ↦ x̄^k ḡ^m` with `x̄ = x⊗1`, `ḡ = 1⊗g` in `L⊗B`.
fn taft_identification(rh: &HopfAlgebra, n: usize, d: usize) -> Matrix {
    let (xbar, gbar) = (SparseVec::unit(n), SparseVec::unit(1));
    let mut cols = Vec::with_capacity(n * d);
    for k in 0..d {
        for m in 0..n {
            let mut v = rh.unit_vector();
            for _ in 0..k {
                v = rh.mul_vec(&v, &xbar);
            }
            for _ in 0..m {
                v = rh.mul_vec(&v, &gbar);
            }
            cols.push(v);
        }
    }
    Matrix::from_columns(rh.dim, cols)
}

#[test]
fn criterion_1_dualized_hat_taft_is_check_taft() {
    let start = Instant::now();
    for (n, d, c) in TAFT_CASES {
        let res = partial_dualize(&taft_datum(n, d, c).unwrap()).unwrap();
        assert_passes("dualization", &res.report);
        let rh = &res.rh;
        let check = check_taft(n, d, c).unwrap();
        let phi = taft_identification(rh, n, d);
        let psi = inverse(&phi).unwrap();
        // structure constants of r(H) pulled back to the Taft basis
        assert_eq!(psi.mul(&rh.mu).mul(&phi.kron(&phi)), *check.mu, "mu {n},{d},{c}");
        assert_eq!(psi.mul(&rh.eta), *check.eta, "eta {n},{d},{c}");
        assert_eq!(psi.kron(&psi).mul(&rh.delta).mul(&phi), *check.delta, "Delta {n},{d},{c}");
        assert_eq!(rh.eps.mul(&phi), *check.eps, "eps {n},{d},{c}");
        assert_eq!(psi.mul(&rh.s).mul(&phi), *check.s, "S {n},{d},{c}");
    }
    assert_within("criterion 1", start, TAFT_LIMIT);
}

#[test]
fn criterion_2_two_fold_dualization_is_isomorphic_to_the_original() {
    let start = Instant::now();
    let mut data: Vec<_> = TAFT_CASES.iter().map(|&(n, d, c)| taft_datum(n, d, c).unwrap()).collect();
    data.push(s3_datum().unwrap());
    for datum in &data {
        let inv = involutivity_check(datum).unwrap();
        assert_passes(&datum.h.name, &inv.report);
        assert!(inverse(&inv.isomorphism).is_ok());
    }
    assert_within("criterion 2", start, INVOLUTIVITY_LIMIT);

    // θ_K is the identity for the group algebra
    let res = partial_dualize(&s3_datum().unwrap()).unwrap();
    let km = underlying_module(&res.decomposition.k, "K").unwrap();
    let (t, _) = theta(&km).unwrap();
    assert!(t.is_identity());
}

#[test]
fn criterion_3_s3_dualization_is_a_tensor_product_algebra() {
    let g = GroupPresentation::s3();
    let res = partial_dualize(&s3_datum().unwrap()).unwrap();
    let rh = &res.rh;
    let b = &res.biproduct.a;
    assert_eq!((rh.dim, res.l.dim, b.dim), (6, 3, 2));
    // L is spanned by the rotations, element (n, 0) of index 2n
    let rot = |k: usize| 2 * k;
    let rot_index = |e: usize| {
        assert_eq!(e % 2, 0, "{} is not a rotation", g.labels[e]);
        e / 2
    };
    // (r^a⊗e_p)(r^b⊗e_q) = δ_pq r^{a+b}⊗e_p on the basis index 2·a + p
    let oracle_mu = Matrix::from_triplets(
        6,
        36,
        (0..3)
            .cartesian_product(0..2)
            .cartesian_product((0..3).cartesian_product(0..2))
            .filter(|((_, p), (_, q))| p == q)
            .map(|((a, p), (bb, q))| {
                let prod = rot_index(g.mul(rot(a), rot(bb)));
                (2 * prod + p, (2 * a + p) * 6 + 2 * bb + q, CycScalar::one(1))
            }),
    )
    .unwrap();
    assert_eq!(*rh.mu, oracle_mu);

    // the basis of B is the pair of idempotents e_0, e_1 with unit e_0 + e_1
    assert_eq!(b.eta.column(0), &SparseVec::from_entries([(0, CycScalar::one(1)), (1, CycScalar::one(1))]));
    for n in 1..3 {
        let n_one = SparseVec::from_entries([(2 * n, CycScalar::one(1)), (2 * n + 1, CycScalar::one(1))]);
        let image = rh.delta.apply(&n_one);
        // Σ_q (n⊗e_q)⊗(q⁻¹nq⊗1) with q the reflection or the identity
        let mut expected = Vec::new();
        for q in 0..2 {
            let conj = rot_index(g.mul(g.mul(g.inv(q), rot(n)), q));
            for r in 0..2 {
                expected.push(((2 * n + q) * 6 + 2 * conj + r, CycScalar::one(1)));
            }
        }
        assert_eq!(image, SparseVec::from_entries(expected), "Δ(r^{n})");
    }
}

#[test]
fn criterion_4_rank_one_series() {
    let start = Instant::now();
    for n in 2..=6usize {
        let t = hilbert_series(&rank_one(n, 1).unwrap(), n + 2);
        assert!(t.complete, "n = {n}");
        assert_eq!(strip(t.hilbert.clone()), geometric(n, 1), "n = {n}");
        assert_eq!(t.total_dim(), n);
    }
    assert_within("criterion 4", start, RANK_ONE_LIMIT);
}

fn rank_two_case(n: usize, cutoff: usize, limit: Duration) {
    let start = Instant::now();
    let (m, nn) = sl21_braidings(n).unwrap();
    let tm = hilbert_series(&m, cutoff);
    let tn = hilbert_series(&nn, cutoff);
    assert_within(&format!("criterion 5, n = {n}"), start, limit);
    assert!(tm.complete && tn.complete);
    let two = geometric(2, 1);
    let m_series = poly_mul(&poly_mul(&two, &two), &geometric(n, 2));
    let n_series = poly_mul(&poly_mul(&two, &geometric(n, 1)), &geometric(2, 2));
    assert_eq!(strip(tm.hilbert.clone()), m_series);
    assert_eq!(strip(tn.hilbert.clone()), n_series);
    assert_eq!(tm.total_dim(), 4 * n);
    assert_eq!(tn.total_dim(), 4 * n);
    assert_ne!(strip(tm.hilbert.clone()), strip(tn.hilbert.clone()));
}

#[test]
fn criterion_5_rank_two_series() {
    rank_two_case(3, 7, RANK_TWO_N3_LIMIT);
    rank_two_case(4, 8, RANK_TWO_N4_LIMIT);
}

#[test]
fn criterion_6_cartan_matrices_and_reflections() {
    let (m, nn) = sl21_braidings(3).unwrap();
    let a2 = vec![vec![2, -1], vec![-1, 2]];
    assert_eq!(cartan_matrix(&m, 12).unwrap(), a2);
    assert_eq!(cartan_matrix(&nn, 12).unwrap(), a2);
    let series = |b: &DiagonalBraiding| strip(hilbert_series(b, 8).hilbert);
    assert_eq!(series(&reflect(&m, 0, 12).unwrap()), series(&nn));
    assert!(reflect(&nn, 1, 12).unwrap().twist_equivalent(&nn));
    for b in [&m, &nn] {
        for i in 0..2 {
            let twice = reflect(&reflect(b, i, 12).unwrap(), i, 12).unwrap();
            assert!(twice.twist_equivalent(b));
        }
    }
}

/// `Σ_σ T_σ` on words, each crossing of letters `a` before `b` giving `q_ab`.
fn brute_symmetrizer(q: &[Vec<CycScalar>], n: usize) -> Matrix {
    let r = q.len();
    let size = r.pow(n as u32);
    let mut trip = Vec::new();
    for w in 0..size {
        let word = word_of(w, r, n);
        for perm in (0..n).permutations(n) {
            let mut coeff = CycScalar::one(1);
            for (s, t) in (0..n).tuple_combinations() {
                let ps = perm.iter().position(|&p| p == s).unwrap();
                let pt = perm.iter().position(|&p| p == t).unwrap();
                if pt < ps {
                    coeff = &coeff * &q[word[s]][word[t]];
                }
            }
            let image: Vec<usize> = perm.iter().map(|&p| word[p]).collect();
            trip.push((index_of(&image, r), w, coeff));
        }
    }
    Matrix::from_triplets(size, size, trip).unwrap()
}

/// `x◁h = S(h₁)xh₂` with coaction `Δ`.
fn right_adjoint(h: &Arc<HopfAlgebra>) -> YetterDrinfeldModule {
    let env = h.env("H");
    let rho = env
        .eval("mu . (mu * id) . (S * id * id) . (braid[H,H] * id) . (id * Delta)")
        .unwrap();
    YetterDrinfeldModule::new(h.clone(), h.space("R"), Side::Right, (*rho.matrix).clone(), (*h.delta).clone()).unwrap()
}

/// One representative per property; the full sweeps live in the other
/// integration suites.
#[test]
fn criterion_7_property_sweep() {
    // Hopf axioms on constructed objects
    for name in ["taft", "hat-taft", "check-taft", "group-algebra", "function-algebra"] {
        let params: Vec<String> = match name {
            "taft" => vec!["3".into(), "1".into()],
            "group-algebra" | "function-algebra" => vec!["s3".into()],
            _ => vec!["4".into(), "2".into(), "2".into()],
        };
        catalog_build(name, &params).unwrap();
    }
    let datum = taft_datum(3, 3, 1).unwrap();
    let h = datum.h.clone();
    assert_passes("Hopf", &verify_hopf(&h).unwrap());

    // pairing and copairing
    assert_passes("pairing", &verify_pairing(&datum.omega).unwrap());
    let (plus, minus) = pairing_variants(&datum.omega).unwrap();
    assert_passes("ω⁺", &verify_pairing(&plus).unwrap());
    assert_passes("ω⁻", &verify_pairing(&minus).unwrap());

    // YD conditions, including the regular module over H
    let adj = YetterDrinfeldModule::adjoint(h.clone()).unwrap();
    assert_passes("regular YD", &verify_yd(&adj).unwrap());
    let one = {
        let lam = CycScalar::root_of_unity(3, -1);
        let rho = Matrix::from_columns(
            1,
            (0..h.dim)
                .map(|i| if i < 3 { SparseVec::from_entries([(0, lam.pow(i as i64))]) } else { SparseVec::new() })
                .collect(),
        );
        let delta = Matrix::from_columns(h.dim, vec![SparseVec::unit(1)]);
        YetterDrinfeldModule::new(h.clone(), Space::new("M", 1), Side::Left, rho, delta).unwrap()
    };
    assert_passes("one-dimensional YD", &verify_yd(&one).unwrap());

    // braiding, θ, side switch
    assert_passes("hexagons", &yd_braiding_checks(&one, &adj, &one).unwrap());
    assert_passes("θ", &theta_checks(&one, &adj).unwrap());
    let r = right_adjoint(&h);
    let t = YetterDrinfeldModule::trivial(h.clone(), Space::new("T", 1), Side::Right);
    for variant in [SwitchVariant::T, SwitchVariant::TPrime] {
        assert_passes("switch", &switch_checks(&t, &r, &t, variant).unwrap());
    }

    // Ω and Ω² ≅ Id
    let res = partial_dualize(&datum).unwrap();
    let km = underlying_module(&res.decomposition.k, "K").unwrap();
    assert_passes("Ω", &omega_checks(&datum.omega, &km, &km, OmegaVariant::Omega).unwrap());
    assert_passes("Ω²", &omega_roundtrip_iso(&datum.omega, &km, &km).unwrap().report);

    // biproducts
    let dec = &res.decomposition;
    assert_passes("reassembly", &verify_hopf_morphism(&dec.reassembly, &dec.biproduct.result, &h).unwrap());
    let (s, _) = solve_antipode(&dec.biproduct.result).unwrap();
    assert_eq!(&s, dec.biproduct.result.s.as_ref());

    // nesting round trip on the pulled-back regular module
    let phi = &dec.reassembly;
    let id = Matrix::identity(h.dim);
    let pulled = YetterDrinfeldModule::new(
        dec.biproduct.result.clone(),
        adj.space.clone(),
        Side::Left,
        adj.rho.mul(&phi.kron(&id)),
        inverse(phi).unwrap().kron(&id).mul(&adj.delta),
    )
    .unwrap();
    let nested = yd_nest(&dec.biproduct, &pulled).unwrap();
    let (back, rep) = yd_unnest(&dec.biproduct, &nested).unwrap();
    assert_passes("unnest", &rep);
    assert_eq!((back.rho.as_ref(), back.delta.as_ref()), (pulled.rho.as_ref(), pulled.delta.as_ref()));

    // transport
    for x in [&one, &adj] {
        let moved = transport_yd_module(&datum, &res, x).unwrap();
        assert_eq!(moved.module.dim(), x.dim());
        assert_passes("transported", &verify_yd(&moved.module).unwrap());
    }
    assert_passes("braiding transported", &braiding_preserved(&datum, &res, &one, &adj).unwrap());

    // symmetrizer against the sum over S_n
    let (m, _) = sl21_braidings(3).unwrap();
    for b in [rank_one(5, 1).unwrap(), m] {
        for n in 1..=5 {
            assert_eq!(quantum_symmetrizer(&b.braiding_matrix(), b.rank(), n), brute_symmetrizer(&b.q, n));
        }
    }
}

#[test]
fn criterion_8_informational_out_of_scope() {
    println!(
        "criterion 8 (informational): the equivalences of whole categories, the Morita statement \
         for Drinfeld doubles and the bimodule-category equivalence are not decided by finite \
         computation; they are exercised only through the object-level checks of criterion 7."
    );
}
