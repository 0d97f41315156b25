//! Yetter-Drinfeld categories, biproducts, coinvariants, the side switch,
//! the pairing functor and transport of modules along partial dualization.

use std::sync::Arc;

use hopfdual::catalog::*;
use hopfdual::exactmath::*;
use hopfdual::hopf::*;
use hopfdual::partialdual::*;
use hopfdual::radford::*;
use hopfdual::report::Report;
use hopfdual::yd::*;
use hopfdual::Error;

fn assert_passes(what: &str, r: &Report) {
    assert!(r.passed(), "{what}: {}", r.summary());
}

/// The one-dimensional module over `T̂(N,d,c)` with coaction `g^a` and
/// action `g ↦ ζ^{-ca}`, `x ↦ 0`.
fn one_dim(h: &Arc<HopfAlgebra>, n: usize, c: usize, a: usize, name: &str) -> YetterDrinfeldModule {
    let lam = CycScalar::root_of_unity(n as u64, -((c * a) as i64));
    let rho = Matrix::from_columns(
        1,
        (0..h.dim)
            .map(|i| {
                if i < n {
                    SparseVec::from_entries([(0, lam.pow(i as i64))])
                } else {
                    SparseVec::new()
                }
            })
            .collect(),
    );
    let delta = Matrix::from_columns(h.dim, vec![SparseVec::unit(a)]);
    YetterDrinfeldModule::new(h.clone(), Space::new(name, 1), Side::Left, rho, delta).unwrap()
}

/// `H` as a right module over itself: `x◁h = S(h₁)xh₂`, coaction `Δ`.
fn right_adjoint(h: &Arc<HopfAlgebra>) -> YetterDrinfeldModule {
    let env = h.env("H");
    let rho = env
        .eval("mu . (mu * id) . (S * id * id) . (braid[H,H] * id) . (id * Delta)")
        .unwrap();
    YetterDrinfeldModule::new(h.clone(), h.space("R"), Side::Right, (*rho.matrix).clone(), (*h.delta).clone()).unwrap()
}

const TAFT_PARAMS: [(usize, usize, usize); 3] = [(2, 2, 1), (3, 3, 1), (4, 2, 2)];

#[test]
fn modules_over_taft_algebras_are_yetter_drinfeld() {
    for (n, d, c) in TAFT_PARAMS {
        let h = hat_taft(n, d, c).unwrap();
        for a in 0..n {
            assert_passes("one-dimensional", &verify_yd(&one_dim(&h, n, c, a, "M")).unwrap());
        }
        assert_passes("adjoint", &verify_yd(&YetterDrinfeldModule::adjoint(h.clone()).unwrap()).unwrap());
        assert_passes("right adjoint", &verify_yd(&right_adjoint(&h)).unwrap());
    }
}

#[test]
fn wrong_scalar_breaks_the_yetter_drinfeld_condition() {
    let (n, d, c) = (3, 3, 1);
    let h = hat_taft(n, d, c).unwrap();
    // coaction g but the action of the degree-zero module
    let good = one_dim(&h, n, c, 0, "M");
    let bad = YetterDrinfeldModule::new(
        h.clone(),
        Space::new("M", 1),
        Side::Left,
        (*good.rho).clone(),
        Matrix::from_columns(h.dim, vec![SparseVec::unit(1)]),
    )
    .unwrap();
    let r = verify_yd(&bad).unwrap();
    assert!(!r.get("Yetter-Drinfeld condition").unwrap().passed);
    assert!(r.get("formulations agree").unwrap().passed);
}

/// For a group algebra the adjoint module is `ℂ[G]` graded by itself with
/// conjugation, and `c(e_g⊗e_h) = e_{ghg⁻¹}⊗e_g`.
#[test]
fn group_algebra_braiding_matches_conjugation() {
    for name in ["s3", "Z4"] {
        let g = group_by_name(name).unwrap();
        let h = group_algebra(&g, "C[G]").unwrap();
        let x = YetterDrinfeldModule::adjoint(h.clone()).unwrap();
        assert_passes("adjoint", &verify_yd(&x).unwrap());
        let (c, cinv) = yd_braiding(&x.renamed("X"), &x.renamed("Y")).unwrap();
        let n = g.order;
        let oracle = Matrix::from_triplets(
            n * n,
            n * n,
            (0..n).flat_map(|a| {
                let g = &g;
                (0..n).map(move |b| {
                    let conj = g.mul(g.mul(a, b), g.inv(a));
                    (conj * n + a, a * n + b, CycScalar::one(1))
                })
            }),
        )
        .unwrap();
        assert_eq!(c, oracle, "{name}");
        assert!(cinv.mul(&c).is_identity());
    }
}

#[test]
fn braiding_is_natural_hexagonal_and_invertible() {
    for (n, d, c) in TAFT_PARAMS {
        let h = hat_taft(n, d, c).unwrap();
        let m = one_dim(&h, n, c, 1, "M");
        let adj = YetterDrinfeldModule::adjoint(h.clone()).unwrap();
        assert_passes("braiding", &yd_braiding_checks(&m, &adj, &m).unwrap());
        if n * d <= 6 {
            assert_passes("braiding adjoint", &yd_braiding_checks(&adj, &m, &adj).unwrap());
        }
    }
}

#[test]
fn theta_is_a_natural_monoidal_isomorphism() {
    for (n, d, c) in TAFT_PARAMS {
        let h = hat_taft(n, d, c).unwrap();
        let m = one_dim(&h, n, c, 1, "M");
        let adj = YetterDrinfeldModule::adjoint(h.clone()).unwrap();
        assert_passes("theta", &theta_checks(&m, &adj).unwrap());
        assert_passes("theta adjoint", &theta_checks(&adj, &adj).unwrap());
    }
}

#[test]
fn theta_on_one_dimensional_modules_is_a_scalar() {
    // θ acts on a one-dimensional module by a root of unity and is the
    // identity exactly on the trivial one.
    let (n, d, c) = (3, 3, 1);
    let h = hat_taft(n, d, c).unwrap();
    let (t0, _) = theta(&one_dim(&h, n, c, 0, "M")).unwrap();
    assert!(t0.is_identity());
    let (t1, t1inv) = theta(&one_dim(&h, n, c, 1, "M")).unwrap();
    assert_eq!(t1.nnz(), 1);
    assert!(t1.mul(&t1inv).is_identity());
}

#[test]
fn side_switch_is_braided_monoidal_for_both_variants() {
    for (n, d, c) in [(2, 2, 1), (3, 3, 1)] {
        let h = hat_taft(n, d, c).unwrap();
        let r = right_adjoint(&h);
        let t = YetterDrinfeldModule::trivial(h.clone(), Space::new("T", 2), Side::Right);
        for variant in [SwitchVariant::T, SwitchVariant::TPrime] {
            assert_passes("switch", &switch_checks(&t, &r, &t, variant).unwrap());
            if n == 2 {
                assert_passes("switch adjoint", &switch_checks(&r, &r, &t, variant).unwrap());
            }
        }
    }
}

#[test]
fn coinvariants_of_taft_are_the_x_powers() {
    for (n, d, c) in TAFT_PARAMS {
        let dat = taft_datum(n, d, c).unwrap();
        let dec = coinvariants(&dat.h, &dat.a, &dat.pi, &dat.iota).unwrap();
        assert_passes("decomposition", &dec.report);
        assert_eq!(dec.k.dim, d);
        // x^k g^0 sits at index k*N in the Taft basis
        let expected = Matrix::from_columns(dat.h.dim, (0..d).map(|k| SparseVec::unit(k * n)).collect());
        assert_eq!(dec.inclusion, expected);
        assert_passes("biproduct", &dec.biproduct.report);
        assert_passes("K is Hopf in YD", &verify_hopf(&dec.k).unwrap());
        assert_passes("reassembly", &verify_hopf_morphism(&dec.reassembly, &dec.biproduct.result, &dat.h).unwrap());
        assert!(inverse(&dec.reassembly).is_ok());
    }
}

#[test]
fn biproduct_antipode_matches_the_solved_one() {
    for (n, d, c) in TAFT_PARAMS {
        let dat = taft_datum(n, d, c).unwrap();
        let dec = coinvariants(&dat.h, &dat.a, &dat.pi, &dat.iota).unwrap();
        let bp = biproduct(&dec.k, "KA").unwrap();
        let (s, sinv) = solve_antipode(&bp.result).unwrap();
        assert_eq!(&s, bp.result.s.as_ref());
        assert!(s.mul(&sinv).is_identity());
    }
}

#[test]
fn s3_coinvariants_are_the_rotations() {
    let (h, a, pi, iota) = s3_projection().unwrap();
    let dec = coinvariants(&h, &a, &pi, &iota).unwrap();
    assert_passes("decomposition", &dec.report);
    assert_eq!(dec.k.dim, 3);
    // rotations n have index 2n
    let expected = Matrix::from_columns(6, (0..3).map(|k| SparseVec::unit(2 * k)).collect());
    assert_eq!(dec.inclusion, expected);
}

#[test]
fn bad_projections_are_rejected() {
    let dat = taft_datum(3, 3, 1).unwrap();
    let zero = Matrix::from_columns(3, vec![SparseVec::new(); dat.h.dim]);
    let err = coinvariants(&dat.h, &dat.a, &zero, &dat.iota).unwrap_err();
    assert!(matches!(err, Error::NotAProjection(_)), "{err}");
    // a section that is not split by π
    let shifted = Matrix::from_columns(dat.h.dim, (0..3).map(|k| SparseVec::unit((k + 1) % 3)).collect());
    let err = coinvariants(&dat.h, &dat.a, &dat.pi, &shifted).unwrap_err();
    assert!(matches!(err, Error::NotASection(_)), "{err}");
    let wrong_shape = Matrix::identity(2);
    assert!(coinvariants(&dat.h, &dat.a, &wrong_shape, &dat.iota).is_err());
}

#[test]
fn pairing_functor_is_braided_monoidal_and_squares_to_theta() {
    for (n, d, c) in TAFT_PARAMS {
        let dat = taft_datum(n, d, c).unwrap();
        let res = partial_dualize(&dat).unwrap();
        let km = underlying_module(&res.decomposition.k, "K").unwrap();
        assert_passes("K over A", &verify_yd(&km).unwrap());
        for variant in [OmegaVariant::Omega, OmegaVariant::OmegaPrime] {
            assert_passes("omega", &omega_checks(&dat.omega, &km, &km, variant).unwrap());
        }
        let rt = omega_roundtrip_iso(&dat.omega, &km, &km).unwrap();
        assert_passes("round trip", &rt.report);
        assert_passes("theta K", &theta_checks(&km, &km).unwrap());
    }
}

#[test]
fn nesting_round_trips() {
    for (n, d, c) in TAFT_PARAMS {
        let h = hat_taft(n, d, c).unwrap();
        let dat = taft_datum(n, d, c).unwrap();
        let dec = coinvariants(&dat.h, &dat.a, &dat.pi, &dat.iota).unwrap();
        let phi = &dec.reassembly;
        let phi_inv = inverse(phi).unwrap();
        let adj = YetterDrinfeldModule::adjoint(h.clone()).unwrap();
        let id = Matrix::identity(h.dim);
        // pull the adjoint module back along K⋊A ≅ H
        let pulled = YetterDrinfeldModule::new(
            dec.biproduct.result.clone(),
            adj.space.clone(),
            Side::Left,
            adj.rho.mul(&phi.kron(&id)),
            phi_inv.kron(&id).mul(&adj.delta),
        )
        .unwrap();
        assert_passes("pulled back", &verify_yd(&pulled).unwrap());
        let nested = yd_nest(&dec.biproduct, &pulled).unwrap();
        assert_passes("nest", &nested.report);
        let (back, r) = yd_unnest(&dec.biproduct, &nested).unwrap();
        assert_passes("unnest", &r);
        assert_eq!(back.rho, pulled.rho);
        assert_eq!(back.delta, pulled.delta);
    }
}

#[test]
fn transport_carries_modules_and_braidings() {
    for (n, d, c) in TAFT_PARAMS {
        let h = hat_taft(n, d, c).unwrap();
        let dat = taft_datum(n, d, c).unwrap();
        let res = partial_dualize(&dat).unwrap();
        let m = one_dim(&h, n, c, 1, "M");
        let adj = YetterDrinfeldModule::adjoint(h.clone()).unwrap();
        for x in [&m, &adj] {
            let t = transport_yd_module(&dat, &res, x).unwrap();
            assert_passes("transport", &t.report);
            assert_eq!(t.module.dim(), x.dim());
            assert!(Arc::ptr_eq(&t.module.over, &res.rh) || t.module.over.dim == res.rh.dim);
            assert_passes("image", &verify_yd(&t.module).unwrap());
        }
        assert_passes("braiding", &braiding_preserved(&dat, &res, &m, &adj).unwrap());
    }
}
