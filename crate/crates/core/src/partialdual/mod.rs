//! Partial dualization: from a split projection `H → A` and a
//! non-degenerate pairing of `A` with `B`, the Hopf algebra
//! `r(H) = Ω(K) ⋊ B` where `K` are the coinvariants.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::exactmath::{inverse, Matrix};
use crate::hopf::{invert_pairing, pairing_variants, verify_hopf_morphism, verify_pairing, HopfAlgebra, HopfPairing};
use crate::radford::{
    biproduct, check_projection, coinvariants, yd_nest, yd_unnest, BiproductPresentation, CoinvariantDecomposition,
    NestedModule,
};
use crate::report::Report;
use crate::yd::{
    omega_functor, omega_hopf, omega_monoidal, theta, underlying_module, yd_braiding, OmegaVariant, Side,
    YetterDrinfeldModule,
};
use crate::{Error, Result};

/// A split projection `π: H → A` with section `ι`, and a non-degenerate
/// pairing `ω: A⊗B → 1` with its inverse copairing.
#[derive(Clone, Debug)]
pub struct PartialDualizationDatum {
    pub h: Arc<HopfAlgebra>,
    pub a: Arc<HopfAlgebra>,
    pub b: Arc<HopfAlgebra>,
    pub pi: Matrix,
    pub iota: Matrix,
    pub omega: HopfPairing,
}

/// Validates the projection and the pairing from its value matrix
/// `W_{ij} = ω(a_i, b_j)`.
pub fn make_datum(
    h: Arc<HopfAlgebra>,
    a: Arc<HopfAlgebra>,
    b: Arc<HopfAlgebra>,
    pi: Matrix,
    iota: Matrix,
    omega_values: &Matrix,
) -> Result<PartialDualizationDatum> {
    let omega = HopfPairing::from_values(a.clone(), b.clone(), omega_values)?;
    make_datum_with_pairing(h, pi, iota, omega)
}

/// As [`make_datum`], with the pairing given directly; `A` and `B` are
/// taken from the pairing.
pub fn make_datum_with_pairing(
    h: Arc<HopfAlgebra>,
    pi: Matrix,
    iota: Matrix,
    omega: HopfPairing,
) -> Result<PartialDualizationDatum> {
    let (a, b) = (omega.a.clone(), omega.b.clone());
    check_projection(&h, &a, &pi, &iota)?;
    let r = verify_pairing(&HopfPairing {
        omega_inv: None,
        ..omega.clone()
    })?;
    if !r.passed() {
        return Err(Error::DegeneratePairing(format!("not a Hopf pairing: {}", r.summary())));
    }
    let omega = match invert_pairing(&omega) {
        Ok(p) => p,
        Err(Error::Degenerate) => {
            return Err(Error::DegeneratePairing(format!(
                "the {}x{} value matrix is not invertible",
                a.dim, b.dim
            )))
        }
        Err(e) => return Err(e),
    };
    Ok(PartialDualizationDatum {
        h,
        a,
        b,
        pi,
        iota,
        omega,
    })
}

/// Everything produced by [`partial_dualize`].
#[derive(Clone, Debug)]
pub struct PartialDualResult {
    pub decomposition: CoinvariantDecomposition,
    /// `L = Ω(K)`, a Hopf algebra over `B`.
    pub l: Arc<HopfAlgebra>,
    /// `L ⋊ B` with its projection to `B` and section.
    pub biproduct: BiproductPresentation,
    pub rh: Arc<HopfAlgebra>,
    pub pi_prime: Matrix,
    pub iota_prime: Matrix,
    /// Which construction produced each structure map.
    pub provenance: Vec<String>,
    pub report: Report,
}

pub fn partial_dualize(d: &PartialDualizationDatum) -> Result<PartialDualResult> {
    let decomposition = coinvariants(&d.h, &d.a, &d.pi, &d.iota)?;
    let k = &decomposition.k;
    let l = Arc::new(omega_hopf(&d.omega, k, &format!("Omega({})", k.name), OmegaVariant::Omega)?);
    let bp = biproduct(&l, &format!("r({})", d.h.name))?;
    let mut report = Report::new();
    report.extend_prefixed("coinvariants: ", decomposition.report.clone());
    report.extend_prefixed("result biproduct: ", bp.report.clone());
    report.push(
        "dimension",
        bp.result.dim == k.dim * d.b.dim,
        Some(format!("{} vs {}·{}", bp.result.dim, k.dim, d.b.dim)),
    );
    let provenance = vec![
        "K: kernel of (id⊗π)Δ − id⊗1, adjoint action through ι, coaction (π⊗id)Δ".to_string(),
        "K structure: μ restricted, Δ_K = (μ⊗id)(id⊗ιπS⊗id)(Δ⊗id)Δ, S_K = μ(ιπ⊗S)Δ".to_string(),
        "L: action and coaction of Ω(K); μ_L = μ_K∘Ω₂(K,K), Δ_L = Ω₂(K,K)⁻¹∘Δ_K".to_string(),
        "r(H): smash product and coproduct of L ⋊ B".to_string(),
    ];
    Ok(PartialDualResult {
        rh: bp.result.clone(),
        pi_prime: bp.pi.clone(),
        iota_prime: bp.injection.clone(),
        decomposition,
        l,
        biproduct: bp,
        provenance,
        report,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

/// The datum `(r(H) → B, A, ω±)`.
pub fn reverse_datum(d: &PartialDualizationDatum, result: &PartialDualResult, sign: Sign) -> Result<PartialDualizationDatum> {
    let (plus, minus) = pairing_variants(&d.omega)?;
    let omega = match sign {
        Sign::Plus => plus,
        Sign::Minus => minus,
    };
    make_datum_with_pairing(result.rh.clone(), result.pi_prime.clone(), result.iota_prime.clone(), omega)
}

/// The two-fold dualization and the isomorphism back to `H`.
#[derive(Clone, Debug)]
pub struct Involutivity {
    pub first: PartialDualResult,
    pub second: PartialDualResult,
    /// `r(r(H)) → H`.
    pub isomorphism: Matrix,
    pub report: Report,
}

/// Dualizes with `ω`, then with `ω⁻`, and checks that
/// `Φ∘((θ_K∘J)⊗id_A)` is a Hopf isomorphism `r(r(H)) → H`, where `J`
/// identifies the coinvariants of `r(H)` with `L` (hence with `K`) and `Φ`
/// is the reassembly `K ⋊ A → H`.
pub fn involutivity_check(d: &PartialDualizationDatum) -> Result<Involutivity> {
    let first = partial_dualize(d)?;
    let reverse = reverse_datum(d, &first, Sign::Minus)?;
    let second = partial_dualize(&reverse)?;
    let k = &first.decomposition.k;
    let km = underlying_module(k, "K").expect("coinvariants live over A");
    let (theta_k, _) = theta(&km)?;
    let j = Matrix::identity(first.l.dim)
        .kron(&d.b.eps)
        .mul(&second.decomposition.inclusion);
    let phi = &first.decomposition.reassembly;
    let iso = phi.mul(&theta_k.mul(&j).kron(&Matrix::identity(d.a.dim)));
    let mut report = Report::new();
    report.extend_prefixed("first: ", first.report.clone());
    report.extend_prefixed("second: ", second.report.clone());
    report.extend_prefixed("isomorphism: ", verify_hopf_morphism(&iso, &second.rh, &d.h)?);
    report.push("isomorphism invertible", inverse(&iso).is_ok(), Some("singular".into()));
    Ok(Involutivity {
        first,
        second,
        isomorphism: iso,
        report,
    })
}

/// A module over `H` carried to a module over `r(H)`.
#[derive(Clone, Debug)]
pub struct TransportedModule {
    pub module: YetterDrinfeldModule,
    pub nested: NestedModule,
    pub report: Report,
}

/// Pulls `M` back to `K ⋊ A`, splits it, applies `Ω` to the `A`-level
/// object, moves the `K`-structure to `L = Ω(K)` through `Ω₂(K, M)` and
/// reassembles over `L ⋊ B`.
pub fn transport_yd_module(
    d: &PartialDualizationDatum,
    result: &PartialDualResult,
    m: &YetterDrinfeldModule,
) -> Result<TransportedModule> {
    if m.side != Side::Left || m.over.dim != d.h.dim {
        return Err(Error::Incompatible(format!("{} is not a left module over {}", m.space.name, d.h.name)));
    }
    let dec = &result.decomposition;
    let phi = &dec.reassembly;
    let phi_inv = inverse(phi)?;
    let id = Matrix::identity(m.dim());
    let pulled = YetterDrinfeldModule::new(
        dec.biproduct.result.clone(),
        m.space.clone(),
        Side::Left,
        m.rho.mul(&phi.kron(&id)),
        phi_inv.kron(&id).mul(&m.delta),
    )?;
    let nested = yd_nest(&dec.biproduct, &pulled)?;
    let x = omega_functor(&d.omega, &nested.inner, OmegaVariant::Omega)?;
    let km = underlying_module(&dec.k, "K").expect("coinvariants live over A");
    let (f2, f2_inv) = omega_monoidal(&km, &nested.inner, OmegaVariant::Omega)?;
    let moved = NestedModule {
        inner: x,
        k_rho: Arc::new(nested.k_rho.mul(&f2)),
        k_delta: Arc::new(f2_inv.mul(&nested.k_delta)),
        report: Report::new(),
    };
    let (module, unnest_report) = yd_unnest(&result.biproduct, &moved)?;
    let mut report = Report::new();
    report.extend_prefixed("split: ", nested.report.clone());
    report.extend_prefixed("reassembled: ", unnest_report);
    report.push(
        "dimension preserved",
        module.dim() == m.dim(),
        Some(format!("{} vs {}", module.dim(), m.dim())),
    );
    Ok(TransportedModule { module, nested, report })
}

/// Compares the braiding of two transported modules with the image of the
/// original braiding: since the composite functor keeps underlying spaces
/// and its monoidal structure is built from `Ω₂`, the identity checked is
/// `c′_{M,N}∘J(M,N) = J(N,M)∘c_{M,N}` for the structure
/// `J(M,N) = Ω₂(M_A, N_A)` on the `A`-level objects.
pub fn braiding_preserved(
    d: &PartialDualizationDatum,
    result: &PartialDualResult,
    m: &YetterDrinfeldModule,
    n: &YetterDrinfeldModule,
) -> Result<Report> {
    let tm = transport_yd_module(d, result, m)?;
    let tn = transport_yd_module(d, result, n)?;
    let (c, _) = yd_braiding(&m.renamed("M"), &n.renamed("N"))?;
    let (c_img, _) = yd_braiding(&tm.module.renamed("M"), &tn.module.renamed("N"))?;
    let (j_mn, _) = omega_monoidal(&tm.nested.inner, &tn.nested.inner, OmegaVariant::Omega)?;
    let (j_nm, _) = omega_monoidal(&tn.nested.inner, &tm.nested.inner, OmegaVariant::Omega)?;
    let mut r = Report::new();
    r.push_matrices("braiding preserved", &c.mul(&j_mn), &j_nm.mul(&c_img));
    Ok(r)
}
