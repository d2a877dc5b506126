//! Iwasawa-type decomposition `g = s · b` with `s ∈ SU(p, q)` and `b ∈ AN`.
//!
//! Two independent algorithms are provided. [`decompose_gs`] runs
//! Gram-Schmidt on the columns of `g` with respect to the indefinite pairing;
//! [`decompose_gauss`] factors the Hermitian matrix `g* J g = b* (a² J) b`
//! by an unpivoted LDL* and reads `b` off the factors. Both fail exactly when
//! `g` lies outside the identity cell `G₀·AN`.

use crate::admissible::{analyze_q, check_admissible_an, AdmissibilityReport};
use crate::error::{ConeFailure, Error, Result};
use crate::groups::{det_is_one, is_member, GroupTag};
use crate::indefinite::{dagger_unchecked, norm_sq_unchecked, pairing_unchecked, Signature};
use crate::numkernel::{
    c64, distance, eig, signed_ldl, solve_upper_triangular, CMatrix, CVector, C64,
};
use crate::{DEFAULT_TOL, DEFAULT_TOL_EIG};

#[derive(Clone, Debug)]
pub struct DecompPair {
    /// Factor in SU(p, q).
    pub s: CMatrix,
    /// Factor in AN.
    pub b: CMatrix,
    /// Positive diagonal of `b`.
    pub a: Vec<f64>,
    /// Unipotent part, `b = diag(a) · n_factor`.
    pub n_factor: CMatrix,
    /// `‖g − s·b‖_F`
    pub residual: f64,
}

impl DecompPair {
    fn assemble(g: &CMatrix, s: CMatrix, b: CMatrix) -> Self {
        let a: Vec<f64> = b.diagonal().iter().map(|z| z.re).collect();
        let inv: Vec<C64> = a.iter().map(|&x| c64(1.0 / x, 0.0)).collect();
        let n_factor = b.scale_rows(&inv);
        let residual = distance(g, &(&s * &b));
        DecompPair {
            s,
            b,
            a,
            n_factor,
            residual,
        }
    }

    /// `‖s₁ − s₂‖_F + ‖b₁ − b₂‖_F`
    pub fn distance_to(&self, other: &DecompPair) -> f64 {
        distance(&self.s, &other.s) + distance(&self.b, &other.b)
    }
}

/// Per-column diagnostics of a Gram-Schmidt run.
#[derive(Clone, Debug, Default)]
pub struct GsTrace {
    /// Indefinite norm² of the residual vector at each column, before
    /// normalization. Positive for the first p columns, negative after.
    pub residual_norms: Vec<f64>,
    /// `‖v₂‖²·‖v₁‖² − |⟨v₂, v₁⟩|²` for the first two columns.
    pub column_two_gap: Option<f64>,
}

fn require_g(g: &CMatrix, sig: Signature, tol: f64) -> Result<()> {
    sig.check_mat(g)?;
    if !g.is_finite() {
        return Err(Error::NonFinite);
    }
    if !det_is_one(g, tol)? {
        return Err(Error::NotMember("G"));
    }
    Ok(())
}

/// `b ↦ b† b`, from AN into Q.
pub fn sym(b: &CMatrix, sig: Signature) -> Result<CMatrix> {
    sig.check_mat(b)?;
    if !is_member(b, GroupTag::AN, sig, DEFAULT_TOL)? {
        return Err(Error::NotMember("AN"));
    }
    Ok(&dagger_unchecked(b, sig) * b)
}

/// Pseudo-Gram-Schmidt decomposition.
pub fn decompose_gs(g: &CMatrix, sig: Signature, tol: f64) -> Result<DecompPair> {
    decompose_gs_traced(g, sig, tol).map(|(pair, _)| pair)
}

/// [`decompose_gs`] together with its per-column trace.
///
/// Column `k` is projected off the earlier columns with coefficients
/// `m_{ℓk} = ε_ℓ ⟨v_k, u_ℓ⟩` (`ε_ℓ = ‖u_ℓ‖² = ±1`), in two passes. The
/// remainder must be timelike for `k ≤ p` and spacelike after; its
/// normalization gives `u_k` and `r_k = √|‖·‖²|`.
pub fn decompose_gs_traced(g: &CMatrix, sig: Signature, tol: f64) -> Result<(DecompPair, GsTrace)> {
    require_g(g, sig, tol)?;
    let n = sig.n();
    let mut us: Vec<CVector> = Vec::with_capacity(n);
    let mut b = CMatrix::zeros(n, n);
    let mut trace = GsTrace::default();

    if n >= 2 {
        let v1 = g.column(0);
        let v2 = g.column(1);
        let n1 = norm_sq_unchecked(v1.as_slice(), sig);
        let n2 = norm_sq_unchecked(v2.as_slice(), sig);
        let cross = pairing_unchecked(v2.as_slice(), v1.as_slice(), sig).norm_sqr();
        trace.column_two_gap = Some(n2 * n1 - cross);
    }

    for k in 0..n {
        let mut w = g.column(k);
        for _pass in 0..2 {
            for (l, u) in us.iter().enumerate() {
                let coeff = pairing_unchecked(w.as_slice(), u.as_slice(), sig) * sig.sign(l);
                b[(l, k)] += coeff;
                w.axpy(-coeff, u);
            }
        }
        let ns = norm_sq_unchecked(w.as_slice(), sig);
        trace.residual_norms.push(ns);
        let column = k + 1;
        if ns.abs() <= tol * w.norm2_sq() {
            return Err(Error::NotDecomposable {
                column,
                kind: ConeFailure::Boundary,
            });
        }
        if ns.signum() != sig.sign(k) {
            return Err(Error::NotDecomposable {
                column,
                kind: ConeFailure::WrongCone,
            });
        }
        let r = ns.abs().sqrt();
        b[(k, k)] = c64(r, 0.0);
        us.push(w.scale(c64(1.0 / r, 0.0)));
    }
    let s = CMatrix::from_columns(&us);
    Ok((DecompPair::assemble(g, s, b), trace))
}

/// Gauss (LDV) route: factor `J · g†g = g* J g = L · D · L*` without
/// pivoting; then `b = diag(√|D|) · L*` and `s = g · b⁻¹`.
///
/// The pivots must carry the sign pattern of `J`; `|D_i| = Δ_i / Δ_{i−1}`
/// for the leading minors `Δ` of `g†g`.
pub fn decompose_gauss(g: &CMatrix, sig: Signature, tol: f64) -> Result<DecompPair> {
    require_g(g, sig, tol)?;
    let n = sig.n();
    let jg = g.scale_rows(
        &sig.signs()
            .into_iter()
            .map(|e| c64(e, 0.0))
            .collect::<Vec<_>>(),
    );
    let jh = &g.adjoint() * &jg;
    let ldl = signed_ldl(&jh, tol)?;
    let pivots = ldl.pivots();
    for (i, &d) in pivots.iter().enumerate() {
        if d.signum() != sig.sign(i) {
            return Err(Error::WrongInertia { index: i + 1 });
        }
    }
    let a: Vec<C64> = pivots.iter().map(|d| c64(d.abs().sqrt(), 0.0)).collect();
    let mut b = ldl.l.adjoint().scale_rows(&a);
    for i in 0..n {
        for j in 0..i {
            b[(i, j)] = C64::default();
        }
        b[(i, i)] = a[i];
    }
    let b_inv = solve_upper_triangular(&b, &CMatrix::identity(n))?;
    let s = g * &b_inv;

    let defect = (&(&dagger_unchecked(&s, sig) * &s) - &CMatrix::identity(n)).frobenius();
    if defect > tol.sqrt() * s.frobenius().powi(2).max(1.0) {
        return Err(Error::NotMember("G0"));
    }
    Ok(DecompPair::assemble(g, s, b))
}

#[derive(Clone, Debug)]
pub struct DressResult {
    pub g_prime: CMatrix,
    pub b_prime: CMatrix,
    /// `‖b·g − g′·b′‖_F`
    pub residual: f64,
}

fn in_g0_relative(g: &CMatrix, sig: Signature, tol: f64) -> bool {
    let defect = (&(&dagger_unchecked(g, sig) * g) - &CMatrix::identity(sig.n())).frobenius();
    defect <= tol * g.frobenius().powi(2).max(1.0)
}

/// Right dressing: `b · g = g′ · b′`, returning `(g′, b′)` with `b′ = b^g`.
pub fn dress(b: &CMatrix, g: &CMatrix, sig: Signature, tol: f64) -> Result<DressResult> {
    sig.check_mat(b)?;
    sig.check_mat(g)?;
    if !is_member(b, GroupTag::AN, sig, tol)? {
        return Err(Error::NotMember("AN"));
    }
    if !in_g0_relative(g, sig, tol) {
        return Err(Error::NotMember("G0"));
    }
    let bg = b * g;
    let pair = decompose_gauss(&bg, sig, tol)?;
    Ok(DressResult {
        residual: pair.residual,
        g_prime: pair.s,
        b_prime: pair.b,
    })
}

/// Logarithm of an admissible element of Q, landing in 𝔮 with trace 0.
pub fn q_log(s: &CMatrix, sig: Signature, tol: f64) -> Result<CMatrix> {
    let (report, basis) = analyze_q(s, sig, tol)?;
    let basis = basis.ok_or(Error::NotAdmissible(report.reason))?;
    let x = basis.apply_fn(sig, f64::ln);
    let mut x = (&x + &dagger_unchecked(&x, sig)).scale_real(0.5);
    let shift = x.trace().re / sig.n() as f64;
    for i in 0..sig.n() {
        x[(i, i)] -= shift;
    }
    Ok(x)
}

#[derive(Clone, Debug)]
pub struct GAdmissible {
    pub h: CMatrix,
    pub b: CMatrix,
    /// Square roots of the eigenvalues of `g†g`, descending.
    pub singular_spectrum: Vec<f64>,
    pub report: AdmissibilityReport,
}

/// Decomposes `g = h·b` and requires `b` admissible.
pub fn decompose_g_admissible(g: &CMatrix, sig: Signature, tol: f64) -> Result<GAdmissible> {
    let pair = decompose_gauss(g, sig, tol)?;
    let report = check_admissible_an(&pair.b, sig, tol)?;
    if !report.admissible {
        return Err(Error::NotAdmissible(report.reason));
    }
    let gram = &dagger_unchecked(g, sig) * g;
    let spectrum = eig(&gram, DEFAULT_TOL_EIG)?;
    let mut singular_spectrum: Vec<f64> = spectrum
        .values
        .iter()
        .map(|z| z.re.max(0.0).sqrt())
        .collect();
    singular_spectrum.sort_by(|a, b| b.total_cmp(a));
    Ok(GAdmissible {
        h: pair.s,
        b: pair.b,
        singular_spectrum,
        report,
    })
}
