//! Admissibility of diagonal exponents, of elements of Q and of elements of
//! AN, together with the cone-preservation criterion, the pseudo
//! Rayleigh-Ritz ratio and leading principal minors.

use crate::error::{Error, Result};
use crate::groups::{is_member, GroupTag};
use crate::indefinite::{
    classify, dagger_unchecked, norm_sq, norm_sq_unchecked, pairing_unchecked, ConeClass,
    ConeSampler, Signature,
};
use crate::numkernel::{determinant, eig, mat_exp, CMatrix, CVector, C64};
use crate::DEFAULT_TOL_EIG;

/// Exponent vector `(λ₁ ≥ … ≥ λ_p; μ₁ ≥ … ≥ μ_q)` with `λ_p > μ₁` and
/// zero sum.
#[derive(Clone, Debug, PartialEq)]
pub struct AdmissibleDiagonal {
    lambdas: Vec<f64>,
    mus: Vec<f64>,
}

impl AdmissibleDiagonal {
    /// Sorts each block into non-increasing order and validates the gap and
    /// the zero-sum condition (to 10⁻¹² relative).
    pub fn new(mut lambdas: Vec<f64>, mut mus: Vec<f64>) -> Result<Self> {
        if lambdas.is_empty() || mus.is_empty() {
            return Err(Error::InvalidArgument(
                "both blocks must be non-empty".into(),
            ));
        }
        if lambdas.iter().chain(&mus).any(|x| !x.is_finite()) {
            return Err(Error::NonFinite);
        }
        lambdas.sort_by(|a, b| b.total_cmp(a));
        mus.sort_by(|a, b| b.total_cmp(a));
        let sum: f64 = lambdas.iter().chain(&mus).sum();
        let scale: f64 = lambdas
            .iter()
            .chain(&mus)
            .map(|x| x.abs())
            .sum::<f64>()
            .max(1.0);
        if sum.abs() > 1e-12 * scale {
            return Err(Error::InvalidArgument(format!(
                "entries sum to {sum}, not 0"
            )));
        }
        let d = AdmissibleDiagonal { lambdas, mus };
        if d.gap() <= 0.0 {
            return Err(Error::NotAdmissible(format!(
                "gap {} is not positive",
                d.gap()
            )));
        }
        Ok(d)
    }

    /// Like [`AdmissibleDiagonal::new`], after subtracting the mean.
    pub fn centered(lambdas: Vec<f64>, mus: Vec<f64>) -> Result<Self> {
        let n = (lambdas.len() + mus.len()) as f64;
        let mean = lambdas.iter().chain(&mus).sum::<f64>() / n;
        Self::new(
            lambdas.into_iter().map(|x| x - mean).collect(),
            mus.into_iter().map(|x| x - mean).collect(),
        )
    }

    pub fn lambdas(&self) -> &[f64] {
        &self.lambdas
    }

    pub fn mus(&self) -> &[f64] {
        &self.mus
    }

    pub fn signature(&self) -> Signature {
        Signature::new(self.lambdas.len(), self.mus.len()).expect("non-empty blocks")
    }

    /// `λ_p − μ₁`
    pub fn gap(&self) -> f64 {
        self.lambdas[self.lambdas.len() - 1] - self.mus[0]
    }

    pub fn to_vec(&self) -> Vec<f64> {
        self.lambdas.iter().chain(&self.mus).copied().collect()
    }

    /// The element `diag(λ; μ)` of 𝔞.
    pub fn matrix(&self) -> CMatrix {
        CMatrix::from_real_diag(&self.to_vec())
    }

    /// `exp(diag(λ; μ))`, an admissible element of A.
    pub fn exp(&self) -> CMatrix {
        let e: Vec<f64> = self.to_vec().iter().map(|x| x.exp()).collect();
        CMatrix::from_real_diag(&e)
    }
}

/// `min(first p) > max(last q)`, strictly.
pub fn is_admissible_diag(d: &[f64], sig: Signature) -> Result<bool> {
    if d.len() != sig.n() {
        return Err(Error::dims(format!("{} entries", sig.n()), d.len()));
    }
    let lo = d[..sig.p()].iter().copied().fold(f64::INFINITY, f64::min);
    let hi = d[sig.p()..]
        .iter()
        .copied()
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(lo > hi)
}

#[derive(Clone, Debug, PartialEq)]
pub struct AdmissibilityReport {
    pub admissible: bool,
    pub eigenvalues: Vec<C64>,
    /// Eigenvalues whose eigenvectors are timelike, descending.
    pub timelike_values: Vec<f64>,
    /// Eigenvalues whose eigenvectors are spacelike, descending.
    pub spacelike_values: Vec<f64>,
    /// `min(timelike_values) − max(spacelike_values)`; 0 when undefined.
    pub margin: f64,
    pub reason: String,
}

impl AdmissibilityReport {
    fn rejected(eigenvalues: Vec<C64>, reason: impl Into<String>) -> Self {
        AdmissibilityReport {
            admissible: false,
            eigenvalues,
            timelike_values: Vec::new(),
            spacelike_values: Vec::new(),
            margin: 0.0,
            reason: reason.into(),
        }
    }
}

/// Eigenbasis of an element of Q that is pseudo-orthonormal for the
/// indefinite pairing: `s = V · diag(values) · V⁻¹` with
/// `V⁻¹ = diag(signs) · V* · J`.
#[derive(Clone, Debug)]
pub(crate) struct PseudoEigenbasis {
    pub vectors: CMatrix,
    pub values: Vec<f64>,
    pub signs: Vec<f64>,
}

impl PseudoEigenbasis {
    /// `V · diag(f(values)) · V⁻¹`
    pub fn apply_fn(&self, sig: Signature, f: impl Fn(f64) -> f64) -> CMatrix {
        let fv: Vec<C64> = self.values.iter().map(|&x| C64::new(f(x), 0.0)).collect();
        let left = self.vectors.scale_cols(&fv);
        let signs: Vec<C64> = self.signs.iter().map(|&e| C64::new(e, 0.0)).collect();
        let jsig: Vec<C64> = sig.signs().into_iter().map(|e| C64::new(e, 0.0)).collect();
        let inv = self.vectors.adjoint().scale_rows(&signs).scale_cols(&jsig);
        &left * &inv
    }
}

/// Eigenvalues closer than this (relative) are analysed as one eigenspace.
fn cluster_width(tol: f64, lambda: f64) -> f64 {
    tol * (1.0 + lambda.abs())
}

pub(crate) fn analyze_q(
    s: &CMatrix,
    sig: Signature,
    tol: f64,
) -> Result<(AdmissibilityReport, Option<PseudoEigenbasis>)> {
    sig.check_mat(s)?;
    if !is_member(s, GroupTag::Q, sig, tol)? {
        return Err(Error::NotMember("Q"));
    }
    let e = eig(s, DEFAULT_TOL_EIG)?;
    let values = e.values.clone();

    for z in &values {
        if z.im.abs() > tol * (1.0 + z.re.abs()) {
            return Ok((
                AdmissibilityReport::rejected(values, "complex eigenvalue"),
                None,
            ));
        }
        if z.re <= 0.0 {
            return Ok((
                AdmissibilityReport::rejected(values, "non-positive eigenvalue"),
                None,
            ));
        }
    }
    if e.defective {
        return Ok((
            AdmissibilityReport::rejected(values, "not diagonalizable"),
            None,
        ));
    }

    let n = sig.n();
    let mut vectors = CMatrix::zeros(n, n);
    let mut signs = vec![0.0; n];
    let mut mixed_cluster = false;
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n
            && values[end - 1].re - values[end].re <= cluster_width(tol, values[end - 1].re)
        {
            end += 1;
        }
        // Pseudo-orthonormalize inside the eigenspace.
        let mut seen = (false, false);
        for k in start..end {
            let mut w = e.vectors.column(k);
            for l in start..k {
                let u = vectors.column(l);
                let coeff = pairing_unchecked(w.as_slice(), u.as_slice(), sig) * signs[l];
                w.axpy(-coeff, &u);
            }
            let ns = norm_sq_unchecked(w.as_slice(), sig);
            if ns.abs() <= tol * w.norm2_sq() {
                return Ok((
                    AdmissibilityReport::rejected(values, "null eigenvector"),
                    None,
                ));
            }
            let sign = ns.signum();
            let w = w.scale(C64::new(1.0 / ns.abs().sqrt(), 0.0));
            vectors.set_column(k, &w);
            signs[k] = sign;
            if sign > 0.0 {
                seen.0 = true;
            } else {
                seen.1 = true;
            }
        }
        mixed_cluster |= seen.0 && seen.1;
        start = end;
    }

    let mut timelike_values = Vec::new();
    let mut spacelike_values = Vec::new();
    for (z, &sign) in values.iter().zip(&signs) {
        if sign > 0.0 {
            timelike_values.push(z.re);
        } else {
            spacelike_values.push(z.re);
        }
    }
    let margin = if timelike_values.is_empty() || spacelike_values.is_empty() {
        0.0
    } else {
        timelike_values
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min)
            - spacelike_values
                .iter()
                .copied()
                .fold(f64::NEG_INFINITY, f64::max)
    };

    let (admissible, reason) = if timelike_values.len() != sig.p() {
        (
            false,
            format!(
                "inertia ({}, {}) does not match signature {sig}",
                timelike_values.len(),
                spacelike_values.len()
            ),
        )
    } else if mixed_cluster || margin <= tol {
        (false, "gap violated".to_string())
    } else {
        (true, "admissible".to_string())
    };
    let report = AdmissibilityReport {
        admissible,
        eigenvalues: values.clone(),
        timelike_values,
        spacelike_values,
        margin,
        reason,
    };
    let basis = admissible.then(|| PseudoEigenbasis {
        vectors,
        values: values.iter().map(|z| z.re).collect(),
        signs,
    });
    Ok((report, basis))
}

/// Admissibility of `s ∈ Q` through its eigen-structure: real positive
/// eigenvalues whose eigenvectors split into p timelike and q spacelike
/// ones, with every timelike eigenvalue above every spacelike one.
pub fn check_admissible_q(s: &CMatrix, sig: Signature, tol: f64) -> Result<AdmissibilityReport> {
    analyze_q(s, sig, tol).map(|(report, _)| report)
}

/// Admissibility of `b ∈ AN`, decided on its symmetrization `b†b`.
pub fn check_admissible_an(b: &CMatrix, sig: Signature, tol: f64) -> Result<AdmissibilityReport> {
    sig.check_mat(b)?;
    if !is_member(b, GroupTag::AN, sig, tol)? {
        return Err(Error::NotMember("AN"));
    }
    let sym = &dagger_unchecked(b, sig) * b;
    check_admissible_q(&sym, sig, tol)
}

/// Searches for a timelike or nonzero null vector `x` whose image `s·x` is
/// not timelike. Samples alternate between the two cones.
pub fn find_cone_violation(
    s: &CMatrix,
    sig: Signature,
    trials: usize,
    seed: u64,
    tol: f64,
) -> Result<Option<CVector>> {
    sig.check_mat(s)?;
    let mut sampler = ConeSampler::new(sig, seed);
    for k in 0..trials {
        let cls = if k % 2 == 0 {
            ConeClass::Null
        } else {
            ConeClass::Timelike
        };
        let x = sampler.sample(cls);
        let image = s * &x;
        let ok = match classify(&image, sig, tol) {
            Ok(c) => c == ConeClass::Timelike,
            Err(Error::ZeroVector) => false,
            Err(e) => return Err(e),
        };
        if !ok {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// Monte-Carlo check that `s` maps the closed timelike cone (minus the
/// origin) into the open timelike cone. A `true` is evidence, not proof.
pub fn cone_preservation_check(
    s: &CMatrix,
    sig: Signature,
    trials: usize,
    seed: u64,
) -> Result<bool> {
    Ok(find_cone_violation(s, sig, trials, seed, crate::DEFAULT_TOL)?.is_none())
}

/// `⟨s x, x⟩ / ⟨x, x⟩` for timelike `x`.
pub fn pseudo_rayleigh(s: &CMatrix, x: &CVector, sig: Signature) -> Result<f64> {
    sig.check_mat(s)?;
    let den = norm_sq(x, sig)?;
    if !(den > 0.0) {
        return Err(Error::NotTimelike);
    }
    let sx = s * x;
    Ok(pairing_unchecked(sx.as_slice(), x.as_slice(), sig).re / den)
}

/// Leading principal minors `Δ₁, …, Δ_n`.
pub fn leading_minors(s: &CMatrix) -> Result<Vec<C64>> {
    let n = s.require_square()?;
    (1..=n).map(|k| determinant(&s.leading_block(k))).collect()
}

/// `exp(X)` for `X ∈ 𝔮`, checked to land in Q.
pub fn exp_q(x: &CMatrix, sig: Signature, tol: f64) -> Result<CMatrix> {
    sig.check_mat(x)?;
    if (&dagger_unchecked(x, sig) - x).frobenius() > tol * x.frobenius().max(1.0) {
        return Err(Error::NotMember("q"));
    }
    mat_exp(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::c64;
    use std::f64::consts::{E, FRAC_1_SQRT_2};

    const TOL: f64 = 1e-9;

    fn sig(p: usize, q: usize) -> Signature {
        Signature::new(p, q).unwrap()
    }

    fn su11_example() -> CMatrix {
        CMatrix::from_real_rows(&[&[2.0, FRAC_1_SQRT_2], &[-FRAC_1_SQRT_2, 0.25]])
    }

    #[test]
    fn diag_admissibility() {
        assert!(is_admissible_diag(&[1.0, -1.0], sig(1, 1)).unwrap());
        assert!(!is_admissible_diag(&[0.0, 0.0], sig(1, 1)).unwrap());
        assert!(is_admissible_diag(&[2.0, 0.5, 0.4], sig(2, 1)).unwrap());
        assert!(is_admissible_diag(&[1.0], sig(1, 1)).is_err());
    }

    #[test]
    fn admissible_diagonal_validation() {
        assert!(AdmissibleDiagonal::new(vec![1.0], vec![-1.0]).is_ok());
        assert!(AdmissibleDiagonal::new(vec![0.0], vec![0.0]).is_err());
        assert!(AdmissibleDiagonal::new(vec![1.0], vec![0.0]).is_err());
        let d = AdmissibleDiagonal::new(vec![-0.5, 1.5], vec![-1.0]).unwrap();
        assert_eq!(d.lambdas(), &[1.5, -0.5]);
        assert_eq!(d.gap(), 0.5);
    }

    #[test]
    fn identity_is_not_admissible() {
        let r = check_admissible_q(&CMatrix::identity(2), sig(1, 1), TOL).unwrap();
        assert!(!r.admissible);
        assert!(r.reason.contains("gap violated"), "{}", r.reason);
    }

    #[test]
    fn su11_q_example_is_admissible() {
        let r = check_admissible_q(&su11_example(), sig(1, 1), TOL).unwrap();
        assert!(r.admissible, "{}", r.reason);
        let root = 17f64.sqrt();
        assert!((r.timelike_values[0] - (9.0 + root) / 8.0).abs() < 1e-12);
        assert!((r.spacelike_values[0] - (9.0 - root) / 8.0).abs() < 1e-12);
        assert!((r.margin - root / 4.0).abs() < 1e-12);
    }

    #[test]
    fn swapped_diagonal_is_not_admissible() {
        let s = CMatrix::from_real_diag(&[1.0 / E, E]);
        let r = check_admissible_q(&s, sig(1, 1), TOL).unwrap();
        assert!(!r.admissible);
        assert!(r.margin < 0.0);
    }

    #[test]
    fn elliptic_element_has_complex_spectrum() {
        // t₁ + t₂ < 2 gives a rotation-like element of Q.
        let (t1, t2) = (0.5, 0.5);
        let m = (1.0f64 - t1 * t2).sqrt();
        let s = CMatrix::from_real_rows(&[&[t1, m], &[-m, t2]]);
        let r = check_admissible_q(&s, sig(1, 1), TOL).unwrap();
        assert!(!r.admissible);
        assert_eq!(r.reason, "complex eigenvalue");
    }

    #[test]
    fn repeated_timelike_eigenvalue() {
        let s = CMatrix::from_real_diag(&[2.0, 2.0, 0.25]);
        let r = check_admissible_q(&s, sig(2, 1), TOL).unwrap();
        assert!(r.admissible, "{}", r.reason);
        assert_eq!(r.timelike_values.len(), 2);
    }

    #[test]
    fn not_in_q_is_an_error() {
        let m = CMatrix::from_real_rows(&[&[1.0, 1.0], &[1.0, 2.0]]);
        assert_eq!(
            check_admissible_q(&m, sig(1, 1), TOL).unwrap_err(),
            Error::NotMember("Q")
        );
    }

    #[test]
    fn an_examples() {
        let s = sig(1, 1);
        let b = CMatrix::from_real_rows(&[&[2.0, 0.0], &[0.0, 0.5]]);
        assert!(check_admissible_an(&b, s, TOL).unwrap().admissible);
        assert!(
            !check_admissible_an(&CMatrix::identity(2), s, TOL)
                .unwrap()
                .admissible
        );
        let r2 = 2f64.sqrt();
        let b = CMatrix::from_real_rows(&[&[r2, 0.25], &[0.0, 1.0 / r2]]);
        assert!(check_admissible_an(&b, s, TOL).unwrap().admissible);
        let not_an = CMatrix::from_real_rows(&[&[1.0, 0.0], &[1.0, 1.0]]);
        assert_eq!(
            check_admissible_an(&not_an, s, TOL).unwrap_err(),
            Error::NotMember("AN")
        );
    }

    #[test]
    fn cone_examples() {
        let s = sig(1, 1);
        let a = CMatrix::from_real_diag(&[E, 1.0 / E]);
        // Near-null timelike vector (1, 0.999): e² − 0.998·e⁻² > 0.
        let x = CVector::from_real(&[1.0, 0.999]);
        assert_eq!(classify(&(&a * &x), s, TOL).unwrap(), ConeClass::Timelike);
        let null = CVector::from_real(&[1.0, 1.0]);
        let image = &a * &null;
        assert_eq!(image, CVector::from_real(&[E, 1.0 / E]));
        assert_eq!(classify(&image, s, TOL).unwrap(), ConeClass::Timelike);
        assert!(cone_preservation_check(&a, s, 1000, 1).unwrap());
        assert!(!cone_preservation_check(&CMatrix::identity(2), s, 1000, 1).unwrap());
    }

    #[test]
    fn rayleigh_examples() {
        let s = sig(1, 1);
        let e1 = CVector::from_real(&[1.0, 0.0]);
        let d = CMatrix::from_real_diag(&[2.0, 0.5]);
        assert_eq!(pseudo_rayleigh(&d, &e1, s).unwrap(), 2.0);
        let x = CVector::new(vec![c64(1.0, 0.3), c64(0.2, -0.4)]);
        assert!((pseudo_rayleigh(&CMatrix::identity(2), &x, s).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(pseudo_rayleigh(&su11_example(), &e1, s).unwrap(), 2.0);
        let e2 = CVector::from_real(&[0.0, 1.0]);
        assert_eq!(pseudo_rayleigh(&d, &e2, s).unwrap_err(), Error::NotTimelike);
    }

    #[test]
    fn minors() {
        let ones: Vec<C64> = leading_minors(&CMatrix::identity(3)).unwrap();
        assert_eq!(ones, vec![c64(1.0, 0.0); 3]);
        let m = leading_minors(&CMatrix::from_real_diag(&[2.0, 3.0, 1.0 / 6.0])).unwrap();
        for (got, want) in m.iter().zip([2.0, 6.0, 1.0]) {
            assert!((got - c64(want, 0.0)).norm() < 1e-15);
        }
        // 2·¼ + ½ = 1
        let m = leading_minors(&su11_example()).unwrap();
        assert!((m[0] - c64(2.0, 0.0)).norm() < 1e-15);
        assert!((m[1] - c64(1.0, 0.0)).norm() < 1e-15);
    }
}
