//! Membership tests for the subgroups G = SL(n, ℂ), G₀ = SU(p, q), A, N, AN
//! and the set Q of †-fixed elements, plus seeded random generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::admissible::AdmissibleDiagonal;
use crate::error::{Error, Result};
use crate::indefinite::{dagger_unchecked, Signature};
use crate::numkernel::{c64, mat_exp, CMatrix, C64};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupTag {
    G,
    G0,
    A,
    N,
    AN,
    Q,
}

impl GroupTag {
    pub fn name(&self) -> &'static str {
        match self {
            GroupTag::G => "G",
            GroupTag::G0 => "G0",
            GroupTag::A => "A",
            GroupTag::N => "N",
            GroupTag::AN => "AN",
            GroupTag::Q => "Q",
        }
    }
}

/// Determinant within `tol` of 1. The tolerance is scaled by the Hadamard
/// bound `Π ‖row_i‖` when that exceeds 1, since that is the size of the
/// rounding error in an elimination-based determinant.
pub(crate) fn det_is_one(m: &CMatrix, tol: f64) -> Result<bool> {
    let det = m.det()?;
    let hadamard: f64 = (0..m.rows())
        .map(|i| m.row(i).iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt())
        .product();
    Ok((det - c64(1.0, 0.0)).norm() <= tol * hadamard.max(1.0))
}

fn diag_positive_real(m: &CMatrix, tol: f64) -> bool {
    m.diagonal()
        .iter()
        .all(|z| z.re > 0.0 && z.im.abs() <= tol * z.re.max(1.0))
}

/// Is `m` in the group (or set) named by `tag`, to tolerance `tol`?
pub fn is_member(m: &CMatrix, tag: GroupTag, sig: Signature, tol: f64) -> Result<bool> {
    sig.check_mat(m)?;
    if !m.is_finite() {
        return Ok(false);
    }
    let scale = m.frobenius().max(1.0);
    let n = sig.n();
    Ok(match tag {
        GroupTag::G => det_is_one(m, tol)?,
        GroupTag::G0 => {
            let gram = &dagger_unchecked(m, sig) * m;
            (&gram - &CMatrix::identity(n)).frobenius() <= tol && det_is_one(m, tol)?
        }
        GroupTag::A => {
            m.max_off_diagonal() <= tol * scale
                && diag_positive_real(m, tol)
                && diag_product_is_one(m, tol)
        }
        GroupTag::N => {
            m.max_below_diagonal() <= tol * scale
                && m.diagonal()
                    .iter()
                    .all(|z| (z - c64(1.0, 0.0)).norm() <= tol)
        }
        GroupTag::AN => {
            m.max_below_diagonal() <= tol * scale
                && diag_positive_real(m, tol)
                && diag_product_is_one(m, tol)
        }
        GroupTag::Q => {
            (&dagger_unchecked(m, sig) - m).frobenius() <= tol * scale && det_is_one(m, tol)?
        }
    })
}

fn diag_product_is_one(m: &CMatrix, tol: f64) -> bool {
    let prod: C64 = m.diagonal().into_iter().product();
    (prod - c64(1.0, 0.0)).norm() <= tol
}

pub(crate) fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub(crate) fn gaussian_c64<R: Rng>(rng: &mut R) -> C64 {
    c64(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Random element of 𝔤₀ = 𝔰𝔲(p, q) with Frobenius norm `spread`.
pub fn random_g0_algebra(sig: Signature, seed: u64, spread: f64) -> CMatrix {
    let n = sig.n();
    let mut r = rng(seed);
    let raw = CMatrix::from_vec(n, n, (0..n * n).map(|_| gaussian_c64(&mut r)).collect())
        .expect("n*n entries");
    let mut x = (&raw - &dagger_unchecked(&raw, sig)).scale_real(0.5);
    let shift = x.trace() / n as f64;
    for i in 0..n {
        x[(i, i)] -= shift;
    }
    let norm = x.frobenius();
    if norm == 0.0 {
        return CMatrix::zeros(n, n);
    }
    x.scale_real(spread / norm)
}

/// Random element of SU(p, q): the exponential of [`random_g0_algebra`].
pub fn random_g0(sig: Signature, seed: u64, spread: f64) -> Result<CMatrix> {
    if !(spread > 0.0) {
        return Err(Error::InvalidArgument("spread must be positive".into()));
    }
    mat_exp(&random_g0_algebra(sig, seed, spread))
}

/// Random element of AN. Diagonal entries are `exp(t_i − mean t)` with `t_i`
/// uniform in `[−spread, spread]`; strictly upper entries are complex
/// Gaussians scaled by `spread`. Entries below the diagonal are exact zeros.
pub fn random_an(sig: Signature, seed: u64, spread: f64) -> Result<CMatrix> {
    if !(spread > 0.0) {
        return Err(Error::InvalidArgument("spread must be positive".into()));
    }
    let n = sig.n();
    let mut r = rng(seed);
    let logs: Vec<f64> = (0..n).map(|_| r.gen_range(-spread..=spread)).collect();
    let mean = logs.iter().sum::<f64>() / n as f64;
    let mut b = CMatrix::zeros(n, n);
    for i in 0..n {
        b[(i, i)] = c64((logs[i] - mean).exp(), 0.0);
        for j in i + 1..n {
            b[(i, j)] = gaussian_c64(&mut r) * spread;
        }
    }
    Ok(b)
}

/// Random admissible exponent vector with `min λ − max μ ≥ gap`.
///
/// `λ_i = gap + u_i`, `μ_j = −u'_j` with `u` uniform in `[0, 1)`, then all
/// entries shifted by the mean so that they sum to zero.
pub fn random_admissible_diag(sig: Signature, seed: u64, gap: f64) -> Result<AdmissibleDiagonal> {
    if !(gap > 0.0) {
        return Err(Error::InvalidArgument("gap must be positive".into()));
    }
    let mut r = rng(seed);
    let lambdas: Vec<f64> = (0..sig.p()).map(|_| gap + r.gen_range(0.0..1.0)).collect();
    let mus: Vec<f64> = (0..sig.q()).map(|_| -r.gen_range(0.0..1.0)).collect();
    AdmissibleDiagonal::centered(lambdas, mus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indefinite::{pairing, ConeClass, ConeSampler};
    use crate::numkernel::distance;

    fn sig(p: usize, q: usize) -> Signature {
        Signature::new(p, q).unwrap()
    }

    #[test]
    fn identity_is_in_everything() {
        let s = sig(2, 1);
        for tag in [
            GroupTag::G,
            GroupTag::G0,
            GroupTag::A,
            GroupTag::N,
            GroupTag::AN,
            GroupTag::Q,
        ] {
            assert!(
                is_member(&CMatrix::identity(3), tag, s, 1e-12).unwrap(),
                "{tag:?}"
            );
        }
    }

    #[test]
    fn diagonal_in_a() {
        let d = CMatrix::from_real_diag(&[2.0, 0.5]);
        assert!(is_member(&d, GroupTag::A, sig(1, 1), 1e-12).unwrap());
        assert!(!is_member(&d, GroupTag::N, sig(1, 1), 1e-12).unwrap());
        assert!(!is_member(&d, GroupTag::G0, sig(1, 1), 1e-12).unwrap());
    }

    #[test]
    fn hyperbolic_boost_in_g0() {
        let r2 = 2f64.sqrt();
        let m = CMatrix::from_real_rows(&[&[r2, 1.0], &[1.0, r2]]);
        // direct: Mᵀ J M = J
        let j = sig(1, 1).j();
        let gram = &(&m.adjoint() * &j) * &m;
        assert!(distance(&gram, &j) < 1e-14);
        assert!(is_member(&m, GroupTag::G0, sig(1, 1), 1e-12).unwrap());
    }

    #[test]
    fn random_g0_contract() {
        let s = sig(1, 1);
        let m = random_g0(s, 7, 1.5).unwrap();
        let col = m.column(0);
        assert!((col[0].norm_sqr() - col[1].norm_sqr() - 1.0).abs() < 1e-12);
        for seed in 0..20 {
            let m = random_g0(sig(2, 1), seed, 2.0).unwrap();
            assert!(is_member(&m, GroupTag::G0, sig(2, 1), 1e-8).unwrap());
        }
        let tiny = random_g0(sig(2, 2), 3, 1e-12).unwrap();
        assert!(distance(&tiny, &CMatrix::identity(4)) < 1e-11);
    }

    #[test]
    fn random_g0_preserves_pairing() {
        let s = sig(2, 3);
        let g = random_g0(s, 11, 2.0).unwrap();
        let mut sampler = ConeSampler::new(s, 5);
        for _ in 0..100 {
            let x = sampler.sample(ConeClass::Timelike);
            let y = sampler.sample(ConeClass::Spacelike);
            let before = pairing(&x, &y, s).unwrap();
            let after = pairing(&(&g * &x), &(&g * &y), s).unwrap();
            assert!((before - after).norm() <= 1e-9 * (1.0 + before.norm()) * 100.0);
        }
    }

    #[test]
    fn random_an_contract() {
        let b = random_an(sig(1, 1), 3, 1.0).unwrap();
        assert_eq!(b[(1, 0)], C64::default());
        assert!(b[(0, 0)].re > 0.0 && b[(0, 0)].im == 0.0);
        let b = random_an(sig(2, 1), 9, 1.0).unwrap();
        assert!((b.det().unwrap() - c64(1.0, 0.0)).norm() < 1e-12);
        assert_eq!(b.max_below_diagonal(), 0.0);
        assert!(b.diagonal().iter().all(|z| z.im == 0.0 && z.re > 0.0));
        let near = random_an(sig(2, 2), 1, 1e-9).unwrap();
        assert!(is_member(&near, GroupTag::AN, sig(2, 2), 1e-8).unwrap());
    }

    #[test]
    fn admissible_diag_contract() {
        let d = random_admissible_diag(sig(1, 1), 0, 2.0).unwrap();
        assert!(d.lambdas()[0] - d.mus()[0] >= 2.0);
        let d = random_admissible_diag(sig(2, 1), 4, 0.3).unwrap();
        assert!(d.lambdas()[0] >= d.lambdas()[1]);
        assert!(d.lambdas()[1] > d.mus()[0]);
        assert!(d.to_vec().iter().sum::<f64>().abs() < 1e-14);
        let d = random_admissible_diag(sig(3, 2), 4, 1e-6).unwrap();
        assert!(d.gap() >= 1e-6 * 0.999);
    }

    #[test]
    fn g0_and_an_meet_only_at_identity() {
        // A diagonal element of A that is also pseudo-unitary must be I.
        let s = sig(1, 1);
        let tol = 1e-9;
        for k in [1.0, 1.0 + 1e-12, 1.001, 2.0] {
            let m = CMatrix::from_real_diag(&[k, 1.0 / k]);
            let both = is_member(&m, GroupTag::G0, s, tol).unwrap()
                && is_member(&m, GroupTag::AN, s, tol).unwrap();
            if both {
                assert!(distance(&m, &CMatrix::identity(2)) <= 10.0 * tol);
            }
        }
    }

    #[test]
    fn wrong_shape_is_an_error() {
        assert!(is_member(&CMatrix::identity(3), GroupTag::G, sig(1, 1), 1e-9).is_err());
    }
}
