//! Signature-(p, q) geometry on ℂⁿ: the indefinite pairing, the causal type
//! of a vector, and the adjoint `A† = J A* J`.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::numkernel::{c64, CMatrix, CVector, C64};

/// The pair (p, q) with n = p + q; fixes `J = diag(1ᵖ, −1^q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    p: usize,
    q: usize,
}

impl Signature {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::InvalidArgument(format!(
                "signature ({p}, {q}) must have p >= 1 and q >= 1"
            )));
        }
        Ok(Signature { p, q })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn n(&self) -> usize {
        self.p + self.q
    }

    /// Diagonal entry `J_ii` (±1).
    #[inline]
    pub fn sign(&self, i: usize) -> f64 {
        if i < self.p {
            1.0
        } else {
            -1.0
        }
    }

    pub fn signs(&self) -> Vec<f64> {
        (0..self.n()).map(|i| self.sign(i)).collect()
    }

    pub fn j(&self) -> CMatrix {
        CMatrix::from_real_diag(&self.signs())
    }

    pub(crate) fn check_vec(&self, x: &CVector) -> Result<()> {
        if x.dim() != self.n() {
            return Err(Error::dims(format!("dim {}", self.n()), x.dim()));
        }
        Ok(())
    }

    pub(crate) fn check_mat(&self, m: &CMatrix) -> Result<()> {
        if m.rows() != self.n() || m.cols() != self.n() {
            return Err(Error::dims(
                format!("{n}x{n}", n = self.n()),
                format!("{}x{}", m.rows(), m.cols()),
            ));
        }
        Ok(())
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.q)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConeClass {
    Timelike,
    Null,
    Spacelike,
}

impl ConeClass {
    pub fn name(&self) -> &'static str {
        match self {
            ConeClass::Timelike => "timelike",
            ConeClass::Null => "null",
            ConeClass::Spacelike => "spacelike",
        }
    }
}

/// `⟨x, y⟩ = Σ_{i≤p} x_i ȳ_i − Σ_{i>p} x_i ȳ_i`
pub fn pairing(x: &CVector, y: &CVector, sig: Signature) -> Result<C64> {
    sig.check_vec(x)?;
    sig.check_vec(y)?;
    Ok(pairing_unchecked(x.as_slice(), y.as_slice(), sig))
}

#[inline]
pub(crate) fn pairing_unchecked(x: &[C64], y: &[C64], sig: Signature) -> C64 {
    let p = sig.p();
    let pos: C64 = x[..p].iter().zip(&y[..p]).map(|(a, b)| a * b.conj()).sum();
    let neg: C64 = x[p..].iter().zip(&y[p..]).map(|(a, b)| a * b.conj()).sum();
    pos - neg
}

/// `‖x‖²` for the indefinite pairing.
pub fn norm_sq(x: &CVector, sig: Signature) -> Result<f64> {
    sig.check_vec(x)?;
    Ok(norm_sq_unchecked(x.as_slice(), sig))
}

#[inline]
pub(crate) fn norm_sq_unchecked(x: &[C64], sig: Signature) -> f64 {
    let p = sig.p();
    let pos: f64 = x[..p].iter().map(|z| z.norm_sqr()).sum();
    let neg: f64 = x[p..].iter().map(|z| z.norm_sqr()).sum();
    pos - neg
}

/// Causal type of `x`, with the Null band `|‖x‖²| ≤ tol · ‖x‖₂²`.
pub fn classify(x: &CVector, sig: Signature, tol: f64) -> Result<ConeClass> {
    sig.check_vec(x)?;
    let e2 = x.norm2_sq();
    if e2 == 0.0 {
        return Err(Error::ZeroVector);
    }
    let ns = norm_sq_unchecked(x.as_slice(), sig);
    Ok(if ns > tol * e2 {
        ConeClass::Timelike
    } else if ns < -tol * e2 {
        ConeClass::Spacelike
    } else {
        ConeClass::Null
    })
}

/// `A† = J A* J`, the adjoint for the indefinite pairing.
pub fn dagger(a: &CMatrix, sig: Signature) -> Result<CMatrix> {
    sig.check_mat(a)?;
    Ok(dagger_unchecked(a, sig))
}

pub(crate) fn dagger_unchecked(a: &CMatrix, sig: Signature) -> CMatrix {
    let n = sig.n();
    let mut out = a.adjoint();
    for i in 0..n {
        for j in 0..n {
            if sig.sign(i) != sig.sign(j) {
                out[(i, j)] = -out[(i, j)];
            }
        }
    }
    out
}

/// Reproducible stream of vectors of a prescribed causal type.
///
/// Timelike vectors are `(z, w)` with `‖w‖ = u·‖z‖`, `u` uniform in `[0, 1)`,
/// and Gaussian directions for `z` and `w`; spacelike vectors swap the roles.
/// Null vectors take `‖w‖ = ‖z‖` and are normalized to unit Euclidean length.
pub struct ConeSampler {
    sig: Signature,
    rng: ChaCha8Rng,
}

impl ConeSampler {
    pub fn new(sig: Signature, seed: u64) -> Self {
        ConeSampler {
            sig,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    fn gaussian_block(&mut self, len: usize) -> Vec<C64> {
        loop {
            let v: Vec<C64> = (0..len)
                .map(|_| {
                    c64(
                        self.rng.sample(StandardNormal),
                        self.rng.sample(StandardNormal),
                    )
                })
                .collect();
            if v.iter().any(|z| z.norm_sqr() > 0.0) {
                return v;
            }
        }
    }

    pub fn sample(&mut self, cls: ConeClass) -> CVector {
        let (p, q) = (self.sig.p(), self.sig.q());
        let mut z = self.gaussian_block(p);
        let mut w = self.gaussian_block(q);
        let zn = z.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        let wn = w.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        match cls {
            ConeClass::Timelike => {
                let u: f64 = self.rng.gen_range(0.0..1.0);
                let k = u * zn / wn;
                w.iter_mut().for_each(|c| *c *= k);
            }
            ConeClass::Spacelike => {
                let u: f64 = self.rng.gen_range(0.0..1.0);
                let k = u * wn / zn;
                z.iter_mut().for_each(|c| *c *= k);
            }
            ConeClass::Null => {
                // Both halves get Euclidean length 1/√2.
                let kz = std::f64::consts::FRAC_1_SQRT_2 / zn;
                let kw = std::f64::consts::FRAC_1_SQRT_2 / wn;
                z.iter_mut().for_each(|c| *c *= kz);
                w.iter_mut().for_each(|c| *c *= kw);
            }
        }
        z.extend(w);
        CVector::new(z)
    }
}

/// One vector of class `cls`, determined by `seed`.
pub fn sample_cone(cls: ConeClass, sig: Signature, seed: u64) -> CVector {
    ConeSampler::new(sig, seed).sample(cls)
}
