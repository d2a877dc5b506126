//! Property suites for the decomposition, admissibility and dressing
//! results, run at desk scale with fixed seeds.
//!
//! Each `criterion_*` function draws its own random instances from
//! per-trial seeds, so outcomes do not depend on how trials are scheduled
//! across threads. Case counts are given for `trials = 1000` and scale
//! linearly with [`SuiteConfig::trials`].

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::admissible::{
    check_admissible_an, check_admissible_q, find_cone_violation, leading_minors,
    AdmissibleDiagonal,
};
use crate::error::Error;
use crate::groups::{random_admissible_diag, random_an, random_g0, rng};
use crate::indefinite::{
    classify, dagger_unchecked, norm_sq_unchecked, ConeClass, ConeSampler, Signature,
};
use crate::iwasawa::{decompose_gauss, decompose_gs, dress, q_log, DecompPair};
use crate::numkernel::{c64, distance, eig, mat_exp, CMatrix, C64};
use crate::su11::{
    su11_an_admissible, su11_decompose, su11_q_admissible, Sl2Element, Su11ANElement, Su11QElement,
};
use crate::{DEFAULT_TOL, DEFAULT_TOL_EIG};

/// Thresholds, all relative to the Frobenius norm of the reference value.
pub mod limits {
    /// Smallest admissible gap drawn by the suites.
    pub const MIN_GAP: f64 = 1e-3;
    /// Largest admissible gap drawn by the suites.
    pub const MAX_GAP: f64 = 2.0;
    /// Largest Frobenius norm of the 𝔰𝔲(p, q) generator of a random G₀ element.
    pub const MAX_SPREAD: f64 = 2.0;
    pub const RECONSTRUCTION: f64 = 1e-9;
    pub const CROSS_METHOD: f64 = 1e-8;
    pub const COCYCLE: f64 = 1e-8;
    pub const MONOTONICITY: f64 = 1e-10;
    pub const ORACLE: f64 = 1e-10;
    pub const PREDICATE_BAND: f64 = 1e-8;
    pub const NEAR_BOUNDARY: f64 = 1e-4;
    pub const MINOR_RATIO: f64 = 1e-9;
    pub const EXP_LOG: f64 = 1e-9;
    pub const CONE_SAMPLES_FORWARD: usize = 1_000;
    pub const CONE_SAMPLES_CONVERSE: usize = 10_000;
    pub const CONVERSE_HIT_RATE: f64 = 0.95;
    pub const TIMELIKE_SAMPLES: usize = 100;
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Largest dimension drawn (each criterion may cap it lower).
    pub n_max: usize,
    /// Base count; 1000 reproduces the full acceptance counts.
    pub trials: usize,
    pub seed: u64,
    /// Perturbs the reconstruction check so that the harness must report a
    /// failure. Only for testing the harness itself.
    pub inject_fault: bool,
}

impl SuiteConfig {
    pub fn acceptance() -> Self {
        SuiteConfig {
            n_max: 6,
            trials: 1000,
            seed: 42,
            inject_fault: false,
        }
    }

    /// `count` cases at `trials = 1000`, scaled to the configured budget.
    pub fn scaled(&self, count: usize) -> usize {
        (count * self.trials / 1000).max(1)
    }

    fn n_cap(&self, cap: usize) -> usize {
        self.n_max.clamp(2, cap)
    }
}

#[derive(Clone, Debug)]
pub struct CriterionOutcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub cases: usize,
    pub failures: usize,
    /// Worst observed value of `metric` across the cases.
    pub worst: f64,
    pub metric: &'static str,
    pub limit: f64,
    pub detail: String,
}

impl fmt::Display for CriterionOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] C{:<2} {:<44} cases={:<6} failures={:<4} worst {}={:.3e} (limit {:.1e})",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.cases,
            self.failures,
            self.metric,
            self.worst,
            self.limit
        )?;
        if !self.detail.is_empty() {
            write!(f, " {}", self.detail)?;
        }
        Ok(())
    }
}

/// Seed for one trial of one criterion; independent of scheduling.
pub fn trial_seed(seed: u64, criterion: u8, trial: usize) -> u64 {
    let mut x = seed
        ^ (criterion as u64).wrapping_mul(0xD1B5_4A32_D192_ED03)
        ^ (trial as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    // splitmix64 finalizer
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

#[cfg(feature = "parallel")]
fn par_map<T: Send>(count: usize, f: impl Fn(usize) -> T + Sync + Send) -> Vec<T> {
    use rayon::prelude::*;
    (0..count).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn par_map<T: Send>(count: usize, f: impl Fn(usize) -> T + Sync + Send) -> Vec<T> {
    (0..count).map(f).collect()
}

/// Per-case verdict: `Ok(metric)` when the case passes, `Err(metric)` when
/// it fails. `metric` feeds the worst-case summary.
type Case = Result<f64, f64>;

fn summarize(
    id: u8,
    name: &'static str,
    metric: &'static str,
    limit: f64,
    worst_is_max: bool,
    cases: Vec<Case>,
) -> CriterionOutcome {
    let failures = cases.iter().filter(|c| c.is_err()).count();
    let values = cases.iter().map(|c| match c {
        Ok(v) | Err(v) => *v,
    });
    let worst = if worst_is_max {
        values.fold(f64::NEG_INFINITY, f64::max)
    } else {
        values.fold(f64::INFINITY, f64::min)
    };
    CriterionOutcome {
        id,
        name,
        passed: failures == 0,
        cases: cases.len(),
        failures,
        worst,
        metric,
        limit,
        detail: String::new(),
    }
}

/// Random signature with `2 ≤ n ≤ n_max`.
pub fn random_signature<R: Rng>(r: &mut R, n_max: usize) -> Signature {
    let n = r.gen_range(2..=n_max.max(2));
    let p = r.gen_range(1..n);
    Signature::new(p, n - p).expect("p, q >= 1")
}

/// Gap drawn log-uniformly in `[MIN_GAP, MAX_GAP]`.
fn random_gap<R: Rng>(r: &mut R) -> f64 {
    let lo = limits::MIN_GAP.ln();
    let hi = limits::MAX_GAP.ln();
    r.gen_range(lo..=hi).exp()
}

fn random_spread<R: Rng>(r: &mut R) -> f64 {
    r.gen_range(0.05..=limits::MAX_SPREAD)
}

/// An admissible diagonal and a G₀ element, both drawn from `seed`.
pub fn random_admissible_pair(seed: u64, n_max: usize) -> (Signature, AdmissibleDiagonal, CMatrix) {
    let mut r = rng(seed);
    let sig = random_signature(&mut r, n_max);
    let gap = random_gap(&mut r);
    let spread = random_spread(&mut r);
    let d = random_admissible_diag(sig, r.gen(), gap).expect("positive gap");
    let g0 = random_g0(sig, r.gen(), spread).expect("positive spread");
    (sig, d, g0)
}

/// `g₀⁻¹ · exp(d) · g₀`, an admissible element of Q.
pub fn conjugated(d: &CMatrix, g0: &CMatrix, sig: Signature) -> CMatrix {
    &(&dagger_unchecked(g0, sig) * d) * g0
}

/// Admissible element of AN obtained by dressing an admissible diagonal.
pub fn random_admissible_an(seed: u64, sig: Signature) -> Result<CMatrix, Error> {
    let mut r = rng(seed);
    let d = random_admissible_diag(sig, r.gen(), random_gap(&mut r))?;
    let g0 = random_g0(sig, r.gen(), random_spread(&mut r))?;
    Ok(dress(&d.exp(), &g0, sig, DEFAULT_TOL)?.b_prime)
}

fn rel(num: f64, den: f64) -> f64 {
    num / den.max(f64::MIN_POSITIVE)
}

fn orbit_element(cfg: &SuiteConfig, criterion: u8, trial: usize) -> (Signature, CMatrix) {
    let (sig, d, g0) = random_admissible_pair(trial_seed(cfg.seed, criterion, trial), cfg.n_cap(6));
    (sig, &d.exp() * &g0)
}

/// C1: every `exp(d)·g₀` with admissible `d` decomposes by both methods.
pub fn criterion_1(cfg: &SuiteConfig) -> CriterionOutcome {
    let cases = par_map(cfg.scaled(1000), |t| {
        let (sig, g) = orbit_element(cfg, 1, t);
        let scale = g.frobenius();
        let (gauss, gs) = match (
            decompose_gauss(&g, sig, DEFAULT_TOL),
            decompose_gs(&g, sig, DEFAULT_TOL),
        ) {
            (Ok(a), Ok(b)) => (a, b),
            _ => return Err(f64::INFINITY),
        };
        let residual = |pair: &DecompPair| {
            let mut b = pair.b.clone();
            if cfg.inject_fault {
                b[(0, sig.n() - 1)] += c64(1e-6 * scale, 0.0);
            }
            rel(distance(&g, &(&pair.s * &b)), scale)
        };
        let worst_residual = residual(&gauss).max(residual(&gs));
        let cross = rel(gauss.distance_to(&gs), scale);
        if worst_residual <= limits::RECONSTRUCTION && cross <= limits::CROSS_METHOD {
            Ok(worst_residual.max(cross / limits::CROSS_METHOD * limits::RECONSTRUCTION))
        } else {
            Err(worst_residual.max(cross))
        }
    });
    summarize(
        1,
        "global decomposition on admissible orbits",
        "rel. residual",
        limits::RECONSTRUCTION,
        true,
        cases,
    )
}

/// C2: admissible `s ∈ Q` maps timelike vectors to timelike vectors.
pub fn criterion_2(cfg: &SuiteConfig) -> CriterionOutcome {
    let cases = par_map(cfg.scaled(1000), |t| {
        let seed = trial_seed(cfg.seed, 2, t);
        let (sig, d, g0) = random_admissible_pair(seed, cfg.n_cap(6));
        let s = conjugated(&d.exp(), &g0, sig);
        let mut sampler = ConeSampler::new(sig, seed ^ 0x5eed);
        let mut worst = f64::INFINITY;
        for _ in 0..limits::TIMELIKE_SAMPLES {
            let x = sampler.sample(ConeClass::Timelike);
            let y = &s * &x;
            let ratio = norm_sq_unchecked(y.as_slice(), sig) / y.norm2_sq();
            worst = worst.min(ratio);
            if classify(&y, sig, DEFAULT_TOL) != Ok(ConeClass::Timelike) {
                return Err(ratio);
            }
        }
        Ok(worst)
    });
    summarize(
        2,
        "admissible s keeps timelike vectors timelike",
        "min ‖sx‖²/‖sx‖₂²",
        DEFAULT_TOL,
        false,
        cases,
    )
}

/// C3: the product of two admissible elements of AN is admissible.
pub fn criterion_3(cfg: &SuiteConfig) -> CriterionOutcome {
    let cases = par_map(cfg.scaled(1000), |t| {
        let seed = trial_seed(cfg.seed, 3, t);
        let mut r = rng(seed);
        let sig = random_signature(&mut r, cfg.n_cap(6));
        let (b1, b2) = match (
            random_admissible_an(r.gen(), sig),
            random_admissible_an(r.gen(), sig),
        ) {
            (Ok(a), Ok(b)) => (a, b),
            _ => return Err(f64::NEG_INFINITY),
        };
        match check_admissible_an(&(&b1 * &b2), sig, DEFAULT_TOL) {
            Ok(rep) if rep.admissible && rep.margin > 0.0 => Ok(rep.margin),
            Ok(rep) => Err(rep.margin),
            Err(_) => Err(f64::NEG_INFINITY),
        }
    });
    summarize(
        3,
        "admissible AN is closed under products",
        "min margin",
        0.0,
        false,
        cases,
    )
}

/// Non-admissible element of Q with real positive spectrum: an admissible
/// diagonal whose smallest timelike and largest spacelike exponents are
/// swapped, conjugated by a random G₀ element.
pub fn gap_violating_element(seed: u64, n_max: usize) -> (Signature, CMatrix, f64) {
    let (sig, d, g0) = random_admissible_pair(seed, n_max);
    let mut lambdas = d.lambdas().to_vec();
    let mut mus = d.mus().to_vec();
    let last = lambdas.len() - 1;
    std::mem::swap(&mut lambdas[last], &mut mus[0]);
    let exps: Vec<f64> = lambdas.iter().chain(&mus).map(|x| x.exp()).collect();
    let s = conjugated(&CMatrix::from_real_diag(&exps), &g0, sig);
    (sig, s, -d.gap())
}

/// C4: cone characterization, both directions.
pub fn criterion_4(cfg: &SuiteConfig) -> CriterionOutcome {
    let forward = par_map(cfg.scaled(1000), |t| {
        let seed = trial_seed(cfg.seed, 4, t);
        let (sig, d, g0) = random_admissible_pair(seed, cfg.n_cap(6));
        let s = conjugated(&d.exp(), &g0, sig);
        match find_cone_violation(&s, sig, limits::CONE_SAMPLES_FORWARD, seed, DEFAULT_TOL) {
            Ok(None) => Ok(1.0),
            _ => Err(0.0),
        }
    });
    let converse = par_map(cfg.scaled(100), |t| {
        let seed = trial_seed(cfg.seed, 40, t);
        let (sig, s, _) = gap_violating_element(seed, cfg.n_cap(6));
        matches!(
            find_cone_violation(&s, sig, limits::CONE_SAMPLES_CONVERSE, seed, DEFAULT_TOL),
            Ok(Some(_))
        )
    });
    let forward_failures = forward.iter().filter(|c| c.is_err()).count();
    let hits = converse.iter().filter(|&&h| h).count();
    let rate = hits as f64 / converse.len() as f64;
    let passed = forward_failures == 0 && rate >= limits::CONVERSE_HIT_RATE;
    CriterionOutcome {
        id: 4,
        name: "cone characterization (forward + converse)",
        passed,
        cases: forward.len() + converse.len(),
        failures: forward_failures + converse.len() - hits,
        worst: rate,
        metric: "converse hit rate",
        limit: limits::CONVERSE_HIT_RATE,
        detail: format!(
            "forward {}/{} preserved, converse {}/{} violated",
            forward.len() - forward_failures,
            forward.len(),
            hits,
            converse.len()
        ),
    }
}

/// C5: the two dressing cocycle identities.
pub fn criterion_5(cfg: &SuiteConfig) -> CriterionOutcome {
    let cases = par_map(cfg.scaled(500), |t| {
        let seed = trial_seed(cfg.seed, 5, t);
        let mut r = rng(seed);
        let sig = random_signature(&mut r, cfg.n_cap(6));
        let (s1, s2, s3) = (r.gen(), r.gen(), r.gen());
        let spread = random_spread(&mut r);
        let run = || -> Result<f64, Error> {
            let b1 = random_admissible_an(s1, sig)?;
            let b2 = random_admissible_an(s2, sig)?;
            let g = random_g0(sig, s3, spread)?;
            let b12 = &b1 * &b2;
            let whole = dress(&b12, &g, sig, DEFAULT_TOL)?;
            let inner = dress(&b2, &g, sig, DEFAULT_TOL)?;
            let outer = dress(&b1, &inner.g_prime, sig, DEFAULT_TOL)?;
            // g^{b₁b₂} = (g^{b₂})^{b₁}
            let e1 = rel(
                distance(&whole.g_prime, &outer.g_prime),
                whole.g_prime.frobenius(),
            );
            // (b₁b₂)^g = b₁^{(g^{b₂})} · b₂^g
            let rhs = &outer.b_prime * &inner.b_prime;
            let e2 = rel(distance(&whole.b_prime, &rhs), whole.b_prime.frobenius());
            Ok(e1.max(e2))
        };
        match run() {
            Ok(e) if e <= limits::COCYCLE => Ok(e),
            Ok(e) => Err(e),
            Err(_) => Err(f64::INFINITY),
        }
    });
    summarize(
        5,
        "dressing cocycle identities",
        "rel. error",
        limits::COCYCLE,
        true,
        cases,
    )
}

fn top_eigenvalue(m: &CMatrix) -> Option<f64> {
    eig(m, DEFAULT_TOL_EIG).ok().map(|e| e.values[0].re)
}

/// C6: `λ₁(a·s·a) > λ₁(s)` for admissible diagonal `a` and admissible
/// `s = b†b`, with `λ₁` the largest eigenvalue.
pub fn criterion_6(cfg: &SuiteConfig) -> CriterionOutcome {
    let cases = par_map(cfg.scaled(500), |t| {
        let seed = trial_seed(cfg.seed, 6, t);
        let mut r = rng(seed);
        let sig = random_signature(&mut r, cfg.n_cap(6));
        let Ok(b) = random_admissible_an(r.gen(), sig) else {
            return Err(f64::NEG_INFINITY);
        };
        let Ok(d) = random_admissible_diag(sig, r.gen(), random_gap(&mut r)) else {
            return Err(f64::NEG_INFINITY);
        };
        let a = d.exp();
        let s = &dagger_unchecked(&b, sig) * &b;
        let asa = &(&a * &s) * &a;
        match (top_eigenvalue(&s), top_eigenvalue(&asa)) {
            (Some(l0), Some(l1)) => {
                let margin = (l1 - l0) / l0;
                if margin > limits::MONOTONICITY {
                    Ok(margin)
                } else {
                    Err(margin)
                }
            }
            _ => Err(f64::NEG_INFINITY),
        }
    });
    summarize(
        6,
        "largest eigenvalue grows under s -> a s a",
        "min rel. margin",
        limits::MONOTONICITY,
        false,
        cases,
    )
}

fn random_c64<R: Rng>(r: &mut R, radius: f64) -> C64 {
    C64::from_polar(radius, r.gen_range(0.0..std::f64::consts::TAU))
}

/// Random `g ∈ SL(2, ℂ)` with `|a| > |c|`.
pub fn random_decomposable_sl2<R: Rng>(r: &mut R) -> Sl2Element {
    let ra = r.gen_range(0.3..3.0);
    let a = random_c64(r, ra);
    let rc = a.norm() * r.gen_range(0.0..1.0);
    let c = random_c64(r, rc);
    let rb = r.gen_range(0.0..3.0);
    let b = random_c64(r, rb);
    let d = (c64(1.0, 0.0) + b * c) / a;
    Sl2Element { a, b, c, d }
}

/// Random element of Q for SU(1,1); half the draws sit within
/// `NEAR_BOUNDARY` of `t₁ + t₂ = 2`.
pub fn random_su11_q<R: Rng>(r: &mut R) -> Su11QElement {
    loop {
        let near = r.gen_bool(0.5);
        let t1 = r.gen_range(-3.0..4.0);
        let (t2, m2) = if near {
            let mag = r.gen_range(limits::NEAR_BOUNDARY.ln()..0.0f64).exp() * limits::NEAR_BOUNDARY;
            let delta = if r.gen_bool(0.5) { mag } else { -mag };
            let t2 = 2.0 + delta - t1;
            (t2, 1.0 - t1 * t2)
        } else {
            let m2 = r.gen_range(0.0..4.0);
            ((1.0 - m2) / t1, m2)
        };
        if m2 < 0.0 || !t2.is_finite() || t1 == 0.0 {
            continue;
        }
        let m = random_c64(r, m2.sqrt());
        return Su11QElement { t1, t2, m };
    }
}

/// Random element of AN for SU(1,1); some draws sit near `r = 1` or near
/// `r² + r⁻² − |n|² = 2`.
pub fn random_su11_an<R: Rng>(r: &mut R) -> Su11ANElement {
    loop {
        let mode = r.gen_range(0..3);
        let near = r.gen_range(limits::NEAR_BOUNDARY.ln()..0.0f64).exp() * limits::NEAR_BOUNDARY;
        let sign = if r.gen_bool(0.5) { 1.0 } else { -1.0 };
        let (rr, n2) = match mode {
            0 => (r.gen_range(-1.5..1.5f64).exp(), r.gen_range(0.0..3.0)),
            1 => (1.0 + sign * near, r.gen_range(0.0..1e-6)),
            _ => {
                let rr = r.gen_range(-1.5..1.5f64).exp();
                (rr, rr * rr + 1.0 / (rr * rr) - 2.0 - sign * near)
            }
        };
        if n2 < 0.0 {
            continue;
        }
        return Su11ANElement {
            r: rr,
            n: random_c64(r, n2.sqrt()),
        };
    }
}

fn q_band_distance(s: &Su11QElement) -> f64 {
    (s.t1 + s.t2 - 2.0).abs().min((s.t1 - 1.0).abs())
}

fn an_band_distance(b: &Su11ANElement) -> f64 {
    let r2 = b.r * b.r;
    (b.r - 1.0)
        .abs()
        .min((r2 + 1.0 / r2 - b.n.norm_sqr() - 2.0).abs())
}

/// C7: general algorithms and predicates against the SU(1, 1) closed forms.
pub fn criterion_7(cfg: &SuiteConfig) -> CriterionOutcome {
    let sig = Signature::new(1, 1).expect("(1,1)");
    let cases = par_map(cfg.scaled(10_000), |t| {
        let mut r = rng(trial_seed(cfg.seed, 7, t));
        let g = random_decomposable_sl2(&mut r);
        let gm = g.to_matrix();
        let Ok((k, b)) = su11_decompose(&g) else {
            return Err(f64::INFINITY);
        };
        let (km, bm) = (k.to_matrix(), b.to_matrix());
        let mut worst: f64 = 0.0;
        for pair in [
            decompose_gauss(&gm, sig, DEFAULT_TOL),
            decompose_gs(&gm, sig, DEFAULT_TOL),
        ] {
            let Ok(pair) = pair else {
                return Err(f64::INFINITY);
            };
            let es = rel(distance(&pair.s, &km), km.frobenius());
            let eb = rel(distance(&pair.b, &bm), bm.frobenius());
            worst = worst.max(es).max(eb);
        }
        if worst > limits::ORACLE {
            return Err(worst);
        }

        let q = random_su11_q(&mut r);
        if q_band_distance(&q) > limits::PREDICATE_BAND {
            match check_admissible_q(&q.to_matrix(), sig, DEFAULT_TOL) {
                Ok(rep) if rep.admissible == su11_q_admissible(&q) => {}
                _ => return Err(f64::INFINITY),
            }
        }
        let an = random_su11_an(&mut r);
        if an_band_distance(&an) > limits::PREDICATE_BAND {
            match check_admissible_an(&an.to_matrix(), sig, DEFAULT_TOL) {
                Ok(rep) if rep.admissible == su11_an_admissible(&an) => {}
                _ => return Err(f64::INFINITY),
            }
        }
        Ok(worst)
    });
    summarize(
        7,
        "SU(1,1) closed-form oracle agreement",
        "rel. distance",
        limits::ORACLE,
        true,
        cases,
    )
}

/// C8: `a_i² = Δ_i / Δ_{i−1}` for the leading minors of `g†g`.
pub fn criterion_8(cfg: &SuiteConfig) -> CriterionOutcome {
    let cases = par_map(cfg.scaled(1000), |t| {
        let (sig, g) = orbit_element(cfg, 8, t);
        let Ok(pair) = decompose_gauss(&g, sig, DEFAULT_TOL) else {
            return Err(f64::INFINITY);
        };
        let h = &dagger_unchecked(&g, sig) * &g;
        let Ok(minors) = leading_minors(&h) else {
            return Err(f64::INFINITY);
        };
        let mut prev = c64(1.0, 0.0);
        let mut worst: f64 = 0.0;
        for (a, delta) in pair.a.iter().zip(&minors) {
            let ratio = delta / prev;
            worst = worst.max(rel((ratio - c64(a * a, 0.0)).norm(), a * a));
            prev = *delta;
        }
        if worst <= limits::MINOR_RATIO {
            Ok(worst)
        } else {
            Err(worst)
        }
    });
    summarize(
        8,
        "squared diagonal equals leading-minor ratios",
        "rel. error",
        limits::MINOR_RATIO,
        true,
        cases,
    )
}

/// C9: `exp ∘ log` and `log ∘ exp` round trips on admissible elements.
pub fn criterion_9(cfg: &SuiteConfig) -> CriterionOutcome {
    let cases = par_map(cfg.scaled(500), |t| {
        let (sig, d, g0) = random_admissible_pair(trial_seed(cfg.seed, 9, t), cfg.n_cap(6));
        let s = conjugated(&d.exp(), &g0, sig);
        let x = conjugated(&d.matrix(), &g0, sig);
        let run = || -> Result<f64, Error> {
            let back = mat_exp(&q_log(&s, sig, DEFAULT_TOL)?)?;
            let e1 = rel(distance(&back, &s), s.frobenius());
            let logged = q_log(&mat_exp(&x)?, sig, DEFAULT_TOL)?;
            let e2 = rel(distance(&logged, &x), x.frobenius());
            Ok(e1.max(e2))
        };
        match run() {
            Ok(e) if e <= limits::EXP_LOG => Ok(e),
            Ok(e) => Err(e),
            Err(_) => Err(f64::INFINITY),
        }
    });
    summarize(
        9,
        "exp/log round trips",
        "rel. error",
        limits::EXP_LOG,
        true,
        cases,
    )
}

/// `s · P · b` with `P` a signed permutation that moves a spacelike basis
/// vector into a timelike slot: an element of a non-identity cell.
pub fn other_cell_element(seed: u64, n_max: usize) -> (Signature, CMatrix) {
    let mut r = rng(seed);
    let sig = random_signature(&mut r, n_max);
    let n = sig.n();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        perm.shuffle(&mut r);
        if (0..sig.p()).any(|j| perm[j] >= sig.p()) {
            break;
        }
    }
    let mut p = CMatrix::zeros(n, n);
    for (j, &i) in perm.iter().enumerate() {
        p[(i, j)] = c64(1.0, 0.0);
    }
    if p.det().expect("square").re < 0.0 {
        p[(perm[0], 0)] = c64(-1.0, 0.0);
    }
    let s = random_g0(sig, r.gen(), random_spread(&mut r)).expect("spread > 0");
    let b = random_an(sig, r.gen(), r.gen_range(0.1..1.0)).expect("spread > 0");
    (sig, &(&s * &p) * &b)
}

/// C10: elements of other cells are rejected by both algorithms.
pub fn criterion_10(cfg: &SuiteConfig) -> CriterionOutcome {
    let cases = par_map(cfg.scaled(100), |t| {
        let (sig, g) = other_cell_element(trial_seed(cfg.seed, 10, t), cfg.n_cap(4));
        let gauss = decompose_gauss(&g, sig, DEFAULT_TOL);
        let gs = decompose_gs(&g, sig, DEFAULT_TOL);
        let rejected =
            |res: &Result<DecompPair, Error>| matches!(res, Err(e) if e.is_not_decomposable());
        if rejected(&gauss) && rejected(&gs) {
            Ok(0.0)
        } else {
            let residual = gauss
                .as_ref()
                .or(gs.as_ref())
                .map(|p| rel(p.residual, g.frobenius()))
                .unwrap_or(f64::NAN);
            Err(residual)
        }
    });
    summarize(
        10,
        "other cells rejected by both algorithms",
        "residual of accepted",
        0.0,
        true,
        cases,
    )
}

pub fn run_all(cfg: &SuiteConfig) -> Vec<CriterionOutcome> {
    vec![
        criterion_1(cfg),
        criterion_2(cfg),
        criterion_3(cfg),
        criterion_4(cfg),
        criterion_5(cfg),
        criterion_6(cfg),
        criterion_7(cfg),
        criterion_8(cfg),
        criterion_9(cfg),
        criterion_10(cfg),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trial_seeds_are_distinct() {
        let mut seen = std::collections::HashSet::new();
        for c in 1..=10u8 {
            for t in 0..200 {
                assert!(seen.insert(trial_seed(42, c, t)));
            }
        }
    }

    #[test]
    fn scaled_counts() {
        let cfg = SuiteConfig::acceptance();
        assert_eq!(cfg.scaled(10_000), 10_000);
        let small = SuiteConfig { trials: 100, ..cfg };
        assert_eq!(small.scaled(10_000), 1000);
        assert_eq!(small.scaled(1), 1);
    }

    #[test]
    fn other_cell_elements_have_unit_determinant() {
        for seed in 0..20 {
            let (_, g) = other_cell_element(seed, 4);
            assert!((g.det().unwrap() - c64(1.0, 0.0)).norm() < 1e-9);
        }
    }

    #[test]
    fn gap_violating_elements_are_not_admissible() {
        for seed in 0..20 {
            let (sig, s, gap) = gap_violating_element(seed, 5);
            assert!(gap < 0.0);
            let rep = check_admissible_q(&s, sig, DEFAULT_TOL).unwrap();
            assert!(!rep.admissible);
        }
    }

    #[test]
    fn injected_fault_is_detected() {
        let cfg = SuiteConfig {
            n_max: 3,
            trials: 10,
            seed: 1,
            inject_fault: true,
        };
        assert!(!criterion_1(&cfg).passed);
    }
}
