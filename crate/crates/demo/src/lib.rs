//! Browser bindings: decomposition of a pasted matrix, the SU(1, 1)
//! admissibility map of AN, and dressing orbits drawn on top of it.
//!
//! The `*_impl` functions hold the logic and are plain Rust so they can be
//! tested natively; the `#[wasm_bindgen]` wrappers only convert types.

use iwasawa::numkernel::mat_exp;
use iwasawa::su11::{su11_an_admissible, Su11ANElement};
use iwasawa::{
    c64, check_admissible_an, decompose_gauss, decompose_gs, dress, CMatrix, Signature, C64,
    DEFAULT_TOL,
};
use wasm_bindgen::prelude::*;

/// Result of [`decompose`]; matrices are row-major interleaved `re, im`.
#[wasm_bindgen]
#[derive(Clone, Debug)]
pub struct Decomposition {
    s: Vec<f64>,
    b: Vec<f64>,
    a: Vec<f64>,
    residual: f64,
    agreement: f64,
}

#[wasm_bindgen]
impl Decomposition {
    #[wasm_bindgen(getter)]
    pub fn s(&self) -> Vec<f64> {
        self.s.clone()
    }
    #[wasm_bindgen(getter)]
    pub fn b(&self) -> Vec<f64> {
        self.b.clone()
    }
    #[wasm_bindgen(getter)]
    pub fn a(&self) -> Vec<f64> {
        self.a.clone()
    }
    #[wasm_bindgen(getter)]
    pub fn residual(&self) -> f64 {
        self.residual
    }
    /// Distance between the two methods' factors; NaN unless both ran.
    #[wasm_bindgen(getter)]
    pub fn agreement(&self) -> f64 {
        self.agreement
    }
}

fn interleaved(m: &CMatrix) -> Vec<f64> {
    m.as_slice().iter().flat_map(|z| [z.re, z.im]).collect()
}

fn from_interleaved(n: usize, entries: &[f64]) -> Result<CMatrix, String> {
    if entries.len() != 2 * n * n {
        return Err(format!(
            "expected {} numbers for a {n}x{n} matrix, got {}",
            2 * n * n,
            entries.len()
        ));
    }
    let data = entries.chunks(2).map(|z| c64(z[0], z[1])).collect();
    CMatrix::from_vec(n, n, data).map_err(|e| e.to_string())
}

pub fn decompose_impl(
    p: usize,
    q: usize,
    entries: &[f64],
    method: &str,
    tol: f64,
) -> Result<Decomposition, String> {
    let sig = Signature::new(p, q).map_err(|e| e.to_string())?;
    let g = from_interleaved(sig.n(), entries)?;
    let gauss = || decompose_gauss(&g, sig, tol).map_err(|e| e.to_string());
    let gs = || decompose_gs(&g, sig, tol).map_err(|e| e.to_string());
    let (pair, agreement) = match method {
        "gauss" => (gauss()?, f64::NAN),
        "gs" => (gs()?, f64::NAN),
        "both" => {
            let (a, b) = (gauss()?, gs()?);
            let d = a.distance_to(&b);
            (a, d)
        }
        other => return Err(format!("unknown method {other:?}")),
    };
    Ok(Decomposition {
        s: interleaved(&pair.s),
        b: interleaved(&pair.b),
        a: pair.a.clone(),
        residual: pair.residual,
        agreement,
    })
}

/// Decomposes the `(p+q)×(p+q)` matrix given as interleaved `re, im` pairs.
#[wasm_bindgen]
pub fn decompose(
    p: usize,
    q: usize,
    entries: &[f64],
    method: &str,
    tol: f64,
) -> Result<Decomposition, JsError> {
    decompose_impl(p, q, entries, method, tol).map_err(|e| JsError::new(&e))
}

const ADMISSIBLE: [u8; 4] = [38, 139, 130, 255];
const REJECTED: [u8; 4] = [226, 229, 233, 255];
const DISAGREE: [u8; 4] = [214, 40, 40, 255];

/// RGBA image of the `(r, |n|)` plane for `[[r, n], [0, 1/r]]`: admissible
/// points in teal, others in grey, and red wherever the general
/// eigenvalue test disagrees with the closed-form inequalities. `x` runs
/// over `r ∈ [r_min, r_max]`, `y` over `|n| ∈ [n_max, 0]` from the top.
pub fn admissibility_map_impl(
    width: usize,
    height: usize,
    r_min: f64,
    r_max: f64,
    n_max: f64,
) -> Vec<u8> {
    let sig = Signature::new(1, 1).expect("(1,1)");
    let mut img = Vec::with_capacity(width * height * 4);
    for y in 0..height {
        let n = n_max * (1.0 - (y as f64 + 0.5) / height as f64);
        for x in 0..width {
            let r = r_min + (r_max - r_min) * (x as f64 + 0.5) / width as f64;
            let b = Su11ANElement { r, n: c64(n, 0.0) };
            let closed = su11_an_admissible(&b);
            let general = check_admissible_an(&b.to_matrix(), sig, DEFAULT_TOL)
                .map(|rep| rep.admissible)
                .unwrap_or(false);
            let px = match (closed, general) {
                (true, true) => ADMISSIBLE,
                (false, false) => REJECTED,
                _ => DISAGREE,
            };
            img.extend_from_slice(&px);
        }
    }
    img
}

#[wasm_bindgen]
pub fn admissibility_map(
    width: usize,
    height: usize,
    r_min: f64,
    r_max: f64,
    n_max: f64,
) -> Vec<u8> {
    admissibility_map_impl(width, height, r_min, r_max, n_max)
}

/// `exp(t·X)` for `X = rotation·diag(i, −i) + boost·[[0, 1], [1, 0]] ∈ 𝔰𝔲(1, 1)`.
fn su11_flow(rotation: f64, boost: f64, t: f64) -> CMatrix {
    let x = CMatrix::from_rows(&[
        vec![c64(0.0, rotation * t), c64(boost * t, 0.0)],
        vec![c64(boost * t, 0.0), c64(0.0, -rotation * t)],
    ]);
    mat_exp(&x).expect("square")
}

/// Dressing orbit `t ↦ b^{g(t)}` of `b = [[r, n], [0, 1/r]]` along the flow
/// `g(t)`, `t ∈ [0, t_max]`. Returns `[r′, Re n′, Im n′, admissible]` per
/// step, with the flag from the general test.
pub fn dressing_orbit_impl(
    r: f64,
    n: C64,
    rotation: f64,
    boost: f64,
    t_max: f64,
    steps: usize,
) -> Result<Vec<f64>, String> {
    let sig = Signature::new(1, 1).expect("(1,1)");
    let b = Su11ANElement::new(r, n)
        .map_err(|e| e.to_string())?
        .to_matrix();
    let mut out = Vec::with_capacity(4 * (steps + 1));
    for k in 0..=steps {
        let t = t_max * k as f64 / steps.max(1) as f64;
        let g = su11_flow(rotation, boost, t);
        let bp = match dress(&b, &g, sig, DEFAULT_TOL) {
            Ok(res) => res.b_prime,
            Err(_) => break,
        };
        let adm = check_admissible_an(&bp, sig, DEFAULT_TOL)
            .map(|rep| rep.admissible)
            .unwrap_or(false);
        out.extend_from_slice(&[
            bp[(0, 0)].re,
            bp[(0, 1)].re,
            bp[(0, 1)].im,
            adm as u8 as f64,
        ]);
    }
    Ok(out)
}

#[wasm_bindgen]
pub fn dressing_orbit(
    r: f64,
    n_re: f64,
    n_im: f64,
    rotation: f64,
    boost: f64,
    t_max: f64,
    steps: usize,
) -> Result<Vec<f64>, JsError> {
    dressing_orbit_impl(r, c64(n_re, n_im), rotation, boost, t_max, steps)
        .map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decomposes_worked_example() {
        let d = decompose_impl(
            1,
            1,
            &[2.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0],
            "both",
            1e-9,
        )
        .unwrap();
        assert!((d.a[0] - 3f64.sqrt()).abs() < 1e-12);
        assert!(d.agreement < 1e-12);
        assert_eq!(d.b[2 * 2], 0.0);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(decompose_impl(1, 1, &[1.0; 6], "gauss", 1e-9).is_err());
        assert!(
            decompose_impl(1, 1, &[1.0, 0.0, 1.0, 0.0, 2.0, 0.0, 3.0, 0.0], "gs", 1e-9).is_err()
        );
        assert!(
            decompose_impl(1, 1, &[1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0], "qr", 1e-9).is_err()
        );
    }

    #[test]
    fn map_has_no_disagreement_away_from_boundary() {
        let (w, h) = (64, 48);
        let img = admissibility_map_impl(w, h, 0.3, 3.0, 2.0);
        assert_eq!(img.len(), w * h * 4);
        let red = img.chunks(4).filter(|px| *px == DISAGREE).count();
        assert_eq!(red, 0);
        let teal = img.chunks(4).filter(|px| *px == ADMISSIBLE).count();
        assert!(teal > 0 && teal < w * h);
    }

    #[test]
    fn orbit_of_admissible_element_stays_admissible() {
        let pts = dressing_orbit_impl(2.0, c64(0.3, 0.1), 0.7, 0.4, 3.0, 60).unwrap();
        assert_eq!(pts.len(), 61 * 4);
        assert!(pts.chunks(4).all(|p| p[3] == 1.0));
        assert!((pts[0] - 2.0).abs() < 1e-12);
        // the orbit stays inside r² + r⁻² − |n|² fixed: Sym conjugates by G₀
        // so the trace of b†b is invariant.
        let tr = |p: &[f64]| p[0] * p[0] + 1.0 / (p[0] * p[0]) - (p[1] * p[1] + p[2] * p[2]);
        let t0 = tr(&pts[0..4]);
        assert!(pts.chunks(4).all(|p| (tr(p) - t0).abs() < 1e-9 * t0));
    }
}
