//! Closed-form formulas for SU(1, 1) ⊂ SL(2, ℂ), used as an independent
//! oracle for the general algorithms.

use crate::error::{ConeFailure, Error, Result};
use crate::numkernel::{c64, CMatrix, C64};

/// `[[a, b], [c, d]]` with `ad − bc = 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sl2Element {
    pub a: C64,
    pub b: C64,
    pub c: C64,
    pub d: C64,
}

impl Sl2Element {
    pub fn new(a: C64, b: C64, c: C64, d: C64) -> Result<Self> {
        let e = Sl2Element { a, b, c, d };
        if (e.det() - c64(1.0, 0.0)).norm() > 1e-12 {
            return Err(Error::NotMember("SL(2, C)"));
        }
        Ok(e)
    }

    /// Element of SU(1, 1): `[[u, v], [v̄, ū]]` with `|u|² − |v|² = 1`.
    pub fn su11(u: C64, v: C64) -> Result<Self> {
        Self::new(u, v, v.conj(), u.conj())
    }

    pub fn det(&self) -> C64 {
        self.a * self.d - self.b * self.c
    }

    pub fn to_matrix(&self) -> CMatrix {
        CMatrix::from_rows(&[vec![self.a, self.b], vec![self.c, self.d]])
    }

    pub fn from_matrix(m: &CMatrix) -> Result<Self> {
        if m.rows() != 2 || m.cols() != 2 {
            return Err(Error::dims("2x2", format!("{}x{}", m.rows(), m.cols())));
        }
        Self::new(m[(0, 0)], m[(0, 1)], m[(1, 0)], m[(1, 1)])
    }
}

/// `[[t₁, m], [−m̄, t₂]] ∈ Q` with `t₁t₂ + |m|² = 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Su11QElement {
    pub t1: f64,
    pub t2: f64,
    pub m: C64,
}

impl Su11QElement {
    pub fn new(t1: f64, t2: f64, m: C64) -> Result<Self> {
        if (t1 * t2 + m.norm_sqr() - 1.0).abs() > 1e-12 * (1.0 + (t1 * t2).abs()) {
            return Err(Error::NotMember("Q"));
        }
        Ok(Su11QElement { t1, t2, m })
    }

    pub fn to_matrix(&self) -> CMatrix {
        CMatrix::from_rows(&[
            vec![c64(self.t1, 0.0), self.m],
            vec![-self.m.conj(), c64(self.t2, 0.0)],
        ])
    }
}

/// `[[r, n], [0, 1/r]] ∈ AN`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Su11ANElement {
    pub r: f64,
    pub n: C64,
}

impl Su11ANElement {
    pub fn new(r: f64, n: C64) -> Result<Self> {
        if !(r > 0.0) {
            return Err(Error::NotMember("AN"));
        }
        Ok(Su11ANElement { r, n })
    }

    pub fn to_matrix(&self) -> CMatrix {
        CMatrix::from_rows(&[
            vec![c64(self.r, 0.0), self.n],
            vec![C64::default(), c64(1.0 / self.r, 0.0)],
        ])
    }

    /// `b†b`: `t₁ = r²`, `m = r·n`, `t₂ = r⁻² − |n|²`.
    pub fn sym(&self) -> Su11QElement {
        Su11QElement {
            t1: self.r * self.r,
            t2: 1.0 / (self.r * self.r) - self.n.norm_sqr(),
            m: self.n * self.r,
        }
    }
}

/// `g = k · b` with `k ∈ SU(1, 1)`, `b ∈ AN`; requires `|a| > |c|`.
///
/// With `δ = √(|a|² − |c|²)`: `k = δ⁻¹ [[a, c̄], [c, ā]]`, `b = [[δ, n], [0, δ⁻¹]]`
/// and `n = (ā b − c̄ d) / δ`.
pub fn su11_decompose(g: &Sl2Element) -> Result<(Sl2Element, Su11ANElement)> {
    let delta_sq = g.a.norm_sqr() - g.c.norm_sqr();
    if !(delta_sq > 0.0) {
        let kind = if delta_sq == 0.0 {
            ConeFailure::Boundary
        } else {
            ConeFailure::WrongCone
        };
        return Err(Error::NotDecomposable { column: 1, kind });
    }
    let delta = delta_sq.sqrt();
    let inv = 1.0 / delta;
    let k = Sl2Element {
        a: g.a * inv,
        b: g.c.conj() * inv,
        c: g.c * inv,
        d: g.a.conj() * inv,
    };
    let n = (g.a.conj() * g.b - g.c.conj() * g.d) * inv;
    Ok((k, Su11ANElement { r: delta, n }))
}

/// Upper entry of `b` in the form `(b − c̄/δ²) · δ / a`.
pub fn su11_upper_entry_divided_form(g: &Sl2Element) -> C64 {
    let delta_sq = g.a.norm_sqr() - g.c.norm_sqr();
    (g.b - g.c.conj() / delta_sq) * delta_sq.sqrt() / g.a
}

/// `t₁ + t₂ > 2` and `t₁ > 1`.
pub fn su11_q_admissible(s: &Su11QElement) -> bool {
    s.t1 + s.t2 > 2.0 && s.t1 > 1.0
}

/// `r > 1` and `r² + r⁻² − |n|² > 2`.
pub fn su11_an_admissible(b: &Su11ANElement) -> bool {
    let r2 = b.r * b.r;
    b.r > 1.0 && r2 + 1.0 / r2 - b.n.norm_sqr() > 2.0
}

/// Element `[[z, x + iy], [−x + iy, −z]]` of 𝔮; admissible iff
/// `z² − x² − y² > 0` and `z > 0`.
pub fn su11_q_algebra(x: f64, y: f64, z: f64) -> CMatrix {
    CMatrix::from_rows(&[vec![c64(z, 0.0), c64(x, y)], vec![c64(-x, y), c64(-z, 0.0)]])
}

pub fn su11_q_algebra_admissible(x: f64, y: f64, z: f64) -> bool {
    z * z - x * x - y * y > 0.0 && z > 0.0
}
