use super::{CMatrix, CVector, C64};
use crate::error::{Error, Result};

/// Unpivoted `H = L · diag(D) · L*` factorization of a Hermitian matrix.
#[derive(Clone, Debug)]
pub struct Ldl {
    /// Unit lower-triangular factor.
    pub l: CMatrix,
    /// Real pivots, stored as complex numbers with zero imaginary part.
    pub d: CVector,
}

impl Ldl {
    pub fn pivots(&self) -> Vec<f64> {
        self.d.iter().map(|z| z.re).collect()
    }

    pub fn reconstruct(&self) -> CMatrix {
        let ld = self.l.scale_cols(self.d.as_slice());
        &ld * &self.l.adjoint()
    }
}

/// Signed LDL* factorization without pivoting.
///
/// Fails with [`Error::SingularMinor`] (1-based index) as soon as a pivot
/// falls below `tol · ‖H‖_F` in magnitude: the factorization exists exactly
/// when every leading principal minor is non-zero, and pivoting would break
/// that correspondence.
pub fn signed_ldl(h: &CMatrix, tol: f64) -> Result<Ldl> {
    let n = h.require_square()?;
    if !h.is_finite() {
        return Err(Error::NonFinite);
    }
    let scale = h.frobenius();
    if (h - &h.adjoint()).frobenius() > tol * scale {
        return Err(Error::NotHermitian);
    }
    let floor = tol * scale;

    let mut l = CMatrix::identity(n);
    let mut d = vec![0.0f64; n];
    for j in 0..n {
        let mut dj = h[(j, j)].re;
        for k in 0..j {
            dj -= l[(j, k)].norm_sqr() * d[k];
        }
        if dj.abs() <= floor || dj == 0.0 {
            return Err(Error::SingularMinor(j + 1));
        }
        d[j] = dj;
        for i in j + 1..n {
            let mut acc = h[(i, j)];
            for k in 0..j {
                acc -= l[(i, k)] * l[(j, k)].conj() * d[k];
            }
            l[(i, j)] = acc / dj;
        }
    }
    Ok(Ldl {
        l,
        d: CVector::new(d.into_iter().map(|x| C64::new(x, 0.0)).collect()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::{c64, distance};

    #[test]
    fn identity() {
        let f = signed_ldl(&CMatrix::identity(2), 1e-12).unwrap();
        assert_eq!(f.l, CMatrix::identity(2));
        assert_eq!(f.pivots(), vec![1.0, 1.0]);
    }

    #[test]
    fn indefinite_diagonal() {
        let f = signed_ldl(&CMatrix::from_real_diag(&[4.0, -0.25]), 1e-12).unwrap();
        assert_eq!(f.l, CMatrix::identity(2));
        assert_eq!(f.pivots(), vec![4.0, -0.25]);
    }

    #[test]
    fn j_times_admissible_q_element() {
        // J·h for h = [[2, 1/√2], [-1/√2, 1/4]], J = diag(1, -1).
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let h = CMatrix::from_real_rows(&[&[2.0, r], &[r, -0.25]]);
        let f = signed_ldl(&h, 1e-12).unwrap();
        let p = f.pivots();
        assert!((p[0] - 2.0).abs() < 1e-15);
        assert!((p[1] + 0.5).abs() < 1e-15);
        assert!((f.l[(1, 0)] - c64(1.0 / (2.0 * 2f64.sqrt()), 0.0)).norm() < 1e-15);
        assert!(distance(&f.reconstruct(), &h) < 1e-15);
    }

    #[test]
    fn zero_leading_pivot_is_not_pivoted_away() {
        let h = CMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]);
        assert_eq!(signed_ldl(&h, 1e-12).unwrap_err(), Error::SingularMinor(1));
    }

    #[test]
    fn non_hermitian_rejected() {
        let h = CMatrix::from_real_rows(&[&[1.0, 2.0], &[0.0, 1.0]]);
        assert_eq!(signed_ldl(&h, 1e-12).unwrap_err(), Error::NotHermitian);
    }
}
