use super::{CMatrix, C64};
use crate::error::{Error, Result};

/// Solves `U · X = B` by back-substitution.
///
/// Only the upper triangle of `U` is read. A diagonal entry whose modulus is
/// below `ε · ‖U‖_F` is treated as zero.
pub fn solve_upper_triangular(u: &CMatrix, b: &CMatrix) -> Result<CMatrix> {
    let n = u.require_square()?;
    if b.rows() != n {
        return Err(Error::dims(
            format!("{n} rows"),
            format!("{} rows", b.rows()),
        ));
    }
    let floor = f64::EPSILON * u.frobenius();
    for k in 0..n {
        let d = u[(k, k)].norm();
        if d == 0.0 || d <= floor {
            return Err(Error::SingularDiagonal(k));
        }
    }
    let mut x = b.clone();
    for col in 0..b.cols() {
        for i in (0..n).rev() {
            let mut acc = x[(i, col)];
            for j in i + 1..n {
                acc -= u[(i, j)] * x[(j, col)];
            }
            x[(i, col)] = acc / u[(i, i)];
        }
    }
    Ok(x)
}

/// Determinant by Gaussian elimination with partial pivoting.
pub fn determinant(m: &CMatrix) -> Result<C64> {
    let n = m.require_square()?;
    let mut a = m.clone();
    let mut det = C64::new(1.0, 0.0);
    for k in 0..n {
        let pivot_row = (k..n)
            .max_by(|&i, &j| a[(i, k)].norm().total_cmp(&a[(j, k)].norm()))
            .unwrap_or(k);
        let pivot = a[(pivot_row, k)];
        if pivot.norm() == 0.0 {
            return Ok(C64::default());
        }
        if pivot_row != k {
            for j in 0..n {
                let tmp = a[(k, j)];
                a[(k, j)] = a[(pivot_row, j)];
                a[(pivot_row, j)] = tmp;
            }
            det = -det;
        }
        det *= pivot;
        for i in k + 1..n {
            let f = a[(i, k)] / pivot;
            if f == C64::default() {
                continue;
            }
            for j in k..n {
                let akj = a[(k, j)];
                a[(i, j)] -= f * akj;
            }
        }
    }
    Ok(det)
}
