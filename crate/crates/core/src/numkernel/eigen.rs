//! General complex eigen solver: Householder reduction to upper Hessenberg
//! form, single-shift complex QR iteration to Schur form, and
//! back-substitution for eigenvectors.

use std::cmp::Ordering;

use super::{CMatrix, C64};
use crate::error::{Error, Result};

/// Largest dimension the solver accepts.
pub const EIG_SIZE_CAP: usize = 32;

/// Sweeps allowed per dimension before giving up.
const SWEEPS_PER_DIM: usize = 100;

#[derive(Clone, Debug)]
pub struct EigenResult {
    /// Eigenvalues, descending by real part then by imaginary part.
    pub values: Vec<C64>,
    /// Right eigenvectors as columns, unit Euclidean length, same order as `values`.
    pub vectors: CMatrix,
    /// `max_k ‖M v_k − λ_k v_k‖₂`
    pub max_residual: f64,
    /// Two eigenvectors of one eigenvalue cluster came out parallel: the
    /// matrix is (numerically) not diagonalizable.
    pub defective: bool,
}

/// All eigenpairs of a square matrix.
///
/// Succeeds when the Schur iteration converges within `100 · n` sweeps and
/// every eigenpair has residual at most `tol_eig · ‖M‖_F`.
pub fn eig(m: &CMatrix, tol_eig: f64) -> Result<EigenResult> {
    let n = m.require_square()?;
    if n > EIG_SIZE_CAP {
        return Err(Error::dims(format!("n <= {EIG_SIZE_CAP}"), n));
    }
    if !m.is_finite() {
        return Err(Error::NonFinite);
    }
    let (mut t, mut z) = hessenberg(m);
    schur_qr(&mut t, &mut z)?;

    let tnorm = t.frobenius();
    let mut pairs: Vec<(C64, Vec<C64>)> = (0..n)
        .map(|k| {
            let x = triangular_eigvec(&t, k, tnorm);
            let mut v: Vec<C64> = (0..n)
                .map(|i| (0..=k).map(|j| z[(i, j)] * x[j]).sum())
                .collect();
            let len = v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
            for c in &mut v {
                *c /= len;
            }
            (t[(k, k)], v)
        })
        .collect();
    pairs.sort_by(|a, b| descending(a.0, b.0));

    let values: Vec<C64> = pairs.iter().map(|p| p.0).collect();
    let mut vectors = CMatrix::zeros(n, n);
    for (j, (_, v)) in pairs.iter().enumerate() {
        for i in 0..n {
            vectors[(i, j)] = v[i];
        }
    }

    let mut max_residual: f64 = 0.0;
    for (j, &lambda) in values.iter().enumerate() {
        let v = vectors.column(j);
        let mv = m * &v;
        let r: f64 = mv
            .iter()
            .zip(v.iter())
            .map(|(a, b)| (a - lambda * b).norm_sqr())
            .sum::<f64>()
            .sqrt();
        max_residual = max_residual.max(r);
    }
    if max_residual > tol_eig * m.frobenius().max(f64::MIN_POSITIVE) {
        return Err(Error::NoConvergence {
            iterations: SWEEPS_PER_DIM * n,
        });
    }

    let defective = detect_defective(&values, &vectors, m.frobenius());
    Ok(EigenResult {
        values,
        vectors,
        max_residual,
        defective,
    })
}

fn descending(a: C64, b: C64) -> Ordering {
    b.re.total_cmp(&a.re).then(b.im.total_cmp(&a.im))
}

fn detect_defective(values: &[C64], vectors: &CMatrix, scale: f64) -> bool {
    let n = values.len();
    let cluster = 1e-6 * scale.max(1.0);
    for i in 0..n {
        for j in i + 1..n {
            if (values[i] - values[j]).norm() > cluster {
                continue;
            }
            let overlap: C64 = (0..n)
                .map(|k| vectors[(k, i)].conj() * vectors[(k, j)])
                .sum();
            if overlap.norm() > 1.0 - 1e-6 {
                return true;
            }
        }
    }
    false
}

/// Householder reduction `M = Z H Z*` with `H` upper Hessenberg.
fn hessenberg(m: &CMatrix) -> (CMatrix, CMatrix) {
    let n = m.rows();
    let mut h = m.clone();
    let mut z = CMatrix::identity(n);
    for k in 0..n.saturating_sub(2) {
        let alpha: f64 = (k + 1..n).map(|i| h[(i, k)].norm_sqr()).sum::<f64>().sqrt();
        if alpha == 0.0 {
            continue;
        }
        let x0 = h[(k + 1, k)];
        let phase = if x0.norm() == 0.0 {
            C64::new(1.0, 0.0)
        } else {
            x0 / x0.norm()
        };
        // v = x + phase·α·e₁ avoids cancellation in the first component.
        let mut v = vec![C64::default(); n];
        v[k + 1] = x0 + phase * alpha;
        for i in k + 2..n {
            v[i] = h[(i, k)];
        }
        let vnorm_sq: f64 = v.iter().map(|c| c.norm_sqr()).sum();
        if vnorm_sq == 0.0 {
            continue;
        }
        // H ← P H P with P = I − 2 v v* / (v* v)
        for j in 0..n {
            let dot: C64 = (k + 1..n).map(|i| v[i].conj() * h[(i, j)]).sum();
            let f = dot * (2.0 / vnorm_sq);
            for i in k + 1..n {
                h[(i, j)] -= v[i] * f;
            }
        }
        for i in 0..n {
            let dot: C64 = (k + 1..n).map(|j| h[(i, j)] * v[j]).sum();
            let f = dot * (2.0 / vnorm_sq);
            for j in k + 1..n {
                h[(i, j)] -= f * v[j].conj();
            }
        }
        for i in 0..n {
            let dot: C64 = (k + 1..n).map(|j| z[(i, j)] * v[j]).sum();
            let f = dot * (2.0 / vnorm_sq);
            for j in k + 1..n {
                z[(i, j)] -= f * v[j].conj();
            }
        }
        for i in k + 2..n {
            h[(i, k)] = C64::default();
        }
    }
    (h, z)
}

/// Reduces upper Hessenberg `h` to upper triangular Schur form in place,
/// accumulating the unitary similarity into `z`.
fn schur_qr(h: &mut CMatrix, z: &mut CMatrix) -> Result<()> {
    let n = h.rows();
    if n < 2 {
        return Ok(());
    }
    let budget = SWEEPS_PER_DIM * n;
    let mut total = 0usize;
    let mut since_deflation = 0usize;
    let mut hi = n - 1;
    let mut rots: Vec<(C64, C64)> = Vec::with_capacity(n);

    while hi > 0 {
        // Locate the start of the active unreduced block.
        let mut lo = hi;
        while lo > 0 {
            let sub = h[(lo, lo - 1)].norm();
            let diag = h[(lo - 1, lo - 1)].norm() + h[(lo, lo)].norm();
            let diag = if diag == 0.0 { h.frobenius() } else { diag };
            if sub <= f64::EPSILON * diag {
                h[(lo, lo - 1)] = C64::default();
                break;
            }
            lo -= 1;
        }
        if lo == hi {
            hi -= 1;
            since_deflation = 0;
            continue;
        }

        total += 1;
        since_deflation += 1;
        if total > budget {
            return Err(Error::NoConvergence { iterations: total });
        }

        let mu = if since_deflation % 11 == 10 {
            // Exceptional shift to break cycles.
            h[(hi, hi)] + C64::new(0.75 * h[(hi, hi - 1)].norm(), 0.0)
        } else {
            wilkinson_shift(
                h[(hi - 1, hi - 1)],
                h[(hi - 1, hi)],
                h[(hi, hi - 1)],
                h[(hi, hi)],
            )
        };

        for k in lo..=hi {
            h[(k, k)] -= mu;
        }
        rots.clear();
        for k in lo..hi {
            let (c, s) = givens(h[(k, k)], h[(k + 1, k)]);
            rots.push((c, s));
            for j in k..n {
                let a = h[(k, j)];
                let b = h[(k + 1, j)];
                h[(k, j)] = c.conj() * a + s.conj() * b;
                h[(k + 1, j)] = -s * a + c * b;
            }
            h[(k + 1, k)] = C64::default();
        }
        for (idx, &(c, s)) in rots.iter().enumerate() {
            let k = lo + idx;
            let top = (k + 2).min(hi);
            for i in 0..=top {
                let a = h[(i, k)];
                let b = h[(i, k + 1)];
                h[(i, k)] = a * c + b * s;
                h[(i, k + 1)] = -a * s.conj() + b * c.conj();
            }
            for i in 0..n {
                let a = z[(i, k)];
                let b = z[(i, k + 1)];
                z[(i, k)] = a * c + b * s;
                z[(i, k + 1)] = -a * s.conj() + b * c.conj();
            }
        }
        for k in lo..=hi {
            h[(k, k)] += mu;
        }
    }
    // Clear rounding debris below the diagonal.
    for i in 1..n {
        for j in 0..i {
            h[(i, j)] = C64::default();
        }
    }
    Ok(())
}

/// Eigenvalue of the trailing 2×2 block closest to its bottom-right entry.
fn wilkinson_shift(a: C64, b: C64, c: C64, d: C64) -> C64 {
    let half = (a - d) * 0.5;
    let disc = (half * half + b * c).sqrt();
    let mid = (a + d) * 0.5;
    let l1 = mid + disc;
    let l2 = mid - disc;
    if (l1 - d).norm() <= (l2 - d).norm() {
        l1
    } else {
        l2
    }
}

/// Rotation `(c, s)` with `[[c̄, s̄], [−s, c]] · (x, y)ᵀ = (r, 0)ᵀ`.
fn givens(x: C64, y: C64) -> (C64, C64) {
    let r = (x.norm_sqr() + y.norm_sqr()).sqrt();
    if r == 0.0 {
        (C64::new(1.0, 0.0), C64::default())
    } else {
        (x / r, y / r)
    }
}

/// Eigenvector of upper-triangular `t` for its `k`-th diagonal entry, in
/// Schur coordinates (entries past `k` are zero and omitted).
fn triangular_eigvec(t: &CMatrix, k: usize, tnorm: f64) -> Vec<C64> {
    let smin = (f64::EPSILON * tnorm).max(f64::MIN_POSITIVE);
    let lambda = t[(k, k)];
    let mut x = vec![C64::default(); k + 1];
    x[k] = C64::new(1.0, 0.0);
    for i in (0..k).rev() {
        let rhs: C64 = (i + 1..=k).map(|j| t[(i, j)] * x[j]).sum();
        let mut den = t[(i, i)] - lambda;
        if den.norm() < smin {
            den = C64::new(smin, 0.0);
        }
        x[i] = -rhs / den;
        // Rescale on growth so that later terms stay finite.
        let big = x.iter().map(|c| c.norm()).fold(0.0, f64::max);
        if big > 1e100 {
            for c in &mut x {
                *c /= big;
            }
        }
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::c64;

    #[test]
    fn diagonal_matrix() {
        let r = eig(&CMatrix::from_real_diag(&[1.0, 3.0, 2.0]), 1e-10).unwrap();
        let vals: Vec<f64> = r.values.iter().map(|z| z.re).collect();
        assert_eq!(vals, vec![3.0, 2.0, 1.0]);
        for (j, &row) in [1usize, 2, 0].iter().enumerate() {
            assert!((r.vectors[(row, j)].norm() - 1.0).abs() < 1e-14);
        }
        assert!(!r.defective);
    }

    #[test]
    fn two_by_two_against_quadratic_formula() {
        // Oracle: roots of λ² − (9/4)λ + 1.
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let m = CMatrix::from_real_rows(&[&[2.0, s], &[-s, 0.25]]);
        let r = eig(&m, 1e-10).unwrap();
        let disc: f64 = 17.0;
        let hi = (9.0 + disc.sqrt()) / 8.0;
        let lo = (9.0 - disc.sqrt()) / 8.0;
        assert!((r.values[0] - c64(hi, 0.0)).norm() < 1e-13);
        assert!((r.values[1] - c64(lo, 0.0)).norm() < 1e-13);
        assert!((hi - 1.640_388_203_202_208).abs() < 1e-12);
    }

    #[test]
    fn jordan_block_is_flagged_defective() {
        let m = CMatrix::from_real_rows(&[&[1.0, 1.0], &[0.0, 1.0]]);
        let r = eig(&m, 1e-10).unwrap();
        assert!((r.values[0] - c64(1.0, 0.0)).norm() < 1e-12);
        assert!((r.values[1] - c64(1.0, 0.0)).norm() < 1e-12);
        assert!(r.defective);
    }

    #[test]
    fn complex_eigenvalues_of_rotation() {
        let m = CMatrix::from_real_rows(&[&[0.0, -1.0], &[1.0, 0.0]]);
        let r = eig(&m, 1e-10).unwrap();
        assert!((r.values[0] - c64(0.0, 1.0)).norm() < 1e-13);
        assert!((r.values[1] - c64(0.0, -1.0)).norm() < 1e-13);
    }

    #[test]
    fn rejects_oversized_input() {
        let m = CMatrix::identity(EIG_SIZE_CAP + 1);
        assert!(matches!(
            eig(&m, 1e-10),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn companion_matrix_roots() {
        // x³ − 6x² + 11x − 6 = (x−1)(x−2)(x−3)
        let m = CMatrix::from_real_rows(&[&[6.0, -11.0, 6.0], &[1.0, 0.0, 0.0], &[0.0, 1.0, 0.0]]);
        let r = eig(&m, 1e-10).unwrap();
        for (v, want) in r.values.iter().zip([3.0, 2.0, 1.0]) {
            assert!((v - c64(want, 0.0)).norm() < 1e-10, "{v} vs {want}");
        }
    }
}
