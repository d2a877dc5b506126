use super::{mat_mul, CMatrix};
use crate::error::{Error, Result};

const MAX_TERMS: usize = 40;

/// Matrix exponential by scaling and squaring with a truncated Taylor series.
///
/// The argument is scaled by `2^-s` until its infinity norm is at most ½,
/// the series is summed until the next term falls below 10⁻¹⁷ of the
/// running sum, and the result is squared `s` times.
pub fn mat_exp(x: &CMatrix) -> Result<CMatrix> {
    let n = x.require_square()?;
    if !x.is_finite() {
        return Err(Error::NonFinite);
    }
    let norm = x.norm_inf();
    let squarings = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as i32
    } else {
        0
    };
    let scaled = x.scale_real(0.5f64.powi(squarings));

    let mut sum = CMatrix::identity(n);
    let mut term = CMatrix::identity(n);
    for k in 1..=MAX_TERMS {
        term = mat_mul(&term, &scaled)?.scale_real(1.0 / k as f64);
        sum = &sum + &term;
        if term.norm_inf() <= 1e-17 * sum.norm_inf() {
            break;
        }
    }
    for _ in 0..squarings {
        sum = mat_mul(&sum, &sum)?;
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::{c64, distance};
    use std::f64::consts::E;

    #[test]
    fn exp_of_zero_is_identity() {
        assert_eq!(
            mat_exp(&CMatrix::zeros(3, 3)).unwrap(),
            CMatrix::identity(3)
        );
    }

    #[test]
    fn diagonal_case() {
        let e = mat_exp(&CMatrix::from_real_diag(&[1.0, -1.0])).unwrap();
        assert!(distance(&e, &CMatrix::from_real_diag(&[E, 1.0 / E])) < 1e-14);
    }

    #[test]
    fn nilpotent_series_terminates() {
        let n = CMatrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]);
        let e = mat_exp(&n).unwrap();
        assert!(distance(&e, &CMatrix::from_real_rows(&[&[1.0, 1.0], &[0.0, 1.0]])) < 1e-15);
    }

    #[test]
    fn rotation_generator() {
        // exp([[0, -θ], [θ, 0]]) = [[cos θ, -sin θ], [sin θ, cos θ]]
        let t: f64 = 2.5;
        let x = CMatrix::from_real_rows(&[&[0.0, -t], &[t, 0.0]]);
        let e = mat_exp(&x).unwrap();
        let expected = CMatrix::from_real_rows(&[&[t.cos(), -t.sin()], &[t.sin(), t.cos()]]);
        assert!(distance(&e, &expected) < 1e-13);
    }

    #[test]
    fn imaginary_scalar() {
        let x = CMatrix::identity(2).scale(c64(0.0, std::f64::consts::PI));
        let e = mat_exp(&x).unwrap();
        assert!(distance(&e, &CMatrix::identity(2).scale_real(-1.0)) < 1e-13);
    }
}
