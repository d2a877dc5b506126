//! Iwasawa-type decomposition of SL(n, ℂ) relative to the pseudo-unitary
//! group SU(p, q).
//!
//! The crate provides the signature-(p, q) geometry ([`indefinite`]),
//! membership tests and samplers for the relevant subgroups ([`groups`]),
//! admissibility criteria ([`admissible`]), the decomposition
//! `g = s · b ∈ SU(p, q) · AN` by two independent algorithms together with
//! the dressing action ([`iwasawa`]), and closed-form 2×2 formulas used as a
//! differential oracle ([`su11`]). [`validation`] bundles the property
//! suites that exercise all of it.
//!
//! ```
//! use iwasawa::{decompose_gauss, CMatrix, Signature};
//!
//! let sig = Signature::new(1, 1).unwrap();
//! let g = CMatrix::from_real_rows(&[&[2.0, 1.0], &[1.0, 1.0]]);
//! let pair = decompose_gauss(&g, sig, 1e-9).unwrap();
//! assert!(pair.residual < 1e-12);
//! assert!((pair.a[0] - 3f64.sqrt()).abs() < 1e-12);
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

pub mod admissible;
pub mod error;
pub mod groups;
pub mod indefinite;
pub mod iwasawa;
pub mod numkernel;
pub mod su11;
pub mod validation;

/// Structural tolerance (relative) used when none is given.
pub const DEFAULT_TOL: f64 = 1e-9;
/// Eigen-residual tolerance relative to `‖M‖_F`.
pub const DEFAULT_TOL_EIG: f64 = 1e-10;

pub use admissible::{
    check_admissible_an, check_admissible_q, cone_preservation_check, is_admissible_diag,
    leading_minors, pseudo_rayleigh, AdmissibilityReport, AdmissibleDiagonal,
};
pub use error::{ConeFailure, Error, Result};
pub use groups::{is_member, random_admissible_diag, random_an, random_g0, GroupTag};
pub use indefinite::{classify, dagger, norm_sq, pairing, sample_cone, ConeClass, Signature};
pub use iwasawa::{
    decompose_g_admissible, decompose_gauss, decompose_gs, dress, q_log, sym, DecompPair,
    DressResult,
};
pub use numkernel::{c64, CMatrix, CVector, C64};
