//! Checks against oracles that share no code with the library.

use approx::assert_relative_eq;
use iwasawa::numkernel::{eig, mat_exp, signed_ldl};
use iwasawa::validation::{conjugated, gap_violating_element, random_admissible_pair};
use iwasawa::{
    c64, check_admissible_an, check_admissible_q, decompose_gauss, leading_minors, sym,
    AdmissibleDiagonal, CMatrix, Signature, C64,
};

/// Cofactor expansion along the first row.
fn laplace_det(m: &[Vec<C64>]) -> C64 {
    let n = m.len();
    if n == 1 {
        return m[0][0];
    }
    let mut total = C64::new(0.0, 0.0);
    for j in 0..n {
        let minor: Vec<Vec<C64>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, v)| *v)
                    .collect()
            })
            .collect();
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        total += m[0][j] * laplace_det(&minor) * sign;
    }
    total
}

fn rows(m: &CMatrix, k: usize) -> Vec<Vec<C64>> {
    (0..k)
        .map(|i| (0..k).map(|j| m[(i, j)]).collect())
        .collect()
}

/// Sylvester's criterion on a Hermitian matrix, via cofactor expansion.
fn positive_definite(h: &CMatrix) -> bool {
    (1..=h.rows()).all(|k| laplace_det(&rows(h, k)).re > 0.0)
}

/// `J · (s − cI)`.
fn shifted(s: &CMatrix, sig: Signature, c: f64) -> CMatrix {
    let n = sig.n();
    CMatrix::from_rows(
        &(0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let shift = if i == j { c } else { 0.0 };
                        (s[(i, j)] - c64(shift, 0.0)) * sig.sign(i)
                    })
                    .collect()
            })
            .collect::<Vec<_>>(),
    )
}

#[test]
fn leading_minors_match_cofactor_expansion() {
    for seed in 0..30 {
        let (sig, d, g0) = random_admissible_pair(seed, 5);
        let s = conjugated(&d.exp(), &g0, sig);
        let minors = leading_minors(&s).unwrap();
        for (k, m) in minors.iter().enumerate() {
            let want = laplace_det(&rows(&s, k + 1));
            assert!(
                (m - want).norm() <= 1e-9 * (1.0 + want.norm()),
                "seed {seed}, k {k}"
            );
        }
    }
}

#[test]
fn ldl_pivot_products_are_leading_minors() {
    for seed in 100..130 {
        let (sig, d, g0) = random_admissible_pair(seed, 5);
        let g = &d.exp() * &g0;
        let h = &(&g.adjoint() * &sig.j()) * &g;
        let ldl = signed_ldl(&h, 1e-12).unwrap();
        let mut prod = 1.0;
        for (k, p) in ldl.pivots().iter().enumerate() {
            prod *= p;
            let want = laplace_det(&rows(&h, k + 1)).re;
            assert_relative_eq!(prod, want, max_relative = 1e-8);
        }
    }
}

#[test]
fn inertia_witness_agrees_with_admissibility() {
    for seed in 200..240 {
        let (sig, d, g0) = random_admissible_pair(seed, 5);
        let s = conjugated(&d.exp(), &g0, sig);
        let c = 0.5 * (d.lambdas().last().unwrap().exp() + d.mus()[0].exp());
        assert!(positive_definite(&shifted(&s, sig, c)), "seed {seed}");
        assert!(check_admissible_q(&s, sig, 1e-9).unwrap().admissible);
    }
    for seed in 300..340 {
        let (sig, s, _) = gap_violating_element(seed, 5);
        let spectrum: Vec<f64> = eig(&s, 1e-10)
            .unwrap()
            .values
            .iter()
            .map(|v| v.re)
            .collect();
        let hi = spectrum.iter().cloned().fold(0.0, f64::max);
        let witnessed =
            (0..=400).any(|i| positive_definite(&shifted(&s, sig, hi * i as f64 / 400.0)));
        assert!(!witnessed, "seed {seed}");
        assert!(!check_admissible_q(&s, sig, 1e-9).unwrap().admissible);
    }
}

#[test]
fn exponential_of_diagonal_is_elementwise() {
    let d = AdmissibleDiagonal::new(vec![1.5, 0.25], vec![-1.75]).unwrap();
    let e = mat_exp(&d.matrix()).unwrap();
    for (i, x) in d.to_vec().iter().enumerate() {
        assert_relative_eq!(e[(i, i)].re, x.exp(), max_relative = 1e-14);
    }
}

#[test]
fn su11_quadratic_formula_margin() {
    // s = [[2, 1/√2], [−1/√2, 1/4]]: eigenvalues (9 ± √17)/8
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let sig = Signature::new(1, 1).unwrap();
    let s = CMatrix::from_real_rows(&[&[2.0, r], &[-r, 0.25]]);
    let rep = check_admissible_q(&s, sig, 1e-9).unwrap();
    assert!(rep.admissible);
    assert_relative_eq!(
        rep.timelike_values[0],
        (9.0 + 17f64.sqrt()) / 8.0,
        max_relative = 1e-12
    );
    assert_relative_eq!(
        rep.spacelike_values[0],
        (9.0 - 17f64.sqrt()) / 8.0,
        max_relative = 1e-12
    );
}

fn top(m: &CMatrix) -> f64 {
    eig(m, 1e-10).unwrap().values[0].re
}

#[test]
fn largest_eigenvalue_can_shrink_when_p_exceeds_one() {
    let sig = Signature::new(2, 1).unwrap();
    let e = |x: f64| x.exp();
    let b = CMatrix::from_real_diag(&[e(1.5), e(0.05), e(-1.55)]);
    assert!(check_admissible_an(&b, sig, 1e-9).unwrap().admissible);
    // timelike exponents (−0.4, 1) > spacelike −0.6
    let a = CMatrix::from_real_diag(&[e(-0.4), e(1.0), e(-0.6)]);
    assert!(iwasawa::is_admissible_diag(&[-0.4, 1.0, -0.6], sig).unwrap());
    let s = sym(&b, sig).unwrap();
    let asa = &(&a * &s) * &a;
    assert_relative_eq!(top(&s), e(3.0), max_relative = 1e-12);
    assert_relative_eq!(top(&asa), e(2.2), max_relative = 1e-12);
    assert!(top(&asa) < top(&s));
}

#[test]
fn gauss_factor_of_diagonal_orbit_is_the_diagonal() {
    let sig = Signature::new(2, 2).unwrap();
    let d = AdmissibleDiagonal::centered(vec![0.9, 0.4], vec![0.1, -0.3]).unwrap();
    let pair = decompose_gauss(&d.exp(), sig, 1e-9).unwrap();
    for (i, x) in d.to_vec().iter().enumerate() {
        assert_relative_eq!(pair.a[i], x.exp(), max_relative = 1e-13);
    }
    assert!(pair.s.max_off_diagonal() < 1e-14);
}
