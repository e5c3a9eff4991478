//! Chebyshev polynomials of the first and second kind.
//!
//! The three-term recurrence is the canonical evaluation path: it is exact
//! at `t = +-1` and has no arccos branch issues. The trigonometric closed
//! forms (`U_n(cos a) = sin((n+1)a)/sin a`, `T_n(cos a) = cos(n a)`) are
//! exposed only as cross-check oracles and reject `|t| >= 1`.

use num_complex::Complex64;
use thiserror::Error;

use crate::series::TruncatedSeries;

/// Hard cap on the polynomial degree. Nothing in this crate needs more
/// than degree 4; the cap guards against runaway loops from bad input.
pub const MAX_DEGREE: u32 = 64;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ChebError {
    #[error("trigonometric evaluation requires |t| < 1 (got {0})")]
    TOutsideOpenInterval(f64),
}

/// Second-kind polynomial `U_n(t)` via `U_0 = 1`, `U_1 = 2t`,
/// `U_n = 2 t U_{n-1} - U_{n-2}`.
pub fn cheb_u(n: u32, t: f64) -> f64 {
    assert!(n <= MAX_DEGREE, "degree {n} exceeds cap {MAX_DEGREE}");
    let mut prev = 1.0; // U_0
    let mut cur = 2.0 * t; // U_1
    match n {
        0 => prev,
        1 => cur,
        _ => {
            for _ in 2..=n {
                let next = 2.0 * t * cur - prev;
                prev = cur;
                cur = next;
            }
            cur
        }
    }
}

/// First-kind polynomial `T_n(t)` via `T_0 = 1`, `T_1 = t`,
/// `T_n = 2 t T_{n-1} - T_{n-2}`.
pub fn cheb_t(n: u32, t: f64) -> f64 {
    assert!(n <= MAX_DEGREE, "degree {n} exceeds cap {MAX_DEGREE}");
    let mut prev = 1.0; // T_0
    let mut cur = t; // T_1
    match n {
        0 => prev,
        1 => cur,
        _ => {
            for _ in 2..=n {
                let next = 2.0 * t * cur - prev;
                prev = cur;
                cur = next;
            }
            cur
        }
    }
}

/// `U_n(t) = sin((n+1) arccos t) / sin(arccos t)`; test oracle only.
pub fn cheb_u_trig(n: u32, t: f64) -> Result<f64, ChebError> {
    assert!(n <= MAX_DEGREE, "degree {n} exceeds cap {MAX_DEGREE}");
    if t.is_nan() || t.abs() >= 1.0 {
        return Err(ChebError::TOutsideOpenInterval(t));
    }
    let theta = t.acos();
    Ok(((n as f64 + 1.0) * theta).sin() / theta.sin())
}

/// `T_n(t) = cos(n arccos t)`; test oracle only.
pub fn cheb_t_trig(n: u32, t: f64) -> Result<f64, ChebError> {
    assert!(n <= MAX_DEGREE, "degree {n} exceeds cap {MAX_DEGREE}");
    if t.is_nan() || t.abs() >= 1.0 {
        return Err(ChebError::TOutsideOpenInterval(t));
    }
    Ok(((n as f64) * t.acos()).cos())
}

/// Taylor coefficients of the generating function
/// `H(z,t) = 1/(1 - 2 t z + z^2) = sum_n U_n(t) z^n`, truncated at `order`.
pub fn h_series(t: f64, order: usize) -> Result<TruncatedSeries, ChebError> {
    if t.is_nan() || t.abs() >= 1.0 {
        return Err(ChebError::TOutsideOpenInterval(t));
    }
    let coeffs = (0..=order)
        .map(|n| Complex64::new(cheb_u(n as u32, t), 0.0))
        .collect();
    Ok(TruncatedSeries::new(coeffs))
}

/// The kernel `1 - 2 t z + z^2` as a series of the given order (`>= 2`).
/// Multiplying [`h_series`] by this must give the constant series 1.
pub fn h_kernel(t: f64, order: usize) -> TruncatedSeries {
    assert!(order >= 2);
    let mut coeffs = vec![Complex64::ZERO; order + 1];
    coeffs[0] = Complex64::ONE;
    coeffs[1] = Complex64::new(-2.0 * t, 0.0);
    coeffs[2] = Complex64::ONE;
    TruncatedSeries::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn u_small_degrees() {
        assert_eq!(cheb_u(0, 0.75), 1.0);
        assert!((cheb_u(1, 0.75) - 1.5).abs() < 1e-15);
        // U_3(t) = 8 t^3 - 4 t at t = 0.6
        assert!((cheb_u(3, 0.6) - (-0.672)).abs() < 1e-14);
        // U_4(t) = 16 t^4 - 12 t^2 + 1
        let t = 0.73;
        assert!((cheb_u(4, t) - (16.0 * t.powi(4) - 12.0 * t * t + 1.0)).abs() < 1e-13);
    }

    #[test]
    fn t_small_degrees() {
        assert_eq!(cheb_t(0, 0.3), 1.0);
        // cos(2 pi/3) = -1/2, exact in the recurrence at t = 0.5
        assert!((cheb_t(2, 0.5) - (-0.5)).abs() < 1e-15);
        // cross-check against (U_2 - U_0)/2
        let via_u = (cheb_u(2, 0.75) - cheb_u(0, 0.75)) / 2.0;
        assert!((cheb_t(2, 0.75) - via_u).abs() < 1e-15);
        assert!((cheb_t(2, 0.75) - 0.125).abs() < 1e-15);
    }

    #[test]
    fn first_second_kind_relations() {
        for n in 2..=20u32 {
            for k in 0..40 {
                let t = -0.975 + 0.05 * k as f64;
                let two_t = 2.0 * cheb_t(n, t) - (cheb_u(n, t) - cheb_u(n - 2, t));
                assert!(two_t.abs() < 1e-12, "2T relation at n={n}, t={t}");
                let mixed = cheb_t(n, t) - (cheb_u(n, t) - t * cheb_u(n - 1, t));
                assert!(mixed.abs() < 1e-12, "T=U-tU relation at n={n}, t={t}");
            }
        }
    }

    #[test]
    fn derivative_relation_matches_central_difference() {
        // dT_n/dt = n U_{n-1}; finite differences degrade near t = +-1,
        // so sample the interior.
        let h = 1e-5;
        for n in 1..=20u32 {
            for k in 0..33 {
                let t = -0.8 + 0.05 * k as f64;
                let fd = (cheb_t(n, t + h) - cheb_t(n, t - h)) / (2.0 * h);
                let exact = n as f64 * cheb_u(n - 1, t);
                assert!(
                    (fd - exact).abs() < 1e-6,
                    "n={n}, t={t}: fd={fd}, exact={exact}"
                );
            }
        }
    }

    #[test]
    fn trig_forms_agree_with_recurrence() {
        for n in 0..=20u32 {
            for k in 0..40 {
                let t = -0.966 + 0.049 * k as f64;
                assert!((cheb_u_trig(n, t).unwrap() - cheb_u(n, t)).abs() < 1e-10);
                assert!((cheb_t_trig(n, t).unwrap() - cheb_t(n, t)).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn trig_forms_reject_boundary() {
        assert!(cheb_u_trig(3, 1.0).is_err());
        assert!(cheb_u_trig(3, -1.0).is_err());
        assert!(cheb_t_trig(3, 1.2).is_err());
        // recurrence accepts any real t
        assert_eq!(cheb_u(2, 1.0), 3.0);
        assert_eq!(cheb_t(5, 1.0), 1.0);
    }

    #[test]
    fn h_series_values() {
        let h = h_series(0.75, 3).unwrap();
        let expected = [1.0, 1.5, 1.25, 0.375];
        for (k, e) in expected.iter().enumerate() {
            assert!((h.coeff(k).re - e).abs() < 1e-15);
            assert_eq!(h.coeff(k).im, 0.0);
        }
        let h0 = h_series(0.0, 2).unwrap();
        assert_eq!(
            h0.coeffs().iter().map(|c| c.re).collect::<Vec<_>>(),
            vec![1.0, 0.0, -1.0]
        );
        assert!(h_series(1.0, 3).is_err());
    }

    #[test]
    fn generating_functions_invert_the_kernel() {
        for k in 0..24 {
            let t = -0.95 + 0.0825 * k as f64;
            let n = 12;
            let prod = h_series(t, n).unwrap().mul(&h_kernel(t, n)).unwrap();
            assert!((prod.coeff(0).re - 1.0).abs() < 1e-12);
            for j in 1..=n {
                assert!(prod.coeff(j).norm() < 1e-12, "t={t}, j={j}");
            }
            // sum T_n z^n times the kernel is 1 - t z
            let t_gen = TruncatedSeries::new(
                (0..=n)
                    .map(|j| Complex64::new(cheb_t(j as u32, t), 0.0))
                    .collect(),
            );
            let prod = t_gen.mul(&h_kernel(t, n)).unwrap();
            assert!((prod.coeff(0).re - 1.0).abs() < 1e-12);
            assert!((prod.coeff(1).re + t).abs() < 1e-12);
            for j in 2..=n {
                assert!(prod.coeff(j).norm() < 1e-12, "t={t}, j={j}");
            }
        }
    }

    proptest! {
        #[test]
        fn recurrence_residual_vanishes(t in -0.99f64..0.99) {
            for n in 2..=20u32 {
                let r = cheb_u(n, t) - 2.0 * t * cheb_u(n - 1, t) + cheb_u(n - 2, t);
                prop_assert!(r.abs() <= 1e-12);
            }
        }
    }
}
