//! Truncated formal power series over complex coefficients.
//!
//! A series of order `N` stores exactly `N + 1` coefficients `c_0 .. c_N`;
//! every operation truncates at that order. Binary operations require equal
//! orders — call [`TruncatedSeries::truncate`] first to align two series of
//! different orders. Coefficients are complex throughout because the
//! Caratheodory coefficients fed into these expansions are complex.

use num_complex::Complex64;
use thiserror::Error;

use crate::params::ClassParams;

/// How far a constant term may sit from its required value (0 or 1)
/// before a precondition is considered violated.
const NORMALIZATION_TOL: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SeriesError {
    #[error("order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("constant term must be 1 (got {0})")]
    ConstantTermNotOne(Complex64),
    #[error("constant term must be 0 (got {0})")]
    ConstantTermNotZero(Complex64),
    #[error("constant term must be nonzero")]
    ConstantTermZero,
    #[error("series must be normalized: c0 = 0 and c1 = 1")]
    NotNormalized,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<Complex64>,
}

impl TruncatedSeries {
    /// Build from `c_0 .. c_N`; the order is `len - 1`.
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least the constant term"
        );
        Self { coeffs }
    }

    pub fn from_real(values: &[f64]) -> Self {
        Self::new(values.iter().map(|&v| Complex64::new(v, 0.0)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![Complex64::ZERO; order + 1])
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Complex64::ONE, order)
    }

    pub fn constant(value: Complex64, order: usize) -> Self {
        let mut coeffs = vec![Complex64::ZERO; order + 1];
        coeffs[0] = value;
        Self::new(coeffs)
    }

    /// The series `z` (requires `order >= 1`).
    pub fn identity(order: usize) -> Self {
        assert!(order >= 1);
        let mut coeffs = vec![Complex64::ZERO; order + 1];
        coeffs[1] = Complex64::ONE;
        Self::new(coeffs)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient `c_k`; `k` must not exceed the order.
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Drop coefficients above `order` (which must not exceed the current order).
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order());
        Self::new(self.coeffs[..=order].to_vec())
    }

    fn check_same_order(&self, rhs: &Self) -> Result<(), SeriesError> {
        if self.order() != rhs.order() {
            return Err(SeriesError::OrderMismatch(self.order(), rhs.order()));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.check_same_order(rhs)?;
        Ok(Self::new(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.check_same_order(rhs)?;
        Ok(Self::new(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        ))
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * factor).collect())
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.check_same_order(rhs)?;
        let n = self.order();
        let mut out = vec![Complex64::ZERO; n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.norm_sqr() == 0.0 {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(Self::new(out))
    }

    /// Reciprocal `1/f`; requires a nonzero constant term.
    ///
    /// Recurrence: `r_0 = 1/c_0`, `r_n = -(1/c_0) sum_{k=1..n} c_k r_{n-k}`.
    pub fn recip(&self) -> Result<Self, SeriesError> {
        let c0 = self.coeffs[0];
        if c0.norm() == 0.0 {
            return Err(SeriesError::ConstantTermZero);
        }
        let n = self.order();
        let inv0 = c0.inv();
        let mut out = vec![Complex64::ZERO; n + 1];
        out[0] = inv0;
        for m in 1..=n {
            let mut acc = Complex64::ZERO;
            for k in 1..=m {
                acc += self.coeffs[k] * out[m - k];
            }
            out[m] = -inv0 * acc;
        }
        Ok(Self::new(out))
    }

    /// Series logarithm of a unit series (`c_0 = 1`).
    ///
    /// From `f' = L' f`: `n c_n = n L_n + sum_{k=1..n-1} k L_k c_{n-k}`.
    pub fn log(&self) -> Result<Self, SeriesError> {
        if (self.coeffs[0] - Complex64::ONE).norm() > NORMALIZATION_TOL {
            return Err(SeriesError::ConstantTermNotOne(self.coeffs[0]));
        }
        let n = self.order();
        let mut out = vec![Complex64::ZERO; n + 1];
        for m in 1..=n {
            let mut acc = Complex64::ZERO;
            for (k, l) in out.iter().enumerate().take(m).skip(1) {
                acc += (k as f64) * l * self.coeffs[m - k];
            }
            out[m] = self.coeffs[m] - acc / (m as f64);
        }
        Ok(Self::new(out))
    }

    /// Series exponential of a series with zero constant term.
    ///
    /// `n E_n = sum_{k=1..n} k L_k E_{n-k}`.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if self.coeffs[0].norm() > NORMALIZATION_TOL {
            return Err(SeriesError::ConstantTermNotZero(self.coeffs[0]));
        }
        let n = self.order();
        let mut out = vec![Complex64::ZERO; n + 1];
        out[0] = Complex64::ONE;
        for m in 1..=n {
            let mut acc = Complex64::ZERO;
            for k in 1..=m {
                acc += (k as f64) * self.coeffs[k] * out[m - k];
            }
            out[m] = acc / (m as f64);
        }
        Ok(Self::new(out))
    }

    /// `f^e = exp(e log f)` for real `e`; requires `c_0 = 1`.
    ///
    /// The log/exp route handles every real exponent uniformly, including
    /// negative ones such as `mu - 1` with `mu < 1`.
    pub fn pow_real(&self, exponent: f64) -> Result<Self, SeriesError> {
        let log = self.log()?;
        log.scale(Complex64::new(exponent, 0.0)).exp()
    }

    /// Termwise derivative; a series of order `N` yields order `N - 1`
    /// (order-0 input yields the zero constant).
    pub fn derivative(&self) -> Self {
        let n = self.order();
        if n == 0 {
            return Self::zero(0);
        }
        Self::new((1..=n).map(|k| (k as f64) * self.coeffs[k]).collect())
    }

    /// `f(z)/z` for a series with zero constant term; order drops by one.
    pub fn div_z(&self) -> Result<Self, SeriesError> {
        if self.coeffs[0].norm() > NORMALIZATION_TOL {
            return Err(SeriesError::ConstantTermNotZero(self.coeffs[0]));
        }
        assert!(self.order() >= 1);
        Ok(Self::new(self.coeffs[1..].to_vec()))
    }

    /// Composition `self(inner(z))`; `inner` needs a zero constant term and
    /// the same order. Evaluated by Horner's scheme over series.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        self.check_same_order(inner)?;
        if inner.coeffs[0].norm() > NORMALIZATION_TOL {
            return Err(SeriesError::ConstantTermNotZero(inner.coeffs[0]));
        }
        let n = self.order();
        let mut acc = Self::constant(self.coeffs[n], n);
        for k in (0..n).rev() {
            acc = acc.mul(inner)?;
            acc.coeffs[0] += self.coeffs[k];
        }
        Ok(acc)
    }

    /// Compositional inverse of a normalized series (`c_0 = 0`, `c_1 = 1`):
    /// the series `g` with `g(self(z)) = z` up to the truncation order.
    pub fn revert(&self) -> Result<Self, SeriesError> {
        if self.coeffs[0].norm() > NORMALIZATION_TOL
            || (self.coeffs[1] - Complex64::ONE).norm() > NORMALIZATION_TOL
        {
            return Err(SeriesError::NotNormalized);
        }
        let n = self.order();
        // powers[k] = self^k, k = 1..n
        let mut powers = Vec::with_capacity(n);
        powers.push(self.clone());
        for _ in 2..=n {
            let next = powers.last().unwrap().mul(self)?;
            powers.push(next);
        }
        let mut out = vec![Complex64::ZERO; n + 1];
        out[1] = Complex64::ONE;
        for j in 2..=n {
            let mut acc = Complex64::ZERO;
            for k in 1..j {
                acc += out[k] * powers[k - 1].coeff(j);
            }
            out[j] = -acc / powers[j - 1].coeff(j);
        }
        Ok(Self::new(out))
    }

    /// Largest coefficient-wise distance to another series of equal order.
    pub fn max_abs_diff(&self, rhs: &Self) -> Result<f64, SeriesError> {
        self.check_same_order(rhs)?;
        Ok(self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }
}

/// Expansion of the class-defining expression
/// `(1 - lambda) (f/z)^mu + lambda f'(z) (f/z)^(mu-1)`
/// for a normalized `f` (`f_0 = 0`, `f_1 = 1`). The result has order
/// `f.order() - 1`; only `lambda` and `mu` enter (`t` parameterizes the
/// other side of the subordination).
pub fn class_lhs(
    f: &TruncatedSeries,
    params: &ClassParams,
) -> Result<TruncatedSeries, SeriesError> {
    if f.coeffs[0].norm() > NORMALIZATION_TOL
        || (f.coeffs[1] - Complex64::ONE).norm() > NORMALIZATION_TOL
    {
        return Err(SeriesError::NotNormalized);
    }
    let lambda = params.lambda();
    let mu = params.mu();
    let f_over_z = f.div_z()?;
    let f_prime = f.derivative();
    let first = f_over_z
        .pow_real(mu)?
        .scale(Complex64::new(1.0 - lambda, 0.0));
    let second = f_prime
        .mul(&f_over_z.pow_real(mu - 1.0)?)?
        .scale(Complex64::new(lambda, 0.0));
    first.add(&second)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn close(a: &TruncatedSeries, b: &TruncatedSeries, tol: f64) -> bool {
        a.max_abs_diff(b).unwrap() <= tol
    }

    #[test]
    fn add_examples() {
        let a = TruncatedSeries::from_real(&[1.0, 2.0]);
        let b = TruncatedSeries::from_real(&[0.0, 1.0]);
        assert_eq!(a.add(&b).unwrap(), TruncatedSeries::from_real(&[1.0, 3.0]));
        assert_eq!(a.add(&TruncatedSeries::zero(1)).unwrap(), a);
        let m = TruncatedSeries::from_real(&[1.0, -1.0]);
        let n = TruncatedSeries::from_real(&[-1.0, 1.0]);
        assert_eq!(m.add(&n).unwrap(), TruncatedSeries::zero(1));
        assert_eq!(
            a.add(&TruncatedSeries::zero(3)),
            Err(SeriesError::OrderMismatch(1, 3))
        );
    }

    #[test]
    fn mul_examples() {
        let a = TruncatedSeries::from_real(&[1.0, 1.0, 0.0]);
        let sq = a.mul(&a).unwrap();
        assert_eq!(sq, TruncatedSeries::from_real(&[1.0, 2.0, 1.0]));
        assert_eq!(a.mul(&TruncatedSeries::one(2)).unwrap(), a);
    }

    #[test]
    fn recip_inverts() {
        let a = TruncatedSeries::new(vec![c(2.0, 0.0), c(0.5, -1.0), c(0.0, 0.25), c(1.0, 0.0)]);
        let prod = a.mul(&a.recip().unwrap()).unwrap();
        assert!(close(&prod, &TruncatedSeries::one(3), 1e-14));
        assert_eq!(
            TruncatedSeries::zero(2).recip(),
            Err(SeriesError::ConstantTermZero)
        );
    }

    #[test]
    fn pow_real_examples() {
        let a = TruncatedSeries::from_real(&[1.0, 1.0, 0.0]);
        assert!(close(
            &a.pow_real(2.0).unwrap(),
            &TruncatedSeries::from_real(&[1.0, 2.0, 1.0]),
            1e-14
        ));
        let b = TruncatedSeries::new(vec![c(1.0, 0.0), c(0.3, 0.2), c(-0.1, 0.4)]);
        assert!(close(
            &b.pow_real(0.0).unwrap(),
            &TruncatedSeries::one(2),
            1e-14
        ));
        // square of the half power returns the original
        let h = TruncatedSeries::from_real(&[1.0, 1.0, 0.0, 0.0])
            .pow_real(0.5)
            .unwrap();
        assert!(close(
            &h.mul(&h).unwrap(),
            &TruncatedSeries::from_real(&[1.0, 1.0, 0.0, 0.0]),
            1e-14
        ));
        assert!(matches!(
            TruncatedSeries::from_real(&[2.0, 1.0]).pow_real(0.5),
            Err(SeriesError::ConstantTermNotOne(_))
        ));
    }

    #[test]
    fn compose_identities() {
        let outer = TruncatedSeries::new(vec![c(0.4, 0.1), c(1.0, -0.3), c(0.2, 0.0), c(0.0, 0.7)]);
        let id = TruncatedSeries::identity(3);
        assert!(close(&outer.compose(&id).unwrap(), &outer, 1e-14));
        let inner = TruncatedSeries::new(vec![c(0.0, 0.0), c(0.9, 0.1), c(-0.2, 0.3), c(0.1, 0.0)]);
        assert!(close(&id.compose(&inner).unwrap(), &inner, 1e-14));
        assert!(matches!(
            outer.compose(&TruncatedSeries::one(3)),
            Err(SeriesError::ConstantTermNotZero(_))
        ));
    }

    #[test]
    fn revert_quartic_fixture() {
        // b2 = -a2, b3 = 2 a2^2 - a3, b4 = -(5 a2^3 - 5 a2 a3 + a4)
        let a = TruncatedSeries::from_real(&[0.0, 1.0, 0.5, 0.25, 0.1]);
        let b = a.revert().unwrap();
        let expected = TruncatedSeries::from_real(&[0.0, 1.0, -0.5, 0.25, -0.1]);
        assert!(close(&b, &expected, 1e-14));

        let id = TruncatedSeries::identity(4);
        assert!(close(&id.revert().unwrap(), &id, 1e-14));

        assert_eq!(
            TruncatedSeries::from_real(&[0.0, 2.0, 1.0]).revert(),
            Err(SeriesError::NotNormalized)
        );
    }

    #[test]
    fn revert_round_trip() {
        let a = TruncatedSeries::new(vec![
            c(0.0, 0.0),
            c(1.0, 0.0),
            c(0.3, -0.2),
            c(-0.15, 0.4),
            c(0.05, 0.05),
        ]);
        let b = a.revert().unwrap();
        let comp = b.compose(&a).unwrap();
        assert!(close(&comp, &TruncatedSeries::identity(4), 1e-13));
    }

    #[test]
    fn class_lhs_on_identity_is_one() {
        let p = ClassParams::new(1.7, 2.3, 0.8).unwrap();
        let f = TruncatedSeries::identity(4);
        let lhs = class_lhs(&f, &p).unwrap();
        assert!(close(&lhs, &TruncatedSeries::one(3), 1e-14));
    }

    #[test]
    fn class_lhs_at_unit_lambda_mu_is_f_prime() {
        let p = ClassParams::new(1.0, 1.0, 0.75).unwrap();
        let f = TruncatedSeries::new(vec![
            c(0.0, 0.0),
            c(1.0, 0.0),
            c(0.21, 0.13),
            c(-0.05, 0.4),
            c(0.02, -0.3),
        ]);
        let lhs = class_lhs(&f, &p).unwrap();
        let expected = f.derivative();
        assert!(close(&lhs, &expected, 1e-14));
    }

    #[test]
    fn class_lhs_rejects_non_normalized() {
        let p = ClassParams::new(1.0, 1.0, 0.75).unwrap();
        let f = TruncatedSeries::from_real(&[0.1, 1.0, 0.0, 0.0]);
        assert_eq!(class_lhs(&f, &p), Err(SeriesError::NotNormalized));
    }

    /// The three displayed output coefficients of the class expression in
    /// terms of the input coefficients; independent of the series engine.
    fn class_lhs_displays(
        a2: Complex64,
        a3: Complex64,
        a4: Complex64,
        lambda: f64,
        mu: f64,
    ) -> [Complex64; 3] {
        [
            (lambda + mu) * a2,
            (2.0 * lambda + mu) * (a3 + a2 * a2 * (mu - 1.0) / 2.0),
            (3.0 * lambda + mu)
                * (a4 + (mu - 1.0) * a2 * a3 + (mu - 1.0) * (mu - 2.0) * a2 * a2 * a2 / 6.0),
        ]
    }

    proptest! {
        #[test]
        fn mul_commutes_and_associates(
            av in proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 5..9),
            bv in proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 5..9),
            cv in proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 5..9),
        ) {
            let n = av.len().min(bv.len()).min(cv.len()) - 1;
            let mk = |v: &[(f64, f64)]| {
                TruncatedSeries::new(v[..=n].iter().map(|&(re, im)| c(re, im)).collect())
            };
            let (a, b, cc) = (mk(&av), mk(&bv), mk(&cv));
            prop_assert!(a.mul(&b).unwrap().max_abs_diff(&b.mul(&a).unwrap()).unwrap() <= 1e-13);
            let left = a.mul(&b).unwrap().mul(&cc).unwrap();
            let right = a.mul(&b.mul(&cc).unwrap()).unwrap();
            prop_assert!(left.max_abs_diff(&right).unwrap() <= 1e-13);
        }

        #[test]
        fn integer_pow_matches_repeated_mul(
            v in proptest::collection::vec((-0.9f64..0.9, -0.9f64..0.9), 5..9),
            m in 0u32..5,
        ) {
            let mut coeffs: Vec<Complex64> = v.iter().map(|&(re, im)| c(re, im)).collect();
            coeffs[0] = Complex64::ONE;
            let a = TruncatedSeries::new(coeffs);
            let via_pow = a.pow_real(m as f64).unwrap();
            let mut via_mul = TruncatedSeries::one(a.order());
            for _ in 0..m {
                via_mul = via_mul.mul(&a).unwrap();
            }
            prop_assert!(via_pow.max_abs_diff(&via_mul).unwrap() <= 1e-12);
        }

        #[test]
        fn revert_is_an_involution(
            v in proptest::collection::vec((-0.8f64..0.8, -0.8f64..0.8), 5..9),
        ) {
            let mut coeffs: Vec<Complex64> = v.iter().map(|&(re, im)| c(re, im)).collect();
            coeffs[0] = Complex64::ZERO;
            coeffs[1] = Complex64::ONE;
            let a = TruncatedSeries::new(coeffs);
            let back = a.revert().unwrap().revert().unwrap();
            prop_assert!(back.max_abs_diff(&a).unwrap() <= 1e-12);
        }

        #[test]
        fn class_lhs_matches_displayed_coefficients(
            lambda in 1.0f64..3.0,
            mu in 0.0f64..3.0,
            re2 in -0.5f64..0.5, im2 in -0.5f64..0.5,
            re3 in -0.5f64..0.5, im3 in -0.5f64..0.5,
            re4 in -0.5f64..0.5, im4 in -0.5f64..0.5,
        ) {
            let p = ClassParams::new(lambda, mu, 0.75).unwrap();
            let (a2, a3, a4) = (c(re2, im2), c(re3, im3), c(re4, im4));
            let f = TruncatedSeries::new(vec![Complex64::ZERO, Complex64::ONE, a2, a3, a4]);
            let lhs = class_lhs(&f, &p).unwrap();
            prop_assert!((lhs.coeff(0) - Complex64::ONE).norm() <= 1e-12);
            let disp = class_lhs_displays(a2, a3, a4, lambda, mu);
            for k in 1..=3 {
                prop_assert!((lhs.coeff(k) - disp[k - 1]).norm() <= 1e-10,
                    "k={}, lhs={}, display={}", k, lhs.coeff(k), disp[k - 1]);
            }
        }
    }
}
