//! The piecewise upper bound for `|a2 a4 - a3^2|`.
//!
//! Everything here is a direct transcription of closed-form displays:
//! the sign quantities `M1`, `M2`, the surface coefficients `S1..S4`, the
//! profile `K(c, t)` with its derivative, and the specialized one-parameter
//! bounds. The `oracles` module re-derives and brute-forces these same
//! quantities independently; keep the two paths separate.
//!
//! Notation used throughout the formulas (all strictly positive on the
//! accepted domain): `lm = lambda + mu`, `l2m = 2 lambda + mu`,
//! `l3m = 3 lambda + mu`; `U_n` is the degree-`n` Chebyshev polynomial of
//! the second kind evaluated at `t`.

use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::chebyshev::cheb_u;
use crate::params::{ClassParams, ParamError};
use crate::roots;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BoundsError {
    #[error("c must lie in [0, 2] (got {0})")]
    COutOfRange(f64),
    #[error("gamma arguments must lie in [0, 1] (got {0})")]
    GammaOutOfRange(f64),
}

/// Sign pattern of `(M1, M2)` selecting the bound's case.
///
/// Assignment precedence: `BothNonneg`, then `BothNonpos`, then the two
/// strict mixed cases. A boundary value (`M1 == 0` or `M2 == 0`) therefore
/// falls into the first matching non-strict case; the overlap at zero is
/// value-consistent (both matching rows give the same bound).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignCase {
    BothNonneg,
    PosNeg,
    BothNonpos,
    NegPos,
}

impl SignCase {
    pub fn label(&self) -> &'static str {
        match self {
            SignCase::BothNonneg => "BOTH_NONNEG",
            SignCase::PosNeg => "POS_NEG",
            SignCase::BothNonpos => "BOTH_NONPOS",
            SignCase::NegPos => "NEG_POS",
        }
    }
}

impl fmt::Display for SignCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Bound value together with the quantities that determined it.
///
/// `c0` is present iff the case is one of the two mixed ones and the
/// radicand `-6 M2 / M1` lies in `(0, 4)`, i.e. the critical point of the
/// profile is interior; `k_at_c0` is present exactly when `c0` is.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundResult {
    pub bound: f64,
    pub case: SignCase,
    pub m1: f64,
    pub m2: f64,
    pub k_at_2: f64,
    pub k_at_c0: Option<f64>,
    pub c0: Option<f64>,
}

fn denoms(lambda: f64, mu: f64) -> (f64, f64, f64) {
    (lambda + mu, 2.0 * lambda + mu, 3.0 * lambda + mu)
}

/// `M1(lambda, mu; t)`:
///
/// ```text
/// 16 t^2 |3(2t^2-1)(lm)^3 - (mu^2+3mu+2)(l3m) t^2| (l2m)^2
///   - 24 t [t^2 (l3m) + (4t^2-1)(lm)(l2m)] (lm)^2 (l2m)
///   - 24 t^2 lambda^2 (lm)^3
/// ```
pub fn m1(p: &ClassParams) -> f64 {
    let (lambda, mu, t) = (p.lambda(), p.mu(), p.t());
    let (lm, l2m, l3m) = denoms(lambda, mu);
    let t2 = t * t;
    16.0 * t2
        * (3.0 * (2.0 * t2 - 1.0) * lm.powi(3) - (mu * mu + 3.0 * mu + 2.0) * l3m * t2).abs()
        * l2m
        * l2m
        - 24.0 * t * (t2 * l3m + (4.0 * t2 - 1.0) * lm * l2m) * lm * lm * l2m
        - 24.0 * t2 * lambda * lambda * lm.powi(3)
}

/// `M2(lambda, mu; t)`:
///
/// ```text
/// 8 t [t^2 (l2m)(l3m) + (4t^2-1)(lm)(l2m)^2 + t (l2m)^2 (lm)
///       - 2 t (lm)^2 (l3m)] (lm)^2
/// ```
pub fn m2(p: &ClassParams) -> f64 {
    let (lambda, mu, t) = (p.lambda(), p.mu(), p.t());
    let (lm, l2m, l3m) = denoms(lambda, mu);
    let t2 = t * t;
    8.0 * t
        * (t2 * l2m * l3m + (4.0 * t2 - 1.0) * lm * l2m * l2m + t * l2m * l2m * lm
            - 2.0 * t * lm * lm * l3m)
        * lm
        * lm
}

/// The four surface coefficients at `c in [0, 2]`. Sign contract on the
/// accepted domain: `S1 >= 0`, `S2 >= 0`, `S3 <= 0`, `S4 >= 0`.
pub fn s_coeffs(c: f64, p: &ClassParams) -> Result<(f64, f64, f64, f64), BoundsError> {
    if !(0.0..=2.0).contains(&c) {
        return Err(BoundsError::COutOfRange(c));
    }
    let (lambda, mu, t) = (p.lambda(), p.mu(), p.t());
    let (lm, l2m, l3m) = denoms(lambda, mu);
    let (u1, u2, u3) = (cheb_u(1, t), cheb_u(2, t), cheb_u(3, t));
    let q = 4.0 - c * c;
    let s1 = u1
        * (6.0 * u3 * lm.powi(3) - u1.powi(3) * (mu * mu + 3.0 * mu + 2.0) * l3m).abs()
        * c.powi(4)
        / (96.0 * lm.powi(4) * l3m)
        + u1 * u1 * c * q / (8.0 * lm * l3m);
    let s2 =
        u1.powi(3) * c * c * q / (64.0 * lm * lm * l2m) + u1 * u2 * q * c * c / (16.0 * lm * l3m);
    let s3 = u1 * u1 * c * (c - 2.0) * q / (32.0 * lm * l3m);
    let s4 = u1 * u1 * q * q / (64.0 * l2m * l2m);
    Ok((s1, s2, s3, s4))
}

/// The quadratic surface
/// `F(g1, g2) = S1 + S2 (g1+g2) + S3 (g1^2+g2^2) + S4 (g1+g2)^2`
/// on the closed unit square.
pub fn f_surface(gamma1: f64, gamma2: f64, c: f64, p: &ClassParams) -> Result<f64, BoundsError> {
    for g in [gamma1, gamma2] {
        if !(0.0..=1.0).contains(&g) {
            return Err(BoundsError::GammaOutOfRange(g));
        }
    }
    let (s1, s2, s3, s4) = s_coeffs(c, p)?;
    let sum = gamma1 + gamma2;
    Ok(s1 + s2 * sum + s3 * (gamma1 * gamma1 + gamma2 * gamma2) + s4 * sum * sum)
}

fn denom_prod(lm: f64, l2m: f64, l3m: f64) -> f64 {
    lm.powi(4) * l2m * l2m * l3m
}

/// The boundary profile
/// `K(c, t) = U1^2/(l2m)^2 + (M1 c^4 + 12 M2 c^2) / (96 lm^4 l2m^2 l3m)`,
/// which equals `F(1, 1)` at the same `c`.
pub fn k_profile(c: f64, p: &ClassParams) -> Result<f64, BoundsError> {
    if !(0.0..=2.0).contains(&c) {
        return Err(BoundsError::COutOfRange(c));
    }
    let (lm, l2m, l3m) = denoms(p.lambda(), p.mu());
    let u1 = cheb_u(1, p.t());
    let c2 = c * c;
    Ok(u1 * u1 / (l2m * l2m)
        + (m1(p) * c2 * c2 + 12.0 * m2(p) * c2) / (96.0 * denom_prod(lm, l2m, l3m)))
}

/// `K'(c, t) = (M1 c^2 + 6 M2) c / (24 lm^4 l2m^2 l3m)`.
pub fn k_derivative(c: f64, p: &ClassParams) -> f64 {
    let (lm, l2m, l3m) = denoms(p.lambda(), p.mu());
    (m1(p) * c * c + 6.0 * m2(p)) * c / (24.0 * denom_prod(lm, l2m, l3m))
}

/// Interior critical point `c0 = sqrt(-6 M2 / M1)` of the profile, present
/// only when `M1` and `M2` have strictly opposite signs and the radicand
/// lies in `(0, 4)`.
pub fn c_critical(p: &ClassParams) -> Option<f64> {
    critical_point(m1(p), m2(p))
}

fn critical_point(m1v: f64, m2v: f64) -> Option<f64> {
    if m1v == 0.0 || m2v == 0.0 || (m1v > 0.0) == (m2v > 0.0) {
        return None;
    }
    let radicand = -6.0 * m2v / m1v;
    (radicand > 0.0 && radicand < 4.0).then(|| radicand.sqrt())
}

/// Case resolution shared by the general bound and the specialized
/// transcriptions. `k0 = 4 t^2 / (l2m)^2` is the profile value at `c = 0`;
/// `dp` is the denominator product `lm^4 l2m^2 l3m`.
///
/// The mixed case with `M1 < 0`, `M2 > 0` but `c0 >= 2` keeps the case tag
/// and takes `K(2, t)`: the derivative display shows `K' > 0` throughout
/// `(0, 2)` there, so the profile maximum sits at the right endpoint and
/// evaluating the `K(c0, t)` display would overshoot it.
fn resolve(m1v: f64, m2v: f64, k0: f64, dp: f64) -> BoundResult {
    let k2 = k0 + (m1v + 3.0 * m2v) / (6.0 * dp);
    let case = match (m1v >= 0.0 && m2v >= 0.0, m1v <= 0.0 && m2v <= 0.0) {
        (true, _) => SignCase::BothNonneg,
        (_, true) => SignCase::BothNonpos,
        _ if m1v > 0.0 => SignCase::PosNeg,
        _ => SignCase::NegPos,
    };
    let c0 = match case {
        SignCase::PosNeg | SignCase::NegPos => critical_point(m1v, m2v),
        _ => None,
    };
    let kc0 = c0.map(|_| k0 - 3.0 * m2v * m2v / (8.0 * m1v * dp));
    let (bound, k_at_c0) = match case {
        SignCase::BothNonneg => (k2, None),
        SignCase::BothNonpos => (k0, None),
        SignCase::PosNeg => (k0.max(k2), kc0),
        SignCase::NegPos => match kc0 {
            Some(kc0) => (kc0.max(k2), Some(kc0)),
            None => (k2, None),
        },
    };
    BoundResult {
        bound,
        case,
        m1: m1v,
        m2: m2v,
        k_at_2: k2,
        k_at_c0,
        c0,
    }
}

/// The piecewise bound for `|a2 a4 - a3^2|` over the class selected by `p`:
///
/// * `M1 >= 0, M2 >= 0`  ->  `K(2, t)`
/// * `M1 > 0,  M2 < 0`   ->  `max { 4t^2/(l2m)^2, K(2, t) }`
/// * `M1 <= 0, M2 <= 0`  ->  `4t^2/(l2m)^2`
/// * `M1 < 0,  M2 > 0`   ->  `max { K(c0, t), K(2, t) }` for interior `c0`,
///   `K(2, t)` otherwise (see [`resolve`] internals).
pub fn hankel_bound(p: &ClassParams) -> BoundResult {
    let (lm, l2m, l3m) = denoms(p.lambda(), p.mu());
    let t = p.t();
    let k0 = 4.0 * t * t / (l2m * l2m);
    resolve(m1(p), m2(p), k0, denom_prod(lm, l2m, l3m))
}

/// Specialized transcription for the `mu = 1` family (independent of the
/// general displays; kept separate so the two can be cross-checked):
///
/// ```text
/// M3 = 16 t^2 |3(2t^2-1)(la+1)^3 - 6(3la+1) t^2| (2la+1)^2
///        - 24 t [t^2 (3la+1) + (4t^2-1)(la+1)(2la+1)] (la+1)^2 (2la+1)
///        - 24 t^2 la^2 (la+1)^3
/// M4 = 8 t [t^2 (2la+1)(3la+1) + (4t^2-1)(la+1)(2la+1)^2
///            + t (2la+1)^2 (la+1) - 2 t (la+1)^2 (3la+1)] (la+1)^2
/// ```
pub fn bound_bsigma_lambda(lambda: f64, t: f64) -> Result<BoundResult, ParamError> {
    ClassParams::new(lambda, 1.0, t)?;
    let (l1, l21, l31) = (lambda + 1.0, 2.0 * lambda + 1.0, 3.0 * lambda + 1.0);
    let t2 = t * t;
    let m3 = 16.0 * t2 * (3.0 * (2.0 * t2 - 1.0) * l1.powi(3) - 6.0 * l31 * t2).abs() * l21 * l21
        - 24.0 * t * (t2 * l31 + (4.0 * t2 - 1.0) * l1 * l21) * l1 * l1 * l21
        - 24.0 * t2 * lambda * lambda * l1.powi(3);
    let m4 = 8.0
        * t
        * (t2 * l21 * l31 + (4.0 * t2 - 1.0) * l1 * l21 * l21 + t * l21 * l21 * l1
            - 2.0 * t * l1 * l1 * l31)
        * l1
        * l1;
    let k0 = 4.0 * t2 / (l21 * l21);
    Ok(resolve(m3, m4, k0, denom_prod(l1, l21, l31)))
}

/// Specialized transcription for the `lambda = 1` (Bazilevic) family:
///
/// ```text
/// M5 = 16 t^2 |3(2t^2-1)(1+mu)^3 - (mu^2+3mu+2)(3+mu) t^2| (2+mu)^2
///        - 24 t [t^2 (3+mu) + (4t^2-1)(1+mu)(2+mu)] (1+mu)^2 (2+mu)
///        - 24 t^2 (1+mu)^3
/// M6 = 8 t [t^2 (2+mu)(3+mu) + (4t^2-1)(1+mu)(2+mu)^2
///            + t (2+mu)^2 (1+mu) - 2 t (1+mu)^2 (3+mu)] (1+mu)^2
/// ```
pub fn bound_bazilevic(mu: f64, t: f64) -> Result<BoundResult, ParamError> {
    ClassParams::new(1.0, mu, t)?;
    let (m1p, m2p, m3p) = (1.0 + mu, 2.0 + mu, 3.0 + mu);
    let t2 = t * t;
    let m5 = 16.0
        * t2
        * (3.0 * (2.0 * t2 - 1.0) * m1p.powi(3) - (mu * mu + 3.0 * mu + 2.0) * m3p * t2).abs()
        * m2p
        * m2p
        - 24.0 * t * (t2 * m3p + (4.0 * t2 - 1.0) * m1p * m2p) * m1p * m1p * m2p
        - 24.0 * t2 * m1p.powi(3);
    let m6 = 8.0
        * t
        * (t2 * m2p * m3p + (4.0 * t2 - 1.0) * m1p * m2p * m2p + t * m2p * m2p * m1p
            - 2.0 * t * m1p * m1p * m3p)
        * m1p
        * m1p;
    let k0 = 4.0 * t2 / (m2p * m2p);
    Ok(resolve(m5, m6, k0, denom_prod(m1p, m2p, m3p)))
}

/// Switch point of [`bound_starlike_closed`]: `(7 + sqrt(401)) / 44`.
pub fn starlike_threshold() -> f64 {
    (7.0 + 401.0_f64.sqrt()) / 44.0
}

/// Two-branch closed form for the bi-starlike family (`lambda = 1, mu = 0`):
/// `8 t^2 / 3` up to [`starlike_threshold`], then
/// `t^2 + t (2 + t - 11 t^2)^2 / (3 (22 t^2 - 7 t - 4))`.
///
/// The printed second branch equals the `K(c0, t)` display; it overshoots
/// the tight bound while the critical point is still outside `(0, 2)` and
/// diverges at the threshold itself. See the consistency checks in the
/// acceptance suite.
pub fn bound_starlike_closed(t: f64) -> Result<f64, ParamError> {
    ClassParams::new(1.0, 0.0, t)?;
    if t <= starlike_threshold() {
        Ok(8.0 * t * t / 3.0)
    } else {
        let num = 2.0 + t - 11.0 * t * t;
        Ok(t * t + t * num * num / (3.0 * (22.0 * t * t - 7.0 * t - 4.0)))
    }
}

/// Switch point of [`bound_bsigma_closed`]: the root of `M1` at
/// `lambda = mu = 1`, located once by bisection (~= 0.603615) and cached.
pub fn bsigma_threshold() -> f64 {
    static T01: OnceLock<f64> = OnceLock::new();
    *T01.get_or_init(|| {
        let f = |t: f64| m1(&ClassParams::new(1.0, 1.0, t).expect("t within (0.51, 0.99)"));
        roots::bisect(f, 0.51, 0.99, 1e-12).expect("M1(1,1,.) changes sign on (0.51, 0.99)")
    })
}

/// Two-branch closed form for the `lambda = mu = 1` family:
/// `t^2 (1 - t^2)` up to [`bsigma_threshold`], then
/// `t (260 t^4 + 84 t^3 - 139 t^2 - 18 t + 9) / (8 (18 t^3 + 42 t^2 - 17 t - 9))`.
///
/// Same caveat as [`bound_starlike_closed`]: the second branch is the
/// `K(c0, t)` display and overshoots the tight bound until the critical
/// point enters `(0, 2)`.
pub fn bound_bsigma_closed(t: f64) -> Result<f64, ParamError> {
    ClassParams::new(1.0, 1.0, t)?;
    if t <= bsigma_threshold() {
        Ok(t * t * (1.0 - t * t))
    } else {
        let t2 = t * t;
        let num = 260.0 * t2 * t2 + 84.0 * t2 * t - 139.0 * t2 - 18.0 * t + 9.0;
        let den = 18.0 * t2 * t + 42.0 * t2 - 17.0 * t - 9.0;
        Ok(t * num / (8.0 * den))
    }
}
