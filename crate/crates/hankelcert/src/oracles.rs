//! Independent verification of the bound's derivation: the coefficient
//! parameterization, the expansion displays, brute-force maximization,
//! sign-change root finding, and seeded Monte-Carlo sampling.
//!
//! Nothing in here reuses the case analysis it is meant to check. The
//! brute-force refinements are plain grid shrinks (no derivative use), and
//! every expansion is recomputed through the generic series engine.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::bounds::{f_surface, hankel_bound, k_profile};
use crate::chebyshev::{cheb_u, h_series};
use crate::params::ClassParams;
use crate::roots;
use crate::series::{class_lhs, TruncatedSeries};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OracleError {
    #[error("c1 must lie in [0, 2] (got {0})")]
    COutOfRange(f64),
    #[error("disk parameter {0} has modulus > 1")]
    ModulusExceedsOne(&'static str),
    #[error("no sign change on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },
    #[error("surface grid needs at least 11 points per axis (got {0})")]
    SurfaceGridTooCoarse(usize),
    #[error("profile grid needs at least 101 points (got {0})")]
    ProfileGridTooCoarse(usize),
    #[error("at least one sample is required")]
    NoSamples,
}

/// Admissible Caratheodory data: `c1 = c` taken real in `[0, 2]` (the
/// derivation normalizes the first coefficient this way) and four free
/// parameters in the closed unit disk. `c2, c3` and the inverse side's
/// `d2, d3` follow via [`derive_cd`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrenanderSample {
    pub c: f64,
    pub x: Complex64,
    pub y: Complex64,
    pub z: Complex64,
    pub w: Complex64,
}

impl GrenanderSample {
    pub fn new(
        c: f64,
        x: Complex64,
        y: Complex64,
        z: Complex64,
        w: Complex64,
    ) -> Result<Self, OracleError> {
        if !(0.0..=2.0).contains(&c) {
            return Err(OracleError::COutOfRange(c));
        }
        for (v, name) in [(x, "x"), (y, "y"), (z, "z"), (w, "w")] {
            if v.norm_sqr() > 1.0 {
                return Err(OracleError::ModulusExceedsOne(name));
            }
        }
        Ok(Self { c, x, y, z, w })
    }

    pub fn zero() -> Self {
        Self {
            c: 0.0,
            x: Complex64::ZERO,
            y: Complex64::ZERO,
            z: Complex64::ZERO,
            w: Complex64::ZERO,
        }
    }
}

/// Taylor coefficients `(a2, a3, a4)` of a candidate class member.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoefficientTriple {
    pub a2: Complex64,
    pub a3: Complex64,
    pub a4: Complex64,
}

/// Second and third Caratheodory coefficients on both sides of the
/// subordination pair:
///
/// ```text
/// 2 c2 = c^2 + (4 - c^2) x
/// 4 c3 = c^3 + 2(4 - c^2)c x - (4 - c^2)c x^2 + 2(4 - c^2)(1 - |x|^2) z
/// ```
///
/// and identically for `(d2, d3)` with `d1 = -c` and the pair `(y, w)`.
pub fn derive_cd(s: &GrenanderSample) -> (Complex64, Complex64, Complex64, Complex64) {
    let c = s.c;
    let q = 4.0 - c * c;
    let c2 = (Complex64::new(c * c, 0.0) + s.x * q) * 0.5;
    let c3 = (Complex64::new(c * c * c, 0.0) + s.x * (2.0 * q * c) - s.x * s.x * (q * c)
        + s.z * (2.0 * q * (1.0 - s.x.norm_sqr())))
        * 0.25;
    let d2 = (Complex64::new(c * c, 0.0) + s.y * q) * 0.5;
    let d3 = (Complex64::new(-c * c * c, 0.0) - s.y * (2.0 * q * c)
        + s.y * s.y * (q * c)
        + s.w * (2.0 * q * (1.0 - s.y.norm_sqr())))
        * 0.25;
    (c2, c3, d2, d3)
}

/// The coefficient triple determined by a sample:
///
/// ```text
/// a2 = U1 c / (2 lm)
/// a3 = a2^2 + U1 (c2 - d2) / (4 l2m)
/// a4 = 5 U1^2 c (c2 - d2) / (16 lm l2m) + U1 (c3 - d3) / (4 l3m)
///        + (U2 - U1) c (c2 + d2) / (4 l3m)
///        + [ (U1 - 2U2 + U3) / (8 l3m) - (mu^2 + 3mu - 4) U1^3 / (48 lm^3) ] c^3
/// ```
pub fn sample_coeffs(s: &GrenanderSample, p: &ClassParams) -> CoefficientTriple {
    let (lambda, mu, t) = (p.lambda(), p.mu(), p.t());
    let (lm, l2m, l3m) = (lambda + mu, 2.0 * lambda + mu, 3.0 * lambda + mu);
    let (u1, u2, u3) = (cheb_u(1, t), cheb_u(2, t), cheb_u(3, t));
    let (c2, c3, d2, d3) = derive_cd(s);
    let c1 = Complex64::new(s.c, 0.0);
    let a2 = c1 * (u1 / (2.0 * lm));
    let a3 = a2 * a2 + (c2 - d2) * (u1 / (4.0 * l2m));
    let a4 = (c2 - d2) * c1 * (5.0 * u1 * u1 / (16.0 * lm * l2m))
        + (c3 - d3) * (u1 / (4.0 * l3m))
        + (c2 + d2) * c1 * ((u2 - u1) / (4.0 * l3m))
        + c1 * c1
            * c1
            * ((u1 - 2.0 * u2 + u3) / (8.0 * l3m)
                - (mu * mu + 3.0 * mu - 4.0) * u1.powi(3) / (48.0 * lm.powi(3)));
    CoefficientTriple { a2, a3, a4 }
}

/// `|a2 a4 - a3^2|`.
pub fn hankel_functional(triple: &CoefficientTriple) -> f64 {
    (triple.a2 * triple.a4 - triple.a3 * triple.a3).norm()
}

/// `a2 a4 - a3^2` evaluated through the expanded display
///
/// ```text
/// U1^3 c^2 (c2-d2) / (32 lm^2 l2m) + U1^2 c (c3-d3) / (8 lm l3m)
///   + (U2-U1) U1 c^2 (c2+d2) / (8 lm l3m) - U1^2 (c2-d2)^2 / (16 l2m^2)
///   + U1 c^4 [6(U1-2U2+U3) lm^3 - U1^3 (mu^2+3mu+2) l3m] / (96 lm^4 l3m)
/// ```
///
/// An algebraic identity check against [`sample_coeffs`]: the two routes
/// must agree for every admissible sample.
pub fn hankel_expansion(s: &GrenanderSample, p: &ClassParams) -> Complex64 {
    let (lambda, mu, t) = (p.lambda(), p.mu(), p.t());
    let (lm, l2m, l3m) = (lambda + mu, 2.0 * lambda + mu, 3.0 * lambda + mu);
    let (u1, u2, u3) = (cheb_u(1, t), cheb_u(2, t), cheb_u(3, t));
    let (c2, c3, d2, d3) = derive_cd(s);
    let c1 = Complex64::new(s.c, 0.0);
    let diff = c2 - d2;
    (c2 - d2) * c1 * c1 * (u1.powi(3) / (32.0 * lm * lm * l2m))
        + (c3 - d3) * c1 * (u1 * u1 / (8.0 * lm * l3m))
        + (c2 + d2) * c1 * c1 * ((u2 - u1) * u1 / (8.0 * lm * l3m))
        - diff * diff * (u1 * u1 / (16.0 * l2m * l2m))
        + c1 * c1
            * c1
            * c1
            * (u1
                * (6.0 * (u1 - 2.0 * u2 + u3) * lm.powi(3)
                    - u1.powi(3) * (mu * mu + 3.0 * mu + 2.0) * l3m)
                / (96.0 * lm.powi(4) * l3m))
}

/// Residual of one side of the subordination algebra.
///
/// Three displayed expansions are recomputed through the generic series
/// engine and compared coefficient-by-coefficient (orders 1..3):
/// the class expression applied to `h`, the Schwarz transform
/// `w = (p-1)/(p+1)` of `p = 1 + e1 z + e2 z^2 + e3 z^3`, and the
/// composition of the generating-function series with `w`.
fn expansion_residual(
    h: &TruncatedSeries,
    lhs_display: [Complex64; 3],
    carath: (Complex64, Complex64, Complex64),
    p: &ClassParams,
) -> f64 {
    let lhs = class_lhs(h, p).expect("series is normalized by construction");
    let mut worst = (lhs.coeff(0) - Complex64::ONE).norm();
    for k in 1..=3 {
        worst = worst.max((lhs.coeff(k) - lhs_display[k - 1]).norm());
    }

    let (e1, e2, e3) = carath;
    let p_series = TruncatedSeries::new(vec![Complex64::ONE, e1, e2, e3]);
    let one = TruncatedSeries::one(3);
    let w = p_series
        .sub(&one)
        .unwrap()
        .mul(&p_series.add(&one).unwrap().recip().unwrap())
        .unwrap();
    let w_display = [
        e1 * 0.5,
        (e2 - e1 * e1 * 0.5) * 0.5,
        (e3 - e1 * e2 + e1 * e1 * e1 * 0.25) * 0.5,
    ];
    worst = worst.max(w.coeff(0).norm());
    for k in 1..=3 {
        worst = worst.max((w.coeff(k) - w_display[k - 1]).norm());
    }

    let (u1, u2, u3) = (cheb_u(1, p.t()), cheb_u(2, p.t()), cheb_u(3, p.t()));
    let composed = h_series(p.t(), 3)
        .expect("t is inside (-1, 1)")
        .compose(&w)
        .unwrap();
    let rhs_display = [
        e1 * (u1 * 0.5),
        (e2 - e1 * e1 * 0.5) * (u1 * 0.5) + e1 * e1 * (u2 * 0.25),
        (e3 - e1 * e2 + e1 * e1 * e1 * 0.25) * (u1 * 0.5)
            + e1 * (e2 - e1 * e1 * 0.5) * (u2 * 0.5)
            + e1 * e1 * e1 * (u3 * 0.125),
    ];
    worst = worst.max((composed.coeff(0) - Complex64::ONE).norm());
    for k in 1..=3 {
        worst = worst.max((composed.coeff(k) - rhs_display[k - 1]).norm());
    }
    worst
}

/// Maximum residual of the displayed coefficient expansions over both
/// sides of the subordination pair, for the member built from `s`.
///
/// The direct side runs on `f = z + a2 z^2 + a3 z^3 + a4 z^4` with
/// Caratheodory data `(c, c2, c3)`; the inverse side runs on the reverted
/// series with data `(-c, d2, d3)` and the inverse-side displays
/// `-(lm) a2`, `(l2m)[(mu+3) a2^2/2 - a3]`,
/// `(l3m)[(4+mu) a2 a3 - (4+mu)(5+mu) a2^3/6 - a4]`.
pub fn verify_subordination_expansion(s: &GrenanderSample, p: &ClassParams) -> f64 {
    let (lambda, mu) = (p.lambda(), p.mu());
    let (lm, l2m, l3m) = (lambda + mu, 2.0 * lambda + mu, 3.0 * lambda + mu);
    let triple = sample_coeffs(s, p);
    let (a2, a3, a4) = (triple.a2, triple.a3, triple.a4);
    let (c2, c3, d2, d3) = derive_cd(s);
    let c1 = Complex64::new(s.c, 0.0);

    let f = TruncatedSeries::new(vec![Complex64::ZERO, Complex64::ONE, a2, a3, a4]);
    let direct_display = [
        a2 * lm,
        (a3 + a2 * a2 * ((mu - 1.0) * 0.5)) * l2m,
        (a4 + a2 * a3 * (mu - 1.0) + a2 * a2 * a2 * ((mu - 1.0) * (mu - 2.0) / 6.0)) * l3m,
    ];
    let direct = expansion_residual(&f, direct_display, (c1, c2, c3), p);

    let g = f.revert().expect("f is normalized by construction");
    let inverse_display = [
        -a2 * lm,
        (a2 * a2 * ((mu + 3.0) * 0.5) - a3) * l2m,
        (a2 * a3 * (4.0 + mu) - a2 * a2 * a2 * ((4.0 + mu) * (5.0 + mu) / 6.0) - a4) * l3m,
    ];
    let inverse = expansion_residual(&g, inverse_display, (-c1, d2, d3), p);

    direct.max(inverse)
}

/// Exhaustive grid maximum of the surface `F` over the closed unit square,
/// `grid_n` points per axis. Returns the maximum and its grid argmax.
pub fn brute_max_surface(
    c: f64,
    p: &ClassParams,
    grid_n: usize,
) -> Result<(f64, (f64, f64)), OracleError> {
    if grid_n < 11 {
        return Err(OracleError::SurfaceGridTooCoarse(grid_n));
    }
    // hoist the c-dependent coefficients; the inner expression mirrors
    // f_surface exactly, so grid values and the corner value stay
    // bit-for-bit comparable
    let (s1, s2, s3, s4) =
        crate::bounds::s_coeffs(c, p).map_err(|_| OracleError::COutOfRange(c))?;
    let step = |i: usize| {
        if i + 1 == grid_n {
            1.0
        } else {
            i as f64 / (grid_n - 1) as f64
        }
    };
    let mut best = f64::NEG_INFINITY;
    let mut arg = (0.0, 0.0);
    for i in 0..grid_n {
        let g1 = step(i);
        for j in 0..grid_n {
            let g2 = step(j);
            let sum = g1 + g2;
            let v = s1 + s2 * sum + s3 * (g1 * g1 + g2 * g2) + s4 * sum * sum;
            if v > best {
                best = v;
                arg = (g1, g2);
            }
        }
    }
    Ok((best, arg))
}

/// Grid maximum of the profile `K` over `[0, 2]` with three rounds of
/// grid-shrink refinement around the incumbent (one initial spacing wide,
/// re-gridded at `grid_n` points each round). Deliberately derivative-free.
pub fn brute_max_profile(p: &ClassParams, grid_n: usize) -> Result<(f64, f64), OracleError> {
    if grid_n < 101 {
        return Err(OracleError::ProfileGridTooCoarse(grid_n));
    }
    let scan = |lo: f64, hi: f64| {
        let mut best = f64::NEG_INFINITY;
        let mut arg = lo;
        for i in 0..grid_n {
            let c = if i + 1 == grid_n {
                hi
            } else {
                lo + (hi - lo) * i as f64 / (grid_n - 1) as f64
            };
            let v = k_profile(c, p).expect("c stays inside [0, 2]");
            if v > best {
                best = v;
                arg = c;
            }
        }
        (best, arg)
    };
    let (mut best, mut arg) = scan(0.0, 2.0);
    let mut spacing = 2.0 / (grid_n - 1) as f64;
    for _ in 0..3 {
        let lo = (arg - spacing).max(0.0);
        let hi = (arg + spacing).min(2.0);
        let (b, a) = scan(lo, hi);
        if b > best {
            best = b;
            arg = a;
        }
        spacing = (hi - lo) / (grid_n - 1) as f64;
    }
    Ok((best, arg))
}

/// Bisection root of `f` on a bracketing interval, to within `tol`.
pub fn find_sign_change<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    tol: f64,
) -> Result<f64, OracleError> {
    roots::bisect(f, lo, hi, tol).ok_or(OracleError::NoSignChange { lo, hi })
}

/// All roots found by scanning `steps` uniform subintervals of `[lo, hi]`
/// for sign changes and bisecting each bracket. An empty result is a valid
/// outcome (no sign change anywhere on the scan grid).
pub fn scan_sign_changes<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    steps: usize,
    tol: f64,
) -> Vec<f64> {
    assert!(steps >= 1 && lo < hi && tol > 0.0);
    let node = |i: usize| {
        if i == steps {
            hi
        } else {
            lo + (hi - lo) * i as f64 / steps as f64
        }
    };
    let mut roots_found = Vec::new();
    let mut prev_t = node(0);
    let mut prev_v = f(prev_t);
    for i in 1..=steps {
        let t = node(i);
        let v = f(t);
        if prev_v == 0.0 {
            roots_found.push(prev_t);
        } else if v != 0.0 && prev_v.signum() != v.signum() {
            if let Some(r) = roots::bisect(&f, prev_t, t, tol) {
                roots_found.push(r);
            }
        }
        prev_t = t;
        prev_v = v;
    }
    if prev_v == 0.0 {
        roots_found.push(prev_t);
    }
    roots_found
}

/// Deterministic sample source: `c` uniform on `[0, 2]`, the four disk
/// parameters uniform on the closed unit disk by rejection from the
/// bounding square (retry cap 100, then the origin).
pub struct SampleStream {
    rng: ChaCha8Rng,
}

const DISK_RETRY_LIMIT: usize = 100;

impl SampleStream {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Independent substream `(seed, chunk)`; results from different chunks
    /// can be merged by max/sum regardless of execution order.
    pub fn substream(seed: u64, chunk: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        // stream 0 is the plain `new(seed)` stream
        rng.set_stream(chunk + 1);
        Self { rng }
    }

    fn disk(&mut self) -> Complex64 {
        for _ in 0..DISK_RETRY_LIMIT {
            let re = self.rng.random_range(-1.0..=1.0);
            let im = self.rng.random_range(-1.0..=1.0);
            if re * re + im * im <= 1.0 {
                return Complex64::new(re, im);
            }
        }
        Complex64::ZERO
    }
}

impl Iterator for SampleStream {
    type Item = GrenanderSample;

    fn next(&mut self) -> Option<GrenanderSample> {
        let c = self.rng.random_range(0.0..=2.0);
        let x = self.disk();
        let y = self.disk();
        let z = self.disk();
        let w = self.disk();
        Some(GrenanderSample { c, x, y, z, w })
    }
}

/// Outcome of a seeded Monte-Carlo run against the bound.
#[derive(Debug, Clone)]
pub struct McReport {
    pub samples: u64,
    pub max_observed: f64,
    pub bound: f64,
    /// Samples whose functional exceeded `bound + tol`.
    pub violations: u64,
    pub worst_sample: GrenanderSample,
}

const MC_CHUNK: u64 = 1 << 14;

/// Draw `n` samples for `(seed)`, evaluate `|a2 a4 - a3^2|` on each, and
/// compare against [`hankel_bound`]. Deterministic given the seed; the run
/// is chunked into independent substreams merged by max/sum.
pub fn monte_carlo_check(
    p: &ClassParams,
    n: u64,
    seed: u64,
    tol: f64,
) -> Result<McReport, OracleError> {
    if n == 0 {
        return Err(OracleError::NoSamples);
    }
    let bound = hankel_bound(p).bound;
    let mut max_observed = f64::NEG_INFINITY;
    let mut worst = GrenanderSample::zero();
    let mut violations = 0u64;
    let chunks = n.div_ceil(MC_CHUNK);
    for chunk in 0..chunks {
        let take = MC_CHUNK.min(n - chunk * MC_CHUNK) as usize;
        for s in SampleStream::substream(seed, chunk).take(take) {
            let value = hankel_functional(&sample_coeffs(&s, p));
            if value > max_observed {
                max_observed = value;
                worst = s;
            }
            if value > bound + tol {
                violations += 1;
            }
        }
    }
    Ok(McReport {
        samples: n,
        max_observed,
        bound,
        violations,
        worst_sample: worst,
    })
}

/// Margin of the intermediate majorization for one sample:
/// `F(|x|, |y|) - |a2 a4 - a3^2|`, which must be >= 0 up to rounding.
pub fn chain_check(s: &GrenanderSample, p: &ClassParams) -> f64 {
    // moduli can land a rounding step above 1 for points sampled on the rim
    let g1 = s.x.norm().min(1.0);
    let g2 = s.y.norm().min(1.0);
    let surface = f_surface(g1, g2, s.c, p).expect("sample moduli are admissible");
    surface - hankel_functional(&sample_coeffs(s, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{self, SignCase};

    fn p(lambda: f64, mu: f64, t: f64) -> ClassParams {
        ClassParams::new(lambda, mu, t).unwrap()
    }

    fn c64(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn sample_validation() {
        assert!(GrenanderSample::new(
            2.1,
            Complex64::ZERO,
            Complex64::ZERO,
            Complex64::ZERO,
            Complex64::ZERO
        )
        .is_err());
        assert!(GrenanderSample::new(
            1.0,
            c64(0.8, 0.7),
            Complex64::ZERO,
            Complex64::ZERO,
            Complex64::ZERO
        )
        .is_err());
        assert!(GrenanderSample::new(
            1.0,
            c64(0.6, 0.8),
            Complex64::ZERO,
            Complex64::ZERO,
            Complex64::ZERO
        )
        .is_ok());
    }

    #[test]
    fn derive_cd_degenerate_corners() {
        let (c2, c3, d2, d3) = derive_cd(&GrenanderSample::zero());
        assert_eq!(
            (c2, c3, d2, d3),
            (
                Complex64::ZERO,
                Complex64::ZERO,
                Complex64::ZERO,
                Complex64::ZERO
            )
        );

        // c = 2 kills every (4 - c^2) term
        let s = GrenanderSample::new(
            2.0,
            c64(0.3, 0.2),
            c64(-0.4, 0.1),
            c64(0.9, 0.0),
            c64(0.0, 0.5),
        )
        .unwrap();
        let (c2, c3, d2, d3) = derive_cd(&s);
        assert_eq!(c2, c64(2.0, 0.0));
        assert_eq!(c3, c64(2.0, 0.0));
        assert_eq!(d2, c64(2.0, 0.0));
        assert_eq!(d3, c64(-2.0, 0.0));
    }

    #[test]
    fn derived_coefficients_obey_the_sum_and_difference_identities() {
        let mut stream = SampleStream::new(11);
        for _ in 0..100_000 {
            let s = stream.next().unwrap();
            let (c2, c3, d2, d3) = derive_cd(&s);
            // Consequence of the coefficient estimate for the class
            assert!(c2.norm() <= 2.0 + 1e-12 && c3.norm() <= 2.0 + 1e-12);
            assert!(d2.norm() <= 2.0 + 1e-12 && d3.norm() <= 2.0 + 1e-12);
            let q = 4.0 - s.c * s.c;
            let diff = (s.x - s.y) * (q * 0.5);
            let sum = Complex64::new(s.c * s.c, 0.0) + (s.x + s.y) * (q * 0.5);
            assert!((c2 - d2 - diff).norm() <= 1e-14);
            assert!((c2 + d2 - sum).norm() <= 1e-14);
        }
    }

    #[test]
    fn sample_coeffs_corners() {
        let params = p(1.5, 0.5, 0.8);
        let z = sample_coeffs(&GrenanderSample::zero(), &params);
        assert_eq!(
            (z.a2, z.a3, z.a4),
            (Complex64::ZERO, Complex64::ZERO, Complex64::ZERO)
        );

        // at c = 2, c2 - d2 = 0, so a3 = a2^2 with a2 = U1/(lm)
        let s = GrenanderSample::new(
            2.0,
            c64(0.3, 0.1),
            c64(-0.2, 0.4),
            Complex64::ZERO,
            Complex64::ZERO,
        )
        .unwrap();
        let triple = sample_coeffs(&s, &params);
        let a2_expected = cheb_u(1, 0.8) / 2.0;
        assert!((triple.a2 - c64(a2_expected, 0.0)).norm() < 1e-14);
        assert!((triple.a3 - triple.a2 * triple.a2).norm() < 1e-14);
    }

    #[test]
    fn solution_formulas_match_the_expanded_display() {
        let mut stream = SampleStream::new(5);
        for lambda in [1.0, 2.0] {
            for mu in [0.0, 0.7, 2.0] {
                let params = p(lambda, mu, 0.77);
                for _ in 0..2000 {
                    let s = stream.next().unwrap();
                    let triple = sample_coeffs(&s, &params);
                    let direct = triple.a2 * triple.a4 - triple.a3 * triple.a3;
                    let display = hankel_expansion(&s, &params);
                    assert!(
                        (direct - display).norm() <= 1e-12,
                        "mismatch at ({lambda},{mu}): {direct} vs {display}"
                    );
                }
            }
        }
    }

    #[test]
    fn functional_trivia() {
        let zero = CoefficientTriple {
            a2: Complex64::ZERO,
            a3: Complex64::ZERO,
            a4: Complex64::ZERO,
        };
        assert_eq!(hankel_functional(&zero), 0.0);
        let ones = CoefficientTriple {
            a2: Complex64::ONE,
            a3: Complex64::ONE,
            a4: Complex64::ONE,
        };
        assert_eq!(hankel_functional(&ones), 0.0);
        let t = CoefficientTriple {
            a2: c64(0.5, 0.0),
            a3: c64(0.3, 0.0),
            a4: c64(0.2, 0.0),
        };
        assert!((hankel_functional(&t) - 0.01).abs() < 1e-16);
    }

    #[test]
    fn subordination_residual_zero_sample() {
        let params = p(1.0, 1.0, 0.75);
        assert!(verify_subordination_expansion(&GrenanderSample::zero(), &params) < 1e-15);
    }

    #[test]
    fn subordination_residual_random_samples() {
        let mut stream = SampleStream::new(23);
        for lambda in [1.0, 2.5] {
            for mu in [0.0, 1.0, 3.0] {
                let params = p(lambda, mu, 0.66);
                for _ in 0..500 {
                    let s = stream.next().unwrap();
                    let r = verify_subordination_expansion(&s, &params);
                    assert!(r <= 1e-10, "residual {r} at ({lambda},{mu})");
                }
            }
        }
    }

    /// Cross-side equality: when the triple is *solved* from the direct-side
    /// coefficient equations for the raw sample data, the class expression
    /// composed through the generic engine must equal the composed
    /// generating function on the nose.
    #[test]
    fn direct_side_solution_closes_the_loop() {
        let mut stream = SampleStream::new(37);
        let params = p(1.3, 0.8, 0.72);
        let (lambda, mu, t) = (1.3, 0.8, 0.72);
        let (lm, l2m, l3m) = (lambda + mu, 2.0 * lambda + mu, 3.0 * lambda + mu);
        let (u1, u2, u3) = (cheb_u(1, t), cheb_u(2, t), cheb_u(3, t));
        for _ in 0..500 {
            let s = stream.next().unwrap();
            let (c2, c3, _, _) = derive_cd(&s);
            let c1 = c64(s.c, 0.0);
            let a2 = c1 * (u1 / (2.0 * lm));
            let a3 = ((c2 - c1 * c1 * 0.5) * (u1 * 0.5) + c1 * c1 * (u2 * 0.25)) / l2m
                - a2 * a2 * ((mu - 1.0) * 0.5);
            let a4 = ((c3 - c1 * c2 + c1 * c1 * c1 * 0.25) * (u1 * 0.5)
                + c1 * (c2 - c1 * c1 * 0.5) * (u2 * 0.5)
                + c1 * c1 * c1 * (u3 * 0.125))
                / l3m
                - a2 * a3 * (mu - 1.0)
                - a2 * a2 * a2 * ((mu - 1.0) * (mu - 2.0) / 6.0);
            let f = TruncatedSeries::new(vec![Complex64::ZERO, Complex64::ONE, a2, a3, a4]);
            let lhs = class_lhs(&f, &params).unwrap();

            let p_series = TruncatedSeries::new(vec![Complex64::ONE, c1, c2, c3]);
            let one = TruncatedSeries::one(3);
            let w = p_series
                .sub(&one)
                .unwrap()
                .mul(&p_series.add(&one).unwrap().recip().unwrap())
                .unwrap();
            let rhs = h_series(t, 3).unwrap().compose(&w).unwrap();
            assert!(lhs.max_abs_diff(&rhs).unwrap() <= 1e-13);
        }
    }

    #[test]
    fn surface_brute_force_agrees_with_the_corner() {
        let params = p(1.4, 1.1, 0.83);
        for c in [0.3, 0.9, 1.5] {
            let (max, arg) = brute_max_surface(c, &params, 51).unwrap();
            assert_eq!(arg, (1.0, 1.0));
            let corner = f_surface(1.0, 1.0, c, &params).unwrap();
            assert!((max - corner).abs() <= 1e-12);
            let k = k_profile(c, &params).unwrap();
            assert!((max - k).abs() <= 1e-12);
        }
        // c = 2: the surface degenerates to the constant S1
        let (max, _) = brute_max_surface(2.0, &params, 51).unwrap();
        let (s1, ..) = bounds::s_coeffs(2.0, &params).unwrap();
        assert_eq!(max, s1);
        assert!(brute_max_surface(0.5, &params, 10).is_err());
    }

    #[test]
    fn profile_brute_force_tracks_the_cases() {
        // increasing profile: argmax at the right endpoint
        let params = p(1.0, 0.0, 0.55);
        let r = hankel_bound(&params);
        assert_eq!(r.case, SignCase::BothNonneg);
        let (max, arg) = brute_max_profile(&params, 101).unwrap();
        assert!((arg - 2.0).abs() < 1e-9);
        assert!((max - r.bound).abs() <= 1e-10);

        // interior maximum
        let params = p(1.0, 1.0, 0.9);
        let r = hankel_bound(&params);
        assert_eq!(r.case, SignCase::NegPos);
        let (max, arg) = brute_max_profile(&params, 101).unwrap();
        assert!((arg - r.c0.unwrap()).abs() < 1e-5);
        assert!(max <= r.bound + 1e-10);
        assert!((max - r.bound).abs() <= 1e-8);

        assert!(brute_max_profile(&params, 100).is_err());
    }

    #[test]
    fn sign_change_bisection() {
        let r = find_sign_change(|x| x - 0.7, 0.5, 1.0, 1e-12).unwrap();
        assert!((r - 0.7).abs() < 1e-11);
        assert!(matches!(
            find_sign_change(|x| x * x + 1.0, 0.0, 1.0, 1e-9),
            Err(OracleError::NoSignChange { .. })
        ));
        // the m1 root that switches the (1,1) family
        let root = find_sign_change(
            |t| bounds::m1(&ClassParams::new(1.0, 1.0, t).unwrap()),
            0.51,
            0.99,
            1e-12,
        )
        .unwrap();
        assert!((0.60360..=0.60363).contains(&root));
        assert!((root - 0.603615).abs() < 1e-5);
    }

    #[test]
    fn sample_stream_is_deterministic_and_chunkable() {
        let a: Vec<_> = SampleStream::new(42).take(5).collect();
        let b: Vec<_> = SampleStream::new(42).take(5).collect();
        assert_eq!(a, b);
        let c: Vec<_> = SampleStream::new(43).take(5).collect();
        assert_ne!(a, c);
        let s0: Vec<_> = SampleStream::substream(42, 0).take(3).collect();
        let s1: Vec<_> = SampleStream::substream(42, 1).take(3).collect();
        assert_ne!(s0, s1);
        for s in a.iter().chain(&s0).chain(&s1) {
            assert!(GrenanderSample::new(s.c, s.x, s.y, s.z, s.w).is_ok());
        }
    }

    #[test]
    fn monte_carlo_deterministic_and_dominated() {
        let params = p(1.0, 0.0, 0.55);
        let r1 = monte_carlo_check(&params, 20_000, 42, 1e-9).unwrap();
        let r2 = monte_carlo_check(&params, 20_000, 42, 1e-9).unwrap();
        assert_eq!(r1.max_observed, r2.max_observed);
        assert_eq!(r1.worst_sample, r2.worst_sample);
        assert_eq!(r1.violations, 0);
        assert!(r1.max_observed <= r1.bound + 1e-9);
        assert!(monte_carlo_check(&params, 0, 42, 1e-9).is_err());
    }

    // recorded from the first run of the seeded oracle; these runs get
    // within ~7e-6 (resp. stay well under) the closed-form bound
    #[test]
    fn monte_carlo_frozen_fixtures() {
        let r = monte_carlo_check(&p(1.0, 0.0, 0.55), 100_000, 42, 1e-9).unwrap();
        assert_eq!(r.violations, 0);
        assert!((r.max_observed - 8.066599395576014e-1).abs() < 1e-12);
        let r = monte_carlo_check(&p(1.0, 1.0, 0.9), 100_000, 42, 1e-9).unwrap();
        assert_eq!(r.violations, 0);
        assert!((r.max_observed - 3.864383435997592e-1).abs() < 1e-12);
    }

    #[test]
    fn chain_margin_is_nonnegative() {
        let params = p(1.0, 1.0, 0.75);
        assert_eq!(chain_check(&GrenanderSample::zero(), &params), 0.0);
        let s = GrenanderSample::new(
            2.0,
            c64(0.5, 0.5),
            c64(-0.1, 0.3),
            Complex64::ZERO,
            Complex64::ZERO,
        )
        .unwrap();
        assert!(chain_check(&s, &params) >= 0.0);
        let mut worst = f64::INFINITY;
        let mut stream = SampleStream::new(99);
        for _ in 0..10_000 {
            let s = stream.next().unwrap();
            worst = worst.min(chain_check(&s, &params));
        }
        assert!(worst >= -1e-10, "worst chain margin {worst}");
    }
}
