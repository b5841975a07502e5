//! Inequality suites and exponent landscape surveys.
//!
//! Everything here is either an exact integer check (Gelfond's height
//! inequality), a certified per-instance floor (the Mahler separation
//! floor), or an empirical fit over rigorously computed data points
//! (linear-factor exponent ceiling, log-log separation fits). Sampled
//! suites take an explicit seed and are reproducible; sweeps parallelize
//! over instances and sort deterministically before returning.

use crate::dyadic::{Dyadic, Round};
use crate::families;
use crate::interval::{ln_dyadic, RealInterval};
use crate::poly::{FactoredPolynomial, IntegerPolynomial, PolyError};
use crate::roots::{self, SepError, SeparationReport};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::cmp::Ordering;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurveyError {
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("invalid survey parameter: {0}")]
    InvalidParameter(String),
    #[error("multiple roots: discriminant is zero")]
    MultipleRoots,
    #[error("need at least 3 fit points, got {0}")]
    TooFewPoints(usize),
    #[error("degenerate abscissae: all heights equal")]
    DegenerateAbscissae,
    #[error("enclosure too wide for fitting (relative width > 1e-3)")]
    EnclosureTooWide,
    #[error("insufficient valid samples: kept {kept} of {requested}")]
    InsufficientSamples { kept: usize, requested: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Sep(#[from] SepError),
}

/// One scored point of an exponent survey.
#[derive(Debug, Clone)]
pub struct SurveyRecord {
    pub factored: FactoredPolynomial,
    pub report: SeparationReport,
    /// Sorted degree multiset of the factors, e.g. `[2, 3]`.
    pub shape: Vec<usize>,
}

/// Least-squares line through `(ln H, ln sep)` style point clouds.
#[derive(Debug, Clone)]
pub struct FitResult {
    pub slope: f64,
    pub intercept: f64,
    pub points: Vec<(f64, f64)>,
    pub residual_max: f64,
}

/// Outcome of one exact Gelfond check `2^{-m-n} H(Q) H(R) <= H(QR) <=
/// 2^{m+n} H(Q) H(R)`, with both slack margins as exact integers
/// (nonnegative iff the corresponding inequality holds).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GelfondCheck {
    pub pass: bool,
    /// `2^{m+n} H(QR) - H(Q) H(R)`.
    pub lower_margin: BigInt,
    /// `2^{m+n} H(Q) H(R) - H(QR)`.
    pub upper_margin: BigInt,
}

/// Tally of a sampled property suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteReport {
    pub checked: usize,
    pub violations: usize,
}

impl SuiteReport {
    pub fn pass(&self) -> bool {
        self.violations == 0
    }
}

// ---------------------------------------------------------------------------
// Enumeration.

/// All monic integer polynomials of the given degree whose height (max
/// |coefficient|, leading 1 included) is at most `bound`, in ascending
/// coefficient order.
fn monic_polys_of_height(degree: usize, bound: i64) -> Vec<IntegerPolynomial> {
    if bound < 1 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut coeffs = vec![-bound; degree];
    loop {
        let mut full: Vec<BigInt> = coeffs.iter().map(|&c| BigInt::from(c)).collect();
        full.push(BigInt::one());
        out.push(IntegerPolynomial::new(full));
        // Odometer step over [-bound, bound]^degree.
        let mut i = 0;
        loop {
            if i == degree {
                return out;
            }
            if coeffs[i] < bound {
                coeffs[i] += 1;
                break;
            }
            coeffs[i] = -bound;
            i += 1;
        }
    }
}

/// Every tuple of monic factors matching the degree `shape` with all
/// factor heights `<= factor_height_bound`, each factor multiset emitted
/// once (factors in canonical sorted order). Products with repeated roots
/// are included; scoring skips what it cannot score.
pub fn enumerate_reducible(
    d: usize,
    shape: &[usize],
    factor_height_bound: i64,
) -> Result<Vec<FactoredPolynomial>, SurveyError> {
    if shape.is_empty() || shape.iter().any(|&p| p == 0) {
        return Err(SurveyError::InvalidShape(format!(
            "parts must be >= 1, got {shape:?}"
        )));
    }
    if shape.iter().sum::<usize>() != d {
        return Err(SurveyError::InvalidShape(format!(
            "shape {shape:?} does not sum to {d}"
        )));
    }
    let mut sorted_shape = shape.to_vec();
    sorted_shape.sort_unstable();
    let pools: Vec<Vec<IntegerPolynomial>> = sorted_shape
        .iter()
        .map(|&g| monic_polys_of_height(g, factor_height_bound))
        .collect();
    if pools.iter().any(|p| p.is_empty()) {
        return Ok(Vec::new());
    }
    let mut seen: BTreeSet<Vec<Vec<BigInt>>> = BTreeSet::new();
    let mut out = Vec::new();
    let mut idx = vec![0usize; pools.len()];
    loop {
        let mut factors: Vec<IntegerPolynomial> = idx
            .iter()
            .zip(&pools)
            .map(|(&i, pool)| pool[i].clone())
            .collect();
        factors.sort_by(|a, b| {
            a.degree()
                .cmp(&b.degree())
                .then_with(|| a.coeffs().cmp(b.coeffs()))
        });
        let key: Vec<Vec<BigInt>> = factors.iter().map(|f| f.coeffs().to_vec()).collect();
        if seen.insert(key) {
            out.push(FactoredPolynomial::new(factors).expect("monic nonconstant factors"));
        }
        // Odometer over the factor pools.
        let mut i = 0;
        loop {
            if i == pools.len() {
                return Ok(out);
            }
            if idx[i] + 1 < pools[i].len() {
                idx[i] += 1;
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

// ---------------------------------------------------------------------------
// Exact inequality checks.

/// Exact verification of Gelfond's height inequality for the product
/// `Q * R`, margins included.
pub fn check_gelfond(
    q: &IntegerPolynomial,
    r: &IntegerPolynomial,
) -> Result<GelfondCheck, SurveyError> {
    let hq = q.height()?;
    let hr = r.height()?;
    let hp = q.multiply(r).height()?;
    let n = q.degree().expect("nonzero: height succeeded");
    let m = r.degree().expect("nonzero: height succeeded");
    let scale = BigInt::one() << (m + n) as u64;
    let lower_margin = &scale * &hp - &hq * &hr;
    let upper_margin = &scale * &hq * &hr - &hp;
    Ok(GelfondCheck {
        pass: !lower_margin.is_negative() && !upper_margin.is_negative(),
        lower_margin,
        upper_margin,
    })
}

/// Certified positive lower bound for the root separation of a squarefree
/// polynomial: `sqrt(3) * |disc|^{1/2} * d^{-(d+2)/2} * M^{-(d-1)}`,
/// rounded down, with the Mahler measure `M` replaced by a rigorous upper
/// bound from root enclosures (shrinking the floor, keeping it valid).
pub fn mahler_floor(p: &IntegerPolynomial) -> Result<BigRational, SurveyError> {
    let d = p
        .degree()
        .ok_or(PolyError::ZeroHeight)
        .map_err(SurveyError::Poly)?;
    if d < 2 {
        return Err(SurveyError::InvalidParameter(format!(
            "separation floor needs degree >= 2, got {d}"
        )));
    }
    let disc = p.discriminant()?;
    if disc.is_zero() {
        return Err(SurveyError::MultipleRoots);
    }
    let prec = 96;
    let roots = roots::isolate_roots(p, &Dyadic::pow2(-48))?;
    // Upper bound for M(P) = |lc| * prod max(1, |root|), outward rounded.
    let mut measure_up =
        Dyadic::from_bigint(p.leading().expect("degree checked above").abs());
    for e in roots.enclosures() {
        let mag_sq = e
            .center_re()
            .mul(e.center_re())
            .add(&e.center_im().mul(e.center_im()));
        let mag = Dyadic::sqrt(&mag_sq, prec, Round::Ceil).add(e.radius());
        let clamped = Dyadic::max(&Dyadic::one(), &mag);
        for _ in 0..e.multiplicity() {
            measure_up = measure_up.mul(&clamped).round(2 * prec, Round::Ceil);
        }
    }
    let numerator = Dyadic::sqrt(
        &Dyadic::from_bigint(BigInt::from(3) * disc.abs()),
        prec,
        Round::Floor,
    );
    // d^{(d+2)/2} as sqrt(d^{d+2}), rounded up.
    let degree_pow = Dyadic::sqrt(
        &Dyadic::from_bigint(BigInt::from(d).pow(d as u32 + 2)),
        prec,
        Round::Ceil,
    );
    let mut measure_pow = Dyadic::one();
    for _ in 0..d - 1 {
        measure_pow = measure_pow.mul(&measure_up).round(2 * prec, Round::Ceil);
    }
    let floor = Dyadic::div(
        &numerator,
        &degree_pow.mul(&measure_pow),
        prec,
        Round::Floor,
    );
    let (num, den) = floor.to_ratio_parts();
    Ok(BigRational::new(num, den))
}

// ---------------------------------------------------------------------------
// Fitting.

fn least_squares(points: Vec<(f64, f64)>) -> Result<FitResult, SurveyError> {
    let n = points.len();
    if n < 3 {
        return Err(SurveyError::TooFewPoints(n));
    }
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / n as f64;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / n as f64;
    let sxx: f64 = points.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    if sxx == 0.0 {
        return Err(SurveyError::DegenerateAbscissae);
    }
    let sxy: f64 = points
        .iter()
        .map(|p| (p.0 - mean_x) * (p.1 - mean_y))
        .sum();
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let residual_max = points
        .iter()
        .map(|p| (p.1 - (slope * p.0 + intercept)).abs())
        .fold(0.0f64, f64::max);
    Ok(FitResult {
        slope,
        intercept,
        points,
        residual_max,
    })
}

/// Least-squares slope of `ln sep` against `ln H` using enclosure
/// midpoints. Requires >= 3 points, heights >= 2, and every enclosure
/// tighter than 1e-3 relative width.
pub fn exponent_fit(records: &[(BigInt, RealInterval)]) -> Result<FitResult, SurveyError> {
    if records.len() < 3 {
        return Err(SurveyError::TooFewPoints(records.len()));
    }
    let mut points = Vec::with_capacity(records.len());
    for (height, sep) in records {
        if *height < BigInt::from(2) {
            return Err(SurveyError::InvalidParameter(format!(
                "fit heights must be >= 2, got {height}"
            )));
        }
        if !sep.lo().is_positive() {
            return Err(SurveyError::InvalidParameter(
                "separation enclosures must be positive".into(),
            ));
        }
        let mid = sep.midpoint();
        let rel = Dyadic::div(&sep.width(), &mid, 64, Round::Ceil).to_f64();
        if rel > 1e-3 {
            return Err(SurveyError::EnclosureTooWide);
        }
        let x = ln_dyadic(&Dyadic::from_bigint(height.clone()), 96)
            .midpoint()
            .to_f64();
        let y = ln_dyadic(&mid, 96).midpoint().to_f64();
        points.push((x, y));
    }
    least_squares(points)
}

// ---------------------------------------------------------------------------
// Sampled suites.

fn random_monic(rng: &mut ChaCha8Rng, degree: usize, height_bound: i64) -> IntegerPolynomial {
    let mut coeffs: Vec<BigInt> = (0..degree)
        .map(|_| BigInt::from(rng.gen_range(-height_bound..=height_bound)))
        .collect();
    coeffs.push(BigInt::one());
    IntegerPolynomial::new(coeffs)
}

/// `count` random monic factor pairs with heights up to `height_bound`
/// and degrees in 1..=5, each checked exactly against Gelfond's
/// inequality.
pub fn gelfond_suite(seed: u64, count: usize, height_bound: i64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<(IntegerPolynomial, IntegerPolynomial)> = (0..count)
        .map(|_| {
            let dq = rng.gen_range(1..=5);
            let dr = rng.gen_range(1..=5);
            (
                random_monic(&mut rng, dq, height_bound),
                random_monic(&mut rng, dr, height_bound),
            )
        })
        .collect();
    let violations = pairs
        .par_iter()
        .filter(|(q, r)| !check_gelfond(q, r).map(|c| c.pass).unwrap_or(false))
        .count();
    SuiteReport {
        checked: count,
        violations,
    }
}

/// `count` random squarefree polynomials of degrees 2..=6 (integer
/// coefficients in [-20, 20], not necessarily monic), each checked for
/// `mahler_floor(P) < sep_lo(P)`.
pub fn mahler_suite(seed: u64, count: usize, rel_width: f64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut samples = Vec::with_capacity(count);
    while samples.len() < count {
        let degree = rng.gen_range(2usize..=6);
        let mut coeffs: Vec<BigInt> = (0..degree)
            .map(|_| BigInt::from(rng.gen_range(-20i64..=20)))
            .collect();
        let lead = loop {
            let l = rng.gen_range(-20i64..=20);
            if l != 0 {
                break l;
            }
        };
        coeffs.push(BigInt::from(lead));
        let p = IntegerPolynomial::new(coeffs);
        if p.discriminant().map(|d| !d.is_zero()).unwrap_or(false) {
            samples.push(p);
        }
    }
    let violations = samples
        .par_iter()
        .filter(|p| !floor_below_separation(p, rel_width))
        .count();
    SuiteReport {
        checked: count,
        violations,
    }
}

/// `mahler_floor(P) < sep_lo(P)` with the comparison done exactly.
pub fn floor_below_separation(p: &IntegerPolynomial, rel_width: f64) -> bool {
    let floor = match mahler_floor(p) {
        Ok(f) => f,
        Err(_) => return false,
    };
    let report = match roots::sep(p, rel_width) {
        Ok(r) => r,
        Err(_) => return false,
    };
    families::cmp_dyadic_rational(&report.sep_lo, &floor) == Ordering::Greater
}

// ---------------------------------------------------------------------------
// Linear-factor ceiling.

/// Samples products `(x - c) * R` of degree `d` with both factor heights
/// in `height_range`, measures the distance `eps` from `c` to the nearest
/// root of `R`, and fits `ln eps` against `ln H(P)`. The close-root
/// construction plants a root of `R` near `c` by taking `R = (x - c) * C +
/// r` with a small nonzero remainder `r`, so the sampled slope probes how
/// fast a linear factor's root can approach a cofactor root as heights
/// grow.
pub fn linear_factor_ceiling(
    d: usize,
    samples: usize,
    height_range: (u64, u64),
    seed: u64,
) -> Result<FitResult, SurveyError> {
    if d < 3 {
        return Err(SurveyError::InvalidParameter(format!(
            "linear-factor sampling needs degree >= 3, got {d}"
        )));
    }
    if height_range.0 < 2 || height_range.0 >= height_range.1 {
        return Err(SurveyError::InvalidParameter(format!(
            "bad height range {height_range:?}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lo = height_range.0 as f64;
    let hi = height_range.1 as f64;
    let c_hi = (hi / 3.5).min(3000.0).max(lo + 1.0);
    let mut inputs = Vec::with_capacity(samples);
    let mut attempts = 0usize;
    while inputs.len() < samples && attempts < samples * 50 {
        attempts += 1;
        // Log-uniform |c| keeps ln H(P) spread over the window instead of
        // clumping at the top.
        let magnitude = (rng.gen_range(lo.ln()..c_hi.ln())).exp().round() as i64;
        let c = if rng.gen_bool(0.5) { magnitude } else { -magnitude };
        let cofactor = random_monic(&mut rng, d - 2, 3);
        let remainder = {
            let r = rng.gen_range(1i64..=9);
            if rng.gen_bool(0.5) {
                r
            } else {
                -r
            }
        };
        // R = (x - c) * C + r: monic of degree d - 1 with R(c) = r != 0.
        let linear = IntegerPolynomial::from_i64s(&[-c, 1]);
        let r_poly = linear
            .multiply(&cofactor)
            .add(&IntegerPolynomial::from_i64s(&[remainder]));
        let h_linear = BigInt::from(c.unsigned_abs());
        let h_r = r_poly.height().expect("nonzero by construction");
        let in_range = |h: &BigInt| {
            *h >= BigInt::from(height_range.0) && *h <= BigInt::from(height_range.1)
        };
        if !in_range(&h_linear) || !in_range(&h_r) {
            continue;
        }
        inputs.push((c, linear, r_poly));
    }
    if inputs.len() < 3 {
        return Err(SurveyError::InsufficientSamples {
            kept: inputs.len(),
            requested: samples,
        });
    }
    let points: Vec<(f64, f64)> = inputs
        .par_iter()
        .filter_map(|(c, linear, r_poly)| {
            let product_height = linear.multiply(r_poly).height().ok()?;
            let roots = roots::isolate_roots(r_poly, &Dyadic::pow2(-48)).ok()?;
            let cf = *c as f64;
            let eps = roots
                .enclosures()
                .iter()
                .map(|e| {
                    let dre = e.center_re().to_f64() - cf;
                    let dim = e.center_im().to_f64();
                    (dre * dre + dim * dim).sqrt()
                })
                .fold(f64::INFINITY, f64::min);
            if !(eps.is_finite() && eps > 0.0) {
                return None;
            }
            Some((product_height.to_f64()?.ln(), eps.ln()))
        })
        .collect();
    if points.len() < 3 {
        return Err(SurveyError::InsufficientSamples {
            kept: points.len(),
            requested: samples,
        });
    }
    least_squares(points)
}

// ---------------------------------------------------------------------------
// Exponent landscape survey.

/// Scores every enumerated factor tuple and returns the `top_k` records
/// by exponent lower bound (ties by product coefficients). Products that
/// admit no exponent (fewer than two distinct roots, or height 1) are
/// skipped.
pub fn max_exponent_survey(
    d: usize,
    shape: &[usize],
    factor_height_bound: i64,
    rel_width: f64,
    top_k: usize,
) -> Result<Vec<SurveyRecord>, SurveyError> {
    let space = enumerate_reducible(d, shape, factor_height_bound)?;
    let mut records: Vec<SurveyRecord> = space
        .into_par_iter()
        .filter_map(|factored| {
            let report = roots::exponent(factored.product(), rel_width).ok()?;
            report.e.as_ref()?;
            let shape = factored.shape();
            Some(SurveyRecord {
                factored,
                report,
                shape,
            })
        })
        .collect();
    records.sort_by(|a, b| {
        let ea = &a.report.e.as_ref().unwrap().0;
        let eb = &b.report.e.as_ref().unwrap().0;
        eb.cmp(ea)
            .then_with(|| a.report.poly.coeffs().cmp(b.report.poly.coeffs()))
    });
    records.truncate(top_k);
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntegerPolynomial {
        IntegerPolynomial::from_i64s(coeffs)
    }

    #[test]
    fn enumeration_counts_match_hand_counts() {
        // (x+a)(x+b), a,b in {-1,0,1}: 6 unordered pairs.
        assert_eq!(enumerate_reducible(2, &[1, 1], 1).unwrap().len(), 6);
        // Monic quadratics with coefficients in {-1,0,1}: 9; cubics: 27.
        assert_eq!(enumerate_reducible(5, &[2, 3], 1).unwrap().len(), 243);
    }

    #[test]
    fn enumeration_rejects_bad_shapes() {
        assert!(matches!(
            enumerate_reducible(5, &[2, 2], 1),
            Err(SurveyError::InvalidShape(_))
        ));
        assert!(matches!(
            enumerate_reducible(3, &[0, 3], 1),
            Err(SurveyError::InvalidShape(_))
        ));
    }

    #[test]
    fn enumeration_bound_zero_is_empty() {
        assert!(enumerate_reducible(5, &[2, 3], 0).unwrap().is_empty());
    }

    #[test]
    fn enumeration_reaches_known_close_pair_factors() {
        let space = enumerate_reducible(5, &[2, 3], 4).unwrap();
        assert_eq!(space.len(), 81 * 729);
        let quad = p(&[-2, 4, 1]);
        let cubic = p(&[-1, 2, 0, 1]);
        assert!(space
            .iter()
            .any(|f| f.factors() == [quad.clone(), cubic.clone()]));
    }

    #[test]
    fn gelfond_margins_for_known_pairs() {
        let check = check_gelfond(&p(&[-1, 1]), &p(&[1, 1])).unwrap();
        assert!(check.pass);
        assert_eq!(check.lower_margin, BigInt::from(3));
        assert_eq!(check.upper_margin, BigInt::from(3));

        let check = check_gelfond(&p(&[-2, 4, 1]), &p(&[-1, 2, 0, 1])).unwrap();
        assert!(check.pass);
        assert_eq!(check.lower_margin, BigInt::from(32 * 8 - 8));
        assert_eq!(check.upper_margin, BigInt::from(32 * 8 - 8));
    }

    #[test]
    fn gelfond_suite_has_no_violations() {
        let report = gelfond_suite(42, 2000, 1000);
        assert_eq!(report.checked, 2000);
        assert_eq!(report.violations, 0);
    }

    #[test]
    fn mahler_floor_of_unit_quadratic() {
        // sqrt(3) * 2 * 2^{-2} * 1 = sqrt(3)/2, slightly shrunk by the
        // enclosure-based measure bound.
        let floor = mahler_floor(&p(&[-1, 0, 1])).unwrap();
        let value = floor.to_f64().unwrap();
        assert!(value > 0.8 && value < 0.8661, "floor = {value}");
    }

    #[test]
    fn mahler_floor_stays_below_separation() {
        for poly in [
            p(&[-10, 100, 1]),
            p(&[2, -8, 7, 0, 4, 1]),
            p(&[-1, 0, 1]),
            p(&[3, -7, 0, 2]),
        ] {
            assert!(floor_below_separation(&poly, 1e-2), "violation for {poly}");
        }
    }

    #[test]
    fn mahler_floor_rejects_repeated_roots() {
        // (x - 1)^2 has discriminant zero.
        assert_eq!(
            mahler_floor(&p(&[1, -2, 1])).unwrap_err(),
            SurveyError::MultipleRoots
        );
    }

    #[test]
    fn mahler_suite_has_no_violations() {
        let report = mahler_suite(7, 300, 1e-2);
        assert_eq!(report.checked, 300);
        assert_eq!(report.violations, 0);
    }

    #[test]
    fn fit_recovers_synthetic_power_law() {
        // Exact points on sep = H^{-7/3}.
        let records: Vec<(BigInt, RealInterval)> = [10i64, 100, 1000, 10000]
            .iter()
            .map(|&h| {
                let sep = (h as f64).powf(-7.0 / 3.0);
                (
                    BigInt::from(h),
                    RealInterval::exact(Dyadic::from_f64(sep)),
                )
            })
            .collect();
        let fit = exponent_fit(&records).unwrap();
        assert!((fit.slope + 7.0 / 3.0).abs() < 1e-9, "slope = {}", fit.slope);
        assert!(fit.residual_max < 1e-9);
        assert_eq!(fit.points.len(), 4);
    }

    #[test]
    fn fit_rejects_degenerate_inputs() {
        let pt = |h: i64, s: f64| (BigInt::from(h), RealInterval::exact(Dyadic::from_f64(s)));
        assert!(matches!(
            exponent_fit(&[pt(10, 0.5), pt(20, 0.3)]),
            Err(SurveyError::TooFewPoints(2))
        ));
        assert!(matches!(
            exponent_fit(&[pt(10, 0.5), pt(10, 0.3), pt(10, 0.2)]),
            Err(SurveyError::DegenerateAbscissae)
        ));
        let wide = (
            BigInt::from(10),
            RealInterval::new(Dyadic::from_f64(0.5), Dyadic::from_f64(0.6)),
        );
        assert!(matches!(
            exponent_fit(&[pt(10, 0.5), pt(20, 0.3), wide]),
            Err(SurveyError::EnclosureTooWide)
        ));
    }

    #[test]
    fn family_sweep_fit_matches_predicted_slope() {
        // Quintic family sweep: slope of ln sep vs ln H approaches -7/3.
        let records: Vec<(BigInt, RealInterval)> = [10i64, 20, 40, 80, 160, 320]
            .iter()
            .map(|&n| {
                let rec = families::family_p(5, n).unwrap();
                let report = roots::sep(rec.product(), 1e-4).unwrap();
                (
                    report.height.clone(),
                    RealInterval::new(report.sep_lo.clone(), report.sep_hi.clone()),
                )
            })
            .collect();
        let fit = exponent_fit(&records).unwrap();
        assert!(
            (fit.slope + 7.0 / 3.0).abs() < 0.02,
            "slope = {} vs -7/3",
            fit.slope
        );
    }

    #[test]
    fn linear_factor_slope_stays_above_floor() {
        let fit = linear_factor_ceiling(5, 250, (100, 10_000), 1).unwrap();
        assert!(fit.slope >= -2.25, "slope = {}", fit.slope);
        assert!(fit.slope <= -0.5, "slope = {} looks unplanted", fit.slope);
        let fit3 = linear_factor_ceiling(3, 250, (100, 10_000), 2).unwrap();
        assert!(fit3.slope >= -1.25, "slope = {}", fit3.slope);
    }

    #[test]
    fn linear_factor_rejects_tiny_degree() {
        assert!(matches!(
            linear_factor_ceiling(2, 10, (100, 1000), 0),
            Err(SurveyError::InvalidParameter(_))
        ));
    }

    #[test]
    fn integer_root_survey_has_nonpositive_exponents() {
        // Distinct integer roots are >= 1 apart, so e <= 0 throughout.
        let records = max_exponent_survey(2, &[1, 1], 3, 1e-3, 10).unwrap();
        assert!(!records.is_empty());
        for rec in &records {
            let (e_lo, _) = rec.report.e.clone().unwrap();
            assert!(e_lo.to_f64() <= 1e-9);
            assert_eq!(rec.shape, vec![1, 1]);
        }
    }

    #[test]
    fn survey_scores_small_quintic_space() {
        let records = max_exponent_survey(5, &[2, 3], 1, 1e-2, 5).unwrap();
        assert!(!records.is_empty());
        // Descending by e_lo.
        for w in records.windows(2) {
            let a = w[0].report.e.as_ref().unwrap().0.clone();
            let b = w[1].report.e.as_ref().unwrap().0.clone();
            assert!(a.cmp(&b) != Ordering::Less);
        }
    }
}
