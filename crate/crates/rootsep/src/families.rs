//! Parametric families of reducible monic polynomials with close root
//! pairs, plus rigorous checks of their predicted bounds and asymptotic
//! expansions.
//!
//! Two degree-5 constructions share the blueprint "cubic times quadratic
//! with one root of each factor crowding `1/n`":
//!
//! * `s_n = (x^3 - 2n x^2 + (2-2n) x + 2)(x^2 - (2n^2+2n) x + 2n+2)`
//! * `p_n = (x^3 + n x - 1)(x^2 + n^2 x - n)`
//!
//! and the general odd-degree family `P_{d,n} = Q_{k,n} * R_{k,n}` with
//! `k = (d-1)/2`,
//!
//! * `Q_{k,n} = x^2 + n^k x - n`
//! * `R_{k,n} = x(x^{2(k-1)} + n x^{2(k-2)} + ... + n^{k-1}) - 1`,
//!
//! which satisfies `(x^2 - n) R = x^{2k+1} - Q` exactly and reproduces
//! `p_n` at `d = 5`. `Q` has a root `alpha = 2n/(n^k + sqrt(n^{2k}+4n))`
//! and `R` a root `beta` in `(alpha, 2*alpha)` with
//! `beta - alpha < 2 n^{1-2k^2}`, driving the separation exponent of the
//! product toward `(d^2-2d-1)/(2d-4)`.

use crate::dyadic::{Dyadic, Round};
use crate::interval::RealInterval;
use crate::poly::{FactoredPolynomial, IntegerPolynomial};
use crate::roots::{self, SepError, SeparationReport};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("family parameter out of range: {0}")]
    OutOfRange(String),
    #[error("sign change not certified")]
    SignChangeNotCertified,
    #[error("root pairing ambiguous")]
    RootPairingAmbiguous,
    #[error(transparent)]
    Sep(#[from] SepError),
}

/// Which construction a [`FamilyRecord`] came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyId {
    /// The `s_n` quintic.
    S,
    /// The `p_n` quintic (`QR` at `k = 2`).
    P,
    /// The general `Q_{k,n} * R_{k,n}` construction for `d >= 7`.
    QR,
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyId::S => "s",
            FamilyId::P => "p",
            FamilyId::QR => "QR",
        })
    }
}

/// One family member together with its exact predicted quantities.
#[derive(Debug, Clone)]
pub struct FamilyRecord {
    pub family_id: FamilyId,
    pub k: u32,
    pub d: usize,
    pub n: i64,
    pub factored: FactoredPolynomial,
    /// Limit exponent `(d^2-2d-1)/(2d-4)` the family approaches.
    pub predicted_exponent: BigRational,
    /// Proven bound `2 n^{1-2k^2}` on the close-pair distance.
    pub predicted_sep_bound: BigRational,
}

impl FamilyRecord {
    pub fn product(&self) -> &IntegerPolynomial {
        self.factored.product()
    }
}

fn check_n(n: i64) -> Result<(), FamilyError> {
    if n < 2 {
        return Err(FamilyError::OutOfRange(format!("n = {n}, need n >= 2")));
    }
    Ok(())
}

fn check_k(k: u32) -> Result<(), FamilyError> {
    if k < 2 {
        return Err(FamilyError::OutOfRange(format!("k = {k}, need k >= 2")));
    }
    Ok(())
}

/// Predicted limiting exponent `(d^2 - 2d - 1) / (2d - 4)` of the
/// degree-`d` close-pair family as `n` grows.
pub fn limit_exponent(d: usize) -> BigRational {
    BigRational::new(
        BigInt::from((d * d) as i64 - 2 * d as i64 - 1),
        BigInt::from(2 * d as i64 - 4),
    )
}

fn sep_bound(k: u32, n: i64) -> BigRational {
    // 2 n^{1-2k^2} = 2 / n^{2k^2 - 1}
    BigRational::new(BigInt::from(2), BigInt::from(n).pow(2 * k * k - 1))
}

/// `s_n = (x^3 - 2n x^2 + (2-2n)x + 2)(x^2 - (2n^2+2n)x + 2n+2)`.
pub fn family_s(n: i64) -> Result<FactoredPolynomial, FamilyError> {
    check_n(n)?;
    let cubic = IntegerPolynomial::from_i64s(&[2, 2 - 2 * n, -2 * n, 1]);
    let quad = IntegerPolynomial::from_i64s(&[2 * n + 2, -2 * n * n - 2 * n, 1]);
    Ok(FactoredPolynomial::new(vec![cubic, quad]).expect("factors are monic"))
}

/// [`family_s`] wrapped as a record (degree 5, close-pair window `k = 2`).
pub fn record_s(n: i64) -> Result<FamilyRecord, FamilyError> {
    Ok(FamilyRecord {
        family_id: FamilyId::S,
        k: 2,
        d: 5,
        n,
        factored: family_s(n)?,
        predicted_exponent: limit_exponent(5),
        predicted_sep_bound: sep_bound(2, n),
    })
}

/// `Q_{k,n} = x^2 + n^k x - n` (height exactly `n^k`).
pub fn family_q(k: u32, n: i64) -> Result<IntegerPolynomial, FamilyError> {
    check_k(k)?;
    check_n(n)?;
    Ok(IntegerPolynomial::new(vec![
        BigInt::from(-n),
        BigInt::from(n).pow(k),
        BigInt::one(),
    ]))
}

/// `R_{k,n} = x(x^{2(k-1)} + n x^{2(k-2)} + ... + n^{k-1}) - 1`: monic of
/// degree `2k-1` and height `n^{k-1}`.
pub fn family_r(k: u32, n: i64) -> Result<IntegerPolynomial, FamilyError> {
    check_k(k)?;
    check_n(n)?;
    let mut coeffs = vec![BigInt::zero(); 2 * k as usize];
    coeffs[0] = BigInt::from(-1);
    for i in 0..k {
        // coefficient of x^{1+2i} is n^{k-1-i}
        coeffs[1 + 2 * i as usize] = BigInt::from(n).pow(k - 1 - i);
    }
    Ok(IntegerPolynomial::new(coeffs))
}

/// `P_{d,n} = Q_{k,n} * R_{k,n}` with `k = (d-1)/2`, as a record carrying
/// the predicted exponent `(d^2-2d-1)/(2d-4)` and the close-pair bound
/// `2 n^{1-2k^2}`.
pub fn family_p(d: usize, n: i64) -> Result<FamilyRecord, FamilyError> {
    if d < 5 || d % 2 == 0 {
        return Err(FamilyError::OutOfRange(format!(
            "d = {d}, need odd d >= 5"
        )));
    }
    let k = ((d - 1) / 2) as u32;
    let q = family_q(k, n)?;
    let r = family_r(k, n)?;
    let factored = FactoredPolynomial::new(vec![q, r]).expect("factors are monic");
    debug_assert_eq!(factored.product().degree(), Some(d));
    Ok(FamilyRecord {
        family_id: if d == 5 { FamilyId::P } else { FamilyId::QR },
        k,
        d,
        n,
        factored,
        predicted_exponent: limit_exponent(d),
        predicted_sep_bound: sep_bound(k, n),
    })
}

/// Compares a dyadic against an exact rational: `x <cmp> p/q` via
/// `x*q <cmp> p` (requires `q > 0`).
pub(crate) fn cmp_dyadic_rational(x: &Dyadic, r: &BigRational) -> Ordering {
    debug_assert!(r.denom().is_positive());
    x.mul_bigint(r.denom()).cmp(&Dyadic::from_bigint(r.numer().clone()))
}

/// Rigorous enclosure of `alpha = 2n/(n^k + sqrt(n^{2k} + 4n))`, the root
/// of `Q_{k,n}` in `(n^{1-k}/2, n^{1-k})`; the returned interval is
/// verified to lie strictly inside that window.
pub fn alpha_enclosure(k: u32, n: i64, rel_width: f64) -> RealInterval {
    assert!(k >= 2 && n >= 2, "alpha_enclosure needs k, n >= 2");
    assert!(rel_width > 0.0 && rel_width < 1.0);
    let num = Dyadic::from_i64(2 * n);
    let nk = BigInt::from(n).pow(k);
    let inner = Dyadic::from_bigint(&nk * &nk + BigInt::from(4 * n));
    let rw = Dyadic::from_f64(rel_width);
    // window bounds as exact rationals: (1/(2 n^{k-1}), 1/n^{k-1})
    let nk1 = BigInt::from(n).pow(k - 1);
    let win_lo = BigRational::new(BigInt::one(), BigInt::from(2) * &nk1);
    let win_hi = BigRational::new(BigInt::one(), nk1);
    let mut prec: u32 = 96;
    loop {
        let s_lo = Dyadic::sqrt(&inner, prec, Round::Floor);
        let s_hi = Dyadic::sqrt(&inner, prec, Round::Ceil);
        let den_lo = Dyadic::from_bigint(nk.clone()).add(&s_lo);
        let den_hi = Dyadic::from_bigint(nk.clone()).add(&s_hi);
        let lo = Dyadic::div(&num, &den_hi, prec, Round::Floor);
        let hi = Dyadic::div(&num, &den_lo, prec, Round::Ceil);
        let width_ok = hi.sub(&lo).cmp(&rw.mul(&lo)) != Ordering::Greater;
        let in_window = cmp_dyadic_rational(&lo, &win_lo) == Ordering::Greater
            && cmp_dyadic_rational(&hi, &win_hi) == Ordering::Less;
        if width_ok && in_window {
            return RealInterval::new(lo, hi);
        }
        prec = prec.saturating_mul(2);
        assert!(prec <= 1 << 20, "alpha enclosure failed to converge");
    }
}

/// Certifies the sign change `R(alpha) < 0 < R(2 alpha)` in rigorous
/// arithmetic and returns an enclosure of the root `beta` of `R_{k,n}`
/// inside `(alpha, 2 alpha)`, via exact-sign bisection.
pub fn beta_localization(k: u32, n: i64) -> Result<RealInterval, FamilyError> {
    check_k(k)?;
    check_n(n)?;
    let r = family_r(k, n)?;
    let prec: u32 = 256;
    let mut alpha_rw = 1e-12f64;
    // Establish the endpoint signs on an alpha enclosure tight enough that
    // the interval evaluations are one-signed.
    let (mut a, mut b) = loop {
        let alpha = alpha_enclosure(k, n, alpha_rw);
        let at_alpha = r.eval_interval(&alpha, prec);
        let two_alpha = alpha.mul_pow2(1);
        let at_two = r.eval_interval(&two_alpha, prec);
        if at_alpha.is_negative() && at_two.is_positive() {
            break (alpha.lo().clone(), two_alpha.hi().clone());
        }
        alpha_rw *= 1e-6;
        if alpha_rw < 1e-60 {
            return Err(FamilyError::SignChangeNotCertified);
        }
    };
    // R is strictly increasing on x > 0 (its derivative has positive
    // coefficients and even powers only), so exact-sign bisection on
    // [alpha_lo, 2*alpha_hi] converges to beta.
    debug_assert!(r.eval_dyadic(&a).is_negative());
    debug_assert!(r.eval_dyadic(&b).is_positive());
    let target = b.mul(&Dyadic::from_f64(1e-13));
    for _ in 0..400 {
        if b.sub(&a).cmp(&target) != Ordering::Greater {
            break;
        }
        let mid = a.add(&b).mul_pow2(-1).round(prec, Round::Nearest);
        let sign = r.eval_dyadic(&mid).signum();
        if sign == 0 {
            return Ok(RealInterval::exact(mid));
        } else if sign < 0 {
            a = mid;
        } else {
            b = mid;
        }
    }
    Ok(RealInterval::new(a, b))
}

/// Minimum of `R'` over `[alpha, 2 alpha]` exceeds `n^{k-1}` (rigorous
/// interval check; the minimum sits at `alpha` since `R'` increases on
/// positive inputs).
pub fn rprime_exceeds_height_r(k: u32, n: i64) -> bool {
    let r = match family_r(k, n) {
        Ok(r) => r,
        Err(_) => return false,
    };
    let dr = r.derivative();
    let floor = Dyadic::from_bigint(BigInt::from(n).pow(k - 1));
    let mut rel = 1e-9f64;
    for _ in 0..6 {
        let alpha = alpha_enclosure(k, n, rel);
        let span = RealInterval::new(alpha.lo().clone(), alpha.mul_pow2(1).hi().clone());
        let image = dr.eval_interval(&span, 320);
        if image.lo().cmp(&floor) == Ordering::Greater {
            return true;
        }
        rel *= 1e-6;
    }
    false
}

/// Which close root of a degree-5 family an expansion refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WhichRoot {
    One,
    Two,
}

/// Truncated asymptotic series of the requested close root, exactly at the
/// printed truncation orders, as an exact rational.
///
/// * `p`: root 1 (cubic factor) `1/n - 1/n^4 + 3/n^7`,
///   root 2 (quadratic factor) `1/n - 1/n^4 + 2/n^7`; error `O(n^-10)`.
/// * `s`: root 1 (quadratic factor) `1/n + 1/(2n^4) - 1/(2n^5) + 1/(2n^6)`,
///   root 2 (cubic factor) adds `+ 1/(4n^7)`; error `O(n^-8)`.
pub fn truncated_series(family: FamilyId, n: i64, which: WhichRoot) -> BigRational {
    let nq = |num: i64, den_scale: i64, pow: u32| {
        BigRational::new(
            BigInt::from(num),
            BigInt::from(den_scale) * BigInt::from(n).pow(pow),
        )
    };
    match (family, which) {
        (FamilyId::P, WhichRoot::One) => nq(1, 1, 1) - nq(1, 1, 4) + nq(3, 1, 7),
        (FamilyId::P, WhichRoot::Two) => nq(1, 1, 1) - nq(1, 1, 4) + nq(2, 1, 7),
        (FamilyId::S, WhichRoot::One) => {
            nq(1, 1, 1) + nq(1, 2, 4) - nq(1, 2, 5) + nq(1, 2, 6)
        }
        (FamilyId::S, WhichRoot::Two) => {
            nq(1, 1, 1) + nq(1, 2, 4) - nq(1, 2, 5) + nq(1, 2, 6) + nq(1, 4, 7)
        }
        (FamilyId::QR, _) => panic!("series are stated for the degree-5 families only"),
    }
}

/// The factor of the degree-5 family holding the requested close root.
fn close_root_factor(
    family: FamilyId,
    n: i64,
    which: WhichRoot,
) -> Result<IntegerPolynomial, FamilyError> {
    let factored = match family {
        FamilyId::S => family_s(n)?,
        FamilyId::P => family_p(5, n)?.factored,
        FamilyId::QR => {
            return Err(FamilyError::OutOfRange(
                "expansions are stated for the degree-5 families only".into(),
            ))
        }
    };
    // family_s stores [cubic, quadratic]; family_p stores [quadratic, cubic].
    let (cubic, quad) = match family {
        FamilyId::S => (&factored.factors()[0], &factored.factors()[1]),
        _ => (&factored.factors()[1], &factored.factors()[0]),
    };
    // p: root 1 is the cubic's, root 2 the quadratic's.
    // s: root 1 is the quadratic's, root 2 the cubic's.
    let pick_cubic = matches!(
        (family, which),
        (FamilyId::P, WhichRoot::One) | (FamilyId::S, WhichRoot::Two)
    );
    Ok(if pick_cubic { cubic.clone() } else { quad.clone() })
}

/// `(computed root - truncated series) * n^scale` as a rigorous interval,
/// where the scale is the series' stated error order (`n^10` for `p`,
/// `n^8` for `s`). Bounded output across `n` is the expansions' testable
/// content.
pub fn expansion_residual(
    family: FamilyId,
    n: i64,
    which: WhichRoot,
) -> Result<RealInterval, FamilyError> {
    if n < 3 {
        return Err(FamilyError::OutOfRange(format!(
            "n = {n}, expansions need n >= 3"
        )));
    }
    let scale_pow: u32 = match family {
        FamilyId::P => 10,
        FamilyId::S => 8,
        FamilyId::QR => {
            return Err(FamilyError::OutOfRange(
                "expansions are stated for the degree-5 families only".into(),
            ))
        }
    };
    let factor = close_root_factor(family, n, which)?;
    let scale = BigInt::from(n).pow(scale_pow);
    // Radius small enough that the scaled residual keeps ~2^-20 slack.
    let tau = Dyadic::pow2(-(21 + scale.bits() as i64));
    let rs = roots::isolate_roots(&factor, &tau)?;
    // The close root is the unique real root of the factor in
    // (1/(2n), 2/n).
    let half_window = BigRational::new(BigInt::one(), BigInt::from(2 * n));
    let two_over_n = BigRational::new(BigInt::from(2), BigInt::from(n));
    let mut found: Option<RealInterval> = None;
    for e in rs.enclosures() {
        if !e.is_real() {
            continue;
        }
        let c = e.center_re();
        if cmp_dyadic_rational(c, &half_window) == Ordering::Greater
            && cmp_dyadic_rational(c, &two_over_n) == Ordering::Less
        {
            if found.is_some() {
                return Err(FamilyError::RootPairingAmbiguous);
            }
            found = Some(RealInterval::new(
                c.sub(e.radius()),
                c.add(e.radius()),
            ));
        }
    }
    let root = found.ok_or(FamilyError::RootPairingAmbiguous)?;
    // Exact rational series value as a directed-rounded interval.
    let series = truncated_series(family, n, which);
    let prec: u32 = 224;
    let series_iv = RealInterval::new(
        Dyadic::div(
            &Dyadic::from_bigint(series.numer().clone()),
            &Dyadic::from_bigint(series.denom().clone()),
            prec,
            Round::Floor,
        ),
        Dyadic::div(
            &Dyadic::from_bigint(series.numer().clone()),
            &Dyadic::from_bigint(series.denom().clone()),
            prec,
            Round::Ceil,
        ),
    );
    Ok(root.sub(&series_iv, prec).mul_bigint(&scale, prec))
}

/// One row of a family sweep: the record plus its measured separation
/// report and the exact check `sep_hi < 2 n^{1-2k^2}`.
#[derive(Debug, Clone)]
pub struct SweepRow {
    pub record: FamilyRecord,
    pub report: SeparationReport,
    pub bound_ok: bool,
}

/// Measures one family member: separation report at the given relative
/// width plus the exact sep-bound comparison.
pub fn sweep_row(record: FamilyRecord, rel_width: f64) -> Result<SweepRow, FamilyError> {
    let report = roots::exponent(record.product(), rel_width)?;
    let bound_ok =
        cmp_dyadic_rational(&report.sep_hi, &record.predicted_sep_bound) == Ordering::Less;
    Ok(SweepRow { record, report, bound_ok })
}
