//! Real intervals `[lo, hi]` over [`Dyadic`] endpoints with outward rounding.
//!
//! All operations take an explicit working precision: endpoints are rounded
//! `Floor` on the low side and `Ceil` on the high side, so every interval is
//! a true enclosure of the exact result. The module also provides a rigorous
//! natural logarithm built from the atanh series with an explicit tail bound,
//! which is what turns separation enclosures into exponent enclosures.

use crate::dyadic::{Dyadic, Round};
use num_bigint::BigInt;
use std::cmp::Ordering;

/// A closed real interval with dyadic endpoints, `lo <= hi`.
#[derive(Clone, Debug)]
pub struct RealInterval {
    lo: Dyadic,
    hi: Dyadic,
}

impl RealInterval {
    pub fn new(lo: Dyadic, hi: Dyadic) -> Self {
        debug_assert!(lo.cmp(&hi) != Ordering::Greater, "inverted interval");
        RealInterval { lo, hi }
    }

    /// The degenerate interval `[x, x]`.
    pub fn exact(x: Dyadic) -> Self {
        RealInterval { lo: x.clone(), hi: x }
    }

    pub fn from_i64(v: i64) -> Self {
        Self::exact(Dyadic::from_i64(v))
    }

    pub fn from_bigint(v: &BigInt) -> Self {
        Self::exact(Dyadic::from_bigint(v.clone()))
    }

    pub fn zero() -> Self {
        Self::exact(Dyadic::zero())
    }

    pub fn lo(&self) -> &Dyadic {
        &self.lo
    }

    pub fn hi(&self) -> &Dyadic {
        &self.hi
    }

    /// Exact width `hi - lo`.
    pub fn width(&self) -> Dyadic {
        self.hi.sub(&self.lo)
    }

    /// Exact midpoint (dyadic halving never rounds).
    pub fn midpoint(&self) -> Dyadic {
        self.lo.add(&self.hi).mul_pow2(-1)
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn contains(&self, x: &Dyadic) -> bool {
        self.lo.cmp(x) != Ordering::Greater && self.hi.cmp(x) != Ordering::Less
    }

    pub fn contains_interval(&self, other: &RealInterval) -> bool {
        self.lo.cmp(&other.lo) != Ordering::Greater
            && self.hi.cmp(&other.hi) != Ordering::Less
    }

    /// Strictly positive everywhere?
    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    /// Strictly negative everywhere?
    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn neg(&self) -> RealInterval {
        RealInterval { lo: self.hi.neg(), hi: self.lo.neg() }
    }

    pub fn add(&self, other: &RealInterval, prec: u32) -> RealInterval {
        RealInterval {
            lo: self.lo.add(&other.lo).round(prec, Round::Floor),
            hi: self.hi.add(&other.hi).round(prec, Round::Ceil),
        }
    }

    pub fn sub(&self, other: &RealInterval, prec: u32) -> RealInterval {
        self.add(&other.neg(), prec)
    }

    pub fn mul(&self, other: &RealInterval, prec: u32) -> RealInterval {
        let corners = [
            self.lo.mul(&other.lo),
            self.lo.mul(&other.hi),
            self.hi.mul(&other.lo),
            self.hi.mul(&other.hi),
        ];
        let mut lo = corners[0].clone();
        let mut hi = corners[0].clone();
        for c in &corners[1..] {
            lo = Dyadic::min(&lo, c);
            hi = Dyadic::max(&hi, c);
        }
        RealInterval {
            lo: lo.round(prec, Round::Floor),
            hi: hi.round(prec, Round::Ceil),
        }
    }

    /// Exact scaling by an integer.
    pub fn mul_bigint(&self, k: &BigInt, prec: u32) -> RealInterval {
        let a = self.lo.mul_bigint(k);
        let b = self.hi.mul_bigint(k);
        let (lo, hi) = if k.sign() == num_bigint::Sign::Minus { (b, a) } else { (a, b) };
        RealInterval {
            lo: lo.round(prec, Round::Floor),
            hi: hi.round(prec, Round::Ceil),
        }
    }

    /// Exact scaling by a power of two.
    pub fn mul_pow2(&self, k: i64) -> RealInterval {
        RealInterval { lo: self.lo.mul_pow2(k), hi: self.hi.mul_pow2(k) }
    }

    /// Quotient; the denominator interval must not contain zero.
    pub fn div(&self, other: &RealInterval, prec: u32) -> RealInterval {
        assert!(
            !other.contains_zero(),
            "interval division by an interval containing zero"
        );
        let mut lo: Option<Dyadic> = None;
        let mut hi: Option<Dyadic> = None;
        for num in [&self.lo, &self.hi] {
            for den in [&other.lo, &other.hi] {
                let down = Dyadic::div(num, den, prec, Round::Floor);
                let up = Dyadic::div(num, den, prec, Round::Ceil);
                lo = Some(match lo {
                    None => down.clone(),
                    Some(cur) => Dyadic::min(&cur, &down),
                });
                hi = Some(match hi {
                    None => up.clone(),
                    Some(cur) => Dyadic::max(&cur, &up),
                });
            }
        }
        RealInterval { lo: lo.unwrap(), hi: hi.unwrap() }
    }

    /// Square root; requires `lo >= 0`.
    pub fn sqrt(&self, prec: u32) -> RealInterval {
        assert!(!self.lo.is_negative(), "interval sqrt of a negative interval");
        RealInterval {
            lo: Dyadic::sqrt(&self.lo, prec, Round::Floor),
            hi: Dyadic::sqrt(&self.hi, prec, Round::Ceil),
        }
    }

    /// Interval of |x| over the interval.
    pub fn abs(&self) -> RealInterval {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            self.neg()
        } else {
            RealInterval {
                lo: Dyadic::zero(),
                hi: Dyadic::max(&self.lo.neg(), &self.hi),
            }
        }
    }

    /// Smallest interval containing both.
    pub fn hull(&self, other: &RealInterval) -> RealInterval {
        RealInterval {
            lo: Dyadic::min(&self.lo, &other.lo),
            hi: Dyadic::max(&self.hi, &other.hi),
        }
    }

    /// Intersection, if nonempty.
    pub fn intersect(&self, other: &RealInterval) -> Option<RealInterval> {
        let lo = Dyadic::max(&self.lo, &other.lo);
        let hi = Dyadic::min(&self.hi, &other.hi);
        if lo.cmp(&hi) == Ordering::Greater {
            None
        } else {
            Some(RealInterval { lo, hi })
        }
    }

    /// Natural logarithm; requires `lo > 0`. Monotone, so the enclosure is
    /// `[ln_down(lo), ln_up(hi)]`.
    pub fn ln(&self, prec: u32) -> RealInterval {
        assert!(self.lo.is_positive(), "interval ln requires a positive interval");
        let a = ln_dyadic(&self.lo, prec);
        let b = ln_dyadic(&self.hi, prec);
        RealInterval { lo: a.lo, hi: b.hi }
    }
}

/// Rigorous enclosure of `ln(x)` for `x > 0`.
///
/// Writes `x = f * 2^s` with `f ∈ [1, 2)` and evaluates
/// `ln f = 2 atanh((f-1)/(f+1))` by the odd series, adding an explicit tail
/// bound; `ln 2 = 2 atanh(1/3)` comes from the same series.
pub fn ln_dyadic(x: &Dyadic, prec: u32) -> RealInterval {
    assert!(x.is_positive(), "ln requires a positive argument");
    let s = x.floor_log2().unwrap();
    let f = x.mul_pow2(-s); // in [1, 2)
    let one = RealInterval::exact(Dyadic::one());
    let fi = RealInterval::exact(f);
    let num = fi.sub(&one, prec + 8);
    let den = fi.add(&one, prec + 8);
    let t = if num.hi().is_zero() {
        RealInterval::zero()
    } else {
        num.div(&den, prec + 8)
    };
    let mut result = atanh_interval(&t, prec + 8).mul_pow2(1);
    if s != 0 {
        let ln2 = ln_two(prec + 8).mul_bigint(&BigInt::from(s), prec + 8);
        result = result.add(&ln2, prec + 8);
    }
    result
}

/// Rigorous enclosure of `ln 2`.
pub fn ln_two(prec: u32) -> RealInterval {
    let third = RealInterval::new(
        Dyadic::div(&Dyadic::one(), &Dyadic::from_i64(3), prec + 8, Round::Floor),
        Dyadic::div(&Dyadic::one(), &Dyadic::from_i64(3), prec + 8, Round::Ceil),
    );
    atanh_interval(&third, prec + 8).mul_pow2(1)
}

/// Enclosure of `atanh(t) = Σ t^{2i+1}/(2i+1)` for `0 <= t <= 1/3 + ε`.
///
/// The truncation error after the term with exponent `2i+1` is at most
/// `t^{2i+3}/(1 - t²) <= (9/8) t^{2i+3}` for `t <= 1/3`, which is added as
/// `[0, bound]`.
fn atanh_interval(t: &RealInterval, prec: u32) -> RealInterval {
    debug_assert!(!t.lo().is_negative());
    debug_assert!(t.hi().to_f64() < 0.36);
    if t.hi().is_zero() {
        return RealInterval::zero();
    }
    let t2 = t.mul(t, prec);
    let eps = Dyadic::pow2(-(prec as i64) - 4);
    let mut power = t.clone(); // t^k for the current odd k
    let mut sum = t.clone(); // k = 1 term
    let mut k: i64 = 1;
    loop {
        power = power.mul(&t2, prec);
        k += 2;
        if power.hi().cmp(&eps) == Ordering::Less {
            break;
        }
        let term = RealInterval::new(
            Dyadic::div(power.lo(), &Dyadic::from_i64(k), prec, Round::Floor),
            Dyadic::div(power.hi(), &Dyadic::from_i64(k), prec, Round::Ceil),
        );
        sum = sum.add(&term, prec);
    }
    // Tail: remaining terms start at exponent k (power already holds t^k).
    let nine_eighths = Dyadic::new(BigInt::from(9), -3);
    let tail_hi = power.hi().mul(&nine_eighths).round(prec, Round::Ceil);
    let tail = RealInterval::new(Dyadic::zero(), tail_hi);
    sum.add(&tail, prec)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn di(v: f64) -> Dyadic {
        Dyadic::from_f64(v)
    }

    #[test]
    fn arithmetic_encloses_f64_results() {
        let a = RealInterval::new(di(1.25), di(1.5));
        let b = RealInterval::new(di(-0.5), di(0.25));
        let sum = a.add(&b, 60);
        assert!(sum.lo().to_f64() <= 0.75 && sum.hi().to_f64() >= 1.75);
        let prod = a.mul(&b, 60);
        assert!(prod.lo().to_f64() <= -0.75 && prod.hi().to_f64() >= 0.375);
    }

    #[test]
    fn division_signs() {
        let a = RealInterval::new(di(1.0), di(2.0));
        let b = RealInterval::new(di(-4.0), di(-2.0));
        let q = a.div(&b, 60);
        assert!(q.lo().to_f64() <= -1.0 && q.hi().to_f64() >= -0.25);
        assert!(q.is_negative());
    }

    #[test]
    #[should_panic(expected = "containing zero")]
    fn division_by_zero_interval_panics() {
        let a = RealInterval::from_i64(1);
        let b = RealInterval::new(di(-1.0), di(1.0));
        let _ = a.div(&b, 60);
    }

    #[test]
    fn ln_two_matches_reference() {
        let l = ln_two(128);
        let reference = std::f64::consts::LN_2;
        assert!(l.lo().to_f64() <= reference && reference <= l.hi().to_f64());
        assert!(l.width().to_f64() < 1e-30);
    }

    #[test]
    fn ln_encloses_known_values() {
        // Compare with a 1-ulp margin: the enclosure is far tighter than f64,
        // so f64 round-off in the reference value must not fail the test.
        for (x, expected) in [(1.0, 0.0), (2.0, std::f64::consts::LN_2), (10.0, 10f64.ln())] {
            let enc = ln_dyadic(&di(x), 128);
            let margin = 1e-14;
            assert!(
                enc.lo().to_f64() <= expected + margin
                    && expected - margin <= enc.hi().to_f64(),
                "ln({x}) enclosure {:?} misses {expected}",
                (enc.lo().to_f64(), enc.hi().to_f64())
            );
            assert!(enc.width().to_f64() < 1e-30);
        }
        // Below 1 the logarithm is negative.
        let enc = ln_dyadic(&di(0.125), 96);
        let expected = 0.125f64.ln();
        assert!(enc.lo().to_f64() <= expected + 1e-14);
        assert!(expected - 1e-14 <= enc.hi().to_f64());
        assert!(enc.hi().is_negative());
    }

    #[test]
    fn ln_of_huge_and_tiny_inputs() {
        let big = Dyadic::pow2(400);
        let enc = ln_dyadic(&big, 96);
        let expected = 400.0 * std::f64::consts::LN_2;
        assert!(enc.lo().to_f64() <= expected + 1e-10);
        assert!(expected - 1e-10 <= enc.hi().to_f64());
        let tiny = Dyadic::pow2(-400);
        let enc = ln_dyadic(&tiny, 96);
        let expected = -400.0 * std::f64::consts::LN_2;
        assert!(enc.lo().to_f64() <= expected + 1e-10);
        assert!(expected - 1e-10 <= enc.hi().to_f64());
    }

    #[test]
    fn interval_ln_is_monotone_enclosure() {
        let x = RealInterval::new(di(2.0), di(8.0));
        let l = x.ln(96);
        assert!(l.lo().to_f64() <= 2f64.ln());
        assert!(l.hi().to_f64() >= 8f64.ln());
    }

    #[test]
    fn hull_and_intersect() {
        let a = RealInterval::new(di(0.0), di(2.0));
        let b = RealInterval::new(di(1.0), di(3.0));
        let h = a.hull(&b);
        assert_eq!(h.lo().to_f64(), 0.0);
        assert_eq!(h.hi().to_f64(), 3.0);
        let i = a.intersect(&b).unwrap();
        assert_eq!(i.lo().to_f64(), 1.0);
        assert_eq!(i.hi().to_f64(), 2.0);
        let c = RealInterval::new(di(5.0), di(6.0));
        assert!(a.intersect(&c).is_none());
    }
}
