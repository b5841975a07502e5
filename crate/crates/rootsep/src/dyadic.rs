//! Arbitrary-precision dyadic numbers `man * 2^exp` with explicit directed
//! rounding.
//!
//! Every quantity the rest of the crate certifies (root enclosures,
//! separation bounds, logarithms) bottoms out in this type. Addition,
//! subtraction and multiplication are exact; division, square roots and
//! precision reduction take a bit count and a [`Round`] direction, so callers
//! can build true lower/upper bounds instead of trusting a rounding mode
//! hidden in hardware.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Rounding direction for the inexact operations.
///
/// `Nearest` rounds ties away from zero and is *not* guaranteed to be a
/// correctly-rounded nearest result after internal double rounding; it is
/// meant for heuristics (iteration steps, display), never for certified
/// bounds. `Floor` and `Ceil` always produce true lower/upper bounds.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Round {
    Floor,
    Ceil,
    Nearest,
}

/// An exact dyadic rational `man * 2^exp`, normalized so `man` is odd or the
/// number is zero (`man = 0, exp = 0`).
#[derive(Clone, PartialEq, Eq)]
pub struct Dyadic {
    man: BigInt,
    exp: i64,
}

impl Dyadic {
    pub fn new(man: BigInt, exp: i64) -> Self {
        let mut d = Dyadic { man, exp };
        d.normalize();
        d
    }

    fn normalize(&mut self) {
        if self.man.is_zero() {
            self.exp = 0;
            return;
        }
        if let Some(tz) = self.man.trailing_zeros() {
            if tz > 0 {
                self.man >>= tz;
                self.exp += tz as i64;
            }
        }
    }

    pub fn zero() -> Self {
        Dyadic { man: BigInt::zero(), exp: 0 }
    }

    pub fn one() -> Self {
        Dyadic::from_i64(1)
    }

    pub fn from_i64(v: i64) -> Self {
        Dyadic::new(BigInt::from(v), 0)
    }

    pub fn from_bigint(v: BigInt) -> Self {
        Dyadic::new(v, 0)
    }

    /// Exact power of two `2^k`.
    pub fn pow2(k: i64) -> Self {
        Dyadic { man: BigInt::from(1), exp: k }
    }

    /// Exact conversion of a finite `f64`.
    pub fn from_f64(x: f64) -> Self {
        assert!(x.is_finite(), "dyadic conversion requires a finite float");
        if x == 0.0 {
            return Dyadic::zero();
        }
        let bits = x.to_bits();
        let sign = if bits >> 63 == 1 { -1i64 } else { 1 };
        let exp_field = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (man, exp) = if exp_field == 0 {
            (frac, -1074) // subnormal
        } else {
            (frac | (1 << 52), exp_field - 1075)
        };
        Dyadic::new(BigInt::from(man as i64 * sign), exp)
    }

    pub fn is_zero(&self) -> bool {
        self.man.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.man.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.man.is_positive()
    }

    /// Signum as -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        if self.man.is_zero() {
            0
        } else if self.man.is_negative() {
            -1
        } else {
            1
        }
    }

    /// Bit length of the mantissa (0 for zero).
    pub fn bits(&self) -> u64 {
        self.man.bits()
    }

    /// The mantissa/exponent pair (mantissa odd unless zero).
    pub fn to_parts(&self) -> (&BigInt, i64) {
        (&self.man, self.exp)
    }

    /// Exact floor of log2(|self|); `None` for zero.
    pub fn floor_log2(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.man.bits() as i64 - 1 + self.exp)
        }
    }

    pub fn neg(&self) -> Self {
        Dyadic { man: -&self.man, exp: self.exp }
    }

    pub fn abs(&self) -> Self {
        Dyadic { man: self.man.abs(), exp: self.exp }
    }

    /// Exact multiplication by `2^k`.
    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            self.clone()
        } else {
            Dyadic { man: self.man.clone(), exp: self.exp + k }
        }
    }

    /// Exact sum.
    pub fn add(&self, other: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(other.exp);
        let a = &self.man << (self.exp - e) as u64;
        let b = &other.man << (other.exp - e) as u64;
        Dyadic::new(a + b, e)
    }

    /// Exact difference.
    pub fn sub(&self, other: &Dyadic) -> Dyadic {
        self.add(&other.neg())
    }

    /// Exact product.
    pub fn mul(&self, other: &Dyadic) -> Dyadic {
        if self.is_zero() || other.is_zero() {
            return Dyadic::zero();
        }
        Dyadic { man: &self.man * &other.man, exp: self.exp + other.exp }
    }

    /// Exact product with an integer.
    pub fn mul_bigint(&self, k: &BigInt) -> Dyadic {
        Dyadic::new(&self.man * k, self.exp)
    }

    /// Exact comparison.
    pub fn cmp(&self, other: &Dyadic) -> Ordering {
        let sa = self.signum();
        let sb = other.signum();
        if sa != sb {
            return sa.cmp(&sb);
        }
        if sa == 0 {
            return Ordering::Equal;
        }
        // Same nonzero sign: compare magnitude ranges before aligning, so a
        // huge exponent gap never forces a huge shift.
        let la = self.floor_log2().unwrap();
        let lb = other.floor_log2().unwrap();
        if la != lb {
            let mag = la.cmp(&lb);
            return if sa > 0 { mag } else { mag.reverse() };
        }
        let e = self.exp.min(other.exp);
        let a = &self.man << (self.exp - e) as u64;
        let b = &other.man << (other.exp - e) as u64;
        a.cmp(&b)
    }

    pub fn min(a: &Dyadic, b: &Dyadic) -> Dyadic {
        if a.cmp(b) == Ordering::Greater { b.clone() } else { a.clone() }
    }

    pub fn max(a: &Dyadic, b: &Dyadic) -> Dyadic {
        if a.cmp(b) == Ordering::Less { b.clone() } else { a.clone() }
    }

    /// Round to at most `prec` mantissa bits in the given direction.
    pub fn round(&self, prec: u32, dir: Round) -> Dyadic {
        let bits = self.bits();
        if bits <= prec as u64 {
            return self.clone();
        }
        let shift = bits - prec as u64;
        let divisor = BigInt::from(1) << shift;
        let (q, r) = self.man.div_mod_floor(&divisor);
        let q = match dir {
            Round::Floor => q,
            Round::Ceil => {
                if r.is_zero() { q } else { q + 1 }
            }
            Round::Nearest => {
                let twice = &r << 1u32;
                match twice.cmp(&divisor) {
                    Ordering::Less => q,
                    Ordering::Greater => q + 1,
                    // Tie: away from zero.
                    Ordering::Equal => {
                        if self.man.is_negative() { q } else { q + 1 }
                    }
                }
            }
        };
        Dyadic::new(q, self.exp + shift as i64)
    }

    /// Quotient `a / b` with `prec` significant bits, rounded in `dir`.
    ///
    /// `Floor`/`Ceil` results are true lower/upper bounds of the exact
    /// quotient.
    pub fn div(a: &Dyadic, b: &Dyadic, prec: u32, dir: Round) -> Dyadic {
        assert!(!b.is_zero(), "dyadic division by zero");
        if a.is_zero() {
            return Dyadic::zero();
        }
        // Make the denominator positive so floor/ceil keep their meaning.
        let (num, den) = if b.man.is_negative() {
            (-&a.man, -&b.man)
        } else {
            (a.man.clone(), b.man.clone())
        };
        let shift =
            (prec as i64 + 2 + den.bits() as i64 - num.bits() as i64).max(0) as u64;
        let scaled = num << shift;
        let (q, r) = scaled.div_mod_floor(&den);
        let exp = a.exp - b.exp - shift as i64;
        let q = match dir {
            Round::Floor => q,
            Round::Ceil => {
                if r.is_zero() { q } else { q + 1 }
            }
            Round::Nearest => {
                if (&r << 1u32) >= den { q + 1 } else { q }
            }
        };
        Dyadic::new(q, exp).round(prec, dir)
    }

    /// Square root of a nonnegative value with `prec` significant bits,
    /// rounded in `dir`.
    pub fn sqrt(x: &Dyadic, prec: u32, dir: Round) -> Dyadic {
        assert!(!x.is_negative(), "dyadic sqrt of a negative value");
        if x.is_zero() {
            return Dyadic::zero();
        }
        let (mut man, mut exp) = (x.man.clone(), x.exp);
        if exp.rem_euclid(2) != 0 {
            man <<= 1u32;
            exp -= 1;
        }
        let t = ((2 * (prec as i64 + 2) - man.bits() as i64 + 1) / 2).max(0) as u64;
        let m2 = man << (2 * t);
        let s = m2.sqrt(); // floor square root
        let exact = (&s * &s) == m2;
        let exp_out = exp / 2 - t as i64;
        let s = match dir {
            Round::Floor => s,
            Round::Ceil => {
                if exact { s } else { s + 1 }
            }
            Round::Nearest => {
                // Pick the closer of s, s+1 by comparing (2s+1)^2 with 4*m2.
                let mid = (&s << 1u32) + 1;
                if &mid * &mid <= (&m2 << 2u32) { s + 1 } else { s }
            }
        };
        Dyadic::new(s, exp_out).round(prec, dir)
    }

    /// Largest integer `<= self`.
    pub fn floor_to_bigint(&self) -> BigInt {
        if self.exp >= 0 {
            &self.man << self.exp as u64
        } else {
            self.man.div_floor(&(BigInt::from(1) << (-self.exp) as u64))
        }
    }

    /// Smallest integer `>= self`.
    pub fn ceil_to_bigint(&self) -> BigInt {
        if self.exp >= 0 {
            &self.man << self.exp as u64
        } else {
            self.man.div_ceil(&(BigInt::from(1) << (-self.exp) as u64))
        }
    }

    /// Nearest integer, ties away from zero.
    pub fn nearest_to_bigint(&self) -> BigInt {
        // floor(|x| + 1/2) with the sign reattached handles ties away from 0.
        let half = Dyadic::new(BigInt::from(1), -1);
        let shifted = self.abs().add(&half);
        let m = shifted.floor_to_bigint();
        if self.is_negative() { -m } else { m }
    }

    /// Lossy conversion for diagnostics and fitting; saturates rather than
    /// panicking on extreme exponents.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.bits();
        let shift = bits.saturating_sub(53);
        let top = (&self.man >> shift).to_f64().unwrap_or(0.0);
        let mut e = self.exp + shift as i64;
        if e > 2000 {
            return if self.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY };
        }
        if e < -2000 {
            return 0.0;
        }
        // Scale in chunks so intermediate powers of two never under/overflow.
        let mut result = top;
        while e > 500 {
            result *= 2f64.powi(500);
            e -= 500;
        }
        while e < -500 {
            result *= 2f64.powi(-500);
            e += 500;
        }
        result * 2f64.powi(e as i32)
    }

    /// Approximate natural log of |self| that stays accurate even when the
    /// value itself under/overflows `f64` (used for log-log fits).
    pub fn ln_abs_f64(&self) -> f64 {
        assert!(!self.is_zero(), "log of zero");
        let bits = self.bits();
        let shift = bits.saturating_sub(53);
        let top = (self.man.abs() >> shift).to_f64().unwrap_or(1.0);
        top.ln() + (self.exp + shift as i64) as f64 * std::f64::consts::LN_2
    }

    /// Exact decimal representation.
    ///
    /// Plain notation for moderate magnitudes, scientific (`d.ddd...e±k`)
    /// otherwise. The output always parses back to exactly this value.
    pub fn to_decimal_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        // value = digits * 10^(-k) with digits = man * 2^exp or man * 5^k.
        let (digits, k) = if self.exp >= 0 {
            (&self.man << self.exp as u64, 0usize)
        } else {
            let k = (-self.exp) as usize;
            (&self.man * BigInt::from(5).pow(k as u32), k)
        };
        let neg = digits.is_negative();
        let ds = digits.abs().to_string();
        let len = ds.len();
        let sci_exp = len as i64 - 1 - k as i64;
        let body = if (-5..=17).contains(&sci_exp) {
            if k == 0 {
                ds
            } else if len > k {
                format!("{}.{}", &ds[..len - k], &ds[len - k..])
            } else {
                format!("0.{}{}", "0".repeat(k - len), ds)
            }
        } else {
            let head = &ds[..1];
            let tail = &ds[1..];
            if tail.is_empty() {
                format!("{head}e{sci_exp}")
            } else {
                format!("{head}.{tail}e{sci_exp}")
            }
        };
        if neg { format!("-{body}") } else { body }
    }

    /// Numerator/denominator pair of the exact rational value.
    pub fn to_ratio_parts(&self) -> (BigInt, BigInt) {
        if self.exp >= 0 {
            (&self.man << self.exp as u64, BigInt::from(1))
        } else {
            (self.man.clone(), BigInt::from(1) << (-self.exp) as u64)
        }
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal_string())
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dyadic({} * 2^{} ~ {})", self.man, self.exp, self.to_f64())
    }
}
