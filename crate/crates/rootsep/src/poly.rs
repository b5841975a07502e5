//! Exact arithmetic on integer polynomials.
//!
//! Coefficients are arbitrary-size integers stored in ascending degree order
//! (`coeffs[i]` multiplies `x^i`), so index equals power everywhere. The zero
//! polynomial is the empty coefficient sequence. On top of the ring
//! operations the module provides naive heights, primitive-PRS gcds,
//! squarefree parts, Sylvester/Bareiss resultants and discriminants, and
//! rigorous evaluation on complex balls.

use crate::cbox::{ComplexBall, ComplexBox};
use crate::dyadic::Dyadic;
use crate::interval::RealInterval;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("undefined height of zero polynomial")]
    ZeroHeight,
    #[error("operation requires degree >= {required}, got {actual}")]
    DegreeTooSmall { required: usize, actual: isize },
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
    #[error("factored polynomial requires nonempty list of monic factors of degree >= 1")]
    BadFactor,
}

/// A univariate polynomial with exact integer coefficients, ascending order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntegerPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntegerPolynomial {
    /// Builds a polynomial, trimming trailing zero coefficients.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntegerPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntegerPolynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::from_i64s(&[1])
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntegerPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, |c| c.is_one())
    }

    /// Naive height: maximum absolute coefficient value.
    pub fn height(&self) -> Result<BigInt, PolyError> {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .ok_or(PolyError::ZeroHeight)
    }

    pub fn neg(&self) -> Self {
        IntegerPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Exact product.
    pub fn multiply(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Substitutes `x -> -x` (flips the sign of odd coefficients).
    pub fn flip_sign(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Exact formal derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i as u64 + 1))
                .collect(),
        )
    }

    /// Gcd of all coefficients (nonnegative; zero only for the zero
    /// polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// The polynomial divided by its content, sign-normalized so the leading
    /// coefficient is positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut content = self.content();
        if self.leading().unwrap().is_negative() {
            content = -content;
        }
        Self::new(self.coeffs.iter().map(|c| c / &content).collect())
    }

    /// Pseudo-remainder: `lc(B)^(deg A - deg B + 1) * A mod B`, exact over
    /// the integers.
    fn pseudo_rem(&self, other: &Self) -> Self {
        let db = other.degree().expect("pseudo_rem by zero polynomial");
        let lb = other.leading().unwrap().clone();
        let mut rem = self.clone();
        while let Some(dr) = rem.degree() {
            if dr < db {
                break;
            }
            let lead = rem.leading().unwrap().clone();
            // rem <- lb * rem - lead * x^(dr-db) * other
            let shifted = IntegerPolynomial::monomial(dr - db).multiply(other);
            rem = rem.scale(&lb).sub(&shifted.scale(&lead));
            debug_assert!(rem.degree().map_or(true, |d| d < dr));
        }
        rem
    }

    /// Gcd over the integers via the primitive polynomial remainder
    /// sequence; the result is primitive with positive leading coefficient,
    /// scaled by the gcd of the contents.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_part().scale(&other.content());
        }
        if other.is_zero() {
            return self.primitive_part().scale(&self.content());
        }
        let content_gcd = self.content().gcd(&other.content());
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a.primitive_part().scale(&content_gcd)
    }

    /// Exact quotient; `None` when `other` does not divide `self` in Z[x].
    pub fn exact_div(&self, other: &Self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let db = other.degree()?;
        let da = self.degree().unwrap();
        if da < db {
            return None;
        }
        let lb = other.leading().unwrap();
        let mut rem = self.clone();
        let mut q = vec![BigInt::zero(); da - db + 1];
        while let Some(dr) = rem.degree() {
            if dr < db {
                return None; // nonzero remainder
            }
            let (qc, r) = rem.leading().unwrap().div_rem(lb);
            if !r.is_zero() {
                return None;
            }
            q[dr - db] = qc.clone();
            let shifted = IntegerPolynomial::monomial(dr - db).multiply(other);
            rem = rem.sub(&shifted.scale(&qc));
        }
        Some(Self::new(q))
    }

    /// `P / gcd(P, P')`, primitive with positive leading coefficient: a
    /// polynomial with exactly the distinct roots of `P`, each simple.
    pub fn squarefree_part(&self) -> Result<Self, PolyError> {
        match self.degree() {
            None => Err(PolyError::DegreeTooSmall { required: 1, actual: -1 }),
            Some(0) => Err(PolyError::DegreeTooSmall { required: 1, actual: 0 }),
            Some(_) => {
                let g = self.gcd(&self.derivative());
                let q = self
                    .exact_div(&g.primitive_part())
                    .expect("gcd must divide the polynomial");
                Ok(q.primitive_part())
            }
        }
    }

    /// Resultant of `self` and `other` via Bareiss elimination on the
    /// Sylvester matrix (exact, sign-correct).
    pub fn resultant(&self, other: &Self) -> BigInt {
        let m = match self.degree() {
            Some(d) => d,
            None => return BigInt::zero(),
        };
        let n = match other.degree() {
            Some(d) => d,
            None => return BigInt::zero(),
        };
        if m == 0 {
            return self.coeffs[0].pow(n as u32);
        }
        if n == 0 {
            return other.coeffs[0].pow(m as u32);
        }
        let size = m + n;
        let mut mat = vec![vec![BigInt::zero(); size]; size];
        // n rows of self's coefficients (descending), shifted.
        for i in 0..n {
            for k in 0..=m {
                mat[i][i + k] = self.coeffs[m - k].clone();
            }
        }
        // m rows of other's coefficients.
        for i in 0..m {
            for k in 0..=n {
                mat[n + i][i + k] = other.coeffs[n - k].clone();
            }
        }
        bareiss_determinant(mat)
    }

    /// Discriminant `(-1)^{d(d-1)/2} Res(P, P') / lc(P)`; zero iff `P` has a
    /// multiple root.
    pub fn discriminant(&self) -> Result<BigInt, PolyError> {
        let d = self.degree().unwrap_or(0);
        if d < 2 {
            return Err(PolyError::DegreeTooSmall {
                required: 2,
                actual: self.degree().map_or(-1, |v| v as isize),
            });
        }
        let res = self.resultant(&self.derivative());
        let sign = if (d * (d - 1) / 2) % 2 == 0 { 1 } else { -1 };
        let (q, r) = res.div_rem(self.leading().unwrap());
        debug_assert!(r.is_zero(), "leading coefficient must divide Res(P, P')");
        Ok(q * sign)
    }

    /// Exact Horner evaluation at a dyadic real point.
    pub fn eval_dyadic(&self, x: &Dyadic) -> Dyadic {
        let mut acc = Dyadic::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&Dyadic::from_bigint(c.clone()));
        }
        acc
    }

    /// Exact Horner evaluation at a dyadic complex point.
    pub fn eval_dyadic_complex(&self, re: &Dyadic, im: &Dyadic) -> (Dyadic, Dyadic) {
        let mut are = Dyadic::zero();
        let mut aim = Dyadic::zero();
        for c in self.coeffs.iter().rev() {
            let nre = are.mul(re).sub(&aim.mul(im)).add(&Dyadic::from_bigint(c.clone()));
            let nim = are.mul(im).add(&aim.mul(re));
            are = nre;
            aim = nim;
        }
        (are, aim)
    }

    /// Exact evaluation at a rational point.
    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_bigint(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Interval Horner evaluation over a real interval.
    pub fn eval_interval(&self, x: &RealInterval, prec: u32) -> RealInterval {
        let mut acc = RealInterval::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x, prec).add(&RealInterval::from_bigint(c), prec);
        }
        acc
    }

    /// Rectangle Horner evaluation over a complex box.
    pub fn eval_box(&self, z: &ComplexBox, prec: u32) -> ComplexBox {
        let mut acc = ComplexBox::exact(Dyadic::zero(), Dyadic::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(z, prec);
            acc.re = acc.re.add(&RealInterval::from_bigint(c), prec);
        }
        acc
    }

    /// Rigorous evaluation on a complex ball: the returned ball contains
    /// `{P(z) : z in the input ball}`.
    ///
    /// Inclusion-monotone: for nested input balls (at matching internal
    /// precision) the output balls nest as well, because every interval
    /// endpoint is rounded outward by a monotone directed rounding.
    pub fn evaluate(&self, point: &ComplexBall) -> ComplexBall {
        let prec = 256
            + (point.re.bits() as u32)
                .max(point.im.bits() as u32)
                .max(point.rad.bits() as u32)
                .min(1 << 16);
        self.eval_box(&point.to_box(), prec).to_ball(prec)
    }

    /// Canonical comma-separated ascending-coefficient text.
    pub fn to_comma_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Parses the canonical comma format (ascending integer coefficients).
    pub fn from_comma_text(text: &str) -> Result<Self, PolyError> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Err(PolyError::Parse("empty input".to_string()));
        }
        let mut coeffs = Vec::new();
        for tok in trimmed.split(',') {
            // Tolerate the U+2212 minus that mathematical text tends to use.
            let tok = tok.trim().replace('\u{2212}', "-");
            let c: BigInt = tok
                .parse()
                .map_err(|_| PolyError::Parse(format!("bad coefficient {tok:?}")))?;
            coeffs.push(c);
        }
        Ok(Self::new(coeffs))
    }
}

/// Exact determinant by Bareiss fraction-free elimination (consumes the
/// matrix).
fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            // Find a pivot below; determinant is zero if none exists.
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                let (q, r) = t.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                m[i][j] = q;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 { -det } else { det }
}

/// Display as conventional descending-power text, e.g.
/// `x^5+4x^4+7x^2-8x+2`. Display-only; the comma format is the parse/emit
/// contract.
impl fmt::Display for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
                first = false;
            } else if neg {
                f.write_str("-")?;
            } else {
                f.write_str("+")?;
            }
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntegerPolynomial({self})")
    }
}

/// A product kept together with its (monic, degree >= 1) factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredPolynomial {
    factors: Vec<IntegerPolynomial>,
    product: IntegerPolynomial,
}

impl FactoredPolynomial {
    pub fn new(factors: Vec<IntegerPolynomial>) -> Result<Self, PolyError> {
        if factors.is_empty() {
            return Err(PolyError::BadFactor);
        }
        for fac in &factors {
            if !fac.is_monic() || fac.degree().map_or(true, |d| d < 1) {
                return Err(PolyError::BadFactor);
            }
        }
        let product = factors
            .iter()
            .fold(IntegerPolynomial::one(), |acc, q| acc.multiply(q));
        Ok(FactoredPolynomial { factors, product })
    }

    pub fn factors(&self) -> &[IntegerPolynomial] {
        &self.factors
    }

    pub fn product(&self) -> &IntegerPolynomial {
        &self.product
    }

    /// Re-multiplies the factor list and compares with the cached product.
    pub fn verify_product(&self) -> bool {
        let fresh = self
            .factors
            .iter()
            .fold(IntegerPolynomial::one(), |acc, q| acc.multiply(q));
        fresh == self.product
    }

    /// Sorted multiset of factor degrees, e.g. `[2, 3]`.
    pub fn shape(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self
            .factors
            .iter()
            .map(|q| q.degree().expect("factors have degree >= 1"))
            .collect();
        s.sort_unstable();
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntegerPolynomial {
        IntegerPolynomial::from_i64s(coeffs)
    }

    #[test]
    fn height_examples() {
        assert_eq!(p(&[-1, 0, 1]).height().unwrap(), BigInt::from(1));
        assert_eq!(p(&[2, -8, 7, 0, 4, 1]).height().unwrap(), BigInt::from(8));
        assert_eq!(p(&[-2, 8, 1]).height().unwrap(), BigInt::from(8));
        let err = IntegerPolynomial::zero().height().unwrap_err();
        assert_eq!(err.to_string(), "undefined height of zero polynomial");
    }

    #[test]
    fn multiply_examples() {
        let a = p(&[-1, 1]); // x - 1
        let b = p(&[1, 1]); // x + 1
        assert_eq!(a.multiply(&b), p(&[-1, 0, 1]));
        let cubic = p(&[-1, 2, 0, 1]); // x^3 + 2x - 1
        let quad = p(&[-2, 4, 1]); // x^2 + 4x - 2
        assert_eq!(cubic.multiply(&quad), p(&[2, -8, 7, 0, 4, 1]));
        assert_eq!(cubic.multiply(&IntegerPolynomial::one()), cubic);
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p(&[-1, 0, 1]).derivative(), p(&[0, 2]));
        assert_eq!(p(&[-1, 10, 0, 1]).derivative(), p(&[10, 0, 3]));
        assert_eq!(p(&[5]).derivative(), IntegerPolynomial::zero());
    }

    #[test]
    fn derivative_height_bound_is_exact() {
        // height(P') <= deg(P) * height(P)
        let q = p(&[3, -7, 0, 2, -9, 1]);
        let d = q.degree().unwrap();
        let bound = q.height().unwrap() * BigInt::from(d as u64);
        assert!(q.derivative().height().unwrap() <= bound);
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(p(&[1, -2, 1]).squarefree_part().unwrap(), p(&[-1, 1]));
        assert_eq!(p(&[-1, 0, 1]).squarefree_part().unwrap(), p(&[-1, 0, 1]));
        // (x^2-2)^2 (x+1) -> (x^2-2)(x+1) = x^3 + x^2 - 2x - 2
        let q = p(&[-2, 0, 1]).multiply(&p(&[-2, 0, 1])).multiply(&p(&[1, 1]));
        assert_eq!(q.squarefree_part().unwrap(), p(&[-2, -2, 1, 1]));
    }

    #[test]
    fn squarefree_divides_and_discriminant_nonzero() {
        let q = p(&[1, -2, 1]).multiply(&p(&[-6, 1])); // (x-1)^2 (x-6)
        let sf = q.squarefree_part().unwrap();
        assert!(q.exact_div(&sf).is_some());
        assert!(!sf.discriminant().unwrap().is_zero());
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(p(&[-1, 0, 1]).discriminant().unwrap(), BigInt::from(4));
        assert_eq!(p(&[-1, 2, 0, 1]).discriminant().unwrap(), BigInt::from(-59));
        assert_eq!(p(&[1, -2, 1]).discriminant().unwrap(), BigInt::from(0));
        assert!(matches!(
            p(&[1, 1]).discriminant(),
            Err(PolyError::DegreeTooSmall { .. })
        ));
    }

    #[test]
    fn resultant_of_coprime_linear_pair() {
        // Res(x-1, x+1) = 2 (value of x+1 at 1, both monic linear).
        let r = p(&[-1, 1]).resultant(&p(&[1, 1]));
        assert_eq!(r.abs(), BigInt::from(2));
    }

    #[test]
    fn evaluate_examples() {
        let q = p(&[-1, 0, 1]);
        let at_one = q.evaluate(&ComplexBall::exact_real(Dyadic::one()));
        assert!(at_one.re.is_zero() && at_one.im.is_zero() && at_one.rad.is_zero());

        let cubic = p(&[-1, 10, 0, 1]);
        let at_zero = cubic.evaluate(&ComplexBall::exact_real(Dyadic::zero()));
        assert_eq!(at_zero.re.to_f64(), -1.0);
        assert!(at_zero.rad.is_zero());

        // Ball around the root near 0.0999: image must contain 0.
        let ball = ComplexBall::new(
            Dyadic::from_f64(0.0999),
            Dyadic::zero(),
            Dyadic::from_f64(1e-3),
        );
        assert!(cubic.evaluate(&ball).contains_zero());
    }

    #[test]
    fn evaluate_is_inclusion_monotone_on_nested_balls() {
        let cubic = p(&[-1, 10, 0, 1]);
        let outer = ComplexBall::new(
            Dyadic::from_f64(0.1),
            Dyadic::from_f64(0.05),
            Dyadic::from_f64(0.25),
        );
        let inner = ComplexBall::new(
            Dyadic::from_f64(0.11),
            Dyadic::from_f64(0.04),
            Dyadic::from_f64(0.125),
        );
        let big = cubic.evaluate(&outer).to_box();
        let small = cubic.evaluate(&inner).to_box();
        assert!(big.re.contains_interval(&small.re));
        assert!(big.im.contains_interval(&small.im));
    }

    #[test]
    fn gelfond_inequality_for_monic_products() {
        let a = p(&[-1, 2, 0, 1]);
        let b = p(&[-2, 4, 1]);
        let prod = a.multiply(&b);
        let ha = a.height().unwrap();
        let hb = b.height().unwrap();
        let hp = prod.height().unwrap();
        let shift = (a.degree().unwrap() + b.degree().unwrap()) as u32;
        let scale = BigInt::from(1) << shift;
        assert!(&ha * &hb <= &hp * &scale);
        assert!(hp <= ha * hb * scale);
    }

    #[test]
    fn comma_format_round_trip() {
        let q = IntegerPolynomial::from_comma_text("2,-8,7,0,4,1").unwrap();
        assert_eq!(q, p(&[2, -8, 7, 0, 4, 1]));
        assert_eq!(q.to_comma_text(), "2,-8,7,0,4,1");
        assert_eq!(IntegerPolynomial::from_comma_text(" 1 , 2 ").unwrap(), p(&[1, 2]));
        assert!(IntegerPolynomial::from_comma_text("1,a,3").is_err());
        assert!(IntegerPolynomial::from_comma_text("").is_err());
        assert_eq!(
            IntegerPolynomial::from_comma_text("0").unwrap(),
            IntegerPolynomial::zero()
        );
    }

    #[test]
    fn pretty_printer_style() {
        assert_eq!(p(&[2, -8, 7, 0, 4, 1]).to_string(), "x^5+4x^4+7x^2-8x+2");
        assert_eq!(p(&[6, -12, 1]).to_string(), "x^2-12x+6");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
        assert_eq!(p(&[-7]).to_string(), "-7");
        assert_eq!(IntegerPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn factored_polynomial_invariants() {
        let f = FactoredPolynomial::new(vec![p(&[-1, 2, 0, 1]), p(&[-2, 4, 1])]).unwrap();
        assert_eq!(f.product(), &p(&[2, -8, 7, 0, 4, 1]));
        assert!(f.verify_product());
        assert_eq!(f.shape(), vec![2, 3]);
        assert!(f.product().is_monic());
        // Non-monic factor rejected.
        assert!(FactoredPolynomial::new(vec![p(&[1, 2])]).is_err());
        // Constant factor rejected.
        assert!(FactoredPolynomial::new(vec![p(&[1])]).is_err());
        assert!(FactoredPolynomial::new(vec![]).is_err());
    }

    #[test]
    fn gcd_basics() {
        let a = p(&[-1, 0, 1]); // (x-1)(x+1)
        let b = p(&[1, -2, 1]); // (x-1)^2
        let g = a.gcd(&b);
        assert_eq!(g, p(&[-1, 1]));
        // Content factors through.
        let g2 = a.scale(&BigInt::from(6)).gcd(&b.scale(&BigInt::from(4)));
        assert_eq!(g2, p(&[-2, 2]));
    }
}
