//! Complex rectangles and disks over dyadic interval arithmetic.
//!
//! A [`ComplexBox`] is the working representation (a rectangle
//! `re × im` of real intervals); a [`ComplexBall`] (center + radius disk) is
//! the exchange format used by root enclosures and the public evaluation
//! API. Conversions are conservative in both directions, so any chain of
//! box operations on a ball yields a ball that rigorously contains the true
//! image set.

use crate::dyadic::{Dyadic, Round};
use crate::interval::RealInterval;

/// A closed axis-aligned rectangle in the complex plane.
#[derive(Clone, Debug)]
pub struct ComplexBox {
    pub re: RealInterval,
    pub im: RealInterval,
}

impl ComplexBox {
    pub fn new(re: RealInterval, im: RealInterval) -> Self {
        ComplexBox { re, im }
    }

    /// The degenerate box holding one exact point.
    pub fn exact(re: Dyadic, im: Dyadic) -> Self {
        ComplexBox {
            re: RealInterval::exact(re),
            im: RealInterval::exact(im),
        }
    }

    pub fn add(&self, other: &ComplexBox, prec: u32) -> ComplexBox {
        ComplexBox {
            re: self.re.add(&other.re, prec),
            im: self.im.add(&other.im, prec),
        }
    }

    pub fn sub(&self, other: &ComplexBox, prec: u32) -> ComplexBox {
        ComplexBox {
            re: self.re.sub(&other.re, prec),
            im: self.im.sub(&other.im, prec),
        }
    }

    pub fn mul(&self, other: &ComplexBox, prec: u32) -> ComplexBox {
        let ac = self.re.mul(&other.re, prec);
        let bd = self.im.mul(&other.im, prec);
        let ad = self.re.mul(&other.im, prec);
        let bc = self.im.mul(&other.re, prec);
        ComplexBox {
            re: ac.sub(&bd, prec),
            im: ad.add(&bc, prec),
        }
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    /// Rigorous upper bound on |z| over the box.
    pub fn abs_upper(&self, prec: u32) -> Dyadic {
        let re_max = self.re.abs().hi().clone();
        let im_max = self.im.abs().hi().clone();
        let sum = re_max.mul(&re_max).add(&im_max.mul(&im_max));
        Dyadic::sqrt(&sum, prec, Round::Ceil)
    }

    /// Rigorous lower bound on |z| over the box (zero if the box straddles
    /// the origin in both axes).
    pub fn abs_lower(&self, prec: u32) -> Dyadic {
        let re_min = self.re.abs().lo().clone();
        let im_min = self.im.abs().lo().clone();
        let sum = re_min.mul(&re_min).add(&im_min.mul(&im_min));
        Dyadic::sqrt(&sum, prec, Round::Floor)
    }

    /// Smallest enclosing ball (center = exact midpoints; radius uses the
    /// L1 half-widths, which dominates the Euclidean half-diagonal).
    pub fn to_ball(&self, prec: u32) -> ComplexBall {
        let half_w = self.re.width().mul_pow2(-1);
        let half_h = self.im.width().mul_pow2(-1);
        ComplexBall {
            re: self.re.midpoint(),
            im: self.im.midpoint(),
            rad: half_w.add(&half_h).round(prec, Round::Ceil),
        }
    }
}

/// A closed disk `|z - (re + i·im)| <= rad` with dyadic data.
#[derive(Clone, Debug)]
pub struct ComplexBall {
    pub re: Dyadic,
    pub im: Dyadic,
    pub rad: Dyadic,
}

impl ComplexBall {
    pub fn new(re: Dyadic, im: Dyadic, rad: Dyadic) -> Self {
        assert!(!rad.is_negative(), "ball radius must be nonnegative");
        ComplexBall { re, im, rad }
    }

    pub fn exact(re: Dyadic, im: Dyadic) -> Self {
        ComplexBall { re, im, rad: Dyadic::zero() }
    }

    pub fn exact_real(re: Dyadic) -> Self {
        ComplexBall { re, im: Dyadic::zero(), rad: Dyadic::zero() }
    }

    /// The bounding rectangle (a superset of the disk).
    pub fn to_box(&self) -> ComplexBox {
        ComplexBox {
            re: RealInterval::new(self.re.sub(&self.rad), self.re.add(&self.rad)),
            im: RealInterval::new(self.im.sub(&self.rad), self.im.add(&self.rad)),
        }
    }

    pub fn contains_zero(&self) -> bool {
        // |center| <= rad, compared via squares to stay exact.
        let c2 = self.re.mul(&self.re).add(&self.im.mul(&self.im));
        let r2 = self.rad.mul(&self.rad);
        c2.cmp(&r2) != std::cmp::Ordering::Greater
    }

    /// Rigorous upper bound on |z| over the disk.
    pub fn abs_upper(&self, prec: u32) -> Dyadic {
        let c2 = self.re.mul(&self.re).add(&self.im.mul(&self.im));
        Dyadic::sqrt(&c2, prec, Round::Ceil).add(&self.rad).round(prec, Round::Ceil)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(re: f64, im: f64, rad: f64) -> ComplexBall {
        ComplexBall::new(
            Dyadic::from_f64(re),
            Dyadic::from_f64(im),
            Dyadic::from_f64(rad),
        )
    }

    #[test]
    fn multiplication_encloses_point_product() {
        // (1+2i)(3-i) = 5 + 5i
        let x = ComplexBox::exact(Dyadic::from_i64(1), Dyadic::from_i64(2));
        let y = ComplexBox::exact(Dyadic::from_i64(3), Dyadic::from_i64(-1));
        let p = x.mul(&y, 60);
        assert!(p.re.contains(&Dyadic::from_i64(5)));
        assert!(p.im.contains(&Dyadic::from_i64(5)));
        assert!(p.re.width().is_zero());
    }

    #[test]
    fn ball_box_round_trip_is_conservative() {
        let ball = b(1.0, -2.0, 0.25);
        let back = ball.to_box().to_ball(60);
        assert_eq!(back.re.to_f64(), 1.0);
        assert_eq!(back.im.to_f64(), -2.0);
        // L1 radius of the bounding square is 2x the disk radius.
        assert!(back.rad.to_f64() >= 0.25);
        assert!(back.rad.to_f64() <= 0.5 + 1e-12);
    }

    #[test]
    fn abs_bounds_bracket_truth() {
        let x = ComplexBox::new(
            RealInterval::new(Dyadic::from_f64(3.0), Dyadic::from_f64(3.0)),
            RealInterval::new(Dyadic::from_f64(4.0), Dyadic::from_f64(4.0)),
        );
        assert!(x.abs_lower(60).to_f64() <= 5.0);
        assert!(x.abs_upper(60).to_f64() >= 5.0);
        assert!((x.abs_upper(60).to_f64() - 5.0).abs() < 1e-15);
    }

    #[test]
    fn ball_zero_membership() {
        assert!(b(0.1, 0.0, 0.2).contains_zero());
        assert!(!b(0.5, 0.5, 0.2).contains_zero());
    }
}
