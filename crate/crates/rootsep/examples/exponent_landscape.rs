//! Brute-force exponent landscape of a small reducible space, plus the
//! two empirical fits: the family power law and the linear-factor
//! ceiling.
//!
//! ```sh
//! cargo run --release -p rootsep --example exponent_landscape
//! ```

use num_bigint::BigInt;
use rootsep::families;
use rootsep::interval::RealInterval;
use rootsep::roots;
use rootsep::survey;

fn main() {
    // Every monic (quadratic, cubic) pair with factor heights <= 2,
    // scored by certified exponent; the top of the landscape.
    let records = survey::max_exponent_survey(5, &[2, 3], 2, 1e-3, 5).unwrap();
    println!("top exponents over monic quintics with factor heights <= 2:");
    for rec in &records {
        let (e_lo, _) = rec.report.e.clone().unwrap();
        let factors: Vec<String> = rec.factored.factors().iter().map(|f| format!("({f})")).collect();
        println!(
            "  e_lo = {:>9.6}  H = {:>3}  {}",
            e_lo.to_f64(),
            rec.report.height,
            factors.join("")
        );
    }

    // Family power law: ln sep vs ln H over the quintic family has slope
    // -7/3 (the separation exponent, with the sign of a decay rate).
    let points: Vec<(BigInt, RealInterval)> = [10i64, 20, 40, 80, 160]
        .iter()
        .map(|&n| {
            let rec = families::family_p(5, n).unwrap();
            let report = roots::sep(rec.product(), 1e-4).unwrap();
            (
                report.height.clone(),
                RealInterval::new(report.sep_lo, report.sep_hi),
            )
        })
        .collect();
    let fit = survey::exponent_fit(&points).unwrap();
    println!();
    println!(
        "family fit: slope {:.5} (predicted -7/3 = {:.5}), max residual {:.2e}",
        fit.slope,
        -7.0 / 3.0,
        fit.residual_max
    );

    // Linear-factor ceiling: when one factor is x - c, the planted
    // root distance shrinks no faster than H^{-(d-1)/2} in trend.
    let fit = survey::linear_factor_ceiling(5, 400, (100, 10_000), 3).unwrap();
    println!(
        "linear-factor fit (d = 5): slope {:.4} over {} samples (floor -2.25)",
        fit.slope,
        fit.points.len()
    );
    assert!(fit.slope >= -2.25);
}
