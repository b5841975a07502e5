//! Exact height and separation inequalities: Gelfond margins for factor
//! pairs and the Mahler-style per-instance separation floor.
//!
//! ```sh
//! cargo run --release -p rootsep --example inequality_checks
//! ```

use num_traits::ToPrimitive;
use rootsep::poly::IntegerPolynomial;
use rootsep::roots;
use rootsep::survey;

fn main() {
    // Gelfond: 2^{-m-n} H(Q) H(R) <= H(QR) <= 2^{m+n} H(Q) H(R), checked
    // in exact integer arithmetic with explicit slack margins.
    let q = IntegerPolynomial::from_i64s(&[-2, 4, 1]);
    let r = IntegerPolynomial::from_i64s(&[-1, 2, 0, 1]);
    let check = survey::check_gelfond(&q, &r).unwrap();
    println!("Q = {q}");
    println!("R = {r}");
    println!(
        "Gelfond pass: {} (lower margin {}, upper margin {})",
        check.pass, check.lower_margin, check.upper_margin
    );

    // Sampled suite: ten thousand random monic pairs, zero failures.
    let suite = survey::gelfond_suite(1, 10_000, 1000);
    println!(
        "suite: {} pairs checked, {} violations",
        suite.checked, suite.violations
    );
    assert!(suite.pass());

    // Mahler floor: a positive rational provably below sep(P), built
    // from the discriminant and a rigorous Mahler-measure upper bound.
    println!();
    for poly in [
        IntegerPolynomial::from_i64s(&[-1, 0, 1]),
        IntegerPolynomial::from_i64s(&[-10, 100, 1]),
        q.multiply(&r),
    ] {
        let floor = survey::mahler_floor(&poly).unwrap();
        let report = roots::sep(&poly, 1e-4).unwrap();
        println!(
            "P = {poly}\n  floor {:.6e} < sep_lo {:.6e}",
            floor.to_f64().unwrap(),
            report.sep_lo.to_f64()
        );
        assert!(survey::floor_below_separation(&poly, 1e-4));
    }

    // The floor degrades with degree and measure, but it never lies: a
    // thousand random squarefree polynomials, zero violations.
    let suite = survey::mahler_suite(2, 1000, 1e-2);
    println!();
    println!(
        "mahler suite: {} polynomials checked, {} violations",
        suite.checked, suite.violations
    );
    assert!(suite.pass());
}
