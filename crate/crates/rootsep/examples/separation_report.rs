//! Certified separation report for a reducible quintic with a
//! pathologically close root pair.
//!
//! ```sh
//! cargo run --release -p rootsep --example separation_report
//! ```

use rootsep::poly::IntegerPolynomial;
use rootsep::roots;

fn main() {
    // (x^3 + 100x - 1)(x^2 + 10000x - 100): the two factors share a
    // near-root close to 1/100, so the product's separation collapses
    // far below coefficient scale.
    let cubic = IntegerPolynomial::from_i64s(&[-1, 100, 0, 1]);
    let quad = IntegerPolynomial::from_i64s(&[-100, 10_000, 1]);
    let product = cubic.multiply(&quad);

    println!("P      = {product}");
    println!("coeffs = {}", product.to_comma_text());

    let report = roots::exponent(&product, 1e-6).expect("quintic with distinct roots");
    println!("H(P)   = {}", report.height);
    println!("sep in [{}, {}]", report.sep_lo, report.sep_hi);
    let (e_lo, e_hi) = report.e.clone().expect("height >= 2");
    println!("e(P) in [{}, {}]  (sep = H^-e)", e_lo, e_hi);

    let (i, j) = report.witness;
    let a = &report.roots.enclosures()[i];
    let b = &report.roots.enclosures()[j];
    println!(
        "closest pair: roots #{i} and #{j}, near {} (real: {}, {})",
        a.center_re().to_f64(),
        a.is_real(),
        b.is_real()
    );

    // The report is an enclosure, not an estimate: rerunning at a tighter
    // relative width yields a nested interval.
    let tight = roots::exponent(&product, 1e-9).unwrap();
    assert!(tight.sep_lo.cmp(&report.sep_lo) != std::cmp::Ordering::Less);
    assert!(tight.sep_hi.cmp(&report.sep_hi) != std::cmp::Ordering::Greater);
    println!("tightened: sep in [{}, {}]", tight.sep_lo, tight.sep_hi);
}
