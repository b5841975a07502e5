//! Rediscover a close-pair quadratic partner for a monic cubic by lattice
//! reduction: short vectors of the gamma lattice decode into quadratics
//! nearly vanishing at the cubic's real root.
//!
//! ```sh
//! cargo run --release -p rootsep --example close_root_search
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use rootsep::lattice;
use rootsep::poly::IntegerPolynomial;

fn main() {
    let cubic = IntegerPolynomial::from_i64s(&[-1, 10, 0, 1]);
    println!("cubic: {cubic}");

    // Keep pairs whose separation exponent certifiably reaches 2.2.
    let threshold = BigRational::new(BigInt::from(11), BigInt::from(5));
    let ladder: Vec<BigInt> = (4u32..=8).map(|e| BigInt::from(10).pow(e)).collect();
    let hits = lattice::close_root_search(
        &cubic,
        &ladder,
        &threshold,
        1e-4,
        lattice::DEFAULT_COMBO_BOUND,
    )
    .expect("monic cubic");

    println!("{} hit(s) with e_lo >= 2.2:", hits.len());
    for hit in &hits {
        let (e_lo, e_hi) = hit.pair_exponent.e.clone().unwrap();
        println!(
            "  quadratic {:<18} first seen at N = 10^{}  e in [{:.6}, {:.6}]  H = {}",
            hit.quadratic.to_string(),
            hit.lattice_n.to_string().len() - 1,
            e_lo.to_f64(),
            e_hi.to_f64(),
            hit.pair_exponent.height
        );
    }

    // The analytically constructed partner is among them.
    let expected = IntegerPolynomial::from_i64s(&[-10, 100, 1]);
    assert!(
        hits.iter().any(|h| h.quadratic == expected),
        "x^2+100x-10 should be rediscovered"
    );
    println!("rediscovered the family partner {expected}");
}
