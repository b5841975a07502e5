//! Certified complex root isolation: disjoint disks, multiplicities, and
//! realness flags.
//!
//! ```sh
//! cargo run --release -p rootsep --example root_isolation
//! ```

use rootsep::dyadic::Dyadic;
use rootsep::poly::IntegerPolynomial;
use rootsep::roots;

fn show(p: &IntegerPolynomial, target: &Dyadic) {
    println!("P = {p}");
    let rs = roots::isolate_roots(p, target).expect("degree >= 1");
    for (i, e) in rs.enclosures().iter().enumerate() {
        println!(
            "  root {i}: center ({:+.12}, {:+.12})  radius <= {:.3e}  mult {}  real: {}",
            e.center_re().to_f64(),
            e.center_im().to_f64(),
            e.radius().to_f64(),
            e.multiplicity(),
            e.is_real()
        );
    }
}

fn main() {
    let target = Dyadic::pow2(-40);

    // Simple roots, two real and two complex.
    show(
        &IntegerPolynomial::from_i64s(&[-2, 0, 1]).multiply(&IntegerPolynomial::from_i64s(&[1, 0, 1])),
        &target,
    );

    // A double root: (x - 1)^2 (x^2 - 2). Isolation certifies the
    // multiplicity instead of splitting the cluster.
    let double = IntegerPolynomial::from_i64s(&[1, -1])
        .multiply(&IntegerPolynomial::from_i64s(&[1, -1]))
        .multiply(&IntegerPolynomial::from_i64s(&[-2, 0, 1]));
    show(&double, &target);

    // Roots can be refined long past f64 resolution; enclosures stay
    // certified at every stage.
    let p = IntegerPolynomial::from_i64s(&[-1, 1_000_000, 0, 1]);
    let coarse = roots::isolate_roots(&p, &Dyadic::pow2(-20)).unwrap();
    let fine = roots::refine(&coarse, &Dyadic::pow2(-200)).unwrap();
    println!("P = {p}");
    for e in fine.enclosures() {
        println!(
            "  refined root near ({:+.6e}, {:+.6e}): radius <= 2^{}",
            e.center_re().to_f64(),
            e.center_im().to_f64(),
            e.radius().floor_log2().unwrap()
        );
    }
}
