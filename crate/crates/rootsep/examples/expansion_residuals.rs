//! The close root pairs of the two quintic families admit asymptotic
//! expansions in 1/n; this example measures the truncation residuals with
//! certified enclosures and shows them settling at their limiting
//! constants instead of growing.
//!
//! ```sh
//! cargo run --release -p rootsep --example expansion_residuals
//! ```

use rootsep::families::{self, FamilyId, WhichRoot};

fn main() {
    // p family: both close roots match their truncated series to
    // O(1/n^10); the scaled residuals tend to -12 and -5.
    println!("p family: residual * n^10 (cubic root, quadratic root)");
    for n in [10i64, 20, 40, 80] {
        let r1 = families::expansion_residual(FamilyId::P, n, WhichRoot::One).unwrap();
        let r2 = families::expansion_residual(FamilyId::P, n, WhichRoot::Two).unwrap();
        println!(
            "  n = {:>3}: {:>10.5}  {:>10.5}",
            n,
            r1.midpoint().to_f64(),
            r2.midpoint().to_f64()
        );
    }

    // s family: expansions agree through 1/n^6 and differ first at
    // 1/(4 n^7); the n^8-scaled residuals tend to -1/2 and -5/4.
    println!("s family: residual * n^8 (quadratic root, cubic root)");
    for n in [10i64, 20, 40, 80] {
        let r1 = families::expansion_residual(FamilyId::S, n, WhichRoot::One).unwrap();
        let r2 = families::expansion_residual(FamilyId::S, n, WhichRoot::Two).unwrap();
        println!(
            "  n = {:>3}: {:>10.5}  {:>10.5}",
            n,
            r1.midpoint().to_f64(),
            r2.midpoint().to_f64()
        );
    }

    // The two series differ by exactly 1/(4n^7) at truncation order, so
    // the close-pair gap satisfies (beta - alpha) * 4n^7 = 1 + 4(r2 -
    // r1)/n -> 1: the gap really does scale like 1/(4n^7).
    println!("s family: (beta - alpha) * 4n^7");
    for n in [10i64, 20, 40] {
        let r1 = families::expansion_residual(FamilyId::S, n, WhichRoot::One).unwrap();
        let r2 = families::expansion_residual(FamilyId::S, n, WhichRoot::Two).unwrap();
        let correction = r2.sub(&r1, 192).mul_pow2(2).midpoint().to_f64() / n as f64;
        println!("  n = {:>3}: {:.6}", n, 1.0 + correction);
    }
}
