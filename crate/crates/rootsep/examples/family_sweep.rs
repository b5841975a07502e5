//! Sweep the parametric close-pair families and watch the separation
//! exponent approach its predicted limit while the proven separation
//! bound holds at every member.
//!
//! ```sh
//! cargo run --release -p rootsep --example family_sweep
//! ```

use rootsep::families;

fn sweep(d: usize, ns: &[i64]) {
    let limit = families::limit_exponent(d);
    println!("degree {d}: predicted exponent {limit} = {:.6}", rat_f64(&limit));
    println!("{:>6} {:>14} {:>12} {:>12} {:>9}", "n", "height", "e_lo", "e_hi", "bound_ok");
    for &n in ns {
        let record = families::family_p(d, n).expect("valid parameters");
        let row = families::sweep_row(record, 1e-4).expect("certified sweep");
        let (e_lo, e_hi) = row.report.e.clone().expect("height >= 2");
        println!(
            "{:>6} {:>14} {:>12.7} {:>12.7} {:>9}",
            n,
            row.report.height,
            e_lo.to_f64(),
            e_hi.to_f64(),
            row.bound_ok
        );
    }
    println!();
}

fn rat_f64(r: &num_rational::BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap()
}

fn main() {
    // Quintic family: e -> 7/3.
    sweep(5, &[5, 10, 20, 50, 100, 200]);
    // Septic family: e -> 17/5.
    sweep(7, &[3, 5, 10, 20]);
    // Nonic family: e -> 31/7.
    sweep(9, &[2, 4, 6, 10]);

    // The s-family is a second quintic construction with a real close
    // pair and the same 7/3 prediction.
    println!("s family (quintics)");
    for n in [2i64, 5, 10, 20] {
        let row = families::sweep_row(families::record_s(n).unwrap(), 1e-4).unwrap();
        let (e_lo, _) = row.report.e.clone().unwrap();
        println!(
            "  n = {:>3}: H = {:>8}, e_lo = {:.6}, sep bound ok: {}",
            n, row.report.height, e_lo.to_f64(), row.bound_ok
        );
    }
}
