//! Exhaustive-enumeration surveys on small factor spaces: the rankings
//! they return are deterministic, so their heads can be pinned exactly.

use std::collections::BTreeSet;

use rootsep::poly::IntegerPolynomial;
use rootsep::survey;

fn e_lo_f64(record: &rootsep::SurveyRecord) -> f64 {
    record
        .report
        .e_lo()
        .expect("survey keeps only exponent-defined products")
        .to_f64()
}

/// Over monic (quadratic, cubic) pairs with heights <= 2, the largest
/// exponents belong to the mirror pair (x^2-2)(x^3 -+ x^2 -+ 1).
#[test]
fn bound_two_survey_top_is_the_known_mirror_pair() {
    let records = survey::max_exponent_survey(5, &[2, 3], 2, 1e-2, 5).unwrap();
    assert_eq!(records.len(), 5);
    for record in &records {
        assert_eq!(record.shape, vec![2, 3]);
        assert!(record.factored.verify_product());
    }

    let top: BTreeSet<Vec<IntegerPolynomial>> = records[..2]
        .iter()
        .map(|r| r.factored.factors().to_vec())
        .collect();
    let quad = IntegerPolynomial::from_i64s(&[-2, 0, 1]);
    let expected: BTreeSet<Vec<IntegerPolynomial>> = [
        vec![quad.clone(), IntegerPolynomial::from_i64s(&[-1, 0, -1, 1])],
        vec![quad, IntegerPolynomial::from_i64s(&[1, 0, 1, 1])],
    ]
    .into_iter()
    .collect();
    assert_eq!(top, expected);
    for record in &records[..2] {
        let e = e_lo_f64(record);
        assert!((4.0..4.5).contains(&e), "top exponent {e}");
    }
}

/// A 16807-product space: the ranking is sorted, duplicate-free, within
/// the height bound, and its head dominates the bound-2 subspace.
#[test]
fn bound_three_survey_is_sorted_and_valid() {
    let records = survey::max_exponent_survey(5, &[2, 3], 3, 1e-2, 40).unwrap();
    assert_eq!(records.len(), 40);

    let e_los: Vec<f64> = records.iter().map(e_lo_f64).collect();
    assert!(
        e_los.windows(2).all(|w| w[0] >= w[1]),
        "ranking not descending: {e_los:?}"
    );
    assert!(e_los[0] >= 4.2, "head {} should dominate the bound-2 top", e_los[0]);

    let mut seen: BTreeSet<Vec<IntegerPolynomial>> = BTreeSet::new();
    for record in &records {
        assert!(record.factored.verify_product());
        for factor in record.factored.factors() {
            assert!(factor.is_monic());
            assert!(factor.height().unwrap() <= 3.into());
        }
        assert!(
            seen.insert(record.factored.factors().to_vec()),
            "duplicate factorization in ranking"
        );
    }
}
