//! Randomized invariants: algebraic identities the certified machinery
//! must respect on arbitrary inputs, not just the curated examples.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use rootsep::poly::IntegerPolynomial;
use rootsep::{lattice, roots, survey, LatticeBasis};

fn dyadic_sq_as_rational(d: &rootsep::Dyadic) -> BigRational {
    let sq = d.mul(d);
    let (numer, denom) = sq.to_ratio_parts();
    BigRational::new(numer, denom)
}

/// Nonzero polynomial with the given coefficient range and degree range.
fn poly_strategy(
    degree: std::ops::RangeInclusive<usize>,
    coeff: i64,
) -> impl Strategy<Value = IntegerPolynomial> {
    degree
        .prop_flat_map(move |d| {
            (
                proptest::collection::vec(-coeff..=coeff, d),
                1..=coeff,
                prop::bool::ANY,
            )
        })
        .prop_map(|(mut coeffs, lead, neg)| {
            coeffs.push(if neg { -lead } else { lead });
            IntegerPolynomial::from_i64s(&coeffs)
        })
}

proptest! {
    /// For x^2 + bx + c the root distance is exactly sqrt(|b^2 - 4c|),
    /// whether the roots are real or conjugate; the certified enclosure
    /// must bracket it: sep_lo^2 <= |disc| <= sep_hi^2.
    #[test]
    fn quadratic_separation_squares_to_discriminant(
        b in -1_000i64..=1_000,
        c in -1_000i64..=1_000,
    ) {
        let disc = BigInt::from(b) * BigInt::from(b) - BigInt::from(4) * BigInt::from(c);
        prop_assume!(disc != BigInt::from(0));
        let p = IntegerPolynomial::from_i64s(&[c, b, 1]);
        let report = roots::sep(&p, 1e-6).unwrap();
        let target = BigRational::from_integer(disc.magnitude().clone().into());
        prop_assert!(dyadic_sq_as_rational(&report.sep_lo) <= target);
        prop_assert!(target <= dyadic_sq_as_rational(&report.sep_hi));
    }

    /// Gelfond's height inequality holds for every nonzero factor pair.
    #[test]
    fn gelfond_inequality_never_fails(
        q in poly_strategy(0..=4, 50),
        r in poly_strategy(0..=4, 50),
    ) {
        let check = survey::check_gelfond(&q, &r).unwrap();
        prop_assert!(check.pass, "lower {} upper {}", check.lower_margin, check.upper_margin);
    }

    /// H(P') <= d * H(P): differentiation multiplies each coefficient by
    /// at most its index.
    #[test]
    fn derivative_height_bounded_by_degree_times_height(
        p in poly_strategy(1..=8, 1_000),
    ) {
        let d = p.degree().unwrap();
        let bound = BigInt::from(d as u64) * p.height().unwrap();
        prop_assert!(p.derivative().height().unwrap() <= bound);
    }

    /// x -> -x negates every root, so height, separation, and exponent
    /// are unchanged; the two certified enclosures must overlap.
    #[test]
    fn separation_invariant_under_reflection(
        p in poly_strategy(2..=5, 30),
    ) {
        prop_assume!(p.discriminant().map(|d| d != BigInt::from(0)).unwrap_or(false));
        let flipped = p.flip_sign();
        let a = roots::sep(&p, 1e-4).unwrap();
        let b = roots::sep(&flipped, 1e-4).unwrap();
        prop_assert_eq!(&a.height, &b.height);
        prop_assert!(
            a.sep_lo.cmp(&b.sep_hi) != Ordering::Greater
                && b.sep_lo.cmp(&a.sep_hi) != Ordering::Greater,
            "sep enclosures are disjoint"
        );
        if let (Some((alo, ahi)), Some((blo, bhi))) = (&a.e, &b.e) {
            prop_assert!(
                alo.cmp(bhi) != Ordering::Greater && blo.cmp(ahi) != Ordering::Greater,
                "exponent enclosures are disjoint"
            );
        }
    }

    /// The Hermite normal form is a lattice invariant: permuting and
    /// negating rows never changes it.
    #[test]
    fn hermite_form_invariant_under_row_signs_and_order(
        entries in proptest::collection::vec(-50i64..=50, 9),
        perm in 0usize..6,
        signs in 0usize..8,
    ) {
        let rows: Vec<Vec<BigInt>> = entries
            .chunks(3)
            .map(|c| c.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let orders = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let shuffled: Vec<Vec<BigInt>> = orders[perm]
            .iter()
            .enumerate()
            .map(|(i, &src)| {
                let row = rows[src].clone();
                if signs >> i & 1 == 1 {
                    row.into_iter().map(|x| -x).collect()
                } else {
                    row
                }
            })
            .collect();
        let a = LatticeBasis::new(rows).unwrap().hermite_normal_form();
        let b = LatticeBasis::new(shuffled).unwrap().hermite_normal_form();
        prop_assert_eq!(a, b);
    }

    /// LLL reduction also preserves the lattice, on random nonsingular
    /// bases rather than the curated ones.
    #[test]
    fn reduction_preserves_hermite_form(
        entries in proptest::collection::vec(-100i64..=100, 9),
    ) {
        let rows: Vec<&[i64]> = entries.chunks(3).collect();
        let basis = LatticeBasis::from_i64s(&rows);
        let reduced = match lattice::lll_reduce(&basis, &lattice::default_delta()) {
            Ok(r) => r,
            Err(_) => return Ok(()), // singular draw
        };
        prop_assert_eq!(basis.hermite_normal_form(), reduced.hermite_normal_form());
    }

    /// The {1,1} enumeration is the unordered-pairs count m(m+1)/2 over
    /// m = 2*bound + 1 monic linear factors.
    #[test]
    fn linear_pair_enumeration_count(bound in 1i64..=6) {
        let pairs = survey::enumerate_reducible(2, &[1, 1], bound).unwrap();
        let m = (2 * bound + 1) as usize;
        prop_assert_eq!(pairs.len(), m * (m + 1) / 2);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The Mahler-based floor stays strictly below the true separation
    /// on random squarefree polynomials.
    #[test]
    fn mahler_floor_below_separation(
        p in poly_strategy(2..=4, 12),
    ) {
        prop_assume!(p.discriminant().map(|d| d != BigInt::from(0)).unwrap_or(false));
        prop_assert!(survey::floor_below_separation(&p, 1e-3));
    }
}
