//! Integer-lattice reduction and the close-root search.
//!
//! Given a real algebraic number `gamma` (a root of a monic cubic) and a
//! scale `N`, the row lattice
//!
//! ```text
//! (1, 0, N)
//! (0, 1, round(N*gamma))
//! (0, 0, round(N*gamma^2))
//! ```
//!
//! encodes approximate vanishing: an integer combination `a*row1 + b*row2 +
//! c*row3` is `(a, b, a*N + b*round(N*gamma) + c*round(N*gamma^2))`, whose
//! last coordinate is small exactly when `|a + b*gamma + c*gamma^2|` is
//! small. Short vectors of the LLL-reduced basis therefore decode into
//! quadratics `c x^2 + b x + a` with a root near `gamma`, and pairing them
//! with the cubic yields reducible quintics with close root pairs. The
//! reduction is exact (`BigRational` Gram–Schmidt), so there are no
//! floating-point soundness caveats at dimension 3.

use crate::dyadic::Dyadic;
use crate::interval::RealInterval;
use crate::poly::IntegerPolynomial;
use crate::roots::{self, SepError, SeparationReport};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("insufficient gamma precision")]
    InsufficientGammaPrecision,
    #[error("dependent rows")]
    DependentRows,
    #[error("no real root")]
    NoRealRoot,
    #[error("invalid lattice input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Sep(#[from] SepError),
}

/// A row basis of an integer lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeBasis {
    rows: Vec<Vec<BigInt>>,
}

impl LatticeBasis {
    pub fn new(rows: Vec<Vec<BigInt>>) -> Result<Self, LatticeError> {
        if rows.is_empty() {
            return Err(LatticeError::Invalid("empty basis".into()));
        }
        let width = rows[0].len();
        if width == 0 || rows.iter().any(|r| r.len() != width) {
            return Err(LatticeError::Invalid(
                "rows must be nonempty and of equal length".into(),
            ));
        }
        Ok(LatticeBasis { rows })
    }

    pub fn from_i64s(rows: &[&[i64]]) -> Self {
        LatticeBasis::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
        .expect("literal basis is well-formed")
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Canonical Hermite normal form of the row lattice (zero rows
    /// dropped): two bases generate the same lattice iff their forms agree.
    pub fn hermite_normal_form(&self) -> Vec<Vec<BigInt>> {
        let mut m = self.rows.clone();
        let rows = m.len();
        let cols = m[0].len();
        let mut pivot_row = 0usize;
        for col in 0..cols {
            if pivot_row == rows {
                break;
            }
            loop {
                let nonzero: Vec<usize> = (pivot_row..rows)
                    .filter(|&r| !m[r][col].is_zero())
                    .collect();
                if nonzero.is_empty() {
                    break;
                }
                let r_min = *nonzero
                    .iter()
                    .min_by_key(|&&r| m[r][col].abs())
                    .unwrap();
                m.swap(pivot_row, r_min);
                let rest: Vec<usize> = (pivot_row + 1..rows)
                    .filter(|&r| !m[r][col].is_zero())
                    .collect();
                if rest.is_empty() {
                    // Pivot isolated: normalize sign, reduce entries above.
                    if m[pivot_row][col].is_negative() {
                        for v in m[pivot_row].iter_mut() {
                            *v = -&*v;
                        }
                    }
                    for r in 0..pivot_row {
                        let q = m[r][col].div_floor(&m[pivot_row][col]);
                        if !q.is_zero() {
                            for c in 0..cols {
                                let t = &m[r][c] - &q * &m[pivot_row][c];
                                m[r][c] = t;
                            }
                        }
                    }
                    pivot_row += 1;
                    break;
                }
                for r in rest {
                    // Truncated division strictly shrinks |m[r][col]|.
                    let (q, _) = m[r][col].div_rem(&m[pivot_row][col]);
                    for c in 0..cols {
                        let t = &m[r][c] - &q * &m[pivot_row][c];
                        m[r][c] = t;
                    }
                }
            }
        }
        m.retain(|r| r.iter().any(|v| !v.is_zero()));
        m
    }
}

/// One discovery of the close-root search: a (cubic, quadratic) pair whose
/// product has a certified close root pair.
#[derive(Debug, Clone)]
pub struct SearchHit {
    pub cubic: IntegerPolynomial,
    pub quadratic: IntegerPolynomial,
    /// Enclosure of the cubic's real root the lattice was built around.
    pub gamma_enclosure: RealInterval,
    /// Separation/exponent report of the exact expanded product.
    pub pair_exponent: SeparationReport,
    /// The lattice scale at which the quadratic was first decoded.
    pub lattice_n: BigInt,
}

pub fn default_delta() -> BigRational {
    BigRational::new(BigInt::from(99), BigInt::from(100))
}

/// Geometric scale ladder 10^3, 10^4, ..., 10^12.
pub fn default_n_ladder() -> Vec<BigInt> {
    (3u32..=12).map(|e| BigInt::from(10).pow(e)).collect()
}

/// Default bound on integer combinations of reduced basis vectors when
/// decoding quadratics. The close-pair family quadratics are short lattice
/// vectors but not the shortest ones (a cubic algebraic number admits
/// better generic approximants), and they show up with combination
/// coordinates of size up to 3 relative to the reduced basis.
pub const DEFAULT_COMBO_BOUND: i64 = 3;

// ---------------------------------------------------------------------------
// Exact LLL.

type Rat = BigRational;

fn rat_dot_int(a: &[BigInt], b: &[Rat]) -> Rat {
    a.iter()
        .zip(b)
        .fold(Rat::zero(), |acc, (x, y)| acc + Rat::from_integer(x.clone()) * y)
}

fn rat_dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).fold(Rat::zero(), |acc, (x, y)| acc + x * y)
}

/// Gram–Schmidt data `(mu, |b*_i|^2)`; `None` when the rows are dependent.
fn gram_schmidt(rows: &[Vec<BigInt>]) -> Option<(Vec<Vec<Rat>>, Vec<Rat>)> {
    let n = rows.len();
    let mut mu = vec![vec![Rat::zero(); n]; n];
    let mut bstar: Vec<Vec<Rat>> = Vec::with_capacity(n);
    let mut norms: Vec<Rat> = Vec::with_capacity(n);
    for (i, row) in rows.iter().enumerate() {
        let mut v: Vec<Rat> = row.iter().map(|x| Rat::from_integer(x.clone())).collect();
        for j in 0..i {
            let m = rat_dot_int(row, &bstar[j]) / norms[j].clone();
            for (vc, bc) in v.iter_mut().zip(&bstar[j]) {
                *vc -= &m * bc;
            }
            mu[i][j] = m;
        }
        let norm = rat_dot(&v, &v);
        if norm.is_zero() {
            return None;
        }
        bstar.push(v);
        norms.push(norm);
    }
    Some((mu, norms))
}

fn nearest_int(q: &Rat) -> BigInt {
    (q + Rat::new(BigInt::one(), BigInt::from(2))).floor().to_integer()
}

/// Exact LLL reduction with parameter `delta` in (1/4, 1). The output
/// basis generates the same lattice, is size-reduced (`|mu_{i,j}| <= 1/2`)
/// and satisfies the Lovasz condition at every consecutive pair.
pub fn lll_reduce(basis: &LatticeBasis, delta: &Rat) -> Result<LatticeBasis, LatticeError> {
    let quarter = Rat::new(BigInt::one(), BigInt::from(4));
    if *delta <= quarter || *delta >= Rat::one() {
        return Err(LatticeError::Invalid(format!(
            "delta = {delta} outside (1/4, 1)"
        )));
    }
    let mut rows = basis.rows.clone();
    let n = rows.len();
    let (mut mu, mut norms) = gram_schmidt(&rows).ok_or(LatticeError::DependentRows)?;
    let half = Rat::new(BigInt::one(), BigInt::from(2));
    let mut k = 1usize;
    while k < n {
        for j in (0..k).rev() {
            if mu[k][j].abs() > half {
                let r = nearest_int(&mu[k][j]);
                for c in 0..rows[k].len() {
                    let t = &rows[k][c] - &r * &rows[j][c];
                    rows[k][c] = t;
                }
                let gs = gram_schmidt(&rows).expect("size reduction keeps rank");
                mu = gs.0;
                norms = gs.1;
            }
        }
        let lovasz_rhs = (delta - &mu[k][k - 1] * &mu[k][k - 1]) * &norms[k - 1];
        if norms[k] >= lovasz_rhs {
            k += 1;
        } else {
            rows.swap(k, k - 1);
            let gs = gram_schmidt(&rows).expect("swap keeps rank");
            mu = gs.0;
            norms = gs.1;
            k = k.max(2) - 1;
        }
    }
    Ok(LatticeBasis { rows })
}

// ---------------------------------------------------------------------------
// The gamma lattice and its decoding.

/// `round(N * gamma)` and `round(N * gamma^2)` (nearest, ties away from
/// zero), or an error when the ball is too wide to round unambiguously.
fn gamma_rounds(gamma: &RealInterval, n: &BigInt) -> Result<(BigInt, BigInt), LatticeError> {
    let prec = 256;
    let ng = gamma.mul_bigint(n, prec);
    let ng2 = gamma.mul(gamma, prec).mul_bigint(n, prec);
    let round_unambiguous = |iv: &RealInterval| -> Option<BigInt> {
        let lo = iv.lo().nearest_to_bigint();
        let hi = iv.hi().nearest_to_bigint();
        (lo == hi).then_some(lo)
    };
    let q1 = round_unambiguous(&ng).ok_or(LatticeError::InsufficientGammaPrecision)?;
    let q2 = round_unambiguous(&ng2).ok_or(LatticeError::InsufficientGammaPrecision)?;
    Ok((q1, q2))
}

/// Builds the rows `(1, 0, N)`, `(0, 1, round(N*gamma))`,
/// `(0, 0, round(N*gamma^2))`. Requires the ball tight enough that both
/// roundings are unambiguous.
pub fn build_gamma_lattice(
    gamma: &RealInterval,
    n: &BigInt,
) -> Result<LatticeBasis, LatticeError> {
    if !n.is_positive() {
        return Err(LatticeError::Invalid(format!("N = {n}, need N >= 1")));
    }
    let (q1, q2) = gamma_rounds(gamma, n)?;
    if q2.is_zero() {
        // gamma^2 below rounding resolution: the lattice degenerates and no
        // quadratic can be decoded at this scale.
        return Err(LatticeError::Invalid(
            "N * gamma^2 rounds to zero".into(),
        ));
    }
    LatticeBasis::new(vec![
        vec![BigInt::one(), BigInt::zero(), n.clone()],
        vec![BigInt::zero(), BigInt::one(), q1],
        vec![BigInt::zero(), BigInt::zero(), q2],
    ])
}

/// Decodes basis vectors and all integer combinations with coefficients
/// bounded by `combo_bound` into quadratics `c x^2 + b x + a` (leading
/// coefficient normalized positive, degenerate `c = 0` decodes dropped),
/// deduplicated and sorted by ascending coefficients.
pub fn quadratic_candidates(
    reduced: &LatticeBasis,
    n: &BigInt,
    gamma: &RealInterval,
    combo_bound: i64,
) -> Result<Vec<IntegerPolynomial>, LatticeError> {
    if reduced.dim() != 3 {
        return Err(LatticeError::Invalid(format!(
            "expected 3 rows, got {}",
            reduced.dim()
        )));
    }
    let (q1, q2) = gamma_rounds(gamma, n)?;
    if q2.is_zero() {
        return Err(LatticeError::Invalid("N * gamma^2 rounds to zero".into()));
    }
    let mut combos: Vec<[i64; 3]> = Vec::new();
    if combo_bound <= 0 {
        combos.extend([[1, 0, 0], [0, 1, 0], [0, 0, 1]]);
    } else {
        let b = combo_bound;
        for u in -b..=b {
            for v in -b..=b {
                for w in -b..=b {
                    if (u, v, w) != (0, 0, 0) {
                        combos.push([u, v, w]);
                    }
                }
            }
        }
    }
    let mut seen: BTreeMap<Vec<BigInt>, ()> = BTreeMap::new();
    for combo in combos {
        let mut vec = vec![BigInt::zero(); 3];
        for (coef, row) in combo.iter().zip(reduced.rows()) {
            if *coef == 0 {
                continue;
            }
            let c = BigInt::from(*coef);
            for (acc, entry) in vec.iter_mut().zip(row) {
                *acc += &c * entry;
            }
        }
        let (a, b, m) = (vec[0].clone(), vec[1].clone(), vec[2].clone());
        // Recover c from m = a*N + b*round(N*gamma) + c*round(N*gamma^2):
        // exact by construction of the lattice.
        let (c, rem) = (&m - &a * n - &b * &q1).div_rem(&q2);
        debug_assert!(rem.is_zero(), "lattice vector must decode exactly");
        if c.is_zero() {
            continue;
        }
        let mut coeffs = vec![a, b, c];
        if coeffs[2].is_negative() {
            for v in coeffs.iter_mut() {
                *v = -&*v;
            }
        }
        seen.insert(coeffs, ());
    }
    Ok(seen
        .into_keys()
        .map(IntegerPolynomial::new)
        .filter(|q| q.degree() == Some(2))
        .collect())
}

/// For every real root `gamma` of the monic cubic and every `N` in the
/// ladder: build the gamma lattice, LLL-reduce, decode monic quadratic
/// candidates, expand the exact products, and keep pairs whose exponent
/// lower bound reaches the threshold. Each quadratic is reported once, at
/// the smallest `N` where it decodes; output is sorted by `e_lo`
/// descending, ties by quadratic coefficients.
pub fn close_root_search(
    cubic: &IntegerPolynomial,
    n_ladder: &[BigInt],
    exponent_threshold: &BigRational,
    rel_width: f64,
    combo_bound: i64,
) -> Result<Vec<SearchHit>, LatticeError> {
    if cubic.degree() != Some(3) || !cubic.is_monic() {
        return Err(LatticeError::Invalid(format!(
            "search expects a monic cubic, got {cubic}"
        )));
    }
    let delta = default_delta();
    let base = roots::isolate_roots(cubic, &Dyadic::pow2(-64))?;
    let real_count = base.enclosures().iter().filter(|e| e.is_real()).count();
    if real_count == 0 {
        return Err(LatticeError::NoRealRoot);
    }
    let mut best: BTreeMap<Vec<BigInt>, SearchHit> = BTreeMap::new();
    for n in n_ladder {
        if !n.is_positive() {
            return Err(LatticeError::Invalid(format!("N = {n}, need N >= 1")));
        }
        // Refine gamma until both lattice roundings are unambiguous.
        let mut target = Dyadic::pow2(-(n.bits() as i64 + 12));
        let mut prepared: Option<(Vec<(RealInterval, LatticeBasis)>, ())> = None;
        for _ in 0..20 {
            let rs = roots::isolate_roots(cubic, &target)?;
            let mut per_root = Vec::new();
            let mut ambiguous = false;
            for e in rs.enclosures().iter().filter(|e| e.is_real()) {
                let gamma = RealInterval::new(
                    e.center_re().sub(e.radius()),
                    e.center_re().add(e.radius()),
                );
                match build_gamma_lattice(&gamma, n) {
                    Ok(basis) => per_root.push(Some((gamma, basis))),
                    Err(LatticeError::InsufficientGammaPrecision) => {
                        ambiguous = true;
                        break;
                    }
                    // Degenerate scale for this root (e.g. gamma^2 too
                    // small for N): skip the root at this N.
                    Err(LatticeError::Invalid(_)) => per_root.push(None),
                    Err(other) => return Err(other),
                }
            }
            if !ambiguous {
                prepared = Some((per_root.into_iter().flatten().collect(), ()));
                break;
            }
            target = target.mul_pow2(-16);
        }
        let (lattices, ()) = prepared.ok_or(LatticeError::InsufficientGammaPrecision)?;
        for (gamma, basis) in lattices {
            let reduced = lll_reduce(&basis, &delta)?;
            let candidates = quadratic_candidates(&reduced, n, &gamma, combo_bound)?;
            for quad in candidates {
                if !quad.is_monic() {
                    continue;
                }
                if best.contains_key(quad.coeffs()) {
                    continue;
                }
                let product = cubic.multiply(&quad);
                let report = match roots::exponent(&product, rel_width) {
                    Ok(r) => r,
                    Err(_) => continue, // shared roots or undefined exponent
                };
                let e_lo = match &report.e {
                    Some((lo, _)) => lo.clone(),
                    None => continue,
                };
                let reaches = e_lo
                    .mul_bigint(exponent_threshold.denom())
                    .cmp(&Dyadic::from_bigint(exponent_threshold.numer().clone()))
                    != Ordering::Less;
                if !reaches {
                    continue;
                }
                best.insert(
                    quad.coeffs().to_vec(),
                    SearchHit {
                        cubic: cubic.clone(),
                        quadratic: quad,
                        gamma_enclosure: gamma.clone(),
                        pair_exponent: report,
                        lattice_n: n.clone(),
                    },
                );
            }
        }
    }
    let mut hits: Vec<SearchHit> = best.into_values().collect();
    hits.sort_by(|a, b| {
        let ea = a.pair_exponent.e.as_ref().unwrap().0.clone();
        let eb = b.pair_exponent.e.as_ref().unwrap().0.clone();
        eb.cmp(&ea)
            .then_with(|| a.quadratic.coeffs().cmp(b.quadratic.coeffs()))
    });
    Ok(hits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyadic::Round;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn p(coeffs: &[i64]) -> IntegerPolynomial {
        IntegerPolynomial::from_i64s(coeffs)
    }

    fn norm_sq(v: &[BigInt]) -> BigInt {
        v.iter().map(|x| x * x).sum()
    }

    #[test]
    fn identity_basis_is_fixed_point() {
        let id = LatticeBasis::from_i64s(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let out = lll_reduce(&id, &default_delta()).unwrap();
        assert_eq!(out.rows(), id.rows());
    }

    #[test]
    fn gauss_step_reduces_2d_basis() {
        let b = LatticeBasis::from_i64s(&[&[1, 0], &[4, 1]]);
        let out = lll_reduce(&b, &default_delta()).unwrap();
        // Normalize row signs and order for comparison.
        let mut rows: Vec<Vec<BigInt>> = out
            .rows()
            .iter()
            .map(|r| {
                let first = r.iter().find(|v| !v.is_zero()).unwrap();
                if first.is_negative() {
                    r.iter().map(|v| -v).collect()
                } else {
                    r.clone()
                }
            })
            .collect();
        rows.sort();
        assert_eq!(
            rows,
            vec![
                vec![BigInt::from(0), BigInt::from(1)],
                vec![BigInt::from(1), BigInt::from(0)]
            ]
        );
    }

    #[test]
    fn dependent_rows_are_rejected() {
        let b = LatticeBasis::from_i64s(&[&[1, 2], &[2, 4]]);
        assert_eq!(
            lll_reduce(&b, &default_delta()).unwrap_err(),
            LatticeError::DependentRows
        );
    }

    #[test]
    fn delta_out_of_range_is_rejected() {
        let id = LatticeBasis::from_i64s(&[&[1]]);
        let one = Rat::one();
        assert!(matches!(
            lll_reduce(&id, &one),
            Err(LatticeError::Invalid(_))
        ));
    }

    #[test]
    fn gamma_lattice_for_exact_rationals() {
        // gamma = 1/2 (exactly dyadic), N = 10^6.
        let g = RealInterval::exact(Dyadic::from_f64(0.5));
        let b = build_gamma_lattice(&g, &BigInt::from(1_000_000)).unwrap();
        assert_eq!(
            b.rows(),
            LatticeBasis::from_i64s(&[
                &[1, 0, 1_000_000],
                &[0, 1, 500_000],
                &[0, 0, 250_000]
            ])
            .rows()
        );
        // gamma = 1/3 via a tight directed enclosure, N = 9.
        let third = RealInterval::new(
            Dyadic::div(&Dyadic::one(), &Dyadic::from_i64(3), 160, Round::Floor),
            Dyadic::div(&Dyadic::one(), &Dyadic::from_i64(3), 160, Round::Ceil),
        );
        let b9 = build_gamma_lattice(&third, &BigInt::from(9)).unwrap();
        assert_eq!(
            b9.rows(),
            LatticeBasis::from_i64s(&[&[1, 0, 9], &[0, 1, 3], &[0, 0, 1]]).rows()
        );
    }

    #[test]
    fn wide_gamma_ball_is_rejected() {
        let wide = RealInterval::new(Dyadic::from_f64(0.49), Dyadic::from_f64(0.51));
        let err = build_gamma_lattice(&wide, &BigInt::from(1_000_000)).unwrap_err();
        assert_eq!(err.to_string(), "insufficient gamma precision");
    }

    #[test]
    fn basis_vectors_alone_give_at_most_three_candidates() {
        let g = RealInterval::exact(Dyadic::from_f64(0.5));
        let n = BigInt::from(1_000_000);
        let basis = build_gamma_lattice(&g, &n).unwrap();
        let reduced = lll_reduce(&basis, &default_delta()).unwrap();
        let cands = quadratic_candidates(&reduced, &n, &g, 0).unwrap();
        assert!(cands.len() <= 3);
    }

    #[test]
    fn reduced_bases_meet_lll_guarantees() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let delta = default_delta();
        let mut tested = 0;
        while tested < 20 {
            let rows: Vec<Vec<BigInt>> = (0..3)
                .map(|_| (0..3).map(|_| BigInt::from(rng.gen_range(-50i64..=50))).collect())
                .collect();
            let basis = match LatticeBasis::new(rows) {
                Ok(b) => b,
                Err(_) => continue,
            };
            let reduced = match lll_reduce(&basis, &delta) {
                Ok(r) => r,
                Err(LatticeError::DependentRows) => continue,
                Err(e) => panic!("unexpected error: {e}"),
            };
            tested += 1;

            // Same lattice: canonical Hermite forms coincide.
            assert_eq!(basis.hermite_normal_form(), reduced.hermite_normal_form());

            // Size reduction and the Lovasz condition hold exactly.
            let (mu, norms) = gram_schmidt(reduced.rows()).unwrap();
            let half = Rat::new(BigInt::one(), BigInt::from(2));
            for i in 0..3 {
                for j in 0..i {
                    assert!(mu[i][j].abs() <= half);
                }
            }
            for k in 1..3 {
                let rhs = (&delta - &mu[k][k - 1] * &mu[k][k - 1]) * &norms[k - 1];
                assert!(norms[k] >= rhs);
            }

            // First vector within the LLL approximation factor
            // 2^{(dim-1)/2} of the shortest vector (squared: factor 4),
            // with the shortest found by exhaustive small-coordinate
            // enumeration over the reduced basis.
            let mut min_sq: Option<BigInt> = None;
            for u in -12i64..=12 {
                for v in -12i64..=12 {
                    for w in -12i64..=12 {
                        if (u, v, w) == (0, 0, 0) {
                            continue;
                        }
                        let vec: Vec<BigInt> = (0..3)
                            .map(|c| {
                                BigInt::from(u) * &reduced.rows()[0][c]
                                    + BigInt::from(v) * &reduced.rows()[1][c]
                                    + BigInt::from(w) * &reduced.rows()[2][c]
                            })
                            .collect();
                        let ns = norm_sq(&vec);
                        if min_sq.as_ref().map_or(true, |m| &ns < m) {
                            min_sq = Some(ns);
                        }
                    }
                }
            }
            let first_sq = norm_sq(&reduced.rows()[0]);
            assert!(first_sq <= BigInt::from(4) * min_sq.unwrap());
        }
    }

    #[test]
    fn candidates_evaluate_small_at_gamma() {
        // Every decoded quadratic satisfies
        // |Q(gamma)| <= (|vector| + (|b|+|c|)/2) / N.
        let cubic = p(&[-1, 10, 0, 1]);
        let rs = roots::isolate_roots(&cubic, &Dyadic::pow2(-160)).unwrap();
        let e = rs.enclosures().iter().find(|e| e.is_real()).unwrap();
        let gamma = RealInterval::new(
            e.center_re().sub(e.radius()),
            e.center_re().add(e.radius()),
        );
        let n = BigInt::from(10_000);
        let basis = build_gamma_lattice(&gamma, &n).unwrap();
        let reduced = lll_reduce(&basis, &default_delta()).unwrap();
        for quad in quadratic_candidates(&reduced, &n, &gamma, 1).unwrap() {
            let image = quad.eval_interval(&gamma, 256);
            let q_at_gamma_hi = Dyadic::max(&image.lo().abs(), &image.hi().abs());
            let a = quad.coeff(0);
            let b = quad.coeff(1);
            let c = quad.coeff(2);
            let (q1, q2) = gamma_rounds(&gamma, &n).unwrap();
            let m = &a * &n + &b * &q1 + &c * &q2;
            let norm = Dyadic::sqrt(
                &Dyadic::from_bigint(&a * &a + &b * &b + &m * &m),
                96,
                Round::Ceil,
            );
            let slack = Dyadic::from_bigint(b.abs() + c.abs()).mul_pow2(-1);
            let bound = Dyadic::div(
                &norm.add(&slack),
                &Dyadic::from_bigint(n.clone()),
                96,
                Round::Ceil,
            );
            assert!(q_at_gamma_hi.cmp(&bound) != Ordering::Greater);
        }
    }

    #[test]
    fn search_rediscovers_close_pair_quintic() {
        // Cubic x^3 + 10x - 1: the search must surface x^2 + 100x - 10,
        // whose product has exponent ~2.335.
        let ladder = [BigInt::from(1_000_000), BigInt::from(10_000_000)];
        let threshold = Rat::new(BigInt::from(11), BigInt::from(5)); // 2.2
        let hits = close_root_search(
            &p(&[-1, 10, 0, 1]),
            &ladder,
            &threshold,
            1e-3,
            DEFAULT_COMBO_BOUND,
        )
        .unwrap();
        let target = p(&[-10, 100, 1]);
        let hit = hits
            .iter()
            .find(|h| h.quadratic == target)
            .expect("family quadratic rediscovered");
        let (e_lo, _) = hit.pair_exponent.e.clone().unwrap();
        assert!(e_lo.to_f64() > 2.2);

        // The quadratic's real root sits within sep_hi of a cubic root.
        let quad_roots = roots::isolate_roots(&hit.quadratic, &Dyadic::pow2(-96)).unwrap();
        let cubic_roots = roots::isolate_roots(&hit.cubic, &Dyadic::pow2(-96)).unwrap();
        let mut min_cross: Option<Dyadic> = None;
        for q in quad_roots.enclosures() {
            for c in cubic_roots.enclosures() {
                let (lo, _) = roots::pair_distance_bounds(q, c);
                if min_cross.as_ref().map_or(true, |m| lo.cmp(m) == Ordering::Less) {
                    min_cross = Some(lo);
                }
            }
        }
        assert!(min_cross.unwrap().cmp(&hit.pair_exponent.sep_hi) != Ordering::Greater);
    }

    #[test]
    fn search_rediscovers_second_family_quadratic() {
        // Cubic x^3 - 4x^2 - 2x + 2: its close-pair partner x^2 - 12x + 6
        // decodes at N = 10^4; the pair exponent is ~1.813.
        let ladder = [BigInt::from(10_000)];
        let threshold = Rat::new(BigInt::from(9), BigInt::from(5)); // 1.8
        let hits = close_root_search(
            &p(&[2, -2, -4, 1]),
            &ladder,
            &threshold,
            1e-3,
            DEFAULT_COMBO_BOUND,
        )
        .unwrap();
        assert!(hits.iter().any(|h| h.quadratic == p(&[6, -12, 1])));
    }

    #[test]
    fn absurd_threshold_gives_empty_list() {
        let hits = close_root_search(
            &p(&[-1, 10, 0, 1]),
            &[BigInt::from(1000)],
            &Rat::from_integer(BigInt::from(100)),
            1e-3,
            DEFAULT_COMBO_BOUND,
        )
        .unwrap();
        assert!(hits.is_empty());
    }

    #[test]
    fn search_is_deterministic() {
        let ladder = [BigInt::from(10_000)];
        let threshold = Rat::new(BigInt::from(9), BigInt::from(5));
        let run = || {
            close_root_search(&p(&[2, -2, -4, 1]), &ladder, &threshold, 1e-3, 3)
                .unwrap()
                .into_iter()
                .map(|h| {
                    (
                        h.quadratic.coeffs().to_vec(),
                        h.lattice_n,
                        h.pair_exponent.e.unwrap().0,
                    )
                })
                .collect::<Vec<_>>()
        };
        assert_eq!(run(), run());
    }

    #[test]
    fn search_rejects_bad_cubic() {
        assert!(matches!(
            close_root_search(
                &p(&[1, 1]),
                &[BigInt::from(1000)],
                &Rat::one(),
                1e-3,
                2
            ),
            Err(LatticeError::Invalid(_))
        ));
        assert!(matches!(
            close_root_search(
                &p(&[-1, 0, 0, 2]),
                &[BigInt::from(1000)],
                &Rat::one(),
                1e-3,
                2
            ),
            Err(LatticeError::Invalid(_))
        ));
    }
}
