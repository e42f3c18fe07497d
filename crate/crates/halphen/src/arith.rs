//! Exact integers, exact rationals, restricted binomials, and the Euclidean
//! parameter decompositions shared by every bound formula.
//!
//! All arithmetic in this crate is exact: arbitrary-precision integers and
//! rationals, no floating point anywhere. Every inequality we verify is a
//! strict relation between exact quantities, so a single rounding step would
//! make the verdicts worthless.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Arbitrary-precision integer used throughout.
pub type Int = BigInt;

/// Exact rational number built on [`Int`].
pub type Rat = BigRational;

/// Build an [`Int`] from a machine integer.
pub fn int(v: i64) -> Int {
    Int::from(v)
}

/// Build an integer-valued [`Rat`] from a machine integer.
pub fn rat(v: i64) -> Rat {
    Rat::from_integer(Int::from(v))
}

/// Exact fraction `n/d`; panics if `d` is zero.
pub fn frac(n: Int, d: Int) -> Rat {
    Rat::new(n, d)
}

/// View an [`Int`] as a [`Rat`].
pub fn rat_of(n: &Int) -> Rat {
    Rat::from_integer(n.clone())
}

/// Euclidean division by a positive modulus: `a = q·b + r` with `0 ≤ r < b`.
///
/// Floor division agrees with Euclidean division for positive `b`, which is
/// the only case the formulas use.
pub fn div_rem_euclid(a: &Int, b: &Int) -> (Int, Int) {
    debug_assert!(b.is_positive(), "division by non-positive modulus");
    a.div_mod_floor(b)
}

/// `binom(a, b)` for `b ∈ {0, 1, 2}`, with the convention `binom(a, b) = 0`
/// whenever `a < b`. Only these three lower indices occur in the formulas.
///
/// `b > 2` is a contract violation and panics.
pub fn restricted_binomial(a: &Int, b: u8) -> Int {
    assert!(b <= 2, "restricted_binomial: b must be 0, 1 or 2 (got {b})");
    if *a < int(i64::from(b)) {
        return Int::zero();
    }
    match b {
        0 => Int::one(),
        1 => a.clone(),
        _ => (a * (a - 1i32)) / 2i32,
    }
}

/// The input triple: curve degree `d`, surface-degree floor `s` and
/// hypersurface-degree floor `t` of the flag condition.
///
/// A curve satisfies the flag condition of type `(s, t)` when it lies on no
/// surface of degree `< s` and on no hypersurface of degree `< t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagParams {
    pub d: Int,
    pub s: Int,
    pub t: Int,
}

impl FlagParams {
    /// Validates `d ≥ 1`, `s ≥ 3`, `t ≥ 3`.
    ///
    /// No relation between `s` and `t` is enforced here; range conditions
    /// such as `s ≤ t²−t` belong to the operations that need them.
    pub fn new(d: Int, s: Int, t: Int) -> Result<Self> {
        let p = FlagParams { d, s, t };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.t < int(3) {
            return Err(Error::constraint("t >= 3", format!("t = {}", self.t)));
        }
        if self.s < int(3) {
            return Err(Error::constraint("s >= 3", format!("s = {}", self.s)));
        }
        if self.d < int(1) {
            return Err(Error::constraint("d >= 1", format!("d = {}", self.d)));
        }
        Ok(())
    }
}

/// All derived integers obtained from `(d, s, t)` by Euclidean division:
///
/// ```text
/// s−1 = alpha·t + beta          0 ≤ beta < t
/// d−1 = m·s + epsilon           0 ≤ epsilon < s
/// tau = alpha + 1
/// s−1 = alpha_p·tau + beta_p    0 ≤ beta_p < tau
/// s−1 = 2w + w1                 0 ≤ w1 < 2
/// nu  = s − (t²−2t+3)
/// ```
///
/// `x` is the unique integer in `[0, t−1]` with
/// `t−(x+1)(alpha+1) ≤ beta < t−x(alpha+1)`; it satisfies the cross-check
/// identities `alpha_p = t−1−x` and `beta_p = beta − [t−(x+1)(alpha+1)]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub alpha: Int,
    pub beta: Int,
    pub m: Int,
    pub epsilon: Int,
    pub tau: Int,
    pub alpha_p: Int,
    pub beta_p: Int,
    pub x: Int,
    pub w: Int,
    pub w1: Int,
    pub nu: Int,
}

/// Computes every field of [`Decomposition`] and re-checks the recomposition
/// and cross-check identities before returning.
pub fn decompose(p: &FlagParams) -> Result<Decomposition> {
    p.validate()?;
    let (s, t, d) = (&p.s, &p.t, &p.d);
    let s1 = s - 1i32;

    let (alpha, beta) = div_rem_euclid(&s1, t);
    let (m, epsilon) = div_rem_euclid(&(d - 1i32), s);
    let tau = &alpha + 1i32;
    let (alpha_p, beta_p) = div_rem_euclid(&s1, &tau);
    let (w, w1) = div_rem_euclid(&s1, &int(2));
    let nu = s - (t * t - t * 2i32 + 3i32);

    // x = ceil((t - beta) / (alpha + 1)) - 1, then verified against its
    // defining double inequality. Valid for alpha = 0 as well.
    let x = {
        let num = t - &beta;
        let (q, _) = div_rem_euclid(&(&num + &tau - 1i32), &tau);
        q - 1i32
    };
    let lower_ok = t - (&x + 1i32) * &tau <= beta;
    let upper_ok = beta < t - &x * &tau;
    if !(x >= Int::zero() && x < *t && lower_ok && upper_ok) {
        return Err(Error::FormulaMismatch(format!(
            "x-inequality not satisfied at s = {s}, t = {t} (x = {x})"
        )));
    }
    if alpha_p != t - 1i32 - &x || beta_p != &beta - (t - (&x + 1i32) * &tau) {
        return Err(Error::FormulaMismatch(format!(
            "(alpha', beta') disagree with the x-based expressions at s = {s}, t = {t}"
        )));
    }
    debug_assert_eq!(s1, &alpha * t + &beta);
    debug_assert_eq!(d - 1i32, &m * s + &epsilon);

    Ok(Decomposition {
        alpha,
        beta,
        m,
        epsilon,
        tau,
        alpha_p,
        beta_p,
        x,
        w,
        w1,
        nu,
    })
}

/// Splits `s−1 = a·modulus + b` for a positive modulus (either `t` or `tau`).
pub(crate) fn split_by(s: &Int, modulus: &Int) -> (Int, Int) {
    div_rem_euclid(&(s - 1i32), modulus)
}

/// Range gate for the extremal-curve machinery: `t ≥ 3` and
/// `t²−2t+3 ≤ s ≤ t²−t`.
pub(crate) fn require_extremal_range(s: &Int, t: &Int) -> Result<()> {
    if *t < int(3) {
        return Err(Error::constraint("t >= 3", format!("t = {t}")));
    }
    let lo = t * t - t * 2i32 + 3i32;
    let hi = t * t - t;
    if *s < lo || *s > hi {
        return Err(Error::OutOfRange(format!(
            "s must satisfy t^2-2t+3 <= s <= t^2-t (got s = {s}, admissible {lo}..{hi} for t = {t})"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fp(d: i64, s: i64, t: i64) -> FlagParams {
        FlagParams {
            d: int(d),
            s: int(s),
            t: int(t),
        }
    }

    #[test]
    fn worked_triple_decomposition() {
        let dec = decompose(&fp(22, 11, 4)).unwrap();
        assert_eq!(dec.alpha, int(2));
        assert_eq!(dec.beta, int(2));
        assert_eq!(dec.m, int(1));
        assert_eq!(dec.epsilon, int(10));
        assert_eq!(dec.tau, int(3));
        assert_eq!(dec.alpha_p, int(3));
        assert_eq!(dec.beta_p, int(1));
        assert_eq!(dec.x, int(0));
        assert_eq!(dec.w, int(5));
        assert_eq!(dec.w1, int(0));
        assert_eq!(dec.nu, int(0));
    }

    #[test]
    fn smallest_admissible_inputs() {
        let dec = decompose(&fp(1, 3, 3)).unwrap();
        assert_eq!(dec.m, int(0));
        assert_eq!(dec.epsilon, int(0));
        assert_eq!(dec.alpha, int(0));
        assert_eq!(dec.beta, int(2));
        assert_eq!(dec.tau, int(1));
        assert_eq!(dec.alpha_p, int(2));
        assert_eq!(dec.beta_p, int(0));
    }

    #[test]
    fn x_selection_at_s30_t6() {
        let dec = decompose(&fp(1, 30, 6)).unwrap();
        assert_eq!(dec.alpha, int(4));
        assert_eq!(dec.beta, int(5));
        assert_eq!(dec.x, int(0));
        assert_eq!(dec.alpha_p, int(5));
        assert_eq!(dec.beta_p, int(4));
    }

    #[test]
    fn rejects_out_of_contract_inputs() {
        let e = decompose(&fp(1, 3, 2)).unwrap_err();
        assert!(e.to_string().contains("t >= 3"), "{e}");
        let e = decompose(&fp(1, 2, 4)).unwrap_err();
        assert!(e.to_string().contains("s >= 3"), "{e}");
        let e = decompose(&fp(0, 3, 3)).unwrap_err();
        assert!(e.to_string().contains("d >= 1"), "{e}");
    }

    #[test]
    fn restricted_binomial_convention() {
        assert_eq!(restricted_binomial(&int(-1), 2), int(0));
        assert_eq!(restricted_binomial(&int(4), 2), int(6));
        assert_eq!(restricted_binomial(&int(0), 1), int(0));
        assert_eq!(restricted_binomial(&int(-1), 0), int(0));
        assert_eq!(restricted_binomial(&int(0), 0), int(1));
        assert_eq!(restricted_binomial(&int(7), 1), int(7));
        assert_eq!(restricted_binomial(&int(2), 2), int(1));
    }

    #[test]
    #[should_panic(expected = "b must be 0, 1 or 2")]
    fn restricted_binomial_rejects_large_b() {
        restricted_binomial(&int(5), 3);
    }

    /// Independent oracle for `x`: scan all candidates and demand exactly one
    /// satisfies the defining double inequality.
    fn x_by_scan(s: i64, t: i64) -> Vec<i64> {
        let beta = (s - 1) % t;
        let alpha = (s - 1) / t;
        (0..t)
            .filter(|&x| t - (x + 1) * (alpha + 1) <= beta && beta < t - x * (alpha + 1))
            .collect()
    }

    #[test]
    fn x_uniqueness_small_lattice() {
        for t in 3..=40 {
            for s in 3..=(t * t - t) {
                let candidates = x_by_scan(s, t);
                assert_eq!(candidates.len(), 1, "s = {s}, t = {t}: {candidates:?}");
                let dec = decompose(&fp(1, s, t)).unwrap();
                assert_eq!(dec.x, int(candidates[0]), "s = {s}, t = {t}");
            }
        }
    }

    proptest! {
        #[test]
        fn recomposition_identities(d in 1i64..=1_000_000, s in 3i64..=100_000, t in 3i64..=100_000) {
            let dec = decompose(&fp(d, s, t)).unwrap();
            prop_assert_eq!(&dec.alpha * int(t) + &dec.beta, int(s - 1));
            prop_assert!(dec.beta >= int(0) && dec.beta < int(t));
            prop_assert_eq!(&dec.m * int(s) + &dec.epsilon, int(d - 1));
            prop_assert!(dec.epsilon >= int(0) && dec.epsilon < int(s));
            prop_assert_eq!(&dec.alpha_p * &dec.tau + &dec.beta_p, int(s - 1));
            prop_assert!(dec.beta_p >= int(0) && dec.beta_p < dec.tau);
            prop_assert_eq!(&dec.w * int(2) + &dec.w1, int(s - 1));
            prop_assert_eq!(&dec.nu, &(int(s) - int(t * t - 2 * t + 3)));
        }

        #[test]
        fn x_cross_check(s in 3i64..=5_000, t in 3i64..=200) {
            let dec = decompose(&fp(1, s, t)).unwrap();
            // alpha' = t-1-x and the scan picks the same unique x.
            prop_assert_eq!(&dec.alpha_p, &(int(t) - int(1) - &dec.x));
            let scanned = x_by_scan(s, t);
            prop_assert_eq!(scanned.len(), 1);
            prop_assert_eq!(&dec.x, &int(scanned[0]));
        }
    }

    #[test]
    fn nu_equals_beta_minus_two_in_band() {
        for t in 3i64..=20 {
            for s in (t * t - 2 * t + 3)..=(t * t - t) {
                let dec = decompose(&fp(1, s, t)).unwrap();
                assert_eq!(dec.nu, &dec.beta - 2i32, "s = {s}, t = {t}");
                assert!(dec.beta >= int(2) && dec.beta <= int(t - 1));
            }
        }
    }

    #[test]
    fn tau_stays_inside_its_own_regime() {
        // s <= t^2 - t forces 0 <= alpha <= t-2, 1 <= tau <= t-1 and
        // s > tau^2 - tau: the derived modulus always lands in the range
        // where the companion bound G(d, s, tau) is meaningful.
        for t in 3i64..=40 {
            for s in 3..=(t * t - t) {
                let dec = decompose(&fp(1, s, t)).unwrap();
                assert!(
                    dec.alpha >= int(0) && dec.alpha <= int(t - 2),
                    "s = {s}, t = {t}"
                );
                assert!(
                    dec.tau >= int(1) && dec.tau <= int(t - 1),
                    "s = {s}, t = {t}"
                );
                assert!(
                    int(s) > &dec.tau * &dec.tau - &dec.tau,
                    "s = {s}, t = {t}, tau = {}",
                    dec.tau
                );
            }
        }
    }
}
