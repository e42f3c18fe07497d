//! Case classification for a triple `(d, s, t)` with `s ≤ t²−t`: which bound
//! applies (`G` alone or `G + 4t³`), the degree threshold `d₀` above which it
//! is asserted, and the sharp-regime estimate on the extremal range.

use num_traits::Zero;

use crate::arith::{
    decompose, div_rem_euclid, frac, rat, rat_of, require_extremal_range, FlagParams, Int, Rat,
};
use crate::bounds::{ci_genus, genus_bound_g};
use crate::{Error, Result};

/// Which bullet of the bound dichotomy applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theorem1Case {
    /// The plain bound `g < G(d, s, t)`.
    StrictG,
    /// The residual bullet `g < G(d, s, t) + 4t³`.
    GPlusSlack,
}

impl Theorem1Case {
    pub fn label(self) -> &'static str {
        match self {
            Theorem1Case::StrictG => "StrictG",
            Theorem1Case::GPlusSlack => "GPlusSlack",
        }
    }
}

/// Full classification of a triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseLabel {
    pub theorem1_case: Theorem1Case,
    /// Degree threshold: the dichotomy is asserted for `d > d0`.
    pub d0: Int,
    pub d_above_threshold: bool,
    /// `G` or `G + 4t³` according to the case.
    pub bound_value: Rat,
    /// The bound is strict (`g < bound_value`) in both cases.
    pub strict: bool,
    /// `0` or `4t³`.
    pub slack: Rat,
    /// Whether the sharp-regime estimate applies: `t²−2t+3 ≤ s ≤ t²−t` and
    /// `d > s⁴`.
    pub theorem2_applicable: bool,
    /// Width `2t³ + s³` of the sharp-regime band.
    pub theorem2_band: Rat,
}

/// The sharp-regime estimate: the genus of a maximal curve equals
/// `center + O(1)` with `|O(1)| ≤ band`, and exactly `sharp` when
/// `d ≡ 0 (mod s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem2Estimate {
    /// `G(d,s,t) − (d/s)(beta−1)`.
    pub center: Rat,
    /// `2t³ + s³`.
    pub band: Rat,
    /// The exact maximal genus (the complete-intersection genus) when
    /// `d ≡ 0 (mod s)`.
    pub sharp: Option<Rat>,
}

/// Classifies `(d, s, t)`. Errors when `s > t²−t`, the regime covered by the
/// classical theory rather than by this crate.
///
/// Boundary conventions: at `s = 2t−3` the threshold rows are applied in
/// their listed order (first match wins), and the equality case
/// `beta = t−alpha−2` falls into the residual `GPlusSlack` bullet.
pub fn classify(d: &Int, s: &Int, t: &Int) -> Result<CaseLabel> {
    let params = FlagParams::new(d.clone(), s.clone(), t.clone())?;
    if *s > t * t - t {
        return Err(Error::OutOfRange(format!(
            "s <= t^2 - t required (got s = {s}, t^2 - t = {}); the range s > t^2 - t \
             is covered by the classical bound and is not implemented here",
            t * t - t
        )));
    }
    let dec = decompose(&params)?;
    let (alpha, beta, epsilon) = (&dec.alpha, &dec.beta, &dec.epsilon);
    let two_t3 = t * t * t * 2i32;

    let crossover = t - alpha - 2i32; // compare beta against t - alpha - 2
    let s_low = *s <= t * 2i32 - 3i32;
    let s_high = *s >= t * 2i32 - 3i32;

    // The three strict bullets; beta = crossover matches none of them and
    // falls to the residual case.
    let epsilon_window = || {
        let width = alpha + beta + 2i32 - t;
        let lhs = s - epsilon - 1i32;
        lhs < width || (beta * &width <= lhs && lhs < (beta + 1i32) * &width)
    };
    let strict =
        s_low || (s_high && *beta < crossover) || (s_high && *beta > crossover && epsilon_window());
    let theorem1_case = if strict {
        Theorem1Case::StrictG
    } else {
        Theorem1Case::GPlusSlack
    };

    // Threshold rows, first match wins.
    let d0 = if s_low {
        t.pow(4) * 32i32
    } else if *beta < crossover {
        s * t.pow(4) * 8i32
    } else {
        let a = (s + 1i32) * (s + 1i32) * 12i32;
        let b = s.pow(3);
        a.max(b)
    };

    let g = genus_bound_g(d, s, t)?;
    let slack = match theorem1_case {
        Theorem1Case::StrictG => rat(0),
        Theorem1Case::GPlusSlack => rat_of(&(&two_t3 * 2i32)),
    };
    let bound_value = &g + &slack;

    let in_band = require_extremal_range(s, t).is_ok();
    Ok(CaseLabel {
        theorem1_case,
        d_above_threshold: *d > d0,
        d0,
        bound_value,
        strict: true,
        slack,
        theorem2_applicable: in_band && *d > s.pow(4),
        theorem2_band: rat_of(&(two_t3 + s.pow(3))),
    })
}

/// The sharp-regime estimate for `t²−2t+3 ≤ s ≤ t²−t` and `d > s⁴`.
/// Errors name the specific failed hypothesis.
pub fn theorem2_estimate(d: &Int, s: &Int, t: &Int) -> Result<Theorem2Estimate> {
    FlagParams::new(d.clone(), s.clone(), t.clone())?;
    require_extremal_range(s, t)?;
    if *d <= s.pow(4) {
        return Err(Error::constraint(
            "d > s^4",
            format!("d = {d}, s^4 = {}", s.pow(4)),
        ));
    }
    let (_, beta) = div_rem_euclid(&(s - 1i32), t);
    let g = genus_bound_g(d, s, t)?;
    let center = g - frac(d.clone(), s.clone()) * (rat_of(&beta) - rat(1));
    let band = rat_of(&(t.pow(3) * 2i32 + s.pow(3)));
    let (_, rem) = div_rem_euclid(d, s);
    let sharp = if rem.is_zero() {
        Some(rat_of(&ci_genus(d, s, t)?))
    } else {
        None
    };
    Ok(Theorem2Estimate {
        center,
        band,
        sharp,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    #[test]
    fn low_s_row_wins_at_overlap() {
        // s = 5 = 2t-3 at t = 4 satisfies both the first and second row
        // guards; the first row wins, so d0 = 32 t^4 = 8192.
        let label = classify(&int(8193), &int(5), &int(4)).unwrap();
        assert_eq!(label.theorem1_case, Theorem1Case::StrictG);
        assert_eq!(label.d0, int(8192));
        assert!(label.d_above_threshold);
        assert!(label.strict);
        assert_eq!(label.slack, rat(0));
    }

    #[test]
    fn worked_triple_classification() {
        let label = classify(&int(22), &int(11), &int(4)).unwrap();
        assert_eq!(label.theorem1_case, Theorem1Case::StrictG);
        // s >= 2t-3 and beta = 2 > t-alpha-2 = 0, with s-eps-1 = 0 < 2.
        assert_eq!(label.d0, int(1728)); // max(12*144, 1331)
        assert!(!label.d_above_threshold);
        assert_eq!(label.bound_value, rat(40));
        assert_eq!(label.theorem2_band, rat(1459));
        assert!(!label.theorem2_applicable); // 22 <= 11^4
    }

    #[test]
    fn equality_beta_falls_to_slack_bullet() {
        // t = 5, s = 8: beta = 2 = t - alpha - 2, neither strict sub-bullet
        // matches, so the residual bullet applies with slack 4t^3 = 500.
        let label = classify(&int(100), &int(8), &int(5)).unwrap();
        assert_eq!(label.theorem1_case, Theorem1Case::GPlusSlack);
        assert_eq!(label.slack, rat(500));
        assert_eq!(label.d0, int(972)); // max(12*81, 512)
        assert_eq!(
            label.bound_value,
            genus_bound_g(&int(100), &int(8), &int(5)).unwrap() + rat(500)
        );
    }

    #[test]
    fn out_of_scope_range_rejected() {
        let e = classify(&int(10), &int(13), &int(4)).unwrap_err();
        assert!(e.to_string().contains("s <= t^2 - t"), "{e}");
    }

    #[test]
    fn classification_is_total_over_epsilon() {
        // Every epsilon lands in exactly one bullet; the label only depends
        // on d through epsilon and the threshold flag.
        for t in 3i64..=8 {
            for s in 3..=(t * t - t) {
                for eps in 0..s {
                    let d = 1 + eps; // realizes this epsilon with m = 0
                    let label = classify(&int(d), &int(s), &int(t)).unwrap();
                    match label.theorem1_case {
                        Theorem1Case::StrictG => assert_eq!(label.slack, rat(0)),
                        Theorem1Case::GPlusSlack => {
                            assert_eq!(label.slack, rat(4 * t * t * t))
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn theorem2_estimate_sharp_case() {
        let d = int(161062); // 11 * 14642 > 11^4
        let est = theorem2_estimate(&d, &int(11), &int(4)).unwrap();
        assert_eq!(est.band, rat(1459));
        let sharp = est.sharp.expect("d divisible by s");
        // The sharp value is the center exactly in the divisible case.
        assert_eq!(sharp, est.center);
        assert_eq!(sharp, rat_of(&ci_genus(&d, &int(11), &int(4)).unwrap()));
        // center - G = -(d/s)(beta - 1) = -(d/s) here.
        let g = genus_bound_g(&d, &int(11), &int(4)).unwrap();
        assert_eq!(est.center - g, rat(-14642));
    }

    #[test]
    fn theorem2_estimate_names_failed_hypothesis() {
        let e = theorem2_estimate(&int(100), &int(11), &int(4)).unwrap_err();
        assert!(e.to_string().contains("d > s^4"), "{e}");
        let e = theorem2_estimate(&int(100), &int(9), &int(4)).unwrap_err();
        assert!(e.to_string().contains("t^2-2t+3"), "{e}");
    }
}
