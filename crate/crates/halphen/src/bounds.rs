//! Closed-form bounds and constant terms: the Halphen constant `H`, the
//! piecewise constants `rho` and `R`, the genus bounds `G(d,s,t)`,
//! `G(d,s,tau)` and the surface-only bound `G_duke`, the extremal space-curve
//! genus `P(s,t)`, the `d/2`-coefficients `A`, `A'`, `A''`, the
//! complete-intersection genus and the speciality bounds.
//!
//! Everything is exact. Where a quantity admits two algebraically equivalent
//! expressions, both are computed and compared; a disagreement is reported as
//! a [`FormulaMismatch`](crate::Error::FormulaMismatch) instead of returning
//! either value.

use num_traits::{Signed, Zero};

use crate::arith::{
    decompose, div_rem_euclid, frac, int, rat, rat_of, require_extremal_range, restricted_binomial,
    split_by, FlagParams, Int, Rat,
};
use crate::classify::{classify, CaseLabel};
use crate::{Decomposition, Error, Result};

/// Which branch of the piecewise definition of `rho` fired, together with the
/// quotient/remainder of the branch's division.
///
/// - `HighEpsilon`: `epsilon ≥ s − (b+1)(a+b+2−T)`; divides
///   `s−epsilon−1 = u(a+b+2−T) + v`.
/// - `LowEpsilon`: otherwise; divides `epsilon = u(a+b+1) + v`.
///
/// Here `a, b` split `s−1` by the modulus `T` (either `t` or `tau`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoCaseData {
    pub case_tag: RhoCase,
    pub u: Int,
    pub v: Int,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RhoCase {
    HighEpsilon,
    LowEpsilon,
}

impl RhoCase {
    pub fn label(self) -> &'static str {
        match self {
            RhoCase::HighEpsilon => "high-epsilon",
            RhoCase::LowEpsilon => "low-epsilon",
        }
    }
}

/// Which branch of the definition of `R` fired, with its division data and
/// the plane invariant `pi = w(w−1+w1)`.
///
/// - `SmallEpsilon`: `epsilon < (3−w1)·w`; divides `epsilon = k·w + delta`.
/// - `LargeEpsilon`: otherwise; divides `epsilon+2−w1 = k(w+1) + delta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RCaseData {
    pub case_tag: RCase,
    pub k: Int,
    pub delta: Int,
    pub pi: Int,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RCase {
    SmallEpsilon,
    LargeEpsilon,
}

impl RCase {
    pub fn label(self) -> &'static str {
        match self {
            RCase::SmallEpsilon => "small-epsilon",
            RCase::LargeEpsilon => "large-epsilon",
        }
    }
}

/// `H(s,T) = s²/2T + s(T−4)/2 − (T−1−b)(1+b)(T−1)/2T + 1` where
/// `s−1 = a·T + b`, cross-checked against the expanded form
/// `2H = aT² + (a²−4a)T + b² + 2a + (2a−1)b`.
///
/// Valid for any modulus `T ≥ 1`, which is what the `tau`-variants need.
pub(crate) fn h_of(s: &Int, modulus: &Int) -> Result<Rat> {
    let t = modulus;
    let (a, b) = split_by(s, t);
    let direct = frac(s * s, t * 2i32) + frac(s * (t - 4i32), int(2))
        - frac((t - 1i32 - &b) * (1i32 + &b) * (t - 1i32), t * 2i32)
        + rat(1);
    let expanded =
        &a * t * t + (&a * &a - &a * 4i32) * t + &b * &b + &a * 2i32 + (&a * 2i32 - 1i32) * &b;
    if &direct * rat(2) != rat_of(&expanded) {
        return Err(Error::FormulaMismatch(format!(
            "H(s,T): direct form 2H = {} but expanded form gives {} (s = {s}, T = {t})",
            &direct * rat(2),
            expanded
        )));
    }
    Ok(direct)
}

/// The constant term `rho(s, T, epsilon)`; `T` is the modulus (`t` or `tau`).
///
/// The high-epsilon branch uses the corrected factor `T−b−3`. If that branch
/// is ever selected while its divisor `a+b+2−T` is non-positive the division
/// would be ill-posed; such a point is reported as a
/// [`DomainAudit`](crate::Error::DomainAudit) instead of being evaluated.
/// (The case condition makes this unreachable: a non-positive divisor pushes
/// the threshold above every admissible epsilon.)
pub(crate) fn rho_of(s: &Int, modulus: &Int, epsilon: &Int) -> Result<(Rat, RhoCaseData)> {
    let t = modulus;
    let (a, b) = split_by(s, t);
    let h = h_of(s, t)?;
    let head = frac(s - 1i32 - epsilon, s.clone()) * &h
        + frac((1i32 + epsilon) * (s - epsilon + 1i32), s * 2i32);

    let divisor = &a + &b + 2i32 - t;
    let high = *epsilon >= s - (&b + 1i32) * &divisor;
    if high {
        if !divisor.is_positive() {
            return Err(Error::DomainAudit(format!(
                "high-epsilon branch selected with non-positive divisor a+b+2-T = {divisor} \
                 (s = {s}, T = {t}, epsilon = {epsilon})"
            )));
        }
        let (u, v) = div_rem_euclid(&(s - epsilon - 1i32), &divisor);
        let value = head + rat_of(&restricted_binomial(&(&u + &v + 1i32), 2))
            - frac(
                (&a + &b) * (&v * 2i32 + &u * &a + &u * &b - &u * &u),
                int(2),
            )
            + frac(&u * (t - 1i32) * (t - &b - 3i32), int(2))
            - rat(1);
        Ok((
            value,
            RhoCaseData {
                case_tag: RhoCase::HighEpsilon,
                u,
                v,
            },
        ))
    } else {
        let (u, v) = div_rem_euclid(epsilon, &(&a + &b + 1i32));
        let value = head - frac((&a + &b) * (t - &u - 1i32) * (&a + t + &u - 3i32), int(2))
            + frac(&b * (t - 1i32) * (&a * 2i32 - 6i32), int(2))
            - rat(1);
        Ok((
            value,
            RhoCaseData {
                case_tag: RhoCase::LowEpsilon,
                u,
                v,
            },
        ))
    }
}

/// The `d/2` coefficient `A(s,T) = s/T + T − 5 − (T−1−b)(1+b)(T−1)/(sT)`.
pub(crate) fn a_of(s: &Int, modulus: &Int) -> Rat {
    let t = modulus;
    let (_, b) = split_by(s, t);
    frac(s.clone(), t.clone()) + rat_of(t)
        - rat(5)
        - frac((t - 1i32 - &b) * (1i32 + &b) * (t - 1i32), s * t)
}

/// `G(d, s, T) = d²/2s + (d/2)·A(s,T) + rho + 1`, cross-checked against the
/// reassembly through `H` and, inside the extremal range, through `P`.
fn g_of(d: &Int, s: &Int, modulus: &Int) -> Result<Rat> {
    let t = modulus;
    let (_, epsilon) = div_rem_euclid(&(d - 1i32), s);
    let (rho_v, _) = rho_of(s, t, &epsilon)?;
    let lead = frac(d * d, s * 2i32);

    let direct = &lead + rat_of(d) / rat(2) * a_of(s, t) + &rho_v + rat(1);
    let h = h_of(s, t)?;
    let via_h =
        &lead + frac(d.clone(), s * 2i32) * (h * rat(2) - rat(2) - rat_of(s)) + &rho_v + rat(1);
    if direct != via_h {
        return Err(Error::FormulaMismatch(format!(
            "G(d,s,T): coefficient form {direct} != H-reassembly {via_h} (d = {d}, s = {s}, T = {t})"
        )));
    }
    if require_extremal_range(s, t).is_ok() {
        let p = extremal_space_genus_p(s, t)?;
        let (_, b) = split_by(s, t);
        let via_p = &lead
            + frac(d.clone(), s * 2i32) * (rat_of(&p) * rat(2) - rat(2) - rat_of(s))
            + frac(d.clone(), s.clone()) * (rat_of(&b) - rat(1))
            + &rho_v
            + rat(1);
        if direct != via_p {
            return Err(Error::FormulaMismatch(format!(
                "G(d,s,T): coefficient form {direct} != P-reassembly {via_p} (d = {d}, s = {s}, T = {t})"
            )));
        }
    }
    Ok(direct)
}

fn validate_st(s: &Int, t: &Int) -> Result<()> {
    if *t < int(3) {
        return Err(Error::constraint("t >= 3", format!("t = {t}")));
    }
    if *s < int(3) {
        return Err(Error::constraint("s >= 3", format!("s = {s}")));
    }
    Ok(())
}

fn validate_epsilon(s: &Int, epsilon: &Int) -> Result<()> {
    if epsilon.is_negative() || epsilon >= s {
        return Err(Error::constraint(
            "0 <= epsilon < s",
            format!("epsilon = {epsilon}, s = {s}"),
        ));
    }
    Ok(())
}

/// The Halphen constant `H(s,t)`.
pub fn halphen_h(s: &Int, t: &Int) -> Result<Rat> {
    validate_st(s, t)?;
    h_of(s, t)
}

/// `H(s,tau)` where `tau = alpha + 1` comes from splitting `s−1` by `t`.
pub fn halphen_h_tau(s: &Int, t: &Int) -> Result<Rat> {
    validate_st(s, t)?;
    let (a, _) = split_by(s, t);
    h_of(s, &(a + 1i32))
}

/// The constant term `rho(s, t, epsilon)` together with its case data.
///
/// The modulus may be any positive integer: passing `tau` in place of `t`
/// yields the primed variant `rho' = rho(s, tau, epsilon)`.
pub fn rho(s: &Int, t: &Int, epsilon: &Int) -> Result<(Rat, RhoCaseData)> {
    if *t < int(1) {
        return Err(Error::constraint("T >= 1", format!("T = {t}")));
    }
    if *s < int(3) {
        return Err(Error::constraint("s >= 3", format!("s = {s}")));
    }
    validate_epsilon(s, epsilon)?;
    rho_of(s, t, epsilon)
}

/// `rho' = rho(s, tau, epsilon)` with `tau` derived from `(s, t)`.
pub fn rho_tau(s: &Int, t: &Int, epsilon: &Int) -> Result<(Rat, RhoCaseData)> {
    validate_st(s, t)?;
    validate_epsilon(s, epsilon)?;
    let (a, _) = split_by(s, t);
    rho_of(s, &(a + 1i32), epsilon)
}

/// The constant term `R(s, epsilon)` of the surface-only bound, with case
/// data.
pub fn r_const(s: &Int, epsilon: &Int) -> Result<(Rat, RCaseData)> {
    if *s < int(3) {
        return Err(Error::constraint("s >= 3", format!("s = {s}")));
    }
    validate_epsilon(s, epsilon)?;
    let (w, w1) = div_rem_euclid(&(s - 1i32), &int(2));
    let pi = &w * (&w - 1i32 + &w1);
    let small = *epsilon < (3i32 - &w1) * &w;
    let (case_tag, k, delta) = if small {
        let (k, delta) = div_rem_euclid(epsilon, &w);
        (RCase::SmallEpsilon, k, delta)
    } else {
        let (k, delta) = div_rem_euclid(&(epsilon + 2i32 - &w1), &(&w + 1i32));
        (RCase::LargeEpsilon, k, delta)
    };
    let value = frac(
        (1i32 + epsilon) * (s + 1i32 - epsilon - &pi * 2i32),
        s * 2i32,
    ) + rat_of(&(&w * (epsilon - &delta)))
        - rat_of(&(&k * restricted_binomial(&(&w + 1i32), 2)))
        + rat_of(&restricted_binomial(&delta, 2));
    Ok((
        value,
        RCaseData {
            case_tag,
            k,
            delta,
            pi,
        },
    ))
}

/// The genus bound `G(d, s, t)`.
pub fn genus_bound_g(d: &Int, s: &Int, t: &Int) -> Result<Rat> {
    FlagParams::new(d.clone(), s.clone(), t.clone())?;
    g_of(d, s, t)
}

/// The companion bound `G(d, s, tau)` with `tau` derived from `(s, t)`.
pub fn genus_bound_g_tau(d: &Int, s: &Int, t: &Int) -> Result<Rat> {
    FlagParams::new(d.clone(), s.clone(), t.clone())?;
    let (a, _) = split_by(s, t);
    g_of(d, s, &(a + 1i32))
}

/// The surface-only genus bound
/// `G_duke = d²/2s + (d/2)((2·pi−2)/s − 1) + R` with `pi = w(w−1+w1)`.
pub fn genus_bound_duke(d: &Int, s: &Int) -> Result<Rat> {
    if *d < int(1) {
        return Err(Error::constraint("d >= 1", format!("d = {d}")));
    }
    if *s < int(3) {
        return Err(Error::constraint("s >= 3", format!("s = {s}")));
    }
    let (_, epsilon) = div_rem_euclid(&(d - 1i32), s);
    let (r, data) = r_const(s, &epsilon)?;
    Ok(frac(d * d, s * 2i32)
        + rat_of(d) / rat(2) * (frac(&data.pi * 2i32 - 2i32, s.clone()) - rat(1))
        + r)
}

/// The maximal genus `P(s,t) = t³ − 5t² + (b+7)t + (b²−7b)/2 − 1` of a space
/// curve of degree `s` lying on no surface of degree `< t`, defined on the
/// range `t²−2t+3 ≤ s ≤ t²−t`.
///
/// `b(b−7)` is always even, so the value is an integer.
pub fn extremal_space_genus_p(s: &Int, t: &Int) -> Result<Int> {
    require_extremal_range(s, t)?;
    let (_, b) = split_by(s, t);
    let half = {
        let num = &b * &b - &b * 7i32;
        let (q, r) = div_rem_euclid(&num, &int(2));
        if !r.is_zero() {
            // b(b-7) is a product of integers of opposite parity.
            return Err(Error::FormulaMismatch(format!(
                "(b^2-7b)/2 not an integer at s = {s}, t = {t}"
            )));
        }
        q
    };
    Ok(t * t * t - t * t * 5i32 + (&b + 7i32) * t + half - 1i32)
}

/// The `d/2` coefficient `A(s, t)`.
pub fn coeff_a(s: &Int, t: &Int) -> Result<Rat> {
    validate_st(s, t)?;
    Ok(a_of(s, t))
}

/// The `d/2` coefficient `A' = A(s, tau)`.
pub fn coeff_a_tau(s: &Int, t: &Int) -> Result<Rat> {
    validate_st(s, t)?;
    let (a, _) = split_by(s, t);
    Ok(a_of(s, &(a + 1i32)))
}

/// The `d/2` coefficient `A'' = (2·pi−2)/s − 1` of the surface-only bound.
pub fn coeff_a_duke(s: &Int) -> Result<Rat> {
    if *s < int(3) {
        return Err(Error::constraint("s >= 3", format!("s = {s}")));
    }
    let (w, w1) = div_rem_euclid(&(s - 1i32), &int(2));
    let pi = &w * (&w - 1i32 + &w1);
    Ok(frac(&pi * 2i32 - 2i32, s.clone()) - rat(1))
}

/// Genus of the complete intersection of the extremal surface with a
/// hypersurface of degree `m+1`:
/// `p_a = d²/2s + (d/2s)(2P−2−s) + 1`, for `d = (m+1)s` in the extremal
/// range. Cross-checked against `G(d,s,t) − (d/s)(b−1)`.
pub fn ci_genus(d: &Int, s: &Int, t: &Int) -> Result<Int> {
    require_extremal_range(s, t)?;
    if *d < int(1) {
        return Err(Error::constraint("d >= 1", format!("d = {d}")));
    }
    let (_, rem) = div_rem_euclid(d, s);
    if !rem.is_zero() {
        return Err(Error::constraint(
            "d divisible by s",
            format!("d = {d}, s = {s}"),
        ));
    }
    let p = extremal_space_genus_p(s, t)?;
    let value = frac(d * d, s * 2i32)
        + frac(d.clone(), s * 2i32) * (rat_of(&p) * rat(2) - rat(2) - rat_of(s))
        + rat(1);
    let (_, b) = split_by(s, t);
    let alt = genus_bound_g(d, s, t)? - frac(d.clone(), s.clone()) * (rat_of(&b) - rat(1));
    if value != alt {
        return Err(Error::FormulaMismatch(format!(
            "ci_genus: P-form {value} != G - (d/s)(b-1) = {alt} at d = {d}, s = {s}, t = {t}"
        )));
    }
    if !value.is_integer() {
        return Err(Error::FormulaMismatch(format!(
            "ci_genus not an integer at d = {d}, s = {s}, t = {t}: {value}"
        )));
    }
    Ok(value.to_integer())
}

/// Speciality-index bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialityBounds {
    /// `e1 = d/s + s/t + t − 5`, available for every valid triple.
    pub e1: Rat,
    /// `e2 = d/s + 2t − 7`, available only when `d ≡ 0 (mod s)`.
    pub e2: Option<Rat>,
}

/// Computes both speciality bounds. Note `e1 − e2 = s/t − t + 2` whenever
/// `e2` is defined, so `e2 ≤ e1` exactly when `s ≥ t²−2t`; on the extremal
/// range `s ≥ t²−2t+3` the second bound is always the sharper one.
pub fn speciality_bounds(d: &Int, s: &Int, t: &Int) -> Result<SpecialityBounds> {
    FlagParams::new(d.clone(), s.clone(), t.clone())?;
    let d_over_s = frac(d.clone(), s.clone());
    let e1 = &d_over_s + frac(s.clone(), t.clone()) + rat_of(t) - rat(5);
    let (_, rem) = div_rem_euclid(d, s);
    let e2 = if rem.is_zero() {
        Some(&d_over_s + rat_of(t) * rat(2) - rat(7))
    } else {
        None
    };
    Ok(SpecialityBounds { e1, e2 })
}

/// Every bound and constant for one triple, plus the case classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub params: FlagParams,
    pub decomposition: Decomposition,
    pub g: Rat,
    pub g_tau: Rat,
    pub g_duke: Rat,
    pub h: Rat,
    pub h_tau: Rat,
    /// Defined only on the extremal range `t²−2t+3 ≤ s ≤ t²−t`.
    pub p: Option<Int>,
    pub rho: Rat,
    pub rho_case: RhoCaseData,
    pub rho_tau: Rat,
    pub rho_tau_case: RhoCaseData,
    pub r: Rat,
    pub r_case: RCaseData,
    pub a: Rat,
    pub a_tau: Rat,
    pub a_duke: Rat,
    pub e1: Rat,
    pub e2: Option<Rat>,
    pub case: CaseLabel,
}

/// Computes the full [`BoundReport`] for a triple. Requires `s ≤ t²−t`, the
/// regime where the classification applies.
pub fn bound_report(params: &FlagParams) -> Result<BoundReport> {
    params.validate()?;
    let (d, s, t) = (&params.d, &params.s, &params.t);
    let decomposition = decompose(params)?;
    let case = classify(d, s, t)?;
    let (rho_v, rho_case) = rho_of(s, t, &decomposition.epsilon)?;
    let (rho_tau_v, rho_tau_case) = rho_of(s, &decomposition.tau, &decomposition.epsilon)?;
    let (r_v, r_case) = r_const(s, &decomposition.epsilon)?;
    let p = if require_extremal_range(s, t).is_ok() {
        Some(extremal_space_genus_p(s, t)?)
    } else {
        None
    };
    let spec = speciality_bounds(d, s, t)?;
    Ok(BoundReport {
        params: params.clone(),
        decomposition,
        g: genus_bound_g(d, s, t)?,
        g_tau: genus_bound_g_tau(d, s, t)?,
        g_duke: genus_bound_duke(d, s)?,
        h: halphen_h(s, t)?,
        h_tau: halphen_h_tau(s, t)?,
        p,
        rho: rho_v,
        rho_case,
        rho_tau: rho_tau_v,
        rho_tau_case,
        r: r_v,
        r_case,
        a: coeff_a(s, t)?,
        a_tau: coeff_a_tau(s, t)?,
        a_duke: coeff_a_duke(s)?,
        e1: spec.e1,
        e2: spec.e2,
        case,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn halphen_h_values() {
        assert_eq!(halphen_h(&int(11), &int(4)).unwrap(), rat(15));
        assert_eq!(halphen_h(&int(30), &int(6)).unwrap(), rat(106));
        assert_eq!(halphen_h(&int(6), &int(3)).unwrap(), rat(4));
        // H = P + beta - 1 at the worked triple.
        let p = extremal_space_genus_p(&int(11), &int(4)).unwrap();
        assert_eq!(rat_of(&p) + rat(2) - rat(1), rat(15));
    }

    #[test]
    fn h_range_bound_on_lattice() {
        // 0 <= H <= t^3 - (7/2)t^2 + (5/2)t + 1 whenever s <= t^2 - t.
        for t in 3i64..=12 {
            let cap =
                rat(t * t * t) - frac(int(7 * t * t), int(2)) + frac(int(5 * t), int(2)) + rat(1);
            for s in 3..=(t * t - t) {
                let h = halphen_h(&int(s), &int(t)).unwrap();
                assert!(h >= rat(0) && h <= cap, "H({s},{t}) = {h}");
            }
        }
    }

    #[test]
    fn rho_at_full_epsilon_is_zero() {
        let (v, data) = rho(&int(11), &int(4), &int(10)).unwrap();
        assert_eq!(v, rat(0));
        assert_eq!(data.case_tag, RhoCase::HighEpsilon);
        assert_eq!(data.u, int(0));
        assert_eq!(data.v, int(0));
        // Holds across the extremal range, where the high branch always fires.
        for t in 3i64..=10 {
            for s in (t * t - 2 * t + 3)..=(t * t - t) {
                let (v, data) = rho(&int(s), &int(t), &int(s - 1)).unwrap();
                assert_eq!(data.case_tag, RhoCase::HighEpsilon, "s = {s}, t = {t}");
                assert_eq!(v, rat(0), "s = {s}, t = {t}");
            }
        }
    }

    #[test]
    fn rho_at_full_epsilon_low_branch_counterexample() {
        // Outside the high-epsilon regime the value need not vanish:
        // at (s, T, eps) = (6, 5, 5) the low branch fires and rho = -5.
        let (v, data) = rho(&int(6), &int(5), &int(5)).unwrap();
        assert_eq!(data.case_tag, RhoCase::LowEpsilon);
        assert_eq!(v, rat(-5));
    }

    #[test]
    fn rho_remark_family() {
        // t = 6, s = t^2-2t+6 = 30, eps = s-25 = 5: rho' - rho = 2(t+1) = 14.
        let (r, rd) = rho(&int(30), &int(6), &int(5)).unwrap();
        assert_eq!(r, frac(int(-118), int(5)));
        assert_eq!(
            (rd.case_tag, rd.u, rd.v),
            (RhoCase::HighEpsilon, int(4), int(4))
        );
        let (rp, rpd) = rho_tau(&int(30), &int(6), &int(5)).unwrap();
        assert_eq!(rp, frac(int(-48), int(5)));
        assert_eq!(
            (rpd.case_tag, rpd.u, rpd.v),
            (RhoCase::HighEpsilon, int(4), int(0))
        );
        assert_eq!(rp - r, rat(14));
    }

    #[test]
    fn r_const_values() {
        let (v, data) = r_const(&int(3), &int(0)).unwrap();
        assert_eq!(v, frac(int(2), int(3)));
        assert_eq!(
            (data.case_tag, data.k, data.delta, data.pi),
            (RCase::SmallEpsilon, int(0), int(0), int(0))
        );
        let (v, data) = r_const(&int(5), &int(4)).unwrap();
        assert_eq!(v, rat(1));
        assert_eq!(
            (data.case_tag, data.k, data.delta, data.pi),
            (RCase::SmallEpsilon, int(2), int(0), int(2))
        );
    }

    #[test]
    fn genus_bound_worked_triple() {
        let g = genus_bound_g(&int(22), &int(11), &int(4)).unwrap();
        assert_eq!(g, rat(40));
        // G - (d/s)(beta - 1) = 38 at the complete-intersection point.
        assert_eq!(g - rat(2), rat(38));
        assert_eq!(
            genus_bound_g_tau(&int(22), &int(11), &int(4)).unwrap(),
            rat(40)
        );
        assert_eq!(genus_bound_g(&int(33), &int(11), &int(4)).unwrap(), rat(76));
    }

    #[test]
    fn duke_bound_values() {
        assert_eq!(genus_bound_duke(&int(22), &int(11)).unwrap(), rat(50));
        // pi vanishes at s = 3 and equals 2 at s = 5.
        assert_eq!(r_const(&int(3), &int(0)).unwrap().1.pi, int(0));
        assert_eq!(r_const(&int(5), &int(0)).unwrap().1.pi, int(2));
        // At s = 3 the bound reduces to d^2/6 - (d/2)(1 + 2/3) + R.
        for d in 1i64..=40 {
            let eps = (d - 1) % 3;
            let (r, _) = r_const(&int(3), &int(eps)).unwrap();
            let expect = frac(int(d * d), int(6))
                - frac(int(d), int(2)) * (rat(1) + frac(int(2), int(3)))
                + r;
            assert_eq!(genus_bound_duke(&int(d), &int(3)).unwrap(), expect);
        }
    }

    #[test]
    fn duke_bound_drops_below_g_past_threshold() {
        // For 3 <= s <= 2t-3 the surface-only bound is strictly below
        // G(d,s,t) from d = 32t^4 + 1 on; checked on the full bounds.
        for t in 3i64..=6 {
            for s in 3..=(2 * t - 3) {
                let d = int(32 * t.pow(4) + 1);
                let duke = genus_bound_duke(&d, &int(s)).unwrap();
                let g = genus_bound_g(&d, &int(s), &int(t)).unwrap();
                assert!(duke < g, "s = {s}, t = {t}: duke = {duke}, G = {g}");
            }
        }
    }

    #[test]
    fn tau_bound_drops_below_g_past_threshold() {
        // beta < t-alpha-2 instance: (s, t) = (11, 5) has alpha = 2,
        // beta = 0 < 1, so G(d,s,tau) < G(d,s,t) from d = 8st^4 + 1 on.
        let (s, t) = (int(11), int(5));
        let d = int(8 * 11 * 5i64.pow(4) + 1);
        let g_tau = genus_bound_g_tau(&d, &s, &t).unwrap();
        let g = genus_bound_g(&d, &s, &t).unwrap();
        assert!(g_tau < g, "g_tau = {g_tau}, g = {g}");
    }

    #[test]
    fn extremal_genus_values() {
        assert_eq!(extremal_space_genus_p(&int(11), &int(4)).unwrap(), int(14));
        assert_eq!(extremal_space_genus_p(&int(12), &int(4)).unwrap(), int(17));
        assert_eq!(extremal_space_genus_p(&int(6), &int(3)).unwrap(), int(3));
        assert!(extremal_space_genus_p(&int(13), &int(4)).is_err());
        assert!(extremal_space_genus_p(&int(10), &int(4)).is_err());
    }

    #[test]
    fn coefficient_identities() {
        let a = coeff_a(&int(11), &int(4)).unwrap();
        assert_eq!(a, frac(int(17), int(11)));
        // H = s(A+1)/2 + 1.
        let h = halphen_h(&int(11), &int(4)).unwrap();
        assert_eq!(h, frac(int(11), int(1)) * (&a + rat(1)) / rat(2) + rat(1));
        // s = t forces alpha = 0 and A' = A.
        for t in 3i64..=12 {
            let a = coeff_a(&int(t), &int(t)).unwrap();
            let ap = coeff_a_tau(&int(t), &int(t)).unwrap();
            assert_eq!(a, ap);
        }
        // 2t-2 <= s <= 2t forces A'' = A.
        for t in 3i64..=20 {
            for s in (2 * t - 2)..=(2 * t) {
                let a = coeff_a(&int(s), &int(t)).unwrap();
                let app = coeff_a_duke(&int(s)).unwrap();
                assert_eq!(a, app, "s = {s}, t = {t}");
            }
        }
    }

    #[test]
    fn a_tau_simplified_difference() {
        // A' - A = (alpha*x/s)(alpha*x + alpha + x - 2t + 3 + 2*beta).
        for t in 3i64..=15 {
            for s in 3..=(t * t - t) {
                let dec = decompose(&FlagParams::new(int(1), int(s), int(t)).unwrap()).unwrap();
                let diff =
                    coeff_a_tau(&int(s), &int(t)).unwrap() - coeff_a(&int(s), &int(t)).unwrap();
                let ax = &dec.alpha * &dec.x;
                let expect = frac(ax.clone(), int(s))
                    * rat_of(&(&ax + &dec.alpha + &dec.x - int(2 * t) + 3i32 + &dec.beta * 2i32));
                assert_eq!(diff, expect, "s = {s}, t = {t}");
            }
        }
    }

    #[test]
    fn bound_differences_are_affine_in_d() {
        // G(d,s,tau) - G(d,s,t) = (d/2)(A'-A) + (rho'-rho) and
        // G_duke - G(d,s,t) = (d/2)(A''-A) + (R-rho-1): the linear forms
        // behind the threshold reductions, checked against the full bounds.
        for t in 3i64..=7 {
            for s in 3..=(t * t - t) {
                for d in [1, 7, 5 * s, 8 * s * t.pow(4) + 1, 32 * t.pow(4) + 1] {
                    let eps = (d - 1) % s;
                    let g = genus_bound_g(&int(d), &int(s), &int(t)).unwrap();
                    let g_tau = genus_bound_g_tau(&int(d), &int(s), &int(t)).unwrap();
                    let a = coeff_a(&int(s), &int(t)).unwrap();
                    let a_tau = coeff_a_tau(&int(s), &int(t)).unwrap();
                    let (rho_v, _) = rho(&int(s), &int(t), &int(eps)).unwrap();
                    let (rho_p, _) = rho_tau(&int(s), &int(t), &int(eps)).unwrap();
                    assert_eq!(
                        &g_tau - &g,
                        frac(int(d), int(2)) * (&a_tau - &a) + (&rho_p - &rho_v),
                        "tau-form at d = {d}, s = {s}, t = {t}"
                    );
                    let g_duke = genus_bound_duke(&int(d), &int(s)).unwrap();
                    let a_duke = coeff_a_duke(&int(s)).unwrap();
                    let (r_v, _) = r_const(&int(s), &int(eps)).unwrap();
                    assert_eq!(
                        &g_duke - &g,
                        frac(int(d), int(2)) * (&a_duke - &a) + (&r_v - &rho_v - rat(1)),
                        "duke-form at d = {d}, s = {s}, t = {t}"
                    );
                }
            }
        }
    }

    #[test]
    fn ci_genus_values() {
        assert_eq!(ci_genus(&int(22), &int(11), &int(4)).unwrap(), int(38));
        assert_eq!(ci_genus(&int(33), &int(11), &int(4)).unwrap(), int(73));
        let e = ci_genus(&int(23), &int(11), &int(4)).unwrap_err();
        assert!(e.to_string().contains("divisible"), "{e}");
    }

    #[test]
    fn speciality_values() {
        let b = speciality_bounds(&int(22), &int(11), &int(4)).unwrap();
        assert_eq!(b.e1, frac(int(15), int(4)));
        assert_eq!(b.e2, Some(rat(3)));
        let b = speciality_bounds(&int(23), &int(11), &int(4)).unwrap();
        assert_eq!(b.e2, None);
    }

    #[test]
    fn speciality_gap_relation() {
        // e1 - e2 = s/t - t + 2 exactly, so e2 <= e1 iff s >= t^2 - 2t.
        for t in 3i64..=10 {
            for s in 3..=(t * t - t) {
                let d = int(4 * s);
                let b = speciality_bounds(&d, &int(s), &int(t)).unwrap();
                let gap = b.e1.clone() - b.e2.clone().unwrap();
                assert_eq!(
                    gap,
                    frac(int(s), int(t)) - rat(t) + rat(2),
                    "s = {s}, t = {t}"
                );
                assert_eq!(gap >= rat(0), s >= t * t - 2 * t, "s = {s}, t = {t}");
            }
        }
    }

    #[test]
    fn bound_report_worked_triple() {
        let params = FlagParams::new(int(22), int(11), int(4)).unwrap();
        let rep = bound_report(&params).unwrap();
        assert_eq!(rep.g, rat(40));
        assert_eq!(rep.h, rat(15));
        assert_eq!(rep.p, Some(int(14)));
        assert_eq!(rep.rho, rat(0));
        assert_eq!(rep.e2, Some(rat(3)));
        assert_eq!(rep.g_duke, rat(50));
        // 2H is an integer.
        assert!((rep.h * rat(2)).is_integer());
    }

    proptest! {
        /// |R| <= s^2 also well beyond the exhaustive sweep range.
        #[test]
        fn r_bound_random(s in 3i64..=5_000, eps_seed in 0i64..=i64::MAX) {
            let eps = eps_seed.rem_euclid(s);
            let (r, _) = r_const(&int(s), &int(eps)).unwrap();
            prop_assert!(r.abs() <= rat(s * s));
        }

        /// |rho| <= 2t^3 sampled at random in-range points beyond t = 12.
        #[test]
        fn rho_bound_random(t in 3i64..=40, s_seed in 0i64..=i64::MAX, eps_seed in 0i64..=i64::MAX) {
            let s = 3 + s_seed.rem_euclid(t * t - t - 2);
            let eps = eps_seed.rem_euclid(s);
            let (v, _) = rho(&int(s), &int(t), &int(eps)).unwrap();
            prop_assert!(v.abs() <= rat(2 * t * t * t));
            let (vp, _) = rho_tau(&int(s), &int(t), &int(eps)).unwrap();
            prop_assert!(vp.abs() <= rat(2 * t * t * t));
        }
    }
}
