// The case dichotomy over the epsilon lattice: for fixed (s, t), every
// residue epsilon of d-1 modulo s lands in exactly one bullet, either the
// plain bound g < G or the slack bullet g < G + 4t^3. Also shows the
// degree thresholds and the sharp-regime estimate for a large degree.
//
// Run with: cargo run --example classify_lattice

use halphen::arith::int;
use halphen::classify::{classify, theorem2_estimate, Theorem1Case};

pub fn main() -> Result<(), halphen::Error> {
    let (s, t) = (8i64, 5i64); // beta = t-alpha-2 here: the residual bullet fires

    println!("epsilon dichotomy at s = {s}, t = {t}:");
    let mut strict = Vec::new();
    let mut slack = Vec::new();
    for eps in 0..s {
        let d = 1 + eps; // realizes this epsilon
        let label = classify(&int(d), &int(s), &int(t))?;
        match label.theorem1_case {
            Theorem1Case::StrictG => strict.push(eps),
            Theorem1Case::GPlusSlack => slack.push(eps),
        }
    }
    println!("  plain bound  (g < G):        eps in {strict:?}");
    println!("  slack bullet (g < G + 4t^3): eps in {slack:?}");

    let label = classify(&int(100), &int(s), &int(t))?;
    println!(
        "threshold: d0 = {}, bound for d = 100: g < {} (above threshold: {})",
        label.d0, label.bound_value, label.d_above_threshold
    );

    // Sharp regime on the extremal range: s in t^2-2t+3 ..= t^2-t and d > s^4.
    let (s, t) = (int(11), int(4));
    let d = int(11 * 14_642); // divisible by s and > s^4
    let est = theorem2_estimate(&d, &s, &t)?;
    let sharp = est
        .sharp
        .as_ref()
        .map(|v| v.to_string())
        .unwrap_or_default();
    println!(
        "\nsharp regime at (d, s, t) = ({d}, {s}, {t}):\n  center = {}, band = {}, exact value = {sharp}",
        est.center, est.band
    );
    assert_eq!(est.sharp.as_ref(), Some(&est.center));
    Ok(())
}
