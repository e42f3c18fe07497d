// Run every verification campaign at a reduced lattice and print one
// summary line per campaign.
//
// The `hilbert` campaign is expected to report counterexamples: the
// stabilization identity h(2t-5) = s-1 genuinely fails at the right
// endpoint s = t^2 - t of the admissible range (the exact value there is
// s-2), and the campaign's job is to say so rather than skip the points.
//
// Run with: cargo run --release --example verify_campaigns

use halphen::verify::{run, Campaign, LatticeSpec};

fn main() -> Result<(), halphen::Error> {
    for campaign in Campaign::ALL {
        let spec = LatticeSpec {
            t_max: campaign.default_lattice().t_max.min(8),
            ..campaign.default_lattice()
        };
        let rep = run(campaign, &spec)?;
        println!(
            "{:8}  checks: {:>6}  failures: {:>2}  observations: {:>2}  {}",
            rep.campaign,
            rep.points_checked,
            rep.failures.len(),
            rep.observations.len(),
            if rep.passed() { "PASS" } else { "FAIL" }
        );
        for f in &rep.failures {
            println!(
                "          counterexample at (t={:?}, s={:?}): {} [{}]",
                f.t.unwrap_or(0),
                f.s.unwrap_or(0),
                f.relation,
                f.witnessed
            );
        }
        for st in &rep.stats {
            println!("          {} = {}", st.name, st.value);
        }
    }
    Ok(())
}
