// Full audit of the triple (d, s, t) = (22, 11, 4): the parameter
// decomposition, every bound, and the sharp complete-intersection data.
//
// Run with: cargo run --example worked_triple

use halphen::arith::int;
use halphen::{bounds, hilbert, FlagParams};

pub fn main() -> Result<(), halphen::Error> {
    let params = FlagParams::new(int(22), int(11), int(4))?;
    let rep = bounds::bound_report(&params)?;

    let dec = &rep.decomposition;
    println!(
        "triple: d = {}, s = {}, t = {}",
        params.d, params.s, params.t
    );
    println!(
        "splits: s-1 = {}*t + {}, d-1 = {}*s + {}, tau = {}",
        dec.alpha, dec.beta, dec.m, dec.epsilon, dec.tau
    );

    println!("genus bound G        = {}", rep.g);
    println!("companion G(d,s,tau) = {}", rep.g_tau);
    println!("surface-only bound   = {}", rep.g_duke);
    println!(
        "H = {}, P = {:?}, rho = {}, R = {}",
        rep.h, rep.p, rep.rho, rep.r
    );
    println!(
        "case: {} (g < {})",
        rep.case.theorem1_case.label(),
        rep.case.bound_value
    );

    // d = 22 is a multiple of s = 11, so the sharp value is attained by the
    // complete intersection with a quadric (m + 1 = 2).
    let ci = bounds::ci_genus(&params.d, &params.s, &params.t)?;
    let e = hilbert::ci_speciality(&params.d, &params.s, &params.t)?;
    println!("complete intersection: genus = {ci}, speciality = {e}");
    let e2 = rep.e2.as_ref().map(|v| v.to_string()).unwrap_or_default();
    println!("speciality bounds: e1 = {}, e2 = {}", rep.e1, e2);

    assert_eq!(rep.g, halphen::arith::rat(40));
    assert_eq!(ci, int(38));
    assert_eq!(e, int(3));
    Ok(())
}
