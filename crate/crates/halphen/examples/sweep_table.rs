// Emit a CSV table of bounds over a degree progression, the same payload
// the `table` subcommand produces. Useful as a template for scripted
// parameter sweeps.
//
// Run with: cargo run --example sweep_table

use halphen::arith::int;
use halphen::report::{rat_str, render_table, Format};
use halphen::{bounds, hilbert};

fn main() -> Result<(), halphen::Error> {
    let (s, t) = (int(11), int(4));
    let headers: Vec<String> = ["d", "G", "ci_genus", "e2", "ci_speciality"]
        .into_iter()
        .map(String::from)
        .collect();

    let mut rows = Vec::new();
    for k in 1..=10i64 {
        let d = int(11 * k);
        let g = bounds::genus_bound_g(&d, &s, &t)?;
        let ci = bounds::ci_genus(&d, &s, &t)?;
        let e2 = bounds::speciality_bounds(&d, &s, &t)?.e2.expect("d = 11k");
        let e = hilbert::ci_speciality(&d, &s, &t)?;
        rows.push(vec![
            d.to_string(),
            rat_str(&g),
            ci.to_string(),
            rat_str(&e2),
            e.to_string(),
        ]);
    }

    print!("{}", render_table(&headers, &rows, Format::Csv));
    Ok(())
}
