// How the three genus bounds relate as the degree grows: the main bound
// G(d,s,t), its companion G(d,s,tau), and the surface-only bound, shown at
// degrees straddling the 32t^4 threshold where the surface-only bound
// drops below G for small s.
//
// Run with: cargo run --example genus_bounds

use halphen::arith::int;
use halphen::bounds;

fn main() -> Result<(), halphen::Error> {
    let (s, t) = (int(5), int(4)); // s <= 2t-3, the surface-only regime
    let threshold = 32 * 4i64.pow(4);

    println!("s = {s}, t = {t}, threshold 32t^4 = {threshold}");
    println!(
        "{:>8}  {:>14}  {:>14}  {:>14}",
        "d", "G(d,s,t)", "G(d,s,tau)", "G_surface"
    );
    for d in [100, 1000, threshold, threshold + 1, threshold + 1000] {
        let g = bounds::genus_bound_g(&int(d), &s, &t)?;
        let g_tau = bounds::genus_bound_g_tau(&int(d), &s, &t)?;
        let g_duke = bounds::genus_bound_duke(&int(d), &s)?;
        println!("{d:>8}  {g:>14}  {g_tau:>14}  {g_duke:>14}");
    }

    // Above the threshold the surface-only bound is strictly smaller.
    let d = int(threshold + 1);
    let g = bounds::genus_bound_g(&d, &s, &t)?;
    let g_duke = bounds::genus_bound_duke(&d, &s)?;
    assert!(g_duke < g);
    println!("\nat d = {d}: G_surface < G confirms the small-s comparison");

    // The d/2-coefficients explain the asymptotics.
    println!(
        "coefficients: A = {}, A_tau = {}, A_surface = {}",
        bounds::coeff_a(&s, &t)?,
        bounds::coeff_a_tau(&s, &t)?,
        bounds::coeff_a_duke(&s)?
    );
    Ok(())
}
