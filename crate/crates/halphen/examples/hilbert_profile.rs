// The caractère numérique and Hilbert tables of the extremal space curve,
// and the derived complete-intersection profile that attains the sharp
// genus and speciality.
//
// Run with: cargo run --example hilbert_profile

use halphen::arith::int;
use halphen::hilbert::HilbertReport;

fn main() -> Result<(), halphen::Error> {
    let (s, t, d) = (int(11), int(4), int(22));
    let rep = HilbertReport::compute(&s, &t, Some(&d))?;

    let caractere: Vec<String> = rep
        .profile
        .caractere
        .iter()
        .map(|n| n.to_string())
        .collect();
    println!("s = {s}, t = {t}: caractere = ({})", caractere.join(","));
    println!(
        "degree recovery: sum(n_i - i) = {}",
        rep.profile.degree_from_caractere()
    );
    println!(
        "h stabilizes at n = {} with h = s",
        rep.profile.stabilization_index
    );
    println!("genus of the extremal curve: P = {}", rep.p);

    println!("\n  n   h(n)   h_sigma(n)");
    for (n, h, acc) in &rep.h_table {
        println!("{n:>3}  {h:>5}  {acc:>10}");
    }

    let ci = rep.ci.expect("d is a multiple of s");
    println!(
        "\ncomplete intersection of degree d = {} (m = {}):",
        ci.d, ci.m
    );
    println!("  n   h_B'(n)");
    for (n, v) in &ci.table {
        println!("{n:>3}  {v:>7}");
    }
    println!(
        "genus p_a(B) = {}, speciality e(B) = {}",
        ci.genus, ci.speciality
    );
    Ok(())
}
