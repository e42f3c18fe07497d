//! Rendering of reports in the three output formats.
//!
//! Exact rationals are serialized as `p/q` strings in the `csv` and `json`
//! formats, never as decimals; the JSON schema (set of keys) is stable
//! across runs for a given command and flags. Decimal rendering is a
//! presentation-layer option for the human format only, and is always
//! marked approximate.

use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::arith::{Int, Rat};
use crate::bounds::BoundReport;
use crate::hilbert::HilbertReport;
use crate::verify::VerifyReport;

/// Output format of a command payload.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Human,
    Csv,
    Json,
}

/// `p/q` with the denominator always present (`"40/1"`), the exact-value
/// wire format.
pub fn rat_str(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Human-facing exact rendering: plain integer when the value is integral,
/// `p/q` otherwise.
pub fn rat_display(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Fixed-point decimal with `digits` fractional digits, rounded half-even.
pub fn decimal_str(r: &Rat, digits: u32) -> String {
    let scale = Int::from(10u32).pow(digits);
    let scaled_num = r.numer().abs() * &scale;
    let den = r.denom().clone(); // positive by Ratio's normalization
    let (mut q, rem) = num_integer::Integer::div_mod_floor(&scaled_num, &den);
    let twice = &rem * 2i32;
    let round_up = match twice.cmp(&den) {
        std::cmp::Ordering::Greater => true,
        std::cmp::Ordering::Less => false,
        std::cmp::Ordering::Equal => num_integer::Integer::is_odd(&q),
    };
    if round_up {
        q += 1i32;
    }
    let digits_usize = digits as usize;
    let body = q.to_string();
    let padded = if body.len() <= digits_usize {
        format!("{}{}", "0".repeat(digits_usize + 1 - body.len()), body)
    } else {
        body
    };
    let split = padded.len() - digits_usize;
    let rendered = if digits == 0 {
        padded
    } else {
        format!("{}.{}", &padded[..split], &padded[split..])
    };
    if r.is_negative() && !q.is_zero() {
        format!("-{rendered}")
    } else {
        rendered
    }
}

/// Human scalar rendering honoring the optional decimal presentation.
fn human_rat(r: &Rat, decimal: Option<u32>) -> String {
    match decimal {
        Some(k) if !r.is_integer() => format!("{} ~= {}", rat_display(r), decimal_str(r, k)),
        _ => rat_display(r),
    }
}

fn csv_row(fields: &[String]) -> String {
    fields.join(",")
}

fn opt_int(v: &Option<Int>) -> String {
    v.as_ref().map(|x| x.to_string()).unwrap_or_default()
}

fn opt_rat(v: &Option<Rat>) -> String {
    v.as_ref().map(rat_str).unwrap_or_default()
}

fn opt_i64(v: Option<i64>) -> Value {
    match v {
        Some(x) => json!(x),
        None => Value::Null,
    }
}

pub fn render_bound(rep: &BoundReport, format: Format, decimal: Option<u32>) -> String {
    match format {
        Format::Human => {
            let dec = &rep.decomposition;
            let case = &rep.case;
            let mut out = String::new();
            out.push_str(&format!(
                "input: d = {}, s = {}, t = {}\n",
                rep.params.d, rep.params.s, rep.params.t
            ));
            out.push_str(&format!(
                "decomposition: alpha = {}, beta = {}, m = {}, epsilon = {}, tau = {},\n\
                 \u{20}              alpha' = {}, beta' = {}, x = {}, w = {}, w1 = {}, nu = {}\n",
                dec.alpha,
                dec.beta,
                dec.m,
                dec.epsilon,
                dec.tau,
                dec.alpha_p,
                dec.beta_p,
                dec.x,
                dec.w,
                dec.w1,
                dec.nu
            ));
            out.push_str(&format!("G      = {}\n", human_rat(&rep.g, decimal)));
            out.push_str(&format!("G_tau  = {}\n", human_rat(&rep.g_tau, decimal)));
            out.push_str(&format!("G_duke = {}\n", human_rat(&rep.g_duke, decimal)));
            out.push_str(&format!(
                "H = {}   H_tau = {}   P = {}\n",
                human_rat(&rep.h, decimal),
                human_rat(&rep.h_tau, decimal),
                rep.p
                    .as_ref()
                    .map(|p| p.to_string())
                    .unwrap_or_else(|| "undefined (s outside t^2-2t+3..t^2-t)".into())
            ));
            out.push_str(&format!(
                "rho     = {} ({}, u = {}, v = {})\n",
                human_rat(&rep.rho, decimal),
                rep.rho_case.case_tag.label(),
                rep.rho_case.u,
                rep.rho_case.v
            ));
            out.push_str(&format!(
                "rho_tau = {} ({}, u = {}, v = {})\n",
                human_rat(&rep.rho_tau, decimal),
                rep.rho_tau_case.case_tag.label(),
                rep.rho_tau_case.u,
                rep.rho_tau_case.v
            ));
            out.push_str(&format!(
                "R       = {} ({}, k = {}, delta = {}, pi = {})\n",
                human_rat(&rep.r, decimal),
                rep.r_case.case_tag.label(),
                rep.r_case.k,
                rep.r_case.delta,
                rep.r_case.pi
            ));
            out.push_str(&format!(
                "A = {}   A_tau = {}   A_duke = {}\n",
                human_rat(&rep.a, decimal),
                human_rat(&rep.a_tau, decimal),
                human_rat(&rep.a_duke, decimal)
            ));
            out.push_str(&format!(
                "speciality: e1 = {}, e2 = {}\n",
                human_rat(&rep.e1, decimal),
                rep.e2
                    .as_ref()
                    .map(|e| human_rat(e, decimal))
                    .unwrap_or_else(|| "undefined (d not divisible by s)".into())
            ));
            out.push_str(&format!(
                "case: {} (g < {}), slack = {}\n",
                case.theorem1_case.label(),
                human_rat(&case.bound_value, decimal),
                human_rat(&case.slack, decimal)
            ));
            out.push_str(&format!(
                "d0 = {}, d above threshold: {}\n",
                case.d0,
                if case.d_above_threshold { "yes" } else { "no" }
            ));
            out.push_str(&format!(
                "sharp regime: applicable: {}, band = {}\n",
                if case.theorem2_applicable {
                    "yes"
                } else {
                    "no"
                },
                human_rat(&case.theorem2_band, decimal)
            ));
            out
        }
        Format::Csv => {
            let dec = &rep.decomposition;
            let case = &rep.case;
            let header = "d,s,t,alpha,beta,m,epsilon,tau,alpha_p,beta_p,x,w,w1,nu,\
                          G,G_tau,G_duke,H,H_tau,P,rho,rho_tau,R,A,A_tau,A_duke,e1,e2,\
                          case,d0,d_above_threshold,bound,strict,slack,theorem2_applicable,theorem2_band";
            let row = csv_row(&[
                rep.params.d.to_string(),
                rep.params.s.to_string(),
                rep.params.t.to_string(),
                dec.alpha.to_string(),
                dec.beta.to_string(),
                dec.m.to_string(),
                dec.epsilon.to_string(),
                dec.tau.to_string(),
                dec.alpha_p.to_string(),
                dec.beta_p.to_string(),
                dec.x.to_string(),
                dec.w.to_string(),
                dec.w1.to_string(),
                dec.nu.to_string(),
                rat_str(&rep.g),
                rat_str(&rep.g_tau),
                rat_str(&rep.g_duke),
                rat_str(&rep.h),
                rat_str(&rep.h_tau),
                opt_int(&rep.p),
                rat_str(&rep.rho),
                rat_str(&rep.rho_tau),
                rat_str(&rep.r),
                rat_str(&rep.a),
                rat_str(&rep.a_tau),
                rat_str(&rep.a_duke),
                rat_str(&rep.e1),
                opt_rat(&rep.e2),
                case.theorem1_case.label().to_string(),
                case.d0.to_string(),
                case.d_above_threshold.to_string(),
                rat_str(&case.bound_value),
                case.strict.to_string(),
                rat_str(&case.slack),
                case.theorem2_applicable.to_string(),
                rat_str(&case.theorem2_band),
            ]);
            format!("{header}\n{row}\n")
        }
        Format::Json => {
            let dec = &rep.decomposition;
            let case = &rep.case;
            let v = json!({
                "command": "bound",
                "d": rep.params.d.to_string(),
                "s": rep.params.s.to_string(),
                "t": rep.params.t.to_string(),
                "decomposition": {
                    "alpha": dec.alpha.to_string(),
                    "beta": dec.beta.to_string(),
                    "m": dec.m.to_string(),
                    "epsilon": dec.epsilon.to_string(),
                    "tau": dec.tau.to_string(),
                    "alpha_p": dec.alpha_p.to_string(),
                    "beta_p": dec.beta_p.to_string(),
                    "x": dec.x.to_string(),
                    "w": dec.w.to_string(),
                    "w1": dec.w1.to_string(),
                    "nu": dec.nu.to_string(),
                },
                "G": rat_str(&rep.g),
                "G_tau": rat_str(&rep.g_tau),
                "G_duke": rat_str(&rep.g_duke),
                "H": rat_str(&rep.h),
                "H_tau": rat_str(&rep.h_tau),
                "P": rep.p.as_ref().map(|p| p.to_string()),
                "rho": rat_str(&rep.rho),
                "rho_case": {
                    "branch": rep.rho_case.case_tag.label(),
                    "u": rep.rho_case.u.to_string(),
                    "v": rep.rho_case.v.to_string(),
                },
                "rho_tau": rat_str(&rep.rho_tau),
                "rho_tau_case": {
                    "branch": rep.rho_tau_case.case_tag.label(),
                    "u": rep.rho_tau_case.u.to_string(),
                    "v": rep.rho_tau_case.v.to_string(),
                },
                "R": rat_str(&rep.r),
                "R_case": {
                    "branch": rep.r_case.case_tag.label(),
                    "k": rep.r_case.k.to_string(),
                    "delta": rep.r_case.delta.to_string(),
                    "pi": rep.r_case.pi.to_string(),
                },
                "A": rat_str(&rep.a),
                "A_tau": rat_str(&rep.a_tau),
                "A_duke": rat_str(&rep.a_duke),
                "e1": rat_str(&rep.e1),
                "e2": rep.e2.as_ref().map(rat_str),
                "case": {
                    "theorem1_case": case.theorem1_case.label(),
                    "d0": case.d0.to_string(),
                    "d_above_threshold": case.d_above_threshold,
                    "bound": rat_str(&case.bound_value),
                    "strict": case.strict,
                    "slack": rat_str(&case.slack),
                    "theorem2_applicable": case.theorem2_applicable,
                    "theorem2_band": rat_str(&case.theorem2_band),
                },
            });
            format!(
                "{}\n",
                serde_json::to_string_pretty(&v).expect("static schema")
            )
        }
    }
}

pub fn render_hilbert(rep: &HilbertReport, format: Format, decimal: Option<u32>) -> String {
    let _ = decimal; // every value here is an exact integer
    match format {
        Format::Human => {
            let p = &rep.profile;
            let caractere = p
                .caractere
                .iter()
                .map(|n| n.to_string())
                .collect::<Vec<_>>()
                .join(",");
            let mut out = String::new();
            out.push_str(&format!("s = {}, t = {}, nu = {}\n", p.s, p.t, p.nu));
            out.push_str(&format!("caractere = ({caractere})\n"));
            out.push_str(&format!(
                "stabilization index = {}\nP = {}\n",
                p.stabilization_index, rep.p
            ));
            out.push_str("  n    h(n)    h_sigma(n)\n");
            for (n, h, acc) in &rep.h_table {
                out.push_str(&format!("{n:>3}  {h:>6}  {acc:>10}\n"));
            }
            if let Some(ci) = &rep.ci {
                out.push_str(&format!(
                    "complete intersection: d = {}, m = {}\n",
                    ci.d, ci.m
                ));
                out.push_str("  n    h_B'(n)\n");
                for (n, v) in &ci.table {
                    out.push_str(&format!("{n:>3}  {v:>7}\n"));
                }
                out.push_str(&format!(
                    "genus p_a(B) = {}\nspeciality e = {}\n",
                    ci.genus, ci.speciality
                ));
            }
            out
        }
        Format::Csv => {
            let mut out = String::new();
            match &rep.ci {
                None => {
                    out.push_str("n,h,h_sigma\n");
                    for (n, h, acc) in &rep.h_table {
                        out.push_str(&format!("{n},{h},{acc}\n"));
                    }
                }
                Some(ci) => {
                    out.push_str("n,h,h_sigma,h_ci\n");
                    let mut acc = Int::zero();
                    for (n, v) in &ci.table {
                        let h = match rep.h_table.get(*n as usize) {
                            Some((_, h, a)) => {
                                acc = a.clone();
                                h.clone()
                            }
                            None => {
                                acc += &rep.profile.s;
                                rep.profile.s.clone()
                            }
                        };
                        out.push_str(&format!("{n},{h},{acc},{v}\n"));
                    }
                }
            }
            out
        }
        Format::Json => {
            let p = &rep.profile;
            let v = json!({
                "command": "hilbert",
                "s": p.s.to_string(),
                "t": p.t.to_string(),
                "nu": p.nu.to_string(),
                "caractere": p.caractere.iter().map(|n| n.to_string()).collect::<Vec<_>>(),
                "stabilization_index": p.stabilization_index.to_string(),
                "P": rep.p.to_string(),
                "h_table": rep
                    .h_table
                    .iter()
                    .map(|(n, h, acc)| json!({"n": n, "h": h.to_string(), "h_sigma": acc.to_string()}))
                    .collect::<Vec<_>>(),
                "ci": rep.ci.as_ref().map(|ci| json!({
                    "d": ci.d.to_string(),
                    "m": ci.m.to_string(),
                    "genus": ci.genus.to_string(),
                    "speciality": ci.speciality.to_string(),
                    "table": ci
                        .table
                        .iter()
                        .map(|(n, v)| json!({"n": n, "h_ci": v.to_string()}))
                        .collect::<Vec<_>>(),
                })),
            });
            format!(
                "{}\n",
                serde_json::to_string_pretty(&v).expect("static schema")
            )
        }
    }
}

pub fn render_verify(rep: &VerifyReport, format: Format) -> String {
    match format {
        Format::Human => {
            let mut out = String::new();
            out.push_str(&format!("campaign: {}\n", rep.campaign));
            out.push_str(&format!("checks: {}\n", rep.points_checked));
            out.push_str(&format!(
                "failures: {}\nobservations: {}\n",
                rep.failures.len(),
                rep.observations.len()
            ));
            for st in &rep.stats {
                out.push_str(&format!("stat {} = {}\n", st.name, st.value));
            }
            for f in &rep.failures {
                out.push_str(&format!(
                    "FAIL {} [{}] {}\n",
                    point_str(f.t, f.s, f.epsilon, f.d),
                    f.relation,
                    f.witnessed
                ));
            }
            for o in &rep.observations {
                out.push_str(&format!(
                    "note {} {}\n",
                    point_str(o.t, o.s, o.epsilon, None),
                    o.note
                ));
            }
            out.push_str(if rep.passed() {
                "result: PASS\n"
            } else {
                "result: FAIL\n"
            });
            out
        }
        Format::Csv => {
            let mut out = String::new();
            out.push_str("kind,t,s,epsilon,d,name,detail\n");
            out.push_str(&format!(
                "summary,,,,,points_checked,{}\n",
                rep.points_checked
            ));
            for f in &rep.failures {
                out.push_str(&csv_row(&[
                    "failure".into(),
                    f.t.map(|v| v.to_string()).unwrap_or_default(),
                    f.s.map(|v| v.to_string()).unwrap_or_default(),
                    f.epsilon.map(|v| v.to_string()).unwrap_or_default(),
                    f.d.map(|v| v.to_string()).unwrap_or_default(),
                    quote_csv(&f.relation),
                    quote_csv(&f.witnessed),
                ]));
                out.push('\n');
            }
            for o in &rep.observations {
                out.push_str(&csv_row(&[
                    "observation".into(),
                    o.t.map(|v| v.to_string()).unwrap_or_default(),
                    o.s.map(|v| v.to_string()).unwrap_or_default(),
                    o.epsilon.map(|v| v.to_string()).unwrap_or_default(),
                    String::new(),
                    "note".into(),
                    quote_csv(&o.note),
                ]));
                out.push('\n');
            }
            for st in &rep.stats {
                out.push_str(&csv_row(&[
                    "stat".into(),
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                    quote_csv(&st.name),
                    quote_csv(&st.value),
                ]));
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let v = json!({
                "command": "verify",
                "campaign": rep.campaign,
                "points_checked": rep.points_checked,
                "passed": rep.passed(),
                "failures": rep.failures.iter().map(|f| json!({
                    "t": opt_i64(f.t),
                    "s": opt_i64(f.s),
                    "epsilon": opt_i64(f.epsilon),
                    "d": opt_i64(f.d),
                    "relation": f.relation,
                    "witnessed": f.witnessed,
                })).collect::<Vec<_>>(),
                "observations": rep.observations.iter().map(|o| json!({
                    "t": opt_i64(o.t),
                    "s": opt_i64(o.s),
                    "epsilon": opt_i64(o.epsilon),
                    "note": o.note,
                })).collect::<Vec<_>>(),
                "stats": rep.stats.iter().map(|s| json!({
                    "name": s.name,
                    "value": s.value,
                })).collect::<Vec<_>>(),
            });
            format!(
                "{}\n",
                serde_json::to_string_pretty(&v).expect("static schema")
            )
        }
    }
}

fn point_str(t: Option<i64>, s: Option<i64>, eps: Option<i64>, d: Option<i64>) -> String {
    let mut parts = Vec::new();
    if let Some(t) = t {
        parts.push(format!("t={t}"));
    }
    if let Some(s) = s {
        parts.push(format!("s={s}"));
    }
    if let Some(e) = eps {
        parts.push(format!("eps={e}"));
    }
    if let Some(d) = d {
        parts.push(format!("d={d}"));
    }
    format!("({})", parts.join(", "))
}

fn quote_csv(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Renders a generic table. `cells` are pre-rendered exact strings; the
/// human format optionally swaps in decimal approximations produced by the
/// caller.
pub fn render_table(headers: &[String], rows: &[Vec<String>], format: Format) -> String {
    match format {
        Format::Human => {
            let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
            for row in rows {
                for (i, cell) in row.iter().enumerate() {
                    widths[i] = widths[i].max(cell.len());
                }
            }
            let mut out = String::new();
            let fmt_row = |cells: &[String], widths: &[usize]| {
                cells
                    .iter()
                    .zip(widths)
                    .map(|(c, w)| format!("{c:>w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
            };
            out.push_str(&fmt_row(headers, &widths));
            out.push('\n');
            for row in rows {
                out.push_str(&fmt_row(row, &widths));
                out.push('\n');
            }
            out
        }
        Format::Csv => {
            let mut out = String::new();
            out.push_str(&csv_row(headers));
            out.push('\n');
            for row in rows {
                out.push_str(&csv_row(
                    &row.iter().map(|c| quote_csv(c)).collect::<Vec<_>>(),
                ));
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let v = json!({
                "command": "table",
                "columns": headers,
                "rows": rows.iter().map(|row| {
                    let obj: serde_json::Map<String, Value> = headers
                        .iter()
                        .cloned()
                        .zip(row.iter().map(|c| Value::String(c.clone())))
                        .collect();
                    Value::Object(obj)
                }).collect::<Vec<_>>(),
            });
            format!(
                "{}\n",
                serde_json::to_string_pretty(&v).expect("static schema")
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{frac, int, rat};

    #[test]
    fn rat_strings() {
        assert_eq!(rat_str(&rat(40)), "40/1");
        assert_eq!(rat_str(&frac(int(15), int(4))), "15/4");
        assert_eq!(rat_display(&rat(40)), "40");
        assert_eq!(rat_display(&frac(int(15), int(4))), "15/4");
        assert_eq!(rat_str(&frac(int(-3), int(6))), "-1/2");
    }

    #[test]
    fn decimal_round_half_even() {
        assert_eq!(decimal_str(&frac(int(1), int(8)), 2), "0.12");
        assert_eq!(decimal_str(&frac(int(3), int(8)), 2), "0.38");
        assert_eq!(decimal_str(&frac(int(-1), int(8)), 2), "-0.12");
        assert_eq!(decimal_str(&frac(int(15), int(4)), 3), "3.750");
        assert_eq!(decimal_str(&rat(40), 2), "40.00");
        assert_eq!(decimal_str(&frac(int(5), int(2)), 0), "2");
        assert_eq!(decimal_str(&frac(int(7), int(2)), 0), "4");
        assert_eq!(decimal_str(&frac(int(-1), int(1000)), 1), "0.0");
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(quote_csv("plain"), "plain");
        assert_eq!(quote_csv("a,b"), "\"a,b\"");
        assert_eq!(quote_csv("say \"hi\""), "\"say \"\"hi\"\"\"");
    }

    proptest::proptest! {
        /// The rendered decimal is within half an ulp of the exact value,
        /// and at exactly half an ulp the final digit is even.
        #[test]
        fn decimal_is_correctly_rounded(p in -100_000i64..=100_000, q in 1i64..=100_000, k in 0u32..=6) {
            let r = frac(int(p), int(q));
            let rendered = decimal_str(&r, k);
            let (sign, digits) = match rendered.strip_prefix('-') {
                Some(rest) => (-1, rest),
                None => (1, rendered.as_str()),
            };
            let units: i128 = digits.replace('.', "").parse().unwrap();
            let scale = int(10i64.pow(k));
            let parsed = frac(int(sign) * Int::from(units), scale.clone());
            let err = (&r - &parsed) * Rat::from_integer(scale) * rat(2);
            proptest::prop_assert!(err.abs() <= rat(1), "r = {r}, rendered = {rendered}");
            if err.abs() == rat(1) {
                let last = digits.chars().last().unwrap().to_digit(10).unwrap();
                proptest::prop_assert_eq!(last % 2, 0, "tie must round to even: {}", rendered);
            }
        }
    }
}
