//! Command-line front end: compute the bound report for a triple, print
//! Hilbert profiles, run verification campaigns, and emit parameter tables.
//!
//! Exit codes: 0 = success / all checks passed, 1 = a verification campaign
//! found failures, 2 = input or usage error.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use halphen::arith::{div_rem_euclid, int, rat_of};
use halphen::report::{self, decimal_str, rat_str, Format};
use halphen::verify::{Campaign, EpsRule, SRule};
use halphen::{bounds, hilbert, FlagParams, Int, Rat};

#[derive(Parser)]
#[command(
    name = "halphen",
    version,
    about = "Exact genus bounds, Hilbert profiles and verification sweeps for curves in P^4 under flag conditions"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,

    /// Output format for the payload
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Human)]
    format: FormatArg,

    /// Render non-integer rationals with k decimal digits (round-half-even)
    /// in human output, marked approximate; csv/json stay exact
    #[arg(long, global = true, value_name = "K")]
    decimal: Option<u32>,

    /// Write the payload to PATH instead of stdout (same bytes, same format)
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Human,
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Human => Format::Human,
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute every bound and the case classification for one triple
    Bound {
        #[arg(long)]
        d: Int,
        #[arg(long)]
        s: Int,
        #[arg(long)]
        t: Int,
    },
    /// Print the caractère and Hilbert tables for (s, t); with --d, also the
    /// complete-intersection profile and its speciality
    Hilbert {
        #[arg(long)]
        s: Int,
        #[arg(long)]
        t: Int,
        /// Degree of a complete intersection (must be a multiple of s)
        #[arg(long)]
        d: Option<Int>,
    },
    /// Run a verification campaign (rho, R, A, lemma1, lemma2, remark, hilbert)
    Verify {
        campaign: String,
        /// Lower end of the t sweep (campaign default if omitted)
        #[arg(long, value_name = "T")]
        t_min: Option<i64>,
        /// Upper end of the t sweep (campaign default if omitted)
        #[arg(long, value_name = "T")]
        t_max: Option<i64>,
        /// Lower end of the s sweep (campaign default if omitted)
        #[arg(long, value_name = "S")]
        s_min: Option<i64>,
        /// Upper end of the s sweep (campaign default if omitted)
        #[arg(long, value_name = "S")]
        s_max: Option<i64>,
    },
    /// Tabulate bound columns while one variable sweeps a range
    Table {
        /// The sweeping variable
        #[arg(long, value_enum)]
        var: Var,
        #[arg(long)]
        from: i64,
        #[arg(long)]
        to: i64,
        #[arg(long, default_value_t = 1)]
        step: i64,
        /// Fixed degree (forbidden when it is the sweeping variable)
        #[arg(long)]
        d: Option<Int>,
        #[arg(long)]
        s: Option<Int>,
        #[arg(long)]
        t: Option<Int>,
        /// Comma-separated list of columns
        #[arg(long, value_enum, value_delimiter = ',', default_value = "g")]
        columns: Vec<Column>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Var {
    D,
    S,
    T,
    Epsilon,
}

impl Var {
    fn name(self) -> &'static str {
        match self {
            Var::D => "d",
            Var::S => "s",
            Var::T => "t",
            Var::Epsilon => "epsilon",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Column {
    G,
    GTau,
    GDuke,
    H,
    HTau,
    P,
    Rho,
    RhoTau,
    R,
    A,
    ATau,
    ADuke,
    E1,
    E2,
    CiGenus,
}

impl Column {
    fn header(self) -> &'static str {
        match self {
            Column::G => "G",
            Column::GTau => "G_tau",
            Column::GDuke => "G_duke",
            Column::H => "H",
            Column::HTau => "H_tau",
            Column::P => "P",
            Column::Rho => "rho",
            Column::RhoTau => "rho_tau",
            Column::R => "R",
            Column::A => "A",
            Column::ATau => "A_tau",
            Column::ADuke => "A_duke",
            Column::E1 => "e1",
            Column::E2 => "e2",
            Column::CiGenus => "ci_genus",
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format: Format = cli.format.into();
    if cli.decimal.is_some() && format != Format::Human {
        eprintln!("error: --decimal applies to the human format only; csv and json stay exact");
        return ExitCode::from(2);
    }
    let run = || -> Result<(String, ExitCode), halphen::Error> {
        match &cli.cmd {
            Cmd::Bound { d, s, t } => {
                let params = FlagParams::new(d.clone(), s.clone(), t.clone())?;
                let rep = bounds::bound_report(&params)?;
                Ok((
                    report::render_bound(&rep, format, cli.decimal),
                    ExitCode::SUCCESS,
                ))
            }
            Cmd::Hilbert { s, t, d } => {
                let rep = hilbert::HilbertReport::compute(s, t, d.as_ref())?;
                Ok((
                    report::render_hilbert(&rep, format, cli.decimal),
                    ExitCode::SUCCESS,
                ))
            }
            Cmd::Verify {
                campaign,
                t_min,
                t_max,
                s_min,
                s_max,
            } => {
                let c = Campaign::parse(campaign).ok_or_else(|| {
                    halphen::Error::Constraint(format!(
                        "unknown campaign '{campaign}' (known: rho, R, A, lemma1, lemma2, remark, hilbert)"
                    ))
                })?;
                let mut spec = c.default_lattice();
                if let Some(v) = t_min {
                    spec.t_min = *v;
                }
                if let Some(v) = t_max {
                    spec.t_max = *v;
                }
                if s_min.is_some() || s_max.is_some() {
                    let (lo, hi) = match spec.s_rule {
                        SRule::Explicit { lo, hi } => (lo, hi),
                        SRule::AllUpToT2MinusT => (3, i64::MAX),
                    };
                    spec.s_rule = SRule::Explicit {
                        lo: s_min.unwrap_or(lo),
                        hi: s_max.unwrap_or(hi),
                    };
                }
                spec.eps_rule = EpsRule::All;
                let rep = halphen::verify::run(c, &spec)?;
                eprintln!(
                    "campaign {}: {} checks, {} failures, {} observations",
                    rep.campaign,
                    rep.points_checked,
                    rep.failures.len(),
                    rep.observations.len()
                );
                let code = if rep.passed() {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                };
                Ok((report::render_verify(&rep, format), code))
            }
            Cmd::Table {
                var,
                from,
                to,
                step,
                d,
                s,
                t,
                columns,
            } => {
                let payload = run_table(
                    *var,
                    *from,
                    *to,
                    *step,
                    d,
                    s,
                    t,
                    columns,
                    format,
                    cli.decimal,
                )?;
                Ok((payload, ExitCode::SUCCESS))
            }
        }
    };
    match run() {
        Ok((payload, code)) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, payload.as_bytes()) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                let mut stdout = std::io::stdout().lock();
                if stdout.write_all(payload.as_bytes()).is_err() {
                    return ExitCode::from(2);
                }
            }
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

struct RowParams {
    d: Option<Int>,
    s: Option<Int>,
    t: Option<Int>,
    epsilon: Option<Int>,
}

impl RowParams {
    fn need(&self, which: &str, col: Column) -> Result<&Int, halphen::Error> {
        let v = match which {
            "d" => &self.d,
            "s" => &self.s,
            "t" => &self.t,
            _ => &self.epsilon,
        };
        v.as_ref().ok_or_else(|| {
            halphen::Error::Constraint(format!("column {} requires --{which}", col.header()))
        })
    }

    fn eps_for_constant_term(&self, col: Column) -> Result<Int, halphen::Error> {
        if let Some(e) = &self.epsilon {
            return Ok(e.clone());
        }
        let d = self.need("d", col)?;
        let s = self.need("s", col)?;
        let (_, eps) = div_rem_euclid(&(d - 1i32), s);
        Ok(eps)
    }
}

fn cell(col: Column, p: &RowParams) -> Result<Rat, halphen::Error> {
    match col {
        Column::G => bounds::genus_bound_g(p.need("d", col)?, p.need("s", col)?, p.need("t", col)?),
        Column::GTau => {
            bounds::genus_bound_g_tau(p.need("d", col)?, p.need("s", col)?, p.need("t", col)?)
        }
        Column::GDuke => bounds::genus_bound_duke(p.need("d", col)?, p.need("s", col)?),
        Column::H => bounds::halphen_h(p.need("s", col)?, p.need("t", col)?),
        Column::HTau => bounds::halphen_h_tau(p.need("s", col)?, p.need("t", col)?),
        Column::P => {
            bounds::extremal_space_genus_p(p.need("s", col)?, p.need("t", col)?).map(|v| rat_of(&v))
        }
        Column::Rho => {
            let eps = p.eps_for_constant_term(col)?;
            bounds::rho(p.need("s", col)?, p.need("t", col)?, &eps).map(|(v, _)| v)
        }
        Column::RhoTau => {
            let eps = p.eps_for_constant_term(col)?;
            bounds::rho_tau(p.need("s", col)?, p.need("t", col)?, &eps).map(|(v, _)| v)
        }
        Column::R => {
            let eps = p.eps_for_constant_term(col)?;
            bounds::r_const(p.need("s", col)?, &eps).map(|(v, _)| v)
        }
        Column::A => bounds::coeff_a(p.need("s", col)?, p.need("t", col)?),
        Column::ATau => bounds::coeff_a_tau(p.need("s", col)?, p.need("t", col)?),
        Column::ADuke => bounds::coeff_a_duke(p.need("s", col)?),
        Column::E1 => {
            bounds::speciality_bounds(p.need("d", col)?, p.need("s", col)?, p.need("t", col)?)
                .map(|b| b.e1)
        }
        Column::E2 => {
            bounds::speciality_bounds(p.need("d", col)?, p.need("s", col)?, p.need("t", col)?)?
                .e2
                .ok_or_else(|| {
                    halphen::Error::Constraint("column e2 requires d divisible by s".to_string())
                })
        }
        Column::CiGenus => {
            bounds::ci_genus(p.need("d", col)?, p.need("s", col)?, p.need("t", col)?)
                .map(|v| rat_of(&v))
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn run_table(
    var: Var,
    from: i64,
    to: i64,
    step: i64,
    d: &Option<Int>,
    s: &Option<Int>,
    t: &Option<Int>,
    columns: &[Column],
    format: Format,
    decimal: Option<u32>,
) -> Result<String, halphen::Error> {
    if step < 1 {
        return Err(halphen::Error::Constraint(format!(
            "step must be positive (got {step})"
        )));
    }
    if from > to {
        return Err(halphen::Error::Constraint(format!(
            "empty range: from = {from} > to = {to}"
        )));
    }
    let fixed_conflict = match var {
        Var::D => d.is_some(),
        Var::S => s.is_some(),
        Var::T => t.is_some(),
        Var::Epsilon => d.is_some(), // epsilon is derived from d otherwise
    };
    if fixed_conflict {
        let msg = match var {
            Var::Epsilon => {
                "over-constrained: --var epsilon conflicts with --d (epsilon is d-derived)"
                    .to_string()
            }
            _ => format!(
                "over-constrained: --var {} conflicts with --{}",
                var.name(),
                var.name()
            ),
        };
        return Err(halphen::Error::Constraint(msg));
    }
    if columns.is_empty() {
        return Err(halphen::Error::Constraint("no columns requested".into()));
    }

    let mut headers = vec![var.name().to_string()];
    headers.extend(columns.iter().map(|c| c.header().to_string()));
    let mut rows = Vec::new();
    let mut v = from;
    while v <= to {
        let value = int(v);
        let p = RowParams {
            d: if var == Var::D {
                Some(value.clone())
            } else {
                d.clone()
            },
            s: if var == Var::S {
                Some(value.clone())
            } else {
                s.clone()
            },
            t: if var == Var::T {
                Some(value.clone())
            } else {
                t.clone()
            },
            epsilon: if var == Var::Epsilon {
                Some(value.clone())
            } else {
                None
            },
        };
        let mut row = vec![v.to_string()];
        for col in columns {
            let x = cell(*col, &p)?;
            row.push(match (format, decimal) {
                (Format::Human, Some(k)) if !x.is_integer() => format!("~{}", decimal_str(&x, k)),
                (Format::Human, _) => report::rat_display(&x),
                _ => rat_str(&x),
            });
        }
        rows.push(row);
        match v.checked_add(step) {
            Some(next) => v = next,
            None => break,
        }
    }
    Ok(report::render_table(&headers, &rows, format))
}
