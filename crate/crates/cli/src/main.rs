use std::io::{ErrorKind, Write};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use hstar::cones::x_vector;
use hstar::inequalities::check::applicable_forms;
use hstar::inequalities::novelty::minimal_novel_dimension;
use hstar::inequalities::qpoly::fmt_vertex;
use hstar::inequalities::{ab_to_h_form, check_vector, q_vertices, CheckOptions, Family};
use hstar::lattice::{box_group, parallelepiped_hstar, payne_hstar, BoxGroup, PayneSimplex};
use hstar::polynomials::parse_int_list;
use hstar::rational::{fmt_q, Q};
use hstar::tables::{render_table, table_json, TABLE_NAMES};
use hstar::verify::{run_suite, VerifyConfig};
use hstar::{decompose, HStarVector};

#[derive(Parser)]
#[command(
    name = "hstar",
    version,
    about = "Exact h*-vector computations for lattice simplices"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// h*-vector and x-vector of the weighted simplex P(alpha)
    Compute {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
    },
    /// Split an h*-vector into its palindromic a and b parts
    Decompose {
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
    },
    /// Evaluate every applicable inequality; exit 1 on a violation
    Check {
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
        /// Also evaluate the conjectural dimension-7 inequalities
        #[arg(long)]
        conjectures: bool,
    },
    /// List the inequalities valid in dimension d
    Inequalities {
        #[arg(long)]
        dim: i64,
        /// Restrict to polytopes with an interior lattice point
        #[arg(long)]
        interior: bool,
    },
    /// Vertices of the polyhedron Q(r, r')
    QVertices {
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
        #[arg(long = "rp", alias = "r-prime", allow_hyphen_values = true)]
        r_prime: i64,
    },
    /// Elements of a box group with their ages
    Box(BoxArgs),
    /// Run verification sweeps, one JSON object per check
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        alpha_sum_max: Option<u64>,
        #[arg(long)]
        oracle_d_max: Option<usize>,
        #[arg(long)]
        dilation_budget: Option<u64>,
        /// Largest cyclic group for the exhaustive Kemperman-Scherk sweep
        #[arg(long)]
        n_max: Option<u64>,
        /// Largest modulus for the terminal cyclic samples
        #[arg(long)]
        sample_n_max: Option<u64>,
    },
    /// Regenerate one of the stored tables
    Table { name: String },
}

#[derive(Args)]
struct BoxArgs {
    /// Weights of a simplex P(alpha)
    #[arg(long, conflicts_with = "cyclic", required_unless_present = "cyclic")]
    alpha: Option<String>,
    /// Cyclic quotient Z/n acting with the given weights
    #[arg(long, requires = "weights")]
    cyclic: Option<u64>,
    #[arg(long, requires = "cyclic")]
    weights: Option<String>,
}

fn ints(s: &str) -> Result<Vec<i64>> {
    Ok(parse_int_list(s)?)
}

fn naturals(s: &str) -> Result<Vec<u64>> {
    ints(s)?
        .into_iter()
        .map(|x| u64::try_from(x).with_context(|| format!("negative entry {x}")))
        .collect()
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn sep(format: Format) -> &'static str {
    if format == Format::Tsv {
        "\t"
    } else {
        " | "
    }
}

// Writes to stdout, so that a closed pipe surfaces as an error rather than a panic.
macro_rules! out {
    ($($t:tt)*) => {
        writeln!(std::io::stdout().lock(), $($t)*)?;
    };
}

fn print_json(v: &serde_json::Value) -> Result<()> {
    out!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn compute(alpha: &str, format: Format) -> Result<ExitCode> {
    let p = PayneSimplex::new(naturals(alpha)?)?;
    let h = payne_hstar(&p);
    let x = x_vector(&h)?;
    match format {
        Format::Json => print_json(&json!({ "alpha": p.alpha(), "h_star": h.coeffs(), "x": x }))?,
        _ => {
            out!("{h}");
            out!("x = ({})", join(&x));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn decompose_cmd(vector: &str, format: Format) -> Result<ExitCode> {
    let h = HStarVector::new(ints(vector)?)?;
    let ab = decompose(&h);
    match format {
        Format::Json => print_json(&serde_json::to_value(&ab)?)?,
        _ => {
            out!("d = {}, s = {}, l = {}", ab.d, ab.s, ab.codegree());
            out!("a = {}", join(&ab.a));
            out!("b = {}", join(&ab.b));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn check(vector: &str, conjectures: bool, format: Format) -> Result<ExitCode> {
    let h = HStarVector::new(ints(vector)?)?;
    let opts = CheckOptions {
        include_conjectures: conjectures,
        ..Default::default()
    };
    let report = check_vector(&h, &opts)?;
    match format {
        Format::Json => print_json(&serde_json::to_value(&report)?)?,
        _ => {
            let s = sep(format);
            out!(
                "h* = {h} (d = {}, s = {}, {} forms)",
                report.d,
                report.s,
                report.entries.len()
            );
            for e in report.violations() {
                out!(
                    "VIOLATION{s}{} @ d={}{s}{}{s}slack {}",
                    e.label,
                    report.d,
                    e.form,
                    e.slack_string()
                );
            }
            if report.all_hold() {
                out!("all inequalities hold");
            }
        }
    }
    Ok(if report.all_hold() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn inequalities(d: i64, interior: bool, format: Format) -> Result<ExitCode> {
    if d < 2 {
        bail!("--dim must be at least 2, got {d}");
    }
    // Without an interior point the degree is at most d - 1.
    let s = if interior { d } else { d - 1 };
    let du = d as usize;
    let mut rows = Vec::new();
    for f in applicable_forms(d, s, false)? {
        let novel = match f.family {
            Family::SuperA => minimal_novel_dimension(&f, d)?,
            _ => None,
        };
        let mut h_form = ab_to_h_form(&f, du, s as usize)?;
        for c in h_form.coeffs.iter_mut().skip(s as usize + 1) {
            *c = Q::default();
        }
        // palindromy alone makes some general forms trivial in small dimension
        if h_form.is_zero() {
            continue;
        }
        rows.push((f, novel, h_form));
    }
    match format {
        Format::Json => {
            let v: Vec<_> = rows
                .iter()
                .map(|(f, novel, h)| {
                    json!({
                        "label": f.label(),
                        "family": f.family,
                        "form": f.to_string(),
                        "h_form": h.to_string(),
                        "d_min": f.d_min,
                        "novel_from": novel,
                    })
                })
                .collect();
            print_json(&json!(v))?;
        }
        _ => {
            let s = sep(format);
            for (f, novel, h) in &rows {
                let novelty = match (f.family, novel) {
                    (Family::SuperA, Some(n)) => format!("{s}new at d = {n}"),
                    (Family::SuperA, None) => format!("{s}implied at d <= {d}"),
                    _ => String::new(),
                };
                out!("{}{s}{}{s}{}{s}d >= {}{novelty}", f.label(), f, h, f.d_min);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn qvertices(r: i64, r_prime: i64, format: Format) -> Result<ExitCode> {
    let vs = q_vertices(r, r_prime)?;
    match format {
        Format::Json => {
            let v: Vec<Vec<String>> = vs.iter().map(|v| v.iter().map(fmt_q).collect()).collect();
            print_json(&json!({ "r": r, "r_prime": r_prime, "vertices": v }))?;
        }
        _ => {
            for v in vs.iter() {
                out!("{}", fmt_vertex(v));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn box_cmd(args: &BoxArgs, format: Format) -> Result<ExitCode> {
    let g = match (&args.alpha, args.cyclic) {
        (Some(a), _) => box_group(&PayneSimplex::new(naturals(a)?)?),
        (None, Some(n)) => {
            let w = naturals(args.weights.as_deref().unwrap_or_default())?;
            BoxGroup::from_cyclic(n, &w)?
        }
        _ => bail!("one of --alpha or --cyclic is required"),
    };
    let h = parallelepiped_hstar(&g);
    match format {
        Format::Json => {
            let mut v = serde_json::to_value(&g)?;
            v["h_star"] = json!(h.coeffs());
            print_json(&v)?;
        }
        _ => {
            let s = sep(format);
            out!("order {}, invariant factors ({})", g.order(), join(g.diagonal()));
            out!("h* = {h}");
            for i in 0..g.order() {
                let e = g.element(i);
                let coords: Vec<String> = g.coords(i).iter().map(fmt_q).collect();
                let place = if e.is_identity() {
                    "identity"
                } else if e.boundary {
                    "boundary"
                } else {
                    "interior"
                };
                out!("({}){s}age {}{s}coage {}{s}{place}", coords.join(","), e.age, e.coage);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(suite: &str, cfg: &VerifyConfig) -> Result<ExitCode> {
    let records = run_suite(suite, cfg)?;
    let mut ok = true;
    for r in &records {
        ok &= r.passed;
        out!("{}", serde_json::to_string(r)?);
    }
    let failed = records.iter().filter(|r| !r.passed).count();
    out!(
        "{}",
        json!({ "suite": suite, "checks": records.len(), "failed": failed })
    );
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn table(name: &str, format: Format) -> Result<ExitCode> {
    if !TABLE_NAMES.contains(&name) {
        bail!("unknown table {name:?}; expected one of {}", TABLE_NAMES.join(", "));
    }
    match format {
        Format::Json => print_json(&table_json(name)?)?,
        Format::Text => write!(std::io::stdout().lock(), "{}", render_table(name)?)?,
        Format::Tsv => write!(std::io::stdout().lock(), "{}", render_table(name)?.replace(" | ", "\t"))?,
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode> {
    let f = cli.format;
    match cli.command {
        Command::Compute { alpha } => compute(&alpha, f),
        Command::Decompose { vector } => decompose_cmd(&vector, f),
        Command::Check { vector, conjectures } => check(&vector, conjectures, f),
        Command::Inequalities { dim, interior } => inequalities(dim, interior, f),
        Command::QVertices { r, r_prime } => qvertices(r, r_prime, f),
        Command::Box(args) => box_cmd(&args, f),
        Command::Verify {
            suite,
            alpha_sum_max,
            oracle_d_max,
            dilation_budget,
            n_max,
            sample_n_max,
        } => {
            let d = VerifyConfig::default();
            let cfg = VerifyConfig {
                alpha_sum_max: alpha_sum_max.unwrap_or(d.alpha_sum_max),
                oracle_d_max: oracle_d_max.unwrap_or(d.oracle_d_max),
                dilation_budget: dilation_budget.unwrap_or(d.dilation_budget),
                ks_n_max: n_max.unwrap_or(d.ks_n_max),
                sample_n_max: sample_n_max.unwrap_or(d.sample_n_max),
            };
            verify(&suite, &cfg)
        }
        Command::Table { name } => table(&name, f),
    }
}

fn main() -> ExitCode {
    env_logger::init();
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e)
            if e.downcast_ref::<std::io::Error>()
                .is_some_and(|io| io.kind() == ErrorKind::BrokenPipe) =>
        {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
