use std::io::Write;
use std::process::ExitCode;

use alt_xi_cli::checks::CheckLine;
use alt_xi_cli::commands::{self, CliError, CliResult};
use alt_xi_cli::output::Format;
use alt_xi_cli::parse::parse_complex;
use alt_xi_core::{Complex64, EvalSettings, QuadratureSpec, Scheme};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "alt-xi", version, about = "Eta, zeta and the alternating Xi function")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Relative truncation tolerance [default: 1e-14]
    #[arg(long, global = true, env = "ALT_XI_TOL")]
    tol: Option<f64>,
    /// Term cap for any single series or continued fraction [default: 10000]
    #[arg(long, global = true)]
    max_terms: Option<usize>,
    /// Quadrature node count [default: 2000]
    #[arg(long, global = true)]
    quad_points: Option<usize>,
    /// Output format [default: csv for scan, json otherwise]
    #[arg(long, global = true, value_enum)]
    format: Option<FormatArg>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum SchemeArg {
    TanhSinh,
    GaussLegendre,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one function at one point
    Eval {
        /// eta, zeta, xi, xi_a, varphi, phi, gamma, lower_gamma, upper_gamma
        #[arg(long)]
        function: String,
        /// Argument, e.g. 0.5+12i (the parameter a for the incomplete gammas)
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        /// Second argument of lower_gamma and upper_gamma
        #[arg(long, allow_hyphen_values = true)]
        z: Option<f64>,
        #[arg(long)]
        method: Option<String>,
    },
    /// Run an identity or regression suite
    Check {
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Tabulate xi_a(1/2 + it) and locate its sign changes
    Scan {
        #[arg(long, allow_hyphen_values = true)]
        t_min: f64,
        #[arg(long, allow_hyphen_values = true)]
        t_max: f64,
        #[arg(long)]
        step: f64,
    },
    /// Evaluate an integral of the kernel by quadrature
    Integrate {
        /// xi_a_at, varphi_plain, varphi_over_x, varphi_over_sqrtx
        #[arg(long)]
        target: String,
        #[arg(long, allow_hyphen_values = true)]
        s: Option<String>,
        #[arg(long, value_enum, default_value = "tanh-sinh")]
        scheme: SchemeArg,
        /// Split point of the half-line for xi_a_at
        #[arg(long, default_value_t = 1.0)]
        split_at: f64,
        /// symmetric or unit-interval (xi_a_at only)
        #[arg(long, default_value = "symmetric")]
        form: String,
    },
}

fn settings(g: &Global) -> CliResult<EvalSettings> {
    let d = EvalSettings::default();
    EvalSettings::new(
        g.tol.unwrap_or(d.rel_tol),
        g.max_terms.unwrap_or(d.max_terms),
        g.quad_points.unwrap_or(d.quad_points),
    )
    .map_err(|e| CliError::Usage(e.to_string()))
}

fn complex_arg(text: &str) -> CliResult<Complex64> {
    parse_complex(text).map_err(|e| CliError::Usage(e.to_string()))
}

fn format_or(g: &Global, default: Format) -> Format {
    match g.format {
        Some(FormatArg::Json) => Format::Json,
        Some(FormatArg::Csv) => Format::Csv,
        None => default,
    }
}

fn render_checks(lines: &[CheckLine], format: Format) -> String {
    let mut out = String::new();
    if format == Format::Csv {
        out.push_str(CheckLine::CSV_HEADER);
        out.push('\n');
    }
    for l in lines {
        out.push_str(&l.render(format));
        out.push('\n');
    }
    out
}

/// Returns stdout text and whether the command succeeded.
fn run(cli: Cli) -> CliResult<(String, bool)> {
    let st = settings(&cli.global)?;
    match cli.command {
        Command::Eval { function, s, z, method } => {
            let s = complex_arg(&s)?;
            let r = commands::eval(&function, s, z, method.as_deref(), &st)?;
            Ok((r.render(format_or(&cli.global, Format::Json)) + "\n", true))
        }
        Command::Check { suite } => {
            let (lines, ok) = commands::check(&suite, &st)?;
            Ok((render_checks(&lines, format_or(&cli.global, Format::Json)), ok))
        }
        Command::Scan { t_min, t_max, step } => {
            let out = commands::scan(t_min, t_max, step, format_or(&cli.global, Format::Csv), &st)?;
            Ok((out, true))
        }
        Command::Integrate { target, s, scheme, split_at, form } => {
            let s = s.as_deref().map(complex_arg).transpose()?;
            let scheme = match scheme {
                SchemeArg::TanhSinh => Scheme::TanhSinh,
                SchemeArg::GaussLegendre => Scheme::GaussLegendreComposite,
            };
            let spec = QuadratureSpec::new(scheme, st.quad_points, split_at)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            let r = commands::integrate(&target, s, &form, &spec, &st)?;
            Ok((r.render(format_or(&cli.global, Format::Json)) + "\n", true))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("").trim_start_matches("error: ");
            eprintln!("E_PARSE: {first}");
            eprint!("{msg}");
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok((out, ok)) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            if ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("E_CHECK: one or more checks failed");
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("{}: {e}", e.code());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
