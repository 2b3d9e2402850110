use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kostant_core::hasse::{bruhat_covers, to_dot, to_json, DotOptions};
use kostant_core::so_n2::{group_spec, GroupSpec, ParabolicId};
use kostant_core::verify::{self, Mutation, VerifyOptions};
use kostant_core::{eisenstein, Rational};

mod render;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MutationArg {
    DropLastNode,
    TruncateLongestWord,
}

#[derive(Parser, Debug)]
#[command(name = "kostant", version, about = "Minimal coset representatives, Kostant weights and Eisenstein degrees for SO(n,2)")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; hasse defaults to dot, everything else to text.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// The n of SO(n,2), at least 5.
    #[arg(long, global = true)]
    n: Option<i64>,

    /// P1 or P2.
    #[arg(long, global = true, default_value = "P1")]
    parabolic: String,

    /// Numeric highest weight, e.g. 1,2,3/2. Symbolic when omitted.
    #[arg(long, global = true)]
    lambda: Option<String>,

    /// Add the Bruhat covers missing from the algorithm output.
    #[arg(long, global = true)]
    covers: bool,

    /// Largest n for verify.
    #[arg(long = "n-max", global = true, default_value_t = 11)]
    n_max: i64,

    #[arg(long, global = true, hide = true, value_enum)]
    mutate: Option<MutationArg>,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Command {
    /// List W^P with lengths and N(l).
    Cosets,
    /// Draw the diagram of W^P.
    Hasse,
    /// Restricted Kostant weights μ_w.
    Kostant,
    /// Evaluation points λ_w = a·ρ_i.
    Lambdaw,
    /// Bounds, degree supports, Levi subgroups and cuspidal degrees.
    Report,
    /// Run the self-checks for 5 ≤ n ≤ n-max.
    Verify,
}

enum Failure {
    Input(String),
    Io(String),
    Verify(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verify(_) => 1,
            Failure::Input(_) => 2,
            Failure::Io(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Io(m) | Failure::Verify(m) => m,
        }
    }
}

impl From<kostant_core::Error> for Failure {
    fn from(e: kostant_core::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn spec(cli: &Cli) -> Result<GroupSpec, Failure> {
    let n = cli
        .n
        .ok_or_else(|| Failure::Input("--n is required".into()))?;
    Ok(group_spec(n)?)
}

fn parabolic(cli: &Cli) -> Result<ParabolicId, Failure> {
    Ok(cli.parabolic.parse::<ParabolicId>()?)
}

fn parse_lambda(g: &GroupSpec, text: &Option<String>) -> Result<Option<Vec<Rational>>, Failure> {
    let Some(text) = text else { return Ok(None) };
    let values = text
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<Rational>()
                .map_err(|_| Failure::Input(format!("cannot parse λ entry {:?}", s.trim())))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if values.len() != g.k() {
        return Err(Failure::Input(format!(
            "λ has {} entries but n = {} needs k = {}",
            values.len(),
            g.n(),
            g.k()
        )));
    }
    Ok(Some(values))
}

fn format_for(cli: &Cli, default: Format, allowed: &[Format]) -> Result<Format, Failure> {
    let f = cli.format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(Failure::Input(format!(
            "format {:?} is not available for this command",
            f
        )))
    }
}

fn json(value: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output serializes");
    s.push('\n');
    s
}

struct Output {
    text: String,
    failure: Option<Failure>,
}

impl From<String> for Output {
    fn from(text: String) -> Self {
        Self { text, failure: None }
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    const TABLES: &[Format] = &[Format::Text, Format::Csv, Format::Json];
    match cli.command {
        Command::Cosets => {
            let g = spec(cli)?;
            let p = parabolic(cli)?;
            let f = format_for(cli, Format::Text, TABLES)?;
            let h = g.hasse(p);
            Ok(match f {
                Format::Json => json(&render::cosets_json(&g, p, &h)),
                f => render::cosets_table(&h).render(f == Format::Csv),
            }
            .into())
        }
        Command::Hasse => {
            let g = spec(cli)?;
            let p = parabolic(cli)?;
            let f = format_for(cli, Format::Dot, &[Format::Dot, Format::Json, Format::Text, Format::Csv])?;
            let mut h = g.hasse(p);
            if cli.covers {
                h = bruhat_covers(&h)?;
            }
            Ok(match f {
                Format::Dot => to_dot(&h, DotOptions { covers: cli.covers }),
                Format::Json => json(&to_json(&h)),
                f => render::edges_table(&h).render(f == Format::Csv),
            }
            .into())
        }
        Command::Kostant | Command::Lambdaw => {
            let g = spec(cli)?;
            let p = parabolic(cli)?;
            let f = format_for(cli, Format::Text, TABLES)?;
            let numeric = parse_lambda(&g, &cli.lambda)?;
            let lambda = eisenstein::highest_weight(&g, numeric.as_deref())?;
            let records = eisenstein::kostant_records(&g, p, &g.hasse(p), &lambda)?;
            let table = if matches!(cli.command, Command::Kostant) {
                render::kostant_table(&g, p, &records)
            } else {
                render::lambdaw_table(p, &records)
            };
            Ok(match f {
                Format::Json => json(&render::records_json(&g, p, &lambda, &records)),
                f => table.render(f == Format::Csv),
            }
            .into())
        }
        Command::Report => {
            let g = spec(cli)?;
            let f = format_for(cli, Format::Text, &[Format::Text, Format::Json])?;
            let numeric = parse_lambda(&g, &cli.lambda)?;
            let report = eisenstein::full_report(&g, numeric.as_deref())?;
            Ok(match f {
                Format::Json => json(&report),
                _ => render::report_text(&report),
            }
            .into())
        }
        Command::Verify => {
            let f = format_for(cli, Format::Text, &[Format::Text, Format::Json])?;
            if cli.n_max < 5 {
                return Err(Failure::Input(format!("--n-max {} is below 5", cli.n_max)));
            }
            let opts = VerifyOptions {
                n_min: 5,
                n_max: cli.n_max,
                mutation: cli.mutate.map(|m| match m {
                    MutationArg::DropLastNode => Mutation::DropLastNode,
                    MutationArg::TruncateLongestWord => Mutation::TruncateLongestWord,
                }),
            };
            let report = verify::run(&opts);
            let text = match f {
                Format::Json => json(&report),
                _ => report.to_string(),
            };
            if report.passed() {
                return Ok(text.into());
            }
            let first = report.first_failure().expect("a failure exists");
            let why = match &first.outcome {
                verify::Outcome::Fail(why) => why.clone(),
                _ => String::new(),
            };
            Ok(Output {
                text,
                failure: Some(Failure::Verify(format!(
                    "verification failed at n={} ({}): {why}",
                    first.n,
                    first.check.name()
                ))),
            })
        }
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    match &cli.out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Io(e.to_string())),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = run(&cli).and_then(|o| {
        emit(&cli, &o.text)?;
        o.failure.map_or(Ok(()), Err)
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
