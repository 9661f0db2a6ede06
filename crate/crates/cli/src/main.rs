use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use zetakit::cotpoly::{cot_poly, MAX_ORDER};
use zetakit::dirichlet::characters_mod;
use zetakit::numeric::parse_rational;
use zetakit::report::Report;
use zetakit::series::{
    binom_series_closed, classic_identity, corollary_half, corollary_quarter, BinomSeriesQuery, ClassicId,
};
use zetakit::special::{dirichlet_beta, hurwitz_zeta, riemann_zeta};
use zetakit::verify::{run_suite, Suite};
use zetakit::{Error, NumericContext, SeriesResult};

const DEFAULT_DIGITS: u32 = 30;
const PRECISION_ENV: &str = "ZETAKIT_PRECISION";

#[derive(Parser, Debug)]
#[command(name = "zetakit", version, about = "Evaluate and cross-check rational zeta series")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate one series or special value and print a JSON report.
    Eval {
        /// theorem, half, quarter, classic:<id>, hurwitz, beta or zeta
        #[arg(long)]
        series: String,
        /// Rational parameter, as p/q or a decimal literal.
        #[arg(long)]
        a: Option<String>,
        #[arg(long)]
        m: Option<u32>,
        /// Real order of a zeta or beta value.
        #[arg(long)]
        s: Option<String>,
        /// Decimal digits (default: $ZETAKIT_PRECISION or 30).
        #[arg(long)]
        digits: Option<u32>,
    },
    /// Run an identity suite and print one JSON report per check.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        digits: Option<u32>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Export the cotangent polynomial table or a character table.
    Table {
        #[arg(long, value_enum)]
        what: TableKind,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        q: Option<i64>,
        /// Output file (default: standard output).
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableKind {
    Cotpoly,
    Chars,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(String),
    Mismatch,
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Mismatch => 1,
            Failure::Usage(_) => 2,
            Failure::Domain(_) => 3,
            Failure::Io(_) => 4,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidInput(_) => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            match &failure {
                Failure::Usage(msg) | Failure::Domain(msg) | Failure::Io(msg) => eprintln!("zetakit: {msg}"),
                Failure::Mismatch => {}
            }
            ExitCode::from(failure.code())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Eval {
            series,
            a,
            m,
            s,
            digits,
        } => {
            let ctx = context(digits)?;
            let report = eval(&series, a.as_deref(), m, s.as_deref(), &ctx)?;
            emit(&mut io::stdout().lock(), &[report])
        }
        Command::Verify { suite, digits, jobs } => {
            let ctx = context(digits)?;
            let suite = Suite::parse(&suite)?;
            let reports = run_suite(suite, &ctx, jobs.max(1));
            let mut out = io::stdout().lock();
            emit(&mut out, &reports)?;
            let failed = reports.iter().filter(|r| !r.is_ok()).count();
            let total = reports.len();
            let summary = if failed == 0 {
                format!("PASSED {total}/{total}")
            } else {
                format!("FAILED {failed}/{total}")
            };
            writeln!(out, "{summary}").map_err(|e| Failure::Io(e.to_string()))?;
            if failed == 0 {
                Ok(())
            } else {
                Err(Failure::Mismatch)
            }
        }
        Command::Table {
            what,
            n,
            q,
            out,
            format,
        } => {
            let text = match what {
                TableKind::Cotpoly => {
                    let n = n.ok_or_else(|| Failure::Usage("--what cotpoly requires --n".into()))?;
                    cotpoly_table(n, format)?
                }
                TableKind::Chars => {
                    let q = q.ok_or_else(|| Failure::Usage("--what chars requires --q".into()))?;
                    chars_table(q, format)?
                }
            };
            match out {
                Some(path) => fs::write(&path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
                None => io::stdout()
                    .lock()
                    .write_all(text.as_bytes())
                    .map_err(|e| Failure::Io(e.to_string())),
            }
        }
    }
}

fn context(digits: Option<u32>) -> Result<NumericContext, Failure> {
    let digits = match digits {
        Some(d) => d,
        None => match std::env::var(PRECISION_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| Failure::Usage(format!("{PRECISION_ENV} must be a positive integer (got {v:?})")))?,
            Err(_) => DEFAULT_DIGITS,
        },
    };
    NumericContext::from_digits(digits).map_err(|e| Failure::Usage(e.to_string()))
}

fn require<T>(value: Option<T>, flag: &str, series: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("--series {series} requires --{flag}")))
}

fn eval(
    series: &str,
    a: Option<&str>,
    m: Option<u32>,
    s: Option<&str>,
    ctx: &NumericContext,
) -> Result<Report, Failure> {
    let (query, result): (String, SeriesResult) = match series {
        "theorem" => {
            let a_text = require(a, "a", series)?;
            let m = require(m, "m", series)?;
            let a = parse_rational(a_text)?;
            let query = format!("theorem a={a} m={m}");
            (query, binom_series_closed(&BinomSeriesQuery::new(a, m)?, ctx)?)
        }
        "half" => {
            let m = require(m, "m", series)?;
            (format!("half m={m}"), corollary_half(m, ctx)?)
        }
        "quarter" => {
            let m = require(m, "m", series)?;
            (format!("quarter m={m}"), corollary_quarter(m, ctx)?)
        }
        "hurwitz" => {
            let s_text = require(s, "s", series)?;
            let a = parse_rational(require(a, "a", series)?)?;
            let s = ctx.parse(s_text)?;
            (format!("hurwitz s={s_text} a={a}"), hurwitz_zeta(&s, &a, ctx)?)
        }
        "beta" => {
            let s_text = require(s, "s", series)?;
            (format!("beta s={s_text}"), dirichlet_beta(&ctx.parse(s_text)?, ctx)?)
        }
        "zeta" => {
            let s_text = require(s, "s", series)?;
            (format!("zeta s={s_text}"), riemann_zeta(&ctx.parse(s_text)?, ctx)?)
        }
        other => match other.strip_prefix("classic:") {
            Some(name) => {
                let id = ClassicId::parse(name)?;
                (format!("classic {}", id.name()), classic_identity(id, ctx)?)
            }
            None => {
                return Err(Failure::Usage(format!(
                    "unknown series {other:?} (expected theorem, half, quarter, classic:<id>, hurwitz, beta or zeta)"
                )))
            }
        },
    };
    Ok(Report::evaluation(query, &result))
}

fn emit(out: &mut impl Write, reports: &[Report]) -> Result<(), Failure> {
    for r in reports {
        let line = serde_json::to_string(r).map_err(|e| Failure::Io(e.to_string()))?;
        writeln!(out, "{line}").map_err(|e| Failure::Io(e.to_string()))?;
    }
    Ok(())
}

fn cotpoly_table(n: usize, format: Format) -> Result<String, Failure> {
    if n > MAX_ORDER {
        return Err(Failure::Domain(format!("--n must be at most {MAX_ORDER} (got {n})")));
    }
    let rows: Vec<Vec<String>> = (0..=n)
        .map(|k| cot_poly(k).coefficients().iter().map(|c| c.to_string()).collect())
        .collect();
    Ok(match format {
        // coefficients can exceed 64 bits, so the JSON is assembled by hand
        Format::Json => {
            let rows: Vec<String> = rows.iter().map(|r| format!("[{}]", r.join(","))).collect();
            format!("[{}]\n", rows.join(","))
        }
        Format::Csv => {
            let mut text = String::from("n,power,coefficient\n");
            for (k, row) in rows.iter().enumerate() {
                for (power, c) in row.iter().enumerate() {
                    text.push_str(&format!("{k},{power},{c}\n"));
                }
            }
            text
        }
    })
}

fn character_value(chi: &zetakit::dirichlet::DirichletCharacter, r: i64) -> String {
    match chi.value_fraction(r) {
        Some((num, den)) => format!("{num}/{den}"),
        None => "0".to_string(),
    }
}

fn chars_table(q: i64, format: Format) -> Result<String, Failure> {
    let group = characters_mod(q)?;
    Ok(match format {
        Format::Json => {
            let characters: Vec<_> = group
                .characters
                .iter()
                .enumerate()
                .map(|(i, chi)| {
                    json!({
                        "index": i,
                        "exponents": chi.exponents(),
                        "values": (0..q).map(|r| character_value(chi, r)).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let generators: Vec<_> = group
                .generators
                .iter()
                .map(|g| json!({ "generator": g.generator, "order": g.order }))
                .collect();
            let table = json!({
                "modulus": group.modulus,
                "phi": group.phi,
                "generators": generators,
                "characters": characters,
            });
            format!("{table}\n")
        }
        Format::Csv => {
            let mut text = String::from("character,residue,value\n");
            for (i, chi) in group.characters.iter().enumerate() {
                for r in 0..q {
                    text.push_str(&format!("{i},{r},{}\n", character_value(chi, r)));
                }
            }
            text
        }
    })
}
