//! Command-line front end. Each subcommand calls one library operation
//! and formats its result.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::json;

use crate::algebra::RatFun;
use crate::enumerate::{count_saws_with, list_saws_capped, walk_cap_from_env, EnumConfig};
use crate::error::{Error, Result};
use crate::guess::{guess_auto_bounded, DEFAULT_HOLDOUT};
use crate::json::{int_strings, parse_rat, rat_string, rat_to_f64};
use crate::lattice::StripSpec;
use crate::pipeline::{conjecture_strip_gf, connective_bound, mu_table, PipelineConfig};
use crate::width2;

#[derive(Parser, Debug)]
#[command(name = "sawstrip", version, about = "Self-avoiding walks in lattice strips")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count n-step walks from the origin for every n up to --n.
    Count {
        #[arg(long, allow_hyphen_values = true)]
        xlo: i64,
        #[arg(long, allow_hyphen_values = true)]
        xhi: i64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// List the n-step walks, one word per line.
    Words {
        #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
        xlo: i64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 1)]
        xhi: i64,
        #[arg(long)]
        n: usize,
        /// Only the grammar-generated walks of the two-column strip.
        #[arg(long)]
        northbound: bool,
        #[arg(long)]
        json: bool,
    },
    /// Generating functions of the two-column strip.
    #[command(group(ArgGroup::new("which").args(["northbound", "full", "pieces"])))]
    Gf {
        #[arg(long)]
        northbound: bool,
        #[arg(long)]
        full: bool,
        #[arg(long)]
        pieces: bool,
        /// Also print coefficients up to t^N.
        #[arg(long, value_name = "N")]
        series: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Check enumeration, generating function and closed form agree.
    Theorem {
        #[arg(long)]
        n: usize,
    },
    /// Guess a rational generating function from integer terms.
    #[command(group(ArgGroup::new("input").args(["terms", "file"]).required(true)))]
    Guess {
        /// Comma-separated terms.
        #[arg(long, allow_hyphen_values = true)]
        terms: Option<String>,
        /// File with one integer per line.
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_HOLDOUT)]
        holdout: usize,
        #[arg(long)]
        max_deg: Option<usize>,
    },
    /// Enumerate, guess and validate the gf of one strip.
    Pipeline {
        #[arg(long, allow_hyphen_values = true)]
        xlo: i64,
        #[arg(long, allow_hyphen_values = true)]
        xhi: i64,
        #[arg(long)]
        train: usize,
        #[arg(long, default_value_t = 3)]
        holdout: usize,
        #[arg(long, default_value = "1e-12")]
        tol: String,
    },
    /// Growth-rate enclosures for strips [0, w-1].
    Mu {
        /// Comma-separated widths.
        #[arg(long)]
        widths: String,
        #[arg(long, default_value = "1e-12")]
        tol: String,
        /// Training terms per strip; chosen from the walk cap if absent.
        #[arg(long)]
        train: Option<usize>,
        #[arg(long, default_value_t = 3)]
        holdout: usize,
    },
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

fn parse_terms(text: &str) -> Result<Vec<BigInt>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .map(str::trim)
        .filter(|s| !s.is_empty() && !s.starts_with('#'))
        .map(|s| s.parse::<BigInt>().map_err(|_| bad(format!("not an integer: {s:?}"))))
        .collect()
}

fn read_terms_file(path: &PathBuf) -> Result<Vec<BigInt>> {
    let text = std::fs::read_to_string(path).map_err(|e| bad(format!("{}: {e}", path.display())))?;
    let body: String = text
        .lines()
        .filter(|l| !l.trim_start().starts_with('#'))
        .collect::<Vec<_>>()
        .join("\n");
    parse_terms(&body)
}

fn parse_tol(s: &str) -> Result<crate::algebra::BigRat> {
    parse_rat(s).ok_or_else(|| bad(format!("bad tolerance {s:?}")))
}

fn gf_text(name: &str, g: &RatFun, series: Option<usize>, out: &mut dyn Write) -> Result<()> {
    writeln!(out, "{name}: {g}").map_err(io_err)?;
    if let Some(n) = series {
        let s = g.series(n)?;
        let coeffs: Vec<String> = s.coeffs().iter().map(rat_string).collect();
        writeln!(out, "series: {}", coeffs.join(", ")).map_err(io_err)?;
    }
    Ok(())
}

fn gf_json(g: &RatFun, series: Option<usize>) -> Result<serde_json::Value> {
    let mut v = json!({ "gf": g });
    if let Some(n) = series {
        let s = g.series(n)?;
        v["series"] = json!(s.coeffs().iter().map(rat_string).collect::<Vec<_>>());
    }
    Ok(v)
}

fn io_err(e: std::io::Error) -> Error {
    bad(format!("output: {e}"))
}

fn emit(out: &mut dyn Write, v: &impl serde::Serialize) -> Result<()> {
    let s = serde_json::to_string(v).map_err(|e| bad(e.to_string()))?;
    writeln!(out, "{s}").map_err(io_err)
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Count {
            xlo,
            xhi,
            n,
            json,
            workers,
        } => {
            let strip = StripSpec::new(xlo, xhi)?;
            let mut cfg = EnumConfig::default();
            if let Some(w) = workers {
                cfg.workers = w.max(1);
            }
            let counts = count_saws_with(&strip, n, &cfg)?;
            if json {
                emit(out, &json!({ "strip": strip, "counts": int_strings(&counts) }))?;
            } else {
                for (k, c) in counts.iter().enumerate() {
                    writeln!(out, "{k}\t{c}").map_err(io_err)?;
                }
            }
        }
        Command::Words {
            xlo,
            xhi,
            n,
            northbound,
            json,
        } => {
            let strip = StripSpec::new(xlo, xhi)?;
            let words = if northbound {
                if strip != StripSpec::new(0, 1)? {
                    return Err(bad("northbound words are defined for the strip [0,1]"));
                }
                width2::generate_northbound(n)
            } else {
                list_saws_capped(&strip, n, walk_cap_from_env())?
            };
            if json {
                emit(out, &words)?;
            } else {
                for w in &words {
                    writeln!(out, "{w}").map_err(io_err)?;
                }
            }
        }
        Command::Gf {
            northbound,
            full: _,
            pieces,
            series,
            json,
        } => {
            if pieces {
                let items: Vec<(&str, RatFun)> = width2::Piece::ALL
                    .iter()
                    .map(|&p| (p.name(), width2::piece_gf(p)))
                    .collect();
                if json {
                    let arr = items
                        .iter()
                        .map(|(name, g)| {
                            let mut v = gf_json(g, series)?;
                            v["name"] = json!(name);
                            Ok(v)
                        })
                        .collect::<Result<Vec<_>>>()?;
                    emit(out, &arr)?;
                } else {
                    for (name, g) in &items {
                        gf_text(name, g, series, out)?;
                    }
                }
            } else {
                let (name, g) = if northbound {
                    ("northbound", width2::northbound_gf())
                } else {
                    ("full", width2::full_gf())
                };
                if json {
                    emit(out, &gf_json(&g, series)?)?;
                } else {
                    gf_text(name, &g, series, out)?;
                }
            }
        }
        Command::Theorem { n } => {
            let report = width2::verify_theorem(n)?;
            match &report.first_mismatch {
                None => writeln!(out, "OK: oracle == gf == closed form for n ≤ {n}").map_err(io_err)?,
                Some(m) => {
                    writeln!(err, "FAIL: {} at n={}", m.check, m.n).map_err(io_err)?;
                    return Ok(1);
                }
            }
        }
        Command::Guess {
            terms,
            file,
            holdout,
            max_deg,
        } => {
            let terms = match (terms, file) {
                (Some(t), _) => parse_terms(&t)?,
                (None, Some(p)) => read_terms_file(&p)?,
                (None, None) => unreachable!("clap requires one input"),
            };
            let g = guess_auto_bounded(&terms, holdout, max_deg)?
                .ok_or_else(|| bad("no rational fit"))?;
            emit(
                out,
                &json!({
                    "gf": g.gf,
                    "num_deg": g.num_deg,
                    "den_deg": g.den_deg,
                    "terms_used": g.terms_used,
                    "validated_terms": g.validated_terms,
                }),
            )?;
        }
        Command::Pipeline {
            xlo,
            xhi,
            train,
            holdout,
            tol,
        } => {
            let strip = StripSpec::new(xlo, xhi)?;
            let tol = parse_tol(&tol)?;
            let cfg = PipelineConfig {
                holdout,
                walk_cap: walk_cap_from_env(),
                ..PipelineConfig::default()
            };
            let c = conjecture_strip_gf(&strip, train, holdout, &cfg)?
                .ok_or_else(|| bad("no rational fit"))?;
            let bound = connective_bound(&strip, &c.guess.gf, &tol).ok();
            emit(out, &json!({ "conjecture": c, "bound": bound }))?;
        }
        Command::Mu {
            widths,
            tol,
            train,
            holdout,
        } => {
            let tol = parse_tol(&tol)?;
            let strips = widths
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<u32>()
                        .map_err(|_| bad(format!("bad width {s:?}")))
                        .and_then(StripSpec::of_width)
                })
                .collect::<Result<Vec<_>>>()?;
            let cfg = PipelineConfig {
                holdout,
                walk_cap: walk_cap_from_env(),
                ..PipelineConfig::default()
            };
            let table = mu_table(&strips, train, &tol, &cfg)?;
            emit(out, &table)?;
            for b in table.bounds() {
                writeln!(err, "strip {}: mu >= {:.12}", b.strip, rat_to_f64(&b.mu_lo)).map_err(io_err)?;
            }
        }
    }
    Ok(0)
}

/// Run with `argv` (including the program name). Returns the exit code:
/// 0 success, 1 domain error, 2 usage error.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}
