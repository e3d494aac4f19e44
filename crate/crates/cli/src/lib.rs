//! The `fusion` command line tool. [`run`] takes the full argument vector
//! and returns the exit code together with everything written to stdout
//! and stderr, so the binary and the tests share one code path.

pub mod crosscheck;

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use fusion_core::{
    apply_crystal, enumerate_cylindric, enumerate_tabloids, expand_product, fusion,
    fusion_positive, lr_coefficient, Cell, Content, CrystalOp, Error, FusionContext, Method,
    Partition, SkewShape, Word,
};
use serde_json::{json, Value};

use crate::crosscheck::run_crosscheck;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_CHECK_FAILED: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Auto,
    Kw,
    Cyl,
    Det,
    Pos,
    All,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum OpArg {
    E,
    F,
    S,
}

#[derive(Parser, Debug)]
#[command(
    name = "fusion",
    version,
    about = "Fusion coefficients and tableau combinatorics"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Fusion coefficient c_{λμ}^{ν} at level ℓ, rank n
    Coeff {
        #[arg(long)]
        level: usize,
        #[arg(long)]
        rank: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Partition,
        #[arg(long, allow_hyphen_values = true)]
        mu: Partition,
        #[arg(long, allow_hyphen_values = true)]
        nu: Partition,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Fusion product s_λ · s_μ in the Schur basis
    Expand {
        #[arg(long)]
        level: usize,
        #[arg(long)]
        rank: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Partition,
        #[arg(long, allow_hyphen_values = true)]
        mu: Partition,
    },
    /// Littlewood–Richardson coefficient c_{λμ}^{ν}
    Lr {
        #[arg(long, allow_hyphen_values = true)]
        lambda: Partition,
        #[arg(long, allow_hyphen_values = true)]
        mu: Partition,
        #[arg(long, allow_hyphen_values = true)]
        nu: Partition,
    },
    /// Ribbon tabloids of a shape, with weights, signs and types
    Tabloids {
        #[arg(long, allow_hyphen_values = true)]
        shape: Partition,
    },
    /// Cylindric tableaux of shape outer/inner and given content
    Cylindric {
        #[arg(long)]
        level: usize,
        #[arg(long)]
        rank: usize,
        #[arg(long, allow_hyphen_values = true)]
        outer: Partition,
        #[arg(long, allow_hyphen_values = true, default_value = "-")]
        inner: Partition,
        /// Comma-separated letter counts; zeros allowed
        #[arg(long, allow_hyphen_values = true, value_parser = parse_content)]
        content: Content,
    },
    /// Apply a crystal operator to a word
    Crystal {
        #[arg(long, value_enum)]
        op: OpArg,
        #[arg(long)]
        index: usize,
        #[arg(long, value_parser = parse_word)]
        word: Word,
    },
    /// Check every method and identity on a grid of small inputs
    Crosscheck {
        #[arg(long)]
        level: usize,
        #[arg(long)]
        rank: usize,
        /// Largest |ν| on the grid
        #[arg(long, default_value_t = 8)]
        max_weight: usize,
    },
}

fn parse_content(s: &str) -> Result<Content, String> {
    if s.trim() == "-" {
        return Ok(Content::new(Vec::new()));
    }
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()
        .map(Content::new)
}

fn parse_word(s: &str) -> Result<Word, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Parses `args` (program name first) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(&cli.command, cli.format) {
        Ok((code, stdout)) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: EXIT_INVALID,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn parts(p: &Partition) -> Value {
    json!(p.parts())
}

fn cell(c: &Cell) -> Value {
    json!([c.col, c.row])
}

fn envelope(command: &str, inputs: Value, result: Value) -> String {
    let mut s = serde_json::to_string_pretty(&json!({
        "command": command,
        "inputs": inputs,
        "result": result,
    }))
    .expect("JSON values always serialize");
    s.push('\n');
    s
}

fn context(level: usize, rank: usize) -> fusion_core::Result<FusionContext> {
    FusionContext::new(level, rank)
}

fn execute(command: &Command, format: Format) -> fusion_core::Result<(i32, String)> {
    let json = format == Format::Json;
    let mut out = String::new();
    let mut code = EXIT_OK;
    match command {
        Command::Coeff {
            level,
            rank,
            lambda,
            mu,
            nu,
            method,
        } => {
            let ctx = context(*level, *rank)?;
            let methods: Vec<(String, Option<i64>)> = match method {
                MethodArg::All => {
                    let mut v = Vec::new();
                    for m in [Method::Kw, Method::Cyl, Method::Det] {
                        v.push((m.to_string(), Some(fusion(lambda, mu, nu, &ctx, m)?)));
                    }
                    v.push(("pos".to_string(), fusion_positive(lambda, mu, nu, &ctx)?));
                    let defined: Vec<i64> = v.iter().filter_map(|(_, x)| *x).collect();
                    if defined.windows(2).any(|w| w[0] != w[1]) {
                        return Err(Error::Invariant(format!("methods disagree: {v:?}")));
                    }
                    v
                }
                single => {
                    let m = to_method(*single);
                    vec![(m.to_string(), Some(fusion(lambda, mu, nu, &ctx, m)?))]
                }
            };
            if json {
                let mut result = serde_json::Map::new();
                for (name, v) in &methods {
                    result.insert(name.clone(), json!(v));
                }
                out = envelope(
                    "coeff",
                    json!({
                        "level": level,
                        "rank": rank,
                        "lambda": parts(lambda),
                        "mu": parts(mu),
                        "nu": parts(nu),
                        "method": method_arg_name(*method),
                    }),
                    Value::Object(result),
                );
            } else if methods.len() == 1 {
                writeln!(
                    out,
                    "{}",
                    methods[0].1.expect("single methods always yield")
                )
                .unwrap();
            } else {
                for (name, v) in &methods {
                    match v {
                        Some(v) => writeln!(out, "{name}\t{v}").unwrap(),
                        None => writeln!(out, "{name}\tnot applicable").unwrap(),
                    }
                }
            }
        }
        Command::Expand {
            level,
            rank,
            lambda,
            mu,
        } => {
            let ctx = context(*level, *rank)?;
            let e = expand_product(lambda, mu, &ctx)?;
            if json {
                let terms: Vec<Value> = e
                    .terms()
                    .iter()
                    .map(|(nu, c)| json!({ "nu": parts(nu), "coefficient": c }))
                    .collect();
                out = envelope(
                    "expand",
                    json!({
                        "level": level,
                        "rank": rank,
                        "lambda": parts(lambda),
                        "mu": parts(mu),
                    }),
                    json!(terms),
                );
            } else if e.is_empty() {
                out.push_str("0\n");
            } else {
                for (nu, c) in e.terms() {
                    writeln!(out, "{}\t{c}", nu.compact()).unwrap();
                }
            }
        }
        Command::Lr { lambda, mu, nu } => {
            let c = lr_coefficient(lambda, mu, nu);
            if json {
                out = envelope(
                    "lr",
                    json!({ "lambda": parts(lambda), "mu": parts(mu), "nu": parts(nu) }),
                    json!(c),
                );
            } else {
                writeln!(out, "{c}").unwrap();
            }
        }
        Command::Tabloids { shape } => {
            let ts = enumerate_tabloids(shape);
            if json {
                let items: Vec<Value> = ts
                    .iter()
                    .map(|t| {
                        let ribbons: Vec<Value> = t
                            .ribbons()
                            .iter()
                            .map(|r| Value::Array(r.cells.iter().map(cell).collect()))
                            .collect();
                        json!({
                            "weight": t.weight().counts(),
                            "sign": t.sign(),
                            "type": parts(&t.tabloid_type()),
                            "ribbons": ribbons,
                        })
                    })
                    .collect();
                out = envelope("tabloids", json!({ "shape": parts(shape) }), json!(items));
            } else {
                for t in &ts {
                    let sign = if t.sign() > 0 { '+' } else { '-' };
                    writeln!(
                        out,
                        "{sign} weight={} type={}",
                        t.weight(),
                        t.tabloid_type()
                    )
                    .unwrap();
                }
            }
        }
        Command::Cylindric {
            level,
            rank,
            outer,
            inner,
            content,
        } => {
            let ctx = context(*level, *rank)?;
            let shape = SkewShape::new(outer.clone(), inner.clone())?;
            let ts = enumerate_cylindric(&shape, content, &ctx)?;
            if json {
                let items: Vec<Value> = ts.iter().map(|t| json!(t.tableau().rows())).collect();
                out = envelope(
                    "cylindric",
                    json!({
                        "level": level,
                        "rank": rank,
                        "outer": parts(outer),
                        "inner": parts(inner),
                        "content": content.counts(),
                    }),
                    json!({ "count": ts.len(), "tableaux": items }),
                );
            } else {
                for t in &ts {
                    let rows: Vec<String> = t
                        .tableau()
                        .rows()
                        .iter()
                        .map(|r| {
                            r.iter()
                                .map(|x| x.to_string())
                                .collect::<Vec<_>>()
                                .join(" ")
                        })
                        .collect();
                    writeln!(out, "{}", rows.join(" | ")).unwrap();
                }
                writeln!(out, "count {}", ts.len()).unwrap();
            }
        }
        Command::Crystal { op, index, word } => {
            let op = match op {
                OpArg::E => CrystalOp::Raise,
                OpArg::F => CrystalOp::Lower,
                OpArg::S => CrystalOp::Reflect,
            };
            let alphabet = word.max_letter().max(index + 1);
            let image = apply_crystal(word, op, *index, alphabet)?;
            if json {
                out = envelope(
                    "crystal",
                    json!({ "op": op.to_string(), "index": index, "word": word.to_string() }),
                    json!(image.map(|w| w.to_string())),
                );
            } else {
                match image {
                    Some(w) => writeln!(out, "{w}").unwrap(),
                    None => out.push_str("0\n"),
                }
            }
        }
        Command::Crosscheck {
            level,
            rank,
            max_weight,
        } => {
            let ctx = context(*level, *rank)?;
            let report = run_crosscheck(&ctx, *max_weight)?;
            if !report.all_passed() {
                code = EXIT_CHECK_FAILED;
            }
            if json {
                let checks: Vec<Value> = report
                    .checks
                    .iter()
                    .map(|c| {
                        json!({
                            "name": c.name,
                            "passed": c.passed,
                            "total": c.total,
                            "monitor": c.monitor,
                            "ok": c.ok(),
                            "failures": c.failures,
                        })
                    })
                    .collect();
                out = envelope(
                    "crosscheck",
                    json!({ "level": level, "rank": rank, "max_weight": max_weight }),
                    json!({ "all_passed": report.all_passed(), "checks": checks }),
                );
            } else {
                let width = report
                    .checks
                    .iter()
                    .map(|c| c.name.len())
                    .max()
                    .unwrap_or(0);
                for c in &report.checks {
                    let status = match (c.monitor, c.ok()) {
                        (true, _) => "info",
                        (false, true) => "ok",
                        (false, false) => "FAIL",
                    };
                    writeln!(
                        out,
                        "{:width$}  {:>7}/{:<7} {status}",
                        c.name, c.passed, c.total
                    )
                    .unwrap();
                    if !c.monitor {
                        for f in &c.failures {
                            writeln!(out, "    {f}").unwrap();
                        }
                    }
                }
                let verdict = if report.all_passed() {
                    "all checks passed"
                } else {
                    "some checks FAILED"
                };
                writeln!(out, "{verdict}").unwrap();
            }
        }
    }
    Ok((code, out))
}

fn to_method(m: MethodArg) -> Method {
    match m {
        MethodArg::Auto => Method::Auto,
        MethodArg::Kw => Method::Kw,
        MethodArg::Cyl => Method::Cyl,
        MethodArg::Det => Method::Det,
        MethodArg::Pos | MethodArg::All => Method::Pos,
    }
}

fn method_arg_name(m: MethodArg) -> String {
    match m {
        MethodArg::All => "all".to_string(),
        other => to_method(other).to_string(),
    }
}
