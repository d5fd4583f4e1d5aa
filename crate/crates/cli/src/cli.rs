//! Argument handling and subcommands for the `hilbert` binary.

use std::ffi::OsString;
use std::fs;
use std::io::{BufRead, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use hilbert_core::lemma_suite::{run_checks, CheckReport};
use hilbert_core::Tolerance;

use crate::dsl::{eval, eval_script, parse_line, parse_script, Env, SyntaxError};
use crate::format::{format_real, format_value};
use crate::json::{document_from_json, document_to_json, report_to_json, value_to_json};

pub const EXIT_OK: i32 = 0;
pub const EXIT_EVAL: i32 = 1;
pub const EXIT_SYNTAX: i32 = 2;
pub const EXIT_CHECK_FAILED: i32 = 3;
pub const EXIT_IO: i32 = 4;

pub const DEFAULT_PRECISION: usize = 12;

#[derive(Debug, Parser)]
#[command(
    name = "hilbert",
    version,
    about = "Finite-dimensional Hilbert space calculator"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate an expression (or a script file) and print the result.
    Eval {
        /// Expression text, optionally preceded by `let name = expr;` bindings.
        #[arg(required_unless_present = "file", conflicts_with = "file")]
        expr: Option<String>,
        /// Read the script from a file instead.
        #[arg(long)]
        file: Option<PathBuf>,
        /// Significant digits for numbers.
        #[arg(long, default_value_t = DEFAULT_PRECISION, value_parser = parse_precision)]
        precision: usize,
        /// Print the result as a JSON envelope.
        #[arg(long)]
        json: bool,
    },
    /// Read-evaluate-print loop over standard input.
    Repl {
        #[arg(long, default_value_t = DEFAULT_PRECISION, value_parser = parse_precision)]
        precision: usize,
    },
    /// Run the randomized conformance checks.
    Check {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..=64))]
        max_dim: u64,
        #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        /// Comma-separated check names.
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Validate a JSON value file and write it back pretty-printed.
    Convert {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long = "out")]
        output: PathBuf,
    },
}

fn parse_precision(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(p @ 1..=17) => Ok(p),
        _ => Err("precision must be an integer between 1 and 17".into()),
    }
}

struct Io<'a> {
    input: &'a mut dyn BufRead,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    interactive: bool,
}

impl Io<'_> {
    fn fail(&mut self, code: i32, msg: impl std::fmt::Display) -> i32 {
        let _ = writeln!(self.err, "error: {msg}");
        code
    }
}

/// Runs the CLI with explicit streams and returns the process exit code.
pub fn run<I, T>(
    args: I,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
    interactive: bool,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            if !e.use_stderr() {
                let _ = write!(out, "{text}");
                return EXIT_OK;
            }
            let first = text.lines().next().unwrap_or("error: invalid arguments");
            let _ = writeln!(err, "{first}");
            return EXIT_SYNTAX;
        }
    };
    let mut io = Io {
        input,
        out,
        err,
        interactive,
    };
    let tol = Tolerance::DEFAULT;
    match cli.command {
        Command::Eval {
            expr,
            file,
            precision,
            json,
        } => cmd_eval(&mut io, expr, file, precision, json, &tol),
        Command::Repl { precision } => cmd_repl(&mut io, precision, &tol),
        Command::Check {
            seed,
            max_dim,
            trials,
            only,
            json,
        } => cmd_check(
            &mut io,
            seed,
            max_dim as usize,
            trials as usize,
            &only,
            json,
            &tol,
        ),
        Command::Convert { input, output } => cmd_convert(&mut io, &input, &output, &tol),
    }
}

fn cmd_eval(
    io: &mut Io<'_>,
    expr: Option<String>,
    file: Option<PathBuf>,
    precision: usize,
    json: bool,
    tol: &Tolerance,
) -> i32 {
    let src = match (expr, file) {
        (Some(e), _) => e,
        (None, Some(path)) => match fs::read_to_string(&path) {
            Ok(s) => s,
            Err(e) => return io.fail(EXIT_IO, format!("cannot read {}: {e}", path.display())),
        },
        (None, None) => return io.fail(EXIT_SYNTAX, "nothing to evaluate"),
    };
    let script = match parse_script(&src) {
        Ok(s) => s,
        Err(e) => return io.fail(EXIT_SYNTAX, e),
    };
    let mut env = Env::new();
    match eval_script(&script, &mut env, tol) {
        Ok(v) => {
            let text = if json {
                value_to_json(&v).to_string()
            } else {
                format_value(&v, precision)
            };
            let _ = writeln!(io.out, "{text}");
            EXIT_OK
        }
        Err(e) => io.fail(EXIT_EVAL, e),
    }
}

fn cmd_repl(io: &mut Io<'_>, precision: usize, tol: &Tolerance) -> i32 {
    let mut env = Env::new();
    let mut line = String::new();
    loop {
        if io.interactive {
            let _ = write!(io.out, "> ");
            let _ = io.out.flush();
        }
        line.clear();
        match io.input.read_line(&mut line) {
            Ok(0) => return EXIT_OK,
            Ok(_) => {}
            Err(e) => return io.fail(EXIT_IO, format!("cannot read input: {e}")),
        }
        let parsed = match parse_line(&line) {
            Ok(p) => p,
            Err(e) => {
                report_syntax(io, &e);
                continue;
            }
        };
        let mut outcome = Ok(());
        for l in &parsed.lets {
            outcome = crate::dsl::bind_let(l, &mut env, tol);
            if outcome.is_err() {
                break;
            }
        }
        let printed = outcome.and_then(|()| match &parsed.expr {
            Some(e) => eval(e, &env, tol).map(Some),
            None => Ok(None),
        });
        match printed {
            Ok(Some(v)) => {
                let _ = writeln!(io.out, "{}", format_value(&v, precision));
            }
            Ok(None) => {}
            Err(e) => {
                let _ = writeln!(io.err, "error: {e}");
            }
        }
    }
}

fn report_syntax(io: &mut Io<'_>, e: &SyntaxError) {
    let _ = writeln!(io.err, "error: {e}");
}

fn cmd_check(
    io: &mut Io<'_>,
    seed: u64,
    max_dim: usize,
    trials: usize,
    only: &[String],
    json: bool,
    tol: &Tolerance,
) -> i32 {
    let names: Vec<&str> = only
        .iter()
        .map(String::as_str)
        .filter(|s| !s.is_empty())
        .collect();
    let filter = (!names.is_empty()).then_some(names.as_slice());
    let report = match run_checks(seed, max_dim, trials, filter, tol) {
        Ok(r) => r,
        Err(e) => return io.fail(EXIT_EVAL, e),
    };
    let text = if json {
        serde_json::to_string_pretty(&report_to_json(&report)).expect("report serializes")
    } else {
        report_text(&report)
    };
    let _ = writeln!(io.out, "{text}");
    if report.all_passed() {
        EXIT_OK
    } else {
        let failed = report.checks.iter().filter(|c| c.fail > 0).count();
        io.fail(EXIT_CHECK_FAILED, format!("{failed} check(s) failed"))
    }
}

fn report_text(r: &CheckReport) -> String {
    let width = r.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    let mut lines: Vec<String> = r
        .checks
        .iter()
        .map(|c| {
            let status = if c.fail == 0 { "ok  " } else { "FAIL" };
            let mut line = format!(
                "{status} {:width$}  {}/{}  max residual {}",
                c.name,
                c.pass,
                c.pass + c.fail,
                format_real(c.max_residual, 3),
            );
            if let Some(s) = c.first_fail_seed {
                line.push_str(&format!("  first failing seed {s}"));
            }
            line
        })
        .collect();
    let failed = r.checks.iter().filter(|c| c.fail > 0).count();
    lines.push(format!("{} checks, {} failed", r.checks.len(), failed));
    lines.join("\n")
}

fn cmd_convert(io: &mut Io<'_>, input: &PathBuf, output: &PathBuf, tol: &Tolerance) -> i32 {
    let text = match fs::read_to_string(input) {
        Ok(t) => t,
        Err(e) => return io.fail(EXIT_IO, format!("cannot read {}: {e}", input.display())),
    };
    let json: serde_json::Value = match serde_json::from_str(&text) {
        Ok(j) => j,
        Err(e) => {
            return io.fail(
                EXIT_SYNTAX,
                format!("JSON syntax error at {}:{}: {e}", e.line(), e.column()),
            )
        }
    };
    let doc = match document_from_json(&json, tol) {
        Ok(d) => d,
        Err(e) => return io.fail(EXIT_EVAL, format!("invalid document: {e}")),
    };
    let mut pretty =
        serde_json::to_string_pretty(&document_to_json(&doc)).expect("document serializes");
    pretty.push('\n');
    if let Err(e) = fs::write(output, pretty) {
        return io.fail(EXIT_IO, format!("cannot write {}: {e}", output.display()));
    }
    EXIT_OK
}
