#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub const NUMERIC_TOL: f64 = 1e-9;

pub fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hilbert"))
}

pub fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn hilbert")
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// `(stem, path)` of every `*.expr` file in `dir`, sorted.
pub fn expr_files(dir: &Path) -> Vec<(String, PathBuf)> {
    let mut out: Vec<_> = fs::read_dir(dir)
        .expect("golden dir")
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "expr"))
        .map(|p| (p.file_stem().unwrap().to_string_lossy().into_owned(), p))
        .collect();
    out.sort();
    out
}

#[derive(Debug, PartialEq)]
enum Piece {
    Num(f64),
    Text(char),
}

fn pieces(s: &str) -> Vec<Piece> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        if chars[i].is_ascii_digit() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            if i < chars.len() && chars[i] == 'e' {
                i += 1;
                if i < chars.len() && chars[i] == '-' {
                    i += 1;
                }
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
            }
            let lit: String = chars[start..i].iter().collect();
            out.push(Piece::Num(lit.parse().expect("numeric literal")));
        } else {
            out.push(Piece::Text(chars[i]));
            i += 1;
        }
    }
    out
}

fn is_exact_kind(s: &str) -> bool {
    let t = s.trim();
    t == "true" || t == "false" || (!t.is_empty() && t.chars().all(|c| c.is_ascii_digit()))
}

/// Booleans and integers must match byte for byte; anything else matches when the
/// non-numeric text is identical and the numbers agree within `NUMERIC_TOL`.
pub fn outputs_match(expected: &str, actual: &str) -> bool {
    if is_exact_kind(expected) {
        return expected == actual;
    }
    let (e, a) = (pieces(expected), pieces(actual));
    e.len() == a.len()
        && e.iter().zip(&a).all(|pair| match pair {
            (Piece::Num(x), Piece::Num(y)) => (x - y).abs() <= NUMERIC_TOL,
            (x, y) => x == y,
        })
}

pub struct GoldenOutcome {
    pub checked: usize,
    pub failures: Vec<String>,
}

/// Runs every expression file through `hilbert eval --file` and compares against `.out`.
pub fn run_golden_ok() -> GoldenOutcome {
    let mut failures = Vec::new();
    let files = expr_files(&golden_dir().join("ok"));
    for (stem, path) in &files {
        let expected = fs::read_to_string(path.with_extension("out")).expect("expected output");
        let out = run(&["eval", "--file", path.to_str().unwrap()]);
        let actual = String::from_utf8_lossy(&out.stdout);
        if out.status.code() != Some(0) || !outputs_match(&expected, &actual) {
            failures.push(format!(
                "{stem}: exit {:?}, expected {:?}, got {:?} / {:?}",
                out.status.code(),
                expected,
                actual,
                String::from_utf8_lossy(&out.stderr)
            ));
        }
    }
    GoldenOutcome {
        checked: files.len(),
        failures,
    }
}

/// Every malformed file must exit 2 with a one-line diagnostic naming the expected `line:col`.
pub fn run_golden_malformed() -> GoldenOutcome {
    let mut failures = Vec::new();
    let files = expr_files(&golden_dir().join("malformed"));
    for (stem, path) in &files {
        let pos = fs::read_to_string(path.with_extension("pos")).expect("expected position");
        let out = run(&["eval", "--file", path.to_str().unwrap()]);
        let err = String::from_utf8_lossy(&out.stderr);
        let ok = out.status.code() == Some(2)
            && out.stdout.is_empty()
            && err.lines().count() == 1
            && err.contains(&format!(" at {}:", pos.trim()));
        if !ok {
            failures.push(format!(
                "{stem}: exit {:?}, stderr {:?}",
                out.status.code(),
                err
            ));
        }
    }
    GoldenOutcome {
        checked: files.len(),
        failures,
    }
}
