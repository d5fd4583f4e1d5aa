//! The expression language: tokens, syntax tree, parser and evaluator.

mod ast;
mod eval;
mod lexer;
mod parser;

use std::fmt;

pub use ast::{BinOp, Builtin, Expr, ExprKind, Let, Script};
pub use eval::{bind_let, eval, eval_script, parse_map, Env, EvalError, EvalErrorKind, Value};
pub use lexer::{tokenize, Token, TokenKind};
pub use parser::{parse_expr, parse_line, parse_script, Line};

/// 1-based source position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl Pos {
    pub fn new(line: usize, col: usize) -> Self {
        Pos { line, col }
    }
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SyntaxErrorKind {
    Lex,
    Parse,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyntaxError {
    pub kind: SyntaxErrorKind,
    pub pos: Pos,
    pub message: String,
}

impl SyntaxError {
    pub(crate) fn lex(pos: Pos, message: impl Into<String>) -> Self {
        SyntaxError {
            kind: SyntaxErrorKind::Lex,
            pos,
            message: message.into(),
        }
    }

    pub(crate) fn parse(pos: Pos, message: impl Into<String>) -> Self {
        SyntaxError {
            kind: SyntaxErrorKind::Parse,
            pos,
            message: message.into(),
        }
    }
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            SyntaxErrorKind::Lex => "lex error",
            SyntaxErrorKind::Parse => "parse error",
        };
        write!(f, "{what} at {}: {}", self.pos, self.message)
    }
}

impl std::error::Error for SyntaxError {}
