use super::ast::{BinOp, Builtin, Expr, ExprKind, Let, Script};
use super::lexer::{tokenize, Token, TokenKind};
use super::{Pos, SyntaxError};

/// A REPL line: zero or more bindings, optionally followed by an expression.
#[derive(Debug, Clone, PartialEq)]
pub struct Line {
    pub lets: Vec<Let>,
    pub expr: Option<Expr>,
}

const UNARY_BP: u8 = 7;

fn infix(kind: &TokenKind) -> Option<(BinOp, u8, u8)> {
    Some(match kind {
        TokenKind::Leq => (BinOp::Leq, 1, 2),
        TokenKind::EqEq => (BinOp::Eq, 1, 2),
        TokenKind::Plus => (BinOp::Add, 3, 4),
        TokenKind::Minus => (BinOp::Sub, 3, 4),
        TokenKind::Star => (BinOp::Mul, 5, 6),
        _ => return None,
    })
}

fn is_comparison(op: BinOp) -> bool {
    matches!(op, BinOp::Leq | BinOp::Eq)
}

struct Parser {
    toks: Vec<Token>,
    at: usize,
}

impl Parser {
    fn new(src: &str) -> Result<Self, SyntaxError> {
        Ok(Parser {
            toks: tokenize(src)?,
            at: 0,
        })
    }

    fn peek(&self) -> &Token {
        &self.toks[self.at]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if t.kind != TokenKind::Eof {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, expected: &str) -> SyntaxError {
        let t = self.peek();
        SyntaxError::parse(t.pos, format!("expected {expected}, found {}", t.kind))
    }

    fn eat(&mut self, kind: &TokenKind) -> bool {
        if &self.peek().kind == kind {
            self.next();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, kind: TokenKind) -> Result<Token, SyntaxError> {
        if self.peek().kind == kind {
            Ok(self.next())
        } else {
            Err(self.unexpected(&format!("`{}`", kind.symbol())))
        }
    }

    fn expr(&mut self) -> Result<Expr, SyntaxError> {
        self.expr_bp(0)
    }

    fn expr_bp(&mut self, min_bp: u8) -> Result<Expr, SyntaxError> {
        let mut lhs = self.prefix()?;
        let mut compared = false;
        while let Some((op, lbp, rbp)) = infix(&self.peek().kind) {
            if lbp < min_bp {
                break;
            }
            let op_tok = self.next();
            if is_comparison(op) {
                if compared {
                    return Err(SyntaxError::parse(
                        op_tok.pos,
                        format!("comparison `{}` cannot be chained", op.symbol()),
                    ));
                }
                compared = true;
            }
            let rhs = self.expr_bp(rbp)?;
            lhs = Expr::new(
                ExprKind::Binary(op, Box::new(lhs), Box::new(rhs)),
                op_tok.pos,
            );
        }
        Ok(lhs)
    }

    fn prefix(&mut self) -> Result<Expr, SyntaxError> {
        let pos = self.peek().pos;
        let kind = match self.peek().kind.clone() {
            TokenKind::Number(x) => {
                self.next();
                ExprKind::Number(x)
            }
            TokenKind::Imag(x) => {
                self.next();
                ExprKind::Imag(x)
            }
            TokenKind::Str(s) => {
                self.next();
                ExprKind::Str(s)
            }
            TokenKind::Minus => {
                self.next();
                ExprKind::Neg(Box::new(self.expr_bp(UNARY_BP)?))
            }
            TokenKind::LParen => {
                self.next();
                let inner = self.expr()?;
                self.expect(TokenKind::RParen)?;
                return Ok(inner);
            }
            TokenKind::Ident(name) => {
                self.next();
                if self.peek().kind == TokenKind::LParen {
                    return self.call(&name, pos);
                }
                ExprKind::Var(name)
            }
            TokenKind::Vec => {
                self.next();
                self.expect(TokenKind::LBracket)?;
                let items = self.list(TokenKind::RBracket)?;
                ExprKind::VecLit(items)
            }
            TokenKind::Op => {
                self.next();
                self.expect(TokenKind::LBracket)?;
                let mut rows = Vec::new();
                loop {
                    self.expect(TokenKind::LBracket)?;
                    rows.push(self.list(TokenKind::RBracket)?);
                    if !self.eat(&TokenKind::Comma) {
                        break;
                    }
                }
                self.expect(TokenKind::RBracket)?;
                ExprKind::OpLit(rows)
            }
            TokenKind::Span => {
                self.next();
                self.expect(TokenKind::LBrace)?;
                ExprKind::Span(self.list(TokenKind::RBrace)?)
            }
            _ => return Err(self.unexpected("expression")),
        };
        Ok(Expr::new(kind, pos))
    }

    /// One or more comma-separated expressions followed by `close`.
    fn list(&mut self, close: TokenKind) -> Result<Vec<Expr>, SyntaxError> {
        let mut items = vec![self.expr()?];
        while self.eat(&TokenKind::Comma) {
            items.push(self.expr()?);
        }
        if self.peek().kind != close {
            return Err(self.unexpected(&format!("`,` or `{}`", close.symbol())));
        }
        self.next();
        Ok(items)
    }

    fn call(&mut self, name: &str, pos: Pos) -> Result<Expr, SyntaxError> {
        let builtin = Builtin::from_name(name)
            .ok_or_else(|| SyntaxError::parse(pos, format!("unknown function `{name}`")))?;
        self.expect(TokenKind::LParen)?;
        let args = if self.eat(&TokenKind::RParen) {
            Vec::new()
        } else {
            self.list(TokenKind::RParen)?
        };
        let ok = match builtin.arity() {
            Some(n) => args.len() == n,
            None => !args.is_empty(),
        };
        if !ok {
            let wanted = match builtin.arity() {
                Some(1) => "1 argument".to_string(),
                Some(n) => format!("{n} arguments"),
                None => "at least 1 argument".to_string(),
            };
            return Err(SyntaxError::parse(
                pos,
                format!("`{name}` takes {wanted}, found {}", args.len()),
            ));
        }
        Ok(Expr::new(ExprKind::Call(builtin, args), pos))
    }

    fn binding(&mut self) -> Result<Let, SyntaxError> {
        self.expect(TokenKind::Let)?;
        let t = self.peek().clone();
        let TokenKind::Ident(name) = t.kind else {
            return Err(self.unexpected("identifier"));
        };
        self.next();
        self.expect(TokenKind::Assign)?;
        let value = self.expr()?;
        Ok(Let {
            name,
            pos: t.pos,
            value,
        })
    }

    fn line(&mut self) -> Result<Line, SyntaxError> {
        let mut lets = Vec::new();
        while self.peek().kind == TokenKind::Let {
            lets.push(self.binding()?);
            if self.eat(&TokenKind::Semi) {
                continue;
            }
            if self.peek().kind == TokenKind::Eof {
                return Ok(Line { lets, expr: None });
            }
            return Err(self.unexpected("`;`"));
        }
        if self.peek().kind == TokenKind::Eof {
            return Ok(Line { lets, expr: None });
        }
        let expr = self.expr()?;
        self.eat(&TokenKind::Semi);
        if self.peek().kind != TokenKind::Eof {
            return Err(self.unexpected("operator or end of input"));
        }
        Ok(Line {
            lets,
            expr: Some(expr),
        })
    }
}

/// Parses a single expression spanning all of `src`.
pub fn parse_expr(src: &str) -> Result<Expr, SyntaxError> {
    let mut p = Parser::new(src)?;
    let e = p.expr()?;
    if p.peek().kind != TokenKind::Eof {
        return Err(p.unexpected("operator or end of input"));
    }
    Ok(e)
}

/// `let` bindings and an optional trailing expression.
pub fn parse_line(src: &str) -> Result<Line, SyntaxError> {
    Parser::new(src)?.line()
}

/// `let` bindings followed by a required result expression.
pub fn parse_script(src: &str) -> Result<Script, SyntaxError> {
    let mut p = Parser::new(src)?;
    let line = p.line()?;
    match line.expr {
        Some(body) => Ok(Script {
            lets: line.lets,
            body,
        }),
        None => Err(p.unexpected("expression")),
    }
}
