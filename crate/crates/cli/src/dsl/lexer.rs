use std::fmt;

use super::{Pos, SyntaxError};

#[derive(Debug, Clone, PartialEq)]
pub enum TokenKind {
    Ident(String),
    Number(f64),
    /// `3i`, `0.5i`, or a bare `i` (value 1).
    Imag(f64),
    Str(String),
    Let,
    Vec,
    Op,
    Span,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Comma,
    Semi,
    Assign,
    Plus,
    Minus,
    Star,
    Leq,
    EqEq,
    Eof,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::Ident(s) => write!(f, "identifier `{s}`"),
            TokenKind::Number(x) => write!(f, "number `{x}`"),
            TokenKind::Imag(x) => write!(f, "imaginary literal `{x}i`"),
            TokenKind::Str(s) => write!(f, "string \"{s}\""),
            TokenKind::Eof => f.write_str("end of input"),
            other => write!(f, "`{}`", other.symbol()),
        }
    }
}

impl TokenKind {
    pub fn symbol(&self) -> &'static str {
        match self {
            TokenKind::Let => "let",
            TokenKind::Vec => "vec",
            TokenKind::Op => "op",
            TokenKind::Span => "span",
            TokenKind::LParen => "(",
            TokenKind::RParen => ")",
            TokenKind::LBracket => "[",
            TokenKind::RBracket => "]",
            TokenKind::LBrace => "{",
            TokenKind::RBrace => "}",
            TokenKind::Comma => ",",
            TokenKind::Semi => ";",
            TokenKind::Assign => "=",
            TokenKind::Plus => "+",
            TokenKind::Minus => "-",
            TokenKind::Star => "*",
            TokenKind::Leq => "<=",
            TokenKind::EqEq => "==",
            _ => "",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    pub kind: TokenKind,
    pub lexeme: String,
    pub pos: Pos,
}

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    col: usize,
}

impl Cursor<'_> {
    fn pos(&self) -> Pos {
        Pos::new(self.line, self.col)
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn take_while(&mut self, buf: &mut String, pred: impl Fn(char) -> bool) {
        while let Some(c) = self.peek().filter(|&c| pred(c)) {
            buf.push(c);
            self.bump();
        }
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

/// Splits `input` into tokens, ending with a single `Eof`. `#` starts a line comment.
pub fn tokenize(input: &str) -> Result<Vec<Token>, SyntaxError> {
    let mut cur = Cursor {
        chars: input.chars().peekable(),
        line: 1,
        col: 1,
    };
    let mut out = Vec::new();
    loop {
        while let Some(c) = cur.peek() {
            if c.is_whitespace() {
                cur.bump();
            } else if c == '#' {
                while cur.peek().is_some_and(|c| c != '\n') {
                    cur.bump();
                }
            } else {
                break;
            }
        }
        let pos = cur.pos();
        let Some(c) = cur.bump() else {
            out.push(Token {
                kind: TokenKind::Eof,
                lexeme: String::new(),
                pos,
            });
            return Ok(out);
        };
        let mut lexeme = String::from(c);
        let kind = match c {
            '(' => TokenKind::LParen,
            ')' => TokenKind::RParen,
            '[' => TokenKind::LBracket,
            ']' => TokenKind::RBracket,
            '{' => TokenKind::LBrace,
            '}' => TokenKind::RBrace,
            ',' => TokenKind::Comma,
            ';' => TokenKind::Semi,
            '+' => TokenKind::Plus,
            '-' => TokenKind::Minus,
            '*' => TokenKind::Star,
            '=' if cur.peek() == Some('=') => {
                cur.bump();
                lexeme.push('=');
                TokenKind::EqEq
            }
            '=' => TokenKind::Assign,
            '<' if cur.peek() == Some('=') => {
                cur.bump();
                lexeme.push('=');
                TokenKind::Leq
            }
            '"' => {
                let mut body = String::new();
                cur.take_while(&mut body, |c| c != '"' && c != '\n');
                if cur.bump() != Some('"') {
                    return Err(SyntaxError::lex(pos, "unterminated string literal"));
                }
                lexeme = format!("\"{body}\"");
                TokenKind::Str(body)
            }
            c if c.is_ascii_digit() => lex_number(&mut cur, &mut lexeme, pos)?,
            c if is_ident_start(c) => {
                cur.take_while(&mut lexeme, is_ident_char);
                match lexeme.as_str() {
                    "let" => TokenKind::Let,
                    "vec" => TokenKind::Vec,
                    "op" => TokenKind::Op,
                    "span" => TokenKind::Span,
                    "i" => TokenKind::Imag(1.0),
                    _ => TokenKind::Ident(lexeme.clone()),
                }
            }
            other => {
                return Err(SyntaxError::lex(
                    pos,
                    format!("unexpected character `{other}`"),
                ));
            }
        };
        out.push(Token { kind, lexeme, pos });
    }
}

fn lex_number(
    cur: &mut Cursor<'_>,
    lexeme: &mut String,
    pos: Pos,
) -> Result<TokenKind, SyntaxError> {
    cur.take_while(lexeme, |c| c.is_ascii_digit());
    if cur.peek() == Some('.') {
        lexeme.push('.');
        cur.bump();
        let before = lexeme.len();
        cur.take_while(lexeme, |c| c.is_ascii_digit());
        if lexeme.len() == before {
            return Err(SyntaxError::lex(
                pos,
                format!("missing digits after `{lexeme}`"),
            ));
        }
    }
    let value: f64 = lexeme
        .parse()
        .map_err(|_| SyntaxError::lex(pos, format!("malformed number `{lexeme}`")))?;
    if !value.is_finite() {
        return Err(SyntaxError::lex(
            pos,
            format!("number `{lexeme}` is out of range"),
        ));
    }
    let mut suffix = String::new();
    cur.take_while(&mut suffix, is_ident_char);
    match suffix.as_str() {
        "" => Ok(TokenKind::Number(value)),
        "i" => {
            lexeme.push('i');
            Ok(TokenKind::Imag(value))
        }
        _ => Err(SyntaxError::lex(
            pos,
            format!("malformed number `{lexeme}{suffix}`"),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(s: &str) -> Vec<TokenKind> {
        tokenize(s).unwrap().into_iter().map(|t| t.kind).collect()
    }

    #[test]
    fn ket_call() {
        assert_eq!(
            kinds("ket(0,2)"),
            vec![
                TokenKind::Ident("ket".into()),
                TokenKind::LParen,
                TokenKind::Number(0.0),
                TokenKind::Comma,
                TokenKind::Number(2.0),
                TokenKind::RParen,
                TokenKind::Eof
            ]
        );
    }

    #[test]
    fn imaginary_literals() {
        assert_eq!(
            kinds("2+3i"),
            vec![
                TokenKind::Number(2.0),
                TokenKind::Plus,
                TokenKind::Imag(3.0),
                TokenKind::Eof
            ]
        );
        assert_eq!(
            kinds("i 0.5i"),
            vec![TokenKind::Imag(1.0), TokenKind::Imag(0.5), TokenKind::Eof]
        );
    }

    #[test]
    fn bad_character_is_positioned() {
        let e = tokenize("@").unwrap_err();
        assert_eq!(e.pos, Pos::new(1, 1));
        let e = tokenize("let x =\n  1 $ 2").unwrap_err();
        assert_eq!(e.pos, Pos::new(2, 5));
    }

    #[test]
    fn malformed_numbers() {
        assert_eq!(tokenize("12ab").unwrap_err().pos, Pos::new(1, 1));
        assert_eq!(tokenize("x + 3.").unwrap_err().pos, Pos::new(1, 5));
    }

    #[test]
    fn positions_are_monotone() {
        let toks = tokenize("let a = ket(0, 2);\n# note\nadj(id(2)) * a <= b").unwrap();
        for w in toks.windows(2) {
            assert!(w[0].pos < w[1].pos);
        }
        assert_eq!(toks.last().unwrap().kind, TokenKind::Eof);
    }

    #[test]
    fn operators_and_keywords() {
        assert_eq!(
            kinds("span{} <= == = vec op let"),
            vec![
                TokenKind::Span,
                TokenKind::LBrace,
                TokenKind::RBrace,
                TokenKind::Leq,
                TokenKind::EqEq,
                TokenKind::Assign,
                TokenKind::Vec,
                TokenKind::Op,
                TokenKind::Let,
                TokenKind::Eof
            ]
        );
    }

    #[test]
    fn unterminated_string() {
        assert_eq!(
            tokenize("classical(1, 1, \"0->0").unwrap_err().pos,
            Pos::new(1, 17)
        );
    }
}
