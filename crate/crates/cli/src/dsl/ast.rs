use std::fmt;

use super::Pos;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Leq,
    Eq,
}

impl BinOp {
    pub fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Mul => "*",
            BinOp::Leq => "<=",
            BinOp::Eq => "==",
        }
    }
}

macro_rules! builtins {
    ($($variant:ident = $name:literal / $arity:expr,)*) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
        pub enum Builtin {
            $($variant,)*
        }

        impl Builtin {
            pub const ALL: &'static [Builtin] = &[$(Builtin::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(Builtin::$variant => $name,)*
                }
            }

            /// Exact argument count, or `None` for `trunc`, which takes a vector and any number of indices.
            pub fn arity(self) -> Option<usize> {
                match self {
                    $(Builtin::$variant => $arity,)*
                }
            }

            pub fn from_name(name: &str) -> Option<Builtin> {
                match name {
                    $($name => Some(Builtin::$variant),)*
                    _ => None,
                }
            }
        }
    };
}

builtins! {
    Ket = "ket" / Some(2),
    Id = "id" / Some(1),
    Top = "top" / Some(1),
    Bot = "bot" / Some(1),
    Zero = "zero" / Some(2),
    Adj = "adj" / Some(1),
    Norm = "norm" / Some(1),
    Inner = "inner" / Some(2),
    Proj = "proj" / Some(1),
    Kernel = "kernel" / Some(1),
    Eigenspace = "eigenspace" / Some(2),
    Butterfly = "butterfly" / Some(2),
    Sandwich = "sandwich" / Some(2),
    Img = "img" / Some(2),
    Applyv = "applyv" / Some(2),
    Compose = "compose" / Some(2),
    Scale = "scale" / Some(2),
    Sup = "sup" / Some(2),
    Inf = "inf" / Some(2),
    Ocompl = "ocompl" / Some(1),
    Classical = "classical" / Some(3),
    Trunc = "trunc" / None,
    Dim = "dim" / Some(1),
}

#[derive(Debug, Clone)]
pub struct Expr {
    pub kind: ExprKind,
    pub pos: Pos,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ExprKind {
    Number(f64),
    Imag(f64),
    Str(String),
    Var(String),
    Neg(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Call(Builtin, Vec<Expr>),
    VecLit(Vec<Expr>),
    OpLit(Vec<Vec<Expr>>),
    Span(Vec<Expr>),
}

/// Structural equality; positions are ignored.
impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Expr {
    pub fn new(kind: ExprKind, pos: Pos) -> Self {
        Expr { kind, pos }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Let {
    pub name: String,
    pub pos: Pos,
    pub value: Expr,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Script {
    pub lets: Vec<Let>,
    pub body: Expr,
}

fn comma_list(f: &mut fmt::Formatter<'_>, items: &[Expr]) -> fmt::Result {
    for (k, e) in items.iter().enumerate() {
        if k > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{e}")?;
    }
    Ok(())
}

/// Fully parenthesized rendering that parses back to an equal tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Number(x) => write!(f, "{x}"),
            ExprKind::Imag(x) => write!(f, "{x}i"),
            ExprKind::Str(s) => write!(f, "\"{s}\""),
            ExprKind::Var(name) => f.write_str(name),
            ExprKind::Neg(e) => write!(f, "(-{e})"),
            ExprKind::Binary(op, l, r) => write!(f, "({l} {} {r})", op.symbol()),
            ExprKind::Call(b, args) => {
                write!(f, "{}(", b.name())?;
                comma_list(f, args)?;
                f.write_str(")")
            }
            ExprKind::VecLit(items) => {
                f.write_str("vec[")?;
                comma_list(f, items)?;
                f.write_str("]")
            }
            ExprKind::OpLit(rows) => {
                f.write_str("op[")?;
                for (k, row) in rows.iter().enumerate() {
                    if k > 0 {
                        f.write_str(", ")?;
                    }
                    f.write_str("[")?;
                    comma_list(f, row)?;
                    f.write_str("]")?;
                }
                f.write_str("]")
            }
            ExprKind::Span(items) => {
                f.write_str("span{")?;
                comma_list(f, items)?;
                f.write_str("}")
            }
        }
    }
}

impl fmt::Display for Script {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lets {
            writeln!(f, "let {} = {};", l.name, l.value)?;
        }
        write!(f, "{}", self.body)
    }
}
