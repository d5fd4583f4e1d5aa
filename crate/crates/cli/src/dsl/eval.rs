use std::fmt;

use hilbert_core::{complex_leq, CScalar, HOp, HVec, PartialMap, Subspace, Tolerance};
use indexmap::IndexMap;

use super::ast::{BinOp, Builtin, Expr, ExprKind, Let, Script};
use super::Pos;

#[derive(Debug, Clone)]
pub enum Value {
    Scalar(CScalar),
    Vector(HVec),
    Operator(HOp),
    Space(Subspace),
    Bool(bool),
}

impl Value {
    pub fn sort(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "scalar",
            Value::Vector(_) => "vector",
            Value::Operator(_) => "operator",
            Value::Space(_) => "space",
            Value::Bool(_) => "bool",
        }
    }
}

/// Representation equality: spaces compare by their stored basis. The DSL's `==` is the
/// tolerance-aware comparison.
impl PartialEq for Value {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Value::Scalar(a), Value::Scalar(b)) => a == b,
            (Value::Vector(a), Value::Vector(b)) => a == b,
            (Value::Operator(a), Value::Operator(b)) => a == b,
            (Value::Space(a), Value::Space(b)) => {
                a.ambient() == b.ambient() && a.basis() == b.basis()
            }
            (Value::Bool(a), Value::Bool(b)) => a == b,
            _ => false,
        }
    }
}

/// Bindings in insertion order. A name can be bound once.
pub type Env = IndexMap<String, Value>;

#[derive(Debug, Clone, PartialEq)]
pub enum EvalErrorKind {
    Type(String),
    Dim(String),
    Unbound(String),
    Rebound(String),
    Domain(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvalError {
    pub pos: Pos,
    pub kind: EvalErrorKind,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            EvalErrorKind::Type(m) => write!(f, "type error at {}: {m}", self.pos),
            EvalErrorKind::Dim(m) => write!(f, "dimension error at {}: {m}", self.pos),
            EvalErrorKind::Unbound(n) => write!(f, "unbound identifier at {}: `{n}`", self.pos),
            EvalErrorKind::Rebound(n) => {
                write!(f, "rebinding at {}: `{n}` is already bound", self.pos)
            }
            EvalErrorKind::Domain(m) => write!(f, "evaluation error at {}: {m}", self.pos),
        }
    }
}

impl std::error::Error for EvalError {}

type EResult<T> = Result<T, EvalError>;

fn type_err<T>(pos: Pos, msg: impl Into<String>) -> EResult<T> {
    Err(EvalError {
        pos,
        kind: EvalErrorKind::Type(msg.into()),
    })
}

fn core_err(pos: Pos) -> impl Fn(hilbert_core::Error) -> EvalError {
    move |e| {
        use hilbert_core::Error as E;
        let kind = match e {
            E::DimMismatch { .. } | E::NonSquare { .. } | E::ZeroDim => {
                EvalErrorKind::Dim(e.to_string())
            }
            other => EvalErrorKind::Domain(other.to_string()),
        };
        EvalError { pos, kind }
    }
}

/// Binds each `let` of `script` into `env`, then evaluates its body.
pub fn eval_script(script: &Script, env: &mut Env, tol: &Tolerance) -> EResult<Value> {
    for l in &script.lets {
        bind_let(l, env, tol)?;
    }
    eval(&script.body, env, tol)
}

/// Evaluates a binding into `env`; a name that is already bound is an error.
pub fn bind_let(l: &Let, env: &mut Env, tol: &Tolerance) -> EResult<()> {
    if env.contains_key(&l.name) {
        return Err(EvalError {
            pos: l.pos,
            kind: EvalErrorKind::Rebound(l.name.clone()),
        });
    }
    let v = eval(&l.value, env, tol)?;
    env.insert(l.name.clone(), v);
    Ok(())
}

pub fn eval(e: &Expr, env: &Env, tol: &Tolerance) -> EResult<Value> {
    let pos = e.pos;
    let ce = core_err(pos);
    Ok(match &e.kind {
        ExprKind::Number(x) => Value::Scalar(CScalar::new(*x, 0.0)),
        ExprKind::Imag(x) => Value::Scalar(CScalar::new(0.0, *x)),
        ExprKind::Str(_) => {
            return type_err(
                pos,
                "a string is only allowed as the map argument of `classical`",
            )
        }
        ExprKind::Var(name) => env.get(name).cloned().ok_or_else(|| EvalError {
            pos,
            kind: EvalErrorKind::Unbound(name.clone()),
        })?,
        ExprKind::Neg(inner) => match eval(inner, env, tol)? {
            Value::Scalar(z) => Value::Scalar(-z),
            Value::Vector(v) => Value::Vector(v.neg()),
            Value::Operator(a) => Value::Operator(a.neg()),
            Value::Space(s) => Value::Space(s.ocomplement(tol).map_err(&ce)?),
            other => return type_err(pos, format!("cannot negate a {}", other.sort())),
        },
        ExprKind::Binary(op, l, r) => {
            let lv = eval(l, env, tol)?;
            let rv = eval(r, env, tol)?;
            binary(*op, lv, rv, pos, tol)?
        }
        ExprKind::Call(b, args) => call(*b, args, env, tol, pos)?,
        ExprKind::VecLit(items) => {
            let coeffs = items
                .iter()
                .map(|x| scalar(x, env, tol))
                .collect::<EResult<Vec<_>>>()?;
            Value::Vector(HVec::new(coeffs).map_err(&ce)?)
        }
        ExprKind::OpLit(rows) => {
            let rows = rows
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|x| scalar(x, env, tol))
                        .collect::<EResult<Vec<_>>>()
                })
                .collect::<EResult<Vec<_>>>()?;
            Value::Operator(HOp::from_rows(&rows).map_err(&ce)?)
        }
        ExprKind::Span(items) => {
            let vs = items
                .iter()
                .map(|x| vector(x, env, tol))
                .collect::<EResult<Vec<_>>>()?;
            Value::Space(Subspace::span(&vs, vs[0].dim(), tol).map_err(&ce)?)
        }
    })
}

fn binary(op: BinOp, l: Value, r: Value, pos: Pos, tol: &Tolerance) -> EResult<Value> {
    use Value::*;
    let ce = core_err(pos);
    Ok(match (op, l, r) {
        (BinOp::Add, Scalar(a), Scalar(b)) => Scalar(a + b),
        (BinOp::Add, Vector(a), Vector(b)) => Vector(a.add(&b).map_err(&ce)?),
        (BinOp::Add, Operator(a), Operator(b)) => Operator(a.add(&b).map_err(&ce)?),
        (BinOp::Add, Space(a), Space(b)) => Space(a.sup(&b, tol).map_err(&ce)?),
        (BinOp::Sub, Scalar(a), Scalar(b)) => Scalar(a - b),
        (BinOp::Sub, Vector(a), Vector(b)) => Vector(a.sub(&b).map_err(&ce)?),
        (BinOp::Sub, Operator(a), Operator(b)) => Operator(a.sub(&b).map_err(&ce)?),
        (BinOp::Mul, Scalar(a), Scalar(b)) => Scalar(a * b),
        (BinOp::Mul, Scalar(a), Vector(v)) => Vector(v.scale(a)),
        (BinOp::Mul, Scalar(a), Operator(b)) => Operator(b.scale(a)),
        (BinOp::Mul, Operator(a), Operator(b)) => Operator(a.compose(&b).map_err(&ce)?),
        (BinOp::Mul, Operator(a), Vector(v)) => Vector(a.apply(&v).map_err(&ce)?),
        (BinOp::Mul, Operator(a), Space(s)) => Space(a.image(&s, tol).map_err(&ce)?),
        (BinOp::Leq, Scalar(a), Scalar(b)) => Bool(complex_leq(a, b, tol)),
        (BinOp::Leq, Operator(a), Operator(b)) => Bool(a.loewner_leq(&b, tol).map_err(&ce)?),
        (BinOp::Leq, Space(a), Space(b)) => Bool(a.leq(&b, tol).map_err(&ce)?),
        (BinOp::Eq, Scalar(a), Scalar(b)) => Bool(hilbert_core::approx_eq(a, b, tol)),
        (BinOp::Eq, Vector(a), Vector(b)) => {
            same_dims(a.dim(), b.dim(), pos)?;
            Bool(a.approx_eq(&b, tol))
        }
        (BinOp::Eq, Operator(a), Operator(b)) => {
            if a.shape() != b.shape() {
                return Err(EvalError {
                    pos,
                    kind: EvalErrorKind::Dim(format!(
                        "cannot compare a {}x{} operator with a {}x{} operator",
                        a.rows(),
                        a.cols(),
                        b.rows(),
                        b.cols()
                    )),
                });
            }
            Bool(a.approx_eq(&b, tol))
        }
        (BinOp::Eq, Space(a), Space(b)) => Bool(a.seq(&b, tol).map_err(&ce)?),
        (BinOp::Eq, Bool(a), Bool(b)) => Bool(a == b),
        (op, l, r) => {
            return type_err(
                pos,
                format!(
                    "`{}` is not defined for {} and {}",
                    op.symbol(),
                    l.sort(),
                    r.sort()
                ),
            )
        }
    })
}

fn same_dims(a: usize, b: usize, pos: Pos) -> EResult<()> {
    if a == b {
        Ok(())
    } else {
        Err(core_err(pos)(hilbert_core::Error::DimMismatch {
            expected: a,
            found: b,
        }))
    }
}

fn scalar(e: &Expr, env: &Env, tol: &Tolerance) -> EResult<CScalar> {
    match eval(e, env, tol)? {
        Value::Scalar(z) => Ok(z),
        other => type_err(
            e.pos,
            format!("expected a scalar, found a {}", other.sort()),
        ),
    }
}

fn vector(e: &Expr, env: &Env, tol: &Tolerance) -> EResult<HVec> {
    match eval(e, env, tol)? {
        Value::Vector(v) => Ok(v),
        other => type_err(
            e.pos,
            format!("expected a vector, found a {}", other.sort()),
        ),
    }
}

fn operator(e: &Expr, env: &Env, tol: &Tolerance) -> EResult<HOp> {
    match eval(e, env, tol)? {
        Value::Operator(a) => Ok(a),
        other => type_err(
            e.pos,
            format!("expected an operator, found a {}", other.sort()),
        ),
    }
}

fn space(e: &Expr, env: &Env, tol: &Tolerance) -> EResult<Subspace> {
    match eval(e, env, tol)? {
        Value::Space(s) => Ok(s),
        other => type_err(e.pos, format!("expected a space, found a {}", other.sort())),
    }
}

fn index(e: &Expr, env: &Env, tol: &Tolerance) -> EResult<usize> {
    let z = scalar(e, env, tol)?;
    if z.im == 0.0 && z.re >= 0.0 && z.re.fract() == 0.0 && z.re <= u32::MAX as f64 {
        Ok(z.re as usize)
    } else {
        type_err(e.pos, "expected a nonnegative integer")
    }
}

fn call(b: Builtin, args: &[Expr], env: &Env, tol: &Tolerance, pos: Pos) -> EResult<Value> {
    use Value::*;
    let ce = core_err(pos);
    let arg = |k: usize| &args[k];
    Ok(match b {
        Builtin::Ket => {
            Vector(HVec::ket(index(arg(0), env, tol)?, index(arg(1), env, tol)?).map_err(&ce)?)
        }
        Builtin::Id => Operator(HOp::identity(index(arg(0), env, tol)?).map_err(&ce)?),
        Builtin::Top => Space(Subspace::top(index(arg(0), env, tol)?).map_err(&ce)?),
        Builtin::Bot => Space(Subspace::bot(index(arg(0), env, tol)?).map_err(&ce)?),
        Builtin::Zero => {
            Operator(HOp::zero(index(arg(0), env, tol)?, index(arg(1), env, tol)?).map_err(&ce)?)
        }
        Builtin::Adj => match eval(arg(0), env, tol)? {
            Operator(a) => Operator(a.adjoint()),
            Scalar(z) => Scalar(z.conj()),
            other => {
                return type_err(
                    arg(0).pos,
                    format!("`adj` expects an operator, found a {}", other.sort()),
                )
            }
        },
        Builtin::Norm => {
            let n = match eval(arg(0), env, tol)? {
                Scalar(z) => z.norm(),
                Vector(v) => v.norm(),
                Operator(a) => a.op_norm(tol).map_err(&ce)?,
                other => {
                    return type_err(
                        arg(0).pos,
                        format!("`norm` is not defined for a {}", other.sort()),
                    )
                }
            };
            Scalar(CScalar::new(n, 0.0))
        }
        Builtin::Inner => Scalar(
            vector(arg(0), env, tol)?
                .inner(&vector(arg(1), env, tol)?)
                .map_err(&ce)?,
        ),
        Builtin::Proj => Operator(space(arg(0), env, tol)?.proj()),
        Builtin::Kernel => Space(operator(arg(0), env, tol)?.kernel(tol).map_err(&ce)?),
        Builtin::Eigenspace => {
            let a = operator(arg(0), env, tol)?;
            Space(a.eigenspace(scalar(arg(1), env, tol)?, tol).map_err(&ce)?)
        }
        Builtin::Butterfly => Operator(HOp::butterfly(
            &vector(arg(0), env, tol)?,
            &vector(arg(1), env, tol)?,
        )),
        Builtin::Sandwich => Operator(
            operator(arg(0), env, tol)?
                .sandwich(&operator(arg(1), env, tol)?)
                .map_err(&ce)?,
        ),
        Builtin::Img => Space(
            operator(arg(0), env, tol)?
                .image(&space(arg(1), env, tol)?, tol)
                .map_err(&ce)?,
        ),
        Builtin::Applyv => Vector(
            operator(arg(0), env, tol)?
                .apply(&vector(arg(1), env, tol)?)
                .map_err(&ce)?,
        ),
        Builtin::Compose => Operator(
            operator(arg(0), env, tol)?
                .compose(&operator(arg(1), env, tol)?)
                .map_err(&ce)?,
        ),
        Builtin::Scale => {
            let c = scalar(arg(0), env, tol)?;
            match eval(arg(1), env, tol)? {
                Scalar(z) => Scalar(c * z),
                Vector(v) => Vector(v.scale(c)),
                Operator(a) => Operator(a.scale(c)),
                other => {
                    return type_err(
                        arg(1).pos,
                        format!("`scale` is not defined for a {}", other.sort()),
                    )
                }
            }
        }
        Builtin::Sup => Space(
            space(arg(0), env, tol)?
                .sup(&space(arg(1), env, tol)?, tol)
                .map_err(&ce)?,
        ),
        Builtin::Inf => Space(
            space(arg(0), env, tol)?
                .inf(&space(arg(1), env, tol)?, tol)
                .map_err(&ce)?,
        ),
        Builtin::Ocompl => Space(space(arg(0), env, tol)?.ocomplement(tol).map_err(&ce)?),
        Builtin::Classical => {
            let dom = index(arg(0), env, tol)?;
            let cod = index(arg(1), env, tol)?;
            let ExprKind::Str(spec) = &arg(2).kind else {
                return type_err(
                    arg(2).pos,
                    "`classical` expects a map string such as \"0->1,1->_\"",
                );
            };
            let map = parse_map(spec, dom, cod).map_err(|m| EvalError {
                pos: arg(2).pos,
                kind: EvalErrorKind::Domain(m),
            })?;
            Operator(map.classical_operator())
        }
        Builtin::Trunc => {
            let v = vector(arg(0), env, tol)?;
            let keep = args[1..]
                .iter()
                .map(|x| index(x, env, tol))
                .collect::<EResult<Vec<_>>>()?;
            Vector(v.trunc(&keep).map_err(&ce)?)
        }
        Builtin::Dim => {
            let d = match eval(arg(0), env, tol)? {
                Vector(v) => v.dim(),
                Space(s) => s.dim(),
                other => {
                    return type_err(
                        arg(0).pos,
                        format!("`dim` is not defined for a {}", other.sort()),
                    )
                }
            };
            Scalar(CScalar::new(d as f64, 0.0))
        }
    })
}

/// Parses `"0->1,1->_"` into a partial map on `dom` points; unlisted points map to nothing.
pub fn parse_map(spec: &str, dom: usize, cod: usize) -> Result<PartialMap, String> {
    let mut images: Vec<Option<Option<usize>>> = vec![None; dom];
    for entry in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (x, y) = entry
            .split_once("->")
            .ok_or_else(|| format!("map entry `{entry}` is not of the form `i->j` or `i->_`"))?;
        let x: usize = x
            .trim()
            .parse()
            .map_err(|_| format!("bad source index in `{entry}`"))?;
        let y = match y.trim() {
            "_" => None,
            s => Some(
                s.parse::<usize>()
                    .map_err(|_| format!("bad target index in `{entry}`"))?,
            ),
        };
        let slot = images
            .get_mut(x)
            .ok_or_else(|| format!("source index {x} out of range for domain size {dom}"))?;
        if slot.is_some() {
            return Err(format!("source index {x} is mapped twice"));
        }
        *slot = Some(y);
    }
    PartialMap::new(cod, images.into_iter().map(Option::flatten).collect())
        .map_err(|e| e.to_string())
}
