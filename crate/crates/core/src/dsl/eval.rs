use std::collections::{BTreeMap, HashMap};

use super::{Ast, BinOp, Builtin, DslError, UnaryOp};

/// Variable bindings for evaluation.
pub trait Env {
    fn get(&self, name: &str) -> Option<f64>;
}

impl Env for HashMap<String, f64> {
    fn get(&self, name: &str) -> Option<f64> {
        HashMap::get(self, name).copied()
    }
}

impl Env for BTreeMap<String, f64> {
    fn get(&self, name: &str) -> Option<f64> {
        BTreeMap::get(self, name).copied()
    }
}

impl Env for [(&str, f64)] {
    fn get(&self, name: &str) -> Option<f64> {
        self.iter().find(|(k, _)| *k == name).map(|(_, v)| *v)
    }
}

impl<const N: usize> Env for [(&str, f64); N] {
    fn get(&self, name: &str) -> Option<f64> {
        Env::get(self.as_slice(), name)
    }
}

impl Env for [(String, f64)] {
    fn get(&self, name: &str) -> Option<f64> {
        self.iter().find(|(k, _)| k == name).map(|(_, v)| *v)
    }
}

impl Env for Vec<(String, f64)> {
    fn get(&self, name: &str) -> Option<f64> {
        Env::get(self.as_slice(), name)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Scalar(f64),
    Vector(Vec<f64>),
}

impl Value {
    pub fn as_scalar(&self) -> Result<f64, DslError> {
        match self {
            Value::Scalar(v) => Ok(*v),
            Value::Vector(_) => Err(DslError::Shape { expected: "scalar", got: "vector" }),
        }
    }

    pub fn into_vector(self) -> Result<Vec<f64>, DslError> {
        match self {
            Value::Vector(v) => Ok(v),
            Value::Scalar(_) => Err(DslError::Shape { expected: "vector", got: "scalar" }),
        }
    }
}

/// Evaluates `ast` under `env`. Tuples produce vectors, everything else a
/// scalar. Overflow and division by zero follow IEEE semantics; only the
/// domain errors of `sqrt` and `^` are reported.
pub fn eval<E: Env + ?Sized>(ast: &Ast, env: &E) -> Result<Value, DslError> {
    match ast {
        Ast::Tuple(items) => items
            .iter()
            .map(|a| scalar(a, env))
            .collect::<Result<Vec<_>, _>>()
            .map(Value::Vector),
        other => scalar(other, env).map(Value::Scalar),
    }
}

pub(crate) fn scalar<E: Env + ?Sized>(ast: &Ast, env: &E) -> Result<f64, DslError> {
    Ok(match ast {
        Ast::Literal(v) => *v,
        Ast::Var(name) => env.get(name).ok_or_else(|| DslError::Unbound(name.clone()))?,
        Ast::Unary(UnaryOp::Neg, a) => -scalar(a, env)?,
        Ast::Binary(op, a, b) => {
            let (a, b) = (scalar(a, env)?, scalar(b, env)?);
            match op {
                BinOp::Add => a + b,
                BinOp::Sub => a - b,
                BinOp::Mul => a * b,
                BinOp::Div => a / b,
                BinOp::Pow => power(a, b)?,
            }
        }
        Ast::Call(f, args) => {
            let args = args.iter().map(|a| scalar(a, env)).collect::<Result<Vec<_>, _>>()?;
            call(*f, &args)?
        }
        Ast::Tuple(_) => return Err(DslError::Shape { expected: "scalar", got: "vector" }),
    })
}

fn power(base: f64, exponent: f64) -> Result<f64, DslError> {
    let integral = exponent.fract() == 0.0;
    if integral && exponent.abs() <= f64::from(i32::MAX) {
        return Ok(base.powi(exponent as i32));
    }
    if base < 0.0 && !integral {
        return Err(DslError::Domain(format!("{base}^{exponent}: non-integer power of a negative number")));
    }
    Ok(base.powf(exponent))
}

fn call(f: Builtin, args: &[f64]) -> Result<f64, DslError> {
    let x = args[0];
    Ok(match f {
        Builtin::Sqrt if x < 0.0 => return Err(DslError::Domain(format!("sqrt({x})"))),
        Builtin::Sqrt => x.sqrt(),
        Builtin::Abs => x.abs(),
        Builtin::Sin => x.sin(),
        Builtin::Cos => x.cos(),
        Builtin::Sign if x > 0.0 => 1.0,
        Builtin::Sign if x < 0.0 => -1.0,
        Builtin::Sign => 0.0,
        Builtin::Min => args.iter().copied().fold(f64::INFINITY, f64::min),
        Builtin::Max => args.iter().copied().fold(f64::NEG_INFINITY, f64::max),
    })
}
