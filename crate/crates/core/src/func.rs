//! Maps `R^m -> R^k` and indexed families of them, defined by DSL
//! component expressions over `x1..xm` (and `n` for families).

use std::fmt;

use crate::dsl::{self, Ast, Env};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct FuncSpec {
    dim_in: usize,
    components: Vec<Ast>,
}

struct PointEnv<'a> {
    x: &'a [f64],
    n: Option<f64>,
}

impl Env for PointEnv<'_> {
    fn get(&self, name: &str) -> Option<f64> {
        if name == "n" {
            return self.n;
        }
        let index: usize = name.strip_prefix('x')?.parse().ok()?;
        if name[1..].starts_with('0') {
            return None;
        }
        self.x.get(index.checked_sub(1)?).copied()
    }
}

fn check_variables(ast: &Ast, dim_in: usize, allow_n: bool) -> Result<()> {
    for var in ast.variables() {
        let ok = (allow_n && var == "n")
            || var
                .strip_prefix('x')
                .filter(|rest| !rest.starts_with('0'))
                .and_then(|rest| rest.parse::<usize>().ok())
                .is_some_and(|i| (1..=dim_in).contains(&i));
        if !ok {
            return Err(Error::InvalidFunction(format!(
                "unknown variable `{var}` (expected x1..x{dim_in}{})",
                if allow_n { " or n" } else { "" }
            )));
        }
    }
    Ok(())
}

impl FuncSpec {
    /// Parses a tuple expression such as `(x1^2, x2^2)`.
    pub fn parse(text: &str, dim_in: usize) -> Result<Self> {
        Self::from_ast(Ast::parse(text)?, dim_in, false)
    }

    fn from_ast(ast: Ast, dim_in: usize, allow_n: bool) -> Result<Self> {
        if dim_in < 2 || ast.arity() < 2 {
            return Err(Error::InvalidFunction(format!(
                "input and output dimensions must be at least 2 (got {dim_in} -> {})",
                ast.arity()
            )));
        }
        check_variables(&ast, dim_in, allow_n)?;
        Ok(Self {
            dim_in,
            components: ast.components(),
        })
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            dim_in: dim,
            components: (1..=dim).map(|i| Ast::Var(format!("x{i}"))).collect(),
        }
    }

    pub fn dim_in(&self) -> usize {
        self.dim_in
    }

    pub fn dim_out(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Ast] {
        &self.components
    }

    fn eval_with(&self, x: &[f64], n: Option<f64>) -> Result<Vec<f64>> {
        if x.len() != self.dim_in {
            return Err(Error::Dimension {
                expected: self.dim_in,
                got: x.len(),
            });
        }
        let env = PointEnv { x, n };
        self.components
            .iter()
            .map(|c| dsl::eval(c, &env)?.as_scalar().map_err(Error::from))
            .collect()
    }

    /// `f(x)`. Components may be non-finite; callers decide what that means.
    pub fn apply(&self, x: &[f64]) -> Result<Vec<f64>> {
        self.eval_with(x, None)
    }
}

impl fmt::Display for FuncSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", Ast::Tuple(self.components.clone()))
    }
}

/// A sequence of maps `(f_n)` written as one expression in `x1..xm` and `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct FuncFamilySpec {
    base: FuncSpec,
}

impl FuncFamilySpec {
    pub fn parse(text: &str, dim_in: usize) -> Result<Self> {
        Ok(Self {
            base: FuncSpec::from_ast(Ast::parse(text)?, dim_in, true)?,
        })
    }

    /// The family whose every member is `f`.
    pub fn constant(f: FuncSpec) -> Self {
        Self { base: f }
    }

    pub fn dim_in(&self) -> usize {
        self.base.dim_in
    }

    pub fn dim_out(&self) -> usize {
        self.base.dim_out()
    }

    /// `f_n(x)`.
    pub fn apply(&self, n: u64, x: &[f64]) -> Result<Vec<f64>> {
        self.base.eval_with(x, Some(n as f64))
    }

    /// The member `f_n` as a standalone map.
    pub fn member(&self, n: u64) -> FuncSpec {
        let bind = |ast: &Ast| substitute(ast, "n", n as f64);
        FuncSpec {
            dim_in: self.base.dim_in,
            components: self.base.components.iter().map(bind).collect(),
        }
    }
}

impl fmt::Display for FuncFamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.base.fmt(f)
    }
}

fn substitute(ast: &Ast, name: &str, value: f64) -> Ast {
    match ast {
        Ast::Var(v) if v == name => Ast::Literal(value),
        Ast::Literal(_) | Ast::Var(_) => ast.clone(),
        Ast::Unary(op, a) => Ast::Unary(*op, Box::new(substitute(a, name, value))),
        Ast::Binary(op, a, b) => Ast::Binary(
            *op,
            Box::new(substitute(a, name, value)),
            Box::new(substitute(b, name, value)),
        ),
        Ast::Call(f, args) => Ast::Call(*f, args.iter().map(|a| substitute(a, name, value)).collect()),
        Ast::Tuple(items) => Ast::Tuple(items.iter().map(|a| substitute(a, name, value)).collect()),
    }
}
