//! Expression language for vectors, sequences, functions and function
//! families.
//!
//! ```text
//! expr    = sum ;
//! sum     = product { ( "+" | "-" ) product } ;
//! product = unary { ( "*" | "/" ) unary } ;
//! unary   = "-" unary | power ;
//! power   = primary [ "^" unary ] ;            (* right associative *)
//! primary = number
//!         | ident [ "(" expr { "," expr } ")" ]
//!         | "(" expr { "," expr } ")" ;       (* tuple only at the root *)
//! number  = digit { digit } [ "." { digit } ] [ ( "e" | "E" ) [ "+" | "-" ] digit { digit } ] ;
//! ident   = letter { letter | digit } ;
//! ```
//!
//! Builtins: `sqrt abs sin cos sign` (one argument), `min max` (two or more).
//! There is no implicit multiplication: `2n` is rejected.

mod eval;
mod lexer;
mod parser;
mod print;

pub use eval::{eval, Env, Value};
pub use lexer::{tokenize, Token, TokenKind};
pub use parser::parse_tokens;

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DslError {
    #[error("unexpected character {ch:?} at offset {offset}")]
    Lex { ch: char, offset: usize },
    #[error("parse error at offset {offset}: found {found}, expected one of {expected:?}")]
    Parse {
        offset: usize,
        found: String,
        expected: Vec<&'static str>,
    },
    #[error("unbound variable `{0}`")]
    Unbound(String),
    #[error("unknown function `{0}`")]
    UnknownFunction(String),
    #[error("`{name}` takes {expected} argument(s), got {got}")]
    Arity {
        name: String,
        expected: &'static str,
        got: usize,
    },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("expected a {expected} value, got a {got} value")]
    Shape {
        expected: &'static str,
        got: &'static str,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnaryOp {
    Neg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

impl BinOp {
    pub fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Mul => "*",
            BinOp::Div => "/",
            BinOp::Pow => "^",
        }
    }
}

/// Builtin function registry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Builtin {
    Sqrt,
    Abs,
    Sin,
    Cos,
    Sign,
    Min,
    Max,
}

impl Builtin {
    pub const ALL: [Builtin; 7] = [
        Builtin::Sqrt,
        Builtin::Abs,
        Builtin::Sin,
        Builtin::Cos,
        Builtin::Sign,
        Builtin::Min,
        Builtin::Max,
    ];

    pub fn lookup(name: &str) -> Option<Builtin> {
        Self::ALL.into_iter().find(|b| b.name() == name)
    }

    pub fn name(self) -> &'static str {
        match self {
            Builtin::Sqrt => "sqrt",
            Builtin::Abs => "abs",
            Builtin::Sin => "sin",
            Builtin::Cos => "cos",
            Builtin::Sign => "sign",
            Builtin::Min => "min",
            Builtin::Max => "max",
        }
    }

    fn arity_ok(self, n: usize) -> Result<(), &'static str> {
        match self {
            Builtin::Min | Builtin::Max if n >= 2 => Ok(()),
            Builtin::Min | Builtin::Max => Err("at least 2"),
            _ if n == 1 => Ok(()),
            _ => Err("exactly 1"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Ast {
    Literal(f64),
    Var(String),
    Unary(UnaryOp, Box<Ast>),
    Binary(BinOp, Box<Ast>, Box<Ast>),
    Call(Builtin, Vec<Ast>),
    Tuple(Vec<Ast>),
}

impl Ast {
    /// Tokenizes and parses `text`.
    pub fn parse(text: &str) -> Result<Ast, DslError> {
        parse_tokens(&tokenize(text)?)
    }

    /// Number of components for a tuple root, 1 for a scalar expression.
    pub fn arity(&self) -> usize {
        match self {
            Ast::Tuple(items) => items.len(),
            _ => 1,
        }
    }

    /// Splits a tuple root into its components; a scalar is its own single
    /// component.
    pub fn components(&self) -> Vec<Ast> {
        match self {
            Ast::Tuple(items) => items.clone(),
            other => vec![other.clone()],
        }
    }

    /// Free variable names, sorted and deduplicated.
    pub fn variables(&self) -> Vec<String> {
        fn walk(ast: &Ast, out: &mut Vec<String>) {
            match ast {
                Ast::Literal(_) => {}
                Ast::Var(v) => out.push(v.clone()),
                Ast::Unary(_, a) => walk(a, out),
                Ast::Binary(_, a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
                Ast::Call(_, args) | Ast::Tuple(args) => args.iter().for_each(|a| walk(a, out)),
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out.sort();
        out.dedup();
        out
    }

    /// Parenthesized prefix form, used for parse-tree snapshots.
    pub fn to_sexpr(&self) -> String {
        match self {
            Ast::Literal(v) => format!("{v}"),
            Ast::Var(v) => v.clone(),
            Ast::Unary(UnaryOp::Neg, a) => format!("(neg {})", a.to_sexpr()),
            Ast::Binary(op, a, b) => format!("({} {} {})", op.symbol(), a.to_sexpr(), b.to_sexpr()),
            Ast::Call(f, args) => {
                let inner: Vec<String> = args.iter().map(Ast::to_sexpr).collect();
                format!("({} {})", f.name(), inner.join(" "))
            }
            Ast::Tuple(items) => {
                let inner: Vec<String> = items.iter().map(Ast::to_sexpr).collect();
                format!("(tuple {})", inner.join(" "))
            }
        }
    }
}

impl fmt::Display for Ast {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        print::write_ast(self, f)
    }
}
