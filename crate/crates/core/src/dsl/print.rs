use std::fmt;

use super::{Ast, BinOp, UnaryOp};

const SUM: u8 = 1;
const PRODUCT: u8 = 2;
const UNARY: u8 = 3;
const POWER: u8 = 4;
const ATOM: u8 = 5;

fn precedence(ast: &Ast) -> u8 {
    match ast {
        Ast::Binary(BinOp::Add | BinOp::Sub, ..) => SUM,
        Ast::Binary(BinOp::Mul | BinOp::Div, ..) => PRODUCT,
        Ast::Binary(BinOp::Pow, ..) => POWER,
        Ast::Unary(..) => UNARY,
        _ => ATOM,
    }
}

fn child(f: &mut fmt::Formatter<'_>, ast: &Ast, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "(")?;
        write_ast(ast, f)?;
        write!(f, ")")
    } else {
        write_ast(ast, f)
    }
}

/// Writes `ast` with the minimum parentheses needed to parse back to the
/// same tree.
pub(super) fn write_ast(ast: &Ast, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match ast {
        Ast::Literal(v) if v.is_sign_negative() => write!(f, "(-{})", -v),
        Ast::Literal(v) => write!(f, "{v}"),
        Ast::Var(name) => write!(f, "{name}"),
        Ast::Unary(UnaryOp::Neg, a) => {
            write!(f, "-")?;
            child(f, a, precedence(a) < UNARY)
        }
        Ast::Binary(BinOp::Pow, a, b) => {
            child(f, a, precedence(a) < ATOM)?;
            write!(f, "^")?;
            child(f, b, precedence(b) < UNARY)
        }
        Ast::Binary(op, a, b) => {
            let level = precedence(ast);
            child(f, a, precedence(a) < level)?;
            write!(f, " {} ", op.symbol())?;
            child(f, b, precedence(b) <= level)
        }
        Ast::Call(func, args) => {
            write!(f, "{}(", func.name())?;
            list(f, args)?;
            write!(f, ")")
        }
        Ast::Tuple(items) => {
            write!(f, "(")?;
            list(f, items)?;
            write!(f, ")")
        }
    }
}

fn list(f: &mut fmt::Formatter<'_>, items: &[Ast]) -> fmt::Result {
    for (i, item) in items.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write_ast(item, f)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::super::Ast;

    fn reprint(text: &str) -> String {
        Ast::parse(text).unwrap().to_string()
    }

    #[test]
    fn minimal_parentheses() {
        assert_eq!(reprint("(x1^2, x2^2)"), "(x1^2, x2^2)");
        assert_eq!(reprint("((1 + 2)) * 3"), "(1 + 2) * 3");
        assert_eq!(reprint("1 - (2 - 3)"), "1 - (2 - 3)");
        assert_eq!(reprint("(1 - 2) - 3"), "1 - 2 - 3");
        assert_eq!(reprint("(-1)^n"), "(-1)^n");
        assert_eq!(reprint("(2^3)^2"), "(2^3)^2");
        assert_eq!(reprint("2^3^2"), "2^3^2");
        assert_eq!(reprint("-(a*b)"), "-(a * b)");
        assert_eq!(reprint("a*-b"), "a * -b");
        assert_eq!(reprint("2^-(1+n)"), "2^-(1 + n)");
    }

    #[test]
    fn small_and_large_literals_survive() {
        for text in ["1e-7", "123456789e20", "0.1", "2.5e-300"] {
            let ast = Ast::parse(text).unwrap();
            assert_eq!(Ast::parse(&ast.to_string()).unwrap(), ast, "{text}");
        }
    }
}
