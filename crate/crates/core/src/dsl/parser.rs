use super::lexer::{Token, TokenKind};
use super::{Ast, BinOp, Builtin, DslError, UnaryOp};

const OPERAND: &[&str] = &["number", "identifier", "(", "-"];

/// Parses a token stream into an expression tree.
pub fn parse_tokens(tokens: &[Token]) -> Result<Ast, DslError> {
    let mut p = Parser { tokens, pos: 0 };
    let ast = p.sum()?;
    if p.pos < tokens.len() {
        return Err(p.unexpected(&["operator", "end of input"]));
    }
    Ok(ast)
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&'a Token> {
        self.tokens.get(self.pos)
    }

    fn peek_op(&self, ops: &[&str]) -> Option<&'a str> {
        self.peek()
            .filter(|t| t.kind == TokenKind::Operator && ops.contains(&t.text.as_str()))
            .map(|t| t.text.as_str())
    }

    fn offset(&self) -> usize {
        match self.peek() {
            Some(t) => t.offset,
            None => self.tokens.last().map_or(0, |t| t.offset + t.text.len()),
        }
    }

    fn unexpected(&self, expected: &[&'static str]) -> DslError {
        DslError::Parse {
            offset: self.offset(),
            found: self.peek().map_or_else(|| "end of input".to_string(), |t| format!("`{}`", t.text)),
            expected: expected.to_vec(),
        }
    }

    fn expect(&mut self, kind: TokenKind, label: &'static str) -> Result<(), DslError> {
        match self.peek() {
            Some(t) if t.kind == kind => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.unexpected(&[label])),
        }
    }

    fn sum(&mut self) -> Result<Ast, DslError> {
        let mut lhs = self.product()?;
        while let Some(op) = self.peek_op(&["+", "-"]) {
            self.pos += 1;
            let rhs = self.product()?;
            let op = if op == "+" { BinOp::Add } else { BinOp::Sub };
            lhs = Ast::Binary(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn product(&mut self) -> Result<Ast, DslError> {
        let mut lhs = self.unary()?;
        while let Some(op) = self.peek_op(&["*", "/"]) {
            self.pos += 1;
            let rhs = self.unary()?;
            let op = if op == "*" { BinOp::Mul } else { BinOp::Div };
            lhs = Ast::Binary(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Ast, DslError> {
        if self.peek_op(&["-"]).is_some() {
            self.pos += 1;
            return Ok(Ast::Unary(UnaryOp::Neg, Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Ast, DslError> {
        let base = self.primary()?;
        if self.peek_op(&["^"]).is_some() {
            self.pos += 1;
            let exponent = self.unary()?;
            return Ok(Ast::Binary(BinOp::Pow, Box::new(base), Box::new(exponent)));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Ast, DslError> {
        let Some(tok) = self.peek() else {
            return Err(self.unexpected(OPERAND));
        };
        match tok.kind {
            TokenKind::Number => {
                let value: f64 = tok.text.parse().map_err(|_| self.unexpected(&["number"]))?;
                self.pos += 1;
                Ok(Ast::Literal(value))
            }
            TokenKind::Identifier => {
                self.pos += 1;
                if self.peek().map(|t| t.kind) != Some(TokenKind::LParen) {
                    return Ok(Ast::Var(tok.text.clone()));
                }
                let builtin =
                    Builtin::lookup(&tok.text).ok_or_else(|| DslError::UnknownFunction(tok.text.clone()))?;
                self.pos += 1;
                let args = self.list()?;
                builtin.arity_ok(args.len()).map_err(|expected| DslError::Arity {
                    name: tok.text.clone(),
                    expected,
                    got: args.len(),
                })?;
                Ok(Ast::Call(builtin, args))
            }
            TokenKind::LParen => {
                let open = self.pos;
                self.pos += 1;
                let mut items = self.list()?;
                if items.len() == 1 {
                    return Ok(items.pop().unwrap_or(Ast::Literal(0.0)));
                }
                if open != 0 || self.pos != self.tokens.len() {
                    return Err(DslError::Parse {
                        offset: tok.offset,
                        found: "tuple".to_string(),
                        expected: vec!["scalar expression (tuples are only allowed as the whole expression)"],
                    });
                }
                Ok(Ast::Tuple(items))
            }
            _ => Err(self.unexpected(OPERAND)),
        }
    }

    /// Comma separated expressions up to and including the closing paren.
    fn list(&mut self) -> Result<Vec<Ast>, DslError> {
        let mut items = vec![self.sum()?];
        while self.peek().map(|t| t.kind) == Some(TokenKind::Comma) {
            self.pos += 1;
            items.push(self.sum()?);
        }
        if self.peek().map(|t| t.kind) != Some(TokenKind::RParen) {
            return Err(self.unexpected(&[",", ")"]));
        }
        self.expect(TokenKind::RParen, ")")?;
        Ok(items)
    }
}
