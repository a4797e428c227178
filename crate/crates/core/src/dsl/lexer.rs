use super::DslError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Number,
    Identifier,
    Operator,
    LParen,
    RParen,
    Comma,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    pub kind: TokenKind,
    pub text: String,
    /// Byte offset of the first character in the source text.
    pub offset: usize,
}

/// Splits `text` into tokens using longest match. Whitespace separates
/// tokens and is otherwise ignored.
pub fn tokenize(text: &str) -> Result<Vec<Token>, DslError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos];
        let start = pos;
        let kind = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                pos += 1;
                continue;
            }
            b'0'..=b'9' => {
                pos = scan_number(bytes, pos);
                TokenKind::Number
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                while pos < bytes.len() && bytes[pos].is_ascii_alphanumeric() {
                    pos += 1;
                }
                TokenKind::Identifier
            }
            b'+' | b'-' | b'*' | b'/' | b'^' => {
                pos += 1;
                TokenKind::Operator
            }
            b'(' => {
                pos += 1;
                TokenKind::LParen
            }
            b')' => {
                pos += 1;
                TokenKind::RParen
            }
            b',' => {
                pos += 1;
                TokenKind::Comma
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('\u{fffd}');
                return Err(DslError::Lex { ch, offset: start });
            }
        };
        tokens.push(Token {
            kind,
            text: text[start..pos].to_string(),
            offset: start,
        });
    }
    Ok(tokens)
}

fn scan_number(bytes: &[u8], mut pos: usize) -> usize {
    let digits = |bytes: &[u8], mut p: usize| {
        while p < bytes.len() && bytes[p].is_ascii_digit() {
            p += 1;
        }
        p
    };
    pos = digits(bytes, pos);
    if pos < bytes.len() && bytes[pos] == b'.' {
        pos = digits(bytes, pos + 1);
    }
    // exponent only when digits follow, otherwise `e` starts an identifier
    if pos < bytes.len() && (bytes[pos] == b'e' || bytes[pos] == b'E') {
        let mut p = pos + 1;
        if p < bytes.len() && (bytes[p] == b'+' || bytes[p] == b'-') {
            p += 1;
        }
        if p < bytes.len() && bytes[p].is_ascii_digit() {
            pos = digits(bytes, p);
        }
    }
    pos
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(text: &str) -> Vec<TokenKind> {
        tokenize(text).unwrap().into_iter().map(|t| t.kind).collect()
    }

    #[test]
    fn sqrt_tuple_has_eleven_tokens() {
        let toks = tokenize("(sqrt(n), sqrt(n))").unwrap();
        assert_eq!(toks.len(), 11);
        assert_eq!(toks.last().unwrap().kind, TokenKind::RParen);
        let texts: Vec<&str> = toks.iter().map(|t| t.text.as_str()).collect();
        assert_eq!(texts, ["(", "sqrt", "(", "n", ")", ",", "sqrt", "(", "n", ")", ")"]);
    }

    #[test]
    fn empty_input() {
        assert!(tokenize("").unwrap().is_empty());
        assert!(tokenize("   ").unwrap().is_empty());
    }

    #[test]
    fn identifier_with_digits_then_power() {
        let toks = tokenize("x1^2").unwrap();
        assert_eq!(kinds("x1^2"), [TokenKind::Identifier, TokenKind::Operator, TokenKind::Number]);
        assert_eq!(toks[0].text, "x1");
        assert_eq!(toks[2].text, "2");
    }

    #[test]
    fn numbers_with_fraction_and_exponent() {
        let toks = tokenize("1.5e-3 2. 7E+2 3e").unwrap();
        let texts: Vec<&str> = toks.iter().map(|t| t.text.as_str()).collect();
        assert_eq!(texts, ["1.5e-3", "2.", "7E+2", "3", "e"]);
    }

    #[test]
    fn offsets_strictly_increase() {
        let toks = tokenize(" (x1 *  2.5, max(n,1)) ").unwrap();
        assert!(toks.windows(2).all(|w| w[0].offset < w[1].offset));
        assert_eq!(toks[0].offset, 1);
    }

    #[test]
    fn unknown_character_reports_offset() {
        assert_eq!(tokenize("n + $"), Err(DslError::Lex { ch: '$', offset: 4 }));
        assert_eq!(tokenize("x_1"), Err(DslError::Lex { ch: '_', offset: 1 }));
        assert!(matches!(tokenize("√n"), Err(DslError::Lex { ch: '√', offset: 0 })));
    }
}
