//! Parser for the expression grammar shared by the CLI and all file formats:
//! identifiers, integer literals, `+ - * / ^` with integer exponents, and
//! parentheses. Rational literals are spelled `p/q`.

use std::fmt;

use crate::mpoly::Var;
use crate::ratfunc::RatFunc;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    pub message: String,
    pub position: usize,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, PartialEq, Debug)]
enum Tok {
    Ident(String),
    Int(i64),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(input: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut toks = Vec::new();
    let bytes = input.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                toks.push((Tok::Plus, i));
                i += 1;
            }
            '-' => {
                toks.push((Tok::Minus, i));
                i += 1;
            }
            '*' => {
                toks.push((Tok::Star, i));
                i += 1;
            }
            '/' => {
                toks.push((Tok::Slash, i));
                i += 1;
            }
            '^' => {
                toks.push((Tok::Caret, i));
                i += 1;
            }
            '(' => {
                toks.push((Tok::LParen, i));
                i += 1;
            }
            ')' => {
                toks.push((Tok::RParen, i));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let text = &input[start..i];
                let n: i64 = text.parse().map_err(|_| ParseError {
                    message: format!("integer literal too large: {text}"),
                    position: start,
                })?;
                toks.push((Tok::Int(n), start));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push((Tok::Ident(input[start..i].to_string()), start));
            }
            _ => {
                return Err(ParseError {
                    message: format!("unexpected character '{c}'"),
                    position: i,
                })
            }
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: &'a [(Tok, usize)],
    pos: usize,
    end: usize,
    normalize: Option<&'a dyn Fn(&str) -> Result<String, String>>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(_, p)| *p)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            message: message.into(),
            position: self.here(),
        }
    }

    // expr := term (('+'|'-') term)*
    fn expr(&mut self) -> Result<RatFunc, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = &acc + &rhs;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = &acc - &rhs;
                }
                _ => return Ok(acc),
            }
        }
    }

    // term := unary (('*'|'/') unary)*
    fn term(&mut self) -> Result<RatFunc, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    let rhs = self.unary()?;
                    acc = &acc * &rhs;
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let rhs = self.unary()?;
                    if rhs.is_zero() {
                        return Err(self.err("division by zero"));
                    }
                    acc = &acc / &rhs;
                }
                _ => return Ok(acc),
            }
        }
    }

    // unary := '-' unary | power
    fn unary(&mut self) -> Result<RatFunc, ParseError> {
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.bump();
            let inner = self.unary()?;
            return Ok(-&inner);
        }
        self.power()
    }

    // power := atom ('^' exponent)?
    fn power(&mut self) -> Result<RatFunc, ParseError> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.bump();
            let k = self.exponent()?;
            if k < 0 && base.is_zero() {
                return Err(self.err("zero raised to a negative power"));
            }
            return Ok(base.pow(k).expect("checked zero base"));
        }
        Ok(base)
    }

    // exponent := '-'? INT | '(' '-'? INT ')'
    fn exponent(&mut self) -> Result<i64, ParseError> {
        let parens = matches!(self.peek(), Some(Tok::LParen));
        if parens {
            self.bump();
        }
        let neg = matches!(self.peek(), Some(Tok::Minus));
        if neg {
            self.bump();
        }
        let n = match self.bump() {
            Some(Tok::Int(n)) => n,
            _ => return Err(self.err("expected integer exponent")),
        };
        if parens {
            match self.bump() {
                Some(Tok::RParen) => {}
                _ => return Err(self.err("expected ')' after exponent")),
            }
        }
        Ok(if neg { -n } else { n })
    }

    fn atom(&mut self) -> Result<RatFunc, ParseError> {
        let pos = self.here();
        match self.bump() {
            Some(Tok::Int(n)) => Ok(RatFunc::int(n)),
            Some(Tok::Ident(name)) => {
                let canon = match self.normalize {
                    Some(f) => f(&name).map_err(|message| ParseError {
                        message,
                        position: pos,
                    })?,
                    None => name,
                };
                Ok(RatFunc::var(Var::new(&canon)))
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(self.err("expected ')'")),
                }
            }
            other => Err(ParseError {
                message: format!("unexpected token {other:?}"),
                position: pos,
            }),
        }
    }
}

/// Parses an expression over raw variable names.
pub fn parse_expr(input: &str) -> Result<RatFunc, ParseError> {
    parse_expr_with(input, None)
}

/// Parses an expression, passing each identifier through `normalize`
/// (used by the jet lexicon to canonicalize variable aliases).
pub fn parse_expr_with(
    input: &str,
    normalize: Option<&dyn Fn(&str) -> Result<String, String>>,
) -> Result<RatFunc, ParseError> {
    let toks = lex(input)?;
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        end: input.len(),
        normalize,
    };
    let out = p.expr()?;
    if p.pos != toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals_and_precedence() {
        assert_eq!(parse_expr("2 + 3*4").unwrap(), RatFunc::int(14));
        assert_eq!(parse_expr("1/2 + 1/2").unwrap(), RatFunc::one());
        assert_eq!(parse_expr("-2^2").unwrap(), RatFunc::int(-4));
        assert_eq!(parse_expr("(1 - 3)^2").unwrap(), RatFunc::int(4));
        assert_eq!(
            parse_expr("x1^-1").unwrap(),
            parse_expr("1/x1").unwrap()
        );
        assert_eq!(
            parse_expr("x1^(-2)").unwrap(),
            parse_expr("1/x1^2").unwrap()
        );
    }

    #[test]
    fn canonical_string_roundtrip() {
        let f = parse_expr("y1*y2_1 - y2*y1_1").unwrap();
        assert_eq!(f.to_string(), "(y1*y2_1 - y2*y1_1)");
        let g = parse_expr(&f.to_string()).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_expr("x1 +").is_err());
        assert!(parse_expr("&").is_err());
        assert!(parse_expr("x1 x2").is_err());
        assert!(parse_expr("1/0").is_err());
    }
}
