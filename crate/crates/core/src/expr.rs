//! Expressions over the symbolic model.
//!
//! ```text
//! expr    := term ('+' term)*
//! term    := postfix ('*' postfix)*
//! postfix := atom '\''*
//! atom    := element | '(' expr ')'
//! ```
//!
//! `+` is `⊕`, `*` is `∘` and `'` the orthosupplement. Both binary operators
//! associate to the left and `*` binds tighter. Whitespace is ignored
//! everywhere, including inside `c[…]`/`d[…]` subscripts. An undefined
//! subterm makes the whole expression undefined.

use std::fmt;

use crate::e0::{complement, oplus, sprod, E0Element, ParseElementError};
use crate::index::Index;
use crate::partial::{Defined, PartialResult, Undefined};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr<I> {
    Elem(E0Element<I>),
    Oplus(Box<Expr<I>>, Box<Expr<I>>),
    Sprod(Box<Expr<I>>, Box<Expr<I>>),
    Complement(Box<Expr<I>>),
}

/// A parse failure at a 1-based character column.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("parse error at column {column}: {message}")]
pub struct ParseExprError {
    pub column: usize,
    pub message: String,
}

impl<I: Index> Expr<I> {
    pub fn eval(&self) -> PartialResult<E0Element<I>> {
        match self {
            Expr::Elem(e) => Defined(e.clone()),
            Expr::Oplus(x, y) => match (x.eval(), y.eval()) {
                (Defined(x), Defined(y)) => oplus(&x, &y),
                _ => Undefined,
            },
            Expr::Sprod(x, y) => match (x.eval(), y.eval()) {
                (Defined(x), Defined(y)) => Defined(sprod(&x, &y)),
                _ => Undefined,
            },
            Expr::Complement(x) => x.eval().map(|x| complement(&x)),
        }
    }
}

impl<I: fmt::Display> fmt::Display for Expr<I> {
    /// Fully parenthesised form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Elem(e) => write!(f, "{e}"),
            Expr::Oplus(x, y) => write!(f, "({x} + {y})"),
            Expr::Sprod(x, y) => write!(f, "({x} * {y})"),
            Expr::Complement(x) => write!(f, "{x}'"),
        }
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn error<T>(&self, at: usize, message: impl Into<String>) -> Result<T, ParseExprError> {
        Err(ParseExprError {
            column: at + 1,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expr<I: Index>(&mut self) -> Result<Expr<I>, ParseExprError> {
        let mut lhs = self.term()?;
        while self.peek() == Some('+') {
            self.pos += 1;
            let rhs = self.term()?;
            lhs = Expr::Oplus(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn term<I: Index>(&mut self) -> Result<Expr<I>, ParseExprError> {
        let mut lhs = self.postfix()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            let rhs = self.postfix()?;
            lhs = Expr::Sprod(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn postfix<I: Index>(&mut self) -> Result<Expr<I>, ParseExprError> {
        let mut e = self.atom()?;
        while self.peek() == Some('\'') {
            self.pos += 1;
            e = Expr::Complement(Box::new(e));
        }
        Ok(e)
    }

    fn atom<I: Index>(&mut self) -> Result<Expr<I>, ParseExprError> {
        match self.peek() {
            None => self.error(self.pos, "unexpected end of input"),
            Some('(') => {
                let open = self.pos;
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return self.error(open, "unclosed parenthesis");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_alphanumeric() => self.element(),
            Some(c) => self.error(self.pos, format!("unexpected '{c}'")),
        }
    }

    /// An alphanumeric run, plus a bracketed subscript list for `c`/`d`.
    fn element<I: Index>(&mut self) -> Result<Expr<I>, ParseExprError> {
        let start = self.pos;
        let mut text = String::new();
        while let Some(&c) = self.chars.get(self.pos) {
            if !c.is_ascii_alphanumeric() {
                break;
            }
            text.push(c);
            self.pos += 1;
        }
        if (text == "c" || text == "d") && self.peek() == Some('[') {
            loop {
                match self.chars.get(self.pos) {
                    None => return self.error(start, "unclosed '['"),
                    Some(&c) => {
                        self.pos += 1;
                        if !c.is_whitespace() {
                            text.push(c);
                        }
                        if c == ']' {
                            break;
                        }
                    }
                }
            }
        }
        match text.parse::<E0Element<I>>() {
            Ok(e) => Ok(Expr::Elem(e)),
            Err(ParseElementError { reason, .. }) => {
                self.error(start, format!("invalid element '{text}': {reason}"))
            }
        }
    }
}

pub fn parse_expr<I: Index>(input: &str) -> Result<Expr<I>, ParseExprError> {
    let mut p = Parser {
        chars: input.chars().collect(),
        pos: 0,
    };
    let e = p.expr()?;
    if let Some(c) = p.peek() {
        return p.error(p.pos, format!("unexpected '{c}'"));
    }
    Ok(e)
}

/// Parses and evaluates `input`, rendering the result or `undefined`.
pub fn eval_str<I: Index>(input: &str) -> Result<String, ParseExprError> {
    Ok(match parse_expr::<I>(input)?.eval() {
        Defined(e) => e.to_string(),
        Undefined => "undefined".to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(s: &str) -> String {
        eval_str::<i64>(s).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(ev("c[1,0,0] * c[0,1,0]"), "a1");
        assert_eq!(ev("a2 + b2"), "1");
        assert_eq!(ev("b1 + b1"), "undefined");
        assert_eq!(ev("c[1,0,0] + c[0,1,0]"), "c[1,1,0]");
    }

    #[test]
    fn precedence_and_postfix() {
        assert_eq!(ev("a1 + a1 * 1"), ev("a1 + (a1 * 1)"));
        assert_eq!(ev("a3'"), "b3");
        assert_eq!(ev("a3''"), "a3");
        assert_eq!(ev("(a1 + a2)'"), "b3");
        assert_eq!(ev(" c [ 1 , 0 , -2 ] ' "), "d[1,0,-2]");
        assert_eq!(ev("(b1 + b1)'"), "undefined");
        assert_eq!(ev("(b1 + b1) * 0"), "undefined");
    }

    #[test]
    fn errors_carry_columns() {
        let err = |s: &str| parse_expr::<i64>(s).unwrap_err();
        assert_eq!(err("a1 + ").column, 6);
        assert_eq!(err("a1 + x2").column, 6);
        assert_eq!(err("(a1 + a2").column, 1);
        assert_eq!(err("a1 a2").column, 4);
        assert_eq!(err("a0").column, 1);
        assert_eq!(err("c[1,0").column, 1);
        assert_eq!(err("a1 + # ").column, 6);
        assert!(err("a1 + x2")
            .to_string()
            .starts_with("parse error at column 6"));
    }
}
