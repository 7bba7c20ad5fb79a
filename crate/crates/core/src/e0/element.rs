use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::index::Index;

/// An element of the countable symbolic algebra.
///
/// The variants are public for pattern matching; use the checked
/// constructors ([`E0Element::a`], [`E0Element::c`], ...) or
/// [`E0Element::validate`] when building elements from untrusted input.
/// Subscript ranges:
///
/// * `A(n)`, `B(n)`: `n ≥ 1`;
/// * `C(i, k, m)`, `D(i, k, m)`: `i, k ≥ 0`, not both zero, `m` any integer.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum E0Element<I> {
    Zero,
    One,
    A(I),
    B(I),
    C(I, I, I),
    D(I, I, I),
}

/// Element kinds, in the order used for argument normalization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Zero,
    One,
    A,
    B,
    C,
    D,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ElementError {
    #[error("subscript of {0} must be at least 1")]
    NonPositive(char),
    #[error("subscripts i, k of {0} must be nonnegative")]
    Negative(char),
    #[error("subscripts i, k of {0} must not both be zero")]
    BothZero(char),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("invalid element {text:?}: {reason}")]
pub struct ParseElementError {
    pub text: String,
    pub reason: String,
}

impl<I: Index> E0Element<I> {
    pub fn a(n: I) -> Result<Self, ElementError> {
        Self::A(n).validate()
    }

    pub fn b(n: I) -> Result<Self, ElementError> {
        Self::B(n).validate()
    }

    pub fn c(i: I, k: I, m: I) -> Result<Self, ElementError> {
        Self::C(i, k, m).validate()
    }

    pub fn d(i: I, k: I, m: I) -> Result<Self, ElementError> {
        Self::D(i, k, m).validate()
    }

    pub fn kind(&self) -> Kind {
        match self {
            Self::Zero => Kind::Zero,
            Self::One => Kind::One,
            Self::A(_) => Kind::A,
            Self::B(_) => Kind::B,
            Self::C(..) => Kind::C,
            Self::D(..) => Kind::D,
        }
    }

    pub fn is_valid(&self) -> bool {
        self.check().is_ok()
    }

    pub fn validate(self) -> Result<Self, ElementError> {
        self.check().map(|()| self)
    }

    fn check(&self) -> Result<(), ElementError> {
        match self {
            Self::Zero | Self::One => Ok(()),
            Self::A(n) | Self::B(n) => {
                if *n >= I::one() {
                    Ok(())
                } else {
                    Err(ElementError::NonPositive(self.letter()))
                }
            }
            Self::C(i, k, _) | Self::D(i, k, _) => {
                if i.is_negative() || k.is_negative() {
                    Err(ElementError::Negative(self.letter()))
                } else if i.is_zero() && k.is_zero() {
                    Err(ElementError::BothZero(self.letter()))
                } else {
                    Ok(())
                }
            }
        }
    }

    fn letter(&self) -> char {
        match self {
            Self::Zero => '0',
            Self::One => '1',
            Self::A(_) => 'a',
            Self::B(_) => 'b',
            Self::C(..) => 'c',
            Self::D(..) => 'd',
        }
    }

    /// Sum of the absolute values of all subscripts.
    pub fn magnitude(&self) -> I {
        match self {
            Self::Zero | Self::One => I::zero(),
            Self::A(n) | Self::B(n) => n.abs(),
            Self::C(i, k, m) | Self::D(i, k, m) => i.abs() + k.abs() + m.abs(),
        }
    }

    /// Converts between subscript types; `None` if a subscript does not fit.
    pub fn convert<J: Index>(&self) -> Option<E0Element<J>> {
        let f = |x: &I| -> Option<J> { J::from_i128(x.to_i128()?) };
        Some(match self {
            Self::Zero => E0Element::Zero,
            Self::One => E0Element::One,
            Self::A(n) => E0Element::A(f(n)?),
            Self::B(n) => E0Element::B(f(n)?),
            Self::C(i, k, m) => E0Element::C(f(i)?, f(k)?, f(m)?),
            Self::D(i, k, m) => E0Element::D(f(i)?, f(k)?, f(m)?),
        })
    }
}

impl<I: fmt::Display> fmt::Display for E0Element<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Zero => f.write_str("0"),
            Self::One => f.write_str("1"),
            Self::A(n) => write!(f, "a{n}"),
            Self::B(n) => write!(f, "b{n}"),
            Self::C(i, k, m) => write!(f, "c[{i},{k},{m}]"),
            Self::D(i, k, m) => write!(f, "d[{i},{k},{m}]"),
        }
    }
}

fn parse_uint<I: Index>(s: &str) -> Option<I> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

fn parse_int<I: Index>(s: &str) -> Option<I> {
    match s.strip_prefix('-') {
        Some(rest) => parse_uint::<I>(rest).map(|v| -v),
        None => parse_uint(s),
    }
}

impl<I: Index> FromStr for E0Element<I> {
    type Err = ParseElementError;

    /// Accepts exactly `0`, `1`, `a<uint>`, `b<uint>`,
    /// `c[<uint>,<uint>,<int>]` and `d[<uint>,<uint>,<int>]`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let fail = |reason: &str| ParseElementError {
            text: s.to_string(),
            reason: reason.to_string(),
        };
        let elem = match s {
            "0" => Self::Zero,
            "1" => Self::One,
            _ => {
                let mut chars = s.chars();
                let head = chars.next().ok_or_else(|| fail("empty"))?;
                let rest = chars.as_str();
                match head {
                    'a' | 'b' => {
                        let n =
                            parse_uint(rest).ok_or_else(|| fail("expected unsigned subscript"))?;
                        if head == 'a' {
                            Self::A(n)
                        } else {
                            Self::B(n)
                        }
                    }
                    'c' | 'd' => {
                        let inner = rest
                            .strip_prefix('[')
                            .and_then(|r| r.strip_suffix(']'))
                            .ok_or_else(|| fail("expected [i,k,m]"))?;
                        let parts: Vec<&str> = inner.split(',').collect();
                        let [i, k, m] = parts.as_slice() else {
                            return Err(fail("expected three subscripts"));
                        };
                        let i = parse_uint(i).ok_or_else(|| fail("bad subscript i"))?;
                        let k = parse_uint(k).ok_or_else(|| fail("bad subscript k"))?;
                        let m = parse_int(m).ok_or_else(|| fail("bad subscript m"))?;
                        if head == 'c' {
                            Self::C(i, k, m)
                        } else {
                            Self::D(i, k, m)
                        }
                    }
                    _ => return Err(fail("unknown element")),
                }
            }
        };
        elem.validate().map_err(|e| fail(&e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::E0;

    #[test]
    fn constructors_reject_bad_subscripts() {
        assert_eq!(E0::a(0), Err(ElementError::NonPositive('a')));
        assert_eq!(E0::b(-3), Err(ElementError::NonPositive('b')));
        assert_eq!(E0::c(0, 0, 4), Err(ElementError::BothZero('c')));
        assert_eq!(E0::d(-1, 2, 0), Err(ElementError::Negative('d')));
        assert!(E0::c(0, 1, -7).is_ok());
        assert!(E0::d(2, 0, 0).is_ok());
    }

    #[test]
    fn render_and_parse() {
        let cases = ["0", "1", "a3", "b2", "c[1,0,0]", "d[2,3,-1]"];
        for text in cases {
            let e: E0 = text.parse().unwrap();
            assert_eq!(e.to_string(), text);
        }
        assert_eq!("c[1,0,0]".parse::<E0>().unwrap(), E0::C(1, 0, 0));
    }

    #[test]
    fn parser_is_strict() {
        for bad in [
            "",
            "2",
            "a",
            "a0",
            "a-1",
            "a+1",
            "e1",
            "c[1,0]",
            "c[1,0,0,0]",
            "c(1,0,0)",
            "c[0,0,1]",
            "c[-1,1,0]",
            "c[1, 0, 0]",
            "d[1,0,+2]",
            "c[1,0,0]x",
            " a1",
        ] {
            assert!(bad.parse::<E0>().is_err(), "{bad:?} should not parse");
        }
    }
}
