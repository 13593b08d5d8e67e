//! Polynomial expressions over `Q(i)`: parsing and canonical rendering.
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! poly     = sum ;
//! sum      = term { ( "+" | "-" ) term } ;
//! term     = signed { [ "*" ] signed } ;         (* juxtaposition multiplies *)
//! signed   = ( "-" | "+" ) signed | power ;
//! power    = atom [ "^" exponent ] ;             (* right-associative *)
//! exponent = ( "-" | "+" ) exponent | power ;    (* must be a non-negative integer *)
//! atom     = integer [ "/" integer ] | "i" | variable | "(" sum ")" ;
//! integer  = digit { digit } ;
//! variable = letter ;                            (* one letter, never "i" *)
//! ```
//!
//! A rational literal `p/q` is a single atom, so `25/6 z^4` is `(25/6)·z^4`.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::arith::{BigRational, GR};
use crate::poly::Poly;

pub const DEFAULT_VARIABLE: char = 'z';
const MAX_EXPONENT: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty expression")]
    Empty,
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unexpected variable '{found}' at position {position} (expected '{expected}'): only one variable is allowed")]
    MultipleVariables {
        position: usize,
        found: char,
        expected: char,
    },
    #[error("invalid exponent at position {position}: {message}")]
    BadExponent { position: usize, message: String },
    #[error("'{0}' cannot be used as the variable")]
    ReservedVariable(char),
    #[error("expected a constant, found a polynomial of degree {degree}")]
    NotConstant { degree: usize },
}

impl ParseError {
    /// Character offset of the error, when it has one.
    pub fn position(&self) -> Option<usize> {
        match self {
            ParseError::Syntax { position, .. }
            | ParseError::MultipleVariables { position, .. }
            | ParseError::BadExponent { position, .. } => Some(*position),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Letter(char),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut tokens = Vec::new();
    let mut pos = 0;
    while pos < chars.len() {
        let c = chars[pos];
        let token = match c {
            c if c.is_whitespace() => {
                pos += 1;
                continue;
            }
            '0'..='9' => {
                let start = pos;
                while pos < chars.len() && chars[pos].is_ascii_digit() {
                    pos += 1;
                }
                let digits: String = chars[start..pos].iter().collect();
                tokens.push((start, Token::Int(digits.parse().expect("ascii digits"))));
                continue;
            }
            c if c.is_ascii_alphabetic() => Token::Letter(c),
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '/' => Token::Slash,
            '^' => Token::Caret,
            '(' => Token::LParen,
            ')' => Token::RParen,
            other => {
                return Err(ParseError::Syntax {
                    position: pos,
                    message: format!("unexpected character '{other}'"),
                })
            }
        };
        tokens.push((pos, token));
        pos += 1;
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    index: usize,
    end: usize,
    variable: char,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.index).map(|(_, t)| t)
    }

    fn position(&self) -> usize {
        self.tokens.get(self.index).map_or(self.end, |(p, _)| *p)
    }

    fn syntax<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            position: self.position(),
            message: message.into(),
        })
    }

    fn sum(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.index += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Token::Minus) => {
                    self.index += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.signed()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.index += 1;
                    acc = &acc * &self.signed()?;
                }
                Some(Token::Int(_) | Token::Letter(_) | Token::LParen) => {
                    acc = &acc * &self.signed()?;
                }
                _ => return Ok(acc),
            }
            self.check_degree(&acc)?;
        }
    }

    fn signed(&mut self) -> Result<Poly, ParseError> {
        match self.peek() {
            Some(Token::Minus) => {
                self.index += 1;
                Ok(-self.signed()?)
            }
            Some(Token::Plus) => {
                self.index += 1;
                self.signed()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.index += 1;
        let exp_pos = self.position();
        let exponent = self.exponent()?;
        let exp = constant_natural(&exponent).map_err(|message| ParseError::BadExponent {
            position: exp_pos,
            message,
        })?;
        if exp > MAX_EXPONENT {
            return Err(ParseError::BadExponent {
                position: exp_pos,
                message: format!("exponent {exp} exceeds the limit {MAX_EXPONENT}"),
            });
        }
        let result = base.pow(exp as usize);
        self.check_degree(&result)?;
        Ok(result)
    }

    fn exponent(&mut self) -> Result<Poly, ParseError> {
        match self.peek() {
            Some(Token::Minus) => {
                self.index += 1;
                Ok(-self.exponent()?)
            }
            Some(Token::Plus) => {
                self.index += 1;
                self.exponent()
            }
            _ => self.power(),
        }
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        let position = self.position();
        let Some((_, token)) = self.tokens.get(self.index).cloned() else {
            return self.syntax("unexpected end of input");
        };
        self.index += 1;
        match token {
            Token::Int(n) => {
                if self.peek() == Some(&Token::Slash) {
                    self.index += 1;
                    let den_pos = self.position();
                    match self.tokens.get(self.index).cloned() {
                        Some((_, Token::Int(d))) => {
                            self.index += 1;
                            if d.is_zero() {
                                return Err(ParseError::Syntax {
                                    position: den_pos,
                                    message: "zero denominator".into(),
                                });
                            }
                            Ok(Poly::constant(GR::from_rational(BigRational::new(n, d))))
                        }
                        _ => Err(ParseError::Syntax {
                            position: den_pos,
                            message: "'/' must be followed by an integer denominator".into(),
                        }),
                    }
                } else {
                    Ok(Poly::constant(GR::from_bigint(n)))
                }
            }
            Token::Letter('i') => Ok(Poly::constant(GR::i())),
            Token::Letter(c) if c == self.variable => Ok(Poly::x()),
            Token::Letter(c) => Err(ParseError::MultipleVariables {
                position,
                found: c,
                expected: self.variable,
            }),
            Token::LParen => {
                let inner = self.sum()?;
                if self.peek() != Some(&Token::RParen) {
                    return self.syntax("expected ')'");
                }
                self.index += 1;
                Ok(inner)
            }
            Token::Slash => Err(ParseError::Syntax {
                position,
                message: "'/' is only allowed inside a rational literal such as 3/4".into(),
            }),
            other => Err(ParseError::Syntax {
                position,
                message: format!("unexpected {}", describe(&other)),
            }),
        }
    }

    fn check_degree(&self, p: &Poly) -> Result<(), ParseError> {
        if p.degree().is_some_and(|d| d as u64 > MAX_EXPONENT) {
            return Err(ParseError::BadExponent {
                position: self.position(),
                message: format!("degree exceeds the limit {MAX_EXPONENT}"),
            });
        }
        Ok(())
    }
}

fn describe(token: &Token) -> &'static str {
    match token {
        Token::Int(_) => "number",
        Token::Letter(_) => "letter",
        Token::Plus => "'+'",
        Token::Minus => "'-'",
        Token::Star => "'*'",
        Token::Slash => "'/'",
        Token::Caret => "'^'",
        Token::LParen => "'('",
        Token::RParen => "')'",
    }
}

fn constant_natural(p: &Poly) -> Result<u64, String> {
    if !p.is_constant() {
        return Err("exponent must not contain the variable".into());
    }
    let c = p.coeff(0);
    if !c.is_real() {
        return Err(format!("exponent {c} is not real"));
    }
    let r = c.re();
    if !r.is_integer() {
        return Err(format!("exponent {r} is not an integer"));
    }
    if r.is_negative() {
        return Err(format!("negative exponent {r}"));
    }
    r.to_integer()
        .to_u64()
        .ok_or_else(|| format!("exponent {r} is too large"))
}

/// Parses a polynomial in the default variable `z`.
pub fn parse_poly(src: &str) -> Result<Poly, ParseError> {
    parse_poly_in(src, DEFAULT_VARIABLE)
}

pub fn parse_poly_in(src: &str, variable: char) -> Result<Poly, ParseError> {
    if variable == 'i' || !variable.is_ascii_alphabetic() {
        return Err(ParseError::ReservedVariable(variable));
    }
    let tokens = tokenize(src)?;
    if tokens.is_empty() {
        return Err(ParseError::Empty);
    }
    let mut parser = Parser {
        tokens,
        index: 0,
        end: src.chars().count(),
        variable,
    };
    let poly = parser.sum()?;
    if parser.index < parser.tokens.len() {
        let token = parser.tokens[parser.index].1.clone();
        return parser.syntax(format!("unexpected {}", describe(&token)));
    }
    Ok(poly)
}

/// Parses a constant expression such as `3/4`, `1/2-3/4i` or `(1+i)^2`.
pub fn parse_constant(src: &str) -> Result<GR, ParseError> {
    let p = parse_poly(src)?;
    match p.degree() {
        None => Ok(GR::zero()),
        Some(0) => Ok(p.coeff(0)),
        Some(degree) => Err(ParseError::NotConstant { degree }),
    }
}

/// Canonical descending-power text in `z`; see [`render_poly_in`].
pub fn render_poly(f: &Poly) -> String {
    render_poly_in(f, DEFAULT_VARIABLE)
}

/// Renders `f` in descending powers, e.g. `z^2 - 1`, `1/60 z^2`, `(3+2i) z^2 - 1`.
/// Output always parses back to the same polynomial.
pub fn render_poly_in(f: &Poly, variable: char) -> String {
    let mut out = String::new();
    for (power, c) in f.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let (negative, magnitude) = split_sign(c);
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let monomial = match power {
            0 => String::new(),
            1 => variable.to_string(),
            p => format!("{variable}^{p}"),
        };
        if monomial.is_empty() {
            out.push_str(&magnitude);
        } else if magnitude == "1" {
            out.push_str(&monomial);
        } else {
            out.push_str(&magnitude);
            out.push(' ');
            out.push_str(&monomial);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Sign to print before a term and the coefficient text after it.
fn split_sign(c: &GR) -> (bool, String) {
    if c.is_real() {
        return (c.re().is_negative(), c.re().abs().to_string());
    }
    if c.re().is_zero() {
        let im = c.im().abs();
        let text = if im.is_one() {
            "i".to_string()
        } else {
            format!("{im}i")
        };
        return (c.im().is_negative(), text);
    }
    (false, format!("({c})"))
}
