//! Recursive-descent parser for polynomial text.
//!
//! ```text
//! poly   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' uint)?
//! atom   := int ('/' uint)? | var | '(' poly ')'
//! ```
//!
//! Whitespace is insignificant. Columns in errors are 1-based.

use num_bigint::BigInt;
use num_traits::Zero;

use super::polynomial::Polynomial;
use crate::error::{Error, Result};
use crate::Rational;

pub fn parse_polynomial(text: &str, variables: &[String]) -> Result<Polynomial> {
    let mut parser = Parser {
        chars: text.chars().collect(),
        pos: 0,
        variables,
    };
    let p = parser.poly()?;
    parser.skip_ws();
    if parser.pos < parser.chars.len() {
        return Err(parser.error(format!("unexpected `{}`", parser.chars[parser.pos])));
    }
    Ok(p)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    variables: &'a [String],
}

impl Parser<'_> {
    fn nvars(&self) -> usize {
        self.variables.len()
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            column: self.pos + 1,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn poly(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.nvars());
        let mut negate = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        loop {
            let t = self.term()?;
            acc = if negate { acc - t } else { acc + t };
            if self.eat('+') {
                negate = false;
            } else if self.eat('-') {
                negate = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.eat('^') {
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.error("expected a non-negative integer exponent"));
            }
            let e: u32 = digits.parse().map_err(|_| Error::Syntax {
                column: start + 1,
                message: format!("exponent `{digits}` is too large"),
            })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            None => Err(self.error("unexpected end of input")),
            Some('(') => {
                self.pos += 1;
                let p = self.poly()?;
                if !self.eat(')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(p)
            }
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits().parse().expect("digits parse as an integer");
                if self.eat('/') {
                    self.skip_ws();
                    let col = self.pos + 1;
                    let den = self.digits();
                    if den.is_empty() {
                        return Err(self.error("expected a denominator"));
                    }
                    let den: BigInt = den.parse().expect("digits parse as an integer");
                    if den.is_zero() {
                        return Err(Error::Syntax {
                            column: col,
                            message: "zero denominator".into(),
                        });
                    }
                    return Ok(Polynomial::constant(self.nvars(), Rational::new(num, den)));
                }
                Ok(Polynomial::constant(self.nvars(), Rational::from_integer(num)))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.pos < self.chars.len()
                    && (self.chars[self.pos].is_alphanumeric() || self.chars[self.pos] == '_')
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                match self.variables.iter().position(|v| *v == name) {
                    Some(i) => Ok(Polynomial::var(self.nvars(), i)),
                    None => Err(Error::UnknownVariable {
                        name,
                        column: start + 1,
                    }),
                }
            }
            Some(c) => Err(self.error(format!("unexpected `{c}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::default_names;

    #[test]
    fn parses_two_terms() {
        let p = parse_polynomial("x1*x4 + x3^2", &default_names(6)).unwrap();
        assert_eq!(p.num_terms(), 2);
    }

    #[test]
    fn parses_counterexample_equation() {
        let g1 = parse_polynomial("x1*x4 + x2*x5 + x3^2 - x4^5", &default_names(6)).unwrap();
        assert_eq!(g1.num_terms(), 4);
    }

    #[test]
    fn unknown_variable() {
        let err = parse_polynomial("x1 + y", &default_names(6)).unwrap_err();
        assert_eq!(
            err,
            Error::UnknownVariable {
                name: "y".into(),
                column: 6
            }
        );
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let names = default_names(2);
        assert!(matches!(parse_polynomial("x1 +", &names), Err(Error::Syntax { column: 5, .. })));
        assert!(matches!(parse_polynomial("x1^", &names), Err(Error::Syntax { column: 4, .. })));
        assert!(matches!(parse_polynomial("(x1", &names), Err(Error::Syntax { .. })));
        assert!(matches!(parse_polynomial("1/0*x1", &names), Err(Error::Syntax { column: 3, .. })));
        assert!(matches!(parse_polynomial("x1 x2", &names), Err(Error::Syntax { column: 4, .. })));
    }

    #[test]
    fn rationals_parentheses_and_signs() {
        let names = default_names(2);
        let a = parse_polynomial("-(x1 - x2)^2 + 3/2*x1*x2", &names).unwrap();
        let b = parse_polynomial("-x1^2 + 7/2*x1*x2 - x2^2", &names).unwrap();
        assert_eq!(a, b);
        assert!(parse_polynomial("0", &names).unwrap().is_zero());
    }

    #[test]
    fn custom_names() {
        let names: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        let p = parse_polynomial("x^2 + y^2 + z^2", &names).unwrap();
        assert_eq!(p.render(&names), "x^2 + y^2 + z^2");
    }
}
