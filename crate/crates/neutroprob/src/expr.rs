//! A tiny expression grammar for integrands given on the command line:
//! the variable `x`, numeric literals, `+ - * / ^`, unary minus, and
//! parentheses. `^` binds tightest and associates to the right.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Number(f64),
    Variable,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn parse(input: &str) -> Result<Expr> {
        let mut parser = Parser {
            chars: input.chars().collect(),
            pos: 0,
        };
        let expr = parser.expression()?;
        parser.skip_ws();
        if parser.pos != parser.chars.len() {
            return Err(Error::InvalidInput(format!(
                "unexpected input at position {} in expression {input:?}",
                parser.pos
            )));
        }
        Ok(expr)
    }

    pub fn eval(&self, x: f64) -> f64 {
        match self {
            Expr::Number(v) => *v,
            Expr::Variable => x,
            Expr::Neg(e) => -e.eval(x),
            Expr::Add(a, b) => a.eval(x) + b.eval(x),
            Expr::Sub(a, b) => a.eval(x) - b.eval(x),
            Expr::Mul(a, b) => a.eval(x) * b.eval(x),
            Expr::Div(a, b) => a.eval(x) / b.eval(x),
            Expr::Pow(a, b) => a.eval(x).powf(b.eval(x)),
        }
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expression(&mut self) -> Result<Expr> {
        let mut left = self.term()?;
        loop {
            if self.eat('+') {
                left = Expr::Add(Box::new(left), Box::new(self.term()?));
            } else if self.eat('-') {
                left = Expr::Sub(Box::new(left), Box::new(self.term()?));
            } else {
                return Ok(left);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut left = self.factor()?;
        loop {
            if self.eat('*') {
                left = Expr::Mul(Box::new(left), Box::new(self.factor()?));
            } else if self.eat('/') {
                left = Expr::Div(Box::new(left), Box::new(self.factor()?));
            } else {
                return Ok(left);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let base = self.atom()?;
        if self.eat('^') {
            // right associative
            return Ok(Expr::Pow(Box::new(base), Box::new(self.factor()?)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expression()?;
                if !self.eat(')') {
                    return Err(Error::InvalidInput("missing closing parenthesis".into()));
                }
                Ok(inner)
            }
            Some('x') => {
                self.pos += 1;
                Ok(Expr::Variable)
            }
            Some(c) if c.is_ascii_digit() || c == '.' => {
                let start = self.pos;
                while self
                    .peek()
                    .is_some_and(|c| c.is_ascii_digit() || c == '.')
                {
                    self.pos += 1;
                }
                let text: String = self.chars[start..self.pos].iter().collect();
                text.parse()
                    .map(Expr::Number)
                    .map_err(|_| Error::InvalidInput(format!("bad numeric literal {text:?}")))
            }
            other => Err(Error::InvalidInput(format!(
                "expected a number, x, or parenthesis, found {other:?}"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_evaluates() {
        let e = Expr::parse("x^2 + 3*x - 1").unwrap();
        assert_eq!(e.eval(2.0), 4.0 + 6.0 - 1.0);
        assert_eq!(Expr::parse("0.1").unwrap().eval(5.0), 0.1);
        assert_eq!(Expr::parse("(x + 1) * (x - 1)").unwrap().eval(3.0), 8.0);
        assert_eq!(Expr::parse("-x").unwrap().eval(2.5), -2.5);
        // right-associative power
        assert_eq!(Expr::parse("2^3^2").unwrap().eval(0.0), 512.0);
        assert_eq!(Expr::parse("x / 2").unwrap().eval(3.0), 1.5);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(Expr::parse("").is_err());
        assert!(Expr::parse("x +").is_err());
        assert!(Expr::parse("(x").is_err());
        assert!(Expr::parse("y").is_err());
        assert!(Expr::parse("1 2").is_err());
        assert!(Expr::parse("1..2").is_err());
    }
}
