//! Text formats accepted on the command line: series literals, rational
//! functions over `x`, Riordan pairs, and sequence specifications.

use crate::btransform::transform_matrix;
use crate::error::{Error, Result};
use crate::rational::{parse_rational, BigInt, Rational};
use crate::riordan::Riordan;
use crate::seq::Seq;
use crate::series::Series;

/// Parses either a comma-separated list of rationals (`1,3/2,0,-7`) or a
/// rational function in `x` with integer coefficients (`x/(1-x-x^2)`).
pub fn parse_series(spec: &str, order: usize) -> Result<Series> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Err(Error::Parse("empty series specification".into()));
    }
    if spec.contains(['x', '(', ')', '^', '*']) {
        parse_rational_fn(spec, order)
    } else {
        let coeffs = spec
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()?;
        Ok(Series::from_coeffs(coeffs))
    }
}

/// Parses a Riordan pair written as `g=<rational function>; f=<rational function>`.
pub fn parse_riordan_pair(spec: &str, order: usize) -> Result<Riordan> {
    let mut g = None;
    let mut f = None;
    for part in spec.split(';') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected `g=...` or `f=...`, got `{part}`")))?;
        let series = parse_rational_fn(value, order)?;
        match key.trim() {
            "g" => g = Some(series),
            "f" => f = Some(series),
            other => return Err(Error::Parse(format!("unknown component `{other}`"))),
        }
    }
    match (g, f) {
        (Some(g), Some(f)) => Riordan::new(g, f),
        _ => Err(Error::Parse(
            "a Riordan pair needs both `g=...` and `f=...`".into(),
        )),
    }
}

/// A sequence specification: `fib | jac | catalan | genr:<r> | list:<csv> | gf:<rational function>`.
#[derive(Clone, Debug, PartialEq)]
pub enum SeqSpec {
    Fibonacci,
    Jacobsthal,
    Catalan,
    GenR(i64),
    List(Vec<Rational>),
    Gf(String),
}

impl SeqSpec {
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "fib" => return Ok(SeqSpec::Fibonacci),
            "jac" => return Ok(SeqSpec::Jacobsthal),
            "catalan" => return Ok(SeqSpec::Catalan),
            _ => {}
        }
        if let Some(r) = s.strip_prefix("genr:") {
            let r = r
                .trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("invalid genr parameter `{r}`")))?;
            return Ok(SeqSpec::GenR(r));
        }
        if let Some(list) = s.strip_prefix("list:") {
            let terms = list
                .split(',')
                .map(parse_rational)
                .collect::<Result<Vec<_>>>()?;
            return Ok(SeqSpec::List(terms));
        }
        if let Some(gf) = s.strip_prefix("gf:") {
            return Ok(SeqSpec::Gf(gf.to_string()));
        }
        Err(Error::Parse(format!(
            "unknown sequence `{s}`: expected fib, jac, catalan, genr:<r>, list:<csv> or gf:<expr>"
        )))
    }

    /// Produces at least `len` terms; generating functions are expanded at
    /// the given truncation order.
    pub fn realize(&self, len: usize, order: usize) -> Result<Seq> {
        let seq = match self {
            SeqSpec::Fibonacci => Seq::fibonacci(len),
            SeqSpec::Jacobsthal => Seq::jacobsthal(len),
            SeqSpec::Catalan => Seq::catalan(len),
            SeqSpec::GenR(r) => Seq::gen_r(len, *r),
            SeqSpec::List(terms) => Seq::from_terms(terms.clone()),
            SeqSpec::Gf(expr) => Seq::from_gf(&parse_series(expr, order)?),
        };
        if seq.len() < len {
            return Err(Error::InsufficientTerms {
                needed: len,
                have: seq.len(),
            });
        }
        Ok(seq)
    }
}

/// Resolves `--seq <spec>` / `--seq-from btransform:<spec>` into a sequence
/// with at least `len` terms.
pub fn resolve_sequence(
    seq: Option<&str>,
    seq_from: Option<&str>,
    len: usize,
    order: usize,
) -> Result<Seq> {
    match (seq, seq_from) {
        (Some(spec), None) => SeqSpec::parse(spec)?.realize(len, order),
        (None, Some(composed)) => {
            let inner = composed.trim().strip_prefix("btransform:").ok_or_else(|| {
                Error::Parse(format!(
                    "unknown pipeline `{composed}`: expected btransform:<seq>"
                ))
            })?;
            let base = SeqSpec::parse(inner)?.realize(len + 1, order)?;
            transform_matrix(&base, len)
        }
        (Some(_), Some(_)) => Err(Error::Parse(
            "--seq and --seq-from are mutually exclusive".into(),
        )),
        (None, None) => Err(Error::Parse("a sequence is required: pass --seq or --seq-from".into())),
    }
}

// --- rational-function expressions ------------------------------------------

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    X,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(expr: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let mut chars = expr.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' => {
                chars.next();
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push(Token::Int(digits.parse().expect("digits only")));
            }
            'x' => {
                chars.next();
                tokens.push(Token::X);
            }
            '+' => {
                chars.next();
                tokens.push(Token::Plus);
            }
            '-' => {
                chars.next();
                tokens.push(Token::Minus);
            }
            '*' => {
                chars.next();
                tokens.push(Token::Star);
            }
            '/' => {
                chars.next();
                tokens.push(Token::Slash);
            }
            '^' => {
                chars.next();
                tokens.push(Token::Caret);
            }
            '(' => {
                chars.next();
                tokens.push(Token::LParen);
            }
            ')' => {
                chars.next();
                tokens.push(Token::RParen);
            }
            other => {
                return Err(Error::Parse(format!(
                    "unexpected character `{other}` in expression"
                )))
            }
        }
    }
    Ok(tokens)
}

struct ExprParser<'a> {
    tokens: &'a [Token],
    pos: usize,
    order: usize,
}

/// Expands a rational-function expression such as `x/(1-x-x^2)` or
/// `(1+x)(1-2x)` as a series at the given truncation order. Adjacent factors
/// multiply implicitly; division by a factor with zero constant term is an
/// error.
pub fn parse_rational_fn(expr: &str, order: usize) -> Result<Series> {
    let tokens = tokenize(expr)?;
    let mut parser = ExprParser {
        tokens: &tokens,
        pos: 0,
        order,
    };
    let series = parser.expr()?;
    if parser.pos != tokens.len() {
        return Err(Error::Parse(format!(
            "trailing input in expression `{expr}`"
        )));
    }
    Ok(series)
}

impl ExprParser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<&Token> {
        let t = self.tokens.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Series> {
        let mut negate = false;
        if matches!(self.peek(), Some(Token::Minus)) {
            self.next();
            negate = true;
        } else if matches!(self.peek(), Some(Token::Plus)) {
            self.next();
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.next();
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some(Token::Minus) => {
                    self.next();
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Series> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.next();
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                Some(Token::Slash) => {
                    self.next();
                    let f = self.factor()?;
                    acc = acc.div(&f)?;
                }
                // implicit multiplication: `2x`, `x(1-x)`, `(1+x)(1-x)`
                Some(Token::Int(_)) | Some(Token::X) | Some(Token::LParen) => {
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Series> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Token::Caret)) {
            self.next();
            let exp = match self.next() {
                Some(Token::Int(n)) => usize::try_from(n.clone())
                    .map_err(|_| Error::Parse("exponent out of range".into()))?,
                _ => return Err(Error::Parse("expected an integer exponent after ^".into())),
            };
            let mut acc = Series::one(self.order);
            for _ in 0..exp {
                acc = acc.mul(&base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Series> {
        match self.next().cloned() {
            Some(Token::Int(n)) => Ok(Series::constant(
                Rational::from_integer(n),
                self.order,
            )),
            Some(Token::X) => Ok(Series::x(self.order)),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(Error::Parse("unbalanced parenthesis".into())),
                }
            }
            other => Err(Error::Parse(format!(
                "unexpected token {other:?} in expression"
            ))),
        }
    }
}

/// Parses a matrix given as a JSON array of arrays; entries are rational
/// strings (`"3/2"`) or plain JSON integers.
pub fn parse_matrix_json(text: &str) -> Result<Vec<Vec<Rational>>> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
    let rows = value
        .as_array()
        .ok_or_else(|| Error::Parse("expected a JSON array of rows".into()))?;
    rows.iter()
        .map(|row| {
            let cells = row
                .as_array()
                .ok_or_else(|| Error::Parse("expected each row to be a JSON array".into()))?;
            cells
                .iter()
                .map(|cell| match cell {
                    serde_json::Value::String(s) => parse_rational(s),
                    serde_json::Value::Number(n) => n
                        .as_i64()
                        .map(crate::rational::int)
                        .ok_or_else(|| Error::Parse(format!("non-integer number `{n}`"))),
                    other => Err(Error::Parse(format!("invalid matrix entry `{other}`"))),
                })
                .collect()
        })
        .collect()
}

impl std::str::FromStr for SeqSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SeqSpec::parse(s)
    }
}

/// Parses a comma-separated list of rationals; empty input gives an empty list.
pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_rational).collect()
}
