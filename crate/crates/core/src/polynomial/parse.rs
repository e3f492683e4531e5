//! Text input for polynomials.
//!
//! Two forms are accepted: the comma separated coefficient list
//! (`"3+2i,1,5"`, lowest degree first) and a small power-basis expression
//! language (`"z^3-z/10+1"`, `"(z-i/3)^3+(z-i/3)^2+1"`, `"16z^5-20z^3+5z"`).

use super::{Complex, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub message: String,
}

impl ParseError {
    fn new(position: usize, message: impl Into<String>) -> Self {
        Self { position, message: message.into() }
    }
}

/// Parses `"a"`, `"bi"`, `"a+bi"`, `"a-bi"` (also `"i"`, `"-i"`). Whitespace is ignored.
pub fn parse_complex(s: &str) -> Result<Complex, ParseError> {
    parse_complex_at(s, 0)
}

fn parse_complex_at(raw: &str, offset: usize) -> Result<Complex, ParseError> {
    let s: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(ParseError::new(offset, "empty coefficient"));
    }
    let real = |t: &str| -> Result<f64, ParseError> {
        t.parse::<f64>()
            .ok()
            .filter(|x| x.is_finite())
            .ok_or_else(|| ParseError::new(offset, format!("invalid number {t:?}")))
    };
    let Some(body) = s.strip_suffix('i') else {
        return Ok(Complex::new(real(&s)?, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&p| (bytes[p] == b'+' || bytes[p] == b'-') && !matches!(bytes[p - 1], b'e' | b'E'));
    let imag = |t: &str| -> Result<f64, ParseError> {
        match t {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => real(t),
        }
    };
    match split {
        Some(p) => Ok(Complex::new(real(&body[..p])?, imag(&body[p..])?)),
        None => Ok(Complex::new(0.0, imag(body)?)),
    }
}

/// Parses the comma separated coefficient format. The leading coefficient
/// must be exactly 1.
pub fn parse_coefficients(s: &str) -> Result<Polynomial, ParseError> {
    let mut coeffs = Vec::new();
    let mut offset = 0;
    for piece in s.split(',') {
        coeffs.push(parse_complex_at(piece, offset)?);
        offset += piece.len() + 1;
    }
    while coeffs.len() > 1 && *coeffs.last().unwrap() == Complex::new(0.0, 0.0) {
        coeffs.pop();
    }
    let poly = Polynomial::new(coeffs).map_err(|e| ParseError::new(0, e.to_string()))?;
    if !poly.is_monic() {
        return Err(ParseError::new(
            s.len(),
            format!("leading coefficient must be 1, got {}", poly.leading()),
        ));
    }
    Ok(poly)
}

/// Parses a power-basis expression in `z`. The result need not be monic.
pub fn parse_expression(s: &str) -> Result<Polynomial, ParseError> {
    let tokens = tokenize(s)?;
    let mut parser = Parser { tokens: &tokens, pos: 0, end: s.len() };
    let poly = parser.expr()?;
    if let Some(tok) = parser.peek() {
        return Err(ParseError::new(tok.pos, format!("unexpected {:?}", tok.kind)));
    }
    Ok(poly)
}

#[derive(Debug, Clone, PartialEq)]
enum TokenKind {
    Number(f64),
    Z,
    I,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
}

#[derive(Debug, Clone)]
struct Token {
    kind: TokenKind,
    pos: usize,
}

fn tokenize(s: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let kind = match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' | b'.' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'.') {
                    i += 1;
                }
                // exponent only when digits follow
                if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
                    let mut j = i + 1;
                    if j < bytes.len() && (bytes[j] == b'+' || bytes[j] == b'-') {
                        j += 1;
                    }
                    if j < bytes.len() && bytes[j].is_ascii_digit() {
                        while j < bytes.len() && bytes[j].is_ascii_digit() {
                            j += 1;
                        }
                        i = j;
                    }
                }
                let text = &s[start..i];
                let value = text
                    .parse::<f64>()
                    .map_err(|_| ParseError::new(start, format!("invalid number {text:?}")))?;
                out.push(Token { kind: TokenKind::Number(value), pos: start });
                continue;
            }
            b'z' | b'Z' => TokenKind::Z,
            b'i' | b'I' => TokenKind::I,
            b'+' => TokenKind::Plus,
            b'-' => TokenKind::Minus,
            b'*' => TokenKind::Star,
            b'/' => TokenKind::Slash,
            b'^' => TokenKind::Caret,
            b'(' => TokenKind::Open,
            b')' => TokenKind::Close,
            _ => return Err(ParseError::new(i, format!("unexpected character {:?}", b as char))),
        };
        out.push(Token { kind, pos: i });
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn here(&self) -> usize {
        self.peek().map_or(self.end, |t| t.pos)
    }

    fn eat(&mut self, kind: &TokenKind) -> bool {
        if self.peek().is_some_and(|t| &t.kind == kind) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(&TokenKind::Plus) {
                acc = &acc + &self.term()?;
            } else if self.eat(&TokenKind::Minus) {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(&TokenKind::Star) {
                acc = &acc * &self.factor()?;
            } else if self.eat(&TokenKind::Slash) {
                let at = self.here();
                let divisor = self.factor()?;
                if divisor.degree() != 0 || divisor.is_zero() {
                    return Err(ParseError::new(at, "can only divide by a non-zero constant"));
                }
                acc = acc.scale_coeffs(divisor.coeff(0).inv());
            } else if matches!(
                self.peek().map(|t| &t.kind),
                Some(TokenKind::Number(_) | TokenKind::Z | TokenKind::I | TokenKind::Open)
            ) {
                // implicit multiplication, e.g. "16z^5" or "(1/10+i/200)z"
                acc = &acc * &self.factor()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        if self.eat(&TokenKind::Minus) {
            return Ok(-&self.factor()?);
        }
        if self.eat(&TokenKind::Plus) {
            return self.factor();
        }
        let base = self.atom()?;
        if self.eat(&TokenKind::Caret) {
            let at = self.here();
            let exp = match self.peek().map(|t| t.kind.clone()) {
                Some(TokenKind::Number(x)) if x >= 0.0 && x.fract() == 0.0 && x <= 1024.0 => x as u32,
                _ => return Err(ParseError::new(at, "exponent must be a non-negative integer")),
            };
            self.pos += 1;
            let mut out = Polynomial::constant(Complex::new(1.0, 0.0));
            for _ in 0..exp {
                out = &out * &base;
            }
            return Ok(out);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let at = self.here();
        let Some(tok) = self.peek().cloned() else {
            return Err(ParseError::new(at, "unexpected end of input"));
        };
        self.pos += 1;
        match tok.kind {
            TokenKind::Number(x) => Ok(Polynomial::constant(Complex::new(x, 0.0))),
            TokenKind::I => Ok(Polynomial::constant(Complex::new(0.0, 1.0))),
            TokenKind::Z => Ok(Polynomial::identity()),
            TokenKind::Open => {
                let inner = self.expr()?;
                if !self.eat(&TokenKind::Close) {
                    return Err(ParseError::new(self.here(), "expected ')'"));
                }
                Ok(inner)
            }
            other => Err(ParseError::new(at, format!("unexpected {other:?}"))),
        }
    }
}
