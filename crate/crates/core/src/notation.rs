//! Text format for permutations.
//!
//! ```text
//! deg=6 (1 2)(3 4 5)      cycle notation, separators are spaces or commas
//! (1,2)(3,4,5)            degree = largest point mentioned
//! [2, 1, 4, 5, 3]         pointwise: position a holds aπ
//! ```
//!
//! The optional `deg=n` header fixes the degree. The printer emits the header
//! followed by canonical cycle notation, so everything it prints parses back.

use std::fmt;

use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor { chars: s.chars().peekable(), line: 1, column: 1 }
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError { line: self.line, column: self.column, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn skip_separators(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace() || c == ',') {
            self.bump();
        }
    }

    fn number(&mut self) -> Result<(usize, usize, usize), ParseError> {
        let (line, column) = (self.line, self.column);
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.bump();
        }
        if digits.is_empty() {
            let msg = match self.peek() {
                Some(c) => format!("expected a number, found '{c}'"),
                None => "expected a number, found end of input".to_string(),
            };
            return Err(self.error(msg));
        }
        let v = digits
            .parse()
            .map_err(|_| ParseError { line, column, message: "number too large".into() })?;
        Ok((v, line, column))
    }

    fn expect(&mut self, want: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected '{want}', found '{c}'"))),
            None => Err(self.error(format!("expected '{want}', found end of input"))),
        }
    }
}

fn at(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, column, message: message.into() }
}

/// Parses a permutation. `degree`, when given, must agree with any `deg=`
/// header and, for pointwise input, with the list length.
pub fn parse_permutation(text: &str, degree: Option<usize>) -> Result<Permutation, ParseError> {
    let mut cur = Cursor::new(text);
    cur.skip_ws();
    let mut degree = degree;
    if cur.peek() == Some('d') {
        for want in "deg".chars() {
            cur.expect(want)?;
        }
        cur.skip_ws();
        cur.expect('=')?;
        cur.skip_ws();
        let (d, line, column) = cur.number()?;
        if degree.is_some_and(|given| given != d) {
            return Err(at(line, column, format!("header deg={d} conflicts with degree {}", degree.unwrap())));
        }
        degree = Some(d);
        cur.skip_ws();
    }
    let (line, column) = (cur.line, cur.column);
    let perm = match cur.peek() {
        Some('[') => parse_pointwise(&mut cur, degree)?,
        Some('(') => parse_cycles(&mut cur, degree)?,
        Some(c) => return Err(cur.error(format!("expected '[' or '(', found '{c}'"))),
        None => return Err(cur.error("expected a permutation, found end of input")),
    };
    cur.skip_ws();
    if let Some(c) = cur.peek() {
        return Err(cur.error(format!("unexpected '{c}' after permutation")));
    }
    perm.map_err(|e| at(line, column, e.to_string()))
}

type Built = Result<Permutation, crate::Error>;

fn parse_pointwise(cur: &mut Cursor<'_>, degree: Option<usize>) -> Result<Built, ParseError> {
    let (line, column) = (cur.line, cur.column);
    cur.expect('[')?;
    let mut images = Vec::new();
    cur.skip_separators();
    while cur.peek() != Some(']') {
        images.push(cur.number()?.0);
        cur.skip_separators();
        if cur.peek().is_none() {
            return Err(cur.error("unterminated '['"));
        }
    }
    cur.expect(']')?;
    if let Some(d) = degree.filter(|&d| d != images.len()) {
        return Err(at(line, column, format!("degree {d} but {} images listed", images.len())));
    }
    Ok(Permutation::from_images(&images))
}

fn parse_cycles(cur: &mut Cursor<'_>, degree: Option<usize>) -> Result<Built, ParseError> {
    let (line, column) = (cur.line, cur.column);
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut max_point = 0;
    while cur.peek() == Some('(') {
        cur.bump();
        let mut cycle = Vec::new();
        cur.skip_separators();
        while cur.peek() != Some(')') {
            let (a, l, c) = cur.number()?;
            if a == 0 {
                return Err(at(l, c, "points are numbered from 1"));
            }
            if degree.is_some_and(|d| a > d) {
                return Err(at(l, c, format!("point {a} exceeds degree {}", degree.unwrap())));
            }
            max_point = max_point.max(a);
            cycle.push(a);
            cur.skip_separators();
            if cur.peek().is_none() {
                return Err(cur.error("unterminated '('"));
            }
        }
        cur.expect(')')?;
        cycles.push(cycle);
        cur.skip_ws();
    }
    let n = match degree {
        Some(d) => d,
        None if max_point == 0 => return Err(at(line, column, "cannot infer the degree; add deg=n")),
        None => max_point,
    };
    Ok(Permutation::from_cycles(&cycles, n))
}

/// `deg=n` followed by canonical cycle notation.
pub fn format_permutation(p: &Permutation, explicit_fixpoints: bool) -> String {
    format!("deg={} {}", p.degree(), p.to_cycles().notation(explicit_fixpoints))
}
