//! Generator-list grammar.
//!
//! ```text
//! ideal    := "[" (monomial ("," monomial)*)? "]" ("n" "=" INT)?
//! monomial := "1" | factor ("*" factor)*
//! factor   := "x" INT ("^" INT)?
//! ```
//!
//! Whitespace is ignored. `n` defaults to the largest index seen, and an
//! empty list needs an explicit `n`.

use polyshift::{Monomial, MonomialIdeal, VariableOrder, MAX_VARS};

use crate::error::ParseError;

/// A monomial as read, before the ambient ring is known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawMonomial {
    pub factors: Vec<(usize, u32)>,
    pub line: usize,
    pub column: usize,
}

impl RawMonomial {
    pub fn max_index(&self) -> usize {
        self.factors.iter().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn into_monomial(&self, n: usize) -> Result<Monomial, ParseError> {
        let mut exps = vec![0u32; n];
        for &(i, e) in &self.factors {
            if i > n {
                return Err(ParseError::new(
                    self.line,
                    self.column,
                    format!("index x{i} out of range for n={n}"),
                ));
            }
            exps[i - 1] = exps[i - 1]
                .checked_add(e)
                .ok_or_else(|| ParseError::new(self.line, self.column, "exponent overflow"))?;
        }
        Ok(Monomial::new(exps))
    }
}

struct Scanner {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    column: usize,
}

impl Scanner {
    fn new(src: &str) -> Self {
        Scanner {
            chars: src.chars().collect(),
            pos: 0,
            line: 1,
            column: 1,
        }
    }

    fn skip_ws(&mut self) {
        while let Some(&c) = self.chars.get(self.pos) {
            if !c.is_whitespace() {
                break;
            }
            self.bump();
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = *self.chars.get(self.pos)?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn error(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.column, msg)
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

    fn int(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let (line, column) = (self.line, self.column);
        let mut digits = String::new();
        while let Some(&c) = self.chars.get(self.pos) {
            if !c.is_ascii_digit() {
                break;
            }
            digits.push(c);
            self.bump();
        }
        if digits.is_empty() {
            return Err(self.error("expected an integer"));
        }
        digits
            .parse()
            .map_err(|_| ParseError::new(line, column, format!("integer {digits} is too large")))
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn monomial(&mut self) -> Result<RawMonomial, ParseError> {
        self.skip_ws();
        let (line, column) = (self.line, self.column);
        if self.peek() == Some('1') {
            self.bump();
            return Ok(RawMonomial {
                factors: Vec::new(),
                line,
                column,
            });
        }
        let mut factors = Vec::new();
        loop {
            match self.peek() {
                Some('x') => {
                    self.bump();
                }
                Some(c) => return Err(self.error(format!("malformed monomial: expected 'x', found '{c}'"))),
                None => return Err(self.error("malformed monomial: unexpected end of input")),
            }
            let (il, ic) = (self.line, self.column);
            let i = self.int()?;
            if i == 0 || i as usize > MAX_VARS {
                return Err(ParseError::new(
                    il,
                    ic,
                    format!("variable index {i} outside 1..={MAX_VARS}"),
                ));
            }
            let mut e = 1u64;
            if self.peek() == Some('^') {
                self.bump();
                let (el, ec) = (self.line, self.column);
                e = self.int()?;
                if e > u32::MAX as u64 {
                    return Err(ParseError::new(el, ec, "exponent overflow"));
                }
            }
            factors.push((i as usize, e as u32));
            if self.peek() != Some('*') {
                break;
            }
            self.bump();
        }
        Ok(RawMonomial { factors, line, column })
    }
}

/// Parses a single monomial, such as `x1*x3^2`, with nothing after it.
pub fn parse_raw_monomial(text: &str) -> Result<RawMonomial, ParseError> {
    let mut sc = Scanner::new(text);
    let raw = sc.monomial()?;
    if !sc.at_end() {
        let c = sc.peek().unwrap_or(' ');
        return Err(sc.error(format!("unexpected '{c}' after the monomial")));
    }
    Ok(raw)
}

/// Parses a generator list. The result is minimally generated.
pub fn parse_generator_list(text: &str) -> Result<MonomialIdeal, ParseError> {
    let mut sc = Scanner::new(text);
    sc.expect('[')?;
    let mut raws = Vec::new();
    if sc.peek() != Some(']') {
        loop {
            raws.push(sc.monomial()?);
            match sc.peek() {
                Some(',') => {
                    sc.bump();
                }
                _ => break,
            }
        }
    }
    sc.expect(']')?;
    let max_seen = raws.iter().map(RawMonomial::max_index).max().unwrap_or(0);
    let n = if sc.peek() == Some('n') {
        sc.bump();
        sc.expect('=')?;
        let (line, column) = (sc.line, sc.column);
        let n = sc.int()? as usize;
        if n == 0 || n > MAX_VARS {
            return Err(ParseError::new(line, column, format!("n={n} outside 1..={MAX_VARS}")));
        }
        if n < max_seen {
            return Err(ParseError::new(
                line,
                column,
                format!("inconsistent n: n={n} but x{max_seen} appears"),
            ));
        }
        n
    } else if max_seen == 0 {
        return Err(sc.error("n is required when no variable appears"));
    } else {
        max_seen
    };
    if !sc.at_end() {
        let c = sc.peek().unwrap_or(' ');
        return Err(sc.error(format!("unexpected '{c}' after the ideal")));
    }
    let gens = raws.iter().map(|r| r.into_monomial(n)).collect::<Result<Vec<_>, _>>()?;
    MonomialIdeal::new(n, gens).map_err(|e| ParseError::new(1, 1, e.to_string()))
}

/// Canonical form: generators in descending lex, then `n=`.
pub fn print_ideal(ideal: &MonomialIdeal) -> String {
    let gens: Vec<String> = ideal.gens().iter().map(|g| g.to_string()).collect();
    format!("[{}] n={}", gens.join(", "), ideal.n())
}

/// Parses `x2>x1>x3` over `n` variables.
pub fn parse_order(text: &str, n: usize) -> Result<VariableOrder, ParseError> {
    let mut perm = Vec::new();
    let mut column = 1;
    for part in text.split('>') {
        let t = part.trim();
        let idx = t
            .strip_prefix('x')
            .and_then(|s| s.parse::<usize>().ok())
            .ok_or_else(|| ParseError::new(1, column, format!("malformed variable '{t}' in order")))?;
        perm.push(idx);
        column += part.chars().count() + 1;
    }
    if perm.len() != n {
        return Err(ParseError::new(
            1,
            1,
            format!("order lists {} variables, ideal has n={n}", perm.len()),
        ));
    }
    VariableOrder::new(perm).map_err(|e| ParseError::new(1, 1, e.to_string()))
}
