//! Ideal input in two forms:
//!
//! ```text
//! ideal  := term (',' term)*
//! term   := factor ('*'? factor)?
//! factor := ('x' | 'y') ('^' uint)?
//! ```
//!
//! or exponent pairs `(a, b), (c, d), ...`. Whitespace is insignificant.
//! Error positions are character offsets into the input.

use crate::error::{Error, Result};
use crate::monomial::{ExpVec, MonomialIdeal};

struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    fn new(src: &str) -> Self {
        Cursor { chars: src.chars().collect(), pos: 0 }
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

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::ParseError { pos: self.pos, msg: msg.into() }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(d) if d == c => {
                self.pos += 1;
                Ok(())
            }
            Some(d) => Err(self.error(format!("expected '{c}', found '{d}'"))),
            None => Err(self.error(format!("expected '{c}', found end of input"))),
        }
    }

    fn uint(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an unsigned integer"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse().map_err(|_| Error::ParseError { pos: start, msg: "integer too large".into() })
    }
}

fn factor(cur: &mut Cursor) -> Result<ExpVec> {
    let var = match cur.peek() {
        Some(c @ ('x' | 'y')) => {
            cur.pos += 1;
            c
        }
        Some(c) => return Err(cur.error(format!("expected 'x' or 'y', found '{c}'"))),
        None => return Err(cur.error("expected 'x' or 'y', found end of input")),
    };
    let e = if cur.peek() == Some('^') {
        cur.pos += 1;
        cur.uint()?
    } else {
        1
    };
    Ok(if var == 'x' { ExpVec::new(e, 0) } else { ExpVec::new(0, e) })
}

fn term(cur: &mut Cursor) -> Result<ExpVec> {
    let first = factor(cur)?;
    let starred = cur.peek() == Some('*');
    if starred {
        cur.pos += 1;
    }
    match cur.peek() {
        Some('x' | 'y') => first.mul(factor(cur)?),
        _ if starred => Err(cur.error("expected a factor after '*'")),
        _ => Ok(first),
    }
}

fn separated<T>(cur: &mut Cursor, item: impl Fn(&mut Cursor) -> Result<T>) -> Result<Vec<T>> {
    let mut out = vec![item(cur)?];
    loop {
        match cur.peek() {
            None => return Ok(out),
            Some(',') => {
                cur.pos += 1;
                out.push(item(cur)?);
            }
            Some(c) => return Err(cur.error(format!("expected ',' or end of input, found '{c}'"))),
        }
    }
}

fn pair(cur: &mut Cursor) -> Result<ExpVec> {
    cur.expect('(')?;
    let a = cur.uint()?;
    cur.expect(',')?;
    let b = cur.uint()?;
    cur.expect(')')?;
    Ok(ExpVec::new(a, b))
}

/// Parse either form; the result is minimalized but not normalized.
pub fn parse_ideal(input: &str) -> Result<MonomialIdeal> {
    let mut cur = Cursor::new(input);
    let gens = match cur.peek() {
        None => return Err(Error::InvalidIdeal("empty input".into())),
        Some('(') => separated(&mut cur, pair)?,
        Some(_) => separated(&mut cur, term)?,
    };
    MonomialIdeal::new(gens)
}

/// Comma-separated unsigned integers, e.g. `3, 4, 6`.
pub fn parse_uint_list(input: &str) -> Result<Vec<u64>> {
    let mut cur = Cursor::new(input);
    if cur.peek().is_none() {
        return Err(Error::InvalidArgument("empty list".into()));
    }
    separated(&mut cur, Cursor::uint)
}

/// Pair form of a generator list, parseable by [`parse_ideal`].
pub fn to_pair_form(ideal: &MonomialIdeal) -> String {
    ideal.gens().iter().map(|g| format!("({},{})", g.a, g.b)).collect::<Vec<_>>().join(",")
}
