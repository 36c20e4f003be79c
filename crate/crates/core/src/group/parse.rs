//! Parser for presentations such as `<a,b | (a^3 b)^2 b^-3, (a^-1 b^3)^2 a^3>`.
//!
//! ```text
//! presentation := "<" genlist "|" rellist? ">"
//! genlist      := ident ("," ident)*
//! rellist      := word ("," word)*
//! word         := factor+
//! factor       := (ident | "(" word ")") ("^" sint)?
//! ident        := lowercase-letter digit*
//! sint         := ["-"] digit+
//! ```

use super::{GroupPresentation, Word};
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    generators: Vec<String>,
}

pub fn parse_presentation(text: &str) -> Result<GroupPresentation> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, generators: Vec::new() };
    p.expect(b'<')?;
    loop {
        let start = p.skip_ws();
        let name = p.ident()?;
        if p.generators.contains(&name) {
            return Err(Error::parse(start, format!("duplicate generator `{name}`")));
        }
        p.generators.push(name);
        match p.peek() {
            Some(b',') => p.pos += 1,
            Some(b'|') => break,
            _ => return Err(p.error("expected `,` or `|` after generator")),
        }
    }
    p.expect(b'|')?;
    let mut relators = Vec::new();
    if p.peek() != Some(b'>') {
        loop {
            relators.push(p.word()?);
            match p.peek() {
                Some(b',') => p.pos += 1,
                Some(b'>') => break,
                _ => return Err(p.error("expected `,` or `>` after relator")),
            }
        }
    }
    p.expect(b'>')?;
    if p.peek().is_some() {
        return Err(p.error("trailing input after `>`"));
    }
    Ok(GroupPresentation { generators: p.generators, relators })
}

impl Parser<'_> {
    fn skip_ws(&mut self) -> usize {
        while self.src.get(self.pos).is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
        self.pos
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error(&self, msg: &str) -> Error {
        match self.src.get(self.pos) {
            Some(&c) => Error::parse(self.pos, format!("{msg}, found `{}`", c as char)),
            None => Error::parse(self.pos, format!("{msg}, found end of input")),
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", c as char)))
        }
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        match self.src.get(self.pos) {
            Some(c) if c.is_ascii_lowercase() => self.pos += 1,
            _ => return Err(self.error("expected generator name")),
        }
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn sint(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.src.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if digits == self.pos {
            return Err(self.error("expected integer exponent"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::parse(start, "exponent out of range"))
    }

    fn word(&mut self) -> Result<Word> {
        let mut w = Word::new();
        let mut factors = 0;
        while matches!(self.peek(), Some(c) if c == b'(' || c.is_ascii_lowercase()) {
            w.append(&self.factor()?);
            factors += 1;
        }
        if factors == 0 {
            return Err(self.error("expected a word"));
        }
        Ok(w)
    }

    fn factor(&mut self) -> Result<Word> {
        let base = if self.peek() == Some(b'(') {
            self.pos += 1;
            let inner = self.word()?;
            self.expect(b')')?;
            inner
        } else {
            let start = self.skip_ws();
            let name = self.ident()?;
            let g = self
                .generators
                .iter()
                .position(|n| *n == name)
                .ok_or_else(|| Error::parse(start, format!("unknown generator `{name}`")))?;
            Word::generator(g)
        };
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let k = self.sint()?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }
}
