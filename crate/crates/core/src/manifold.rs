//! Text descriptions of the manifolds handled by the classifiers:
//! `sfs(S2; 2/1, 4/1, 4/-3)`, `tbundle[a,b;c,d]` and `nun[m,n;p,q]`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seifert::{BaseSurface, SeifertInvariants};
use crate::sol::{GluingMatrix, Monodromy};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ManifoldDescription {
    Seifert(SeifertInvariants),
    TorusBundle(Monodromy),
    TwistedUnion(GluingMatrix),
}

impl fmt::Display for ManifoldDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Seifert(s) => write!(f, "{s}"),
            Self::TorusBundle(m) => write!(f, "tbundle[{},{};{},{}]", m.a, m.b, m.c, m.d),
            Self::TwistedUnion(g) => write!(f, "nun[{},{};{},{}]", g.m, g.n, g.p, g.q),
        }
    }
}

impl FromStr for ManifoldDescription {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_manifold(s)
    }
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.src[self.pos..].chars().next().unwrap().len_utf8();
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{token}`")))
        }
    }

    fn error(&self, msg: String) -> Error {
        let found = self.src[self.pos..].chars().next().map_or("end of input".to_string(), |c| format!("`{c}`"));
        Error::parse(self.pos, format!("{msg}, found {found}"))
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let sign = usize::from(rest.starts_with('-'));
        let digits = rest[sign..].bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.error("expected integer".into()));
        }
        self.pos += sign + digits;
        rest[..sign + digits]
            .parse()
            .map_err(|_| Error::parse(start, "integer out of range"))
    }

    fn base(&mut self) -> Result<BaseSurface> {
        self.skip_ws();
        for (name, base) in [("S2", BaseSurface::S2), ("RP2", BaseSurface::RP2), ("T2", BaseSurface::T2)] {
            if self.eat(name) {
                return Ok(base);
            }
        }
        let start = self.pos;
        let orientable = match self.src[start..].chars().next() {
            Some('O') => true,
            Some('N') => false,
            _ => return Err(self.error("expected base S2, RP2, T2, O<g> or N<g>".into())),
        };
        self.pos += 1;
        let g = self.int()?;
        let g = u32::try_from(g).map_err(|_| Error::parse(start + 1, "genus must be non-negative"))?;
        Ok(if orientable { BaseSurface::OrientableGenus(g) } else { BaseSurface::NonorientableGenus(g) })
    }

    fn four(&mut self, close: &str) -> Result<[i64; 4]> {
        let a = self.int()?;
        self.expect(",")?;
        let b = self.int()?;
        self.expect(";")?;
        let c = self.int()?;
        self.expect(",")?;
        let d = self.int()?;
        self.expect(close)?;
        Ok([a, b, c, d])
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos < self.src.len() {
            return Err(self.error("unexpected trailing input".into()));
        }
        Ok(())
    }
}

/// Parses a manifold description. Syntax errors are [`Error::Parse`];
/// well-formed but invalid data (non-coprime pairs, det ≠ 1) keeps the
/// error of the corresponding constructor.
pub fn parse_manifold(text: &str) -> Result<ManifoldDescription> {
    let mut c = Cursor { src: text, pos: 0 };
    if c.eat("sfs(") {
        let base = c.base()?;
        let mut pairs = Vec::new();
        if c.eat(";") {
            loop {
                let alpha = c.int()?;
                c.expect("/")?;
                let beta = c.int()?;
                pairs.push((alpha, beta));
                if !c.eat(",") {
                    break;
                }
            }
        }
        c.expect(")")?;
        c.finish()?;
        Ok(ManifoldDescription::Seifert(SeifertInvariants::new(base, pairs)?))
    } else if c.eat("tbundle[") {
        let [a, b, cc, d] = c.four("]")?;
        c.finish()?;
        Ok(ManifoldDescription::TorusBundle(Monodromy::new(a, b, cc, d)?))
    } else if c.eat("nun[") {
        let [m, n, p, q] = c.four("]")?;
        c.finish()?;
        Ok(ManifoldDescription::TwistedUnion(GluingMatrix::new(m, n, p, q)?))
    } else {
        Err(c.error("expected `sfs(`, `tbundle[` or `nun[`".into()))
    }
}
