//! Parser for knot expressions.
//!
//! ```text
//! expr := "unknot"
//!       | "torus" "(" int "," int ")"
//!       | "cable" "(" int "," int ";" expr ")"
//!       | "v" "[" int ("," int)* "]"
//! ```
//!
//! Whitespace is allowed between any two tokens.

use crate::cabling::KnotExpr;
use crate::error::{Error, Result};
use crate::spinc::CableParams;
use crate::vseq::VSequence;

pub fn parse_knot_expr(text: &str) -> Result<KnotExpr> {
    let mut p = Parser { src: text, pos: 0 };
    p.skip_ws();
    if p.at_end() {
        return Err(p.error("empty knot expression"));
    }
    let e = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            let found = self.rest().chars().next();
            Err(self.error(match found {
                Some(f) => format!("expected '{c}', found '{f}'"),
                None => format!("expected '{c}', found end of input"),
            }))
        }
    }

    fn word(&mut self) -> &str {
        self.skip_ws();
        let start = self.pos;
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_alphabetic())
            .unwrap_or(self.rest().len());
        self.pos += len;
        &self.src[start..start + len]
    }

    fn int(&mut self) -> Result<u64> {
        self.skip_ws();
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.rest().len());
        if len == 0 {
            return Err(self.error("expected a nonnegative integer"));
        }
        let v = self.rest()[..len]
            .parse::<u64>()
            .map_err(|_| self.error("integer out of range"))?;
        self.pos += len;
        Ok(v)
    }

    fn pair(&mut self) -> Result<(u64, u64, usize)> {
        self.expect('(')?;
        self.skip_ws();
        let at = self.pos;
        let p = self.int()?;
        self.expect(',')?;
        let q = self.int()?;
        Ok((p, q, at))
    }

    fn params(&self, p: u64, q: u64, at: usize) -> Result<CableParams> {
        CableParams::new(p, q).map_err(|e| match e {
            Error::Domain(msg) => Error::Parse { pos: at, msg },
            other => other,
        })
    }

    fn expr(&mut self) -> Result<KnotExpr> {
        self.skip_ws();
        let start = self.pos;
        match self.word() {
            "unknot" => Ok(KnotExpr::Unknot),
            "torus" => {
                let (p, q, at) = self.pair()?;
                self.expect(')')?;
                Ok(KnotExpr::Torus(self.params(p, q, at)?))
            }
            "cable" => {
                let (p, q, at) = self.pair()?;
                self.expect(';')?;
                let companion = self.expr()?;
                self.expect(')')?;
                Ok(KnotExpr::Cable(self.params(p, q, at)?, Box::new(companion)))
            }
            "v" => {
                self.expect('[')?;
                self.skip_ws();
                let at = self.pos;
                let mut values = vec![self.int()?];
                loop {
                    self.skip_ws();
                    if self.rest().starts_with(',') {
                        self.pos += 1;
                        values.push(self.int()?);
                    } else {
                        break;
                    }
                }
                self.expect(']')?;
                let v = VSequence::new(values).map_err(|e| Error::Parse {
                    pos: at,
                    msg: e.to_string(),
                })?;
                Ok(KnotExpr::ExplicitV(v))
            }
            "" => {
                self.pos = start;
                Err(self.error("expected a knot expression"))
            }
            other => {
                let msg = format!("unknown knot constructor '{other}'");
                self.pos = start;
                Err(self.error(msg))
            }
        }
    }
}
