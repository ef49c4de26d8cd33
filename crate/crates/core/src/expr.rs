//! Module expressions such as `Z2^2 + Z4` or `Z6 + Z10 @60`.
//!
//! ```text
//! expr := term ('+' term)* ('@' int)?
//! term := 'Z' int ('^' int)?
//! ```
//!
//! Whitespace is insignificant. `Z1` atoms denote the zero module and
//! vanish from the sum. The optional `@n` fixes the acting ring `Z/nZ`;
//! without it the ring is `Z/eZ` for the exponent `e`.

use crate::error::{Error, Result};
use crate::module::{FinModule, Submodule};

/// Parsed form before canonicalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleExpr {
    /// `(k, e)` for each atom `Zk^e`.
    pub atoms: Vec<(u64, u32)>,
    pub ring: Option<u64>,
}

impl ModuleExpr {
    pub fn parse(text: &str) -> Result<Self> {
        Parser {
            text: text.as_bytes(),
            pos: 0,
        }
        .expr()
    }

    pub fn factors(&self) -> Vec<u64> {
        self.atoms
            .iter()
            .filter(|&&(k, _)| k > 1)
            .flat_map(|&(k, e)| std::iter::repeat_n(k, e as usize))
            .collect()
    }

    /// Canonical module; `ring` overrides any `@n` annotation.
    pub fn build(&self, ring: Option<u64>) -> Result<FinModule> {
        FinModule::new(ring.or(self.ring), &self.factors())
    }
}

pub fn parse_module_expr(text: &str, ring: Option<u64>) -> Result<FinModule> {
    ModuleExpr::parse(text)?.build(ring)
}

/// `Zd1 + Zd2 + …` over the invariant factors, `Z1` for the zero module,
/// with `@n` appended when the ring is not the default one.
pub fn print_module(m: &FinModule) -> String {
    let body = if m.is_zero() {
        "Z1".to_string()
    } else {
        m.factors()
            .iter()
            .map(|d| format!("Z{d}"))
            .collect::<Vec<_>>()
            .join(" + ")
    };
    if m.modulus() == m.exponent() {
        body
    } else {
        format!("{body} @{}", m.modulus())
    }
}

/// Submodule spanned by generator rows written `1,3;0,2`.
pub fn parse_generators(m: &FinModule, text: &str) -> Result<Submodule> {
    let mut gens = Vec::new();
    let mut offset = 0;
    for row in text.split(';') {
        let mut coords = Vec::new();
        let mut at = offset;
        for entry in row.split(',') {
            let trimmed = entry.trim();
            let value: i64 = trimmed.parse().map_err(|_| Error::Parse {
                position: at,
                message: format!("expected an integer, found `{trimmed}`"),
            })?;
            coords.push(value);
            at += entry.len() + 1;
        }
        if coords.len() != m.rank() {
            return Err(Error::Parse {
                position: offset,
                message: format!(
                    "generator has {} coordinates, module has rank {}",
                    coords.len(),
                    m.rank()
                ),
            });
        }
        gens.push(m.element_reduced(&coords)?);
        offset += row.len() + 1;
    }
    m.span(&gens)
}

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.text[start..self.pos]).expect("ascii digits");
        digits.parse().map_err(|_| Error::Parse {
            position: start,
            message: format!("integer {digits} is too large"),
        })
    }

    fn term(&mut self) -> Result<(u64, u32)> {
        if !self.eat(b'Z') {
            return Err(self.error("expected `Z`"));
        }
        let at = self.pos;
        let k = self.int()?;
        if k == 0 {
            return Err(Error::Parse {
                position: at,
                message: "Z0 is not a finite module".into(),
            });
        }
        let mut e = 1;
        if self.eat(b'^') {
            let at = self.pos;
            let power = self.int()?;
            if power == 0 {
                return Err(Error::Parse {
                    position: at,
                    message: "power must be at least 1".into(),
                });
            }
            e = u32::try_from(power).map_err(|_| Error::Parse {
                position: at,
                message: format!("power {power} is too large"),
            })?;
        }
        Ok((k, e))
    }

    fn expr(mut self) -> Result<ModuleExpr> {
        let mut atoms = vec![self.term()?];
        while self.eat(b'+') {
            atoms.push(self.term()?);
        }
        let mut ring = None;
        if self.eat(b'@') {
            let at = self.pos;
            let n = self.int()?;
            if n == 0 {
                return Err(Error::Parse {
                    position: at,
                    message: "ring modulus must be at least 1".into(),
                });
            }
            ring = Some(n);
        }
        if self.peek().is_some() {
            return Err(self.error("unexpected trailing input"));
        }
        Ok(ModuleExpr { atoms, ring })
    }
}
