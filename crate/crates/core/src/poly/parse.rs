//! Recursive-descent parser for the polynomial text syntax.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*'? factor)*
//! factor := atom ('^' uint)?
//! atom   := int | ident | '(' expr ')'
//! ```
//!
//! This accepts everything the canonical printer emits plus nested and
//! multiplied parenthesised coefficients such as `((1+t)*(1+2*t^2))*x`.
//! The extension variable of `F_p[t]` may only appear inside parentheses.

use num_bigint::BigInt;

use super::{check_vars, MultiPoly};
use crate::error::{Error, Result};
use crate::rings::RingSpec;

/// Largest exponent accepted on a single variable or integer.
const MAX_ATOM_EXPONENT: u64 = 4096;
/// Largest exponent accepted on a parenthesised group.
const MAX_GROUP_EXPONENT: u64 = 64;
/// Parenthesis nesting limit.
const MAX_DEPTH: usize = 64;

pub fn poly_parse(text: &str, vars: &[&str], spec: &RingSpec) -> Result<MultiPoly> {
    check_vars(vars, spec)?;
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
        depth: 0,
        vars,
        spec,
    };
    let p = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(parser.error("unexpected character"));
    }
    Ok(p)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    depth: usize,
    vars: &'a [&'a str],
    spec: &'a RingSpec,
}

impl<'a> Parser<'a> {
    fn error(&self, msg: &str) -> Error {
        let found = match self.src.get(self.pos) {
            Some(&b) if b.is_ascii_graphic() => format!(" `{}`", b as char),
            Some(_) => " non-printable byte".to_string(),
            None => " end of input".to_string(),
        };
        Error::Syntax {
            pos: self.pos,
            msg: format!("{msg}, found{found}"),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn zero(&self) -> MultiPoly {
        MultiPoly::zero(self.spec, self.vars).expect("variables already checked")
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = self.zero();
        let mut negate = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        loop {
            let t = self.term()?;
            if negate {
                acc.add_assign_same(&t.neg());
            } else {
                acc.add_assign_same(&t);
            }
            if self.eat(b'+') {
                negate = false;
            } else if self.eat(b'-') {
                negate = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                }
                Some(b) if b == b'(' || b.is_ascii_alphabetic() || b == b'_' => {}
                _ => return Ok(acc),
            }
            let f = self.factor()?;
            acc = acc.mul_same(&f);
        }
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        let (base, is_group) = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        self.skip_ws();
        let start = self.pos;
        let digits = self.take_while(|b| b.is_ascii_digit());
        if digits.is_empty() {
            return Err(self.error("expected exponent"));
        }
        let limit = if is_group && base.num_terms() > 1 {
            MAX_GROUP_EXPONENT
        } else {
            MAX_ATOM_EXPONENT
        };
        let n: u64 = match std::str::from_utf8(digits).ok().and_then(|s| s.parse().ok()) {
            Some(n) if n <= limit => n,
            _ => {
                return Err(Error::Syntax {
                    pos: start,
                    msg: format!("exponent larger than {limit}"),
                })
            }
        };
        Ok(base.pow(n))
    }

    fn take_while(&mut self, pred: impl Fn(u8) -> bool) -> &'a [u8] {
        let start = self.pos;
        while self.pos < self.src.len() && pred(self.src[self.pos]) {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    /// Returns the parsed atom and whether it was a parenthesised group.
    fn atom(&mut self) -> Result<(MultiPoly, bool)> {
        match self.peek() {
            Some(b'(') => {
                if self.depth >= MAX_DEPTH {
                    return Err(self.error("parentheses nested too deeply"));
                }
                self.pos += 1;
                self.depth += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.depth -= 1;
                Ok((inner, true))
            }
            Some(b) if b.is_ascii_digit() => {
                let digits = self.take_while(|b| b.is_ascii_digit());
                let s = std::str::from_utf8(digits).expect("ascii digits");
                let n: BigInt = s.parse().expect("nonempty digit string");
                let c = self.spec.from_bigint(&n);
                Ok((self.constant(c), false))
            }
            Some(b) if b.is_ascii_alphabetic() || b == b'_' => {
                let start = self.pos;
                let ident = self.take_while(|b| b.is_ascii_alphanumeric() || b == b'_');
                let name = std::str::from_utf8(ident).expect("ascii identifier");
                if self.vars.contains(&name) {
                    let v = MultiPoly::var(self.spec, self.vars, name).expect("known variable");
                    return Ok((v, false));
                }
                if self.spec.extension_var() == Some(name) {
                    if self.depth == 0 {
                        return Err(Error::CoefficientNotInRing(format!(
                            "extension element `{name}` at position {start} must be parenthesised"
                        )));
                    }
                    let g = self.spec.generator().expect("extension ring");
                    return Ok((self.constant(g), false));
                }
                Err(Error::UnknownVariable(name.to_string()))
            }
            _ => Err(self.error("expected a number, variable or `(`")),
        }
    }

    fn constant(&self, c: crate::rings::RingElement) -> MultiPoly {
        MultiPoly::constant(self.spec, self.vars, c).expect("variables already checked")
    }
}
