//! The `i_n^m` text notation for monomials.
//!
//! A monomial is a whitespace-separated list of factors `i_n`, `i_n^m`.
//! Braced forms `i_{n}^{m}` are accepted on input. Factors on an orbit
//! other than the default one carry an `@orbit` suffix after the shift,
//! e.g. `2_4@b^-1`. Rendering sorts factors by node, orbit and shift and
//! omits exponent 1.

use thiserror::Error;

use super::monomial::{Exponents, Orbit, Site, SpectralShift};
use crate::rootdata::RootDatum;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("malformed factor at byte {position}: {message}")]
    Malformed { position: usize, message: String },
    #[error("node {node} at byte {position} out of range 1..={rank}")]
    NodeOutOfRange {
        node: usize,
        rank: usize,
        position: usize,
    },
}

struct Cursor<'a> {
    s: &'a str,
    pos: usize,
    base: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<char> {
        self.s[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError::Malformed {
            position: self.base + self.pos,
            message: message.into(),
        }
    }

    fn integer(&mut self, what: &str) -> Result<i64, ParseError> {
        let start = self.pos;
        if self.peek() == Some('-') || self.peek() == Some('+') {
            self.pos += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let text = &self.s[start..self.pos];
        text.parse().map_err(|_| ParseError::Malformed {
            position: self.base + start,
            message: format!("expected integer {what}"),
        })
    }

    // `x` or `{x}`
    fn maybe_braced_integer(&mut self, what: &str) -> Result<i64, ParseError> {
        if self.eat('{') {
            let v = self.integer(what)?;
            if !self.eat('}') {
                return Err(self.err("expected '}'"));
            }
            Ok(v)
        } else {
            self.integer(what)
        }
    }

    fn orbit(&mut self) -> Result<Orbit, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric()) {
            self.pos += 1;
        }
        Orbit::new(&self.s[start..self.pos]).ok_or(ParseError::Malformed {
            position: self.base + start,
            message: "expected orbit name".into(),
        })
    }
}

// Parses one factor; `base` is its byte offset in the full input.
fn parse_factor(token: &str, base: usize, datum: Option<&RootDatum>) -> Result<(Site, i64), ParseError> {
    let mut c = Cursor {
        s: token,
        pos: 0,
        base,
    };
    let node_start = c.pos;
    while c.peek().is_some_and(|ch| ch.is_ascii_digit()) {
        c.pos += 1;
    }
    let node: usize = token[node_start..c.pos]
        .parse()
        .map_err(|_| ParseError::Malformed {
            position: base,
            message: "expected node index".into(),
        })?;
    if let Some(d) = datum {
        if node == 0 || node > d.rank() {
            return Err(ParseError::NodeOutOfRange {
                node,
                rank: d.rank(),
                position: base,
            });
        }
    } else if node == 0 {
        return Err(ParseError::Malformed {
            position: base,
            message: "node indices start at 1".into(),
        });
    }
    if !c.eat('_') {
        return Err(c.err("expected '_'"));
    }
    let shift = c.maybe_braced_integer("shift")?;
    let orbit = if c.eat('@') { c.orbit()? } else { Orbit::default() };
    let exp = if c.eat('^') {
        c.maybe_braced_integer("exponent")?
    } else {
        1
    };
    if c.pos != token.len() {
        return Err(c.err("unexpected trailing characters"));
    }
    Ok((Site::new(node, SpectralShift::new(orbit, shift)), exp))
}

/// Parses a monomial; repeated factors accumulate.
pub fn parse_monomial(s: &str, datum: &RootDatum) -> Result<Exponents, ParseError> {
    parse_exponents(s, Some(datum))
}

/// Like [`parse_monomial`] without a node range check.
pub fn parse_exponents(s: &str, datum: Option<&RootDatum>) -> Result<Exponents, ParseError> {
    let mut y = Exponents::new();
    for piece in s.split_whitespace() {
        // split_whitespace yields subslices of s, so the offset is exact
        let start = piece.as_ptr() as usize - s.as_ptr() as usize;
        let (site, e) = parse_factor(piece, start, datum)?;
        y.add(site, e);
    }
    Ok(y)
}

/// Parses a bare site `i_n` or `i_n@orbit` (used for `w`/`v` keys).
pub fn parse_site(s: &str, datum: Option<&RootDatum>) -> Result<Site, ParseError> {
    let (site, e) = parse_factor(s.trim(), 0, datum)?;
    if e != 1 || s.contains('^') {
        return Err(ParseError::Malformed {
            position: 0,
            message: "a site takes no exponent".into(),
        });
    }
    Ok(site)
}

/// Canonical rendering, e.g. `1_1 2_2^-1 3_1 4_1`; the empty monomial
/// renders as the empty string.
pub fn render_monomial(y: &Exponents) -> String {
    let mut out = String::new();
    for (site, e) in y.iter() {
        if !out.is_empty() {
            out.push(' ');
        }
        out.push_str(&site.to_string());
        if e != 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d4() -> RootDatum {
        "D4".parse().unwrap()
    }

    #[test]
    fn parses_examples() {
        let y = parse_monomial("2_4^-1 3_1 3_3", &d4()).unwrap();
        assert_eq!(y.get(&Site::at(2, 4)), -1);
        assert_eq!(y.get(&Site::at(3, 1)), 1);
        assert_eq!(y.get(&Site::at(3, 3)), 1);
        assert_eq!(y.len(), 3);
        assert!(parse_monomial("", &d4()).unwrap().is_empty());
        let a2: RootDatum = "A2".parse().unwrap();
        let y = parse_monomial("1_2^-2 2_1^2", &a2).unwrap();
        assert_eq!(y.get(&Site::at(1, 2)), -2);
        assert_eq!(y.get(&Site::at(2, 1)), 2);
    }

    #[test]
    fn renders_canonically() {
        let y = parse_monomial("3_3 2_4^-1 3_1", &d4()).unwrap();
        assert_eq!(render_monomial(&y), "2_4^-1 3_1 3_3");
        let a2: RootDatum = "A2".parse().unwrap();
        let y = parse_monomial("2_1^2 1_2^-2", &a2).unwrap();
        assert_eq!(render_monomial(&y), "1_2^-2 2_1^2");
        assert_eq!(render_monomial(&Exponents::new()), "");
    }

    #[test]
    fn braces_and_orbits() {
        let y = parse_monomial("2_{4}^{-1} 3_1@b 3_1@b", &d4()).unwrap();
        assert_eq!(render_monomial(&y), "2_4^-1 3_1@b^2");
        let back = parse_monomial(&render_monomial(&y), &d4()).unwrap();
        assert_eq!(back, y);
    }

    #[test]
    fn cancellation_drops_factor() {
        let y = parse_monomial("1_0 1_0^-1", &d4()).unwrap();
        assert!(y.is_empty());
    }

    #[test]
    fn errors_carry_positions() {
        match parse_monomial("1_0 2x", &d4()) {
            Err(ParseError::Malformed { position, .. }) => assert_eq!(position, 5),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_monomial("5_0", &d4()),
            Err(ParseError::NodeOutOfRange { node: 5, .. })
        ));
        assert!(parse_monomial("1_", &d4()).is_err());
        assert!(parse_monomial("1_2^", &d4()).is_err());
        assert!(parse_monomial("1_{2", &d4()).is_err());
        assert!(parse_monomial("_2", &d4()).is_err());
    }

    #[test]
    fn sites() {
        assert_eq!(parse_site("2_0", None).unwrap(), Site::at(2, 0));
        assert!(parse_site("2_0^2", None).is_err());
        assert!(parse_site("2_0^1", None).is_err());
    }
}
