//! A minimal cursor over input text, shared by the `FromStr` impls.

use std::fmt;
use thiserror::Error;

/// Syntax error with the byte position where scanning stopped.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl ParseError {
    pub fn new(pos: usize, msg: impl fmt::Display) -> Self {
        ParseError { pos, msg: msg.to_string() }
    }
}

/// Byte-oriented scanner; all element grammars here are ASCII.
pub struct Scanner<'a> {
    input: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    pub fn new(input: &'a str) -> Self {
        Scanner { input: input.as_bytes(), pos: 0 }
    }

    pub fn pos(&self) -> usize {
        self.pos
    }

    pub fn peek(&self) -> Option<u8> {
        self.input.get(self.pos).copied()
    }

    pub fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ') | Some(b'\t')) {
            self.pos += 1;
        }
    }

    /// Consumes `c` (after whitespace) or errors.
    pub fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(found) if found == c => {
                self.pos += 1;
                Ok(())
            }
            found => Err(ParseError::new(
                self.pos,
                format!(
                    "expected `{}`, found {}",
                    c as char,
                    found.map_or("end of input".to_string(), |f| format!("`{}`", f as char))
                ),
            )),
        }
    }

    /// Consumes `c` if it is next (after whitespace); reports whether it did.
    pub fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    /// Parses a decimal number (after whitespace).
    pub fn number(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(ParseError::new(start, "expected a number"));
        }
        std::str::from_utf8(&self.input[start..self.pos])
            .expect("digits are ASCII")
            .parse()
            .map_err(|e| ParseError::new(start, format!("bad number: {e}")))
    }

    /// A syntax error at the current position.
    pub fn error(&self, msg: impl fmt::Display) -> ParseError {
        ParseError::new(self.pos, msg)
    }

    /// Errors unless the whole input has been consumed (modulo whitespace).
    pub fn finish(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(ParseError::new(self.pos, format!("unexpected trailing `{}`", c as char))),
        }
    }
}

/// Splits `input` on commas that are not nested inside `()`, `[]`, or `{}`.
///
/// Used by the command-line `compose` entry point, where each argument is
/// itself an element text that may contain commas.
pub fn split_top_level(input: &str) -> Vec<&str> {
    let bytes = input.as_bytes();
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' | b'[' | b'{' => depth += 1,
            b')' | b']' | b'}' => depth = depth.saturating_sub(1),
            b',' if depth == 0 => {
                parts.push(input[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(input[start..].trim());
    parts
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scanner_number_and_expect() {
        let mut s = Scanner::new(" [12, 3]");
        s.expect(b'[').unwrap();
        assert_eq!(s.number().unwrap(), 12);
        s.expect(b',').unwrap();
        assert_eq!(s.number().unwrap(), 3);
        s.expect(b']').unwrap();
        s.finish().unwrap();
    }

    #[test]
    fn scanner_reports_position() {
        let mut s = Scanner::new("[1,x]");
        s.expect(b'[').unwrap();
        s.number().unwrap();
        s.expect(b',').unwrap();
        let err = s.number().unwrap_err();
        assert_eq!(err.pos, 3);
    }

    #[test]
    fn split_respects_nesting() {
        assert_eq!(split_top_level("(1,1),1"), vec!["(1,1)", "1"]);
        assert_eq!(split_top_level("[(1,1);{1,2}],[1;{}]"), vec!["[(1,1);{1,2}]", "[1;{}]"]);
        assert_eq!(split_top_level("1"), vec!["1"]);
    }
}
