//! A small character cursor shared by the text formats, with line/column
//! tracking for error messages.

use std::fmt;
use std::str::Chars;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl ParseError {
    pub fn new(line: usize, col: usize, msg: impl Into<String>) -> Self {
        ParseError { line, col, msg: msg.into() }
    }

    /// Shifts the position by a line offset, for errors raised while parsing
    /// one line of a multi-line file.
    pub fn at_line(mut self, line: usize) -> Self {
        self.line = line;
        self
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at line {}, column {}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug)]
pub struct Cursor<'a> {
    chars: std::iter::Peekable<Chars<'a>>,
    line: usize,
    col: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(s: &'a str) -> Self {
        Cursor { chars: s.chars().peekable(), line: 1, col: 1 }
    }

    pub fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    pub fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    pub fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    pub fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub fn error(&self, msg: &str) -> ParseError {
        ParseError::new(self.line, self.col, msg)
    }

    pub fn expect(&mut self, want: char) -> Result<(), ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(self.error(&format!("expected `{want}`, found `{c}`"))),
            None => Err(self.error(&format!("expected `{want}`, found end of input"))),
        }
    }

    pub fn uint(&mut self) -> Result<u64, ParseError> {
        let start = self.clone();
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.bump();
        }
        if digits.is_empty() {
            return Err(start.error("expected an unsigned integer"));
        }
        digits.parse().map_err(|_| start.error("integer out of range"))
    }

    pub fn int(&mut self) -> Result<i64, ParseError> {
        let start = self.clone();
        let neg = match self.peek() {
            Some('-') => {
                self.bump();
                true
            }
            Some('+') => {
                self.bump();
                false
            }
            _ => false,
        };
        let v = self.uint()?;
        let v = i64::try_from(v).map_err(|_| start.error("integer out of range"))?;
        Ok(if neg { -v } else { v })
    }
}

/// Non-empty, non-comment lines of a text file with their 1-based numbers.
/// `#` starts a comment that runs to the end of the line.
pub fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_track_lines() {
        let mut c = Cursor::new("ab\ncd");
        for _ in 0..4 {
            c.bump();
        }
        assert_eq!(c.error("x").line, 2);
        assert_eq!(c.error("x").col, 2);
    }

    #[test]
    fn integers() {
        let mut c = Cursor::new("-42 17");
        assert_eq!(c.int().unwrap(), -42);
        c.skip_ws();
        assert_eq!(c.uint().unwrap(), 17);
        assert!(c.at_end());
        assert!(Cursor::new("x").int().is_err());
    }

    #[test]
    fn comments_and_blanks_skipped() {
        let lines: Vec<_> = content_lines("# head\n\n+ 1 # tail\n").collect();
        assert_eq!(lines, vec![(3, "+ 1")]);
    }
}
