//! Errors raised while reading instance files.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: expected {expected} values, found {found}")]
    Count {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: value {value} appears more than once")]
    Duplicate { line: usize, value: u64 },
    #[error("line {line}: value {value} is out of range (allowed {min}..={max})")]
    OutOfRange {
        line: usize,
        value: u64,
        min: u64,
        max: u64,
    },
    #[error("line {line}: `{token}` is not a non-negative integer")]
    Token { line: usize, token: String },
    #[error("line {line}: stack {stack} holds {height} containers but the tier limit is {tiers}")]
    StackOverflow {
        line: usize,
        stack: usize,
        height: usize,
        tiers: usize,
    },
    #[error("line {line}: container {id} is missing from the layout")]
    MissingContainer { line: usize, id: u64 },
    #[error("line {line}: board is not solvable for the configured goal")]
    Unsolvable { line: usize },
    #[error("line {line}: {message}")]
    Invalid { line: usize, message: String },
}

impl ParseError {
    /// 1-based line the defect was found on.
    pub fn line(&self) -> usize {
        match *self {
            ParseError::Count { line, .. }
            | ParseError::Duplicate { line, .. }
            | ParseError::OutOfRange { line, .. }
            | ParseError::Token { line, .. }
            | ParseError::StackOverflow { line, .. }
            | ParseError::MissingContainer { line, .. }
            | ParseError::Unsolvable { line }
            | ParseError::Invalid { line, .. } => line,
        }
    }
}

pub(crate) fn parse_uint(token: &str, line: usize) -> Result<u64, ParseError> {
    token.parse::<u64>().map_err(|_| ParseError::Token {
        line,
        token: token.to_string(),
    })
}
