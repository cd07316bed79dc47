//! Text syntax for profiles: `;` separates profiles, `,` separates entries.
//!
//! `"2,1;3"` is `[(2,1), (3)]`; the empty string is the empty list.
//! Whitespace anywhere is ignored.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at position {position}: {message}")]
pub struct ParseError {
    /// Byte offset of the first malformed token.
    pub position: usize,
    pub message: String,
}

impl ParseError {
    fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}

/// Splits `text[start..]` on `sep`, yielding `(offset, piece)` pairs.
fn split_with_offsets(text: &str, start: usize, sep: char) -> impl Iterator<Item = (usize, &str)> {
    let mut offset = start;
    text.split(sep).map(move |piece| {
        let here = offset;
        offset += piece.len() + sep.len_utf8();
        (here, piece)
    })
}

fn parse_entry(offset: usize, raw: &str) -> Result<u32, ParseError> {
    let lead = raw.len() - raw.trim_start().len();
    let pos = offset + lead;
    let token: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
    if token.is_empty() {
        return Err(ParseError::new(pos, "empty entry"));
    }
    match token.parse::<i64>() {
        Ok(v) if v >= 1 && v <= i64::from(u32::MAX) => Ok(v as u32),
        Ok(v) => Err(ParseError::new(pos, format!("entry {v} is not positive"))),
        Err(_) => Err(ParseError::new(pos, format!("'{token}' is not an integer"))),
    }
}

fn parse_list(text: &str, start: usize) -> Result<Vec<u32>, ParseError> {
    split_with_offsets(text, start, ',')
        .map(|(off, raw)| parse_entry(off, raw))
        .collect()
}

pub fn parse_profiles(text: &str) -> Result<Vec<Vec<u32>>, ParseError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    split_with_offsets(text, 0, ';')
        .map(|(off, piece)| parse_list(piece, off))
        .collect()
}

/// Comma-separated positive sizes; the empty string is the empty list.
pub fn parse_sizes(text: &str) -> Result<Vec<u32>, ParseError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    parse_list(text, 0)
}

/// Inverse of [`parse_profiles`] without whitespace.
pub fn format_profiles(profiles: &[Vec<u32>]) -> String {
    profiles
        .iter()
        .map(|p| p.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join(";")
}
