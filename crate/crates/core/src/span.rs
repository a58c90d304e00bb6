use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// An inclusive range of integer cell (or tape) indices, `first..=last`.
///
/// Always nonempty; `first <= last` is enforced by the constructors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Span {
    pub first: i64,
    pub last: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpanError {
    #[error("empty span {first}..{last}")]
    Empty { first: i64, last: i64 },
    #[error("cannot parse span `{0}`, expected A..B")]
    Parse(String),
}

impl Span {
    pub fn new(first: i64, last: i64) -> Result<Self, SpanError> {
        if first > last {
            return Err(SpanError::Empty { first, last });
        }
        Ok(Span { first, last })
    }

    pub fn single(index: i64) -> Self {
        Span {
            first: index,
            last: index,
        }
    }

    pub fn len(&self) -> usize {
        (self.last - self.first + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, index: i64) -> bool {
        self.first <= index && index <= self.last
    }

    pub fn contains_span(&self, other: &Span) -> bool {
        self.first <= other.first && other.last <= self.last
    }

    pub fn indices(&self) -> impl Iterator<Item = i64> {
        self.first..=self.last
    }

    pub fn shifted(&self, by: i64) -> Span {
        Span {
            first: self.first + by,
            last: self.last + by,
        }
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.first, self.last)
    }
}

impl FromStr for Span {
    type Err = SpanError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, b) = s
            .split_once("..")
            .ok_or_else(|| SpanError::Parse(s.to_string()))?;
        let first = a
            .trim()
            .parse()
            .map_err(|_| SpanError::Parse(s.to_string()))?;
        let last = b
            .trim()
            .parse()
            .map_err(|_| SpanError::Parse(s.to_string()))?;
        Span::new(first, last)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_negative_bounds() {
        assert_eq!(
            "-7..0".parse::<Span>().unwrap(),
            Span { first: -7, last: 0 }
        );
        assert_eq!("-15..-12".parse::<Span>().unwrap().len(), 4);
    }

    #[test]
    fn rejects_reversed_and_garbage() {
        assert!(matches!(
            "3..1".parse::<Span>(),
            Err(SpanError::Empty { .. })
        ));
        assert!(matches!("3-1".parse::<Span>(), Err(SpanError::Parse(_))));
        assert!(matches!("a..1".parse::<Span>(), Err(SpanError::Parse(_))));
    }
}
