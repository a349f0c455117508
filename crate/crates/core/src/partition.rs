//! Partition data types and their text forms.
//!
//! A [`Partition`] is a weakly decreasing sequence of positive integers with
//! no trailing zeros. A [`TwoColorPartition`] is a pair of partitions, one per
//! color. Both parse from and print to the `+`-joined grammar used on the
//! command line: `3+2+1` for plain partitions, `3g+2r+1g` for colored ones,
//! and `0` for the empty partition in either case.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::ParseError;

/// A weakly decreasing sequence of positive parts.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct Partition(Vec<u64>);

impl Partition {
    /// The empty partition.
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Validates `parts` and wraps it.
    pub fn new(parts: Vec<u64>) -> Result<Self, ParseError> {
        if parts.contains(&0) {
            return Err(ParseError::ZeroPart);
        }
        if let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(ParseError::NotDecreasing(i + 1));
        }
        Ok(Partition(parts))
    }

    /// Drops trailing zeros from a weakly decreasing nonnegative sequence.
    ///
    /// Panics if the sequence is not weakly decreasing.
    pub fn from_trimmed(mut parts: Vec<u64>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "sequence {parts:?} is not weakly decreasing"
        );
        Partition(parts)
    }

    pub(crate) fn from_vec_unchecked(parts: Vec<u64>) -> Self {
        debug_assert!(Partition::new(parts.clone()).is_ok());
        Partition(parts)
    }

    pub fn parts(&self) -> &[u64] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u64> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of all parts.
    pub fn weight(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Largest part, or 0 for the empty partition.
    pub fn largest(&self) -> u64 {
        self.0.first().copied().unwrap_or(0)
    }

    /// Sum of the parts in positions 1, 3, 5, ...
    ///
    /// ```
    /// use schmidt::Partition;
    /// let p: Partition = "4+3+3+2+1".parse().unwrap();
    /// assert_eq!(p.alternating_sum(), 8);
    /// ```
    pub fn alternating_sum(&self) -> u64 {
        self.0.iter().step_by(2).sum()
    }

    /// The transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let first = self.largest() as usize;
        let mut cols = vec![0u64; first];
        for &part in &self.0 {
            for c in cols.iter_mut().take(part as usize) {
                *c += 1;
            }
        }
        Partition(cols)
    }

    /// Side of the largest square fitting in the top-left corner of the diagram.
    pub fn durfee_size(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .take_while(|&(i, &part)| part as usize > i)
            .count()
    }

    /// Renders as `(a,b,c)`, the notation used for intermediates.
    pub fn tuple(&self) -> String {
        tuple(&self.0)
    }
}

/// Formats a sequence as `(a,b,c)`.
pub fn tuple(seq: &[u64]) -> String {
    let inner: Vec<String> = seq.iter().map(u64::to_string).collect();
    format!("({})", inner.join(","))
}

impl TryFrom<Vec<u64>> for Partition {
    type Error = ParseError;

    fn try_from(parts: Vec<u64>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u64> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        f.write_str(&parts.join("+"))
    }
}

fn split_terms(s: &str) -> Result<Vec<&str>, ParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseError::Empty);
    }
    Ok(s.split('+').map(str::trim).collect())
}

fn parse_size(term: &str) -> Result<u64, ParseError> {
    if term.is_empty() || !term.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseError::InvalidPart(term.to_string()));
    }
    term.parse()
        .map_err(|_| ParseError::InvalidPart(term.to_string()))
}

impl FromStr for Partition {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let terms = split_terms(s)?;
        if terms == ["0"] {
            return Ok(Partition::empty());
        }
        let parts = terms
            .into_iter()
            .map(parse_size)
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

/// Part color. Red sorts before green wherever colors break ties.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Green,
}

impl Color {
    pub fn suffix(self) -> char {
        match self {
            Color::Red => 'r',
            Color::Green => 'g',
        }
    }
}

/// A partition whose parts are each colored red or green, stored as the pair
/// (red parts, green parts).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwoColorPartition {
    pub red: Partition,
    pub green: Partition,
}

impl TwoColorPartition {
    pub fn new(red: Partition, green: Partition) -> Self {
        TwoColorPartition { red, green }
    }

    pub fn weight(&self) -> u64 {
        self.red.weight() + self.green.weight()
    }

    /// Number of red parts.
    pub fn r(&self) -> usize {
        self.red.len()
    }

    /// Number of green parts.
    pub fn l(&self) -> usize {
        self.green.len()
    }

    pub fn is_empty(&self) -> bool {
        self.red.is_empty() && self.green.is_empty()
    }

    /// All parts in canonical order: size descending, red before green on ties.
    pub fn colored_parts(&self) -> Vec<(u64, Color)> {
        let mut out = Vec::with_capacity(self.r() + self.l());
        let (mut i, mut j) = (0, 0);
        let (red, green) = (self.red.parts(), self.green.parts());
        while i < red.len() || j < green.len() {
            let take_red = match (red.get(i), green.get(j)) {
                (Some(a), Some(b)) => a >= b,
                (Some(_), None) => true,
                _ => false,
            };
            if take_red {
                out.push((red[i], Color::Red));
                i += 1;
            } else {
                out.push((green[j], Color::Green));
                j += 1;
            }
        }
        out
    }

    /// Listing order used by enumerators and the correspondence table.
    ///
    /// Part sizes in canonical order are compared lexicographically, larger
    /// first. Equal size sequences are then ordered by their colors read from
    /// the last part back to the first, red before green. For weight 3 this
    /// gives `3r, 3g, 2r+1r, 2g+1r, 2r+1g, 2g+1g, 1r+1r+1r, ...`.
    pub fn listing_cmp(&self, other: &Self) -> Ordering {
        let a = self.colored_parts();
        let b = other.colored_parts();
        let sizes_a = a.iter().map(|&(s, _)| s);
        let sizes_b = b.iter().map(|&(s, _)| s);
        sizes_b.cmp(sizes_a).then_with(|| {
            let colors_a = a.iter().rev().map(|&(_, c)| c);
            let colors_b = b.iter().rev().map(|&(_, c)| c);
            colors_a.cmp(colors_b)
        })
    }
}

impl fmt::Display for TwoColorPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .colored_parts()
            .into_iter()
            .map(|(s, c)| format!("{s}{}", c.suffix()))
            .collect();
        f.write_str(&terms.join("+"))
    }
}

impl FromStr for TwoColorPartition {
    type Err = ParseError;

    /// Accepts colored parts in any order; they are sorted into each color.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let terms = split_terms(s)?;
        if terms == ["0"] {
            return Ok(TwoColorPartition::default());
        }
        let mut red = Vec::new();
        let mut green = Vec::new();
        for term in terms {
            let (size, color) = match term.char_indices().last() {
                Some((i, 'r')) | Some((i, 'R')) => (&term[..i], Color::Red),
                Some((i, 'g')) | Some((i, 'G')) => (&term[..i], Color::Green),
                _ => return Err(ParseError::MissingColor(term.to_string())),
            };
            let size = parse_size(size)?;
            if size == 0 {
                return Err(ParseError::ZeroPart);
            }
            match color {
                Color::Red => red.push(size),
                Color::Green => green.push(size),
            }
        }
        red.sort_unstable_by(|a, b| b.cmp(a));
        green.sort_unstable_by(|a, b| b.cmp(a));
        Ok(TwoColorPartition::new(
            Partition::from_vec_unchecked(red),
            Partition::from_vec_unchecked(green),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn alternating_sum_examples() {
        assert_eq!(p(&[3, 3]).alternating_sum(), 3);
        assert_eq!(Partition::empty().alternating_sum(), 0);
        assert_eq!(p(&[4, 3, 3, 2, 1]).alternating_sum(), 8);
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[4, 4, 3, 3, 2, 1]).conjugate(), p(&[6, 5, 4, 2]));
    }

    #[test]
    fn durfee() {
        assert_eq!(Partition::empty().durfee_size(), 0);
        assert_eq!(p(&[1]).durfee_size(), 1);
        assert_eq!(p(&[4]).durfee_size(), 1);
        assert_eq!(p(&[4, 4, 3, 3, 2, 1]).durfee_size(), 3);
        assert_eq!(p(&[2, 2]).durfee_size(), 2);
    }

    #[test]
    fn validation() {
        assert_eq!(
            Partition::new(vec![1, 2]),
            Err(ParseError::NotDecreasing(1))
        );
        assert_eq!(Partition::new(vec![2, 0]), Err(ParseError::ZeroPart));
        assert_eq!(Partition::from_trimmed(vec![3, 1, 0, 0]), p(&[3, 1]));
    }

    #[test]
    fn parse_plain() {
        assert_eq!("3+2+1".parse::<Partition>().unwrap(), p(&[3, 2, 1]));
        assert_eq!("0".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(" 2 + 2 ".parse::<Partition>().unwrap(), p(&[2, 2]));
        assert!(matches!(
            "1+2".parse::<Partition>(),
            Err(ParseError::NotDecreasing(1))
        ));
        assert!(matches!("".parse::<Partition>(), Err(ParseError::Empty)));
        assert!(matches!(
            "3+x".parse::<Partition>(),
            Err(ParseError::InvalidPart(_))
        ));
        assert!(matches!(
            "3+0".parse::<Partition>(),
            Err(ParseError::ZeroPart)
        ));
        assert!(matches!(
            "-1".parse::<Partition>(),
            Err(ParseError::InvalidPart(_))
        ));
        assert_eq!(p(&[3, 2, 1]).to_string(), "3+2+1");
        assert_eq!(Partition::empty().to_string(), "0");
    }

    #[test]
    fn parse_colored() {
        let l: TwoColorPartition = "3g+2g+1g+1r+1r".parse().unwrap();
        assert_eq!(l.red, p(&[1, 1]));
        assert_eq!(l.green, p(&[3, 2, 1]));
        assert_eq!(l.to_string(), "3g+2g+1r+1r+1g");
        let l: TwoColorPartition = "1g+2r".parse().unwrap();
        assert_eq!(l.to_string(), "2r+1g");
        assert_eq!(
            "0".parse::<TwoColorPartition>().unwrap(),
            TwoColorPartition::default()
        );
        assert!(matches!(
            "3".parse::<TwoColorPartition>(),
            Err(ParseError::MissingColor(_))
        ));
        assert!(matches!(
            "0r".parse::<TwoColorPartition>(),
            Err(ParseError::ZeroPart)
        ));
        assert!(matches!(
            "r".parse::<TwoColorPartition>(),
            Err(ParseError::InvalidPart(_))
        ));
        assert!(matches!(
            "2r+".parse::<TwoColorPartition>(),
            Err(ParseError::MissingColor(_))
        ));
    }

    #[test]
    fn structured_form() {
        let l: TwoColorPartition = "2r+1g+1g".parse().unwrap();
        let json = serde_json::to_string(&l).unwrap();
        assert_eq!(json, r#"{"red":[2],"green":[1,1]}"#);
        let back: TwoColorPartition = serde_json::from_str(&json).unwrap();
        assert_eq!(back, l);
        assert!(serde_json::from_str::<TwoColorPartition>(r#"{"red":[1,2],"green":[]}"#).is_err());
    }

    #[test]
    fn listing_order_weight_three() {
        let mut all: Vec<TwoColorPartition> = [
            "1g+1g+1g", "2g+1g", "3g", "1r+1r+1g", "2r+1r", "2r+1g", "1r+1g+1g", "3r", "2g+1r",
            "1r+1r+1r",
        ]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
        all.sort_by(TwoColorPartition::listing_cmp);
        let text: Vec<String> = all.iter().map(ToString::to_string).collect();
        assert_eq!(
            text,
            [
                "3r", "3g", "2r+1r", "2g+1r", "2r+1g", "2g+1g", "1r+1r+1r", "1r+1r+1g", "1r+1g+1g",
                "1g+1g+1g"
            ]
        );
    }
}
