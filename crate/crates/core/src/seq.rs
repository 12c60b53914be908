//! Non-decreasing packing sequences with a constant infinite tail.
//!
//! The wire grammar (CLI flags and JSON certificates) is a comma-separated
//! list of terms `INT`, `INT^INT`, or `INT^inf`, with exactly one `^inf` term
//! in last position: `"1,1,2^inf"`, `"2^inf"`, `"1^2,2^inf"`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PackingSequence {
    prefix: Vec<u32>,
    tail: u32,
}

/// Coarse shape of a sequence over `{1,2}`; anything else is `Other`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceClass {
    AllOnes,
    /// Tail 2 with exactly this many leading 1s (possibly more than two).
    OnesThenTwos(usize),
    AllTwos,
    Other,
}

impl PackingSequence {
    pub fn new(prefix: Vec<u32>, tail: u32) -> Result<Self> {
        if tail == 0 || prefix.iter().any(|&s| s == 0) {
            return Err(Error::MalformedSequence("entries must be positive".into()));
        }
        let mut last = 0;
        for &s in &prefix {
            if s < last {
                return Err(Error::MalformedSequence("sequence must be non-decreasing".into()));
            }
            last = s;
        }
        if last > tail {
            return Err(Error::MalformedSequence(
                "prefix may not exceed the infinite tail".into(),
            ));
        }
        // Trim prefix entries equal to the tail: (1,2,2^inf) == (1,2^inf).
        let mut prefix = prefix;
        while prefix.last() == Some(&tail) {
            prefix.pop();
        }
        Ok(Self { prefix, tail })
    }

    /// `s_i` for 1-based `i`.
    pub fn s_at(&self, i: usize) -> Result<u32> {
        if i < 1 {
            return Err(Error::IndexOutOfRange);
        }
        Ok(if i <= self.prefix.len() { self.prefix[i - 1] } else { self.tail })
    }

    pub fn prefix(&self) -> &[u32] {
        &self.prefix
    }

    pub fn tail(&self) -> u32 {
        self.tail
    }

    /// Largest element (the tail, since the sequence is non-decreasing).
    pub fn max_element(&self) -> u32 {
        self.tail
    }

    pub fn classify(&self) -> SequenceClass {
        match self.tail {
            1 => SequenceClass::AllOnes,
            2 if self.prefix.is_empty() => SequenceClass::AllTwos,
            2 if self.prefix.iter().all(|&s| s == 1) => {
                SequenceClass::OnesThenTwos(self.prefix.len())
            }
            _ => SequenceClass::Other,
        }
    }
}

impl FromStr for PackingSequence {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let malformed = |msg: &str| Error::MalformedSequence(format!("{msg} in {text:?}"));
        let mut prefix = Vec::new();
        let mut tail: Option<u32> = None;
        for term in text.split(',') {
            if tail.is_some() {
                return Err(malformed("the ^inf term must be last"));
            }
            let term = term.trim();
            let (base, reps) = match term.split_once('^') {
                None => (term, None),
                Some((b, r)) => (b.trim(), Some(r.trim())),
            };
            let value: u32 = base
                .parse()
                .map_err(|_| malformed("expected a positive integer"))?;
            match reps {
                None => prefix.push(value),
                Some("inf") => tail = Some(value),
                Some(r) => {
                    let count: usize =
                        r.parse().map_err(|_| malformed("bad repetition count"))?;
                    if count == 0 {
                        return Err(malformed("repetition count must be >= 1"));
                    }
                    prefix.extend(std::iter::repeat(value).take(count));
                }
            }
        }
        let tail = tail.ok_or_else(|| {
            malformed("exactly one trailing ^inf term is required (only eventually-constant sequences are supported)")
        })?;
        Self::new(prefix, tail)
    }
}

impl fmt::Display for PackingSequence {
    /// Canonical form: runs collapsed with `^`, tail as `^inf`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut i = 0;
        while i < self.prefix.len() {
            let run = self.prefix[i..].iter().take_while(|&&s| s == self.prefix[i]).count();
            if run == 1 {
                write!(f, "{},", self.prefix[i])?;
            } else {
                write!(f, "{}^{},", self.prefix[i], run)?;
            }
            i += run;
        }
        write!(f, "{}^inf", self.tail)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> PackingSequence {
        text.parse().unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(p("1,1,2^inf"), PackingSequence::new(vec![1, 1], 2).unwrap());
        assert_eq!(p("2^inf"), PackingSequence::new(vec![], 2).unwrap());
        assert!(matches!(
            "2,1^inf".parse::<PackingSequence>(),
            Err(Error::MalformedSequence(_))
        ));
    }

    #[test]
    fn parse_rejects_bad_input() {
        for bad in ["1,2", "2^inf,1", "0^inf", "1,0,2^inf", "1^0,2^inf", "^inf", "1^inf,2^inf"] {
            assert!(bad.parse::<PackingSequence>().is_err(), "{bad}");
        }
    }

    #[test]
    fn s_at_examples() {
        let s12 = p("1,2^inf");
        assert_eq!(s12.s_at(1).unwrap(), 1);
        assert_eq!(s12.s_at(5).unwrap(), 2);
        assert_eq!(p("1,1,2^inf").s_at(2).unwrap(), 1);
        assert!(s12.s_at(0).is_err());
    }

    #[test]
    fn classify_examples() {
        assert_eq!(p("2^inf").classify(), SequenceClass::AllTwos);
        assert_eq!(p("1,1,2^inf").classify(), SequenceClass::OnesThenTwos(2));
        assert_eq!(p("1,3^inf").classify(), SequenceClass::Other);
        assert_eq!(p("1^inf").classify(), SequenceClass::AllOnes);
        assert_eq!(p("1^4,2^inf").classify(), SequenceClass::OnesThenTwos(4));
    }

    #[test]
    fn display_is_canonical_and_roundtrips() {
        for (text, canon) in [
            ("1,1,2^inf", "1^2,2^inf"),
            ("2^inf", "2^inf"),
            ("1^2,2^inf", "1^2,2^inf"),
            ("1,2,2^inf", "1,2^inf"),
            ("1,2,3,3^inf", "1,2,3^inf"),
        ] {
            let s = p(text);
            assert_eq!(s.to_string(), canon);
            assert_eq!(p(&s.to_string()), s);
        }
    }

    #[test]
    fn s_at_is_non_decreasing() {
        for text in ["1,1,2^inf", "1,2,2,3^inf", "2^inf", "1^3,2^inf"] {
            let s = p(text);
            let values: Vec<u32> = (1..20).map(|i| s.s_at(i).unwrap()).collect();
            assert!(values.windows(2).all(|w| w[0] <= w[1]), "{text}");
        }
    }
}
