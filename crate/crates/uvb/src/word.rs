//! Generator words over the braid letters σ_i and the symmetric letters ρ_i.
//!
//! Words are purely syntactic: no relation is ever applied here. The token
//! grammar is `s<i>` for σ_i, `S<i>` for σ_i⁻¹, and `r<i>` or `R<i>` for the
//! involution ρ_i, with tokens separated by whitespace or `.`.

use crate::Error;
use std::fmt;

/// Letters past this count are rejected by [`BraidWord::parse`]; use
/// [`BraidWord::parse_with_limit`] to override.
pub const DEFAULT_MAX_LETTERS: usize = 1_000_000;

/// A single generator of UVB_n. Indices are 1-based and range over
/// `1..=n-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    /// σ_i
    Sigma(usize),
    /// σ_i⁻¹
    SigmaInv(usize),
    /// ρ_i, its own inverse
    Rho(usize),
}

impl Letter {
    pub fn index(self) -> usize {
        match self {
            Letter::Sigma(i) | Letter::SigmaInv(i) | Letter::Rho(i) => i,
        }
    }

    pub fn inverse(self) -> Letter {
        match self {
            Letter::Sigma(i) => Letter::SigmaInv(i),
            Letter::SigmaInv(i) => Letter::Sigma(i),
            Letter::Rho(i) => Letter::Rho(i),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Sigma(i) => write!(f, "s{i}"),
            Letter::SigmaInv(i) => write!(f, "S{i}"),
            Letter::Rho(i) => write!(f, "r{i}"),
        }
    }
}

/// A word in the generators of UVB_n, tagged with its strand count.
///
/// The strand count is part of the value: words on different strand counts
/// never mix, and operations that combine words panic on a mismatch rather
/// than guessing an embedding.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    /// The empty word on `n` strands.
    pub fn empty(n: usize) -> Self {
        assert!(n >= 1, "strand count must be at least 1");
        BraidWord { n, letters: Vec::new() }
    }

    /// Builds a word from letters, checking every index against `n`.
    pub fn new(n: usize, letters: Vec<Letter>) -> Result<Self, Error> {
        assert!(n >= 1, "strand count must be at least 1");
        for l in &letters {
            let i = l.index();
            if i == 0 || i >= n {
                return Err(Error::IndexOutOfRange { index: i, n });
            }
        }
        Ok(BraidWord { n, letters })
    }

    /// Parses with the default length limit. See [`BraidWord::parse_with_limit`].
    pub fn parse(text: &str, n: Option<usize>) -> Result<Self, Error> {
        BraidWord::parse_with_limit(text, n, DEFAULT_MAX_LETTERS)
    }

    /// Parses a token sequence into a word.
    ///
    /// With `n = None` the strand count is inferred as one more than the
    /// largest generator index (and an empty word becomes the identity on a
    /// single strand). With an explicit `n`, indices must fit in `1..=n-1`.
    pub fn parse_with_limit(text: &str, n: Option<usize>, limit: usize) -> Result<Self, Error> {
        if let Some(n) = n {
            assert!(n >= 1, "strand count must be at least 1");
        }
        let tokens: Vec<&str> = text
            .split(|c: char| c.is_whitespace() || c == '.')
            .filter(|t| !t.is_empty())
            .collect();
        if tokens.len() > limit {
            return Err(Error::WordTooLong { len: tokens.len(), limit });
        }
        let mut letters = Vec::with_capacity(tokens.len());
        let mut max_index = 0;
        for (position, token) in tokens.iter().enumerate() {
            let bad = || Error::BadToken { token: token.to_string(), position };
            let mut chars = token.chars();
            let head = chars.next().ok_or_else(bad)?;
            let digits = chars.as_str();
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let index: usize = digits.parse().map_err(|_| bad())?;
            if index == 0 {
                return Err(Error::ZeroIndex { position });
            }
            let letter = match head {
                's' => Letter::Sigma(index),
                'S' => Letter::SigmaInv(index),
                'r' | 'R' => Letter::Rho(index),
                _ => return Err(bad()),
            };
            if let Some(n) = n {
                if index >= n {
                    return Err(Error::IndexOutOfRange { index, n });
                }
            }
            max_index = max_index.max(index);
            letters.push(letter);
        }
        let n = n.unwrap_or(if letters.is_empty() { 1 } else { max_index + 1 });
        Ok(BraidWord { n, letters })
    }

    /// The canonical token string; [`BraidWord::parse`] inverts it exactly.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                out.push(' ');
            }
            out.push_str(&l.to_string());
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation. Panics when the strand counts differ.
    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        assert_eq!(
            self.n, other.n,
            "cannot concatenate words on {} and {} strands",
            self.n, other.n
        );
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { n: self.n, letters }
    }

    /// The formal inverse: letters reversed, σ-letters inverted, ρ-letters
    /// kept (they are involutions).
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
