//! Alphabets and free-monoid words.
//!
//! Letters are whitespace-separated tokens (multi-character tokens such as
//! `x^-1` are fine); the literal token `1` stands for the empty word in all
//! textual I/O. An alphabet may carry a fixed-point-free involution pairing
//! each letter with its formal inverse, in which case free-group reduction
//! and formal inversion become available.
//!
//! Words compare under the length-lexicographic order: longer words are
//! greater, and equal-length words compare letter by letter in declaration
//! order. `Word` implements `Ord` with exactly this order, so ordered maps
//! keyed by words enumerate in length-lex order for free.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// Index of a letter within its alphabet; declaration order is the letter order.
pub type Letter = u32;

/// The reserved token that denotes the empty word in textual I/O.
pub const EMPTY_TOKEN: &str = "1";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlphabetError {
    #[error("duplicate letter token `{0}`")]
    DuplicateToken(String),
    #[error("letter token `{0}` is reserved for the empty word")]
    ReservedToken(String),
    #[error("letter tokens must be nonempty and free of whitespace, got `{0}`")]
    MalformedToken(String),
    #[error("inverse pairing must be a fixed-point-free involution")]
    BadPairing,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error("the empty-word token `1` cannot be mixed with letters")]
    MisplacedEmptyToken,
    #[error("alphabet has no inverse pairing")]
    NoPairing,
}

/// A finite ordered list of distinct letter tokens, optionally with a
/// fixed-point-free involution pairing letters with their inverses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    tokens: Vec<String>,
    index: HashMap<String, Letter>,
    pairing: Option<Vec<Letter>>,
}

impl Alphabet {
    /// Builds an alphabet without an inverse pairing. Token order is the
    /// letter order.
    pub fn new<S: AsRef<str>>(tokens: &[S]) -> Result<Self, AlphabetError> {
        let mut index = HashMap::new();
        let mut owned = Vec::with_capacity(tokens.len());
        for t in tokens {
            let t = t.as_ref();
            if t == EMPTY_TOKEN {
                return Err(AlphabetError::ReservedToken(t.to_string()));
            }
            if t.is_empty() || t.chars().any(char::is_whitespace) {
                return Err(AlphabetError::MalformedToken(t.to_string()));
            }
            if index.insert(t.to_string(), owned.len() as Letter).is_some() {
                return Err(AlphabetError::DuplicateToken(t.to_string()));
            }
            owned.push(t.to_string());
        }
        Ok(Alphabet { tokens: owned, index, pairing: None })
    }

    /// Builds the alphabet of a free group on `generators`: each generator
    /// token `x` is immediately followed by its inverse token `x^-1`, and the
    /// pairing is declared.
    pub fn free_group<S: AsRef<str>>(generators: &[S]) -> Result<Self, AlphabetError> {
        let mut tokens = Vec::with_capacity(2 * generators.len());
        for g in generators {
            tokens.push(g.as_ref().to_string());
            tokens.push(format!("{}^-1", g.as_ref()));
        }
        let mut a = Alphabet::new(&tokens)?;
        let n = a.tokens.len() as Letter;
        a.pairing = Some((0..n).map(|i| i ^ 1).collect());
        Ok(a)
    }

    /// Declares an explicit pairing as a list of index pairs covering every
    /// letter exactly once.
    pub fn with_pairing(mut self, pairs: &[(Letter, Letter)]) -> Result<Self, AlphabetError> {
        let n = self.tokens.len();
        let mut inv = vec![u32::MAX; n];
        for &(a, b) in pairs {
            let (a, b) = (a as usize, b as usize);
            if a >= n || b >= n || a == b || inv[a] != u32::MAX || inv[b] != u32::MAX {
                return Err(AlphabetError::BadPairing);
            }
            inv[a] = b as Letter;
            inv[b] = a as Letter;
        }
        if inv.iter().any(|&x| x == u32::MAX) {
            return Err(AlphabetError::BadPairing);
        }
        self.pairing = Some(inv);
        Ok(self)
    }

    /// Number of letters.
    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    /// True when the alphabet has no letters.
    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// The token of a letter.
    pub fn token(&self, l: Letter) -> &str {
        &self.tokens[l as usize]
    }

    /// All tokens in letter order.
    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    /// Looks a token up.
    pub fn letter(&self, token: &str) -> Option<Letter> {
        self.index.get(token).copied()
    }

    /// True when an inverse pairing is declared.
    pub fn has_pairing(&self) -> bool {
        self.pairing.is_some()
    }

    /// The paired inverse of a letter, when a pairing is declared.
    pub fn inverse_letter(&self, l: Letter) -> Option<Letter> {
        self.pairing.as_ref().map(|p| p[l as usize])
    }

    /// Parses a word literal: whitespace-separated tokens, or the single
    /// token `1` for the empty word.
    pub fn parse_word(&self, literal: &str) -> Result<Word, WordError> {
        let parts: Vec<&str> = literal.split_whitespace().collect();
        if parts.len() == 1 && parts[0] == EMPTY_TOKEN {
            return Ok(Word::empty());
        }
        let mut letters = Vec::with_capacity(parts.len());
        for p in parts {
            if p == EMPTY_TOKEN {
                return Err(WordError::MisplacedEmptyToken);
            }
            match self.letter(p) {
                Some(l) => letters.push(l),
                None => return Err(WordError::UnknownLetter(p.to_string())),
            }
        }
        Ok(Word(letters))
    }

    /// Formats a word as a literal; the empty word prints as `1`.
    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return EMPTY_TOKEN.to_string();
        }
        w.letters().iter().map(|&l| self.token(l)).collect::<Vec<_>>().join(" ")
    }

    /// True when every letter of `w` is a letter of this alphabet.
    pub fn contains_word(&self, w: &Word) -> bool {
        w.letters().iter().all(|&l| (l as usize) < self.tokens.len())
    }

    /// True when `w` has no adjacent inverse pair.
    pub fn is_reduced(&self, w: &Word) -> Result<bool, WordError> {
        let inv = self.pairing.as_ref().ok_or(WordError::NoPairing)?;
        Ok(w.0.windows(2).all(|p| inv[p[0] as usize] != p[1]))
    }

    /// The unique word with no adjacent inverse pair freely equivalent to `w`.
    pub fn free_reduce(&self, w: &Word) -> Result<Word, WordError> {
        let inv = self.pairing.as_ref().ok_or(WordError::NoPairing)?;
        let mut stack: Vec<Letter> = Vec::with_capacity(w.len());
        for &l in w.letters() {
            if stack.last().is_some_and(|&top| inv[top as usize] == l) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        Ok(Word(stack))
    }

    /// The reverse of `w` with every letter inverted.
    pub fn formal_inverse(&self, w: &Word) -> Result<Word, WordError> {
        let inv = self.pairing.as_ref().ok_or(WordError::NoPairing)?;
        Ok(Word(w.letters().iter().rev().map(|&l| inv[l as usize]).collect()))
    }
}

/// A free-monoid word: a finite sequence of letters of some alphabet.
///
/// `Ord` is the length-lexicographic order (length first, then letter order,
/// which coincides with letter index order).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    /// The empty word.
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// A word from raw letters.
    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    /// A single-letter word.
    pub fn single(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// The factor `self[start..end]`.
    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    /// All start positions at which `pattern` occurs as a factor, in
    /// increasing order; an empty pattern occurs at every position `0..=len`.
    pub fn occurrences(&self, pattern: &Word) -> Vec<usize> {
        if pattern.is_empty() {
            return (0..=self.len()).collect();
        }
        if pattern.len() > self.len() {
            return Vec::new();
        }
        (0..=self.len() - pattern.len())
            .filter(|&i| self.0[i..i + pattern.len()] == pattern.0[..])
            .collect()
    }

    /// Replaces the factor at `[pos, pos + old_len)` by `replacement`.
    pub fn splice(&self, pos: usize, old_len: usize, replacement: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() - old_len + replacement.len());
        v.extend_from_slice(&self.0[..pos]);
        v.extend_from_slice(&replacement.0);
        v.extend_from_slice(&self.0[pos + old_len..]);
        Word(v)
    }

    /// True when `other` is a proper suffix of `self`.
    pub fn has_proper_suffix(&self, other: &Word) -> bool {
        other.len() < self.len() && self.0[self.len() - other.len()..] == other.0[..]
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Word {
    /// Displays raw letter indices; use [`Alphabet::format_word`] for tokens.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        let s: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", s.join("."))
    }
}

/// Enumerates every word of length at most `max_len` over an alphabet of
/// `n_letters` letters, in length-lex order.
pub fn words_up_to(n_letters: usize, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut level: Vec<Word> = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(level.len() * n_letters);
        for w in &level {
            for l in 0..n_letters as Letter {
                let mut v = w.0.clone();
                v.push(l);
                next.push(Word(v));
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    out
}
