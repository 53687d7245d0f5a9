//! Words in the generators and their inverses.
//!
//! Letters refer to generators by index into the owning graph's vertex list.
//! Only free reduction happens here; commutation-aware normal forms for the
//! right-angled case live in [`crate::ball`].

use std::fmt::Write as _;

use thiserror::Error;

/// A signed letter: a generator index plus an inversion flag.
///
/// The derived ordering (index first, positive before negative) is the letter
/// order used by lexicographic normal forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub gen: usize,
    pub inv: bool,
}

impl Letter {
    pub fn new(gen: usize, inv: bool) -> Self {
        Letter { gen, inv }
    }

    pub fn positive(gen: usize) -> Self {
        Letter { gen, inv: false }
    }

    pub fn inverse(self) -> Self {
        Letter {
            gen: self.gen,
            inv: !self.inv,
        }
    }
}

/// A freely reduced word over signed letters.
///
/// Construction goes through [`Word::push`], which cancels an appended letter
/// against an inverse trailing letter, so adjacent `x x^-1` pairs never
/// survive. Commutation relations are not applied.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut w = Word::identity();
        for l in letters {
            w.push(l);
        }
        w
    }

    /// Appends a letter, cancelling it against the trailing letter when they
    /// are mutually inverse.
    pub fn push(&mut self, l: Letter) {
        if self.0.last() == Some(&l.inverse()) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &l in other.letters() {
            w.push(l);
        }
        w
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Renders the word with generator names, `^-1` marking inverses and `1`
    /// standing for the empty word.
    pub fn display(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        let mut out = String::new();
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{}", names[l.gen]);
            if l.inv {
                out.push_str("^-1");
            }
        }
        out
    }

    /// Letter tokens (`s`, `t^-1`, ...) for serialization.
    pub fn tokens(&self, names: &[String]) -> Vec<String> {
        self.0
            .iter()
            .map(|l| {
                if l.inv {
                    format!("{}^-1", names[l.gen])
                } else {
                    names[l.gen].clone()
                }
            })
            .collect()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordParseError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("malformed letter token `{0}` (expected `name` or `name^-1`)")]
    MalformedLetter(String),
}

/// Parses one letter token of the form `name` or `name^-1`.
pub fn parse_letter(token: &str, names: &[String]) -> Result<Letter, WordParseError> {
    let (base, inv) = match token.split_once('^') {
        None => (token, false),
        Some((base, "-1")) => (base, true),
        Some(_) => return Err(WordParseError::MalformedLetter(token.to_string())),
    };
    match names.iter().position(|n| n == base) {
        Some(gen) => Ok(Letter { gen, inv }),
        None => Err(WordParseError::UnknownGenerator(base.to_string())),
    }
}

/// Parses a sequence of letter tokens into a freely reduced word.
pub fn parse_word<S: AsRef<str>>(tokens: &[S], names: &[String]) -> Result<Word, WordParseError> {
    let mut w = Word::identity();
    for t in tokens {
        w.push(parse_letter(t.as_ref(), names)?);
    }
    Ok(w)
}
