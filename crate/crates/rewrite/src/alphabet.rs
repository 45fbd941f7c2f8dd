use std::collections::HashMap;
use std::fmt;

use crate::RewriteError;

/// An interned letter. The numeric value is the declaration index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(pub u32);

impl Letter {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

pub type Word = Vec<Letter>;

/// Ordered set of named letters with an optional involution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    lookup: HashMap<String, Letter>,
    involution: Option<Vec<Letter>>,
}

impl Alphabet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self, RewriteError> {
        let mut lookup = HashMap::new();
        let mut out = Vec::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            let n = n.as_ref().to_string();
            if n.is_empty() || n.chars().any(char::is_whitespace) || n == "_" {
                return Err(RewriteError::BadLetterName(n));
            }
            if lookup.insert(n.clone(), Letter(i as u32)).is_some() {
                return Err(RewriteError::DuplicateLetter(n));
            }
            out.push(n);
        }
        Ok(Alphabet { names: out, lookup, involution: None })
    }

    /// Attach an involution given as the image of every letter.
    pub fn with_involution(mut self, images: Vec<Letter>) -> Result<Self, RewriteError> {
        if images.len() != self.names.len() {
            return Err(RewriteError::BadInvolution("wrong length".into()));
        }
        for (i, &x) in images.iter().enumerate() {
            if x.index() >= self.names.len() || images[x.index()] != Letter(i as u32) {
                return Err(RewriteError::BadInvolution(self.names[i].clone()));
            }
        }
        self.involution = Some(images);
        Ok(self)
    }

    /// Letters named `x` and `x~` become partners; unpaired letters are fixed.
    pub fn with_tilde_involution<S: AsRef<str>>(names: &[S]) -> Result<Self, RewriteError> {
        let a = Alphabet::new(names)?;
        let mut images: Vec<Letter> = (0..a.len() as u32).map(Letter).collect();
        let mut any = false;
        for (i, n) in a.names.iter().enumerate() {
            if let Some(base) = n.strip_suffix('~') {
                if let Some(&b) = a.lookup.get(base) {
                    images[i] = b;
                    images[b.index()] = Letter(i as u32);
                    any = true;
                }
            }
        }
        if any {
            a.with_involution(images)
        } else {
            Ok(a)
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        (0..self.names.len() as u32).map(Letter)
    }

    pub fn name(&self, x: Letter) -> &str {
        &self.names[x.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn letter(&self, name: &str) -> Option<Letter> {
        self.lookup.get(name).copied()
    }

    pub fn involution(&self) -> Option<&[Letter]> {
        self.involution.as_deref()
    }

    pub fn inverse(&self, x: Letter) -> Option<Letter> {
        self.involution.as_ref().map(|v| v[x.index()])
    }

    /// Formal inverse of a word under the involution.
    pub fn invert(&self, w: &[Letter]) -> Option<Word> {
        let inv = self.involution.as_ref()?;
        Some(w.iter().rev().map(|x| inv[x.index()]).collect())
    }

    pub fn contains(&self, x: Letter) -> bool {
        x.index() < self.names.len()
    }

    /// Parse a whitespace-separated word; `_` alone is the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word, RewriteError> {
        let mut w = Vec::new();
        for tok in text.split_whitespace() {
            if tok == "_" {
                continue;
            }
            match self.lookup.get(tok) {
                Some(&x) => w.push(x),
                None => return Err(RewriteError::UnknownLetter(tok.to_string())),
            }
        }
        Ok(w)
    }

    pub fn check_word(&self, w: &[Letter]) -> Result<(), RewriteError> {
        match w.iter().find(|x| !self.contains(**x)) {
            Some(x) => Err(RewriteError::UnknownLetter(format!("#{}", x.0))),
            None => Ok(()),
        }
    }

    pub fn display<'a>(&'a self, w: &'a [Letter]) -> DisplayWord<'a> {
        DisplayWord { alphabet: self, word: w }
    }
}

pub struct DisplayWord<'a> {
    alphabet: &'a Alphabet,
    word: &'a [Letter],
}

impl fmt::Display for DisplayWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("_");
        }
        for (i, x) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(self.alphabet.name(*x))?;
        }
        Ok(())
    }
}
