use alloc::string::String;
use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::{Error, Result};

/// Ordered set of tokens; row `i` of an embedding matrix belongs to `words()[i]`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Vocabulary {
    words: Vec<String>,
    index: HashMap<String, usize>,
}

impl Vocabulary {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(n: usize) -> Self {
        Vocabulary {
            words: Vec::with_capacity(n),
            index: HashMap::with_capacity(n),
        }
    }

    /// Builds a vocabulary from tokens in order. Duplicates are an error.
    pub fn from_words<I, S>(words: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut vocab = Vocabulary::new();
        for w in words {
            let w = w.into();
            if vocab.contains(&w) {
                return Err(Error::DuplicateToken(w));
            }
            vocab.insert(w);
        }
        Ok(vocab)
    }

    /// Appends `word` and returns its row id, or `None` if it is already present.
    pub fn insert(&mut self, word: String) -> Option<usize> {
        if self.index.contains_key(&word) {
            return None;
        }
        let id = self.words.len();
        self.index.insert(word.clone(), id);
        self.words.push(word);
        Some(id)
    }

    pub fn get(&self, word: &str) -> Option<usize> {
        self.index.get(word).copied()
    }

    pub fn contains(&self, word: &str) -> bool {
        self.index.contains_key(word)
    }

    pub fn words(&self) -> &[String] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}
