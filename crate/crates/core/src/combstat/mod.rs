//! Labelled structures behind the combinatorial interpretations: strict words,
//! colored permutations, list families, Laguerre configurations, permutation
//! statistics and Laguerre histories.

mod biane;
mod configs;
mod perms;

use std::fmt;

use crate::error::{Error, Result};

pub use biane::{
    biane_inverse, biane_phi, enumerate_histories, history_stats, LaguerreHistory, Step,
};
pub use configs::{
    colored_permutations, config_weight, config_words, enumerate_configs, lemma1_check,
    lemma2_check, list_families, ColoredPermutation, ConfigWords, LaguerreConfig, ListFamily,
};
pub use perms::{moments_bruteforce, perm_stats, permutations, PermStats, Permutation};

/// A finite sequence of distinct positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        let mut seen = letters.clone();
        seen.sort_unstable();
        if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::RepeatedLetter(w[0]));
        }
        Ok(Word(letters))
    }

    pub(crate) fn from_vec_unchecked(letters: Vec<u32>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn min_letter(&self) -> Option<u32> {
        self.0.iter().copied().min()
    }

    pub fn inv(&self) -> usize {
        inv(&self.0)
    }

    pub fn rl(&self) -> Result<usize> {
        rl(&self.0)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Number of pairs `i < j` with `w_i > w_j`.
pub fn inv<T: Ord>(w: &[T]) -> usize {
    w.iter()
        .enumerate()
        .map(|(i, a)| w[i + 1..].iter().filter(|b| a > *b).count())
        .sum()
}

/// Number of letters after the maximum.
pub fn rl(w: &[u32]) -> Result<usize> {
    let (pos, _) = w
        .iter()
        .enumerate()
        .max_by_key(|(_, v)| **v)
        .ok_or(Error::EmptyWord)?;
    Ok(w.len() - 1 - pos)
}
