//! Words in distinct nonzero integer letters and their elementary statistics.
//!
//! A [`Word`] is the carrier for everything else in the crate. Permutations of
//! `[n]` are the special case whose letters are exactly `1..=n`, but the
//! recursive constructions (stack sorting, trees, `Θ`) act on sub-words, so the
//! letter set is arbitrary. The letter `0` is reserved as the sentinel of the
//! [`Boundary::Zero`] convention and is rejected.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<i32>);

/// The virtual letters `a_0` and `a_{n+1}` used when classifying letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Boundary {
    /// Sentinels compare greater than every letter.
    Top,
    /// Sentinels are the integer `0`.
    Zero,
}

impl Boundary {
    pub(crate) fn sentinel(self) -> i64 {
        match self {
            Boundary::Top => i64::MAX,
            Boundary::Zero => 0,
        }
    }
}

impl FromStr for Boundary {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "top" => Ok(Boundary::Top),
            "zero" => Ok(Boundary::Zero),
            other => Err(Error::Parse(format!("unknown boundary `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum LetterClass {
    Valley,
    Peak,
    DoubleAscent,
    DoubleDescent,
}

impl LetterClass {
    fn from_neighbors(left: i64, x: i64, right: i64) -> Self {
        match (left < x, x < right) {
            (false, true) => LetterClass::Valley,
            (true, false) => LetterClass::Peak,
            (true, true) => LetterClass::DoubleAscent,
            (false, false) => LetterClass::DoubleDescent,
        }
    }

    pub fn short(self) -> &'static str {
        match self {
            LetterClass::Valley => "V",
            LetterClass::Peak => "P",
            LetterClass::DoubleAscent => "DA",
            LetterClass::DoubleDescent => "DD",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct ClassCounts {
    pub valley: usize,
    pub peak: usize,
    pub double_ascent: usize,
    pub double_descent: usize,
}

impl Word {
    pub fn new(letters: Vec<i32>) -> Result<Self> {
        if let Some(pos) = letters.iter().position(|&a| a == 0) {
            return Err(Error::InvalidWord(format!("letter 0 at position {}", pos + 1)));
        }
        let mut seen = HashSet::with_capacity(letters.len());
        for &a in &letters {
            if !seen.insert(a) {
                return Err(Error::InvalidWord(format!("repeated letter {a}")));
            }
        }
        Ok(Word(letters))
    }

    /// Skips validation. Callers guarantee distinct nonzero letters.
    pub(crate) fn from_vec_unchecked(letters: Vec<i32>) -> Self {
        debug_assert!(Word::new(letters.clone()).is_ok());
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn identity(n: usize) -> Self {
        Word((1..=n as i32).collect())
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<i32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 0-based index of `x`.
    pub fn position(&self, x: i32) -> Option<usize> {
        self.0.iter().position(|&a| a == x)
    }

    pub fn contains(&self, x: i32) -> bool {
        self.0.contains(&x)
    }

    /// True if the letters are exactly `1..=n`.
    pub fn is_permutation(&self) -> bool {
        let n = self.0.len() as i32;
        self.0.iter().all(|&a| 1 <= a && a <= n)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &a)| a == i as i32 + 1)
    }

    pub fn sorted_letters(&self) -> Vec<i32> {
        let mut v = self.0.clone();
        v.sort_unstable();
        v
    }

    /// `{i ∈ [n-1] : a_i > a_{i+1}}`, 1-based.
    pub fn descent_set(&self) -> BTreeSet<usize> {
        self.0
            .iter()
            .tuple_windows()
            .enumerate()
            .filter(|(_, (a, b))| a > b)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn des(&self) -> usize {
        self.0.iter().tuple_windows().filter(|(a, b)| a > b).count()
    }

    pub fn maj(&self) -> usize {
        self.descent_set().into_iter().sum()
    }

    /// Value of `a_k` for `k ∈ 0..=n+1` (1-based, sentinels at both ends).
    pub(crate) fn padded(&self, k: usize, b: Boundary) -> i64 {
        if k == 0 || k == self.0.len() + 1 {
            b.sentinel()
        } else {
            self.0[k - 1] as i64
        }
    }

    /// Class of the letter at 0-based index `idx`.
    pub fn class_at(&self, idx: usize, b: Boundary) -> LetterClass {
        let k = idx + 1;
        LetterClass::from_neighbors(self.padded(k - 1, b), self.padded(k, b), self.padded(k + 1, b))
    }

    pub fn class_of(&self, x: i32, b: Boundary) -> Result<LetterClass> {
        let idx = self.position(x).ok_or(Error::LetterNotPresent(x))?;
        Ok(self.class_at(idx, b))
    }

    pub fn classify(&self, b: Boundary) -> Vec<LetterClass> {
        (0..self.0.len()).map(|i| self.class_at(i, b)).collect()
    }

    pub fn class_counts(&self, b: Boundary) -> ClassCounts {
        let mut c = ClassCounts::default();
        for class in self.classify(b) {
            match class {
                LetterClass::Valley => c.valley += 1,
                LetterClass::Peak => c.peak += 1,
                LetterClass::DoubleAscent => c.double_ascent += 1,
                LetterClass::DoubleDescent => c.double_descent += 1,
            }
        }
        c
    }

    pub fn peak(&self, b: Boundary) -> usize {
        self.class_counts(b).peak
    }

    pub fn valley(&self, b: Boundary) -> usize {
        self.class_counts(b).valley
    }

    pub fn double_ascents(&self, b: Boundary) -> usize {
        self.class_counts(b).double_ascent
    }

    pub fn double_descents(&self, b: Boundary) -> usize {
        self.class_counts(b).double_descent
    }

    /// Order-inverting relabeling within the word's own letter set.
    pub fn complement(&self) -> Word {
        let sorted = self.sorted_letters();
        let n = sorted.len();
        let letters = self
            .0
            .iter()
            .map(|a| {
                let rank = sorted.binary_search(a).expect("letter from own set");
                sorted[n - 1 - rank]
            })
            .collect();
        Word(letters)
    }

    pub fn reverse(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Inverse of a permutation of `[n]`.
    pub fn inverse(&self) -> Result<Word> {
        if !self.is_permutation() {
            return Err(Error::InvalidWord(format!("{self} is not a permutation of [n]")));
        }
        let mut inv = vec![0; self.0.len()];
        for (i, &a) in self.0.iter().enumerate() {
            inv[(a - 1) as usize] = i as i32 + 1;
        }
        Ok(Word(inv))
    }

    /// `(self ∘ other)(i) = self(other(i))` for permutations of the same `[n]`.
    pub fn compose(&self, other: &Word) -> Result<Word> {
        if !self.is_permutation() || !other.is_permutation() || self.len() != other.len() {
            return Err(Error::InvalidWord("composition needs two permutations of the same [n]".into()));
        }
        Ok(Word(other.0.iter().map(|&j| self.0[(j - 1) as usize]).collect()))
    }

    /// `d_i` for `i = 1..=k_max`: number of strictly decreasing subsequences of
    /// length `i + 1`.
    pub fn dec_subseq_counts(&self, k_max: usize) -> Vec<u64> {
        let n = self.0.len();
        // ending[j][l] = decreasing subsequences of length l+1 ending at j
        let mut ending = vec![vec![0u64; k_max + 1]; n];
        let mut totals = vec![0u64; k_max + 1];
        for j in 0..n {
            ending[j][0] = 1;
            for i in 0..j {
                if self.0[i] > self.0[j] {
                    for l in 1..=k_max {
                        ending[j][l] += ending[i][l - 1];
                    }
                }
            }
            for l in 1..=k_max {
                totals[l] += ending[j][l];
            }
        }
        totals[1..].to_vec()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(" "))
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts whitespace- or comma-separated integers, or a compact digit
    /// string such as `573148926` for a permutation of `[n]` with `n <= 9`.
    fn from_str(s: &str) -> Result<Self> {
        let tokens: Vec<&str> = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .collect();
        if tokens.len() == 1 && tokens[0].len() >= 2 && tokens[0].bytes().all(|c| c.is_ascii_digit()) {
            let digits: Vec<i32> = tokens[0].bytes().map(|c| (c - b'0') as i32).collect();
            if let Ok(w) = Word::new(digits) {
                if w.is_permutation() {
                    return Ok(w);
                }
            }
        }
        let letters = tokens
            .iter()
            .map(|t| t.parse::<i32>().map_err(|e| Error::Parse(format!("`{t}`: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Word::new(letters)
    }
}

impl TryFrom<Vec<i32>> for Word {
    type Error = Error;

    fn try_from(v: Vec<i32>) -> Result<Self> {
        Word::new(v)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parse helper for tests and examples. Panics on malformed input.
pub fn w(s: &str) -> Word {
    s.parse().unwrap_or_else(|e| panic!("bad word literal {s:?}: {e}"))
}
