//! Presentations of surface groups: letters, words, relators and the
//! symmetrized table of cyclic relator shifts.
//!
//! Two textual forms are accepted. The integer form writes one relator per
//! line as signed generator indices (`1 2 1 -2 4`); the letter form uses
//! `a..z` for generators 1..26 and upper case for their inverses (`abaBd`).
//! Several relators may share a line when separated by `/`, `#` starts a
//! comment, and a JSON array of integer arrays is also accepted.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{NotGeometric, SyntaxError};

/// A generator (positive) or the inverse of a generator (negative).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "i32", into = "i32")]
pub struct Letter(i32);

impl Letter {
    pub fn new(value: i32) -> Option<Letter> {
        (value != 0).then_some(Letter(value))
    }

    pub fn value(self) -> i32 {
        self.0
    }

    /// Index of the underlying generator, starting at 1.
    pub fn generator(self) -> u32 {
        self.0.unsigned_abs()
    }

    pub fn is_inverse(self) -> bool {
        self.0 < 0
    }

    pub fn inverse(self) -> Letter {
        Letter(-self.0)
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'a'..='z' => Some(Letter(c as i32 - 'a' as i32 + 1)),
            'A'..='Z' => Some(Letter(-(c as i32 - 'A' as i32 + 1))),
            _ => None,
        }
    }

    pub fn to_char(self) -> Option<char> {
        let g = self.generator();
        if g > 26 {
            return None;
        }
        let base = if self.is_inverse() { b'A' } else { b'a' };
        Some((base + (g - 1) as u8) as char)
    }
}

impl TryFrom<i32> for Letter {
    type Error = String;

    fn try_from(value: i32) -> Result<Self, Self::Error> {
        Letter::new(value).ok_or_else(|| "0 is not a letter".to_string())
    }
}

impl From<Letter> for i32 {
    fn from(l: Letter) -> i32 {
        l.0
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_char() {
            Some(c) => write!(f, "{c}"),
            None if self.is_inverse() => write!(f, "G{}", self.generator()),
            None => write!(f, "g{}", self.generator()),
        }
    }
}

/// A finite word over the letters.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    /// Builds a word from letter notation. Panics on characters outside `a..zA..Z`.
    pub fn from_letters(s: &str) -> Word {
        Word(
            s.chars()
                .map(|c| Letter::from_char(c).unwrap_or_else(|| panic!("not a letter: {c:?}")))
                .collect(),
        )
    }

    pub fn from_ints(values: &[i32]) -> Option<Word> {
        values.iter().map(|&v| Letter::new(v)).collect::<Option<Vec<_>>>().map(Word)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn to_ints(&self) -> Vec<i32> {
        self.0.iter().map(|l| l.value()).collect()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Cyclic rotation starting at position `start`.
    pub fn rotated(&self, start: usize) -> Word {
        let n = self.0.len();
        if n == 0 {
            return Word::default();
        }
        let s = start % n;
        Word(self.0[s..].iter().chain(&self.0[..s]).copied().collect())
    }

    pub fn concat(&self, other: &[Letter]) -> Word {
        Word(self.0.iter().chain(other).copied().collect())
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Word {
        Word(v)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Word {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|l| l.generator() <= 26) {
            for l in &self.0 {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|l| l.value().to_string()).collect();
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// A defining relation, stored exactly as written.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Relator(Word);

impl Relator {
    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// A validated presentation `<x_1..x_N | R>`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Presentation {
    n_generators: u32,
    relators: Vec<Relator>,
}

impl Presentation {
    /// Validates raw integer relators against the input conventions.
    pub fn from_int_relators(raw: Vec<Vec<i32>>) -> Result<Presentation, SyntaxError> {
        let mut relators = Vec::with_capacity(raw.len());
        for r in raw {
            let word = Word::from_ints(&r).ok_or(SyntaxError::ZeroLetter { line: relators.len() + 1 })?;
            relators.push(word);
        }
        Presentation::from_words(relators)
    }

    pub fn from_words(words: Vec<Word>) -> Result<Presentation, SyntaxError> {
        if words.is_empty() {
            return Err(SyntaxError::Empty);
        }
        for (i, w) in words.iter().enumerate() {
            if w.len() < 3 {
                return Err(SyntaxError::ShortRelator { index: i + 1, len: w.len() });
            }
        }
        let n = words.iter().flat_map(|w| w.iter()).map(|l| l.generator()).max().unwrap_or(0);
        for g in 1..=n {
            if !words.iter().flat_map(|w| w.iter()).any(|l| l.generator() == g) {
                return Err(SyntaxError::GeneratorGap { missing: g, n });
            }
        }
        if n < 3 {
            return Err(SyntaxError::TooFewGenerators(n));
        }
        if n == 3 && words.len() == 2 && words.iter().all(|w| w.len() == 3) {
            return Err(SyntaxError::RankTwo);
        }
        for i in 0..words.len() {
            for j in i + 1..words.len() {
                if words[i] == words[j] {
                    return Err(SyntaxError::DuplicateRelator { first: i + 1, second: j + 1 });
                }
            }
        }
        Ok(Presentation { n_generators: n, relators: words.into_iter().map(Relator).collect() })
    }

    pub fn n_generators(&self) -> u32 {
        self.n_generators
    }

    /// Size of the symmetric generating set, `2N`.
    pub fn alphabet_size(&self) -> usize {
        2 * self.n_generators as usize
    }

    pub fn relators(&self) -> &[Relator] {
        &self.relators
    }

    pub fn total_length(&self) -> usize {
        self.relators.iter().map(Relator::len).sum()
    }

    pub fn max_relator_length(&self) -> usize {
        self.relators.iter().map(Relator::len).max().unwrap_or(0)
    }

    /// Letter form, one relator per line, or `None` beyond 26 generators.
    pub fn to_letter_form(&self) -> Option<String> {
        if self.n_generators > 26 {
            return None;
        }
        let lines: Vec<String> = self.relators.iter().map(|r| r.word().to_string()).collect();
        Some(lines.join("\n"))
    }

    pub fn to_integer_form(&self) -> String {
        let lines: Vec<String> = self
            .relators
            .iter()
            .map(|r| r.word().iter().map(|l| l.value().to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        lines.join("\n")
    }

    pub fn to_int_relators(&self) -> Vec<Vec<i32>> {
        self.relators.iter().map(|r| r.word().to_ints()).collect()
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.relators.iter().map(|r| r.word().to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Parses a presentation in integer form, letter form or JSON.
pub fn parse(input: &str) -> Result<Presentation, SyntaxError> {
    let trimmed = input.trim_start();
    if trimmed.starts_with('[') {
        let raw: Vec<Vec<i64>> = serde_json::from_str(trimmed).map_err(|e| SyntaxError::Json(e.to_string()))?;
        let mut relators = Vec::with_capacity(raw.len());
        for r in raw {
            let ints = r
                .into_iter()
                .map(|v| i32::try_from(v).map_err(|_| SyntaxError::Json(format!("letter {v} out of range"))))
                .collect::<Result<Vec<_>, _>>()?;
            relators.push(ints);
        }
        return Presentation::from_int_relators(relators);
    }

    let mut words = Vec::new();
    for (lineno, line) in input.lines().enumerate() {
        let line_no = lineno + 1;
        let content = line.split('#').next().unwrap_or("");
        for chunk in content.split('/') {
            let chunk = chunk.trim();
            if chunk.is_empty() {
                continue;
            }
            words.push(parse_relator(chunk, line_no)?);
        }
    }
    Presentation::from_words(words)
}

fn parse_relator(chunk: &str, line: usize) -> Result<Word, SyntaxError> {
    let numeric = chunk.chars().any(|c| c.is_ascii_digit() || c == '-');
    if numeric {
        let mut letters = Vec::new();
        for tok in chunk.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let v: i32 = tok.parse().map_err(|_| SyntaxError::BadToken { line, token: tok.to_string() })?;
            letters.push(Letter::new(v).ok_or(SyntaxError::ZeroLetter { line })?);
        }
        Ok(Word(letters))
    } else {
        chunk
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| Letter::from_char(c).ok_or(SyntaxError::BadToken { line, token: c.to_string() }))
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}

/// Checks that every generator occurs exactly twice, signs ignored.
pub fn occurrence_check(p: &Presentation) -> Result<(), NotGeometric> {
    let mut counts = vec![0usize; p.n_generators as usize + 1];
    for l in p.relators.iter().flat_map(|r| r.word().iter()) {
        counts[l.generator() as usize] += 1;
    }
    for (g, &count) in counts.iter().enumerate().skip(1) {
        if count != 2 {
            return Err(NotGeometric::Occurrence { generator: Letter(g as i32), count });
        }
    }
    Ok(())
}

/// All cyclic shifts of the relators and of their inverses, indexed by first letter.
#[derive(Debug, Clone)]
pub struct ShiftTable {
    shifts: Vec<Word>,
    by_first: BTreeMap<Letter, Vec<usize>>,
}

impl ShiftTable {
    pub fn new(p: &Presentation) -> ShiftTable {
        let mut shifts = Vec::with_capacity(2 * p.total_length());
        for r in &p.relators {
            for w in [r.word().clone(), r.word().inverse()] {
                for s in 0..w.len() {
                    shifts.push(w.rotated(s));
                }
            }
        }
        let mut by_first: BTreeMap<Letter, Vec<usize>> = BTreeMap::new();
        for (i, s) in shifts.iter().enumerate() {
            by_first.entry(s[0]).or_default().push(i);
        }
        ShiftTable { shifts, by_first }
    }

    pub fn len(&self) -> usize {
        self.shifts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shifts.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Word> {
        self.shifts.iter()
    }

    pub fn starting_with(&self, x: Letter) -> Vec<&Word> {
        self.by_first
            .get(&x)
            .map(|ix| ix.iter().map(|&i| &self.shifts[i]).collect())
            .unwrap_or_default()
    }
}

/// Convenience wrapper over [`ShiftTable::new`].
pub fn symmetrized_shifts(p: &Presentation) -> ShiftTable {
    ShiftTable::new(p)
}
