//! Eventually periodic infinite words.

use std::fmt;

use serde::Serialize;

use crate::presentation::{Letter, Word};

/// The infinite word `preperiod · period · period · …`.
///
/// Construction canonicalizes: the period is primitive and the preperiod is
/// as short as possible, so two values are equal exactly when they spell
/// the same infinite word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct EPRay {
    preperiod: Word,
    period: Word,
}

impl EPRay {
    /// Panics if `period` is empty.
    pub fn new(preperiod: Word, period: Word) -> Self {
        assert!(!period.is_empty(), "a ray needs a nonempty period");
        let mut pre = preperiod.into_letters();
        let mut per = primitive_root(period.into_letters());
        while let (Some(&a), Some(&b)) = (pre.last(), per.last()) {
            if a != b {
                break;
            }
            pre.pop();
            per.rotate_right(1);
        }
        Self { preperiod: Word::new(pre), period: Word::new(per) }
    }

    /// Ray `start · f(start_last) · f(f(start_last)) · …` for a successor map on letters.
    pub fn iterate(start: &Word, mut next: impl FnMut(Letter) -> Letter) -> Self {
        assert!(!start.is_empty(), "a ray needs a nonempty start");
        let mut tail: Vec<Letter> = Vec::new();
        let mut cur = next(start[start.len() - 1]);
        loop {
            if let Some(first) = tail.iter().position(|&l| l == cur) {
                let pre = start.concat(&tail[..first]);
                let per = Word::new(tail[first..].to_vec());
                return Self::new(pre, per);
            }
            tail.push(cur);
            cur = next(cur);
        }
    }

    pub fn preperiod(&self) -> &Word {
        &self.preperiod
    }

    pub fn period(&self) -> &Word {
        &self.period
    }

    /// Letter at zero-based position `n`.
    pub fn at(&self, n: usize) -> Letter {
        if n < self.preperiod.len() {
            self.preperiod[n]
        } else {
            self.period[(n - self.preperiod.len()) % self.period.len()]
        }
    }

    pub fn prefix(&self, n: usize) -> Word {
        (0..n).map(|i| self.at(i)).collect()
    }

    /// The ray with its first `k` letters removed.
    pub fn shift(&self, k: usize) -> Self {
        if k <= self.preperiod.len() {
            Self::new(Word::new(self.preperiod[k..].to_vec()), self.period.clone())
        } else {
            let r = (k - self.preperiod.len()) % self.period.len();
            Self::new(Word::default(), self.period.rotated(r))
        }
    }

    /// Replaces the first `k` letters by `head`.
    pub fn with_head(&self, head: &Word, k: usize) -> Self {
        let rest = self.shift(k);
        Self::new(head.concat(&rest.preperiod), rest.period)
    }

    /// Whether some shift by at least `from` letters equals `other`.
    pub fn has_suffix_from(&self, from: usize, other: &EPRay) -> bool {
        let span = self.preperiod.len().max(from) + self.period.len();
        (from..span).any(|k| self.shift(k) == *other)
    }
}

fn primitive_root(w: Vec<Letter>) -> Vec<Letter> {
    let n = w.len();
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        if (d..n).all(|i| w[i] == w[i - d]) {
            return w[..d].to_vec();
        }
    }
    w
}

impl fmt::Display for EPRay {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})^inf", self.preperiod, self.period)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::from_letters(s)
    }

    #[test]
    fn canonical_form() {
        let r = EPRay::new(w("abDb"), w("CAdb"));
        assert_eq!(r.preperiod(), &w("abD"));
        assert_eq!(r.period(), &w("bCAd"));
        assert_eq!(r, EPRay::new(w("abDbCAdb"), w("CAdbCAdb")));
        assert_eq!(r.to_string(), "abD(bCAd)^inf");
    }

    #[test]
    fn shifting_and_indexing() {
        let r = EPRay::new(w("ab"), w("cd"));
        assert_eq!(r.prefix(7), w("abcdcdc"));
        assert_eq!(r.shift(3), EPRay::new(w(""), w("dc")));
        assert_eq!(r.shift(2), r.shift(4));
        assert!(r.has_suffix_from(1, &EPRay::new(w("d"), w("cd"))));
        assert!(!r.has_suffix_from(1, &r));
    }

    #[test]
    fn iterate_detects_the_cycle() {
        let order = w("aDcCdbAB");
        let pos = |x: Letter| order.iter().position(|&l| l == x).unwrap();
        let ray = EPRay::iterate(&w("abDb"), |x| order[(pos(x.inverse()) + 4) % 8]);
        assert_eq!(ray, EPRay::new(w("abDb"), w("CAdb")));
    }
}
