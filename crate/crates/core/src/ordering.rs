//! The clockwise order of the letters around a vertex of the planar Cayley
//! graph, found by gluing relator cells around the identity, and the
//! orientation behavior of each letter.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, NotGeometric, Result};
use crate::presentation::{Letter, Presentation, ShiftTable, Word};

/// The 2N letters in clockwise order, with the cell word glued in each corner.
///
/// Positions are zero-based and taken modulo 2N. The cell word at position
/// `i` starts with the letter at `i` and ends with the inverse of the letter
/// at `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicOrder {
    letters: Vec<Letter>,
    cells: Vec<Word>,
    position: Vec<usize>,
    n_generators: usize,
}

impl CyclicOrder {
    fn new(letters: Vec<Letter>, cells: Vec<Word>) -> Self {
        let n_generators = letters.len() / 2;
        let mut position = vec![usize::MAX; 2 * n_generators + 1];
        for (i, l) in letters.iter().enumerate() {
            position[slot(*l, n_generators)] = i;
        }
        Self { letters, cells, position, n_generators }
    }

    /// Number of letters, 2N.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn n_generators(&self) -> usize {
        self.n_generators
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Letter at a position, taken modulo 2N.
    pub fn letter(&self, i: usize) -> Letter {
        self.letters[i % self.len()]
    }

    pub fn position(&self, x: Letter) -> usize {
        let p = self.position[slot(x, self.n_generators)];
        assert!(p != usize::MAX, "letter {x} is not in the order");
        p
    }

    pub fn cell_word(&self, i: usize) -> &Word {
        &self.cells[i % self.len()]
    }

    pub fn cells(&self) -> &[Word] {
        &self.cells
    }

    /// Clockwise successor.
    pub fn succ(&self, x: Letter) -> Letter {
        self.letter(self.position(x) + 1)
    }

    /// Clockwise predecessor.
    pub fn pred(&self, x: Letter) -> Letter {
        self.letter(self.position(x) + self.len() - 1)
    }

    /// The letter N places away.
    pub fn opposite(&self, x: Letter) -> Letter {
        self.letter(self.position(x) + self.n_generators)
    }

    pub fn are_adjacent(&self, x: Letter, y: Letter) -> bool {
        self.succ(x) == y || self.pred(x) == y
    }

    pub fn to_ints(&self) -> Vec<i32> {
        self.letters.iter().map(|l| l.value()).collect()
    }
}

/// Index of a letter in a table of size 2N + 1.
fn slot(x: Letter, n: usize) -> usize {
    (x.value() + n as i32) as usize
}

impl Serialize for CyclicOrder {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_ints().serialize(serializer)
    }
}

impl fmt::Display for CyclicOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Preserving,
    Reversing,
}

impl Orientation {
    pub fn sign(self) -> i32 {
        match self {
            Orientation::Preserving => 1,
            Orientation::Reversing => -1,
        }
    }
}

/// Orientation behavior of every letter, stored by position in the order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientationMap {
    by_position: Vec<Orientation>,
}

impl OrientationMap {
    pub fn at(&self, position: usize) -> Orientation {
        self.by_position[position % self.by_position.len()]
    }

    pub fn of(&self, order: &CyclicOrder, x: Letter) -> Orientation {
        self.at(order.position(x))
    }

    pub fn sign(&self, position: usize) -> i32 {
        self.at(position).sign()
    }

    pub fn signs(&self) -> Vec<i32> {
        self.by_position.iter().map(|o| o.sign()).collect()
    }
}

/// Walks around the identity gluing cells, starting from the cell `seed`.
///
/// Returns the letters in the order met together with the cell word chosen
/// at each, without any rotation applied.
pub fn walk_from(shifts: &ShiftTable, n_generators: usize, seed: &Word) -> Result<(Vec<Letter>, Vec<Word>), NotGeometric> {
    let mut letters = vec![seed[0]];
    let mut cells = vec![seed.clone()];
    let mut prev = seed.clone();
    let mut cur = seed[seed.len() - 1].inverse();
    loop {
        let mut candidates = shifts.starting_with(cur);
        if candidates.len() != 2 {
            return Err(NotGeometric::ShiftCount { letter: cur, count: candidates.len() });
        }
        let excluded = prev.inverse();
        let Some(k) = candidates.iter().position(|w| **w == excluded) else {
            return Err(NotGeometric::Stuck { letter: cur });
        };
        candidates.remove(k);
        let cell = candidates[0].clone();
        if cur == letters[0] {
            return if letters.len() < 2 * n_generators {
                Err(NotGeometric::ClosedEarly { found: letters.len(), expected: 2 * n_generators })
            } else if cell == cells[0] {
                Ok((letters, cells))
            } else {
                Err(NotGeometric::Closure)
            };
        }
        if letters.contains(&cur) {
            return Err(NotGeometric::Repeated { letter: cur, found: letters.len() });
        }
        letters.push(cur);
        cur = cell[cell.len() - 1].inverse();
        cells.push(cell.clone());
        prev = cell;
    }
}

/// Decides geometricity by gluing cells around the identity.
///
/// The walk is seeded with the first relator as written, which fixes the
/// clockwise sense. The result is rotated so that the first generator leads.
pub fn compute_cyclic_order(p: &Presentation) -> Result<CyclicOrder, NotGeometric> {
    let shifts = ShiftTable::new(p);
    let seed = p.relators()[0].word();
    let (letters, cells) = walk_from(&shifts, p.n_generators() as usize, seed)?;
    Ok(canonical_rotation(letters, cells))
}

fn canonical_rotation(mut letters: Vec<Letter>, mut cells: Vec<Word>) -> CyclicOrder {
    let first = Letter::new(1).expect("nonzero");
    let r = letters.iter().position(|&l| l == first).expect("generator 1 is present");
    letters.rotate_left(r);
    cells.rotate_left(r);
    CyclicOrder::new(letters, cells)
}

/// Preserving when the inverse of `x` follows the second letter of the cell at `x` clockwise,
/// reversing when it precedes it.
pub fn orientation_of(o: &CyclicOrder, x: Letter) -> Result<Orientation> {
    let cell = o.cell_word(o.position(x));
    let second = cell[1];
    let forward = o.succ(second) == x.inverse();
    let backward = o.pred(second) == x.inverse();
    match (forward, backward) {
        (true, false) => Ok(Orientation::Preserving),
        (false, true) => Ok(Orientation::Reversing),
        _ => Err(Error::InternalInconsistency(format!(
            "the inverse of {x} is {} the letter {second} in the cyclic order",
            if forward { "on both sides of" } else { "not next to" }
        ))),
    }
}

pub fn orientation_map(o: &CyclicOrder) -> Result<OrientationMap> {
    let by_position = o.letters().iter().map(|&x| orientation_of(o, x)).collect::<Result<Vec<_>>>()?;
    Ok(OrientationMap { by_position })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::parse;

    fn letters(s: &str) -> Vec<Letter> {
        Word::from_letters(s).into_letters()
    }

    #[test]
    fn golden_orders() {
        let p3 = compute_cyclic_order(&parse("abaBd / ccd").unwrap()).unwrap();
        assert_eq!(p3.letters(), letters("aDcCdbAB").as_slice());
        let p4 = compute_cyclic_order(&parse("abABcdCD").unwrap()).unwrap();
        assert_eq!(p4.letters(), letters("adCDcbAB").as_slice());
    }

    #[test]
    fn cell_words_link_neighbours() {
        for input in ["abaBd / ccd", "abABcdCD", "aabbccdd", "abcdABCD"] {
            let o = compute_cyclic_order(&parse(input).unwrap()).unwrap();
            for i in 0..o.len() {
                let w = o.cell_word(i);
                assert_eq!(w[0], o.letter(i));
                assert_eq!(w[w.len() - 1].inverse(), o.letter(i + 1));
            }
        }
    }

    #[test]
    fn p1_closes_early() {
        let err = compute_cyclic_order(&parse("adac / cbdb").unwrap()).unwrap_err();
        assert_eq!(err, NotGeometric::ClosedEarly { found: 4, expected: 8 });
    }

    #[test]
    fn opposite_letters() {
        let o = compute_cyclic_order(&parse("abaBd / ccd").unwrap()).unwrap();
        let l = |c| Letter::from_char(c).unwrap();
        assert_eq!(o.opposite(l('B')), l('C'));
        assert_eq!(o.opposite(l('a')), l('d'));
        for &x in o.letters() {
            assert_eq!(o.opposite(o.opposite(x)), x);
        }
    }

    #[test]
    fn orientation_golden() {
        let o3 = compute_cyclic_order(&parse("abaBd / ccd").unwrap()).unwrap();
        let m3 = orientation_map(&o3).unwrap();
        let reversing: Vec<Letter> =
            o3.letters().iter().copied().filter(|&x| m3.of(&o3, x) == Orientation::Reversing).collect();
        let mut want = letters("cCbB");
        let mut got = reversing;
        want.sort();
        got.sort();
        assert_eq!(got, want);

        let o4 = compute_cyclic_order(&parse("abABcdCD").unwrap()).unwrap();
        let m4 = orientation_map(&o4).unwrap();
        assert!(m4.signs().iter().all(|&s| s == 1));
    }
}
