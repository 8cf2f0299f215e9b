//! Minimal bigons between adjacent letters, their extensions, and the
//! centered continuation that defines the middle cutting points.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ordering::{CyclicOrder, OrientationMap};
use crate::presentation::{Letter, Presentation, ShiftTable, Word};
use crate::ray::EPRay;

/// Two geodesic words of equal length from a common start to a common end.
///
/// `left` starts with the clockwise predecessor of the first letter of `right`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Bigon {
    pub left: Word,
    pub right: Word,
}

impl Bigon {
    pub fn new(left: Word, right: Word) -> Self {
        debug_assert_eq!(left.len(), right.len());
        Self { left, right }
    }

    /// Common length of the two sides.
    pub fn len(&self) -> usize {
        self.left.len()
    }

    pub fn is_empty(&self) -> bool {
        self.left.is_empty()
    }

    /// The side starting with `x`, if either does.
    pub fn side_starting_with(&self, x: Letter) -> Option<&Word> {
        if self.left.first() == Some(&x) {
            Some(&self.left)
        } else if self.right.first() == Some(&x) {
            Some(&self.right)
        } else {
            None
        }
    }
}

/// Grows the cell word `cell` by gluing cells at its central letter until its
/// length is even, then folds it into a bigon.
pub fn bigon_from_cell(shifts: &ShiftTable, cell: &Word, cap: usize) -> Result<Bigon> {
    let mut boundary: Vec<Letter> = cell.to_vec();
    // The cell on the inner side of each boundary edge, read from that edge.
    let mut inside: Vec<Word> = (0..cell.len()).map(|i| cell.rotated(i)).collect();
    let mut steps = 0;
    while boundary.len() % 2 == 1 {
        steps += 1;
        if steps > cap {
            return Err(Error::IterationCapExceeded {
                left: cell[0],
                right: cell[cell.len() - 1].inverse(),
                cap,
            });
        }
        let c = (boundary.len() - 1) / 2;
        let mut candidates = shifts.starting_with(boundary[c]);
        let Some(k) = candidates.iter().position(|w| **w == inside[c]) else {
            return Err(Error::InternalInconsistency(format!(
                "no relator shift glues onto {} at the middle of {}",
                boundary[c],
                Word::new(boundary.clone())
            )));
        };
        candidates.remove(k);
        let Some(glued) = candidates.first() else {
            return Err(Error::InternalInconsistency(format!("letter {} has a single relator shift", boundary[c])));
        };
        let glued = (*glued).clone();
        let outer = glued.inverse();
        let replacement: Vec<Letter> = Word::new(glued[1..].to_vec()).inverse().into_letters();
        let replacement_inside: Vec<Word> = (0..replacement.len()).map(|i| outer.rotated(i)).collect();
        boundary.splice(c..=c, replacement);
        inside.splice(c..=c, replacement_inside);
    }
    let h = boundary.len() / 2;
    let left = Word::new(boundary[..h].to_vec());
    let right = Word::new(boundary[h..].to_vec()).inverse();
    Ok(Bigon::new(left, right))
}

/// Minimal bigon between clockwise-adjacent letters `x` and `y`.
pub fn minimal_bigon(p: &Presentation, o: &CyclicOrder, x: Letter, y: Letter) -> Result<Bigon> {
    if o.succ(x) != y {
        return Err(Error::InternalInconsistency(format!("{y} does not follow {x} clockwise")));
    }
    let shifts = ShiftTable::new(p);
    bigon_from_cell(&shifts, o.cell_word(o.position(x)), 4 * p.total_length())
}

/// The minimal bigon at every cutting point.
///
/// Entry `i` is the bigon between the letters at positions `i - 1` and `i`,
/// so its right word starts with the letter at `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct MinimalBigons {
    bigons: Vec<Bigon>,
}

impl MinimalBigons {
    pub fn compute(p: &Presentation, o: &CyclicOrder) -> Result<Self> {
        let shifts = ShiftTable::new(p);
        let cap = 4 * p.total_length();
        let n = o.len();
        let bigons = (0..n)
            .map(|i| bigon_from_cell(&shifts, o.cell_word(i + n - 1), cap))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { bigons })
    }

    /// Bigon at the cutting point between positions `i - 1` and `i`.
    pub fn at(&self, i: usize) -> &Bigon {
        &self.bigons[i % self.bigons.len()]
    }

    pub fn len(&self) -> usize {
        self.bigons.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bigons.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Bigon> {
        self.bigons.iter()
    }

    /// The bigon whose sides start with `x` and `y`, in either order.
    pub fn for_pair(&self, x: Letter, y: Letter) -> Option<&Bigon> {
        self.bigons.iter().find(|b| {
            let (l, r) = (b.left[0], b.right[0]);
            (l == x && r == y) || (l == y && r == x)
        })
    }

    /// Sides of the bigon between adjacent letters `x` and `y`: the one starting with `x`, then the other.
    fn sides(&self, x: Letter, y: Letter) -> Result<(&Word, &Word)> {
        let b = self
            .for_pair(x, y)
            .ok_or_else(|| Error::InternalInconsistency(format!("{x} and {y} are not adjacent")))?;
        if b.left[0] == x {
            Ok((&b.left, &b.right))
        } else {
            Ok((&b.right, &b.left))
        }
    }
}

/// Whether the rotation at the end of `w` is mirrored relative to the identity.
pub fn is_mirrored_after(orient: &OrientationMap, o: &CyclicOrder, w: &[Letter]) -> bool {
    w.iter().filter(|&&x| orient.sign(o.position(x)) < 0).count() % 2 == 1
}

/// Glues a further minimal bigon onto the end of `b`.
///
/// With `bit = 0` the new bigon sits at the penultimate vertex of the left
/// side, on the left of its last edge; with `bit = 1` it sits at the
/// penultimate vertex of the right side, on the right of its last edge. The
/// result has length `len(b) + k - 1` where `k` is the length of the glued
/// bigon.
pub fn extend(b: &Bigon, bit: u8, o: &CyclicOrder, orient: &OrientationMap, bigons: &MinimalBigons) -> Result<Bigon> {
    let k = b.len();
    let (side, other) = if bit == 0 { (&b.left, &b.right) } else { (&b.right, &b.left) };
    let head = &side[..k - 1];
    let last = side[k - 1];
    let mirrored = is_mirrored_after(orient, o, head);
    // Left of `last` is its clockwise predecessor at a standard vertex.
    let towards_left = (bit == 0) != mirrored;
    let neighbour = if towards_left { o.pred(last) } else { o.succ(last) };
    if k >= 2 && neighbour == side[k - 2].inverse() {
        return Err(Error::InternalInconsistency(format!("extension of {} folds back along {}", side, neighbour)));
    }
    let (through_last, through_neighbour) = bigons.sides(last, neighbour)?;
    let turned = Word::new(head.to_vec()).concat(through_neighbour);
    let continued = other.concat(&through_last[1..]);
    Ok(if bit == 0 { Bigon::new(turned, continued) } else { Bigon::new(continued, turned) })
}

/// The ray continuing `w` with the opposite of the inverse of each previous letter.
pub fn centered_continuation(w: &Word, o: &CyclicOrder) -> EPRay {
    EPRay::iterate(w, |x| o.opposite(x.inverse()))
}

/// Left ray of the middle cutting point between positions `i - 1` and `i`.
pub fn middle_ray(bigons: &MinimalBigons, o: &CyclicOrder, i: usize) -> EPRay {
    centered_continuation(&bigons.at(i).left, o)
}

/// Right ray of the middle cutting point: the right word followed by the left ray's tail.
pub fn middle_ray_right(bigons: &MinimalBigons, o: &CyclicOrder, i: usize) -> EPRay {
    let b = bigons.at(i);
    middle_ray(bigons, o, i).with_head(&b.right, b.len())
}
