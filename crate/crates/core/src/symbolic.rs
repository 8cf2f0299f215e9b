//! Symbolic model of the boundary map at the middle cutting points: lap
//! structure, refined addresses and one-sided itineraries.
//!
//! The circle is cut at the first cutting point, so interval positions
//! `0..2N` are linearly ordered. Nothing here is embedded numerically; points
//! are rays and comparisons are symbolic.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::bigons::{middle_ray, middle_ray_right, MinimalBigons};
use crate::error::{Error, Result};
use crate::ordering::{CyclicOrder, OrientationMap};
use crate::ray::EPRay;

/// How far the deep comparison of two points follows their itineraries.
pub const TIE_DEPTH: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LapPart {
    Whole,
    Left,
    Right,
}

/// A maximal monotone piece: a whole interval, or one half of a split interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Lap {
    pub base: usize,
    pub part: LapPart,
}

impl Lap {
    pub fn whole(base: usize) -> Self {
        Self { base, part: LapPart::Whole }
    }

    pub fn label(&self, o: &CyclicOrder) -> String {
        let x = o.letter(self.base);
        match self.part {
            LapPart::Whole => x.to_string(),
            LapPart::Left => format!("{x}_l"),
            LapPart::Right => format!("{x}_r"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// Approach from the left, following the left word of the bigon.
    Minus,
    /// Approach from the right, following the right word.
    Plus,
}

/// Interval positions of the images of the two ends of every interval.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LapImages {
    /// Interval holding the image of the left end, just right of its cutting point.
    pub start: Vec<usize>,
    /// Interval holding the image of the right end, just left of the next cutting point.
    pub end: Vec<usize>,
    /// +1 where the map is increasing, -1 where decreasing.
    pub sign: Vec<i32>,
}

pub fn lap_images(bigons: &MinimalBigons, o: &CyclicOrder, orient: &OrientationMap) -> LapImages {
    let n = o.len();
    LapImages {
        start: (0..n).map(|i| o.position(bigons.at(i).right[1])).collect(),
        end: (0..n).map(|i| o.position(bigons.at(i + 1).left[1])).collect(),
        sign: orient.signs(),
    }
}

/// Symbolic order of points on the circle cut at the first cutting point.
///
/// Points in the same interval are ordered by their images along the image
/// arc of that interval, reversing the comparison on decreasing intervals.
pub fn compare_points(o: &CyclicOrder, li: &LapImages, u: &EPRay, v: &EPRay) -> Option<Ordering> {
    if u == v {
        return Some(Ordering::Equal);
    }
    let n = li.start.len();
    let pos = |r: &EPRay, d: usize| o.position(r.at(d));
    let (a, b) = (pos(u, 0), pos(v, 0));
    if a != b {
        return Some(a.cmp(&b));
    }
    let mut flip = false;
    for d in 0..TIE_DEPTH {
        let j = pos(u, d);
        let z = li.start[j];
        let key = |x: usize| if li.sign[j] > 0 { (x + n - z) % n } else { (z + n - x) % n };
        let (ka, kb) = (key(pos(u, d + 1)), key(pos(v, d + 1)));
        if ka != kb {
            let ord = ka.cmp(&kb);
            return Some(if flip { ord.reverse() } else { ord });
        }
        if ka == 0 && li.start[j] == li.end[j] {
            return None;
        }
        if li.sign[j] < 0 {
            flip = !flip;
        }
    }
    None
}

/// A discontinuity or turning point of the lifted circle map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", content = "interval", rename_all = "lowercase")]
pub enum TurningPoint {
    /// The cutting point at the left end of an interval.
    Cutting(usize),
    /// The preimage of the first cutting point inside a split interval.
    Preimage(usize),
}

impl TurningPoint {
    pub fn label(&self, o: &CyclicOrder) -> String {
        match self {
            TurningPoint::Cutting(i) => format!("theta_{}", o.letter(*i)),
            TurningPoint::Preimage(i) => format!("m_{}", o.letter(*i)),
        }
    }
}

/// Everything the kneading construction needs about the middle cutting points.
#[derive(Debug, Clone)]
pub struct SymbolicDynamics {
    order: CyclicOrder,
    bigons: MinimalBigons,
    images: LapImages,
    split: Vec<bool>,
    laps: Vec<Lap>,
    left_rays: Vec<EPRay>,
    right_rays: Vec<EPRay>,
}

impl SymbolicDynamics {
    pub fn new(o: &CyclicOrder, orient: &OrientationMap, bigons: &MinimalBigons) -> Result<Self> {
        let n = o.len();
        let images = lap_images(bigons, o, orient);
        let left_rays: Vec<EPRay> = (0..n).map(|i| middle_ray(bigons, o, i)).collect();
        let right_rays: Vec<EPRay> = (0..n).map(|i| middle_ray_right(bigons, o, i)).collect();
        let mut sd = Self {
            order: o.clone(),
            bigons: bigons.clone(),
            images,
            split: Vec::new(),
            laps: Vec::new(),
            left_rays,
            right_rays,
        };
        sd.split = (0..n).map(|i| sd.decide_split(i)).collect::<Result<Vec<_>>>()?;
        sd.laps = (0..n)
            .flat_map(|i| {
                if sd.split[i] {
                    vec![Lap { base: i, part: LapPart::Left }, Lap { base: i, part: LapPart::Right }]
                } else {
                    vec![Lap::whole(i)]
                }
            })
            .collect();
        Ok(sd)
    }

    pub fn order(&self) -> &CyclicOrder {
        &self.order
    }

    pub fn bigons(&self) -> &MinimalBigons {
        &self.bigons
    }

    pub fn images(&self) -> &LapImages {
        &self.images
    }

    pub fn is_split(&self, i: usize) -> bool {
        self.split[i]
    }

    /// Positions of the split intervals.
    pub fn splits(&self) -> Vec<usize> {
        (0..self.split.len()).filter(|&i| self.split[i]).collect()
    }

    /// Laps in circular order from the first cutting point.
    pub fn laps(&self) -> &[Lap] {
        &self.laps
    }

    pub fn lap_index(&self, lap: Lap) -> usize {
        self.laps.iter().position(|&l| l == lap).expect("lap belongs to the basis")
    }

    /// Slope sign of each lap, inherited from its interval.
    pub fn lap_signs(&self) -> Vec<i32> {
        self.laps.iter().map(|l| self.images.sign[l.base]).collect()
    }

    /// Turning points in circular order starting with the first cutting point.
    pub fn turning_points(&self) -> Vec<TurningPoint> {
        let mut out = Vec::new();
        for i in 0..self.split.len() {
            out.push(TurningPoint::Cutting(i));
            if self.split[i] {
                out.push(TurningPoint::Preimage(i));
            }
        }
        out
    }

    pub fn left_ray(&self, j: usize) -> &EPRay {
        &self.left_rays[j]
    }

    pub fn right_ray(&self, j: usize) -> &EPRay {
        &self.right_rays[j]
    }

    pub fn ray(&self, j: usize, side: Side) -> &EPRay {
        match side {
            Side::Minus => &self.left_rays[j],
            Side::Plus => &self.right_rays[j],
        }
    }

    /// Symbolic comparison of two points on the cut circle; `None` when undecided.
    pub fn compare(&self, u: &EPRay, v: &EPRay) -> Option<Ordering> {
        compare_points(&self.order, &self.images, u, v)
    }

    /// Images of the two ends of interval `i` as rays.
    fn end_images(&self, i: usize) -> (EPRay, EPRay) {
        let n = self.left_rays.len();
        (self.right_rays[i].shift(1), self.left_rays[(i + 1) % n].shift(1))
    }

    fn decide_split(&self, i: usize) -> Result<bool> {
        let (z, w, s) = (self.images.start[i], self.images.end[i], self.images.sign[i]);
        if z != w {
            return Ok(if s > 0 { z > w } else { z < w });
        }
        let (a, b) = self.end_images(i);
        match self.compare(&a, &b) {
            Some(Ordering::Greater) if s > 0 => Ok(true),
            Some(Ordering::Less) if s < 0 => Ok(true),
            Some(Ordering::Equal) | None => Err(Error::TieUnresolved { interval: i, depth: TIE_DEPTH }),
            Some(_) => Ok(false),
        }
    }

    /// Lap of a point in interval `current` whose image lies in interval `next_image`.
    ///
    /// `probe` is the image point itself, consulted only when both ends of
    /// the image arc fall in `next_image`.
    pub fn refine_address(&self, current: usize, next_image: usize, probe: Option<&EPRay>) -> Result<Lap> {
        if !self.split[current] {
            return Ok(Lap::whole(current));
        }
        let (z, w, s) = (self.images.start[current], self.images.end[current], self.images.sign[current]);
        let undecidable = || Error::AddressUndecidable { interval: current, next: next_image };
        let (left, right) = if z != w || next_image != z {
            if s > 0 {
                (next_image >= z, next_image <= w)
            } else {
                (next_image <= z, next_image >= w)
            }
        } else {
            let probe = probe.ok_or_else(undecidable)?;
            let (a, b) = self.end_images(current);
            let vs_start = self.compare(probe, &a).ok_or_else(undecidable)?;
            let vs_end = self.compare(probe, &b).ok_or_else(undecidable)?;
            if s > 0 {
                (vs_start != Ordering::Less, vs_end != Ordering::Greater)
            } else {
                (vs_start != Ordering::Greater, vs_end != Ordering::Less)
            }
        };
        match (left, right) {
            (true, false) => Ok(Lap { base: current, part: LapPart::Left }),
            (false, true) => Ok(Lap { base: current, part: LapPart::Right }),
            _ => Err(undecidable()),
        }
    }

    /// Laps visited by the first `k` iterates of one side of cutting point `j`,
    /// where `k` is the length of its bigon.
    pub fn side_itinerary(&self, j: usize, side: Side) -> Result<Vec<Lap>> {
        let ray = self.ray(j, side);
        let k = self.bigons.at(j).len();
        (0..k)
            .map(|m| {
                let base = self.order.position(ray.at(m));
                let next = self.order.position(ray.at(m + 1));
                self.refine_address(base, next, Some(&ray.shift(m + 1)))
            })
            .collect()
    }

    /// After `k` steps both sides of cutting point `j` follow the same ray.
    pub fn eventually_coincides(&self, j: usize) -> bool {
        let k = self.bigons.at(j).len();
        self.left_rays[j].shift(k) == self.right_rays[j].shift(k)
    }

    /// No forward iterate of either side of cutting point `j` is itself a cutting point.
    pub fn orbit_avoids_cutting_points(&self, j: usize) -> bool {
        [Side::Minus, Side::Plus].iter().all(|&side| {
            let ray = self.ray(j, side);
            self.left_rays.iter().chain(&self.right_rays).all(|cut| !ray.has_suffix_from(1, cut))
        })
    }
}

impl fmt::Display for Lap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.part {
            LapPart::Whole => write!(f, "{}", self.base),
            LapPart::Left => write!(f, "{}l", self.base),
            LapPart::Right => write!(f, "{}r", self.base),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordering::{compute_cyclic_order, orientation_map};
    use crate::presentation::{parse, Letter, Word};

    fn p3() -> SymbolicDynamics {
        let p = parse("abaBd / ccd").unwrap();
        let o = compute_cyclic_order(&p).unwrap();
        let orient = orientation_map(&o).unwrap();
        let bigons = MinimalBigons::compute(&p, &o).unwrap();
        SymbolicDynamics::new(&o, &orient, &bigons).unwrap()
    }

    #[test]
    fn p3_laps() {
        let sd = p3();
        assert_eq!(sd.splits(), [0, 1, 2, 3, 4, 7]);
        assert_eq!(sd.laps().len(), 14);
        let labels: Vec<String> = sd.laps().iter().map(|l| l.label(sd.order())).collect();
        assert_eq!(labels[..4], ["a_l", "a_r", "D_l", "D_r"]);
        assert_eq!(labels[10..], ["b", "A", "B_l", "B_r"]);
        assert_eq!(sd.lap_signs()[4..8], [-1, -1, -1, -1]);
        assert_eq!(sd.turning_points().len(), 14);
        assert_eq!(sd.turning_points()[1], TurningPoint::Preimage(0));
    }

    #[test]
    fn points_in_different_intervals_follow_the_order() {
        let sd = p3();
        let ray = |s: &str, per: &str| EPRay::new(Word::from_letters(s), Word::from_letters(per));
        assert_eq!(sd.compare(&ray("a", "b"), &ray("D", "b")), Some(Ordering::Less));
        assert_eq!(sd.compare(&ray("B", "a"), &ray("c", "a")), Some(Ordering::Greater));
        let same = ray("ab", "Dc");
        assert_eq!(sd.compare(&same, &same.clone()), Some(Ordering::Equal));
    }

    #[test]
    fn comparison_is_antisymmetric_on_cutting_rays() {
        let sd = p3();
        for i in 0..8 {
            for j in 0..8 {
                let (u, v) = (sd.left_ray(i), sd.right_ray(j));
                let forward = sd.compare(u, v);
                let backward = sd.compare(v, u);
                assert_eq!(forward.map(Ordering::reverse), backward, "{i} {j}");
            }
        }
    }

    #[test]
    fn cutting_rays_start_with_their_bigon() {
        let sd = p3();
        for j in 0..8 {
            let b = sd.bigons().at(j);
            assert_eq!(sd.left_ray(j).prefix(b.len()), b.left);
            assert_eq!(sd.right_ray(j).prefix(b.len()), b.right);
            assert!(sd.eventually_coincides(j));
            assert!(sd.orbit_avoids_cutting_points(j));
        }
        let d_bar = sd.order().position(Letter::from_char('D').unwrap());
        assert_eq!(sd.ray(d_bar, Side::Minus), sd.left_ray(d_bar));
    }
}
