//! The looped infinite grid: finite press patterns, the lamps they leave
//! lit, and the mikado diamonds that light exactly five lamps.
//!
//! Lamp `p` is lit iff an odd number of the points `p, p ± (1,0), p ± (0,1)`
//! are pressed.
//!
//! Diamonds are numbered from 1: diamond 1 is the single press, and diamond
//! `k + 1` is the XOR of five copies of diamond `k` centred at the origin and
//! at the four axis points at distance `2^(k-1)`. Diamond `k` lights the
//! origin and the four axis points at distance `2^(k-1)`, so its leftmost and
//! rightmost lit lamps are `2^k` apart. Its presses fill a square of side
//! `2^k - 1`.

mod render;
mod search;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub use render::{render, Bitmap, RenderMode};
pub use search::{identify_diamond, min_lamps_search, LampCensus, DEFAULT_WINDOW_CAP};

use crate::error::{Error, Result};

pub type Point = (i64, i64);

/// Largest diamond index the dense generator accepts (side `2^16 - 1`).
pub const MAX_DIAMOND: u32 = 16;

const PLUS: [Point; 5] = [(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)];

/// A finite set of pressed lattice points.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern(BTreeSet<Point>);

/// A finite set of lit lamps.
#[derive(Clone, Default, PartialEq, Eq, Hash, Debug)]
pub struct LitSet(BTreeSet<Point>);

/// Inclusive bounding box `(min_x, min_y, max_x, max_y)`.
pub type BoundingBox = (i64, i64, i64, i64);

fn bounding_box<'a>(points: impl Iterator<Item = &'a Point>) -> Option<BoundingBox> {
    points.fold(None, |acc, &(x, y)| {
        Some(match acc {
            None => (x, y, x, y),
            Some((a, b, c, d)) => (a.min(x), b.min(y), c.max(x), d.max(y)),
        })
    })
}

impl Pattern {
    pub fn new() -> Self {
        Self::default()
    }

    /// Toggles each point in turn, so a point listed twice is not pressed.
    pub fn from_points(points: impl IntoIterator<Item = Point>) -> Self {
        let mut p = Self::new();
        for pt in points {
            p.toggle(pt);
        }
        p
    }

    pub fn toggle(&mut self, pt: Point) {
        if !self.0.remove(&pt) {
            self.0.insert(pt);
        }
    }

    pub fn contains(&self, pt: Point) -> bool {
        self.0.contains(&pt)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        self.0.iter().copied()
    }

    pub fn bounding_box(&self) -> Option<BoundingBox> {
        bounding_box(self.0.iter())
    }

    pub fn translate(&self, dx: i64, dy: i64) -> Pattern {
        Pattern(self.0.iter().map(|&(x, y)| (x + dx, y + dy)).collect())
    }

    /// Symmetric difference: pressing both patterns.
    pub fn xor(&self, other: &Pattern) -> Pattern {
        Pattern(self.0.symmetric_difference(&other.0).copied().collect())
    }

    /// Image under one of the eight symmetries of the square lattice fixing
    /// the origin; `index` in `0..8`.
    pub fn dihedral(&self, index: usize) -> Pattern {
        Pattern(self.0.iter().map(|&p| dihedral_point(p, index)).collect())
    }
}

fn dihedral_point((x, y): Point, index: usize) -> Point {
    let (x, y) = match index % 4 {
        0 => (x, y),
        1 => (-y, x),
        2 => (-x, -y),
        _ => (y, -x),
    };
    if index >= 4 {
        (y, x)
    } else {
        (x, y)
    }
}

impl LitSet {
    pub fn from_points(points: impl IntoIterator<Item = Point>) -> Self {
        Self(points.into_iter().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, pt: Point) -> bool {
        self.0.contains(&pt)
    }

    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        self.0.iter().copied()
    }

    pub fn bounding_box(&self) -> Option<BoundingBox> {
        bounding_box(self.0.iter())
    }

    pub fn symmetric_difference(&self, other: &LitSet) -> LitSet {
        LitSet(self.0.symmetric_difference(&other.0).copied().collect())
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pattern{:?}", self.0)
    }
}

/// Lists points as `(x,y)` separated by spaces.
fn write_points<'a>(f: &mut fmt::Formatter<'_>, points: impl Iterator<Item = &'a Point>) -> fmt::Result {
    let parts: Vec<String> = points.map(|(x, y)| format!("({x},{y})")).collect();
    f.write_str(&parts.join(" "))
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_points(f, self.0.iter())
    }
}

impl fmt::Display for LitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_points(f, self.0.iter())
    }
}

/// Lamps lit by pressing `p`, computed on a dense grid covering the
/// bounding box plus a one-cell margin.
pub fn lit_lamps(p: &Pattern) -> LitSet {
    let Some((x0, y0, x1, y1)) = p.bounding_box() else {
        return LitSet::default();
    };
    let (w, h) = ((x1 - x0 + 3) as usize, (y1 - y0 + 3) as usize);
    let mut grid = vec![false; w * h];
    for (x, y) in p.points() {
        let (cx, cy) = ((x - x0 + 1) as usize, (y - y0 + 1) as usize);
        for (dx, dy) in PLUS {
            let idx = (cy as i64 + dy) as usize * w + (cx as i64 + dx) as usize;
            grid[idx] ^= true;
        }
    }
    LitSet(
        grid.iter()
            .enumerate()
            .filter(|(_, &on)| on)
            .map(|(i, _)| ((i % w) as i64 + x0 - 1, (i / w) as i64 + y0 - 1))
            .collect(),
    )
}

/// Distance from the centre of diamond `k` to its four outer lit lamps.
pub fn diamond_reach(k: u32) -> i64 {
    1i64 << (k - 1)
}

/// The `k`-th mikado diamond (1-based), centred at the origin.
pub fn mikado_diamond(k: u32) -> Result<Pattern> {
    if !(1..=MAX_DIAMOND).contains(&k) {
        return Err(Error::InvalidArgument(format!(
            "diamond index must be in 1..={MAX_DIAMOND}, got {k}"
        )));
    }
    // Dense square of side 2^j - 1 centred at (half, half).
    let mut side = 1usize;
    let mut cells = vec![true];
    for j in 1..k {
        let d = 1usize << (j - 1);
        let next_side = 2 * side + 1;
        let mut next = vec![false; next_side * next_side];
        let offsets = [(d, d), (0, d), (2 * d, d), (d, 0), (d, 2 * d)];
        for (ox, oy) in offsets {
            for y in 0..side {
                for x in 0..side {
                    if cells[y * side + x] {
                        next[(y + oy) * next_side + x + ox] ^= true;
                    }
                }
            }
        }
        side = next_side;
        cells = next;
    }
    let half = (side / 2) as i64;
    Ok(Pattern(
        cells
            .iter()
            .enumerate()
            .filter(|(_, &on)| on)
            .map(|(i, _)| ((i % side) as i64 - half, (i / side) as i64 - half))
            .collect(),
    ))
}

/// How often each lamp is lit across the five copies of diamond `k` that
/// superpose into diamond `k + 1`.
pub fn superposition_hits(k: u32) -> Result<BTreeMap<Point, u32>> {
    let lit = lit_lamps(&mikado_diamond(k)?);
    let d = diamond_reach(k);
    let mut hits = BTreeMap::new();
    for (ox, oy) in [(0, 0), (d, 0), (-d, 0), (0, d), (0, -d)] {
        for (x, y) in lit.points() {
            *hits.entry((x + ox, y + oy)).or_insert(0) += 1;
        }
    }
    Ok(hits)
}

/// Keeps the points with both coordinates even and halves them.
pub fn erase_half(p: &Pattern) -> Pattern {
    Pattern(
        p.points()
            .filter(|&(x, y)| x % 2 == 0 && y % 2 == 0)
            .map(|(x, y)| (x / 2, y / 2))
            .collect(),
    )
}

/// `r - 4` diagonally consecutive presses, lighting exactly `r` lamps.
pub fn diagonal_run(r: usize) -> Result<Pattern> {
    if r < 5 {
        return Err(Error::InvalidArgument(format!(
            "no pattern lights {r} lamps; every count except 1, 2, 3 and 4 is possible"
        )));
    }
    Ok(Pattern((0..(r - 4) as i64).map(|i| (i, i)).collect()))
}
