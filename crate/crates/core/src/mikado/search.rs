//! Exhaustive census of lamp counts over every press pattern in a small
//! window.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{mikado_diamond, Pattern, Point};
use crate::error::{Error, Result};

/// Largest window area scanned (`2^25` patterns).
pub const DEFAULT_WINDOW_CAP: usize = 25;

/// Patterns lighting at most this many lamps are kept as witnesses.
const WITNESS_LIMIT: usize = 5;

const CHUNK: u64 = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LampCensus {
    pub width: usize,
    pub height: usize,
    /// Number of nonempty patterns scanned.
    pub scanned: u64,
    /// Lamp count -> number of patterns lighting exactly that many.
    pub counts: BTreeMap<usize, u64>,
    /// Lamp count (at most 5) -> every pattern achieving it, in scan order.
    pub witnesses: BTreeMap<usize, Vec<Pattern>>,
}

impl LampCensus {
    pub fn min_count(&self) -> Option<usize> {
        self.counts.keys().next().copied()
    }

    /// Witnesses for `count` lamps, empty if none.
    pub fn witnesses_for(&self, count: usize) -> &[Pattern] {
        self.witnesses.get(&count).map_or(&[], Vec::as_slice)
    }
}

struct Partial {
    /// Indexed by lamp count.
    counts: Vec<u64>,
    witnesses: Vec<(usize, u64)>,
}

/// Lit lamp count of the pattern whose bit `r * w + c` presses `(c, r)`.
///
/// Each window row is a word shifted up by one so both horizontal
/// neighbours fit; lamp row `r` is the XOR of press rows `r - 1`, `r`,
/// `r + 1` and the two horizontal shifts of row `r`.
fn lamp_count(mask: u64, w: usize, h: usize, rows: &mut [u64]) -> usize {
    let row_mask = (1u64 << w) - 1;
    for r in 0..h {
        rows[r + 2] = ((mask >> (r * w)) & row_mask) << 1;
    }
    (1..=h + 2)
        .map(|i| {
            let cur = rows[i];
            (rows[i - 1] ^ rows[i + 1] ^ cur ^ (cur << 1) ^ (cur >> 1)).count_ones() as usize
        })
        .sum()
}

/// Counts lit lamps for every nonempty pattern inside a `w x h` window.
///
/// The `2^(w h) - 1` patterns are split into fixed chunks scanned in
/// parallel; chunk results are merged in chunk order, so the output does not
/// depend on scheduling.
pub fn min_lamps_search(w: usize, h: usize) -> Result<LampCensus> {
    if w == 0 || h == 0 {
        return Err(Error::InvalidArgument(format!("window sides must be positive, got {w}x{h}")));
    }
    if w * h > DEFAULT_WINDOW_CAP {
        return Err(Error::CapExceeded {
            what: "window area for the exhaustive lamp census",
            value: w * h,
            cap: DEFAULT_WINDOW_CAP,
        });
    }
    let total = 1u64 << (w * h);
    let chunks = total.div_ceil(CHUNK);
    let partials: Vec<Partial> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut part = Partial {
                counts: vec![0; (w + 2) * (h + 2) + 1],
                witnesses: Vec::new(),
            };
            let mut rows = vec![0u64; h + 4];
            for mask in (c * CHUNK).max(1)..((c + 1) * CHUNK).min(total) {
                let n = lamp_count(mask, w, h, &mut rows);
                part.counts[n] += 1;
                if n <= WITNESS_LIMIT {
                    part.witnesses.push((n, mask));
                }
            }
            part
        })
        .collect();

    let mut counts = BTreeMap::new();
    let mut witnesses: BTreeMap<usize, Vec<Pattern>> = BTreeMap::new();
    for part in partials {
        for (n, &c) in part.counts.iter().enumerate().filter(|(_, &c)| c > 0) {
            *counts.entry(n).or_insert(0) += c;
        }
        for (n, mask) in part.witnesses {
            witnesses.entry(n).or_default().push(mask_pattern(mask, w, h));
        }
    }
    Ok(LampCensus {
        width: w,
        height: h,
        scanned: total - 1,
        counts,
        witnesses,
    })
}

fn mask_pattern(mask: u64, w: usize, h: usize) -> Pattern {
    Pattern::from_points(
        (0..w * h)
            .filter(|&i| (mask >> i) & 1 == 1)
            .map(|i| ((i % w) as i64, (i / w) as i64)),
    )
}

/// If `p` is a translated mikado diamond, its index and centre.
pub fn identify_diamond(p: &Pattern) -> Option<(u32, Point)> {
    let (x0, y0, x1, y1) = p.bounding_box()?;
    let side = x1 - x0 + 1;
    if y1 - y0 + 1 != side || (side + 1).count_ones() != 1 {
        return None;
    }
    let k = (side + 1).trailing_zeros();
    let centre = ((x0 + x1) / 2, (y0 + y1) / 2);
    let diamond = mikado_diamond(k).ok()?;
    (p.translate(-centre.0, -centre.1) == diamond).then_some((k, centre))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mikado::lit_lamps;

    /// Oracle: the lamp count via the set-based evaluation.
    fn slow_count(mask: u64, w: usize, h: usize) -> usize {
        lit_lamps(&mask_pattern(mask, w, h)).len()
    }

    #[test]
    fn word_parallel_count_matches_sets() {
        let (w, h) = (3, 3);
        let mut rows = vec![0; h + 4];
        for mask in 0..1u64 << (w * h) {
            assert_eq!(lamp_count(mask, w, h, &mut rows), slow_count(mask, w, h), "{mask:b}");
        }
        let (w, h) = (5, 2);
        let mut rows = vec![0; h + 4];
        for mask in 0..1u64 << (w * h) {
            assert_eq!(lamp_count(mask, w, h, &mut rows), slow_count(mask, w, h), "{mask:b}");
        }
    }

    #[test]
    fn single_cell_window() {
        let c = min_lamps_search(1, 1).unwrap();
        assert_eq!(c.counts, BTreeMap::from([(5, 1)]));
        assert_eq!(c.witnesses_for(5), [Pattern::from_points([(0, 0)])]);
    }

    #[test]
    fn three_by_three_window() {
        let c = min_lamps_search(3, 3).unwrap();
        assert_eq!(c.scanned, 511);
        assert_eq!(c.min_count(), Some(5));
        let found: Vec<(u32, Point)> = c
            .witnesses_for(5)
            .iter()
            .map(|p| identify_diamond(p).expect("five-lamp witness is a diamond"))
            .collect();
        assert_eq!(found.iter().filter(|(k, _)| *k == 1).count(), 9);
        assert_eq!(found.iter().filter(|(k, _)| *k == 2).count(), 1);
        assert_eq!(found.len(), 10);
    }

    #[test]
    fn window_limits() {
        assert!(matches!(min_lamps_search(5, 6), Err(Error::CapExceeded { value: 30, .. })));
        assert!(min_lamps_search(0, 3).is_err());
    }

    #[test]
    fn identify_diamond_examples() {
        let d3 = mikado_diamond(3).unwrap().translate(5, -2);
        assert_eq!(identify_diamond(&d3), Some((3, (5, -2))));
        assert_eq!(identify_diamond(&Pattern::from_points([(0, 0), (1, 1)])), None);
        assert_eq!(identify_diamond(&Pattern::new()), None);
    }
}
