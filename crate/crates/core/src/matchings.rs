//! Complete matchings with loops, their parity, and the grid criterion.
//!
//! A complete matching covers every vertex exactly once using loops
//! (covering one vertex) and edges (covering two). On the looped grid these
//! are exactly the monomer-dimer tilings. Mod 2 the determinant of the
//! adjacency matrix only sees coverings by 1- and 2-cycles, since longer
//! cycles come in opposite-direction pairs, so its value is the parity of
//! the number of complete matchings.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::{chebyshev2, BitVec};
use crate::graph::{grid_graph, Graph};

/// Default vertex bound for [`count_complete_matchings`].
pub const DEFAULT_MATCHING_CAP: usize = 24;

/// Default bound on the narrower grid side for [`monomer_dimer_parity`].
pub const DEFAULT_WIDTH_CAP: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cover {
    Loop(usize),
    /// `Edge(u, v)` with `u < v`.
    Edge(usize, usize),
}

/// A complete matching, items sorted by their lowest vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matching(pub Vec<Cover>);

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|c| match c {
                Cover::Loop(v) => format!("({v})"),
                Cover::Edge(u, v) => format!("({u} {v})"),
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

fn matching_masks(g: &Graph, cap: usize) -> Result<Vec<u64>> {
    g.require_undirected()?;
    let cap = cap.min(64);
    if g.n() > cap {
        return Err(Error::CapExceeded {
            what: "vertex count for matching enumeration",
            value: g.n(),
            cap,
        });
    }
    Ok(g.out_masks())
}

/// Exact number of complete matchings, by repeatedly covering the lowest
/// uncovered vertex with its loop or an edge to a higher uncovered vertex.
/// Counts are memoised by the set of covered vertices.
pub fn count_complete_matchings(g: &Graph, cap: usize) -> Result<u64> {
    let masks = matching_masks(g, cap)?;
    let n = g.n();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut memo = HashMap::new();
    Ok(count_from(&masks, full, 0, &mut memo))
}

fn count_from(masks: &[u64], full: u64, covered: u64, memo: &mut HashMap<u64, u64>) -> u64 {
    if covered == full {
        return 1;
    }
    if let Some(&c) = memo.get(&covered) {
        return c;
    }
    let v = (!covered).trailing_zeros() as usize;
    let bit = 1u64 << v;
    let mut total = 0;
    if masks[v] & bit != 0 {
        total += count_from(masks, full, covered | bit, memo);
    }
    let mut partners = masks[v] & !covered & !bit;
    while partners != 0 {
        let u = partners.trailing_zeros() as usize;
        partners &= partners - 1;
        total += count_from(masks, full, covered | bit | (1u64 << u), memo);
    }
    memo.insert(covered, total);
    total
}

/// Every complete matching, in the order the enumeration finds them.
pub fn list_complete_matchings(g: &Graph, cap: usize) -> Result<Vec<Matching>> {
    let masks = matching_masks(g, cap)?;
    let mut out = Vec::new();
    let mut current = Vec::new();
    list_from(&masks, g.n(), 0, &mut current, &mut out);
    Ok(out)
}

fn list_from(masks: &[u64], n: usize, covered: u64, current: &mut Vec<Cover>, out: &mut Vec<Matching>) {
    if covered.count_ones() as usize == n {
        out.push(Matching(current.clone()));
        return;
    }
    let v = (!covered).trailing_zeros() as usize;
    let bit = 1u64 << v;
    if masks[v] & bit != 0 {
        current.push(Cover::Loop(v));
        list_from(masks, n, covered | bit, current, out);
        current.pop();
    }
    let mut partners = masks[v] & !covered & !bit;
    while partners != 0 {
        let u = partners.trailing_zeros() as usize;
        partners &= partners - 1;
        current.push(Cover::Edge(v, u));
        list_from(masks, n, covered | bit | (1u64 << u), current, out);
        current.pop();
    }
}

/// Parity of the number of complete matchings (true = odd), read off the
/// determinant of the adjacency matrix mod 2.
pub fn matching_parity(g: &Graph) -> Result<bool> {
    g.require_undirected()?;
    g.adjacency().matrix().det_mod2()
}

/// Whether the looped `m x n` grid is fully controllable, decided by
/// `gcd(p_m(λ), p_n(1 + λ)) = 1` for the binary Chebyshev polynomials `p`.
pub fn grid_controllable(m: usize, n: usize) -> Result<bool> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument(format!("grid sides must be positive, got {m}x{n}")));
    }
    Ok(chebyshev2(m).gcd(&chebyshev2(n).shift_by_one())?.is_one())
}

/// Same verdict as [`grid_controllable`], via the matching parity of the
/// explicit grid graph.
pub fn grid_matching_parity(m: usize, n: usize) -> Result<bool> {
    matching_parity(&grid_graph(m, n))
}

/// Parity of the number of monomer-dimer tilings of the `m x n` grid.
///
/// Cells are scanned row by row across the narrower side `w`. The frontier
/// is a `w`-bit mask of cells already covered from earlier cells: bit `c`
/// refers to the current row for columns at or after the scan position and
/// to the next row before it. Each uncovered cell takes a monomer, a
/// horizontal dimer to the right, or a vertical dimer downwards. Only the
/// parity of each frontier's count is kept, so the whole state is a bit
/// vector over the `2^w` frontiers.
pub fn monomer_dimer_parity(m: usize, n: usize, width_cap: usize) -> Result<bool> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument(format!("grid sides must be positive, got {m}x{n}")));
    }
    let (w, h) = if m <= n { (m, n) } else { (n, m) };
    let cap = width_cap.min(24);
    if w > cap {
        return Err(Error::CapExceeded {
            what: "grid width for the transfer matrix",
            value: w,
            cap,
        });
    }
    let states = 1usize << w;
    let mut cur = BitVec::zeros(states);
    cur.set(0, true);
    for r in 0..h {
        for c in 0..w {
            let mut next = BitVec::zeros(states);
            let bit = 1usize << c;
            for s in cur.ones_iter() {
                if s & bit != 0 {
                    next.flip(s & !bit);
                    continue;
                }
                next.flip(s);
                if r + 1 < h {
                    next.flip(s | bit);
                }
                if c + 1 < w && s & (bit << 1) == 0 {
                    next.flip(s | (bit << 1));
                }
            }
            cur = next;
        }
    }
    Ok(cur.get(0))
}
