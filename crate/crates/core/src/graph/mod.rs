//! Game boards: directed graphs with loops, and the action matrices they
//! induce.
//!
//! A loop is stored separately from arcs and contributes one to both the
//! out-degree and the in-degree of its vertex. An arc `u -> v` is *paired*
//! when `v -> u` is also present (an undirected edge) and *unpaired*
//! otherwise.

mod format;
mod generators;
pub mod random;

use std::collections::VecDeque;

pub use generators::{grid_graph, hypercube_game};

use crate::error::{Error, Result};
use crate::gf2::{BitVec, Matrix};

/// Largest vertex count handled by the bitmask-based subset scans.
const MASK_LIMIT: usize = 64;

/// Default bound on `n` for the exhaustive odd-subset scan (about 10⁶ subsets).
pub const DEFAULT_PREMISE_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArcKind {
    Paired,
    Unpaired,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    loops: BitVec,
    /// `out[u]` holds the heads of non-loop arcs leaving `u`.
    out: Vec<BitVec>,
}

/// Rows are buttons, columns are lamps; entry `(i, j)` is set when button
/// `i` toggles lamp `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionMatrix {
    matrix: Matrix,
}

impl ActionMatrix {
    pub fn new(matrix: Matrix) -> Self {
        Self { matrix }
    }

    pub fn buttons(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn lamps(&self) -> usize {
        self.matrix.ncols()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix {
        self.matrix
    }
}

impl From<Matrix> for ActionMatrix {
    fn from(matrix: Matrix) -> Self {
        Self::new(matrix)
    }
}

impl Graph {
    /// `n` isolated vertices without loops.
    pub fn new(n: usize) -> Self {
        Self {
            n,
            loops: BitVec::zeros(n),
            out: vec![BitVec::zeros(n); n],
        }
    }

    /// `n` vertices, each with a loop and nothing else.
    pub fn loops_only(n: usize) -> Self {
        let mut g = Self::new(n);
        g.loops = BitVec::ones(n);
        g
    }

    /// Graph whose adjacency matrix is `a`; symmetric off-diagonal pairs
    /// become undirected edges.
    pub fn from_adjacency(a: &Matrix) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::NotSquare {
                rows: a.nrows(),
                cols: a.ncols(),
            });
        }
        let n = a.nrows();
        let mut g = Self::new(n);
        for u in 0..n {
            for v in a.row(u).ones_iter() {
                if u == v {
                    g.loops.set(u, true);
                } else {
                    g.out[u].set(v, true);
                }
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn loops(&self) -> &BitVec {
        &self.loops
    }

    #[inline]
    pub fn has_loop(&self, v: usize) -> bool {
        self.loops.get(v)
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u != v && self.out[u].get(v)
    }

    /// Heads of the non-loop arcs leaving `u`.
    pub fn out_neighbors(&self, u: usize) -> &BitVec {
        &self.out[u]
    }

    pub fn arc_kind(&self, u: usize, v: usize) -> Option<ArcKind> {
        if !self.has_arc(u, v) {
            None
        } else if self.has_arc(v, u) {
            Some(ArcKind::Paired)
        } else {
            Some(ArcKind::Unpaired)
        }
    }

    /// Adds a loop at `v`; returns false if it was already there.
    pub fn add_loop(&mut self, v: usize) -> bool {
        let fresh = !self.loops.get(v);
        self.loops.set(v, true);
        fresh
    }

    /// Adds the arc `u -> v`; returns false if it was already there.
    /// Panics when `u == v` (use [`Graph::add_loop`]).
    pub fn add_arc(&mut self, u: usize, v: usize) -> bool {
        assert_ne!(u, v, "loops are not arcs; use add_loop");
        let fresh = !self.out[u].get(v);
        self.out[u].set(v, true);
        fresh
    }

    /// Adds both `u -> v` and `v -> u`; returns false if either existed.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        let a = self.add_arc(u, v);
        let b = self.add_arc(v, u);
        a && b
    }

    pub fn remove_arc(&mut self, u: usize, v: usize) {
        self.out[u].set(v, false);
    }

    pub fn remove_loop(&mut self, v: usize) {
        self.loops.set(v, false);
    }

    /// All arcs `(u, v, kind)` in lexicographic order.
    pub fn arcs(&self) -> Vec<(usize, usize, ArcKind)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.out[u].ones_iter() {
                let kind = if self.has_arc(v, u) {
                    ArcKind::Paired
                } else {
                    ArcKind::Unpaired
                };
                out.push((u, v, kind));
            }
        }
        out
    }

    /// Undirected edges `(u, v)` with `u < v`, i.e. the paired arc couples.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.arcs()
            .into_iter()
            .filter(|&(u, v, k)| k == ArcKind::Paired && u < v)
            .map(|(u, v, _)| (u, v))
            .collect()
    }

    pub fn unpaired_arcs(&self) -> Vec<(usize, usize)> {
        self.arcs()
            .into_iter()
            .filter(|&(_, _, k)| k == ArcKind::Unpaired)
            .map(|(u, v, _)| (u, v))
            .collect()
    }

    /// First unpaired arc, if any; `None` means the graph is undirected
    /// apart from its loops.
    pub fn first_unpaired_arc(&self) -> Option<(usize, usize)> {
        (0..self.n).find_map(|u| {
            self.out[u]
                .ones_iter()
                .find(|&v| !self.out[v].get(u))
                .map(|v| (u, v))
        })
    }

    pub fn is_undirected(&self) -> bool {
        self.first_unpaired_arc().is_none()
    }

    pub fn require_undirected(&self) -> Result<()> {
        match self.first_unpaired_arc() {
            None => Ok(()),
            Some((from, to)) => Err(Error::Directed { from, to }),
        }
    }

    pub fn all_loops(&self) -> bool {
        self.loops.count_ones() == self.n
    }

    /// Square action matrix: entry `(i, j)` is set iff `i -> j` is an arc,
    /// or `i == j` and `i` has a loop.
    pub fn adjacency(&self) -> ActionMatrix {
        let rows = (0..self.n)
            .map(|u| {
                let mut r = self.out[u].clone();
                if self.loops.get(u) {
                    r.set(u, true);
                }
                r
            })
            .collect();
        ActionMatrix::new(Matrix::from_rows(self.n, rows))
    }

    /// Subgraph induced on `vertices`, relabelled `0..k` in the given order.
    /// The returned map sends each new index to its original vertex.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut g = Graph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            if self.has_loop(u) {
                g.loops.set(i, true);
            }
            for (j, &v) in vertices.iter().enumerate() {
                if self.has_arc(u, v) {
                    g.out[i].set(j, true);
                }
            }
        }
        (g, vertices.to_vec())
    }

    /// Out-degree of `v` inside the subgraph induced on `subset`, counting a
    /// loop once.
    pub fn out_degree_within(&self, v: usize, subset: &BitVec) -> usize {
        self.out[v].and(subset).count_ones() + usize::from(self.has_loop(v))
    }

    pub(crate) fn out_masks(&self) -> Vec<u64> {
        assert!(self.n <= MASK_LIMIT);
        self.out
            .iter()
            .enumerate()
            .map(|(u, r)| r.to_u64().unwrap_or(0) | (u64::from(self.has_loop(u)) << u))
            .collect()
    }

    fn check_scan_cap(&self, cap: usize) -> Result<()> {
        let cap = cap.min(MASK_LIMIT - 1);
        if self.n > cap {
            return Err(Error::CapExceeded {
                what: "vertex count for the exhaustive subset scan",
                value: self.n,
                cap,
            });
        }
        Ok(())
    }

    /// Odd vertex subsets in scan order: singletons first, then every odd
    /// subset in increasing bitmask order.
    fn odd_subsets(n: usize) -> impl Iterator<Item = u64> {
        let singles = (0..n).map(|v| 1u64 << v);
        let rest = (1u64..(1u64 << n)).filter(|m| m.count_ones() % 2 == 1 && m.count_ones() > 1);
        singles.chain(rest)
    }

    fn mask_to_vertices(mask: u64) -> Vec<usize> {
        (0..64).filter(|&i| (mask >> i) & 1 == 1).collect()
    }

    /// First odd subset `U` whose induced subgraph has no vertex of odd
    /// out-degree, scanning exhaustively. Singletons are tried first, so a
    /// missing loop is always reported as `{v}`.
    pub fn odd_subset_violation(&self, cap: usize) -> Result<Option<Vec<usize>>> {
        self.check_scan_cap(cap)?;
        let masks = self.out_masks();
        let violation = Self::odd_subsets(self.n).find(|&u| {
            let mut rest = u;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if (masks[v] & u).count_ones() % 2 == 1 {
                    return false;
                }
            }
            true
        });
        Ok(violation.map(Self::mask_to_vertices))
    }

    /// Whether every odd subset has a vertex of odd out-degree in its
    /// induced subgraph.
    pub fn odd_subset_premise(&self, cap: usize) -> Result<bool> {
        Ok(self.odd_subset_violation(cap)?.is_none())
    }

    /// Whether every odd subset induces an odd number of edges, counting
    /// loops once and each arc once (so an undirected edge counts twice).
    pub fn odd_subsets_induce_odd_edges(&self, cap: usize) -> Result<bool> {
        self.check_scan_cap(cap)?;
        let masks = self.out_masks();
        Ok(Self::odd_subsets(self.n).all(|u| {
            let mut total = 0u32;
            let mut rest = u;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                total += (masks[v] & u).count_ones();
            }
            total % 2 == 1
        }))
    }

    /// Whether the unpaired arcs, read as undirected edges, form a complete
    /// bipartite graph whose two parts cover all vertices. The edgeless
    /// graph counts as `K_{0,n}`.
    pub fn unpaired_arcs_complete_bipartite(&self) -> bool {
        let n = self.n;
        let mut h = vec![BitVec::zeros(n); n];
        for (u, v) in self.unpaired_arcs() {
            h[u].set(v, true);
            h[v].set(u, true);
        }
        if h.iter().all(BitVec::is_zero) {
            return true;
        }
        // Vertex 0's neighbourhood fixes the bipartition.
        let y = &h[0];
        (0..n).all(|u| {
            let u_in_y = y.get(u);
            (0..n).filter(|&v| v != u).all(|v| h[u].get(v) == (u_in_y != y.get(v)))
        })
    }

    /// Two-colouring of the non-loop edges by BFS from the lowest-index
    /// uncoloured vertex of each component, which goes to `X`. Loops are
    /// ignored. Returns `None` for a non-bipartite graph and an error if any
    /// arc is unpaired.
    pub fn bipartition(&self) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
        self.require_undirected()?;
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].expect("queued vertices are coloured");
                for v in self.out[u].ones_iter() {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return Ok(None),
                        Some(_) => {}
                    }
                }
            }
        }
        let (x, y): (Vec<usize>, Vec<usize>) =
            (0..self.n).partition(|&v| color[v] == Some(false));
        Ok(Some((x, y)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Path 0-1-2-3-4 plus the chord 1-3, loops on every vertex.
    fn triangle_with_tails() -> Graph {
        "n 5\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 1 3\nl 0\nl 1\nl 2\nl 3\nl 4"
            .parse()
            .unwrap()
    }

    #[test]
    fn adjacency_examples() {
        assert_eq!(*Graph::loops_only(3).adjacency().matrix(), Matrix::identity(3));
        let k2: Graph = "n 2\ne 0 1\nl 0\nl 1".parse().unwrap();
        assert_eq!(
            *k2.adjacency().matrix(),
            Matrix::parse_rows(&["11", "11"]).unwrap()
        );
    }

    #[test]
    fn adjacency_of_loopless_counterexample() {
        let g: Graph = "n 5\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 1 3".parse().unwrap();
        let a = g.adjacency();
        let expected =
            Matrix::parse_rows(&["01000", "10110", "01010", "01101", "00010"]).unwrap();
        assert_eq!(*a.matrix(), expected);
        assert!(a.matrix().is_symmetric());
        assert_eq!(a.matrix().diagonal_weight(), 0);
    }

    #[test]
    fn induced_subgraph_examples() {
        let g = triangle_with_tails();
        let all: Vec<usize> = (0..5).collect();
        assert_eq!(g.induced_subgraph(&all).0, g);

        let (single, map) = g.induced_subgraph(&[2]);
        assert_eq!((single.n(), single.has_loop(0), map), (1, true, vec![2]));

        let (tri, map) = g.induced_subgraph(&[1, 2, 3]);
        assert_eq!(map, vec![1, 2, 3]);
        assert_eq!(tri.edges(), vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn premise_examples() {
        assert!(Graph::loops_only(6).odd_subset_premise(20).unwrap());
        assert!(triangle_with_tails().odd_subset_premise(20).unwrap());

        let mut g = triangle_with_tails();
        g.remove_loop(3);
        assert_eq!(g.odd_subset_violation(20).unwrap(), Some(vec![3]));

        let big = Graph::loops_only(21);
        assert!(matches!(
            big.odd_subset_premise(20),
            Err(Error::CapExceeded { value: 21, cap: 20, .. })
        ));
    }

    #[test]
    fn premise_can_fail_on_a_triple() {
        // All loops; 0->1, 1->2, 2->0 directed cycle gives every vertex of
        // {0,1,2} out-degree 2 in the induced subgraph.
        let g: Graph = "n 3\nl 0\nl 1\nl 2\na 0 1\na 1 2\na 2 0".parse().unwrap();
        assert_eq!(g.odd_subset_violation(20).unwrap(), Some(vec![0, 1, 2]));
    }

    #[test]
    fn bipartition_examples() {
        assert_eq!(
            grid_graph(2, 2).bipartition().unwrap(),
            Some((vec![0, 3], vec![1, 2]))
        );
        assert_eq!(triangle_with_tails().bipartition().unwrap(), None);
        assert_eq!(
            Graph::loops_only(1).bipartition().unwrap(),
            Some((vec![0], vec![]))
        );
        let directed: Graph = "n 2\na 0 1".parse().unwrap();
        assert_eq!(directed.bipartition(), Err(Error::Directed { from: 0, to: 1 }));
    }

    #[test]
    fn arc_kinds() {
        let g: Graph = "n 3\ne 0 1\na 1 2\na 2 0\na 0 2".parse().unwrap();
        assert_eq!(g.arc_kind(0, 1), Some(ArcKind::Paired));
        assert_eq!(g.arc_kind(1, 2), Some(ArcKind::Unpaired));
        assert_eq!(g.arc_kind(0, 2), Some(ArcKind::Paired));
        assert_eq!(g.arc_kind(2, 1), None);
        assert_eq!(g.unpaired_arcs(), vec![(1, 2)]);
    }

    #[test]
    fn complete_bipartite_detection() {
        let mut g = Graph::loops_only(4);
        assert!(g.unpaired_arcs_complete_bipartite());
        // K_{1,3} centred at 2 with mixed orientations.
        g.add_arc(2, 0);
        g.add_arc(1, 2);
        assert!(!g.unpaired_arcs_complete_bipartite());
        g.add_arc(3, 2);
        assert!(g.unpaired_arcs_complete_bipartite());
        assert!(g.odd_subsets_induce_odd_edges(20).unwrap());
        g.add_edge(0, 1);
        assert!(g.unpaired_arcs_complete_bipartite());
        g.add_arc(0, 3);
        assert!(!g.unpaired_arcs_complete_bipartite());
        assert!(!g.odd_subsets_induce_odd_edges(20).unwrap());
    }
}
