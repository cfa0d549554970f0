//! An undirected board with the same lightable configurations as a given
//! directed one.
//!
//! Let `k` be the largest number of lamps that can be lit at once and put a
//! maximal lightable set of lamps first. Every nonzero row-space vector is
//! nonzero on those `k` lamps (otherwise adding it to the all-ones vector on
//! them would light more than `k`), so after reordering the pivots first the
//! RREF is `[I B; 0 0]` with `I` of size `r <= k`. The symmetric matrix
//!
//! ```text
//! A' = [ I   B   ]
//!      [ Bᵀ  BᵀB ]
//! ```
//!
//! has the same row space, and its diagonal carries `r` ones from `I` plus
//! one for every odd column of `B`, which are exactly the `k - r` columns
//! inside the maximal set.

use super::max_lit;
use crate::error::{Error, Result};
use crate::gf2::{BitVec, Matrix};
use crate::graph::{ActionMatrix, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UndirectedEquivalent {
    /// The undirected board, on relabelled vertices: vertex `i` stands for
    /// original vertex `perm[i]`.
    pub graph: Graph,
    /// `perm[i]` is the original lamp placed at position `i`.
    pub perm: Vec<usize>,
    /// Maximal number of simultaneously lit lamps, and the loop count of
    /// `graph`.
    pub k: usize,
    /// Rank of the action matrix (size of the identity block).
    pub rank: usize,
    /// The `r x (n - r)` block `B`.
    pub block: Matrix,
}

impl UndirectedEquivalent {
    /// The symmetric adjacency matrix `A'` in relabelled coordinates.
    pub fn matrix(&self) -> Matrix {
        self.graph.adjacency().into_matrix()
    }

    /// The same board with the relabelling undone, so its lightable
    /// configurations coincide with the original board's lamp for lamp.
    pub fn graph_on_original_labels(&self) -> Graph {
        let mut inverse = vec![0; self.perm.len()];
        for (pos, &orig) in self.perm.iter().enumerate() {
            inverse[orig] = pos;
        }
        Graph::from_adjacency(&self.matrix().permute_symmetric(&inverse))
            .expect("permuted square matrix stays square")
    }
}

pub fn undirected_equivalent(g: &Graph, rank_cap: usize) -> Result<UndirectedEquivalent> {
    undirected_equivalent_matrix(&g.adjacency(), rank_cap)
}

/// Builds `A'` for a square action matrix; see the module docs.
pub fn undirected_equivalent_matrix(a: &ActionMatrix, rank_cap: usize) -> Result<UndirectedEquivalent> {
    let m = a.matrix();
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.nrows(),
            cols: m.ncols(),
        });
    }
    let n = m.ncols();
    let best = max_lit(a, rank_cap)?;
    let k = best.k;

    // Maximal lightable lamps first.
    let lit = &best.lit.0;
    let first: Vec<usize> = (0..n).filter(|&j| lit.get(j)).chain((0..n).filter(|&j| !lit.get(j))).collect();
    let rref = m.permute_columns(&first).rref();
    if rref.pivots.iter().any(|&p| p >= k) {
        return Err(Error::Verification(format!(
            "pivot outside the maximal lightable set (pivots {:?}, k = {k})",
            rref.pivots
        )));
    }

    // Within the first k, pivots go first.
    let mut order = rref.pivots.clone();
    order.extend((0..k).filter(|j| !rref.pivots.contains(j)));
    order.extend(k..n);
    let perm: Vec<usize> = order.iter().map(|&j| first[j]).collect();

    let permuted = m.permute_columns(&perm);
    let reduced = permuted.rref();
    let r = reduced.rank;
    if reduced.pivots != (0..r).collect::<Vec<_>>() {
        return Err(Error::Verification(format!(
            "reordered matrix is not in [I B] form (pivots {:?})",
            reduced.pivots
        )));
    }

    let tail: Vec<usize> = (r..n).collect();
    let block = Matrix::from_rows(
        n - r,
        reduced.matrix.rows()[..r].iter().map(|row| row.gather(&tail)).collect(),
    );
    let bt = block.transpose();
    let btb = bt.mul(&block)?;

    let mut rows = Vec::with_capacity(n);
    for i in 0..r {
        rows.push(reduced.matrix.row(i).clone());
    }
    for j in 0..n - r {
        let mut row = BitVec::zeros(n);
        for i in bt.row(j).ones_iter() {
            row.set(i, true);
        }
        for c in btb.row(j).ones_iter() {
            row.set(r + c, true);
        }
        rows.push(row);
    }
    let sym = Matrix::from_rows(n, rows);

    if !sym.is_symmetric() {
        return Err(Error::Verification("A' is not symmetric".into()));
    }
    if sym.diagonal_weight() != k {
        return Err(Error::Verification(format!(
            "A' has {} diagonal ones, expected {k}",
            sym.diagonal_weight()
        )));
    }
    if !sym.row_spaces_equal(&permuted)? {
        return Err(Error::Verification("A' changes the row space".into()));
    }

    Ok(UndirectedEquivalent {
        graph: Graph::from_adjacency(&sym)?,
        perm,
        k,
        rank: r,
        block,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::DEFAULT_RANK_CAP;

    fn equiv(rows: &[&str]) -> UndirectedEquivalent {
        let a = ActionMatrix::new(Matrix::parse_rows(rows).unwrap());
        undirected_equivalent_matrix(&a, DEFAULT_RANK_CAP).unwrap()
    }

    #[test]
    fn loops_only_is_a_fixed_point() {
        let g = Graph::loops_only(4);
        let e = undirected_equivalent(&g, DEFAULT_RANK_CAP).unwrap();
        assert_eq!(e.graph, g);
        assert_eq!(e.perm, vec![0, 1, 2, 3]);
        assert_eq!((e.k, e.rank), (4, 4));
    }

    #[test]
    fn repeated_row() {
        let e = equiv(&["11", "11"]);
        assert_eq!((e.k, e.rank), (2, 1));
        assert_eq!(e.block, Matrix::parse_rows(&["1"]).unwrap());
        assert_eq!(e.matrix(), Matrix::parse_rows(&["11", "11"]).unwrap());
    }

    #[test]
    fn triangular_becomes_two_loops() {
        let e = equiv(&["11", "01"]);
        assert_eq!((e.k, e.rank, e.block.ncols()), (2, 2, 0));
        assert_eq!(e.graph, Graph::loops_only(2));
    }

    #[test]
    fn rank_deficient_directed_board() {
        // Rank 2 with an all-zero fourth row; lit sets {1,2}, {2,3}, {1,3}.
        let a = ActionMatrix::new(Matrix::parse_rows(&["0110", "0011", "0101", "0000"]).unwrap());
        let e = undirected_equivalent_matrix(&a, DEFAULT_RANK_CAP).unwrap();
        let m = e.matrix();
        assert!(m.is_symmetric());
        assert_eq!(m.diagonal_weight(), e.k);
        assert!(m.row_spaces_equal(&a.matrix().permute_columns(&e.perm)).unwrap());
        let back = e.graph_on_original_labels().adjacency();
        assert!(back.matrix().row_spaces_equal(a.matrix()).unwrap());
    }
}
