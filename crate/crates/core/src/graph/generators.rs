use super::{ActionMatrix, Graph};
use crate::error::{Error, Result};
use crate::gf2::{BitVec, Matrix};

/// The `m x n` orthogonal grid with a loop on every vertex. Cell `(r, c)`
/// is vertex `r * n + c`.
pub fn grid_graph(m: usize, n: usize) -> Graph {
    let mut g = Graph::loops_only(m * n);
    for r in 0..m {
        for c in 0..n {
            let v = r * n + c;
            if c + 1 < n {
                g.add_edge(v, v + 1);
            }
            if r + 1 < m {
                g.add_edge(v, v + n);
            }
        }
    }
    g
}

/// `k` buttons and `2^k - 1` lamps labelled by the nonzero `k`-bit words;
/// button `i` toggles exactly the lamps whose label has bit `i` set. Lamp
/// column `j` carries label `j + 1`.
pub fn hypercube_game(k: usize) -> Result<ActionMatrix> {
    if !(1..=63).contains(&k) {
        return Err(Error::InvalidArgument(format!(
            "hypercube game needs 1 <= k <= 63, got {k}"
        )));
    }
    let lamps = (1usize << k) - 1;
    let rows = (0..k)
        .map(|i| BitVec::from_indices(lamps, (1..=lamps).filter(|w| (w >> i) & 1 == 1).map(|w| w - 1)))
        .collect();
    Ok(ActionMatrix::new(Matrix::from_rows(lamps, rows)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_grids() {
        assert_eq!(grid_graph(1, 1), Graph::loops_only(1));
        let k2: Graph = "n 2\ne 0 1\nl 0\nl 1".parse().unwrap();
        assert_eq!(grid_graph(1, 2), k2);
        let g = grid_graph(2, 2);
        assert_eq!((g.n(), g.edges().len(), g.loops().count_ones()), (4, 4, 4));
        // m(n-1) + n(m-1) edges
        assert_eq!(grid_graph(3, 5).edges().len(), 3 * 4 + 5 * 2);
    }

    #[test]
    fn hypercube_examples() {
        let h1 = hypercube_game(1).unwrap();
        assert_eq!(*h1.matrix(), Matrix::identity(1));

        // labels 01, 10, 11 in columns 0, 1, 2
        let h2 = hypercube_game(2).unwrap();
        assert_eq!((h2.buttons(), h2.lamps()), (2, 3));
        assert_eq!(*h2.matrix(), Matrix::parse_rows(&["101", "011"]).unwrap());

        for k in 1..=10 {
            let h = hypercube_game(k).unwrap();
            for row in h.matrix().rows() {
                assert_eq!(row.count_ones(), 1 << (k - 1));
            }
        }
        assert!(hypercube_game(0).is_err());
    }
}
