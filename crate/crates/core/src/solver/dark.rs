//! Orderings of a lighting press set in which every button is pressed while
//! its own lamp is dark.

use std::collections::HashSet;

use super::{apply, LampConfig, PressSequence, PressSet};
use crate::error::{Error, Result};
use crate::gf2::BitVec;
use crate::graph::Graph;

/// Largest press set for which all orderings are searched on boards that
/// are not looped bipartite graphs.
pub const DEFAULT_ORDER_CAP: usize = 10;

/// Simulates `seq` from dark; true iff every pressed vertex was dark when
/// pressed.
pub fn is_dark_at_press(g: &Graph, seq: &PressSequence) -> bool {
    let a = g.adjacency();
    let mut lamps = BitVec::zeros(g.n());
    for &v in &seq.0 {
        if lamps.get(v) {
            return false;
        }
        lamps ^= a.matrix().row(v);
    }
    true
}

/// [`dark_only_order_with_cap`] with [`DEFAULT_ORDER_CAP`].
pub fn dark_only_order(g: &Graph, presses: &PressSet) -> Result<Option<PressSequence>> {
    dark_only_order_with_cap(g, presses, DEFAULT_ORDER_CAP)
}

/// Orders `presses`, which must light every lamp from dark, so that each
/// button is pressed while its lamp is off.
///
/// On an undirected bipartite graph with a loop on every vertex the order
/// is the pressed vertices of `X` ascending, then those of `Y` ascending:
/// vertices of `X` are pairwise non-adjacent, and each vertex of `Y` is
/// toggled only once overall while it ends up lit. Other boards fall back to
/// a search over all orderings, refused above `cap` presses; `None` means no
/// ordering works.
pub fn dark_only_order_with_cap(
    g: &Graph,
    presses: &PressSet,
    cap: usize,
) -> Result<Option<PressSequence>> {
    let lit = apply(&g.adjacency(), presses, &LampConfig::dark(g.n()))?;
    if !lit.is_all_lit() {
        return Err(Error::DoesNotLightAll);
    }

    if g.all_loops() && g.is_undirected() {
        if let Some((x, y)) = g.bipartition()? {
            let seq = PressSequence(
                x.iter()
                    .chain(&y)
                    .copied()
                    .filter(|&v| presses.0.get(v))
                    .collect(),
            );
            if !is_dark_at_press(g, &seq) {
                return Err(Error::Verification(format!(
                    "bipartite order {seq} presses a lit vertex"
                )));
            }
            return Ok(Some(seq));
        }
    }

    let buttons = presses.pressed();
    if buttons.len() > cap {
        return Err(Error::CapExceeded {
            what: "press set size for ordering search",
            value: buttons.len(),
            cap,
        });
    }
    let mut search = OrderSearch {
        rows: buttons.iter().map(|&v| g.adjacency().matrix().row(v).clone()).collect(),
        buttons: &buttons,
        dead: HashSet::new(),
        path: Vec::new(),
    };
    let found = search.extend(0, BitVec::zeros(g.n()));
    Ok(found.then(|| PressSequence(search.path.iter().map(|&i| buttons[i]).collect())))
}

/// Depth-first search over orderings. The lamp state depends only on which
/// buttons have been pressed, so dead ends are memoised by that subset.
struct OrderSearch<'a> {
    rows: Vec<BitVec>,
    buttons: &'a [usize],
    dead: HashSet<u64>,
    path: Vec<usize>,
}

impl OrderSearch<'_> {
    fn extend(&mut self, used: u64, lamps: BitVec) -> bool {
        if self.path.len() == self.buttons.len() {
            return true;
        }
        if self.dead.contains(&used) {
            return false;
        }
        for i in 0..self.buttons.len() {
            if (used >> i) & 1 == 1 || lamps.get(self.buttons[i]) {
                continue;
            }
            self.path.push(i);
            if self.extend(used | (1 << i), &lamps ^ &self.rows[i]) {
                return true;
            }
            self.path.pop();
        }
        self.dead.insert(used);
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::grid_graph;

    fn counterexample() -> Graph {
        "n 5\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 1 3\nl 0\nl 1\nl 2\nl 3\nl 4"
            .parse()
            .unwrap()
    }

    /// Brute force over every permutation of `items`.
    fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
        if items.is_empty() {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for i in 0..items.len() {
            let mut rest = items.to_vec();
            let first = rest.remove(i);
            for mut tail in permutations(&rest) {
                tail.insert(0, first);
                out.push(tail);
            }
        }
        out
    }

    #[test]
    fn single_vertex() {
        let g = Graph::loops_only(1);
        let seq = dark_only_order(&g, &PressSet::from_buttons(1, [0])).unwrap();
        assert_eq!(seq, Some(PressSequence(vec![0])));
    }

    #[test]
    fn grid_2x2_x_first() {
        let g = grid_graph(2, 2);
        let all = PressSet::from_buttons(4, 0..4);
        let seq = dark_only_order(&g, &all).unwrap().unwrap();
        assert_eq!(seq.0, vec![0, 3, 1, 2]);
        assert!(is_dark_at_press(&g, &seq));
        // Oracle: simulate all 24 orderings.
        let valid: Vec<Vec<usize>> = permutations(&[0, 1, 2, 3])
            .into_iter()
            .filter(|p| is_dark_at_press(&g, &PressSequence(p.clone())))
            .collect();
        assert!(valid.contains(&seq.0));
    }

    #[test]
    fn counterexample_has_no_dark_order() {
        let g = counterexample();
        let triangle = PressSet::from_buttons(5, [1, 2, 3]);
        assert_eq!(dark_only_order(&g, &triangle).unwrap(), None);
        assert!(permutations(&[1, 2, 3])
            .into_iter()
            .all(|p| !is_dark_at_press(&g, &PressSequence(p))));
    }

    #[test]
    fn rejects_non_lighting_press_set() {
        let g = grid_graph(2, 2);
        assert_eq!(
            dark_only_order(&g, &PressSet::from_buttons(4, [0])),
            Err(Error::DoesNotLightAll)
        );
    }

    #[test]
    fn search_finds_order_on_odd_cycle() {
        // Looped 5-cycle: pressing everything lights each lamp 3 times.
        let g: Graph = "n 5\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 4 0\nl 0\nl 1\nl 2\nl 3\nl 4"
            .parse()
            .unwrap();
        let all = PressSet::from_buttons(5, 0..5);
        let seq = dark_only_order(&g, &all).unwrap();
        let brute = permutations(&[0, 1, 2, 3, 4])
            .into_iter()
            .find(|p| is_dark_at_press(&g, &PressSequence(p.clone())));
        assert_eq!(seq.map(|s| s.0), brute);
    }

    #[test]
    fn search_cap_is_enforced() {
        let g: Graph = "n 3\ne 0 1\ne 1 2\ne 2 0\nl 0\nl 1\nl 2".parse().unwrap();
        let p = PressSet::from_buttons(3, [0]);
        assert!(matches!(
            dark_only_order_with_cap(&g, &p, 0),
            Err(Error::CapExceeded { .. })
        ));
    }
}
