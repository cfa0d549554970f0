//! Random board generators for sampling-based checks. All take an explicit
//! RNG so callers control seeding.

use rand::seq::SliceRandom;
use rand::Rng;

use super::Graph;

/// Each ordered pair carries an arc with probability `arc_p`, each vertex a
/// loop with probability `loop_p`.
pub fn digraph<R: Rng + ?Sized>(rng: &mut R, n: usize, arc_p: f64, loop_p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        if rng.gen_bool(loop_p) {
            g.add_loop(u);
        }
        for v in 0..n {
            if u != v && rng.gen_bool(arc_p) {
                g.add_arc(u, v);
            }
        }
    }
    g
}

/// Undirected graph with edge probability `edge_p` and loop probability
/// `loop_p`.
pub fn undirected<R: Rng + ?Sized>(rng: &mut R, n: usize, edge_p: f64, loop_p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        if rng.gen_bool(loop_p) {
            g.add_loop(u);
        }
        for v in u + 1..n {
            if rng.gen_bool(edge_p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Looped bipartite graph: vertices get a random side, and each cross pair
/// is joined with probability `edge_p`.
pub fn bipartite_looped<R: Rng + ?Sized>(rng: &mut R, n: usize, edge_p: f64) -> Graph {
    let side: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
    let mut g = Graph::loops_only(n);
    for u in 0..n {
        for v in u + 1..n {
            if side[u] != side[v] && rng.gen_bool(edge_p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// A loop on every vertex, a random bipartition `X ∪ Y` whose cross pairs
/// are all joined by a single arc of random direction, and random undirected
/// edges inside each part with probability `edge_p`.
pub fn looped_with_bipartite_arcs<R: Rng + ?Sized>(rng: &mut R, n: usize, edge_p: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let split = rng.gen_range(0..=n);
    let mut in_x = vec![false; n];
    for &v in &order[..split] {
        in_x[v] = true;
    }
    let mut g = Graph::loops_only(n);
    for u in 0..n {
        for v in u + 1..n {
            if in_x[u] != in_x[v] {
                if rng.gen() {
                    g.add_arc(u, v);
                } else {
                    g.add_arc(v, u);
                }
            } else if rng.gen_bool(edge_p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generators_respect_their_shapes() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=8 {
            let g = undirected(&mut rng, n, 0.5, 0.5);
            assert!(g.is_undirected());
            let b = bipartite_looped(&mut rng, n, 0.6);
            assert!(b.all_loops());
            assert!(b.bipartition().unwrap().is_some());
            let c = looped_with_bipartite_arcs(&mut rng, n, 0.5);
            assert!(c.unpaired_arcs_complete_bipartite());
            assert!(c.odd_subsets_induce_odd_edges(20).unwrap());
        }
    }
}
