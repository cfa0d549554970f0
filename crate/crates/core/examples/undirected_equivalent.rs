//! Replacing a directed board by an undirected one with exactly the same
//! lightable configurations.

use lamplight::graph::random;
use lamplight::solver::{undirected_equivalent, DEFAULT_RANK_CAP};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> lamplight::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let g = random::digraph(&mut rng, 6, 0.35, 0.5);
    println!("directed board:\n{g}");
    let e = undirected_equivalent(&g, DEFAULT_RANK_CAP)?;
    println!("max lit k = {}, rank = {}, order {:?}", e.k, e.rank, e.perm);
    println!("undirected board on the original labels:\n{}", e.graph_on_original_labels());
    let same = e
        .graph_on_original_labels()
        .adjacency()
        .matrix()
        .row_spaces_equal(g.adjacency().matrix())?;
    println!("same lightable configurations: {same}");
    Ok(())
}
