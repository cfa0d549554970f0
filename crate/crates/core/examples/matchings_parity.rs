//! The board is fully controllable exactly when it has an odd number of
//! complete matchings (loops cover one vertex, edges two).

use lamplight::graph::random;
use lamplight::matchings::{count_complete_matchings, matching_parity, DEFAULT_MATCHING_CAP};
use lamplight::solver::fully_controllable;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> lamplight::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..8 {
        let g = random::undirected(&mut rng, 8, 0.25, 0.85);
        let count = count_complete_matchings(&g, DEFAULT_MATCHING_CAP)?;
        println!(
            "{:2} edges {} loops: {count:4} matchings, determinant {}, controllable {}",
            g.edges().len(),
            g.loops().count_ones(),
            u8::from(matching_parity(&g)?),
            fully_controllable(&g.adjacency())?
        );
    }
    Ok(())
}
