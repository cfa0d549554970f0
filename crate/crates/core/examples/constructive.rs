//! Lighting every lamp by induction on subsets instead of elimination, on
//! random directed boards whose unpaired arcs form a complete bipartite
//! graph.

use lamplight::graph::random;
use lamplight::solver::{light_all_constructive, ConstructiveOptions};
use lamplight::Error;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> lamplight::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in [4, 8, 12, 16] {
        let g = random::looped_with_bipartite_arcs(&mut rng, n, 0.4);
        let c = light_all_constructive(&g, ConstructiveOptions::default())?;
        let s = c.stats;
        println!(
            "n = {n:2}: presses {} | subsets {} direct {} even {} odd {} memo hits {}",
            c.presses, s.subsets, s.direct, s.even_case, s.odd_case, s.memo_hits
        );
    }

    let cycle: lamplight::graph::Graph = "n 3\nl 0\nl 1\nl 2\na 0 1\na 1 2\na 2 0".parse()?;
    match light_all_constructive(&cycle, ConstructiveOptions::default()) {
        Err(Error::PremiseViolation { subset }) => println!("directed 3-cycle: stuck on {subset:?}"),
        other => println!("directed 3-cycle: {other:?}"),
    }
    Ok(())
}
