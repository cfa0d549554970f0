//! Lighting every room while only ever pressing the switch of a dark room.

use lamplight::graph::{grid_graph, random, Graph};
use lamplight::solver::{dark_only_order, lightable, LampConfig, PressSet};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn order(g: &Graph) -> lamplight::Result<()> {
    let presses = lightable(&g.adjacency(), &LampConfig::all_lit(g.n()))?.expect("lightable");
    match dark_only_order(g, &presses)? {
        Some(seq) => println!("  presses {presses}: order {seq}"),
        None => println!("  presses {presses}: no dark-only order"),
    }
    Ok(())
}

fn main() -> lamplight::Result<()> {
    println!("3x4 grid");
    order(&grid_graph(3, 4))?;

    let mut rng = ChaCha8Rng::seed_from_u64(11);
    println!("random looped bipartite board");
    order(&random::bipartite_looped(&mut rng, 10, 0.3))?;

    // A triangle breaks bipartiteness: pressing 1, 2, 3 lights everything,
    // but whichever goes first lights the other two.
    let g: Graph = "n 5\nl 0\nl 1\nl 2\nl 3\nl 4\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 1 3".parse()?;
    println!("path with a chord");
    order(&g)?;
    let triangle = PressSet::from_buttons(5, [1, 2, 3]);
    println!("  triangle ordering: {:?}", dark_only_order(&g, &triangle)?);
    Ok(())
}
