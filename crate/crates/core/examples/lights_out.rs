//! Classic lights out on looped grids: which boards are fully controllable,
//! and a press set that lights every lamp.
//!
//! cargo run --example lights_out -- 5 5

use lamplight::graph::grid_graph;
use lamplight::solver::{apply, fully_controllable, lightable, LampConfig};

fn main() -> lamplight::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (m, n) = match args[..] {
        [m, n] => (m, n),
        _ => (5, 5),
    };
    let g = grid_graph(m, n);
    let a = g.adjacency();
    println!("{m}x{n} grid, fully controllable: {}", fully_controllable(&a)?);

    let target = LampConfig::all_lit(g.n());
    let presses = lightable(&a, &target)?.expect("looped undirected boards can always be lit");
    assert_eq!(apply(&a, &presses, &LampConfig::dark(g.n()))?, target);
    for r in 0..m {
        let row: String = (0..n)
            .map(|c| if presses.bits().get(r * n + c) { '#' } else { '.' })
            .collect();
        println!("  {row}");
    }
    println!("{} presses", presses.len());
    Ok(())
}
