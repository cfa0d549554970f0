//! A board where no press set lights more than about half the lamps: k
//! buttons, one lamp per nonzero k-bit word.

use lamplight::graph::hypercube_game;
use lamplight::solver::{majority_witness, max_lit, DEFAULT_MAJORITY_CAP};

fn main() -> lamplight::Result<()> {
    for k in 1..=8 {
        let a = hypercube_game(k)?;
        let best = max_lit(&a, k)?;
        let w = majority_witness(&a, DEFAULT_MAJORITY_CAP)?;
        println!(
            "k = {k}: {:3} lamps, at most {:3} lit, majority witness {w}",
            a.lamps(),
            best.k
        );
    }
    Ok(())
}
