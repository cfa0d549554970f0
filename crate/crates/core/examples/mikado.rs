//! Mikado diamonds on the infinite looped grid: five lamps each, built by
//! superposition, recovered by erasing every other row and column.
//!
//! cargo run --release --example mikado -- 8 mikado.pbm

use lamplight::mikado::{diamond_reach, erase_half, lit_lamps, mikado_diamond, render, RenderMode};

fn main() -> lamplight::Result<()> {
    let mut args = std::env::args().skip(1);
    let k: u32 = args.next().and_then(|a| a.parse().ok()).unwrap_or(7);
    let out = args.next();

    for j in 1..=k {
        let d = mikado_diamond(j)?;
        let lit = lit_lamps(&d);
        let erased = if j > 1 { erase_half(&d) == mikado_diamond(j - 1)? } else { true };
        println!(
            "diamond {j:2}: {:7} presses, lit {} (reach {}), erases to previous: {erased}",
            d.len(),
            lit,
            diamond_reach(j)
        );
    }

    let d = mikado_diamond(k)?;
    match out {
        Some(path) => {
            std::fs::write(&path, render(&d, RenderMode::Presses).to_pbm()).expect("write bitmap");
            println!("wrote {path}");
        }
        None if k <= 4 => print!("{}", render(&d, RenderMode::Presses).to_pbm()),
        None => {}
    }
    Ok(())
}
