//! Exhaustive scan of every press pattern in a small window: nothing lights
//! one to four lamps, and five lamps come only from mikado diamonds.
//!
//! cargo run --release --example min_lamps -- 5 5

use lamplight::mikado::{diagonal_run, identify_diamond, lit_lamps, min_lamps_search};

fn main() -> lamplight::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (w, h) = match args[..] {
        [w, h] => (w, h),
        _ => (4, 4),
    };
    let census = min_lamps_search(w, h)?;
    println!("{w}x{h} window, {} patterns", census.scanned);
    for (count, patterns) in census.counts.iter().take(6) {
        println!("  {count:2} lamps: {patterns}");
    }
    for p in census.witnesses_for(5) {
        let (k, centre) = identify_diamond(p).expect("five lamps means a diamond");
        println!("  diamond {k} at {centre:?}");
    }

    for r in [5, 6, 7, 20] {
        println!("diagonal run for {r} lamps lights {}", lit_lamps(&diagonal_run(r)?).len());
    }
    Ok(())
}
