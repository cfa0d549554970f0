//! Which looped m x n grids are fully controllable, from a polynomial gcd
//! over GF(2), checked against the monomer-dimer transfer matrix.

use lamplight::gf2::chebyshev2;
use lamplight::matchings::{grid_controllable, monomer_dimer_parity};

fn main() -> lamplight::Result<()> {
    let size = 16;
    println!("    n{}", (1..=size).map(|n| format!("{n:>3}")).collect::<String>());
    for m in 1..=size {
        let mut row = String::new();
        for n in 1..=size {
            let ok = grid_controllable(m, n)?;
            assert_eq!(ok, monomer_dimer_parity(m, n, size)?);
            row.push_str(if ok { "  ." } else { "  x" });
        }
        println!("m {m:2} {row}");
    }
    let p5 = chebyshev2(5);
    let shifted = chebyshev2(5).shift_by_one();
    println!("p5 = {p5}, p5(1+λ) = {shifted}, gcd = {}", p5.gcd(&shifted)?);
    Ok(())
}
