//! Orbits of the modified Foata-Strehl action and the involution `f`.
//!
//! cargo run --example orbits -- 573148926 8

use permact::fs_action::{involution_f, orbit, orbit_partition, phi, x_factorization};
use permact::word::{Boundary, Word};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w: Word = std::env::args().nth(1).unwrap_or_else(|| "573148926".into()).parse()?;

    let x: i32 = match std::env::args().nth(2) {
        Some(s) => s.parse()?,
        None => w.letters().iter().copied().max().unwrap_or(1),
    };
    let fact = x_factorization(&w, x)?;
    println!("{x}-factorization of {w}: {fact:?}");
    println!("φ_{x}({w}) = {}", phi(&w, x)?);
    println!("f({w}) = {}", involution_f(&w));

    let o = orbit(&w, Boundary::Top)?;
    println!("\norbit of {w}: {} members, representative {}", o.members.len(), o.rep);
    println!("  Σ t^des = {}", o.descent_poly);
    println!("  peak = {}, so this is t^{}(1+t)^{}", o.peak, o.peak, w.len() - 1 - 2 * o.peak);

    // S_5 splits into orbits of sizes 2^(n-1-2k)
    let all: Vec<Word> = permact::enumerate::permutations(5).collect();
    let mut sizes: Vec<usize> = orbit_partition(&all, Boundary::Top)?.iter().map(|o| o.members.len()).collect();
    sizes.sort_unstable();
    println!("\norbit sizes in S_5: {sizes:?}");
    Ok(())
}
