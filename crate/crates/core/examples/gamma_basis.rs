//! Gamma vectors of the Eulerian, Narayana and involution polynomials.

use permact::harness::{table, Format, TableKind};
use permact::poly::{gamma_expand, UniPoly};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = UniPoly::from_coeffs('t', &[1, 11, 11, 1]);
    let g = gamma_expand(&p, 3)?;
    println!("{p} = Σ γ_i t^i (1+t)^(3-2i) with γ = {:?}", g.gamma);
    assert_eq!(g.reconstruct('t'), p);

    for kind in TableKind::ALL {
        let t = table(kind, 7)?;
        print!("\n{}", String::from_utf8(t.emit(Format::Csv))?);
    }
    Ok(())
}
