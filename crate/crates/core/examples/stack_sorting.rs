//! West's stack sorting, computed recursively and as a product of slides.

use permact::fs_action::class_polys;
use permact::poly::gamma_expand;
use permact::stack_sort::{enumerate_r_sortable, slide_r, sorting_passes, stack_sort, stack_sort_via_slides};
use permact::word::{w, Boundary};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = w("573148926");
    println!("S({p}) = {}", stack_sort(&p));

    let mut cur = p.clone();
    for x in p.descent_set().into_iter().map(|i| p.letters()[i - 1]) {
        let i = cur.position(x).unwrap() + 1;
        let next = slide_r(&cur, i)?;
        println!("  r_{i}: {cur} -> {next}");
        cur = next;
    }
    assert_eq!(cur, stack_sort_via_slides(&p));
    println!("{p} needs {} passes", sorting_passes(&p));

    println!("\nr-stack-sortable permutations of [6]:");
    for r in 1..6 {
        let class = enumerate_r_sortable(6, r)?;
        let c = class_polys(&class, Boundary::Top)?;
        let g = gamma_expand(&c.descent, 5)?;
        println!("  r={r}: {:>3} perms, W = {}, γ = {:?}", class.len(), c.descent, g.gamma);
    }
    Ok(())
}
