//! Trees, Ψ and Φ, and the Dyck path of a 231-avoider.

use permact::trees::{binary_tree, dyck_path, kreweras_stats, odd_set, phi_cap, psi, psi_prime, redge_set, unordered_tree, veh};
use permact::word::w;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = w("652419738");
    println!("T({p}) = {}", serde_json::to_string(&unordered_tree(&p))?);
    println!("veh = {}, Odd = {:?}", veh(&p), odd_set(&p));
    let s = psi(&p);
    println!("Ψ = {s}, Redge(Ψ) = {:?}, Φ(Ψ) = {}", redge_set(&s), phi_cap(&s));
    println!("Ψ' = {} with {} descents", psi_prime(&p), psi_prime(&p).des());

    let mut t = binary_tree(&w("573148926"));
    println!("\nright children of the binary tree: {:?}", t.right_children());
    t.flip_one_child_nodes();
    println!("after flipping one-child nodes: {}", t.word());

    let q = w("3214765");
    let d = dyck_path(&q)?;
    let (even, double) = kreweras_stats(&d);
    println!("\n{q} -> {d}: even-height up-steps {even}, double up-steps {double}");
    Ok(())
}
