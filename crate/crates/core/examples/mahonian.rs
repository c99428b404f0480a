//! The increasing tree, EV and SIVEH, and Θ.

use permact::mahonian::{euler_mahonian, ev_set, increasing_tree, siveh, theta, veh_prime};
use permact::word::w;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = w("586317492");
    println!("T'({p}) = {}", serde_json::to_string(&increasing_tree(&p))?);
    println!("EV = {:?}, veh' = {}, SIVEH = {}", ev_set(&p), veh_prime(&p), siveh(&p));
    let t = theta(&p);
    println!("Θ = {t}, EV(Θ) = {:?}, Des = {:?}", ev_set(&t), p.descent_set());

    for n in 1..=6 {
        let e = euler_mahonian(n)?;
        println!("n={n}: equal = {}  {}", e.equal, e.des_maj);
    }
    Ok(())
}
