//! `A_n(p,q,t)`: descents refined by the patterns (2-31) and (13-2).

use permact::patterns::{check_divisibility, check_mahonian, check_pq_symmetry, count_13_2, count_2_31, latex_apq, refined_eulerian};
use permact::word::w;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = w("573148926");
    println!("{p}: (2-31) = {}, (13-2) = {}", count_2_31(&p), count_13_2(&p));

    for n in 1..=6 {
        let a = refined_eulerian(n)?;
        println!("A_{n} = {}", latex_apq(n, &a.b));
    }

    let n = 6;
    println!("\nsymmetric in p, q: {}", check_pq_symmetry(n)?);
    let m = check_mahonian(n)?;
    println!("A_{n}(q,q^2,q) = [n]_q!: {}", m.holds);
    for c in check_divisibility(n)? {
        println!("(p+q)^{} | b_({n},{}): {}  quotient {}", c.i, c.i, c.divisible, c.quotient);
    }
    Ok(())
}
