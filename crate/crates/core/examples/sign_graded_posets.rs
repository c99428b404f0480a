//! Linear extensions of a canonically labeled sign-graded poset.
//!
//! Pass a poset file to inspect your own; see `tests/data/v_poset.json`.

use permact::posets::{canonical_corpus, v_poset, LabeledPoset};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = match std::env::args().nth(1) {
        Some(path) => LabeledPoset::from_json(&std::fs::read_to_string(path)?)?,
        None => v_poset(),
    };
    println!("{}", p.to_json());
    let g = p.sign_grading()?;
    println!("r = {}, ranks {:?}, canonical: {}", g.r, g.rho, p.is_canonical());

    for o in p.orbits()? {
        let ws: Vec<String> = o.members.iter().map(|m| m.to_string()).collect();
        println!("  orbit {:?}: {}", ws, o.descent_poly);
    }
    let wp = p.wp_polynomial()?;
    println!("W = {}, a = {:?}, peak formula agrees: {}", wp.w, wp.a_gamma.gamma, wp.agree);

    let corpus = canonical_corpus(4)?;
    let agree = corpus.iter().filter(|q| q.wp_polynomial().is_ok_and(|w| w.agree)).count();
    println!("\n{agree} of {} canonical posets with at most 4 elements agree", corpus.len());
    Ok(())
}
