#![allow(dead_code)]

use permact::fs_action::{involution_f, orbit, phi, phi_prime};
use permact::mahonian::{ev_set, theta};
use permact::patterns::{avoids_231, count_13_2, count_13_2_by_turns, count_2_31, count_2_31_by_turns};
use permact::stack_sort::{stack_sort, stack_sort_via_slides};
use permact::trees::{binary_tree, dyck_path, kreweras_stats, odd_set, phi_cap, psi, psi_prime, redge_set, veh, word_of, DyckPath};
use permact::word::{Boundary, Word};

macro_rules! require {
    ($bad:ident, $cond:expr, $($msg:tt)*) => {
        if !$cond {
            $bad.push(format!($($msg)*));
        }
    };
}

/// Every per-permutation invariant; returns the ones that fail.
pub fn permutation_invariants(p: &Word) -> Vec<String> {
    let mut bad = Vec::new();
    let top = Boundary::Top;
    let letters = p.letters().to_vec();
    let s = stack_sort(p);
    let pats = (count_2_31(p), count_13_2(p));

    require!(bad, p.to_string().parse::<Word>().as_ref() == Ok(p), "{p}: display/parse");
    require!(bad, p.reverse().reverse() == *p && p.complement().complement() == *p, "{p}: R, C");
    require!(bad, p.inverse().and_then(|q| q.inverse()).as_ref() == Ok(p), "{p}: inverse");

    for &x in &letters {
        let a = phi(p, x).unwrap();
        require!(bad, phi(&a, x).as_ref() == Ok(p), "{p}: φ_{x} not an involution");
        let b = phi_prime(p, x, top).unwrap();
        require!(bad, phi_prime(&b, x, top).as_ref() == Ok(p), "{p}: φ'_{x} not an involution");
        require!(bad, stack_sort(&b) == s, "{p}: S∘φ'_{x} != S");
        require!(bad, (count_2_31(&b), count_13_2(&b)) == pats, "{p}: patterns move under φ'_{x}");
        for &y in letters.iter().filter(|&&y| y > x) {
            let xy = phi(&a, y).unwrap();
            let yx = phi(&phi(p, y).unwrap(), x).unwrap();
            require!(bad, xy == yx, "{p}: φ_{x}, φ_{y} do not commute");
            let xy = phi_prime(&b, y, top).unwrap();
            let yx = phi_prime(&phi_prime(p, y, top).unwrap(), x, top).unwrap();
            require!(bad, xy == yx, "{p}: φ'_{x}, φ'_{y} do not commute");
        }
    }
    let f = involution_f(p);
    require!(bad, involution_f(&f) == *p, "{p}: f not an involution");
    require!(bad, p.is_empty() || f.des() + p.des() == p.len() - 1, "{p}: des f");
    require!(bad, orbit(p, top).is_ok(), "{p}: orbit identity");

    require!(bad, stack_sort_via_slides(p) == s, "{p}: slides");
    require!(bad, word_of(&binary_tree(p)) == *p, "{p}: binary tree round trip");
    require!(bad, pats == (count_2_31_by_turns(p), count_13_2_by_turns(p)), "{p}: pattern oracles");

    let ps = psi(p);
    require!(bad, phi_cap(&ps) == *p && psi(&phi_cap(p)) == *p, "{p}: Φ, Ψ not inverse");
    require!(bad, odd_set(p) == redge_set(&ps), "{p}: Odd != Redge∘Ψ");
    require!(bad, psi_prime(p).des() == veh(p), "{p}: des∘Ψ' != veh");
    require!(bad, ev_set(&theta(p)) == p.descent_set(), "{p}: EV∘Θ != Des");

    if avoids_231(p) {
        match dyck_path(p) {
            Ok(d) => {
                require!(bad, d.to_string().parse::<DyckPath>().as_ref() == Ok(&d), "{p}: Dyck string round trip");
                require!(bad, kreweras_stats(&d) == (veh(p), p.des()), "{p}: Dyck pullback");
            }
            Err(e) => bad.push(format!("{p}: {e}")),
        }
    }
    bad
}
