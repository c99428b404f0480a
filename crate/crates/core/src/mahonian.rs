//! The increasing tree `T'(π)`, the statistics `veh'`, `EV`, `SIVEH`, and the
//! recursive bijection `Θ` with `EV(Θ(π)) = Des(π)`.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use serde::Serialize;

use crate::enumerate::fold_permutations;
use crate::error::Result;
use crate::limits;
use crate::poly::BiPoly;
use crate::trees::{TreeLabel, UnorderedTree};
use crate::word::Word;

/// Parent of each letter in `T'(w)`: `None` for right-to-left minima (children
/// of the root `0`), otherwise the leftmost smaller letter to the right.
fn parents(a: &[i32]) -> Vec<Option<i32>> {
    (0..a.len())
        .map(|i| a[i + 1..].iter().copied().find(|&x| x < a[i]))
        .collect()
}

fn attach(label: TreeLabel, key: Option<i32>, kids: &HashMap<Option<i32>, Vec<i32>>) -> UnorderedTree {
    let children = kids
        .get(&key)
        .map(|v| v.iter().map(|&x| attach(TreeLabel::Letter(x), Some(x), kids)).collect())
        .unwrap_or_default();
    UnorderedTree { label, children }
}

/// `T'(w)`, rooted at `0`.
pub fn increasing_tree(w: &Word) -> UnorderedTree {
    let a = w.letters();
    let mut kids: HashMap<Option<i32>, Vec<i32>> = HashMap::new();
    for (&x, p) in a.iter().zip(parents(a)) {
        kids.entry(p).or_default().push(x);
    }
    attach(TreeLabel::Zero, None, &kids)
}

/// Positions (1-based) whose letters sit at even positive height in `T'(w)`.
pub fn ev_set(w: &Word) -> BTreeSet<usize> {
    let a = w.letters();
    let par = parents(a);
    let pos: HashMap<i32, usize> = a.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    // a parent always sits to the right, so fill heights right to left
    let mut height = vec![0usize; a.len()];
    for i in (0..a.len()).rev() {
        height[i] = match par[i] {
            None => 1,
            Some(p) => height[pos[&p]] + 1,
        };
    }
    (0..a.len()).filter(|&i| height[i].is_multiple_of(2)).map(|i| i + 1).collect()
}

pub fn veh_prime(w: &Word) -> usize {
    ev_set(w).len()
}

pub fn siveh(w: &Word) -> usize {
    ev_set(w).into_iter().sum()
}

/// `Θ(σ m τ) = Θ(σ^c) m Θ(τ)` with `m` the smallest letter and `σ^c` the
/// complement of `σ` within its own letters.
pub fn theta(w: &Word) -> Word {
    let a = w.letters();
    let Some((m, &min)) = a.iter().enumerate().min_by_key(|&(_, &x)| x) else {
        return Word::empty();
    };
    let sigma = Word::from_vec_unchecked(a[..m].to_vec()).complement();
    let tau = Word::from_vec_unchecked(a[m + 1..].to_vec());
    let mut out = theta(&sigma).into_letters();
    out.push(min);
    out.extend(theta(&tau).into_letters());
    Word::from_vec_unchecked(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct EulerMahonian {
    pub n: usize,
    /// `Σ t^{des} q^{maj}`
    pub des_maj: BiPoly,
    /// `Σ t^{veh'} q^{SIVEH}`
    pub veh_siveh: BiPoly,
    pub equal: bool,
}

/// Joint distributions of `(des, MAJ)` and `(veh', SIVEH)` over `S_n`.
pub fn euler_mahonian(n: usize) -> Result<EulerMahonian> {
    limits::check(n)?;
    type Pair = HashMap<[u32; 2], u64>;
    let (a, b) = fold_permutations(
        n,
        || (Pair::new(), Pair::new()),
        |(mut a, mut b), p| {
            *a.entry([p.des() as u32, p.maj() as u32]).or_default() += 1;
            let ev = ev_set(p);
            *b.entry([ev.len() as u32, ev.iter().sum::<usize>() as u32]).or_default() += 1;
            (a, b)
        },
        |(mut a, mut b), (c, d)| {
            c.into_iter().for_each(|(k, v)| *a.entry(k).or_default() += v);
            d.into_iter().for_each(|(k, v)| *b.entry(k).or_default() += v);
            (a, b)
        },
    );
    let to_poly = |m: Pair| BiPoly::from_terms(['t', 'q'], m.into_iter().map(|(k, v)| (k, BigInt::from(v))));
    let des_maj = to_poly(a);
    let veh_siveh = to_poly(b);
    Ok(EulerMahonian {
        n,
        equal: des_maj == veh_siveh,
        des_maj,
        veh_siveh,
    })
}
