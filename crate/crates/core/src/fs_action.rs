//! The x-factorization involutions `φ_x`, their modified versions `φ'_x`
//! (which freeze peaks and valleys), and the `Z_2^n` action they generate.
//!
//! For a letter `x` of `w`, write `w = w1 w2 x w4 w5` where `w2` and `w4` are
//! the maximal runs of letters smaller than `x` directly left and right of
//! `x`. `φ_x` swaps `w2` and `w4`. `φ'_x` does the same when `x` is a double
//! ascent or double descent and is the identity otherwise. All of these are
//! commuting involutions.

use std::collections::{BTreeMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{gamma_expand, GammaExpansion, UniPoly};
use crate::word::{Boundary, LetterClass, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XFactorization {
    pub w1: Vec<i32>,
    pub w2: Vec<i32>,
    pub x: i32,
    pub w4: Vec<i32>,
    pub w5: Vec<i32>,
}

pub fn x_factorization(w: &Word, x: i32) -> Result<XFactorization> {
    let a = w.letters();
    let idx = w.position(x).ok_or(Error::LetterNotPresent(x))?;
    let mut start = idx;
    while start > 0 && a[start - 1] < x {
        start -= 1;
    }
    let mut end = idx + 1;
    while end < a.len() && a[end] < x {
        end += 1;
    }
    Ok(XFactorization {
        w1: a[..start].to_vec(),
        w2: a[start..idx].to_vec(),
        x,
        w4: a[idx + 1..end].to_vec(),
        w5: a[end..].to_vec(),
    })
}

/// `φ_x(w) = w1 w4 x w2 w5`.
pub fn phi(w: &Word, x: i32) -> Result<Word> {
    let f = x_factorization(w, x)?;
    let mut out = Vec::with_capacity(w.len());
    out.extend(f.w1);
    out.extend(f.w4);
    out.push(x);
    out.extend(f.w2);
    out.extend(f.w5);
    Ok(Word::from_vec_unchecked(out))
}

/// `φ_x` on double ascents and double descents, identity on peaks and valleys.
pub fn phi_prime(w: &Word, x: i32, b: Boundary) -> Result<Word> {
    match w.class_of(x, b)? {
        LetterClass::DoubleAscent | LetterClass::DoubleDescent => phi(w, x),
        LetterClass::Peak | LetterClass::Valley => Ok(w.clone()),
    }
}

fn sorted_set(letters: impl IntoIterator<Item = i32>) -> Vec<i32> {
    let mut s: Vec<i32> = letters.into_iter().collect();
    s.sort_unstable();
    s.dedup();
    s
}

/// `φ_S`, applied in increasing letter order.
pub fn phi_set(w: &Word, set: impl IntoIterator<Item = i32>) -> Result<Word> {
    sorted_set(set).into_iter().try_fold(w.clone(), |acc, x| phi(&acc, x))
}

/// `φ'_S`, applied in increasing letter order.
pub fn phi_prime_set(w: &Word, set: impl IntoIterator<Item = i32>, b: Boundary) -> Result<Word> {
    sorted_set(set)
        .into_iter()
        .try_fold(w.clone(), |acc, x| phi_prime(&acc, x, b))
}

/// The involution `f = φ'_{all letters}` (top boundary). It satisfies
/// `des(f(w)) + des(w) = n - 1`.
pub fn involution_f(w: &Word) -> Word {
    phi_prime_set(w, w.letters().iter().copied(), Boundary::Top).expect("letters taken from the word")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HopDirection {
    Left,
    Right,
}

/// Shape of the gap a hopping letter `x` lands in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gap {
    /// `a_i < x < a_{i+1}`
    Rising,
    /// `a_i > x > a_{i+1}`
    Falling,
}

/// Removes `x` and reinserts it into the first gap of the given shape,
/// scanning away from `x` in direction `dir`. The sentinels of `b` sit at
/// both ends.
pub fn hop(w: &Word, x: i32, dir: HopDirection, gap: Gap, b: Boundary) -> Result<Word> {
    let idx = w.position(x).ok_or(Error::LetterNotPresent(x))?;
    let s = b.sentinel();
    // padded word with x removed; x sat between rest[idx] and rest[idx + 1]
    let mut rest: Vec<i64> = Vec::with_capacity(w.len() + 1);
    rest.push(s);
    rest.extend(w.letters().iter().enumerate().filter(|&(i, _)| i != idx).map(|(_, &a)| a as i64));
    rest.push(s);
    let xv = x as i64;
    let fits = |j: usize| match gap {
        Gap::Rising => rest[j] < xv && xv < rest[j + 1],
        Gap::Falling => rest[j] > xv && xv > rest[j + 1],
    };
    let slot = match dir {
        HopDirection::Right => (idx + 1..rest.len() - 1).find(|&j| fits(j)),
        HopDirection::Left => (0..idx).rev().find(|&j| fits(j)),
    }
    .ok_or_else(|| Error::BrokenInvariant(format!("no landing gap for {x} in {w}")))?;
    let mut out: Vec<i32> = rest[1..rest.len() - 1].iter().map(|&a| a as i32).collect();
    out.insert(slot, x);
    Ok(Word::from_vec_unchecked(out))
}

/// Closure of `{start}` under the generators `step(·, x)` for each `x` in
/// `letters`, sorted.
pub fn closure<F>(start: &Word, letters: &[i32], mut step: F) -> Result<Vec<Word>>
where
    F: FnMut(&Word, i32) -> Result<Word>,
{
    let mut seen: HashSet<Word> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(cur) = queue.pop_front() {
        for &x in letters {
            let next = step(&cur, x)?;
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let mut members: Vec<Word> = seen.into_iter().collect();
    members.sort();
    Ok(members)
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitReport {
    pub members: Vec<Word>,
    /// The member without double descents.
    pub rep: Word,
    /// Peak count of `rep`.
    pub peak: usize,
    pub descent_poly: UniPoly,
    pub gamma_claim: Option<GammaExpansion>,
}

impl OrbitReport {
    pub(crate) fn build(members: Vec<Word>, b: Boundary, d: Option<u32>) -> Result<Self> {
        let rep = members
            .iter()
            .find(|m| m.double_descents(b) == 0)
            .cloned()
            .ok_or_else(|| Error::NoCanonicalRep(members[0].to_string()))?;
        let descent_poly = UniPoly::from_exponents(['t'], members.iter().map(|m| [m.des() as u32]));
        let gamma_claim = d.and_then(|d| gamma_expand(&descent_poly, d).ok());
        Ok(OrbitReport {
            peak: rep.peak(b),
            rep,
            members,
            descent_poly,
            gamma_claim,
        })
    }
}

/// `t^k (1+t)^{d - 2k}`.
pub fn orbit_shape(k: usize, d: usize) -> UniPoly {
    &UniPoly::x_pow('t', k as u32) * &UniPoly::one_plus_x_pow('t', (d - 2 * k) as u32)
}

/// Orbit of `w` under the modified action.
///
/// With the top boundary the descent polynomial is checked against
/// `t^{peak} (1+t)^{n-1-2 peak}` and a mismatch is reported as
/// [`Error::BrokenInvariant`].
pub fn orbit(w: &Word, b: Boundary) -> Result<OrbitReport> {
    let members = closure(w, w.letters(), |u, x| phi_prime(u, x, b))?;
    let n = w.len();
    let d = (n > 0).then(|| n as u32 - 1);
    let report = OrbitReport::build(members, b, d)?;
    if b == Boundary::Top && n > 0 {
        let peak = w.peak(b);
        if 2 * peak > n - 1 || report.descent_poly != orbit_shape(peak, n - 1) {
            return Err(Error::BrokenInvariant(format!(
                "orbit of {w}: descent polynomial {} is not t^{peak}(1+t)^{}",
                report.descent_poly,
                n as i64 - 1 - 2 * peak as i64
            )));
        }
    }
    Ok(report)
}

/// Orbit of `w` under the original action generated by all `φ_x`.
pub fn orbit_proper(w: &Word) -> Vec<Word> {
    closure(w, w.letters(), phi).expect("letters taken from the word")
}

/// Splits a set of words into orbits of the modified action.
///
/// Orbits that leave the set are still reported in full; use
/// [`is_action_invariant`] to check closure.
pub fn orbit_partition(words: &[Word], b: Boundary) -> Result<Vec<OrbitReport>> {
    let mut seen: HashSet<Word> = HashSet::new();
    let mut out = Vec::new();
    for w in words {
        if seen.contains(w) {
            continue;
        }
        let report = orbit(w, b)?;
        seen.extend(report.members.iter().cloned());
        out.push(report);
    }
    Ok(out)
}

/// True if every `φ'_x` maps the set into itself.
pub fn is_action_invariant(words: &[Word], b: Boundary) -> bool {
    let set: HashSet<&Word> = words.iter().collect();
    words.iter().all(|w| {
        w.letters()
            .iter()
            .all(|&x| phi_prime(w, x, b).map(|u| set.contains(&u)).unwrap_or(false))
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassPolys {
    /// `Σ t^{des}`
    pub descent: UniPoly,
    /// `Σ t^{peak}`
    pub peak: UniPoly,
    #[serde(with = "crate::poly::int_json::vec")]
    pub b: Vec<BigInt>,
}

/// `W(T;t)`, `W̄(T;t)` and `b_i(T) = 2^{-n+1+2i} #{π ∈ T : peak(π) = i}` for a
/// set `T` of words of a common length `n >= 1`.
pub fn class_polys(words: &[Word], b: Boundary) -> Result<ClassPolys> {
    let Some(n) = words.first().map(Word::len) else {
        return Ok(ClassPolys {
            descent: UniPoly::zero(['t']),
            peak: UniPoly::zero(['t']),
            b: Vec::new(),
        });
    };
    if n == 0 || words.iter().any(|w| w.len() != n) {
        return Err(Error::InvalidArgument("class must consist of nonempty words of one length".into()));
    }
    let descent = UniPoly::from_exponents(['t'], words.iter().map(|w| [w.des() as u32]));
    let mut peak_counts: BTreeMap<usize, u64> = BTreeMap::new();
    for w in words {
        *peak_counts.entry(w.peak(b)).or_default() += 1;
    }
    let peak = UniPoly::from_exponents(['t'], words.iter().map(|w| [w.peak(b) as u32]));
    let half = (n - 1) / 2;
    if let Some((&k, _)) = peak_counts.iter().find(|(&k, _)| k > half) {
        return Err(Error::NonIntegralB(format!("peak count {k} exceeds (n-1)/2")));
    }
    let mut bvec = Vec::with_capacity(half + 1);
    for i in 0..=half {
        let count = BigInt::from(*peak_counts.get(&i).unwrap_or(&0)) << (2 * i);
        let denom = BigInt::from(1u8) << (n - 1);
        if !(&count % &denom).is_zero() {
            return Err(Error::NonIntegralB(format!("b_{i} = {count}/{denom}")));
        }
        bvec.push(count / denom);
    }
    let recon = GammaExpansion { d: n as u32 - 1, gamma: bvec.clone() }.reconstruct('t');
    if recon != descent {
        return Err(Error::NonIntegralB(format!("Σ b_i t^i(1+t)^(n-1-2i) = {recon} but W = {descent}")));
    }
    Ok(ClassPolys { descent, peak, b: bvec })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::permutations;
    use crate::trees::DecreasingBinaryTree;
    use crate::word::w;

    #[test]
    fn factorizations() {
        let f = x_factorization(&w("573148926"), 8).unwrap();
        assert_eq!((f.w1, f.w2, f.w4, f.w5), (vec![], vec![5, 7, 3, 1, 4], vec![], vec![9, 2, 6]));
        let f = x_factorization(&w("21"), 1).unwrap();
        assert_eq!((f.w1, f.w2, f.w4, f.w5), (vec![2], vec![], vec![], vec![]));
        let f = x_factorization(&w("573148926"), 7).unwrap();
        assert_eq!((f.w1, f.w2, f.w4, f.w5), (vec![], vec![5], vec![3, 1, 4], vec![8, 9, 2, 6]));
        let f = x_factorization(&w("573148926"), 4).unwrap();
        assert_eq!((f.w1, f.w2, f.w4, f.w5), (vec![5, 7], vec![3, 1], vec![], vec![8, 9, 2, 6]));
        assert_eq!(x_factorization(&w("21"), 5), Err(Error::LetterNotPresent(5)));
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&w("573148926"), 8).unwrap(), w("857314926"));
        assert_eq!(phi(&w("573148926"), 7).unwrap(), w("314758926"));
        assert_eq!(phi(&w("21"), 1).unwrap(), w("21"));
        assert_eq!(phi(&w("312"), 2).unwrap(), w("321"));
    }

    #[test]
    fn phi_prime_examples() {
        let pi = w("573148926");
        assert_eq!(phi_prime(&pi, 4, Boundary::Top).unwrap(), w("574318926"));
        assert_eq!(phi_prime(&pi, 3, Boundary::Top).unwrap(), w("571348926"));
        assert_eq!(phi_prime(&pi, 7, Boundary::Top).unwrap(), pi);
    }

    // Flip the lone child of every one-child node of the decreasing binary tree.
    fn one_child_flip_oracle(pi: &Word) -> Word {
        let mut tree = DecreasingBinaryTree::new(pi);
        tree.flip_one_child_nodes();
        tree.word()
    }

    #[test]
    fn involution_f_on_sample_word() {
        let pi = w("573148926");
        let f = phi_prime_set(&pi, 1..=9, Boundary::Top).unwrap();
        assert_eq!(f.des() + pi.des(), 8);
        assert_eq!(f.des(), 5);
        assert_eq!(f, one_child_flip_oracle(&pi));
        assert_eq!(f, w("857413962"));
        assert_eq!(phi_prime_set(&f, 1..=9, Boundary::Top).unwrap(), pi);
        assert_eq!(phi_prime_set(&pi, [], Boundary::Top).unwrap(), pi);
    }

    #[test]
    fn involution_f_matches_tree_flip_exhaustive() {
        for n in 1..=7 {
            for p in permutations(n) {
                assert_eq!(involution_f(&p), one_child_flip_oracle(&p), "{p}");
            }
        }
    }

    #[test]
    fn orbit_examples() {
        let r = orbit(&w("573148926"), Boundary::Top).unwrap();
        assert_eq!(r.members.len(), 16);
        assert_eq!(r.descent_poly, orbit_shape(2, 8));
        assert_eq!(r.gamma_claim, Some(GammaExpansion::unit(8, 2)));
        assert!(r.members.contains(&r.rep));
        assert_eq!(r.rep.double_descents(Boundary::Top), 0);

        let r = orbit(&w("1"), Boundary::Top).unwrap();
        assert_eq!(r.members, vec![w("1")]);
        assert_eq!(r.descent_poly, UniPoly::one(['t']));

        let r = orbit(&w("21"), Boundary::Top).unwrap();
        assert_eq!(r.members, vec![w("12"), w("21")]);
        assert_eq!(r.descent_poly, UniPoly::from_coeffs('t', &[1, 1]));
    }

    #[test]
    fn zero_boundary_orbit_without_rep() {
        // 1 is a double descent of 0 2 1 0 but φ_1 fixes the word
        assert!(matches!(orbit(&w("21"), Boundary::Zero), Err(Error::NoCanonicalRep(_))));
    }

    #[test]
    fn class_polys_examples() {
        let s3: Vec<Word> = permutations(3).collect();
        let c = class_polys(&s3, Boundary::Top).unwrap();
        assert_eq!(c.descent, UniPoly::from_coeffs('t', &[1, 4, 1]));
        assert_eq!(c.b, vec![BigInt::from(1), BigInt::from(2)]);

        let c = class_polys(&[w("12"), w("21")], Boundary::Top).unwrap();
        assert_eq!(c.descent, UniPoly::from_coeffs('t', &[1, 1]));
        assert_eq!(c.b, vec![BigInt::from(1)]);

        let s4_231: Vec<Word> = permutations(4).filter(crate::patterns::avoids_231).collect();
        let c = class_polys(&s4_231, Boundary::Top).unwrap();
        assert_eq!(c.descent, UniPoly::from_coeffs('t', &[1, 6, 6, 1]));
        assert_eq!(c.b, vec![BigInt::from(1), BigInt::from(3)]);
    }

    #[test]
    fn class_polys_rejects_non_invariant_set() {
        assert!(matches!(class_polys(&[w("12")], Boundary::Top), Err(Error::NonIntegralB(_))));
    }

    #[test]
    fn hop_agrees_with_phi_prime() {
        for n in 1..=7 {
            for p in permutations(n) {
                for &x in p.letters() {
                    let expected = match p.class_of(x, Boundary::Top).unwrap() {
                        LetterClass::DoubleDescent => hop(&p, x, HopDirection::Right, Gap::Rising, Boundary::Top).unwrap(),
                        LetterClass::DoubleAscent => hop(&p, x, HopDirection::Left, Gap::Falling, Boundary::Top).unwrap(),
                        _ => p.clone(),
                    };
                    assert_eq!(phi_prime(&p, x, Boundary::Top).unwrap(), expected, "{p} x={x}");
                }
            }
        }
    }

    #[test]
    fn commuting_involutions_exhaustive() {
        for n in 1..=6 {
            for p in permutations(n) {
                for x in 1..=n as i32 {
                    let px = phi_prime(&p, x, Boundary::Top).unwrap();
                    assert_eq!(phi_prime(&px, x, Boundary::Top).unwrap(), p);
                    assert_eq!(phi(&phi(&p, x).unwrap(), x).unwrap(), p);
                    for y in x + 1..=n as i32 {
                        let a = phi_prime(&px, y, Boundary::Top).unwrap();
                        let b = phi_prime(&phi_prime(&p, y, Boundary::Top).unwrap(), x, Boundary::Top).unwrap();
                        assert_eq!(a, b, "{p} x={x} y={y}");
                        let a = phi(&phi(&p, x).unwrap(), y).unwrap();
                        let b = phi(&phi(&p, y).unwrap(), x).unwrap();
                        assert_eq!(a, b);
                    }
                }
            }
        }
    }
}
