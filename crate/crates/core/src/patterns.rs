//! The vincular statistics (2-31) and (13-2), 231-avoidance, the refined
//! Eulerian polynomial `A_n(p,q,t)` and the Narayana polynomials.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::enumerate::{fold_permutations, permutations};
use crate::error::{Error, Result};
use crate::limits;
use crate::poly::{binomial, gamma_expand, q_factorial, BiPoly, GammaExpansion, TriPoly, UniPoly};
use crate::word::{Boundary, LetterClass, Word};

/// Pairs `i < j <= n-1` with `a_{j+1} < a_i < a_j`.
pub fn count_2_31(w: &Word) -> usize {
    let a = w.letters();
    let n = a.len();
    let mut count = 0;
    for j in 1..n.saturating_sub(1) {
        let (hi, lo) = (a[j], a[j + 1]);
        if lo < hi {
            count += a[..j].iter().filter(|&&x| lo < x && x < hi).count();
        }
    }
    count
}

/// Pairs `2 <= i < j` with `a_{i-1} < a_j < a_i`.
pub fn count_13_2(w: &Word) -> usize {
    let a = w.letters();
    let n = a.len();
    let mut count = 0;
    for i in 1..n {
        let (lo, hi) = (a[i - 1], a[i]);
        if lo < hi {
            count += a[i + 1..].iter().filter(|&&x| lo < x && x < hi).count();
        }
    }
    count
}

// Index of the next peak or valley strictly after `j` (top boundary).
fn next_turn(classes: &[LetterClass], j: usize) -> Option<usize> {
    (j + 1..classes.len()).find(|&k| matches!(classes[k], LetterClass::Peak | LetterClass::Valley))
}

/// (2-31) counted as triples `a_k < a_i < a_j`, `i < j < k`, where `a_j` is a
/// peak and `a_k` the valley that follows it.
pub fn count_2_31_by_turns(w: &Word) -> usize {
    let a = w.letters();
    let classes = w.classify(Boundary::Top);
    let mut count = 0;
    for j in 0..a.len() {
        if classes[j] != LetterClass::Peak {
            continue;
        }
        let Some(k) = next_turn(&classes, j) else { continue };
        count += a[..j].iter().filter(|&&x| a[k] < x && x < a[j]).count();
    }
    count
}

/// (13-2) counted as triples `a_i < a_k < a_j`, `i < j < k`, where `a_i` is a
/// valley and `a_j` the peak that follows it.
pub fn count_13_2_by_turns(w: &Word) -> usize {
    let a = w.letters();
    let classes = w.classify(Boundary::Top);
    let mut count = 0;
    for i in 0..a.len() {
        if classes[i] != LetterClass::Valley {
            continue;
        }
        let Some(j) = next_turn(&classes, i) else { continue };
        count += a[j + 1..].iter().filter(|&&x| a[i] < x && x < a[j]).count();
    }
    count
}

/// No `i < j < k` with `a_k < a_i < a_j`.
pub fn avoids_231(w: &Word) -> bool {
    // `bound` is the largest letter seen so far that is followed by a larger
    // one; any later letter below it completes a 231
    let a = w.letters();
    let mut stack: Vec<i32> = Vec::new();
    let mut bound = i32::MIN;
    for &x in a {
        if x < bound {
            return false;
        }
        while let Some(&top) = stack.last() {
            if top < x {
                bound = bound.max(top);
                stack.pop();
            } else {
                break;
            }
        }
        stack.push(x);
    }
    true
}

/// `S_n(231)` in lexicographic order.
pub fn avoiders_231(n: usize) -> Result<Vec<Word>> {
    limits::check(n)?;
    Ok(permutations(n).filter(avoids_231).collect())
}

const PQT: [char; 3] = ['p', 'q', 't'];
const PQ: [char; 2] = ['p', 'q'];

/// `A_n(p,q,t)` together with its coefficients `b_{n,i}(p,q)` in the basis
/// `t^i (1+t)^{n-1-2i}`.
#[derive(Debug, Clone, Serialize)]
pub struct RefinedEulerian {
    pub n: usize,
    pub apq: TriPoly,
    pub b: Vec<BiPoly>,
}

type Tally = HashMap<(u32, u32, u32, u32), u64>;

fn merge(mut a: Tally, b: Tally) -> Tally {
    for (k, v) in b {
        *a.entry(k).or_default() += v;
    }
    a
}

/// One pass over `S_n` computing `A_n(p,q,t)` and every `b_{n,i}`. Checks the
/// 2-adic divisibility of each peak class and the reconstruction identity.
pub fn refined_eulerian(n: usize) -> Result<RefinedEulerian> {
    limits::check(n)?;
    if n == 0 {
        return Err(Error::InvalidArgument("A_n(p,q,t) needs n >= 1".into()));
    }
    // (13-2, 2-31, des, peak) -> count
    let tally = fold_permutations(
        n,
        Tally::new,
        |mut acc, p| {
            let key = (count_13_2(p) as u32, count_2_31(p) as u32, p.des() as u32, p.peak(Boundary::Top) as u32);
            *acc.entry(key).or_default() += 1;
            acc
        },
        merge,
    );
    let apq = TriPoly::from_terms(PQT, tally.iter().map(|(&(a, b, d, _), &c)| ([a, b, d], BigInt::from(c))));
    let half = (n - 1) / 2;
    let mut b = Vec::with_capacity(half + 1);
    for i in 0..=half {
        let raw = BiPoly::from_terms(
            PQ,
            tally
                .iter()
                .filter(|(k, _)| k.3 as usize == i)
                .map(|(&(a, bb, _, _), &c)| ([a, bb], BigInt::from(c))),
        );
        let denom = BigInt::one() << (n - 1 - 2 * i);
        let bi = raw
            .div_scalar_exact(&denom)
            .ok_or_else(|| Error::NonIntegral(format!("peak-{i} sum of S_{n} is not divisible by {denom}")))?;
        b.push(bi);
    }
    if tally.keys().any(|k| k.3 as usize > half) {
        return Err(Error::BrokenInvariant(format!("a permutation of S_{n} has more than {half} peaks")));
    }
    let recon = reconstruct_apq(n, &b);
    if recon != apq {
        return Err(Error::BrokenInvariant(format!("Σ b_(n,i) t^i (1+t)^(n-1-2i) differs from A_{n}(p,q,t)")));
    }
    Ok(RefinedEulerian { n, apq, b })
}

fn lift(b: &BiPoly) -> TriPoly {
    TriPoly::from_terms(PQT, b.terms().map(|(e, c)| ([e[0], e[1], 0], c.clone())))
}

/// `Σ_i b_i(p,q) t^i (1+t)^{n-1-2i}`.
pub fn reconstruct_apq(n: usize, b: &[BiPoly]) -> TriPoly {
    let one_plus_t = &TriPoly::one(PQT) + &TriPoly::var(PQT, 2);
    let mut out = TriPoly::zero(PQT);
    for (i, bi) in b.iter().enumerate() {
        let basis = one_plus_t.pow((n - 1 - 2 * i) as u32).mul_monomial([0, 0, i as u32]);
        out += &(&lift(bi) * &basis);
    }
    out
}

pub fn apq_polynomial(n: usize) -> Result<TriPoly> {
    Ok(refined_eulerian(n)?.apq)
}

/// `b_{n,i}(p,q)`.
pub fn bni_polynomial(n: usize, i: usize) -> Result<BiPoly> {
    let data = refined_eulerian(n)?;
    data.b
        .get(i)
        .cloned()
        .ok_or_else(|| Error::InvalidArgument(format!("i = {i} exceeds ⌊(n-1)/2⌋ = {}", data.b.len() - 1)))
}

/// `A_n(p,q,t) = A_n(q,p,t)`.
pub fn check_pq_symmetry(n: usize) -> Result<bool> {
    let a = apq_polynomial(n)?;
    Ok(a == a.swap_vars(0, 1))
}

#[derive(Debug, Clone, Serialize)]
pub struct MahonianCheck {
    pub n: usize,
    /// `A_n(q, q^2, q)`
    pub s1: UniPoly,
    /// `A_n(q^2, q, q)`
    pub s2: UniPoly,
    pub q_factorial: UniPoly,
    pub holds: bool,
}

/// `A_n(q,q^2,q) = A_n(q^2,q,q) = [n]_q!`.
pub fn check_mahonian(n: usize) -> Result<MahonianCheck> {
    let a = apq_polynomial(n)?;
    let q = UniPoly::x_pow('q', 1);
    let q2 = UniPoly::x_pow('q', 2);
    let s1 = a.substitute(&[q.clone(), q2.clone(), q.clone()]);
    let s2 = a.substitute(&[q2, q.clone(), q]);
    let qf = q_factorial(n as u32, 'q');
    Ok(MahonianCheck {
        n,
        holds: s1 == qf && s2 == qf,
        s1,
        s2,
        q_factorial: qf,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct DivisibilityCheck {
    pub i: usize,
    pub b: BiPoly,
    /// `b_{n,i} / (p+q)^i`
    pub quotient: BiPoly,
    pub remainder: BiPoly,
    pub divisible: bool,
}

/// Divides each `b_{n,i}` by `(p+q)^i`.
pub fn check_divisibility(n: usize) -> Result<Vec<DivisibilityCheck>> {
    let data = refined_eulerian(n)?;
    let p_plus_q = &BiPoly::var(PQ, 0) + &BiPoly::var(PQ, 1);
    Ok(data
        .b
        .into_iter()
        .enumerate()
        .map(|(i, b)| {
            let (quotient, remainder) = b.div_rem(&p_plus_q.pow(i as u32));
            DivisibilityCheck {
                i,
                divisible: remainder.is_zero(),
                b,
                quotient,
                remainder,
            }
        })
        .collect())
}

/// `A_n(p,q,t)` written as `Σ (p+q)^i Q_i(p,q) t^i (1+t)^{n-1-2i}` in LaTeX,
/// e.g. `(1+t)^2 + (p+q)t` for `n = 3`.
pub fn latex_apq(n: usize, b: &[BiPoly]) -> String {
    let p_plus_q = &BiPoly::var(PQ, 0) + &BiPoly::var(PQ, 1);
    let mut parts = Vec::new();
    for (i, bi) in b.iter().enumerate() {
        if bi.is_zero() {
            continue;
        }
        let (quot, rem) = bi.div_rem(&p_plus_q.pow(i as u32));
        let (pq_pow, quot) = if rem.is_zero() { (i, quot) } else { (0, bi.clone()) };
        let mut s = String::new();
        match pq_pow {
            0 => {}
            1 => s.push_str("(p+q)"),
            k => s.push_str(&format!("(p+q)^{k}")),
        }
        if quot != BiPoly::one(PQ) {
            if quot.num_terms() > 1 {
                s.push_str(&format!("({quot})"));
            } else {
                s.push_str(&quot.to_string());
            }
        }
        match i {
            0 => {}
            1 => s.push('t'),
            k => s.push_str(&format!("t^{k}")),
        }
        match n - 1 - 2 * i {
            0 => {}
            1 => s.push_str("(1+t)"),
            e => s.push_str(&format!("(1+t)^{e}")),
        }
        if s.is_empty() {
            s.push('1');
        }
        parts.push(s);
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// The Narayana polynomial `Σ_k (1/n) C(n,k) C(n,k+1) t^k` and its gamma
/// vector `γ_k = (1/(k+1)) C(2k,k) C(n-1,2k)`, checked against each other.
pub fn narayana(n: usize) -> Result<(UniPoly, GammaExpansion)> {
    if n == 0 {
        return Err(Error::InvalidArgument("Narayana polynomials start at n = 1".into()));
    }
    let nb = BigInt::from(n);
    let coeffs: Vec<BigInt> = (0..n as u64)
        .map(|k| binomial(n as u64, k) * binomial(n as u64, k + 1) / &nb)
        .collect();
    let poly = UniPoly::from_big_coeffs('t', &coeffs);
    let gamma: Vec<BigInt> = (0..=(n as u64 - 1) / 2)
        .map(|k| binomial(2 * k, k) * binomial(n as u64 - 1, 2 * k) / BigInt::from(k + 1))
        .collect();
    let g = GammaExpansion { d: n as u32 - 1, gamma };
    if g.reconstruct('t') != poly {
        return Err(Error::BrokenInvariant(format!("Narayana closed forms disagree at n = {n}")));
    }
    Ok((poly, g))
}

/// `2^{n-1-2k} γ_k`, the predicted number of 231-avoiders with `k` peaks.
pub fn narayana_peak_count(n: usize, k: usize) -> BigInt {
    if n == 0 || 2 * k > n - 1 {
        return BigInt::zero();
    }
    let gamma = binomial(2 * k as u64, k as u64) * binomial(n as u64 - 1, 2 * k as u64) / BigInt::from(k + 1);
    gamma << (n - 1 - 2 * k)
}

#[derive(Debug, Clone, Serialize)]
pub struct NarayanaCheck {
    pub n: usize,
    pub closed_form: UniPoly,
    pub gamma: GammaExpansion,
    pub enumerated: UniPoly,
    #[serde(with = "crate::poly::int_json::vec")]
    pub peak_counts: Vec<BigInt>,
    pub polys_agree: bool,
    pub peak_counts_agree: bool,
}

/// Compares the closed forms with `S_n(231)` by enumeration.
pub fn check_narayana(n: usize) -> Result<NarayanaCheck> {
    let (closed_form, gamma) = narayana(n)?;
    let avoiders = avoiders_231(n)?;
    let enumerated = UniPoly::from_exponents(['t'], avoiders.iter().map(|p| [p.des() as u32]));
    let mut peak_counts = vec![BigInt::zero(); (n - 1) / 2 + 1];
    let mut overflow = false;
    for p in &avoiders {
        match peak_counts.get_mut(p.peak(Boundary::Top)) {
            Some(c) => *c += 1,
            None => overflow = true,
        }
    }
    let peak_counts_agree = !overflow && peak_counts.iter().enumerate().all(|(k, c)| *c == narayana_peak_count(n, k));
    Ok(NarayanaCheck {
        n,
        polys_agree: closed_form == enumerated,
        closed_form,
        gamma,
        enumerated,
        peak_counts,
        peak_counts_agree,
    })
}

/// `A_n(t)` at `p = q = 1`, also available directly.
pub fn eulerian(n: usize) -> Result<UniPoly> {
    limits::check(n)?;
    let counts = fold_permutations(
        n,
        || vec![0u64; n.max(1)],
        |mut acc, p| {
            acc[p.des()] += 1;
            acc
        },
        |mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        },
    );
    let coeffs: Vec<BigInt> = counts.into_iter().map(BigInt::from).collect();
    Ok(UniPoly::from_big_coeffs('t', &coeffs))
}

/// `γ` vector of `A_n(t)`.
pub fn eulerian_gamma(n: usize) -> Result<GammaExpansion> {
    gamma_expand(&eulerian(n)?, n.saturating_sub(1) as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fs_action::{involution_f, orbit_partition};
    use crate::word::w;

    fn bi(terms: &[([u32; 2], i64)]) -> BiPoly {
        BiPoly::from_terms(PQ, terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn statistic_examples() {
        assert_eq!(count_2_31(&w("231")), 1);
        assert_eq!(count_2_31(&w("123")), 0);
        assert_eq!(count_13_2(&w("132")), 1);
        assert_eq!(count_13_2(&w("231")), 0);
        assert_eq!(count_13_2(&w("123")), 0);
        let dist = UniPoly::from_exponents(['q'], permutations(3).map(|p| [count_2_31(&p) as u32]));
        assert_eq!(dist, UniPoly::from_coeffs('q', &[5, 1]));
    }

    #[test]
    fn avoidance() {
        assert!(avoids_231(&w("213")));
        assert!(!avoids_231(&w("231")));
        assert!(avoids_231(&w("123")));
        // brute force over triples
        for n in 0..=7 {
            for p in permutations(n) {
                let a = p.letters();
                let brute = !(0..n).any(|i| (i + 1..n).any(|j| (j + 1..n).any(|k| a[k] < a[i] && a[i] < a[j])));
                assert_eq!(avoids_231(&p), brute, "{p}");
            }
        }
        let counts: Vec<usize> = (1..=8).map(|n| avoiders_231(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 14, 42, 132, 429, 1430]);
    }

    #[test]
    fn turn_triples_match_pair_scans() {
        for n in 0..=7 {
            for p in permutations(n) {
                assert_eq!(count_2_31(&p), count_2_31_by_turns(&p), "{p}");
                assert_eq!(count_13_2(&p), count_13_2_by_turns(&p), "{p}");
            }
        }
    }

    #[test]
    fn statistics_constant_on_orbits() {
        for n in 1..=7 {
            let all: Vec<Word> = permutations(n).collect();
            for orb in orbit_partition(&all, Boundary::Top).unwrap() {
                let first = &orb.members[0];
                for m in &orb.members {
                    assert_eq!(count_2_31(m), count_2_31(first));
                    assert_eq!(count_13_2(m), count_13_2(first));
                }
            }
        }
    }

    #[test]
    fn reverse_of_f_swaps_statistics() {
        for n in 1..=7 {
            for p in permutations(n) {
                let q = involution_f(&p).reverse();
                assert_eq!((q.des(), count_13_2(&q), count_2_31(&q)), (p.des(), count_2_31(&p), count_13_2(&p)), "{p}");
            }
        }
    }

    #[test]
    fn small_refined_eulerian() {
        let a3 = refined_eulerian(3).unwrap();
        assert_eq!(a3.b, vec![BiPoly::one(PQ), bi(&[([1, 0], 1), ([0, 1], 1)])]);
        assert_eq!(latex_apq(3, &a3.b), "(1+t)^2 + (p+q)t");
        let a4 = refined_eulerian(4).unwrap();
        assert_eq!(latex_apq(4, &a4.b), "(1+t)^3 + (p+q)(p+q+2)t(1+t)");
        let a5 = refined_eulerian(5).unwrap();
        let pq = bi(&[([1, 0], 1), ([0, 1], 1)]);
        let expected = &pq.pow(2) * &bi(&[([2, 0], 1), ([1, 1], 1), ([0, 2], 1), ([0, 0], 1)]);
        assert_eq!(a5.b[2], expected);
        assert_eq!(bni_polynomial(3, 1).unwrap(), pq);
        for n in 1..=6 {
            assert_eq!(bni_polynomial(n, 0).unwrap(), BiPoly::one(PQ));
        }
    }

    #[test]
    fn specializes_to_eulerian() {
        for n in 1..=7 {
            let a = apq_polynomial(n).unwrap();
            let one = UniPoly::one(['t']);
            let t = UniPoly::x_pow('t', 1);
            assert_eq!(a.substitute(&[one.clone(), one, t]), eulerian(n).unwrap());
        }
        assert_eq!(eulerian_gamma(4).unwrap().gamma, vec![BigInt::from(1), BigInt::from(8)]);
    }

    #[test]
    fn symmetry_mahonian_divisibility() {
        for n in 1..=6 {
            assert!(check_pq_symmetry(n).unwrap());
            assert!(check_mahonian(n).unwrap().holds);
            assert!(check_divisibility(n).unwrap().iter().all(|c| c.divisible));
        }
        let d5 = check_divisibility(5).unwrap();
        assert_eq!(d5[2].quotient, bi(&[([2, 0], 1), ([1, 1], 1), ([0, 2], 1), ([0, 0], 1)]));
    }

    #[test]
    fn narayana_examples() {
        let (p, g) = narayana(4).unwrap();
        assert_eq!(p, UniPoly::from_coeffs('t', &[1, 6, 6, 1]));
        assert_eq!(g.gamma, vec![BigInt::from(1), BigInt::from(3)]);
        let (p, g) = narayana(1).unwrap();
        assert_eq!(p, UniPoly::one(['t']));
        assert_eq!(g.gamma, vec![BigInt::from(1)]);
        assert_eq!(narayana_peak_count(4, 1), BigInt::from(6));
        for n in 1..=8 {
            let c = check_narayana(n).unwrap();
            assert!(c.polys_agree && c.peak_counts_agree, "n = {n}");
        }
    }
}
