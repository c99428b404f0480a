//! West's stack-sorting operator and its factorization into slides.

use rayon::prelude::*;

use crate::enumerate::permutations;
use crate::error::{Error, Result};
use crate::limits;
use crate::word::Word;

fn sort_into(a: &[i32], out: &mut Vec<i32>) {
    let Some((m_idx, &m)) = a.iter().enumerate().max_by_key(|&(_, &x)| x) else {
        return;
    };
    sort_into(&a[..m_idx], out);
    sort_into(&a[m_idx + 1..], out);
    out.push(m);
}

/// `S(LmR) = S(L) S(R) m` with `m` the largest letter.
pub fn stack_sort(w: &Word) -> Word {
    let mut out = Vec::with_capacity(w.len());
    sort_into(w.letters(), &mut out);
    Word::from_vec_unchecked(out)
}

/// `r_i`: lifts `a_i` out of descent position `i` (1-based) and drops it into
/// the first gap `a_j < a_i < a_{j+1}` to its right. A sentinel larger than
/// every letter closes the word.
pub fn slide_r(w: &Word, i: usize) -> Result<Word> {
    let a = w.letters();
    if i == 0 || i >= a.len() || a[i - 1] < a[i] {
        return Err(Error::NotADescent(i));
    }
    let x = a[i - 1];
    let mut rest: Vec<i32> = a.to_vec();
    rest.remove(i - 1);
    let slot = (i - 1..rest.len())
        .find(|&j| rest[j] < x && rest.get(j + 1).is_none_or(|&b| x < b))
        .expect("the sentinel gap always qualifies");
    rest.insert(slot + 1, x);
    Ok(Word::from_vec_unchecked(rest))
}

/// `S(w) = r_{i_d} ... r_{i_1}(w)` for the descents `i_1 < ... < i_d` of `w`.
/// `r_{i_k}` slides the letter that sat at descent `i_k` of the original word;
/// earlier slides may have shifted it left, but it still tops a descent.
pub fn stack_sort_via_slides(w: &Word) -> Word {
    let tops: Vec<i32> = w.descent_set().into_iter().map(|i| w.letters()[i - 1]).collect();
    tops.into_iter().fold(w.clone(), |acc, x| {
        let i = acc.position(x).expect("letter of w") + 1;
        slide_r(&acc, i).expect("a descent top stays a descent top")
    })
}

fn is_increasing(w: &Word) -> bool {
    w.letters().windows(2).all(|p| p[0] < p[1])
}

/// True if `S^r(w)` is increasing.
pub fn is_r_sortable(w: &Word, r: usize) -> bool {
    let mut cur = w.clone();
    for _ in 0..r {
        if is_increasing(&cur) {
            return true;
        }
        cur = stack_sort(&cur);
    }
    is_increasing(&cur)
}

/// Smallest `r` with `S^r(w)` increasing.
pub fn sorting_passes(w: &Word) -> usize {
    let mut cur = w.clone();
    let mut r = 0;
    while !is_increasing(&cur) {
        cur = stack_sort(&cur);
        r += 1;
    }
    r
}

/// `S_n^r`, in lexicographic order.
pub fn enumerate_r_sortable(n: usize, r: usize) -> Result<Vec<Word>> {
    limits::check(n)?;
    let all: Vec<Word> = permutations(n).collect();
    Ok(all.into_par_iter().filter(|p| is_r_sortable(p, r)).collect())
}
