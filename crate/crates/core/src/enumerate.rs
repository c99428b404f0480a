//! Exhaustive generators for `S_n` and its involutions.

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::Result;
use crate::limits;
use crate::word::Word;

/// All permutations of `[n]` in lexicographic order.
pub fn permutations(n: usize) -> impl Iterator<Item = Word> {
    (1..=n as i32)
        .permutations(n)
        .map(Word::from_vec_unchecked)
}

/// `permutations(n)` collected, after checking the enumeration bound.
pub fn all_permutations(n: usize) -> Result<Vec<Word>> {
    limits::check(n)?;
    Ok(permutations(n).collect())
}

/// Parallel fold over `S_n`, split into blocks by first letter. `reduce`
/// must be associative and commutative for the result to be deterministic.
pub fn fold_permutations<T, I, F, R>(n: usize, identity: I, fold: F, reduce: R) -> T
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(T, &Word) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    if n == 0 {
        return fold(identity(), &Word::empty());
    }
    (1..=n as i32)
        .into_par_iter()
        .map(|first| {
            let rest: Vec<i32> = (1..=n as i32).filter(|&a| a != first).collect();
            rest.iter().copied().permutations(n - 1).fold(identity(), |acc, tail| {
                let mut letters = Vec::with_capacity(n);
                letters.push(first);
                letters.extend(tail);
                fold(acc, &Word::from_vec_unchecked(letters))
            })
        })
        .reduce(&identity, &reduce)
}

/// All involutions of `[n]`, in lexicographic order.
pub fn involutions(n: usize) -> Result<Vec<Word>> {
    limits::check(n)?;
    let mut out = Vec::new();
    let mut image = vec![0i32; n];
    fill_involutions(&mut image, &mut out);
    out.sort();
    Ok(out)
}

fn fill_involutions(image: &mut [i32], out: &mut Vec<Word>) {
    let Some(i) = image.iter().position(|&a| a == 0) else {
        out.push(Word::from_vec_unchecked(image.to_vec()));
        return;
    };
    image[i] = i as i32 + 1;
    fill_involutions(image, out);
    for j in i + 1..image.len() {
        if image[j] == 0 {
            image[i] = j as i32 + 1;
            image[j] = i as i32 + 1;
            fill_involutions(image, out);
            image[j] = 0;
        }
    }
    image[i] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(permutations(0).count(), 1);
        assert_eq!(permutations(5).count(), 120);
        let inv: Vec<usize> = (0..=8).map(|n| involutions(n).unwrap().len()).collect();
        assert_eq!(inv, vec![1, 1, 2, 4, 10, 26, 76, 232, 764]);
    }

    #[test]
    fn parallel_fold_visits_every_permutation() {
        for n in 0..=6 {
            let (count, des) = fold_permutations(n, || (0usize, 0usize), |(c, d), p| (c + 1, d + p.des()), |a, b| (a.0 + b.0, a.1 + b.1));
            assert_eq!(count, permutations(n).count());
            assert_eq!(des, permutations(n).map(|p| p.des()).sum::<usize>());
        }
    }

    #[test]
    fn involutions_square_to_identity() {
        for p in involutions(6).unwrap() {
            assert!(p.compose(&p).unwrap().is_identity());
        }
    }
}
