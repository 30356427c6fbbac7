//! Permutations in one-line notation (`perm[k - 1] = w(k)`) and words in the
//! simple transpositions `s_1, ..., s_{n-1}`.

use std::collections::HashMap;

pub type Word = Vec<usize>;

pub fn identity(n: usize) -> Vec<usize> {
    (1..=n).collect()
}

pub fn is_permutation(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    perm.iter().all(|&v| v >= 1 && v <= perm.len() && !std::mem::replace(&mut seen[v - 1], true))
}

pub fn inverse(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (k, &v) in perm.iter().enumerate() {
        inv[v - 1] = k + 1;
    }
    inv
}

/// Coxeter length.
pub fn inversions(perm: &[usize]) -> usize {
    let mut count = 0;
    for a in 0..perm.len() {
        for b in a + 1..perm.len() {
            if perm[a] > perm[b] {
                count += 1;
            }
        }
    }
    count
}

/// `s_i * w`: swaps the values `i` and `i + 1`.
pub fn left_multiply(perm: &mut [usize], i: usize) {
    for v in perm.iter_mut() {
        if *v == i {
            *v = i + 1;
        } else if *v == i + 1 {
            *v = i;
        }
    }
}

/// The permutation `s_{w[0]} s_{w[1]} ... s_{w[k-1]}` on `n` letters.
pub fn from_word(n: usize, word: &[usize]) -> Vec<usize> {
    let mut perm = identity(n);
    for &i in word.iter().rev() {
        left_multiply(&mut perm, i);
    }
    perm
}

fn left_descents(perm: &[usize]) -> Vec<usize> {
    let inv = inverse(perm);
    (1..perm.len()).filter(|&i| inv[i - 1] > inv[i]).collect()
}

/// A reduced word for `perm`, peeling the largest left descent first.
pub fn reduced_word(perm: &[usize]) -> Word {
    reduced_word_by(perm, |d| *d.last().unwrap())
}

/// A reduced word for `perm`, peeling the smallest left descent first.
pub fn reduced_word_smallest_first(perm: &[usize]) -> Word {
    reduced_word_by(perm, |d| d[0])
}

fn reduced_word_by(perm: &[usize], pick: impl Fn(&[usize]) -> usize) -> Word {
    let mut cur = perm.to_vec();
    let mut word = Vec::new();
    loop {
        let descents = left_descents(&cur);
        if descents.is_empty() {
            return word;
        }
        let i = pick(&descents);
        word.push(i);
        left_multiply(&mut cur, i);
    }
}

/// Number of reduced words of `perm`.
pub fn count_reduced_words(perm: &[usize]) -> u64 {
    fn go(perm: Vec<usize>, memo: &mut HashMap<Vec<usize>, u64>) -> u64 {
        if let Some(&c) = memo.get(&perm) {
            return c;
        }
        let descents = left_descents(&perm);
        let total = if descents.is_empty() {
            1
        } else {
            descents
                .into_iter()
                .map(|i| {
                    let mut next = perm.clone();
                    left_multiply(&mut next, i);
                    go(next, memo)
                })
                .sum()
        };
        memo.insert(perm, total);
        total
    }
    go(perm.to_vec(), &mut HashMap::new())
}

/// Cartier-Foata normal form of a word under the commutations
/// `s_i s_j = s_j s_i` for `|i - j| > 1`. Two words have the same heap
/// exactly when their normal forms agree.
pub fn foata_normal_form(word: &[usize]) -> Vec<Vec<usize>> {
    let mut rest: Vec<usize> = word.to_vec();
    let mut layers = Vec::new();
    while !rest.is_empty() {
        let mut layer = Vec::new();
        let mut keep = Vec::new();
        let mut blocked: Vec<usize> = Vec::new();
        for &s in &rest {
            // minimal in the heap iff it commutes with every earlier letter
            if blocked.iter().all(|&b| b.abs_diff(s) > 1) {
                layer.push(s);
            } else {
                keep.push(s);
            }
            blocked.push(s);
        }
        layer.sort_unstable();
        layers.push(layer);
        rest = keep;
    }
    layers
}

pub fn commutation_equivalent(a: &[usize], b: &[usize]) -> bool {
    foata_normal_form(a) == foata_normal_form(b)
}

/// Fully commutative permutations are exactly the 321-avoiding ones.
pub fn is_321_avoiding(perm: &[usize]) -> bool {
    let n = perm.len();
    for j in 0..n {
        let bigger_left = perm[..j].iter().any(|&v| v > perm[j]);
        let smaller_right = perm[j + 1..].iter().any(|&v| v < perm[j]);
        if bigger_left && smaller_right {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_reproduce_permutations() {
        let perm = vec![3, 1, 4, 2, 5];
        for word in [reduced_word(&perm), reduced_word_smallest_first(&perm)] {
            assert_eq!(word.len(), inversions(&perm));
            assert_eq!(from_word(5, &word), perm);
        }
    }

    #[test]
    fn reduced_word_counts() {
        assert_eq!(count_reduced_words(&[1, 2, 3]), 1);
        assert_eq!(count_reduced_words(&[3, 2, 1]), 2);
        // longest element of S_4 has 16 reduced words
        assert_eq!(count_reduced_words(&[4, 3, 2, 1]), 16);
    }

    #[test]
    fn foata() {
        assert!(commutation_equivalent(&[1, 3], &[3, 1]));
        assert!(!commutation_equivalent(&[1, 2, 1], &[2, 1, 2]));
        assert_eq!(foata_normal_form(&[3, 1, 2]), vec![vec![1, 3], vec![2]]);
        // the layer must not pass over a non-commuting letter
        assert_eq!(foata_normal_form(&[2, 1, 2]), vec![vec![2], vec![1], vec![2]]);
    }

    #[test]
    fn three_two_one() {
        assert!(!is_321_avoiding(&[3, 2, 1]));
        assert!(is_321_avoiding(&[2, 3, 1]));
        assert!(is_321_avoiding(&[1, 5, 2, 6, 3, 7, 4]));
    }
}
