//! Schubert polynomials by divided differences, key polynomials by Demazure
//! operators, reduced words, and the reduced-word formula for `S_w(1, ..., 1)`.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::perm::{Composition, Permutation};
use crate::poly::{Monomial, SparsePolynomial};

type Memo<K> = RwLock<HashMap<K, SparsePolynomial>>;

fn schubert_memo() -> &'static Memo<Permutation> {
    static MEMO: OnceLock<Memo<Permutation>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

fn key_memo() -> &'static Memo<Composition> {
    static MEMO: OnceLock<Memo<Composition>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

fn lookup<K: std::hash::Hash + Eq>(memo: &Memo<K>, k: &K) -> Option<SparsePolynomial> {
    memo.read().expect("memo lock poisoned").get(k).cloned()
}

fn store<K: std::hash::Hash + Eq>(memo: &Memo<K>, k: K, v: &SparsePolynomial) {
    memo.write().expect("memo lock poisoned").entry(k).or_insert_with(|| v.clone());
}

/// `x_1^{n-1} x_2^{n-2} ... x_{n-1}`.
pub fn staircase(n: usize) -> SparsePolynomial {
    let exps = (1..n).map(|i| (n - i) as u32).collect();
    SparsePolynomial::from_monomial(Monomial::new(exps))
}

/// The Schubert polynomial of `w`.
///
/// Walks up the weak order from `w` through leftmost ascents until `w_0`
/// (or a memoized permutation) is reached, then applies the divided
/// differences on the way back down. Results are memoized per one-line
/// notation.
pub fn schubert(w: &Permutation) -> SparsePolynomial {
    let n = w.n();
    let longest = Permutation::longest(n);
    let mut path: Vec<(Permutation, usize)> = Vec::new();
    let mut current = w.clone();
    let mut poly = loop {
        if let Some(p) = lookup(schubert_memo(), &current) {
            break p;
        }
        if current == longest {
            break staircase(n);
        }
        let j = current.ascents()[0];
        let up = current.right_mul_simple(j);
        path.push((current, j));
        current = up;
    };
    store(schubert_memo(), current, &poly);
    while let Some((perm, j)) = path.pop() {
        poly = poly.divided_difference(j);
        store(schubert_memo(), perm, &poly);
    }
    poly
}

/// `d_j S_{w s_j}` for a chosen ascent `j` of `w`; equals [`schubert`] for
/// every ascent.
pub fn schubert_via(w: &Permutation, j: usize) -> SparsePolynomial {
    assert!(w.ascents().contains(&j), "{j} is not an ascent of {w}");
    schubert(&w.right_mul_simple(j)).divided_difference(j)
}

/// The key polynomial of `alpha`: `x^alpha` for a partition, otherwise
/// `d_i(x_i kappa_beta)` where `i` is the leftmost position with
/// `alpha_i < alpha_{i+1}` and `beta` swaps those two parts.
pub fn key(alpha: &Composition) -> SparsePolynomial {
    let mut path: Vec<(Composition, usize)> = Vec::new();
    let mut current = alpha.clone();
    let mut poly = loop {
        if let Some(p) = lookup(key_memo(), &current) {
            break p;
        }
        if current.is_partition() {
            break SparsePolynomial::from_monomial(current.monomial());
        }
        let parts = current.parts();
        let i = (1..parts.len()).find(|&i| parts[i - 1] < parts[i]).expect("non-partition has an ascent");
        let mut swapped = parts.to_vec();
        swapped.swap(i - 1, i);
        path.push((current, i));
        current = Composition::new(swapped);
    };
    store(key_memo(), current, &poly);
    while let Some((comp, i)) = path.pop() {
        poly = poly.demazure(i);
        store(key_memo(), comp, &poly);
    }
    poly
}

/// Lazy enumeration of the reduced words of a permutation in lexicographic
/// order.
///
/// A word `a_1 ... a_l` is reduced for `w` when `w = s_{a_1} ... s_{a_l}` and
/// `l` is the length of `w`. The first letter ranges over the left descents
/// of `w` in increasing order, and the rest is a reduced word of `s_{a_1} w`.
pub struct ReducedWords {
    stack: Vec<(Permutation, Vec<usize>, usize)>,
    word: Vec<usize>,
}

pub fn reduced_words(w: &Permutation) -> ReducedWords {
    ReducedWords { stack: vec![(w.clone(), w.left_descents(), 0)], word: Vec::new() }
}

impl Iterator for ReducedWords {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        loop {
            let (perm, choices, next) = self.stack.last_mut()?;
            if choices.is_empty() {
                // only the identity has no left descent
                let out = self.word.clone();
                self.stack.pop();
                self.word.pop();
                return Some(out);
            }
            if *next < choices.len() {
                let a = choices[*next];
                *next += 1;
                let child = perm.left_mul_simple(a);
                let child_choices = child.left_descents();
                self.word.push(a);
                self.stack.push((child, child_choices, 0));
            } else {
                self.stack.pop();
                self.word.pop();
            }
        }
    }
}

/// `sum over reduced words a of w of a_1 a_2 ... a_l`, by recursion on the
/// first letter.
pub fn reduced_word_product_sum(w: &Permutation) -> BigUint {
    fn go(w: &Permutation, memo: &mut HashMap<Permutation, BigUint>) -> BigUint {
        if w.is_identity() {
            return BigUint::one();
        }
        if let Some(v) = memo.get(w) {
            return v.clone();
        }
        let total =
            w.left_descents().into_iter().map(|a| go(&w.left_mul_simple(a), memo) * BigUint::from(a)).sum();
        memo.insert(w.clone(), total);
        memo[w].clone()
    }
    go(w, &mut HashMap::new())
}

/// `S_w(1, ..., 1) = (1 / l!) sum over reduced words of a_1 a_2 ... a_l`.
///
/// Panics if the division is not exact, which would mean the reduced-word
/// sum was computed incorrectly.
pub fn macdonald_specialization(w: &Permutation) -> BigUint {
    let total = reduced_word_product_sum(w);
    let factorial: BigUint = (1..=w.length()).map(BigUint::from).product();
    let (q, r) = total.div_rem(&factorial);
    assert!(r.is_zero(), "reduced-word sum for {w} is not divisible by {}!", w.length());
    q
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn w(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn p(s: &str) -> SparsePolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn schubert_examples() {
        assert_eq!(schubert(&w("321")), p("x1^2*x2"));
        assert_eq!(schubert(&w("123")), p("1"));
        assert_eq!(schubert(&w("1")), p("1"));
        assert_eq!(schubert(&w("213")), p("x1"));
        assert_eq!(schubert(&w("132")), p("x1 + x2"));
        assert_eq!(schubert(&w("2143")), p("x1^2 + x1*x2 + x1*x3"));
    }

    #[test]
    fn schubert_of_31542_by_explicit_operators() {
        // d2 d1 d3 d2 d4 applied to x1^4 x2^3 x3^2 x4
        let mut f = p("x1^4*x2^3*x3^2*x4");
        for j in [4, 2, 3, 1, 2] {
            f = f.divided_difference(j);
        }
        assert_eq!(schubert(&w("31542")), f);
    }

    #[test]
    fn key_examples() {
        let c = |v: Vec<usize>| Composition::new(v);
        assert_eq!(key(&c(vec![2, 1, 0])), p("x1^2*x2"));
        assert_eq!(key(&c(vec![0, 1])), p("x1 + x2"));
        assert_eq!(key(&c(vec![])), p("1"));
        // d3(x3 d4(x4 x1^3 x2^2 x3 x4))
        let explicit = p("x1^3*x2^2*x3*x4").demazure(4).demazure(3);
        assert_eq!(key(&c(vec![3, 2, 0, 1, 1])), explicit);
    }

    #[test]
    fn reduced_word_examples() {
        assert_eq!(reduced_words(&w("321")).collect::<Vec<_>>(), vec![vec![1, 2, 1], vec![2, 1, 2]]);
        assert_eq!(reduced_words(&w("1234")).collect::<Vec<_>>(), vec![Vec::<usize>::new()]);
        assert_eq!(reduced_words(&w("2143")).collect::<Vec<_>>(), vec![vec![1, 3], vec![3, 1]]);
    }

    #[test]
    fn macdonald_examples() {
        assert_eq!(macdonald_specialization(&w("321")), BigUint::from(1u32));
        assert_eq!(macdonald_specialization(&w("1")), BigUint::from(1u32));
        assert_eq!(macdonald_specialization(&w("12345")), BigUint::from(1u32));
        assert_eq!(macdonald_specialization(&w("2143")), BigUint::from(3u32));
        let v = w("31542");
        assert_eq!(BigInt::from(macdonald_specialization(&v)), schubert(&v).principal_specialization());
    }
}
