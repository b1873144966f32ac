//! Permutations and compositions, with their Rothe and skyline diagrams.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::diagram::{Cell, Diagram};
use crate::error::ParseError;
use crate::poly::Monomial;

/// A permutation of `[n]` in one-line notation `w(1) w(2) ... w(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self, ParseError> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n {
                return Err(ParseError::new(v.to_string(), format!("value outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(ParseError::new(v.to_string(), "value repeated"));
            }
        }
        Ok(Permutation { one_line })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { one_line: (1..=n).collect() }
    }

    /// `w_0 = n (n-1) ... 1`.
    pub fn longest(n: usize) -> Self {
        Permutation { one_line: (1..=n).rev().collect() }
    }

    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    /// `w(i)`, 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.one_line[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.one_line.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { one_line: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.one_line.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Number of inversions, the Coxeter length.
    pub fn length(&self) -> usize {
        let w = &self.one_line;
        (0..w.len()).map(|i| w[i + 1..].iter().filter(|&&v| v < w[i]).count()).sum()
    }

    /// Positions `j` with `w(j) < w(j+1)`.
    pub fn ascents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&j| self.apply(j) < self.apply(j + 1)).collect()
    }

    /// Positions `j` with `w(j) > w(j+1)`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&j| self.apply(j) > self.apply(j + 1)).collect()
    }

    /// Values `a` such that `a + 1` appears before `a` in one-line notation.
    pub fn left_descents(&self) -> Vec<usize> {
        let inv = self.inverse();
        (1..self.n()).filter(|&a| inv.apply(a) > inv.apply(a + 1)).collect()
    }

    /// `w s_j`: swap positions `j` and `j + 1`.
    pub fn right_mul_simple(&self, j: usize) -> Permutation {
        let mut w = self.one_line.clone();
        w.swap(j - 1, j);
        Permutation { one_line: w }
    }

    /// `s_a w`: swap the values `a` and `a + 1`.
    pub fn left_mul_simple(&self, a: usize) -> Permutation {
        let one_line = self
            .one_line
            .iter()
            .map(|&v| {
                if v == a {
                    a + 1
                } else if v == a + 1 {
                    a
                } else {
                    v
                }
            })
            .collect();
        Permutation { one_line }
    }

    /// The permutation of `[m]`, `m >= n`, fixing `n+1, ..., m`.
    pub fn embed(&self, m: usize) -> Permutation {
        assert!(m >= self.n());
        let mut w = self.one_line.clone();
        w.extend(self.n() + 1..=m);
        Permutation { one_line: w }
    }

    /// All of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n);
        let mut used = vec![false; n + 1];
        fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if cur.len() == n {
                out.push(Permutation { one_line: cur.clone() });
                return;
            }
            for v in 1..=n {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        rec(n, &mut current, &mut used, &mut out);
        out
    }

    /// `D(w) = {(i, j) : i < w^{-1}(j) and j < w(i)}`.
    pub fn rothe(&self) -> Diagram {
        let inv = self.inverse();
        let n = self.n();
        let cells = (1..=n).flat_map(|i| {
            let inv = &inv;
            (1..=n).filter_map(move |j| (i < inv.apply(j) && j < self.apply(i)).then_some(Cell::new(i, j)))
        });
        Diagram::from_cells(n, cells).expect("Rothe diagram fits in its grid")
    }

    /// Triples `i < j < k` with `w(i) < w(k) < w(j)`.
    pub fn count_132(&self) -> usize {
        let w = &self.one_line;
        let n = w.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if w[j] <= w[i] {
                    continue;
                }
                count += w[j + 1..].iter().filter(|&&v| w[i] < v && v < w[j]).count();
            }
        }
        count
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(w: Permutation) -> Vec<usize> {
        w.one_line
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = ParseError;

    fn try_from(v: Vec<usize>) -> Result<Self, ParseError> {
        Permutation::new(v)
    }
}

/// One-line notation: `31542`, or comma separated (`3,1,10,...`) for `n > 9`.
impl FromStr for Permutation {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let s = s.trim();
        let values: Vec<usize> = if s.contains(',') || s.contains(' ') {
            s.split([',', ' '])
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| ParseError::new(t, "not a positive integer")))
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| ParseError::new(c.to_string(), "not a digit"))
                })
                .collect::<Result<_, _>>()?
        };
        Permutation::new(values).map_err(|e| ParseError::new(format!("{s} ({})", e.token), e.reason))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n() > 9 { "," } else { "" };
        let parts: Vec<String> = self.one_line.iter().map(usize::to_string).collect();
        write!(f, "{}", parts.join(sep))
    }
}

/// A weak composition `(a_1, a_2, ...)`; trailing zeros are insignificant.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Composition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `a_i`, 1-based; zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    /// Index of the last nonzero part.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_partition(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1])
    }

    /// `x^a`.
    pub fn monomial(&self) -> Monomial {
        Monomial::new(self.parts.iter().map(|&p| p as u32).collect())
    }

    /// `n = max(l, a_1, ..., a_l)` where `l` is the last nonzero index.
    pub fn grid_size(&self) -> usize {
        self.parts.iter().copied().max().unwrap_or(0).max(self.parts.len())
    }

    /// Row `i` holds the leftmost `a_i` boxes of the `n x n` grid.
    pub fn skyline(&self) -> Diagram {
        let n = self.grid_size();
        let cells =
            self.parts.iter().enumerate().flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i + 1, j)));
        Diagram::from_cells(n, cells).expect("skyline diagram fits in its grid")
    }

    /// `sum (a_j - a_i)` over pairs `i < j` with `a_i < a_j`.
    pub fn rinv_weight(&self) -> usize {
        let a = &self.parts;
        let mut total = 0;
        for i in 0..a.len() {
            for j in i + 1..a.len() {
                if a[i] < a[j] {
                    total += a[j] - a[i];
                }
            }
        }
        total
    }

    /// Every composition with `len` parts, each at most `max_part`,
    /// in lexicographic order (`(max_part + 1)^len` of them).
    pub fn all(max_part: usize, len: usize) -> Vec<Composition> {
        let mut out = Vec::new();
        let mut digits = vec![0usize; len];
        loop {
            out.push(Composition::new(digits.clone()));
            let mut k = len;
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                if digits[k] < max_part {
                    digits[k] += 1;
                    break;
                }
                digits[k] = 0;
            }
        }
    }
}

impl From<Vec<usize>> for Composition {
    fn from(v: Vec<usize>) -> Self {
        Composition::new(v)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Vec<usize> {
        c.parts
    }
}

/// Comma separated parts, e.g. `3,2,0,1,1`.
impl FromStr for Composition {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Composition::new(Vec::new()));
        }
        let parts = s
            .split(',')
            .map(|t| {
                let t = t.trim();
                t.parse::<usize>().map_err(|_| ParseError::new(t, "part must be a nonnegative integer"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Composition::new(parts))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn rothe_examples() {
        assert_eq!(
            w("31542").rothe(),
            Diagram::from_columns(vec![vec![1], vec![1, 3, 4], vec![], vec![3], vec![]]).unwrap()
        );
        assert_eq!(w("1234").rothe(), Diagram::empty(4));
    }

    #[test]
    fn rothe_of_longest_is_staircase() {
        for n in 1..=5 {
            let d = Permutation::longest(n).rothe();
            for j in 1..=n {
                let expected: Vec<usize> = (1..=n - j).collect();
                assert_eq!(d.column(j).rows(), expected.as_slice());
            }
        }
    }

    #[test]
    fn count_132_examples() {
        assert_eq!(w("31542").count_132(), 4);
        assert_eq!(w("12345").count_132(), 0);
        assert_eq!(w("132").count_132(), 1);
    }

    #[test]
    fn skyline_examples() {
        let a: Composition = "3,2,0,1,1".parse().unwrap();
        assert_eq!(
            a.skyline(),
            Diagram::from_columns(vec![vec![1, 2, 4, 5], vec![1, 2], vec![1], vec![], vec![]]).unwrap()
        );
        assert_eq!(Composition::new(vec![0, 0, 0]).skyline(), Diagram::empty(0));
        let two = Composition::new(vec![2]).skyline();
        assert_eq!(two, Diagram::from_columns(vec![vec![1], vec![1]]).unwrap());
        assert_eq!(two.n(), 2);
    }

    #[test]
    fn rinv_weight_examples() {
        assert_eq!(Composition::new(vec![3, 2, 0, 1, 1]).rinv_weight(), 2);
        assert_eq!(Composition::new(vec![3, 3, 1, 0]).rinv_weight(), 0);
        assert_eq!(Composition::new(vec![0, 1]).rinv_weight(), 1);
    }

    #[test]
    fn permutation_parsing() {
        assert_eq!(w("2,1,3"), w("213"));
        assert!("3142x".parse::<Permutation>().unwrap_err().to_string().contains("`x`"));
        assert!("1224".parse::<Permutation>().is_err());
        assert!("1,2,4".parse::<Permutation>().is_err());
        assert!("1,a".parse::<Composition>().unwrap_err().to_string().contains("`a`"));
    }

    #[test]
    fn simple_reflections() {
        let v = w("31542");
        assert_eq!(v.right_mul_simple(1), w("13542"));
        assert_eq!(v.left_mul_simple(1), w("32541"));
        assert_eq!(v.length(), 5);
        assert_eq!(v.ascents(), vec![2]);
        assert_eq!(v.left_descents(), vec![2, 4]);
        assert_eq!(Permutation::all(4).len(), 24);
        assert_eq!(Composition::all(3, 4).len(), 256);
    }
}
