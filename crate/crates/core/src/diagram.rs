//! Diagrams in the `[n] x [n]` grid, stored column by column.
//!
//! Row indices are 1-based and increase from top to bottom; column `j` of a
//! diagram is the set of rows holding a box in that column.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};
use crate::poly::Monomial;

/// Hard cap on the number of diagrams produced by [`Diagram::enumerate_below`]
/// unless the caller picks a different one.
pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;

/// A finite set of rows, kept as a strictly increasing sequence.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ColumnSet(Vec<usize>);

impl ColumnSet {
    pub fn empty() -> Self {
        ColumnSet(Vec::new())
    }

    /// Validates that `rows` is strictly increasing and starts at 1 or later.
    pub fn new(rows: Vec<usize>) -> Result<Self, ParseError> {
        if rows.first() == Some(&0) {
            return Err(ParseError::new("0", "rows are numbered from 1"));
        }
        if let Some(w) = rows.windows(2).find(|w| w[0] >= w[1]) {
            return Err(ParseError::new(
                format!("{},{}", w[0], w[1]),
                "rows of a column must be strictly increasing",
            ));
        }
        Ok(ColumnSet(rows))
    }

    /// Sorts `rows` first; duplicates and zero are still rejected.
    pub fn from_unsorted(mut rows: Vec<usize>) -> Result<Self, ParseError> {
        rows.sort_unstable();
        ColumnSet::new(rows)
    }

    pub fn rows(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, row: usize) -> bool {
        self.0.binary_search(&row).is_ok()
    }

    pub fn max_row(&self) -> usize {
        self.0.last().copied().unwrap_or(0)
    }

    /// `R <= S`: equal sizes and the k-th least elements compare entrywise.
    pub fn leq(&self, other: &ColumnSet) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(r, s)| r <= s)
    }

    /// Sum over boxes of the number of vacant rows weakly above the box.
    pub fn rank(&self) -> usize {
        self.0.iter().enumerate().map(|(t, &a)| a - (t + 1)).sum()
    }

    /// Every set `S <= self`, in increasing invlex order of `prod_{i in S} x_i`.
    ///
    /// For sets of equal size that order is the lexicographic order of the
    /// elements read from largest to smallest.
    pub fn predecessors(&self) -> Vec<ColumnSet> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(self.len());
        self.backtrack(&mut current, &mut out);
        out.sort_by(|a, b| a.0.iter().rev().cmp(b.0.iter().rev()));
        out
    }

    fn backtrack(&self, current: &mut Vec<usize>, out: &mut Vec<ColumnSet>) {
        let pos = current.len();
        if pos == self.len() {
            out.push(ColumnSet(current.clone()));
            return;
        }
        let lo = current.last().map_or(1, |&s| s + 1);
        for s in lo..=self.0[pos] {
            current.push(s);
            self.backtrack(current, out);
            current.pop();
        }
    }

    /// `#{S : S <= self}` by dynamic programming over positions.
    pub fn count_predecessors(&self) -> BigUint {
        let Some(&top) = self.0.last() else {
            return BigUint::one();
        };
        // ways[v] = number of valid prefixes whose last element is v
        let mut ways = vec![BigUint::zero(); top + 1];
        ways[1..=self.0[0]].fill(BigUint::one());
        for &bound in &self.0[1..] {
            let mut next = vec![BigUint::zero(); top + 1];
            let mut prefix = BigUint::zero();
            for v in 1..=bound {
                next[v] = prefix.clone();
                prefix += &ways[v];
            }
            ways = next;
        }
        ways.into_iter().sum()
    }

    /// `prod_{i in self} x_i`.
    pub fn weight(&self) -> Monomial {
        let mut exps = vec![0u32; self.max_row()];
        for &r in &self.0 {
            exps[r - 1] += 1;
        }
        Monomial::new(exps)
    }
}

impl fmt::Display for ColumnSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "{{")?;
        for (k, r) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "}}")
    }
}

/// `R <= S` for column sets.
pub fn column_leq(r: &ColumnSet, s: &ColumnSet) -> bool {
    r.leq(s)
}

/// A box at `(row, col)`, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.row, self.col)
    }
}

/// Two boxes of positive rank, with rank sum at least 3 when they share a
/// row or a column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnstablePair {
    pub first: Cell,
    pub second: Cell,
}

/// A diagram in `[n] x [n]`: exactly `n` columns, every row index at most `n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    n: usize,
    columns: Vec<ColumnSet>,
}

impl Diagram {
    /// The empty diagram in `[n] x [n]`.
    pub fn empty(n: usize) -> Self {
        Diagram { n, columns: vec![ColumnSet::empty(); n] }
    }

    /// Infers `n = max(#columns, largest row)` and pads with empty columns.
    pub fn new(columns: Vec<ColumnSet>) -> Self {
        let max_row = columns.iter().map(ColumnSet::max_row).max().unwrap_or(0);
        let n = columns.len().max(max_row);
        let mut columns = columns;
        columns.resize(n, ColumnSet::empty());
        Diagram { n, columns }
    }

    /// Places `columns` in a grid of the given size, padding with empty columns.
    pub fn with_size(n: usize, columns: Vec<ColumnSet>) -> Result<Self> {
        if columns.len() > n {
            return Err(Error::TooManyColumns { columns: columns.len(), n });
        }
        if let Some(row) = columns.iter().map(ColumnSet::max_row).find(|&r| r > n) {
            return Err(Error::RowOutOfRange { row, n });
        }
        let mut columns = columns;
        columns.resize(n, ColumnSet::empty());
        Ok(Diagram { n, columns })
    }

    /// Convenience constructor from raw row lists; rows need not be sorted.
    pub fn from_columns<I, C>(columns: I) -> Result<Self>
    where
        I: IntoIterator<Item = C>,
        C: Into<Vec<usize>>,
    {
        let cols =
            columns.into_iter().map(|c| ColumnSet::from_unsorted(c.into())).collect::<Result<Vec<_>, _>>()?;
        Ok(Diagram::new(cols))
    }

    pub fn from_cells<I>(n: usize, cells: I) -> Result<Self>
    where
        I: IntoIterator<Item = Cell>,
    {
        let mut cols = vec![Vec::new(); n];
        for c in cells {
            if c.row == 0 || c.row > n {
                return Err(Error::RowOutOfRange { row: c.row, n });
            }
            if c.col == 0 || c.col > n {
                return Err(Error::TooManyColumns { columns: c.col, n });
            }
            cols[c.col - 1].push(c.row);
        }
        let cols = cols.into_iter().map(ColumnSet::from_unsorted).collect::<Result<Vec<_>, _>>()?;
        Diagram::with_size(n, cols)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn columns(&self) -> &[ColumnSet] {
        &self.columns
    }

    /// Column `j`, 1-based.
    pub fn column(&self, j: usize) -> &ColumnSet {
        &self.columns[j - 1]
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        col >= 1 && col <= self.n && self.columns[col - 1].contains(row)
    }

    /// Boxes in column-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.columns.iter().enumerate().flat_map(|(j, c)| c.rows().iter().map(move |&r| Cell::new(r, j + 1)))
    }

    pub fn box_count(&self) -> usize {
        self.columns.iter().map(ColumnSet::len).sum()
    }

    /// The diagram with its columns enlarged to an `m x m` grid, `m >= n`.
    pub fn embed(&self, m: usize) -> Result<Diagram> {
        Diagram::with_size(m, self.columns.clone())
    }

    /// `self <= other` column by column; missing columns count as empty.
    pub fn leq(&self, other: &Diagram) -> bool {
        let len = self.n.max(other.n);
        let empty = ColumnSet::empty();
        (0..len).all(|j| {
            let a = self.columns.get(j).unwrap_or(&empty);
            let b = other.columns.get(j).unwrap_or(&empty);
            a.leq(b)
        })
    }

    /// `x^D`: the exponent of `x_i` is the number of columns containing row `i`.
    pub fn weight(&self) -> Monomial {
        let mut exps = vec![0u32; self.n];
        for c in &self.columns {
            for &r in c.rows() {
                exps[r - 1] += 1;
            }
        }
        Monomial::new(exps)
    }

    /// Number of rows `k <= row` with `(k, col)` not in the diagram.
    pub fn rank_box(&self, row: usize, col: usize) -> Result<usize> {
        if !self.contains(row, col) {
            return Err(Error::NotABox { row, col });
        }
        let above = self.columns[col - 1].rows().iter().take_while(|&&r| r <= row).count();
        Ok(row - above)
    }

    pub fn rank(&self) -> usize {
        self.columns.iter().map(ColumnSet::rank).sum()
    }

    /// A chain `C^0 < C^1 < ... < D` with `rank(C^k) = k`.
    ///
    /// Columns are lowered one at a time, left to right: in a column with a
    /// gap, take the largest vacant row `k` below its lowest box and move the
    /// box in row `k + 1` up into row `k`. Each move lowers the rank by one.
    pub fn rank_chain(&self) -> Vec<Diagram> {
        let mut chain = vec![self.clone()];
        let mut current = self.clone();
        for j in 0..self.n {
            loop {
                let rows = current.columns[j].rows();
                let Some(&bottom) = rows.last() else { break };
                let Some(gap) = (1..bottom).rev().find(|k| !current.columns[j].contains(*k)) else {
                    break;
                };
                let moved: Vec<usize> = rows.iter().map(|&r| if r == gap + 1 { gap } else { r }).collect();
                current.columns[j] = ColumnSet(moved);
                chain.push(current.clone());
            }
        }
        chain.reverse();
        chain
    }

    /// The order ideal `{C : C <= D}` per column, each in increasing invlex order.
    pub fn column_ideals(&self) -> Vec<Vec<ColumnSet>> {
        self.columns.iter().map(ColumnSet::predecessors).collect()
    }

    /// `#{C : C <= D}` as a product of per-column counts.
    pub fn count_below(&self) -> BigUint {
        self.columns.iter().map(ColumnSet::count_predecessors).product()
    }

    /// Lazily yields every `C <= D` once, capped at [`DEFAULT_ENUMERATION_CAP`].
    pub fn enumerate_below(&self) -> BelowIter {
        BelowIter::new(self, Some(DEFAULT_ENUMERATION_CAP))
    }

    pub fn enumerate_below_capped(&self, cap: Option<u64>) -> BelowIter {
        BelowIter::new(self, cap)
    }

    /// All of `{C : C <= D}`, or [`Error::CapExceeded`] if there are more than `cap`.
    pub fn collect_below(&self, cap: u64) -> Result<Vec<Diagram>> {
        let mut it = self.enumerate_below_capped(Some(cap));
        let all: Vec<Diagram> = it.by_ref().collect();
        if it.truncated() {
            return Err(Error::CapExceeded { cap });
        }
        Ok(all)
    }

    /// Whenever `(i, j), (i', j')` are boxes with `i > i'` and `j < j'`,
    /// the box `(i', j)` is present.
    pub fn is_northwest(&self) -> bool {
        let cells: Vec<Cell> = self.cells().collect();
        cells.iter().all(|a| {
            cells.iter().filter(|b| a.row > b.row && a.col < b.col).all(|b| self.contains(b.row, a.col))
        })
    }

    pub fn has_unstable_pair(&self) -> Option<UnstablePair> {
        let ranked: Vec<(Cell, usize)> = self
            .cells()
            .map(|c| (c, self.columns[c.col - 1].rows().partition_point(|&r| r <= c.row)))
            .map(|(c, above)| (c, c.row - above))
            .filter(|&(_, r)| r >= 1)
            .collect();
        for (k, &(a, ra)) in ranked.iter().enumerate() {
            for &(b, rb) in &ranked[k + 1..] {
                let aligned = a.row == b.row || a.col == b.col;
                if !aligned || ra + rb >= 3 {
                    return Some(UnstablePair { first: a, second: b });
                }
            }
        }
        None
    }

    /// `n` lines of `n` characters, `#` for a box and `.` otherwise.
    pub fn to_grid(&self) -> String {
        let mut s = String::with_capacity(self.n * (self.n + 1));
        for i in 1..=self.n {
            for j in 1..=self.n {
                s.push(if self.contains(i, j) { '#' } else { '.' });
            }
            s.push('\n');
        }
        s
    }

    pub fn parse_grid(text: &str) -> Result<Diagram> {
        let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
        let n = lines.len();
        let mut cells = Vec::new();
        for (i, line) in lines.iter().enumerate() {
            if line.chars().count() != n {
                return Err(ParseError::new(*line, format!("expected {n} characters per row")).into());
            }
            for (j, ch) in line.chars().enumerate() {
                match ch {
                    '#' => cells.push(Cell::new(i + 1, j + 1)),
                    '.' => {}
                    other => {
                        return Err(ParseError::new(other.to_string(), "grid cells are '#' or '.'").into())
                    }
                }
            }
        }
        Diagram::from_cells(n, cells)
    }

    /// Column lists separated by `;`, rows by `,`, e.g. `1,3;2,3;`. The
    /// empty `1 x 1` diagram is written `-`, since the empty string is `n = 0`.
    pub fn to_inline(&self) -> String {
        if self.n == 1 && self.columns[0].is_empty() {
            return "-".to_string();
        }
        self.columns
            .iter()
            .map(|c| c.rows().iter().map(usize::to_string).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join(";")
    }

    /// Parses [`Diagram::to_inline`] output. The empty string is the empty
    /// diagram with `n = 0`; a column written `-` is empty.
    pub fn parse_inline(text: &str) -> Result<Diagram> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Diagram::empty(0));
        }
        let mut cols = Vec::new();
        for part in text.split(';') {
            let part = part.trim();
            let mut rows = Vec::new();
            if !part.is_empty() && part != "-" {
                for tok in part.split(',') {
                    let tok = tok.trim();
                    let r: usize = tok
                        .parse()
                        .ok()
                        .filter(|&r| r >= 1)
                        .ok_or_else(|| ParseError::new(tok, "row index must be a positive integer"))?;
                    rows.push(r);
                }
            }
            cols.push(ColumnSet::from_unsorted(rows).map_err(|e| ParseError::new(part, e.reason))?);
        }
        Ok(Diagram::new(cols))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("diagram serialization cannot fail")
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.columns.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    n: usize,
    columns: Vec<Vec<usize>>,
}

impl Serialize for Diagram {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        DiagramJson { n: self.n, columns: self.columns.iter().map(|c| c.0.clone()).collect() }
            .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Diagram {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = DiagramJson::deserialize(deserializer)?;
        let cols = raw
            .columns
            .into_iter()
            .map(ColumnSet::new)
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        Diagram::with_size(raw.n, cols).map_err(serde::de::Error::custom)
    }
}

/// Lazy enumeration of `{C : C <= D}`.
///
/// Each column ranges over its predecessors in increasing invlex order; the
/// combined sequence is the product order with the first column varying
/// slowest. When a cap is set and more diagrams remain after `cap` have been
/// produced, iteration stops and [`BelowIter::truncated`] reports it.
pub struct BelowIter {
    n: usize,
    ideals: Vec<Vec<ColumnSet>>,
    odometer: Vec<usize>,
    done: bool,
    produced: u64,
    cap: Option<u64>,
    truncated: bool,
}

impl BelowIter {
    fn new(d: &Diagram, cap: Option<u64>) -> Self {
        let ideals = d.column_ideals();
        let done = ideals.iter().any(Vec::is_empty);
        BelowIter {
            n: d.n,
            odometer: vec![0; ideals.len()],
            ideals,
            done,
            produced: 0,
            cap,
            truncated: false,
        }
    }

    pub fn truncated(&self) -> bool {
        self.truncated
    }

    pub fn produced(&self) -> u64 {
        self.produced
    }

    fn advance(&mut self) {
        for j in (0..self.odometer.len()).rev() {
            self.odometer[j] += 1;
            if self.odometer[j] < self.ideals[j].len() {
                return;
            }
            self.odometer[j] = 0;
        }
        self.done = true;
    }
}

impl Iterator for BelowIter {
    type Item = Diagram;

    fn next(&mut self) -> Option<Diagram> {
        if self.done {
            return None;
        }
        if self.cap.is_some_and(|cap| self.produced >= cap) {
            self.truncated = true;
            self.done = true;
            return None;
        }
        let columns = self.odometer.iter().zip(&self.ideals).map(|(&k, ideal)| ideal[k].clone()).collect();
        self.advance();
        self.produced += 1;
        Some(Diagram { n: self.n, columns })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cs(rows: &[usize]) -> ColumnSet {
        ColumnSet::new(rows.to_vec()).unwrap()
    }

    fn example() -> Diagram {
        Diagram::from_columns(vec![vec![1, 3], vec![2, 3], vec![]]).unwrap()
    }

    #[test]
    fn column_order_examples() {
        assert!(column_leq(&cs(&[1, 3]), &cs(&[2, 3])));
        assert!(!column_leq(&cs(&[2, 3]), &cs(&[1, 3])));
        assert!(!column_leq(&cs(&[1]), &cs(&[1, 2])));
    }

    #[test]
    fn column_set_validation() {
        assert!(ColumnSet::new(vec![2, 1]).is_err());
        assert!(ColumnSet::new(vec![0, 1]).is_err());
        assert!(ColumnSet::from_unsorted(vec![3, 1, 3]).is_err());
        assert_eq!(ColumnSet::from_unsorted(vec![3, 1]).unwrap(), cs(&[1, 3]));
    }

    #[test]
    fn grid_size_is_inferred_and_padded() {
        let d = Diagram::from_columns(vec![vec![4]]).unwrap();
        assert_eq!(d.n(), 4);
        assert_eq!(d.columns().len(), 4);
        assert!(Diagram::with_size(2, vec![cs(&[3])]).is_err());
        assert!(Diagram::with_size(1, vec![cs(&[1]), cs(&[1])]).is_err());
    }

    #[test]
    fn enumerate_below_example() {
        let below: Vec<Diagram> = example().enumerate_below().collect();
        assert_eq!(below.len(), 6);
        let expected = [
            (vec![1, 2], vec![1, 2]),
            (vec![1, 2], vec![1, 3]),
            (vec![1, 2], vec![2, 3]),
            (vec![1, 3], vec![1, 2]),
            (vec![1, 3], vec![1, 3]),
            (vec![1, 3], vec![2, 3]),
        ];
        for (d, (a, b)) in below.iter().zip(expected) {
            assert_eq!(d, &Diagram::from_columns(vec![a, b, vec![]]).unwrap());
        }
    }

    #[test]
    fn enumerate_below_trivial_cases() {
        let empty = Diagram::empty(3);
        assert_eq!(empty.enumerate_below().collect::<Vec<_>>(), vec![empty.clone()]);
        let single = Diagram::from_columns(vec![vec![2]]).unwrap();
        let below: Vec<Diagram> = single.enumerate_below().collect();
        assert_eq!(
            below,
            vec![
                Diagram::with_size(2, vec![cs(&[1])]).unwrap(),
                Diagram::with_size(2, vec![cs(&[2])]).unwrap()
            ]
        );
    }

    #[test]
    fn enumeration_cap_is_reported() {
        let d = Diagram::from_columns(vec![vec![3], vec![3]]).unwrap();
        let mut it = d.enumerate_below_capped(Some(4));
        assert_eq!(it.by_ref().count(), 4);
        assert!(it.truncated());
        let mut exact = d.enumerate_below_capped(Some(9));
        assert_eq!(exact.by_ref().count(), 9);
        assert!(!exact.truncated());
        assert!(matches!(d.collect_below(8), Err(Error::CapExceeded { cap: 8 })));
    }

    #[test]
    fn count_below_examples() {
        assert_eq!(example().count_below(), BigUint::from(6u32));
        for k in 1..6 {
            let top: Vec<usize> = (1..=k).collect();
            assert_eq!(Diagram::from_columns(vec![top]).unwrap().count_below(), BigUint::one());
        }
        assert_eq!(cs(&[2, 3]).count_predecessors(), BigUint::from(3u32));
        // {1..8} shifted down by 8 in a 16-row grid: C(16, 8)
        let shifted: Vec<usize> = (9..=16).collect();
        assert_eq!(cs(&shifted).count_predecessors(), BigUint::from(12870u32));
    }

    #[test]
    fn rank_examples() {
        let d = example();
        assert_eq!(d.rank(), 3);
        assert_eq!(d.rank_box(3, 1).unwrap(), 1);
        assert_eq!(d.rank_box(2, 2).unwrap(), 1);
        assert_eq!(d.rank_box(3, 2).unwrap(), 1);
        assert!(matches!(d.rank_box(1, 2), Err(Error::NotABox { row: 1, col: 2 })));
        let top = Diagram::from_columns(vec![vec![1, 2, 3], vec![1], vec![1, 2]]).unwrap();
        assert_eq!(top.rank(), 0);
    }

    #[test]
    fn rank_chain_examples() {
        let single = Diagram::from_columns(vec![vec![2]]).unwrap();
        assert_eq!(single.rank_chain(), vec![Diagram::with_size(2, vec![cs(&[1])]).unwrap(), single.clone()]);
        let chain = example().rank_chain();
        assert_eq!(chain.len(), 4);
        assert_eq!(chain.last(), Some(&example()));
        for (k, c) in chain.iter().enumerate() {
            assert_eq!(c.rank(), k);
        }
        let top = Diagram::from_columns(vec![vec![1, 2]]).unwrap();
        assert_eq!(top.rank_chain(), vec![top.clone()]);
    }

    #[test]
    fn weight_examples() {
        assert_eq!(example().weight(), Monomial::new(vec![1, 1, 2]));
        assert_eq!(Diagram::empty(4).weight(), Monomial::one());
        let row = Diagram::from_columns(vec![vec![1], vec![1], vec![1]]).unwrap();
        assert_eq!(row.weight(), Monomial::new(vec![3]));
    }

    #[test]
    fn northwest_examples() {
        assert!(!Diagram::from_columns(vec![vec![2], vec![1]]).unwrap().is_northwest());
        assert!(Diagram::empty(3).is_northwest());
        assert!(Diagram::empty(0).is_northwest());
    }

    #[test]
    fn unstable_pair_examples() {
        let w = example().has_unstable_pair().unwrap();
        assert_eq!((w.first, w.second), (Cell::new(3, 1), Cell::new(2, 2)));
        let top = Diagram::from_columns(vec![vec![1, 2], vec![1]]).unwrap();
        assert_eq!(top.has_unstable_pair(), None);
        // same column, ranks 1 + 1
        assert_eq!(Diagram::from_columns(vec![vec![2, 3]]).unwrap().has_unstable_pair(), None);
        // same column, ranks 1 + 2
        assert!(Diagram::from_columns(vec![vec![2, 4]]).unwrap().has_unstable_pair().is_some());
    }

    #[test]
    fn text_formats() {
        let d = example();
        assert_eq!(d.to_grid(), "#..\n.#.\n##.\n");
        assert_eq!(Diagram::parse_grid(&d.to_grid()).unwrap(), d);
        assert_eq!(d.to_inline(), "1,3;2,3;");
        assert_eq!(Diagram::parse_inline("1,3;2,3;").unwrap(), d);
        assert_eq!(d.to_json(), r#"{"n":3,"columns":[[1,3],[2,3],[]]}"#);
        assert_eq!(serde_json::from_str::<Diagram>(&d.to_json()).unwrap(), d);
        assert_eq!(d.to_string(), "({1,3},{2,3},∅)");
        for n in 0..4 {
            let e = Diagram::empty(n);
            assert_eq!(Diagram::parse_inline(&e.to_inline()).unwrap(), e);
            assert_eq!(Diagram::parse_grid(&e.to_grid()).unwrap(), e);
        }
        assert_eq!(Diagram::empty(1).to_inline(), "-");
    }

    #[test]
    fn malformed_text_names_token() {
        let err = Diagram::parse_inline("1,x;2").unwrap_err();
        assert!(err.to_string().contains("`x`"), "{err}");
        let err = Diagram::parse_inline("2,2").unwrap_err();
        assert!(err.to_string().contains("2,2"), "{err}");
        assert!(Diagram::parse_grid("#.\n#").is_err());
        assert!(Diagram::parse_grid("#o\n..").unwrap_err().to_string().contains("`o`"));
        assert!(serde_json::from_str::<Diagram>(r#"{"n":2,"columns":[[3]]}"#).is_err());
    }
}
