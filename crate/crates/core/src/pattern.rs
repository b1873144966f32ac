//! Box configurations and containment of a configuration in a diagram.
//!
//! File format: a header line `columnswap: true|false`, followed by one line
//! per pattern row using `#` (box required), `x` (box forbidden) and `.`
//! (no restriction).

use std::fmt;
use std::str::FromStr;

use crate::diagram::Diagram;
use crate::error::{Error, ParseError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CellRule {
    Required,
    Forbidden,
    Free,
}

impl CellRule {
    fn accepts(self, present: bool) -> bool {
        match self {
            CellRule::Required => present,
            CellRule::Forbidden => !present,
            CellRule::Free => true,
        }
    }

    fn symbol(self) -> char {
        match self {
            CellRule::Required => '#',
            CellRule::Forbidden => 'x',
            CellRule::Free => '.',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PatternGrid {
    rows: usize,
    cols: usize,
    cells: Vec<CellRule>,
    column_swap_allowed: bool,
}

/// Where a pattern was found: the chosen diagram rows, and the diagram
/// column matched by each pattern column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternMatch {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl PatternGrid {
    /// `cells` is row-major with `rows * cols` entries.
    pub fn new(rows: usize, cols: usize, cells: Vec<CellRule>, column_swap_allowed: bool) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(ParseError::new(format!("{rows}x{cols}"), "pattern must be at least 1x1").into());
        }
        if cells.len() != rows * cols {
            return Err(ParseError::new(
                format!("{} cells", cells.len()),
                format!("expected {}", rows * cols),
            )
            .into());
        }
        Ok(PatternGrid { rows, cols, cells, column_swap_allowed })
    }

    /// A pattern that matches exactly the given diagram restricted to some
    /// rows and columns: every box is required and every empty cell forbidden.
    pub fn exact(rows: usize, cols: usize, d: &Diagram, column_swap_allowed: bool) -> Result<Self> {
        let cells = (1..=rows)
            .flat_map(|i| (1..=cols).map(move |j| (i, j)))
            .map(|(i, j)| if d.contains(i, j) { CellRule::Required } else { CellRule::Forbidden })
            .collect();
        PatternGrid::new(rows, cols, cells, column_swap_allowed)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column_swap_allowed(&self) -> bool {
        self.column_swap_allowed
    }

    /// Rule at pattern position `(r, c)`, 1-based.
    pub fn rule(&self, r: usize, c: usize) -> CellRule {
        self.cells[(r - 1) * self.cols + (c - 1)]
    }

    pub fn set_rule(&mut self, r: usize, c: usize, rule: CellRule) {
        self.cells[(r - 1) * self.cols + (c - 1)] = rule;
    }

    /// First occurrence of the pattern in `d`, trying the reversed column
    /// order as well when column swapping is allowed.
    ///
    /// A pattern larger than the grid of `d` is matched against `d` embedded
    /// in a grid large enough to hold it, so occurrences may use the empty
    /// rows below row `n` and empty columns right of column `n`.
    pub fn find_in(&self, d: &Diagram) -> Option<PatternMatch> {
        let size = d.n().max(self.rows).max(self.cols);
        if size > d.n() {
            return self.find_in(&d.embed(size).expect("embedding into a larger grid"));
        }
        let n = d.n();
        let mut orders: Vec<Vec<usize>> = vec![(1..=self.cols).collect()];
        if self.column_swap_allowed && self.cols > 1 {
            orders.push((1..=self.cols).rev().collect());
        }
        let mut chosen = Vec::with_capacity(self.cols);
        let mut found = None;
        for_each_subset(n, self.cols, &mut chosen, &mut |cols| {
            for order in &orders {
                // pattern column order[k] is matched by diagram column cols[k]
                let mut mapped = vec![0; self.cols];
                for (k, &pc) in order.iter().enumerate() {
                    mapped[pc - 1] = cols[k];
                }
                if let Some(rows) = self.match_rows(d, &mapped) {
                    found = Some(PatternMatch { rows, cols: mapped });
                    return true;
                }
            }
            false
        });
        found
    }

    /// With the columns fixed, rows match independently, so taking the
    /// earliest matching diagram row for each pattern row is optimal.
    fn match_rows(&self, d: &Diagram, cols: &[usize]) -> Option<Vec<usize>> {
        let n = d.n();
        let mut rows = Vec::with_capacity(self.rows);
        let mut next = 1;
        for r in 1..=self.rows {
            let remaining = self.rows - r;
            let hit = (next..=n - remaining).find(|&i| {
                cols.iter().enumerate().all(|(k, &j)| self.rule(r, k + 1).accepts(d.contains(i, j)))
            })?;
            rows.push(hit);
            next = hit + 1;
        }
        Some(rows)
    }

    pub fn parse_file(text: &str) -> Result<Self> {
        text.parse()
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| Error::Io { path: path.display().to_string(), source })?;
        text.parse()
    }
}

/// Visits increasing `k`-subsets of `[n]` until `f` returns true.
fn for_each_subset(n: usize, k: usize, chosen: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if chosen.len() == k {
        return f(chosen);
    }
    let start = chosen.last().map_or(1, |&c| c + 1);
    let need = k - chosen.len();
    for c in start..=(n + 1).saturating_sub(need) {
        chosen.push(c);
        let stop = for_each_subset(n, k, chosen, f);
        chosen.pop();
        if stop {
            return true;
        }
    }
    false
}

/// Whether `d` contains an occurrence of `p`.
pub fn contains_pattern(d: &Diagram, p: &PatternGrid) -> bool {
    p.find_in(d).is_some()
}

impl FromStr for PatternGrid {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with("//"));
        let header = lines.next().ok_or_else(|| ParseError::new("", "empty pattern file"))?;
        let swap = match header.split_once(':') {
            Some((key, value)) if key.trim() == "columnswap" => match value.trim() {
                "true" => true,
                "false" => false,
                other => return Err(ParseError::new(other, "expected true or false").into()),
            },
            _ => return Err(ParseError::new(header, "expected `columnswap: true|false`").into()),
        };
        let mut cells = Vec::new();
        let mut rows = 0;
        let mut cols = None;
        for line in lines {
            let row: Vec<CellRule> = line
                .chars()
                .map(|ch| match ch {
                    '#' => Ok(CellRule::Required),
                    'x' => Ok(CellRule::Forbidden),
                    '.' => Ok(CellRule::Free),
                    other => Err(ParseError::new(other.to_string(), "pattern cells are '#', 'x' or '.'")),
                })
                .collect::<Result<_, _>>()?;
            if *cols.get_or_insert(row.len()) != row.len() {
                return Err(ParseError::new(line, "pattern rows differ in length").into());
            }
            cells.extend(row);
            rows += 1;
        }
        PatternGrid::new(rows, cols.unwrap_or(0), cells, swap)
    }
}

impl fmt::Display for PatternGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "columnswap: {}", self.column_swap_allowed)?;
        for r in 1..=self.rows {
            let line: String = (1..=self.cols).map(|c| self.rule(r, c).symbol()).collect();
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(text: &str) -> PatternGrid {
        text.parse().unwrap()
    }

    #[test]
    fn small_diagrams_are_padded_with_empty_rows() {
        let p = grid("columnswap: false\n..\n..\n");
        assert!(contains_pattern(&Diagram::empty(2), &p));
        assert!(contains_pattern(&Diagram::empty(1), &p));
        let one = Diagram::from_columns(vec![vec![1]]).unwrap();
        assert!(contains_pattern(&one, &grid("columnswap: false\n#\nx\n")));
        assert!(!contains_pattern(&one, &grid("columnswap: false\n#\n#\n")));
    }

    #[test]
    fn required_box_needs_a_box() {
        let p = grid("columnswap: false\n#\n");
        assert!(!contains_pattern(&Diagram::empty(4), &p));
    }

    #[test]
    fn forbidden_above_required() {
        let p = grid("columnswap: false\nx\n#\n");
        let d = Diagram::from_columns(vec![vec![2]]).unwrap();
        let m = p.find_in(&d).unwrap();
        assert_eq!(m.rows, vec![1, 2]);
        assert_eq!(m.cols, vec![1]);
    }

    #[test]
    fn column_swap() {
        // a box in the left column above a box in the right one
        let p = grid("columnswap: false\n#x\nx#\n");
        let swapped = grid("columnswap: true\n#x\nx#\n");
        let d = Diagram::from_columns(vec![vec![2], vec![1]]).unwrap();
        assert!(!contains_pattern(&d, &p));
        let m = swapped.find_in(&d).unwrap();
        assert_eq!(m.cols, vec![2, 1]);
        assert_eq!(m.rows, vec![1, 2]);
    }

    #[test]
    fn file_round_trip_and_errors() {
        let text = "columnswap: true\nx#\n#.\n..\n##\n";
        let p = grid(text);
        assert_eq!((p.rows(), p.cols()), (4, 2));
        assert_eq!(p.to_string(), text);
        assert!("columnswap: maybe\n#\n".parse::<PatternGrid>().is_err());
        assert!("#\n".parse::<PatternGrid>().is_err());
        let err = "columnswap: false\n#q\n".parse::<PatternGrid>().unwrap_err();
        assert!(err.to_string().contains("`q`"));
        assert!("columnswap: false\n#.\n#\n".parse::<PatternGrid>().is_err());
        assert!("columnswap: false\n".parse::<PatternGrid>().is_err());
    }

    #[test]
    fn exact_pattern_matches_its_source() {
        let d = Diagram::from_columns(vec![vec![1, 3], vec![2, 3], vec![]]).unwrap();
        let p = PatternGrid::exact(3, 2, &d, false).unwrap();
        assert_eq!(p.to_string(), "columnswap: false\n#x\nx#\n##\n");
        assert!(contains_pattern(&d, &p));
    }
}
