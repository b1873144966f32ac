//! Determinants of submatrices of the generic upper-triangular matrix `Y`
//! and the dual character `chi_D` of the flagged Weyl module of a diagram.
//!
//! The module of `D` is spanned by the products over columns of the minors
//! of `Y` with rows `C_j` and columns `D_j`, one product for every `C <= D`.
//! Each product is an eigenvector of the diagonal torus with dual weight
//! `x^C`, so the coefficient of a monomial `m` in `chi_D` is the dimension
//! of the span of the products whose `C` has weight `m`.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::Mul;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::diagram::{ColumnSet, Diagram, DEFAULT_ENUMERATION_CAP};
use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::{Monomial, SparsePolynomial};

/// A product of upper-triangular indeterminates `y_ij` (`i <= j`), factors sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YMonomial {
    factors: Vec<(u16, u16)>,
}

impl YMonomial {
    pub fn one() -> Self {
        YMonomial::default()
    }

    /// Panics if some factor has `i > j`: those entries of `Y` are zero.
    pub fn new(mut factors: Vec<(u16, u16)>) -> Self {
        assert!(factors.iter().all(|&(i, j)| i <= j), "y_ij requires i <= j");
        factors.sort_unstable();
        YMonomial { factors }
    }

    pub fn factors(&self) -> &[(u16, u16)] {
        &self.factors
    }

    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    pub fn mul(&self, other: &YMonomial) -> YMonomial {
        let mut factors = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut a, mut b) = (self.factors.iter().peekable(), other.factors.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(x), Some(y)) if x <= y => factors.push(*a.next().unwrap()),
                (Some(_), Some(_)) => factors.push(*b.next().unwrap()),
                (Some(_), None) => factors.push(*a.next().unwrap()),
                (None, Some(_)) => factors.push(*b.next().unwrap()),
                (None, None) => break,
            }
        }
        YMonomial { factors }
    }
}

impl fmt::Display for YMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let wide = self.factors.iter().any(|&(i, j)| i > 9 || j > 9);
        let mut k = 0;
        let mut first = true;
        while k < self.factors.len() {
            let (i, j) = self.factors[k];
            let run = self.factors[k..].iter().take_while(|&&p| p == (i, j)).count();
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if wide {
                write!(f, "y{i}_{j}")?;
            } else {
                write!(f, "y{i}{j}")?;
            }
            if run > 1 {
                write!(f, "^{run}")?;
            }
            k += run;
        }
        Ok(())
    }
}

/// Integer combination of [`YMonomial`]s; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct YPolynomial {
    terms: BTreeMap<YMonomial, BigInt>,
}

impl YPolynomial {
    pub fn zero() -> Self {
        YPolynomial::default()
    }

    pub fn one() -> Self {
        let mut p = YPolynomial::zero();
        p.add_term(YMonomial::one(), BigInt::one());
        p
    }

    pub fn add_term(&mut self, m: YMonomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&YMonomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &BigInt) -> YPolynomial {
        let mut out = YPolynomial::zero();
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }
}

impl Mul for &YPolynomial {
    type Output = YPolynomial;

    fn mul(self, rhs: &YPolynomial) -> YPolynomial {
        let mut out = YPolynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for YPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let abs = c.abs();
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if abs.is_one() && m.degree() > 0 {
                write!(f, "{m}")?;
            } else if m.degree() == 0 {
                write!(f, "{abs}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

/// `det(Y)` restricted to rows `c_col` and columns `d_col`.
///
/// Expanded as a signed sum over bijections from rows to columns, pruning
/// every assignment of a row to a column strictly above it (a zero entry).
pub fn column_determinant(d_col: &ColumnSet, c_col: &ColumnSet) -> Result<YPolynomial> {
    if d_col.len() != c_col.len() {
        return Err(Error::CardinalityMismatch { col: 0, left: d_col.len(), right: c_col.len() });
    }
    let rows = c_col.rows();
    let cols = d_col.rows();
    let k = rows.len();
    let mut out = YPolynomial::zero();
    let mut assignment = Vec::with_capacity(k);
    let mut used = vec![false; k];
    expand(rows, cols, &mut assignment, &mut used, &mut out);
    Ok(out)
}

fn expand(
    rows: &[usize],
    cols: &[usize],
    assignment: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut YPolynomial,
) {
    let a = assignment.len();
    if a == rows.len() {
        let inversions = (0..a)
            .flat_map(|x| (x + 1..a).map(move |y| (x, y)))
            .filter(|&(x, y)| assignment[x] > assignment[y])
            .count();
        let factors = assignment.iter().enumerate().map(|(r, &c)| (rows[r] as u16, cols[c] as u16)).collect();
        let sign = if inversions % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        out.add_term(YMonomial::new(factors), sign);
        return;
    }
    for b in 0..cols.len() {
        if used[b] || rows[a] > cols[b] {
            continue;
        }
        used[b] = true;
        assignment.push(b);
        expand(rows, cols, assignment, used, out);
        assignment.pop();
        used[b] = false;
    }
}

/// `prod_j det(Y^{C_j}_{D_j})`, nonzero exactly when `C <= D`.
pub fn determinant_product(d: &Diagram, c: &Diagram) -> Result<YPolynomial> {
    let len = d.n().max(c.n());
    let empty = ColumnSet::empty();
    let mut out = YPolynomial::one();
    for j in 0..len {
        let dj = d.columns().get(j).unwrap_or(&empty);
        let cj = c.columns().get(j).unwrap_or(&empty);
        if dj.len() != cj.len() {
            return Err(Error::CardinalityMismatch { col: j + 1, left: dj.len(), right: cj.len() });
        }
        if dj.is_empty() {
            continue;
        }
        let det = column_determinant(dj, cj)?;
        if det.is_zero() {
            return Ok(YPolynomial::zero());
        }
        out = &out * &det;
    }
    Ok(out)
}

/// Dimension of the rational span of `polys`.
pub fn coefficient_rank(polys: &[YPolynomial]) -> usize {
    let mut index: BTreeMap<&YMonomial, usize> = BTreeMap::new();
    for p in polys {
        for (m, _) in p.terms() {
            index.entry(m).or_insert(0);
        }
    }
    for (k, v) in index.values_mut().enumerate() {
        *v = k;
    }
    let width = index.len();
    let rows: Vec<Vec<BigInt>> = polys
        .iter()
        .map(|p| {
            let mut row = vec![BigInt::zero(); width];
            for (m, c) in p.terms() {
                row[index[m]] = c.clone();
            }
            row
        })
        .collect();
    linalg::rank(&rows)
}

/// `{x^C : C <= D}`, built column by column as a sumset of column weights.
pub fn character_support(d: &Diagram) -> BTreeSet<Monomial> {
    let mut sums: BTreeSet<Vec<u32>> = BTreeSet::from([vec![0; d.n()]]);
    for ideal in d.column_ideals() {
        let weights: Vec<Vec<usize>> = ideal.iter().map(|c| c.rows().to_vec()).collect();
        let mut next = BTreeSet::new();
        for s in &sums {
            for rows in &weights {
                let mut t = s.clone();
                for &r in rows {
                    t[r - 1] += 1;
                }
                next.insert(t);
            }
        }
        sums = next;
    }
    sums.into_iter().map(Monomial::new).collect()
}

/// The diagrams `C <= D` sharing the weight `x^C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialClass {
    pub weight: Monomial,
    pub members: Vec<Diagram>,
}

#[derive(Clone, Copy, Debug)]
pub struct CharacterOptions {
    /// Refuse diagrams with more than this many `C <= D`.
    pub cap: u64,
    /// Compute the ranks of distinct weight classes on the rayon pool.
    pub parallel: bool,
}

impl Default for CharacterOptions {
    fn default() -> Self {
        CharacterOptions { cap: DEFAULT_ENUMERATION_CAP, parallel: false }
    }
}

/// Order ideal of `D` with each `C` encoded by its per-column choice indices.
struct Ideal {
    ideals: Vec<Vec<ColumnSet>>,
    /// class weight -> member index tuples, in enumeration order
    classes: BTreeMap<Monomial, Vec<Vec<u32>>>,
}

impl Ideal {
    fn build(d: &Diagram, cap: u64) -> Result<Ideal> {
        if d.count_below() > BigUint::from(cap) {
            return Err(Error::CapExceeded { cap });
        }
        let n = d.n();
        let ideals = d.column_ideals();
        let col_weights: Vec<Vec<Vec<u32>>> = ideals
            .iter()
            .map(|ideal| {
                ideal
                    .iter()
                    .map(|c| {
                        let mut w = vec![0u32; n];
                        for &r in c.rows() {
                            w[r - 1] += 1;
                        }
                        w
                    })
                    .collect()
            })
            .collect();
        let mut classes: HashMap<Vec<u32>, Vec<Vec<u32>>> = HashMap::new();
        let mut odometer = vec![0u32; ideals.len()];
        let mut weight = vec![0u32; n];
        'outer: loop {
            weight.iter_mut().for_each(|w| *w = 0);
            for (j, &k) in odometer.iter().enumerate() {
                for (acc, x) in weight.iter_mut().zip(&col_weights[j][k as usize]) {
                    *acc += x;
                }
            }
            classes.entry(weight.clone()).or_default().push(odometer.clone());
            for j in (0..odometer.len()).rev() {
                odometer[j] += 1;
                if (odometer[j] as usize) < ideals[j].len() {
                    continue 'outer;
                }
                odometer[j] = 0;
            }
            break;
        }
        let classes = classes.into_iter().map(|(w, members)| (Monomial::new(w), members)).collect();
        Ok(Ideal { ideals, classes })
    }

    fn diagram(&self, n: usize, idx: &[u32]) -> Diagram {
        let cols = idx.iter().zip(&self.ideals).map(|(&k, ideal)| ideal[k as usize].clone()).collect();
        Diagram::with_size(n, cols).expect("members of an order ideal fit the grid")
    }
}

/// Groups `{C : C <= D}` by weight, in increasing invlex order of the weight.
pub fn monomial_classes(d: &Diagram, cap: u64) -> Result<Vec<MonomialClass>> {
    let ideal = Ideal::build(d, cap)?;
    Ok(ideal
        .classes
        .iter()
        .map(|(w, members)| MonomialClass {
            weight: w.clone(),
            members: members.iter().map(|idx| ideal.diagram(d.n(), idx)).collect(),
        })
        .collect())
}

/// `chi_D` with the default options.
pub fn dual_character(d: &Diagram) -> Result<SparsePolynomial> {
    dual_character_with(d, CharacterOptions::default())
}

pub fn dual_character_with(d: &Diagram, opts: CharacterOptions) -> Result<SparsePolynomial> {
    let ideal = Ideal::build(d, opts.cap)?;
    // every (D_j, C_j) minor, computed once
    let dets: Vec<Vec<YPolynomial>> = d
        .columns()
        .iter()
        .zip(&ideal.ideals)
        .map(|(dj, ideal)| ideal.iter().map(|cj| column_determinant(dj, cj)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let class_rank = |members: &Vec<Vec<u32>>| -> usize {
        if members.len() == 1 {
            return 1;
        }
        // columns on which all members agree contribute a common nonzero
        // factor, which does not change the rank
        let varying: Vec<usize> =
            (0..dets.len()).filter(|&j| members.iter().any(|m| m[j] != members[0][j])).collect();
        let products: Vec<YPolynomial> = members
            .iter()
            .map(|m| varying.iter().fold(YPolynomial::one(), |acc, &j| &acc * &dets[j][m[j] as usize]))
            .collect();
        coefficient_rank(&products)
    };
    let entries: Vec<(&Monomial, &Vec<Vec<u32>>)> = ideal.classes.iter().collect();
    let ranks: Vec<usize> = if opts.parallel {
        entries.par_iter().map(|(_, members)| class_rank(members)).collect()
    } else {
        entries.iter().map(|(_, members)| class_rank(members)).collect()
    };
    Ok(SparsePolynomial::from_terms(
        entries.into_iter().zip(ranks).map(|((w, _), r)| (w.clone(), BigInt::from(r))),
    ))
}
