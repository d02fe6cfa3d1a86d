//! Homogeneous polynomial matrices, formal degree matrices, linearization
//! and minors.

use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::GradedIdeal;
use crate::polynomial::{Polynomial, Ring};

/// Matrix of a graded map `⊕_j S(-f_j) → ⊕_i S(-g_i)`: the entry in row
/// `i`, column `j` is zero or homogeneous of degree `f_j - g_i`.
#[derive(Clone, PartialEq, Eq)]
pub struct HomogeneousMatrix {
    ring: Ring,
    row_degrees: Vec<i64>,
    col_degrees: Vec<i64>,
    entries: Vec<Vec<Polynomial>>,
}

impl HomogeneousMatrix {
    /// Entries must lie in the maximal ideal: positions of formal degree
    /// `≤ 0` must hold zero.
    pub fn new(ring: Ring, row_degrees: Vec<i64>, col_degrees: Vec<i64>, entries: Vec<Vec<Polynomial>>) -> Result<Self> {
        let m = Self::with_units(ring, row_degrees, col_degrees, entries)?;
        for i in 0..m.nrows() {
            for j in 0..m.ncols() {
                if !m.entries[i][j].is_zero() && m.formal_degree(i, j) <= 0 {
                    return Err(Error::DegreeData(format!(
                        "entry ({}, {}) = {} has non-positive degree",
                        i + 1,
                        j + 1,
                        m.entries[i][j]
                    )));
                }
            }
        }
        Ok(m)
    }

    /// As [`HomogeneousMatrix::new`] but scalar entries in degree zero are allowed.
    pub fn with_units(ring: Ring, row_degrees: Vec<i64>, col_degrees: Vec<i64>, entries: Vec<Vec<Polynomial>>) -> Result<Self> {
        if entries.len() != row_degrees.len() {
            return Err(Error::Shape(format!(
                "{} rows but {} row degrees",
                entries.len(),
                row_degrees.len()
            )));
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != col_degrees.len() {
                return Err(Error::Shape(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    row.len(),
                    col_degrees.len()
                )));
            }
            for (j, e) in row.iter().enumerate() {
                if e.ring() != ring {
                    return Err(Error::FieldMismatch(e.ring().characteristic(), ring.characteristic()));
                }
                if e.is_zero() {
                    continue;
                }
                let want = col_degrees[j] - row_degrees[i];
                match e.homogeneous_degree() {
                    Some(d) if d as i64 == want => {}
                    _ => {
                        return Err(Error::DegreeData(format!(
                            "entry ({}, {}) = {} should be homogeneous of degree {want}",
                            i + 1,
                            j + 1,
                            e
                        )))
                    }
                }
            }
        }
        Ok(Self {
            ring,
            row_degrees,
            col_degrees,
            entries,
        })
    }

    pub fn zero(ring: Ring, row_degrees: Vec<i64>, col_degrees: Vec<i64>) -> Self {
        let entries = vec![vec![ring.zero(); col_degrees.len()]; row_degrees.len()];
        Self {
            ring,
            row_degrees,
            col_degrees,
            entries,
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn nrows(&self) -> usize {
        self.row_degrees.len()
    }

    pub fn ncols(&self) -> usize {
        self.col_degrees.len()
    }

    pub fn row_degrees(&self) -> &[i64] {
        &self.row_degrees
    }

    pub fn col_degrees(&self) -> &[i64] {
        &self.col_degrees
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<Polynomial>] {
        &self.entries
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        self.entries[i][j] = p;
    }

    pub fn formal_degree(&self, i: usize, j: usize) -> i64 {
        self.col_degrees[j] - self.row_degrees[i]
    }

    pub fn degree_matrix(&self) -> DegreeMatrix {
        DegreeMatrix::from_degrees(&self.row_degrees, &self.col_degrees)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|e| e.is_zero())
    }

    /// Nonzero entries of degree zero, i.e. units.
    pub fn has_unit_entry(&self) -> bool {
        (0..self.nrows()).any(|i| (0..self.ncols()).any(|j| !self.entries[i][j].is_zero() && self.formal_degree(i, j) == 0))
    }

    pub fn is_symmetric(&self) -> bool {
        self.nrows() == self.ncols()
            && (0..self.nrows()).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    /// Replace every entry of degree at least two by zero.
    pub fn linearize(&self) -> Self {
        let mut out = self.clone();
        for i in 0..self.nrows() {
            for j in 0..self.ncols() {
                if self.formal_degree(i, j) >= 2 {
                    out.entries[i][j] = self.ring.zero();
                }
            }
        }
        out
    }

    /// `self · other`; the column degrees of `self` must equal the row degrees of `other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.col_degrees != other.row_degrees {
            return Err(Error::Shape("inner degrees do not match".into()));
        }
        let mut out = Self::zero(self.ring, self.row_degrees.clone(), other.col_degrees.clone());
        for i in 0..self.nrows() {
            for j in 0..other.ncols() {
                let mut acc = self.ring.zero();
                for k in 0..self.ncols() {
                    let a = &self.entries[i][k];
                    let b = &other.entries[k][j];
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                out.entries[i][j] = acc;
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        let entries = (0..self.ncols())
            .map(|j| (0..self.nrows()).map(|i| self.entries[i][j].clone()).collect())
            .collect();
        Self {
            ring: self.ring,
            row_degrees: self.col_degrees.iter().map(|d| -d).collect(),
            col_degrees: self.row_degrees.iter().map(|d| -d).collect(),
            entries,
        }
    }

    /// Reorder rows and columns: output row `k` is input row `rows[k]`.
    pub fn permute(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self {
            ring: self.ring,
            row_degrees: rows.iter().map(|&i| self.row_degrees[i]).collect(),
            col_degrees: cols.iter().map(|&j| self.col_degrees[j]).collect(),
            entries: rows
                .iter()
                .map(|&i| cols.iter().map(|&j| self.entries[i][j].clone()).collect())
                .collect(),
        }
    }

    /// Determinants of all `k × k` submatrices using rows `rows`, keyed by
    /// the column subset (bitmask).
    fn minors_on_rows(&self, rows: &[usize]) -> Vec<(u64, Polynomial)> {
        // Laplace expansion along rows, one column subset per state
        let mut states: Vec<(u64, Polynomial)> = vec![(0, self.ring.one())];
        for &r in rows {
            let mut next: Vec<(u64, Polynomial)> = Vec::new();
            for (mask, p) in &states {
                for j in 0..self.ncols() {
                    if mask & (1 << j) != 0 {
                        continue;
                    }
                    let e = &self.entries[r][j];
                    if e.is_zero() {
                        continue;
                    }
                    let inversions = (mask >> (j + 1)).count_ones();
                    let mut term = p * e;
                    if inversions % 2 == 1 {
                        term = -&term;
                    }
                    let nm = mask | (1 << j);
                    match next.binary_search_by_key(&nm, |s| s.0) {
                        Ok(pos) => next[pos].1 = &next[pos].1 + &term,
                        Err(pos) => next.insert(pos, (nm, term)),
                    }
                }
            }
            next.retain(|s| !s.1.is_zero());
            states = next;
        }
        states
    }

    /// All nonzero `k`-minors.
    pub fn minors(&self, k: usize) -> Vec<Polynomial> {
        let mut out = Vec::new();
        if k == 0 {
            return vec![self.ring.one()];
        }
        if k > self.nrows() || k > self.ncols() {
            return out;
        }
        for rows in subsets(self.nrows(), k) {
            for (_, p) in self.minors_on_rows(&rows) {
                out.push(p);
            }
        }
        out
    }

    /// Ideal generated by the `k`-minors.
    pub fn minors_ideal(&self, k: usize) -> GradedIdeal {
        GradedIdeal::new(self.ring, self.minors(k)).expect("minors of a homogeneous matrix are homogeneous")
    }

    /// Ideal of maximal minors.
    pub fn maximal_minors_ideal(&self) -> GradedIdeal {
        self.minors_ideal(self.nrows().min(self.ncols()))
    }

    pub fn determinant(&self) -> Result<Polynomial> {
        if self.nrows() != self.ncols() {
            return Err(Error::Shape("determinant of a non-square matrix".into()));
        }
        let rows: Vec<usize> = (0..self.nrows()).collect();
        Ok(self
            .minors_on_rows(&rows)
            .pop()
            .map(|s| s.1)
            .unwrap_or_else(|| self.ring.zero()))
    }

    /// Largest `t` with a nonzero `t`-minor, searching from small `t` upward.
    pub fn rank(&self) -> usize {
        let mut t = 0;
        while t < self.nrows().min(self.ncols()) {
            let found = subsets(self.nrows(), t + 1)
                .into_iter()
                .any(|rows| !self.minors_on_rows(&rows).is_empty());
            if !found {
                break;
            }
            t += 1;
        }
        t
    }
}

/// `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

impl fmt::Debug for HomogeneousMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for HomogeneousMatrix {
    /// `matrix r c rowdeg ... coldeg ... entries: a b / c d`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "matrix {} {} rowdeg", self.nrows(), self.ncols())?;
        for d in &self.row_degrees {
            write!(f, " {d}")?;
        }
        write!(f, " coldeg")?;
        for d in &self.col_degrees {
            write!(f, " {d}")?;
        }
        write!(f, " entries:")?;
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, " /")?;
            }
            for e in row {
                write!(f, " {}", e.to_string().replace(' ', ""))?;
            }
        }
        Ok(())
    }
}

/// Grid of formal entry degrees `u_{ij}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DegreeMatrix {
    entries: Vec<Vec<i64>>,
}

impl DegreeMatrix {
    /// Validates the homogeneity relation on every adjacent 2×2 square,
    /// which is equivalent to `u_{ij} = f_j - g_i` for some degree vectors.
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let c = entries.first().map_or(0, |r| r.len());
        if entries.is_empty() || c == 0 || entries.iter().any(|r| r.len() != c) {
            return Err(Error::Shape("degree matrix must be a nonempty rectangle".into()));
        }
        for i in 0..entries.len().saturating_sub(1) {
            for j in 0..c - 1 {
                if entries[i][j] + entries[i + 1][j + 1] != entries[i + 1][j] + entries[i][j + 1] {
                    return Err(Error::DegreeData(format!(
                        "homogeneity relation fails at rows {}-{}, columns {}-{}",
                        i + 1,
                        i + 2,
                        j + 1,
                        j + 2
                    )));
                }
            }
        }
        Ok(Self { entries })
    }

    pub fn from_degrees(row_degrees: &[i64], col_degrees: &[i64]) -> Self {
        Self {
            entries: row_degrees
                .iter()
                .map(|g| col_degrees.iter().map(|f| f - g).collect())
                .collect(),
        }
    }

    /// Symmetric degree data `u_{ij} = d_i + d_j` from doubled values `2 d_i`.
    pub fn symmetric_from_doubled(doubled: &[i64]) -> Result<Self> {
        if doubled.is_empty() {
            return Err(Error::Shape("empty degree data".into()));
        }
        let parity = doubled[0].rem_euclid(2);
        if doubled.iter().any(|d| d.rem_euclid(2) != parity) {
            return Err(Error::DegreeData("d_i + d_j must be an integer for all i, j".into()));
        }
        Ok(Self {
            entries: doubled
                .iter()
                .map(|a| doubled.iter().map(|b| (a + b) / 2).collect())
                .collect(),
        })
    }

    pub fn nrows(&self) -> usize {
        self.entries.len()
    }

    pub fn ncols(&self) -> usize {
        self.entries[0].len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// A compatible pair `(g, f)` with `g_1 = 0`.
    pub fn degrees(&self) -> (Vec<i64>, Vec<i64>) {
        let f: Vec<i64> = self.entries[0].clone();
        let g: Vec<i64> = self.entries.iter().map(|r| f[0] - r[0]).collect();
        (g, f)
    }

    /// Non-increasing along rows, non-decreasing down columns.
    pub fn is_normalized(&self) -> bool {
        let r = self.nrows();
        let c = self.ncols();
        (0..r).all(|i| (0..c - 1).all(|j| self.entries[i][j] >= self.entries[i][j + 1]))
            && (0..r - 1).all(|i| (0..c).all(|j| self.entries[i][j] <= self.entries[i + 1][j]))
    }

    pub fn permute(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self {
            entries: rows
                .iter()
                .map(|&i| cols.iter().map(|&j| self.entries[i][j]).collect())
                .collect(),
        }
    }

    pub fn linear_entries(&self) -> usize {
        self.entries.iter().flatten().filter(|&&u| u == 1).count()
    }
}

impl fmt::Display for DegreeMatrix {
    /// `degmatrix r c: 1 0 / 2 1 / 2 1`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "degmatrix {} {}:", self.nrows(), self.ncols())?;
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, " /")?;
            }
            for u in row {
                write!(f, " {u}")?;
            }
        }
        Ok(())
    }
}

/// Result of [`normalize_degree_matrix`]: output row `k` is input row
/// `row_perm[k]`, likewise for columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized {
    pub matrix: DegreeMatrix,
    pub row_perm: Vec<usize>,
    pub col_perm: Vec<usize>,
}

/// Stable-sort columns by decreasing degree and rows by increasing degree.
pub fn normalize_degree_matrix(d: &DegreeMatrix) -> Result<Normalized> {
    let d = DegreeMatrix::new(d.entries.clone())?;
    let mut col_perm: Vec<usize> = (0..d.ncols()).collect();
    col_perm.sort_by_key(|&j| std::cmp::Reverse(d.entries[0][j]));
    let mut row_perm: Vec<usize> = (0..d.nrows()).collect();
    row_perm.sort_by_key(|&i| d.entries[i][0]);
    let matrix = d.permute(&row_perm, &col_perm);
    debug_assert!(matrix.is_normalized());
    Ok(Normalized {
        matrix,
        row_perm,
        col_perm,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::MonomialOrder;
    use proptest::prelude::*;

    pub(crate) fn example_matrix() -> HomogeneousMatrix {
        let r = Ring::new(31013, 2).unwrap();
        let x = r.var(0);
        let y = r.var(1);
        HomogeneousMatrix::new(
            r,
            vec![0, 0, 1],
            vec![1, 2],
            vec![
                vec![y.clone(), r.zero()],
                vec![-&x, &y * &y],
                vec![r.zero(), -&x],
            ],
        )
        .unwrap()
    }

    #[test]
    fn linearize_example() {
        let a = example_matrix();
        let l = a.linearize();
        assert!(l.entry(1, 1).is_zero());
        assert_eq!(l.entry(0, 0), a.entry(0, 0));
        assert_eq!(l.entry(2, 1), a.entry(2, 1));
        assert_eq!(l.linearize(), l);
        let ideal = a.maximal_minors_ideal();
        let init = ideal.initial_ideal(MonomialOrder::Degrevlex);
        assert_eq!(
            init,
            crate::monomial_ideal::MonomialIdeal::from_exponents(2, &[&[2, 0], &[1, 1], &[0, 3]])
        );
        assert_eq!(l.maximal_minors_ideal().height(), 1);
    }

    #[test]
    fn normalize_example() {
        let d = DegreeMatrix::from_degrees(&[0, 0, 1], &[1, 2]);
        let n = normalize_degree_matrix(&d).unwrap();
        assert_eq!(n.matrix.rows(), &[vec![1, 0], vec![2, 1], vec![2, 1]]);
        assert_eq!(n.row_perm, vec![2, 0, 1]);
        assert_eq!(n.col_perm, vec![1, 0]);
        let ones = DegreeMatrix::new(vec![vec![1; 3]; 4]).unwrap();
        let n = normalize_degree_matrix(&ones).unwrap();
        assert_eq!(n.matrix, ones);
        assert_eq!(n.row_perm, vec![0, 1, 2, 3]);
        assert!(DegreeMatrix::new(vec![vec![1, 1], vec![1, 2]]).is_err());
    }

    #[test]
    fn determinant_and_rank() {
        let a = example_matrix();
        assert_eq!(a.minors(2).len(), 3);
        assert_eq!(a.rank(), 2);
        let r = a.ring();
        let sq = HomogeneousMatrix::new(
            r,
            vec![0, 0],
            vec![1, 1],
            vec![vec![r.var(0), r.var(1)], vec![r.var(1), r.var(0)]],
        )
        .unwrap();
        let det = sq.determinant().unwrap();
        assert_eq!(det, &(&r.var(0) * &r.var(0)) - &(&r.var(1) * &r.var(1)));
        assert!(HomogeneousMatrix::new(r, vec![0], vec![1], vec![vec![&r.var(0) * &r.var(1)]]).is_err());
        assert!(HomogeneousMatrix::new(r, vec![0], vec![0], vec![vec![r.one()]]).is_err());
        assert!(HomogeneousMatrix::with_units(r, vec![0], vec![0], vec![vec![r.one()]]).is_ok());
    }

    #[test]
    fn product_of_complex_maps_vanishes() {
        // Koszul complex on two variables
        let r = Ring::new(3, 2).unwrap();
        let d1 = HomogeneousMatrix::new(r, vec![0], vec![1, 1], vec![vec![r.var(0), r.var(1)]]).unwrap();
        let d2 = HomogeneousMatrix::new(r, vec![1, 1], vec![2], vec![vec![r.var(1)], vec![-&r.var(0)]]).unwrap();
        assert!(d1.mul(&d2).unwrap().is_zero());
    }

    fn degree_data() -> impl Strategy<Value = (Vec<i64>, Vec<i64>)> {
        (
            proptest::collection::vec(-2i64..3, 1..6),
            proptest::collection::vec(-2i64..3, 1..6),
        )
    }

    proptest! {
        #[test]
        fn normalization_is_consistent((g, f) in degree_data()) {
            let d = DegreeMatrix::from_degrees(&g, &f);
            prop_assert!(DegreeMatrix::new(d.rows().to_vec()).is_ok());
            let n = normalize_degree_matrix(&d).unwrap();
            prop_assert!(n.matrix.is_normalized());
            prop_assert_eq!(d.permute(&n.row_perm, &n.col_perm), n.matrix.clone());
            let (g2, f2) = n.matrix.degrees();
            prop_assert_eq!(DegreeMatrix::from_degrees(&g2, &f2), n.matrix);
        }
    }
}
