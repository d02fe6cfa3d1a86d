//! Standard determinantal ideals: maximal minors of an `(m+c-1) × m`
//! homogeneous matrix whose ideal has the expected height `c`.

use serde::Serialize;

use crate::betti::{BettiModule, BettiTable};
use crate::criteria::{CwlVerdict, Method};
use crate::error::{Error, Result};
use crate::matrix::{normalize_degree_matrix, subsets, DegreeMatrix, HomogeneousMatrix};
use crate::monomial::{monomials_of_degree, Monomial};
use crate::monomial_ideal::MonomialIdeal;

use super::check_height;

/// Normalized degree data, optionally with the matrix it came from
/// (rows and columns permuted accordingly).
#[derive(Clone, Debug, PartialEq)]
pub struct DeterminantalInput {
    degrees: DegreeMatrix,
    matrix: Option<HomogeneousMatrix>,
}

impl DeterminantalInput {
    /// Degree data must already be normalized.
    pub fn from_degrees(degrees: DegreeMatrix) -> Result<Self> {
        if degrees.nrows() < degrees.ncols() {
            return Err(Error::Shape(format!(
                "need at least as many rows as columns, got {}x{}",
                degrees.nrows(),
                degrees.ncols()
            )));
        }
        if !degrees.is_normalized() {
            return Err(Error::NotNormalized(degrees.to_string()));
        }
        Ok(Self { degrees, matrix: None })
    }

    /// Normalizes by permuting rows and columns.
    pub fn from_matrix(matrix: &HomogeneousMatrix) -> Result<Self> {
        let n = normalize_degree_matrix(&matrix.degree_matrix())?;
        let permuted = matrix.permute(&n.row_perm, &n.col_perm);
        let mut input = Self::from_degrees(n.matrix)?;
        input.matrix = Some(permuted);
        Ok(input)
    }

    pub fn degrees(&self) -> &DegreeMatrix {
        &self.degrees
    }

    pub fn matrix(&self) -> Option<&HomogeneousMatrix> {
        self.matrix.as_ref()
    }

    /// Number of columns.
    pub fn m(&self) -> usize {
        self.degrees.ncols()
    }

    /// Expected height `rows - columns + 1`.
    pub fn c(&self) -> usize {
        self.degrees.nrows() - self.degrees.ncols() + 1
    }

    /// Degree of the bottom-right entry, the largest entry degree.
    pub fn e(&self) -> i64 {
        self.degrees.get(self.degrees.nrows() - 1, self.m() - 1)
    }
}

/// Decide from the normalized degree matrix. With a concrete matrix the
/// height hypothesis is verified; otherwise it is assumed.
pub fn classify_determinantal(input: &DeterminantalInput) -> Result<CwlVerdict> {
    let d = &input.degrees;
    let (m, c) = (input.m(), input.c());
    if let Some(i) = (0..m).find(|&i| d.get(i, i) < 1) {
        return Err(Error::DegreeData(format!(
            "diagonal entry ({}, {}) has degree {} < 1, so the minors cannot have the expected height",
            i + 1,
            i + 1,
            d.get(i, i)
        )));
    }
    let characteristic = match &input.matrix {
        Some(a) => {
            check_height(&a.maximal_minors_ideal(), c)?;
            Some(a.ring().characteristic())
        }
        None => None,
    };
    let (yes, why) = match c {
        1 => (true, "height one".to_string()),
        2 => {
            let bad = (0..m).find(|&i| d.get(i, i) != 1);
            match bad {
                None => (true, "height two, all diagonal entries linear".into()),
                Some(i) => (false, format!("height two, diagonal entry {} has degree {}", i + 1, d.get(i, i))),
            }
        }
        _ => {
            let rows = d.nrows();
            let bad = (0..rows - 1).find(|&i| d.rows()[i].iter().any(|&u| u != 1));
            match bad {
                None => (true, format!("height {c}, every row but the last is linear")),
                Some(i) => (false, format!("height {c}, row {} is not linear", i + 1)),
            }
        }
    };
    let reason = if input.matrix.is_some() {
        why
    } else {
        format!("{why} (degree data only, height assumed)")
    };
    Ok(CwlVerdict::classifier(Method::Determinantal, yes, reason, characteristic))
}

/// Componentwise linear iff the maximal minors of `A^lin` have height at
/// least `c - 1`. The height of `I_m(A)` must be exactly `c`.
pub fn test_cwl_determinantal(a: &HomogeneousMatrix) -> Result<CwlVerdict> {
    let (rows, m) = (a.nrows(), a.ncols());
    if rows < m || m == 0 {
        return Err(Error::Shape(format!("need at least as many rows as columns, got {rows}x{m}")));
    }
    let c = rows - m + 1;
    check_height(&a.maximal_minors_ideal(), c)?;
    let h = a.linearize().maximal_minors_ideal().height();
    let yes = h + 1 >= c;
    let reason = format!("maximal minors of the linearization have height {h}, expected height {c}");
    Ok(CwlVerdict::classifier(
        Method::Determinantal,
        yes,
        reason,
        Some(a.ring().characteristic()),
    ))
}

/// `(x_1, ..., x_{c-1})^m + x_c^e (x_1, ..., x_c)^(m-1)` in `c` variables,
/// for componentwise linear input of height at least three. Its
/// Eliahou–Kervaire table equals [`eagon_northcott_table`]. For `e = 1` or
/// `m = 1` it is `(x_1, ..., x_c)^(m-1) (x_1, ..., x_{c-1}, x_c^e)`.
pub fn determinantal_companion(input: &DeterminantalInput) -> Result<MonomialIdeal> {
    let (m, c, e) = (input.m(), input.c(), input.e());
    if c < 3 {
        return Err(Error::InvalidArgument(format!("companion needs height at least 3, got {c}")));
    }
    if classify_determinantal(input)?.decision != crate::criteria::Decision::Yes {
        return Err(Error::InvalidArgument("degree data is not componentwise linear".into()));
    }
    let low = MonomialIdeal::power_of_first_variables(c, c - 1, m as u32);
    let mut xe = vec![0u32; c];
    xe[c - 1] = e as u32;
    let high = MonomialIdeal::power_of_first_variables(c, c, (m - 1) as u32).mul_monomial(&Monomial::from_slice(&xe));
    Ok(low.sum(&high))
}

/// Graded Betti numbers of `S/I_m(A)` read off the Eagon–Northcott complex,
/// which resolves the maximal minors whenever they have the expected height.
/// The generator indexed by a row set `R` (`|R| = m + i`) and a degree-`i`
/// monomial `Π y_j^{a_j}` in the dual column basis sits in degree
/// `Σ_j f_j (1 + a_j) - Σ_{r ∈ R} g_r`.
pub fn eagon_northcott_table(degrees: &DegreeMatrix) -> Result<BettiTable> {
    let (rows, m) = (degrees.nrows(), degrees.ncols());
    if rows < m {
        return Err(Error::Shape(format!("need at least as many rows as columns, got {rows}x{m}")));
    }
    let (g, f) = degrees.degrees();
    let fsum: i64 = f.iter().sum();
    let mut t = BettiTable::new(BettiModule::Quotient);
    t.add(0, 0, 1);
    for i in 0..=rows - m {
        let col_shifts: Vec<i64> = monomials_of_degree(m, i as u32)
            .iter()
            .map(|a| (0..m).map(|j| a.exponent(j) as i64 * f[j]).sum())
            .collect();
        for r in subsets(rows, m + i) {
            let base = fsum - r.iter().map(|&k| g[k]).sum::<i64>();
            for &cs in &col_shifts {
                t.add(i + 1, base + cs, 1);
            }
        }
    }
    Ok(t)
}

/// Which degeneracies of the linearized minors are forced by the degrees
/// of the diagonal and subdiagonal entries, and whether they occur.
/// Positions refer to the normalized matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegeneracyReport {
    /// First diagonal position (1-based) whose entry has degree at least two.
    pub high_diagonal: Option<usize>,
    /// First column (1-based) whose subdiagonal entry has degree at least two.
    pub high_subdiagonal: Option<usize>,
    pub minors_height: usize,
    pub lin_minors_vanish: bool,
    pub lin_minors_height: usize,
    /// Square `(m+1) × m` shape, linear diagonal, a high subdiagonal entry
    /// and minors of height two: some linearized minor must survive.
    pub expects_nonvanishing_lin_minor: bool,
}

impl DegeneracyReport {
    /// Every forced conclusion holds.
    pub fn consistent(&self) -> bool {
        (self.high_diagonal.is_none() || self.lin_minors_vanish)
            && (self.high_subdiagonal.is_none() || self.lin_minors_height <= 1)
            && (!self.expects_nonvanishing_lin_minor || !self.lin_minors_vanish)
    }
}

pub fn minor_degeneracy_checks(a: &HomogeneousMatrix) -> Result<DegeneracyReport> {
    let (rows, m) = (a.nrows(), a.ncols());
    if rows <= m || m == 0 {
        return Err(Error::Shape(format!("need more rows than columns, got {rows}x{m}")));
    }
    let n = normalize_degree_matrix(&a.degree_matrix())?;
    let a = &a.permute(&n.row_perm, &n.col_perm);
    let high_diagonal = (0..m).find(|&i| a.formal_degree(i, i) >= 2).map(|i| i + 1);
    let high_subdiagonal = (0..m).find(|&i| a.formal_degree(i + 1, i) >= 2).map(|i| i + 1);
    let minors_height = a.maximal_minors_ideal().height();
    let lin = a.linearize().maximal_minors_ideal();
    let expects = rows == m + 1
        && (0..m).all(|i| a.formal_degree(i, i) == 1)
        && high_subdiagonal.is_some()
        && minors_height == 2;
    Ok(DegeneracyReport {
        high_diagonal,
        high_subdiagonal,
        minors_height,
        lin_minors_vanish: lin.is_zero(),
        lin_minors_height: lin.height(),
        expects_nonvanishing_lin_minor: expects,
    })
}
