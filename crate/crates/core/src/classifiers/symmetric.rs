//! Submaximal minors of a symmetric `m × m` matrix with ideal of height
//! three. Degree data is `deg a_ij = d_i + d_j` for half-integers `d_i`,
//! stored doubled.

use serde::Serialize;

use crate::betti::{BettiModule, BettiTable};
use crate::criteria::{CwlVerdict, Method};
use crate::error::{Error, Result};
use crate::matrix::{DegreeMatrix, HomogeneousMatrix};
use crate::monomial::{binomial, Monomial};
use crate::monomial_ideal::MonomialIdeal;

use super::check_height;

/// Sorted doubled degrees `2d_1 ≤ ... ≤ 2d_m`, optionally with a matrix
/// whose rows and columns are permuted to match.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricInput {
    doubled: Vec<i64>,
    matrix: Option<HomogeneousMatrix>,
}

impl SymmetricInput {
    pub fn new(mut doubled: Vec<i64>) -> Result<Self> {
        if doubled.len() < 2 {
            return Err(Error::Shape(format!("need m >= 2, got {}", doubled.len())));
        }
        DegreeMatrix::symmetric_from_doubled(&doubled)?;
        doubled.sort();
        Ok(Self { doubled, matrix: None })
    }

    pub fn from_matrix(a: &HomogeneousMatrix) -> Result<Self> {
        let m = a.nrows();
        if !a.is_symmetric() {
            return Err(Error::Shape("matrix is not symmetric".into()));
        }
        let doubled: Vec<i64> = (0..m).map(|i| a.formal_degree(i, i)).collect();
        for i in 0..m {
            for j in 0..m {
                if 2 * a.formal_degree(i, j) != doubled[i] + doubled[j] {
                    return Err(Error::DegreeData(format!(
                        "entry ({}, {}) does not have degree (d_{} + d_{})",
                        i + 1,
                        j + 1,
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        let mut perm: Vec<usize> = (0..m).collect();
        perm.sort_by_key(|&i| doubled[i]);
        let mut input = Self::new(doubled)?;
        input.matrix = Some(a.permute(&perm, &perm));
        Ok(input)
    }

    pub fn m(&self) -> usize {
        self.doubled.len()
    }

    pub fn doubled(&self) -> &[i64] {
        &self.doubled
    }

    pub fn matrix(&self) -> Option<&HomogeneousMatrix> {
        self.matrix.as_ref()
    }

    /// Largest `j` (1-based) with `d_j = d_1`.
    pub fn s(&self) -> usize {
        self.doubled.iter().filter(|&&d| d == self.doubled[0]).count()
    }

    /// Least `j` (1-based) with `d_j = d_m`.
    pub fn t(&self) -> usize {
        let last = self.doubled[self.m() - 1];
        self.doubled.iter().position(|&d| d == last).unwrap() + 1
    }

    /// `2 d_m`, the degree of the bottom-right entry.
    pub fn e(&self) -> i64 {
        self.doubled[self.m() - 1]
    }

    /// `D = 2(d_1 + ... + d_m)`.
    pub fn big_d(&self) -> i64 {
        self.doubled.iter().sum()
    }

    pub fn degree_matrix(&self) -> DegreeMatrix {
        DegreeMatrix::symmetric_from_doubled(&self.doubled).expect("validated on construction")
    }
}

/// Decide from the degree data. With a concrete matrix the height three
/// hypothesis is verified; otherwise it is assumed.
pub fn classify_symmetric(input: &SymmetricInput) -> Result<CwlVerdict> {
    let d = &input.doubled;
    let m = input.m();
    let characteristic = match &input.matrix {
        Some(a) => {
            check_height(&a.minors_ideal(m - 1), 3)?;
            Some(a.ring().characteristic())
        }
        None => None,
    };
    let all_linear = d.iter().all(|&x| x == 1);
    let half = (m - 1) / 2;
    let block = m % 2 == 1
        && d[0] <= 0
        && d[..half].iter().all(|&x| x == d[0])
        && d[half..].iter().all(|&x| x == d[m - 1])
        && d[0] + d[m - 1] == 2;
    let why = if all_linear {
        "all entries linear".to_string()
    } else if block {
        format!("m = {m} odd with blocks of sizes {half} and {}, off-diagonal block linear", half + 1)
    } else {
        format!("doubled degrees {d:?} fit neither pattern")
    };
    let reason = if input.matrix.is_some() {
        why
    } else {
        format!("{why} (degree data only, height assumed)")
    };
    Ok(CwlVerdict::classifier(Method::Symmetric, all_linear || block, reason, characteristic))
}

/// Componentwise linear iff the submaximal minors of `A^lin` have height at
/// least two. The submaximal minors of `A` must have height three.
pub fn test_cwl_symmetric(a: &HomogeneousMatrix) -> Result<CwlVerdict> {
    let m = a.nrows();
    if m < 2 || !a.is_symmetric() {
        return Err(Error::Shape("need a symmetric matrix of size at least 2".into()));
    }
    check_height(&a.minors_ideal(m - 1), 3)?;
    let h = a.linearize().minors_ideal(m - 1).height();
    let reason = format!("submaximal minors of the linearization have height {h}");
    Ok(CwlVerdict::classifier(
        Method::Symmetric,
        h >= 2,
        reason,
        Some(a.ring().characteristic()),
    ))
}

/// Graded Betti numbers of `S/I` from Józefiak's resolution, for any
/// degree data.
pub fn jozefiak_table(input: &SymmetricInput) -> BettiTable {
    let d = &input.doubled;
    let m = d.len();
    let big = input.big_d();
    let mut t = BettiTable::new(BettiModule::Quotient);
    t.add(0, 0, 1);
    for i in 0..m {
        for j in i..m {
            t.add(1, big - (d[i] + d[j]) / 2, 1);
        }
    }
    let mut removed = false;
    for i in 0..m {
        for j in 0..m {
            // the quotient by S(-D) removes one diagonal copy
            if i == j && !removed {
                removed = true;
                continue;
            }
            t.add(2, big + (d[i] - d[j]) / 2, 1);
        }
    }
    for i in 0..m {
        for j in i + 1..m {
            t.add(3, big + (d[i] + d[j]) / 2, 1);
        }
    }
    t
}

/// The table for componentwise linear data with `2d_m = e`, from the
/// graded ranks `m` and `e` determine.
pub fn jozefiak_betti(m: usize, e: i64) -> Result<BettiTable> {
    if m < 3 || m % 2 == 0 || e < 1 {
        return Err(Error::InvalidArgument(format!("need odd m >= 3 and e >= 1, got m={m}, e={e}")));
    }
    let s = ((m - 1) / 2) as i64;
    let m = m as i64;
    let c2 = |n: i64| binomial(n, 2) as i64;
    let mut t = BettiTable::new(BettiModule::Quotient);
    t.add(0, 0, 1);
    let rows: [[(i64, i64); 3]; 3] = [
        [(c2(s + 2), m - 1), (s * (s + 1), m - 2 + e), (c2(s + 1), m - 3 + 2 * e)],
        [(s * (s + 1), m), (2 * s * (s + 1), m - 1 + e), (s * (s + 1), m - 2 + 2 * e)],
        [(c2(s), m + 1), (s * (s + 1), m + e), (c2(s + 1), m - 1 + 2 * e)],
    ];
    for (k, row) in rows.iter().enumerate() {
        for &(rank, deg) in row {
            if rank > 0 {
                t.add(k + 1, deg, rank as u64);
            }
        }
    }
    Ok(t)
}

/// The unique `(t, r)` with `t ≥ -1`, `0 ≤ r ≤ 2s-2-t` and
/// `r + Σ_{i=2s-t}^{2s} i = C(s, 2)`.
pub fn compute_tr(s: u64) -> (i64, i64) {
    let s = s as i64;
    let target = binomial(s, 2) as i64;
    let (mut t, mut sum) = (-1i64, 0i64);
    loop {
        let next = 2 * s - (t + 1);
        if next < 0 || sum + next > target {
            break;
        }
        t += 1;
        sum += next;
    }
    (t, target - sum)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum CompanionCheck {
    /// Strongly stable with the expected graded Betti numbers.
    Verified,
    NotStronglyStable,
    Mismatch { expected: BettiTable, found: BettiTable },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetricCompanion {
    pub m: usize,
    pub e: i64,
    pub t: i64,
    pub r: i64,
    #[serde(serialize_with = "as_string")]
    pub ideal: MonomialIdeal,
    /// Summands (1-based) left out because an exponent is negative.
    pub dropped_terms: Vec<usize>,
    pub check: CompanionCheck,
}

fn as_string<S: serde::Serializer>(m: &MonomialIdeal, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(m)
}

/// `(x1, x2)^a (x1, x2, x3)^b x1^p x2^q x3^u` in three variables, or `None`
/// when an exponent is negative.
fn term(a: i64, b: i64, p: i64, q: i64, u: i64) -> Option<MonomialIdeal> {
    if [a, b, p, q, u].iter().any(|&x| x < 0) {
        return None;
    }
    let two = MonomialIdeal::power_of_first_variables(3, 2, a as u32);
    let three = MonomialIdeal::power_of_first_variables(3, 3, b as u32);
    let mono = Monomial::from_slice(&[p as u32, q as u32, u as u32]);
    Some(two.product(&three).mul_monomial(&mono))
}

/// Strongly stable candidate sharing the Betti numbers of a componentwise
/// linear symmetric ideal with `2d_m = e`, checked against
/// [`jozefiak_betti`]. For `e ≥ 2` the five-summand formula is used and
/// summands with a negative exponent are dropped; `(x1, x2)^(r-1)` with
/// `r = 0` is zero by convention and falls under the same rule.
pub fn symmetric_companion(m: usize, e: i64) -> Result<SymmetricCompanion> {
    let expected = jozefiak_betti(m, e)?;
    let s = ((m - 1) / 2) as i64;
    let (t, r) = compute_tr(s as u64);
    let mut dropped = Vec::new();
    let ideal = if e == 1 {
        MonomialIdeal::power_of_first_variables(3, 3, (m - 1) as u32)
    } else {
        let terms = [
            term(2 * s - 1 - t, t + 1, 0, 0, 0),
            term(r - 1, 0, 2 * s - 1 - t - r, 0, t + 2),
            term(2 * s - 2 - t - r, 0, 0, r, e + t - 1),
            term(s, s - 3 - t, 0, 0, e + t - 2),
            term(0, s - 1, 0, 0, e + s - 1),
        ];
        let mut acc = MonomialIdeal::zero(3);
        for (k, tm) in terms.into_iter().enumerate() {
            match tm {
                Some(j) => acc = acc.sum(&j),
                None => dropped.push(k + 1),
            }
        }
        acc
    };
    let check = if ideal.is_zero() || !ideal.is_strongly_stable() {
        CompanionCheck::NotStronglyStable
    } else {
        let found = ideal.ek_betti()?;
        if found == expected {
            CompanionCheck::Verified
        } else {
            CompanionCheck::Mismatch { expected, found }
        }
    };
    Ok(SymmetricCompanion {
        m,
        e,
        t,
        r,
        ideal,
        dropped_terms: dropped,
        check,
    })
}

#[cfg(test)]
mod tests;
