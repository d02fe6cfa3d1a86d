//! Graded free complexes, minimal free resolutions, linear parts and
//! acyclicity.
//!
//! A minimal resolution is computed by iterating the Gröbner engine: each
//! stage accepts a minimal generating set of the current syzygy module and
//! records the syzygies among the accepted generators, which become the
//! inputs of the next stage. No separate minimization pass is needed;
//! [`GradedFreeComplex::minimize`] exists for complexes built by other means.

use crate::betti::{BettiModule, BettiTable};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::groebner::engine::{self, FreeModule, ModuleBasis, ModuleOrder, SyzygyMode, Vector};
use crate::groebner::GradedIdeal;
use crate::matrix::HomogeneousMatrix;
use crate::monomial::MonomialOrder;
use crate::monomial_ideal::MonomialIdeal;
use crate::polynomial::{Polynomial, Ring};

/// `0 → F_L → ... → F_1 → F_0`, with `maps[k-1] = ∂_k : F_k → F_{k-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedFreeComplex {
    ring: Ring,
    module: BettiModule,
    shifts: Vec<Vec<i64>>,
    maps: Vec<HomogeneousMatrix>,
}

impl GradedFreeComplex {
    pub fn new(ring: Ring, module: BettiModule, shifts: Vec<Vec<i64>>, maps: Vec<HomogeneousMatrix>) -> Result<Self> {
        if shifts.is_empty() || maps.len() + 1 != shifts.len() {
            return Err(Error::Shape("a complex needs one more module than maps".into()));
        }
        for (k, m) in maps.iter().enumerate() {
            if m.row_degrees() != shifts[k].as_slice() || m.col_degrees() != shifts[k + 1].as_slice() {
                return Err(Error::Shape(format!("differential {} does not match the shifts", k + 1)));
            }
            if m.ring() != ring {
                return Err(Error::FieldMismatch(m.ring().characteristic(), ring.characteristic()));
            }
        }
        Ok(Self {
            ring,
            module,
            shifts,
            maps,
        })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    /// What the complex resolves: `S/I` (with `F_0 = S`) or `I`.
    pub fn module(&self) -> BettiModule {
        self.module
    }

    /// Index of the last nonzero module.
    pub fn length(&self) -> usize {
        self.shifts.len() - 1
    }

    pub fn rank(&self, k: usize) -> usize {
        self.shifts.get(k).map_or(0, |s| s.len())
    }

    pub fn shifts(&self, k: usize) -> &[i64] {
        self.shifts.get(k).map_or(&[], |s| s.as_slice())
    }

    /// `∂_k` for `1 ≤ k ≤ length`.
    pub fn differential(&self, k: usize) -> &HomogeneousMatrix {
        &self.maps[k - 1]
    }

    pub fn differentials(&self) -> &[HomogeneousMatrix] {
        &self.maps
    }

    /// `∂_k ∘ ∂_{k+1} = 0` for every `k`.
    pub fn is_complex(&self) -> bool {
        self.maps
            .windows(2)
            .all(|w| w[0].mul(&w[1]).map(|p| p.is_zero()).unwrap_or(false))
    }

    /// No differential has a nonzero scalar entry.
    pub fn is_minimal(&self) -> bool {
        self.maps.iter().all(|m| !m.has_unit_entry())
    }

    pub fn betti_table(&self) -> Result<BettiTable> {
        if let Some(k) = self.maps.iter().position(|m| m.has_unit_entry()) {
            return Err(Error::NotMinimal(k + 1));
        }
        let mut t = BettiTable::new(self.module);
        for (i, s) in self.shifts.iter().enumerate() {
            for &j in s {
                t.add(i, j, 1);
            }
        }
        Ok(t)
    }

    /// `max(j - i)` over the Betti table of the resolved module.
    pub fn regularity(&self) -> Result<i64> {
        self.betti_table()?.regularity().ok_or(Error::ZeroIdeal)
    }

    /// Regularity of the ideal `I`, one more than that of `S/I`.
    pub fn ideal_regularity(&self) -> Result<i64> {
        self.betti_table()?.to_ideal().regularity().ok_or(Error::ZeroIdeal)
    }

    /// The resolution of `I` inside a resolution of `S/I`: drop `F_0`.
    pub fn ideal_part(&self) -> Self {
        match self.module {
            BettiModule::Ideal => self.clone(),
            BettiModule::Quotient => Self {
                ring: self.ring,
                module: BettiModule::Ideal,
                shifts: self.shifts[1..].to_vec(),
                maps: self.maps[1..].to_vec(),
            },
        }
    }

    /// Zero every differential entry of degree at least two.
    pub fn linear_part(&self) -> Self {
        Self {
            ring: self.ring,
            module: self.module,
            shifts: self.shifts.clone(),
            maps: self.maps.iter().map(|m| m.linearize()).collect(),
        }
    }

    fn free_module(&self, k: usize) -> FreeModule {
        FreeModule::new(self.ring, self.shifts[k].clone())
    }

    fn columns(&self, k: usize, ord: &ModuleOrder) -> Vec<Vector> {
        let m = &self.maps[k - 1];
        (0..m.ncols())
            .map(|j| {
                let col: Vec<Polynomial> = (0..m.nrows()).map(|i| m.entry(i, j).clone()).collect();
                Vector::from_components(&col, ord)
            })
            .collect()
    }

    /// Generators of `ker ∂_k ⊆ F_k`.
    pub fn kernel(&self, k: usize, budget: &Budget) -> Result<Vec<Vector>> {
        let order = MonomialOrder::Degrevlex;
        let ord = ModuleOrder::plain(order);
        let cols = self.columns(k, &ord);
        let mut out = Vec::new();
        let mut nonzero = Vec::new();
        let mut inputs = Vec::new();
        for (j, c) in cols.into_iter().enumerate() {
            if c.is_zero() {
                let e = Polynomial::monomial(self.ring, 1, crate::monomial::Monomial::one(self.ring.nvars));
                out.push(Vector::from_polynomial(&e, j as u32, &ord));
            } else {
                nonzero.push(j as u32);
                inputs.push(c);
            }
        }
        if !inputs.is_empty() {
            let res = engine::compute(&self.free_module(k - 1), order, &inputs, SyzygyMode::All, budget)?;
            for s in res.syzygies {
                let mut v = Vector {
                    terms: s.terms.iter().map(|&(c, m, comp)| (c, m, nonzero[comp as usize])).collect(),
                };
                v.sort(&ord);
                out.push(v);
            }
        }
        Ok(out)
    }

    /// `H_k = 0` for every `k ≥ 1`, decided by module membership of kernel
    /// generators in the image of the next differential.
    pub fn is_acyclic(&self, budget: &Budget) -> Result<bool> {
        Ok(self.first_homology(budget)?.is_none())
    }

    /// Least `k ≥ 1` with `H_k ≠ 0`.
    pub fn first_homology(&self, budget: &Budget) -> Result<Option<usize>> {
        let order = MonomialOrder::Degrevlex;
        for k in 1..=self.length() {
            let ker = self.kernel(k, budget)?;
            if ker.is_empty() {
                continue;
            }
            if k == self.length() {
                return Ok(Some(k));
            }
            let ord = ModuleOrder::plain(order);
            let image = self.columns(k + 1, &ord);
            let mb = ModuleBasis::build(&self.free_module(k), order, &image, budget)?;
            for v in &ker {
                if !mb.contains(v, budget)? {
                    return Ok(Some(k));
                }
            }
        }
        Ok(None)
    }

    /// Buchsbaum–Eisenbud: for `k ≥ 1`, `rank ∂_k + rank ∂_{k+1} = rank F_k`
    /// and `height I_{r_k}(∂_k) ≥ k`. Matrix ranks come from minor searches,
    /// so this is only practical for small complexes.
    pub fn is_acyclic_buchsbaum_eisenbud(&self, budget: &Budget) -> Result<bool> {
        let n = self.ring.nvars;
        if self.length() > n {
            return Err(Error::InvalidArgument(format!(
                "complex of length {} over {n} variables",
                self.length()
            )));
        }
        let ranks: Vec<usize> = self.maps.iter().map(|m| m.rank()).collect();
        for k in 1..=self.length() {
            let next = ranks.get(k).copied().unwrap_or(0);
            if ranks[k - 1] + next != self.rank(k) {
                return Ok(false);
            }
            let r = ranks[k - 1];
            if r == 0 {
                continue;
            }
            let minors = self.maps[k - 1].minors_ideal(r);
            if minors.generators().iter().any(|g| g.degree() == Some(0)) {
                continue;
            }
            if minors.height_with_budget(budget)? < k {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Cancel unit entries until the complex is minimal. Pivots are chosen
    /// at the lexicographically smallest `(differential, row, column)`.
    pub fn minimize(&self) -> Self {
        let mut c = self.clone();
        'outer: loop {
            for k in 1..=c.length() {
                let m = &c.maps[k - 1];
                for r in 0..m.nrows() {
                    for col in 0..m.ncols() {
                        if !m.entry(r, col).is_zero() && m.formal_degree(r, col) == 0 {
                            c = c.cancel(k, r, col);
                            continue 'outer;
                        }
                    }
                }
            }
            break;
        }
        while c.shifts.len() > 1 && c.shifts.last().unwrap().is_empty() {
            c.shifts.pop();
            c.maps.pop();
        }
        c
    }

    /// Split off `0 → S e_col → S e_row → 0` at the unit entry `(row, col)` of `∂_k`.
    fn cancel(&self, k: usize, row: usize, col: usize) -> Self {
        let ring = self.ring;
        let kf = ring.field;
        let a = &self.maps[k - 1];
        let unit = a.entry(row, col).leading_coefficient().unwrap();
        let inv = kf.inv(unit);
        let keep_rows: Vec<usize> = (0..a.nrows()).filter(|&i| i != row).collect();
        let keep_cols: Vec<usize> = (0..a.ncols()).filter(|&j| j != col).collect();
        let mut reduced = a.permute(&keep_rows, &keep_cols);
        for (ni, &i) in keep_rows.iter().enumerate() {
            let beta = a.entry(i, col);
            if beta.is_zero() {
                continue;
            }
            for (nj, &j) in keep_cols.iter().enumerate() {
                let alpha = a.entry(row, j);
                if alpha.is_zero() {
                    continue;
                }
                let corr = (beta * alpha).scale(inv);
                let v = reduced.entry(ni, nj) - &corr;
                reduced.set(ni, nj, v);
            }
        }
        let mut maps = self.maps.clone();
        maps[k - 1] = reduced;
        if k >= 2 {
            let prev = &self.maps[k - 2];
            let rows: Vec<usize> = (0..prev.nrows()).collect();
            maps[k - 2] = prev.permute(&rows, &keep_rows);
        }
        if k < self.maps.len() {
            let next = &self.maps[k];
            let cols: Vec<usize> = (0..next.ncols()).collect();
            maps[k] = next.permute(&keep_cols, &cols);
        }
        let mut shifts = self.shifts.clone();
        shifts[k] = keep_cols.iter().map(|&j| self.shifts[k][j]).collect();
        shifts[k - 1] = keep_rows.iter().map(|&i| self.shifts[k - 1][i]).collect();
        Self {
            ring,
            module: self.module,
            shifts,
            maps,
        }
    }

    /// Homological degrees and shifts as a compact string, e.g. `0: [0]; 1: [2, 2]`.
    pub fn shape(&self) -> String {
        self.shifts
            .iter()
            .enumerate()
            .map(|(k, s)| format!("{k}: {s:?}"))
            .collect::<Vec<_>>()
            .join("; ")
    }
}

fn matrix_from_vectors(module_shifts: &[i64], ring: Ring, cols: &[Vector], col_shifts: Vec<i64>) -> HomogeneousMatrix {
    let mut m = HomogeneousMatrix::zero(ring, module_shifts.to_vec(), col_shifts);
    for (j, v) in cols.iter().enumerate() {
        let parts = v.components(ring, module_shifts.len(), MonomialOrder::Degrevlex);
        for (i, p) in parts.into_iter().enumerate() {
            m.set(i, j, p);
        }
    }
    m
}

/// Minimal graded free resolution of `S/I`.
pub fn minimal_resolution(ideal: &GradedIdeal, order: MonomialOrder) -> Result<GradedFreeComplex> {
    minimal_resolution_with_budget(ideal, order, &Budget::unlimited())
}

pub fn minimal_resolution_with_budget(ideal: &GradedIdeal, order: MonomialOrder, budget: &Budget) -> Result<GradedFreeComplex> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let ring = ideal.ring();
    let mut shifts = vec![vec![0i64]];
    let mut maps = Vec::new();
    let mut inputs = ideal.vectors(order);
    loop {
        let module = FreeModule::new(ring, shifts.last().unwrap().clone());
        let out = engine::compute(&module, order, &inputs, SyzygyMode::Minimal, budget)?;
        if out.minimal.is_empty() {
            break;
        }
        let accepted: Vec<Vector> = out
            .minimal
            .iter()
            .map(|&i| {
                let mut v = inputs[i].clone();
                v.sort(&ModuleOrder::plain(order));
                v
            })
            .collect();
        let degs: Vec<i64> = accepted.iter().map(|v| v.degree(&module.shifts).unwrap()).collect();
        maps.push(matrix_from_vectors(&module.shifts, ring, &accepted, degs.clone()));
        shifts.push(degs);
        if shifts.len() > ring.nvars + 2 {
            return Err(Error::InvalidArgument("resolution longer than the number of variables".into()));
        }
        inputs = out.syzygies;
        if inputs.is_empty() {
            break;
        }
    }
    GradedFreeComplex::new(ring, BettiModule::Quotient, shifts, maps)
}

/// Graded Betti table of `S/I`.
pub fn betti_numbers(ideal: &GradedIdeal) -> Result<BettiTable> {
    minimal_resolution(ideal, MonomialOrder::Degrevlex)?.betti_table()
}

/// Taylor resolution of a monomial ideal: basis indexed by subsets of the
/// generators, generally not minimal.
pub fn taylor_resolution(ring: Ring, ideal: &MonomialIdeal) -> Result<GradedFreeComplex> {
    let gens = ideal.generators();
    let r = gens.len();
    if r == 0 {
        return Err(Error::ZeroIdeal);
    }
    if r > 12 {
        return Err(Error::InvalidArgument("Taylor resolution limited to 12 generators".into()));
    }
    let lcm_of = |mask: u32| {
        (0..r)
            .filter(|&i| mask & (1 << i) != 0)
            .fold(crate::monomial::Monomial::one(ring.nvars), |acc, i| acc.lcm(&gens[i]))
    };
    let mut bases: Vec<Vec<u32>> = vec![Vec::new(); r + 1];
    for mask in 0u32..(1 << r) {
        bases[mask.count_ones() as usize].push(mask);
    }
    let shifts: Vec<Vec<i64>> = bases
        .iter()
        .map(|b| b.iter().map(|&m| lcm_of(m).degree() as i64).collect())
        .collect();
    let mut maps = Vec::new();
    for k in 1..=r {
        let mut m = HomogeneousMatrix::zero(ring, shifts[k - 1].clone(), shifts[k].clone());
        for (j, &sigma) in bases[k].iter().enumerate() {
            let top = lcm_of(sigma);
            let mut pos = 0;
            for i in 0..r {
                if sigma & (1 << i) == 0 {
                    continue;
                }
                let tau = sigma & !(1 << i);
                let row = bases[k - 1].iter().position(|&b| b == tau).unwrap();
                let q = lcm_of(tau).quotient_of(&top).unwrap();
                let coef = if pos % 2 == 0 { 1 } else { ring.characteristic() - 1 };
                m.set(row, j, Polynomial::monomial(ring, coef, q));
                pos += 1;
            }
        }
        maps.push(m);
    }
    GradedFreeComplex::new(ring, BettiModule::Quotient, shifts, maps)
}

#[cfg(test)]
mod tests;
