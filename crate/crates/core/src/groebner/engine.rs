//! Homogeneous Buchberger over graded free modules.
//!
//! One routine serves ideals (rank-one modules), minimal generator
//! extraction and syzygy computation. Elements are processed degree by
//! degree with the normal selection strategy and Gebauer–Möller pair
//! elimination. When syzygies are tracked, every accepted input generator
//! `w_j` enters as `[w_j | e_j]` in `F ⊕ G`, where terms of `F` dominate
//! terms of `G`; S-pairs whose `F`-part reduces to zero leave their
//! `G`-part behind as a syzygy of the accepted generators.

use std::cmp::Ordering;

use crate::budget::Budget;
use crate::error::Result;
use crate::field::PrimeField;
use crate::monomial::{Monomial, MonomialOrder};
use crate::polynomial::{Polynomial, Ring};

/// A graded free module `⊕ S(-shift_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModule {
    pub ring: Ring,
    pub shifts: Vec<i64>,
}

impl FreeModule {
    pub fn new(ring: Ring, shifts: Vec<i64>) -> Self {
        Self { ring, shifts }
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }
}

/// Term order on `(monomial, component)`: components at or above `tag_start`
/// form the tag block and sit below every ordinary term; within a block the
/// monomial is compared first, then the lower component index wins.
#[derive(Clone, Copy, Debug)]
pub struct ModuleOrder {
    pub order: MonomialOrder,
    pub tag_start: u32,
}

impl ModuleOrder {
    pub fn plain(order: MonomialOrder) -> Self {
        Self {
            order,
            tag_start: u32::MAX,
        }
    }

    #[inline]
    pub fn cmp(&self, a: &(Monomial, u32), b: &(Monomial, u32)) -> Ordering {
        let ta = a.1 >= self.tag_start;
        let tb = b.1 >= self.tag_start;
        if ta != tb {
            return if ta { Ordering::Less } else { Ordering::Greater };
        }
        match self.order.cmp(&a.0, &b.0) {
            Ordering::Equal => b.1.cmp(&a.1),
            o => o,
        }
    }
}

/// Element of a free module: `(coefficient, monomial, component)` terms,
/// strictly descending under a [`ModuleOrder`].
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Vector {
    pub terms: Vec<(u32, Monomial, u32)>,
}

impl Vector {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn from_polynomial(p: &Polynomial, comp: u32, ord: &ModuleOrder) -> Self {
        let mut v = Self {
            terms: p.terms().iter().map(|&(c, m)| (c, m, comp)).collect(),
        };
        v.sort(ord);
        v
    }

    /// Build from per-component polynomials.
    pub fn from_components(parts: &[Polynomial], ord: &ModuleOrder) -> Self {
        let mut terms = Vec::new();
        for (i, p) in parts.iter().enumerate() {
            terms.extend(p.terms().iter().map(|&(c, m)| (c, m, i as u32)));
        }
        let mut v = Self { terms };
        v.sort(ord);
        v
    }

    pub fn sort(&mut self, ord: &ModuleOrder) {
        self.terms
            .sort_by(|a, b| ord.cmp(&(b.1, b.2), &(a.1, a.2)));
    }

    pub fn lead(&self) -> Option<(u32, Monomial, u32)> {
        self.terms.first().copied()
    }

    /// Degree of the leading term in the graded module.
    pub fn degree(&self, shifts: &[i64]) -> Option<i64> {
        self.terms
            .first()
            .map(|t| t.1.degree() as i64 + shifts[t.2 as usize])
    }

    pub fn is_homogeneous(&self, shifts: &[i64]) -> bool {
        match self.degree(shifts) {
            None => true,
            Some(d) => self
                .terms
                .iter()
                .all(|t| t.1.degree() as i64 + shifts[t.2 as usize] == d),
        }
    }

    pub fn scale(&mut self, k: PrimeField, c: u32) {
        for t in self.terms.iter_mut() {
            t.0 = k.mul(t.0, c);
        }
    }

    /// `self + c * m * other` under `ord`.
    pub fn add_scaled(&self, k: PrimeField, c: u32, m: &Monomial, other: &Vector, ord: &ModuleOrder) -> Vector {
        let a = &self.terms;
        let b = &other.terms;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            let bm = b[j].1.mul(m);
            match ord.cmp(&(a[i].1, a[i].2), &(bm, b[j].2)) {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push((k.mul(b[j].0, c), bm, b[j].2));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = k.add(a[i].0, k.mul(b[j].0, c));
                    if s != 0 {
                        out.push((s, a[i].1, a[i].2));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            out.push((k.mul(t.0, c), t.1.mul(m), t.2));
        }
        Vector { terms: out }
    }

    /// Split into the ordinary part and the tag part (renumbered from zero).
    pub fn split(&self, tag_start: u32) -> (Vector, Vector) {
        let mut f = Vec::new();
        let mut g = Vec::new();
        for &(c, m, comp) in &self.terms {
            if comp >= tag_start {
                g.push((c, m, comp - tag_start));
            } else {
                f.push((c, m, comp));
            }
        }
        (Vector { terms: f }, Vector { terms: g })
    }

    /// Per-component polynomials (sorted under `order`).
    pub fn components(&self, ring: Ring, rank: usize, order: MonomialOrder) -> Vec<Polynomial> {
        let mut parts: Vec<Vec<(u32, Monomial)>> = vec![Vec::new(); rank];
        for &(c, m, comp) in &self.terms {
            parts[comp as usize].push((c, m));
        }
        parts
            .into_iter()
            .map(|t| Polynomial::canonical(ring, order, t))
            .collect()
    }
}

/// Which syzygies the engine records.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SyzygyMode {
    /// Plain Gröbner basis.
    None,
    /// Syzygies among the inputs accepted as minimal generators, indexed
    /// by acceptance order; non-minimal inputs are discarded.
    Minimal,
    /// Syzygies among all inputs, indexed by input position; a redundant
    /// input contributes the relation expressing it.
    All,
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    comp: u32,
    degree: i64,
}

/// Result of a run of the engine.
#[derive(Clone, Debug)]
pub struct EngineOutput {
    /// Basis elements (monic, leading terms outside the tag block).
    pub basis: Vec<Vector>,
    /// Indices of the inputs accepted as minimal generators, ascending in degree.
    pub minimal: Vec<usize>,
    /// Recorded syzygies, see [`SyzygyMode`].
    pub syzygies: Vec<Vector>,
    pub order: ModuleOrder,
}

pub struct Engine<'a> {
    module: &'a FreeModule,
    ord: ModuleOrder,
    field: PrimeField,
    track: bool,
    mode: SyzygyMode,
    budget: &'a Budget,
    /// shifts of ordinary components followed by shifts of tag components
    shifts: Vec<i64>,
    basis: Vec<Vector>,
    leads: Vec<(Monomial, u32)>,
    by_comp: Vec<Vec<usize>>,
    pairs: Vec<Pair>,
    syzygies: Vec<Vector>,
}

impl<'a> Engine<'a> {
    fn new(module: &'a FreeModule, order: MonomialOrder, mode: SyzygyMode, budget: &'a Budget) -> Self {
        let track = mode != SyzygyMode::None;
        let tag_start = if track {
            module.rank() as u32
        } else {
            u32::MAX
        };
        Self {
            module,
            ord: ModuleOrder { order, tag_start },
            field: module.ring.field,
            track,
            mode,
            budget,
            shifts: module.shifts.clone(),
            basis: Vec::new(),
            leads: Vec::new(),
            by_comp: vec![Vec::new(); module.rank()],
            pairs: Vec::new(),
            syzygies: Vec::new(),
        }
    }

    fn find_reducer(&self, m: &Monomial, comp: u32) -> Option<usize> {
        self.by_comp[comp as usize]
            .iter()
            .copied()
            .find(|&b| self.leads[b].0.divides(m))
    }

    /// Reduce until the leading term is irreducible or in the tag block.
    fn top_reduce(&self, mut v: Vector) -> Result<Vector> {
        let k = self.field;
        while let Some((c, m, comp)) = v.lead() {
            if comp >= self.ord.tag_start {
                break;
            }
            let Some(b) = self.find_reducer(&m, comp) else {
                break;
            };
            self.budget.tick(1 + self.basis[b].terms.len() as u64 / 16)?;
            let q = self.leads[b].0.quotient_of(&m).unwrap();
            v = v.add_scaled(k, k.neg(c), &q, &self.basis[b], &self.ord);
        }
        Ok(v)
    }

    /// Reduce every ordinary term; the tag block is carried along unreduced.
    fn full_reduce(&self, v: Vector) -> Result<Vector> {
        let k = self.field;
        let mut v = self.top_reduce(v)?;
        let mut done: Vec<(u32, Monomial, u32)> = Vec::new();
        loop {
            let Some((c, m, comp)) = v.lead() else { break };
            if comp >= self.ord.tag_start {
                break;
            }
            match self.find_reducer(&m, comp) {
                Some(b) => {
                    self.budget.tick(1 + self.basis[b].terms.len() as u64 / 16)?;
                    let q = self.leads[b].0.quotient_of(&m).unwrap();
                    v = v.add_scaled(k, k.neg(c), &q, &self.basis[b], &self.ord);
                }
                None => {
                    done.push(v.terms.remove(0));
                }
            }
        }
        done.extend(v.terms);
        Ok(Vector { terms: done })
    }

    fn spoly(&self, p: &Pair) -> Vector {
        let k = self.field;
        let (mi, _) = self.leads[p.i];
        let (mj, _) = self.leads[p.j];
        let qi = mi.quotient_of(&p.lcm).unwrap();
        let qj = mj.quotient_of(&p.lcm).unwrap();
        let a = Vector::zero().add_scaled(k, 1, &qi, &self.basis[p.i], &self.ord);
        a.add_scaled(k, k.neg(1), &qj, &self.basis[p.j], &self.ord)
    }

    fn insert(&mut self, mut v: Vector) {
        let k = self.field;
        let (c, _, _) = v.lead().expect("nonzero basis element");
        if c != 1 {
            v.scale(k, k.inv(c));
        }
        let (_, lm, lc) = v.lead().unwrap();
        let t = self.basis.len();
        // Gebauer–Möller: drop old pairs made redundant by the new lead term
        let leads = &self.leads;
        self.pairs.retain(|p| {
            if p.comp != lc || !lm.divides(&p.lcm) {
                return true;
            }
            let lit = leads[p.i].0.lcm(&lm);
            let ljt = leads[p.j].0.lcm(&lm);
            lit == p.lcm || ljt == p.lcm
        });
        let mut cands: Vec<(Monomial, usize, bool)> = Vec::new();
        for &i in &self.by_comp[lc as usize] {
            let mi = self.leads[i].0;
            cands.push((mi.lcm(&lm), i, mi.is_coprime(&lm)));
        }
        // M criterion: drop candidates whose lcm is a proper multiple of another's
        let mut keep: Vec<bool> = vec![true; cands.len()];
        for a in 0..cands.len() {
            for b in 0..cands.len() {
                if a != b
                    && cands[b].0.divides(&cands[a].0)
                    && cands[b].0 != cands[a].0
                {
                    keep[a] = false;
                    break;
                }
            }
        }
        // F criterion: one pair per lcm; with the product criterion the whole
        // lcm class goes when any member is coprime
        let mut chosen: Vec<(Monomial, usize, bool)> = Vec::new();
        for (idx, cand) in cands.into_iter().enumerate() {
            if !keep[idx] {
                continue;
            }
            if let Some(existing) = chosen.iter_mut().find(|e| e.0 == cand.0) {
                existing.2 |= cand.2;
                continue;
            }
            chosen.push(cand);
        }
        // the product criterion is only valid for ideals
        let product_ok = !self.track && self.module.rank() == 1;
        for (lcm, i, coprime) in chosen {
            if coprime && product_ok {
                continue;
            }
            let degree = lcm.degree() as i64 + self.shifts[lc as usize];
            self.pairs.push(Pair {
                i,
                j: t,
                lcm,
                comp: lc,
                degree,
            });
        }
        self.by_comp[lc as usize].push(t);
        self.leads.push((lm, lc));
        self.basis.push(v);
    }

    fn take_pairs_of_degree(&mut self, d: i64) -> Vec<Pair> {
        let mut batch = Vec::new();
        let mut rest = Vec::with_capacity(self.pairs.len());
        for p in self.pairs.drain(..) {
            if p.degree == d {
                batch.push(p);
            } else {
                rest.push(p);
            }
        }
        self.pairs = rest;
        // deterministic processing order within a degree
        let ord = self.ord;
        batch.sort_by(|a, b| {
            ord.cmp(&(a.lcm, a.comp), &(b.lcm, b.comp))
                .then(a.i.cmp(&b.i))
                .then(a.j.cmp(&b.j))
        });
        batch
    }

    fn run(mut self, inputs: &[Vector]) -> Result<EngineOutput> {
        let mut order: Vec<(i64, usize)> = inputs
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (v.degree(&self.module.shifts).unwrap(), i))
            .collect();
        order.sort();
        let mut next_input = 0;
        let mut minimal = Vec::new();
        if self.mode == SyzygyMode::All {
            for v in inputs {
                self.shifts.push(v.degree(&self.module.shifts).unwrap_or(0));
            }
        }
        loop {
            let next_pair_deg = self.pairs.iter().map(|p| p.degree).min();
            let next_in_deg = order.get(next_input).map(|x| x.0);
            let d = match (next_pair_deg, next_in_deg) {
                (None, None) => break,
                (Some(a), None) => a,
                (None, Some(b)) => b,
                (Some(a), Some(b)) => a.min(b),
            };
            let batch = self.take_pairs_of_degree(d);
            for p in batch {
                self.budget.tick(1)?;
                let s = self.spoly(&p);
                let r = self.top_reduce(s)?;
                match r.lead() {
                    None => {}
                    Some((_, _, comp)) if comp >= self.ord.tag_start => {
                        let (_, g) = r.split(self.ord.tag_start);
                        self.syzygies.push(g);
                    }
                    Some(_) => self.insert(r),
                }
            }
            while next_input < order.len() && order[next_input].0 == d {
                let idx = order[next_input].1;
                next_input += 1;
                let mut v = inputs[idx].clone();
                v.sort(&self.ord);
                let one = Monomial::one(self.module.ring.nvars);
                match self.mode {
                    SyzygyMode::None => {}
                    SyzygyMode::Minimal => {
                        v.terms.push((1, one, self.ord.tag_start + minimal.len() as u32));
                        self.shifts.push(d);
                    }
                    SyzygyMode::All => v.terms.push((1, one, self.ord.tag_start + idx as u32)),
                }
                let r = self.top_reduce(v)?;
                match r.lead() {
                    Some((_, _, comp)) if comp < self.ord.tag_start => {
                        minimal.push(idx);
                        self.insert(r);
                    }
                    _ => match self.mode {
                        SyzygyMode::Minimal => {
                            self.shifts.pop();
                        }
                        SyzygyMode::All => {
                            let mut r = r;
                            r.sort(&self.ord);
                            let (_, g) = r.split(self.ord.tag_start);
                            self.syzygies.push(g);
                        }
                        SyzygyMode::None => {}
                    },
                }
            }
        }
        let syzygies = std::mem::take(&mut self.syzygies);
        let ord = self.ord;
        Ok(EngineOutput {
            basis: self.basis,
            minimal,
            syzygies,
            order: ord,
        })
    }
}

/// Run the engine on homogeneous `inputs` of `module`.
pub fn compute(
    module: &FreeModule,
    order: MonomialOrder,
    inputs: &[Vector],
    mode: SyzygyMode,
    budget: &Budget,
) -> Result<EngineOutput> {
    Engine::new(module, order, mode, budget).run(inputs)
}

/// A finished Gröbner basis of a submodule, usable for normal forms.
#[derive(Clone, Debug)]
pub struct ModuleBasis {
    pub module: FreeModule,
    pub order: ModuleOrder,
    pub basis: Vec<Vector>,
}

impl ModuleBasis {
    pub fn from_output(module: &FreeModule, out: &EngineOutput) -> Self {
        let tag_start = out.order.tag_start;
        let ord = ModuleOrder::plain(out.order.order);
        let basis = out
            .basis
            .iter()
            .map(|v| {
                let (mut f, _) = v.split(tag_start);
                f.sort(&ord);
                f
            })
            .collect();
        Self {
            module: module.clone(),
            order: ord,
            basis,
        }
    }

    pub fn build(module: &FreeModule, order: MonomialOrder, gens: &[Vector], budget: &Budget) -> Result<Self> {
        let out = compute(module, order, gens, SyzygyMode::None, budget)?;
        Ok(Self::from_output(module, &out))
    }

    /// Normal form of `v` (every term reduced).
    pub fn normal_form(&self, v: &Vector, budget: &Budget) -> Result<Vector> {
        let mut e = Engine::new(&self.module, self.order.order, SyzygyMode::None, budget);
        for b in &self.basis {
            let (_, lm, lc) = b.lead().unwrap();
            e.by_comp[lc as usize].push(e.basis.len());
            e.leads.push((lm, lc));
            e.basis.push(b.clone());
        }
        let mut v = v.clone();
        v.sort(&self.order);
        e.full_reduce(v)
    }

    pub fn contains(&self, v: &Vector, budget: &Budget) -> Result<bool> {
        Ok(self.normal_form(v, budget)?.is_zero())
    }

    /// Interreduce into the reduced Gröbner basis: monic, tails reduced,
    /// sorted descending by leading term.
    pub fn reduced(&self, budget: &Budget) -> Result<Vec<Vector>> {
        let k = self.module.ring.field;
        let mut out = Vec::with_capacity(self.basis.len());
        for (i, b) in self.basis.iter().enumerate() {
            let (_, lm, lc) = b.lead().unwrap();
            // minimality: no other lead divides this one
            let redundant = self.basis.iter().enumerate().any(|(j, o)| {
                let (_, om, oc) = o.lead().unwrap();
                j != i && oc == lc && om.divides(&lm) && (om != lm || j < i)
            });
            if redundant {
                continue;
            }
            let mut e = Engine::new(&self.module, self.order.order, SyzygyMode::None, budget);
            for (j, o) in self.basis.iter().enumerate() {
                if j == i {
                    continue;
                }
                let (_, om, oc) = o.lead().unwrap();
                e.by_comp[oc as usize].push(e.basis.len());
                e.leads.push((om, oc));
                e.basis.push(o.clone());
            }
            let lead_term = Vector {
                terms: vec![b.terms[0]],
            };
            let tail = Vector {
                terms: b.terms[1..].to_vec(),
            };
            let tail = e.full_reduce(tail)?;
            let mut terms = lead_term.terms;
            terms.extend(tail.terms);
            let mut v = Vector { terms };
            let c = v.terms[0].0;
            if c != 1 {
                v.scale(k, k.inv(c));
            }
            out.push(v);
        }
        let ord = self.order;
        out.sort_by(|a, b| {
            let la = a.lead().unwrap();
            let lb = b.lead().unwrap();
            ord.cmp(&(lb.1, lb.2), &(la.1, la.2))
        });
        Ok(out)
    }
}
