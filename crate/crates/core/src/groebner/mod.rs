//! Graded ideals: Gröbner bases, initial ideals, graded pieces, minimal
//! generators, Hilbert functions and dimension.

pub mod coords;
pub mod engine;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::OnceLock;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::linalg::EchelonBasis;
use crate::monomial::{binomial, monomials_of_degree, Monomial, MonomialOrder};
use crate::monomial_ideal::MonomialIdeal;
use crate::polynomial::{Polynomial, Ring};

use engine::{FreeModule, ModuleBasis, ModuleOrder, Vector};

pub use coords::{apply_coordinate_change, gin_sample, GinSample, RandomCoordinateChange};

/// A homogeneous ideal with lazily cached reduced Gröbner bases.
#[derive(Clone)]
pub struct GradedIdeal {
    ring: Ring,
    gens: Vec<Polynomial>,
    gb: [OnceLock<Vec<Polynomial>>; 2],
    mingens: OnceLock<Vec<usize>>,
}

impl GradedIdeal {
    /// Zero generators are dropped; the rest must be homogeneous and live in `ring`.
    pub fn new(ring: Ring, gens: impl IntoIterator<Item = Polynomial>) -> Result<Self> {
        let mut out = Vec::new();
        for g in gens {
            if g.ring().field != ring.field {
                return Err(Error::FieldMismatch(g.ring().characteristic(), ring.characteristic()));
            }
            if g.nvars() != ring.nvars {
                return Err(Error::ArityMismatch(g.nvars(), ring.nvars));
            }
            if g.is_zero() {
                continue;
            }
            if !g.is_homogeneous() {
                return Err(Error::Inhomogeneous(g.to_string()));
            }
            out.push(g.with_order(MonomialOrder::Degrevlex));
        }
        Ok(Self {
            ring,
            gens: out,
            gb: Default::default(),
            mingens: OnceLock::new(),
        })
    }

    pub fn from_monomial_ideal(ring: Ring, m: &MonomialIdeal) -> Result<Self> {
        if m.nvars() != ring.nvars {
            return Err(Error::ArityMismatch(m.nvars(), ring.nvars));
        }
        Self::new(ring, m.to_polynomials(ring))
    }

    pub fn zero(ring: Ring) -> Self {
        Self::new(ring, []).unwrap()
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub(crate) fn rank_one(&self) -> FreeModule {
        FreeModule::new(self.ring, vec![0])
    }

    pub(crate) fn vectors(&self, order: MonomialOrder) -> Vec<Vector> {
        let ord = ModuleOrder::plain(order);
        self.gens
            .iter()
            .map(|g| Vector::from_polynomial(g, 0, &ord))
            .collect()
    }

    /// Reduced Gröbner basis under `order`, computed within `budget` and cached.
    pub fn groebner_basis_with_budget(&self, order: MonomialOrder, budget: &Budget) -> Result<&[Polynomial]> {
        let slot = &self.gb[order.slot()];
        if let Some(v) = slot.get() {
            return Ok(v);
        }
        let module = self.rank_one();
        let mb = ModuleBasis::build(&module, order, &self.vectors(order), budget)?;
        let reduced = mb.reduced(budget)?;
        let polys: Vec<Polynomial> = reduced
            .iter()
            .map(|v| v.components(self.ring, 1, order).pop().unwrap())
            .collect();
        Ok(slot.get_or_init(|| polys))
    }

    pub fn groebner_basis(&self, order: MonomialOrder) -> &[Polynomial] {
        self.groebner_basis_with_budget(order, &Budget::unlimited())
            .expect("unlimited budget")
    }

    pub fn initial_ideal_with_budget(&self, order: MonomialOrder, budget: &Budget) -> Result<MonomialIdeal> {
        let gb = self.groebner_basis_with_budget(order, budget)?;
        Ok(MonomialIdeal::new(
            self.nvars(),
            gb.iter().map(|g| g.leading_monomial().unwrap()),
        ))
    }

    pub fn initial_ideal(&self, order: MonomialOrder) -> MonomialIdeal {
        self.initial_ideal_with_budget(order, &Budget::unlimited())
            .expect("unlimited budget")
    }

    fn module_basis(&self, order: MonomialOrder) -> ModuleBasis {
        let ord = ModuleOrder::plain(order);
        ModuleBasis {
            module: self.rank_one(),
            order: ord,
            basis: self
                .groebner_basis(order)
                .iter()
                .map(|g| Vector::from_polynomial(g, 0, &ord))
                .collect(),
        }
    }

    /// Normal form of `f` modulo the ideal (degrevlex).
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let order = MonomialOrder::Degrevlex;
        let mb = self.module_basis(order);
        let v = Vector::from_polynomial(f, 0, &mb.order);
        let r = mb.normal_form(&v, &Budget::unlimited()).expect("unlimited budget");
        r.components(self.ring, 1, order).pop().unwrap()
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// `dim_K I_d`, counted on the degrevlex initial ideal.
    pub fn graded_piece_dim(&self, d: u32) -> u64 {
        self.initial_ideal(MonomialOrder::Degrevlex).count_in_degree(d)
    }

    /// `dim_K I_d` as the rank of the coefficient matrix of all products
    /// `x^a g` of degree `d`.
    pub fn graded_piece_dim_by_rank(&self, d: u32) -> u64 {
        let cols = monomials_of_degree(self.nvars(), d);
        let index: HashMap<Monomial, usize> = cols.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let mut eb = EchelonBasis::new(self.ring.field);
        for g in &self.gens {
            let gd = g.degree().unwrap();
            if gd > d {
                continue;
            }
            for a in monomials_of_degree(self.nvars(), d - gd) {
                let mut row = vec![0u32; cols.len()];
                for &(c, m) in g.terms() {
                    row[index[&m.mul(&a)]] = c;
                }
                eb.insert(row);
                if eb.rank() == cols.len() {
                    return eb.rank() as u64;
                }
            }
        }
        eb.rank() as u64
    }

    /// The canonical basis `{u - NF(u)}` of `I_d`, `u` running over the
    /// degree-`d` monomials of the degrevlex initial ideal (descending).
    pub fn graded_piece_basis(&self, d: u32) -> Vec<Polynomial> {
        let order = MonomialOrder::Degrevlex;
        let init = self.initial_ideal(order);
        let mb = self.module_basis(order);
        let budget = Budget::unlimited();
        let mut out = Vec::new();
        for u in monomials_of_degree(self.nvars(), d) {
            if !init.contains(&u) {
                continue;
            }
            let um = Polynomial::monomial(self.ring, 1, u);
            let v = Vector::from_polynomial(&um, 0, &mb.order);
            let nf = mb.normal_form(&v, &budget).expect("unlimited budget");
            let nf = nf.components(self.ring, 1, order).pop().unwrap();
            out.push(&um - &nf);
        }
        out
    }

    fn minimal_indices_with_budget(&self, budget: &Budget) -> Result<&[usize]> {
        if let Some(v) = self.mingens.get() {
            return Ok(v);
        }
        let out = engine::compute(
            &self.rank_one(),
            MonomialOrder::Degrevlex,
            &self.vectors(MonomialOrder::Degrevlex),
            engine::SyzygyMode::None,
            budget,
        )?;
        Ok(self.mingens.get_or_init(|| out.minimal))
    }

    /// A minimal generating set chosen among the given generators.
    pub fn minimal_generators(&self) -> Vec<Polynomial> {
        let idx = self
            .minimal_indices_with_budget(&Budget::unlimited())
            .expect("unlimited budget");
        idx.iter().map(|&i| self.gens[i].clone()).collect()
    }

    pub fn minimal_generators_with_budget(&self, budget: &Budget) -> Result<Vec<Polynomial>> {
        let idx = self.minimal_indices_with_budget(budget)?;
        Ok(idx.iter().map(|&i| self.gens[i].clone()).collect())
    }

    /// `β_{0,d}` for every degree `d` with minimal generators.
    pub fn beta0_graded(&self) -> BTreeMap<u32, usize> {
        let mut out = BTreeMap::new();
        for g in self.minimal_generators() {
            *out.entry(g.degree().unwrap()).or_insert(0) += 1;
        }
        out
    }

    pub fn beta0(&self) -> usize {
        self.minimal_generators().len()
    }

    /// The ideal `I_⟨d⟩` generated by the forms of degree `d`.
    pub fn component_ideal(&self, d: u32) -> GradedIdeal {
        GradedIdeal::new(self.ring, self.graded_piece_basis(d)).unwrap()
    }

    /// The ideal `I_{≥d}`.
    pub fn truncation(&self, d: u32) -> GradedIdeal {
        let mut gens = Vec::new();
        for g in self.minimal_generators() {
            let gd = g.degree().unwrap();
            if gd >= d {
                gens.push(g);
            } else {
                for a in monomials_of_degree(self.nvars(), d - gd) {
                    gens.push(g.mul_term(1, &a));
                }
            }
        }
        GradedIdeal::new(self.ring, gens).unwrap()
    }

    /// `dim_K (S/I)_d` for `d = 0..=dmax`.
    pub fn hilbert_function(&self, dmax: u32) -> Vec<u64> {
        let init = self.initial_ideal(MonomialOrder::Degrevlex);
        (0..=dmax)
            .map(|d| binomial(self.nvars() as i64 + d as i64 - 1, d as i64) - init.count_in_degree(d))
            .collect()
    }

    pub fn dimension(&self) -> usize {
        if self.is_zero() {
            return self.nvars();
        }
        self.initial_ideal(MonomialOrder::Degrevlex).dimension()
    }

    pub fn height(&self) -> usize {
        self.nvars() - self.dimension()
    }

    pub fn dimension_with_budget(&self, budget: &Budget) -> Result<usize> {
        if self.is_zero() {
            return Ok(self.nvars());
        }
        Ok(self
            .initial_ideal_with_budget(MonomialOrder::Degrevlex, budget)?
            .dimension())
    }

    pub fn height_with_budget(&self, budget: &Budget) -> Result<usize> {
        Ok(self.nvars() - self.dimension_with_budget(budget)?)
    }

    /// Least and largest degree of a generator.
    pub fn degree_range(&self) -> Option<(u32, u32)> {
        let ds = self.gens.iter().map(|g| g.degree().unwrap());
        let lo = ds.clone().min()?;
        Some((lo, ds.max().unwrap()))
    }

    /// Monomial ideal if every generator is a monomial.
    pub fn as_monomial_ideal(&self) -> Option<MonomialIdeal> {
        if self.gens.iter().all(|g| g.is_monomial()) {
            Some(MonomialIdeal::new(
                self.nvars(),
                self.gens.iter().map(|g| g.leading_monomial().unwrap()),
            ))
        } else {
            None
        }
    }
}

impl PartialEq for GradedIdeal {
    /// Equality as ideals (same reduced degrevlex basis).
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring
            && self.groebner_basis(MonomialOrder::Degrevlex) == other.groebner_basis(MonomialOrder::Degrevlex)
    }
}

impl fmt::Debug for GradedIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedIdeal({}, {self})", self.ring.field)
    }
}

impl fmt::Display for GradedIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// Multivariate division of `f` by `divisors` under `order`.
/// Returns quotients and the remainder.
pub fn divide(f: &Polynomial, divisors: &[Polynomial], order: MonomialOrder) -> (Vec<Polynomial>, Polynomial) {
    let ring = f.ring();
    let k = ring.field;
    let divs: Vec<Polynomial> = divisors.iter().map(|g| g.with_order(order)).collect();
    let mut quot: Vec<Vec<(u32, Monomial)>> = vec![Vec::new(); divs.len()];
    let mut p = f.with_order(order);
    let mut rem: Vec<(u32, Monomial)> = Vec::new();
    while let Some((c, m)) = p.leading_term() {
        let hit = divs.iter().enumerate().find_map(|(i, g)| {
            let (gc, gm) = g.leading_term()?;
            gm.quotient_of(&m).map(|q| (i, gc, q))
        });
        match hit {
            Some((i, gc, q)) => {
                let coef = k.mul(c, k.inv(gc));
                quot[i].push((coef, q));
                p = p.add_scaled(k.neg(coef), &q, &divs[i]);
            }
            None => {
                rem.push((c, m));
                p = p.add_scaled(k.neg(c), &Monomial::one(ring.nvars), &Polynomial::monomial(ring, 1, m).with_order(order));
            }
        }
    }
    let quots = quot
        .into_iter()
        .map(|t| Polynomial::canonical(ring, order, t))
        .collect();
    (quots, Polynomial::from_sorted(ring, order, rem))
}

/// Reduced Gröbner basis of `ideal` under `order`.
pub fn buchberger(ideal: &GradedIdeal, order: MonomialOrder) -> Vec<Polynomial> {
    ideal.groebner_basis(order).to_vec()
}
