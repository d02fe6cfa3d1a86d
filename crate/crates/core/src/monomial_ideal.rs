//! Monomial ideals: stability, Eliahou–Kervaire Betti numbers, arithmetic,
//! dimension and Hilbert functions.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::betti::{BettiModule, BettiTable};
use crate::error::{Error, Result};
use crate::monomial::{binomial, monomials_of_degree, Monomial, MonomialOrder};
use crate::polynomial::{Polynomial, Ring};

/// A monomial ideal given by its minimal generators, kept sorted
/// degrevlex-descending.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        for g in &all {
            assert_eq!(g.arity(), nvars, "generator arity");
        }
        // sort ascending by degree so divisors come first
        all.sort_by(|a, b| MonomialOrder::Degrevlex.cmp(a, b));
        all.dedup();
        let mut gens: Vec<Monomial> = Vec::with_capacity(all.len());
        for m in all {
            if !gens.iter().any(|g| g.divides(&m)) {
                gens.push(m);
            }
        }
        gens.sort_by(|a, b| MonomialOrder::Degrevlex.cmp(b, a));
        Self { nvars, gens }
    }

    /// Convenience constructor from exponent rows.
    pub fn from_exponents(nvars: usize, rows: &[&[u32]]) -> Self {
        Self::new(nvars, rows.iter().map(|r| Monomial::from_slice(r)))
    }

    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            gens: Vec::new(),
        }
    }

    /// `(x_{i} : i ∈ indices)`, zero-based indices.
    pub fn variables(nvars: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        Self::new(nvars, indices.into_iter().map(|i| Monomial::var(nvars, i)))
    }

    /// `(x_1, ..., x_k)^e` inside `nvars` variables.
    pub fn power_of_first_variables(nvars: usize, k: usize, e: u32) -> Self {
        let sub = monomials_of_degree(k, e);
        Self::new(
            nvars,
            sub.iter().map(|m| {
                let mut ex = vec![0u32; nvars];
                for (i, &a) in m.exponents().iter().enumerate() {
                    ex[i] = a as u32;
                }
                Monomial::from_slice(&ex)
            }),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn beta0(&self) -> usize {
        self.gens.len()
    }

    /// Number of minimal generators per degree.
    pub fn beta0_graded(&self) -> BTreeMap<u32, usize> {
        let mut out = BTreeMap::new();
        for g in &self.gens {
            *out.entry(g.degree()).or_insert(0) += 1;
        }
        out
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.gens.iter().map(|g| g.degree()).min()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.gens.iter().map(|g| g.degree()).max()
    }

    /// First `(generator, j)` violating the stable exchange `x_j m / x_{max(m)} ∈ I`.
    /// Testing minimal generators suffices.
    pub fn stability_violation(&self) -> Option<(Monomial, usize)> {
        for g in &self.gens {
            let mx = g.max_index();
            if mx == 0 {
                continue;
            }
            let base = g.div_var(mx - 1).unwrap();
            for j in 1..mx {
                if !self.contains(&base.mul_var(j - 1, 1)) {
                    return Some((*g, j));
                }
            }
        }
        None
    }

    pub fn is_stable(&self) -> bool {
        self.stability_violation().is_none()
    }

    pub fn is_strongly_stable(&self) -> bool {
        for g in &self.gens {
            for i in g.support().collect::<Vec<_>>() {
                let base = g.div_var(i).unwrap();
                for j in 0..i {
                    if !self.contains(&base.mul_var(j, 1)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Graded Betti numbers of `S/I` from the Eliahou–Kervaire resolution:
    /// a minimal generator `m` of degree `d` contributes `C(max(m)-1, i-1)`
    /// to `β_{i, i+d-1}(S/I)` for every `i ≥ 1`.
    pub fn ek_betti(&self) -> Result<BettiTable> {
        if let Some((g, j)) = self.stability_violation() {
            return Err(Error::NotStable {
                generator: g.to_string(),
                j,
            });
        }
        let mut t = BettiTable::new(BettiModule::Quotient);
        t.add(0, 0, 1);
        for g in &self.gens {
            let mx = g.max_index() as i64;
            let d = g.degree() as i64;
            for i in 1..=mx.max(1) {
                let c = binomial(mx - 1, i - 1);
                t.add(i as usize, i + d - 1, c);
            }
        }
        Ok(t)
    }

    pub fn sum(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        Self::new(self.nvars, self.gens.iter().chain(other.gens.iter()).copied())
    }

    pub fn product(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                out.push(a.mul(b));
            }
        }
        Self::new(self.nvars, out)
    }

    pub fn power(&self, e: u32) -> Self {
        let mut r = Self::new(self.nvars, [Monomial::one(self.nvars)]);
        for _ in 0..e {
            r = r.product(self);
        }
        r
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Self::new(self.nvars, self.gens.iter().map(|g| g.mul(m)))
    }

    /// `m^k · I` with `m` the maximal homogeneous ideal.
    pub fn mul_maximal_power(&self, k: u32) -> Self {
        self.product(&Self::power_of_first_variables(self.nvars, self.nvars, k))
    }

    /// `I : m`.
    pub fn colon(&self, m: &Monomial) -> Self {
        Self::new(
            self.nvars,
            self.gens.iter().map(|g| g.gcd(m).quotient_of(g).unwrap()),
        )
    }

    /// The ideal generated by the generators of degree exactly `d`.
    pub fn component(&self, d: u32) -> Self {
        let mut gens = Vec::new();
        for m in monomials_of_degree(self.nvars, d) {
            if self.contains(&m) {
                gens.push(m);
            }
        }
        Self::new(self.nvars, gens)
    }

    /// `I_{≥d}`: generated by all monomials of `I` of degree `d` together
    /// with generators of degree above `d`.
    pub fn truncation(&self, d: u32) -> Self {
        let mut gens = Vec::new();
        for g in &self.gens {
            if g.degree() >= d {
                gens.push(*g);
            } else {
                for m in monomials_of_degree(self.nvars, d - g.degree()) {
                    gens.push(g.mul(&m));
                }
            }
        }
        Self::new(self.nvars, gens)
    }

    /// Number of monomials of degree `d` in `I`.
    pub fn count_in_degree(&self, d: u32) -> u64 {
        if self.gens.is_empty() {
            return 0;
        }
        monomials_of_degree(self.nvars, d)
            .iter()
            .filter(|m| self.contains(m))
            .count() as u64
    }

    /// `dim_K (S/I)_d` for `d = 0..=dmax`.
    pub fn hilbert_function(&self, dmax: u32) -> Vec<u64> {
        (0..=dmax)
            .map(|d| binomial(self.nvars as i64 + d as i64 - 1, d as i64) - self.count_in_degree(d))
            .collect()
    }

    /// Krull dimension of `S/I`: the largest set of variables containing the
    /// support of no generator.
    pub fn dimension(&self) -> usize {
        let n = self.nvars;
        if self.gens.is_empty() {
            return n;
        }
        let masks: Vec<u32> = self.gens.iter().map(|g| g.support_mask()).collect();
        let mut best = 0;
        for y in 0u32..(1u32 << n) {
            let size = y.count_ones() as usize;
            if size <= best {
                continue;
            }
            if masks.iter().all(|&m| m & !y != 0) {
                best = size;
            }
        }
        best
    }

    pub fn height(&self) -> usize {
        self.nvars - self.dimension()
    }

    /// Numerator `K(t)` of the Hilbert series `K(t) / (1-t)^n` of `S/I`.
    pub fn hilbert_numerator(&self) -> Vec<i64> {
        fn add_into(acc: &mut Vec<i64>, p: &[i64], shift: usize, sign: i64) {
            if acc.len() < p.len() + shift {
                acc.resize(p.len() + shift, 0);
            }
            for (i, &c) in p.iter().enumerate() {
                acc[i + shift] += sign * c;
            }
        }
        fn rec(gens: &[Monomial], n: usize) -> Vec<i64> {
            if gens.is_empty() {
                return vec![1];
            }
            if gens.iter().any(|g| g.is_one()) {
                return vec![0];
            }
            // pairwise coprime generators give a product of (1 - t^d)
            let coprime = gens
                .iter()
                .enumerate()
                .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
            if coprime {
                let mut p = vec![1i64];
                for g in gens {
                    let d = g.degree() as usize;
                    let mut q = vec![0i64; p.len() + d];
                    add_into(&mut q, &p, 0, 1);
                    add_into(&mut q, &p, d, -1);
                    p = q;
                }
                return p;
            }
            // pivot on the variable occurring in the most generators
            let mut counts = vec![0usize; n];
            for g in gens {
                for i in g.support() {
                    counts[i] += 1;
                }
            }
            let v = (0..n).max_by_key(|&i| (counts[i], std::cmp::Reverse(i))).unwrap();
            let pivot = Monomial::var(n, v);
            let ideal = MonomialIdeal::new(n, gens.iter().copied());
            let plus = MonomialIdeal::new(n, gens.iter().copied().chain([pivot]));
            let colon = ideal.colon(&pivot);
            let mut out = rec(&plus.gens, n);
            let c = rec(&colon.gens, n);
            add_into(&mut out, &c, 1, 1);
            while out.len() > 1 && *out.last().unwrap() == 0 {
                out.pop();
            }
            out
        }
        let mut p = rec(&self.gens, self.nvars);
        while p.len() > 1 && *p.last().unwrap() == 0 {
            p.pop();
        }
        p
    }

    pub fn to_polynomials(&self, ring: Ring) -> Vec<Polynomial> {
        assert_eq!(ring.nvars, self.nvars);
        self.gens
            .iter()
            .map(|m| Polynomial::monomial(ring, 1, *m))
            .collect()
    }

    /// Apply a permutation of variables (zero-based images).
    pub fn permute(&self, perm: &[usize]) -> Self {
        Self::new(self.nvars, self.gens.iter().map(|g| g.permute(perm)))
    }

    /// Compare two ideals by their generator lists (canonical form).
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.nvars.cmp(&other.nvars).then_with(|| {
            for (a, b) in self.gens.iter().zip(other.gens.iter()) {
                match MonomialOrder::Degrevlex.cmp(a, b) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            self.gens.len().cmp(&other.gens.len())
        })
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MonomialIdeal {
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

/// Close a set of monomials under the stable exchange, returning a stable ideal.
pub fn stable_closure(nvars: usize, seeds: impl IntoIterator<Item = Monomial>) -> MonomialIdeal {
    let mut ideal = MonomialIdeal::new(nvars, seeds);
    loop {
        let mut extra = Vec::new();
        for g in ideal.generators() {
            let mx = g.max_index();
            if mx == 0 {
                continue;
            }
            let base = g.div_var(mx - 1).unwrap();
            for j in 1..mx {
                let m = base.mul_var(j - 1, 1);
                if !ideal.contains(&m) {
                    extra.push(m);
                }
            }
        }
        if extra.is_empty() {
            return ideal;
        }
        ideal = MonomialIdeal::new(nvars, ideal.generators().iter().copied().chain(extra));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ideal(n: usize, rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, rows)
    }

    /// The example `J` obtained as a lex initial ideal of the 2x4 minors.
    pub(crate) fn ideal_j() -> MonomialIdeal {
        ideal(
            8,
            &[
                &[2, 0, 0, 0, 0, 0, 0, 0],
                &[1, 1, 0, 0, 0, 0, 0, 0],
                &[1, 0, 1, 0, 0, 0, 0, 0],
                &[1, 0, 0, 1, 0, 0, 0, 0],
                &[1, 0, 0, 0, 1, 0, 0, 0],
                &[0, 2, 0, 0, 0, 0, 0, 0],
                &[0, 1, 2, 0, 0, 0, 0, 0],
                &[0, 1, 1, 1, 0, 0, 0, 0],
                &[0, 1, 1, 0, 1, 0, 0, 0],
                &[0, 1, 0, 3, 0, 0, 0, 0],
                &[0, 0, 4, 0, 0, 0, 0, 0],
            ],
        )
    }

    #[test]
    fn minimalization() {
        let i = ideal(2, &[&[1, 0], &[2, 0], &[1, 1]]);
        assert_eq!(i.generators(), &[Monomial::from_slice(&[1, 0])]);
    }

    #[test]
    fn stability_examples() {
        // (x2, ..., x4) is not stable
        let i = MonomialIdeal::variables(4, 1..4);
        assert!(!i.is_stable());
        let v = i.stability_violation().unwrap();
        assert_eq!(v.1, 1);
        let ex = ideal(2, &[&[2, 0], &[1, 1], &[0, 3]]);
        assert!(ex.is_stable());
        assert!(ex.is_strongly_stable());
        let j = ideal_j();
        assert_eq!(j.beta0(), 11);
        assert!(j.is_stable());
        // x2*x3 passes the max-index exchange but x1*x3 is missing
        let s = ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0], &[0, 1, 1]]);
        assert!(s.is_stable());
        assert!(!s.is_strongly_stable());
    }

    #[test]
    fn ek_on_examples() {
        let ex = ideal(2, &[&[2, 0], &[1, 1], &[0, 3]]);
        let t = ex.ek_betti().unwrap().to_ideal();
        assert_eq!(t.totals(), vec![3, 2]);
        assert_eq!(t.shifts(0), vec![2, 2, 3]);
        assert_eq!(t.shifts(1), vec![3, 4]);
        // Koszul complex on n variables
        let m = MonomialIdeal::variables(5, 0..5);
        let q = m.ek_betti().unwrap();
        assert_eq!(q.totals(), vec![1, 5, 10, 10, 5, 1]);
        assert!(MonomialIdeal::variables(3, 1..3).ek_betti().is_err());
    }

    #[test]
    fn arithmetic() {
        let m = MonomialIdeal::variables(3, 0..3);
        let sq = m.product(&m);
        assert_eq!(sq.beta0(), 6);
        assert_eq!(sq, m.power(2));
        assert_eq!(sq, MonomialIdeal::power_of_first_variables(3, 3, 2));
        let shift = Monomial::from_slice(&[0, 1, 2]);
        let p = m.mul_monomial(&shift);
        assert!(p.generators().iter().all(|g| shift.divides(g)));
        // (x1,x2,x3)^{m-1} (x1, x2, x3^e) with m = 2, e = 1
        let comp = MonomialIdeal::power_of_first_variables(3, 3, 1)
            .product(&ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]));
        assert_eq!(comp, sq);
    }

    #[test]
    fn dimension_and_hilbert() {
        let ex = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(ex.height(), 1);
        assert_eq!(MonomialIdeal::variables(4, 0..4).height(), 4);
        assert_eq!(MonomialIdeal::zero(3).dimension(), 3);
        let i = ideal(2, &[&[1, 0]]);
        assert_eq!(i.count_in_degree(3), 3);
        assert_eq!(i.hilbert_function(3), vec![1, 1, 1, 1]);
        // complete intersection x1^2, x2^2: (1-t^2)^2
        let ci = ideal(2, &[&[2, 0], &[0, 2]]);
        assert_eq!(ci.hilbert_numerator(), vec![1, 0, -2, 0, 1]);
    }

    #[test]
    fn stability_brute_force_agrees() {
        // the generator test agrees with a check over all monomials up to the max degree
        let cases = [
            ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0], &[1, 0, 1]]),
            ideal(3, &[&[1, 0, 0], &[0, 2, 0], &[0, 1, 1]]),
            ideal(3, &[&[0, 1, 0]]),
            ideal(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 2, 0], &[0, 0, 1, 1]]),
        ];
        for c in cases {
            assert_eq!(c.is_stable(), brute_stable(&c, false));
            assert_eq!(c.is_strongly_stable(), brute_stable(&c, true));
        }
    }

    fn brute_stable(i: &MonomialIdeal, strong: bool) -> bool {
        let top = i.max_degree().unwrap() + 1;
        for d in 0..=top {
            for m in monomials_of_degree(i.nvars(), d) {
                if m.is_one() || !i.contains(&m) {
                    continue;
                }
                let idxs: Vec<usize> = if strong {
                    m.support().collect()
                } else {
                    vec![m.max_index() - 1]
                };
                for ix in idxs {
                    let base = m.div_var(ix).unwrap();
                    for j in 0..ix {
                        if !i.contains(&base.mul_var(j, 1)) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn random_ideal() -> impl Strategy<Value = MonomialIdeal> {
        (2usize..=4).prop_flat_map(|n| {
            proptest::collection::vec(proptest::collection::vec(0u32..3, n), 1..4)
                .prop_map(move |rows| MonomialIdeal::new(n, rows.iter().map(|r| Monomial::from_slice(r))))
        })
    }

    proptest! {
        #[test]
        fn strongly_stable_implies_stable(i in random_ideal()) {
            let c = stable_closure(i.nvars(), i.generators().iter().copied());
            prop_assert!(c.is_stable());
            prop_assert_eq!(c.is_stable(), brute_stable(&c, false));
            if i.is_strongly_stable() {
                prop_assert!(i.is_stable());
            }
            prop_assert_eq!(i.is_strongly_stable(), brute_stable(&i, true));
        }

        #[test]
        fn ek_totals_match_generator_sum(i in random_ideal()) {
            let c = stable_closure(i.nvars(), i.generators().iter().copied());
            let t = c.ek_betti().unwrap();
            let totals = t.totals();
            for (idx, &tot) in totals.iter().enumerate().skip(1) {
                let s: u64 = c.generators().iter().map(|g| binomial(g.max_index() as i64 - 1, idx as i64 - 1)).sum();
                prop_assert_eq!(tot, s);
            }
        }

        #[test]
        fn products_are_antichains(a in random_ideal(), e in 0u32..3) {
            let p = a.power(e);
            let g = p.generators();
            for x in g {
                for y in g {
                    prop_assert!(x == y || !x.divides(y));
                }
            }
        }
    }
}
