//! Sparse polynomials over a prime field.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::{Monomial, MonomialOrder, MAX_VARS};

/// Ambient ring data: the coefficient field and the number of variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    pub field: PrimeField,
    pub nvars: usize,
}

impl Ring {
    pub fn new(p: u32, nvars: usize) -> Result<Self> {
        if nvars == 0 || nvars > MAX_VARS {
            return Err(Error::TooManyVariables {
                got: nvars,
                max: MAX_VARS,
            });
        }
        Ok(Self {
            field: PrimeField::new(p)?,
            nvars,
        })
    }

    pub fn characteristic(&self) -> u32 {
        self.field.characteristic()
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::monomial(*self, 1, Monomial::var(self.nvars, i))
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(*self)
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::monomial(*self, 1, Monomial::one(self.nvars))
    }
}

/// Terms are `(coefficient, monomial)` pairs, nonzero, strictly descending under `order`.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    order: MonomialOrder,
    terms: Vec<(u32, Monomial)>,
}

impl Polynomial {
    pub fn zero(ring: Ring) -> Self {
        Self {
            ring,
            order: MonomialOrder::Degrevlex,
            terms: Vec::new(),
        }
    }

    pub fn monomial(ring: Ring, coef: u32, m: Monomial) -> Self {
        let c = coef % ring.field.order();
        let terms = if c == 0 { Vec::new() } else { vec![(c, m)] };
        Self {
            ring,
            order: MonomialOrder::Degrevlex,
            terms,
        }
    }

    /// Build from arbitrary (possibly repeated, unsorted) integer-coefficient terms.
    pub fn from_terms<I>(ring: Ring, order: MonomialOrder, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, Monomial)>,
    {
        let k = ring.field;
        let raw = terms
            .into_iter()
            .map(|(c, m)| (k.reduce_i64(c), m))
            .collect();
        Self::canonical(ring, order, raw)
    }

    pub(crate) fn canonical(ring: Ring, order: MonomialOrder, mut raw: Vec<(u32, Monomial)>) -> Self {
        raw.sort_by(|a, b| order.cmp(&b.1, &a.1));
        let k = ring.field;
        let mut terms: Vec<(u32, Monomial)> = Vec::with_capacity(raw.len());
        for (c, m) in raw {
            match terms.last_mut() {
                Some(last) if last.1 == m => last.0 = k.add(last.0, c),
                _ => {
                    if let Some(last) = terms.last() {
                        if last.0 == 0 {
                            terms.pop();
                        }
                    }
                    terms.push((c, m));
                }
            }
        }
        if let Some(last) = terms.last() {
            if last.0 == 0 {
                terms.pop();
            }
        }
        Self { ring, order, terms }
    }

    /// Trusted constructor: terms already canonical under `order`.
    pub(crate) fn from_sorted(ring: Ring, order: MonomialOrder, terms: Vec<(u32, Monomial)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| order.cmp(&w[0].1, &w[1].1) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| t.0 != 0));
        Self { ring, order, terms }
    }

    /// The same polynomial over an extension of its coefficient field.
    pub fn lift(&self, ring: Ring) -> Result<Self> {
        if !ring.field.contains(self.ring.field) {
            return Err(Error::FieldMismatch(ring.characteristic(), self.ring.characteristic()));
        }
        if ring.nvars != self.ring.nvars {
            return Err(Error::ArityMismatch(ring.nvars, self.ring.nvars));
        }
        Ok(Self {
            ring,
            order: self.order,
            terms: self.terms.clone(),
        })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn field(&self) -> PrimeField {
        self.ring.field
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[(u32, Monomial)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(u32, Monomial)> {
        self.terms
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

    /// Re-sort the terms under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Self {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.1, &a.1));
        Self {
            ring: self.ring,
            order,
            terms,
        }
    }

    pub fn leading_term(&self) -> Option<(u32, Monomial)> {
        self.terms.first().copied()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.1)
    }

    pub fn leading_coefficient(&self) -> Option<u32> {
        self.terms.first().map(|t| t.0)
    }

    /// Largest total degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.1.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((_, m)) => self.terms.iter().all(|t| t.1.degree() == m.degree()),
        }
    }

    /// Degree of a nonzero homogeneous polynomial.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        if self.is_zero() || !self.is_homogeneous() {
            None
        } else {
            Some(self.terms[0].1.degree())
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn coefficient_of(&self, m: &Monomial) -> u32 {
        self.terms
            .binary_search_by(|t| self.order.cmp(m, &t.1))
            .map(|i| self.terms[i].0)
            .unwrap_or(0)
    }

    pub fn scale(&self, c: u32) -> Self {
        let k = self.ring.field;
        let c = c % k.order();
        if c == 0 {
            return self.with_terms(Vec::new());
        }
        let terms = self.terms.iter().map(|&(a, m)| (k.mul(a, c), m)).collect();
        self.with_terms(terms)
    }

    fn with_terms(&self, terms: Vec<(u32, Monomial)>) -> Self {
        Self {
            ring: self.ring,
            order: self.order,
            terms,
        }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, c: u32, m: &Monomial) -> Self {
        let k = self.ring.field;
        if c % k.order() == 0 {
            return self.with_terms(Vec::new());
        }
        self.with_terms(
            self.terms
                .iter()
                .map(|&(a, t)| (k.mul(a, c), t.mul(m)))
                .collect(),
        )
    }

    pub fn make_monic(&self) -> Self {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(c) => self.scale(self.ring.field.inv(c)),
        }
    }

    /// `self + c * m * other`, merging sorted term lists.
    pub fn add_scaled(&self, c: u32, m: &Monomial, other: &Polynomial) -> Self {
        let k = self.ring.field;
        let ord = self.order;
        let other_terms: Vec<(u32, Monomial)> = if other.order == ord {
            other.terms.iter().map(|&(a, t)| (k.mul(a, c), t.mul(m))).collect()
        } else {
            other.with_order(ord).terms.iter().map(|&(a, t)| (k.mul(a, c), t.mul(m))).collect()
        };
        let mut out = Vec::with_capacity(self.terms.len() + other_terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other_terms;
        while i < a.len() && j < b.len() {
            match ord.cmp(&a[i].1, &b[j].1) {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    if b[j].0 != 0 {
                        out.push(b[j]);
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let s = k.add(a[i].0, b[j].0);
                    if s != 0 {
                        out.push((s, a[i].1));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().copied().filter(|t| t.0 != 0));
        self.with_terms(out)
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<()> {
        if self.ring.field != other.ring.field {
            return Err(Error::FieldMismatch(
                self.ring.characteristic(),
                other.ring.characteristic(),
            ));
        }
        if self.ring.nvars != other.ring.nvars {
            return Err(Error::ArityMismatch(self.ring.nvars, other.ring.nvars));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.add_scaled(1, &Monomial::one(self.nvars()), other))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Self> {
        self.check_compatible(other)?;
        let k = self.ring.field;
        Ok(self.add_scaled(k.neg(1), &Monomial::one(self.nvars()), other))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Self> {
        self.check_compatible(other)?;
        let k = self.ring.field;
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for &(a, s) in &self.terms {
            for &(b, t) in &other.terms {
                raw.push((k.mul(a, b), s.mul(&t)));
            }
        }
        Ok(Self::canonical(self.ring, self.order, raw))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = self.ring.one().with_order(self.order);
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    /// Substitute `x_i -> images[i]` for every variable.
    pub fn substitute(&self, images: &[Polynomial]) -> Self {
        assert_eq!(images.len(), self.nvars());
        let mut out = Polynomial::zero(self.ring).with_order(self.order);
        // cache powers per variable
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| vec![self.ring.one().with_order(self.order), p.with_order(self.order)])
            .collect();
        for &(c, m) in &self.terms {
            let mut t = Polynomial::monomial(self.ring, c, Monomial::one(self.nvars())).with_order(self.order);
            for (i, &e) in m.exponents().iter().enumerate() {
                let e = e as usize;
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e {
                    let next = &powers[i][powers[i].len() - 1] * &powers[i][1];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e];
            }
            out = &out + &t;
        }
        out
    }

    /// Drop every term whose total degree differs from `d`.
    pub fn homogeneous_component(&self, d: u32) -> Self {
        self.with_terms(
            self.terms
                .iter()
                .copied()
                .filter(|t| t.1.degree() == d)
                .collect(),
        )
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Polynomial) -> Option<Polynomial> {
        if d.is_zero() {
            return None;
        }
        let ord = self.order;
        let d = d.with_order(ord);
        let (lc, lm) = d.leading_term().unwrap();
        let k = self.ring.field;
        let lc_inv = k.inv(lc);
        let mut rem = self.clone();
        let mut q = Vec::new();
        while let Some((c, m)) = rem.leading_term() {
            let t = lm.quotient_of(&m)?;
            let coef = k.mul(c, lc_inv);
            q.push((coef, t));
            rem = rem.add_scaled(k.neg(coef), &t, &d);
        }
        Some(Polynomial::from_sorted(self.ring, ord, q))
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        if self.ring != other.ring {
            return false;
        }
        if self.order == other.order {
            self.terms == other.terms
        } else {
            self.terms == other.with_order(self.order).terms
        }
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let k = self.ring.field;
        for (idx, &(c, m)) in self.terms.iter().enumerate() {
            let s = k.signed(c);
            let (neg, abs) = if s < 0 { (true, -s) } else { (false, s) };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs == 1 {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("incompatible polynomials")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("incompatible polynomials")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("incompatible polynomials")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(self.ring.field.neg(1))
    }
}
