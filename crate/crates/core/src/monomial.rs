//! Dense exponent vectors and the two monomial orders used throughout.
//!
//! Variables are `x1 > x2 > ... > xn`. Exponent vectors are stored inline
//! (no heap) with a fixed capacity of [`MAX_VARS`] slots; unused slots are zero.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_VARS: usize = 16;

/// `x^a = x1^a1 * ... * xn^an`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExponentVector {
    exps: [u16; MAX_VARS],
    n: u8,
    deg: u32,
}

pub type Monomial = ExponentVector;

impl ExponentVector {
    pub fn one(n: usize) -> Self {
        assert!(n <= MAX_VARS);
        Self {
            exps: [0; MAX_VARS],
            n: n as u8,
            deg: 0,
        }
    }

    /// The variable `x_{i+1}` (zero-based index `i`).
    pub fn var(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn new(exps: &[u32]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::TooManyVariables {
                got: exps.len(),
                max: MAX_VARS,
            });
        }
        let mut m = Self::one(exps.len());
        for (slot, &e) in m.exps.iter_mut().zip(exps) {
            if e > u16::MAX as u32 {
                return Err(Error::ExponentOverflow(e as u64));
            }
            *slot = e as u16;
        }
        m.deg = exps.iter().sum();
        Ok(m)
    }

    /// Same as [`ExponentVector::new`] for inputs known to be in range.
    pub fn from_slice(exps: &[u32]) -> Self {
        Self::new(exps).expect("exponent vector out of range")
    }

    #[inline]
    pub fn arity(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.exps[..self.n as usize]
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    /// One-based index of the last variable dividing `self`; `0` for the unit monomial.
    pub fn max_index(&self) -> usize {
        self.exponents()
            .iter()
            .rposition(|&e| e > 0)
            .map_or(0, |i| i + 1)
    }

    /// One-based index of the first variable dividing `self`; `0` for the unit monomial.
    pub fn min_index(&self) -> usize {
        self.exponents()
            .iter()
            .position(|&e| e > 0)
            .map_or(0, |i| i + 1)
    }

    #[inline]
    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        let mut r = *self;
        for i in 0..MAX_VARS {
            r.exps[i] += other.exps[i];
        }
        r.deg += other.deg;
        r
    }

    pub fn mul_var(&self, i: usize, k: u32) -> Self {
        let mut r = *self;
        r.exps[i] += k as u16;
        r.deg += k;
        r
    }

    #[inline]
    pub fn divides(&self, other: &Self) -> bool {
        if self.deg > other.deg {
            return false;
        }
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Self) -> Option<Self> {
        if !self.divides(other) {
            return None;
        }
        let mut r = *other;
        for i in 0..MAX_VARS {
            r.exps[i] -= self.exps[i];
        }
        r.deg -= self.deg;
        Some(r)
    }

    /// Divide by `x_i` (zero-based); `None` if `x_i` does not divide.
    pub fn div_var(&self, i: usize) -> Option<Self> {
        if self.exps[i] == 0 {
            return None;
        }
        let mut r = *self;
        r.exps[i] -= 1;
        r.deg -= 1;
        Some(r)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        let mut r = *self;
        let mut deg = 0;
        for i in 0..MAX_VARS {
            r.exps[i] = r.exps[i].max(other.exps[i]);
            deg += r.exps[i] as u32;
        }
        r.deg = deg;
        r
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut r = *self;
        let mut deg = 0;
        for i in 0..MAX_VARS {
            r.exps[i] = r.exps[i].min(other.exps[i]);
            deg += r.exps[i] as u32;
        }
        r.deg = deg;
        r
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents().iter().all(|&e| e <= 1)
    }

    /// Zero-based indices of the variables dividing `self`.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exponents()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    /// Bitmask of the support, bit `i` for `x_{i+1}`.
    pub fn support_mask(&self) -> u32 {
        self.support().fold(0, |acc, i| acc | (1 << i))
    }

    /// Rename variables: `x_i` becomes `x_{perm[i]}` (zero-based).
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut r = Self::one(self.arity());
        for (i, &e) in self.exponents().iter().enumerate() {
            r.exps[perm[i]] = e;
        }
        r.deg = self.deg;
        r
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// Monomial orders on `K[x1, ..., xn]` with `x1 > ... > xn`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    #[default]
    Degrevlex,
    Lex,
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Degrevlex => match a.deg.cmp(&b.deg) {
                Ordering::Equal => {
                    // last nonzero entry of a - b negative means a is larger
                    for i in (0..a.n as usize).rev() {
                        match a.exps[i].cmp(&b.exps[i]) {
                            Ordering::Equal => continue,
                            Ordering::Less => return Ordering::Greater,
                            Ordering::Greater => return Ordering::Less,
                        }
                    }
                    Ordering::Equal
                }
                o => o,
            },
            MonomialOrder::Lex => {
                for i in 0..a.n as usize {
                    match a.exps[i].cmp(&b.exps[i]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::Degrevlex => "degrevlex",
            MonomialOrder::Lex => "lex",
        }
    }

    /// Index into per-order caches.
    pub(crate) fn slot(self) -> usize {
        match self {
            MonomialOrder::Degrevlex => 0,
            MonomialOrder::Lex => 1,
        }
    }
}

impl std::str::FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "degrevlex" | "grevlex" | "rev" => Ok(MonomialOrder::Degrevlex),
            "lex" => Ok(MonomialOrder::Lex),
            other => Err(Error::InvalidArgument(format!("unknown order {other:?}"))),
        }
    }
}

/// Compare two exponent vectors under `ord`, checking arity.
pub fn compare(a: &ExponentVector, b: &ExponentVector, ord: MonomialOrder) -> Result<Ordering> {
    if a.arity() != b.arity() {
        return Err(Error::ArityMismatch(a.arity(), b.arity()));
    }
    Ok(ord.cmp(a, b))
}

/// All monomials of total degree `d` in `n` variables, in lex-descending order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    let mut exps = vec![0u32; n];
    fn rec(i: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let n = exps.len();
        if i == n - 1 {
            exps[i] = left;
            out.push(Monomial::from_slice(exps));
            return;
        }
        for e in (0..=left).rev() {
            exps[i] = e;
            rec(i + 1, left - e, exps, out);
        }
        exps[i] = 0;
    }
    rec(0, d, &mut exps, &mut out);
    out
}

pub fn binomial(n: i64, k: i64) -> u64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut r: u64 = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_slice(e)
    }

    #[test]
    fn degrevlex_and_lex_examples() {
        let x2sq = m(&[0, 2, 0]);
        let x1x3 = m(&[1, 0, 1]);
        assert_eq!(
            compare(&x2sq, &x1x3, MonomialOrder::Degrevlex).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            compare(&x1x3, &x2sq, MonomialOrder::Lex).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            compare(&x1x3, &x1x3, MonomialOrder::Lex).unwrap(),
            Ordering::Equal
        );
        assert!(compare(&m(&[1, 0]), &x1x3, MonomialOrder::Lex).is_err());
    }

    #[test]
    fn max_index_and_division() {
        let a = m(&[1, 0, 2, 0]);
        assert_eq!(a.max_index(), 3);
        assert_eq!(a.min_index(), 1);
        assert_eq!(Monomial::one(4).max_index(), 0);
        let b = m(&[1, 1, 2, 0]);
        assert_eq!(a.quotient_of(&b), Some(m(&[0, 1, 0, 0])));
        assert_eq!(b.quotient_of(&a), None);
        assert_eq!(a.lcm(&m(&[0, 3, 1, 0])), m(&[1, 3, 2, 0]));
    }

    #[test]
    fn enumerate_degree() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(8, 4).len(), 330);
        let v = monomials_of_degree(2, 3);
        assert_eq!(v[0], m(&[3, 0]));
        assert_eq!(binomial(11, 4), 330);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(-1, 0), 0);
    }

    fn mono_strategy(n: usize) -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..4, n).prop_map(|v| Monomial::from_slice(&v))
    }

    fn triple() -> impl Strategy<Value = (Monomial, Monomial, Monomial)> {
        (1usize..=8).prop_flat_map(|n| (mono_strategy(n), mono_strategy(n), mono_strategy(n)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(512))]

        #[test]
        fn order_axioms((a, b, c) in triple()) {
            let n = a.arity();
            for ord in [MonomialOrder::Degrevlex, MonomialOrder::Lex] {
                // totality and antisymmetry
                let ab = ord.cmp(&a, &b);
                prop_assert_eq!(ab, ord.cmp(&b, &a).reverse());
                prop_assert_eq!(ab == Ordering::Equal, a == b);
                // multiplicativity
                if ab != Ordering::Equal {
                    prop_assert_eq!(ord.cmp(&a.mul(&c), &b.mul(&c)), ab);
                }
                // 1 is minimal
                prop_assert_ne!(ord.cmp(&Monomial::one(n), &a), Ordering::Greater);
                // transitivity
                if ab != Ordering::Less && ord.cmp(&b, &c) != Ordering::Less {
                    prop_assert_ne!(ord.cmp(&a, &c), Ordering::Less);
                }
            }
        }
    }
}
