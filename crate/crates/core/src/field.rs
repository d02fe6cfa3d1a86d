//! Prime fields `F_p` with `p < 2^31`, and small extensions `GF(p^k)`.
//!
//! Extension elements are encoded as integers `Σ d_i p^i` with base-`p`
//! digits `d_i` (coefficients in `F_p[t]/(f)`), so the prime subfield keeps
//! its usual encoding `0..p`. Extensions only serve to draw coordinate
//! changes that are generic with high probability when `p` is small.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};

/// Default characteristic used when nothing else is requested.
pub const DEFAULT_CHARACTERISTIC: u32 = 31013;

/// Largest extension order built by [`PrimeField::generic_extension`].
pub const MAX_EXTENSION_ORDER: u32 = 1 << 20;

/// A finite field of order `p^k`; `k = 1` for the prime field `Z/pZ`.
/// Scalars are `u32` values in `[0, p^k)`.
#[derive(Clone, Copy)]
pub struct PrimeField {
    p: u32,
    ext: Option<&'static Extension>,
}

/// Log and antilog tables of `GF(p^k)` with respect to a primitive element.
struct Extension {
    degree: u32,
    order: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl PartialEq for PrimeField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.degree() == other.degree()
    }
}

impl Eq for PrimeField {}

impl Hash for PrimeField {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.p.hash(state);
        self.degree().hash(state);
    }
}

impl fmt::Debug for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ext {
            None => write!(f, "F_{}", self.p),
            Some(e) => write!(f, "GF({}^{})", self.p, e.degree),
        }
    }
}

fn digits(mut a: u32, p: u32, k: u32) -> Vec<u32> {
    (0..k)
        .map(|_| {
            let d = a % p;
            a /= p;
            d
        })
        .collect()
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}

/// Tables for `F_p[t]/(f)` with the first monic `f` of degree `k` for which
/// `t` has multiplicative order `p^k - 1`. Such an `f` is irreducible since
/// every nonzero residue is then a power of `t`, hence a unit.
fn build_extension(p: u32, k: u32) -> Extension {
    let q = p.pow(k);
    // non-leading coefficients of f, enumerated as an integer in base p
    for code in 1..q {
        let f = digits(code, p, k);
        if f[0] == 0 {
            continue;
        }
        let mut exp = Vec::with_capacity(2 * q as usize);
        let mut cur = vec![0u32; k as usize];
        cur[0] = 1;
        let mut ok = true;
        for i in 0..q - 1 {
            let v = undigits(&cur, p);
            if i > 0 && v == 1 {
                ok = false;
                break;
            }
            exp.push(v);
            // multiply by t, then replace t^k by -(f_0 + ... + f_{k-1} t^{k-1})
            let top = cur[k as usize - 1];
            for j in (1..k as usize).rev() {
                cur[j] = cur[j - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for j in 0..k as usize {
                    cur[j] = (cur[j] + (p - top) * f[j] % p) % p;
                }
            }
        }
        if !ok || undigits(&cur, p) != 1 {
            continue;
        }
        let mut log = vec![0u32; q as usize];
        for (i, &v) in exp.iter().enumerate() {
            log[v as usize] = i as u32;
        }
        let head: Vec<u32> = exp.clone();
        exp.extend(head);
        return Extension {
            degree: k,
            order: q,
            exp,
            log,
        };
    }
    unreachable!("every finite field has a primitive element")
}

fn extension_tables(p: u32, k: u32) -> &'static Extension {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), &'static Extension>>> = OnceLock::new();
    let mut cache = CACHE.get_or_init(Default::default).lock().unwrap();
    *cache
        .entry((p, k))
        .or_insert_with(|| Box::leak(Box::new(build_extension(p, k))))
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n as u64 {
        if n as u64 % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if p >= (1 << 31) || !is_prime(p) {
            return Err(Error::InvalidCharacteristic(p));
        }
        Ok(Self { p, ext: None })
    }

    /// `GF(p^k)` over the prime subfield of `self`.
    pub fn extension(self, k: u32) -> Result<Self> {
        let order = (self.p as u64).checked_pow(k).filter(|&q| k >= 1 && q <= MAX_EXTENSION_ORDER as u64);
        match order {
            None if k == 1 => Ok(self.prime_subfield()),
            None => Err(Error::InvalidArgument(format!(
                "GF({}^{k}) exceeds the supported order {MAX_EXTENSION_ORDER}",
                self.p
            ))),
            Some(_) if k == 1 => Ok(self.prime_subfield()),
            Some(_) => Ok(Self {
                p: self.p,
                ext: Some(extension_tables(self.p, k)),
            }),
        }
    }

    /// The largest field of characteristic `p` and order at most
    /// [`MAX_EXTENSION_ORDER`], or `F_p` itself when `p^2` is larger.
    pub fn generic_extension(self) -> Self {
        let mut k = 1;
        while (self.p as u64).pow(k + 1) <= MAX_EXTENSION_ORDER as u64 {
            k += 1;
        }
        self.extension(k).expect("order checked above")
    }

    pub fn prime_subfield(self) -> Self {
        Self { p: self.p, ext: None }
    }

    /// Whether `self` is `other` or an extension of it.
    pub fn contains(self, other: Self) -> bool {
        self.p == other.p && self.degree() % other.degree() == 0
    }

    pub fn characteristic(self) -> u32 {
        self.p
    }

    pub fn degree(self) -> u32 {
        self.ext.map_or(1, |e| e.degree)
    }

    /// Number of elements.
    pub fn order(self) -> u32 {
        self.ext.map_or(self.p, |e| e.order)
    }

    /// Image of an integer in the prime subfield.
    #[inline]
    pub fn reduce_i64(self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        if self.ext.is_some() {
            return self.digitwise(a, b, |x, y| x + y);
        }
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if self.ext.is_some() {
            return self.digitwise(a, b, |x, y| x + self.p - y);
        }
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if self.ext.is_some() {
            return self.digitwise(0, a, |x, y| x + self.p - y);
        }
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        match self.ext {
            None => ((a as u64 * b as u64) % self.p as u64) as u32,
            Some(_) if a == 0 || b == 0 => 0,
            Some(e) => e.exp[(e.log[a as usize] + e.log[b as usize]) as usize],
        }
    }

    fn digitwise(self, mut a: u32, mut b: u32, op: impl Fn(u32, u32) -> u32) -> u32 {
        let p = self.p;
        if p == 2 {
            // both digit operations are xor in characteristic 2
            return a ^ b;
        }
        let (mut out, mut place) = (0, 1);
        while a > 0 || b > 0 {
            out += op(a % p, b % p) % p * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    }

    pub fn pow(self, mut a: u32, mut e: u64) -> u32 {
        let mut r = 1 % self.order();
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    /// Multiplicative inverse. Panics on zero, which is a logic error in callers.
    pub fn inv(self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero in {self}");
        match self.ext {
            None => self.pow(a, (self.p - 2) as u64),
            Some(e) => e.exp[((e.order - 1 - e.log[a as usize]) % (e.order - 1)) as usize],
        }
    }

    /// Symmetric representative in `(-p/2, p/2]`, used for printing.
    /// Extension elements outside the prime subfield print as their code.
    pub fn signed(self, a: u32) -> i64 {
        if a >= self.p {
            return a as i64;
        }
        if a as u64 * 2 > self.p as u64 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        Self {
            p: DEFAULT_CHARACTERISTIC,
            ext: None,
        }
    }
}
