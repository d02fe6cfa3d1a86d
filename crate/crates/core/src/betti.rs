//! Graded Betti tables.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Which module a table describes: the quotient `S/I` or the ideal `I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BettiModule {
    #[serde(rename = "S/I")]
    Quotient,
    #[serde(rename = "I")]
    Ideal,
}

/// `β_{i,j}`: homological index `i`, internal degree `j`. Only positive
/// entries are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    module: BettiModule,
    entries: BTreeMap<(usize, i64), u64>,
}

#[derive(Serialize, Deserialize)]
struct JsonEntry {
    i: usize,
    j: i64,
    beta: u64,
}

#[derive(Serialize, Deserialize)]
struct JsonTable {
    module: BettiModule,
    entries: Vec<JsonEntry>,
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        JsonTable {
            module: self.module,
            entries: self
                .entries
                .iter()
                .map(|(&(i, j), &beta)| JsonEntry { i, j, beta })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BettiTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let t = JsonTable::deserialize(d)?;
        let mut out = BettiTable::new(t.module);
        for e in t.entries {
            out.add(e.i, e.j, e.beta);
        }
        Ok(out)
    }
}

impl BettiTable {
    pub fn new(module: BettiModule) -> Self {
        Self {
            module,
            entries: BTreeMap::new(),
        }
    }

    pub fn module(&self) -> BettiModule {
        self.module
    }

    pub fn add(&mut self, i: usize, j: i64, count: u64) {
        if count == 0 {
            return;
        }
        *self.entries.entry((i, j)).or_insert(0) += count;
    }

    pub fn get(&self, i: usize, j: i64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, i64, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest homological index with a nonzero entry.
    pub fn length(&self) -> Option<usize> {
        self.entries.keys().map(|k| k.0).max()
    }

    /// Total Betti numbers `β_i`, indexed from zero up to the length.
    pub fn totals(&self) -> Vec<u64> {
        let Some(len) = self.length() else {
            return Vec::new();
        };
        let mut t = vec![0; len + 1];
        for (&(i, _), &b) in &self.entries {
            t[i] += b;
        }
        t
    }

    /// Internal degrees at index `i`, with multiplicity, ascending.
    pub fn shifts(&self, i: usize) -> Vec<i64> {
        let mut v = Vec::new();
        for (&(ii, j), &b) in &self.entries {
            if ii == i {
                v.extend(std::iter::repeat_n(j, b as usize));
            }
        }
        v
    }

    /// `max(j - i)` over the support.
    pub fn regularity(&self) -> Option<i64> {
        self.entries.keys().map(|&(i, j)| j - i as i64).max()
    }

    /// Distinct values of `j - i` over the support, ascending.
    pub fn strands(&self) -> Vec<i64> {
        let mut s: Vec<i64> = self.entries.keys().map(|&(i, j)| j - i as i64).collect();
        s.sort();
        s.dedup();
        s
    }

    /// Supported on `j = i + d` only.
    pub fn is_linear(&self, d: i64) -> bool {
        let offset = match self.module {
            BettiModule::Ideal => d,
            BettiModule::Quotient => d - 1,
        };
        self.entries.keys().all(|&(i, j)| {
            (self.module == BettiModule::Quotient && i == 0 && j == 0) || j == i as i64 + offset
        })
    }

    /// Table of the ideal, from a table of either module.
    pub fn to_ideal(&self) -> BettiTable {
        match self.module {
            BettiModule::Ideal => self.clone(),
            BettiModule::Quotient => {
                let mut t = BettiTable::new(BettiModule::Ideal);
                for (&(i, j), &b) in &self.entries {
                    if i > 0 {
                        t.add(i - 1, j, b);
                    }
                }
                t
            }
        }
    }

    /// Table of the quotient, from a table of either module.
    pub fn to_quotient(&self) -> BettiTable {
        match self.module {
            BettiModule::Quotient => self.clone(),
            BettiModule::Ideal => {
                let mut t = BettiTable::new(BettiModule::Quotient);
                t.add(0, 0, 1);
                for (&(i, j), &b) in &self.entries {
                    t.add(i + 1, j, b);
                }
                t
            }
        }
    }

    /// Entrywise comparison `self ≤ other` (same module).
    pub fn dominated_by(&self, other: &BettiTable) -> bool {
        let other = match (self.module, other.module) {
            (BettiModule::Ideal, _) => other.to_ideal(),
            (BettiModule::Quotient, _) => other.to_quotient(),
        };
        self.entries.iter().all(|(&(i, j), &b)| b <= other.get(i, j))
    }

    /// Alternating sum `Σ (-1)^i β_{i,j} t^j` as a coefficient vector in `t`
    /// (only meaningful for non-negative degrees).
    pub fn euler_polynomial(&self) -> Vec<i64> {
        let maxj = self.entries.keys().map(|k| k.1).max().unwrap_or(0).max(0) as usize;
        let mut p = vec![0i64; maxj + 1];
        for (&(i, j), &b) in &self.entries {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            p[j as usize] += sign * b as i64;
        }
        while p.len() > 1 && *p.last().unwrap() == 0 {
            p.pop();
        }
        p
    }
}

impl fmt::Display for BettiTable {
    /// Rows are `j - i`, columns `i`, as customary.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.module {
            BettiModule::Quotient => "S/I",
            BettiModule::Ideal => "I",
        };
        if self.entries.is_empty() {
            return writeln!(f, "{name}: zero");
        }
        let len = self.length().unwrap();
        let strands = self.strands();
        let (lo, hi) = (strands[0], *strands.last().unwrap());
        writeln!(f, "{name}")?;
        write!(f, "{:>6}", "")?;
        for i in 0..=len {
            write!(f, "{i:>6}")?;
        }
        writeln!(f)?;
        write!(f, "{:>6}", "total:")?;
        for t in self.totals() {
            write!(f, "{t:>6}")?;
        }
        writeln!(f)?;
        for r in lo..=hi {
            write!(f, "{:>6}", format!("{r}:"))?;
            for i in 0..=len {
                let b = self.get(i, r + i as i64);
                if b == 0 {
                    write!(f, "{:>6}", "-")?;
                } else {
                    write!(f, "{b:>6}")?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
