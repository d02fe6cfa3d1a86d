//! Dense Gaussian elimination over `F_p`.

use crate::field::PrimeField;

/// Bring `rows` into reduced row echelon form in place, dropping zero rows.
/// Returns the pivot column of each remaining row.
pub fn rref(k: PrimeField, rows: &mut Vec<Vec<u32>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = k.inv(rows[r][col]);
        for v in rows[r].iter_mut() {
            *v = k.mul(*v, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let f = row[col];
            if f == 0 {
                continue;
            }
            let nf = k.neg(f);
            for (v, &p) in row.iter_mut().zip(pivot_row.iter()).skip(col) {
                if p != 0 {
                    *v = k.add(*v, k.mul(nf, p));
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(k: PrimeField, rows: &[Vec<u32>]) -> usize {
    let mut m = rows.to_vec();
    rref(k, &mut m).len()
}

/// Incremental echelon basis: rows are kept reduced against each other so
/// that membership of a new vector is decided by a single reduction pass.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    k: PrimeField,
    rows: Vec<(usize, Vec<u32>)>,
}

impl EchelonBasis {
    pub fn new(k: PrimeField) -> Self {
        Self { k, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [u32]) {
        let k = self.k;
        for (pc, row) in &self.rows {
            let f = v[*pc];
            if f == 0 {
                continue;
            }
            let nf = k.neg(f);
            for (x, &p) in v.iter_mut().zip(row.iter()) {
                if p != 0 {
                    *x = k.add(*x, k.mul(nf, p));
                }
            }
        }
    }

    /// Insert `v`; returns `true` if it was independent of the current rows.
    pub fn insert(&mut self, mut v: Vec<u32>) -> bool {
        self.reduce(&mut v);
        let Some(pc) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let k = self.k;
        let inv = k.inv(v[pc]);
        for x in v.iter_mut() {
            *x = k.mul(*x, inv);
        }
        for (_, row) in self.rows.iter_mut() {
            let f = row[pc];
            if f == 0 {
                continue;
            }
            let nf = k.neg(f);
            for (x, &p) in row.iter_mut().zip(v.iter()) {
                if p != 0 {
                    *x = k.add(*x, k.mul(nf, p));
                }
            }
        }
        self.rows.push((pc, v));
        true
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Rows sorted by pivot column.
    pub fn rows(&self) -> Vec<Vec<u32>> {
        let mut r = self.rows.clone();
        r.sort_by_key(|(pc, _)| *pc);
        r.into_iter().map(|(_, v)| v).collect()
    }
}
