//! Simplicial complexes on vertex sets `{0, ..., n-1}`, Stanley–Reisner
//! ideals and Alexander duality. Faces are bitmasks.

use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MAX_VARS};
use crate::monomial_ideal::MonomialIdeal;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    /// Inclusion-maximal faces, sorted ascending as masks.
    facets: Vec<u32>,
}

fn mask_of(vs: &[usize]) -> u32 {
    vs.iter().fold(0, |m, &v| m | (1 << v))
}

impl SimplicialComplex {
    /// Faces listed by vertex indices (zero-based); non-maximal ones are dropped.
    pub fn new(n: usize, faces: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        if n == 0 || n > MAX_VARS {
            return Err(Error::TooManyVariables { got: n, max: MAX_VARS });
        }
        let mut masks = Vec::new();
        for f in faces {
            if let Some(&v) = f.iter().find(|&&v| v >= n) {
                return Err(Error::InvalidArgument(format!("vertex {} outside 1..{n}", v + 1)));
            }
            masks.push(mask_of(&f));
        }
        Ok(Self::from_masks(n, masks))
    }

    pub(crate) fn from_masks(n: usize, masks: Vec<u32>) -> Self {
        let mut facets: Vec<u32> = Vec::new();
        for &m in &masks {
            let dominated = masks.iter().any(|&o| o != m && o & m == m);
            if !dominated && !facets.contains(&m) {
                facets.push(m);
            }
        }
        facets.sort_by_key(|&m| (m.count_ones(), sort_key(m)));
        Self { n, facets }
    }

    /// The complex whose Stanley–Reisner ideal is the squarefree ideal `ideal`.
    pub fn from_stanley_reisner(ideal: &MonomialIdeal) -> Result<Self> {
        let n = ideal.nvars();
        if ideal.generators().iter().any(|g| !g.is_squarefree()) {
            return Err(Error::InvalidArgument("ideal is not squarefree".into()));
        }
        let nonfaces: Vec<u32> = ideal.generators().iter().map(|g| g.support_mask()).collect();
        let faces: Vec<u32> = (0u32..(1 << n))
            .filter(|&f| nonfaces.iter().all(|&g| g & !f != 0))
            .collect();
        Ok(Self::from_masks(n, faces))
    }

    /// The six-vertex triangulation of the real projective plane.
    pub fn real_projective_plane() -> Self {
        let facets = [
            [1, 2, 5],
            [1, 2, 6],
            [1, 3, 4],
            [1, 3, 6],
            [1, 4, 5],
            [2, 3, 4],
            [2, 3, 5],
            [2, 4, 6],
            [3, 5, 6],
            [4, 5, 6],
        ];
        Self::new(6, facets.iter().map(|f| f.iter().map(|v| v - 1).collect())).unwrap()
    }

    pub fn nvertices(&self) -> usize {
        self.n
    }

    /// Facets as sorted zero-based vertex lists.
    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&m| vertices(m)).collect()
    }

    pub fn is_face(&self, mask: u32) -> bool {
        self.facets.iter().any(|&f| f & mask == mask)
    }

    /// Dimension (`-1` for `{∅}`, `None` for the void complex).
    pub fn dimension(&self) -> Option<i32> {
        self.facets.iter().map(|f| f.count_ones() as i32 - 1).max()
    }

    pub fn minimal_nonfaces(&self) -> Vec<u32> {
        let mut out: Vec<u32> = (0u32..(1 << self.n))
            .filter(|&s| {
                !self.is_face(s)
                    && (0..self.n)
                        .filter(|&v| s & (1 << v) != 0)
                        .all(|v| self.is_face(s & !(1 << v)))
            })
            .collect();
        out.sort_by_key(|&m| (m.count_ones(), sort_key(m)));
        out
    }

    pub fn stanley_reisner(&self) -> MonomialIdeal {
        let n = self.n;
        MonomialIdeal::new(
            n,
            self.minimal_nonfaces().into_iter().map(|m| {
                let e: Vec<u32> = (0..n).map(|v| (m >> v) & 1).collect();
                Monomial::from_slice(&e)
            }),
        )
    }

    /// `Δ* = {F : [n] \ F ∉ Δ}`; its facets are the complements of the
    /// minimal nonfaces of `Δ`.
    pub fn alexander_dual(&self) -> Self {
        let full = (1u32 << self.n) - 1;
        let facets = self.minimal_nonfaces().into_iter().map(|m| full & !m).collect();
        Self::from_masks(self.n, facets)
    }
}

fn vertices(m: u32) -> Vec<usize> {
    (0..32).filter(|&v| m & (1 << v) != 0).collect()
}

/// Lexicographic key on sorted vertex lists.
fn sort_key(m: u32) -> Vec<usize> {
    vertices(m)
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SimplicialComplex {
    /// `complex <n> facets: 125 126 ...`, braces when a label exceeds one digit.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "complex {} facets:", self.n)?;
        for face in self.facets() {
            if self.n <= 9 {
                let s: String = face.iter().map(|v| (v + 1).to_string()).collect();
                write!(f, " {}", if s.is_empty() { "{}".to_string() } else { s })?;
            } else {
                let s: Vec<String> = face.iter().map(|v| (v + 1).to_string()).collect();
                write!(f, " {{{}}}", s.join(","))?;
            }
        }
        Ok(())
    }
}
