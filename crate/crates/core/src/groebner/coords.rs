//! Random linear changes of coordinates and generic initial ideals.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::rank;
use crate::monomial::{Monomial, MonomialOrder};
use crate::monomial_ideal::MonomialIdeal;
use crate::polynomial::{Polynomial, Ring};

use super::GradedIdeal;

/// An invertible matrix `φ` acting by `x_i ↦ Σ_j φ_{ij} x_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RandomCoordinateChange {
    field: PrimeField,
    matrix: Vec<Vec<u32>>,
    seed: Option<u64>,
}

impl RandomCoordinateChange {
    /// Dense uniform draw over `field`, repeated until the matrix is
    /// invertible. Pass [`PrimeField::generic_extension`] to make the draw
    /// generic with high probability when the characteristic is small.
    pub fn sample(field: PrimeField, n: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = field.order();
        loop {
            let matrix: Vec<Vec<u32>> = (0..n)
                .map(|_| (0..n).map(|_| rng.gen_range(0..p)).collect())
                .collect();
            if rank(field, &matrix) == n {
                return Self {
                    field,
                    matrix,
                    seed: Some(seed),
                };
            }
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let matrix = (0..n)
            .map(|i| (0..n).map(|j| u32::from(i == j)).collect())
            .collect();
        Self {
            field,
            matrix,
            seed: None,
        }
    }

    /// The permutation `x_i ↦ x_{perm[i]}`.
    pub fn permutation(field: PrimeField, perm: &[usize]) -> Result<Self> {
        let n = perm.len();
        let mut matrix = vec![vec![0u32; n]; n];
        for (i, &j) in perm.iter().enumerate() {
            if j >= n {
                return Err(Error::InvalidArgument(format!("permutation entry {j} out of range")));
            }
            matrix[i][j] = 1;
        }
        Self::from_matrix(field, matrix)
    }

    pub fn from_matrix(field: PrimeField, matrix: Vec<Vec<u32>>) -> Result<Self> {
        let n = matrix.len();
        if matrix.iter().any(|r| r.len() != n) {
            return Err(Error::Shape("coordinate change must be square".into()));
        }
        let p = field.order();
        let matrix: Vec<Vec<u32>> = matrix
            .into_iter()
            .map(|r| r.into_iter().map(|x| x % p).collect())
            .collect();
        if rank(field, &matrix) != n {
            return Err(Error::InvalidArgument("singular coordinate change".into()));
        }
        Ok(Self {
            field,
            matrix,
            seed: None,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn matrix(&self) -> &[Vec<u32>] {
        &self.matrix
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    /// Images of the variables in the polynomial ring over `φ`'s field.
    pub fn images(&self, nvars: usize) -> Vec<Polynomial> {
        let ring = Ring {
            field: self.field,
            nvars,
        };
        self.matrix
            .iter()
            .map(|row| {
                let terms = row
                    .iter()
                    .enumerate()
                    .map(|(j, &c)| (c, Monomial::var(nvars, j)))
                    .collect();
                Polynomial::canonical(ring, MonomialOrder::Degrevlex, terms)
            })
            .collect()
    }
}

/// `φ(I)`: substitute the images of the variables into every generator.
/// When `φ` lives over an extension field the result does too.
pub fn apply_coordinate_change(ideal: &GradedIdeal, phi: &RandomCoordinateChange) -> Result<GradedIdeal> {
    let ring = ideal.ring();
    if !phi.field.contains(ring.field) {
        return Err(Error::FieldMismatch(phi.field.characteristic(), ring.characteristic()));
    }
    if phi.matrix.len() != ring.nvars {
        return Err(Error::ArityMismatch(phi.matrix.len(), ring.nvars));
    }
    let images = phi.images(ring.nvars);
    let target = Ring {
        field: phi.field,
        nvars: ring.nvars,
    };
    let moved = ideal
        .generators()
        .iter()
        .map(|g| g.lift(target).map(|h| h.substitute(&images)))
        .collect::<Result<Vec<_>>>()?;
    GradedIdeal::new(target, moved)
}

/// Outcome of sampling `in(φI)` over several random `φ`. Each `φ` is drawn
/// over the largest supported field of the ideal's characteristic, so a
/// small prime field does not force non-generic coordinates.
#[derive(Clone, Debug)]
pub struct GinSample {
    /// The most frequent initial ideal (earliest trial wins ties).
    pub ideal: MonomialIdeal,
    /// Every trial produced the same initial ideal.
    pub agreed: bool,
    /// Number of trials producing `ideal`.
    pub votes: usize,
    /// Per-trial seeds and initial ideals, in trial order.
    pub samples: Vec<(u64, MonomialIdeal)>,
}

/// Seed of trial `t` derived from the session seed.
pub fn trial_seed(seed: u64, t: usize) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut s = 0;
    for _ in 0..=t {
        s = rng.gen();
    }
    s
}

pub fn gin_sample(ideal: &GradedIdeal, order: MonomialOrder, seed: u64, trials: usize) -> Result<GinSample> {
    gin_sample_with_budget(ideal, order, seed, trials, &Budget::unlimited())
}

pub fn gin_sample_with_budget(
    ideal: &GradedIdeal,
    order: MonomialOrder,
    seed: u64,
    trials: usize,
    budget: &Budget,
) -> Result<GinSample> {
    if trials < 2 {
        return Err(Error::InvalidArgument("gin sampling needs at least two trials".into()));
    }
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let ring = ideal.ring();
    let mut samples = Vec::with_capacity(trials);
    for t in 0..trials {
        let s = trial_seed(seed, t);
        let phi = RandomCoordinateChange::sample(ring.field.generic_extension(), ring.nvars, s);
        let moved = apply_coordinate_change(ideal, &phi)?;
        samples.push((s, moved.initial_ideal_with_budget(order, budget)?));
    }
    let mut best = 0;
    let mut best_votes = 0;
    for (i, (_, m)) in samples.iter().enumerate() {
        let votes = samples.iter().filter(|(_, o)| o == m).count();
        if votes > best_votes {
            best = i;
            best_votes = votes;
        }
    }
    Ok(GinSample {
        ideal: samples[best].1.clone(),
        agreed: best_votes == trials,
        votes: best_votes,
        samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::tests::minors_2x4;

    #[test]
    fn identity_and_permutation() {
        let r = Ring::new(31013, 3).unwrap();
        let m = MonomialIdeal::from_exponents(3, &[&[2, 0, 0], &[0, 1, 1]]);
        let i = GradedIdeal::from_monomial_ideal(r, &m).unwrap();
        let id = RandomCoordinateChange::identity(r.field, 3);
        assert_eq!(apply_coordinate_change(&i, &id).unwrap(), i);
        let perm = RandomCoordinateChange::permutation(r.field, &[2, 0, 1]).unwrap();
        let moved = apply_coordinate_change(&i, &perm).unwrap().as_monomial_ideal().unwrap();
        // x1 -> x3, x2 -> x1, x3 -> x2
        assert_eq!(moved, MonomialIdeal::from_exponents(3, &[&[0, 0, 2], &[1, 1, 0]]));
        assert!(RandomCoordinateChange::from_matrix(r.field, vec![vec![1, 1], vec![2, 2]]).is_err());
    }

    #[test]
    fn sampling_is_deterministic_and_invertible() {
        let k = PrimeField::new(2).unwrap();
        let a = RandomCoordinateChange::sample(k, 6, 11);
        let b = RandomCoordinateChange::sample(k, 6, 11);
        assert_eq!(a, b);
        assert_eq!(rank(k, a.matrix()), 6);
    }

    #[test]
    fn hilbert_function_survives_coordinate_change() {
        let i = minors_2x4(31013);
        let phi = RandomCoordinateChange::sample(i.ring().field, 8, 5);
        let j = apply_coordinate_change(&i, &phi).unwrap();
        for d in 0..=6 {
            assert_eq!(i.graded_piece_dim(d), j.graded_piece_dim(d));
        }
    }

    #[test]
    fn gin_of_simple_ideals() {
        let r = Ring::new(31013, 3).unwrap();
        let x1 = GradedIdeal::from_monomial_ideal(r, &MonomialIdeal::variables(3, [0])).unwrap();
        let g = gin_sample(&x1, MonomialOrder::Degrevlex, 1, 3).unwrap();
        assert!(g.agreed);
        assert_eq!(g.ideal, MonomialIdeal::variables(3, [0]));
        let ci = MonomialIdeal::from_exponents(3, &[&[0, 1, 0], &[0, 0, 1], &[3, 0, 0]]);
        let ci = GradedIdeal::from_monomial_ideal(r, &ci).unwrap();
        let g = gin_sample(&ci, MonomialOrder::Degrevlex, 2, 3).unwrap();
        assert_eq!(g.ideal, MonomialIdeal::from_exponents(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 3]]));
        assert!(gin_sample(&ci, MonomialOrder::Degrevlex, 2, 1).is_err());
    }
}
