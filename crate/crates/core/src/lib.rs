pub mod betti;
pub mod budget;
pub mod error;
pub mod field;
pub mod groebner;
pub mod linalg;
pub mod monomial;
pub mod monomial_ideal;
pub mod polynomial;
pub mod simplicial;
pub mod matrix;
pub mod resolution;
pub mod criteria;
pub mod classifiers;
pub mod cli;
