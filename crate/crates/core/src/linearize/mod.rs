//! Linearization of a finite periodic system: the presenting matrix, the
//! eigenvalue multiplicities of the time-evolution operator `U f = f ∘ T`,
//! invariant and 0-mesic bases, homomesy detection, coboundary witnesses,
//! the degree-two product extension and the flatness summary.
//!
//! Functions on `X` are handled extensionally as value vectors of length
//! `|X|`.

mod flatness;
mod mesy;
mod presenting;
mod products;
mod spectrum;

pub use flatness::{flatness_report, FlatnessReport};
pub use mesy::{
    coboundary_witness, compose_with_map, homomesy_of_function, homomesy_value, orbit_averages,
    statistic_report, zero_mesic_original_combos, HomomesyReport, StatisticReport,
    StatisticVerdict,
};
pub use presenting::{
    dynamical_dimension, presenting_matrix, zero_mesic_dimension, zeta_root, PresentingMatrix,
};
pub use products::extend_products;
pub use spectrum::{eigen_basis, invariant_basis, spectrum, EigenBasis, Spectrum, SpectrumMethod};
