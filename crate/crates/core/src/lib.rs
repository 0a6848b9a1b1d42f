//! Exact linearization of finite periodic dynamical systems.
//!
//! Given a finite set `X`, a bijection `T` with `T^n = Id`, and rational
//! statistics `g_1, ..., g_k`, the functions `g_i ∘ T^j` span a finite
//! dimensional space `V` on which `U f = f ∘ T` acts with `U^n = I`. This
//! crate computes that space and the eigenvalue multiplicities of `U`
//! exactly, over `Q` and over cyclotomic fields, and uses them to find
//! invariants, homomesies and coboundary witnesses.
//!
//! Modules:
//!
//! - [`exactalg`]: rationals, cyclotomic numbers, exact matrices (rank,
//!   nullspace, column bases).
//! - [`dynsys`]: the [`FiniteSystem`] data model, validation and orbits.
//! - [`linearize`]: presenting matrix, spectrum, invariant bases, homomesy
//!   detection, coboundaries, product extension and flatness.
//! - [`systems`]: built-in families (multiset rotation, chain rowmotion, ...)
//!   and the NESW determinant machinery.
//! - [`checks`]: reference checks of the engine against closed forms.
//! - [`plrowmotion`]: the piecewise-linear rowmotion lift on the order
//!   polytope of `[2]×[2]` and the Lyness 5-cycle exponent action.

pub mod checks;
pub mod dynsys;
pub mod error;
pub mod exactalg;
pub mod linearize;
pub mod plrowmotion;
pub mod systems;

pub use dynsys::{FiniteSystem, OrbitDecomposition, Violation};
pub use error::{Error, Result};
pub use exactalg::{CycField, CycNumber, ExactMatrix, Field, Rational};
pub use linearize::{
    EigenBasis, FlatnessReport, HomomesyReport, PresentingMatrix, Spectrum, SpectrumMethod,
    StatisticVerdict,
};
pub use plrowmotion::{ExpVector, PolytopePoint, TransferLift};
