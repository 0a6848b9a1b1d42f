//! Two continuous examples: piecewise-linear rowmotion on the order polytope
//! of `[2]×[2]` with its 6-dimensional linear lift, and the Lyness 5-cycle
//! acting on monomial exponent vectors.

mod lyness;
mod transfer;

pub use lyness::{
    exponent_orbit_sum, int_matrix_pow, lyness_homomesy_check, lyness_map, lyness_matrix, lyness_numeric_orbit_sum,
    lyness_orbit, lyness_pullback, lyness_spectrum, monomial, random_lyness_seeds, ExpVector,
    IntMatrix, LYNESS_TOLERANCE,
};
pub use transfer::{
    delta_inv, extend4, lift_consistency_check, lift_holds_at, lifted_delta_inv, lifted_nabla,
    lifted_theta, nabla, pl_rowmotion, polytope_vertices, random_polytope_points,
    rowmotion_lift, theta, ExtendedPoint, PolytopePoint, Quad, TransferLift,
};
