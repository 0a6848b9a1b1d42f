//! Built-in systems: multiset rotation, rowmotion in a chain, rotation of
//! distinct multisets, the two-point negation map, and the NESW determinants
//! that control the multiset rotation spectrum.

mod multiset;
mod nesw;

pub use multiset::{
    chain_reflection, chain_rowmotion, distinct_multiset_rotation, enumerate_multisets,
    multiset_rotation, negation_system, Multiset,
};
pub use nesw::{
    nesw_det_closed_form, nesw_entries, nesw_matrix, nesw_recurrence_check, nesw_zone,
    NeswEntries, NeswMatrix, Zone,
};
