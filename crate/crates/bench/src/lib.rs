//! Benchmark fixtures shared by the criterion targets.

use dynspan::systems::{chain_rowmotion, multiset_rotation};
use dynspan::FiniteSystem;

/// Systems of increasing size used across benchmarks, with a short label.
pub fn fixtures() -> Vec<(String, FiniteSystem)> {
    [(2, 8), (3, 4), (4, 4), (5, 5), (6, 6)]
        .into_iter()
        .map(|(n, k)| (format!("multiset_{n}_{k}"), multiset_rotation(n, k).unwrap()))
        .chain([(4, 4), (5, 5)].into_iter().map(|(n, k)| {
            (format!("chain_{n}_{k}"), chain_rowmotion(n, k).unwrap())
        }))
        .collect()
}
