use std::collections::HashSet;

use crate::dynsys::FiniteSystem;
use crate::exactalg::Rational;

use super::presenting::presenting_matrix;

/// The same `X`, `T` and `n` with statistics `{U^j g_i}` together with every
/// pairwise product (squares included) of those functions. Statistics with
/// identical value vectors are kept only once, first occurrence winning.
pub fn extend_products(sys: &FiniteSystem) -> FiniteSystem {
    let pm = presenting_matrix(sys);
    let m = pm.matrix();
    let k = sys.num_stats();
    let names = sys.stat_names();
    let spanning: Vec<(String, Vec<Rational>)> = (0..m.cols())
        .map(|c| {
            let (j, i) = (c / k, c % k);
            let name = match j {
                0 => names[i].clone(),
                1 => format!("U{}", names[i]),
                _ => format!("U^{j}{}", names[i]),
            };
            (name, m.column(c))
        })
        .collect();

    let mut seen: HashSet<Vec<Rational>> = HashSet::new();
    let mut out: Vec<(String, Vec<Rational>)> = Vec::new();
    let mut push = |name: String, values: Vec<Rational>| {
        if seen.insert(values.clone()) {
            out.push((name, values));
        }
    };
    for (name, values) in &spanning {
        push(name.clone(), values.clone());
    }
    for a in 0..spanning.len() {
        for b in a..spanning.len() {
            let values = spanning[a]
                .1
                .iter()
                .zip(&spanning[b].1)
                .map(|(x, y)| x * y)
                .collect();
            push(format!("{}*{}", spanning[a].0, spanning[b].0), values);
        }
    }

    let stats = (0..sys.size())
        .map(|x| out.iter().map(|(_, v)| v[x].clone()).collect())
        .collect();
    let names = out.iter().map(|(n, _)| n.clone()).collect();
    let ext = FiniteSystem::from_parts(sys.perm().to_vec(), sys.period(), out.len(), stats)
        .with_stat_names(names)
        .expect("one name per statistic");
    match sys.labels() {
        Some(l) => ext.with_labels(l.to_vec()).expect("same element count"),
        None => ext,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rational, ExactMatrix};
    use crate::linearize::presenting_matrix;
    use crate::systems::multiset_rotation;

    fn in_invariant_span(sys: &FiniteSystem, f: &[Rational]) -> bool {
        let m1 = presenting_matrix(sys).invariant_matrix();
        let with = m1.hconcat(&ExactMatrix::from_columns(sys.size(), &[f.to_vec()]));
        with.rank() == m1.rank()
    }

    #[test]
    fn quadratic_invariant_for_2_2() {
        let sys = multiset_rotation(2, 2).unwrap();
        let ext = extend_products(&sys);
        assert!(ext.validate().is_ok());
        let f = vec![rational(0, 1), rational(1, 1), rational(0, 1)];
        assert!(in_invariant_span(&ext, &f));
    }

    #[test]
    fn deduplicates_zero_one_squares() {
        let sys = multiset_rotation(2, 2).unwrap();
        let ext = extend_products(&sys);
        // g_i^2 = g_i for 0/1 statistics
        let names = ext.stat_names();
        assert!(!names.contains(&"g1*g1".to_string()));
        let cols: Vec<Vec<Rational>> = (0..ext.num_stats()).map(|i| ext.stat_column(i)).collect();
        let unique: HashSet<_> = cols.iter().collect();
        assert_eq!(unique.len(), cols.len());
    }

    #[test]
    fn sum_times_shifted_sum_is_orbit_constant_for_2_3() {
        let sys = multiset_rotation(2, 3).unwrap();
        let s: Vec<Rational> = (0..sys.size())
            .map(|x| sys.stats()[x].iter().sum())
            .collect();
        let q: Vec<Rational> = (0..sys.size()).map(|x| &s[x] * &s[sys.apply(x)]).collect();
        for o in sys.orbits().orbits() {
            assert!(o.iter().all(|&x| q[x] == q[o[0]]));
        }
        assert!(in_invariant_span(&extend_products(&sys), &q));
    }
}
