use num_traits::{One, Zero};

use crate::dynsys::FiniteSystem;
use crate::error::{Error, Result};
use crate::exactalg::{ExactMatrix, Rational};

use super::presenting::presenting_matrix;

/// `U f = f ∘ T` as a value vector.
pub fn compose_with_map(sys: &FiniteSystem, f: &[Rational]) -> Vec<Rational> {
    (0..sys.size()).map(|x| f[sys.apply(x)].clone()).collect()
}

fn orbit_sums(sys: &FiniteSystem, f: &[Rational]) -> Vec<Rational> {
    sys.orbits()
        .orbits()
        .iter()
        .map(|o| o.iter().fold(Rational::zero(), |acc, &x| acc + &f[x]))
        .collect()
}

/// Exact average of `f` over each orbit, dividing by the orbit size.
pub fn orbit_averages(sys: &FiniteSystem, f: &[Rational]) -> Vec<Rational> {
    let orbits = sys.orbits();
    orbit_sums(sys, f)
        .into_iter()
        .zip(orbits.sizes())
        .map(|(s, len)| s / Rational::from_integer(len.into()))
        .collect()
}

/// `Some(c)` if every orbit average of `f` equals `c`. A system without
/// orbits has no well-defined `c` and yields `None`.
pub fn homomesy_of_function(sys: &FiniteSystem, f: &[Rational]) -> Option<Rational> {
    let avgs = orbit_averages(sys, f);
    let first = avgs.first()?;
    avgs.iter().all(|a| a == first).then(|| first.clone())
}

/// Homomesy test for `f = Σ coeffs[j·k + i] U^j g_{i+1}`.
pub fn homomesy_value(sys: &FiniteSystem, coeffs: &[Rational]) -> Result<Option<Rational>> {
    let pm = presenting_matrix(sys);
    let m = pm.matrix();
    if coeffs.len() != m.cols() {
        return Err(Error::LengthMismatch {
            expected: m.cols(),
            got: coeffs.len(),
        });
    }
    let f: Vec<Rational> = (0..m.rows())
        .map(|x| {
            m.row(x)
                .iter()
                .zip(coeffs)
                .fold(Rational::zero(), |acc, (a, c)| acc + a * c)
        })
        .collect();
    Ok(homomesy_of_function(sys, &f))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StatisticVerdict {
    Invariant,
    Mesic(Rational),
    Neither,
}

#[derive(Clone, Debug, PartialEq)]
pub struct StatisticReport {
    pub name: String,
    /// Constant on every orbit.
    pub invariant: bool,
    /// The common orbit average, if there is one.
    pub mesic: Option<Rational>,
    pub orbit_averages: Vec<Rational>,
}

impl StatisticReport {
    /// Invariance wins when a statistic is both (i.e. constant).
    pub fn verdict(&self) -> StatisticVerdict {
        match (&self.invariant, &self.mesic) {
            (true, _) => StatisticVerdict::Invariant,
            (false, Some(c)) => StatisticVerdict::Mesic(c.clone()),
            (false, None) => StatisticVerdict::Neither,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct HomomesyReport {
    pub statistics: Vec<StatisticReport>,
}

pub fn statistic_report(sys: &FiniteSystem) -> HomomesyReport {
    let names = sys.stat_names();
    let statistics = (0..sys.num_stats())
        .map(|i| {
            let g = sys.stat_column(i);
            let invariant = (0..sys.size()).all(|x| g[sys.apply(x)] == g[x]);
            StatisticReport {
                name: names[i].clone(),
                invariant,
                mesic: homomesy_of_function(sys, &g),
                orbit_averages: orbit_averages(sys, &g),
            }
        })
        .collect();
    HomomesyReport { statistics }
}

/// A basis of `{a ∈ Q^k : Σ a_i g_i is 0-mesic}`: the nullspace of the
/// orbits × statistics matrix of orbit sums.
pub fn zero_mesic_original_combos(sys: &FiniteSystem) -> Vec<Vec<Rational>> {
    let k = sys.num_stats();
    let columns: Vec<Vec<Rational>> = (0..k).map(|i| orbit_sums(sys, &sys.stat_column(i))).collect();
    let rows = sys.orbits().len();
    if rows == 0 {
        return (0..k)
            .map(|i| (0..k).map(|c| if c == i { Rational::one() } else { Rational::zero() }).collect())
            .collect();
    }
    ExactMatrix::from_columns(rows, &columns).nullspace_basis()
}

/// For 0-mesic `f`, returns `g` with `f = g - g ∘ T`, namely `g = -h/n` with
/// `h = Σ_{j<n} (j+1) f ∘ T^j`.
pub fn coboundary_witness(sys: &FiniteSystem, f: &[Rational]) -> Result<Vec<Rational>> {
    if f.len() != sys.size() {
        return Err(Error::LengthMismatch {
            expected: sys.size(),
            got: f.len(),
        });
    }
    if let Some((orbit, sum)) = orbit_sums(sys, f)
        .into_iter()
        .enumerate()
        .find(|(_, s)| !s.is_zero())
    {
        return Err(Error::NotZeroMesic {
            orbit,
            sum: sum.to_string(),
        });
    }
    let n = sys.period();
    let mut h = vec![Rational::zero(); sys.size()];
    let mut shifted = f.to_vec();
    for j in 0..n {
        let weight = Rational::from_integer((j + 1).into());
        for (hx, fx) in h.iter_mut().zip(&shifted) {
            *hx += fx * &weight;
        }
        shifted = compose_with_map(sys, &shifted);
    }
    let scale = -Rational::one() / Rational::from_integer(n.into());
    Ok(h.into_iter().map(|v| v * &scale).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational;
    use crate::systems::{chain_rowmotion, multiset_rotation, negation_system};

    fn q(p: i64) -> Rational {
        rational(p, 1)
    }

    fn unit(len: usize, at: &[(usize, i64)]) -> Vec<Rational> {
        let mut v = vec![q(0); len];
        for &(i, c) in at {
            v[i] = q(c);
        }
        v
    }

    #[test]
    fn homomesy_values() {
        let sys = chain_rowmotion(3, 3).unwrap();
        assert_eq!(homomesy_value(&sys, &unit(12, &[(1, 1)])).unwrap(), Some(q(1)));

        let sys = multiset_rotation(3, 2).unwrap();
        assert_eq!(homomesy_value(&sys, &unit(6, &[(0, 1), (1, 1)])).unwrap(), Some(q(2)));
        assert_eq!(homomesy_value(&sys, &unit(6, &[(0, 1)])).unwrap(), None);
        assert!(homomesy_value(&sys, &unit(5, &[])).is_err());
    }

    #[test]
    fn g1_orbit_averages_for_3_2() {
        let sys = multiset_rotation(3, 2).unwrap();
        let avgs = orbit_averages(&sys, &sys.stat_column(0));
        // orbits {00, 11, 22} and {01, 12, 02}
        assert_eq!(avgs, vec![q(1), rational(1, 3)]);
    }

    #[test]
    fn reports() {
        let sys = chain_rowmotion(4, 2).unwrap();
        let r = statistic_report(&sys);
        assert_eq!(r.statistics[0].verdict(), StatisticVerdict::Mesic(q(1)));
        assert_eq!(r.statistics[1].verdict(), StatisticVerdict::Mesic(q(2)));

        let sys = multiset_rotation(3, 2).unwrap();
        let r = statistic_report(&sys);
        assert!(r.statistics.iter().all(|s| s.verdict() == StatisticVerdict::Neither));

        let id = FiniteSystem::new(
            vec![0, 1, 2],
            1,
            vec![vec![q(1), q(5)], vec![q(2), q(5)], vec![q(7), q(5)]],
        )
        .unwrap();
        let r = statistic_report(&id);
        assert!(r.statistics.iter().all(|s| s.verdict() == StatisticVerdict::Invariant));
        // the constant statistic is also 5-mesic
        assert_eq!(r.statistics[1].mesic, Some(q(5)));
    }

    #[test]
    fn zero_mesic_combos() {
        assert_eq!(zero_mesic_original_combos(&negation_system()), vec![vec![q(1)]]);
        assert!(zero_mesic_original_combos(&multiset_rotation(3, 2).unwrap()).is_empty());
        let combos = zero_mesic_original_combos(&chain_rowmotion(3, 3).unwrap());
        assert_eq!(combos.len(), 2);
        // c_i = i/2, so Σ a_i c_i = 0
        for a in &combos {
            let s: Rational = a
                .iter()
                .enumerate()
                .map(|(i, ai)| ai * rational(i as i64 + 1, 2))
                .sum();
            assert!(s.is_zero());
        }
    }

    #[test]
    fn witnesses() {
        let sys = negation_system();
        let g = coboundary_witness(&sys, &[q(1), q(-1)]).unwrap();
        assert_eq!(g, vec![rational(1, 2), rational(-1, 2)]);

        assert_eq!(coboundary_witness(&sys, &[q(0), q(0)]).unwrap(), vec![q(0), q(0)]);

        let sys = multiset_rotation(3, 2).unwrap();
        let f: Vec<Rational> = (0..sys.size())
            .map(|x| sys.stat(x, 0) + sys.stat(x, 1) - q(2))
            .collect();
        let g = coboundary_witness(&sys, &f).unwrap();
        let ug = compose_with_map(&sys, &g);
        for x in 0..sys.size() {
            assert_eq!(&g[x] - &ug[x], f[x]);
        }

        let err = coboundary_witness(&sys, &sys.stat_column(0)).unwrap_err();
        assert!(matches!(err, Error::NotZeroMesic { .. }));
    }
}
