//! Finite sets with a periodic bijection and rational statistics.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exactalg::Rational;

/// A finite set `X = {0, ..., size-1}` with a bijection `T` satisfying
/// `T^n = Id` and `k` rational statistics.
///
/// `perm[x]` is the index of `T(x)`; `stats[x][i]` is `g_{i+1}(x)`. The
/// declared period need not be minimal.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteSystem {
    perm: Vec<usize>,
    period: u64,
    num_stats: usize,
    stats: Vec<Vec<Rational>>,
    labels: Option<Vec<String>>,
    stat_names: Option<Vec<String>>,
}

/// A single reason a [`FiniteSystem`] is malformed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    IndexOutOfRange { position: usize, value: usize },
    NotBijection { repeated: usize },
    ZeroPeriod,
    NotPeriodic { period: u64, element: usize },
    StatsRowCount { expected: usize, got: usize },
    StatsRowLength { row: usize, expected: usize, got: usize },
    LabelsLength { expected: usize, got: usize },
    StatNamesLength { expected: usize, got: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::IndexOutOfRange { position, value } => {
                write!(f, "not a bijection: perm[{position}] = {value} is out of range")
            }
            Violation::NotBijection { repeated } => {
                write!(f, "not a bijection: {repeated} is hit more than once")
            }
            Violation::ZeroPeriod => write!(f, "period must be positive"),
            Violation::NotPeriodic { period, element } => {
                write!(f, "T^n ≠ Id: T^{period}({element}) ≠ {element}")
            }
            Violation::StatsRowCount { expected, got } => {
                write!(f, "stats has {got} rows, expected {expected}")
            }
            Violation::StatsRowLength { row, expected, got } => {
                write!(f, "stats row {row} has {got} entries, expected {expected}")
            }
            Violation::LabelsLength { expected, got } => {
                write!(f, "{got} labels given for {expected} elements")
            }
            Violation::StatNamesLength { expected, got } => {
                write!(f, "{got} statistic names given for {expected} statistics")
            }
        }
    }
}

impl FiniteSystem {
    /// Builds and validates a system. The number of statistics is taken from
    /// the first row of `stats` (zero when `stats` is empty).
    pub fn new(perm: Vec<usize>, period: u64, stats: Vec<Vec<Rational>>) -> Result<Self> {
        let k = stats.first().map_or(0, Vec::len);
        let sys = Self::from_parts(perm, period, k, stats);
        sys.validate().map_err(Error::InvalidSystem)?;
        Ok(sys)
    }

    /// Builds a system without validating it. Analysis routines assume
    /// [`validate`](Self::validate) passes and may panic otherwise.
    pub fn from_parts(
        perm: Vec<usize>,
        period: u64,
        num_stats: usize,
        stats: Vec<Vec<Rational>>,
    ) -> Self {
        Self {
            perm,
            period,
            num_stats,
            stats,
            labels: None,
            stat_names: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.size() {
            return Err(Error::InvalidSystem(vec![Violation::LabelsLength {
                expected: self.size(),
                got: labels.len(),
            }]));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn with_stat_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.num_stats {
            return Err(Error::InvalidSystem(vec![Violation::StatNamesLength {
                expected: self.num_stats,
                got: names.len(),
            }]));
        }
        self.stat_names = Some(names);
        Ok(self)
    }

    /// Every violation found, or `Ok` for a well-formed system.
    pub fn validate(&self) -> std::result::Result<(), Vec<Violation>> {
        let n = self.perm.len();
        let mut out = Vec::new();

        let mut hit = vec![false; n];
        let mut in_range = true;
        for (position, &value) in self.perm.iter().enumerate() {
            if value >= n {
                out.push(Violation::IndexOutOfRange { position, value });
                in_range = false;
            } else if std::mem::replace(&mut hit[value], true) {
                if !out.contains(&Violation::NotBijection { repeated: value }) {
                    out.push(Violation::NotBijection { repeated: value });
                }
            }
        }

        if self.period == 0 {
            out.push(Violation::ZeroPeriod);
        } else if in_range {
            let image = self.perm_power(self.period);
            if let Some(element) = (0..n).find(|&x| image[x] != x) {
                out.push(Violation::NotPeriodic {
                    period: self.period,
                    element,
                });
            }
        }

        if self.stats.len() != n {
            out.push(Violation::StatsRowCount {
                expected: n,
                got: self.stats.len(),
            });
        }
        for (row, r) in self.stats.iter().enumerate() {
            if r.len() != self.num_stats {
                out.push(Violation::StatsRowLength {
                    row,
                    expected: self.num_stats,
                    got: r.len(),
                });
            }
        }
        if let Some(l) = &self.labels {
            if l.len() != n {
                out.push(Violation::LabelsLength { expected: n, got: l.len() });
            }
        }
        if let Some(s) = &self.stat_names {
            if s.len() != self.num_stats {
                out.push(Violation::StatNamesLength {
                    expected: self.num_stats,
                    got: s.len(),
                });
            }
        }

        if out.is_empty() {
            Ok(())
        } else {
            Err(out)
        }
    }

    /// `|X|`
    pub fn size(&self) -> usize {
        self.perm.len()
    }

    /// The declared period `n`.
    pub fn period(&self) -> u64 {
        self.period
    }

    /// The number of statistics `k`.
    pub fn num_stats(&self) -> usize {
        self.num_stats
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn apply(&self, x: usize) -> usize {
        self.perm[x]
    }

    /// `T^j` as an index map. Repeated squaring; `perm_power(0)` is the
    /// identity.
    pub fn perm_power(&self, mut j: u64) -> Vec<usize> {
        let n = self.perm.len();
        let mut acc: Vec<usize> = (0..n).collect();
        let mut base = self.perm.clone();
        while j > 0 {
            if j & 1 == 1 {
                acc = acc.iter().map(|&x| base[x]).collect();
            }
            j >>= 1;
            if j > 0 {
                base = base.iter().map(|&x| base[x]).collect();
            }
        }
        acc
    }

    /// Rows are elements, columns are statistics.
    pub fn stats(&self) -> &[Vec<Rational>] {
        &self.stats
    }

    pub fn stat(&self, x: usize, i: usize) -> &Rational {
        &self.stats[x][i]
    }

    /// The value vector of statistic `i` (0-based).
    pub fn stat_column(&self, i: usize) -> Vec<Rational> {
        self.stats.iter().map(|r| r[i].clone()).collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display label of element `x`, falling back to its index.
    pub fn label(&self, x: usize) -> String {
        self.labels
            .as_ref()
            .map_or_else(|| x.to_string(), |l| l[x].clone())
    }

    /// Statistic names, defaulting to `g1, g2, ...`.
    pub fn stat_names(&self) -> Vec<String> {
        self.stat_names
            .clone()
            .unwrap_or_else(|| (1..=self.num_stats).map(|i| format!("g{i}")).collect())
    }

    pub fn has_stat_names(&self) -> bool {
        self.stat_names.is_some()
    }

    /// Cycle decomposition of `T`.
    pub fn orbits(&self) -> OrbitDecomposition {
        let n = self.size();
        let mut seen = vec![false; n];
        let mut orbits = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.perm[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.perm[x];
            }
            orbits.push(cycle);
        }
        OrbitDecomposition { orbits }
    }

    /// The least `m >= 1` with `T^m = Id`, i.e. the lcm of the orbit sizes.
    pub fn minimal_period(&self) -> u64 {
        self.orbits()
            .sizes()
            .into_iter()
            .fold(1u64, |acc, s| acc.lcm(&(s as u64)))
    }
}

/// The orbits of `T`, each listed in forward order from its smallest index,
/// sorted by smallest index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDecomposition {
    orbits: Vec<Vec<usize>>,
}

impl OrbitDecomposition {
    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(Vec::len).collect()
    }

    /// For each element, the index of the orbit containing it.
    pub fn orbit_index(&self) -> Vec<usize> {
        let n = self.orbits.iter().map(Vec::len).sum();
        let mut idx = vec![0; n];
        for (o, orbit) in self.orbits.iter().enumerate() {
            for &x in orbit {
                idx[x] = o;
            }
        }
        idx
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<Vec<Rational>> {
        v.iter().map(|&x| vec![rational(x, 1)]).collect()
    }

    #[test]
    fn wrong_period_is_reported() {
        // 3-cycle declared with period 2
        let sys = FiniteSystem::from_parts(vec![1, 2, 0], 2, 1, ints(&[0, 1, 2]));
        let v = sys.validate().unwrap_err();
        assert_eq!(v, vec![Violation::NotPeriodic { period: 2, element: 0 }]);
        assert!(v[0].to_string().starts_with("T^n ≠ Id"));
    }

    #[test]
    fn non_bijection_is_reported() {
        let sys = FiniteSystem::from_parts(vec![0, 0], 1, 1, ints(&[1, 2]));
        let v = sys.validate().unwrap_err();
        assert!(v.contains(&Violation::NotBijection { repeated: 0 }));
        assert!(v.iter().any(|x| x.to_string().starts_with("not a bijection")));
    }

    #[test]
    fn all_violations_are_collected() {
        let sys = FiniteSystem::from_parts(
            vec![0, 5],
            0,
            2,
            vec![vec![rational(1, 1)]],
        );
        let v = sys.validate().unwrap_err();
        assert_eq!(v.len(), 4, "{v:?}");
        assert!(v.contains(&Violation::IndexOutOfRange { position: 1, value: 5 }));
        assert!(v.contains(&Violation::ZeroPeriod));
        assert!(v.contains(&Violation::StatsRowCount { expected: 2, got: 1 }));
        assert!(v.contains(&Violation::StatsRowLength { row: 0, expected: 2, got: 1 }));
    }

    #[test]
    fn identity_orbits() {
        let sys = FiniteSystem::new((0..5).collect(), 1, ints(&[0, 1, 2, 3, 4])).unwrap();
        let o = sys.orbits();
        assert_eq!(o.orbits(), &[vec![0], vec![1], vec![2], vec![3], vec![4]]);
        assert_eq!(sys.minimal_period(), 1);
    }

    #[test]
    fn labels_and_names() {
        let sys = FiniteSystem::new(vec![1, 0], 2, ints(&[1, -1])).unwrap();
        assert_eq!(sys.label(1), "1");
        assert_eq!(sys.stat_names(), vec!["g1"]);
        let sys = sys.with_labels(vec!["a".into(), "b".into()]).unwrap();
        assert_eq!(sys.label(1), "b");
        assert!(sys.clone().with_labels(vec!["a".into()]).is_err());
        assert!(sys.with_stat_names(vec!["x".into(), "y".into()]).is_err());
    }

    #[test]
    fn empty_system() {
        let sys = FiniteSystem::new(vec![], 3, vec![]).unwrap();
        assert!(sys.orbits().is_empty());
        assert_eq!(sys.minimal_period(), 1);
    }

    fn random_perm() -> impl Strategy<Value = Vec<usize>> {
        (1usize..30).prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    }

    proptest! {
        #[test]
        fn orbits_partition(perm in random_perm()) {
            let n = perm.len();
            let probe = FiniteSystem::from_parts(perm.clone(), 1, 0, vec![vec![]; n]);
            let period = probe.minimal_period();
            let sys = FiniteSystem::from_parts(perm, period, 0, vec![vec![]; n]);
            prop_assert!(sys.validate().is_ok());
            let o = sys.orbits();
            prop_assert_eq!(o.sizes().iter().sum::<usize>(), n);
            let mut all: Vec<usize> = o.orbits().concat();
            all.sort_unstable();
            prop_assert_eq!(all, (0..n).collect::<Vec<_>>());
            for orbit in o.orbits() {
                prop_assert_eq!(orbit[0], *orbit.iter().min().unwrap());
                for w in orbit.windows(2) {
                    prop_assert_eq!(sys.apply(w[0]), w[1]);
                }
                prop_assert_eq!(period % orbit.len() as u64, 0);
            }
            let firsts: Vec<usize> = o.orbits().iter().map(|c| c[0]).collect();
            prop_assert!(firsts.windows(2).all(|w| w[0] < w[1]));
            // declaring a multiple of the minimal period is still valid
            let doubled = FiniteSystem::from_parts(sys.perm().to_vec(), 2 * period, 0, vec![vec![]; n]);
            prop_assert!(doubled.validate().is_ok());
            prop_assert_eq!(doubled.minimal_period(), period);
        }
    }
}
