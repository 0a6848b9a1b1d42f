use std::collections::HashMap;

use crate::dynsys::FiniteSystem;
use crate::error::{Error, Result};
use crate::exactalg::{rational, Rational};

/// A `k`-element multiset of `{0, ..., n-1}`, stored as its weakly
/// increasing entry sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multiset {
    entries: Vec<u32>,
}

impl Multiset {
    pub fn new(mut entries: Vec<u32>, n: u32) -> Result<Self> {
        if let Some(&bad) = entries.iter().find(|&&x| x >= n) {
            return Err(Error::InvalidParameters(format!(
                "multiset entry {bad} is not below {n}"
            )));
        }
        entries.sort_unstable();
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `x_i` for `0 <= i <= k+1`, with `x_0 = 0` and `x_{k+1} = n-1`.
    fn bounded(&self, i: usize, n: u32) -> i64 {
        if i == 0 {
            0
        } else if i > self.entries.len() {
            i64::from(n) - 1
        } else {
            i64::from(self.entries[i - 1])
        }
    }

    /// Increment every element mod `n`.
    pub fn rotate(&self, n: u32) -> Self {
        let mut entries: Vec<u32> = self.entries.iter().map(|&x| (x + 1) % n).collect();
        entries.sort_unstable();
        Self { entries }
    }

    pub fn label(&self, n: u32) -> String {
        if n <= 10 {
            self.entries.iter().map(|x| x.to_string()).collect()
        } else {
            let parts: Vec<String> = self.entries.iter().map(|x| x.to_string()).collect();
            parts.join(",")
        }
    }
}

/// All `k`-element multisets of `{0, ..., n-1}` in lexicographic order.
pub fn enumerate_multisets(n: u32, k: usize) -> Vec<Multiset> {
    fn go(n: u32, k: usize, lo: u32, cur: &mut Vec<u32>, out: &mut Vec<Multiset>) {
        if cur.len() == k {
            out.push(Multiset { entries: cur.clone() });
            return;
        }
        for v in lo..n {
            cur.push(v);
            go(n, k, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

fn enumerate_subsets(n: u32, k: usize) -> Vec<Multiset> {
    enumerate_multisets(n, k)
        .into_iter()
        .filter(|m| m.entries.windows(2).all(|w| w[0] < w[1]))
        .collect()
}

/// System on a list of multisets closed under `map`, with `g_i` the i-th
/// smallest entry.
fn build(
    elements: Vec<Multiset>,
    n: u32,
    k: usize,
    period: u64,
    map: impl Fn(&Multiset) -> Multiset,
) -> Result<FiniteSystem> {
    let index: HashMap<&Multiset, usize> =
        elements.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let perm = elements
        .iter()
        .map(|m| index[&map(m)])
        .collect::<Vec<_>>();
    let stats: Vec<Vec<Rational>> = elements
        .iter()
        .map(|m| m.entries.iter().map(|&x| rational(x.into(), 1)).collect())
        .collect();
    let labels = elements.iter().map(|m| m.label(n)).collect();
    let names = (1..=k).map(|i| format!("g{i}")).collect();
    let sys = FiniteSystem::from_parts(perm, period, k, stats)
        .with_labels(labels)?
        .with_stat_names(names)?;
    sys.validate().map_err(Error::InvalidSystem)?;
    Ok(sys)
}

fn check_bounds(n: u32, k: usize) -> Result<()> {
    if n < 2 || k < 2 {
        return Err(Error::InvalidParameters(format!(
            "need n >= 2 and k >= 2, got n = {n}, k = {k}"
        )));
    }
    Ok(())
}

/// The rotation `T_{n,k}` on `k`-element multisets of `{0, ..., n-1}`,
/// incrementing each element mod `n`, with period `n`.
pub fn multiset_rotation(n: u32, k: usize) -> Result<FiniteSystem> {
    check_bounds(n, k)?;
    build(enumerate_multisets(n, k), n, k, n.into(), |m| m.rotate(n))
}

/// Rotation restricted to multisets whose elements are distinct.
pub fn distinct_multiset_rotation(n: u32, k: usize) -> Result<FiniteSystem> {
    if n < 1 || k < 1 || k > n as usize {
        return Err(Error::InvalidParameters(format!(
            "need 1 <= k <= n, got n = {n}, k = {k}"
        )));
    }
    build(enumerate_subsets(n, k), n, k, n.into(), |m| m.rotate(n))
}

/// The reflection `ρ_i` (1-based `i`), replacing `x_i` by
/// `x_{i-1} + x_{i+1} - x_i` with boundary values `x_0 = 0`, `x_{k+1} = n-1`.
pub fn chain_reflection(n: u32, i: usize, x: &Multiset) -> Result<Multiset> {
    let k = x.len();
    if i == 0 || i > k {
        return Err(Error::InvalidParameters(format!(
            "reflection index {i} outside 1..={k}"
        )));
    }
    if x.entries.iter().any(|&v| v >= n) {
        return Err(Error::InvalidParameters(format!(
            "multiset {:?} has entries not below {n}",
            x.entries
        )));
    }
    let v = x.bounded(i - 1, n) + x.bounded(i + 1, n) - x.bounded(i, n);
    let mut entries = x.entries.clone();
    entries[i - 1] = u32::try_from(v).expect("reflection stays within the neighbours");
    Ok(Multiset { entries })
}

/// The Coxeter element `γ_{n,k} = ρ_k ∘ ... ∘ ρ_1` applied via the left to
/// right update `x'_i = x'_{i-1} + x_{i+1} - x_i`.
fn coxeter(n: u32, x: &Multiset) -> Multiset {
    let k = x.len();
    let mut new = vec![0i64; k + 1];
    for i in 1..=k {
        new[i] = new[i - 1] + x.bounded(i + 1, n) - x.bounded(i, n);
    }
    Multiset {
        entries: new[1..].iter().map(|&v| v as u32).collect(),
    }
}

/// Rowmotion in a chain: `γ_{n,k}` on `k`-element multisets of
/// `{0, ..., n-1}`, declared with period `k+1`.
pub fn chain_rowmotion(n: u32, k: usize) -> Result<FiniteSystem> {
    check_bounds(n, k)?;
    build(enumerate_multisets(n, k), n, k, k as u64 + 1, |m| coxeter(n, m))
}

/// `X = {1, -1}`, `T(x) = -x`, one statistic `g(x) = x`, period 2.
pub fn negation_system() -> FiniteSystem {
    FiniteSystem::from_parts(
        vec![1, 0],
        2,
        1,
        vec![vec![rational(1, 1)], vec![rational(-1, 1)]],
    )
    .with_labels(vec!["1".into(), "-1".into()])
    .and_then(|s| s.with_stat_names(vec!["x".into()]))
    .expect("static shape")
}
