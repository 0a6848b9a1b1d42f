use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::dynsys::FiniteSystem;
use crate::exactalg::{divisors, euler_phi, gcd, mobius, CycNumber, Rational};

use super::presenting::{presenting_matrix, zeta_root};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpectrumMethod {
    /// Ranks of block sums over `Q` for each divisor of `n`, followed by
    /// Möbius inversion. Valid because rational statistics force
    /// Galois-conjugate roots to share a multiplicity.
    Galois,
    /// `rank(M_ζ)` over `Q(ζ)` separately for every `n`-th root `ζ`.
    Cyclotomic,
}

/// Multiplicity of each `n`-th root of unity as an eigenvalue of `U` on `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    order: u64,
    mults: Vec<usize>,
}

impl Spectrum {
    pub fn from_multiplicities(mults: Vec<usize>) -> Self {
        assert!(!mults.is_empty(), "spectrum of period 0");
        Self {
            order: mults.len() as u64,
            mults,
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Entry `j` is the multiplicity of `e^{2πi j/n}`.
    pub fn multiplicities(&self) -> &[usize] {
        &self.mults
    }

    pub fn multiplicity(&self, j: u64) -> usize {
        self.mults[(j % self.order) as usize]
    }

    /// Multiplicative order of `e^{2πi j/n}`.
    pub fn root_order(&self, j: u64) -> u64 {
        self.order / gcd(j % self.order, self.order)
    }

    /// For each `d | n`, the common multiplicity of the primitive `d`-th roots.
    pub fn by_divisor(&self) -> BTreeMap<u64, usize> {
        divisors(self.order)
            .into_iter()
            .map(|d| (d, self.mults[((self.order / d) % self.order) as usize]))
            .collect()
    }

    /// `dim V`.
    pub fn total(&self) -> usize {
        self.mults.iter().sum()
    }

    /// `dim V_1`.
    pub fn unital(&self) -> usize {
        self.mults[0]
    }

    /// `dim V_1^⊥`.
    pub fn nonunital_total(&self) -> usize {
        self.mults[1..].iter().sum()
    }

    /// Whether multiplicities depend only on `gcd(j, n)`.
    pub fn has_galois_symmetry(&self) -> bool {
        (0..self.order).all(|j| {
            self.mults[j as usize] == self.mults[(gcd(j, self.order) % self.order) as usize]
        })
    }
}

pub fn spectrum(sys: &FiniteSystem, method: SpectrumMethod) -> Spectrum {
    match method {
        SpectrumMethod::Galois => galois_spectrum(sys),
        SpectrumMethod::Cyclotomic => cyclotomic_spectrum(sys),
    }
}

fn galois_spectrum(sys: &FiniteSystem) -> Spectrum {
    let n = sys.period();
    let pm = presenting_matrix(sys);
    let divs = divisors(n);
    // f(d) = dim of the invariants of U^d = Σ_{e | d} φ(e) m_e
    let f: BTreeMap<u64, i64> = divs
        .par_iter()
        .map(|&d| (d, pm.block_sums(d as usize).rank() as i64))
        .collect();
    let m: BTreeMap<u64, usize> = divs
        .iter()
        .map(|&e| {
            let total: i64 = divisors(e).into_iter().map(|d| mobius(e / d) * f[&d]).sum();
            let phi = euler_phi(e) as i64;
            assert!(
                total >= 0 && total % phi == 0,
                "inconsistent invariant dimensions for order {e}: {total} / {phi}"
            );
            (e, (total / phi) as usize)
        })
        .collect();
    Spectrum::from_multiplicities((0..n).map(|j| m[&(n / gcd(j, n))]).collect())
}

fn cyclotomic_spectrum(sys: &FiniteSystem) -> Spectrum {
    let pm = presenting_matrix(sys);
    let mults = (0..sys.period())
        .into_par_iter()
        .map(|j| pm.zeta_matrix(j).rank())
        .collect();
    Spectrum::from_multiplicities(mults)
}

/// A basis of the `ζ`-eigenspace `V_ζ`, `ζ = e^{2πi j/n}`, extracted from the
/// spanning `ζ`-eigenfunctions.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenBasis {
    pub exponent: u64,
    pub eigenvalue: CycNumber,
    pub basis: Vec<Vec<CycNumber>>,
}

pub fn eigen_basis(sys: &FiniteSystem, j: u64) -> EigenBasis {
    let pm = presenting_matrix(sys);
    let m = pm.zeta_matrix(j);
    let basis = m.column_basis().into_iter().map(|c| m.column(c)).collect();
    EigenBasis {
        exponent: j % sys.period(),
        eigenvalue: zeta_root(sys.period(), j),
        basis,
    }
}

/// A basis of the invariant functions in `V`, chosen from the spanning
/// invariants `Σ_j U^j g_i`.
pub fn invariant_basis(sys: &FiniteSystem) -> Vec<Vec<Rational>> {
    let m1 = presenting_matrix(sys).invariant_matrix();
    m1.column_basis().into_iter().map(|c| m1.column(c)).collect()
}
