use num_traits::Zero;

use crate::dynsys::FiniteSystem;
use crate::exactalg::{gcd, CycField, CycNumber, ExactMatrix, Rational};

/// The `|X| × kn` matrix with entry `(x, j·k + i) = g_{i+1}(T^j x)`; its
/// column span is the dynamical span `V`.
#[derive(Clone, Debug)]
pub struct PresentingMatrix<'a> {
    system: &'a FiniteSystem,
    matrix: ExactMatrix<Rational>,
}

pub fn presenting_matrix(sys: &FiniteSystem) -> PresentingMatrix<'_> {
    let n = sys.period();
    let k = sys.num_stats();
    let size = sys.size();
    // orbit_pos[j][x] = T^j(x)
    let mut powers = Vec::with_capacity(n as usize);
    let mut cur: Vec<usize> = (0..size).collect();
    for _ in 0..n {
        let next = cur.iter().map(|&x| sys.apply(x)).collect();
        powers.push(std::mem::replace(&mut cur, next));
    }
    let matrix = ExactMatrix::from_fn(size, k * n as usize, |x, c| {
        let (j, i) = (c / k, c % k);
        sys.stat(powers[j][x], i).clone()
    });
    PresentingMatrix {
        system: sys,
        matrix,
    }
}

/// `dim V`, the rank of the presenting matrix.
pub fn dynamical_dimension(sys: &FiniteSystem) -> usize {
    presenting_matrix(sys).matrix().rank()
}

/// `dim V_1^⊥`, the rank of `M - M'`.
pub fn zero_mesic_dimension(sys: &FiniteSystem) -> usize {
    presenting_matrix(sys).shifted_difference().rank()
}

/// `ζ = e^{2πi j/n}` in `Q(ζ_d)`, `d = n / gcd(j, n)`, represented as
/// `ζ_d^{j/gcd}`.
pub fn zeta_root(n: u64, j: u64) -> CycNumber {
    assert!(n >= 1);
    let j = j % n;
    let g = gcd(j, n);
    CycField::new(n / g).zeta_pow((j / g) as i64)
}

impl<'a> PresentingMatrix<'a> {
    pub fn system(&self) -> &'a FiniteSystem {
        self.system
    }

    pub fn matrix(&self) -> &ExactMatrix<Rational> {
        &self.matrix
    }

    fn n(&self) -> usize {
        self.system.period() as usize
    }

    fn k(&self) -> usize {
        self.system.num_stats()
    }

    /// Entry of the `U^j g_{i+1}` column at `x`, `j` taken mod `n`.
    fn value(&self, x: usize, j: usize, i: usize) -> &Rational {
        self.matrix.get(x, (j % self.n()) * self.k() + i)
    }

    /// `M_1`: column `i` is `Σ_j U^j g_{i+1}`; its column span is `V_1`.
    pub fn invariant_matrix(&self) -> ExactMatrix<Rational> {
        self.block_sums(1)
    }

    /// The `|X| × dk` matrix with column `(r, i) = Σ_m U^{r + md} g_{i+1}`,
    /// `0 <= r < d`, whose column span is the invariant space of `U^d` on `V`.
    /// Requires `d | n`.
    pub fn block_sums(&self, d: usize) -> ExactMatrix<Rational> {
        let (n, k) = (self.n(), self.k());
        assert!(d >= 1 && n % d == 0, "{d} does not divide {n}");
        ExactMatrix::from_fn(self.matrix.rows(), d * k, |x, c| {
            let (r, i) = (c / k, c % k);
            (0..n / d).fold(Rational::zero(), |acc, m| acc + self.value(x, r + m * d, i))
        })
    }

    /// `M_ζ` for `ζ = e^{2πi j/n}`: column `i` is `Σ_m ζ̄^m U^m g_{i+1}`, a
    /// spanning set of the `ζ`-eigenspace `V_ζ`.
    pub fn zeta_matrix(&self, j: u64) -> ExactMatrix<CycNumber> {
        let n = self.n();
        let j = j % n as u64;
        let g = gcd(j, n as u64);
        let d = (n as u64 / g) as usize;
        let step = (j / g) as usize;
        let field = CycField::new(d as u64);
        // ζ̄^m = ζ_d^{-m·step}: collect coefficients by exponent, reduce once
        ExactMatrix::from_fn(self.matrix.rows(), self.k(), |x, i| {
            let mut poly = vec![Rational::zero(); d];
            for m in 0..n {
                let v = self.value(x, m, i);
                if !Zero::is_zero(v) {
                    poly[(d - (m * step) % d) % d] += v;
                }
            }
            field.from_poly(&poly)
        })
    }

    /// `M - M'`, where `M'` is `M` with its column blocks rotated one block to
    /// the right, so column `(j, i)` of the result is `U^j g - U^{j-1} g`.
    pub fn shifted_difference(&self) -> ExactMatrix<Rational> {
        let (n, k) = (self.n(), self.k());
        ExactMatrix::from_fn(self.matrix.rows(), n * k, |x, c| {
            let (j, i) = (c / k, c % k);
            self.value(x, j, i) - self.value(x, j + n - 1, i)
        })
    }
}
