use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactalg::{CycField, ExactMatrix, Rational};

pub type IntMatrix = [[i64; 5]; 5];

/// Absolute tolerance for floating-point orbit sums of logarithms.
pub const LYNESS_TOLERANCE: f64 = 1e-9;

/// Exponents of `x, y, x+1, y+1, x+y+1` in a monomial.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct ExpVector(pub [i64; 5]);

impl ExpVector {
    pub fn unit(i: usize) -> Self {
        let mut v = [0; 5];
        v[i] = 1;
        Self(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }
}

/// The exponent action of `(x, y) ↦ (y, (y+1)/x)`, acting on column vectors:
/// column `i` is the exponent vector of the `i`-th factor composed with the map.
pub fn lyness_matrix() -> IntMatrix {
    [
        [0, -1, 0, -1, -1],
        [1, 0, 0, 0, 0],
        [0, 0, 0, 0, 1],
        [0, 1, 1, 0, 1],
        [0, 0, 0, 1, 0],
    ]
}

fn apply(m: &IntMatrix, v: &ExpVector) -> ExpVector {
    ExpVector(std::array::from_fn(|r| (0..5).map(|c| m[r][c] * v.0[c]).sum()))
}

pub fn int_matrix_pow(m: &IntMatrix, e: u32) -> IntMatrix {
    let mut out: IntMatrix = std::array::from_fn(|r| std::array::from_fn(|c| (r == c) as i64));
    for _ in 0..e {
        out = std::array::from_fn(|r| {
            std::array::from_fn(|c| (0..5).map(|t| out[r][t] * m[t][c]).sum())
        });
    }
    out
}

/// Exponents of `f ∘ T` when `v` holds the exponents of `f`.
pub fn lyness_pullback(v: &ExpVector) -> ExpVector {
    apply(&lyness_matrix(), v)
}

/// `(I + m + ... + m^{period-1}) v`.
pub fn exponent_orbit_sum(m: &IntMatrix, v: &ExpVector, period: usize) -> ExpVector {
    let mut total = [0i64; 5];
    let mut cur = *v;
    for _ in 0..period {
        for (t, c) in total.iter_mut().zip(cur.0) {
            *t += c;
        }
        cur = apply(m, &cur);
    }
    ExpVector(total)
}

/// Whether `log|monomial_v|` sums to zero along every orbit.
pub fn lyness_homomesy_check(v: &ExpVector) -> bool {
    exponent_orbit_sum(&lyness_matrix(), v, 5).is_zero()
}

fn domain_factors(x: &Rational, y: &Rational) -> [(&'static str, Rational); 5] {
    let one = Rational::one();
    [
        ("x", x.clone()),
        ("y", y.clone()),
        ("x+1", x + &one),
        ("y+1", y + &one),
        ("x+y+1", x + y + &one),
    ]
}

fn checked_factors(x: &Rational, y: &Rational) -> Result<[Rational; 5]> {
    let factors = domain_factors(x, y);
    if let Some((name, _)) = factors.iter().find(|(_, v)| v.is_zero()) {
        return Err(Error::LynessDomain {
            x: x.to_string(),
            y: y.to_string(),
            factor: name,
        });
    }
    Ok(factors.map(|(_, v)| v))
}

pub fn lyness_map(x: &Rational, y: &Rational) -> Result<(Rational, Rational)> {
    let [x, y, _, y1, _] = checked_factors(x, y)?;
    Ok((y, y1 / x))
}

/// The five points of the orbit starting at `(x, y)`.
pub fn lyness_orbit(x: &Rational, y: &Rational) -> Result<Vec<(Rational, Rational)>> {
    let mut out = vec![(x.clone(), y.clone())];
    for _ in 1..5 {
        let (a, b) = out.last().expect("nonempty");
        let next = lyness_map(a, b)?;
        out.push(next);
    }
    // the last point must itself be in the domain for the orbit to close
    let (a, b) = out.last().expect("nonempty");
    lyness_map(a, b)?;
    Ok(out)
}

/// `x^a y^b (x+1)^c (y+1)^d (x+y+1)^e`, exactly.
pub fn monomial(v: &ExpVector, x: &Rational, y: &Rational) -> Result<Rational> {
    let factors = checked_factors(x, y)?;
    Ok(factors
        .iter()
        .zip(v.0)
        .fold(Rational::one(), |acc, (f, e)| {
            let p = num_traits::pow(f.clone(), e.unsigned_abs() as usize);
            if e < 0 {
                acc / p
            } else {
                acc * p
            }
        }))
}

/// `Σ log|monomial_v|` over the orbit of `seed`, in floating point.
pub fn lyness_numeric_orbit_sum(v: &ExpVector, seed: (&Rational, &Rational)) -> Result<f64> {
    let orbit = lyness_orbit(seed.0, seed.1)?;
    let mut sum = 0.0;
    for (x, y) in &orbit {
        for (f, e) in checked_factors(x, y)?.iter().zip(v.0) {
            if e != 0 {
                let mag = f.abs().to_f64().expect("finite rational");
                sum += e as f64 * mag.ln();
            }
        }
    }
    Ok(sum)
}

/// Multiplicity of each `ζ^j` (`ζ = e^{2πi/5}`) as an eigenvalue of `m`,
/// computed as `5 - rank(m - ζ^j I)` over `Q(ζ)`.
pub fn lyness_spectrum(m: &IntMatrix) -> [usize; 5] {
    let field = CycField::new(5);
    let rows: Vec<Vec<i64>> = m.iter().map(|r| r.to_vec()).collect();
    let base = ExactMatrix::<Rational>::from_integers(&rows).map(|q| field.from_rational(q.clone()));
    std::array::from_fn(|j| {
        let z = field.zeta_pow(j as i64);
        let shifted = ExactMatrix::from_fn(5, 5, |r, c| {
            if r == c {
                base.get(r, c) - &z
            } else {
                base.get(r, c).clone()
            }
        });
        5 - shifted.rank()
    })
}

/// Random seeds whose whole orbit stays in the domain.
pub fn random_lyness_seeds(count: usize, seed: u64) -> Vec<(Rational, Rational)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |rng: &mut ChaCha8Rng| {
        let num: i64 = rng.random_range(-50..=50);
        let den: i64 = rng.random_range(1..=20);
        Rational::new(num.into(), den.into())
    };
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let (x, y) = (draw(&mut rng), draw(&mut rng));
        if lyness_orbit(&x, &y).is_ok() {
            out.push((x, y));
        }
    }
    out
}
