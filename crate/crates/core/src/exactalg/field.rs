use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Arbitrary precision rational number, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for `p/q` as a [`Rational`].
pub fn rational(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Exact field operations shared by [`Rational`] and
/// [`CycNumber`](super::CycNumber).
///
/// Cyclotomic elements carry their field with them, so the additive and
/// multiplicative identities are produced from an existing element.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Panics when `rhs` is zero.
    fn over(&self, rhs: &Self) -> Self;
    /// Panics when `self` is zero.
    fn reciprocal(&self) -> Self;
    fn scale(&self, q: &Rational) -> Self;
    /// Complex conjugation under the standard embedding into `C`.
    fn conjugate(&self) -> Self;

    /// Pivot columns of the fraction-free echelon form of `rows`, for fields
    /// with a faster exact route than the generic elimination. Must agree
    /// with the generic pivot choice.
    fn pivot_columns(_rows: &[Vec<Self>], _cols: usize) -> Option<Vec<usize>> {
        None
    }

    /// Multiplies `row` by a nonzero scalar so that every entry becomes
    /// integral. Elimination on integral rows keeps all Bareiss quotients
    /// integral.
    fn clear_denominators(row: &mut [Self]);
}

impl Field for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }

    fn one_like(&self) -> Self {
        Rational::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn negated(&self) -> Self {
        -self
    }

    fn over(&self, rhs: &Self) -> Self {
        assert!(!Zero::is_zero(rhs), "division by zero");
        self / rhs
    }

    fn reciprocal(&self) -> Self {
        assert!(!Zero::is_zero(self), "division by zero");
        self.recip()
    }

    fn scale(&self, q: &Rational) -> Self {
        self * q
    }

    fn conjugate(&self) -> Self {
        self.clone()
    }

    /// Bareiss over the integers after clearing each row's denominators.
    fn pivot_columns(rows: &[Vec<Self>], cols: usize) -> Option<Vec<usize>> {
        let ints = rows
            .iter()
            .map(|row| {
                let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.iter().map(|x| (x * &l).to_integer()).collect()
            })
            .collect();
        Some(super::matrix::integer_pivots(ints, cols))
    }

    fn clear_denominators(row: &mut [Self]) {
        let l = row
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        if !l.is_one() {
            let l = Rational::from_integer(l.abs());
            for x in row.iter_mut() {
                *x = &*x * &l;
            }
        }
    }
}
