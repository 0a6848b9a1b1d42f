use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::arith::euler_phi;
use super::field::{Field, Rational};
use super::poly::{cyclotomic_polynomial, invert_mod};

/// The cyclotomic field `Q(ζ_d) = Q[x]/Φ_d(x)`, where `x` stands for the
/// primitive root `ζ_d = e^{2πi/d}`.
#[derive(Debug, PartialEq, Eq)]
pub struct CycField {
    order: u64,
    modulus: Vec<Rational>,
    /// `x^t mod Φ_d` for `0 <= t < 2φ(d) - 1`.
    powers: Vec<Vec<Rational>>,
}

impl CycField {
    pub fn new(order: u64) -> Arc<Self> {
        assert!(order >= 1, "cyclotomic field of order 0");
        let modulus: Vec<Rational> = cyclotomic_polynomial(order)
            .into_iter()
            .map(Rational::from_integer)
            .collect();
        let deg = modulus.len() - 1;
        debug_assert_eq!(deg as u64, euler_phi(order));

        let mut powers = Vec::with_capacity(2 * deg);
        let mut cur = vec![Rational::zero(); deg];
        cur[0] = Rational::one();
        for _ in 0..(2 * deg).saturating_sub(1).max(1) {
            powers.push(cur.clone());
            // multiply by x, then fold x^deg back using the monic modulus
            let top = cur.pop().expect("degree >= 1");
            cur.insert(0, Rational::zero());
            for (c, m) in cur.iter_mut().zip(&modulus) {
                *c -= &top * m;
            }
        }
        Arc::new(Self {
            order,
            modulus,
            powers,
        })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// `φ(d)`, the dimension over `Q`.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[Rational] {
        &self.modulus
    }

    pub fn zero(self: &Arc<Self>) -> CycNumber {
        CycNumber {
            field: Arc::clone(self),
            coeffs: vec![Rational::zero(); self.degree()],
        }
    }

    pub fn one(self: &Arc<Self>) -> CycNumber {
        self.from_rational(Rational::one())
    }

    pub fn from_rational(self: &Arc<Self>, q: Rational) -> CycNumber {
        let mut z = self.zero();
        z.coeffs[0] = q;
        z
    }

    /// `ζ_d^e`; negative exponents are allowed.
    pub fn zeta_pow(self: &Arc<Self>, e: i64) -> CycNumber {
        let t = e.mod_floor(&(self.order as i64)) as usize;
        self.reduce(&self.power_of_x(t))
    }

    /// Reduces an arbitrary polynomial in `x` (lowest degree first).
    pub fn from_poly(self: &Arc<Self>, poly: &[Rational]) -> CycNumber {
        self.reduce(poly)
    }

    fn power_of_x(&self, t: usize) -> Vec<Rational> {
        let mut p = vec![Rational::zero(); t + 1];
        p[t] = Rational::one();
        p
    }

    fn reduce(self: &Arc<Self>, poly: &[Rational]) -> CycNumber {
        let deg = self.degree();
        let mut rem = poly.to_vec();
        // long division by the monic modulus, top down
        while rem.len() > deg {
            let t = rem.len() - 1;
            let c = rem.pop().expect("nonempty");
            if !Zero::is_zero(&c) {
                for i in 0..deg {
                    let m = &self.modulus[i];
                    if !Zero::is_zero(m) {
                        rem[t - deg + i] -= &c * m;
                    }
                }
            }
        }
        rem.resize(deg, Rational::zero());
        CycNumber {
            field: Arc::clone(self),
            coeffs: rem,
        }
    }
}

/// An element of `Q(ζ_d)`, stored as the coefficients of a polynomial in
/// `ζ_d` of degree below `φ(d)`.
#[derive(Clone, Debug)]
pub struct CycNumber {
    field: Arc<CycField>,
    coeffs: Vec<Rational>,
}

impl PartialEq for CycNumber {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coeffs == other.coeffs
    }
}

impl Eq for CycNumber {}

impl CycNumber {
    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn order(&self) -> u64 {
        self.field.order
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    fn same_field(&self, other: &Self) {
        assert_eq!(
            self.field.order, other.field.order,
            "mixing elements of different cyclotomic fields"
        );
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value, if this element lies in `Q`.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Complex conjugation, the automorphism `ζ_d ↦ ζ_d^{-1}`.
    pub fn conjugate(&self) -> Self {
        let d = self.field.order as i64;
        let mut acc = self.field.zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !Zero::is_zero(c) {
                acc = &acc + &self.field.zeta_pow(-(i as i64) % d).scaled(c);
            }
        }
        acc
    }

    pub fn scaled(&self, q: &Rational) -> Self {
        CycNumber {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        let inv = invert_mod(&self.coeffs, &self.field.modulus);
        self.field.reduce(&inv)
    }
}

impl<'a> Add<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;

    fn add(self, rhs: &CycNumber) -> CycNumber {
        self.same_field(rhs);
        CycNumber {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;

    fn sub(self, rhs: &CycNumber) -> CycNumber {
        self.same_field(rhs);
        CycNumber {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<'a> Mul<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;

    fn mul(self, rhs: &CycNumber) -> CycNumber {
        self.same_field(rhs);
        let deg = self.field.degree();
        let mut out = vec![Rational::zero(); deg];
        for (i, a) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if Zero::is_zero(b) {
                    continue;
                }
                let ab = a * b;
                for (o, p) in out.iter_mut().zip(&self.field.powers[i + j]) {
                    if !Zero::is_zero(p) {
                        *o += &ab * p;
                    }
                }
            }
        }
        CycNumber {
            field: Arc::clone(&self.field),
            coeffs: out,
        }
    }
}

impl Neg for &CycNumber {
    type Output = CycNumber;

    fn neg(self) -> CycNumber {
        CycNumber {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(c) {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if wrote {
                write!(f, " {sign} ")?;
            } else if sign == "-" {
                write!(f, "-")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    write!(f, "z{}", self.field.order)?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Field for CycNumber {
    fn zero_like(&self) -> Self {
        self.field.zero()
    }

    fn one_like(&self) -> Self {
        self.field.one()
    }

    fn is_zero(&self) -> bool {
        CycNumber::is_zero(self)
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

    fn reciprocal(&self) -> Self {
        self.inverse()
    }

    fn conjugate(&self) -> Self {
        CycNumber::conjugate(self)
    }

    /// For tall matrices, eliminates on the Hermitian Gram matrix `A^H A`
    /// instead. Over a subfield of `C` it has the same nullspace as `A`
    /// (`A^H A v = 0` forces `|A v|^2 = 0`), hence the same pivot columns.
    /// The Gram entries are accumulated as integer polynomials in `ζ` and
    /// reduced once each.
    fn pivot_columns(rows: &[Vec<Self>], cols: usize) -> Option<Vec<usize>> {
        let field = Arc::clone(&rows.first()?.first()?.field);
        if rows.len() <= cols {
            return None;
        }
        let d = field.order as usize;
        let phi = field.degree();
        // integral coefficient vectors; positive row scaling keeps the nullspace
        let ints: Vec<Vec<Vec<BigInt>>> = rows
            .iter()
            .map(|row| {
                let l = row
                    .iter()
                    .flat_map(|x| x.coeffs.iter())
                    .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
                row.iter()
                    .map(|x| x.coeffs.iter().map(|c| (c * &l).to_integer()).collect())
                    .collect()
            })
            .collect();
        let conj: Vec<Vec<Vec<BigInt>>> = ints
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| {
                        let mut out = vec![BigInt::zero(); d];
                        for (t, v) in c.iter().enumerate() {
                            out[(d - t) % d] += v;
                        }
                        out
                    })
                    .collect()
            })
            .collect();
        let mut gram = vec![vec![field.zero(); cols]; cols];
        for a in 0..cols {
            for b in a..cols {
                let mut acc = vec![BigInt::zero(); d + phi];
                for (crow, irow) in conj.iter().zip(&ints) {
                    for (s, l) in crow[a].iter().enumerate().filter(|(_, l)| !l.is_zero()) {
                        for (t, r) in irow[b].iter().enumerate().filter(|(_, r)| !r.is_zero()) {
                            acc[s + t] += l * r;
                        }
                    }
                }
                let poly: Vec<Rational> = acc.into_iter().map(Rational::from_integer).collect();
                let entry = field.reduce(&poly);
                if a != b {
                    gram[b][a] = entry.conjugate();
                }
                gram[a][b] = entry;
            }
        }
        Some(super::ExactMatrix::from_rows(gram).column_basis())
    }

    fn over(&self, rhs: &Self) -> Self {
        self * &rhs.inverse()
    }

    fn scale(&self, q: &Rational) -> Self {
        self.scaled(q)
    }

    fn clear_denominators(row: &mut [Self]) {
        let l = row
            .iter()
            .flat_map(|x| x.coeffs.iter())
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        if !l.is_one() {
            let l = Rational::from_integer(l);
            for x in row.iter_mut() {
                *x = x.scaled(&l);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational;
    use proptest::prelude::*;

    #[test]
    fn roots_of_unity() {
        let f = CycField::new(4);
        let i = f.zeta_pow(1);
        assert_eq!(&i * &i, f.from_rational(rational(-1, 1)));
        assert_eq!(i.pow(4), f.one());
        assert_eq!(i.conjugate(), f.zeta_pow(3));
        assert_eq!(f.zeta_pow(-1), f.zeta_pow(3));

        let f6 = CycField::new(6);
        let z = f6.zeta_pow(1);
        // ζ_6^2 = ζ_6 - 1
        assert_eq!(z.pow(2), &z - &f6.one());
        assert_eq!(z.pow(3), f6.from_rational(rational(-1, 1)));

        let f1 = CycField::new(1);
        assert_eq!(f1.zeta_pow(5), f1.one());
        assert_eq!(f1.degree(), 1);
    }

    #[test]
    fn sum_of_primitive_powers_is_mobius() {
        for d in 1..=12u64 {
            let f = CycField::new(d);
            let mut s = f.zero();
            for e in 0..d {
                if num_integer::gcd(e, d) == 1 {
                    s = &s + &f.zeta_pow(e as i64);
                }
            }
            let mu = crate::exactalg::mobius(d);
            assert_eq!(s, f.from_rational(rational(mu, 1)), "d = {d}");
        }
    }

    #[test]
    fn display() {
        let f = CycField::new(5);
        let x = &f.zeta_pow(2).scaled(&rational(-3, 2)) + &f.one();
        assert_eq!(x.to_string(), "1 - 3/2*z5^2");
        assert_eq!(f.zero().to_string(), "0");
    }

    fn element(d: u64) -> impl Strategy<Value = CycNumber> {
        let deg = euler_phi(d) as usize;
        prop::collection::vec((-6i64..=6, 1i64..=4), deg).prop_map(move |cs| {
            let f = CycField::new(d);
            let poly: Vec<Rational> = cs.into_iter().map(|(p, q)| rational(p, q)).collect();
            f.from_poly(&poly)
        })
    }

    fn triple() -> impl Strategy<Value = (CycNumber, CycNumber, CycNumber)> {
        (1u64..=12).prop_flat_map(|d| (element(d), element(d), element(d)))
    }

    proptest! {
        #[test]
        fn field_laws((a, b, c) in triple()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inverse(), a.field().one());
            }
            prop_assert_eq!(a.conjugate().conjugate(), a.clone());
            prop_assert_eq!((&a * &b).conjugate(), &a.conjugate() * &b.conjugate());
        }
    }
}
