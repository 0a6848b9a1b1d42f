//! The four-valued matrices whose determinants show that every non-unital
//! eigenvalue of multiset rotation has multiplicity `k` once `n > 2`.
//!
//! Row `r` (1-based) of the `k×k` matrix records the spanning eigenfunction
//! values at `y^(r) = 0^{k-r+1} 1^{r-1}`; column `i` is the statistic `g_i`.
//! The grid is split by its diagonal and antidiagonal into four constant
//! zones `N`, `E`, `S`, `W`.

use crate::error::{Error, Result};
use crate::exactalg::{cofactor_determinant, CycField, CycNumber, ExactMatrix, Field, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Zone {
    North,
    East,
    South,
    West,
}

#[derive(Clone, Debug, PartialEq)]
pub struct NeswEntries<S> {
    pub north: S,
    pub east: S,
    pub south: S,
    pub west: S,
}

impl<S: Field> NeswEntries<S> {
    pub fn new(north: S, east: S, south: S, west: S) -> Self {
        Self {
            north,
            east,
            south,
            west,
        }
    }

    fn get(&self, z: Zone) -> &S {
        match z {
            Zone::North => &self.north,
            Zone::East => &self.east,
            Zone::South => &self.south,
            Zone::West => &self.west,
        }
    }

    /// `(N, E, S, W) -> (E, S, W, N)`: a quarter turn of the grid.
    fn rotated(&self) -> Self {
        Self::new(
            self.east.clone(),
            self.south.clone(),
            self.west.clone(),
            self.north.clone(),
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct NeswMatrix<S> {
    pub k: usize,
    pub entries: NeswEntries<S>,
    pub grid: ExactMatrix<S>,
}

/// Zone of the 0-based cell `(row, col)` in the `k×k` grid.
pub fn nesw_zone(k: usize, row: usize, col: usize) -> Zone {
    let (r, i) = (row + 1, col + 1);
    let left_of_anti = i + r <= k + 1;
    let right_of_diag = i >= r;
    match (left_of_anti, right_of_diag) {
        (true, true) => Zone::North,
        (true, false) => Zone::West,
        (false, true) => Zone::East,
        (false, false) => Zone::South,
    }
}

/// The sums `W, N, S, E` for `ζ = e^{2πi j/n}`, as elements of `Q(ζ_d)` with
/// `d = n / gcd(j, n)`:
///
/// ```text
/// W = Σ_{m<n-1} m ζ^m          N = W + (n-1) ζ^{n-1}
/// S = Σ_{m<n-1} (m+1) ζ^m      E = S + (n-1) ζ^{n-1}
/// ```
pub fn nesw_entries(n: u64, j: u64) -> Result<NeswEntries<CycNumber>> {
    if n < 2 || j == 0 || j >= n {
        return Err(Error::InvalidParameters(format!(
            "need n >= 2 and 1 <= j < n, got n = {n}, j = {j}"
        )));
    }
    let g = num_integer::gcd(j, n);
    let field = CycField::new(n / g);
    let zeta = field.zeta_pow((j / g) as i64);
    let int = |v: u64| Rational::from_integer(v.into());

    let mut west = field.zero();
    let mut south = field.zero();
    let mut power = field.one();
    for m in 0..n - 1 {
        west = &west + &power.scaled(&int(m));
        south = &south + &power.scaled(&int(m + 1));
        power = &power * &zeta;
    }
    let tail = power.scaled(&int(n - 1));
    let north = &west + &tail;
    let east = &south + &tail;
    Ok(NeswEntries::new(north, east, south, west))
}

pub fn nesw_matrix<S: Field>(k: usize, entries: &NeswEntries<S>) -> Result<NeswMatrix<S>> {
    if k < 2 {
        return Err(Error::InvalidParameters(format!("need k >= 2, got {k}")));
    }
    let grid = ExactMatrix::from_fn(k, k, |r, c| entries.get(nesw_zone(k, r, c)).clone());
    Ok(NeswMatrix {
        k,
        entries: entries.clone(),
        grid,
    })
}

fn power<S: Field>(x: &S, e: usize) -> S {
    (0..e).fold(x.one_like(), |acc, _| acc.times(x))
}

/// `D_k`: `(-1)^i N (N-S)^{i-1} (W-E)^i` for `k = 2i`, and
/// `(-1)^i N (N-S)^i (W-E)^i` for `k = 2i+1`.
pub fn nesw_det_closed_form<S: Field>(k: usize, e: &NeswEntries<S>) -> Result<S> {
    if k < 2 {
        return Err(Error::InvalidParameters(format!("need k >= 2, got {k}")));
    }
    let i = k / 2;
    let ns = e.north.minus(&e.south);
    let we = e.west.minus(&e.east);
    let ns_exp = if k % 2 == 0 { i - 1 } else { i };
    let value = e
        .north
        .times(&power(&ns, ns_exp))
        .times(&power(&we, i));
    Ok(if i % 2 == 1 { value.negated() } else { value })
}

/// Checks `D_k(N,E,S,W) = ε (N(E-W)/E) D_{k-1}(E,S,W,N)` with both
/// determinants computed by cofactor expansion.
///
/// Clearing the first column with `W/E` times the last leaves the
/// `(k-1)×(k-1)` minor as a quarter turn of the `D_{k-1}(E,S,W,N)` grid, and a
/// quarter turn of an `m×m` matrix scales its determinant by
/// `ε = (-1)^{m(m-1)/2}`. Without `ε` the identity fails for `k ≡ 0, 3 (mod 4)`.
pub fn nesw_recurrence_check<S: Field>(k: usize, e: &NeswEntries<S>) -> Result<bool> {
    if k < 3 {
        return Err(Error::InvalidParameters(format!("need k >= 3, got {k}")));
    }
    if e.east.is_zero() {
        return Err(Error::InvalidParameters("E must be nonzero".into()));
    }
    let lhs = cofactor_determinant(&nesw_matrix(k, e)?.grid);
    let factor = e.north.times(&e.east.minus(&e.west)).over(&e.east);
    let mut rhs = factor.times(&cofactor_determinant(&nesw_matrix(k - 1, &e.rotated())?.grid));
    if quarter_turn_is_odd(k - 1) {
        rhs = rhs.negated();
    }
    Ok(lhs == rhs)
}

fn quarter_turn_is_odd(m: usize) -> bool {
    (m * (m - 1) / 2) % 2 == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational;

    fn template(k: usize) -> String {
        (0..k)
            .map(|r| {
                (0..k)
                    .map(|c| match nesw_zone(k, r, c) {
                        Zone::North => 'N',
                        Zone::East => 'E',
                        Zone::South => 'S',
                        Zone::West => 'W',
                    })
                    .collect::<String>()
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    #[test]
    fn zoning_matches_displayed_templates() {
        assert_eq!(template(3), "NNN WNE WSE");
        assert_eq!(template(4), "NNNN WNNE WWEE WSSE");
        assert_eq!(template(5), "NNNNN WNNNE WWNEE WWSEE WSSSE");
        assert_eq!(template(6), "NNNNNN WNNNNE WWNNEE WWWEEE WWSSEE WSSSSE");
    }

    fn q(p: i64) -> Rational {
        rational(p, 1)
    }

    #[test]
    fn d2_is_n_times_e_minus_w() {
        let e = NeswEntries::new(q(3), q(5), q(7), q(11));
        let m = nesw_matrix(2, &e).unwrap();
        assert_eq!(cofactor_determinant(&m.grid), q(3 * (5 - 11)));
        assert_eq!(nesw_det_closed_form(2, &e).unwrap(), q(3 * (5 - 11)));
    }

    #[test]
    fn closed_form_vanishes_when_n_equals_s() {
        let e = NeswEntries::new(q(2), q(5), q(2), q(1));
        assert_eq!(nesw_det_closed_form(3, &e).unwrap(), q(0));
        assert_eq!(cofactor_determinant(&nesw_matrix(3, &e).unwrap().grid), q(0));
    }

    #[test]
    fn recurrence_examples() {
        assert!(nesw_recurrence_check(3, &NeswEntries::new(q(1), q(2), q(3), q(4))).unwrap());
        let e = NeswEntries::new(rational(-2, 3), rational(5, 7), rational(1, 2), rational(9, 4));
        assert!(nesw_recurrence_check(4, &e).unwrap());
        let zero_n = NeswEntries::new(q(0), q(2), q(3), q(4));
        assert!(nesw_recurrence_check(3, &zero_n).unwrap());
        assert_eq!(cofactor_determinant(&nesw_matrix(3, &zero_n).unwrap().grid), q(0));
        assert!(nesw_recurrence_check(3, &NeswEntries::new(q(1), q(0), q(3), q(4))).is_err());
        assert!(nesw_recurrence_check(2, &e).is_err());
    }

    #[test]
    fn quarter_turn_sign() {
        // a 2x2 quarter turn swaps the sign of the determinant
        let e = NeswEntries::new(q(1), q(2), q(3), q(4));
        let minor = ExactMatrix::from_rows(vec![vec![q(1), q(2)], vec![q(3), q(2)]]);
        let turned = nesw_matrix(2, &e.rotated()).unwrap().grid;
        assert_eq!(
            cofactor_determinant(&minor),
            cofactor_determinant(&turned).negated()
        );
        let signs: Vec<bool> = (1..=8).map(quarter_turn_is_odd).collect();
        assert_eq!(signs, [false, true, true, false, false, true, true, false]);
    }

    #[test]
    fn entry_identities() {
        for n in 2..=10u64 {
            for j in 1..n {
                let e = nesw_entries(n, j).unwrap();
                let f = e.north.field().clone();
                let zeta = f.zeta_pow((j / num_integer::gcd(j, n)) as i64);
                let one_minus = &f.one() - &zeta;
                let zn1 = zeta.pow(n - 1);
                let nn = f.from_rational(q(n as i64));
                assert_eq!(
                    &one_minus * &(&e.south - &e.north),
                    &nn * &(&f.one() - &zn1),
                    "n={n} j={j}"
                );
                let n2 = f.from_rational(q(n as i64 - 2));
                assert_eq!(
                    &one_minus * &(&e.east - &e.west),
                    &n2 * &(&zn1 - &f.one()),
                    "n={n} j={j}"
                );
            }
        }
        let e = nesw_entries(2, 1).unwrap();
        assert!((&e.east - &e.west).is_zero());
        assert!(nesw_entries(4, 0).is_err());
        assert!(nesw_entries(4, 4).is_err());
    }
}
