use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::field::{Field, Rational};

/// Dense row-major matrix over an exact field.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactMatrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

/// Row echelon form produced by fraction-free elimination.
struct Echelon<S> {
    rows: Vec<Vec<S>>,
    pivots: Vec<usize>,
}

impl<S: Field> ExactMatrix<S> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let n = rows.len();
        Self {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<S>]) -> Self {
        assert!(columns.iter().all(|c| c.len() == rows), "ragged columns");
        Self::from_fn(rows, columns.len(), |r, c| columns[c][r].clone())
    }

    pub fn identity_like(n: usize, one: &S) -> Self {
        let zero = one.zero_like();
        Self::from_fn(n, n, |r, c| if r == c { one.clone() } else { zero.clone() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        assert!(r < self.rows && c < self.cols, "index out of range");
        &self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[S] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<S> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<S>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        Self::from_fn(self.rows, idx.len(), |r, c| self.get(r, idx[c]).clone())
    }

    /// Appends the columns of `other` on the right.
    pub fn hconcat(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "row count mismatch");
        Self::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        })
    }

    pub fn map<T: Field>(&self, f: impl Fn(&S) -> T) -> ExactMatrix<T> {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn plus(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.plus(b)).collect(),
        }
    }

    pub fn minus(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.minus(b)).collect(),
        }
    }

    pub fn times(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        assert!(self.cols > 0, "inner dimension 0 has no scalar to build zero from");
        Self::from_fn(self.rows, rhs.cols, |r, c| {
            let mut acc = self.get(r, 0).times(rhs.get(0, c));
            for t in 1..self.cols {
                acc = acc.plus(&self.get(r, t).times(rhs.get(t, c)));
            }
            acc
        })
    }

    pub fn times_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len(), "shape mismatch");
        assert!(self.cols > 0);
        (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let mut acc = row[0].times(&v[0]);
                for (a, x) in row.iter().zip(v).skip(1) {
                    acc = acc.plus(&a.times(x));
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert_eq!(self.rows, self.cols, "power of a non-square matrix");
        assert!(self.rows > 0);
        let one = self.data[0].one_like();
        let mut acc = Self::identity_like(self.rows, &one);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.times(&base);
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Field::is_zero)
    }

    /// Fraction-free (Bareiss) elimination. Pivots are the first nonzero
    /// entry found scanning each column top to bottom, columns left to right.
    fn echelon(&self) -> Echelon<S> {
        let mut a = self.to_rows();
        for row in a.iter_mut() {
            S::clear_denominators(row);
        }
        let mut pivots = Vec::new();
        let mut prev_inv: Option<S> = None;
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(p, r);
            let (top, rest) = a.split_at_mut(r + 1);
            let pivot_row = &top[r];
            let pivot = &pivot_row[c];
            for row in rest.iter_mut() {
                let lead = std::mem::replace(&mut row[c], pivot.zero_like());
                for j in c + 1..self.cols {
                    let mut v = if row[j].is_zero() {
                        row[j].clone()
                    } else {
                        pivot.times(&row[j])
                    };
                    if !lead.is_zero() && !pivot_row[j].is_zero() {
                        v = v.minus(&lead.times(&pivot_row[j]));
                    }
                    if let Some(d) = &prev_inv {
                        if !v.is_zero() {
                            v = v.times(d);
                        }
                    }
                    row[j] = v;
                }
            }
            // the divisor of the next step; inverted once rather than per entry
            prev_inv = Some(pivot.reciprocal());
            pivots.push(c);
            r += 1;
        }
        a.truncate(pivots.len());
        Echelon { rows: a, pivots }
    }

    fn pivots(&self) -> Vec<usize> {
        let rows = self.to_rows();
        S::pivot_columns(&rows, self.cols).unwrap_or_else(|| self.echelon().pivots)
    }

    pub fn rank(&self) -> usize {
        self.pivots().len()
    }

    /// Indices of a maximal independent set of columns, chosen greedily from
    /// the left.
    pub fn column_basis(&self) -> Vec<usize> {
        self.pivots()
    }

    /// A basis of `{v : A v = 0}`, one vector per non-pivot column.
    pub fn nullspace_basis(&self) -> Vec<Vec<S>> {
        let ech = self.echelon();
        let Some(proto) = self.data.first() else {
            return Vec::new();
        };
        let zero = proto.zero_like();
        let one = proto.one_like();
        let free: Vec<usize> = (0..self.cols).filter(|c| !ech.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![zero.clone(); self.cols];
                v[f] = one.clone();
                for (i, &pc) in ech.pivots.iter().enumerate().rev() {
                    let row = &ech.rows[i];
                    let mut acc = zero.clone();
                    for j in pc + 1..self.cols {
                        if !row[j].is_zero() && !v[j].is_zero() {
                            acc = acc.plus(&row[j].times(&v[j]));
                        }
                    }
                    v[pc] = acc.negated().over(&row[pc]);
                }
                v
            })
            .collect()
    }

    /// Determinant by fraction-free elimination.
    pub fn determinant(&self) -> S {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        assert!(self.rows > 0);
        // Elimination on the unscaled matrix so the last pivot is the determinant.
        let mut a = self.to_rows();
        let n = self.rows;
        let mut sign_neg = false;
        let mut prev: Option<S> = None;
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
                return self.data[0].zero_like();
            };
            if p != c {
                a.swap(p, c);
                sign_neg = !sign_neg;
            }
            let (top, rest) = a.split_at_mut(c + 1);
            let pivot_row = &top[c];
            for row in rest.iter_mut() {
                for j in c + 1..n {
                    let mut v = pivot_row[c].times(&row[j]).minus(&row[c].times(&pivot_row[j]));
                    if let Some(d) = &prev {
                        v = v.over(d);
                    }
                    row[j] = v;
                }
                row[c] = pivot_row[c].zero_like();
            }
            prev = Some(pivot_row[c].clone());
        }
        let det = a[n - 1][n - 1].clone();
        if sign_neg {
            det.negated()
        } else {
            det
        }
    }
}

impl ExactMatrix<Rational> {
    pub fn identity(n: usize) -> Self {
        Self::identity_like(n, &Rational::one())
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
                .collect(),
        )
    }
}

impl<S: Field> fmt::Display for ExactMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Pivot columns of an integer matrix by Bareiss elimination, with the same
/// pivot rule as [`ExactMatrix::rank`]. Every quotient is exact.
pub(crate) fn integer_pivots(mut a: Vec<Vec<BigInt>>, cols: usize) -> Vec<usize> {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut prev: Option<BigInt> = None;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = &pivot_row[c];
        for row in rest.iter_mut() {
            let lead = std::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let mut v = if row[j].is_zero() {
                    BigInt::zero()
                } else {
                    pivot * &row[j]
                };
                if !lead.is_zero() && !pivot_row[j].is_zero() {
                    v -= &lead * &pivot_row[j];
                }
                if let Some(d) = &prev {
                    if !v.is_zero() {
                        v /= d;
                    }
                }
                row[j] = v;
            }
        }
        prev = Some(pivot.clone());
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Determinant by Laplace expansion along the first row. Exponential time;
/// intended as an independent check on small matrices.
pub fn cofactor_determinant<S: Field>(m: &ExactMatrix<S>) -> S {
    assert_eq!(m.rows(), m.cols(), "determinant of a non-square matrix");
    assert!(m.rows() > 0);
    let cols: Vec<usize> = (0..m.cols()).collect();
    expand(m, 0, &cols)
}

fn expand<S: Field>(m: &ExactMatrix<S>, row: usize, cols: &[usize]) -> S {
    if cols.len() == 1 {
        return m.get(row, cols[0]).clone();
    }
    let mut acc = m.get(0, 0).zero_like();
    for (pos, &c) in cols.iter().enumerate() {
        let entry = m.get(row, c);
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = entry.times(&expand(m, row + 1, &minor));
        acc = if pos % 2 == 0 { acc.plus(&term) } else { acc.minus(&term) };
    }
    acc
}
