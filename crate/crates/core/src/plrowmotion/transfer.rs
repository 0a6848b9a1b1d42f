use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactalg::{ExactMatrix, Rational};

/// A point of `R^4` in one of the three coordinate spaces `X`, `Y`, `Z`.
pub type Quad = [Rational; 4];

/// A point of the order polytope of `[2]×[2]`: `x₁` is the minimum, `x₄` the
/// maximum, `x₂` and `x₃` incomparable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolytopePoint([Rational; 4]);

impl PolytopePoint {
    pub fn new(coords: Quad) -> Result<Self> {
        let [x1, x2, x3, x4] = &coords;
        let unit = |v: &Rational| !(v < &Rational::zero() || v > &Rational::one());
        if !coords.iter().all(unit) {
            return Err(Error::OutsidePolytope(format!(
                "coordinates must lie in [0, 1]: {}",
                show(&coords)
            )));
        }
        if !(x1 <= x2 && x2 <= x4 && x1 <= x3 && x3 <= x4) {
            return Err(Error::OutsidePolytope(format!(
                "need x1 <= x2, x3 <= x4: {}",
                show(&coords)
            )));
        }
        Ok(Self(coords))
    }

    pub fn from_integers(c: [i64; 4]) -> Result<Self> {
        Self::new(c.map(|v| Rational::from_integer(v.into())))
    }

    pub fn coords(&self) -> &Quad {
        &self.0
    }
}

impl fmt::Display for PolytopePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&show(&self.0))
    }
}

fn show(c: &[Rational]) -> String {
    let parts: Vec<String> = c.iter().map(|v| v.to_string()).collect();
    format!("({})", parts.join(", "))
}

/// `(q, max(q₂, q₃), 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtendedPoint([Rational; 6]);

impl ExtendedPoint {
    pub fn coords(&self) -> &[Rational; 6] {
        &self.0
    }

    fn from_vec(v: Vec<Rational>) -> Self {
        Self(v.try_into().expect("six coordinates"))
    }
}

pub fn extend4(q: &Quad) -> ExtendedPoint {
    let m = q[1].clone().max(q[2].clone());
    ExtendedPoint([
        q[0].clone(),
        q[1].clone(),
        q[2].clone(),
        q[3].clone(),
        m,
        Rational::one(),
    ])
}

pub fn nabla(x: &Quad) -> Quad {
    let [x1, x2, x3, x4] = x;
    [
        x1.clone(),
        x2 - x1,
        x3 - x1,
        x4 - x2.max(x3),
    ]
}

pub fn delta_inv(y: &Quad) -> Quad {
    let [y1, y2, y3, y4] = y;
    [
        y1 + y2.max(y3) + y4,
        y2 + y4,
        y3 + y4,
        y4.clone(),
    ]
}

pub fn theta(z: &Quad) -> Quad {
    z.clone().map(|v| Rational::one() - v)
}

pub fn pl_rowmotion(p: &PolytopePoint) -> PolytopePoint {
    let image = theta(&delta_inv(&nabla(p.coords())));
    PolytopePoint::new(image).expect("rowmotion preserves the polytope")
}

/// A 6×6 matrix pushing extended points forward: row `i` holds the
/// coefficients of output coordinate `i`.
#[derive(Clone, Debug, PartialEq)]
pub struct TransferLift {
    name: &'static str,
    matrix: ExactMatrix<Rational>,
}

impl TransferLift {
    fn from_rows(name: &'static str, rows: [[i64; 6]; 6]) -> Self {
        let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
        Self {
            name,
            matrix: ExactMatrix::from_integers(&rows),
        }
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn matrix(&self) -> &ExactMatrix<Rational> {
        &self.matrix
    }

    pub fn apply(&self, p: &ExtendedPoint) -> ExtendedPoint {
        ExtendedPoint::from_vec(self.matrix.times_vec(p.coords()))
    }
}

/// `N`: `(x₁, x₂−x₁, x₃−x₁, x₄−x₅, x₅−x₁, x₆)`.
pub fn lifted_nabla() -> TransferLift {
    TransferLift::from_rows(
        "N",
        [
            [1, 0, 0, 0, 0, 0],
            [-1, 1, 0, 0, 0, 0],
            [-1, 0, 1, 0, 0, 0],
            [0, 0, 0, 1, -1, 0],
            [-1, 0, 0, 0, 1, 0],
            [0, 0, 0, 0, 0, 1],
        ],
    )
}

/// `D`: `(y₁+y₄+y₅, y₂+y₄, y₃+y₄, y₄, y₄+y₅, y₆)`.
pub fn lifted_delta_inv() -> TransferLift {
    TransferLift::from_rows(
        "D",
        [
            [1, 0, 0, 1, 1, 0],
            [0, 1, 0, 1, 0, 0],
            [0, 0, 1, 1, 0, 0],
            [0, 0, 0, 1, 0, 0],
            [0, 0, 0, 1, 1, 0],
            [0, 0, 0, 0, 0, 1],
        ],
    )
}

/// `H`: `(z₆−z₁, z₆−z₂, z₆−z₃, z₆−z₄, z₅+z₆−z₂−z₃, z₆)`.
pub fn lifted_theta() -> TransferLift {
    TransferLift::from_rows(
        "H",
        [
            [-1, 0, 0, 0, 0, 1],
            [0, -1, 0, 0, 0, 1],
            [0, 0, -1, 0, 0, 1],
            [0, 0, 0, -1, 0, 1],
            [0, -1, -1, 0, 1, 1],
            [0, 0, 0, 0, 0, 1],
        ],
    )
}

/// `H·D·N`, the lift of one rowmotion step.
pub fn rowmotion_lift() -> ExactMatrix<Rational> {
    lifted_theta()
        .matrix()
        .times(lifted_delta_inv().matrix())
        .times(lifted_nabla().matrix())
}

/// Checks each transfer map and their composite against its lift at `p`.
pub fn lift_holds_at(p: &PolytopePoint) -> bool {
    let x = p.coords();
    let y = nabla(x);
    let z = delta_inv(&y);
    let x2 = theta(&z);
    let composite = ExtendedPoint::from_vec(rowmotion_lift().times_vec(extend4(x).coords()));
    lifted_nabla().apply(&extend4(x)) == extend4(&y)
        && lifted_delta_inv().apply(&extend4(&y)) == extend4(&z)
        && lifted_theta().apply(&extend4(&z)) == extend4(&x2)
        && composite == extend4(pl_rowmotion(p).coords())
}

/// Runs [`lift_holds_at`] on `samples` random points drawn from `seed`.
pub fn lift_consistency_check(samples: usize, seed: u64) -> Result<bool> {
    if samples == 0 {
        return Err(Error::InvalidParameters("samples must be at least 1".into()));
    }
    Ok(random_polytope_points(samples, seed).iter().all(lift_holds_at))
}

/// The six 0/1 points of the polytope (indicators of the order filters).
pub fn polytope_vertices() -> Vec<PolytopePoint> {
    [
        [0, 0, 0, 0],
        [0, 0, 0, 1],
        [0, 0, 1, 1],
        [0, 1, 0, 1],
        [0, 1, 1, 1],
        [1, 1, 1, 1],
    ]
    .into_iter()
    .map(|c| PolytopePoint::from_integers(c).expect("0/1 filter indicator"))
    .collect()
}

/// Random rational polytope points with denominators at most 1000. Points
/// with `x₂ = x₃` are redrawn, so every max-comparison has a strict winner.
pub fn random_polytope_points(count: usize, seed: u64) -> Vec<PolytopePoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mut v: Vec<Rational> = (0..4)
            .map(|_| {
                let den: i64 = rng.random_range(1..=1000);
                let num: i64 = rng.random_range(0..=den);
                Rational::new(num.into(), den.into())
            })
            .collect();
        v.sort();
        if v[1] == v[2] {
            continue;
        }
        if rng.random_bool(0.5) {
            v.swap(1, 2);
        }
        let coords: Quad = v.try_into().expect("four coordinates");
        out.push(PolytopePoint::new(coords).expect("sorted unit coordinates"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational;

    fn quad(v: [(i64, i64); 4]) -> Quad {
        v.map(|(p, q)| rational(p, q))
    }

    #[test]
    fn transfer_examples() {
        let z = quad([(0, 1); 4]);
        assert_eq!(nabla(&z), z);
        assert_eq!(theta(&z), quad([(1, 1); 4]));
        let p = quad([(1, 4), (1, 2), (1, 3), (3, 4)]);
        assert_eq!(nabla(&p), quad([(1, 4), (1, 4), (1, 12), (1, 4)]));
    }

    #[test]
    fn lift_examples() {
        let p = quad([(1, 4), (1, 2), (1, 3), (3, 4)]);
        let e = extend4(&p);
        assert_eq!(e.coords()[4], rational(1, 2));
        let image = lifted_nabla().apply(&e);
        let expected = [(1, 4), (1, 4), (1, 12), (1, 4), (1, 4), (1, 1)].map(|(a, b)| rational(a, b));
        assert_eq!(image.coords(), &expected);
        assert_eq!(image, extend4(&nabla(&p)));

        let origin = extend4(&quad([(0, 1); 4]));
        assert_eq!(lifted_theta().apply(&origin).coords(), &[(1, 1); 6].map(|(a, b)| rational(a, b)));
    }

    #[test]
    fn lift_has_order_four() {
        let l = rowmotion_lift();
        let id = ExactMatrix::<Rational>::identity(6);
        assert_eq!(l.pow(4), id);
        assert_ne!(l.pow(2), id);
    }

    #[test]
    fn rowmotion_order_four() {
        let half = PolytopePoint::new(quad([(1, 2); 4])).unwrap();
        let mut q = half.clone();
        for _ in 0..4 {
            q = pl_rowmotion(&q);
        }
        assert_eq!(q, half);
        for p in random_polytope_points(200, 7).iter().chain(&polytope_vertices()) {
            let mut q = p.clone();
            for _ in 0..4 {
                q = pl_rowmotion(&q);
            }
            assert_eq!(q, *p);
        }
    }

    #[test]
    fn vertices_map_to_vertices() {
        let verts = polytope_vertices();
        for v in &verts {
            assert!(verts.contains(&pl_rowmotion(v)));
            assert!(lift_holds_at(v));
        }
    }

    #[test]
    fn consistency() {
        assert!(lift_consistency_check(200, 1).unwrap());
        assert!(lift_consistency_check(0, 1).is_err());
        // ties are a boundary case of the max, still consistent
        let tie = PolytopePoint::new(quad([(1, 5), (1, 2), (1, 2), (3, 5)])).unwrap();
        assert!(lift_holds_at(&tie));
    }

    #[test]
    fn rejects_points_outside() {
        assert!(PolytopePoint::new(quad([(1, 2), (1, 4), (3, 4), (1, 1)])).is_err());
        assert!(PolytopePoint::new(quad([(0, 1), (0, 1), (0, 1), (3, 2)])).is_err());
        assert!(PolytopePoint::new(quad([(-1, 2), (0, 1), (0, 1), (1, 1)])).is_err());
    }

    #[test]
    fn sampler_avoids_ties_and_is_deterministic() {
        let a = random_polytope_points(50, 3);
        assert_eq!(a, random_polytope_points(50, 3));
        assert!(a.iter().all(|p| p.coords()[1] != p.coords()[2]));
    }
}
