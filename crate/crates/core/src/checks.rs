//! Reference checks of the engine against closed-form results.
//!
//! Each check recomputes a known answer (a multiplicity formula, an explicit
//! orbit, a matrix identity) independently of the code path it exercises and
//! reports the first disagreement it finds.

use std::time::{Duration, Instant};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dynsys::FiniteSystem;
use crate::exactalg::{cofactor_determinant, ExactMatrix, Rational};
use crate::linearize::{
    coboundary_witness, compose_with_map, extend_products, orbit_averages, presenting_matrix,
    spectrum, statistic_report, SpectrumMethod,
};
use crate::plrowmotion::{
    exponent_orbit_sum, int_matrix_pow, lift_holds_at, lyness_matrix, lyness_numeric_orbit_sum,
    lyness_orbit, lyness_spectrum, pl_rowmotion, polytope_vertices, random_lyness_seeds,
    random_polytope_points, rowmotion_lift, ExpVector, IntMatrix, LYNESS_TOLERANCE,
};
use crate::systems::{
    chain_rowmotion, distinct_multiset_rotation, multiset_rotation, negation_system,
    nesw_det_closed_form, nesw_entries, nesw_matrix, nesw_recurrence_check, NeswEntries,
};

/// Identifiers accepted by [`run_check`], in reporting order.
pub const CHECK_IDS: [&str; 10] = [
    "binary-rotation",
    "rotation-flatness",
    "chain",
    "distinct-4-2",
    "structure",
    "coboundary",
    "nesw",
    "lyness",
    "lift",
    "products",
];

#[derive(Clone, Debug)]
pub struct CheckOptions {
    /// Exponent matrix used by the Lyness check. Replacing it with a wrong
    /// matrix must make that check fail.
    pub lyness_matrix: IntMatrix,
    pub seed: u64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        Self {
            lyness_matrix: lyness_matrix(),
            seed: 2024,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub id: &'static str,
    pub title: &'static str,
    pub expected: String,
    pub got: String,
    pub passed: bool,
    pub elapsed: Duration,
}

struct CheckEntry {
    id: &'static str,
    title: &'static str,
    expected: &'static str,
    limit: Option<Duration>,
    run: fn(&CheckOptions) -> Result<String, String>,
}

const ENTRIES: [CheckEntry; 10] = [
    CheckEntry {
        id: "binary-rotation",
        title: "multiset rotation n=2, k=2..12",
        expected: "mult(1)=ceil((k+1)/2), mult(-1)=floor((k+1)/2), both methods, < 10 s",
        limit: Some(Duration::from_secs(10)),
        run: binary_rotation_check,
    },
    CheckEntry {
        id: "rotation-flatness",
        title: "multiset rotation n=3..6, k=2..6",
        expected: "mult(1)=floor(k/2)+1, mult(z)=k for z != 1, < 120 s",
        limit: Some(Duration::from_secs(120)),
        run: rotation_flatness_check,
    },
    CheckEntry {
        id: "chain",
        title: "chain rowmotion n=3..5, k=2..5",
        expected: "period k+1, mult 1 at every (k+1)-st root, g_i is i(n-1)/(k+1)-mesic, dim V=k+1",
        limit: None,
        run: chain,
    },
    CheckEntry {
        id: "distinct-4-2",
        title: "distinct-multiset rotation (4,2)",
        expected: "{1:2, i:1, -1:2, -i:1}",
        limit: None,
        run: counterexample,
    },
    CheckEntry {
        id: "structure",
        title: "built-ins with n<=8, k<=6",
        expected: "rank M = rank M1 + rank(M-M') = sum of mults; methods agree; mults depend on gcd(j,n)",
        limit: None,
        run: structure,
    },
    CheckEntry {
        id: "coboundary",
        title: "coboundary witnesses",
        expected: "f = g - g∘T for 100 random 0-mesic f per system",
        limit: None,
        run: coboundary,
    },
    CheckEntry {
        id: "nesw",
        title: "NESW determinants",
        expected: "closed form = cofactor det (k<=8), recurrence, entry identities (n<=10)",
        limit: None,
        run: nesw,
    },
    CheckEntry {
        id: "lyness",
        title: "Lyness 5-cycle",
        expected: "M^5=I, mult 1 per 5th root, (-2,0,1,0,0) 0-mesic, orbit of (1,1), e1 orbit sum (-1,-1,1,1,1)",
        limit: None,
        run: lyness,
    },
    CheckEntry {
        id: "lift",
        title: "[2]x[2] rowmotion lift",
        expected: "rowmotion^4 = id, lifts commute with extension, (HDN)^4 = I",
        limit: None,
        run: lift,
    },
    CheckEntry {
        id: "products",
        title: "product extension, multiset rotation n=2, k=2..5",
        expected: "#1(x)·#1(Tx) is orbit-constant and lies in the extended V1",
        limit: None,
        run: products,
    },
];

/// Runs one check by identifier; `None` for an unknown identifier. A panic
/// inside the check is reported as a failure.
pub fn run_check(id: &str, opts: &CheckOptions) -> Option<CheckResult> {
    let entry = ENTRIES.iter().find(|s| s.id == id)?;
    let start = Instant::now();
    let outcome = std::panic::catch_unwind(|| (entry.run)(opts)).unwrap_or_else(|payload| {
        let msg = payload
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "unknown panic".into());
        Err(format!("panicked: {msg}"))
    });
    let elapsed = start.elapsed();
    let (mut passed, mut got) = match outcome {
        Ok(summary) => (true, summary),
        Err(failure) => (false, failure),
    };
    if let Some(limit) = entry.limit {
        if elapsed > limit {
            passed = false;
            got = format!("{got}; took {elapsed:.2?}, limit {limit:?}");
        }
    }
    Some(CheckResult {
        id: entry.id,
        title: entry.title,
        expected: entry.expected.to_string(),
        got,
        passed,
        elapsed,
    })
}

pub fn run_all(opts: &CheckOptions) -> Vec<CheckResult> {
    CHECK_IDS
        .iter()
        .map(|id| run_check(id, opts).expect("known id"))
        .collect()
}

fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn build(r: crate::Result<FiniteSystem>) -> Result<FiniteSystem, String> {
    r.map_err(|e| e.to_string())
}

fn both_methods(sys: &FiniteSystem, label: &str) -> Result<Vec<usize>, String> {
    let g = spectrum(sys, SpectrumMethod::Galois);
    let c = spectrum(sys, SpectrumMethod::Cyclotomic);
    ensure(g == c, || {
        format!(
            "{label}: galois {:?} vs cyclotomic {:?}",
            g.multiplicities(),
            c.multiplicities()
        )
    })?;
    Ok(g.multiplicities().to_vec())
}

fn binary_rotation_check(_: &CheckOptions) -> Result<String, String> {
    for k in 2..=12 {
        let sys = build(multiset_rotation(2, k))?;
        let got = both_methods(&sys, &format!("k={k}"))?;
        let want = vec![(k + 2) / 2, (k + 1) / 2];
        ensure(got == want, || format!("k={k}: got {got:?}, want {want:?}"))?;
    }
    Ok("11 cases, both methods".into())
}

fn rotation_flatness_check(_: &CheckOptions) -> Result<String, String> {
    let mut cases = 0;
    for n in 3..=6u32 {
        for k in 2..=6 {
            let sys = build(multiset_rotation(n, k))?;
            let got = both_methods(&sys, &format!("n={n}, k={k}"))?;
            let mut want = vec![k; n as usize];
            want[0] = k / 2 + 1;
            ensure(got == want, || format!("n={n}, k={k}: got {got:?}, want {want:?}"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} cases, both methods"))
}

fn chain(_: &CheckOptions) -> Result<String, String> {
    let mut cases = 0;
    for n in 3..=5u32 {
        for k in 2..=5 {
            let label = format!("n={n}, k={k}");
            let sys = build(chain_rowmotion(n, k))?;
            let period = sys.minimal_period();
            ensure(period == k as u64 + 1, || format!("{label}: period {period}"))?;
            let mults = both_methods(&sys, &label)?;
            ensure(mults == vec![1; k + 1], || format!("{label}: spectrum {mults:?}"))?;
            let report = statistic_report(&sys);
            for (i, s) in report.statistics.iter().enumerate() {
                let want = Rational::new(((i + 1) * (n as usize - 1)).into(), (k + 1).into());
                ensure(s.mesic.as_ref() == Some(&want), || {
                    format!("{label}: g{} has average {:?}, want {want}", i + 1, s.mesic)
                })?;
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} cases"))
}

fn counterexample(_: &CheckOptions) -> Result<String, String> {
    let sys = build(distinct_multiset_rotation(4, 2))?;
    let got = both_methods(&sys, "(4,2)")?;
    ensure(got == vec![2, 1, 2, 1], || format!("got {got:?}"))?;
    Ok("{1:2, i:1, -1:2, -i:1}".into())
}

fn builtins_up_to(max_n: u32, max_k: usize) -> Vec<(String, FiniteSystem)> {
    let mut out = vec![("negation".to_string(), negation_system())];
    for n in 1..=max_n {
        for k in 1..=max_k {
            if n >= 2 && k >= 2 {
                out.push((format!("multiset({n},{k})"), multiset_rotation(n, k).expect("in range")));
                out.push((format!("chain({n},{k})"), chain_rowmotion(n, k).expect("in range")));
            }
            if k <= n as usize {
                out.push((
                    format!("distinct({n},{k})"),
                    distinct_multiset_rotation(n, k).expect("in range"),
                ));
            }
        }
    }
    out
}

fn structure(_: &CheckOptions) -> Result<String, String> {
    use rayon::prelude::*;
    let systems = builtins_up_to(8, 6);
    systems
        .par_iter()
        .map(|(label, sys)| {
            let pm = presenting_matrix(sys);
            let rank = pm.matrix().rank();
            let split = pm.invariant_matrix().rank() + pm.shifted_difference().rank();
            let g = spectrum(sys, SpectrumMethod::Galois);
            let c = spectrum(sys, SpectrumMethod::Cyclotomic);
            ensure(rank == split, || format!("{label}: rank {rank} vs split {split}"))?;
            ensure(g == c, || {
                format!("{label}: galois {:?} vs cyclotomic {:?}", g.multiplicities(), c.multiplicities())
            })?;
            ensure(c.total() == rank, || format!("{label}: total {} vs rank {rank}", c.total()))?;
            ensure(c.has_galois_symmetry(), || {
                format!("{label}: {:?} not constant on gcd classes", c.multiplicities())
            })
        })
        .collect::<Result<Vec<()>, String>>()?;
    Ok(format!("{} systems", systems.len()))
}

fn coboundary(opts: &CheckOptions) -> Result<String, String> {
    let systems = vec![
        negation_system(),
        build(multiset_rotation(2, 4))?,
        build(multiset_rotation(3, 3))?,
        build(chain_rowmotion(3, 3))?,
        build(chain_rowmotion(4, 2))?,
        build(distinct_multiset_rotation(5, 2))?,
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for sys in &systems {
        let orbit_of = sys.orbits().orbit_index();
        for trial in 0..100 {
            let raw: Vec<Rational> = (0..sys.size())
                .map(|_| Rational::new(rng.random_range(-10i64..=10).into(), rng.random_range(1i64..=6).into()))
                .collect();
            let avgs = orbit_averages(sys, &raw);
            let f: Vec<Rational> = raw.iter().zip(&orbit_of).map(|(v, &o)| v - &avgs[o]).collect();
            let g = coboundary_witness(sys, &f).map_err(|e| e.to_string())?;
            let ug = compose_with_map(sys, &g);
            let ok = (0..sys.size()).all(|x| &g[x] - &ug[x] == f[x]);
            ensure(ok, || format!("|X|={}: trial {trial} witness fails", sys.size()))?;
        }
    }
    Ok(format!("{} systems x 100 functions", systems.len()))
}

fn nesw(opts: &CheckOptions) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x5eed);
    let mut draw = || loop {
        let v = Rational::new(rng.random_range(-9i64..=9).into(), rng.random_range(1i64..=5).into());
        if !v.is_zero() {
            return v;
        }
    };
    for trial in 0..20 {
        let e = NeswEntries::new(draw(), draw(), draw(), draw());
        for k in 2..=8 {
            let closed = nesw_det_closed_form(k, &e).map_err(|e| e.to_string())?;
            let grid = nesw_matrix(k, &e).map_err(|e| e.to_string())?.grid;
            let brute = cofactor_determinant(&grid);
            ensure(closed == brute, || format!("trial {trial}, k={k}: closed {closed} vs cofactor {brute}"))?;
            if k >= 3 {
                let ok = nesw_recurrence_check(k, &e).map_err(|e| e.to_string())?;
                ensure(ok, || format!("trial {trial}, k={k}: recurrence fails"))?;
            }
        }
    }
    for n in 2..=10u64 {
        for j in 1..n {
            let e = nesw_entries(n, j).map_err(|e| e.to_string())?;
            let field = e.north.field().clone();
            let g = num_integer::gcd(j, n);
            let zeta = field.zeta_pow((j / g) as i64);
            let last = zeta.pow(n - 1);
            let one = field.one();
            let one_minus = &one - &zeta;
            let ns = &one_minus * &(&e.south - &e.north);
            let ew = &one_minus * &(&e.east - &e.west);
            ensure(ns == (&one - &last).scaled(&int(n as i64)), || {
                format!("n={n}, j={j}: (1-z)(S-N) = {ns}")
            })?;
            ensure(ew == (&last - &one).scaled(&int(n as i64 - 2)), || {
                format!("n={n}, j={j}: (1-z)(E-W) = {ew}")
            })?;
        }
    }
    Ok("20 random entry sets x k=2..8; n=2..10 identities".into())
}

fn lyness(opts: &CheckOptions) -> Result<String, String> {
    let m = &opts.lyness_matrix;
    let id = int_matrix_pow(m, 0);
    ensure(int_matrix_pow(m, 5) == id, || "M^5 != I".into())?;
    let mults = lyness_spectrum(m);
    ensure(mults == [1; 5], || format!("multiplicities {mults:?}"))?;
    let log_v = ExpVector([-2, 0, 1, 0, 0]);
    let s = exponent_orbit_sum(m, &log_v, 5);
    ensure(s.is_zero(), || format!("orbit sum of (-2,0,1,0,0) is {:?}", s.0))?;
    let w = exponent_orbit_sum(m, &ExpVector::unit(0), 5);
    ensure(w == ExpVector([-1, -1, 1, 1, 1]), || format!("orbit sum of e1 is {:?}", w.0))?;
    let image = ExpVector(std::array::from_fn(|r| (0..5).map(|c| m[r][c] * w.0[c]).sum()));
    ensure(image == w, || format!("M w = {:?}", image.0))?;

    let orbit = lyness_orbit(&int(1), &int(1)).map_err(|e| e.to_string())?;
    let want = [(1, 1), (1, 2), (2, 3), (3, 2), (2, 1)].map(|(a, b)| (int(a), int(b)));
    ensure(orbit == want, || format!("orbit of (1,1): {orbit:?}"))?;
    let mut distinct = orbit.clone();
    distinct.sort();
    distinct.dedup();
    ensure(distinct.len() == 5, || "orbit of (1,1) has period < 5".into())?;

    for (x, y) in random_lyness_seeds(100, opts.seed) {
        let sum = lyness_numeric_orbit_sum(&log_v, (&x, &y)).map_err(|e| e.to_string())?;
        ensure(sum.abs() < LYNESS_TOLERANCE, || format!("seed ({x}, {y}): orbit sum {sum:e}"))?;
    }
    Ok("all identities hold; 100 numeric orbit sums below 1e-9".into())
}

fn lift(opts: &CheckOptions) -> Result<String, String> {
    let id6 = ExactMatrix::<Rational>::identity(6);
    ensure(rowmotion_lift().pow(4) == id6, || "(HDN)^4 != I".into())?;
    let mut points = random_polytope_points(1000, opts.seed);
    points.extend(polytope_vertices());
    for p in &points {
        let mut q = p.clone();
        for _ in 0..4 {
            q = pl_rowmotion(&q);
        }
        ensure(q == *p, || format!("rowmotion^4 moves {p} to {q}"))?;
        ensure(lift_holds_at(p), || format!("lift fails at {p}"))?;
    }
    Ok(format!("{} points", points.len()))
}

fn products(_: &CheckOptions) -> Result<String, String> {
    for k in 2..=5 {
        let sys = build(multiset_rotation(2, k))?;
        let ones: Vec<Rational> = sys.stats().iter().map(|row| row.iter().cloned().sum()).collect();
        let f: Vec<Rational> = (0..sys.size()).map(|x| &ones[x] * &ones[sys.apply(x)]).collect();
        ensure(f == compose_with_map(&sys, &f), || format!("k={k}: not orbit-constant"))?;
        let ext = extend_products(&sys);
        let m1 = presenting_matrix(&ext).invariant_matrix();
        let with = m1.hconcat(&ExactMatrix::from_columns(sys.size(), &[f]));
        ensure(with.rank() == m1.rank(), || format!("k={k}: not in the extended V1"))?;
    }
    Ok("k=2..5".into())
}
