use crate::dynsys::FiniteSystem;
use crate::error::{Error, Result};
use crate::exactalg::Rational;

use super::spectrum::{spectrum, SpectrumMethod};

/// Summary of how far the non-unital multiplicities are from constant.
///
/// `min_nonunital`, `max_nonunital` and `ratio` range over non-unital roots
/// with nonzero multiplicity and are `None` when there are none.
#[derive(Clone, Debug, PartialEq)]
pub struct FlatnessReport {
    pub mult_one: usize,
    pub min_nonunital: Option<usize>,
    pub max_nonunital: Option<usize>,
    pub ratio: Option<Rational>,
    pub dim_v: usize,
    pub dim_v1_perp: usize,
}

pub fn flatness_report(sys: &FiniteSystem) -> Result<FlatnessReport> {
    if sys.period() < 2 {
        return Err(Error::InvalidParameters(format!(
            "flatness needs period >= 2, got {}",
            sys.period()
        )));
    }
    let s = spectrum(sys, SpectrumMethod::Galois);
    let nonzero = s.multiplicities()[1..].iter().copied().filter(|&m| m > 0);
    let min = nonzero.clone().min();
    let max = nonzero.max();
    let ratio = min
        .zip(max)
        .map(|(lo, hi)| Rational::new(hi.into(), lo.into()));
    Ok(FlatnessReport {
        mult_one: s.unital(),
        min_nonunital: min,
        max_nonunital: max,
        ratio,
        dim_v: s.total(),
        dim_v1_perp: s.nonunital_total(),
    })
}
