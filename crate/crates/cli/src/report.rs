//! Analysis reports and their JSON and table renderings.

use std::fmt::Write as _;

use dynspan::linearize::{
    flatness_report, invariant_basis, spectrum, statistic_report, zero_mesic_dimension,
    zero_mesic_original_combos,
};
use dynspan::{FiniteSystem, Rational, Spectrum, SpectrumMethod, StatisticVerdict};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum MethodChoice {
    Galois,
    Cyclotomic,
    Both,
}

/// The two methods disagreed, which is a bug rather than a property of the
/// input.
#[derive(Debug)]
pub struct Disagreement {
    pub galois: Vec<usize>,
    pub cyclotomic: Vec<usize>,
}

pub fn compute_spectrum(sys: &FiniteSystem, method: MethodChoice) -> Result<Spectrum, Disagreement> {
    match method {
        MethodChoice::Galois => Ok(spectrum(sys, SpectrumMethod::Galois)),
        MethodChoice::Cyclotomic => Ok(spectrum(sys, SpectrumMethod::Cyclotomic)),
        MethodChoice::Both => {
            let g = spectrum(sys, SpectrumMethod::Galois);
            let c = spectrum(sys, SpectrumMethod::Cyclotomic);
            if g == c {
                Ok(g)
            } else {
                Err(Disagreement {
                    galois: g.multiplicities().to_vec(),
                    cyclotomic: c.multiplicities().to_vec(),
                })
            }
        }
    }
}

fn q(v: &Rational) -> String {
    v.to_string()
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumEntry {
    pub exponent: u64,
    pub root_order: u64,
    pub multiplicity: usize,
}

pub fn spectrum_entries(s: &Spectrum) -> Vec<SpectrumEntry> {
    (0..s.order())
        .map(|j| SpectrumEntry {
            exponent: j,
            root_order: s.root_order(j),
            multiplicity: s.multiplicity(j),
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct HomomesyEntry {
    pub name: String,
    pub verdict: &'static str,
    pub c: Option<String>,
}

pub fn homomesy_entries(sys: &FiniteSystem) -> Vec<HomomesyEntry> {
    statistic_report(sys)
        .statistics
        .iter()
        .map(|s| HomomesyEntry {
            name: s.name.clone(),
            verdict: match s.verdict() {
                StatisticVerdict::Invariant => "invariant",
                StatisticVerdict::Mesic(_) => "mesic",
                StatisticVerdict::Neither => "neither",
            },
            c: s.mesic.as_ref().map(q),
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct FlatnessEntry {
    pub min_nonunital: Option<usize>,
    pub max_nonunital: Option<usize>,
    pub ratio: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    #[serde(rename = "dim_V")]
    pub dim_v: usize,
    pub spectrum: Vec<SpectrumEntry>,
    pub invariant_basis: Vec<Vec<String>>,
    pub zero_mesic_dimension: usize,
    pub homomesies: Vec<HomomesyEntry>,
    pub flatness: FlatnessEntry,
}

pub fn basis_strings(basis: &[Vec<Rational>]) -> Vec<Vec<String>> {
    basis.iter().map(|v| v.iter().map(q).collect()).collect()
}

pub fn analyze(sys: &FiniteSystem, method: MethodChoice) -> Result<AnalysisReport, Disagreement> {
    let s = compute_spectrum(sys, method)?;
    let flatness = match flatness_report(sys) {
        Ok(f) => FlatnessEntry {
            min_nonunital: f.min_nonunital,
            max_nonunital: f.max_nonunital,
            ratio: f.ratio.as_ref().map(q),
        },
        // period 1: every eigenvalue is 1
        Err(_) => FlatnessEntry {
            min_nonunital: None,
            max_nonunital: None,
            ratio: None,
        },
    };
    Ok(AnalysisReport {
        dim_v: s.total(),
        spectrum: spectrum_entries(&s),
        invariant_basis: basis_strings(&invariant_basis(sys)),
        zero_mesic_dimension: zero_mesic_dimension(sys),
        homomesies: homomesy_entries(sys),
        flatness,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct HomomesyListing {
    pub homomesies: Vec<HomomesyEntry>,
    /// Coefficient vectors `a` with `Σ a_i g_i` 0-mesic.
    pub zero_mesic_combinations: Vec<Vec<String>>,
}

pub fn homomesy_listing(sys: &FiniteSystem) -> HomomesyListing {
    HomomesyListing {
        homomesies: homomesy_entries(sys),
        zero_mesic_combinations: basis_strings(&zero_mesic_original_combos(sys)),
    }
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

pub fn spectrum_table(entries: &[SpectrumEntry]) -> String {
    let mut out = String::from("exponent  root_order  multiplicity\n");
    for e in entries {
        let _ = writeln!(out, "{:>8}  {:>10}  {:>12}", e.exponent, e.root_order, e.multiplicity);
    }
    out
}

pub fn basis_table(basis: &[Vec<String>]) -> String {
    if basis.is_empty() {
        return "(empty)\n".into();
    }
    basis.iter().map(|v| format!("[{}]\n", v.join(", "))).collect()
}

pub fn homomesy_table(entries: &[HomomesyEntry]) -> String {
    let width = entries.iter().map(|e| e.name.len()).max().unwrap_or(4).max(4);
    let mut out = format!("{:<width$}  verdict    c\n", "name");
    for e in entries {
        let _ = writeln!(out, "{:<width$}  {:<9}  {}", e.name, e.verdict, opt(&e.c));
    }
    out
}

pub fn analysis_table(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "dim V: {}", r.dim_v);
    let _ = writeln!(out, "dim of 0-mesic part: {}", r.zero_mesic_dimension);
    let _ = writeln!(
        out,
        "flatness: min {}, max {}, ratio {}",
        opt(&r.flatness.min_nonunital),
        opt(&r.flatness.max_nonunital),
        opt(&r.flatness.ratio)
    );
    out.push_str("\nspectrum\n");
    out.push_str(&spectrum_table(&r.spectrum));
    out.push_str("\ninvariant basis\n");
    out.push_str(&basis_table(&r.invariant_basis));
    out.push_str("\nstatistics\n");
    out.push_str(&homomesy_table(&r.homomesies));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use dynspan::systems::{chain_rowmotion, multiset_rotation};

    #[test]
    fn multiset_2_3_report() {
        let r = analyze(&multiset_rotation(2, 3).unwrap(), MethodChoice::Both).unwrap();
        assert_eq!(r.dim_v, 4);
        let mults: Vec<usize> = r.spectrum.iter().map(|e| e.multiplicity).collect();
        assert_eq!(mults, vec![2, 2]);
        assert_eq!(r.spectrum[1].root_order, 2);
        assert_eq!(r.flatness.ratio.as_deref(), Some("1"));
    }

    #[test]
    fn chain_3_3_homomesies() {
        let r = analyze(&chain_rowmotion(3, 3).unwrap(), MethodChoice::Galois).unwrap();
        let cs: Vec<_> = r.homomesies.iter().map(|h| h.c.clone().unwrap()).collect();
        assert_eq!(cs, vec!["1/2", "1", "3/2"]);
        assert!(r.homomesies.iter().all(|h| h.verdict == "mesic"));
        let json = serde_json::to_value(&r).unwrap();
        assert!(json.get("dim_V").is_some());
    }
}
