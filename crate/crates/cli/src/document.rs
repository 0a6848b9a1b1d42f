//! The JSON exchange format for systems.

use std::str::FromStr;

use dynspan::{FiniteSystem, Rational, Violation};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemDocument {
    pub period: u64,
    pub perm: Vec<usize>,
    pub stats: Vec<Vec<Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stat_names: Option<Vec<String>>,
}

/// Parses `-?digits(/digits)?` with a nonzero denominator.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let bad = || format!("malformed rational {s:?}: expected p/q with integer p and nonzero q");
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p, Some(q)),
        None => (s, None),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    let body = num.strip_prefix('-').unwrap_or(num);
    if !digits(body) || den.is_some_and(|q| !digits(q)) {
        return Err(bad());
    }
    let p = BigInt::from_str(num).map_err(|_| bad())?;
    let q = match den {
        Some(q) => BigInt::from_str(q).map_err(|_| bad())?,
        None => BigInt::from(1),
    };
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

fn parse_entry(v: &Value, row: usize, col: usize) -> Result<Rational, String> {
    let at = |e: String| format!("stats[{row}][{col}]: {e}");
    match v {
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(Rational::from_integer(i.into())),
            None => Err(at(format!("{n} is not an integer; write fractions as \"p/q\" strings"))),
        },
        Value::String(s) => parse_rational(s).map_err(at),
        other => Err(at(format!("expected an integer or a \"p/q\" string, got {other}"))),
    }
}

fn encode(q: &Rational) -> Value {
    if q.is_integer() {
        if let Some(i) = q.to_integer().to_i64() {
            return Value::from(i);
        }
    }
    Value::from(q.to_string())
}

impl SystemDocument {
    pub fn from_json(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map_err(|e| format!("invalid system document: {e}"))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    /// Converts to a validated system, listing every problem found.
    pub fn to_system(&self) -> Result<FiniteSystem, String> {
        let mut problems = Vec::new();
        let mut stats = Vec::with_capacity(self.stats.len());
        for (r, row) in self.stats.iter().enumerate() {
            let mut parsed = Vec::with_capacity(row.len());
            for (c, v) in row.iter().enumerate() {
                match parse_entry(v, r, c) {
                    Ok(q) => parsed.push(q),
                    Err(e) => problems.push(e),
                }
            }
            stats.push(parsed);
        }
        if !problems.is_empty() {
            return Err(problems.join("\n"));
        }

        let k = match (&self.stat_names, stats.first()) {
            (_, Some(row)) => row.len(),
            (Some(names), None) => names.len(),
            (None, None) => 0,
        };
        let sys = FiniteSystem::from_parts(self.perm.clone(), self.period, k, stats);
        let mut violations = sys.validate().err().unwrap_or_default();
        if let Some(l) = &self.labels {
            if l.len() != sys.size() {
                violations.push(Violation::LabelsLength {
                    expected: sys.size(),
                    got: l.len(),
                });
            }
        }
        if let Some(s) = &self.stat_names {
            if s.len() != k {
                violations.push(Violation::StatNamesLength {
                    expected: k,
                    got: s.len(),
                });
            }
        }
        if !violations.is_empty() {
            let lines: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
            return Err(format!("invalid system:\n  {}", lines.join("\n  ")));
        }

        let mut sys = sys;
        if let Some(l) = &self.labels {
            sys = sys.with_labels(l.clone()).map_err(|e| e.to_string())?;
        }
        if let Some(s) = &self.stat_names {
            sys = sys.with_stat_names(s.clone()).map_err(|e| e.to_string())?;
        }
        Ok(sys)
    }

    pub fn from_system(sys: &FiniteSystem) -> Self {
        Self {
            period: sys.period(),
            perm: sys.perm().to_vec(),
            stats: sys.stats().iter().map(|r| r.iter().map(encode).collect()).collect(),
            labels: sys.labels().map(<[String]>::to_vec),
            stat_names: sys.has_stat_names().then(|| sys.stat_names()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use dynspan::systems::multiset_rotation;

    #[test]
    fn rational_strings() {
        assert_eq!(parse_rational("-3/4").unwrap(), Rational::new((-3).into(), 4.into()));
        assert_eq!(parse_rational("6/4").unwrap(), Rational::new(3.into(), 2.into()));
        assert_eq!(parse_rational("7").unwrap(), Rational::from_integer(7.into()));
        for bad in ["", "1/0", "1/", "/2", "+1/2", "1/-2", "1.5", "a/b", "--1", "1/00"] {
            assert!(parse_rational(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn round_trip() {
        let sys = multiset_rotation(3, 2).unwrap();
        let doc = SystemDocument::from_system(&sys);
        let again = SystemDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(again, doc);
        assert_eq!(again.to_system().unwrap(), sys);
    }

    #[test]
    fn mixed_entries() {
        let doc = SystemDocument::from_json(
            r#"{"period": 2, "perm": [1, 0], "stats": [[1, "1/2"], ["-3", 0]]}"#,
        )
        .unwrap();
        let sys = doc.to_system().unwrap();
        assert_eq!(sys.stat(0, 1), &Rational::new(1.into(), 2.into()));
        assert_eq!(sys.stat(1, 0), &Rational::from_integer((-3).into()));
    }

    #[test]
    fn lists_every_violation() {
        let doc = SystemDocument::from_json(
            r#"{"period": 1, "perm": [0, 0], "stats": [[1, 2], [3]], "labels": ["a"]}"#,
        )
        .unwrap();
        let err = doc.to_system().unwrap_err();
        assert!(err.contains("not a bijection"), "{err}");
        assert!(err.contains("row 1"), "{err}");
        assert!(err.contains("labels"), "{err}");

        let doc = SystemDocument::from_json(
            r#"{"period": 2, "perm": [0], "stats": [[1.5, "x"]]}"#,
        )
        .unwrap();
        let err = doc.to_system().unwrap_err();
        assert_eq!(err.lines().count(), 2, "{err}");
    }

    #[test]
    fn rejects_unknown_keys() {
        assert!(SystemDocument::from_json(r#"{"period": 1, "perm": [], "stats": [], "x": 1}"#).is_err());
    }
}
