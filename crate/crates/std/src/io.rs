//! JSON formats.
//!
//! | schema       | shape                                                   |
//! |--------------|---------------------------------------------------------|
//! | path         | `{"k": 3, "steps": [3,1,1]}` or `{"values": [0,1,1,2]}` |
//! | tableau      | `{"rows": [[1,1,2,3],[2,2],[3]]}`                        |
//! | distribution | `{"2,1": "3/8", ...}`                                   |
//! | simulation   | `{"value": 0.52, "stderr": 0.0016}`                     |
//! | continuous   | `{"k": 2, "breakpoints": [...], "values": [[...], ...]}` |
//!
//! Exact numbers travel as strings `"num/den"` (or `"n"` for integers).
//! Continuous inputs also accept plain JSON numbers.

use std::collections::BTreeMap;

use pathrsk_core::continuous::PiecewiseLinearPath;
use pathrsk_core::lattice::{MultiPath, Path, Word};
use pathrsk_core::symfunc::Rational;
use pathrsk_core::tableaux::{StandardTableau, Tableau};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PathJson {
    Word { k: usize, steps: Vec<u8> },
    Values { values: Vec<u32> },
}

impl PathJson {
    pub fn from_word(w: &Word) -> Self {
        PathJson::Word { k: w.alphabet(), steps: w.letters().to_vec() }
    }

    /// A word becomes its walk in `Π_k`; raw values become a one-dimensional path.
    pub fn to_multipath(&self) -> Result<MultiPath, CliError> {
        match self {
            PathJson::Word { k, steps } => Ok(pathrsk_core::lattice::word_to_walk(&Word::new(steps.clone(), *k)?)),
            PathJson::Values { values } => Ok(MultiPath::new(vec![Path::new(values.clone())?])?),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauJson {
    pub rows: Vec<Vec<u32>>,
}

impl From<&Tableau> for TableauJson {
    fn from(t: &Tableau) -> Self {
        TableauJson { rows: t.rows().iter().filter(|r| !r.is_empty()).map(|r| r.iter().map(|&a| u32::from(a)).collect()).collect() }
    }
}

impl From<&StandardTableau> for TableauJson {
    fn from(t: &StandardTableau) -> Self {
        TableauJson { rows: t.rows().to_vec() }
    }
}

impl TableauJson {
    pub fn to_tableau(&self, k: usize) -> Result<Tableau, CliError> {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&a| u8::try_from(a).map_err(|_| CliError::Input(format!("entry {a} out of range")))).collect())
            .collect::<Result<Vec<Vec<u8>>, _>>()?;
        Ok(Tableau::new(rows, k)?)
    }
}

pub type DistributionJson = BTreeMap<String, String>;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SimulationJson {
    pub value: f64,
    pub stderr: f64,
}

/// A number that is either a JSON number or an exact `"a/b"` string.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ExactJson {
    Int(i64),
    Float(f64),
    Text(String),
}

impl ExactJson {
    pub fn to_rational(&self) -> Result<Rational, CliError> {
        match self {
            ExactJson::Int(n) => Ok(Rational::from_integer((*n).into())),
            ExactJson::Float(x) => Rational::from_float(*x).ok_or_else(|| CliError::Input(format!("not a finite number: {x}"))),
            ExactJson::Text(s) => parse_rational(s),
        }
    }
}

impl From<&Rational> for ExactJson {
    fn from(q: &Rational) -> Self {
        ExactJson::Text(q.to_string())
    }
}

/// `values[j]` is the point at `breakpoints[j]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ContinuousPathJson {
    pub k: usize,
    pub breakpoints: Vec<ExactJson>,
    pub values: Vec<Vec<ExactJson>>,
}

impl ContinuousPathJson {
    pub fn to_path(&self) -> Result<PiecewiseLinearPath, CliError> {
        if self.values.len() != self.breakpoints.len() {
            return Err(CliError::Input("need one value vector per breakpoint".into()));
        }
        if self.values.iter().any(|v| v.len() != self.k) {
            return Err(CliError::Input(format!("every value vector needs {} entries", self.k)));
        }
        let times = self.breakpoints.iter().map(ExactJson::to_rational).collect::<Result<Vec<_>, _>>()?;
        let points = self
            .values
            .iter()
            .map(|v| v.iter().map(ExactJson::to_rational).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PiecewiseLinearPath::from_points(times, points)?)
    }

    pub fn from_path(f: &PiecewiseLinearPath) -> Result<Self, CliError> {
        let (times, points) = f.points()?;
        Ok(ContinuousPathJson {
            k: f.dim(),
            breakpoints: times.iter().map(ExactJson::from).collect(),
            values: points.iter().map(|p| p.iter().map(ExactJson::from).collect()).collect(),
        })
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, CliError> {
    s.trim().parse::<Rational>().map_err(|_| CliError::Input(format!("not a rational number: {s:?}")))
}

/// Comma-separated list of rationals, e.g. `1/3,2/3`.
pub fn parse_rationals(s: &str) -> Result<Vec<Rational>, CliError> {
    s.split(',').map(parse_rational).collect()
}

/// Comma-separated list of unsigned integers.
pub fn parse_u32s(s: &str) -> Result<Vec<u32>, CliError> {
    s.split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| CliError::Input(format!("not a non-negative integer: {t:?}"))))
        .collect()
}

/// Comma-separated list of floats.
pub fn parse_f64s(s: &str) -> Result<Vec<f64>, CliError> {
    s.split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|_| CliError::Input(format!("not a number: {t:?}"))))
        .collect()
}

pub fn state_key(x: &[u32]) -> String {
    x.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

pub fn distribution<'a>(entries: impl IntoIterator<Item = (&'a [u32], &'a Rational)>) -> DistributionJson {
    entries.into_iter().map(|(x, q)| (state_key(x), q.to_string())).collect()
}

pub fn read_json<T: serde::de::DeserializeOwned>(path: &std::path::Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use pathrsk_core::symfunc::rational;

    #[test]
    fn path_json_forms() {
        let w: PathJson = serde_json::from_str(r#"{"k":3,"steps":[3,1,1]}"#).unwrap();
        assert_eq!(w, PathJson::Word { k: 3, steps: vec![3, 1, 1] });
        let v: PathJson = serde_json::from_str(r#"{"values":[0,1,1,2]}"#).unwrap();
        assert_eq!(v.to_multipath().unwrap().at(3), vec![2]);
        let bad: PathJson = serde_json::from_str(r#"{"values":[0,2]}"#).unwrap();
        assert!(bad.to_multipath().is_err());
        assert!(serde_json::to_string(&w).unwrap().contains("\"steps\""));
    }

    #[test]
    fn rationals_on_the_wire() {
        assert_eq!(parse_rationals("1/3, 2/3").unwrap(), vec![rational(1, 3), rational(2, 3)]);
        assert!(parse_rational("x").is_err());
        let d = distribution([(&[2u32, 1][..], &rational(3, 8))]);
        assert_eq!(serde_json::to_string(&d).unwrap(), r#"{"2,1":"3/8"}"#);
        assert_eq!(ExactJson::Float(0.5).to_rational().unwrap(), rational(1, 2));
    }

    #[test]
    fn continuous_round_trip() {
        let text = r#"{"k":2,"breakpoints":[0,"1/2",1],"values":[[0,0],[1,"-1/2"],[0,1]]}"#;
        let j: ContinuousPathJson = serde_json::from_str(text).unwrap();
        let f = j.to_path().unwrap();
        let back = ContinuousPathJson::from_path(&f).unwrap();
        assert_eq!(back.to_path().unwrap(), f);
    }

    #[test]
    fn tableau_json() {
        let t = TableauJson { rows: vec![vec![1, 1, 2, 3], vec![2, 2], vec![3]] };
        let tab = t.to_tableau(3).unwrap();
        assert_eq!(TableauJson::from(&tab), t);
        assert!(TableauJson { rows: vec![vec![2, 1]] }.to_tableau(3).is_err());
    }
}
