//! JSON state and basis files.
//!
//! A pure state:
//!
//! ```json
//! { "shape": [2, 2], "amplitudes": [[0.7071, 0], [0, 0], [0, 0], [0.7071, 0]] }
//! ```
//!
//! An optional `"weight"` in `(0, 1]` subnormalizes it. A rank-2 ensemble:
//!
//! ```json
//! { "shape": [2, 2], "ensemble": { "p1": 0.5, "psi1": [[1, 0], ...], "psi2": [...] } }
//! ```
//!
//! Amplitudes are listed row-major over `|ij⟩` (`i` indexes subsystem A) and
//! are normalized on load. `"shape": [d]` names a single `d`-level system.
//!
//! A basis-change file is a bare array of rows, each row an array of
//! `[re, im]` pairs, and must be unitary to `1e-9`.

use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::coherence::CoherenceBasis;
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::states::{BipartiteShape, DensityMatrix, PureState, Rank2Ensemble};

/// Contents of a state file.
#[derive(Debug, Clone, PartialEq)]
pub enum StateFile {
    Pure(PureState),
    Ensemble(Rank2Ensemble),
}

impl StateFile {
    pub fn shape(&self) -> BipartiteShape {
        match self {
            StateFile::Pure(psi) => psi.shape(),
            StateFile::Ensemble(e) => e.shape(),
        }
    }

    /// Normalized density matrix (the weight of a pure state is dropped).
    pub fn density(&self) -> Result<DensityMatrix> {
        match self {
            StateFile::Pure(psi) => Ok(psi.density()),
            StateFile::Ensemble(e) => e.density(),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawState {
    shape: Vec<usize>,
    amplitudes: Option<Vec<[f64; 2]>>,
    weight: Option<f64>,
    ensemble: Option<RawEnsemble>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEnsemble {
    p1: f64,
    psi1: Vec<[f64; 2]>,
    psi2: Vec<[f64; 2]>,
}

fn parse_error(context: &str, message: impl Into<String>) -> Error {
    Error::Parse {
        context: context.to_string(),
        message: message.into(),
    }
}

fn json_error(context: &str, err: serde_json::Error) -> Error {
    parse_error(context, format!("line {}, column {}: {err}", err.line(), err.column()))
}

fn field<T>(context: &str, name: &str, r: Result<T>) -> Result<T> {
    r.map_err(|e| parse_error(context, format!("field `{name}`: {e}")))
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn parse_shape(context: &str, dims: &[usize]) -> Result<BipartiteShape> {
    let shape = match dims {
        [d] => BipartiteShape::single(*d),
        [d1, d2] => BipartiteShape::new(*d1, *d2),
        _ => {
            return Err(parse_error(
                context,
                format!("field `shape`: expected [d1, d2] or [d], found {} entries", dims.len()),
            ))
        }
    };
    field(context, "shape", shape)
}

fn parse_amplitudes(context: &str, name: &str, shape: BipartiteShape, raw: &[[f64; 2]]) -> Result<PureState> {
    if raw.len() != shape.dim() {
        return Err(parse_error(
            context,
            format!(
                "field `{name}`: expected {} amplitudes for shape {shape}, found {}",
                shape.dim(),
                raw.len()
            ),
        ));
    }
    if let Some(k) = raw.iter().position(|[re, im]| !re.is_finite() || !im.is_finite()) {
        return Err(parse_error(
            context,
            format!("field `{name}[{k}]`: amplitude is not finite"),
        ));
    }
    let v = raw.iter().map(|&[re, im]| Complex64::new(re, im)).collect();
    field(context, name, PureState::normalized(shape, v))
}

/// Parses state-file text; `context` (usually the path) prefixes errors.
pub fn parse_state(text: &str, context: &str) -> Result<StateFile> {
    let raw: RawState = serde_json::from_str(text).map_err(|e| json_error(context, e))?;
    let shape = parse_shape(context, &raw.shape)?;
    match (raw.amplitudes, raw.ensemble) {
        (Some(amps), None) => {
            let psi = parse_amplitudes(context, "amplitudes", shape, &amps)?;
            let psi = match raw.weight {
                Some(w) => field(context, "weight", psi.with_weight(w))?,
                None => psi,
            };
            Ok(StateFile::Pure(psi))
        }
        (None, Some(ens)) => {
            if raw.weight.is_some() {
                return Err(parse_error(context, "field `weight` applies to pure states only"));
            }
            let psi1 = parse_amplitudes(context, "ensemble.psi1", shape, &ens.psi1)?;
            let psi2 = parse_amplitudes(context, "ensemble.psi2", shape, &ens.psi2)?;
            let e = field(context, "ensemble", Rank2Ensemble::from_weight(ens.p1, psi1, psi2))?;
            Ok(StateFile::Ensemble(e))
        }
        (Some(_), Some(_)) => Err(parse_error(context, "give either `amplitudes` or `ensemble`, not both")),
        (None, None) => Err(parse_error(context, "missing field `amplitudes` or `ensemble`")),
    }
}

pub fn load_state(path: impl AsRef<Path>) -> Result<StateFile> {
    let path = path.as_ref();
    parse_state(&read(path)?, &path.display().to_string())
}

/// Parses a unitary basis-change matrix.
pub fn parse_basis(text: &str, context: &str) -> Result<CoherenceBasis> {
    let rows: Vec<Vec<[f64; 2]>> = serde_json::from_str(text).map_err(|e| json_error(context, e))?;
    let rows: Vec<Vec<Complex64>> = rows
        .into_iter()
        .map(|r| r.into_iter().map(|[re, im]| Complex64::new(re, im)).collect())
        .collect();
    let m = ComplexMatrix::from_rows(&rows).map_err(|e| parse_error(context, e.to_string()))?;
    CoherenceBasis::rotated(m).map_err(|e| parse_error(context, e.to_string()))
}

pub fn load_basis(path: impl AsRef<Path>) -> Result<CoherenceBasis> {
    let path = path.as_ref();
    parse_basis(&read(path)?, &path.display().to_string())
}

fn shape_json(shape: BipartiteShape) -> Value {
    if shape.is_bipartite() {
        json!([shape.d1(), shape.d2()])
    } else {
        json!([shape.d1()])
    }
}

fn amplitudes_json(v: &[Complex64]) -> Value {
    v.iter().map(|z| json!([z.re, z.im])).collect()
}

pub fn pure_to_json(psi: &PureState) -> Value {
    let mut out = json!({
        "shape": shape_json(psi.shape()),
        "amplitudes": amplitudes_json(psi.amplitudes()),
    });
    if psi.weight() != 1.0 {
        out["weight"] = json!(psi.weight());
    }
    out
}

pub fn ensemble_to_json(e: &Rank2Ensemble) -> Value {
    json!({
        "shape": shape_json(e.shape()),
        "ensemble": {
            "p1": e.p1(),
            "psi1": amplitudes_json(e.psi1().amplitudes()),
            "psi2": amplitudes_json(e.psi2().amplitudes()),
        }
    })
}

pub fn matrix_to_json(m: &ComplexMatrix) -> Value {
    (0..m.rows()).map(|i| amplitudes_json(m.row(i))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::catalog;

    const BELL: &str = r#"{"shape": [2, 2], "amplitudes": [[1, 0], [0, 0], [0, 0], [1, 0]]}"#;

    #[test]
    fn bell_state_is_normalized_on_load() {
        let StateFile::Pure(psi) = parse_state(BELL, "bell").unwrap() else {
            panic!("expected a pure state");
        };
        assert!((psi.amplitude(0, 0).re - 0.5f64.sqrt()).abs() < 1e-15);
        assert_eq!(psi.weight(), 1.0);
    }

    #[test]
    fn ensemble_round_trip() {
        let e = catalog::example_ensemble(0.3).unwrap();
        let text = ensemble_to_json(&e).to_string();
        let StateFile::Ensemble(back) = parse_state(&text, "x").unwrap() else {
            panic!("expected an ensemble");
        };
        assert_eq!(back.p1(), e.p1());
        assert!(
            back.density()
                .unwrap()
                .matrix()
                .max_abs_diff(e.density().unwrap().matrix())
                < 1e-15
        );
    }

    #[test]
    fn pure_round_trip_keeps_weight() {
        let psi = catalog::phi_minus().with_weight(0.25).unwrap();
        let StateFile::Pure(back) = parse_state(&pure_to_json(&psi).to_string(), "x").unwrap() else {
            panic!("expected a pure state");
        };
        assert_eq!(back, psi);
    }

    #[test]
    fn single_system_shape() {
        let s = parse_state(r#"{"shape": [3], "amplitudes": [[1,0],[1,0],[1,0]]}"#, "q").unwrap();
        assert!(!s.shape().is_bipartite());
        assert_eq!(s.shape().dim(), 3);
    }

    fn message(text: &str) -> String {
        parse_state(text, "f.json").unwrap_err().to_string()
    }

    #[test]
    fn errors_carry_context() {
        assert!(message("{\n\"shape\": [2, 2],\n\"amplitudes\": [[1, 0], 3]}").contains("line 3"));
        assert!(message(r#"{"shape": [2, 2], "amplitudes": [[1, 0]]}"#).contains("expected 4 amplitudes"));
        assert!(message(r#"{"shape": [2, 2, 2], "amplitudes": []}"#).contains("field `shape`"));
        assert!(message(r#"{"shape": [1, 2], "amplitudes": [[1,0],[0,0]]}"#).contains("field `shape`"));
        assert!(message(r#"{"shape": [2, 2], "amplitudes": [[0,0],[0,0],[0,0],[0,0]]}"#).contains("field `amplitudes`"));
        assert!(message(r#"{"shape": [2, 2]}"#).contains("missing field"));
        assert!(
            message(r#"{"shape": [2, 2], "amplitudes": [[1,0],[0,0],[0,0],[0,0]], "colour": 1}"#)
                .contains("unknown field")
        );
        let dup = r#"{"shape": [2, 2], "ensemble": {"p1": 0.5, "psi1": [[1,0],[0,0],[0,0],[0,0]], "psi2": [[2,0],[0,0],[0,0],[0,0]]}}"#;
        let m = message(dup);
        assert!(
            m.contains("field `ensemble`") && m.contains("linear_independence"),
            "{m}"
        );
        let w = r#"{"shape": [2, 2], "amplitudes": [[1,0],[0,0],[0,0],[0,0]], "weight": 1.5}"#;
        assert!(message(w).contains("field `weight`"));
        assert!(message(r#"{"shape": [2, 2], "ensemble": {"p1": 1.0, "psi1": [[1,0],[0,0],[0,0],[0,0]], "psi2": [[0,0],[0,0],[0,0],[1,0]]}}"#).contains("p1_range"));
    }

    #[test]
    fn basis_files() {
        let h = 0.5f64.sqrt();
        let text = format!("[[[{h},0],[{h},0]],[[{h},0],[{},0]]]", -h);
        let basis = parse_basis(&text, "h").unwrap();
        assert_eq!(basis.dimension(), 2);
        assert!(parse_basis("[[[1,0],[0,0]],[[0,0],[2,0]]]", "b")
            .unwrap_err()
            .to_string()
            .contains("not unitary"));
        assert!(parse_basis("[[[1,0],[0,0]],[[0,0]]]", "b").is_err());
        let back = parse_basis(&matrix_to_json(basis.change().unwrap()).to_string(), "m").unwrap();
        assert_eq!(back, basis);
    }

    #[test]
    fn missing_file_reports_path() {
        let err = load_state("/nonexistent/state.json").unwrap_err();
        assert!(err.to_string().contains("/nonexistent/state.json"));
    }
}
