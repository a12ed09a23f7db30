//! On-disk problem and report documents (JSON).
//!
//! A problem file carries the fields `w`, `p`, `A`, `b` and `c`. Column and
//! row indices in every document are 0-based.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{FreError, Result};
use crate::model::Problem;
use crate::optimize::SolveReport;
use crate::wpm::WpmParams;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub w: f64,
    pub p: f64,
    #[serde(rename = "A")]
    pub a: Vec<Vec<f64>>,
    pub b: Vec<f64>,
    pub c: Vec<f64>,
}

impl From<&Problem> for ProblemFile {
    fn from(problem: &Problem) -> Self {
        ProblemFile {
            w: problem.params().w(),
            p: problem.params().p(),
            a: problem.matrix().to_vec(),
            b: problem.rhs().to_vec(),
            c: problem.cost().to_vec(),
        }
    }
}

impl TryFrom<ProblemFile> for Problem {
    type Error = FreError;

    fn try_from(file: ProblemFile) -> Result<Problem> {
        let params = WpmParams::new(file.w, file.p)?;
        Problem::new(file.a, file.b, file.c, params)
    }
}

pub fn parse_problem(document: &str) -> Result<Problem> {
    let file: ProblemFile = serde_json::from_str(document)
        .map_err(|e| FreError::Parse(format!("line {} column {}: {e}", e.line(), e.column())))?;
    Problem::try_from(file)
}

/// Pretty JSON. Floats are written in shortest round-trip form, so parsing
/// the output reproduces every value bit for bit.
pub fn serialize_problem(problem: &Problem) -> String {
    serde_json::to_string_pretty(&ProblemFile::from(problem)).expect("problem serializes")
}

/// A point either as a bare array or as `{"x": [...]}`.
#[derive(Deserialize)]
#[serde(untagged)]
enum PointFile {
    Bare(Vec<f64>),
    Wrapped { x: Vec<f64> },
}

pub fn parse_point(document: &str) -> Result<Vec<f64>> {
    let point: PointFile =
        serde_json::from_str(document).map_err(|e| FreError::Parse(format!("point file: {e}")))?;
    Ok(match point {
        PointFile::Bare(x) | PointFile::Wrapped { x } => x,
    })
}

/// The solve report followed by a `timing` object.
pub fn report_document(report: &SolveReport, elapsed_seconds: Option<f64>) -> String {
    let mut value = serde_json::to_value(report).expect("report serializes");
    if let (Value::Object(map), Some(secs)) = (&mut value, elapsed_seconds) {
        map.insert(
            "timing".into(),
            serde_json::json!({ "elapsed_seconds": secs }),
        );
    }
    serde_json::to_string_pretty(&value).expect("report serializes")
}
