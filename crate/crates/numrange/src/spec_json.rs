//! JSON interchange for family specs and matrices.
//!
//! Specs are tagged objects, e.g.
//! `{"variant":"NilpotentDim5","b":0.5,"t":0.5}` or
//! `{"variant":"ExceptionalDim5","sign":"+","phi":0}`. Complex scalars are
//! either a bare number or an `[re, im]` pair. Matrices are
//! `{"n": 3, "entries": [[re, im], ...]}` in row-major order.

use std::fmt;

use numrange_core::pisom::{
    ExceptionalDim5, NilpotentDim4, NilpotentDim5, PisomSpec, Rank2Dim3, RawBlocks, RectBlock, Sign,
};
use numrange_core::{Complex64, ComplexMatrix};
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Tolerance for the `B*B + C*C = I` check on raw blocks.
pub const RAW_BLOCK_TOL: f64 = 1e-10;

/// A problem with user-supplied input; maps to exit status 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

impl From<numrange_core::Error> for InputError {
    fn from(e: numrange_core::Error) -> Self {
        InputError(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(untagged)]
enum ScalarJson {
    Real(f64),
    Pair([f64; 2]),
}

impl From<ScalarJson> for Complex64 {
    fn from(s: ScalarJson) -> Self {
        match s {
            ScalarJson::Real(x) => Complex64::new(x, 0.0),
            ScalarJson::Pair([re, im]) => Complex64::new(re, im),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct BlockJson {
    rows: usize,
    cols: usize,
    entries: Vec<[f64; 2]>,
}

/// Row-major square matrix in the interchange format.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub n: usize,
    pub entries: Vec<[f64; 2]>,
}

impl MatrixJson {
    pub fn from_matrix(a: &ComplexMatrix) -> Self {
        MatrixJson {
            n: a.dim(),
            entries: a.entries().iter().map(|z| [z.re, z.im]).collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<ComplexMatrix, InputError> {
        if self.n == 0 || self.entries.len() != self.n * self.n {
            return Err(InputError(format!(
                "matrix with n = {} needs {} entries, got {}",
                self.n,
                self.n * self.n,
                self.entries.len()
            )));
        }
        if self.entries.iter().flatten().any(|x| !x.is_finite()) {
            return Err(InputError("matrix entries must be finite".into()));
        }
        let data = self
            .entries
            .iter()
            .map(|&[re, im]| Complex64::new(re, im))
            .collect();
        Ok(ComplexMatrix::from_row_major(data)?)
    }
}

#[derive(Debug, Deserialize)]
#[serde(tag = "variant")]
enum SpecJson {
    Rank2Dim3 {
        lambda1: ScalarJson,
        lambda2: ScalarJson,
    },
    NilpotentDim4 {
        b: f64,
    },
    NilpotentDim5 {
        b: f64,
        t: f64,
    },
    ExceptionalDim5 {
        sign: String,
        #[serde(default)]
        phi: f64,
    },
    RawBlocks {
        #[serde(rename = "B")]
        b: BlockJson,
        #[serde(rename = "C")]
        c: MatrixJson,
    },
}

fn check_finite(name: &str, x: f64) -> Result<(), InputError> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(InputError(format!("{name} must be finite")))
    }
}

/// Parses and validates a spec document.
pub fn parse_spec(text: &str) -> Result<PisomSpec, InputError> {
    let raw: SpecJson =
        serde_json::from_str(text).map_err(|e| InputError(format!("invalid spec: {e}")))?;
    let spec = match raw {
        SpecJson::Rank2Dim3 { lambda1, lambda2 } => {
            Rank2Dim3::new(lambda1.into(), lambda2.into())?.into()
        }
        SpecJson::NilpotentDim4 { b } => NilpotentDim4::new(b)?.into(),
        SpecJson::NilpotentDim5 { b, t } => NilpotentDim5::new(b, t)?.into(),
        SpecJson::ExceptionalDim5 { sign, phi } => {
            let sign = match sign.as_str() {
                "+" | "plus" => Sign::Plus,
                "-" | "minus" => Sign::Minus,
                other => {
                    return Err(InputError(format!(
                        "sign must be \"+\" or \"-\", got {other:?}"
                    )))
                }
            };
            check_finite("phi", phi)?;
            ExceptionalDim5::new(sign, phi)?.into()
        }
        SpecJson::RawBlocks { b, c } => {
            for x in b.entries.iter().flatten() {
                check_finite("B entries", *x)?;
            }
            let entries = b
                .entries
                .iter()
                .map(|&[re, im]| Complex64::new(re, im))
                .collect();
            let block = RectBlock::new(b.rows, b.cols, entries)?;
            RawBlocks::new(block, c.to_matrix()?, RAW_BLOCK_TOL)?.into()
        }
    };
    Ok(spec)
}

/// Parses a matrix document. Extra keys (such as the verdict written by
/// `construct`) are ignored so that output can be fed back in.
pub fn parse_matrix(text: &str) -> Result<ComplexMatrix, InputError> {
    let m: MatrixJson =
        serde_json::from_str(text).map_err(|e| InputError(format!("invalid matrix: {e}")))?;
    m.to_matrix()
}

/// Spec parameters as JSON, for echoing in reports.
pub fn spec_summary(spec: &PisomSpec) -> Value {
    use serde_json::json;
    match spec {
        PisomSpec::Rank2Dim3(s) => json!({
            "variant": "Rank2Dim3",
            "lambda1": [s.lambda1().re, s.lambda1().im],
            "lambda2": [s.lambda2().re, s.lambda2().im],
        }),
        PisomSpec::NilpotentDim4(s) => json!({"variant": "NilpotentDim4", "b": s.b(), "c": s.c()}),
        PisomSpec::NilpotentDim5(s) => json!({
            "variant": "NilpotentDim5", "b": s.b(), "c": s.c(), "s": s.s(), "t": s.t(),
        }),
        PisomSpec::ExceptionalDim5(s) => {
            let base = s.base();
            json!({
                "variant": "ExceptionalDim5",
                "sign": s.sign().as_str(),
                "phi": s.phi(),
                "b": base.b(), "c": base.c(), "s": base.s(), "t": base.t(),
            })
        }
        PisomSpec::RawBlocks(s) => json!({
            "variant": "RawBlocks",
            "rows": s.b().rows(),
            "cols": s.b().cols(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use numrange_core::pisom::build;

    #[test]
    fn parses_every_variant() {
        let docs = [
            r#"{"variant":"Rank2Dim3","lambda1":0.4,"lambda2":[-0.4,0]}"#,
            r#"{"variant":"NilpotentDim4","b":0.5}"#,
            r#"{"variant":"NilpotentDim5","b":0.5,"t":0.5}"#,
            r#"{"variant":"ExceptionalDim5","sign":"-","phi":1.5}"#,
            r#"{"variant":"RawBlocks","B":{"rows":1,"cols":1,"entries":[[0.6,0]]},"C":{"n":1,"entries":[[0,0.8]]}}"#,
        ];
        let dims = [3, 4, 5, 5, 2];
        for (doc, n) in docs.iter().zip(dims) {
            let spec = parse_spec(doc).unwrap();
            assert_eq!(build(&spec).dim(), n, "{doc}");
        }
    }

    #[test]
    fn rejects_invalid_parameters() {
        let e = parse_spec(r#"{"variant":"NilpotentDim4","b":1.5}"#).unwrap_err();
        assert!(e.0.contains("b must lie in [0, 1]"), "{e}");
        assert!(parse_spec(r#"{"variant":"Nope"}"#).is_err());
        assert!(parse_spec(r#"{"variant":"ExceptionalDim5","sign":"*"}"#).is_err());
        let bad_blocks = r#"{"variant":"RawBlocks","B":{"rows":1,"cols":1,"entries":[[1,0]]},"C":{"n":1,"entries":[[1,0]]}}"#;
        assert!(parse_spec(bad_blocks).unwrap_err().0.contains("B*B + C*C"));
    }

    #[test]
    fn matrix_round_trip() {
        let a = build(&parse_spec(r#"{"variant":"NilpotentDim5","b":0.3,"t":0.7}"#).unwrap());
        let text = serde_json::to_string(&MatrixJson::from_matrix(&a)).unwrap();
        assert_eq!(parse_matrix(&text).unwrap(), a);
        assert!(parse_matrix(r#"{"n":2,"entries":[[1,0]]}"#).is_err());
    }
}
