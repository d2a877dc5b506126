//! JSON interchange: matrices as nested `[re, im]` pairs with their signature.

use iwasawa::{c64, CMatrix, Signature};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("invalid signature: {0}")]
    Signature(String),
    #[error("matrix has {found} rows, signature needs {expected}")]
    Rows { expected: usize, found: usize },
    #[error("row {row} has {found} entries, expected {expected}")]
    Ragged {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("entry ({row}, {col}) is not finite")]
    NonFinite { row: usize, col: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureDoc {
    pub p: usize,
    pub q: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDocument {
    pub signature: SignatureDoc,
    pub matrix: Vec<Vec<[f64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl MatrixDocument {
    pub fn from_matrix(m: &CMatrix, sig: Signature, label: Option<&str>) -> Self {
        let matrix = (0..m.rows())
            .map(|i| m.row(i).iter().map(|z| [z.re, z.im]).collect())
            .collect();
        MatrixDocument {
            signature: SignatureDoc {
                p: sig.p(),
                q: sig.q(),
            },
            matrix,
            label: label.map(str::to_owned),
        }
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let doc: MatrixDocument = serde_json::from_str(text)?;
        doc.validate(false)?;
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("finite values serialize")
    }

    pub fn signature(&self) -> Result<Signature, ParseError> {
        Signature::new(self.signature.p, self.signature.q)
            .map_err(|e| ParseError::Signature(e.to_string()))
    }

    /// Checks shape and finiteness. With `columns_free`, rows still must
    /// match `p + q` but the column count may be any positive number.
    pub fn validate(&self, columns_free: bool) -> Result<(), ParseError> {
        let n = self.signature()?.n();
        if self.matrix.len() != n {
            return Err(ParseError::Rows {
                expected: n,
                found: self.matrix.len(),
            });
        }
        let width = if columns_free {
            self.matrix[0].len().max(1)
        } else {
            n
        };
        for (row, entries) in self.matrix.iter().enumerate() {
            if entries.len() != width {
                return Err(ParseError::Ragged {
                    row,
                    expected: width,
                    found: entries.len(),
                });
            }
            if let Some(col) = entries
                .iter()
                .position(|[re, im]| !re.is_finite() || !im.is_finite())
            {
                return Err(ParseError::NonFinite { row, col });
            }
        }
        Ok(())
    }

    pub fn to_matrix(&self) -> CMatrix {
        let rows: Vec<Vec<_>> = self
            .matrix
            .iter()
            .map(|r| r.iter().map(|&[re, im]| c64(re, im)).collect())
            .collect();
        CMatrix::from_rows(&rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_bit_exact() {
        let m = CMatrix::from_rows(&[
            vec![c64(0.1, 1.0 / 3.0), c64(f64::MIN_POSITIVE, -2.5e300)],
            vec![c64(std::f64::consts::PI, -0.0), c64(1e-17, 7.0)],
        ]);
        let sig = Signature::new(1, 1).unwrap();
        let doc = MatrixDocument::from_matrix(&m, sig, Some("x"));
        let back = MatrixDocument::parse(&doc.to_json()).unwrap();
        for (a, b) in doc
            .matrix
            .iter()
            .flatten()
            .zip(back.matrix.iter().flatten())
        {
            assert_eq!(a[0].to_bits(), b[0].to_bits());
            assert_eq!(a[1].to_bits(), b[1].to_bits());
        }
        assert_eq!(back.label.as_deref(), Some("x"));
    }

    #[test]
    fn shape_errors() {
        let bad = r#"{"signature":{"p":1,"q":1},"matrix":[[[1,0],[0,0]]]}"#;
        assert!(matches!(
            MatrixDocument::parse(bad),
            Err(ParseError::Rows { .. })
        ));
        let ragged = r#"{"signature":{"p":1,"q":1},"matrix":[[[1,0]],[[0,0],[1,0]]]}"#;
        assert!(matches!(
            MatrixDocument::parse(ragged),
            Err(ParseError::Ragged { .. })
        ));
        let sig = r#"{"signature":{"p":0,"q":2},"matrix":[[[1,0],[0,0]],[[0,0],[1,0]]]}"#;
        assert!(matches!(
            MatrixDocument::parse(sig),
            Err(ParseError::Signature(_))
        ));
        assert!(matches!(
            MatrixDocument::parse("{"),
            Err(ParseError::Json(_))
        ));
    }
}
