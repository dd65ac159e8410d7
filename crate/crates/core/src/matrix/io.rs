//! JSON matrix documents:
//!
//! ```json
//! {"n": 2, "entries": [[["1","0"], ["0","1"]], [["0","-1"], ["-1/2","0"]]]}
//! ```
//!
//! Each scalar is a `[re, im]` pair of rational strings. Positions in error
//! messages are 1-based.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{HermitianMatrix, MatrixError};
use crate::exact::{ExactError, GaussianRational};

#[derive(Debug, Error)]
pub enum MatrixFileError {
    #[error("invalid matrix document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("declared order n={declared} but found {rows} rows")]
    OrderMismatch { declared: usize, rows: usize },
    #[error("row {row}: expected {expected} entries, found {found}")]
    Ragged { row: usize, expected: usize, found: usize },
    #[error("entry ({row},{col}): {source}")]
    Scalar { row: usize, col: usize, source: ExactError },
    #[error("entry ({row},{col}) must equal the conjugate of entry ({col},{row})")]
    NotHermitian { row: usize, col: usize },
    #[error("matrix order must be at least 1")]
    Empty,
}

#[derive(Debug, Serialize, Deserialize)]
struct MatrixDocument {
    n: usize,
    entries: Vec<Vec<[String; 2]>>,
}

pub fn parse_matrix(text: &str) -> Result<HermitianMatrix, MatrixFileError> {
    let doc: MatrixDocument = serde_json::from_str(text)?;
    if doc.n == 0 {
        return Err(MatrixFileError::Empty);
    }
    if doc.entries.len() != doc.n {
        return Err(MatrixFileError::OrderMismatch { declared: doc.n, rows: doc.entries.len() });
    }
    let mut rows = Vec::with_capacity(doc.n);
    for (i, row) in doc.entries.iter().enumerate() {
        if row.len() != doc.n {
            return Err(MatrixFileError::Ragged { row: i + 1, expected: doc.n, found: row.len() });
        }
        let parsed = row
            .iter()
            .enumerate()
            .map(|(j, [re, im])| {
                GaussianRational::from_parts(re, im).map_err(|source| MatrixFileError::Scalar {
                    row: i + 1,
                    col: j + 1,
                    source,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(parsed);
    }
    HermitianMatrix::new(rows).map_err(|e| match e {
        MatrixError::NotHermitian { row, col } => MatrixFileError::NotHermitian { row: row + 1, col: col + 1 },
        MatrixError::Empty => MatrixFileError::Empty,
        other => unreachable!("shape already validated: {other}"),
    })
}

pub fn to_json(b: &HermitianMatrix) -> String {
    let doc = MatrixDocument {
        n: b.order(),
        entries: b.rows().iter().map(|r| r.iter().map(GaussianRational::to_parts).collect()).collect(),
    };
    serde_json::to_string(&doc).expect("matrix document serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_and_writes() {
        let text = r#"{"n": 2, "entries": [[["1","0"], ["0","1"]], [["0","-1"], ["-1/2","0"]]]}"#;
        let b = parse_matrix(text).unwrap();
        assert_eq!(b.entry(0, 1), &GaussianRational::i());
        assert_eq!(parse_matrix(&to_json(&b)).unwrap(), b);
    }

    #[test]
    fn reports_positions() {
        let text = r#"{"n": 2, "entries": [[["1","0"], ["0","1"]], [["0","1"], ["2","0"]]]}"#;
        let err = parse_matrix(text).unwrap_err();
        assert!(matches!(err, MatrixFileError::NotHermitian { row: 1, col: 2 }), "{err}");

        let text = r#"{"n": 2, "entries": [[["1","0"], ["x","1"]], [["0","1"], ["2","0"]]]}"#;
        assert!(matches!(parse_matrix(text).unwrap_err(), MatrixFileError::Scalar { row: 1, col: 2, .. }));

        let text = r#"{"n": 2, "entries": [[["1","0"]], [["0","1"], ["2","0"]]]}"#;
        assert!(matches!(parse_matrix(text).unwrap_err(), MatrixFileError::Ragged { row: 1, .. }));

        let text = r#"{"n": 3, "entries": [[["1","0"]]]}"#;
        assert!(matches!(parse_matrix(text).unwrap_err(), MatrixFileError::OrderMismatch { .. }));

        let text = r#"{"n": 1, "entries": [[["0","2"]]]}"#;
        assert!(matches!(parse_matrix(text).unwrap_err(), MatrixFileError::NotHermitian { row: 1, col: 1 }));
    }
}
