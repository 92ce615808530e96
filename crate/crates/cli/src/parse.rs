//! Generator-row text and matrix spec files.

use std::path::Path;

use circmem_core::GeneratorRow;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// Parses comma-separated integers such as `"0, 2,-5,+3"`.
pub fn parse_first_row(text: &str) -> Result<GeneratorRow, CliError> {
    let mut weights = Vec::new();
    let mut column = 0;
    for (k, token) in text.split(',').enumerate() {
        let trimmed = token.trim();
        let value = trimmed.parse::<i64>().map_err(|_| CliError::Parse {
            position: k + 1,
            column: column + token.len() - token.trim_start().len() + 1,
            message: if trimmed.is_empty() {
                "empty entry".to_string()
            } else {
                format!("{trimmed:?} is not an integer")
            },
        })?;
        weights.push(value);
        column += token.len() + 1;
    }
    Ok(GeneratorRow::new(weights)?)
}

/// Canonical text form accepted by [`parse_first_row`].
pub fn render_first_row(row: &GeneratorRow) -> String {
    row.to_string()
}

/// On-disk matrix description (TOML, or JSON when the path ends in `.json`).
///
/// ```toml
/// label = "4x4-class1-a"
/// n = 4
/// first_row = [0, 2, -5, 3]
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixSpecFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub n: usize,
    pub first_row: Vec<i64>,
}

impl MatrixSpecFile {
    pub fn from_row(row: &GeneratorRow, label: Option<String>) -> Self {
        Self {
            label,
            n: row.n(),
            first_row: row.weights().to_vec(),
        }
    }

    pub fn row(&self) -> Result<GeneratorRow, CliError> {
        if self.n != self.first_row.len() {
            return Err(CliError::Spec(format!(
                "n = {} but first_row has {} entries",
                self.n,
                self.first_row.len()
            )));
        }
        Ok(GeneratorRow::new(self.first_row.clone())?)
    }

    pub fn from_toml(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Spec(e.to_string()))
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Spec(e.to_string()))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("spec files always serialize")
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
            path: path.display().to_string(),
            source: e,
        })?;
        let spec = if path.extension().is_some_and(|e| e == "json") {
            Self::from_json(&text)?
        } else {
            Self::from_toml(&text)?
        };
        spec.row()?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use circmem_core::Error;

    #[test]
    fn parses_rows() {
        assert_eq!(parse_first_row("0,2,-5,3").unwrap().weights(), &[0, 2, -5, 3]);
        assert_eq!(parse_first_row("0").unwrap().n(), 1);
        assert_eq!(parse_first_row(" 0 , +2,\t-5 ").unwrap().weights(), &[0, 2, -5]);
    }

    #[test]
    fn rejects_nonzero_diagonal() {
        assert!(matches!(
            parse_first_row("1,2,3"),
            Err(CliError::Core(Error::NonZeroDiagonal(1)))
        ));
    }

    #[test]
    fn reports_error_position() {
        match parse_first_row("0,2,x,3") {
            Err(CliError::Parse { position, column, .. }) => {
                assert_eq!((position, column), (3, 5));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_first_row("0,,1"), Err(CliError::Parse { position: 2, .. })));
        assert!(matches!(parse_first_row(""), Err(CliError::Parse { position: 1, .. })));
    }

    #[test]
    fn spec_file_roundtrip() {
        let row = parse_first_row("0,-2,3,3,-2").unwrap();
        let spec = MatrixSpecFile::from_row(&row, Some("5x5-a".into()));
        let text = spec.to_toml();
        let back = MatrixSpecFile::from_toml(&text).unwrap();
        assert_eq!(back, spec);
        assert_eq!(back.row().unwrap(), row);
    }

    #[test]
    fn spec_file_size_mismatch() {
        let spec = MatrixSpecFile::from_toml("n = 3\nfirst_row = [0, 1]\n").unwrap();
        assert!(matches!(spec.row(), Err(CliError::Spec(_))));
        let spec = MatrixSpecFile::from_json(r#"{"n": 2, "first_row": [0, 1]}"#).unwrap();
        assert_eq!(spec.row().unwrap().weights(), &[0, 1]);
    }
}
