//! JSON representation files.

use alexmod_core::arith::parse_element;
use alexmod_core::linalg::Mode;
use alexmod_core::{CycloField, FieldElement, FieldMatrix, MonodromyRep};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub cyclotomic_order: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Coefficients {
    Field,
    Integers,
}

/// Rows of entry strings, or a literal such as `"1,0;0,3"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MatrixEntries {
    Rows(Vec<Vec<String>>),
    Literal(String),
}

impl MatrixEntries {
    pub fn rows(&self) -> Vec<Vec<String>> {
        match self {
            MatrixEntries::Rows(r) => r.clone(),
            MatrixEntries::Literal(s) => split_literal(s),
        }
    }
}

pub fn split_literal(s: &str) -> Vec<Vec<String>> {
    if s.trim().is_empty() {
        return Vec::new();
    }
    s.split(';')
        .map(|row| row.split(',').map(|e| e.trim().to_string()).collect())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub label: String,
    pub matrix: MatrixEntries,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    pub n: usize,
    pub h_good: bool,
    #[serde(rename = "b_n_F", default, skip_serializing_if = "Option::is_none")]
    pub b_n_f: Option<usize>,
    #[serde(rename = "euler_MX", default, skip_serializing_if = "Option::is_none")]
    pub euler_mx: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepDocument {
    pub field: FieldSpec,
    pub coefficients: Coefficients,
    pub fiber_rank: usize,
    pub generators: Vec<Generator>,
    pub distinguished: String,
    pub metadata: Metadata,
}

impl RepDocument {
    pub fn from_json(src: &str) -> Result<Self, CliError> {
        serde_json::from_str(src).map_err(|e| CliError::Parse(format!("line {} column {}: {e}", e.line(), e.column())))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn mode(&self) -> Mode {
        match self.coefficients {
            Coefficients::Field => Mode::Field,
            Coefficients::Integers => Mode::Integer,
        }
    }

    /// Parses every entry and validates the document against the representation rules.
    pub fn to_rep(&self) -> Result<MonodromyRep, CliError> {
        if self.field.cyclotomic_order == 0 {
            return Err(CliError::Parse("cyclotomic_order must be positive".into()));
        }
        let field = CycloField::get(self.field.cyclotomic_order);
        let m = self.fiber_rank;
        let mut mats = Vec::with_capacity(self.generators.len());
        for gen in &self.generators {
            let rows = gen.matrix.rows();
            if rows.len() != m || rows.iter().any(|r| r.len() != m) {
                return Err(CliError::Parse(format!(
                    "generator '{}': matrix must be {m}x{m}",
                    gen.label
                )));
            }
            let mut data = Vec::with_capacity(m * m);
            for (i, row) in rows.iter().enumerate() {
                for (j, src) in row.iter().enumerate() {
                    let x = parse_element(src, &field).map_err(|e| {
                        CliError::Parse(format!("generator '{}' entry ({}, {}): {e}", gen.label, i + 1, j + 1))
                    })?;
                    if self.coefficients == Coefficients::Integers && x.as_integer().is_none() {
                        return Err(CliError::Parse(format!(
                            "generator '{}' entry ({}, {}): '{src}' is not an integer",
                            gen.label,
                            i + 1,
                            j + 1
                        )));
                    }
                    data.push(x);
                }
            }
            mats.push(FieldMatrix::new(m, m, data));
        }
        let labels: Vec<String> = self.generators.iter().map(|g| g.label.clone()).collect();
        let dist = labels
            .iter()
            .position(|l| *l == self.distinguished)
            .ok_or_else(|| CliError::Parse(format!("distinguished value '{}' is not a label", self.distinguished)))?;
        let mut rep = match self.coefficients {
            Coefficients::Field => MonodromyRep::new(mats, labels, dist)?,
            Coefficients::Integers => {
                let ints = mats
                    .iter()
                    .map(FieldMatrix::to_integer)
                    .collect::<Option<Vec<_>>>()
                    .expect("checked integral");
                MonodromyRep::new_integral(ints, labels, dist)?
            }
        };
        rep = rep.with_n(self.metadata.n).with_h_good(self.metadata.h_good);
        rep.b_n_f = self.metadata.b_n_f;
        rep.euler_mx = self.metadata.euler_mx;
        Ok(rep)
    }

    /// Document for a representation, entries in the canonical text form.
    pub fn from_rep(rep: &MonodromyRep) -> Self {
        let render = |a: &FieldMatrix| {
            MatrixEntries::Rows(
                a.to_rows()
                    .iter()
                    .map(|r| r.iter().map(FieldElement::to_string).collect())
                    .collect(),
            )
        };
        RepDocument {
            field: FieldSpec {
                cyclotomic_order: rep.field().order(),
            },
            coefficients: match rep.mode() {
                Mode::Field => Coefficients::Field,
                Mode::Integer => Coefficients::Integers,
            },
            fiber_rank: rep.fiber_rank(),
            generators: rep
                .labels()
                .iter()
                .zip(rep.matrices())
                .map(|(l, a)| Generator {
                    label: l.clone(),
                    matrix: render(a),
                })
                .collect(),
            distinguished: rep.labels()[rep.distinguished()].clone(),
            metadata: Metadata {
                n: rep.n,
                h_good: rep.h_good,
                b_n_f: rep.b_n_f,
                euler_mx: rep.euler_mx,
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alexmod_core::monodromy::section7_rep;

    #[test]
    fn literal_and_rows_agree() {
        let lit = MatrixEntries::Literal("1,0; 0,3".into());
        assert_eq!(lit.rows(), vec![vec!["1", "0"], vec!["0", "3"]]);
    }

    #[test]
    fn section7_document_round_trips() {
        let rep = section7_rep(FieldElement::int(0), 2).unwrap();
        let doc = RepDocument::from_rep(&rep);
        let back = RepDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_rep().unwrap(), rep);
    }

    #[test]
    fn bad_entries_are_parse_errors() {
        let src = r#"{"field":{"cyclotomic_order":1},"coefficients":"integers","fiber_rank":1,
            "generators":[{"label":"0","matrix":"1/2"}],"distinguished":"0","metadata":{"n":2,"h_good":false}}"#;
        let doc = RepDocument::from_json(src).unwrap();
        assert!(matches!(doc.to_rep(), Err(CliError::Parse(_))));
        assert!(matches!(RepDocument::from_json("{"), Err(CliError::Parse(_))));
    }
}
