//! JSON file format for Seifert data.
//!
//! ```json
//! { "n": 1, "integral": true,
//!   "blocks": [ { "d": 1, "v_plus": [["-1", "1"], ["-1", "0"]] } ] }
//! ```
//!
//! Entries are integer literals or strings `"p"` / `"p/q"`; floats are
//! rejected. `v_minus` defaults to `v_plus + I` and `integral` defaults to
//! `n >= 2`.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;
use serde_json::{json, Value};

use crate::algebra::{parse_rat, Rat, RatMatrix};
use crate::error::{InputError, ParseRatError};
use crate::seifert::{SeifertBlock, SeifertData};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputBlock {
    pub d: usize,
    pub v_plus: RatMatrix,
    pub v_minus: Option<RatMatrix>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputDocument {
    pub n: usize,
    pub integral: Option<bool>,
    pub blocks: Vec<InputBlock>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    n: usize,
    #[serde(default)]
    integral: Option<bool>,
    blocks: Vec<RawBlock>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBlock {
    d: usize,
    v_plus: Vec<Vec<Value>>,
    #[serde(default)]
    v_minus: Option<Vec<Vec<Value>>>,
}

fn parse_entry(value: &Value, path: &str) -> Result<Rat, InputError> {
    let located = |text: String| InputError::Entry {
        path: path.to_string(),
        source: ParseRatError(text),
    };
    match value {
        Value::String(s) => parse_rat(s).map_err(|e| InputError::Entry {
            path: path.to_string(),
            source: e,
        }),
        Value::Number(num) if num.is_i64() || num.is_u64() => {
            parse_rat(&num.to_string()).map_err(|e| located(e.0))
        }
        other => Err(located(other.to_string())),
    }
}

fn parse_matrix(rows: &[Vec<Value>], path: &str) -> Result<RatMatrix, InputError> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut parsed = Vec::with_capacity(rows.len());
    for (r, row) in rows.iter().enumerate() {
        if row.len() != cols {
            return Err(InputError::Shape {
                path: format!("{path}[{r}]"),
                message: format!("row has {} entries, expected {cols}", row.len()),
            });
        }
        let entries = row
            .iter()
            .enumerate()
            .map(|(c, v)| parse_entry(v, &format!("{path}[{r}][{c}]")))
            .collect::<Result<Vec<_>, _>>()?;
        parsed.push(entries);
    }
    RatMatrix::from_rows(parsed).map_err(|e| InputError::Shape {
        path: path.to_string(),
        message: e.to_string(),
    })
}

impl InputDocument {
    pub fn parse(text: &str) -> Result<Self, InputError> {
        let raw: RawDocument = serde_json::from_str(text)?;
        Self::from_raw(raw)
    }

    pub fn from_value(value: Value) -> Result<Self, InputError> {
        let raw: RawDocument = serde_json::from_value(value)?;
        Self::from_raw(raw)
    }

    pub fn read(path: &Path) -> Result<Self, InputError> {
        let text = std::fs::read_to_string(path).map_err(|source| InputError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    fn from_raw(raw: RawDocument) -> Result<Self, InputError> {
        let mut blocks = Vec::with_capacity(raw.blocks.len());
        for (i, b) in raw.blocks.iter().enumerate() {
            let base = format!("blocks[{i}]");
            let v_plus = parse_matrix(&b.v_plus, &format!("{base}.v_plus"))?;
            let v_minus = b
                .v_minus
                .as_ref()
                .map(|m| parse_matrix(m, &format!("{base}.v_minus")))
                .transpose()?;
            blocks.push(InputBlock { d: b.d, v_plus, v_minus });
        }
        Ok(InputDocument {
            n: raw.n,
            integral: raw.integral,
            blocks,
        })
    }

    /// Builds the data; structural problems are left to validation, apart
    /// from repeated degrees.
    pub fn to_seifert(&self) -> Result<SeifertData, InputError> {
        let mut blocks = BTreeMap::new();
        for (i, b) in self.blocks.iter().enumerate() {
            let block = match &b.v_minus {
                Some(minus) => SeifertBlock::new(b.v_plus.clone(), minus.clone()),
                None if b.v_plus.is_square() => SeifertBlock::from_plus(b.v_plus.clone()),
                None => SeifertBlock::new(b.v_plus.clone(), b.v_plus.clone()),
            };
            if blocks.insert(b.d, block).is_some() {
                return Err(InputError::Shape {
                    path: format!("blocks[{i}].d"),
                    message: format!("degree {} appears twice", b.d),
                });
            }
        }
        let integral = self.integral.unwrap_or(self.n >= 2);
        Ok(SeifertData::new(self.n, integral, blocks))
    }

    /// Document with explicit `v_minus` for every block.
    pub fn from_seifert(data: &SeifertData) -> Self {
        InputDocument {
            n: data.n(),
            integral: Some(data.integral()),
            blocks: data
                .blocks()
                .iter()
                .map(|(&d, b)| InputBlock {
                    d,
                    v_plus: b.plus.clone(),
                    v_minus: Some(b.minus.clone()),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> Value {
        let blocks: Vec<Value> = self
            .blocks
            .iter()
            .map(|b| {
                let mut obj = json!({ "d": b.d, "v_plus": matrix_json(&b.v_plus) });
                if let Some(m) = &b.v_minus {
                    obj["v_minus"] = matrix_json(m);
                }
                obj
            })
            .collect();
        let mut doc = json!({ "n": self.n, "blocks": blocks });
        if let Some(flag) = self.integral {
            doc["integral"] = Value::Bool(flag);
        }
        doc
    }
}

/// Rows of rational strings.
pub fn matrix_json(m: &RatMatrix) -> Value {
    Value::Array(
        m.row_vecs()
            .iter()
            .map(|row| Value::Array(row.iter().map(|x| Value::String(x.to_string())).collect()))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::{int, rat};
    use crate::catalog;

    #[test]
    fn parses_trefoil_with_default_minus() {
        let doc = InputDocument::parse(r#"{"n": 1, "blocks": [{"d": 1, "v_plus": [[-1, "1"], ["-1", "0"]]}]}"#)
            .unwrap();
        assert_eq!(doc.to_seifert().unwrap().blocks(), catalog::trefoil().blocks());
        assert!(!doc.to_seifert().unwrap().integral());
    }

    #[test]
    fn rationals_and_empty_blocks() {
        let doc = InputDocument::parse(
            r#"{"n": 2, "integral": false, "blocks": [{"d": 1, "v_plus": [["1/2"]]}, {"d": 2, "v_plus": []}]}"#,
        )
        .unwrap();
        let data = doc.to_seifert().unwrap();
        assert_eq!(data.block(1).unwrap().minus.get(0, 0), &rat(3, 2));
        assert_eq!(data.sizes(), vec![1, 0]);
        assert_eq!(int(0), data.block(1).unwrap().plus.get(0, 0) - rat(1, 2));
    }

    #[test]
    fn floats_are_rejected_with_location() {
        let err = InputDocument::parse(r#"{"n": 1, "blocks": [{"d": 1, "v_plus": [[0.5]]}]}"#).unwrap_err();
        assert_eq!(err.to_string(), "at blocks[0].v_plus[0][0]: not an exact rational: \"0.5\" (expected \"p\" or \"p/q\")");
        let err = InputDocument::parse(r#"{"n": 1, "blocks": [{"d": 1, "v_plus": [["1/0"]]}]}"#).unwrap_err();
        assert!(err.to_string().starts_with("at blocks[0].v_plus[0][0]"));
    }

    #[test]
    fn syntax_errors_carry_line_and_column() {
        let err = InputDocument::parse("{\n  \"n\": 1,\n  \"blocks\": [\n}").unwrap_err();
        assert!(err.to_string().contains("line 4"), "{err}");
        let err = InputDocument::parse(r#"{"n": 1, "blocks": [], "extra": 3}"#).unwrap_err();
        assert!(err.to_string().contains("extra"));
    }

    #[test]
    fn ragged_and_duplicate_blocks() {
        let err = InputDocument::parse(r#"{"n": 1, "blocks": [{"d": 1, "v_plus": [[1, 2], [3]]}]}"#).unwrap_err();
        assert!(matches!(err, InputError::Shape { .. }));
        let doc = InputDocument::parse(
            r#"{"n": 1, "blocks": [{"d": 1, "v_plus": []}, {"d": 1, "v_plus": []}]}"#,
        )
        .unwrap();
        assert!(matches!(doc.to_seifert(), Err(InputError::Shape { .. })));
    }

    #[test]
    fn round_trip_through_json() {
        for entry in catalog::entries(3) {
            let doc = InputDocument::from_seifert(&entry.data);
            let text = serde_json::to_string(&doc.to_json()).unwrap();
            assert_eq!(InputDocument::parse(&text).unwrap(), doc);
            assert_eq!(doc.to_seifert().unwrap(), entry.data);
        }
    }
}
