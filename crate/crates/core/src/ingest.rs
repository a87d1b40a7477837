//! Reading score documents and annotated corpora.
//!
//! A score document is one JSON object mapping emotion or dyad names to a
//! number, or (basic emotions only) to a `[mild, medium, intense]` array.
//!
//! A corpus is JSON lines (or a JSON array) of such objects, one per text.
//! Keys starting with `_` are metadata: `_id` names the record and `_group`
//! is the conventional grouping field. Other unknown keys are metadata too
//! when their value is a string, boolean or null. Emotions a record leaves
//! out count as zero.

use std::cmp::Ordering;
use std::io::Read;
use std::path::Path;

use serde_json::{Map, Value};

use crate::emotion::{aggregate_corpus, parse_scores, RawScore, ScoreKind, ScoreSet, Slot, Wheel};
use crate::error::{Error, Result, ScoreError};

/// Reads a file, or standard input when the path is `-`.
pub fn read_input(path: &Path) -> Result<String> {
    let io_err = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io_err)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io_err)
    }
}

fn json_error(context: &str, line_offset: usize, e: &serde_json::Error) -> Error {
    Error::Json {
        context: context.to_string(),
        line: e.line() + line_offset,
        column: e.column(),
        message: e.to_string(),
    }
}

fn raw_value(key: &str, value: &Value) -> Result<RawScore, ScoreError> {
    let bad = |reason: &str| ScoreError::BadValue {
        key: key.to_string(),
        reason: reason.to_string(),
    };
    match value {
        Value::Number(n) => n.as_f64().map(RawScore::Scalar).ok_or_else(|| bad("not a number")),
        Value::Array(items) => items
            .iter()
            .map(|v| v.as_f64().ok_or_else(|| bad("intensity entries must be numbers")))
            .collect::<Result<Vec<_>, _>>()
            .map(RawScore::Sequence),
        _ => Err(bad("expected a number or an array of 3 numbers")),
    }
}

fn raw_scores(object: &Map<String, Value>) -> Result<Vec<(String, RawScore)>, ScoreError> {
    object
        .iter()
        .map(|(k, v)| Ok((k.clone(), raw_value(k, v)?)))
        .collect()
}

/// Parses one score document. `context` names the source in error messages.
pub fn parse_score_json(text: &str, context: &str) -> Result<ScoreSet> {
    let value: Value = serde_json::from_str(text).map_err(|e| json_error(context, 0, &e))?;
    let Value::Object(object) = value else {
        return Err(Error::Json {
            context: context.to_string(),
            line: 1,
            column: 1,
            message: "expected a JSON object of scores".into(),
        });
    };
    let wrap = |source| Error::Score {
        context: context.to_string(),
        source,
    };
    let raw = raw_scores(&object).map_err(wrap)?;
    parse_scores(raw).map_err(wrap)
}

pub fn load_scores(path: &Path) -> Result<ScoreSet> {
    parse_score_json(&read_input(path)?, &path.display().to_string())
}

/// Writes canonical JSON that [`load_scores`] reads back unchanged.
pub fn save_scores(scores: &ScoreSet, path: &Path) -> Result<()> {
    let text = serde_json::to_string_pretty(&scores.to_json()).expect("scores serialize") + "\n";
    std::fs::write(path, text).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct CorpusRecord {
    pub id: Option<String>,
    pub group: Option<String>,
    pub scores: ScoreSet,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CorpusFile {
    pub records: Vec<CorpusRecord>,
}

impl CorpusFile {
    pub fn kind(&self) -> Option<ScoreKind> {
        self.records.first().map(|r| r.scores.kind())
    }
}

/// Unknown keys with these values are descriptive fields, not misspelled
/// scores.
fn is_metadata(value: &Value) -> bool {
    matches!(value, Value::String(_) | Value::Bool(_) | Value::Null)
}

fn scalar_string(value: &Value) -> Option<String> {
    match value {
        Value::String(s) if !s.is_empty() => Some(s.clone()),
        Value::Number(n) => Some(n.to_string()),
        _ => None,
    }
}

/// Fills in zero scores for the slots a record leaves out. Returns `None`
/// for a record with no score keys at all.
fn complete_record(raw: Vec<(String, RawScore)>) -> Result<Option<ScoreSet>, ScoreError> {
    let Some(first) = raw.iter().find_map(|(k, _)| Slot::from_name(k)) else {
        return if raw.is_empty() {
            Ok(None)
        } else {
            parse_scores(raw).map(Some)
        };
    };
    let triples = raw.iter().any(|(_, v)| matches!(v, RawScore::Sequence(_)));
    let present: Vec<Option<Slot>> = raw.iter().map(|(k, _)| Slot::from_name(k)).collect();
    let mut filled = raw;
    for slot in first.wheel().slots() {
        if !present.contains(&Some(slot)) {
            let zero = if triples && first.wheel() == Wheel::Basic {
                RawScore::Sequence(vec![0.0; 3])
            } else {
                RawScore::Scalar(0.0)
            };
            filled.push((slot.name().to_string(), zero));
        }
    }
    parse_scores(filled).map(Some)
}

fn parse_record(
    index: usize,
    value: &Value,
    context: &str,
    group_by: Option<&str>,
) -> Result<(Option<String>, Option<String>, Option<ScoreSet>)> {
    let record_err = |source| Error::Record {
        context: context.to_string(),
        index,
        source,
    };
    let Value::Object(object) = value else {
        return Err(record_err(ScoreError::BadValue {
            key: String::new(),
            reason: "each record must be a JSON object".into(),
        }));
    };
    let id = object.get("_id").and_then(scalar_string);
    let group = match group_by {
        None => None,
        Some(field) => match object.get(field) {
            None => {
                return Err(Error::UnknownGroupField {
                    index,
                    field: field.to_string(),
                })
            }
            Some(v) => Some(scalar_string(v).ok_or_else(|| Error::EmptyGroup {
                index,
                field: field.to_string(),
            })?),
        },
    };
    let scores: Map<String, Value> = object
        .iter()
        .filter(|(k, _)| !k.starts_with('_') && Some(k.as_str()) != group_by)
        .filter(|(k, v)| Slot::from_name(k).is_some() || !is_metadata(v))
        .map(|(k, v)| (k.clone(), v.clone()))
        .collect();
    let raw = raw_scores(&scores).map_err(record_err)?;
    let set = complete_record(raw).map_err(record_err)?;
    Ok((id, group, set))
}

fn corpus_values(text: &str, context: &str) -> Result<Vec<Value>> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('[') {
        let value: Value = serde_json::from_str(text).map_err(|e| json_error(context, 0, &e))?;
        match value {
            Value::Array(items) => Ok(items),
            _ => unreachable!("text starts with '['"),
        }
    } else {
        text.lines()
            .enumerate()
            .filter(|(_, line)| !line.trim().is_empty())
            .map(|(n, line)| serde_json::from_str(line).map_err(|e| json_error(context, n, &e)))
            .collect()
    }
}

/// Parses a corpus. With `group_by`, every record must carry that field.
pub fn parse_corpus(text: &str, context: &str, group_by: Option<&str>) -> Result<CorpusFile> {
    let values = corpus_values(text, context)?;
    if values.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    let parsed = values
        .iter()
        .enumerate()
        .map(|(i, v)| parse_record(i, v, context, group_by))
        .collect::<Result<Vec<_>>>()?;

    let kind = parsed
        .iter()
        .find_map(|(_, _, s)| s.as_ref().map(ScoreSet::kind))
        .unwrap_or(ScoreKind::BasicScalar);
    let mut records = Vec::with_capacity(parsed.len());
    for (index, (id, group, scores)) in parsed.into_iter().enumerate() {
        let scores = scores.unwrap_or_else(|| ScoreSet::zeros(kind));
        if scores.kind() != kind {
            return Err(Error::HeterogeneousKinds {
                index,
                expected: kind,
                found: scores.kind(),
            });
        }
        records.push(CorpusRecord { id, group, scores });
    }
    Ok(CorpusFile { records })
}

/// Orders group names numerically when they all parse as numbers, else
/// lexically.
fn group_order(names: &mut [String]) {
    let numeric = names.iter().all(|n| n.parse::<f64>().is_ok());
    names.sort_by(|a, b| {
        if numeric {
            let (x, y) = (a.parse::<f64>().unwrap(), b.parse::<f64>().unwrap());
            x.partial_cmp(&y).unwrap_or(Ordering::Equal).then_with(|| a.cmp(b))
        } else {
            a.cmp(b)
        }
    });
}

/// Mean scores per group, in group order. Without `group_by` the whole corpus
/// is one group named `all`.
pub fn group_corpus(corpus: &CorpusFile) -> Result<Vec<(String, ScoreSet)>> {
    let mut names: Vec<String> = corpus
        .records
        .iter()
        .map(|r| r.group.clone().unwrap_or_else(|| "all".into()))
        .collect();
    names.sort();
    names.dedup();
    group_order(&mut names);
    names
        .into_iter()
        .map(|name| {
            let members: Vec<ScoreSet> = corpus
                .records
                .iter()
                .filter(|r| r.group.as_deref().unwrap_or("all") == name)
                .map(|r| r.scores.clone())
                .collect();
            Ok((name, aggregate_corpus(&members)?))
        })
        .collect()
}

pub fn read_corpus(path: &Path, group_by: Option<&str>) -> Result<CorpusFile> {
    parse_corpus(&read_input(path)?, &path.display().to_string(), group_by)
}

/// Loads a corpus file and averages it per group.
pub fn load_corpus(path: &Path, group_by: Option<&str>) -> Result<Vec<(String, ScoreSet)>> {
    group_corpus(&read_corpus(path, group_by)?)
}
