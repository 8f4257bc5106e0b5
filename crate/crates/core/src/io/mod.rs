//! JSON documents for soft sets and machine-readable run reports.
//!
//! A Type-1 document:
//!
//! ```json
//! {"kind": "t1ss", "universe": ["x1", "x2"], "assignments": {"a": ["x1"]}}
//! ```
//!
//! A Type-2 document lists one entry per primary parameter:
//!
//! ```json
//! {"kind": "t2ss", "universe": ["x1"],
//!  "primary": [{"param": "a", "assignments": {"b": ["x1"]}}]}
//! ```
//!
//! Canonical output sorts every label and ends with a newline.

mod report;

use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;
use std::path::Path;

use serde::de::{MapAccess, Visitor};
use serde::{Deserialize, Deserializer, Serialize};
use thiserror::Error;

use crate::lab::Instance;
use crate::t1::{validate_t1ss, RawSoftSet, TypeOneSoftSet};
use crate::t2::{validate_t2ss, RawTypeTwo};

pub use report::{digest, lab_report_json, scalar_json, InputDigest, RunReport, TOOL_NAME};

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid document at line {line}, column {column}: {message}")]
    Schema {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("`{field}`: {message}")]
    Field { field: &'static str, message: String },
    #[error(transparent)]
    Invalid(#[from] crate::Error),
    #[error("expected a {expected} document, found {found}")]
    WrongKind {
        expected: &'static str,
        found: &'static str,
    },
}

impl DocumentError {
    /// 3 for unreadable or malformed input, 1 for well-formed input that
    /// does not describe a valid soft set.
    pub fn exit_code(&self) -> i32 {
        match self {
            DocumentError::Io { .. } | DocumentError::Syntax { .. } => 3,
            _ => 1,
        }
    }
}

impl From<serde_json::Error> for DocumentError {
    fn from(e: serde_json::Error) -> Self {
        use serde_json::error::Category;
        let (line, column) = (e.line(), e.column());
        let message = strip_position(&e.to_string());
        match e.classify() {
            Category::Data => DocumentError::Schema { line, column, message },
            Category::Io | Category::Syntax | Category::Eof => DocumentError::Syntax { line, column, message },
        }
    }
}

fn strip_position(s: &str) -> String {
    match s.rfind(" at line ") {
        Some(i) => s[..i].to_string(),
        None => s.to_string(),
    }
}

/// A string-keyed map that refuses duplicate keys when deserialized.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct UniqueMap<V>(pub BTreeMap<String, V>);

impl<'de, V: Deserialize<'de>> Deserialize<'de> for UniqueMap<V> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct Unique<V>(PhantomData<V>);

        impl<'de, V: Deserialize<'de>> Visitor<'de> for Unique<V> {
            type Value = UniqueMap<V>;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a map with unique keys")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<Self::Value, A::Error> {
                let mut map = BTreeMap::new();
                while let Some((k, v)) = access.next_entry::<String, V>()? {
                    if map.contains_key(&k) {
                        return Err(serde::de::Error::custom(format_args!("duplicate key `{k}`")));
                    }
                    map.insert(k, v);
                }
                Ok(UniqueMap(map))
            }
        }

        d.deserialize_map(Unique(PhantomData))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PrimaryEntry {
    pub param: String,
    pub assignments: UniqueMap<Vec<String>>,
}

/// The on-disk form of a soft set, before validation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum SoftSetDocument {
    #[serde(rename = "t1ss")]
    TypeOne {
        universe: Vec<String>,
        assignments: UniqueMap<Vec<String>>,
    },
    #[serde(rename = "t2ss")]
    TypeTwo {
        universe: Vec<String>,
        primary: Vec<PrimaryEntry>,
    },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Wire {
    kind: String,
    universe: Vec<String>,
    #[serde(default)]
    assignments: Option<UniqueMap<Vec<String>>>,
    #[serde(default)]
    primary: Option<Vec<PrimaryEntry>>,
}

impl SoftSetDocument {
    pub fn kind(&self) -> &'static str {
        match self {
            SoftSetDocument::TypeOne { .. } => "t1ss",
            SoftSetDocument::TypeTwo { .. } => "t2ss",
        }
    }

    pub fn validate(&self) -> Result<Instance, DocumentError> {
        match self {
            SoftSetDocument::TypeOne { universe, assignments } => {
                Ok(validate_t1ss(&raw_t1(universe, assignments))?.into())
            }
            SoftSetDocument::TypeTwo { universe, primary } => {
                let raw = RawTypeTwo {
                    universe: universe.clone(),
                    primary: primary.iter().map(|p| p.param.clone()).collect(),
                    inner: primary
                        .iter()
                        .map(|p| (p.param.clone(), raw_t1(universe, &p.assignments)))
                        .collect(),
                };
                Ok(validate_t2ss(&raw)?.into())
            }
        }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("documents always serialize")
    }
}

fn raw_t1(universe: &[String], assignments: &UniqueMap<Vec<String>>) -> RawSoftSet {
    RawSoftSet {
        universe: universe.to_vec(),
        params: assignments.0.keys().cloned().collect(),
        images: assignments.0.iter().map(|(k, v)| (k.clone(), v.clone())).collect(),
    }
}

fn assignments_of(set: &TypeOneSoftSet) -> UniqueMap<Vec<String>> {
    let u = set.universe();
    UniqueMap(
        set.images()
            .iter()
            .map(|(p, img)| (p.clone(), u.labels_of(img).map(str::to_string).collect()))
            .collect(),
    )
}

impl From<&Instance> for SoftSetDocument {
    fn from(instance: &Instance) -> Self {
        match instance {
            Instance::T1(s) => SoftSetDocument::TypeOne {
                universe: s.universe().labels().to_vec(),
                assignments: assignments_of(s),
            },
            Instance::T2(s) => SoftSetDocument::TypeTwo {
                universe: s.universe().labels().to_vec(),
                primary: s
                    .inners()
                    .iter()
                    .map(|(p, inner)| PrimaryEntry {
                        param: p.clone(),
                        assignments: assignments_of(inner),
                    })
                    .collect(),
            },
        }
    }
}

pub fn parse_document(text: &str) -> Result<SoftSetDocument, DocumentError> {
    let wire: Wire = serde_json::from_str(text)?;
    match wire.kind.as_str() {
        "t1ss" => {
            if wire.primary.is_some() {
                return Err(DocumentError::Field {
                    field: "primary",
                    message: "not allowed in a t1ss document".into(),
                });
            }
            let assignments = wire.assignments.ok_or(DocumentError::Field {
                field: "assignments",
                message: "required in a t1ss document".into(),
            })?;
            Ok(SoftSetDocument::TypeOne {
                universe: wire.universe,
                assignments,
            })
        }
        "t2ss" => {
            if wire.assignments.is_some() {
                return Err(DocumentError::Field {
                    field: "assignments",
                    message: "not allowed at the top of a t2ss document".into(),
                });
            }
            let primary = wire.primary.ok_or(DocumentError::Field {
                field: "primary",
                message: "required in a t2ss document".into(),
            })?;
            Ok(SoftSetDocument::TypeTwo {
                universe: wire.universe,
                primary,
            })
        }
        other => Err(DocumentError::Field {
            field: "kind",
            message: format!("unknown kind `{other}`, expected `t1ss` or `t2ss`"),
        }),
    }
}

/// Parses and validates a soft set of either kind.
pub fn parse_softset(text: &str) -> Result<Instance, DocumentError> {
    parse_document(text)?.validate()
}

pub fn read_softset(path: &Path) -> Result<Instance, DocumentError> {
    let text = std::fs::read_to_string(path).map_err(|source| DocumentError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_softset(&text)
}

pub fn serialize_softset(instance: &Instance) -> String {
    let mut out = serde_json::to_string_pretty(&SoftSetDocument::from(instance)).expect("documents always serialize");
    out.push('\n');
    out
}

/// `serialize ∘ parse`.
pub fn canonicalize(text: &str) -> Result<String, DocumentError> {
    Ok(serialize_softset(&parse_softset(text)?))
}
