//! The JSON file format for cobordisms.
//!
//! ```json
//! {
//!   "kind": "cob2",
//!   "in": 2,
//!   "out": 3,
//!   "components": [
//!     {"in": [0, 1], "out": [0, 1, 2], "genus": 3}
//!   ]
//! }
//! ```
//!
//! Oriented cobordisms use `"kind": "cob1"`, list boundary signs as
//! `"in": ["+", "-"]`, omit `genus`, and carry a `"loops"` count. Output is
//! byte-stable: fixed key order, components in canonical order, one
//! component per line.

use std::fmt::Write as _;
use std::path::Path;

use cobkit_core::twocob::Genus;
use cobkit_core::{Cobordism1, Cobordism2, Component1, Component2, Sign, SignedSet};
use serde::Deserialize;

#[derive(Clone, Debug, PartialEq)]
pub enum CobFile {
    Two(Cobordism2),
    One(Cobordism1),
}

impl CobFile {
    pub fn kind(&self) -> &'static str {
        match self {
            CobFile::Two(_) => "cob2",
            CobFile::One(_) => "cob1",
        }
    }

    pub fn strict_equals(&self, other: &Self) -> bool {
        match (self, other) {
            (CobFile::Two(a), CobFile::Two(b)) => a.strict_equals(b),
            (CobFile::One(a), CobFile::One(b)) => a.strict_equals(b),
            _ => false,
        }
    }
}

#[derive(Deserialize)]
#[serde(tag = "kind")]
enum Raw {
    #[serde(rename = "cob2")]
    Two(Raw2),
    #[serde(rename = "cob1")]
    One(Raw1),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Raw2 {
    #[serde(rename = "in")]
    inputs: usize,
    #[serde(rename = "out")]
    outputs: usize,
    components: Vec<RawComponent2>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawComponent2 {
    #[serde(rename = "in", default)]
    inputs: Vec<usize>,
    #[serde(rename = "out", default)]
    outputs: Vec<usize>,
    genus: Genus,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Raw1 {
    #[serde(rename = "in")]
    inputs: Vec<String>,
    #[serde(rename = "out")]
    outputs: Vec<String>,
    components: Vec<RawComponent1>,
    #[serde(default)]
    loops: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawComponent1 {
    #[serde(rename = "in", default)]
    inputs: Vec<usize>,
    #[serde(rename = "out", default)]
    outputs: Vec<usize>,
}

/// Why a file was rejected; `Display` gives the one-line diagnostic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    Io(String),
    Malformed(String),
    /// Every violated invariant, first one first.
    Invalid(Vec<String>),
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParseError::Io(e) => write!(f, "cannot read file: {e}"),
            ParseError::Malformed(e) => write!(f, "malformed file: {e}"),
            ParseError::Invalid(problems) => {
                write!(f, "invalid cobordism: {}", problems.first().map(String::as_str).unwrap_or("unknown"))
            }
        }
    }
}

impl std::error::Error for ParseError {}

fn invalid(e: cobkit_core::Error) -> ParseError {
    match e {
        cobkit_core::Error::Invalid(problems) => ParseError::Invalid(problems),
        other => ParseError::Invalid(vec![other.to_string()]),
    }
}

fn signs(raw: &[String]) -> Result<SignedSet, ParseError> {
    let parsed = raw
        .iter()
        .map(|s| s.parse::<Sign>().map_err(|_| ParseError::Malformed(format!("unknown sign {s:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SignedSet::new(parsed))
}

pub fn parse_str(text: &str) -> Result<CobFile, ParseError> {
    let raw: Raw = serde_json::from_str(text).map_err(|e| ParseError::Malformed(e.to_string()))?;
    match raw {
        Raw::Two(r) => {
            let comps: Vec<Component2> = r
                .components
                .into_iter()
                .map(|c| Component2 { inputs: c.inputs, outputs: c.outputs, genus: c.genus })
                .collect();
            Cobordism2::from_components(r.inputs, r.outputs, &comps).map(CobFile::Two).map_err(invalid)
        }
        Raw::One(r) => {
            let (m, n) = (signs(&r.inputs)?, signs(&r.outputs)?);
            let comps: Vec<Component1> =
                r.components.into_iter().map(|c| Component1 { inputs: c.inputs, outputs: c.outputs }).collect();
            Cobordism1::from_components(m, n, &comps, r.loops).map(CobFile::One).map_err(invalid)
        }
    }
}

pub fn read(path: &Path) -> Result<CobFile, ParseError> {
    let text = std::fs::read_to_string(path).map_err(|e| ParseError::Io(format!("{}: {e}", path.display())))?;
    parse_str(&text)
}

fn list<T: std::fmt::Display>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn sign_list(s: &SignedSet) -> String {
    s.signs().iter().map(|x| format!("\"{}\"", x.as_str())).collect::<Vec<_>>().join(", ")
}

fn components_block(out: &mut String, rows: &[String]) {
    if rows.is_empty() {
        out.push_str("  \"components\": []");
        return;
    }
    out.push_str("  \"components\": [\n");
    for (i, row) in rows.iter().enumerate() {
        let sep = if i + 1 < rows.len() { "," } else { "" };
        let _ = writeln!(out, "    {row}{sep}");
    }
    out.push_str("  ]");
}

pub fn serialize2(c: &Cobordism2) -> String {
    let form = c.canonical_form();
    let mut rows: Vec<String> = form
        .boundary_components
        .iter()
        .map(|(ins, outs, g)| format!("{{\"in\": [{}], \"out\": [{}], \"genus\": {g}}}", list(ins), list(outs)))
        .collect();
    rows.extend(form.closed_genera.iter().map(|g| format!("{{\"in\": [], \"out\": [], \"genus\": {g}}}")));
    let mut out = format!("{{\n  \"kind\": \"cob2\",\n  \"in\": {},\n  \"out\": {},\n", form.m, form.n);
    components_block(&mut out, &rows);
    out.push_str("\n}\n");
    out
}

pub fn serialize1(c: &Cobordism1) -> String {
    let form = c.canonical_form();
    let rows: Vec<String> = form
        .components
        .iter()
        .map(|(ins, outs)| format!("{{\"in\": [{}], \"out\": [{}]}}", list(ins), list(outs)))
        .collect();
    let mut out = format!(
        "{{\n  \"kind\": \"cob1\",\n  \"in\": [{}],\n  \"out\": [{}],\n",
        sign_list(&form.source),
        sign_list(&form.target)
    );
    components_block(&mut out, &rows);
    let _ = write!(out, ",\n  \"loops\": {}\n}}\n", form.loops);
    out
}

pub fn serialize(file: &CobFile) -> String {
    match file {
        CobFile::Two(c) => serialize2(c),
        CobFile::One(c) => serialize1(c),
    }
}
