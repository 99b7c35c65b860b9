//! System definition files.
//!
//! Two kinds of JSON documents are accepted, distinguished by `kind`:
//!
//! ```json
//! { "kind": "coxeter", "atoms": ["s", "t"], "coxeter_matrix": [[1, 3], [3, 1]] }
//! ```
//!
//! ```json
//! { "kind": "table", "atoms": ["a", "b"], "simples": [{"id": 0, "word": []}, ...],
//!   "delta": 3, "relations": [[["a","b","a"], ["b","a","b"]]],
//!   "nu_table": {"a": {"b": ["b","a"]}}, "nu_tilde_table": {...},
//!   "parabolics": [[], ["a"], {"atoms": ["a","b"], "components": [["a","b"]]}] }
//! ```
//!
//! Parabolic keys in `nu_table`/`nu_tilde_table` are comma-separated atom
//! names, with the empty string for the empty set.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SystemSpec {
    Coxeter(CoxeterSpec),
    Table(TableSpec),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoxeterSpec {
    pub atoms: Vec<String>,
    pub coxeter_matrix: Vec<Vec<MatrixEntry>>,
    /// Upper bound on the group order accepted during enumeration.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cap: Option<usize>,
}

/// A Coxeter matrix entry: an integer, or a symbol such as `"inf"`/`"∞"`
/// (which is always rejected).
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MatrixEntry {
    Finite(u32),
    Symbol(String),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SimpleRecord {
    pub id: usize,
    pub word: Vec<String>,
}

pub type Word = Vec<String>;

/// Per-parabolic ν-table: parabolic key → atom name → element word.
pub type NuTableSpec = BTreeMap<String, BTreeMap<String, Word>>;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableSpec {
    pub atoms: Vec<String>,
    pub simples: Vec<SimpleRecord>,
    pub delta: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub relations: Vec<(Word, Word)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nu_table: Option<NuTableSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nu_tilde_table: Option<NuTableSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parabolics: Option<Vec<ParabolicDecl>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParabolicDecl {
    Atoms(Vec<String>),
    WithComponents {
        atoms: Vec<String>,
        #[serde(default)]
        components: Option<Vec<Vec<String>>>,
    },
}

impl ParabolicDecl {
    pub fn atoms(&self) -> &[String] {
        match self {
            ParabolicDecl::Atoms(a) => a,
            ParabolicDecl::WithComponents { atoms, .. } => atoms,
        }
    }

    pub fn components(&self) -> Option<&[Vec<String>]> {
        match self {
            ParabolicDecl::Atoms(_) => None,
            ParabolicDecl::WithComponents { components, .. } => components.as_deref(),
        }
    }
}

impl SystemSpec {
    pub fn from_json(text: &str) -> crate::Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}
