//! Parsing of atom words, group words and parabolic subsets.
//!
//! Words are whitespace-separated atom names. `DELTA` stands for Δ; in
//! group words any token may carry the suffix `^-1`. Parabolic subsets are
//! comma-separated atom names, the empty string being the empty set.

use crate::atoms::{AtomId, AtomSet};
use crate::elements::{GroupLetter, Positive};
use crate::error::{Error, Result};
use crate::system::GarsideSystem;

impl GarsideSystem {
    fn atom_token(&self, tok: &str) -> Result<AtomId> {
        self.atom_by_name(tok).ok_or_else(|| Error::UnknownAtom(tok.to_string()))
    }

    /// A positive word; `DELTA` expands to Δ.
    pub fn parse_word(&self, text: &str) -> Result<Vec<AtomId>> {
        let mut out = Vec::new();
        for tok in text.split_whitespace() {
            if tok == "DELTA" {
                out.extend_from_slice(self.simple_word(self.delta()));
            } else if tok.ends_with("^-1") {
                return Err(Error::Parse(format!("inverse `{tok}` is not allowed in a positive word")));
            } else {
                out.push(self.atom_token(tok)?);
            }
        }
        Ok(out)
    }

    pub fn parse_positive(&self, text: &str) -> Result<Positive> {
        Ok(self.normalize(&self.parse_word(text)?))
    }

    pub fn parse_group_word(&self, text: &str) -> Result<Vec<GroupLetter>> {
        text.split_whitespace()
            .map(|tok| {
                let (base, inv) = match tok.strip_suffix("^-1") {
                    Some(b) => (b, true),
                    None => (tok, false),
                };
                Ok(match (base, inv) {
                    ("DELTA", false) => GroupLetter::Delta,
                    ("DELTA", true) => GroupLetter::DeltaInv,
                    (b, false) => GroupLetter::Atom(self.atom_token(b)?),
                    (b, true) => GroupLetter::AtomInv(self.atom_token(b)?),
                })
            })
            .collect()
    }

    pub fn parse_group(&self, text: &str) -> Result<crate::elements::GroupEl> {
        Ok(self.g_normalize(0, &self.parse_group_word(text)?))
    }

    pub fn parse_atom_set(&self, text: &str) -> Result<AtomSet> {
        text.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| self.atom_token(t))
            .collect()
    }
}
