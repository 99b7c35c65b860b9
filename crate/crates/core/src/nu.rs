//! The ν- and ν̃-functions and the ribbon atoms they produce.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::atoms::{AtomId, AtomSet};
use crate::elements::Positive;
use crate::error::{Error, Result};
use crate::system::{GarsideSystem, Side};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NuVariant {
    Plain,
    Tilde,
}

impl NuVariant {
    pub fn name(self) -> &'static str {
        match self {
            NuVariant::Plain => "nu",
            NuVariant::Tilde => "nu_tilde",
        }
    }
}

/// Whether a ribbon atom stays inside `A⁺_X` (τ) or leaves it (ν).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NuKind {
    Tau,
    Nu,
}

impl fmt::Display for NuKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NuKind::Tau => "tau",
            NuKind::Nu => "nu",
        })
    }
}

/// A ribbon atom `source → target` with the atom label it was computed for.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NuAtom {
    pub source: AtomSet,
    pub label: AtomId,
    pub element: Positive,
    pub target: AtomSet,
    pub kind: NuKind,
}

/// One failed ν-axiom instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NuViolation {
    pub variant: NuVariant,
    /// 0: not a ribbon; 1: not atomic; 2: divisibility absorption; 3: join closure.
    pub axiom: u8,
    pub parabolic: AtomSet,
    pub atom: AtomId,
    pub detail: String,
}

#[derive(Debug, Clone, Default)]
pub struct NuReport {
    pub level: usize,
    pub checked: usize,
    pub violations: Vec<NuViolation>,
}

impl NuReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn fails_axiom(&self, axiom: u8) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }
}

impl GarsideSystem {
    /// The raw value `ν_X(s)` (or `ν̃_X(s)`), without ribbon validation.
    pub fn nu_element(&self, x: AtomSet, s: AtomId, variant: NuVariant) -> Result<Positive> {
        self.check_parabolic(x)?;
        if self.coxeter_matrix().is_some() {
            if x.contains(s) {
                return self.delta_of(self.component_of(x, s)?);
            }
            let dx = self.delta_of(x)?;
            let dxs = self.delta_of(x.with(s))?;
            let side = match variant {
                NuVariant::Plain => Side::Left,
                NuVariant::Tilde => Side::Right,
            };
            return self.quotient(&dx, &dxs, side);
        }
        let table = match variant {
            NuVariant::Plain => self.nu_table.as_ref(),
            NuVariant::Tilde => self.nu_tilde_table.as_ref(),
        };
        let missing = || Error::NuTableMissing {
            variant: variant.name(),
            parabolic: self.render_set(x),
            atom: self.atom_name(s).to_string(),
        };
        let word = table
            .and_then(|t| t.get(&x))
            .and_then(|row| row.get(&s))
            .ok_or_else(missing)?;
        Ok(self.normalize(word))
    }

    /// Target parabolic of `p` viewed as a ribbon out of `X`.
    pub fn ribbon_target(&self, p: &Positive, x: AtomSet) -> Option<AtomSet> {
        self.conjugate_atomset(&self.to_group(p), x)
            .filter(|&y| self.is_parabolic(y))
    }

    /// Source parabolic of `p` viewed as a ribbon into `X`.
    pub fn ribbon_source(&self, p: &Positive, x: AtomSet) -> Option<AtomSet> {
        self.conjugate_atomset(&self.g_invert(&self.to_group(p)), x)
            .filter(|&y| self.is_parabolic(y))
    }

    /// `ν_X(s)`: for the plain variant a ribbon out of `X`, for the tilde
    /// variant a ribbon into `X`.
    pub fn nu(&self, x: AtomSet, s: AtomId, variant: NuVariant) -> Result<NuAtom> {
        let element = self.nu_element(x, s, variant)?;
        let not_ribbon = || Error::NotARibbon {
            element: self.render_positive(&element),
            parabolic: self.render_set(x),
        };
        let (source, target) = match variant {
            NuVariant::Plain => (x, self.ribbon_target(&element, x).ok_or_else(not_ribbon)?),
            NuVariant::Tilde => (self.ribbon_source(&element, x).ok_or_else(not_ribbon)?, x),
        };
        let kind = if self.contains(x, &element)? {
            NuKind::Tau
        } else {
            NuKind::Nu
        };
        Ok(NuAtom { source, label: s, element, target, kind })
    }

    /// Distinct ribbon atoms out of `X` (plain) or into `X` (tilde), one per
    /// element, labelled by the first atom producing it.
    pub fn classify_variant(&self, x: AtomSet, variant: NuVariant) -> Result<Vec<NuAtom>> {
        let mut out: Vec<NuAtom> = Vec::new();
        for s in self.atoms() {
            let n = self.nu(x, s, variant)?;
            if !out.iter().any(|m| m.element == n.element) {
                out.push(n);
            }
        }
        Ok(out)
    }

    pub fn classify(&self, x: AtomSet) -> Result<Vec<NuAtom>> {
        self.classify_variant(x, NuVariant::Plain)
    }

    /// Check the three ν-axioms (and that every value is a ribbon) for every
    /// parabolic and atom, against all ribbons of length at most `level`.
    pub fn verify_nu_axioms(&self, level: usize) -> Result<NuReport> {
        let universe = self.positives_up_to(level);
        let mut report = NuReport { level, ..NuReport::default() };
        for x in self.parabolics() {
            for variant in [NuVariant::Plain, NuVariant::Tilde] {
                self.verify_at(x, variant, &universe, &mut report)?;
            }
        }
        Ok(report)
    }

    fn verify_at(
        &self,
        x: AtomSet,
        variant: NuVariant,
        universe: &[Positive],
        report: &mut NuReport,
    ) -> Result<()> {
        let side = match variant {
            NuVariant::Plain => Side::Left,
            NuVariant::Tilde => Side::Right,
        };
        let is_ribbon = |g: &Positive| match variant {
            NuVariant::Plain => self.ribbon_target(g, x).is_some(),
            NuVariant::Tilde => self.ribbon_source(g, x).is_some(),
        };
        let ribbons: Vec<&Positive> = universe.iter().filter(|g| is_ribbon(g)).collect();
        let mut push = |axiom: u8, atom: AtomId, detail: String| {
            report.violations.push(NuViolation { variant, axiom, parabolic: x, atom, detail });
        };
        let mut values = Vec::new();
        for s in self.atoms() {
            let v = self.nu_element(x, s, variant)?;
            let shown = self.render_positive(&v);
            report.checked += 1;
            if !is_ribbon(&v) {
                push(0, s, format!("{shown} is not a ribbon"));
            }
            for d in self.divisors(&v, side) {
                if !d.is_identity() && d != v && is_ribbon(&d) {
                    push(1, s, format!("{} is a proper ribbon divisor of {shown}", self.render_positive(&d)));
                    break;
                }
            }
            let atom = self.atom_positive(s);
            for g in &ribbons {
                if self.divides(&atom, g, side) && !self.divides(&v, g, side) {
                    push(2, s, format!("{} is divisible by the atom but not by {shown}", self.render_positive(g)));
                    break;
                }
            }
            values.push((s, v));
        }
        for (i, (s, u)) in values.iter().enumerate() {
            for (t, v) in &values[i + 1..] {
                let m = self.join(u, v, side);
                if !is_ribbon(&m) {
                    push(
                        3,
                        *s,
                        format!(
                            "lcm of the values at {} and {} is {}, not a ribbon",
                            self.atom_name(*s),
                            self.atom_name(*t),
                            self.render_positive(&m)
                        ),
                    );
                }
            }
        }
        Ok(())
    }
}
