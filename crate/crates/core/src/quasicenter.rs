//! `Δ_g`, `τ_g` and the quasi-centralizer `QZ` of a parabolic submonoid.
//!
//! Every function takes a `scope`: the atom set `X` of the submonoid
//! `A⁺_X` in which the computation takes place. The full monoid is
//! `scope = all_atoms()`.

use std::collections::BTreeMap;

use crate::atoms::{AtomId, AtomSet};
use crate::elements::Positive;
use crate::error::{Error, Result};
use crate::system::{GarsideSystem, Side};

const ITERATION_CAP: usize = 10_000;

/// Free commutative basis `{τ_s}` of `QZ(A⁺_X)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QZBasis {
    pub scope: AtomSet,
    pub basis: Vec<Positive>,
    pub atom_map: BTreeMap<AtomId, usize>,
}

impl GarsideSystem {
    /// Saturation fixpoint for `Δ_g` (left) or `Δ̃_g` (right):
    /// `x ← x ∨ ⋁_s s\(s∨x)` until stable.
    pub fn delta_g(&self, g: &Positive, side: Side, scope: AtomSet) -> Result<Positive> {
        let mut x = g.clone();
        for _ in 0..ITERATION_CAP {
            let mut next = x.clone();
            for s in scope.iter() {
                let atom = self.atom_positive(s);
                let term = match side {
                    Side::Left => {
                        let j = self.join(&atom, &x, Side::Left);
                        self.quotient(&atom, &j, Side::Left)?
                    }
                    Side::Right => {
                        let j = self.join(&atom, &x, Side::Right);
                        self.quotient(&atom, &j, Side::Right)?
                    }
                };
                next = self.join(&next, &term, side);
            }
            if next == x {
                return Ok(x);
            }
            x = next;
        }
        Err(Error::IterationCapExceeded("delta_g"))
    }

    fn tau_from(&self, g: &Positive, first: Side, scope: AtomSet) -> Result<Positive> {
        let mut x = g.clone();
        let mut side = first;
        for _ in 0..ITERATION_CAP {
            let next = self.delta_g(&x, side, scope)?;
            if next == x {
                // stable for one side; stable overall once the other agrees
                let other = match side {
                    Side::Left => Side::Right,
                    Side::Right => Side::Left,
                };
                if self.delta_g(&x, other, scope)? == x {
                    return Ok(x);
                }
            }
            x = next;
            side = match side {
                Side::Left => Side::Right,
                Side::Right => Side::Left,
            };
        }
        Err(Error::IterationCapExceeded("tau"))
    }

    /// `τ_g`: alternate `Δ_·` and `Δ̃_·` starting from `g` until stable.
    pub fn tau(&self, g: &Positive, scope: AtomSet) -> Result<Positive> {
        self.tau_from(g, Side::Left, scope)
    }

    /// `τ̃_g`: the same sequence started on the right.
    pub fn tau_tilde(&self, g: &Positive, scope: AtomSet) -> Result<Positive> {
        self.tau_from(g, Side::Right, scope)
    }

    /// `x ∈ A⁺_X` and, for every `s ∈ X`, `x |_L s·x` and `x |_R x·s`.
    pub fn is_quasi_central(&self, x: &Positive, scope: AtomSet) -> bool {
        self.contains_atoms(scope, x)
            && scope.iter().all(|s| {
                let a = self.atom_positive(s);
                self.divides(x, &self.multiply(&a, x), Side::Left)
                    && self.divides(x, &self.multiply(x, &a), Side::Right)
            })
    }

    /// Whether `p` is a product of atoms from `scope`.
    pub(crate) fn contains_atoms(&self, scope: AtomSet, p: &Positive) -> bool {
        self.max_divisor_in(scope, p, Side::Left) == *p
    }

    /// Basis of `QZ(A⁺_X)`, with its defining properties checked.
    pub fn qz_basis(&self, scope: AtomSet) -> Result<QZBasis> {
        let mut basis: Vec<Positive> = Vec::new();
        let mut atom_map = BTreeMap::new();
        for s in scope.iter() {
            let a = self.atom_positive(s);
            let t = self.tau(&a, scope)?;
            let tt = self.tau_tilde(&a, scope)?;
            if t != tt {
                return Err(Error::InvariantViolation(format!(
                    "left and right τ of {} differ: {} vs {}",
                    self.atom_name(s),
                    self.render_positive(&t),
                    self.render_positive(&tt)
                )));
            }
            let idx = match basis.iter().position(|b| *b == t) {
                Some(i) => i,
                None => {
                    basis.push(t);
                    basis.len() - 1
                }
            };
            atom_map.insert(s, idx);
        }
        for (i, u) in basis.iter().enumerate() {
            if !self.is_quasi_central(u, scope) {
                return Err(Error::InvariantViolation(format!(
                    "{} is not quasi-central",
                    self.render_positive(u)
                )));
            }
            for v in &basis[i + 1..] {
                let uv = self.multiply(u, v);
                if uv != self.multiply(v, u) || self.join(u, v, Side::Left) != uv {
                    return Err(Error::InvariantViolation(format!(
                        "{} and {} are not free commuting generators",
                        self.render_positive(u),
                        self.render_positive(v)
                    )));
                }
            }
        }
        Ok(QZBasis { scope, basis, atom_map })
    }

    /// The basis indices (with multiplicity, sorted) whose product is `g`,
    /// or `None` when `g` is not quasi-central.
    pub fn qz_decompose(&self, g: &Positive, basis: &QZBasis) -> Option<Vec<usize>> {
        if !self.is_quasi_central(g, basis.scope) {
            return None;
        }
        let mut rest = g.clone();
        let mut out = Vec::new();
        'strip: while !rest.is_identity() {
            for (i, b) in basis.basis.iter().enumerate() {
                if let Ok(q) = self.quotient(b, &rest, Side::Left) {
                    rest = q;
                    out.push(i);
                    continue 'strip;
                }
            }
            return None;
        }
        out.sort_unstable();
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundled;

    fn w(sys: &GarsideSystem, s: &str) -> Positive {
        let word: Vec<AtomId> = s.split_whitespace().map(|n| sys.atom_by_name(n).unwrap()).collect();
        sys.normalize(&word)
    }

    #[test]
    fn delta_g_examples() {
        let sys = bundled::b3();
        let all = sys.all_atoms();
        assert_eq!(sys.delta_g(&w(&sys, "s"), Side::Left, all).unwrap(), sys.delta_positive());
        let d = sys.delta_positive();
        assert_eq!(sys.delta_g(&d, Side::Left, all).unwrap(), d);
        let sq = bundled::square_central();
        assert_eq!(sq.delta_g(&w(&sq, "c"), Side::Left, sq.all_atoms()).unwrap(), w(&sq, "c"));
    }

    #[test]
    fn tau_examples() {
        let sys = bundled::b3();
        assert_eq!(sys.tau(&w(&sys, "s"), sys.all_atoms()).unwrap(), sys.delta_positive());
        let sq = bundled::square_central();
        assert_eq!(sq.tau(&w(&sq, "a"), sq.all_atoms()).unwrap(), w(&sq, "a a"));
    }

    #[test]
    fn bases() {
        let sys = bundled::b3();
        let qz = sys.qz_basis(sys.all_atoms()).unwrap();
        assert_eq!(qz.basis, vec![sys.delta_positive()]);
        assert!(qz.atom_map.values().all(|&i| i == 0));
        let sq = bundled::square_central();
        let qz = sq.qz_basis(sq.all_atoms()).unwrap();
        assert_eq!(qz.basis, vec![w(&sq, "a a"), w(&sq, "c")]);
    }

    #[test]
    fn decompositions() {
        let sys = bundled::b3();
        let qz = sys.qz_basis(sys.all_atoms()).unwrap();
        assert_eq!(sys.qz_decompose(&sys.delta_power(2), &qz), Some(vec![0, 0]));
        assert_eq!(sys.qz_decompose(&w(&sys, "s"), &qz), None);
        assert_eq!(sys.qz_decompose(&Positive::identity(), &qz), Some(vec![]));
    }

    #[test]
    fn scoped_to_a_parabolic() {
        let sys = bundled::b4();
        let x: AtomSet = ["s1", "s3"].iter().map(|n| sys.atom_by_name(n).unwrap()).collect();
        let qz = sys.qz_basis(x).unwrap();
        assert_eq!(qz.basis, vec![w(&sys, "s1"), w(&sys, "s3")]);
    }
}
