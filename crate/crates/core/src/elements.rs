//! Positive elements in left-greedy normal form and group elements `Δⁿ·p`.

use serde::{Deserialize, Serialize};

use crate::atoms::{AtomId, AtomSet};
use crate::error::{Error, Result};
use crate::system::{GarsideSystem, Side, Simple};

/// A positive element as its left-greedy sequence of non-identity simples.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct Positive {
    letters: Vec<Simple>,
}

impl Positive {
    pub fn identity() -> Self {
        Positive { letters: Vec::new() }
    }

    pub fn letters(&self) -> &[Simple] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of greedy letters (the canonical length).
    pub fn canonical_len(&self) -> usize {
        self.letters.len()
    }

    pub fn head(&self) -> Simple {
        self.letters.first().copied().unwrap_or(Simple::IDENTITY)
    }
}

/// A group element `Δ^exponent · body`, with `Δ ∤_L body`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct GroupEl {
    pub exponent: i64,
    pub body: Positive,
}

impl GroupEl {
    pub fn identity() -> Self {
        GroupEl::default()
    }

    pub fn is_identity(&self) -> bool {
        self.exponent == 0 && self.body.is_identity()
    }

    /// The element as a positive one, if it is positive.
    pub fn as_positive(&self, sys: &GarsideSystem) -> Option<Positive> {
        if self.exponent < 0 {
            return None;
        }
        let mut letters = vec![sys.delta(); self.exponent as usize];
        letters.extend_from_slice(self.body.letters());
        Some(Positive { letters })
    }
}

/// A letter of a group word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupLetter {
    Atom(AtomId),
    AtomInv(AtomId),
    Delta,
    DeltaInv,
}

/// Meet or join.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LatticeOp {
    Meet,
    Join,
}

impl GarsideSystem {
    /// Left-greedy normal form of a word in the atoms.
    pub fn normalize(&self, word: &[AtomId]) -> Positive {
        self.normalize_simples(word.iter().map(|&a| self.atom_simple(a)).collect())
    }

    /// Left-greedy normal form of a product of simples.
    pub fn normalize_simples(&self, mut letters: Vec<Simple>) -> Positive {
        letters.retain(|s| !s.is_identity());
        // Local left-weighting until every adjacent pair is left-weighted.
        loop {
            let mut changed = false;
            for i in 0..letters.len().saturating_sub(1) {
                let (u, v) = (letters[i], letters[i + 1]);
                let m = self.simple_meet(self.lc(u), v, Side::Left);
                if !m.is_identity() {
                    letters[i] = self.mul(u, m).expect("m divides the complement of u");
                    letters[i + 1] = self.left_quotient(m, v).expect("m divides v");
                    changed = true;
                }
            }
            if !changed {
                break;
            }
            letters.retain(|s| !s.is_identity());
        }
        Positive { letters }
    }

    pub fn positive_from_simple(&self, s: Simple) -> Positive {
        self.normalize_simples(vec![s])
    }

    pub fn atom_positive(&self, a: AtomId) -> Positive {
        self.positive_from_simple(self.atom_simple(a))
    }

    pub fn delta_positive(&self) -> Positive {
        self.positive_from_simple(self.delta())
    }

    pub fn delta_power(&self, k: usize) -> Positive {
        Positive { letters: vec![self.delta(); k] }
    }

    /// Rebuild from stored letters, checking they are in normal form.
    pub fn positive_from_letters(&self, letters: Vec<Simple>) -> Result<Positive> {
        let p = self.normalize_simples(letters.clone());
        if p.letters != letters {
            return Err(Error::InvariantViolation("letters are not in left-greedy normal form".into()));
        }
        Ok(p)
    }

    pub fn multiply(&self, x: &Positive, y: &Positive) -> Positive {
        let mut letters = x.letters.clone();
        letters.extend_from_slice(&y.letters);
        self.normalize_simples(letters)
    }

    pub fn product(&self, factors: &[Positive]) -> Positive {
        self.normalize_simples(factors.iter().flat_map(|p| p.letters.iter().copied()).collect())
    }

    /// The element spelled as a word in the atoms.
    pub fn expand(&self, p: &Positive) -> Vec<AtomId> {
        p.letters
            .iter()
            .flat_map(|&s| self.simple_word(s).iter().copied())
            .collect()
    }

    /// Length of `expand(p)`. For homogeneous systems this is the length
    /// of every word representing `p`.
    pub fn atom_len(&self, p: &Positive) -> usize {
        p.letters.iter().map(|&s| self.simple_len(s)).sum()
    }

    pub fn phi_positive(&self, p: &Positive, k: i64) -> Positive {
        // Φ is an automorphism, so it maps normal forms to normal forms.
        Positive {
            letters: p.letters.iter().map(|&s| self.phi_pow(s, k)).collect(),
        }
    }

    /// `s \ p` for a simple `s`, if `s` left-divides `p`.
    fn left_strip(&self, s: Simple, p: &Positive) -> Option<Positive> {
        if s.is_identity() {
            return Some(p.clone());
        }
        let head = p.head();
        let q = self.left_quotient(s, head)?;
        let mut letters = Vec::with_capacity(p.letters.len());
        letters.push(q);
        letters.extend_from_slice(&p.letters[1..]);
        Some(self.normalize_simples(letters))
    }

    pub fn divides(&self, x: &Positive, y: &Positive, side: Side) -> bool {
        self.quotient(x, y, side).is_ok()
    }

    /// Left side: the `c` with `x·c = y`. Right side: the `c` with `c·x = y`.
    pub fn quotient(&self, x: &Positive, y: &Positive, side: Side) -> Result<Positive> {
        let err = || Error::NotADivisor {
            divisor: self.render_positive(x),
            dividend: self.render_positive(y),
            side: side.name(),
        };
        match side {
            Side::Left => {
                let mut rest = y.clone();
                for &s in &x.letters {
                    rest = self.left_strip(s, &rest).ok_or_else(err)?;
                }
                Ok(rest)
            }
            Side::Right => {
                let g = self.g_multiply(&self.to_group(y), &self.g_invert(&self.to_group(x)));
                g.as_positive(self).ok_or_else(err)
            }
        }
    }

    pub fn lattice(&self, x: &Positive, y: &Positive, op: LatticeOp, side: Side) -> Positive {
        match op {
            LatticeOp::Meet => self.meet(x, y, side),
            LatticeOp::Join => self.join(x, y, side),
        }
    }

    /// Greatest common divisor.
    pub fn meet(&self, x: &Positive, y: &Positive, side: Side) -> Positive {
        match side {
            Side::Left => {
                let (mut x, mut y) = (x.clone(), y.clone());
                let mut acc = Vec::new();
                loop {
                    // the head of a gcd is the gcd of the heads
                    let h = self.simple_meet(x.head(), y.head(), Side::Left);
                    if h.is_identity() {
                        return self.normalize_simples(acc);
                    }
                    acc.push(h);
                    x = self.left_strip(h, &x).expect("h divides x");
                    y = self.left_strip(h, &y).expect("h divides y");
                }
            }
            Side::Right => {
                let (mut x, mut y) = (x.clone(), y.clone());
                let mut acc: Vec<Positive> = Vec::new();
                'strip: loop {
                    for a in self.atoms() {
                        let s = self.atom_positive(a);
                        if let (Ok(qx), Ok(qy)) = (
                            self.quotient(&s, &x, Side::Right),
                            self.quotient(&s, &y, Side::Right),
                        ) {
                            x = qx;
                            y = qy;
                            acc.push(s);
                            continue 'strip;
                        }
                    }
                    acc.reverse();
                    return self.product(&acc);
                }
            }
        }
    }

    /// Least common multiple, through coprime fractions: if `x⁻¹y = a·b⁻¹`
    /// with `a`, `b` right-coprime then `x·a = y·b` is the left lcm.
    pub fn join(&self, x: &Positive, y: &Positive, side: Side) -> Positive {
        let (gx, gy) = (self.to_group(x), self.to_group(y));
        match side {
            Side::Left => {
                let g = self.g_multiply(&self.g_invert(&gx), &gy);
                let (a, _) = self.fraction(&g, Side::Right);
                self.multiply(x, &a)
            }
            Side::Right => {
                let g = self.g_multiply(&gy, &self.g_invert(&gx));
                let (c, _) = self.fraction(&g, Side::Left);
                self.multiply(&c, y)
            }
        }
    }

    // ---- group elements ------------------------------------------------

    pub fn to_group(&self, p: &Positive) -> GroupEl {
        self.g_from_parts(0, p.letters.clone())
    }

    /// Canonical form of `Δ^exponent · (product of simples)`.
    pub fn g_from_parts(&self, exponent: i64, letters: Vec<Simple>) -> GroupEl {
        let p = self.normalize_simples(letters);
        let k = p.letters.iter().take_while(|&&s| s == self.delta()).count();
        GroupEl {
            exponent: exponent + k as i64,
            body: Positive { letters: p.letters[k..].to_vec() },
        }
    }

    pub fn delta_group(&self, n: i64) -> GroupEl {
        GroupEl { exponent: n, body: Positive::identity() }
    }

    /// `Δ^a p · Δ^b q = Δ^{a+b} Φ^b(p) q`.
    pub fn g_multiply(&self, x: &GroupEl, y: &GroupEl) -> GroupEl {
        let mut letters = self.phi_positive(&x.body, y.exponent).letters;
        letters.extend_from_slice(&y.body.letters);
        self.g_from_parts(x.exponent + y.exponent, letters)
    }

    pub fn g_product(&self, factors: &[GroupEl]) -> GroupEl {
        factors
            .iter()
            .fold(GroupEl::identity(), |acc, f| self.g_multiply(&acc, f))
    }

    /// `s⁻¹ = Δ⁻¹ · (Δ s⁻¹)`.
    fn simple_inverse(&self, s: Simple) -> GroupEl {
        self.g_from_parts(-1, vec![self.complement(s, Side::Right)])
    }

    pub fn g_invert(&self, g: &GroupEl) -> GroupEl {
        let mut acc = GroupEl::identity();
        for &s in g.body.letters.iter().rev() {
            acc = self.g_multiply(&acc, &self.simple_inverse(s));
        }
        self.g_multiply(&acc, &self.delta_group(-g.exponent))
    }

    /// Canonical form of `Δ^exponent · word`.
    pub fn g_normalize(&self, exponent: i64, word: &[GroupLetter]) -> GroupEl {
        let mut acc = self.delta_group(exponent);
        for l in word {
            let f = match *l {
                GroupLetter::Atom(a) => self.to_group(&self.atom_positive(a)),
                GroupLetter::AtomInv(a) => self.simple_inverse(self.atom_simple(a)),
                GroupLetter::Delta => self.delta_group(1),
                GroupLetter::DeltaInv => self.delta_group(-1),
            };
            acc = self.g_multiply(&acc, &f);
        }
        acc
    }

    /// Coprime fraction views. Right: `(v₁, v₂)` with `g = v₁·v₂⁻¹`.
    /// Left: `(u₁, u₂)` with `g = u₁⁻¹·u₂`.
    pub fn fraction(&self, g: &GroupEl, side: Side) -> (Positive, Positive) {
        if g.exponent >= 0 {
            let p = g.as_positive(self).expect("non-negative exponent");
            return match side {
                Side::Right => (p, Positive::identity()),
                Side::Left => (Positive::identity(), p),
            };
        }
        let k = (-g.exponent) as usize;
        match side {
            Side::Right => {
                // Δ^{-k} p = Φ^k(p) Δ^{-k}
                let v1 = self.phi_positive(&g.body, k as i64);
                let v2 = self.delta_power(k);
                let d = self.meet(&v1, &v2, Side::Right);
                (
                    self.quotient(&d, &v1, Side::Right).expect("meet divides"),
                    self.quotient(&d, &v2, Side::Right).expect("meet divides"),
                )
            }
            Side::Left => {
                let u1 = self.delta_power(k);
                let u2 = g.body.clone();
                let d = self.meet(&u1, &u2, Side::Left);
                (
                    self.quotient(&d, &u1, Side::Left).expect("meet divides"),
                    self.quotient(&d, &u2, Side::Left).expect("meet divides"),
                )
            }
        }
    }

    /// `g⁻¹ x g` for a group element `x`.
    pub fn conjugate(&self, x: &GroupEl, g: &GroupEl) -> GroupEl {
        self.g_product(&[self.g_invert(g), x.clone(), g.clone()])
    }

    /// `Y = g⁻¹Xg` if every `g⁻¹xg` is an atom.
    pub fn conjugate_atomset(&self, g: &GroupEl, x: AtomSet) -> Option<AtomSet> {
        let gi = self.g_invert(g);
        let mut y = AtomSet::EMPTY;
        for a in x.iter() {
            let c = self.g_product(&[gi.clone(), self.to_group(&self.atom_positive(a)), g.clone()]);
            // an atom may be Δ itself, stored as exponent 1
            let p = c.as_positive(self)?;
            if p.letters.len() != 1 {
                return None;
            }
            y.insert(self.simple_atom(p.letters[0])?);
        }
        Some(y)
    }

    // ---- rendering -----------------------------------------------------

    fn letter_sep(&self) -> &'static str {
        if self.atom_names().iter().all(|n| n.chars().count() == 1) {
            ""
        } else {
            " "
        }
    }

    /// Greedy letters separated by `" . "`, each letter spelled as atoms.
    pub fn render_positive(&self, p: &Positive) -> String {
        if p.is_identity() {
            return "1".into();
        }
        let sep = self.letter_sep();
        p.letters
            .iter()
            .map(|&s| {
                self.simple_word(s)
                    .iter()
                    .map(|&a| self.atom_name(a))
                    .collect::<Vec<_>>()
                    .join(sep)
            })
            .collect::<Vec<_>>()
            .join(" . ")
    }

    /// The element as a space-separated atom word.
    pub fn render_positive_word(&self, p: &Positive) -> String {
        self.render_word(&self.expand(p))
    }

    pub fn render_group(&self, g: &GroupEl) -> String {
        match (g.exponent, g.body.is_identity()) {
            (0, _) => self.render_positive(&g.body),
            (n, true) => format!("DELTA^{n}"),
            (n, false) => format!("DELTA^{n} . {}", self.render_positive(&g.body)),
        }
    }

    /// A group word that parses back to `g`.
    pub fn group_word(&self, g: &GroupEl) -> Vec<String> {
        let tok = if g.exponent < 0 { "DELTA^-1" } else { "DELTA" };
        let mut out = vec![tok.to_string(); g.exponent.unsigned_abs() as usize];
        out.extend(self.expand(&g.body).iter().map(|&a| self.atom_name(a).to_string()));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundled;

    fn w(sys: &GarsideSystem, s: &str) -> Positive {
        let word: Vec<AtomId> = s
            .split_whitespace()
            .map(|n| sys.atom_by_name(n).unwrap())
            .collect();
        sys.normalize(&word)
    }

    #[test]
    fn normal_forms_in_b3() {
        let sys = bundled::b3();
        assert_eq!(sys.render_positive(&w(&sys, "s t s t")), "sts . t");
        assert_eq!(sys.render_positive(&w(&sys, "s s")), "s . s");
        assert!(w(&sys, "").is_identity());
        assert_eq!(w(&sys, "t s t"), w(&sys, "s t s"));
    }

    #[test]
    fn multiply_and_quotients() {
        let sys = bundled::b3();
        let (s, ts, sts) = (w(&sys, "s"), w(&sys, "t s"), w(&sys, "s t s"));
        assert_eq!(sys.multiply(&s, &ts), sts);
        assert_eq!(sys.quotient(&s, &sts, Side::Left).unwrap(), ts);
        assert!(sys.quotient(&w(&sys, "t"), &s, Side::Left).is_err());
        assert!(sys.divides(&ts, &sts, Side::Right));
        // every simple right-divides Δ, including st since sts = tst
        assert!(sys.divides(&w(&sys, "s t"), &sts, Side::Right));
        assert!(sys.divides(&w(&sys, "t"), &w(&sys, "s t"), Side::Right));
        assert!(!sys.divides(&w(&sys, "s"), &w(&sys, "s t"), Side::Right));
        assert!(sys.quotient(&sts, &sts, Side::Left).unwrap().is_identity());
    }

    #[test]
    fn lattice_examples() {
        let sys = bundled::b3();
        let (s, t) = (w(&sys, "s"), w(&sys, "t"));
        assert_eq!(sys.join(&s, &t, Side::Left), w(&sys, "s t s"));
        assert_eq!(sys.join(&s, &t, Side::Right), w(&sys, "s t s"));
        assert_eq!(
            sys.meet(&w(&sys, "s t s t"), &w(&sys, "s t s s"), Side::Left),
            w(&sys, "s t s")
        );
        assert_eq!(sys.meet(&w(&sys, "s t"), &w(&sys, "t s"), Side::Left), Positive::identity());
    }

    #[test]
    fn group_arithmetic() {
        let sys = bundled::b3();
        let s = sys.to_group(&w(&sys, "s"));
        let inv = sys.g_invert(&s);
        assert_eq!(inv.exponent, -1);
        // st · s = Δ, so s⁻¹ = Δ⁻¹ · st
        assert_eq!(sys.render_positive(&inv.body), "st");
        assert!(sys.g_multiply(&s, &inv).is_identity());
        assert!(sys.g_multiply(&sys.delta_group(1), &sys.delta_group(-1)).is_identity());
    }

    #[test]
    fn fractions() {
        let sys = bundled::b3();
        let a = |n: &str| sys.atom_by_name(n).unwrap();
        let g = sys.g_normalize(0, &[GroupLetter::Atom(a("s")), GroupLetter::AtomInv(a("t"))]);
        assert_eq!(sys.fraction(&g, Side::Right), (w(&sys, "s"), w(&sys, "t")));
        let d = sys.delta_group(-1);
        assert_eq!(sys.fraction(&d, Side::Right), (Positive::identity(), w(&sys, "s t s")));
    }

    #[test]
    fn conjugating_atom_sets() {
        let sys = bundled::b3();
        let (s, t) = (sys.atom_by_name("s").unwrap(), sys.atom_by_name("t").unwrap());
        let xs = AtomSet::singleton(s);
        assert_eq!(sys.conjugate_atomset(&sys.delta_group(1), xs), Some(AtomSet::singleton(t)));
        assert_eq!(sys.conjugate_atomset(&GroupEl::identity(), xs), Some(xs));
        let gs = sys.to_group(&w(&sys, "s"));
        assert_eq!(sys.conjugate_atomset(&gs, AtomSet::singleton(t)), None);
    }
}
