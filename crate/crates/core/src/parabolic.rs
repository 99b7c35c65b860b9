//! Standard parabolic submonoids `A⁺_X`.

use crate::atoms::{AtomId, AtomSet};
use crate::elements::Positive;
use crate::error::{Error, Result};
use crate::system::{GarsideSystem, Side, Simple};

impl GarsideSystem {
    pub fn check_parabolic(&self, x: AtomSet) -> Result<()> {
        if self.is_parabolic(x) {
            Ok(())
        } else {
            Err(Error::NotAParabolic(self.render_set(x)))
        }
    }

    /// `Δ_X` as a simple: the join of the atoms of `X`.
    pub fn delta_simple(&self, x: AtomSet) -> Result<Simple> {
        self.check_parabolic(x)?;
        Ok(x.iter().fold(Simple::IDENTITY, |acc, a| {
            self.simple_join(acc, self.atom_simple(a), Side::Left)
        }))
    }

    /// The Garside element of `A⁺_X`.
    pub fn delta_of(&self, x: AtomSet) -> Result<Positive> {
        Ok(self.positive_from_simple(self.delta_simple(x)?))
    }

    /// Membership in `A⁺_X`: every greedy letter divides `Δ_X`.
    pub fn contains(&self, x: AtomSet, p: &Positive) -> Result<bool> {
        let dx = self.delta_simple(x)?;
        Ok(p.letters()
            .iter()
            .all(|&s| self.simple_divides(s, dx, Side::Left)))
    }

    /// The largest divisor of `p` on the given side lying in `A⁺_X`.
    pub fn max_divisor_in(&self, x: AtomSet, p: &Positive, side: Side) -> Positive {
        let mut rest = p.clone();
        let mut taken: Vec<Positive> = Vec::new();
        'strip: loop {
            for a in x.iter() {
                let atom = self.atom_positive(a);
                if let Ok(q) = self.quotient(&atom, &rest, side) {
                    rest = q;
                    taken.push(atom);
                    continue 'strip;
                }
            }
            break;
        }
        if side == Side::Right {
            taken.reverse();
        }
        self.product(&taken)
    }

    /// Indecomposable components of `X`, sorted.
    pub fn components(&self, x: AtomSet) -> Result<Vec<AtomSet>> {
        self.check_parabolic(x)?;
        if let Some(matrix) = self.coxeter_matrix() {
            let mut comps: Vec<AtomSet> = Vec::new();
            let mut left = x;
            while let Some(start) = left.iter().next() {
                let mut comp = AtomSet::singleton(start);
                let mut frontier = vec![start];
                while let Some(a) = frontier.pop() {
                    for b in left.iter() {
                        if !comp.contains(b) && matrix[a.0][b.0] >= 3 {
                            comp.insert(b);
                            frontier.push(b);
                        }
                    }
                }
                left = AtomSet::from_bits(left.bits() & !comp.bits());
                comps.push(comp);
            }
            comps.sort();
            return Ok(comps);
        }
        if let Some(c) = self.declared_components(x) {
            return Ok(c.clone());
        }
        match x.len() {
            0 => Ok(Vec::new()),
            1 => Ok(vec![x]),
            _ => Err(Error::ComponentsUndeclared(self.render_set(x))),
        }
    }

    /// The component of `X` containing `s`.
    pub fn component_of(&self, x: AtomSet, s: AtomId) -> Result<AtomSet> {
        self.components(x)?
            .into_iter()
            .find(|c| c.contains(s))
            .ok_or_else(|| Error::InvariantViolation(format!("{} is not in {}", self.atom_name(s), self.render_set(x))))
    }

    /// The `∇` with `Δ_X · ∇ = Δ`.
    pub fn global_nabla(&self, x: AtomSet) -> Result<Positive> {
        let dx = self.delta_simple(x)?;
        let q = self
            .left_quotient(dx, self.delta())
            .ok_or_else(|| Error::InvariantViolation("Δ_X does not divide Δ".into()))?;
        Ok(self.positive_from_simple(q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundled;

    fn set(sys: &GarsideSystem, names: &[&str]) -> AtomSet {
        names.iter().map(|n| sys.atom_by_name(n).unwrap()).collect()
    }

    fn w(sys: &GarsideSystem, s: &str) -> Positive {
        let word: Vec<AtomId> = s.split_whitespace().map(|n| sys.atom_by_name(n).unwrap()).collect();
        sys.normalize(&word)
    }

    #[test]
    fn deltas_in_b3() {
        let sys = bundled::b3();
        assert_eq!(sys.delta_of(set(&sys, &["s"])).unwrap(), w(&sys, "s"));
        assert_eq!(sys.delta_of(set(&sys, &["s", "t"])).unwrap(), w(&sys, "s t s"));
        assert!(sys.delta_of(AtomSet::EMPTY).unwrap().is_identity());
    }

    #[test]
    fn membership_and_max_divisors() {
        let sys = bundled::b3();
        let xs = set(&sys, &["s"]);
        assert!(sys.contains(xs, &w(&sys, "s s")).unwrap());
        assert!(!sys.contains(xs, &w(&sys, "s t")).unwrap());
        assert!(sys.contains(set(&sys, &["s", "t"]), &w(&sys, "s t s")).unwrap());
        assert_eq!(sys.max_divisor_in(xs, &w(&sys, "s t s"), Side::Left), w(&sys, "s"));
        assert!(sys.max_divisor_in(xs, &w(&sys, "t s"), Side::Left).is_identity());
        assert_eq!(sys.max_divisor_in(xs, &w(&sys, "s s"), Side::Left), w(&sys, "s s"));
    }

    #[test]
    fn components_in_b4() {
        let sys = bundled::b4();
        let (s1, s2, s3) = (set(&sys, &["s1"]), set(&sys, &["s2"]), set(&sys, &["s3"]));
        assert_eq!(sys.components(s1.union(s3)).unwrap(), vec![s1, s3]);
        assert_eq!(sys.components(s1.union(s2)).unwrap(), vec![s1.union(s2)]);
        assert!(sys.components(AtomSet::EMPTY).unwrap().is_empty());
    }

    #[test]
    fn nablas() {
        let sys = bundled::b3();
        assert_eq!(sys.global_nabla(set(&sys, &["s"])).unwrap(), w(&sys, "t s"));
        assert!(sys.global_nabla(sys.all_atoms()).unwrap().is_identity());
        assert_eq!(sys.global_nabla(AtomSet::EMPTY).unwrap(), sys.delta_positive());
    }

    #[test]
    fn table_systems_require_declared_parabolics() {
        let sys = bundled::square_central();
        assert!(matches!(sys.delta_of(set(&sys, &["a"])), Err(Error::NotAParabolic(_))));
        assert_eq!(sys.delta_of(set(&sys, &["a", "b"])).unwrap(), w(&sys, "a a"));
    }
}
