//! Bounded enumeration of positive elements and of divisors.

use std::collections::{HashSet, VecDeque};

use crate::elements::Positive;
use crate::system::{GarsideSystem, Side};

impl GarsideSystem {
    /// All positive elements that are products of at most `max_len` atoms,
    /// grouped by the length of their shortest spelling. Level 0 is the
    /// identity; each level is sorted.
    pub fn positives_by_length(&self, max_len: usize) -> Vec<Vec<Positive>> {
        let mut seen: HashSet<Positive> = HashSet::new();
        let mut levels = vec![vec![Positive::identity()]];
        seen.insert(Positive::identity());
        for _ in 0..max_len {
            let mut next = Vec::new();
            for p in levels.last().unwrap() {
                for a in self.atoms() {
                    let q = self.multiply(p, &self.atom_positive(a));
                    if seen.insert(q.clone()) {
                        next.push(q);
                    }
                }
            }
            next.sort();
            levels.push(next);
        }
        levels
    }

    /// Flattened [`positives_by_length`](Self::positives_by_length).
    pub fn positives_up_to(&self, max_len: usize) -> Vec<Positive> {
        self.positives_by_length(max_len).into_iter().flatten().collect()
    }

    /// Every divisor of `p` on the given side, including `1` and `p`, sorted.
    pub fn divisors(&self, p: &Positive, side: Side) -> Vec<Positive> {
        let mut seen: HashSet<Positive> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(Positive::identity());
        queue.push_back(Positive::identity());
        while let Some(d) = queue.pop_front() {
            for a in self.atoms() {
                let atom = self.atom_positive(a);
                let next = match side {
                    Side::Left => self.multiply(&d, &atom),
                    Side::Right => self.multiply(&atom, &d),
                };
                if !seen.contains(&next) && self.divides(&next, p, side) {
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
        let mut out: Vec<Positive> = seen.into_iter().collect();
        out.sort();
        out
    }
}

#[cfg(test)]
mod tests {
    use crate::bundled;
    use crate::system::Side;

    #[test]
    fn b3_level_sizes() {
        let sys = bundled::b3();
        let levels = sys.positives_by_length(3);
        let sizes: Vec<usize> = levels.iter().map(Vec::len).collect();
        // words of length 3 over {s,t}: 8, with sts = tst identified
        assert_eq!(sizes, vec![1, 2, 4, 7]);
    }

    #[test]
    fn divisors_of_delta_are_the_simples() {
        let sys = bundled::b4();
        let d = sys.delta_positive();
        assert_eq!(sys.divisors(&d, Side::Left).len(), 24);
        assert_eq!(sys.divisors(&d, Side::Right).len(), 24);
    }
}
