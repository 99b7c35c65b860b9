//! Bounded congruence closure on the path category of the ribbon quiver,
//! used to cross-check a presentation against evaluation in the monoid.

use std::collections::{BTreeMap, HashMap};

use crate::atoms::AtomSet;
use crate::elements::Positive;
use crate::ribbon::{Presentation, Quiver, Relation};
use crate::system::GarsideSystem;

/// A path of generator ids starting at `source`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    pub source: AtomSet,
    pub edges: Vec<usize>,
}

/// All paths of length at most `max_len` from `from`, ordered by length and
/// then lexicographically by generator id.
pub fn enumerate_paths(q: &Quiver, from: AtomSet, max_len: usize) -> Vec<Path> {
    let mut out = vec![Path { source: from, edges: Vec::new() }];
    let mut level = vec![(from, Vec::new())];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (at, edges) in &level {
            for g in q.out_edges(*at) {
                let mut e: Vec<usize> = edges.clone();
                e.push(g.id);
                next.push((g.target, e));
            }
        }
        out.extend(next.iter().map(|(_, e)| Path { source: from, edges: e.clone() }));
        level = next;
    }
    out
}

/// Union-find over every path of length at most `max_len`.
#[derive(Debug, Clone)]
pub struct CongruenceClosure {
    pub max_len: usize,
    pub paths: Vec<Path>,
    index: HashMap<Path, usize>,
    parent: Vec<usize>,
}

impl CongruenceClosure {
    fn find(&self, mut i: usize) -> usize {
        while self.parent[i] != i {
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    pub fn class_of(&self, p: &Path) -> Option<usize> {
        self.index.get(p).map(|&i| self.find(i))
    }

    pub fn equivalent(&self, a: &Path, b: &Path) -> bool {
        matches!((self.class_of(a), self.class_of(b)), (Some(x), Some(y)) if x == y)
    }

    /// Classes with their members, keyed by representative.
    pub fn classes(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut out: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..self.paths.len() {
            out.entry(self.find(i)).or_default().push(i);
        }
        out
    }

    pub fn num_classes(&self) -> usize {
        (0..self.paths.len()).filter(|&i| self.find(i) == i).count()
    }
}

/// Apply every relation in both directions at every position of every path
/// of length at most `max_len`.
pub fn close(q: &Quiver, relations: &[Relation], max_len: usize) -> CongruenceClosure {
    let paths: Vec<Path> = q
        .objects
        .iter()
        .flat_map(|&x| enumerate_paths(q, x, max_len))
        .collect();
    let index: HashMap<Path, usize> = paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let mut cc = CongruenceClosure {
        max_len,
        parent: (0..paths.len()).collect(),
        paths,
        index,
    };
    // One sweep suffices: each application is recorded as a union and the
    // union-find takes the transitive closure.
    for i in 0..cc.paths.len() {
        let p = cc.paths[i].clone();
        for r in relations {
            for (from, to) in [(&r.left, &r.right), (&r.right, &r.left)] {
                if from.is_empty() || from.len() > p.edges.len() {
                    continue;
                }
                for pos in 0..=(p.edges.len() - from.len()) {
                    if p.edges[pos..pos + from.len()] != from[..] {
                        continue;
                    }
                    let mut edges = Vec::with_capacity(p.edges.len() - from.len() + to.len());
                    edges.extend_from_slice(&p.edges[..pos]);
                    edges.extend_from_slice(to);
                    edges.extend_from_slice(&p.edges[pos + from.len()..]);
                    if edges.len() > max_len {
                        continue;
                    }
                    let other = Path { source: p.source, edges };
                    if let Some(&j) = cc.index.get(&other) {
                        cc.union(i, j);
                    }
                }
            }
        }
    }
    cc
}

/// A pair of paths witnessing a failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub left: Path,
    pub right: Path,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub max_len: usize,
    pub paths: usize,
    pub classes: usize,
    /// Equivalent paths with different values or endpoints.
    pub soundness: Vec<Counterexample>,
    /// Paths with the same endpoints and value that are not equivalent.
    pub completeness: Vec<Counterexample>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.soundness.is_empty() && self.completeness.is_empty()
    }
}

/// Soundness and bounded completeness of `relations` on paths of length at
/// most `max_len`.
///
/// Relations that change path length may connect two short paths only
/// through longer ones, so the closure runs over paths up to `max_len` plus
/// the largest length change of a relation; only paths up to `max_len` are
/// compared.
pub fn verify_relations(sys: &GarsideSystem, q: &Quiver, relations: &[Relation], max_len: usize) -> VerifyReport {
    let slack = relations
        .iter()
        .map(|r| r.left.len().abs_diff(r.right.len()))
        .max()
        .unwrap_or(0);
    let cc = close(q, relations, max_len + slack);
    let short: Vec<usize> = (0..cc.paths.len()).filter(|&i| cc.paths[i].edges.len() <= max_len).collect();
    let values: HashMap<usize, (AtomSet, Positive)> = short
        .iter()
        .map(|&i| {
            let p = &cc.paths[i];
            let target = q.path_target(p.source, &p.edges).expect("enumerated paths compose");
            (i, (target, q.evaluate(sys, &p.edges)))
        })
        .collect();
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &i in &short {
        classes.entry(cc.find(i)).or_default().push(i);
    }
    let mut soundness = Vec::new();
    for members in classes.values() {
        let first = members[0];
        for &m in &members[1..] {
            if values[&m] != values[&first] || cc.paths[m].source != cc.paths[first].source {
                soundness.push(Counterexample { left: cc.paths[first].clone(), right: cc.paths[m].clone() });
            }
        }
    }
    let mut by_value: HashMap<(AtomSet, AtomSet, &Positive), usize> = HashMap::new();
    let mut completeness = Vec::new();
    for &i in &short {
        let p = &cc.paths[i];
        let key = (p.source, values[&i].0, &values[&i].1);
        match by_value.get(&key) {
            Some(&j) if cc.find(i) != cc.find(j) => {
                completeness.push(Counterexample { left: cc.paths[j].clone(), right: p.clone() });
            }
            Some(_) => {}
            None => {
                by_value.insert(key, i);
            }
        }
    }
    VerifyReport {
        max_len,
        paths: short.len(),
        classes: classes.len(),
        soundness,
        completeness,
    }
}

/// [`verify_relations`] for a whole presentation.
pub fn verify_presentation(sys: &GarsideSystem, p: &Presentation, max_len: usize) -> VerifyReport {
    verify_relations(sys, &p.quiver, &p.relations, max_len)
}
