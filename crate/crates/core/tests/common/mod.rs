//! Brute-force oracle: equality of positive words by closure under the
//! defining relations, divisibility by concatenation. Shares nothing with
//! the library beyond atom names.

#![allow(dead_code)]

use std::collections::HashMap;

use garside_core::spec::{MatrixEntry, SystemSpec};
use garside_core::{bundled, AtomId, GarsideSystem, Positive};

pub type W = Vec<usize>;

/// Defining relations of a bundled system, as pairs of atom-index words.
pub fn relations(name: &str) -> (usize, Vec<(W, W)>) {
    let spec: SystemSpec = serde_json::from_str(bundled::source(name).unwrap()).unwrap();
    match spec {
        SystemSpec::Coxeter(c) => {
            let n = c.atoms.len();
            let mut rels = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    let m = match &c.coxeter_matrix[i][j] {
                        MatrixEntry::Finite(m) => *m as usize,
                        MatrixEntry::Symbol(_) => panic!("infinite entry"),
                    };
                    let alt = |a: usize, b: usize| (0..m).map(|k| if k % 2 == 0 { a } else { b }).collect::<W>();
                    rels.push((alt(i, j), alt(j, i)));
                }
            }
            (n, rels)
        }
        SystemSpec::Table(t) => {
            let idx = |s: &String| t.atoms.iter().position(|a| a == s).unwrap();
            let rels = t
                .relations
                .iter()
                .map(|(l, r)| (l.iter().map(idx).collect(), r.iter().map(idx).collect()))
                .collect();
            (t.atoms.len(), rels)
        }
    }
}

/// Smallest positive weights (each in 1..=4) making every relation
/// weight-homogeneous.
pub fn homogeneous_weights(n: usize, rels: &[(W, W)]) -> Vec<usize> {
    let total = 4usize.pow(n as u32);
    let mut best: Option<Vec<usize>> = None;
    for code in 0..total {
        let w: Vec<usize> = (0..n).map(|i| (code / 4usize.pow(i as u32)) % 4 + 1).collect();
        let weight = |x: &W| x.iter().map(|&a| w[a]).sum::<usize>();
        if rels.iter().all(|(l, r)| weight(l) == weight(r)) {
            let better = match &best {
                None => true,
                Some(b) => w.iter().sum::<usize>() < b.iter().sum::<usize>(),
            };
            if better {
                best = Some(w);
            }
        }
    }
    best.expect("relations admit positive homogeneous weights")
}

pub struct Oracle {
    pub n: usize,
    pub weights: Vec<usize>,
    pub words: Vec<W>,
    pub index: HashMap<W, usize>,
    /// Class id of each word.
    pub class: Vec<usize>,
    /// Members of each class, by class id.
    pub members: Vec<Vec<usize>>,
    pub class_weight: Vec<usize>,
    /// Minimal word length of each class.
    pub class_len: Vec<usize>,
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

impl Oracle {
    /// All words of weight at most `max_weight`, grouped into classes.
    /// Classes are complete because rewriting preserves weight.
    pub fn build(name: &str, max_weight: usize) -> Self {
        let (n, rels) = relations(name);
        let weights = homogeneous_weights(n, &rels);
        let mut words: Vec<W> = vec![Vec::new()];
        let mut start = 0;
        loop {
            let end = words.len();
            if start == end {
                break;
            }
            for i in start..end {
                let wt: usize = words[i].iter().map(|&a| weights[a]).sum();
                for a in 0..n {
                    if wt + weights[a] <= max_weight {
                        let mut w = words[i].clone();
                        w.push(a);
                        words.push(w);
                    }
                }
            }
            start = end;
        }
        let index: HashMap<W, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let mut parent: Vec<usize> = (0..words.len()).collect();
        for (i, w) in words.iter().enumerate() {
            for (l, r) in &rels {
                for (from, to) in [(l, r), (r, l)] {
                    if from.len() > w.len() {
                        continue;
                    }
                    for pos in 0..=w.len() - from.len() {
                        if w[pos..pos + from.len()] == from[..] {
                            let mut v = w[..pos].to_vec();
                            v.extend_from_slice(to);
                            v.extend_from_slice(&w[pos + from.len()..]);
                            let j = index[&v];
                            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                            if a != b {
                                parent[a.max(b)] = a.min(b);
                            }
                        }
                    }
                }
            }
        }
        let mut root_to_class = HashMap::new();
        let mut class = vec![0; words.len()];
        let mut members: Vec<Vec<usize>> = Vec::new();
        for i in 0..words.len() {
            let r = find(&mut parent, i);
            let c = *root_to_class.entry(r).or_insert_with(|| {
                members.push(Vec::new());
                members.len() - 1
            });
            class[i] = c;
            members[c].push(i);
        }
        let class_weight = members.iter().map(|m| words[m[0]].iter().map(|&a| weights[a]).sum()).collect();
        let class_len = members.iter().map(|m| m.iter().map(|&i| words[i].len()).min().unwrap()).collect();
        Oracle { n, weights, words, index, class, members, class_weight, class_len }
    }

    pub fn num_classes(&self) -> usize {
        self.members.len()
    }

    pub fn class_of(&self, w: &[usize]) -> Option<usize> {
        self.index.get(w).map(|&i| self.class[i])
    }

    /// A shortest word of a class.
    pub fn rep(&self, c: usize) -> &W {
        self.members[c].iter().map(|&i| &self.words[i]).min_by_key(|w| w.len()).unwrap()
    }

    /// `divs[c]` = classes d such that some word of c starts (`left`) or
    /// ends (`!left`) with a word of d.
    pub fn divisors(&self, left: bool) -> Vec<Vec<bool>> {
        let k = self.num_classes();
        let mut divs = vec![vec![false; k]; k];
        for (i, w) in self.words.iter().enumerate() {
            let c = self.class[i];
            for cut in 0..=w.len() {
                let part = if left { &w[..cut] } else { &w[cut..] };
                divs[c][self.class[self.index[part]]] = true;
            }
        }
        divs
    }
}

pub fn to_atoms(w: &[usize]) -> Vec<AtomId> {
    w.iter().map(|&a| AtomId(a)).collect()
}

pub fn to_indices(w: &[AtomId]) -> W {
    w.iter().map(|a| a.0).collect()
}

pub fn positive(sys: &GarsideSystem, w: &[usize]) -> Positive {
    sys.normalize(&to_atoms(w))
}

/// Every word over `n` letters of length at most `len`.
pub fn all_words(n: usize, len: usize) -> Vec<W> {
    let mut out = vec![Vec::new()];
    let mut level = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &level {
            for a in 0..n {
                let mut v: W = w.clone();
                v.push(a);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    out
}
