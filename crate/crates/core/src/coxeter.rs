//! Finite Coxeter groups by coset enumeration.
//!
//! Elements are enumerated with a Todd-Coxeter (HLT) pass over the trivial
//! subgroup, then relabelled breadth-first so that element ids follow the
//! ShortLex order of their reduced words. No real-valued root arithmetic is
//! involved, so non-crystallographic types work the same way.

use std::collections::VecDeque;

use crate::error::{Error, Result};

const UNDEF: usize = usize::MAX;

/// A finite Coxeter group with full right/left Cayley tables over its
/// generators.
#[derive(Debug, Clone)]
pub struct CoxeterGroup {
    rank: usize,
    right: Vec<u32>,
    left: Vec<u32>,
    length: Vec<u32>,
    words: Vec<Vec<u8>>,
    inverse: Vec<u32>,
    longest: u32,
}

struct CosetTable {
    rank: usize,
    table: Vec<usize>,
    parent: Vec<usize>,
    limit: usize,
}

impl CosetTable {
    fn new(rank: usize, limit: usize) -> Self {
        CosetTable {
            rank,
            table: vec![UNDEF; rank],
            parent: vec![0],
            limit,
        }
    }

    fn count(&self) -> usize {
        self.parent.len()
    }

    fn get(&self, c: usize, x: usize) -> usize {
        self.table[c * self.rank + x]
    }

    fn set(&mut self, c: usize, x: usize, d: usize) {
        self.table[c * self.rank + x] = d;
    }

    fn alive(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn define(&mut self, c: usize, x: usize) -> Result<usize> {
        if self.count() >= self.limit {
            return Err(Error::GroupTooLarge { cap: self.limit });
        }
        let d = self.count();
        self.parent.push(d);
        self.table.extend(std::iter::repeat_n(UNDEF, self.rank));
        self.set(c, x, d);
        self.set(d, x, c);
        Ok(d)
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut k = c;
        while self.parent[k] != r {
            let next = self.parent[k];
            self.parent[k] = r;
            k = next;
        }
        r
    }

    fn merge(&mut self, a: usize, b: usize, queue: &mut VecDeque<usize>) {
        let (ra, rb) = (self.rep(a), self.rep(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
            queue.push_back(hi);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = VecDeque::new();
        self.merge(a, b, &mut queue);
        while let Some(g) = queue.pop_front() {
            for x in 0..self.rank {
                let d = self.get(g, x);
                if d == UNDEF {
                    continue;
                }
                // generators are involutions, so the back edge uses `x` again
                if self.get(d, x) == g {
                    self.set(d, x, UNDEF);
                }
                let mu = self.rep(g);
                let nu = self.rep(d);
                let mu_x = self.get(mu, x);
                if mu_x != UNDEF {
                    self.merge(nu, mu_x, &mut queue);
                } else {
                    let nu_x = self.get(nu, x);
                    if nu_x != UNDEF {
                        self.merge(mu, nu_x, &mut queue);
                    } else {
                        self.set(mu, x, nu);
                        self.set(nu, x, mu);
                    }
                }
            }
        }
    }

    fn scan_and_fill(&mut self, c: usize, rel: &[usize]) -> Result<()> {
        loop {
            let mut f = c;
            let mut i: isize = 0;
            let mut j: isize = rel.len() as isize - 1;
            let mut b = c;
            while i <= j && self.get(f, rel[i as usize]) != UNDEF {
                f = self.get(f, rel[i as usize]);
                i += 1;
            }
            if i > j {
                if f != c {
                    self.coincidence(f, c);
                }
                return Ok(());
            }
            while j >= i && self.get(b, rel[j as usize]) != UNDEF {
                b = self.get(b, rel[j as usize]);
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            } else if i == j {
                let x = rel[i as usize];
                self.set(f, x, b);
                self.set(b, x, f);
                return Ok(());
            }
            self.define(f, rel[i as usize])?;
        }
    }
}

impl CoxeterGroup {
    /// Enumerate the Coxeter group with the given matrix (entries `m[i][j]`,
    /// 1 on the diagonal, ≥ 2 off it). Fails once more than `cap` elements
    /// would be needed.
    pub fn enumerate(matrix: &[Vec<u32>], cap: usize) -> Result<Self> {
        let rank = matrix.len();
        let mut relators: Vec<Vec<usize>> = Vec::new();
        for i in 0..rank {
            for j in (i + 1)..rank {
                let m = matrix[i][j] as usize;
                let mut rel = Vec::with_capacity(2 * m);
                for _ in 0..m {
                    rel.push(i);
                    rel.push(j);
                }
                relators.push(rel);
            }
        }
        // HLT may transiently define many more cosets than the group order.
        let limit = cap.saturating_mul(16).max(4096);
        let mut ct = CosetTable::new(rank, limit);
        let mut c = 0;
        while c < ct.count() {
            if ct.alive(c) {
                for rel in &relators {
                    ct.scan_and_fill(c, rel)?;
                    if !ct.alive(c) {
                        break;
                    }
                }
                if ct.alive(c) {
                    for x in 0..rank {
                        if ct.get(c, x) == UNDEF {
                            ct.define(c, x)?;
                        }
                    }
                }
            }
            c += 1;
        }

        // Relabel live cosets breadth-first from the identity coset.
        let mut id_of = vec![UNDEF; ct.count()];
        let mut order = vec![0usize];
        let mut words: Vec<Vec<u8>> = vec![Vec::new()];
        let mut length = vec![0u32];
        id_of[0] = 0;
        let mut head = 0;
        while head < order.len() {
            let cur = order[head];
            for x in 0..rank {
                let d = ct.rep(ct.get(cur, x));
                if id_of[d] == UNDEF {
                    id_of[d] = order.len();
                    order.push(d);
                    let mut w = words[head].clone();
                    w.push(x as u8);
                    words.push(w);
                    length.push(length[head] + 1);
                    if order.len() > cap {
                        return Err(Error::GroupTooLarge { cap });
                    }
                }
            }
            head += 1;
        }
        let n = order.len();
        let mut right = vec![0u32; n * rank];
        for (id, &coset) in order.iter().enumerate() {
            for x in 0..rank {
                let d = ct.rep(ct.get(coset, x));
                right[id * rank + x] = id_of[d] as u32;
            }
        }
        let walk = |start: u32, word: &[u8]| -> u32 {
            word.iter()
                .fold(start, |w, &x| right[w as usize * rank + x as usize])
        };
        let mut left = vec![0u32; n * rank];
        let mut inverse = vec![0u32; n];
        for id in 0..n {
            for x in 0..rank {
                left[id * rank + x] = walk(right[x], &words[id]);
            }
            let rev: Vec<u8> = words[id].iter().rev().copied().collect();
            inverse[id] = walk(0, &rev);
        }
        // A finite Coxeter group has exactly one element without right ascents.
        let tops: Vec<usize> = (0..n)
            .filter(|&w| (0..rank).all(|x| length[right[w * rank + x] as usize] < length[w]))
            .collect();
        if tops.len() != 1 && rank > 0 {
            return Err(Error::NotSpherical(format!(
                "{} elements without ascents",
                tops.len()
            )));
        }
        let longest = if rank == 0 { 0 } else { tops[0] as u32 };
        Ok(CoxeterGroup {
            rank,
            right,
            left,
            length,
            words,
            inverse,
            longest,
        })
    }

    pub fn order(&self) -> usize {
        self.length.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn longest(&self) -> u32 {
        self.longest
    }

    pub fn length(&self, w: u32) -> u32 {
        self.length[w as usize]
    }

    /// ShortLex-minimal reduced word of `w`.
    pub fn word(&self, w: u32) -> &[u8] {
        &self.words[w as usize]
    }

    pub fn inverse(&self, w: u32) -> u32 {
        self.inverse[w as usize]
    }

    /// `w · s`
    pub fn right_mul(&self, w: u32, s: usize) -> u32 {
        self.right[w as usize * self.rank + s]
    }

    /// `s · w`
    pub fn left_mul(&self, s: usize, w: u32) -> u32 {
        self.left[w as usize * self.rank + s]
    }

    /// Group product `a · b`.
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.word(b)
            .iter()
            .fold(a, |w, &x| self.right_mul(w, x as usize))
    }

    /// `a⁻¹ · b`
    pub fn left_div(&self, a: u32, b: u32) -> u32 {
        // a⁻¹ = s_k ⋯ s_1 for a = s_1 ⋯ s_k, so apply s_1 first.
        self.word(a)
            .iter()
            .fold(b, |w, &x| self.left_mul(x as usize, w))
    }

    /// `b · a⁻¹`
    pub fn right_div(&self, a: u32, b: u32) -> u32 {
        self.word(a)
            .iter()
            .rev()
            .fold(b, |w, &x| self.right_mul(w, x as usize))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn type_a(n: usize) -> Vec<Vec<u32>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match (i as isize - j as isize).abs() {
                        0 => 1,
                        1 => 3,
                        _ => 2,
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn orders_of_small_groups() {
        assert_eq!(CoxeterGroup::enumerate(&[vec![1]], 100).unwrap().order(), 2);
        assert_eq!(CoxeterGroup::enumerate(&type_a(2), 100).unwrap().order(), 6);
        assert_eq!(CoxeterGroup::enumerate(&type_a(3), 100).unwrap().order(), 24);
        assert_eq!(CoxeterGroup::enumerate(&type_a(4), 1000).unwrap().order(), 120);
        // H3 and I2(5): non-crystallographic
        let h3 = vec![vec![1, 5, 2], vec![5, 1, 3], vec![2, 3, 1]];
        assert_eq!(CoxeterGroup::enumerate(&h3, 1000).unwrap().order(), 120);
        let i25 = vec![vec![1, 5], vec![5, 1]];
        assert_eq!(CoxeterGroup::enumerate(&i25, 100).unwrap().order(), 10);
    }

    #[test]
    fn longest_element_length() {
        let g = CoxeterGroup::enumerate(&type_a(3), 100).unwrap();
        assert_eq!(g.length(g.longest()), 6);
        let w0 = g.longest();
        assert_eq!(g.inverse(w0), w0);
    }

    #[test]
    fn shortlex_words_are_reduced_and_ordered() {
        let g = CoxeterGroup::enumerate(&type_a(3), 100).unwrap();
        for w in 0..g.order() as u32 {
            assert_eq!(g.word(w).len() as u32, g.length(w));
            let rebuilt = g.word(w).iter().fold(0, |x, &s| g.right_mul(x, s as usize));
            assert_eq!(rebuilt, w);
        }
        for w in 1..g.order() as u32 {
            let (a, b) = (g.word(w - 1), g.word(w));
            assert!((a.len(), a) < (b.len(), b));
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            CoxeterGroup::enumerate(&type_a(4), 50),
            Err(Error::GroupTooLarge { .. })
        ));
    }

    #[test]
    fn division_inverts_multiplication() {
        let g = CoxeterGroup::enumerate(&type_a(3), 100).unwrap();
        for a in 0..24 {
            for b in 0..24 {
                let ab = g.mul(a, b);
                assert_eq!(g.left_div(a, ab), b);
                assert_eq!(g.right_div(b, ab), a);
            }
        }
    }
}
