//! The ribbon quiver, a groupoid presentation of the ribbon category, shaker
//! subgroups and the decomposition of conjugators `g = a·r`.

use serde::{Deserialize, Serialize};

use crate::atoms::{AtomId, AtomSet};
use crate::elements::{GroupEl, Positive};
use crate::error::{Error, Result};
use crate::nu::{NuKind, NuVariant};
use crate::system::{GarsideSystem, Side};

/// An edge of the ribbon quiver: a ribbon atom with every atom label that
/// produces it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub id: usize,
    pub source: AtomSet,
    pub target: AtomSet,
    pub labels: Vec<AtomId>,
    pub element: Positive,
    pub kind: NuKind,
}

/// Parabolic objects and ribbon atoms between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    pub objects: Vec<AtomSet>,
    pub generators: Vec<Generator>,
}

/// Which family of the presentation a relation belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RelationKind {
    /// `τ(X,s)τ(X,t) = τ(X,t)τ(X,s)`
    TauCommute = 1,
    /// `τ(X,s)ν(X,t) = ν(X,t)τ(Y,s')`
    TauNu = 2,
    /// two paths spelling `ν(X,s) ∨ ν(X,t)`
    Lcm = 3,
}

impl RelationKind {
    pub fn number(self) -> u8 {
        self as u8
    }

    pub fn from_number(n: u8) -> Option<Self> {
        match n {
            1 => Some(RelationKind::TauCommute),
            2 => Some(RelationKind::TauNu),
            3 => Some(RelationKind::Lcm),
            _ => None,
        }
    }
}

/// `left = right` as paths of generator ids from `source` to `target`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Relation {
    pub kind: RelationKind,
    pub source: AtomSet,
    pub target: AtomSet,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
}

/// A groupoid morphism `source → target` given by a conjugating element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RibbonMorphism {
    pub source: AtomSet,
    pub element: GroupEl,
    pub target: AtomSet,
}

/// All paths of ν-atoms spelling `ν(X,s) ∨_L ν(X,t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinPaths {
    pub element: Positive,
    pub paths: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shakers {
    pub parabolic: AtomSet,
    /// Generator ids of the loops at the parabolic.
    pub generators: Vec<usize>,
    pub sh: AtomSet,
    pub sh_tilde: AtomSet,
    /// Rows and columns follow `generators`. `None` entries mean no braid
    /// relation of alternating shape was found.
    pub matrix: Option<Vec<Vec<Option<u32>>>>,
}

impl Shakers {
    pub fn hypotheses_hold(&self) -> bool {
        self.matrix.is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShakerReport {
    pub shakers: Shakers,
    pub delta_sh: Option<Positive>,
    pub checks: Vec<Check>,
}

impl ShakerReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// `g = a · r` with `a ∈ A_X` and `r = numerator · denominator⁻¹` a ν-ribbon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjDecomposition {
    pub a: GroupEl,
    pub ribbon: RibbonMorphism,
    pub numerator: Positive,
    pub denominator: Positive,
}

impl Quiver {
    pub fn generator(&self, id: usize) -> &Generator {
        &self.generators[id]
    }

    pub fn out_edges(&self, x: AtomSet) -> impl Iterator<Item = &Generator> {
        self.generators.iter().filter(move |g| g.source == x)
    }

    pub fn loops(&self, x: AtomSet) -> impl Iterator<Item = &Generator> {
        self.out_edges(x).filter(move |g| g.target == x)
    }

    /// Endpoint of a path, if the generators compose.
    pub fn path_target(&self, source: AtomSet, path: &[usize]) -> Option<AtomSet> {
        path.iter().try_fold(source, |at, &id| {
            let g = self.generators.get(id)?;
            (g.source == at).then_some(g.target)
        })
    }

    pub fn evaluate(&self, sys: &GarsideSystem, path: &[usize]) -> Positive {
        let factors: Vec<Positive> = path.iter().map(|&id| self.generators[id].element.clone()).collect();
        sys.product(&factors)
    }

    /// The generator for label `s` at `x`.
    pub fn find(&self, x: AtomSet, s: AtomId) -> Option<&Generator> {
        self.out_edges(x).find(|g| g.labels.contains(&s))
    }
}

impl GarsideSystem {
    /// Target parabolic if `p` conjugates `X` onto a parabolic atom set.
    pub fn is_positive_ribbon(&self, p: &Positive, x: AtomSet) -> Option<AtomSet> {
        self.ribbon_target(p, x)
    }

    /// Objects are the parabolics; edges the deduplicated plain ν-atoms.
    pub fn atom_quiver(&self) -> Result<Quiver> {
        let objects = self.parabolics();
        let mut generators: Vec<Generator> = Vec::new();
        for &x in &objects {
            let start = generators.len();
            for s in self.atoms() {
                let n = self.nu(x, s, NuVariant::Plain)?;
                if let Some(g) = generators[start..].iter_mut().find(|g| g.element == n.element) {
                    g.labels.push(s);
                    continue;
                }
                generators.push(Generator {
                    id: generators.len(),
                    source: n.source,
                    target: n.target,
                    labels: vec![s],
                    element: n.element,
                    kind: n.kind,
                });
            }
        }
        Ok(Quiver { objects, generators })
    }

    /// Every path from `from` whose generators multiply to `residual`.
    fn spelling_paths(&self, q: &Quiver, from: AtomSet, residual: &Positive, nu_only: bool) -> Vec<Vec<usize>> {
        if residual.is_identity() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for g in q.out_edges(from) {
            if (nu_only && g.kind == NuKind::Tau) || g.element.is_identity() {
                continue;
            }
            if let Ok(rest) = self.quotient(&g.element, residual, Side::Left) {
                for mut tail in self.spelling_paths(q, g.target, &rest, nu_only) {
                    tail.insert(0, g.id);
                    out.push(tail);
                }
            }
        }
        out
    }

    /// Whether `p` is a product of ν-type atoms starting at `X`.
    pub fn is_nu_path(&self, q: &Quiver, x: AtomSet, p: &Positive) -> bool {
        !self.spelling_paths(q, x, p, true).is_empty()
    }

    fn nu_pair(&self, q: &Quiver, x: AtomSet, s: AtomId, t: AtomId) -> Result<(usize, usize)> {
        let find = |a: AtomId| {
            q.find(x, a).ok_or_else(|| Error::Precondition(format!("no generator for {} at {}", self.atom_name(a), self.render_set(x))))
        };
        let (gs, gt) = (find(s)?, find(t)?);
        if gs.kind != NuKind::Nu || gt.kind != NuKind::Nu {
            return Err(Error::Precondition(format!(
                "ν({}, {}) and ν({}, {}) must both be of ν-type",
                self.render_set(x),
                self.atom_name(s),
                self.render_set(x),
                self.atom_name(t)
            )));
        }
        if gs.id == gt.id {
            return Err(Error::Precondition(format!(
                "{} and {} give the same ribbon atom at {}",
                self.atom_name(s),
                self.atom_name(t),
                self.render_set(x)
            )));
        }
        Ok((gs.id, gt.id))
    }

    /// All ν-atom paths from `X` spelling `ν(X,s) ∨_L ν(X,t)`, sorted.
    pub fn ribbon_join_paths(&self, q: &Quiver, x: AtomSet, s: AtomId, t: AtomId) -> Result<JoinPaths> {
        let (a, b) = self.nu_pair(q, x, s, t)?;
        let element = self.join(&q.generator(a).element, &q.generator(b).element, Side::Left);
        let mut paths = self.spelling_paths(q, x, &element, true);
        paths.sort();
        Ok(JoinPaths { element, paths })
    }

    /// Number of paths over all quiver edges from `X` spelling
    /// `ν(X,s) ∨_L ν(X,t)`.
    pub fn count_representing_paths(&self, q: &Quiver, x: AtomSet, s: AtomId, t: AtomId) -> Result<usize> {
        let (a, b) = self.nu_pair(q, x, s, t)?;
        let element = self.join(&q.generator(a).element, &q.generator(b).element, Side::Left);
        let target = self.ribbon_target(&element, x);
        Ok(self
            .spelling_paths(q, x, &element, false)
            .iter()
            .filter(|p| q.path_target(x, p) == target)
            .count())
    }

    /// Generators and the three families of relations, each checked by
    /// evaluation in the monoid.
    pub fn presentation(&self) -> Result<Presentation> {
        let quiver = self.atom_quiver()?;
        let mut relations = Vec::new();
        for &x in &quiver.objects {
            let taus: Vec<&Generator> = quiver.out_edges(x).filter(|g| g.kind == NuKind::Tau).collect();
            let nus: Vec<&Generator> = quiver.out_edges(x).filter(|g| g.kind == NuKind::Nu).collect();
            for (i, u) in taus.iter().enumerate() {
                for v in &taus[i + 1..] {
                    relations.push(Relation {
                        kind: RelationKind::TauCommute,
                        source: x,
                        target: x,
                        left: vec![u.id, v.id],
                        right: vec![v.id, u.id],
                    });
                }
            }
            for u in &taus {
                for e in &nus {
                    let ue = self.multiply(&u.element, &e.element);
                    let c = self.quotient(&e.element, &ue, Side::Left)?;
                    let partner = quiver
                        .loops(e.target)
                        .find(|g| g.kind == NuKind::Tau && g.element == c)
                        .ok_or_else(|| {
                            Error::InvariantViolation(format!(
                                "no τ at {} equal to {}",
                                self.render_set(e.target),
                                self.render_positive(&c)
                            ))
                        })?;
                    relations.push(Relation {
                        kind: RelationKind::TauNu,
                        source: x,
                        target: e.target,
                        left: vec![u.id, e.id],
                        right: vec![e.id, partner.id],
                    });
                }
            }
            for (i, e1) in nus.iter().enumerate() {
                for e2 in &nus[i + 1..] {
                    let jp = self.ribbon_join_paths(&quiver, x, e1.labels[0], e2.labels[0])?;
                    let target = quiver.path_target(x, &jp.paths[0]).expect("paths compose");
                    let first = |id: usize| jp.paths.iter().filter(move |p| p[0] == id);
                    let canon = |id: usize| {
                        first(id).next().cloned().ok_or_else(|| {
                            Error::InvariantViolation(format!("no lcm path starts with generator {id}"))
                        })
                    };
                    let (l, r) = (canon(e1.id)?, canon(e2.id)?);
                    relations.push(Relation { kind: RelationKind::Lcm, source: x, target, left: l.clone(), right: r.clone() });
                    for p in &jp.paths {
                        let c = if p[0] == e1.id { &l } else if p[0] == e2.id { &r } else { &l };
                        if p != c {
                            relations.push(Relation {
                                kind: RelationKind::Lcm,
                                source: x,
                                target,
                                left: c.clone(),
                                right: p.clone(),
                            });
                        }
                    }
                }
            }
        }
        relations.sort();
        relations.dedup();
        let p = Presentation { quiver, relations };
        self.check_presentation(&p)?;
        Ok(p)
    }

    /// Both sides of every relation compose, share endpoints and evaluate
    /// equal.
    pub fn check_presentation(&self, p: &Presentation) -> Result<()> {
        let q = &p.quiver;
        for r in &p.relations {
            let lt = q.path_target(r.source, &r.left);
            let rt = q.path_target(r.source, &r.right);
            if lt != Some(r.target) || rt != Some(r.target) {
                return Err(Error::InvariantViolation(format!("relation {:?} has mismatched endpoints", r)));
            }
            if q.evaluate(self, &r.left) != q.evaluate(self, &r.right) {
                return Err(Error::InvariantViolation(format!("relation {:?} does not hold", r)));
            }
        }
        Ok(())
    }

    /// Decompose a positive ribbon out of `X` as `g₁·g₂` with `g₁` in
    /// `QZ(A⁺_X)` and `g₂` a path of ν-type atoms.
    pub fn factor_qz_nu(&self, q: &Quiver, p: &Positive, x: AtomSet) -> Result<(Positive, Positive)> {
        if self.ribbon_target(p, x).is_none() {
            return Err(Error::NotARibbon {
                element: self.render_positive(p),
                parabolic: self.render_set(x),
            });
        }
        let g1 = self.max_divisor_in(x, p, Side::Left);
        if !self.is_quasi_central(&g1, x) {
            return Err(Error::InvariantViolation(format!(
                "{} is not quasi-central in the parabolic {}",
                self.render_positive(&g1),
                self.render_set(x)
            )));
        }
        let g2 = self.quotient(&g1, p, Side::Left)?;
        if !self.is_nu_path(q, x, &g2) {
            return Err(Error::InvariantViolation(format!(
                "{} is not a product of ν-atoms from {}",
                self.render_positive(&g2),
                self.render_set(x)
            )));
        }
        Ok((g1, g2))
    }

    /// Number of ways to write `p` as (element of `QZ(A⁺_X)`)·(ν-path from
    /// `X`), by exhaustive search over divisors.
    pub fn count_qz_nu_splits(&self, q: &Quiver, p: &Positive, x: AtomSet) -> usize {
        let inside = self.max_divisor_in(x, p, Side::Left);
        self.divisors(&inside, Side::Left)
            .iter()
            .filter(|d| self.is_quasi_central(d, x))
            .filter(|d| {
                let rest = self.quotient(d, p, Side::Left).expect("divisor");
                self.is_nu_path(q, x, &rest)
            })
            .count()
    }

    /// Smallest `M` with `sts⋯ = tst⋯` (`M` letters each), if one exists
    /// below `2·|Δ|`.
    pub fn braid_exponent(&self, s: AtomId, t: AtomId) -> Option<u32> {
        if s == t {
            return Some(1);
        }
        let bound = 2 * self.atom_len(&self.delta_positive()) + 2;
        (1..=bound).find_map(|m| {
            let alt = |a: AtomId, b: AtomId| -> Vec<AtomId> { (0..m).map(|i| if i % 2 == 0 { a } else { b }).collect() };
            (self.normalize(&alt(s, t)) == self.normalize(&alt(t, s))).then_some(m as u32)
        })
    }

    /// The system's braid exponents, indexed by atoms.
    pub fn braid_exponents(&self) -> Vec<Vec<Option<u32>>> {
        self.atoms()
            .map(|s| self.atoms().map(|t| self.braid_exponent(s, t)).collect())
            .collect()
    }

    /// Loops at `X`, their labels and (under the hypotheses that `sh(X)` is
    /// parabolic and equals the tilde version) the braid-exponent matrix.
    pub fn shakers(&self, q: &Quiver, x: AtomSet) -> Result<Shakers> {
        self.check_parabolic(x)?;
        let loops: Vec<&Generator> = q.loops(x).collect();
        let sh: AtomSet = loops.iter().flat_map(|g| g.labels.iter().copied()).collect();
        let mut sh_tilde = AtomSet::EMPTY;
        for s in self.atoms() {
            if let Ok(n) = self.nu(x, s, NuVariant::Tilde) {
                if n.source == x {
                    sh_tilde.insert(s);
                }
            }
        }
        let generators: Vec<usize> = loops.iter().map(|g| g.id).collect();
        let matrix = (sh == sh_tilde && self.is_parabolic(sh)).then(|| {
            loops
                .iter()
                .map(|u| loops.iter().map(|v| self.shaker_entry(q, x, u, v)).collect())
                .collect()
        });
        Ok(Shakers { parabolic: x, generators, sh, sh_tilde, matrix })
    }

    fn shaker_entry(&self, q: &Quiver, x: AtomSet, u: &Generator, v: &Generator) -> Option<u32> {
        if u.id == v.id {
            return Some(1);
        }
        let commute = || self.multiply(&u.element, &v.element) == self.multiply(&v.element, &u.element);
        match (u.kind, v.kind) {
            (NuKind::Tau, NuKind::Tau) => Some(2),
            (NuKind::Tau, NuKind::Nu) | (NuKind::Nu, NuKind::Tau) => commute().then_some(2),
            (NuKind::Nu, NuKind::Nu) => {
                let jp = self.ribbon_join_paths(q, x, u.labels[0], v.labels[0]).ok()?;
                let alternating = |a: usize, b: usize| {
                    jp.paths.iter().find_map(|p| {
                        let ok = p.iter().enumerate().all(|(i, &e)| e == if i % 2 == 0 { a } else { b });
                        ok.then_some(p.len())
                    })
                };
                match (alternating(u.id, v.id), alternating(v.id, u.id)) {
                    (Some(m), Some(n)) if m == n => Some(m as u32),
                    _ => None,
                }
            }
        }
    }

    /// Check that the shakers at `X` generate a Garside structure with
    /// Garside element `Δ_{sh(X)}`, and that bounded products of shakers
    /// split uniquely as `QZ(A⁺_X)` part times ν-shaker part.
    pub fn shaker_garside_check(&self, q: &Quiver, x: AtomSet, level: usize) -> Result<ShakerReport> {
        let shakers = self.shakers(q, x)?;
        let mut checks = Vec::new();
        let hyp = shakers.hypotheses_hold();
        checks.push(Check {
            name: "hypotheses",
            passed: hyp,
            detail: format!(
                "sh = {}, tilde sh = {}, parabolic: {}",
                self.render_set(shakers.sh),
                self.render_set(shakers.sh_tilde),
                self.is_parabolic(shakers.sh)
            ),
        });
        if !hyp {
            return Ok(ShakerReport { shakers, delta_sh: None, checks });
        }
        let dsh = self.delta_of(shakers.sh)?;
        let elems: Vec<&Positive> = shakers.generators.iter().map(|&id| &q.generator(id).element).collect();
        let nu_loops: Vec<usize> = shakers
            .generators
            .iter()
            .copied()
            .filter(|&id| q.generator(id).kind == NuKind::Nu)
            .collect();
        let over = |p: &Positive, allowed: &[usize]| -> bool {
            self.spelling_paths(q, x, p, false)
                .iter()
                .any(|path| path.iter().all(|e| allowed.contains(e)))
        };

        let bad: Vec<String> = elems
            .iter()
            .filter(|e| !self.divides(e, &dsh, Side::Left))
            .map(|e| self.render_positive(e))
            .collect();
        checks.push(Check {
            name: "shakers divide delta_sh",
            passed: bad.is_empty(),
            detail: bad.join(", "),
        });

        let gd = self.to_group(&dsh);
        let bad: Vec<String> = elems
            .iter()
            .filter(|e| {
                let c = self.conjugate(&self.to_group(e), &gd);
                !elems.iter().any(|f| self.to_group(f) == c)
            })
            .map(|e| self.render_positive(e))
            .collect();
        checks.push(Check {
            name: "delta_sh permutes shakers",
            passed: bad.is_empty(),
            detail: bad.join(", "),
        });

        checks.push(Check {
            name: "delta_sh is a shaker path",
            passed: over(&dsh, &shakers.generators),
            detail: self.render_positive(&dsh),
        });

        let dx = self.delta_of(x)?;
        let nabla = self.quotient(&dx, &dsh, Side::Left);
        checks.push(Check {
            name: "nabla is a nu-shaker path",
            passed: nabla.as_ref().map(|n| over(n, &nu_loops)).unwrap_or(false),
            detail: nabla.map(|n| self.render_positive(&n)).unwrap_or_else(|e| e.to_string()),
        });

        // bounded products of shakers
        let mut products = vec![Positive::identity()];
        let mut frontier = vec![Positive::identity()];
        for _ in 0..level {
            let mut next = Vec::new();
            for p in &frontier {
                for e in &elems {
                    let pe = self.multiply(p, e);
                    if !products.contains(&pe) {
                        products.push(pe.clone());
                        next.push(pe);
                    }
                }
            }
            frontier = next;
        }
        let mut failures = Vec::new();
        for p in &products {
            let split_ok = match self.factor_qz_nu(q, p, x) {
                Ok((_, r)) => over(&r, &nu_loops),
                Err(_) => false,
            };
            if !split_ok || self.count_qz_nu_splits(q, p, x) != 1 {
                failures.push(self.render_positive(p));
            }
        }
        checks.push(Check {
            name: "semidirect split",
            passed: failures.is_empty(),
            detail: format!("{} products checked; failures: [{}]", products.len(), failures.join(", ")),
        });
        Ok(ShakerReport { shakers, delta_sh: Some(dsh), checks })
    }

    /// `g = a·r` with `a ∈ A_X` and `r` a ν-ribbon out of `X`, or `None` if
    /// `g` does not conjugate `A_X` onto a standard parabolic subgroup.
    ///
    /// Writes `gΔⁿ = a₁·r₁·b₁` with `a₁` the largest `A⁺_X` prefix, `r₁` a
    /// ribbon `X → Z` and `b₁` the largest `A⁺_Z` suffix, then splits
    /// `r₁Δ⁻ⁿ` into its ν-fraction and pushes the remainder into `a`.
    pub fn conj_decompose(&self, q: &Quiver, g: &GroupEl, x: AtomSet) -> Result<Option<ConjDecomposition>> {
        self.check_parabolic(x)?;
        let n = (-g.exponent).max(0);
        let g1 = self
            .g_multiply(g, &self.delta_group(n))
            .as_positive(self)
            .expect("exponent made non-negative");
        let a1 = self.max_divisor_in(x, &g1, Side::Left);
        let rest = self.quotient(&a1, &g1, Side::Left)?;
        let found = self.parabolics().into_iter().find_map(|z| {
            let b1 = self.max_divisor_in(z, &rest, Side::Right);
            let r1 = self.quotient(&b1, &rest, Side::Right).ok()?;
            (self.ribbon_target(&r1, x) == Some(z)).then_some(r1)
        });
        let r1 = match found {
            Some(r1) => r1,
            None => return Ok(None),
        };
        let shifted = self.g_multiply(&self.to_group(&r1), &self.delta_group(-n));
        let y = self
            .conjugate_atomset(&shifted, x)
            .filter(|&y| self.is_parabolic(y))
            .ok_or_else(|| Error::InvariantViolation("ribbon part does not reach a parabolic".into()))?;
        let (_, v1) = self.factor_qz_nu(q, &r1, x)?;
        let (_, v2) = self.factor_qz_nu(q, &self.delta_power(n as usize), y)?;
        let w = self.g_multiply(&self.to_group(&v1), &self.g_invert(&self.to_group(&v2)));
        let a = self.g_multiply(g, &self.g_invert(&w));
        let (u1, u2) = self.fraction(&a, Side::Left);
        if !self.contains_atoms(x, &u1) || !self.contains_atoms(x, &u2) {
            return Err(Error::InvariantViolation(format!(
                "{} is not in the parabolic subgroup {}",
                self.render_group(&a),
                self.render_set(x)
            )));
        }
        if self.conjugate_atomset(&w, x) != Some(y) || self.g_multiply(&a, &w) != *g {
            return Err(Error::InvariantViolation("decomposition does not recompose".into()));
        }
        Ok(Some(ConjDecomposition {
            a,
            ribbon: RibbonMorphism { source: x, element: w, target: y },
            numerator: v1,
            denominator: v2,
        }))
    }

    /// Whether `g` is a ν-ribbon out of `X`: its decomposition has trivial
    /// `A_X` part.
    pub fn is_nu_ribbon(&self, q: &Quiver, g: &GroupEl, x: AtomSet) -> Result<bool> {
        Ok(self
            .conj_decompose(q, g, x)?
            .map(|d| d.a.is_identity())
            .unwrap_or(false))
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
    fn b3_quiver_shape() {
        let sys = bundled::b3();
        let q = sys.atom_quiver().unwrap();
        assert_eq!(q.objects.len(), 4);
        assert_eq!(q.generators.len(), 7);
        assert_eq!(q.loops(AtomSet::EMPTY).count(), 2);
        assert_eq!(q.out_edges(sys.all_atoms()).count(), 1);
    }

    #[test]
    fn rank1_quiver() {
        let sys = bundled::rank1();
        let q = sys.atom_quiver().unwrap();
        assert_eq!(q.objects.len(), 2);
        assert_eq!(q.generators.len(), 2);
        assert!(q.generators.iter().all(|g| g.source == g.target));
        let p = sys.presentation().unwrap();
        assert!(p.relations.iter().all(|r| r.kind != RelationKind::Lcm));
    }

    #[test]
    fn positive_ribbons() {
        let sys = bundled::b3();
        let (xs, xt) = (set(&sys, &["s"]), set(&sys, &["t"]));
        assert_eq!(sys.is_positive_ribbon(&w(&sys, "t s"), xs), Some(xt));
        assert_eq!(sys.is_positive_ribbon(&Positive::identity(), xs), Some(xs));
        assert_eq!(sys.is_positive_ribbon(&w(&sys, "s"), xt), None);
    }

    #[test]
    fn qz_nu_factorization() {
        let sys = bundled::b3();
        let q = sys.atom_quiver().unwrap();
        let xs = set(&sys, &["s"]);
        assert_eq!(
            sys.factor_qz_nu(&q, &w(&sys, "s t s"), xs).unwrap(),
            (w(&sys, "s"), w(&sys, "t s"))
        );
        assert_eq!(sys.factor_qz_nu(&q, &w(&sys, "s s"), xs).unwrap(), (w(&sys, "s s"), Positive::identity()));
        assert_eq!(sys.factor_qz_nu(&q, &w(&sys, "t s"), xs).unwrap(), (Positive::identity(), w(&sys, "t s")));
        assert!(matches!(sys.factor_qz_nu(&q, &w(&sys, "t"), xs), Err(Error::NotARibbon { .. })));
    }

    #[test]
    fn b3_presentation() {
        let sys = bundled::b3();
        let p = sys.presentation().unwrap();
        let count = |k| p.relations.iter().filter(|r| r.kind == k).count();
        assert_eq!(count(RelationKind::TauCommute), 0);
        assert_eq!(count(RelationKind::TauNu), 2);
        assert_eq!(count(RelationKind::Lcm), 1);
        let lcm = p.relations.iter().find(|r| r.kind == RelationKind::Lcm).unwrap();
        assert_eq!((lcm.left.len(), lcm.right.len()), (3, 3));
    }

    #[test]
    fn join_paths_in_b4() {
        let sys = bundled::b4();
        let q = sys.atom_quiver().unwrap();
        let a = |n: &str| sys.atom_by_name(n).unwrap();
        let jp = sys.ribbon_join_paths(&q, set(&sys, &["s2"]), a("s1"), a("s3")).unwrap();
        assert_eq!(jp.paths.len(), 2);
        assert!(jp.paths.iter().all(|p| p.len() == 3));
        assert!(sys
            .ribbon_join_paths(&q, set(&sys, &["s2"]), a("s2"), a("s1"))
            .is_err());
    }

    #[test]
    fn shakers_in_b4() {
        let sys = bundled::b4();
        let q = sys.atom_quiver().unwrap();
        let sh = sys.shakers(&q, AtomSet::EMPTY).unwrap();
        let m = sh.matrix.unwrap();
        assert_eq!(m[0], vec![Some(1), Some(3), Some(2)]);
        let x13 = set(&sys, &["s1", "s3"]);
        let sh = sys.shakers(&q, x13).unwrap();
        assert_eq!(sh.generators.len(), 3);
        assert_eq!(sh.sh, sys.all_atoms());
        let report = sys.shaker_garside_check(&q, x13, 2).unwrap();
        assert!(report.passed(), "{:?}", report.checks);
    }

    #[test]
    fn conjugator_decomposition_in_b3() {
        let sys = bundled::b3();
        let q = sys.atom_quiver().unwrap();
        let (xs, xt) = (set(&sys, &["s"]), set(&sys, &["t"]));
        let d = sys.conj_decompose(&q, &sys.delta_group(1), xs).unwrap().unwrap();
        assert_eq!(d.a, sys.to_group(&w(&sys, "s")));
        assert_eq!(d.ribbon.element, sys.to_group(&w(&sys, "t s")));
        assert_eq!(d.ribbon.target, xt);
        let inside = sys.to_group(&w(&sys, "s s"));
        let d = sys.conj_decompose(&q, &inside, xs).unwrap().unwrap();
        assert_eq!(d.a, inside);
        assert!(d.ribbon.element.is_identity());
        assert!(sys.conj_decompose(&q, &sys.to_group(&w(&sys, "t")), xs).unwrap().is_none());
    }
}
