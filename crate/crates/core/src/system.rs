//! The finite combinatorial core of a Garside monoid: simple elements, Δ,
//! the two divisibility lattices on simples and the automorphism Φ.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::atoms::{AtomId, AtomSet, MAX_RANK};
use crate::coxeter::CoxeterGroup;
use crate::error::{Error, Result};
use crate::spec::{CoxeterSpec, MatrixEntry, NuTableSpec, SystemSpec, TableSpec};

/// Default cap on the order of an enumerated Coxeter group.
pub const DEFAULT_COXETER_CAP: usize = 50_000;

/// Id of a simple element. Id 0 is always the identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Simple(pub u32);

impl Simple {
    pub const IDENTITY: Simple = Simple(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn is_identity(self) -> bool {
        self.0 == 0
    }
}

/// Left or right divisibility.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Where the simple tables came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Coxeter { matrix: Vec<Vec<u32>> },
    Table,
}

pub(crate) type NuTable = BTreeMap<AtomSet, BTreeMap<AtomId, Vec<AtomId>>>;

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone)]
struct TableArith {
    n: usize,
    mul: Vec<u32>,
    lq: Vec<u32>,
    rq: Vec<u32>,
    meet: [Vec<u32>; 2],
}

impl TableArith {
    fn at(&self, v: &[u32], a: Simple, b: Simple) -> Option<Simple> {
        let x = v[a.index() * self.n + b.index()];
        (x != NONE).then_some(Simple(x))
    }
}

#[derive(Debug, Clone)]
enum Arith {
    Coxeter(CoxeterGroup),
    Table(TableArith),
}

/// Immutable tables for a Garside monoid at the level of simple elements.
#[derive(Debug, Clone)]
pub struct GarsideSystem {
    atom_names: Vec<String>,
    provenance: Provenance,
    delta: Simple,
    words: Vec<Vec<AtomId>>,
    atom_simple: Vec<Simple>,
    simple_atom: Vec<Option<AtomId>>,
    lc: Vec<Simple>,
    rc: Vec<Simple>,
    phi: Vec<Simple>,
    phi_inv: Vec<Simple>,
    arith: Arith,
    parabolics: Option<Vec<AtomSet>>,
    components: BTreeMap<AtomSet, Vec<AtomSet>>,
    pub(crate) nu_table: Option<NuTable>,
    pub(crate) nu_tilde_table: Option<NuTable>,
}

fn name_index(atoms: &[String]) -> Result<HashMap<&str, AtomId>> {
    if atoms.len() > MAX_RANK {
        return Err(Error::Parse(format!("at most {MAX_RANK} atoms are supported")));
    }
    let mut map = HashMap::new();
    for (i, a) in atoms.iter().enumerate() {
        if a.is_empty() || a.contains(char::is_whitespace) || a.contains(',') {
            return Err(Error::Parse(format!("invalid atom name `{a}`")));
        }
        if a == "DELTA" {
            return Err(Error::Parse("`DELTA` is reserved".into()));
        }
        if map.insert(a.as_str(), AtomId(i)).is_some() {
            return Err(Error::Parse(format!("duplicate atom name `{a}`")));
        }
    }
    Ok(map)
}

fn parse_word(names: &HashMap<&str, AtomId>, word: &[String]) -> Result<Vec<AtomId>> {
    word.iter()
        .map(|w| names.get(w.as_str()).copied().ok_or_else(|| Error::UnknownAtom(w.clone())))
        .collect()
}

fn parse_key(names: &HashMap<&str, AtomId>, key: &str) -> Result<AtomSet> {
    key.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| names.get(s).copied().ok_or_else(|| Error::UnknownAtom(s.to_string())))
        .collect()
}

fn parse_nu_table(names: &HashMap<&str, AtomId>, spec: &NuTableSpec) -> Result<NuTable> {
    let mut out = NuTable::new();
    for (key, row) in spec {
        let x = parse_key(names, key)?;
        let mut parsed = BTreeMap::new();
        for (atom, word) in row {
            let a = names
                .get(atom.as_str())
                .copied()
                .ok_or_else(|| Error::UnknownAtom(atom.clone()))?;
            parsed.insert(a, parse_word(names, word)?);
        }
        out.insert(x, parsed);
    }
    Ok(out)
}

impl GarsideSystem {
    /// Build from a parsed system file.
    pub fn from_spec(spec: &SystemSpec) -> Result<Self> {
        match spec {
            SystemSpec::Coxeter(c) => Self::build_from_coxeter(c, c.cap.unwrap_or(DEFAULT_COXETER_CAP)),
            SystemSpec::Table(t) => Self::build_from_table(t),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::from_spec(&SystemSpec::from_json(text)?)
    }

    pub fn from_path(path: impl AsRef<std::path::Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    /// Build the classical Garside structure of the Artin-Tits monoid with
    /// the given Coxeter matrix. Simples are the elements of the finite
    /// Coxeter group, Δ its longest element.
    pub fn build_from_coxeter(spec: &CoxeterSpec, cap: usize) -> Result<Self> {
        let names = name_index(&spec.atoms)?;
        let _ = names;
        let rank = spec.atoms.len();
        if spec.coxeter_matrix.len() != rank {
            return Err(Error::InvalidCoxeterMatrix(format!(
                "expected {rank} rows, found {}",
                spec.coxeter_matrix.len()
            )));
        }
        let mut matrix = vec![vec![0u32; rank]; rank];
        for (i, row) in spec.coxeter_matrix.iter().enumerate() {
            if row.len() != rank {
                return Err(Error::InvalidCoxeterMatrix(format!(
                    "row {i} has {} entries, expected {rank}",
                    row.len()
                )));
            }
            for (j, e) in row.iter().enumerate() {
                matrix[i][j] = match e {
                    MatrixEntry::Finite(m) => *m,
                    MatrixEntry::Symbol(_) => {
                        return Err(Error::InfiniteEntry(
                            spec.atoms[i].clone(),
                            spec.atoms[j].clone(),
                        ))
                    }
                };
            }
        }
        for i in 0..rank {
            if matrix[i][i] != 1 {
                return Err(Error::InvalidCoxeterMatrix(format!(
                    "diagonal entry for `{}` must be 1",
                    spec.atoms[i]
                )));
            }
            for j in 0..rank {
                if matrix[i][j] != matrix[j][i] {
                    return Err(Error::InvalidCoxeterMatrix(format!(
                        "matrix is not symmetric at ({}, {})",
                        spec.atoms[i], spec.atoms[j]
                    )));
                }
                if i != j && matrix[i][j] < 2 {
                    return Err(Error::InvalidCoxeterMatrix(format!(
                        "entry ({}, {}) must be at least 2",
                        spec.atoms[i], spec.atoms[j]
                    )));
                }
            }
        }
        let group = CoxeterGroup::enumerate(&matrix, cap)?;
        let n = group.order();
        let w0 = group.longest();
        let words: Vec<Vec<AtomId>> = (0..n as u32)
            .map(|w| group.word(w).iter().map(|&s| AtomId(s as usize)).collect())
            .collect();
        let atom_simple: Vec<Simple> = (0..rank).map(|s| Simple(group.right_mul(0, s))).collect();
        let lc: Vec<Simple> = (0..n as u32).map(|a| Simple(group.left_div(a, w0))).collect();
        let rc: Vec<Simple> = (0..n as u32).map(|a| Simple(group.right_div(a, w0))).collect();
        let arith = Arith::Coxeter(group);
        Ok(Self::assemble(
            spec.atoms.clone(),
            Provenance::Coxeter { matrix },
            Simple(w0),
            words,
            atom_simple,
            lc,
            rc,
            arith,
            None,
            BTreeMap::new(),
            None,
            None,
        ))
    }

    #[allow(clippy::too_many_arguments)]
    fn assemble(
        atom_names: Vec<String>,
        provenance: Provenance,
        delta: Simple,
        words: Vec<Vec<AtomId>>,
        atom_simple: Vec<Simple>,
        lc: Vec<Simple>,
        rc: Vec<Simple>,
        arith: Arith,
        parabolics: Option<Vec<AtomSet>>,
        components: BTreeMap<AtomSet, Vec<AtomSet>>,
        nu_table: Option<NuTable>,
        nu_tilde_table: Option<NuTable>,
    ) -> Self {
        let n = words.len();
        let mut simple_atom = vec![None; n];
        for (i, s) in atom_simple.iter().enumerate() {
            simple_atom[s.index()] = Some(AtomId(i));
        }
        let phi: Vec<Simple> = (0..n).map(|a| lc[lc[a].index()]).collect();
        let mut phi_inv = vec![Simple::IDENTITY; n];
        for (a, p) in phi.iter().enumerate() {
            phi_inv[p.index()] = Simple(a as u32);
        }
        GarsideSystem {
            atom_names,
            provenance,
            delta,
            words,
            atom_simple,
            simple_atom,
            lc,
            rc,
            phi,
            phi_inv,
            arith,
            parabolics,
            components,
            nu_table,
            nu_tilde_table,
        }
    }

    /// Build from an explicit list of simples. The Garside structure is
    /// verified, not discovered: every declared word is closed under the
    /// declared relations (within the maximal declared length) and the
    /// lattice, complement and cancellation axioms are checked on the
    /// resulting tables.
    pub fn build_from_table(spec: &TableSpec) -> Result<Self> {
        let names = name_index(&spec.atoms)?;
        let rank = spec.atoms.len();
        let n = spec.simples.len();
        if n == 0 {
            return Err(Error::InvalidTable("no simples declared".into()));
        }
        let mut words = Vec::with_capacity(n);
        for (i, rec) in spec.simples.iter().enumerate() {
            if rec.id != i {
                return Err(Error::InvalidTable(format!(
                    "simple ids must be 0..{n} in declaration order; found id {} at position {i}",
                    rec.id
                )));
            }
            words.push(parse_word(&names, &rec.word)?);
        }
        if !words[0].is_empty() {
            return Err(Error::InvalidTable("simple 0 must be the identity (empty word)".into()));
        }
        if spec.delta >= n {
            return Err(Error::InvalidTable(format!("delta id {} out of range", spec.delta)));
        }
        let delta = Simple(spec.delta as u32);
        let max_len = words.iter().map(Vec::len).max().unwrap_or(0);
        if words[delta.index()].len() != max_len {
            return Err(Error::InvalidTable("delta's word must have maximal length".into()));
        }
        let relations: Vec<(Vec<AtomId>, Vec<AtomId>)> = spec
            .relations
            .iter()
            .map(|(l, r)| Ok((parse_word(&names, l)?, parse_word(&names, r)?)))
            .collect::<Result<_>>()?;
        let bound = relations
            .iter()
            .flat_map(|(l, r)| [l.len(), r.len()])
            .chain(std::iter::once(max_len))
            .max()
            .unwrap_or(0);

        // Close every declared word under the relations, within `bound`.
        let mut class_of: HashMap<Vec<AtomId>, u32> = HashMap::new();
        let mut classes: Vec<Vec<Vec<AtomId>>> = Vec::with_capacity(n);
        for (id, w) in words.iter().enumerate() {
            let class = rewrite_closure(w, &relations, bound);
            for v in &class {
                if let Some(&other) = class_of.get(v) {
                    if other as usize != id {
                        return Err(Error::InvalidTable(format!(
                            "simples {other} and {id} denote the same element"
                        )));
                    }
                }
                class_of.insert(v.clone(), id as u32);
            }
            classes.push(class);
        }

        let render = |id: usize| -> String { render_word(&spec.atoms, &words[id]) };

        let mut atom_simple = Vec::with_capacity(rank);
        for a in 0..rank {
            match class_of.get(&vec![AtomId(a)]) {
                Some(&id) if words[id as usize].len() == 1 => atom_simple.push(Simple(id)),
                _ => {
                    return Err(Error::InvalidTable(format!(
                        "atom `{}` is not declared as a length-1 simple",
                        spec.atoms[a]
                    )))
                }
            }
        }

        let mut mul = vec![NONE; n * n];
        for a in 0..n {
            for b in 0..n {
                'found: for u in &classes[a] {
                    for v in &classes[b] {
                        if u.len() + v.len() > bound {
                            continue;
                        }
                        let mut uv = u.clone();
                        uv.extend_from_slice(v);
                        if let Some(&c) = class_of.get(&uv) {
                            mul[a * n + b] = c;
                            break 'found;
                        }
                    }
                }
            }
        }

        // Cancellation: products are injective in each argument.
        let mut lq = vec![NONE; n * n];
        let mut rq = vec![NONE; n * n];
        for a in 0..n {
            for b in 0..n {
                let c = mul[a * n + b];
                if c == NONE {
                    continue;
                }
                let c = c as usize;
                if lq[a * n + c] != NONE && lq[a * n + c] as usize != b {
                    return Err(Error::CancellationFailure {
                        a: render(a),
                        b: render(lq[a * n + c] as usize),
                        c: render(b),
                    });
                }
                lq[a * n + c] = b as u32;
                if rq[b * n + c] != NONE && rq[b * n + c] as usize != a {
                    return Err(Error::CancellationFailure {
                        a: render(rq[b * n + c] as usize),
                        b: render(b),
                        c: render(a),
                    });
                }
                rq[b * n + c] = a as u32;
            }
        }

        let mut lc = Vec::with_capacity(n);
        let mut rc = Vec::with_capacity(n);
        for a in 0..n {
            let l = lq[a * n + delta.index()];
            if l == NONE {
                return Err(Error::ComplementMissing { simple: render(a), side: "left" });
            }
            let r = rq[a * n + delta.index()];
            if r == NONE {
                return Err(Error::ComplementMissing { simple: render(a), side: "right" });
            }
            lc.push(Simple(l));
            rc.push(Simple(r));
        }

        let meet_l = lattice_table(n, &lq, false).map_err(|(a, b, what)| Error::NotALattice {
            side: "left",
            what,
            a: render(a),
            b: render(b),
        })?;
        let meet_r = lattice_table(n, &rq, false).map_err(|(a, b, what)| Error::NotALattice {
            side: "right",
            what,
            a: render(a),
            b: render(b),
        })?;
        // joins must exist too; they are derived from meets via complements
        // later, but a failure here names the offending pair.
        lattice_table(n, &lq, true).map_err(|(a, b, what)| Error::NotALattice {
            side: "left",
            what,
            a: render(a),
            b: render(b),
        })?;
        lattice_table(n, &rq, true).map_err(|(a, b, what)| Error::NotALattice {
            side: "right",
            what,
            a: render(a),
            b: render(b),
        })?;

        let mut parabolics = vec![AtomSet::EMPTY, AtomSet::full(rank)];
        let mut components = BTreeMap::new();
        if let Some(decls) = &spec.parabolics {
            parabolics.clear();
            for d in decls {
                let x: AtomSet = parse_word(&names, d.atoms())?.into_iter().collect();
                if let Some(comps) = d.components() {
                    let mut cs = Vec::new();
                    let mut union = AtomSet::EMPTY;
                    for c in comps {
                        let cset: AtomSet = parse_word(&names, c)?.into_iter().collect();
                        if !union.intersection(cset).is_empty() || cset.is_empty() {
                            return Err(Error::InvalidTable(format!(
                                "components of parabolic {} are not a partition",
                                render_set(&spec.atoms, x)
                            )));
                        }
                        union = union.union(cset);
                        cs.push(cset);
                    }
                    if union != x {
                        return Err(Error::InvalidTable(format!(
                            "components of parabolic {} do not cover it",
                            render_set(&spec.atoms, x)
                        )));
                    }
                    cs.sort();
                    components.insert(x, cs);
                }
                if !parabolics.contains(&x) {
                    parabolics.push(x);
                }
            }
            parabolics.sort();
        }

        let nu_table = spec.nu_table.as_ref().map(|t| parse_nu_table(&names, t)).transpose()?;
        let nu_tilde_table = spec
            .nu_tilde_table
            .as_ref()
            .map(|t| parse_nu_table(&names, t))
            .transpose()?;

        let arith = Arith::Table(TableArith {
            n,
            mul,
            lq,
            rq,
            meet: [meet_l, meet_r],
        });
        let sys = Self::assemble(
            spec.atoms.clone(),
            Provenance::Table,
            delta,
            words,
            atom_simple,
            lc,
            rc,
            arith,
            Some(parabolics),
            components,
            nu_table,
            nu_tilde_table,
        );

        // Φ permutes the atoms and fixes Δ.
        let mut images = AtomSet::EMPTY;
        for a in sys.atoms() {
            match sys.simple_atom(sys.phi(sys.atom_simple(a))) {
                Some(b) => images.insert(b),
                None => {
                    return Err(Error::InvalidTable(format!(
                        "Φ does not map atom `{}` to an atom",
                        sys.atom_name(a)
                    )))
                }
            }
        }
        if images != AtomSet::full(rank) || sys.phi(delta) != delta {
            return Err(Error::InvalidTable("Φ is not a bijection of the atoms".into()));
        }
        for (l, r) in &relations {
            if sys.normalize(l) != sys.normalize(r) {
                return Err(Error::RelationMismatch(
                    render_word(&spec.atoms, l),
                    render_word(&spec.atoms, r),
                ));
            }
        }
        for id in 0..n {
            let nf = sys.normalize(&sys.words[id]);
            let expected: Vec<Simple> = if id == 0 { vec![] } else { vec![Simple(id as u32)] };
            if nf.letters() != expected.as_slice() {
                return Err(Error::InvalidTable(format!(
                    "word of simple {id} does not normalize to itself"
                )));
            }
        }
        Ok(sys)
    }

    // ---- atoms ---------------------------------------------------------

    pub fn rank(&self) -> usize {
        self.atom_names.len()
    }

    pub fn atoms(&self) -> impl Iterator<Item = AtomId> {
        (0..self.rank()).map(AtomId)
    }

    pub fn all_atoms(&self) -> AtomSet {
        AtomSet::full(self.rank())
    }

    pub fn atom_name(&self, a: AtomId) -> &str {
        &self.atom_names[a.0]
    }

    pub fn atom_names(&self) -> &[String] {
        &self.atom_names
    }

    pub fn atom_by_name(&self, name: &str) -> Option<AtomId> {
        self.atom_names.iter().position(|n| n == name).map(AtomId)
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn coxeter_matrix(&self) -> Option<&[Vec<u32>]> {
        match &self.provenance {
            Provenance::Coxeter { matrix } => Some(matrix),
            Provenance::Table => None,
        }
    }

    // ---- simples -------------------------------------------------------

    pub fn num_simples(&self) -> usize {
        self.words.len()
    }

    pub fn simples(&self) -> impl Iterator<Item = Simple> {
        (0..self.num_simples() as u32).map(Simple)
    }

    pub fn delta(&self) -> Simple {
        self.delta
    }

    pub fn atom_simple(&self, a: AtomId) -> Simple {
        self.atom_simple[a.0]
    }

    /// The atom a simple stands for, if it is one.
    pub fn simple_atom(&self, s: Simple) -> Option<AtomId> {
        self.simple_atom[s.index()]
    }

    /// A word for the simple: ShortLex-minimal for Coxeter systems, the
    /// declared word for table systems.
    pub fn simple_word(&self, s: Simple) -> &[AtomId] {
        &self.words[s.index()]
    }

    pub fn simple_len(&self, s: Simple) -> usize {
        self.words[s.index()].len()
    }

    /// `a · b` if the product is again simple.
    pub fn mul(&self, a: Simple, b: Simple) -> Option<Simple> {
        match &self.arith {
            Arith::Coxeter(g) => {
                let w = g.mul(a.0, b.0);
                (g.length(w) == g.length(a.0) + g.length(b.0)).then_some(Simple(w))
            }
            Arith::Table(t) => t.at(&t.mul, a, b),
        }
    }

    /// The simple `c` with `a · c = b`, if `a` left-divides `b`.
    pub fn left_quotient(&self, a: Simple, b: Simple) -> Option<Simple> {
        match &self.arith {
            Arith::Coxeter(g) => {
                let c = g.left_div(a.0, b.0);
                (g.length(c) + g.length(a.0) == g.length(b.0)).then_some(Simple(c))
            }
            Arith::Table(t) => t.at(&t.lq, a, b),
        }
    }

    /// The simple `c` with `c · a = b`, if `a` right-divides `b`.
    pub fn right_quotient(&self, a: Simple, b: Simple) -> Option<Simple> {
        match &self.arith {
            Arith::Coxeter(g) => {
                let c = g.right_div(a.0, b.0);
                (g.length(c) + g.length(a.0) == g.length(b.0)).then_some(Simple(c))
            }
            Arith::Table(t) => t.at(&t.rq, a, b),
        }
    }

    pub fn simple_divides(&self, a: Simple, b: Simple, side: Side) -> bool {
        match side {
            Side::Left => self.left_quotient(a, b).is_some(),
            Side::Right => self.right_quotient(a, b).is_some(),
        }
    }

    /// Greatest common divisor of two simples on the given side.
    pub fn simple_meet(&self, a: Simple, b: Simple, side: Side) -> Simple {
        if let Arith::Table(t) = &self.arith {
            let v = match side {
                Side::Left => &t.meet[0],
                Side::Right => &t.meet[1],
            };
            return Simple(v[a.index() * t.n + b.index()]);
        }
        if a == b {
            return a;
        }
        // Climb from 1 one atom at a time while staying a common divisor.
        let mut m = Simple::IDENTITY;
        'climb: loop {
            for s in 0..self.rank() {
                let atom = self.atom_simple[s];
                let next = match side {
                    Side::Left => self.mul(m, atom),
                    Side::Right => self.mul(atom, m),
                };
                if let Some(next) = next {
                    if self.simple_divides(next, a, side) && self.simple_divides(next, b, side) {
                        m = next;
                        continue 'climb;
                    }
                }
            }
            return m;
        }
    }

    /// Least common multiple of two simples on the given side.
    pub fn simple_join(&self, a: Simple, b: Simple, side: Side) -> Simple {
        match side {
            // lc reverses ≤_L into ≤_R, with inverse rc
            Side::Left => self.rc(self.simple_meet(self.lc(a), self.lc(b), Side::Right)),
            Side::Right => self.lc(self.simple_meet(self.rc(a), self.rc(b), Side::Left)),
        }
    }

    /// Left side: `a⁻¹Δ`; right side: `Δa⁻¹`.
    pub fn complement(&self, a: Simple, side: Side) -> Simple {
        match side {
            Side::Left => self.lc[a.index()],
            Side::Right => self.rc[a.index()],
        }
    }

    pub(crate) fn lc(&self, a: Simple) -> Simple {
        self.lc[a.index()]
    }

    pub(crate) fn rc(&self, a: Simple) -> Simple {
        self.rc[a.index()]
    }

    /// `Φ(a) = Δ⁻¹ a Δ`.
    pub fn phi(&self, a: Simple) -> Simple {
        self.phi[a.index()]
    }

    pub fn phi_inv(&self, a: Simple) -> Simple {
        self.phi_inv[a.index()]
    }

    /// `Φⁿ(a)` for any integer `n`.
    pub fn phi_pow(&self, mut a: Simple, n: i64) -> Simple {
        if n >= 0 {
            for _ in 0..n {
                a = self.phi(a);
            }
        } else {
            for _ in 0..(-n) {
                a = self.phi_inv(a);
            }
        }
        a
    }

    pub fn phi_atom(&self, a: AtomId) -> AtomId {
        self.simple_atom(self.phi(self.atom_simple(a)))
            .expect("Φ permutes atoms")
    }

    // ---- parabolic declarations ---------------------------------------

    /// Every parabolic subset: all subsets for Coxeter systems, the declared
    /// ones for table systems. Sorted.
    pub fn parabolics(&self) -> Vec<AtomSet> {
        match &self.parabolics {
            Some(p) => p.clone(),
            None => {
                let rank = self.rank();
                assert!(rank < 32, "too many atoms to list all parabolic subsets");
                let mut v: Vec<AtomSet> = (0..(1u64 << rank)).map(AtomSet::from_bits).collect();
                v.sort();
                v
            }
        }
    }

    pub fn is_parabolic(&self, x: AtomSet) -> bool {
        match &self.parabolics {
            Some(p) => p.contains(&x),
            None => x.is_subset(self.all_atoms()),
        }
    }

    pub(crate) fn declared_components(&self, x: AtomSet) -> Option<&Vec<AtomSet>> {
        self.components.get(&x)
    }

    // ---- rendering -----------------------------------------------------

    pub fn render_word(&self, w: &[AtomId]) -> String {
        render_word(&self.atom_names, w)
    }

    pub fn render_simple(&self, s: Simple) -> String {
        if s.is_identity() {
            "1".to_string()
        } else {
            self.render_word(self.simple_word(s))
        }
    }

    pub fn render_set(&self, x: AtomSet) -> String {
        render_set(&self.atom_names, x)
    }

    /// Atom names joined by commas; the empty set is the empty string.
    pub fn set_key(&self, x: AtomSet) -> String {
        x.iter()
            .map(|a| self.atom_name(a))
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn set_names(&self, x: AtomSet) -> Vec<String> {
        x.iter().map(|a| self.atom_name(a).to_string()).collect()
    }
}

pub(crate) fn render_word(names: &[String], w: &[AtomId]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter()
        .map(|a| names[a.0].as_str())
        .collect::<Vec<_>>()
        .join(" ")
}

pub(crate) fn render_set(names: &[String], x: AtomSet) -> String {
    let inner: Vec<&str> = x.iter().map(|a| names[a.0].as_str()).collect();
    format!("{{{}}}", inner.join(","))
}

/// All words reachable from `w` by applying relations in either direction
/// at any position, restricted to words of length at most `bound`.
pub(crate) fn rewrite_closure(
    w: &[AtomId],
    relations: &[(Vec<AtomId>, Vec<AtomId>)],
    bound: usize,
) -> Vec<Vec<AtomId>> {
    let mut seen: HashSet<Vec<AtomId>> = HashSet::new();
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(w.to_vec());
    queue.push_back(w.to_vec());
    while let Some(cur) = queue.pop_front() {
        for (l, r) in relations {
            for (from, to) in [(l, r), (r, l)] {
                if from.len() > cur.len() {
                    continue;
                }
                for i in 0..=(cur.len() - from.len()) {
                    if cur[i..i + from.len()] != from[..] {
                        continue;
                    }
                    let next_len = cur.len() - from.len() + to.len();
                    if next_len > bound {
                        continue;
                    }
                    let mut next = Vec::with_capacity(next_len);
                    next.extend_from_slice(&cur[..i]);
                    next.extend_from_slice(to);
                    next.extend_from_slice(&cur[i + from.len()..]);
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
        order.push(cur);
    }
    order
}

/// Meet (or join, when `join`) table for the order given by a quotient
/// table: `x ≤ y` iff `q[x][y]` is defined. Returns the offending pair on
/// failure.
fn lattice_table(n: usize, q: &[u32], join: bool) -> std::result::Result<Vec<u32>, (usize, usize, &'static str)> {
    let le = |x: usize, y: usize| q[x * n + y] != NONE;
    let mut out = vec![NONE; n * n];
    for a in 0..n {
        for b in a..n {
            let cands: Vec<usize> = (0..n)
                .filter(|&c| if join { le(a, c) && le(b, c) } else { le(c, a) && le(c, b) })
                .collect();
            let best = cands.iter().copied().find(|&m| {
                cands
                    .iter()
                    .all(|&c| if join { le(m, c) } else { le(c, m) })
            });
            match best {
                Some(m) => {
                    out[a * n + b] = m as u32;
                    out[b * n + a] = m as u32;
                }
                None => return Err((a, b, if join { "lcm" } else { "gcd" })),
            }
        }
    }
    Ok(out)
}
