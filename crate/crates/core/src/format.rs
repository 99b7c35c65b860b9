//! Text, JSON and line-based "rewriting" forms of a presentation.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::atoms::AtomSet;
use crate::error::{Error, Result};
use crate::nu::NuKind;
use crate::ribbon::{Generator, Presentation, Quiver, Relation, RelationKind};
use crate::system::GarsideSystem;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorDoc {
    pub id: usize,
    pub source: usize,
    pub target: usize,
    pub labels: Vec<String>,
    pub element: Vec<String>,
    pub kind: NuKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationDoc {
    pub kind: u8,
    pub source: usize,
    pub target: usize,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

/// JSON form. Objects are atom-name lists; generators and relations refer
/// to objects by index and relations to generators by id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationDoc {
    pub objects: Vec<Vec<String>>,
    pub generators: Vec<GeneratorDoc>,
    #[serde(default)]
    pub relations: Vec<RelationDoc>,
}

fn object_index(objects: &[AtomSet], x: AtomSet) -> usize {
    objects.iter().position(|&o| o == x).expect("object of the quiver")
}

impl GarsideSystem {
    pub fn quiver_doc(&self, q: &Quiver) -> PresentationDoc {
        PresentationDoc {
            objects: q.objects.iter().map(|&x| self.set_names(x)).collect(),
            generators: q
                .generators
                .iter()
                .map(|g| GeneratorDoc {
                    id: g.id,
                    source: object_index(&q.objects, g.source),
                    target: object_index(&q.objects, g.target),
                    labels: g.labels.iter().map(|&a| self.atom_name(a).to_string()).collect(),
                    element: self.expand(&g.element).iter().map(|&a| self.atom_name(a).to_string()).collect(),
                    kind: g.kind,
                })
                .collect(),
            relations: Vec::new(),
        }
    }

    pub fn presentation_doc(&self, p: &Presentation) -> PresentationDoc {
        let mut doc = self.quiver_doc(&p.quiver);
        let objs = &p.quiver.objects;
        doc.relations = p
            .relations
            .iter()
            .map(|r| RelationDoc {
                kind: r.kind.number(),
                source: object_index(objs, r.source),
                target: object_index(objs, r.target),
                left: r.left.clone(),
                right: r.right.clone(),
            })
            .collect();
        doc
    }

    /// Rebuild a presentation from its JSON form, checking that generator
    /// ids are dense, objects are parabolic and every path composes.
    pub fn presentation_from_doc(&self, doc: &PresentationDoc) -> Result<Presentation> {
        let bad = |m: String| Error::Parse(m);
        let mut objects = Vec::new();
        for names in &doc.objects {
            let x: AtomSet = names
                .iter()
                .map(|n| self.atom_by_name(n).ok_or_else(|| Error::UnknownAtom(n.clone())))
                .collect::<Result<_>>()?;
            self.check_parabolic(x)?;
            objects.push(x);
        }
        let obj = |i: usize| objects.get(i).copied().ok_or_else(|| bad(format!("object index {i} out of range")));
        let mut generators = Vec::new();
        for (i, g) in doc.generators.iter().enumerate() {
            if g.id != i {
                return Err(bad(format!("generator ids must be 0..n in order; found {} at {i}", g.id)));
            }
            let labels = g
                .labels
                .iter()
                .map(|n| self.atom_by_name(n).ok_or_else(|| Error::UnknownAtom(n.clone())))
                .collect::<Result<Vec<_>>>()?;
            generators.push(Generator {
                id: i,
                source: obj(g.source)?,
                target: obj(g.target)?,
                labels,
                element: self.parse_positive(&g.element.join(" "))?,
                kind: g.kind,
            });
        }
        let quiver = Quiver { objects: objects.clone(), generators };
        let mut relations = Vec::new();
        for r in &doc.relations {
            let kind = RelationKind::from_number(r.kind).ok_or_else(|| bad(format!("unknown relation kind {}", r.kind)))?;
            let rel = Relation {
                kind,
                source: obj(r.source)?,
                target: obj(r.target)?,
                left: r.left.clone(),
                right: r.right.clone(),
            };
            for side in [&rel.left, &rel.right] {
                if quiver.path_target(rel.source, side) != Some(rel.target) {
                    return Err(bad(format!("relation path {side:?} does not run from object {} to {}", r.source, r.target)));
                }
            }
            relations.push(rel);
        }
        Ok(Presentation { quiver, relations })
    }

    pub fn presentation_json(&self, p: &Presentation) -> String {
        serde_json::to_string_pretty(&self.presentation_doc(p)).expect("serializable")
    }

    pub fn presentation_from_json(&self, text: &str) -> Result<Presentation> {
        self.presentation_from_doc(&serde_json::from_str(text)?)
    }

    fn generator_line(&self, g: &Generator) -> String {
        format!(
            "{} : {} -> {} {} [{}] {}",
            g.id,
            self.render_set(g.source),
            self.render_set(g.target),
            g.kind,
            g.labels.iter().map(|&a| self.atom_name(a)).collect::<Vec<_>>().join(","),
            self.render_positive(&g.element)
        )
    }

    pub fn quiver_text(&self, q: &Quiver) -> String {
        let mut out = String::new();
        writeln!(out, "objects:").unwrap();
        for (i, &x) in q.objects.iter().enumerate() {
            writeln!(out, "  {i} {}", self.render_set(x)).unwrap();
        }
        writeln!(out, "generators:").unwrap();
        for g in &q.generators {
            writeln!(out, "  {}", self.generator_line(g)).unwrap();
        }
        out
    }

    pub fn presentation_text(&self, p: &Presentation) -> String {
        let mut out = self.quiver_text(&p.quiver);
        writeln!(out, "relations:").unwrap();
        let ids = |v: &[usize]| v.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ");
        for r in &p.relations {
            writeln!(
                out,
                "  type {} at {} -> {}: {} = {}",
                r.kind.number(),
                self.render_set(r.source),
                self.render_set(r.target),
                ids(&r.left),
                ids(&r.right)
            )
            .unwrap();
        }
        out
    }

    /// Line format:
    ///
    /// ```text
    /// object 0 = {}
    /// generator 0 : 0 -> 0 kind nu labels s element s
    /// relation 3 : 0 1 0 = 1 0 1
    /// ```
    pub fn presentation_rewriting(&self, p: &Presentation) -> String {
        let doc = self.presentation_doc(p);
        let mut out = String::new();
        for (i, names) in doc.objects.iter().enumerate() {
            writeln!(out, "object {i} = {{{}}}", names.join(",")).unwrap();
        }
        for g in &doc.generators {
            writeln!(
                out,
                "generator {} : {} -> {} kind {} labels {} element {}",
                g.id,
                g.source,
                g.target,
                g.kind,
                g.labels.join(","),
                g.element.join(" ")
            )
            .unwrap();
        }
        let ids = |v: &[usize]| v.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ");
        for r in &doc.relations {
            writeln!(out, "relation {} : {} = {}", r.kind, ids(&r.left), ids(&r.right)).unwrap();
        }
        out
    }

    /// Parse the line format back. Relation endpoints are recovered from
    /// the generators.
    pub fn presentation_from_rewriting(&self, text: &str) -> Result<Presentation> {
        let bad = |line: &str| Error::Parse(format!("malformed line `{line}`"));
        let num = |s: &str, line: &str| s.parse::<usize>().map_err(|_| bad(line));
        let mut doc = PresentationDoc { objects: Vec::new(), generators: Vec::new(), relations: Vec::new() };
        let mut rels: Vec<(u8, Vec<usize>, Vec<usize>)> = Vec::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            let (head, rest) = line.split_once(' ').ok_or_else(|| bad(line))?;
            match head {
                "object" => {
                    let (_, set) = rest.split_once('=').ok_or_else(|| bad(line))?;
                    let inner = set.trim().strip_prefix('{').and_then(|s| s.strip_suffix('}')).ok_or_else(|| bad(line))?;
                    doc.objects.push(
                        inner.split(',').map(str::trim).filter(|s| !s.is_empty()).map(String::from).collect(),
                    );
                }
                "generator" => {
                    let t: Vec<&str> = rest.split_whitespace().collect();
                    if t.len() < 10 || t[1] != ":" || t[3] != "->" || t[5] != "kind" || t[7] != "labels" || t[9] != "element" {
                        return Err(bad(line));
                    }
                    let kind = match t[6] {
                        "tau" => NuKind::Tau,
                        "nu" => NuKind::Nu,
                        _ => return Err(bad(line)),
                    };
                    doc.generators.push(GeneratorDoc {
                        id: num(t[0], line)?,
                        source: num(t[2], line)?,
                        target: num(t[4], line)?,
                        labels: t[8].split(',').map(String::from).collect(),
                        element: t[10..].iter().map(|s| s.to_string()).collect(),
                        kind,
                    });
                }
                "relation" => {
                    let (k, sides) = rest.split_once(':').ok_or_else(|| bad(line))?;
                    let (l, r) = sides.split_once('=').ok_or_else(|| bad(line))?;
                    let parse = |s: &str| s.split_whitespace().map(|x| num(x, line)).collect::<Result<Vec<_>>>();
                    let kind = k.trim().parse::<u8>().map_err(|_| bad(line))?;
                    rels.push((kind, parse(l)?, parse(r)?));
                }
                _ => return Err(bad(line)),
            }
        }
        for (kind, left, right) in rels {
            let first = *left.first().ok_or_else(|| Error::Parse("empty relation side".into()))?;
            let last = *left.last().unwrap();
            let gen = |i: usize| doc.generators.get(i).ok_or_else(|| Error::Parse(format!("unknown generator {i}")));
            let (source, target) = (gen(first)?.source, gen(last)?.target);
            doc.relations.push(RelationDoc { kind, source, target, left, right });
        }
        self.presentation_from_doc(&doc)
    }
}

#[cfg(test)]
mod tests {
    use crate::bundled;

    #[test]
    fn json_round_trip() {
        for sys in [bundled::b3(), bundled::b4(), bundled::square_central()] {
            let p = sys.presentation().unwrap();
            let back = sys.presentation_from_json(&sys.presentation_json(&p)).unwrap();
            assert_eq!(back, p);
        }
    }

    #[test]
    fn rewriting_round_trip() {
        let sys = bundled::b4();
        let p = sys.presentation().unwrap();
        let back = sys.presentation_from_rewriting(&sys.presentation_rewriting(&p)).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn text_lists_everything() {
        let sys = bundled::b3();
        let p = sys.presentation().unwrap();
        let text = sys.presentation_text(&p);
        assert_eq!(text.lines().filter(|l| l.contains(" -> ") && l.contains('[')).count(), 7);
        assert_eq!(text.lines().filter(|l| l.trim_start().starts_with("type")).count(), 3);
    }
}
