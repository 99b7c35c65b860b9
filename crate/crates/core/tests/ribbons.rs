//! ν-functions, the ribbon quiver, its presentation and the bounded
//! path-congruence checks.

use std::collections::BTreeSet;

use garside_core::rewrite::{close, enumerate_paths, verify_presentation};
use garside_core::{bundled, AtomSet, GarsideSystem, NuKind, NuVariant, Positive, Side};

fn systems() -> Vec<(&'static str, GarsideSystem)> {
    ["b3", "b4", "square_central", "delta_root", "rank1"]
        .into_iter()
        .map(|n| (n, bundled::by_name(n).unwrap()))
        .collect()
}

#[test]
fn nu_values_sit_between_parabolic_deltas() {
    for name in ["b3", "b4"] {
        let s = bundled::by_name(name).unwrap();
        for x in s.parabolics() {
            let dx = s.delta_of(x).unwrap();
            for a in s.atoms().filter(|&a| !x.contains(a)) {
                let dxs = s.delta_of(x.with(a)).unwrap();
                let plain = s.nu_element(x, a, NuVariant::Plain).unwrap();
                let tilde = s.nu_element(x, a, NuVariant::Tilde).unwrap();
                assert_eq!(s.multiply(&dx, &plain), dxs, "{name}");
                assert_eq!(s.multiply(&tilde, &dx), dxs, "{name}");
            }
        }
    }
}

#[test]
fn nu_atoms_conjugate_source_onto_target() {
    for (name, s) in systems() {
        for x in s.parabolics() {
            for variant in [NuVariant::Plain, NuVariant::Tilde] {
                for n in s.classify_variant(x, variant).unwrap() {
                    let g = s.to_group(&n.element);
                    assert_eq!(s.conjugate_atomset(&g, n.source), Some(n.target), "{name}");
                    assert_eq!(n.kind == NuKind::Tau, s.contains(n.source, &n.element).unwrap(), "{name}");
                    if n.kind == NuKind::Tau {
                        assert_eq!(n.source, n.target);
                    }
                }
            }
        }
    }
}

#[test]
fn tau_atoms_are_the_local_quasi_central_closures() {
    for (name, s) in systems() {
        for x in s.parabolics() {
            for a in x.iter() {
                let n = s.nu(x, a, NuVariant::Plain).unwrap();
                assert_eq!(n.kind, NuKind::Tau);
                assert_eq!(n.element, s.tau(&s.atom_positive(a), x).unwrap(), "{name} at {}", s.render_set(x));
                assert!(s.is_quasi_central(&n.element, x));
            }
        }
    }
}

#[test]
fn tilde_edges_are_plain_edges() {
    for (name, s) in systems() {
        let mut plain = BTreeSet::new();
        let mut tilde = BTreeSet::new();
        for x in s.parabolics() {
            for n in s.classify_variant(x, NuVariant::Plain).unwrap() {
                plain.insert((n.source, n.element.clone(), n.target));
            }
            for n in s.classify_variant(x, NuVariant::Tilde).unwrap() {
                tilde.insert((n.source, n.element.clone(), n.target));
            }
        }
        assert_eq!(plain, tilde, "{name}");
    }
}

#[test]
fn quiver_is_deduplicated_and_deterministic() {
    for (name, s) in systems() {
        let q = s.atom_quiver().unwrap();
        assert_eq!(q.objects, s.parabolics());
        let keys: BTreeSet<_> = q.generators.iter().map(|g| (g.source, g.element.clone())).collect();
        assert_eq!(keys.len(), q.generators.len(), "{name}");
        assert!(q.generators.iter().enumerate().all(|(i, g)| g.id == i));
        assert_eq!(s.atom_quiver().unwrap(), q);
    }
}

#[test]
fn relations_hold_and_share_endpoints() {
    for (name, s) in systems() {
        let p = s.presentation().unwrap();
        for r in &p.relations {
            assert_eq!(p.quiver.path_target(r.source, &r.left), Some(r.target), "{name}");
            assert_eq!(p.quiver.path_target(r.source, &r.right), Some(r.target), "{name}");
            assert_eq!(p.quiver.evaluate(&s, &r.left), p.quiver.evaluate(&s, &r.right), "{name}");
            assert_ne!(r.left, r.right);
        }
        assert_eq!(s.presentation().unwrap(), p);
    }
}

#[test]
fn join_paths_alternate_in_coxeter_systems() {
    for name in ["b3", "b4"] {
        let s = bundled::by_name(name).unwrap();
        let q = s.atom_quiver().unwrap();
        for x in s.parabolics() {
            for a in s.atoms().filter(|&a| !x.contains(a)) {
                for b in s.atoms().filter(|&b| b > a && !x.contains(b)) {
                    let jp = s.ribbon_join_paths(&q, x, a, b).unwrap();
                    assert_eq!(jp.paths.len(), 2, "{name}");
                    assert_eq!(jp.paths[0].len(), jp.paths[1].len());
                    for path in &jp.paths {
                        assert_eq!(q.evaluate(&s, path), jp.element);
                        assert!(path.iter().all(|&id| q.generator(id).kind == NuKind::Nu));
                    }
                    let na = s.nu_element(x, a, NuVariant::Plain).unwrap();
                    let nb = s.nu_element(x, b, NuVariant::Plain).unwrap();
                    assert_eq!(jp.element, s.join(&na, &nb, Side::Left));
                }
            }
        }
    }
}

#[test]
fn b3_braid_relation_from_the_empty_set() {
    let s = bundled::b3();
    let q = s.atom_quiver().unwrap();
    let (a, b) = (s.atom_by_name("s").unwrap(), s.atom_by_name("t").unwrap());
    let jp = s.ribbon_join_paths(&q, AtomSet::EMPTY, a, b).unwrap();
    let words: Vec<String> = jp.paths.iter().map(|p| s.render_positive_word(&q.evaluate(&s, &p[..1]))).collect();
    assert_eq!(words, vec!["s", "t"]);
    assert!(jp.paths.iter().all(|p| p.len() == 3));
}

#[test]
fn qz_nu_split_is_unique_on_short_ribbons() {
    for name in ["b3", "b4", "square_central", "delta_root"] {
        let s = bundled::by_name(name).unwrap();
        let q = s.atom_quiver().unwrap();
        for x in s.parabolics() {
            for p in s.positives_up_to(5) {
                if s.ribbon_target(&p, x).is_none() {
                    continue;
                }
                let (z, v) = s.factor_qz_nu(&q, &p, x).unwrap();
                assert!(s.is_quasi_central(&z, x));
                assert!(s.is_nu_path(&q, x, &v));
                assert_eq!(s.multiply(&z, &v), p);
                assert_eq!(s.count_qz_nu_splits(&q, &p, x), 1, "{name} {}", s.render_positive(&p));
            }
        }
    }
}

#[test]
fn nu_ribbons_have_trivial_parabolic_part() {
    let s = bundled::b4();
    let q = s.atom_quiver().unwrap();
    for g in &q.generators {
        let el = s.to_group(&g.element);
        let d = s.conj_decompose(&q, &el, g.source).unwrap().unwrap();
        assert_eq!(d.a.is_identity(), g.kind == NuKind::Nu);
        assert_eq!(s.is_nu_ribbon(&q, &el, g.source).unwrap(), g.kind == NuKind::Nu);
    }
    // s2 maps no standard parabolic containing s1 onto another.
    let x = s.parse_atom_set("s1").unwrap();
    assert!(s.conj_decompose(&q, &s.parse_group("s2").unwrap(), x).unwrap().is_none());
    // inverses of ribbons are ribbons the other way
    let r = s.parse_group("s2 s1").unwrap();
    let back = s.g_invert(&r);
    let y = s.parse_atom_set("s2").unwrap();
    let d = s.conj_decompose(&q, &back, y).unwrap().unwrap();
    assert!(d.a.is_identity());
    assert_eq!(d.ribbon.target, x);
}

#[test]
fn closure_is_monotone_and_respects_endpoints() {
    let s = bundled::b4();
    let p = s.presentation().unwrap();
    let small = close(&p.quiver, &p.relations, 3);
    let large = close(&p.quiver, &p.relations, 4);
    for a in &small.paths {
        for b in &small.paths {
            if small.equivalent(a, b) {
                assert!(large.equivalent(a, b));
                assert_eq!(a.source, b.source);
                assert_eq!(p.quiver.path_target(a.source, &a.edges), p.quiver.path_target(b.source, &b.edges));
            }
        }
    }
    let fewer = close(&p.quiver, &p.relations[..p.relations.len() / 2], 4);
    for a in &fewer.paths {
        for b in &fewer.paths {
            if fewer.equivalent(a, b) {
                assert!(large.equivalent(a, b));
            }
        }
    }
}

#[test]
fn presentations_verify_on_table_systems() {
    for name in ["square_central", "delta_root", "rank1"] {
        let s = bundled::by_name(name).unwrap();
        let p = s.presentation().unwrap();
        let r = verify_presentation(&s, &p, 5);
        assert!(r.passed(), "{name}: {:?} {:?}", r.soundness.first(), r.completeness.first());
    }
}

#[test]
fn path_counts_from_the_empty_set() {
    let s = bundled::b4();
    let q = s.atom_quiver().unwrap();
    // three loops at the empty set: 1 + 3 + 9 + 27 paths
    assert_eq!(enumerate_paths(&q, AtomSet::EMPTY, 3).len(), 40);
    let values: BTreeSet<Positive> = enumerate_paths(&q, AtomSet::EMPTY, 3)
        .iter()
        .map(|p| q.evaluate(&s, &p.edges))
        .collect();
    assert_eq!(values.len(), s.positives_by_length(3).iter().map(Vec::len).sum::<usize>());
}

#[test]
fn shaker_matrix_at_empty_set_is_the_coxeter_matrix() {
    for name in ["b3", "b4"] {
        let s = bundled::by_name(name).unwrap();
        let q = s.atom_quiver().unwrap();
        let sh = s.shakers(&q, AtomSet::EMPTY).unwrap();
        let cox: Vec<Vec<Option<u32>>> =
            s.coxeter_matrix().unwrap().iter().map(|r| r.iter().map(|&v| Some(v)).collect()).collect();
        assert_eq!(sh.matrix, Some(cox));
        assert_eq!(sh.sh, s.all_atoms());
    }
    let s = bundled::b3();
    let q = s.atom_quiver().unwrap();
    let sh = s.shakers(&q, s.parse_atom_set("s").unwrap()).unwrap();
    assert_eq!(sh.generators.len(), 1);
    assert_eq!(q.generator(sh.generators[0]).element, s.parse_positive("s").unwrap());
}
