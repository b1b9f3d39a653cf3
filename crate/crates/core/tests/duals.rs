mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::{bfs, deep_faces, face_vertices, oracle_gallery, patch, violator_b, violator_c, violator_d};
use smallcancel::duals::{
    build_nerve, check_k_large, check_quadric_conditions, check_systolic_links, face_label, quadrize, vertex_label,
};
use smallcancel::flats::GalleryGraph;
use smallcancel::generators::Family;

#[test]
fn nerve_facets_are_vertex_stars() {
    for family in [Family::Hexagonal, Family::Square, Family::Triangular] {
        let x = patch(family, 3);
        let nerve = build_nerve(&x).unwrap();
        let stars: BTreeSet<BTreeSet<String>> = (0..x.vertex_count())
            .map(|v| {
                (0..x.face_count())
                    .filter(|&f| face_vertices(&x, f).contains(&v))
                    .map(|f| x.face_id(f).to_string())
                    .collect::<BTreeSet<_>>()
            })
            .collect();
        let maximal: BTreeSet<BTreeSet<String>> = stars
            .iter()
            .filter(|s| !stars.iter().any(|t| t != *s && s.is_subset(t)))
            .cloned()
            .collect();
        let facets: BTreeSet<BTreeSet<String>> = nerve
            .facets()
            .iter()
            .map(|s| s.iter().map(|&v| nerve.vertices()[v].clone()).collect())
            .collect();
        assert_eq!(facets, maximal, "{}", family.name());
    }
}

#[test]
fn hexagonal_nerve_is_systolic() {
    let x = patch(Family::Hexagonal, 4);
    let nerve = build_nerve(&x).unwrap();
    assert!(check_k_large(&nerve, 4).is_holds());
    let r = check_systolic_links(&nerve);
    assert!(r.is_holds(), "{:?}", r.witnesses);
}

#[test]
fn square_nerve_has_short_link_cycles() {
    let x = patch(Family::Square, 3);
    let r = check_systolic_links(&build_nerve(&x).unwrap());
    assert!(r.is_violated());
}

#[test]
fn quadrization_counts() {
    let x = patch(Family::Square, 2);
    let y = quadrize(&x).unwrap();
    assert_eq!(y.vertices().len(), x.vertex_count() + x.face_count());
    let incidences: usize = (0..x.face_count()).map(|f| face_vertices(&x, f).len()).sum();
    assert_eq!(y.edges().len(), incidences);
    let mut pairs = 0;
    for f in 0..x.face_count() {
        for g in f + 1..x.face_count() {
            let k = face_vertices(&x, f).intersection(&face_vertices(&x, g)).count();
            pairs += k * k.saturating_sub(1) / 2;
        }
    }
    assert_eq!(y.squares().len(), pairs);
}

#[test]
fn quadric_conditions_on_patches() {
    for family in [Family::Square, Family::PaperExample] {
        let r = check_quadric_conditions(&quadrize(&patch(family, 3)).unwrap());
        assert!(r.is_holds(), "{}: {:?}", family.name(), r.witnesses);
    }
}

#[test]
fn violators_carry_their_labels() {
    for (label, y) in [("(B)", violator_b()), ("(C)", violator_c()), ("(D)", violator_d())] {
        let r = check_quadric_conditions(&y);
        assert!(r.is_violated());
        assert!(
            r.witnesses.iter().any(|w| w.starts_with(label)),
            "{label}: {:?}",
            r.witnesses
        );
    }
}

#[test]
fn nerve_distance_is_gallery_distance() {
    let x = patch(Family::Hexagonal, 4);
    let nerve = build_nerve(&x).unwrap();
    let mut adj: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
    for s in nerve.facets() {
        for &a in s {
            for &b in s {
                if a != b {
                    adj.entry(nerve.vertices()[a].clone())
                        .or_default()
                        .insert(nerve.vertices()[b].clone());
                }
            }
        }
    }
    let deep = deep_faces(&x, 2);
    let all: BTreeSet<usize> = (0..x.face_count()).collect();
    let skeleton = nerve.skeleton();
    let whole = GalleryGraph::whole(&x);
    for &f in &deep {
        let gallery = oracle_gallery(&x, &all, f);
        let dual = bfs(&adj, x.face_id(f));
        let lib_dual = skeleton.distances_from(skeleton.node(x.face_id(f)).unwrap());
        let lib_gallery = whole.distances_from(f);
        for &g in &deep {
            assert_eq!(dual[x.face_id(g)], gallery[&g]);
            assert_eq!(lib_dual[skeleton.node(x.face_id(g)).unwrap()], Some(gallery[&g]));
            assert_eq!(lib_gallery[&g], gallery[&g]);
        }
    }
}

#[test]
fn quadrization_distance_is_twice_gallery_distance() {
    for family in [Family::Square, Family::PaperExample] {
        let x = patch(family, 4);
        let y = quadrize(&x).unwrap();
        let mut adj: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
        for f in 0..x.face_count() {
            for v in face_vertices(&x, f) {
                let (a, b) = (face_label(x.face_id(f)), vertex_label(x.vertex_id(v)));
                adj.entry(a.clone()).or_default().insert(b.clone());
                adj.entry(b).or_default().insert(a);
            }
        }
        assert_eq!(adj.values().map(BTreeSet::len).sum::<usize>(), 2 * y.edges().len());
        let deep = deep_faces(&x, 2);
        let all: BTreeSet<usize> = (0..x.face_count()).collect();
        let skeleton = y.skeleton();
        for &f in &deep {
            let gallery = oracle_gallery(&x, &all, f);
            let dual = bfs(&adj, &face_label(x.face_id(f)));
            let lib = skeleton.distances_from(skeleton.node(&face_label(x.face_id(f))).unwrap());
            for &g in &deep {
                let label = face_label(x.face_id(g));
                assert_eq!(dual[&label], 2 * gallery[&g], "{}", family.name());
                assert_eq!(lib[skeleton.node(&label).unwrap()], Some(dual[&label]));
            }
        }
    }
}
