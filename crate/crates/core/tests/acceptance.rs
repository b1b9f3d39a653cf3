mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{all_families, arc, oracle_pieces, patch, uncollapsed, violator_b, violator_c, violator_d};
use smallcancel::cancellation::{
    check_condition_c, check_condition_t, check_helly, check_piece_length_bound, check_strong_helly, enumerate_pieces,
    pairwise_intersecting_tuples, HellyMode,
};
use smallcancel::complex::Subcomplex;
use smallcancel::duals::{
    build_nerve, check_k_large, check_quadric_conditions, check_systolic_links, face_label, quadrize,
};
use smallcancel::flats::{
    check_dual_flat, check_flat_c3t6, check_flat_plane_c6, check_quasi_flat_plane, numbering, search_c6_certificates,
    square_quadrization_coordinates, translate_subcomplex, FlatCertificate, GalleryGraph, Interior, LatticePattern,
    NumberingRule,
};
use smallcancel::generators::{face_coordinates, quotient_by_lattice, Family};
use smallcancel::io::{load_complex, serialize_complex};
use smallcancel::{CheckReport, Error, TwoComplex, Verdict};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn expect(x: &TwoComplex, name: &str, report: &CheckReport, want: Verdict) -> Result<(), String> {
    ensure(report.verdict == want, || {
        format!("{} {name}: got {}, expected {want}", x.name(), report.verdict)
    })?;
    well_formed(x, report)
}

/// Witnesses name an existing cell before the first colon.
fn well_formed(x: &TwoComplex, report: &CheckReport) -> Result<(), String> {
    ensure(report.is_holds() == report.witnesses.is_empty(), || {
        "verdict and witnesses disagree".into()
    })?;
    for w in &report.witnesses {
        let head = w.split(':').next().unwrap_or("");
        let ok = match head.split_once(' ') {
            Some(("face", id)) => x.face(id).is_ok(),
            Some(("vertex", id)) => x.vertex(id).is_ok(),
            Some(("edge", id)) => x.edge(id).is_ok(),
            _ => false,
        };
        ensure(ok, || format!("malformed witness `{w}`"))?;
    }
    Ok(())
}

fn criterion_1() -> Outcome {
    let tri = patch(Family::Triangular, 4);
    expect(&tri, "C(3)", &check_condition_c(&tri, 3), Verdict::Holds)?;
    expect(&tri, "T(6)", &check_condition_t(&tri, 6), Verdict::Holds)?;
    expect(&tri, "C(4)", &check_condition_c(&tri, 4), Verdict::Violated)?;
    for family in [Family::Square, Family::PaperExample] {
        let x = patch(family, 4);
        expect(&x, "C(4)", &check_condition_c(&x, 4), Verdict::Holds)?;
        expect(&x, "T(4)", &check_condition_t(&x, 4), Verdict::Holds)?;
        expect(&x, "T(5)", &check_condition_t(&x, 5), Verdict::Violated)?;
    }
    let hex = patch(Family::Hexagonal, 4);
    expect(&hex, "C(6)", &check_condition_c(&hex, 6), Verdict::Holds)?;
    Ok("9 verdicts as expected".into())
}

fn criterion_2() -> Outcome {
    let mut passing = Vec::new();
    let mut complexes: Vec<TwoComplex> = all_families().into_iter().map(|f| patch(f, 4)).collect();
    complexes.push(quotient_by_lattice(Family::Triangular, (4, 4)).map_err(|e| e.to_string())?);
    for x in &complexes {
        if !check_condition_t(x, 6).is_holds() {
            continue;
        }
        passing.push(x.name().to_string());
        let pieces = enumerate_pieces(x);
        ensure(pieces.maximal.iter().all(|p| p.len() == 1), || {
            format!("{}: long maximal piece", x.name())
        })?;
        ensure(check_piece_length_bound(x, 6).is_holds(), || {
            format!("{}: piece-length check", x.name())
        })?;
        let oracle = oracle_pieces(x);
        ensure(oracle.keys().all(|p| p.len() == 1), || {
            format!("{}: oracle finds a long piece", x.name())
        })?;
        ensure(oracle.len() == pieces.piece_count(), || {
            format!("{}: piece count differs", x.name())
        })?;
        for f in 0..x.face_count() {
            let n = x.word(f).len();
            for start in 0..n {
                for len in 1..n {
                    let path = arc(x, f, start, len);
                    let rev: Vec<_> = path.iter().rev().map(|l| l.inverse()).collect();
                    let want = oracle.contains_key(&path) || oracle.contains_key(&rev);
                    ensure(pieces.is_piece(&path) == want, || {
                        format!("{}: oracle disagrees", x.name())
                    })?;
                }
            }
        }
    }
    ensure(!passing.is_empty(), || "no T(6) patch".into())?;
    Ok(format!("T(6) patches: {}", passing.join(", ")))
}

fn criterion_3() -> Outcome {
    let suites = [
        (Family::Hexagonal, HellyMode::C6),
        (Family::Square, HellyMode::C4T4),
        (Family::PaperExample, HellyMode::C4T4),
        (uncollapsed(), HellyMode::C4T4),
    ];
    let mut tuples = 0;
    for (family, mode) in suites {
        let x = patch(family, 3);
        tuples += pairwise_intersecting_tuples(&x, 4).len();
        expect(&x, "Helly", &check_helly(&x, mode), Verdict::Holds)?;
        expect(&x, "strong Helly", &check_strong_helly(&x, mode), Verdict::Holds)?;
    }
    let hex = patch(Family::Hexagonal, 3);
    let triples: Vec<Vec<usize>> = pairwise_intersecting_tuples(&hex, 3)
        .into_iter()
        .filter(|t| t.len() == 3)
        .collect();
    ensure(!triples.is_empty(), || "no triples".into())?;
    for t in &triples {
        ensure(hex.intersection(t).is_single_vertex(), || {
            format!("triple {t:?} does not meet in one vertex")
        })?;
    }
    Ok(format!("{tuples} tuples scanned, {} hexagonal triples", triples.len()))
}

fn criterion_4() -> Outcome {
    let hex = patch(Family::Hexagonal, 4);
    let nerve = build_nerve(&hex).map_err(|e| e.to_string())?;
    ensure(check_k_large(&nerve, 4).is_holds(), || "nerve is not flag".into())?;
    let links = check_systolic_links(&nerve);
    ensure(links.is_holds(), || format!("links: {:?}", links.witnesses))?;
    for family in [Family::Square, Family::PaperExample] {
        let y = quadrize(&patch(family, 3)).map_err(|e| e.to_string())?;
        let r = check_quadric_conditions(&y);
        ensure(r.is_holds(), || format!("{}: {:?}", family.name(), r.witnesses))?;
    }
    for (label, y) in [("(B)", violator_b()), ("(C)", violator_c()), ("(D)", violator_d())] {
        let r = check_quadric_conditions(&y);
        ensure(r.is_violated(), || format!("{label} violator passes"))?;
        ensure(r.witnesses.iter().all(|w| w.starts_with(label)), || {
            format!("{label}: {:?}", r.witnesses)
        })?;
    }
    Ok(format!("nerve f-vector {:?}", nerve.f_vector()))
}

fn criterion_5() -> Outcome {
    let mut pairs = 0;
    for (family, factor) in [(Family::Hexagonal, 1), (Family::Square, 2), (Family::PaperExample, 2)] {
        let x = patch(family, 4);
        let (g, label): (_, fn(&str) -> String) = if factor == 1 {
            (build_nerve(&x).map_err(|e| e.to_string())?.skeleton(), |id| {
                id.to_string()
            })
        } else {
            (quadrize(&x).map_err(|e| e.to_string())?.skeleton(), face_label)
        };
        let whole = Subcomplex::whole(&x);
        let faces = Interior::of(&whole)
            .interior_faces(&whole, 2)
            .map_err(|e| e.to_string())?;
        let gallery = GalleryGraph::of(&whole);
        for &a in &faces {
            let dg = gallery.distances_from(a);
            let dd = g.distances_from(g.node(&label(x.face_id(a))).map_err(|e| e.to_string())?);
            for &b in &faces {
                let dual = dd[g.node(&label(x.face_id(b))).map_err(|e| e.to_string())?];
                ensure(dual == Some(factor * dg[&b]), || {
                    format!(
                        "{}: {} {} dual {dual:?} gallery {}",
                        family.name(),
                        x.face_id(a),
                        x.face_id(b),
                        dg[&b]
                    )
                })?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs, zero mismatches"))
}

fn criterion_6() -> Outcome {
    let cases = [
        ("c6", Family::Hexagonal, Verdict::Holds),
        ("c6", Family::Triangular, Verdict::Violated),
        ("c6", Family::PaperExample, Verdict::Violated),
        ("quasi", Family::PaperExample, Verdict::Holds),
        ("quasi", Family::Square, Verdict::Holds),
        ("quasi", Family::Hexagonal, Verdict::Violated),
        ("c3t6", Family::Triangular, Verdict::Holds),
    ];
    for (kind, family, want) in cases {
        let x = patch(family, 4);
        let e = Subcomplex::whole(&x);
        let check = match kind {
            "c6" => check_flat_plane_c6(&x, &e, 2),
            "quasi" => check_quasi_flat_plane(&x, &e, 2),
            _ => check_flat_c3t6(&x, &e, 2),
        }
        .map_err(|e| e.to_string())?;
        ensure(check.report.verdict == want, || {
            format!(
                "{kind} on {}: got {}, expected {want}",
                family.name(),
                check.report.verdict
            )
        })?;
        ensure(check.certificate.is_some() == (want == Verdict::Holds), || {
            "certificate mismatch".into()
        })?;
    }
    Ok(format!("{} verdicts as expected", cases.len()))
}

fn criterion_7() -> Outcome {
    let x = patch(Family::PaperExample, 4);
    let found = search_c6_certificates(&x, 2).map_err(|e| e.to_string())?;
    ensure(!found.is_empty(), || "no candidates searched".into())?;
    ensure(found.iter().all(|(_, c)| !c.holds()), || {
        "a candidate passes the C(6) plane criteria".into()
    })?;
    let y = quadrize(&x).map_err(|e| e.to_string())?;
    let r = check_dual_flat(
        &y.skeleton(),
        &square_quadrization_coordinates(&x),
        LatticePattern::Square,
        2,
    )
    .map_err(|e| e.to_string())?;
    ensure(r.is_holds(), || format!("dual flat: {:?}", r.witnesses))?;
    Ok(format!(
        "{} candidates rejected, quadrization is a square flat",
        found.len()
    ))
}

/// Valid seeds around the central faces, found by trying neighbour triples.
fn seeds(x: &TwoComplex, rule: NumberingRule, want: usize) -> Vec<[String; 3]> {
    let e = Subcomplex::whole(x);
    let interior = Interior::of(&e);
    let mut centres: Vec<usize> = (0..x.face_count()).filter(|&f| interior.is_interior(f, 2)).collect();
    centres.sort_by_key(|&f| std::cmp::Reverse(interior.depth(f)));
    let mut out = Vec::new();
    for c0 in centres {
        for c1 in e.neighbors(c0) {
            for c2 in e.neighbors(c1) {
                let seed = [x.face_id(c0), x.face_id(c1), x.face_id(c2)];
                if numbering(x, &e, rule, seed, 4).is_ok() {
                    out.push(seed.map(String::from));
                    if out.len() == want {
                        return out;
                    }
                }
            }
        }
    }
    out
}

fn criterion_8() -> Outcome {
    let cases = [
        (Family::Hexagonal, NumberingRule::C6),
        (Family::Square, NumberingRule::Quasi),
        (uncollapsed(), NumberingRule::Quasi),
        (Family::PaperExample, NumberingRule::Quasi),
    ];
    let mut runs = 0;
    for (family, rule) in cases {
        let x = patch(family, 4);
        let e = Subcomplex::whole(&x);
        let seeds = seeds(&x, rule, 5);
        ensure(seeds.len() == 5, || {
            format!("{}: only {} valid seeds", family.name(), seeds.len())
        })?;
        for seed in &seeds {
            let seed = [seed[0].as_str(), seed[1].as_str(), seed[2].as_str()];
            let once = |_: ()| -> Result<String, String> {
                let n = numbering(&x, &e, rule, seed, 30).map_err(|e| format!("{}: {e}", family.name()))?;
                Ok(serde_json::to_string(&n).unwrap())
            };
            let (a, b) = (once(())?, once(())?);
            ensure(a == b, || format!("{}: runs differ for {seed:?}", family.name()))?;
            runs += 1;
        }
    }
    let x = patch(Family::PaperExample, 4);
    let y = patch(uncollapsed(), 4);
    for seed in seeds(&x, NumberingRule::Quasi, 5) {
        let seed = [seed[0].as_str(), seed[1].as_str(), seed[2].as_str()];
        let phi = numbering(&x, &Subcomplex::whole(&x), NumberingRule::Quasi, seed, 25).map_err(|e| e.to_string())?;
        let psi = numbering(&y, &Subcomplex::whole(&y), NumberingRule::Quasi, seed, 25).map_err(|e| e.to_string())?;
        ensure(phi.cells.len() == 25 && psi.cells.len() == 25, || {
            format!("{seed:?}: short numbering")
        })?;
        for i in 0..25 {
            for j in 0..25 {
                let meets = |z: &TwoComplex, cells: &[String]| {
                    !z.intersection(&[z.face(&cells[i]).unwrap(), z.face(&cells[j]).unwrap()])
                        .is_empty()
                };
                ensure(meets(&x, &phi.cells) == meets(&y, &psi.cells), || {
                    format!("{seed:?}: cells {i} and {j} differ")
                })?;
            }
        }
    }
    Ok(format!("{runs} seeds reproduced, intersection patterns agree"))
}

fn certificate(x: &TwoComplex, half: i64, margin: usize) -> Result<FlatCertificate, String> {
    let ids: Vec<String> = x
        .faces()
        .iter()
        .filter(|f| face_coordinates(&f.id).is_some_and(|(_, i, j)| i.abs() <= half && j.abs() <= half))
        .map(|f| f.id.clone())
        .collect();
    let e = Subcomplex::from_face_ids(x, &ids).map_err(|e| e.to_string())?;
    let check = check_quasi_flat_plane(x, &e, margin).map_err(|e| e.to_string())?;
    check
        .certificate
        .ok_or_else(|| format!("{}: {:?}", x.name(), check.report.witnesses))
}

fn criterion_9() -> Outcome {
    for (family, shifts) in [
        (Family::PaperExample, [(2, 0), (0, 2)]),
        (Family::Square, [(1, 0), (0, 1)]),
    ] {
        let x = patch(family, 5);
        let cert = certificate(&x, 3, 2)?;
        for shift in shifts {
            let moved = translate_subcomplex(&x, &cert, shift).map_err(|e| e.to_string())?;
            ensure(moved.holds(), || {
                format!("{} {shift:?}: {:?}", family.name(), moved.report.witnesses)
            })?;
        }
        let same = translate_subcomplex(&x, &cert, (0, 0)).map_err(|e| e.to_string())?;
        ensure(same.certificate.as_ref() == Some(&cert), || {
            "zero shift changes the certificate".into()
        })?;
        let out = translate_subcomplex(&x, &cert, (6, 0));
        ensure(matches!(out, Err(Error::OutOfPatch(_))), || {
            "shift past the patch accepted".into()
        })?;
    }
    Ok("4 shifted certificates re-verify".into())
}

fn criterion_10() -> Outcome {
    let mut complexes = Vec::new();
    for family in all_families() {
        for r in 1..=4 {
            complexes.push(patch(family, r));
        }
    }
    let mut tori = 0;
    for (family, periods) in [
        (Family::Square, (3, 3)),
        (Family::Square, (4, 5)),
        (Family::Triangular, (3, 3)),
        (Family::Triangular, (5, 4)),
        (Family::PaperExample, (4, 4)),
        (Family::PaperExample, (6, 4)),
    ] {
        let x = quotient_by_lattice(family, periods).map_err(|e| e.to_string())?;
        ensure(x.euler_characteristic() == 0, || {
            format!("{}: chi = {}", x.name(), x.euler_characteristic())
        })?;
        complexes.push(x);
        tori += 1;
    }
    for x in &complexes {
        let text = serialize_complex(x);
        let again = serialize_complex(&load_complex(&text).map_err(|e| e.to_string())?);
        ensure(again == text, || format!("{}: round trip differs", x.name()))?;
    }
    Ok(format!(
        "{} complexes round-trip, {tori} tori with chi = 0",
        complexes.len()
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("small cancellation verdicts", criterion_1),
        ("pieces have length one under T(6)", criterion_2),
        ("Helly-type lemmas", criterion_3),
        ("systolic and quadric duals", criterion_4),
        ("dual distances match gallery distances", criterion_5),
        ("flat detection matrix", criterion_6),
        ("no flat plane in the C(4)-T(4) example", criterion_7),
        ("numbering", criterion_8),
        ("translated certificates", criterion_9),
        ("serialization round trip and tori", criterion_10),
    ];
    let limit = Duration::from_secs(60);
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = started.elapsed();
        let outcome = match outcome {
            Ok(_) if elapsed > limit => Err(format!("took {elapsed:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({} ms)", i + 1, elapsed.as_millis()),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} ({} ms)", i + 1, elapsed.as_millis());
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
