//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

mod common;

use std::collections::HashSet;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use trisurf::complex::{
    build_one_vertex_complex, link_graph, validate_gq_link, CellComplex, GqReport,
};
use trisurf::cover::{build_cover_complex, cyclic_triple_cover_with, SheetOrder};
use trisurf::cycles::{
    cycles_via_link, two_cycles_backtrack, two_cycles_bruteforce, two_cycles_kernel, TwoCycle,
    DEFAULT_BRUTE_MAX_FACES,
};
use trisurf::geometry::{
    decompose, geodesic_check, same_cyclic_sequence, shortcut_check, Certifier, RejectReason,
    Verdict, SHORTCUT_MAX_LEN,
};
use trisurf::gf2::{BitChain, DEFAULT_ENUM_CAP};
use trisurf::presentation::{builtin_fixture, published_cover_blocks, Fixture};

use common::{random_presentation, random_thick_presentation, sample_circle, t1};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check, Option<Duration>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn bits(cs: &[TwoCycle]) -> Vec<String> {
    cs.iter().map(TwoCycle::bitstring).collect()
}

fn cover(order: SheetOrder) -> CellComplex {
    build_cover_complex(&cyclic_triple_cover_with(&t1(), order))
}

fn gq_profile(r: &GqReport) -> Result<(), String> {
    let got = (
        r.nodes,
        r.arcs,
        r.regular_degree,
        r.bipartite,
        r.girth,
        r.diameter,
        r.smallest_gq,
    );
    let want = (30, 45, Some(3), true, Some(8), Some(4), true);
    ensure(got == want, || format!("vertex {}: {got:?}", r.vertex))
}

fn criterion_1() -> Check {
    let x = build_one_vertex_complex(&t1());
    let brute = two_cycles_bruteforce(&x, DEFAULT_BRUTE_MAX_FACES).map_err(|e| e.to_string())?;
    let kernel = two_cycles_kernel(&x, DEFAULT_ENUM_CAP).map_err(|e| e.to_string())?;
    let back = two_cycles_backtrack(&x).map_err(|e| e.to_string())?;
    let want = vec!["101101000000011".to_string()];
    for (name, got) in [("brute", &brute), ("kernel", &kernel), ("backtrack", &back)] {
        ensure(bits(got) == want, || format!("{name}: {:?}", bits(got)))?;
        ensure(got[0].len() == 6, || {
            format!("{name}: length {}", got[0].len())
        })?;
    }
    Ok("one 6-cycle 101101000000011 by brute, kernel and backtrack".into())
}

fn criterion_2() -> Check {
    let x = build_one_vertex_complex(&t1());
    let r = validate_gq_link(&link_graph(&x, 0).map_err(|e| e.to_string())?);
    gq_profile(&r)?;
    Ok(format!("{r}"))
}

fn criterion_3() -> Check {
    for order in [SheetOrder::Ascending, SheetOrder::Descending] {
        let y = cover(order);
        let shape = (y.vertex_count(), y.edge_count(), y.face_count());
        ensure(shape == (3, 45, 45), || {
            format!("{order:?}: shape {shape:?}")
        })?;
        ensure(y.edge_multiplicities().iter().all(|&m| m == 3), || {
            format!("{order:?}: multiplicities {:?}", y.edge_multiplicities())
        })?;
        for v in 0..3 {
            gq_profile(&validate_gq_link(
                &link_graph(&y, v).map_err(|e| e.to_string())?,
            ))?;
        }
    }
    Ok("3 vertices, 45 edges, 45 faces, thickness 3, three GQ links (both sheet orders)".into())
}

fn sorted_rows(y: &CellComplex, c: &TwoCycle, relabel: impl Fn(u32) -> u32) -> Vec<[u32; 3]> {
    let mut rows: Vec<[u32; 3]> = c
        .faces()
        .iter()
        .map(|&f| {
            let mut r = y.face_labels(f).map(&relabel);
            r.sort_unstable();
            r
        })
        .collect();
    rows.sort_unstable();
    rows
}

fn swap_code(code: u32) -> u32 {
    let (base, sheet) = ((code - 1) / 3, ((code - 1) % 3 + 1) as u8);
    3 * base + SheetOrder::swap_sheet(sheet) as u32
}

fn criterion_4() -> Check {
    let blocks =
        published_cover_blocks(1).ok_or("no published cover listing for presentation 1")?;
    let mut summary = Vec::new();
    for (order, relabel) in [
        (SheetOrder::Descending, (|c| c) as fn(u32) -> u32),
        (SheetOrder::Ascending, swap_code as fn(u32) -> u32),
    ] {
        let y = cover(order);
        let cycles = two_cycles_kernel(&y, DEFAULT_ENUM_CAP).map_err(|e| e.to_string())?;
        let certifier = Certifier::new(&y).map_err(|e| e.to_string())?;
        let certs = cycles
            .iter()
            .map(|c| certifier.certify(c))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| e.to_string())?;
        let certified: Vec<_> = certs.iter().filter(|c| c.verdict.is_certified()).collect();
        ensure(certified.len() == 3, || {
            format!("{order:?}: {} certified", certified.len())
        })?;

        let mut unmatched: Vec<_> = blocks.iter().collect();
        for cert in &certified {
            ensure(cert.links.iter().all(|l| l.lengths == [8]), || {
                format!(
                    "{order:?}: link lengths {:?}",
                    cert.links.iter().map(|l| &l.lengths).collect::<Vec<_>>()
                )
            })?;
            let rows = sorted_rows(&y, &cert.cycle, relabel);
            let pos = unmatched
                .iter()
                .position(|b| {
                    let mut want: Vec<[u32; 3]> = b
                        .triangles
                        .iter()
                        .map(|r| {
                            let mut r = *r;
                            r.sort_unstable();
                            r
                        })
                        .collect();
                    want.sort_unstable();
                    want == rows
                })
                .ok_or_else(|| {
                    format!("{order:?}: certified face set {rows:?} not among the published blocks")
                })?;
            let block = unmatched.remove(pos);
            for line in &block.link_circles {
                let found = cert.links.iter().any(|l| {
                    l.circle_labels.iter().any(|k| {
                        let k: Vec<u32> = k.iter().map(|&c| relabel(c)).collect();
                        same_cyclic_sequence(&k, line)
                    })
                });
                ensure(found, || format!("{order:?}: link line {line:?} unmatched"))?;
            }
        }
        summary.push(format!("{order:?} 3/{}", certs.len()));
    }
    Ok(format!(
        "certified {} ; blocks and link lines match (ascending after sheet swap 2<->3)",
        summary.join(", ")
    ))
}

fn criterion_5() -> Check {
    let Fixture::Triangles(list) =
        builtin_fixture("G9_surface_chain").map_err(|e| e.to_string())?
    else {
        return Err("G9 fixture is not a triangle list".into());
    };
    ensure(list.rows.len() == 8, || {
        format!("{} triangles", list.rows.len())
    })?;
    let mut counts = std::collections::BTreeMap::<u32, usize>::new();
    for r in &list.rows {
        for &s in r {
            *counts.entry(s).or_default() += 1;
        }
    }
    ensure(counts.values().all(|c| c % 2 == 0), || {
        format!("odd side counts {counts:?}")
    })?;
    let p = list.to_presentation().map_err(|e| e.to_string())?;
    let x = build_one_vertex_complex(&p);
    let all = BitChain::from_indices(x.face_count(), 0..x.face_count());
    ensure(x.boundary(&all).is_zero(), || "boundary is not zero".into())?;
    let link = link_graph(&x, 0).map_err(|e| e.to_string())?;
    let d = decompose(&link, &all).map_err(|e| e.to_string())?;
    let mut lengths = d.lengths.clone();
    lengths.sort_unstable();
    ensure(lengths == [8, 8, 8], || format!("circles {lengths:?}"))?;
    Ok("even side counts, circles [8, 8, 8]".into())
}

fn criterion_6() -> Check {
    let x = build_one_vertex_complex(&t1());
    let cycles = two_cycles_kernel(&x, DEFAULT_ENUM_CAP).map_err(|e| e.to_string())?;
    let cert = Certifier::new(&x)
        .and_then(|c| c.certify(&cycles[0]))
        .map_err(|e| e.to_string())?;
    ensure(
        matches!(
            cert.verdict,
            Verdict::Rejected {
                reason: RejectReason::CircleLengths { .. }
            }
        ),
        || format!("T1 verdict {:?}", cert.verdict),
    )?;
    let link = link_graph(&x, 0).map_err(|e| e.to_string())?;
    let mut rng = StdRng::seed_from_u64(0x5eed_0006);
    let mut sampled = 0;
    for len in [16, 24] {
        for _ in 0..40 {
            let circle =
                sample_circle(&mut rng, &link, len).ok_or(format!("no {len}-circle sampled"))?;
            ensure(!geodesic_check(&link, &circle).is_empty(), || {
                format!("{len}-circle {:?} passes geodesic check", circle.nodes)
            })?;
            ensure(
                !shortcut_check(&link, &circle, SHORTCUT_MAX_LEN).is_empty(),
                || format!("{len}-circle {:?} has no shortcut", circle.nodes),
            )?;
            sampled += 1;
        }
    }
    Ok(format!(
        "T1 rejected (link circles {:?}); {sampled} sampled 16/24-circles all fail",
        cert.links[0].lengths
    ))
}

fn criterion_7() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed_0007);
    let x = build_one_vertex_complex(&t1());
    let brute = two_cycles_bruteforce(&x, DEFAULT_BRUTE_MAX_FACES).map_err(|e| e.to_string())?;
    let kernel = two_cycles_kernel(&x, DEFAULT_ENUM_CAP).map_err(|e| e.to_string())?;
    ensure(brute == kernel, || "T1 brute != kernel".into())?;

    for order in [SheetOrder::Ascending, SheetOrder::Descending] {
        let y = cover(order);
        let kernel = two_cycles_kernel(&y, DEFAULT_ENUM_CAP).map_err(|e| e.to_string())?;
        let back = two_cycles_backtrack(&y).map_err(|e| e.to_string())?;
        ensure(kernel == back, || {
            format!("{order:?} cover: backtrack != kernel")
        })?;
        for v in 0..3 {
            let link = cycles_via_link(&y, v, DEFAULT_ENUM_CAP).map_err(|e| e.to_string())?;
            ensure(link == kernel, || {
                format!("{order:?} cover: link at {v} != kernel")
            })?;
        }
    }

    let mut random = 0;
    for _ in 0..120 {
        let n = rng.gen_range(1..=8);
        let faces = rng.gen_range(1..=20);
        let p = random_presentation(&mut rng, n, faces);
        let x = build_one_vertex_complex(&p);
        let brute =
            two_cycles_bruteforce(&x, DEFAULT_BRUTE_MAX_FACES).map_err(|e| e.to_string())?;
        let kernel = two_cycles_kernel(&x, DEFAULT_ENUM_CAP).map_err(|e| e.to_string())?;
        ensure(brute == kernel, || {
            format!("random complex {:?}: brute != kernel", p.to_text())
        })?;
        random += 1;
    }

    let mut covers = 0;
    for _ in 0..40 {
        let n = rng.gen_range(1..=6);
        let faces = rng.gen_range(1..=6);
        let p = random_presentation(&mut rng, n, faces);
        for order in [SheetOrder::Ascending, SheetOrder::Descending] {
            let y = build_cover_complex(&cyclic_triple_cover_with(&p, order));
            let kernel = two_cycles_kernel(&y, DEFAULT_ENUM_CAP).map_err(|e| e.to_string())?;
            let brute =
                two_cycles_bruteforce(&y, DEFAULT_BRUTE_MAX_FACES).map_err(|e| e.to_string())?;
            ensure(brute == kernel, || {
                format!("random cover of {:?}: brute != kernel", p.to_text())
            })?;
            for v in 0..3 {
                let link = cycles_via_link(&y, v, DEFAULT_ENUM_CAP).map_err(|e| e.to_string())?;
                ensure(link == kernel, || {
                    format!("random cover of {:?}: link at {v} != kernel", p.to_text())
                })?;
            }
            covers += 1;
        }
    }
    Ok(format!(
        "T1 brute=kernel; T1 cover backtrack=kernel=link at 3 vertices; {random} random complexes; {covers} random covers; 0 discrepancies"
    ))
}

fn structural_laws(x: &CellComplex) -> Result<usize, String> {
    let cycles = two_cycles_kernel(x, DEFAULT_ENUM_CAP).map_err(|e| e.to_string())?;
    let k = x.face_count() - trisurf::gf2::rank(&trisurf::complex::boundary_matrix(x));
    ensure(cycles.len() == (1usize << k) - 1, || {
        format!("{} cycles, k = {k}", cycles.len())
    })?;
    let set: HashSet<String> = bits(&cycles).into_iter().collect();
    for a in cycles.iter().take(64) {
        for b in cycles.iter().take(64) {
            let s = a.chain().xor(b.chain());
            ensure(s.is_zero() || set.contains(&s.to_bitstring()), || {
                "not closed under xor".into()
            })?;
        }
    }
    let thick = x.edge_multiplicities().iter().all(|&m| m == 3);
    let certifier = if thick {
        Some(Certifier::new(x).map_err(|e| e.to_string())?)
    } else {
        None
    };
    for c in &cycles {
        for v in 0..x.vertex_count() {
            let link = link_graph(x, v).map_err(|e| e.to_string())?;
            let mut degree = vec![0usize; link.node_count()];
            for a in link.arcs() {
                if a.face.is_some_and(|f| c.chain().get(f)) {
                    degree[a.from] += 1;
                    degree[a.to] += 1;
                }
            }
            let law = |d: &usize| {
                if thick {
                    *d == 0 || *d == 2
                } else {
                    d.is_multiple_of(2)
                }
            };
            ensure(degree.iter().all(law), || format!("degrees {degree:?}"))?;
        }
        if let Some(certifier) = &certifier {
            let cert = certifier.certify(c).map_err(|e| e.to_string())?;
            let s = cert.surface;
            ensure(2 * s.edges == 3 * s.faces && s.faces == c.len(), || {
                format!("counts {s:?}")
            })?;
            ensure(
                cert.euler_characteristic == s.vertices as i64 - s.edges as i64 + s.faces as i64,
                || format!("chi {} for {s:?}", cert.euler_characteristic),
            )?;
            ensure(
                cert.euler_characteristic % 2 == 0 || !cert.orientable,
                || format!("orientable with chi {}", cert.euler_characteristic),
            )?;
        }
    }
    Ok(cycles.len())
}

fn criterion_8() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed_0008);
    let mut checked = structural_laws(&build_one_vertex_complex(&t1()))?;
    checked += structural_laws(&cover(SheetOrder::Ascending))?;
    checked += structural_laws(&cover(SheetOrder::Descending))?;
    let mut complexes = 3;
    for _ in 0..60 {
        let n = rng.gen_range(2..=7);
        let p = random_thick_presentation(&mut rng, n);
        checked += structural_laws(&build_one_vertex_complex(&p))?;
        checked += structural_laws(&build_cover_complex(&cyclic_triple_cover_with(
            &p,
            SheetOrder::Ascending,
        )))?;
        complexes += 2;
    }
    for _ in 0..40 {
        let (n, faces) = (rng.gen_range(1..=6), rng.gen_range(1..=12));
        let p = random_presentation(&mut rng, n, faces);
        checked += structural_laws(&build_one_vertex_complex(&p))?;
        complexes += 1;
    }
    Ok(format!("{checked} cycles over {complexes} complexes"))
}

fn criterion_9() -> Check {
    let bin = env!("CARGO_BIN_EXE_trisurf");
    let run = |extra: &[&str]| -> Result<Vec<u8>, String> {
        let out = Command::new(bin)
            .args(["certify", "--fixture", "T1", "--cover", "--json"])
            .args(extra)
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), || {
            format!(
                "exit {:?}: {}",
                out.status.code(),
                String::from_utf8_lossy(&out.stderr)
            )
        })?;
        Ok(out.stdout)
    };
    let first = run(&[])?;
    for extra in [&[][..], &[], &["--jobs", "1"], &["--jobs", "8"]] {
        ensure(run(extra)? == first, || {
            format!("output differs with {extra:?}")
        })?;
    }
    serde_json::from_slice::<serde_json::Value>(&first).map_err(|e| e.to_string())?;
    Ok(format!(
        "{} bytes identical over 3 runs and jobs 1/8",
        first.len()
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        (
            "T1 one-vertex cycle",
            criterion_1,
            Some(Duration::from_secs(1)),
        ),
        (
            "T1 link is the GQ(2,2) incidence graph",
            criterion_2,
            Some(Duration::from_secs(1)),
        ),
        ("cover structure", criterion_3, Some(Duration::from_secs(1))),
        (
            "cover surfaces match the published blocks",
            criterion_4,
            Some(Duration::from_secs(5)),
        ),
        ("G9 chain", criterion_5, Some(Duration::from_secs(1))),
        ("negative verdicts", criterion_6, None),
        ("oracle equivalence", criterion_7, None),
        ("structural laws", criterion_8, None),
        ("determinism", criterion_9, None),
    ];
    let mut failed = 0;
    for (i, (name, check, bound)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let result = match (result, bound) {
            (Ok(_), Some(b)) if elapsed > b => Err(format!("took {elapsed:.2?}, bound {b:?}")),
            (r, _) => r,
        };
        match result {
            Ok(detail) => println!("criterion {}: PASS  {name} ({elapsed:.2?}) {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({elapsed:.2?}) {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of 9 passed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
