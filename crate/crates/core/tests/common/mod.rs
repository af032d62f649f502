#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;

use trisurf::complex::LinkGraph;
use trisurf::geometry::Circle;
use trisurf::presentation::PolygonalPresentation;

pub fn t1() -> PolygonalPresentation {
    trisurf::presentation::builtin_fixture("T1")
        .unwrap()
        .into_presentation()
        .unwrap()
}

/// Random triples over `generators` generators, no thickness requirement.
pub fn random_presentation(
    rng: &mut impl Rng,
    generators: u32,
    faces: usize,
) -> PolygonalPresentation {
    let triples: Vec<[u32; 3]> = (0..faces)
        .map(|_| [0; 3].map(|_| rng.gen_range(1..=generators)))
        .collect();
    let max = triples.iter().flatten().copied().max().unwrap();
    let text: String = std::iter::once(format!("generators {}\n", max.max(generators)))
        .chain(triples.iter().map(|[a, b, c]| format!("{a} {b} {c}\n")))
        .collect();
    trisurf::presentation::parse_named(&text, "random").unwrap()
}

/// Every generator used exactly three times: `n` triangles from a shuffled
/// multiset of `3n` side slots.
pub fn random_thick_presentation(rng: &mut impl Rng, n: u32) -> PolygonalPresentation {
    let mut slots: Vec<u32> = (1..=n).flat_map(|g| [g, g, g]).collect();
    slots.shuffle(rng);
    let triples: Vec<[u32; 3]> = slots.chunks(3).map(|c| [c[0], c[1], c[2]]).collect();
    PolygonalPresentation::from_triples("thick", &triples).unwrap()
}

/// Samples a simple cycle of exactly `len` arcs by randomized depth-first
/// search, pruning branches that cannot return to the start in time.
pub fn sample_circle(rng: &mut impl Rng, link: &LinkGraph, len: usize) -> Option<Circle> {
    let dist = link.all_distances();
    for _ in 0..64 {
        let start = rng.gen_range(0..link.node_count());
        let mut path = vec![start];
        let mut on_path = vec![false; link.node_count()];
        on_path[start] = true;
        let mut budget = 200_000usize;
        if grow(rng, link, &dist, len, &mut path, &mut on_path, &mut budget) {
            return Circle::from_nodes(link, &path);
        }
    }
    None
}

fn grow(
    rng: &mut impl Rng,
    link: &LinkGraph,
    dist: &[Vec<Option<usize>>],
    len: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    budget: &mut usize,
) -> bool {
    if *budget == 0 {
        return false;
    }
    *budget -= 1;
    let here = *path.last().unwrap();
    let start = path[0];
    if path.len() == len {
        return link.incident(here).iter().any(|&(w, _)| w == start) && len >= 3;
    }
    let mut next: Vec<usize> = link.incident(here).iter().map(|&(w, _)| w).collect();
    next.shuffle(rng);
    for w in next {
        if on_path[w] {
            continue;
        }
        let remaining = len - path.len();
        match dist[w][start] {
            Some(d) if d <= remaining => {}
            _ => continue,
        }
        path.push(w);
        on_path[w] = true;
        if grow(rng, link, dist, len, path, on_path, budget) {
            return true;
        }
        on_path[w] = false;
        path.pop();
    }
    false
}

/// All simple cycles of length `len` through node-minimal starts.
pub fn all_circles(link: &LinkGraph, len: usize) -> Vec<Circle> {
    fn extend(link: &LinkGraph, len: usize, path: &mut Vec<usize>, out: &mut Vec<Circle>) {
        let here = *path.last().unwrap();
        let start = path[0];
        if path.len() == len {
            if link.incident(here).iter().any(|&(w, _)| w == start) && path[1] < path[len - 1] {
                out.push(Circle::from_nodes(link, path).unwrap());
            }
            return;
        }
        for &(w, _) in link.incident(here) {
            if w > start && !path.contains(&w) {
                path.push(w);
                extend(link, len, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..link.node_count() {
        extend(link, len, &mut vec![s], &mut out);
    }
    out
}
