//! Link geometry of the surface carried by a 2-cycle.
//!
//! The corners of a 2-cycle at a vertex form circles in the ambient link.
//! The immersion is certified when every circle has length 8 and no
//! ambient path of at most 3 arcs joins two circle nodes outside the
//! circle. A separate geodesic test compares ambient distances with
//! distances along the circle, capped at 4.

use std::collections::HashSet;

use serde::Serialize;

use crate::complex::{link_graph, validate_gq_link, CellComplex, GqReport, LinkGraph};
use crate::cycles::TwoCycle;
use crate::error::{Error, Result};
use crate::gf2::BitChain;

pub const SHORTCUT_MAX_LEN: usize = 3;
pub const GEODESIC_BOUND: usize = 4;
pub const CERTIFIED_CIRCLE_LENGTH: usize = 8;

/// A simple cycle in a link: `arcs[i]` joins `nodes[i]` and
/// `nodes[(i + 1) % len]`. Canonical form starts at the least node and
/// proceeds towards the lesser of its two circle neighbours.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Circle {
    pub nodes: Vec<usize>,
    pub arcs: Vec<usize>,
}

impl Circle {
    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    /// Builds a circle from a closed node walk `nodes[0] → nodes[1] → … →
    /// nodes[0]`, picking for each step the first arc joining the pair.
    pub fn from_nodes(link: &LinkGraph, nodes: &[usize]) -> Option<Circle> {
        let n = nodes.len();
        let mut arcs = Vec::with_capacity(n);
        for i in 0..n {
            let (u, w) = (nodes[i], nodes[(i + 1) % n]);
            let arc = link
                .incident(u)
                .iter()
                .find(|&&(x, a)| x == w && !arcs.contains(&a))?
                .1;
            arcs.push(arc);
        }
        let distinct: HashSet<_> = nodes.iter().collect();
        (distinct.len() == n && n >= 2).then(|| {
            Circle {
                nodes: nodes.to_vec(),
                arcs,
            }
            .canonical()
        })
    }

    pub fn canonical(&self) -> Circle {
        let n = self.nodes.len();
        if n == 0 {
            return self.clone();
        }
        let start = (0..n).min_by_key(|&i| self.nodes[i]).unwrap();
        let fwd = (self.nodes[(start + 1) % n], self.arcs[start]);
        let back = (
            self.nodes[(start + n - 1) % n],
            self.arcs[(start + n - 1) % n],
        );
        if fwd <= back {
            Circle {
                nodes: (0..n).map(|i| self.nodes[(start + i) % n]).collect(),
                arcs: (0..n).map(|i| self.arcs[(start + i) % n]).collect(),
            }
        } else {
            Circle {
                nodes: (0..n).map(|i| self.nodes[(start + n - i) % n]).collect(),
                arcs: (0..n).map(|i| self.arcs[(start + n - i - 1) % n]).collect(),
            }
        }
    }

    /// Position distance along the circle.
    fn circle_distance(&self, i: usize, j: usize) -> usize {
        let d = i.abs_diff(j);
        d.min(self.len() - d)
    }
}

/// True when `a` and `b` agree up to rotation and reflection.
pub fn same_cyclic_sequence<T: PartialEq>(a: &[T], b: &[T]) -> bool {
    let n = a.len();
    if n != b.len() {
        return false;
    }
    if n == 0 {
        return true;
    }
    (0..n).any(|shift| {
        (0..n).all(|i| a[i] == b[(i + shift) % n]) || (0..n).all(|i| a[i] == b[(shift + n - i) % n])
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkDecomposition {
    pub vertex: usize,
    pub circles: Vec<Circle>,
    /// Circle lengths, sorted.
    pub lengths: Vec<usize>,
}

/// Decomposes the arcs of `link` whose faces lie in `chain` into circles.
pub fn decompose(link: &LinkGraph, chain: &BitChain) -> Result<LinkDecomposition> {
    let selected: Vec<bool> = link
        .arcs()
        .iter()
        .map(|a| a.face.is_some_and(|f| chain.get(f)))
        .collect();
    let chain_incident = |n: usize| -> Vec<(usize, usize)> {
        link.incident(n)
            .iter()
            .copied()
            .filter(|&(_, a)| selected[a])
            .collect()
    };
    for n in 0..link.node_count() {
        let deg = chain_incident(n).len();
        if deg != 0 && deg != 2 {
            return Err(Error::NotACycle {
                vertex: link.vertex(),
                node: link.nodes()[n].name.clone(),
                degree: deg,
            });
        }
    }
    let mut seen = vec![false; link.node_count()];
    let mut circles = Vec::new();
    for start in 0..link.node_count() {
        if seen[start] {
            continue;
        }
        let mut around = chain_incident(start);
        if around.is_empty() {
            continue;
        }
        around.sort_unstable();
        let (mut node, mut arc) = (start, around[0].1);
        let mut nodes = vec![start];
        let mut arcs = vec![arc];
        seen[start] = true;
        loop {
            let next = link.arcs()[arc].other(node);
            if next == start {
                break;
            }
            seen[next] = true;
            nodes.push(next);
            let (_, next_arc) = chain_incident(next)
                .into_iter()
                .find(|&(_, a)| a != arc)
                .expect("degree two");
            node = next;
            arc = next_arc;
            arcs.push(arc);
        }
        circles.push(Circle { nodes, arcs });
    }
    let mut lengths: Vec<usize> = circles.iter().map(Circle::len).collect();
    lengths.sort_unstable();
    Ok(LinkDecomposition {
        vertex: link.vertex(),
        circles,
        lengths,
    })
}

pub fn chain_link_subgraph(x: &CellComplex, c: &TwoCycle, v: usize) -> Result<LinkDecomposition> {
    decompose(&link_graph(x, v)?, c.chain())
}

/// Edge labels of the circle's nodes, in circle order.
pub fn circle_labels(x: &CellComplex, link: &LinkGraph, circle: &Circle) -> Vec<u32> {
    circle
        .nodes
        .iter()
        .map(|&n| {
            let end = link.nodes()[n].end.expect("complex link node");
            x.edges()[end.edge].label.code()
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShortcutViolation {
    pub vertex: usize,
    /// Node names along the offending path.
    pub path: Vec<String>,
}

impl ShortcutViolation {
    pub fn len(&self) -> usize {
        self.path.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Every simple path of at most `max_len` arcs between two distinct circle
/// nodes that uses an arc outside the circle. Each path is reported once,
/// from its lesser endpoint.
pub fn shortcut_check(l: &LinkGraph, circle: &Circle, max_len: usize) -> Vec<ShortcutViolation> {
    let mut on_circle = vec![false; l.node_count()];
    for &n in &circle.nodes {
        on_circle[n] = true;
    }
    let circle_arcs: HashSet<usize> = circle.arcs.iter().copied().collect();
    let mut out = Vec::new();
    let mut starts = circle.nodes.clone();
    starts.sort_unstable();

    fn extend(
        l: &LinkGraph,
        max_len: usize,
        on_circle: &[bool],
        circle_arcs: &HashSet<usize>,
        path: &mut Vec<usize>,
        used: &mut Vec<usize>,
        out: &mut Vec<ShortcutViolation>,
    ) {
        let here = *path.last().unwrap();
        let start = path[0];
        if !used.is_empty()
            && on_circle[here]
            && start < here
            && used.iter().any(|a| !circle_arcs.contains(a))
        {
            out.push(ShortcutViolation {
                vertex: l.vertex(),
                path: path.iter().map(|&n| l.nodes()[n].name.clone()).collect(),
            });
        }
        if used.len() == max_len {
            return;
        }
        for &(next, arc) in l.incident(here) {
            if path.contains(&next) {
                continue;
            }
            path.push(next);
            used.push(arc);
            extend(l, max_len, on_circle, circle_arcs, path, used, out);
            used.pop();
            path.pop();
        }
    }

    for s in starts {
        let mut path = vec![s];
        let mut used = Vec::new();
        extend(
            l,
            max_len,
            &on_circle,
            &circle_arcs,
            &mut path,
            &mut used,
            &mut out,
        );
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeodesicViolation {
    pub vertex: usize,
    pub from: String,
    pub to: String,
    pub circle_distance: usize,
    pub ambient_distance: usize,
}

/// Node pairs whose ambient distance is below `min(circle distance, 4)`.
pub fn geodesic_check(l: &LinkGraph, circle: &Circle) -> Vec<GeodesicViolation> {
    let mut out = Vec::new();
    for i in 0..circle.nodes.len() {
        let dist = l.distances_from(circle.nodes[i]);
        for j in i + 1..circle.nodes.len() {
            let along = circle.circle_distance(i, j);
            let ambient = dist[circle.nodes[j]].expect("circle nodes are connected");
            if ambient < along.min(GEODESIC_BOUND) {
                out.push(GeodesicViolation {
                    vertex: l.vertex(),
                    from: l.nodes()[circle.nodes[i]].name.clone(),
                    to: l.nodes()[circle.nodes[j]].name.clone(),
                    circle_distance: along,
                    ambient_distance: ambient,
                });
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceCounts {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
}

impl SurfaceCounts {
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices as i64 - self.edges as i64 + self.faces as i64
    }
}

fn surface_counts(decompositions: &[LinkDecomposition], faces: usize) -> Result<SurfaceCounts> {
    if faces % 2 == 1 {
        return Err(Error::Internal(format!(
            "2-cycle with an odd number of faces ({faces})"
        )));
    }
    Ok(SurfaceCounts {
        vertices: decompositions.iter().map(|d| d.circles.len()).sum(),
        edges: 3 * faces / 2,
        faces,
    })
}

/// `V − E + F` of the closed surface: one vertex per link circle, each edge
/// shared by two triangles.
pub fn euler_characteristic(x: &CellComplex, c: &TwoCycle) -> Result<i64> {
    let decs = (0..x.vertex_count())
        .map(|v| chain_link_subgraph(x, c, v))
        .collect::<Result<Vec<_>>>()?;
    Ok(surface_counts(&decs, c.len())?.euler_characteristic())
}

/// Orientation test on the glued surface. Both occurrences of a doubled
/// edge traverse it in its own direction, so the two faces must receive
/// opposite orientations; the surface is orientable iff these constraints
/// 2-colour the faces.
pub fn orientability(x: &CellComplex, c: &TwoCycle) -> Result<bool> {
    let mut occurrences: Vec<Vec<usize>> = vec![Vec::new(); x.edge_count()];
    for f in c.chain().ones() {
        for &e in &x.faces()[f].sides {
            occurrences[e].push(f);
        }
    }
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); x.face_count()];
    for (e, occ) in occurrences.iter().enumerate() {
        match occ.as_slice() {
            [] => {}
            &[a, b] => {
                if a == b {
                    return Ok(false);
                }
                adjacency[a].push(b);
                adjacency[b].push(a);
            }
            other => {
                let edge = &x.edges()[e];
                return Err(Error::NotACycle {
                    vertex: edge.origin,
                    node: format!("e{}:o", edge.label.code()),
                    degree: other.len(),
                });
            }
        }
    }
    let mut colour: Vec<Option<bool>> = vec![None; x.face_count()];
    for s in c.chain().ones() {
        if colour[s].is_some() {
            continue;
        }
        colour[s] = Some(false);
        let mut stack = vec![s];
        while let Some(f) = stack.pop() {
            let cf = colour[f].unwrap();
            for &g in &adjacency[f] {
                match colour[g] {
                    None => {
                        colour[g] = Some(!cf);
                        stack.push(g);
                    }
                    Some(cg) if cg == cf => return Ok(false),
                    Some(_) => {}
                }
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RejectReason {
    /// Some circle at `vertex` does not have length 8.
    CircleLengths { vertex: usize, lengths: Vec<usize> },
    /// A short ambient path joins two circle nodes outside the circle.
    Shortcut { vertex: usize, path: Vec<String> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Verdict {
    Certified,
    Rejected { reason: RejectReason },
}

impl Verdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, Verdict::Certified)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexLink {
    pub vertex: usize,
    pub lengths: Vec<usize>,
    /// Edge-label sequence of every circle.
    pub circle_labels: Vec<Vec<u32>>,
    pub circle_nodes: Vec<Vec<String>>,
    pub ambient_smallest_gq: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceCertificate {
    pub cycle: TwoCycle,
    pub links: Vec<VertexLink>,
    pub all_eight: bool,
    pub shortcut_violations: Vec<ShortcutViolation>,
    pub geodesic_violations: Vec<GeodesicViolation>,
    pub surface: SurfaceCounts,
    pub euler_characteristic: i64,
    pub orientable: bool,
    pub verdict: Verdict,
}

/// Certifies many cycles of one complex, building each vertex link once.
pub struct Certifier<'a> {
    complex: &'a CellComplex,
    links: Vec<LinkGraph>,
    gq: Vec<GqReport>,
}

impl<'a> Certifier<'a> {
    pub fn new(complex: &'a CellComplex) -> Result<Self> {
        let links = (0..complex.vertex_count())
            .map(|v| link_graph(complex, v))
            .collect::<Result<Vec<_>>>()?;
        let gq = links.iter().map(validate_gq_link).collect();
        Ok(Certifier { complex, links, gq })
    }

    pub fn complex(&self) -> &CellComplex {
        self.complex
    }

    pub fn links(&self) -> &[LinkGraph] {
        &self.links
    }

    pub fn gq_reports(&self) -> &[GqReport] {
        &self.gq
    }

    pub fn decompositions(&self, c: &TwoCycle) -> Result<Vec<LinkDecomposition>> {
        self.links.iter().map(|l| decompose(l, c.chain())).collect()
    }

    pub fn certify(&self, c: &TwoCycle) -> Result<SurfaceCertificate> {
        let decs = self.decompositions(c)?;
        let mut shortcut_violations = Vec::new();
        let mut geodesic_violations = Vec::new();
        let mut links = Vec::new();
        let mut first_bad_lengths = None;
        for (d, l) in decs.iter().zip(&self.links) {
            if first_bad_lengths.is_none()
                && d.lengths.iter().any(|&n| n != CERTIFIED_CIRCLE_LENGTH)
            {
                first_bad_lengths = Some(RejectReason::CircleLengths {
                    vertex: d.vertex,
                    lengths: d.lengths.clone(),
                });
            }
            for circle in &d.circles {
                shortcut_violations.extend(shortcut_check(l, circle, SHORTCUT_MAX_LEN));
                geodesic_violations.extend(geodesic_check(l, circle));
            }
            links.push(VertexLink {
                vertex: d.vertex,
                lengths: d.lengths.clone(),
                circle_labels: d
                    .circles
                    .iter()
                    .map(|k| circle_labels(self.complex, l, k))
                    .collect(),
                circle_nodes: d
                    .circles
                    .iter()
                    .map(|k| k.nodes.iter().map(|&n| l.nodes()[n].name.clone()).collect())
                    .collect(),
                ambient_smallest_gq: self.gq[d.vertex].smallest_gq,
            });
        }
        let surface = surface_counts(&decs, c.len())?;
        let euler = surface.euler_characteristic();
        let orientable = orientability(self.complex, c)?;
        if orientable && euler % 2 != 0 {
            return Err(Error::Internal(format!(
                "orientable surface with odd Euler characteristic {euler}"
            )));
        }
        let verdict = match (first_bad_lengths, shortcut_violations.first()) {
            (Some(reason), _) => Verdict::Rejected { reason },
            (None, Some(v)) => Verdict::Rejected {
                reason: RejectReason::Shortcut {
                    vertex: v.vertex,
                    path: v.path.clone(),
                },
            },
            (None, None) => Verdict::Certified,
        };
        Ok(SurfaceCertificate {
            cycle: c.clone(),
            links,
            all_eight: decs
                .iter()
                .all(|d| d.lengths.iter().all(|&n| n == CERTIFIED_CIRCLE_LENGTH)),
            shortcut_violations,
            geodesic_violations,
            surface,
            euler_characteristic: euler,
            orientable,
            verdict,
        })
    }
}

pub fn certify_surface(x: &CellComplex, c: &TwoCycle) -> Result<SurfaceCertificate> {
    Certifier::new(x)?.certify(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::build_one_vertex_complex;
    use crate::cycles::two_cycles_kernel;
    use crate::presentation::{builtin_fixture, parse_named, parse_presentation, Fixture, T1_TEXT};

    fn cycle_of_all(x: &CellComplex) -> TwoCycle {
        TwoCycle::new(x, BitChain::from_indices(x.face_count(), 0..x.face_count())).unwrap()
    }

    fn cycle_graph(n: usize) -> LinkGraph {
        let arcs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        LinkGraph::from_edges(n, &arcs)
    }

    #[test]
    fn g9_chain_has_three_octagons() {
        let Fixture::Triangles(t) = builtin_fixture("G9_surface_chain").unwrap() else {
            panic!()
        };
        let x = build_one_vertex_complex(&t.to_presentation().unwrap());
        let c = cycle_of_all(&x);
        let d = chain_link_subgraph(&x, &c, 0).unwrap();
        assert_eq!(d.lengths, vec![8, 8, 8]);
        assert_eq!(euler_characteristic(&x, &c).unwrap(), -1);
        assert!(!orientability(&x, &c).unwrap());
    }

    #[test]
    fn t1_cycle_is_rejected() {
        let x = build_one_vertex_complex(&parse_named(T1_TEXT, "T1").unwrap());
        let c = &two_cycles_kernel(&x, 10).unwrap()[0];
        let d = chain_link_subgraph(&x, c, 0).unwrap();
        assert_eq!(d.lengths.iter().sum::<usize>(), 18);
        assert_eq!(d.lengths, vec![8, 10]);
        let cert = certify_surface(&x, c).unwrap();
        assert!(!cert.all_eight);
        assert_eq!(
            cert.verdict,
            Verdict::Rejected {
                reason: RejectReason::CircleLengths {
                    vertex: 0,
                    lengths: vec![8, 10]
                }
            }
        );
        assert_eq!(cert.euler_characteristic, -1);
        assert!(!cert.orientable);
    }

    #[test]
    fn non_cycle_is_an_error() {
        let x = build_one_vertex_complex(&parse_named(T1_TEXT, "T1").unwrap());
        let link = link_graph(&x, 0).unwrap();
        let err = decompose(&link, &BitChain::from_indices(15, [1])).unwrap_err();
        assert!(matches!(err, Error::NotACycle { degree: 1, .. }));
    }

    #[test]
    fn doubled_triangle_is_a_sphere() {
        let x = build_one_vertex_complex(&parse_presentation("1 2 3\n1 2 3").unwrap());
        let c = cycle_of_all(&x);
        assert_eq!(
            chain_link_subgraph(&x, &c, 0).unwrap().lengths,
            vec![2, 2, 2]
        );
        assert_eq!(euler_characteristic(&x, &c).unwrap(), 2);
        assert!(orientability(&x, &c).unwrap());
    }

    #[test]
    fn torus_and_klein_bottle() {
        let torus = build_one_vertex_complex(&parse_presentation("1 2 3\n2 1 3").unwrap());
        let c = cycle_of_all(&torus);
        assert_eq!(euler_characteristic(&torus, &c).unwrap(), 0);
        assert!(orientability(&torus, &c).unwrap());

        let klein = build_one_vertex_complex(&parse_presentation("1 1 3\n2 2 3").unwrap());
        let c = cycle_of_all(&klein);
        assert_eq!(euler_characteristic(&klein, &c).unwrap(), 0);
        assert!(!orientability(&klein, &c).unwrap());
    }

    #[test]
    fn k4_square_has_diagonal_shortcuts() {
        let k4 = LinkGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]);
        let square = Circle::from_nodes(&k4, &[0, 1, 2, 3]).unwrap();
        let v = shortcut_check(&k4, &square, 1);
        assert_eq!(v.len(), 2);
        let paths: Vec<_> = v.iter().map(|s| s.path.join("-")).collect();
        assert_eq!(paths, vec!["n0-n2", "n1-n3"]);
    }

    #[test]
    fn whole_cycle_graph_has_no_shortcuts() {
        let g = cycle_graph(10);
        let c = Circle::from_nodes(&g, &(0..10).collect::<Vec<_>>()).unwrap();
        assert!(shortcut_check(&g, &c, 3).is_empty());
        let tri = cycle_graph(3);
        let c = Circle::from_nodes(&tri, &[0, 1, 2]).unwrap();
        assert!(geodesic_check(&tri, &c).is_empty());
    }

    #[test]
    fn canonical_circles() {
        let g = cycle_graph(5);
        let a = Circle::from_nodes(&g, &[2, 3, 4, 0, 1]).unwrap();
        let b = Circle::from_nodes(&g, &[3, 2, 1, 0, 4]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.nodes, vec![0, 1, 2, 3, 4]);
        assert_eq!(a.arcs, vec![0, 1, 2, 3, 4]);
        assert!(Circle::from_nodes(&g, &[0, 2, 3]).is_none());
    }

    #[test]
    fn cyclic_sequence_matching() {
        assert!(same_cyclic_sequence(&[1, 2, 3, 4], &[3, 4, 1, 2]));
        assert!(same_cyclic_sequence(&[1, 2, 3, 4], &[2, 1, 4, 3]));
        assert!(!same_cyclic_sequence(&[1, 2, 3, 4], &[1, 3, 2, 4]));
        assert!(!same_cyclic_sequence(&[1, 2], &[1, 2, 3]));
    }
}
