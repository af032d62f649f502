//! Triangle complexes with labelled oriented edges, their mod-2 boundary
//! matrices and vertex links.

use std::collections::VecDeque;
use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::cover::CoverLabel;
use crate::error::{Error, Result};
use crate::gf2::{BitChain, Gf2Matrix};
use crate::presentation::{GeneratorId, PolygonalPresentation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum EdgeLabel {
    Generator(GeneratorId),
    Cover(CoverLabel),
}

impl EdgeLabel {
    /// Integer label: the generator index, or `3(i-1)+j` for `x_i^j`.
    pub fn code(&self) -> u32 {
        match self {
            EdgeLabel::Generator(g) => g.index(),
            EdgeLabel::Cover(c) => c.encode(),
        }
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeLabel::Generator(g) => write!(f, "{g}"),
            EdgeLabel::Cover(c) => write!(f, "{c}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeCell {
    pub label: EdgeLabel,
    pub origin: usize,
    pub terminus: usize,
}

/// A triangle given by its three sides (edge indices) in cyclic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FaceCell {
    pub sides: [usize; 3],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellComplex {
    name: String,
    vertex_count: usize,
    edges: Vec<EdgeCell>,
    faces: Vec<FaceCell>,
}

impl CellComplex {
    /// Checks that every face chains head to tail through the vertices.
    pub fn new(
        name: impl Into<String>,
        vertex_count: usize,
        edges: Vec<EdgeCell>,
        faces: Vec<FaceCell>,
    ) -> Result<Self> {
        for (i, e) in edges.iter().enumerate() {
            if e.origin >= vertex_count || e.terminus >= vertex_count {
                return Err(Error::Internal(format!(
                    "edge {i} has an endpoint outside the vertex set"
                )));
            }
        }
        for (f, face) in faces.iter().enumerate() {
            for k in 0..3 {
                let (a, b) = (face.sides[k], face.sides[(k + 1) % 3]);
                if a >= edges.len() || b >= edges.len() {
                    return Err(Error::Internal(format!(
                        "face {f} references a missing edge"
                    )));
                }
                if edges[a].terminus != edges[b].origin {
                    return Err(Error::Internal(format!(
                        "face {f}: side {k} ends at vertex {} but side {} starts at vertex {}",
                        edges[a].terminus,
                        (k + 1) % 3,
                        edges[b].origin
                    )));
                }
            }
        }
        Ok(CellComplex {
            name: name.into(),
            vertex_count,
            edges,
            faces,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[EdgeCell] {
        &self.edges
    }

    pub fn faces(&self) -> &[FaceCell] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Side labels of face `f` in cyclic order.
    pub fn face_labels(&self, f: usize) -> [u32; 3] {
        self.faces[f].sides.map(|e| self.edges[e].label.code())
    }

    /// Number of faces containing each edge, counted with multiplicity.
    pub fn edge_multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.edges.len()];
        for face in &self.faces {
            for &e in &face.sides {
                m[e] += 1;
            }
        }
        m
    }

    /// Edge multiplicities restricted to the faces of `chain`.
    pub fn chain_edge_multiplicities(&self, chain: &BitChain) -> Vec<usize> {
        let mut m = vec![0; self.edges.len()];
        for f in chain.ones() {
            for &e in &self.faces[f].sides {
                m[e] += 1;
            }
        }
        m
    }

    /// `∂f` over GF(2): repeated sides cancel.
    pub fn face_boundary(&self, f: usize) -> BitChain {
        BitChain::from_indices(self.edges.len(), self.faces[f].sides)
    }

    pub fn boundary(&self, chain: &BitChain) -> BitChain {
        let mut out = BitChain::zeros(self.edges.len());
        for f in chain.ones() {
            out.xor_assign(&self.face_boundary(f));
        }
        out
    }

    /// Vertex at corner `k` of face `f`, between side `k` and side `k+1`.
    pub fn corner_vertex(&self, f: usize, k: usize) -> usize {
        self.edges[self.faces[f].sides[k]].terminus
    }

    pub fn node_name(&self, end: EdgeEnd) -> String {
        let suffix = match end.end {
            End::Origin => "o",
            End::Terminus => "t",
        };
        format!("e{}:{suffix}", self.edges[end.edge].label.code())
    }
}

/// One vertex, one edge per generator, one face per triangle.
pub fn build_one_vertex_complex(p: &PolygonalPresentation) -> CellComplex {
    let edges = (1..=p.generator_count())
        .map(|i| EdgeCell {
            label: EdgeLabel::Generator(GeneratorId::new(i).unwrap()),
            origin: 0,
            terminus: 0,
        })
        .collect();
    let faces = p
        .triangles()
        .iter()
        .map(|t| FaceCell {
            sides: t.sides().map(GeneratorId::offset),
        })
        .collect();
    CellComplex::new(p.name(), 1, edges, faces).expect("1-vertex faces always chain")
}

/// Rows are edges, columns are faces.
pub fn boundary_matrix(x: &CellComplex) -> Gf2Matrix {
    let columns: Vec<BitChain> = (0..x.face_count()).map(|f| x.face_boundary(f)).collect();
    Gf2Matrix::from_columns(x.edge_count(), &columns)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum End {
    Origin,
    Terminus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct EdgeEnd {
    pub edge: usize,
    pub end: End,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkNode {
    pub name: String,
    /// `None` for hand-built graphs not derived from a complex.
    pub end: Option<EdgeEnd>,
}

/// A triangle corner. For a complex link, `from` is the terminus-end of side
/// `corner` and `to` the origin-end of the next side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LinkArc {
    pub face: Option<usize>,
    pub corner: usize,
    pub from: usize,
    pub to: usize,
}

impl LinkArc {
    pub fn other(&self, node: usize) -> usize {
        if self.from == node {
            self.to
        } else {
            self.from
        }
    }
}

/// Undirected multigraph of edge-ends and corners at one vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkGraph {
    vertex: usize,
    nodes: Vec<LinkNode>,
    arcs: Vec<LinkArc>,
    #[serde(skip)]
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl LinkGraph {
    fn assemble(vertex: usize, nodes: Vec<LinkNode>, arcs: Vec<LinkArc>) -> Self {
        let mut adjacency = vec![Vec::new(); nodes.len()];
        for (i, a) in arcs.iter().enumerate() {
            adjacency[a.from].push((a.to, i));
            if a.from != a.to {
                adjacency[a.to].push((a.from, i));
            }
        }
        LinkGraph {
            vertex,
            nodes,
            arcs,
            adjacency,
        }
    }

    /// Plain graph on nodes `n0..` with the given arcs.
    pub fn from_edges(node_count: usize, arcs: &[(usize, usize)]) -> Self {
        let nodes = (0..node_count)
            .map(|i| LinkNode {
                name: format!("n{i}"),
                end: None,
            })
            .collect();
        let arcs = arcs
            .iter()
            .map(|&(from, to)| {
                assert!(from < node_count && to < node_count);
                LinkArc {
                    face: None,
                    corner: 0,
                    from,
                    to,
                }
            })
            .collect();
        Self::assemble(0, nodes, arcs)
    }

    pub fn vertex(&self) -> usize {
        self.vertex
    }

    pub fn nodes(&self) -> &[LinkNode] {
        &self.nodes
    }

    pub fn arcs(&self) -> &[LinkArc] {
        &self.arcs
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// `(neighbour, arc)` pairs.
    pub fn incident(&self, node: usize) -> &[(usize, usize)] {
        &self.adjacency[node]
    }

    pub fn degree(&self, node: usize) -> usize {
        self.adjacency[node]
            .iter()
            .map(|&(_, a)| {
                if self.arcs[a].from == self.arcs[a].to {
                    2
                } else {
                    1
                }
            })
            .sum()
    }

    pub fn node_of(&self, end: EdgeEnd) -> Option<usize> {
        self.nodes.iter().position(|n| n.end == Some(end))
    }

    /// BFS distances from `source`; `None` for unreachable nodes.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.nodes.len()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &(w, _) in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn all_distances(&self) -> Vec<Vec<Option<usize>>> {
        (0..self.nodes.len())
            .map(|s| self.distances_from(s))
            .collect()
    }

    /// Length of a shortest cycle (parallel arcs give 2, loops give 1).
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..self.nodes.len() {
            let mut dist = vec![usize::MAX; self.nodes.len()];
            let mut via = vec![usize::MAX; self.nodes.len()];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &(w, arc) in &self.adjacency[u] {
                    if arc == via[u] {
                        continue;
                    }
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        via[w] = arc;
                        queue.push_back(w);
                    } else {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// `None` when the graph is disconnected or empty.
    pub fn diameter(&self) -> Option<usize> {
        if self.nodes.is_empty() {
            return None;
        }
        let mut diam = 0;
        for s in 0..self.nodes.len() {
            for d in self.distances_from(s) {
                diam = diam.max(d?);
            }
        }
        Some(diam)
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side: Vec<Option<bool>> = vec![None; self.nodes.len()];
        for s in 0..self.nodes.len() {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &(w, _) in &self.adjacency[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Graphviz rendering with nodes and arcs in index order.
    pub fn to_dot(&self) -> String {
        let mut out = format!("graph link_v{} {{\n", self.vertex);
        for n in &self.nodes {
            let _ = writeln!(out, "  \"{}\";", n.name);
        }
        for a in &self.arcs {
            let (u, w) = (&self.nodes[a.from].name, &self.nodes[a.to].name);
            match a.face {
                Some(f) => {
                    let _ = writeln!(out, "  \"{u}\" -- \"{w}\" [label=\"f{}\"];", f + 1);
                }
                None => {
                    let _ = writeln!(out, "  \"{u}\" -- \"{w}\";");
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Link of `x` at vertex `v`: nodes are the edge-ends at `v` ordered by
/// (edge, end); each face corner at `v` joins the terminus-end of one side to
/// the origin-end of the next.
pub fn link_graph(x: &CellComplex, v: usize) -> Result<LinkGraph> {
    if v >= x.vertex_count() {
        return Err(Error::InvalidVertex {
            vertex: v,
            count: x.vertex_count(),
        });
    }
    let mut nodes = Vec::new();
    let mut index_of = vec![[usize::MAX; 2]; x.edge_count()];
    for (i, e) in x.edges().iter().enumerate() {
        for (slot, end, at) in [(0, End::Origin, e.origin), (1, End::Terminus, e.terminus)] {
            if at == v {
                let end = EdgeEnd { edge: i, end };
                index_of[i][slot] = nodes.len();
                nodes.push(LinkNode {
                    name: x.node_name(end),
                    end: Some(end),
                });
            }
        }
    }
    let mut arcs = Vec::new();
    for (f, face) in x.faces().iter().enumerate() {
        for k in 0..3 {
            let (a, b) = (face.sides[k], face.sides[(k + 1) % 3]);
            if x.edges()[a].terminus == v {
                arcs.push(LinkArc {
                    face: Some(f),
                    corner: k,
                    from: index_of[a][1],
                    to: index_of[b][0],
                });
            }
        }
    }
    Ok(LinkGraph::assemble(v, nodes, arcs))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GqReport {
    pub vertex: usize,
    pub nodes: usize,
    pub arcs: usize,
    /// Common degree when the graph is regular.
    pub regular_degree: Option<usize>,
    pub girth: Option<usize>,
    pub diameter: Option<usize>,
    pub bipartite: bool,
    /// True iff 3-regular on 30 nodes with girth 8, which pins the
    /// incidence graph of the generalized quadrangle of order 2.
    pub smallest_gq: bool,
}

impl fmt::Display for GqReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
        write!(
            f,
            "{} nodes, {} arcs, degree {}, girth {}, diameter {}, {}",
            self.nodes,
            self.arcs,
            opt(self.regular_degree),
            opt(self.girth),
            opt(self.diameter),
            if self.bipartite {
                "bipartite"
            } else {
                "not bipartite"
            }
        )
    }
}

pub fn validate_gq_link(l: &LinkGraph) -> GqReport {
    let degrees: Vec<usize> = (0..l.node_count()).map(|n| l.degree(n)).collect();
    let regular_degree = match degrees.first() {
        Some(&d) if degrees.iter().all(|&x| x == d) => Some(d),
        _ => None,
    };
    let girth = l.girth();
    GqReport {
        vertex: l.vertex(),
        nodes: l.node_count(),
        arcs: l.arc_count(),
        regular_degree,
        girth,
        diameter: l.diameter(),
        bipartite: l.is_bipartite(),
        smallest_gq: regular_degree == Some(3) && l.node_count() == 30 && girth == Some(8),
    }
}
