//! Enumeration of mod-2 2-cycles.
//!
//! Four routes produce the same set wherever their preconditions hold:
//! plain enumeration of all `2^F` chains, backtracking with parity pruning,
//! enumeration of the boundary kernel, and solving the vertex-link system of
//! a multi-vertex complex. Every route returns cycles in canonical order:
//! by length, then by bitstring with face 1 leftmost.

use std::cmp::Ordering;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::complex::{boundary_matrix, link_graph, CellComplex};
use crate::error::{Error, Result};
use crate::gf2::{enumerate_kernel, kernel_basis, BitChain, Gf2Matrix};

pub const DEFAULT_BRUTE_MAX_FACES: usize = 24;

/// A nonzero chain of faces with zero boundary.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TwoCycle {
    chain: BitChain,
}

impl TwoCycle {
    /// Wraps `chain` after checking `∂chain = 0` against `x`.
    pub fn new(x: &CellComplex, chain: BitChain) -> Result<Self> {
        if chain.width() != x.face_count() {
            return Err(Error::BitstringLength {
                expected: x.face_count(),
                found: chain.width(),
            });
        }
        if chain.is_zero() || !x.boundary(&chain).is_zero() {
            return Err(Error::Internal(format!(
                "chain {} is not a nonzero 2-cycle",
                chain.to_bitstring()
            )));
        }
        Ok(TwoCycle { chain })
    }

    pub fn chain(&self) -> &BitChain {
        &self.chain
    }

    /// Number of faces.
    pub fn len(&self) -> usize {
        self.chain.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_zero()
    }

    /// 0-based face indices.
    pub fn faces(&self) -> Vec<usize> {
        self.chain.ones().collect()
    }

    pub fn bitstring(&self) -> String {
        self.chain.to_bitstring()
    }

    pub fn canonical_cmp(&self, other: &TwoCycle) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.chain.cmp_bitstring(&other.chain))
    }
}

impl fmt::Display for TwoCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-cycle {}", self.len(), self.bitstring())
    }
}

impl Serialize for TwoCycle {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("TwoCycle", 3)?;
        st.serialize_field("length", &self.len())?;
        st.serialize_field("bitstring", &self.bitstring())?;
        let faces: Vec<usize> = self.chain.ones().map(|f| f + 1).collect();
        st.serialize_field("faces", &faces)?;
        st.end()
    }
}

pub fn sort_canonical(cycles: &mut [TwoCycle]) {
    cycles.sort_by(TwoCycle::canonical_cmp);
}

fn finish(x: &CellComplex, chains: impl IntoIterator<Item = BitChain>) -> Result<Vec<TwoCycle>> {
    let mut out = chains
        .into_iter()
        .map(|c| TwoCycle::new(x, c))
        .collect::<Result<Vec<_>>>()?;
    sort_canonical(&mut out);
    Ok(out)
}

/// Tests every nonzero chain, walking the `2^F` chains in Gray-code order
/// with an incrementally updated boundary.
pub fn two_cycles_bruteforce(x: &CellComplex, max_faces: usize) -> Result<Vec<TwoCycle>> {
    let n = x.face_count();
    if n > max_faces || n >= 64 {
        return Err(Error::TooManyFaces {
            faces: n,
            max: max_faces.min(63),
        });
    }
    let mut found = Vec::new();
    if x.edge_count() <= 64 {
        let cols: Vec<u64> = (0..n)
            .map(|f| x.faces()[f].sides.iter().fold(0u64, |m, &e| m ^ (1 << e)))
            .collect();
        let (mut chain, mut bd) = (0u64, 0u64);
        for step in 1u64..1 << n {
            let flip = step.trailing_zeros() as usize;
            chain ^= 1 << flip;
            bd ^= cols[flip];
            if bd == 0 {
                found.push(BitChain::from_u64(n, chain));
            }
        }
    } else {
        let cols: Vec<BitChain> = (0..n).map(|f| x.face_boundary(f)).collect();
        let mut chain = BitChain::zeros(n);
        let mut bd = BitChain::zeros(x.edge_count());
        for step in 1u64..1 << n {
            let flip = step.trailing_zeros() as usize;
            chain.toggle(flip);
            bd.xor_assign(&cols[flip]);
            if bd.is_zero() {
                found.push(chain.clone());
            }
        }
    }
    finish(x, found)
}

/// Exhaustive depth-first search over face inclusions. After deciding face
/// `i`, every edge whose last occurrence is in face `i` must have even
/// multiplicity, otherwise the branch is cut. No size limit.
pub fn two_cycles_backtrack(x: &CellComplex) -> Result<Vec<TwoCycle>> {
    let n = x.face_count();
    let mut last = vec![None; x.edge_count()];
    for (f, face) in x.faces().iter().enumerate() {
        for &e in &face.sides {
            last[e] = Some(f);
        }
    }
    let mut closing = vec![Vec::new(); n];
    for (e, l) in last.iter().enumerate() {
        if let Some(f) = l {
            closing[*f].push(e);
        }
    }

    struct Search<'a> {
        x: &'a CellComplex,
        closing: Vec<Vec<usize>>,
        parity: Vec<bool>,
        chain: BitChain,
        found: Vec<BitChain>,
    }

    impl Search<'_> {
        fn toggle_face(&mut self, f: usize) {
            for &e in &self.x.faces()[f].sides {
                self.parity[e] = !self.parity[e];
            }
            self.chain.toggle(f);
        }

        fn run(&mut self, f: usize) {
            if f == self.x.face_count() {
                if !self.chain.is_zero() {
                    self.found.push(self.chain.clone());
                }
                return;
            }
            for take in [false, true] {
                if take {
                    self.toggle_face(f);
                }
                if self.closing[f].iter().all(|&e| !self.parity[e]) {
                    self.run(f + 1);
                }
                if take {
                    self.toggle_face(f);
                }
            }
        }
    }

    let mut search = Search {
        x,
        closing,
        parity: vec![false; x.edge_count()],
        chain: BitChain::zeros(n),
        found: Vec::new(),
    };
    search.run(0);
    finish(x, search.found)
}

pub fn two_cycles_kernel(x: &CellComplex, cap: u64) -> Result<Vec<TwoCycle>> {
    let basis = kernel_basis(&boundary_matrix(x));
    finish(x, enumerate_kernel(&basis, cap)?)
}

/// Linear system over faces expressing "is a 2-cycle" through the link at
/// one vertex.
#[derive(Clone, Debug)]
pub struct LinkSystem {
    pub vertex: usize,
    /// One row per link node (even degree of the corner 1-chain), then one
    /// row per edge opposite the vertex (the identification parity).
    pub matrix: Gf2Matrix,
    pub node_rows: usize,
    /// Faces (equivalently link arcs) grouped by the edge opposite `vertex`.
    pub identified: Vec<Vec<usize>>,
}

/// Builds the system at `v`. Requires at least two vertices and exactly one
/// corner of every face at `v`, so link arcs and faces correspond one to one.
pub fn link_system(x: &CellComplex, v: usize) -> Result<LinkSystem> {
    if x.vertex_count() < 2 {
        return Err(Error::LinkPrecondition(
            "the complex has a single vertex; every face has three corners there".into(),
        ));
    }
    let link = link_graph(x, v)?;
    let mut arc_of_face = vec![None; x.face_count()];
    for (i, arc) in link.arcs().iter().enumerate() {
        let f = arc.face.expect("complex links carry faces");
        if arc_of_face[f].replace(i).is_some() {
            return Err(Error::LinkPrecondition(format!(
                "face {} has more than one corner at vertex {v}",
                f + 1
            )));
        }
    }
    if let Some(f) = arc_of_face.iter().position(Option::is_none) {
        return Err(Error::LinkPrecondition(format!(
            "face {} misses vertex {v}",
            f + 1
        )));
    }

    let faces = x.face_count();
    let mut rows = Vec::new();
    for node in 0..link.node_count() {
        let mut row = BitChain::zeros(faces);
        for &(_, arc) in link.incident(node) {
            let a = &link.arcs()[arc];
            if a.from != a.to {
                row.toggle(a.face.unwrap());
            }
        }
        rows.push(row);
    }
    let node_rows = rows.len();

    let mut opposite: Vec<Vec<usize>> = vec![Vec::new(); x.edge_count()];
    for arc in link.arcs() {
        let f = arc.face.unwrap();
        let side = x.faces()[f].sides[(arc.corner + 2) % 3];
        opposite[side].push(f);
    }
    let identified: Vec<Vec<usize>> = opposite.into_iter().filter(|g| !g.is_empty()).collect();
    for group in &identified {
        rows.push(BitChain::from_indices(faces, group.iter().copied()));
    }
    Ok(LinkSystem {
        vertex: v,
        matrix: Gf2Matrix::from_rows(faces, rows),
        node_rows,
        identified,
    })
}

impl LinkSystem {
    /// The corner 1-chain is a union of circles: every node has even degree.
    pub fn is_link_cycle(&self, chain: &BitChain) -> bool {
        (0..self.node_rows).all(|r| !self.matrix.row(r).and_parity(chain))
    }

    /// For every identified triple `{e, e', e''}` and every `e` in the chain,
    /// exactly one of `e'`, `e''` is in the chain. Groups of other sizes
    /// (non-thick complexes) fall back to even parity.
    pub fn pairing_holds(&self, chain: &BitChain) -> bool {
        self.identified.iter().all(|group| match group.as_slice() {
            &[a, b, c] => [(a, b, c), (b, a, c), (c, a, b)]
                .iter()
                .all(|&(e, e1, e2)| !chain.get(e) || (chain.get(e1) ^ chain.get(e2))),
            g => g.iter().filter(|&&f| chain.get(f)).count() % 2 == 0,
        })
    }
}

/// 2-cycles of a multi-vertex complex from the link at `v`: corner 1-cycles
/// whose arcs pair up under the identification of edges opposite `v`.
pub fn cycles_via_link(x: &CellComplex, v: usize, cap: u64) -> Result<Vec<TwoCycle>> {
    let system = link_system(x, v)?;
    let basis = kernel_basis(&system.matrix);
    let mut chains = Vec::new();
    for chain in enumerate_kernel(&basis, cap)? {
        if !system.is_link_cycle(&chain) || !system.pairing_holds(&chain) {
            return Err(Error::Internal(format!(
                "link solution {} violates its own conditions",
                chain.to_bitstring()
            )));
        }
        chains.push(chain);
    }
    finish(x, chains)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Method {
    Brute,
    Backtrack,
    Kernel,
    Link { vertex: usize },
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Backtrack => "backtrack",
            Method::Kernel => "kernel",
            Method::Link { .. } => "link",
        }
    }
}

pub fn two_cycles(x: &CellComplex, method: Method, cap: u64) -> Result<Vec<TwoCycle>> {
    match method {
        Method::Brute => two_cycles_bruteforce(x, DEFAULT_BRUTE_MAX_FACES),
        Method::Backtrack => two_cycles_backtrack(x),
        Method::Kernel => two_cycles_kernel(x, cap),
        Method::Link { vertex } => cycles_via_link(x, vertex, cap),
    }
}

pub fn format_bitstring(c: &TwoCycle) -> String {
    c.bitstring()
}

/// A chain read from its bitstring; `is_cycle` is false when the chain has
/// nonzero boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedChain {
    pub chain: BitChain,
    pub is_cycle: bool,
}

impl ParsedChain {
    pub fn into_cycle(self, x: &CellComplex) -> Result<TwoCycle> {
        TwoCycle::new(x, self.chain)
    }
}

pub fn parse_bitstring(text: &str, x: &CellComplex) -> Result<ParsedChain> {
    let chain = BitChain::parse_bitstring(text)?;
    if chain.width() != x.face_count() {
        return Err(Error::BitstringLength {
            expected: x.face_count(),
            found: chain.width(),
        });
    }
    let is_cycle = !chain.is_zero() && x.boundary(&chain).is_zero();
    Ok(ParsedChain { chain, is_cycle })
}

/// `<len>-cycle <bitstring>` lines.
pub fn table2_lines(cycles: &[TwoCycle]) -> String {
    cycles.iter().map(|c| format!("{c}\n")).collect()
}
