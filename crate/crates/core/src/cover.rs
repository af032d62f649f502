//! Degree-3 cyclic covers of 1-vertex polyhedra.
//!
//! Each base triangle `(x_i, x_j, x_k)` is replaced by three lifts whose
//! sheet superscripts follow a fixed cyclic pattern. Label `x_i^j` is the
//! integer `3(i-1)+j`.

use std::fmt;

use serde::Serialize;

use crate::complex::{CellComplex, EdgeCell, EdgeLabel, FaceCell};
use crate::error::{Error, Result};
use crate::presentation::{GeneratorId, PolygonalPresentation, TriangleWord};

/// `x_i^j` with `j ∈ {1, 2, 3}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CoverLabel {
    base: GeneratorId,
    sheet: u8,
}

impl CoverLabel {
    pub fn new(base: GeneratorId, sheet: u8) -> Option<Self> {
        (1..=3)
            .contains(&sheet)
            .then_some(CoverLabel { base, sheet })
    }

    pub fn base(self) -> GeneratorId {
        self.base
    }

    pub fn sheet(self) -> u8 {
        self.sheet
    }

    pub fn encode(self) -> u32 {
        encode_label(self)
    }
}

impl fmt::Display for CoverLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}^{}", self.base.index(), self.sheet)
    }
}

pub fn encode_label(l: CoverLabel) -> u32 {
    3 * (l.base.index() - 1) + l.sheet as u32
}

/// Inverse of [`encode_label`] for a cover of a presentation with
/// `generator_count` generators.
pub fn decode_label(n: u32, generator_count: u32) -> Result<CoverLabel> {
    let max = 3 * generator_count;
    if n == 0 || n > max {
        return Err(Error::LabelOutOfRange { label: n, max });
    }
    let base = GeneratorId::new((n - 1) / 3 + 1).unwrap();
    Ok(CoverLabel {
        base,
        sheet: ((n - 1) % 3 + 1) as u8,
    })
}

/// Sheet patterns used for the three lifts of a base triangle.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SheetOrder {
    /// Lifts `(x_i^1,x_j^2,x_k^3)`, `(x_i^2,x_j^3,x_k^1)`, `(x_i^3,x_j^1,x_k^2)`.
    /// A sheet-`s` edge runs from vertex `s-1` to vertex `s mod 3`.
    #[default]
    Ascending,
    /// Lifts `(x_i^1,x_j^3,x_k^2)`, `(x_i^2,x_j^1,x_k^3)`, `(x_i^3,x_j^2,x_k^1)`,
    /// the convention of the published integer listings. A sheet-`s` edge
    /// runs from vertex `(1-s) mod 3` to vertex `(2-s) mod 3`. This is the
    /// ascending cover with sheets 2 and 3 exchanged.
    Descending,
}

impl SheetOrder {
    pub fn patterns(self) -> [[u8; 3]; 3] {
        match self {
            SheetOrder::Ascending => [[1, 2, 3], [2, 3, 1], [3, 1, 2]],
            SheetOrder::Descending => [[1, 3, 2], [2, 1, 3], [3, 2, 1]],
        }
    }

    /// `(origin, terminus)` of a sheet-`s` edge.
    pub fn endpoints(self, sheet: u8) -> (usize, usize) {
        let s = sheet as usize;
        match self {
            SheetOrder::Ascending => ((s + 2) % 3, s % 3),
            SheetOrder::Descending => ((4 - s) % 3, (5 - s) % 3),
        }
    }

    /// Sheet permutation carrying this order's cover onto the other one.
    pub fn swap_sheet(sheet: u8) -> u8 {
        match sheet {
            2 => 3,
            3 => 2,
            s => s,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CoverTriangle(pub [CoverLabel; 3]);

impl CoverTriangle {
    pub fn codes(&self) -> [u32; 3] {
        self.0.map(encode_label)
    }

    pub fn sorted_codes(&self) -> [u32; 3] {
        let mut c = self.codes();
        c.sort_unstable();
        c
    }

    pub fn project(&self) -> TriangleWord {
        TriangleWord(self.0.map(CoverLabel::base))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverPresentation {
    base: PolygonalPresentation,
    order: SheetOrder,
    triangles: Vec<CoverTriangle>,
}

impl CoverPresentation {
    pub fn base(&self) -> &PolygonalPresentation {
        &self.base
    }

    pub fn order(&self) -> SheetOrder {
        self.order
    }

    pub fn triangles(&self) -> &[CoverTriangle] {
        &self.triangles
    }

    /// Base triangle index (0-based) of cover triangle `t`.
    pub fn base_triangle(&self, t: usize) -> usize {
        t / 3
    }

    /// One `a b c` row per triangle, labels as integers.
    pub fn to_integer_rows(&self) -> String {
        self.triangles
            .iter()
            .map(|t| {
                let [a, b, c] = t.codes();
                format!("{a:>3} {b:>3} {c:>3}\n")
            })
            .collect()
    }
}

pub fn cyclic_triple_cover(p: &PolygonalPresentation) -> CoverPresentation {
    cyclic_triple_cover_with(p, SheetOrder::default())
}

/// Triangles `3t, 3t+1, 3t+2` (0-based) are the lifts of base triangle `t`,
/// in the order the patterns of `order` are listed.
pub fn cyclic_triple_cover_with(p: &PolygonalPresentation, order: SheetOrder) -> CoverPresentation {
    let triangles = p
        .triangles()
        .iter()
        .flat_map(|t| {
            let sides = t.sides();
            order.patterns().map(|pattern| {
                CoverTriangle([0, 1, 2].map(|k| CoverLabel::new(sides[k], pattern[k]).unwrap()))
            })
        })
        .collect();
    CoverPresentation {
        base: p.clone(),
        order,
        triangles,
    }
}

/// 3 vertices, one edge per cover label (edge index = label − 1), one face
/// per cover triangle.
pub fn build_cover_complex(cp: &CoverPresentation) -> CellComplex {
    let n = cp.base().generator_count();
    let edges = (1..=3 * n)
        .map(|code| {
            let label = decode_label(code, n).unwrap();
            let (origin, terminus) = cp.order().endpoints(label.sheet());
            EdgeCell {
                label: EdgeLabel::Cover(label),
                origin,
                terminus,
            }
        })
        .collect();
    let faces = cp
        .triangles()
        .iter()
        .map(|t| FaceCell {
            sides: t.codes().map(|c| c as usize - 1),
        })
        .collect();
    let name = format!("{} (3-fold cover)", cp.base().name());
    CellComplex::new(name, 3, edges, faces).expect("sheet patterns chain head to tail")
}
