//! Polygonal presentations: generators `x_1..x_n` and cyclic triangle words
//! `x_i x_j x_k = 1`.
//!
//! The text format is one triangle per line as three whitespace-separated
//! 1-based generator indices, with `#` starting a comment and an optional
//! `generators N` header line.

mod fixtures;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use fixtures::{
    builtin_fixture, fixture_names, parse_cover_listing, published_cover_blocks,
    published_one_vertex_cycles, CoverListing, Fixture, LabelSpace, ListingBlock, TriangleList,
    T1_TEXT,
};

/// Generator `x_i`, stored 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GeneratorId(u32);

impl GeneratorId {
    pub fn new(index: u32) -> Option<Self> {
        (index >= 1).then_some(GeneratorId(index))
    }

    pub fn index(self) -> u32 {
        self.0
    }

    /// 0-based position, used as the edge index of the 1-vertex complex.
    pub fn offset(self) -> usize {
        self.0 as usize - 1
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.0)
    }
}

/// Three generators read cyclically. Rotations describe the same triangle;
/// reversals do not.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TriangleWord(pub [GeneratorId; 3]);

impl TriangleWord {
    pub fn from_indices(i: u32, j: u32, k: u32) -> Option<Self> {
        Some(TriangleWord([
            GeneratorId::new(i)?,
            GeneratorId::new(j)?,
            GeneratorId::new(k)?,
        ]))
    }

    pub fn sides(&self) -> [GeneratorId; 3] {
        self.0
    }

    pub fn rotated(&self, by: usize) -> TriangleWord {
        let s = self.0;
        TriangleWord([s[by % 3], s[(by + 1) % 3], s[(by + 2) % 3]])
    }

    /// Lexicographically least rotation.
    pub fn canonical(&self) -> TriangleWord {
        (0..3).map(|r| self.rotated(r)).min_by_key(|w| w.0).unwrap()
    }

    pub fn is_rotation_of(&self, other: &TriangleWord) -> bool {
        self.canonical() == other.canonical()
    }
}

impl fmt::Display for TriangleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0;
        write!(f, "({a},{b},{c})")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolygonalPresentation {
    name: String,
    generator_count: u32,
    triangles: Vec<TriangleWord>,
}

impl PolygonalPresentation {
    pub fn new(
        name: impl Into<String>,
        generator_count: u32,
        triangles: Vec<TriangleWord>,
    ) -> Result<Self> {
        for t in &triangles {
            for g in t.sides() {
                if g.index() > generator_count {
                    return Err(Error::GeneratorOutOfRange {
                        index: g.index(),
                        count: generator_count,
                    });
                }
            }
        }
        Ok(PolygonalPresentation {
            name: name.into(),
            generator_count,
            triangles,
        })
    }

    /// Convenience constructor from index triples; the generator count is
    /// the largest index used.
    pub fn from_triples(name: impl Into<String>, triples: &[[u32; 3]]) -> Result<Self> {
        let mut triangles = Vec::with_capacity(triples.len());
        for (n, &[i, j, k]) in triples.iter().enumerate() {
            let t = TriangleWord::from_indices(i, j, k).ok_or_else(|| Error::Parse {
                line: n + 1,
                message: "generator index must be at least 1".into(),
            })?;
            triangles.push(t);
        }
        let count = triples.iter().flatten().copied().max().unwrap_or(0);
        Self::new(name, count, triangles)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn generator_count(&self) -> u32 {
        self.generator_count
    }

    pub fn triangles(&self) -> &[TriangleWord] {
        &self.triangles
    }

    /// Number of side occurrences of each generator; entry `i` is `x_{i+1}`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.generator_count as usize];
        for t in &self.triangles {
            for g in t.sides() {
                m[g.offset()] += 1;
            }
        }
        m
    }

    /// Canonical text form, parseable by [`parse_presentation`].
    pub fn to_text(&self) -> String {
        let mut out = format!("generators {}\n", self.generator_count);
        for t in &self.triangles {
            let [a, b, c] = t.sides();
            out.push_str(&format!("{} {} {}\n", a.index(), b.index(), c.index()));
        }
        out
    }
}

pub fn parse_presentation(text: &str) -> Result<PolygonalPresentation> {
    parse_named(text, "presentation")
}

pub fn parse_named(text: &str, name: &str) -> Result<PolygonalPresentation> {
    let mut header: Option<u32> = None;
    let mut triangles = Vec::new();
    let mut max_index = 0u32;
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields[0] == "generators" {
            if header.is_some() || !triangles.is_empty() {
                return Err(Error::Parse {
                    line: line_no,
                    message: "`generators` header must come first and only once".into(),
                });
            }
            let count = match fields.as_slice() {
                [_, count] => count.parse::<u32>().ok(),
                _ => None,
            };
            header = Some(count.ok_or_else(|| Error::Parse {
                line: line_no,
                message: format!("malformed header `{line}`"),
            })?);
            continue;
        }
        if fields.len() != 3 {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected three generator indices, found `{line}`"),
            });
        }
        let mut ids = [0u32; 3];
        for (slot, field) in ids.iter_mut().zip(&fields) {
            let value: i64 = field.parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("`{field}` is not an integer"),
            })?;
            if value < 1 {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("generator index {value} is not positive"),
                });
            }
            *slot = u32::try_from(value).map_err(|_| Error::Parse {
                line: line_no,
                message: format!("generator index {value} is too large"),
            })?;
        }
        max_index = max_index.max(ids[0]).max(ids[1]).max(ids[2]);
        triangles.push(TriangleWord::from_indices(ids[0], ids[1], ids[2]).unwrap());
    }
    if triangles.is_empty() {
        return Err(Error::EmptyPresentation);
    }
    PolygonalPresentation::new(name, header.unwrap_or(max_index), triangles)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub generator_count: u32,
    pub triangle_count: usize,
    /// Entry `i` is the multiplicity of `x_{i+1}`.
    pub multiplicities: Vec<usize>,
    /// Generators whose multiplicity is not 3 (only filled in strict mode).
    pub off_thickness: Vec<GeneratorId>,
    pub strict: bool,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.off_thickness.is_empty()
    }
}

pub fn validate(p: &PolygonalPresentation, strict: bool) -> ValidationReport {
    let multiplicities = p.multiplicities();
    let off_thickness = if strict {
        multiplicities
            .iter()
            .enumerate()
            .filter(|(_, &m)| m != 3)
            .map(|(i, _)| GeneratorId(i as u32 + 1))
            .collect()
    } else {
        Vec::new()
    };
    ValidationReport {
        generator_count: p.generator_count(),
        triangle_count: p.triangles().len(),
        multiplicities,
        off_thickness,
        strict,
    }
}
