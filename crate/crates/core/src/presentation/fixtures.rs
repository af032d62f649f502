//! Data bundled with the crate: presentation T1, the published 1-vertex
//! cycle table, and the published 3-vertex cover cycle listings.

use std::sync::OnceLock;

use serde::Serialize;

use super::{parse_named, PolygonalPresentation};
use crate::error::{Error, Result};

/// Presentation T1 in the crate's text format.
pub const T1_TEXT: &str = "\
# presentation T1
generators 15
1 1 10
1 15 2
2 11 9
2 14 3
3 7 4
3 15 13
4 8 6
4 12 11
5 5 8
5 10 12
6 6 14
7 7 12
8 13 9
9 14 15
10 13 11
";

const COVER_LISTING_TEXT: &str = include_str!("cover_listings.txt");

/// Published mod-2 2-cycles of the 1-vertex polyhedra, keyed by presentation
/// number. Numbers absent here have no cycles.
const ONE_VERTEX_TABLE: &[(u32, &[&str])] = &[
    (1, &["101101000000011"]),
    (
        2,
        &["000011100010110", "101101000000011", "101110100010101"],
    ),
    (3, &["000011011110101"]),
    (4, &["000011011110101"]),
    (
        5,
        &["000011001100011", "101101010001110", "101110011101101"],
    ),
    (
        6,
        &["001101110101100", "100000001111001", "101101111010101"],
    ),
    (
        7,
        &[
            "000010110011100",
            "001101110101100",
            "001111000110000",
            "100000001111001",
            "100010111100101",
            "101101111010101",
            "101111001001001",
        ],
    ),
    (8, &["101100010000011"]),
    (9, &["000001111111010"]),
    (10, &["100000110110111"]),
    (11, &["100001100111101"]),
    (12, &["100011000011111"]),
    (13, &["100011000111000"]),
    (14, &["100011011100110"]),
    (15, &["101110011010111"]),
    (16, &["100000110000111"]),
    (18, &["000000001111011"]),
    (20, &["001101001100100"]),
];

/// Published 1-vertex cycle bitstrings for presentation `number` (1..=23).
/// `None` for numbers outside that range; an empty slice means no cycles.
pub fn published_one_vertex_cycles(number: u32) -> Option<&'static [&'static str]> {
    if !(1..=23).contains(&number) {
        return None;
    }
    Some(
        ONE_VERTEX_TABLE
            .iter()
            .find(|(n, _)| *n == number)
            .map_or(&[][..], |(_, rows)| rows),
    )
}

/// One "Triangles in the 2-cycle" block of a cover listing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ListingBlock {
    /// Integer-labelled triangle rows (label `3(i-1)+j` for `x_i^j`).
    pub triangles: Vec<[u32; 3]>,
    pub generated_by: Vec<Vec<u32>>,
    /// Label sequences of the circles in the link at one vertex.
    pub link_circles: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverListing {
    pub number: u32,
    pub blocks: Vec<ListingBlock>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    None,
    Triangles,
    Generators,
    Circles,
}

/// Parses the cover listing format: `Number N` headers, then blocks of
/// `Triangles in the 2-cycle:`, `The cycles are generated by:` and
/// `Cycles in the link:` sections with whitespace-separated integer rows.
pub fn parse_cover_listing(text: &str) -> Result<Vec<CoverListing>> {
    let mut out: Vec<CoverListing> = Vec::new();
    let mut section = Section::None;
    for (n, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let err = |message: String| Error::Parse {
            line: n + 1,
            message,
        };
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("Number") {
            let number = rest
                .trim()
                .parse()
                .map_err(|_| err(format!("bad number header `{line}`")))?;
            out.push(CoverListing {
                number,
                blocks: Vec::new(),
            });
            section = Section::None;
            continue;
        }
        let current = out
            .last_mut()
            .ok_or_else(|| err("content before the first `Number` header".into()))?;
        if line.starts_with("Triangles in the 2-cycle") {
            current.blocks.push(ListingBlock {
                triangles: Vec::new(),
                generated_by: Vec::new(),
                link_circles: Vec::new(),
            });
            section = Section::Triangles;
            continue;
        }
        if line.starts_with("The cycles are generated by") {
            section = Section::Generators;
            continue;
        }
        if line.starts_with("Cycles in the link") {
            section = Section::Circles;
            continue;
        }
        let values: Vec<u32> = line
            .split_whitespace()
            .map(|s| s.parse())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| err(format!("expected integers, found `{line}`")))?;
        let block = current
            .blocks
            .last_mut()
            .ok_or_else(|| err("row outside a triangle block".into()))?;
        match section {
            Section::Triangles => {
                let row: [u32; 3] = values
                    .try_into()
                    .map_err(|_| err(format!("triangle row `{line}` must have three labels")))?;
                block.triangles.push(row);
            }
            Section::Generators => block.generated_by.push(values),
            Section::Circles => block.link_circles.push(values),
            Section::None => return Err(err("row outside any section".into())),
        }
    }
    Ok(out)
}

fn listings() -> &'static [CoverListing] {
    static DATA: OnceLock<Vec<CoverListing>> = OnceLock::new();
    DATA.get_or_init(|| {
        parse_cover_listing(COVER_LISTING_TEXT).expect("bundled cover listing parses")
    })
}

/// Bundled cover cycle blocks for presentation `number` (1, 2, 9, 14, 18, 20).
pub fn published_cover_blocks(number: u32) -> Option<&'static [ListingBlock]> {
    listings()
        .iter()
        .find(|a| a.number == number)
        .map(|a| a.blocks.as_slice())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LabelSpace {
    /// Rows are generator indices of a 1-vertex complex.
    Generators,
    /// Rows are cover labels `3(i-1)+j`.
    CoverIntegers,
}

/// A triangle list fixture. Rows are side multisets, not oriented words,
/// unless `labels` is [`LabelSpace::Generators`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriangleList {
    pub name: String,
    pub labels: LabelSpace,
    pub rows: Vec<[u32; 3]>,
}

impl TriangleList {
    /// Reads the rows as cyclic words of a standalone 1-vertex presentation.
    pub fn to_presentation(&self) -> Result<PolygonalPresentation> {
        PolygonalPresentation::from_triples(self.name.clone(), &self.rows)
    }

    /// Rows as sorted triples, sorted; the multiset view used for matching.
    pub fn sorted_rows(&self) -> Vec<[u32; 3]> {
        let mut rows: Vec<[u32; 3]> = self
            .rows
            .iter()
            .map(|r| {
                let mut r = *r;
                r.sort_unstable();
                r
            })
            .collect();
        rows.sort_unstable();
        rows
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fixture {
    Presentation(PolygonalPresentation),
    Triangles(TriangleList),
}

impl Fixture {
    pub fn into_presentation(self) -> Result<PolygonalPresentation> {
        match self {
            Fixture::Presentation(p) => Ok(p),
            Fixture::Triangles(t) => Err(Error::NotAPresentation(t.name)),
        }
    }
}

const G9_SURFACE_CHAIN: &[[u32; 3]] = &[
    [8, 7, 3],
    [10, 13, 3],
    [8, 5, 4],
    [14, 14, 4],
    [10, 12, 5],
    [7, 12, 6],
    [15, 9, 6],
    [15, 13, 9],
];

// (group, presentation number, block count) for the cover listings
const COVER_CHAINS: &[(&str, u32)] = &[
    ("G1", 1),
    ("G2", 2),
    ("G9", 9),
    ("G14", 14),
    ("G18", 18),
    ("G20", 20),
];

pub fn fixture_names() -> Vec<String> {
    let mut names = vec!["T1".to_string(), "G9_surface_chain".to_string()];
    for &(group, number) in COVER_CHAINS {
        let blocks = published_cover_blocks(number).map_or(0, <[_]>::len);
        for b in 1..=blocks {
            names.push(format!("{group}_cover_chain_{b}"));
        }
    }
    names
}

pub fn builtin_fixture(name: &str) -> Result<Fixture> {
    match name {
        "T1" => return Ok(Fixture::Presentation(parse_named(T1_TEXT, "T1")?)),
        "G9_surface_chain" => {
            return Ok(Fixture::Triangles(TriangleList {
                name: name.into(),
                labels: LabelSpace::Generators,
                rows: G9_SURFACE_CHAIN.to_vec(),
            }))
        }
        _ => {}
    }
    let unknown = || Error::UnknownFixture(name.to_string());
    let (group, index) = name.split_once("_cover_chain_").ok_or_else(unknown)?;
    let &(_, number) = COVER_CHAINS
        .iter()
        .find(|(g, _)| *g == group)
        .ok_or_else(unknown)?;
    let index: usize = index.parse().map_err(|_| unknown())?;
    let block = index
        .checked_sub(1)
        .and_then(|i| published_cover_blocks(number)?.get(i))
        .ok_or_else(unknown)?;
    Ok(Fixture::Triangles(TriangleList {
        name: name.into(),
        labels: LabelSpace::CoverIntegers,
        rows: block.triangles.clone(),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn listing_shapes() {
        let sizes: Vec<(u32, Vec<usize>)> = listings()
            .iter()
            .map(|a| {
                (
                    a.number,
                    a.blocks.iter().map(|b| b.triangles.len()).collect(),
                )
            })
            .collect();
        assert_eq!(
            sizes,
            vec![
                (1, vec![8, 8, 8]),
                (2, vec![8, 8, 8]),
                (9, vec![24]),
                (14, vec![24]),
                (18, vec![16, 16]),
                (20, vec![24]),
            ]
        );
        let n1 = published_cover_blocks(1).unwrap();
        assert_eq!(n1[0].triangles[0], [3, 29, 1]);
        assert_eq!(n1[0].link_circles, vec![vec![1, 3, 4, 33, 37, 9, 40, 45]]);
        assert_eq!(n1[1].generated_by.len(), 2);
        // Numbers 1 and 2 list the same cycles
        assert_eq!(published_cover_blocks(2).unwrap(), n1);
        for a in listings() {
            for b in &a.blocks {
                assert!(b.triangles.iter().flatten().all(|&l| (1..=45).contains(&l)));
                assert!(b.link_circles.iter().all(|c| c.len() == 8));
            }
        }
    }

    #[test]
    fn fixtures_resolve() {
        let names = fixture_names();
        assert!(names.contains(&"G1_cover_chain_3".to_string()));
        assert!(names.contains(&"G18_cover_chain_2".to_string()));
        for name in &names {
            builtin_fixture(name).unwrap();
        }
        assert!(matches!(
            builtin_fixture("G1_cover_chain_4"),
            Err(Error::UnknownFixture(_))
        ));
        assert!(matches!(
            builtin_fixture("T2"),
            Err(Error::UnknownFixture(_))
        ));
        assert!(matches!(
            builtin_fixture("G1_cover_chain_0"),
            Err(Error::UnknownFixture(_))
        ));
        let Fixture::Triangles(g9) = builtin_fixture("G9_surface_chain").unwrap() else {
            panic!("expected triangles");
        };
        assert_eq!(g9.rows.len(), 8);
        assert_eq!(g9.rows[3], [14, 14, 4]);
    }

    #[test]
    fn published_table() {
        assert_eq!(
            published_one_vertex_cycles(1),
            Some(&["101101000000011"][..])
        );
        assert_eq!(published_one_vertex_cycles(7).unwrap().len(), 7);
        assert_eq!(published_one_vertex_cycles(17), Some(&[][..]));
        assert_eq!(published_one_vertex_cycles(24), None);
        for (_, rows) in ONE_VERTEX_TABLE {
            for r in rows.iter() {
                assert_eq!(r.len(), 15);
            }
        }
    }

    #[test]
    fn parse_cover_listing_errors() {
        assert!(parse_cover_listing("1 2 3").is_err());
        assert!(parse_cover_listing("Number 1\n Triangles in the 2-cycle:\n 1 2\n").is_err());
        assert!(parse_cover_listing("Number x").is_err());
    }
}
