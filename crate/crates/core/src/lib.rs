//! Surfaces in 1-vertex triangle polyhedra and their 3-fold cyclic covers.
//!
//! A polygonal presentation (triangle words over generators `x_1..x_n`)
//! glues into a polyhedron with one vertex. This crate builds that complex
//! and its degree-3 cyclic cover, enumerates their mod-2 2-cycles, and
//! decides from the vertex links whether a cycle carries a locally
//! isometric, hence π1-injective, immersed surface.
//!
//! ```
//! use trisurf::prelude::*;
//!
//! let t1 = builtin_fixture("T1").unwrap().into_presentation().unwrap();
//! let x = build_one_vertex_complex(&t1);
//! let cycles = two_cycles_kernel(&x, DEFAULT_ENUM_CAP).unwrap();
//! assert_eq!(cycles[0].to_string(), "6-cycle 101101000000011");
//! ```

pub mod cli;
pub mod complex;
pub mod cover;
pub mod cycles;
pub mod error;
pub mod geometry;
pub mod gf2;
pub mod presentation;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::complex::{
        boundary_matrix, build_one_vertex_complex, link_graph, validate_gq_link, CellComplex,
        GqReport, LinkGraph,
    };
    pub use crate::cover::{
        build_cover_complex, cyclic_triple_cover, cyclic_triple_cover_with, CoverLabel,
        CoverPresentation, SheetOrder,
    };
    pub use crate::cycles::{
        cycles_via_link, two_cycles, two_cycles_backtrack, two_cycles_bruteforce,
        two_cycles_kernel, Method, TwoCycle, DEFAULT_BRUTE_MAX_FACES,
    };
    pub use crate::geometry::{
        certify_surface, chain_link_subgraph, euler_characteristic, geodesic_check, orientability,
        shortcut_check, Certifier, Circle, SurfaceCertificate, Verdict,
    };
    pub use crate::gf2::{BitChain, Gf2Matrix, DEFAULT_ENUM_CAP};
    pub use crate::presentation::{
        builtin_fixture, parse_presentation, validate, Fixture, PolygonalPresentation,
    };
    pub use crate::{Error, Result};
}
