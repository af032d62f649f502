//! The vertex link of the T1 polyhedron and its generalized-quadrangle
//! profile. Pass a path to also write the link in DOT format.
//!
//! ```text
//! cargo run --example link_profile -- /tmp/t1-link.dot
//! ```

use std::fmt::Write;

use trisurf::prelude::*;

pub fn run_example(dot: Option<&str>) -> Result<String> {
    let t1 = builtin_fixture("T1")?.into_presentation()?;
    let x = build_one_vertex_complex(&t1);
    let link = link_graph(&x, 0)?;
    let report = validate_gq_link(&link);

    let mut out = String::new();
    writeln!(out, "{report}").unwrap();
    let first = &link.nodes()[0];
    let neighbours: Vec<&str> = link
        .incident(0)
        .iter()
        .map(|&(w, _)| link.nodes()[w].name.as_str())
        .collect();
    writeln!(out, "{} is joined to {}", first.name, neighbours.join(", ")).unwrap();
    if let Some(path) = dot {
        std::fs::write(path, link.to_dot()).map_err(|e| Error::Internal(e.to_string()))?;
        writeln!(out, "wrote {path}").unwrap();
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    let dot = std::env::args().nth(1);
    print!("{}", run_example(dot.as_deref())?);
    Ok(())
}
