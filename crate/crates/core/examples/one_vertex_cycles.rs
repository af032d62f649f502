//! Mod-2 2-cycles of a 1-vertex polyhedron, one bitstring per line.
//! Reads a presentation file if one is given, otherwise uses T1.

use std::fmt::Write;

use trisurf::cycles::table2_lines;
use trisurf::prelude::*;

pub fn run_example(path: Option<&str>) -> Result<String> {
    let p = match path {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Internal(e.to_string()))?;
            parse_presentation(&text)?
        }
        None => builtin_fixture("T1")?.into_presentation()?,
    };
    let x = build_one_vertex_complex(&p);
    let cycles = two_cycles(&x, Method::Kernel, DEFAULT_ENUM_CAP)?;

    let mut out = String::new();
    writeln!(
        out,
        "{}: {} generators, {} cycles",
        p.name(),
        p.generator_count(),
        cycles.len()
    )
    .unwrap();
    out.push_str(&table2_lines(&cycles));
    for c in &cycles {
        let faces: Vec<String> = c
            .faces()
            .iter()
            .map(|&f| p.triangles()[f].to_string())
            .collect();
        writeln!(out, "  faces {}", faces.join(" ")).unwrap();
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    let path = std::env::args().nth(1);
    print!("{}", run_example(path.as_deref())?);
    Ok(())
}
