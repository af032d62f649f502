//! An 8-triangle chain read as a standalone 1-vertex complex. Its single
//! vertex link splits into three circles of length 8.

use std::fmt::Write;

use trisurf::geometry::decompose;
use trisurf::prelude::*;

pub fn run_example() -> Result<String> {
    let Fixture::Triangles(list) = builtin_fixture("G9_surface_chain")? else {
        return Err(Error::Internal("expected a triangle list".into()));
    };
    let p = list.to_presentation()?;
    let x = build_one_vertex_complex(&p);
    let all = BitChain::from_indices(x.face_count(), 0..x.face_count());
    let c = TwoCycle::new(&x, all)?;
    let link = link_graph(&x, 0)?;
    let d = decompose(&link, c.chain())?;

    let mut out = String::new();
    writeln!(out, "{c}").unwrap();
    for circle in &d.circles {
        let names: Vec<&str> = circle
            .nodes
            .iter()
            .map(|&n| link.nodes()[n].name.as_str())
            .collect();
        writeln!(
            out,
            "circle of length {}: {}",
            circle.len(),
            names.join(" ")
        )
        .unwrap();
    }
    let chi = euler_characteristic(&x, &c)?;
    let orientable = orientability(&x, &c)?;
    writeln!(out, "chi = {chi}, orientable = {orientable}").unwrap();
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
