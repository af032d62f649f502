//! Why a link circle longer than 8 is never locally geodesic in the 8-cage.
//! T1's only 2-cycle meets the vertex in an 8-circle and a 10-circle; the
//! 10-circle has ambient shortcuts, the 8-circle has none.

use std::fmt::Write;

use trisurf::geometry::{decompose, SHORTCUT_MAX_LEN};
use trisurf::prelude::*;

pub fn run_example() -> Result<String> {
    let t1 = builtin_fixture("T1")?.into_presentation()?;
    let x = build_one_vertex_complex(&t1);
    let link = link_graph(&x, 0)?;
    let c = &two_cycles_kernel(&x, DEFAULT_ENUM_CAP)?[0];
    let d = decompose(&link, c.chain())?;

    let mut out = String::new();
    for circle in &d.circles {
        let shortcuts = shortcut_check(&link, circle, SHORTCUT_MAX_LEN);
        let geodesic = geodesic_check(&link, circle);
        writeln!(
            out,
            "circle of length {}: {} shortcuts, {} non-geodesic pairs",
            circle.len(),
            shortcuts.len(),
            geodesic.len()
        )
        .unwrap();
        if let Some(s) = shortcuts.first() {
            writeln!(out, "  shortcut {}", s.path.join(" - ")).unwrap();
        }
        if let Some(g) = geodesic.first() {
            writeln!(
                out,
                "  {} to {}: {} along the circle, {} in the link",
                g.from, g.to, g.circle_distance, g.ambient_distance
            )
            .unwrap();
        }
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
