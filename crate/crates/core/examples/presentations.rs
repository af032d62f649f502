//! Parsing and validating presentations, and the integer cover labels.

use std::fmt::Write;

use trisurf::cover::{decode_label, encode_label};
use trisurf::prelude::*;

const TEXT: &str = "\
# three triangles, generator 4 used once
generators 4
1 2 3
1 3 2
4 2 1
";

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    let p = parse_presentation(TEXT)?;
    let report = validate(&p, true);
    let off: Vec<String> = report
        .off_thickness
        .iter()
        .map(|g| format!("x{}", g.index()))
        .collect();
    writeln!(
        out,
        "multiplicities {:?}, off thickness [{}]",
        report.multiplicities,
        off.join(", ")
    )
    .unwrap();

    match parse_presentation("1 2 3\n1 2\n") {
        Err(e) => writeln!(out, "rejected: {e}").unwrap(),
        Ok(_) => writeln!(out, "unexpectedly parsed").unwrap(),
    }

    let cover = cyclic_triple_cover(&p);
    write!(out, "cover rows:\n{}", cover.to_integer_rows()).unwrap();
    let label: CoverLabel = decode_label(11, p.generator_count())?;
    writeln!(
        out,
        "label 11 is {label}, which encodes back to {}",
        encode_label(label)
    )
    .unwrap();
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
