//! Builds the 3-fold cyclic cover of T1 and certifies each of its 2-cycles.
//! Certified surfaces are printed as integer triangle rows together with
//! the link circles at every vertex.

use std::fmt::Write;

use trisurf::prelude::*;

pub fn run_example(order: SheetOrder) -> Result<String> {
    let t1 = builtin_fixture("T1")?.into_presentation()?;
    let cover = cyclic_triple_cover_with(&t1, order);
    let y = build_cover_complex(&cover);
    let certifier = Certifier::new(&y)?;

    let mut out = String::new();
    let mut certified = 0;
    let cycles = two_cycles_kernel(&y, DEFAULT_ENUM_CAP)?;
    for c in &cycles {
        let cert = certifier.certify(c)?;
        let lengths: Vec<_> = cert.links.iter().map(|l| l.lengths.clone()).collect();
        writeln!(
            out,
            "{c}  chi={} links={lengths:?}",
            cert.euler_characteristic
        )
        .unwrap();
        if !cert.verdict.is_certified() {
            continue;
        }
        certified += 1;
        for f in c.faces() {
            let [a, b, c] = y.face_labels(f);
            writeln!(out, "    {a:>3} {b:>3} {c:>3}").unwrap();
        }
        for l in &cert.links {
            writeln!(out, "    v{}: {:?}", l.vertex, l.circle_labels[0]).unwrap();
        }
    }
    writeln!(out, "{certified} of {} cycles certified", cycles.len()).unwrap();
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    let order = match std::env::args().nth(1).as_deref() {
        Some("descending") => SheetOrder::Descending,
        _ => SheetOrder::Ascending,
    };
    print!("{}", run_example(order)?);
    Ok(())
}
