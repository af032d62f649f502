//! The four cycle enumeration routes side by side, with timings.

use std::fmt::Write;
use std::time::Instant;

use trisurf::prelude::*;

fn timed(
    out: &mut String,
    name: &str,
    run: impl FnOnce() -> Result<Vec<TwoCycle>>,
) -> Result<Vec<TwoCycle>> {
    let start = Instant::now();
    let cycles = run()?;
    writeln!(
        out,
        "  {name:<10} {:>3} cycles in {:.2?}",
        cycles.len(),
        start.elapsed()
    )
    .unwrap();
    Ok(cycles)
}

pub fn run_example() -> Result<String> {
    let t1 = builtin_fixture("T1")?.into_presentation()?;
    let x = build_one_vertex_complex(&t1);
    let y = build_cover_complex(&cyclic_triple_cover(&t1));

    let mut out = String::from("T1\n");
    let reference = timed(&mut out, "kernel", || {
        two_cycles_kernel(&x, DEFAULT_ENUM_CAP)
    })?;
    let brute = timed(&mut out, "brute", || {
        two_cycles_bruteforce(&x, DEFAULT_BRUTE_MAX_FACES)
    })?;
    let back = timed(&mut out, "backtrack", || two_cycles_backtrack(&x))?;
    let mut agree = brute == reference && back == reference;
    if let Err(e) = cycles_via_link(&x, 0, DEFAULT_ENUM_CAP) {
        writeln!(out, "  link       {e}").unwrap();
    }

    out.push_str("cover of T1\n");
    let reference = timed(&mut out, "kernel", || {
        two_cycles_kernel(&y, DEFAULT_ENUM_CAP)
    })?;
    let back = timed(&mut out, "backtrack", || two_cycles_backtrack(&y))?;
    agree &= back == reference;
    for v in 0..y.vertex_count() {
        let link = timed(&mut out, &format!("link v{v}"), || {
            cycles_via_link(&y, v, DEFAULT_ENUM_CAP)
        })?;
        agree &= link == reference;
    }
    writeln!(out, "all routes agree: {agree}").unwrap();
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
