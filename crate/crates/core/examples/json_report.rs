//! Machine-readable certificates: runs the `certify` pipeline in-process
//! and pulls a few fields out of the JSON report.

use trisurf::cli;

pub fn run_example() -> Result<String, Box<dyn std::error::Error>> {
    let outcome = cli::run(["trisurf", "certify", "--fixture", "T1", "--cover", "--json"]);
    if outcome.code != cli::EXIT_OK {
        return Err(outcome.stderr.into());
    }
    let report: serde_json::Value = serde_json::from_str(&outcome.stdout)?;
    let mut out = format!("{} {}\n", report["schema"], report["summary"]);
    for cert in report["certificates"].as_array().into_iter().flatten() {
        out.push_str(&format!(
            "{}-cycle {} {}\n",
            cert["cycle"]["length"], cert["cycle"]["bitstring"], cert["verdict"]["status"]
        ));
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    print!("{}", run_example()?);
    Ok(())
}
