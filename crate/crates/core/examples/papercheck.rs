//! Runs the built-in regression fixtures and prints one line per fixture.

use liegcr::papercheck::{fixtures, run, Options};

fn main() -> liegcr::Result<()> {
    let report = run(None, &Options::default())?;
    for (fx, meta) in report.fixtures.iter().zip(fixtures()) {
        let status = if fx.pass() { "ok" } else { "FAILED" };
        println!("{:<22} {status:<6} {} checks  {}", fx.id, fx.checks.len(), meta.about);
    }
    println!("all passed: {}", report.pass());
    Ok(())
}
