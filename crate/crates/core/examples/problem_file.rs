//! Parses a problem in the JSON schema shared with the command-line tool
//! and reports a verdict with its certificate.

use liegcr::gcr::is_gcr;
use liegcr::io::Problem;
use liegcr::liealg::LieSubalgebra;

const PROBLEM: &str = r#"{
  "field": {"kind": "GFp", "p": 3},
  "group": {"kind": "SL", "n": 2},
  "generators": [[["1", "1"], ["0", "2"]]],
  "options": {"seed": 4}
}"#;

fn main() -> liegcr::Result<()> {
    let p = Problem::parse(PROBLEM)?;
    let h = LieSubalgebra::bracket_closure(&p.ctx, &p.generators)?;
    let v = is_gcr(&h, p.seed)?;
    println!("{}", serde_json::to_string_pretty(&v.to_json()).unwrap());

    let broken = PROBLEM.replace("\"p\": 3", "\"p\": 9");
    if let Err(e) = Problem::parse(&broken) {
        println!("rejected: {e}");
    }
    Ok(())
}
