// The `analyze` pipeline as a library call, and its JSON form.

use std::error::Error;

use infraholes::cli::{analyze, AnalysisReport, AnalyzeConfig};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let cfg = AnalyzeConfig {
        q: 3,
        f: vec![0, 1, 0, 1],
        genus: 1,
        set: vec!["inf,u=0,1;branch=ram".to_string()],
        base: "inf".to_string(),
        oracle: true,
        truncation: None,
        place_bound: 1,
    };
    let report = analyze(&cfg)?;
    println!("H = {}, C(S) = {:?}, oracle match = {:?}", report.holes.hole_count, &report.set_counts[..2], report.oracle_match);

    let text = serde_json::to_string(&report)?;
    let back: AnalysisReport = serde_json::from_str(&text)?;
    assert_eq!(back, report);
    println!("{} bytes of JSON, schema {}", text.len(), report.schema);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
