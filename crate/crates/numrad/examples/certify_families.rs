//! Run a small certification sweep from library code.
//!
//! The certification driver samples matrix families, evaluates every bound
//! in the inventory against solver-computed targets, and aggregates
//! worst-case normalized slacks. This example runs a reduced configuration
//! (two families, two sizes, five matrices per cell) and prints the
//! summary rows that actually applied, plus the CSV export.
//!
//! Run with: `cargo run --release --example certify_families`

use numrad::certify::{run_certification, CertConfig};
use numrad::corpus::Family;

fn main() -> numrad::Result<()> {
    let cfg = CertConfig {
        families: vec![Family::Ginibre, Family::NilpotentSquareZero],
        sizes: vec![2, 4],
        count: 5,
        seed: 42,
        ..CertConfig::default()
    };
    let report = run_certification(&cfg)?;

    println!(
        "certified {} matrices ({:?} x sizes {:?}): pass = {}, violations = {}",
        report.matrices.len(),
        cfg.families,
        cfg.sizes,
        report.pass,
        report.violations
    );
    println!();
    println!("{:<44} {:>8} {:>14} {:>6}", "check", "applied", "worst slack", "pass");
    for s in &report.summary {
        if s.applied == 0 {
            continue;
        }
        let slack = s
            .worst_slack
            .map(|v| format!("{v:.3e}"))
            .unwrap_or_default();
        println!("{:<44} {:>8} {:>14} {:>6}", s.check, s.applied, slack, s.pass);
    }

    println!();
    let csv = report.summary_csv();
    println!("summary_csv() head:");
    for line in csv.lines().take(4) {
        println!("  {line}");
    }
    println!("  ... ({} rows total)", csv.lines().count() - 1);
    Ok(())
}
