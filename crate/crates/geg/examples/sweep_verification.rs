//! Verify every admissible quadruple up to a bound against the exact
//! solvers, reproducing the realizability table at small scale.
//!
//! ```bash
//! cargo run --release -p geg --example sweep_verification
//! ```

use geg::{sweep, Feasibility};

fn main() {
    let report = sweep(5).unwrap();
    println!("target          status            built  solved");
    for entry in &report.entries {
        let status = match (entry.feasibility, entry.pass) {
            (Feasibility::Feasible, true) => "realized",
            (Feasibility::Feasible, false) => "FAILED",
            (_, true) => "rejected (known impossible)",
            (_, false) => "REJECTION MISMATCH",
        };
        let size = entry
            .graph_size
            .map(|(n, m)| format!("{n}v/{m}e"))
            .unwrap_or_else(|| "-".into());
        let solved = entry
            .solved
            .map(|q| q.to_string())
            .unwrap_or_else(|| "-".into());
        println!("{:14} {status:27} {size:>7}  {solved}", entry.target.to_string());
    }
    println!(
        "\n{} quadruples: {} pass, {} fail, {} impossible",
        report.entries.len(),
        report.summary.pass,
        report.summary.fail,
        report.summary.infeasible
    );
    assert_eq!(report.summary.fail, 0);
}
