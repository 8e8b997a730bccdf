//! Runs the built-in verification report and prints a one-line summary per record.

use schubert_cones::cli::verify;

fn main() {
    let report = verify::verify_paper(None);
    for r in &report.records {
        println!("{:?} {:<28} {}", r.status, r.id, r.claim);
    }
    println!("all passed: {}", report.all_passed());
}
