//! Recomputes every published value and prints the pass/fail table.
//! The Monte Carlo item uses fewer samples than the command-line default so
//! this finishes quickly; pass a count to change it.
//!
//!     cargo run --release --example verify_report -- 1000000

use sgq::data::DataDir;
use sgq::lab::{verify_paper_report, Lab, ReportOptions};

fn main() {
    let samples = std::env::args().nth(1).map_or(100_000, |s| s.parse().expect("sample count"));
    let lab = Lab::new(DataDir::from_env());
    let report = verify_paper_report(&lab, &ReportOptions { samples, seed: 1 });
    print!("{}", report.render_table());
    if !report.all_passed() {
        std::process::exit(1);
    }
}
