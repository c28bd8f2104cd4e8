//! Estimates the proportion of elements of order 13 in O7(3) and S6(3) by
//! product-replacement sampling. Both groups act on 364 points; neither is
//! small enough to enumerate.
//!
//!     cargo run --release --example monte_carlo_fraction -- 1000000

use sgq::catalog::GroupDescriptor;
use sgq::data::DataDir;
use sgq::lab::{statistical_comparison, EvidenceKind, Lab};

fn main() -> sgq::Result<()> {
    let samples: u64 = std::env::args().nth(1).map_or(Ok(100_000), |s| s.parse()).expect("sample count");
    let lab = Lab::new(DataDir::from_env());
    let o73: GroupDescriptor = "O7(3)".parse()?;
    let s63: GroupDescriptor = "S6(3)".parse()?;
    for d in [&o73, &s63] {
        let g = lab.realize(d)?;
        println!("{d}: degree {}, order {} verified by Schreier-Sims", g.degree(), g.bsgs_order());
    }

    let e = statistical_comparison(&lab, &o73, &s63, 13, samples, 1)?;
    if let EvidenceKind::Statistical { left, right, z } = &e.kind {
        println!("O7(3): {:.5} ± {:.5}", left.fraction, left.std_error);
        println!("S6(3): {:.5} ± {:.5}", right.fraction, right.std_error);
        println!("difference: {z:.2} combined standard errors; exact value 2/13 = {:.5}", 2.0 / 13.0);
    }
    Ok(())
}
