//! Counts elements of every order by walking the whole group, and shows two
//! groups of order 20160 that share |G(7)| but differ in |G(3)|.

use sgq::catalog::GroupDescriptor;
use sgq::data::DataDir;
use sgq::realize::{realize, DEFAULT_ELEMENT_CAP};
use std::time::Instant;

fn main() -> sgq::Result<()> {
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get());
    for name in ["A8", "L3(4)"] {
        let d: GroupDescriptor = name.parse()?;
        let group = realize(&d, &DataDir::from_env())?;
        let start = Instant::now();
        let census = group.census(DEFAULT_ELEMENT_CAP, threads)?;
        println!(
            "{d}: acting on {} points, {} elements in {:.2?}",
            group.degree(),
            census.total(),
            start.elapsed()
        );
        for (k, n) in census.counts() {
            println!("  order {k:>2}: {n}");
        }
    }
    Ok(())
}
