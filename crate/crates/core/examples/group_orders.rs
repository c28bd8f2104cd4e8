//! Exact orders of simple groups, factored, plus a walk over the catalog.
//!
//!     cargo run --example group_orders -- 'L3(4)' 'E8(2)' M

use sgq::catalog::{enumerate_catalog, order_of_descriptor, GroupDescriptor};
use sgq::FactoredInteger;

fn main() -> sgq::Result<()> {
    let mut names: Vec<String> = std::env::args().skip(1).collect();
    if names.is_empty() {
        names = ["A8", "L3(4)", "L4(2)", "O7(3)", "S6(3)", "J2", "M"].map(String::from).to_vec();
    }
    for name in &names {
        let d: GroupDescriptor = name.parse()?;
        let order = order_of_descriptor(&d)?;
        println!("|{d}| = {order} = {}", order.decimal());
    }

    let bound = FactoredInteger::from(1_000_000u32);
    let groups = enumerate_catalog(&bound)?;
    let listed: Vec<String> = groups.iter().take(12).map(|d| d.to_string()).collect();
    println!("\n{} simple groups of order at most {}; the first few: {}", groups.len(), bound.decimal(), listed.join(", "));
    Ok(())
}
