//! A10 and J2 x Z3 have the same order and the same number of elements of
//! order 7. The first count comes from a full enumeration of A10, the second
//! from combining the censuses of J2 and Z3, the third from cycle counting.

use sgq::data::DataDir;
use sgq::invariants::{alternating_prime_order_count, cyclic_census, direct_product_census};
use sgq::lab::Lab;

fn main() -> sgq::Result<()> {
    let lab = Lab::new(DataDir::from_env());
    let a10 = lab.census(&"A10".parse()?)?;
    let j2 = lab.census(&"J2".parse()?)?;
    let product = direct_product_census(&j2, &cyclic_census(3)?)?;

    println!("|A10| = {}, |J2 x Z3| = {}", a10.total(), product.total());
    println!("A10 elements of order 7, enumerated:   {}", a10.count(7));
    println!("J2 x Z3 elements of order 7:           {}", product.count(7));
    println!("A10 elements of order 7, closed form:  {}", alternating_prime_order_count(10, 7)?);

    let mut differ = Vec::new();
    for k in a10.counts().keys().chain(product.counts().keys()) {
        if a10.count(*k) != product.count(*k) && !differ.contains(k) {
            differ.push(*k);
        }
    }
    differ.sort_unstable();
    println!("orders with different counts: {differ:?}");
    Ok(())
}
