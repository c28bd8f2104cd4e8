//! Sylow normalizer orders |N(P)| = |G|(p-1)/|G(p)| for the largest prime p
//! of each sporadic group, checked against the congruence n_p ≡ 1 (mod p).

use sgq::catalog::SporadicTable;
use sgq::data::DataDir;

fn main() -> sgq::Result<()> {
    // The table shipped in the data directory; falls back to the compiled-in copy.
    let data = DataDir::from_env();
    let table = match data.sporadic_table() {
        Ok(t) => t,
        Err(e) => {
            eprintln!("{e}; using the built-in table");
            SporadicTable::builtin().clone()
        }
    };
    println!("{:<6} {:>3} {:>14} {:>10}", "group", "p", "|N(P)|", "source");
    for r in table.records() {
        println!(
            "{:<6} {:>3} {:>14} {:>10}",
            r.group.name(),
            r.largest_prime,
            r.normalizer_order.to_string(),
            r.provenance.to_string()
        );
    }
    Ok(())
}
