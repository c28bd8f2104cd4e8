//! Finds simple groups sharing an order, then tests whether the pair is
//! also told apart by |G(p)| for the largest prime, by the spectrum, or by
//! counts of elements of prime order.

use sgq::catalog::enumerate_catalog;
use sgq::data::DataDir;
use sgq::lab::{compare_spectra, confirm_moreto_collision, equal_order_pairs, npe_collision_search, Lab};

fn main() -> sgq::Result<()> {
    let lab = Lab::new(DataDir::from_env());

    let catalog = enumerate_catalog(&"5000000000".parse()?)?;
    println!("{} groups of order at most 5*10^9", catalog.len());
    for (a, b) in equal_order_pairs(&catalog)? {
        // Small sample count: exact counts are available for both pairs.
        let report = confirm_moreto_collision(&a, &b, &lab, 10_000, 1)?;
        println!("{a} and {b}: largest-prime count comparison {}", report.verdict);
        for e in &report.evidence {
            println!("  {:<8} {} vs {} ({} / {})", e.invariant, e.left, e.right, e.left_provenance, e.right_provenance);
        }
    }

    let a8 = "A8".parse()?;
    let l34 = "L3(4)".parse()?;
    let spectra = compare_spectra(&a8, &l34, &lab)?;
    let pi_e = spectra.evidence_for("pi_e").expect("spectrum row");
    println!("\nspectra: {} vs {}", pi_e.left, pi_e.right);

    let small = enumerate_catalog(&"1000000".parse()?)?;
    let search = npe_collision_search(&small, &lab)?;
    println!(
        "prime-order counts up to 10^6: {} equal-order pairs examined, {} collisions",
        search.examined.len(),
        search.collisions().len()
    );
    Ok(())
}
