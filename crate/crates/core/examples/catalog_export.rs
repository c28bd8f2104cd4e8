//! Writes the catalog of simple groups up to a bound as JSON lines and reads
//! it back. Groups small enough to enumerate get spectra and npe sets.
//!
//!     cargo run --example catalog_export -- 100000 catalog.jsonl

use std::path::PathBuf;

use sgq::data::DataDir;
use sgq::io::{build_catalog, read_catalog_file, write_catalog_file};
use sgq::lab::Lab;

fn main() -> sgq::Result<()> {
    let mut args = std::env::args().skip(1);
    let bound = args.next().unwrap_or_else(|| "100000".into());
    let path = args.next().map_or_else(|| std::env::temp_dir().join("sgq-catalog.jsonl"), PathBuf::from);

    let lab = Lab::new(DataDir::from_env());
    let records = build_catalog(&bound.parse()?, &lab)?;
    write_catalog_file(&records, &path)?;
    let back = read_catalog_file(&path)?;
    assert_eq!(back, records);

    println!("{} records written to {}", records.len(), path.display());
    for r in &records {
        let npe = r.npe.as_ref().map_or("-".to_string(), |v| format!("{v:?}"));
        println!("{:<8} {:>12}  p = {:<3} npe {npe}", r.descriptor, r.order_decimal, r.largest_prime);
    }
    Ok(())
}
