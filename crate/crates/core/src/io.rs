//! Catalog persistence: line-oriented JSON and CSV export.

use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::catalog::{enumerate_catalog, GroupDescriptor};
use crate::error::{Error, Result};
use crate::factored::FactoredInteger;
use crate::invariants::derive_invariants;
use crate::lab::{moreto_signature, Lab};
use crate::provenance::Provenance;

/// One catalog line. Field order is the serialized key order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRecord {
    pub descriptor: String,
    pub order_factored: String,
    pub order_decimal: String,
    pub largest_prime: u64,
    /// `|G(p)|` for the largest prime, factored; `None` when unknown.
    pub count_p: Option<String>,
    pub count_p_provenance: Provenance,
    pub pi_e: Option<Vec<u64>>,
    pub npe: Option<Vec<u128>>,
}

impl CatalogRecord {
    /// Checks the descriptor parses, the two order renderings agree, and the
    /// provenance matches the presence of `count_p`.
    pub fn validate(&self) -> Result<()> {
        let d: GroupDescriptor = self.descriptor.parse()?;
        let order: FactoredInteger = self.order_factored.parse()?;
        if order.decimal() != self.order_decimal {
            return Err(Error::Inconsistent(format!(
                "{d}: order {} renders as {}, not {}",
                self.order_factored,
                order.decimal(),
                self.order_decimal
            )));
        }
        if order.largest_prime() != Some(self.largest_prime as u128) {
            return Err(Error::Inconsistent(format!("{d}: {} is not the largest prime of the order", self.largest_prime)));
        }
        if self.count_p.is_none() != (self.count_p_provenance == Provenance::Absent) {
            return Err(Error::Inconsistent(format!("{d}: count_p and its provenance disagree")));
        }
        if let Some(c) = &self.count_p {
            c.parse::<FactoredInteger>()?;
        }
        Ok(())
    }
}

/// The record for one group; spectra and npe are filled in for groups the
/// lab can enumerate.
pub fn catalog_record(d: &GroupDescriptor, lab: &Lab) -> Result<CatalogRecord> {
    let sig = moreto_signature(d, lab)?;
    let invariants = match lab.try_census(d)? {
        Some(c) => Some(derive_invariants(&c)?),
        None => None,
    };
    Ok(CatalogRecord {
        descriptor: d.to_string(),
        order_factored: sig.order.to_string(),
        order_decimal: sig.order.decimal(),
        largest_prime: sig.p as u64,
        count_p: sig.count_p.as_ref().map(|c| c.to_string()),
        count_p_provenance: sig.count_provenance,
        pi_e: invariants.as_ref().map(|i| i.pi_e.iter().copied().collect()),
        npe: invariants.map(|i| i.npe.into_iter().collect()),
    })
}

pub fn build_catalog(max_order: &FactoredInteger, lab: &Lab) -> Result<Vec<CatalogRecord>> {
    enumerate_catalog(max_order)?.iter().map(|d| catalog_record(d, lab)).collect()
}

pub fn write_catalog<W: Write>(records: &[CatalogRecord], mut out: W) -> Result<()> {
    for r in records {
        serde_json::to_writer(&mut out, r)?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}

pub fn write_catalog_file(records: &[CatalogRecord], path: &Path) -> Result<()> {
    write_catalog(records, std::io::BufWriter::new(std::fs::File::create(path)?))
}

/// Reads line-oriented JSON; blank lines are skipped, and errors carry the
/// 1-based line number.
pub fn read_catalog<R: BufRead>(input: R, label: &str) -> Result<Vec<CatalogRecord>> {
    let mut records = Vec::new();
    for (idx, line) in input.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let err = |message: String| Error::Parse {
            path: label.to_string(),
            line: idx + 1,
            message,
        };
        let record: CatalogRecord = serde_json::from_str(&line).map_err(|e| err(e.to_string()))?;
        record.validate().map_err(|e| err(e.to_string()))?;
        records.push(record);
    }
    Ok(records)
}

pub fn read_catalog_file(path: &Path) -> Result<Vec<CatalogRecord>> {
    let file = std::fs::File::open(path)?;
    read_catalog(BufReader::new(file), &path.display().to_string())
}

fn join<T: ToString>(items: &Option<Vec<T>>) -> String {
    items
        .as_ref()
        .map(|v| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
        .unwrap_or_default()
}

/// CSV with a header row; set-valued columns are space-separated.
pub fn write_catalog_csv<W: Write>(records: &[CatalogRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "descriptor",
        "order_factored",
        "order_decimal",
        "largest_prime",
        "count_p",
        "count_p_provenance",
        "pi_e",
        "npe",
    ])?;
    for r in records {
        w.write_record([
            r.descriptor.clone(),
            r.order_factored.clone(),
            r.order_decimal.clone(),
            r.largest_prime.to_string(),
            r.count_p.clone().unwrap_or_default(),
            r.count_p_provenance.to_string(),
            join(&r.pi_e),
            join(&r.npe),
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::DataDir;

    fn lab() -> Lab {
        Lab::new(DataDir::bundled()).with_threads(1)
    }

    #[test]
    fn small_catalog_round_trip() {
        let records = build_catalog(&1000u32.into(), &lab()).unwrap();
        assert_eq!(records.len(), 5);
        assert_eq!(records[0].npe, Some(vec![15, 20, 24]));
        let mut buf = Vec::new();
        write_catalog(&records, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf.clone()).unwrap().lines().count(), 5);
        assert_eq!(read_catalog(&buf[..], "mem").unwrap(), records);
        assert!(String::from_utf8(buf).unwrap().starts_with("{\"descriptor\":\"A5\",\"order_factored\":\"2^2*3*5\""));
    }

    #[test]
    fn empty_round_trip() {
        let mut buf = Vec::new();
        write_catalog(&[], &mut buf).unwrap();
        assert!(buf.is_empty());
        assert!(read_catalog(&buf[..], "mem").unwrap().is_empty());
    }

    #[test]
    fn malformed_line_reports_number() {
        let mut buf = Vec::new();
        write_catalog(&build_catalog(&200u32.into(), &lab()).unwrap(), &mut buf).unwrap();
        buf.extend_from_slice(b"{not json}\n");
        match read_catalog(&buf[..], "mem") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn csv_has_header() {
        let records = build_catalog(&200u32.into(), &lab()).unwrap();
        let mut buf = Vec::new();
        write_catalog_csv(&records, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("descriptor,order_factored,"));
        assert!(text.contains("A5,2^2*3*5,60,5,2^3*3,census,1 2 3 5,15 20 24"));
    }
}
