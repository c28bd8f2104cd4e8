use std::path::Path;
use std::sync::OnceLock;

use super::descriptor::Sporadic;
use super::orders::sporadic_order;
use crate::error::{Error, Result};
use crate::factored::FactoredInteger;
use crate::invariants::sylow_normalizer_order;
use crate::provenance::Provenance;

const BUILTIN_TABLE: &str = include_str!("../../data/sporadic.tsv");

/// Largest-prime data for one sporadic group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SporadicQuantRecord {
    pub group: Sporadic,
    pub order: FactoredInteger,
    pub largest_prime: u128,
    /// `|S(p)|`, the number of elements of order `p`.
    pub count_order_p: FactoredInteger,
    /// `|N_S(P)| = |S|(p−1)/|S(p)|`, derived.
    pub normalizer_order: FactoredInteger,
    pub provenance: Provenance,
}

/// The vendored sporadic table, validated on load.
#[derive(Clone, Debug)]
pub struct SporadicTable {
    records: Vec<SporadicQuantRecord>,
}

impl SporadicTable {
    /// The copy compiled into the library.
    pub fn builtin() -> &'static SporadicTable {
        static TABLE: OnceLock<SporadicTable> = OnceLock::new();
        TABLE.get_or_init(|| SporadicTable::parse(BUILTIN_TABLE, "sporadic.tsv").expect("builtin table is valid"))
    }

    pub fn load(path: &Path) -> Result<SporadicTable> {
        if !path.exists() {
            return Err(Error::MissingData(path.to_path_buf()));
        }
        let text = std::fs::read_to_string(path)?;
        Self::parse(&text, &path.display().to_string())
    }

    /// Tab-separated `name order p count_p provenance`; `#` lines are comments.
    ///
    /// Every row is checked against the built-in order table, the largest prime
    /// of the order, and the Sylow relation (via [`sylow_normalizer_order`]).
    pub fn parse(text: &str, label: &str) -> Result<SporadicTable> {
        let mut records = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let err = |message: String| Error::Parse {
                path: label.to_string(),
                line: line_no,
                message,
            };
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let cols: Vec<&str> = line.split('\t').collect();
            let [name, order, p, count, prov] = cols[..] else {
                return Err(err(format!("expected 5 tab-separated columns, found {}", cols.len())));
            };
            let group = Sporadic::from_name(name).ok_or_else(|| err(format!("unknown sporadic group {name:?}")))?;
            let order: FactoredInteger = order.parse().map_err(|e| err(format!("{e}")))?;
            if order != sporadic_order(group) {
                return Err(err(format!("order of {name} disagrees with the built-in table")));
            }
            let p: u128 = p.parse().map_err(|_| err(format!("bad prime {p:?}")))?;
            if order.largest_prime() != Some(p) {
                return Err(err(format!("{p} is not the largest prime dividing |{name}|")));
            }
            let count_order_p: FactoredInteger = count.parse().map_err(|e| err(format!("{e}")))?;
            let provenance: Provenance = prov.parse().map_err(|e| err(format!("{e}")))?;
            let normalizer_order =
                sylow_normalizer_order(&order, p, &count_order_p).map_err(|e| err(format!("{name}: {e}")))?;
            records.push(SporadicQuantRecord {
                group,
                order,
                largest_prime: p,
                count_order_p,
                normalizer_order,
                provenance,
            });
        }
        Ok(SporadicTable { records })
    }

    pub fn records(&self) -> &[SporadicQuantRecord] {
        &self.records
    }

    pub fn get(&self, group: Sporadic) -> Option<&SporadicQuantRecord> {
        self.records.iter().find(|r| r.group == group)
    }
}

/// Record for a sporadic group by name, from the built-in table.
pub fn sporadic_quant_record(name: &str) -> Result<SporadicQuantRecord> {
    let group = Sporadic::from_name(name).ok_or_else(|| Error::UnknownGroup(name.to_string()))?;
    SporadicTable::builtin()
        .get(group)
        .cloned()
        .ok_or_else(|| Error::UnknownGroup(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_examples() {
        let m11 = sporadic_quant_record("M11").unwrap();
        assert_eq!(m11.largest_prime, 11);
        assert_eq!(m11.count_order_p.to_string(), "2^5*3^2*5");
        assert_eq!(m11.normalizer_order.to_string(), "5*11");

        let j3 = sporadic_quant_record("J3").unwrap();
        assert_eq!(j3.largest_prime, 19);
        assert_eq!(j3.count_order_p.to_string(), "2^8*3^5*5*17");
        assert_eq!(j3.normalizer_order.to_string(), "3^2*19");

        let ru = sporadic_quant_record("Ru").unwrap();
        assert_eq!(ru.largest_prime, 29);
        assert_eq!(ru.count_order_p.to_string(), "2^15*3^3*5^3*7*13");
        assert_eq!(ru.normalizer_order.to_string(), "2*7*29");
    }

    #[test]
    fn unknown_name_is_lookup_error() {
        assert!(matches!(sporadic_quant_record("M13"), Err(Error::UnknownGroup(_))));
    }

    #[test]
    fn builtin_covers_all_groups() {
        let t = SporadicTable::builtin();
        assert_eq!(t.records().len(), 27);
        for s in Sporadic::all_with_tits() {
            let r = t.get(s).unwrap();
            let p = r.largest_prime;
            assert_eq!(r.order.exponent(p), 1);
            assert_eq!(r.normalizer_order.exponent(p), 1);
            // Sylow congruence
            let n_p = r.count_order_p.divide_exact(&crate::factored::factor_integer(p - 1).unwrap()).unwrap();
            assert_eq!(n_p.residue(p), 1, "{}", s.name());
        }
        let paper = t.records().iter().filter(|r| r.provenance == Provenance::Paper).count();
        assert_eq!(paper, 9);
    }

    #[test]
    fn parse_reports_line_numbers() {
        let bad = "# header\nM11\t2^4*3^2*5*11\t11\t2^5*3^2*5\n";
        match SporadicTable::parse(bad, "x.tsv") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        let inconsistent = "M11\t2^4*3^2*5*11\t11\t2^5*3^2*7\tpaper\n";
        assert!(SporadicTable::parse(inconsistent, "x.tsv").is_err());
    }
}
