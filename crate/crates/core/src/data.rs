//! Location and loading of the vendored data files.

use std::path::{Path, PathBuf};

use crate::catalog::{GroupDescriptor, SporadicTable};
use crate::error::{Error, Result};
use crate::factored::FactoredInteger;
use crate::provenance::Provenance;
use crate::realize::perm::Perm;

/// Environment variable overriding the data directory.
pub const DATA_DIR_ENV: &str = "SGQ_DATA_DIR";

pub const SPORADIC_TABLE: &str = "sporadic.tsv";
pub const DERIVED_COUNTS: &str = "derived_counts.tsv";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DataDir {
    root: PathBuf,
}

impl DataDir {
    pub fn new(root: impl Into<PathBuf>) -> DataDir {
        DataDir { root: root.into() }
    }

    /// `$SGQ_DATA_DIR` if set, otherwise the `data/` directory shipped with the crate.
    pub fn from_env() -> DataDir {
        match std::env::var_os(DATA_DIR_ENV) {
            Some(dir) if !dir.is_empty() => DataDir::new(dir),
            _ => DataDir::bundled(),
        }
    }

    pub fn bundled() -> DataDir {
        DataDir::new(Path::new(env!("CARGO_MANIFEST_DIR")).join("data"))
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    pub fn path(&self, file: &str) -> PathBuf {
        self.root.join(file)
    }

    pub fn sporadic_table(&self) -> Result<SporadicTable> {
        SporadicTable::load(&self.path(SPORADIC_TABLE))
    }

    pub fn generators(&self, file: &str) -> Result<(usize, Vec<Perm>)> {
        crate::realize::read_generator_file(&self.path(file))
    }

    pub fn derived_counts(&self) -> Result<DerivedCounts> {
        let path = self.path(DERIVED_COUNTS);
        if !path.exists() {
            return Err(Error::MissingData(path));
        }
        DerivedCounts::parse(&std::fs::read_to_string(&path)?, &path.display().to_string())
    }
}

/// One exact `|G(k)|` value that is not obtained by enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedCount {
    pub group: GroupDescriptor,
    pub k: u64,
    pub count: FactoredInteger,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, Default)]
pub struct DerivedCounts {
    entries: Vec<DerivedCount>,
}

impl DerivedCounts {
    /// Tab-separated `group k count provenance`, `#` comments.
    pub fn parse(text: &str, label: &str) -> Result<DerivedCounts> {
        let mut entries = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let err = |message: String| Error::Parse {
                path: label.to_string(),
                line: idx + 1,
                message,
            };
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let cols: Vec<&str> = line.split('\t').collect();
            let [group, k, count, prov] = cols[..] else {
                return Err(err(format!("expected 4 tab-separated columns, found {}", cols.len())));
            };
            let group: GroupDescriptor = group.parse().map_err(|e| err(format!("{e}")))?;
            let k: u64 = k.parse().map_err(|_| err(format!("bad element order {k:?}")))?;
            let count: FactoredInteger = count.parse().map_err(|e| err(format!("{e}")))?;
            let provenance: Provenance = prov.parse().map_err(|e| err(format!("{e}")))?;
            let order = crate::catalog::order_of_descriptor(&group).map_err(|e| err(format!("{e}")))?;
            if count > order {
                return Err(err(format!("count {count} exceeds |{group}|")));
            }
            entries.push(DerivedCount {
                group,
                k,
                count,
                provenance,
            });
        }
        Ok(DerivedCounts { entries })
    }

    pub fn entries(&self) -> &[DerivedCount] {
        &self.entries
    }

    pub fn get(&self, group: &GroupDescriptor, k: u64) -> Option<&DerivedCount> {
        self.entries.iter().find(|e| e.group == *group && e.k == k)
    }
}
