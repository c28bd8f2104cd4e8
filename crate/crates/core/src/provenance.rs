use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Where a quantitative value came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// Closed-form order formula.
    Formula,
    /// Value printed in the reference text and vendored with it.
    Paper,
    /// Vendored from ATLAS class data.
    VendoredAtlas,
    /// Derived offline from ATLAS class data (not enumerable here).
    DerivedAtlas,
    /// Exact enumeration of a realization.
    Census,
    /// Combinatorial closed form (alternating groups).
    ClosedForm,
    /// Product-replacement sampling; statistical only.
    MonteCarlo,
    Absent,
}

impl Provenance {
    pub fn tag(self) -> &'static str {
        match self {
            Provenance::Formula => "formula",
            Provenance::Paper => "paper",
            Provenance::VendoredAtlas => "vendored-atlas",
            Provenance::DerivedAtlas => "derived-atlas",
            Provenance::Census => "census",
            Provenance::ClosedForm => "closed-form",
            Provenance::MonteCarlo => "monte-carlo",
            Provenance::Absent => "absent",
        }
    }

    pub fn is_exact(self) -> bool {
        !matches!(self, Provenance::MonteCarlo | Provenance::Absent)
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Provenance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim() {
            "formula" => Provenance::Formula,
            "paper" => Provenance::Paper,
            "vendored-atlas" => Provenance::VendoredAtlas,
            "derived-atlas" => Provenance::DerivedAtlas,
            "census" => Provenance::Census,
            "closed-form" => Provenance::ClosedForm,
            "monte-carlo" => Provenance::MonteCarlo,
            "absent" => Provenance::Absent,
            other => return Err(Error::domain(format!("unknown provenance tag {other:?}"))),
        })
    }
}
