//! Comparing invariants across simple groups of equal order.
//!
//! A [`Lab`] bundles the data directory, enumeration limits and a cache of
//! censuses, and knows where each exact count comes from: vendored sporadic
//! records, enumeration, closed formulas for alternating groups, or the
//! vendored table of derived counts.

mod collide;
mod report;
mod signature;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

pub use collide::{
    compare_npe, compare_spectra, confirm_moreto_collision, equal_order_pairs, involution_checks,
    npe_collision_search, shi_compare, statistical_comparison, CollisionReport, Evidence, EvidenceKind,
    NpeSearch, ShiOutcome, Verdict, EQUIVALENCE_BAND,
};
pub use report::{verify_paper_report, CheckItem, Report, ReportOptions};
pub use signature::{moreto_signature, MoretoSignature};

use crate::catalog::{order_of_descriptor, GroupDescriptor};
use crate::data::DataDir;
use crate::error::{Error, Result};
use crate::factored::{factor_integer, is_prime, FactoredInteger};
use crate::invariants::{alternating_prime_order_count, ElementOrderCensus};
use crate::provenance::Provenance;
use crate::realize::{realize, GroupRealization, SamplerConfig, DEFAULT_ELEMENT_CAP};

/// An exact `|G(p)|` with its source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactCount {
    pub count: FactoredInteger,
    pub provenance: Provenance,
}

pub struct Lab {
    data: DataDir,
    cap: u64,
    threads: usize,
    censuses: Mutex<HashMap<GroupDescriptor, Arc<ElementOrderCensus>>>,
}

impl Lab {
    pub fn new(data: DataDir) -> Lab {
        Lab {
            data,
            cap: DEFAULT_ELEMENT_CAP,
            threads: std::thread::available_parallelism().map_or(1, |n| n.get()),
            censuses: Mutex::new(HashMap::new()),
        }
    }

    /// Maximum number of elements a census may enumerate.
    pub fn with_cap(mut self, cap: u64) -> Lab {
        self.cap = cap;
        self
    }

    pub fn with_threads(mut self, threads: usize) -> Lab {
        self.threads = threads.max(1);
        self
    }

    pub fn data(&self) -> &DataDir {
        &self.data
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    pub fn threads(&self) -> usize {
        self.threads
    }

    pub fn sampler_config(&self) -> SamplerConfig {
        SamplerConfig {
            threads: self.threads,
            ..SamplerConfig::default()
        }
    }

    pub fn realize(&self, d: &GroupDescriptor) -> Result<GroupRealization> {
        realize(d, &self.data)
    }

    /// Complete census of `d`, computed once and cached.
    pub fn census(&self, d: &GroupDescriptor) -> Result<Arc<ElementOrderCensus>> {
        if let Some(c) = self.censuses.lock().expect("unpoisoned").get(d) {
            return Ok(c.clone());
        }
        let census = Arc::new(self.realize(d)?.census(self.cap, self.threads)?);
        self.censuses.lock().expect("unpoisoned").insert(*d, census.clone());
        Ok(census)
    }

    /// Like [`Lab::census`], but `None` when the group is larger than the cap
    /// or has no concrete realization.
    pub fn try_census(&self, d: &GroupDescriptor) -> Result<Option<Arc<ElementOrderCensus>>> {
        let order = order_of_descriptor(d)?;
        if order.to_u64().is_none_or(|o| o > self.cap) {
            return Ok(None);
        }
        match self.census(d) {
            Ok(c) => Ok(Some(c)),
            Err(Error::Unsupported(_)) => Ok(None),
            Err(e) => Err(e),
        }
    }

    /// Exact `|G(p)|` for a prime `p` dividing `|G|`, from the first source
    /// that has it: sporadic records (largest prime only), enumeration,
    /// the alternating closed form, then the derived-count table.
    pub fn exact_count(&self, d: &GroupDescriptor, p: u64) -> Result<Option<ExactCount>> {
        let order = order_of_descriptor(d)?;
        if !is_prime(p as u128) || order.exponent(p as u128) == 0 {
            return Err(Error::Precondition(format!("{p} is not a prime dividing |{d}|")));
        }
        if let GroupDescriptor::Sporadic(s) = d {
            if order.largest_prime() == Some(p as u128) {
                let table = self.data.sporadic_table()?;
                if let Some(r) = table.get(*s) {
                    return Ok(Some(ExactCount {
                        count: r.count_order_p.clone(),
                        provenance: r.provenance,
                    }));
                }
            }
        }
        if let Some(c) = self.try_census(d)? {
            return Ok(Some(ExactCount {
                count: factor_integer(c.count(p))?,
                provenance: Provenance::Census,
            }));
        }
        if let GroupDescriptor::Alternating(n) = d {
            return Ok(Some(ExactCount {
                count: alternating_prime_order_count(*n, p as u32)?,
                provenance: Provenance::ClosedForm,
            }));
        }
        let derived = self.data.derived_counts()?;
        Ok(derived.get(d, p).map(|e| ExactCount {
            count: e.count.clone(),
            provenance: e.provenance,
        }))
    }
}
