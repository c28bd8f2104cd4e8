use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::Lab;
use crate::catalog::{canonicalize_descriptor, descriptor_sort_key, order_of_descriptor, GroupDescriptor};
use crate::error::{Error, Result};
use crate::factored::FactoredInteger;
use crate::invariants::derive_invariants;
use crate::provenance::Provenance;
use crate::realize::FractionEstimate;

/// Two Monte Carlo estimates count as equal when they differ by fewer than
/// this many combined standard errors.
pub const EQUIVALENCE_BAND: f64 = 3.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// Every compared invariant agrees exactly.
    Confirmed,
    /// Some compared invariant differs.
    Refuted,
    /// Agreement only within the statistical equivalence band.
    StatisticalOnly,
    /// Some invariant could not be computed for one side.
    Undetermined,
}

impl Verdict {
    pub fn tag(self) -> &'static str {
        match self {
            Verdict::Confirmed => "confirmed",
            Verdict::Refuted => "refuted",
            Verdict::StatisticalOnly => "statistical-only",
            Verdict::Undetermined => "undetermined",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum EvidenceKind {
    Exact,
    Statistical {
        left: FractionEstimate,
        right: FractionEstimate,
        /// |difference| in combined standard errors.
        z: f64,
    },
    Missing,
}

/// One compared invariant.
#[derive(Clone, Debug, PartialEq)]
pub struct Evidence {
    pub invariant: String,
    pub left: String,
    pub right: String,
    pub left_provenance: Provenance,
    pub right_provenance: Provenance,
    pub equal: bool,
    pub kind: EvidenceKind,
}

impl Evidence {
    fn exact(invariant: impl Into<String>, left: String, right: String, provenance: (Provenance, Provenance)) -> Self {
        Evidence {
            invariant: invariant.into(),
            equal: left == right,
            left,
            right,
            left_provenance: provenance.0,
            right_provenance: provenance.1,
            kind: EvidenceKind::Exact,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CollisionReport {
    pub left: GroupDescriptor,
    pub right: GroupDescriptor,
    pub evidence: Vec<Evidence>,
    pub verdict: Verdict,
}

impl CollisionReport {
    /// Names of the invariants on which the two groups agree.
    pub fn matched(&self) -> Vec<&str> {
        self.evidence.iter().filter(|e| e.equal).map(|e| e.invariant.as_str()).collect()
    }

    pub fn evidence_for(&self, invariant: &str) -> Option<&Evidence> {
        self.evidence.iter().find(|e| e.invariant == invariant)
    }
}

pub(crate) fn count_label(k: u64) -> String {
    format!("|G({k})|")
}

pub(crate) fn format_set<T: fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn distinct_pair(a: &GroupDescriptor, b: &GroupDescriptor) -> Result<()> {
    if canonicalize_descriptor(a) == canonicalize_descriptor(b) {
        return Err(Error::Precondition(format!(
            "{a} and {b} are the same group; not a collision candidate"
        )));
    }
    Ok(())
}

fn order_evidence(a: &GroupDescriptor, b: &GroupDescriptor) -> Result<Evidence> {
    Ok(Evidence::exact(
        "order",
        order_of_descriptor(a)?.to_string(),
        order_of_descriptor(b)?.to_string(),
        (Provenance::Formula, Provenance::Formula),
    ))
}

/// Exact `|G(p)|` on both sides; a prime not dividing `|G|` counts as zero.
fn count_evidence(lab: &Lab, a: &GroupDescriptor, b: &GroupDescriptor, p: u64) -> Result<Evidence> {
    let side = |d: &GroupDescriptor| -> Result<Option<(String, Provenance)>> {
        if order_of_descriptor(d)?.exponent(p as u128) == 0 {
            return Ok(Some(("0".into(), Provenance::Formula)));
        }
        Ok(lab.exact_count(d, p)?.map(|e| (e.count.decimal(), e.provenance)))
    };
    match (side(a)?, side(b)?) {
        (Some((l, lp)), Some((r, rp))) => Ok(Evidence::exact(count_label(p), l, r, (lp, rp))),
        (l, r) => Ok(Evidence {
            invariant: count_label(p),
            left_provenance: l.as_ref().map_or(Provenance::Absent, |x| x.1),
            right_provenance: r.as_ref().map_or(Provenance::Absent, |x| x.1),
            left: l.map_or_else(|| "?".into(), |x| x.0),
            right: r.map_or_else(|| "?".into(), |x| x.0),
            equal: false,
            kind: EvidenceKind::Missing,
        }),
    }
}

/// All pairs of non-isomorphic groups in `catalog` with identical orders,
/// after canonicalization, sorted by order and then by name.
pub fn equal_order_pairs(catalog: &[GroupDescriptor]) -> Result<Vec<(GroupDescriptor, GroupDescriptor)>> {
    let canonical: BTreeSet<GroupDescriptor> = catalog.iter().map(canonicalize_descriptor).collect();
    let mut by_order: BTreeMap<FactoredInteger, Vec<GroupDescriptor>> = BTreeMap::new();
    for d in canonical {
        by_order.entry(order_of_descriptor(&d)?).or_default().push(d);
    }
    let mut pairs = Vec::new();
    for (_, mut groups) in by_order {
        groups.sort_by_key(descriptor_sort_key);
        for (i, a) in groups.iter().enumerate() {
            for b in &groups[i + 1..] {
                pairs.push((*a, *b));
            }
        }
    }
    Ok(pairs)
}

/// Monte Carlo comparison of the proportion of elements of order `k`.
pub fn statistical_comparison(
    lab: &Lab,
    a: &GroupDescriptor,
    b: &GroupDescriptor,
    k: u64,
    samples: u64,
    seed: u64,
) -> Result<Evidence> {
    let config = lab.sampler_config();
    let left = lab.realize(a)?.estimate_order_fraction(k, samples, seed, &config)?;
    let right = lab.realize(b)?.estimate_order_fraction(k, samples, seed.wrapping_add(1), &config)?;
    let diff = (left.fraction - right.fraction).abs();
    let se = (left.std_error.powi(2) + right.std_error.powi(2)).sqrt();
    let z = if se > 0.0 {
        diff / se
    } else if diff == 0.0 {
        0.0
    } else {
        f64::INFINITY
    };
    let show = |e: &FractionEstimate| format!("{:.6} ± {:.6}", e.fraction, e.std_error);
    Ok(Evidence {
        invariant: format!("fraction of order {k}"),
        left: show(&left),
        right: show(&right),
        left_provenance: Provenance::MonteCarlo,
        right_provenance: Provenance::MonteCarlo,
        equal: z < EQUIVALENCE_BAND,
        kind: EvidenceKind::Statistical { left, right, z },
    })
}

/// Compares order and `|G(p)|` for the largest prime `p`: exactly when both
/// counts are known, otherwise by sampling both realizations.
pub fn confirm_moreto_collision(
    a: &GroupDescriptor,
    b: &GroupDescriptor,
    lab: &Lab,
    samples: u64,
    seed: u64,
) -> Result<CollisionReport> {
    distinct_pair(a, b)?;
    let order = order_evidence(a, b)?;
    if !order.equal {
        return Err(Error::Precondition(format!("|{a}| != |{b}|")));
    }
    let sa = super::moreto_signature(a, lab)?;
    let sb = super::moreto_signature(b, lab)?;
    let p = sa.p as u64;
    let mut evidence = vec![order];
    let verdict = match (&sa.count_p, &sb.count_p) {
        (Some(l), Some(r)) => {
            let e = Evidence::exact(count_label(p), l.decimal(), r.decimal(), (sa.count_provenance, sb.count_provenance));
            let v = if e.equal { Verdict::Confirmed } else { Verdict::Refuted };
            evidence.push(e);
            v
        }
        _ => match statistical_comparison(lab, a, b, p, samples, seed) {
            Ok(e) => {
                let v = if e.equal { Verdict::StatisticalOnly } else { Verdict::Refuted };
                evidence.push(e);
                v
            }
            Err(Error::Unsupported(_)) => {
                evidence.push(count_evidence(lab, a, b, p)?);
                Verdict::Undetermined
            }
            Err(e) => return Err(e),
        },
    };
    Ok(CollisionReport {
        left: *a,
        right: *b,
        evidence,
        verdict,
    })
}

/// Compares `|G(2)|` and `|G(p)|` for each extra prime, alongside the orders.
/// The verdict concerns the counts only; the order row says whether the
/// orders agree as well.
pub fn involution_checks(
    a: &GroupDescriptor,
    b: &GroupDescriptor,
    lab: &Lab,
    extra_primes: &[u64],
) -> Result<CollisionReport> {
    distinct_pair(a, b)?;
    let mut evidence = vec![order_evidence(a, b)?];
    let mut primes = vec![2];
    primes.extend(extra_primes.iter().copied().filter(|&p| p != 2));
    for p in primes {
        evidence.push(count_evidence(lab, a, b, p)?);
    }
    let counts = &evidence[1..];
    let verdict = if counts.iter().any(|e| e.kind == EvidenceKind::Missing) {
        Verdict::Undetermined
    } else if counts.iter().all(|e| e.equal) {
        Verdict::Confirmed
    } else {
        Verdict::Refuted
    };
    Ok(CollisionReport {
        left: *a,
        right: *b,
        evidence,
        verdict,
    })
}

/// Compares the npe sets (and per-prime counts) of two censused groups.
/// Confirmed means the orders and npe sets both agree.
pub fn compare_npe(a: &GroupDescriptor, b: &GroupDescriptor, lab: &Lab) -> Result<CollisionReport> {
    distinct_pair(a, b)?;
    let ia = derive_invariants(&*lab.census(a)?)?;
    let ib = derive_invariants(&*lab.census(b)?)?;
    let order = order_evidence(a, b)?;
    let same_order = order.equal;
    let mut evidence = vec![order];
    for &p in ia.pi.union(&ib.pi) {
        let count = |d: &GroupDescriptor| -> Result<String> { Ok(lab.census(d)?.count(p as u64).to_string()) };
        evidence.push(Evidence::exact(
            count_label(p as u64),
            count(a)?,
            count(b)?,
            (Provenance::Census, Provenance::Census),
        ));
    }
    let npe = Evidence::exact("npe", format_set(&ia.npe), format_set(&ib.npe), (Provenance::Census, Provenance::Census));
    let same_npe = npe.equal;
    evidence.push(npe);
    evidence.push(Evidence::exact(
        "npe multiset",
        format!("{:?}", ia.npe_multiset),
        format!("{:?}", ib.npe_multiset),
        (Provenance::Census, Provenance::Census),
    ));
    Ok(CollisionReport {
        left: *a,
        right: *b,
        evidence,
        verdict: if same_order && same_npe { Verdict::Confirmed } else { Verdict::Refuted },
    })
}

/// Result of an npe search: every equal-order pair that was examined.
#[derive(Clone, Debug, PartialEq)]
pub struct NpeSearch {
    pub examined: Vec<CollisionReport>,
}

impl NpeSearch {
    /// Pairs with equal order and equal npe set.
    pub fn collisions(&self) -> Vec<&CollisionReport> {
        self.examined.iter().filter(|r| r.verdict == Verdict::Confirmed).collect()
    }
}

/// Two-stage search: equal orders first, then npe sets from censuses.
/// Pairs are checked in parallel and reported in catalog order.
pub fn npe_collision_search(catalog: &[GroupDescriptor], lab: &Lab) -> Result<NpeSearch> {
    let pairs = equal_order_pairs(catalog)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(lab.threads())
        .build()
        .map_err(|e| Error::Unsupported(format!("thread pool: {e}")))?;
    let examined = pool.install(|| {
        pairs
            .par_iter()
            .map(|(a, b)| compare_npe(a, b, lab))
            .collect::<Result<Vec<_>>>()
    })?;
    Ok(NpeSearch { examined })
}

/// Compares element-order spectra of two censused groups.
pub fn compare_spectra(a: &GroupDescriptor, b: &GroupDescriptor, lab: &Lab) -> Result<CollisionReport> {
    distinct_pair(a, b)?;
    let order = order_evidence(a, b)?;
    let same_order = order.equal;
    let sa = format_set(lab.census(a)?.counts().keys());
    let sb = format_set(lab.census(b)?.counts().keys());
    let spectrum = Evidence::exact("pi_e", sa, sb, (Provenance::Census, Provenance::Census));
    let verdict = if same_order && spectrum.equal { Verdict::Confirmed } else { Verdict::Refuted };
    Ok(CollisionReport {
        left: *a,
        right: *b,
        evidence: vec![order, spectrum],
        verdict,
    })
}

/// Catalog members matching a given order and spectrum.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ShiOutcome {
    pub matches: Vec<GroupDescriptor>,
    /// Members of the right order whose spectrum is not available.
    pub undetermined: Vec<GroupDescriptor>,
}

pub fn shi_compare(
    order: &FactoredInteger,
    pi_e: &BTreeSet<u64>,
    catalog: &[GroupDescriptor],
    lab: &Lab,
) -> Result<ShiOutcome> {
    let canonical: BTreeSet<GroupDescriptor> = catalog.iter().map(canonicalize_descriptor).collect();
    let mut candidates: Vec<GroupDescriptor> = canonical
        .into_iter()
        .filter(|d| order_of_descriptor(d).is_ok_and(|o| o == *order))
        .collect();
    candidates.sort_by_key(descriptor_sort_key);
    let mut out = ShiOutcome::default();
    for d in candidates {
        match lab.try_census(&d)? {
            Some(c) if c.counts().keys().copied().collect::<BTreeSet<u64>>() == *pi_e => out.matches.push(d),
            Some(_) => {}
            None => out.undetermined.push(d),
        }
    }
    Ok(out)
}
