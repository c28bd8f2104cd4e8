//! Concrete realizations of simple groups as permutation groups, with exact
//! order computation, element-order enumeration and random sampling.

mod bsgs;
mod census;
mod classical;
mod field;
mod gens_file;
mod matrix;
pub(crate) mod perm;
mod sampler;

use std::path::Path;
use std::sync::Arc;

pub use bsgs::StabilizerChain;
pub use census::{enumerate_order_counts, DEFAULT_ELEMENT_CAP};
pub use classical::{odd_orthogonal_generators, special_linear_generators, symplectic_generators, OddOrthogonal};
pub use field::FiniteField;
pub use gens_file::{parse_generators, read_generator_file};
pub use matrix::{normalize_point, projective_action, projective_point_count, Matrix, MAX_PROJECTIVE_POINTS};
pub use perm::Perm;
pub use sampler::{estimate_fraction, FractionEstimate, ProductReplacement, SamplerConfig, MIN_SAMPLES};

use crate::catalog::{order_of_descriptor, ClassicalSeries, GroupDescriptor, Sporadic};
use crate::data::DataDir;
use crate::error::{Error, Result};
use crate::factored::FactoredInteger;
use crate::invariants::ElementOrderCensus;

/// Builds GF(p^k).
pub fn build_field(p: u32, k: u32) -> Result<FiniteField> {
    FiniteField::new(p, k)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RealizationKind {
    Permutation { degree: usize },
    Projective { dimension: usize, q: u32, degree: usize },
}

/// Matrix generators behind a projective realization.
#[derive(Clone, Debug)]
pub struct MatrixGenerators {
    pub field: Arc<FiniteField>,
    pub generators: Vec<Matrix>,
}

/// A group given by permutation generators, possibly induced from matrices.
#[derive(Clone, Debug)]
pub struct GroupRealization {
    label: String,
    kind: RealizationKind,
    generators: Vec<Perm>,
    matrices: Option<MatrixGenerators>,
    expected_order: Option<FactoredInteger>,
}

impl GroupRealization {
    pub fn permutation(label: impl Into<String>, degree: usize, generators: Vec<Perm>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::domain(format!("generator of degree {} in a degree {degree} realization", g.degree())));
        }
        Ok(GroupRealization {
            label: label.into(),
            kind: RealizationKind::Permutation { degree },
            generators,
            matrices: None,
            expected_order: None,
        })
    }

    /// The action of `matrices` on projective points (all of them, or the
    /// orbit of `seed`).
    pub fn projective(
        label: impl Into<String>,
        field: FiniteField,
        matrices: Vec<Matrix>,
        seed: Option<&[u32]>,
    ) -> Result<Self> {
        let (generators, points) = projective_action(&field, &matrices, seed)?;
        Ok(GroupRealization {
            label: label.into(),
            kind: RealizationKind::Projective {
                dimension: matrices[0].dimension(),
                q: field.order(),
                degree: points.len(),
            },
            generators,
            matrices: Some(MatrixGenerators {
                field: Arc::new(field),
                generators: matrices,
            }),
            expected_order: None,
        })
    }

    pub fn with_expected_order(mut self, order: FactoredInteger) -> Self {
        self.expected_order = Some(order);
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn kind(&self) -> RealizationKind {
        self.kind
    }

    pub fn degree(&self) -> usize {
        match self.kind {
            RealizationKind::Permutation { degree } | RealizationKind::Projective { degree, .. } => degree,
        }
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn matrix_generators(&self) -> Option<&MatrixGenerators> {
        self.matrices.as_ref()
    }

    pub fn expected_order(&self) -> Option<&FactoredInteger> {
        self.expected_order.as_ref()
    }

    pub fn stabilizer_chain(&self) -> StabilizerChain {
        StabilizerChain::new(self.degree(), &self.generators)
    }

    /// Exact order by Schreier–Sims.
    pub fn bsgs_order(&self) -> FactoredInteger {
        self.stabilizer_chain().order()
    }

    /// Checks the Schreier–Sims order against the expected order, if any.
    pub fn verify_expected_order(&self) -> Result<FactoredInteger> {
        let order = self.bsgs_order();
        match &self.expected_order {
            Some(expected) if *expected != order => Err(Error::Inconsistent(format!(
                "{}: generators give order {order}, expected {expected}",
                self.label
            ))),
            _ => Ok(order),
        }
    }

    /// Exact element-order census by enumeration.
    ///
    /// Fails up front when the known order exceeds `cap`, and otherwise
    /// aborts once more than `cap` elements have been visited.
    pub fn census(&self, cap: u64, threads: usize) -> Result<ElementOrderCensus> {
        if let Some(expected) = &self.expected_order {
            if expected.to_u64().is_none_or(|o| o > cap) {
                return Err(Error::CapExceeded { cap, visited: 0 });
            }
        }
        let counts = enumerate_order_counts(self.degree(), &self.generators, cap, threads)?;
        let total: u128 = counts.values().sum();
        let order = crate::factored::factor_integer(total)?;
        if let Some(expected) = &self.expected_order {
            if *expected != order {
                return Err(Error::Inconsistent(format!(
                    "{}: enumeration found {total} elements, expected {expected}",
                    self.label
                )));
            }
        }
        ElementOrderCensus::complete(counts, order)
    }

    pub fn estimate_order_fraction(
        &self,
        k: u64,
        samples: u64,
        seed: u64,
        config: &SamplerConfig,
    ) -> Result<FractionEstimate> {
        estimate_fraction(self.degree(), &self.generators, k, samples, seed, config)
    }
}

/// Projective order of a matrix, or the order of a permutation, bounded by `cap`.
pub fn element_order(g: &Perm, cap: u64) -> Result<u64> {
    g.element_order(cap)
}

/// `A_n` on `n` points, generated by `(1 2 3)` and an `n`-cycle (n odd) or
/// the `(n-1)`-cycle `(2 .. n)` (n even).
pub fn alternating_realization(n: u32) -> Result<GroupRealization> {
    if n < 5 {
        return Err(Error::domain(format!("A{n}: alternating groups need n >= 5")));
    }
    let degree = n as usize;
    let long: Vec<u32> = if n % 2 == 1 { (1..=n).collect() } else { (2..=n).collect() };
    let gens = vec![Perm::from_cycles(degree, &[&[1, 2, 3]])?, Perm::from_cycles(degree, &[&long])?];
    Ok(GroupRealization::permutation(format!("A{n}"), degree, gens)?
        .with_expected_order(order_of_descriptor(&GroupDescriptor::Alternating(n))?))
}

/// Reads a generator file into a permutation realization.
pub fn load_generator_file(path: &Path) -> Result<GroupRealization> {
    let (degree, gens) = read_generator_file(path)?;
    let label = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    GroupRealization::permutation(label, degree, gens)
}

fn generator_file_for(s: Sporadic) -> Option<&'static str> {
    match s {
        Sporadic::M11 => Some("m11.gens"),
        Sporadic::M12 => Some("m12.gens"),
        Sporadic::J2 => Some("j2.gens"),
        _ => None,
    }
}

/// A realization of the simple group `d`, when one is available.
///
/// Supported: alternating groups, `L_n(q)`, `S_2m(q)`, `O_2m+1(q)` (odd `q`,
/// on singular points; even `q` via `S_2m(q)`), and `M11`, `M12`, `J2` from
/// the generator files in `data`. The generators are always checked against
/// the order formula.
pub fn realize(d: &GroupDescriptor, data: &DataDir) -> Result<GroupRealization> {
    let expected = order_of_descriptor(d)?;
    let label = d.to_string();
    let unsupported = || Error::Unsupported(format!("no concrete realization of {d} is available"));
    let realization = match *d {
        GroupDescriptor::Alternating(n) => alternating_realization(n)?,
        GroupDescriptor::Sporadic(s) => {
            let file = generator_file_for(s).ok_or_else(unsupported)?;
            let (degree, gens) = data.generators(file)?;
            GroupRealization::permutation(label, degree, gens)?
        }
        GroupDescriptor::Classical { series, rank, q } => {
            let field = FiniteField::of_order(q)?;
            let rank = rank as usize;
            match series {
                ClassicalSeries::A => {
                    let gens = special_linear_generators(rank + 1, &field)?;
                    GroupRealization::projective(label, field, gens, None)?
                }
                ClassicalSeries::C => {
                    let gens = symplectic_generators(2 * rank, &field)?;
                    GroupRealization::projective(label, field, gens, None)?
                }
                ClassicalSeries::B if q % 2 == 0 => {
                    let gens = symplectic_generators(2 * rank, &field)?;
                    GroupRealization::projective(label, field, gens, None)?
                }
                ClassicalSeries::B => {
                    let o = odd_orthogonal_generators(2 * rank + 1, &field)?;
                    GroupRealization::projective(label, field, o.generators, Some(&o.singular_point))?
                }
                _ => return Err(unsupported()),
            }
        }
        GroupDescriptor::Exceptional { .. } => return Err(unsupported()),
    };
    let realization = realization.with_expected_order(expected);
    realization.verify_expected_order()?;
    Ok(realization)
}
