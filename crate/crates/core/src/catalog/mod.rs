//! Symbolic descriptors of finite simple groups, their orders, isomorphism
//! coincidences and bounded enumeration.

mod descriptor;
mod orders;
mod sporadic;

use std::collections::BTreeSet;

pub use descriptor::{ClassicalSeries, ExceptionalSeries, GroupDescriptor, Sporadic};
pub use orders::{factorial_factored, order_of_descriptor, prime_power_minus_one, prime_power_parts};
pub use sporadic::{sporadic_quant_record, SporadicQuantRecord, SporadicTable};

use crate::error::{Error, Result};
use crate::factored::FactoredInteger;

/// Checks the parameter domain of a descriptor, including the simplicity
/// exclusions (`L2(2)`, `L2(3)`, `U3(2)`, `S4(2)`, `G2(2)`, `²B₂(2)`, ...).
pub fn validate(d: &GroupDescriptor) -> Result<()> {
    let bad = |why: &str| Err(Error::domain(format!("{d}: {why}")));
    let pp = |q: u64| orders::prime_power_parts(q);
    match *d {
        GroupDescriptor::Alternating(n) if n < 5 => bad("alternating groups need n >= 5"),
        GroupDescriptor::Alternating(_) | GroupDescriptor::Sporadic(_) => Ok(()),
        GroupDescriptor::Classical { series, rank, q } => {
            if pp(q).is_none() {
                return bad("field size must be a prime power");
            }
            use ClassicalSeries::*;
            match (series, rank, q) {
                (A, 0, _) => bad("rank must be at least 1"),
                (A, 1, 2 | 3) => bad("L2(2) and L2(3) are solvable"),
                (TwistedA, r, _) if r < 2 => bad("unitary groups need dimension >= 3"),
                (TwistedA, 2, 2) => bad("U3(2) is solvable"),
                (B | C, r, _) if r < 2 => bad("rank must be at least 2"),
                (B | C, 2, 2) => bad("S4(2) is not simple"),
                (D | TwistedD, r, _) if r < 4 => bad("orthogonal groups of this type need rank >= 4"),
                _ => Ok(()),
            }
        }
        GroupDescriptor::Exceptional { series, q } => {
            let Some((p, f)) = pp(q) else {
                return bad("field size must be a prime power");
            };
            match series {
                ExceptionalSeries::G2 if q == 2 => bad("G2(2) is not simple"),
                ExceptionalSeries::Suzuki | ExceptionalSeries::ReeF4 if p != 2 || f % 2 == 0 || f < 3 => {
                    bad("field size must be 2^(2m+1) with m >= 1")
                }
                ExceptionalSeries::ReeG2 if p != 3 || f % 2 == 0 || f < 3 => {
                    bad("field size must be 3^(2m+1) with m >= 1")
                }
                _ => Ok(()),
            }
        }
    }
}

/// Canonical representative of the isomorphism class of `d`.
///
/// Coincidences handled: `L2(4) ≅ L2(5) ≅ A5`, `L2(9) ≅ A6`, `L3(2) ≅ L2(7)`,
/// `L4(2) ≅ A8`, `U4(2) ≅ S4(3)`, `O5(q) ≅ S4(q)`, `O_{2n+1}(2^k) ≅ S_{2n}(2^k)`.
/// Idempotent; descriptors outside these classes are returned unchanged.
pub fn canonicalize_descriptor(d: &GroupDescriptor) -> GroupDescriptor {
    use ClassicalSeries::*;
    match *d {
        GroupDescriptor::Classical { series, rank, q } => match (series, rank, q) {
            (A, 1, 4 | 5) => GroupDescriptor::Alternating(5),
            (A, 1, 9) => GroupDescriptor::Alternating(6),
            (A, 2, 2) => GroupDescriptor::psl(2, 7),
            (A, 3, 2) => GroupDescriptor::Alternating(8),
            (TwistedA, 3, 2) => GroupDescriptor::psp(4, 3),
            (B, 2, _) => GroupDescriptor::Classical { series: C, rank, q },
            (B, _, _) if q % 2 == 0 => GroupDescriptor::Classical { series: C, rank, q },
            _ => *d,
        },
        _ => *d,
    }
}

/// All canonical nonabelian simple groups of order at most `max_order`,
/// sorted by order (ties by name). The Tits group is included.
pub fn enumerate_catalog(max_order: &FactoredInteger) -> Result<Vec<GroupDescriptor>> {
    let fits = |d: &GroupDescriptor| -> Result<bool> { Ok(orders::unchecked_order(d)? <= *max_order) };
    let mut found: BTreeSet<GroupDescriptor> = BTreeSet::new();
    let mut push = |d: GroupDescriptor| -> Result<()> {
        if validate(&d).is_ok() && fits(&d)? {
            found.insert(canonicalize_descriptor(&d));
        }
        Ok(())
    };

    for s in Sporadic::all_with_tits() {
        push(GroupDescriptor::Sporadic(s))?;
    }
    let mut n = 5;
    while fits(&GroupDescriptor::Alternating(n))? {
        push(GroupDescriptor::Alternating(n))?;
        n += 1;
    }

    use ClassicalSeries::*;
    for (series, min_rank) in [(A, 1), (TwistedA, 2), (B, 2), (C, 2), (D, 4), (TwistedD, 4)] {
        let family = |rank, q| GroupDescriptor::Classical { series, rank, q };
        let mut rank = min_rank;
        // q = 2 gives the smallest group at every rank, so stop once it is too large.
        while below_sweep_bound(&family(rank, 2), max_order)? {
            for q in prime_powers() {
                let d = family(rank, q);
                if !below_sweep_bound(&d, max_order)? {
                    break;
                }
                push(d)?;
            }
            rank += 1;
        }
    }

    for series in [
        ExceptionalSeries::G2,
        ExceptionalSeries::F4,
        ExceptionalSeries::E6,
        ExceptionalSeries::E7,
        ExceptionalSeries::E8,
        ExceptionalSeries::TwistedE6,
        ExceptionalSeries::TriD4,
    ] {
        for q in prime_powers() {
            let d = GroupDescriptor::Exceptional { series, q };
            if !below_sweep_bound(&d, max_order)? {
                break;
            }
            push(d)?;
        }
    }
    for (series, p) in [
        (ExceptionalSeries::Suzuki, 2u64),
        (ExceptionalSeries::ReeF4, 2),
        (ExceptionalSeries::ReeG2, 3),
    ] {
        for m in 1u32.. {
            let Some(q) = p.checked_pow(2 * m + 1) else { break };
            let d = GroupDescriptor::Exceptional { series, q };
            if !below_sweep_bound(&d, max_order)? {
                break;
            }
            push(d)?;
        }
    }

    let mut out: Vec<(FactoredInteger, String, GroupDescriptor)> = found
        .into_iter()
        .map(|d| Ok((order_of_descriptor(&d)?, d.to_string(), d)))
        .collect::<Result<_>>()?;
    out.sort();
    Ok(out.into_iter().map(|(_, _, d)| d).collect())
}

/// Whether the sweep for this family must continue: the simple group's order is
/// at least `full / max_center`, and `full` grows strictly with `q` and rank.
fn below_sweep_bound(d: &GroupDescriptor, max_order: &FactoredInteger) -> Result<bool> {
    let (full, _) = orders::lie_order_parts(d)?;
    let slack = crate::factored::factor_integer(orders::max_center(d) as u128)?;
    Ok(full <= max_order.multiply(&slack))
}

fn prime_powers() -> impl Iterator<Item = u64> {
    (2u64..).filter(|&q| orders::prime_power_parts(q).is_some())
}

/// Sort key used wherever descriptors are reported: by order, then by name.
pub fn descriptor_sort_key(d: &GroupDescriptor) -> (FactoredInteger, String) {
    (
        orders::unchecked_order(d).unwrap_or_default(),
        d.to_string(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GroupDescriptor {
        s.parse().unwrap()
    }

    fn names(v: &[GroupDescriptor]) -> Vec<String> {
        v.iter().map(|d| d.to_string()).collect()
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(canonicalize_descriptor(&g("L4(2)")), GroupDescriptor::Alternating(8));
        assert_eq!(canonicalize_descriptor(&g("M11")), g("M11"));
        assert_eq!(canonicalize_descriptor(&g("L2(4)")), GroupDescriptor::Alternating(5));
        assert_eq!(canonicalize_descriptor(&g("L2(5)")), GroupDescriptor::Alternating(5));
        assert_eq!(canonicalize_descriptor(&g("L2(9)")), GroupDescriptor::Alternating(6));
        assert_eq!(canonicalize_descriptor(&g("L3(2)")), g("L2(7)"));
        assert_eq!(canonicalize_descriptor(&g("U4(2)")), g("S4(3)"));
        assert_eq!(canonicalize_descriptor(&g("O5(5)")), g("S4(5)"));
        assert_eq!(canonicalize_descriptor(&g("O7(4)")), g("S6(4)"));
        assert_eq!(canonicalize_descriptor(&g("O7(3)")), g("O7(3)"));
    }

    #[test]
    fn canonicalize_is_idempotent_and_order_preserving() {
        for s in ["L2(4)", "L2(5)", "L2(9)", "L3(2)", "L4(2)", "U4(2)", "O5(3)", "O7(2)", "O9(8)", "A7"] {
            let d = g(s);
            let c = canonicalize_descriptor(&d);
            assert_eq!(canonicalize_descriptor(&c), c);
            assert_eq!(order_of_descriptor(&c).unwrap(), order_of_descriptor(&d).unwrap(), "{s}");
        }
    }

    #[test]
    fn catalog_below_1000() {
        let list = enumerate_catalog(&1000u32.into()).unwrap();
        assert_eq!(names(&list), ["A5", "L2(7)", "A6", "L2(8)", "L2(11)"]);
        assert!(enumerate_catalog(&59u32.into()).unwrap().is_empty());
    }

    #[test]
    fn catalog_contains_equal_order_pair() {
        let list = enumerate_catalog(&"5000000000".parse().unwrap()).unwrap();
        assert!(list.contains(&g("O7(3)")));
        assert!(list.contains(&g("S6(3)")));
        assert_eq!(
            order_of_descriptor(&g("O7(3)")).unwrap(),
            order_of_descriptor(&g("S6(3)")).unwrap()
        );
        let unique: BTreeSet<_> = list.iter().collect();
        assert_eq!(unique.len(), list.len());
        for w in list.windows(2) {
            assert!(order_of_descriptor(&w[0]).unwrap() <= order_of_descriptor(&w[1]).unwrap());
        }
    }
}
