//! Element-order censuses and the invariants derived from them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factored::{factor_integer, is_prime, lcm, totient, FactoredInteger};

/// Map `k → |G(k)|`.
///
/// A complete census covers every element; a partial one carries only
/// selected orders (for groups too large to enumerate) and skips the sum checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementOrderCensus {
    counts: BTreeMap<u64, u128>,
    group_order: FactoredInteger,
    complete: bool,
}

impl ElementOrderCensus {
    /// A complete census; fails if the counts violate the census invariants.
    pub fn complete(counts: BTreeMap<u64, u128>, group_order: FactoredInteger) -> Result<Self> {
        let c = Self {
            counts: counts.into_iter().filter(|&(_, v)| v > 0).collect(),
            group_order,
            complete: true,
        };
        c.check_invariants()?;
        Ok(c)
    }

    pub fn partial(counts: BTreeMap<u64, u128>, group_order: FactoredInteger) -> Self {
        Self {
            counts,
            group_order,
            complete: false,
        }
    }

    pub fn trivial() -> Self {
        Self {
            counts: BTreeMap::from([(1, 1)]),
            group_order: FactoredInteger::one(),
            complete: true,
        }
    }

    pub fn counts(&self) -> &BTreeMap<u64, u128> {
        &self.counts
    }

    /// `|G(k)|`; zero for orders absent from a complete census.
    pub fn count(&self, k: u64) -> u128 {
        self.counts.get(&k).copied().unwrap_or(0)
    }

    /// Like [`count`](Self::count) but `None` when a partial census does not know `k`.
    pub fn get(&self, k: u64) -> Option<u128> {
        match self.counts.get(&k) {
            Some(&v) => Some(v),
            None if self.complete => Some(0),
            None => None,
        }
    }

    pub fn group_order(&self) -> &FactoredInteger {
        &self.group_order
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn total(&self) -> u128 {
        self.counts.values().sum()
    }

    /// Σ counts = |G|, `|G(1)| = 1`, `φ(k) | |G(k)|`, and every `k` divides `|G|`.
    pub fn check_invariants(&self) -> Result<()> {
        let fail = |m: String| Err(Error::Inconsistent(m));
        if !self.complete {
            return fail("census is partial".into());
        }
        if self.count(1) != 1 {
            return fail(format!("|G(1)| = {}", self.count(1)));
        }
        match self.group_order.to_u128() {
            Some(n) if n == self.total() => {}
            _ => {
                return fail(format!(
                    "census total {} differs from group order {}",
                    self.total(),
                    self.group_order.decimal()
                ))
            }
        }
        for (&k, &v) in &self.counts {
            if v % totient(k) as u128 != 0 {
                return fail(format!("phi({k}) does not divide |G({k})| = {v}"));
            }
            if !factor_integer(k as u128)?.divides(&self.group_order) {
                return fail(format!("element order {k} does not divide |G|"));
            }
        }
        Ok(())
    }

    /// `k count` lines, ascending `k`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.counts {
            writeln!(out, "{k} {v}").unwrap();
        }
        out
    }

    /// Inverse of [`render`](Self::render) for a complete census.
    pub fn parse(text: &str) -> Result<Self> {
        let mut counts = BTreeMap::new();
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let err = |m: &str| Error::Parse {
                path: "<census>".into(),
                line: idx + 1,
                message: m.into(),
            };
            let (k, v) = line.split_once(' ').ok_or_else(|| err("expected `k count`"))?;
            let k: u64 = k.parse().map_err(|_| err("bad order"))?;
            let v: u128 = v.trim().parse().map_err(|_| err("bad count"))?;
            counts.insert(k, v);
        }
        let total: u128 = counts.values().sum();
        Self::complete(counts, factor_integer(total)?)
    }
}

/// Invariants derived from a complete census.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantRecord {
    /// π(G)
    pub pi: BTreeSet<u128>,
    /// πₑ(G)
    pub pi_e: BTreeSet<u64>,
    /// npe(G) = {|G(p)| : p ∈ π(G)} as a set.
    pub npe: BTreeSet<u128>,
    /// The same counts as a multiset (sorted), for the stricter comparison.
    pub npe_multiset: Vec<u128>,
    pub involutions: u128,
    pub largest_prime: Option<u128>,
    /// `|G(p)|` for the largest prime `p`.
    pub count_p: u128,
}

pub fn derive_invariants(c: &ElementOrderCensus) -> Result<InvariantRecord> {
    c.check_invariants()?;
    let pi: BTreeSet<u128> = c.group_order().primes().collect();
    let pi_e = c.counts().keys().copied().collect();
    let mut npe_multiset: Vec<u128> = pi.iter().map(|&p| c.count(p as u64)).collect();
    npe_multiset.sort_unstable();
    let largest_prime = pi.iter().next_back().copied();
    Ok(InvariantRecord {
        npe: npe_multiset.iter().copied().collect(),
        npe_multiset,
        involutions: c.count(2),
        count_p: largest_prime.map_or(0, |p| c.count(p as u64)),
        largest_prime,
        pi_e,
        pi,
    })
}

/// `|N_G(P)|` for a Sylow `p`-subgroup `P` of prime order, from
/// `|G : N_G(P)| = |G(p)| / (p − 1)`.
///
/// Validates `p ∥ |G|`, integrality, the Sylow congruence `n_p ≡ 1 (mod p)`
/// and that `p` divides the result.
pub fn sylow_normalizer_order(
    order: &FactoredInteger,
    p: u128,
    count_p: &FactoredInteger,
) -> Result<FactoredInteger> {
    if !is_prime(p) {
        return Err(Error::Precondition(format!("{p} is not prime")));
    }
    match order.exponent(p) {
        1 => {}
        0 => return Err(Error::Precondition(format!("{p} does not divide {order}"))),
        e => {
            return Err(Error::Precondition(format!(
                "{p}^{e} divides {order}; the Sylow {p}-subgroup is not of prime order"
            )))
        }
    }
    let n_p = count_p
        .divide_exact(&factor_integer(p - 1)?)
        .map_err(|_| Error::Inconsistent(format!("p - 1 = {} does not divide |G(p)| = {count_p}", p - 1)))?;
    if n_p.residue(p) != 1 {
        return Err(Error::Inconsistent(format!(
            "number of Sylow {p}-subgroups {n_p} is not 1 mod {p}"
        )));
    }
    let normalizer = order
        .divide_exact(&n_p)
        .map_err(|_| Error::Inconsistent(format!("{n_p} Sylow {p}-subgroups do not divide |G| = {order}")))?;
    if normalizer.exponent(p) != 1 {
        return Err(Error::Inconsistent(format!("{p} does not divide the normalizer order {normalizer}")));
    }
    Ok(normalizer)
}

/// Number of elements of order exactly `p` in `A_n`.
///
/// For odd `p` every product of `k` disjoint `p`-cycles is even, giving
/// `Σ_k n! / (k! p^k (n−kp)!)`. For `p = 2` only products of an even number
/// of transpositions are counted.
pub fn alternating_prime_order_count(n: u32, p: u32) -> Result<FactoredInteger> {
    if !is_prime(p as u128) || p > n {
        return Err(Error::Precondition(format!("need a prime p <= n, got p = {p}, n = {n}")));
    }
    let fact = |m: u32| -> BigUint { (1..=m).map(BigUint::from).product() };
    let total: BigUint = (1..=n / p)
        .filter(|k| p != 2 || k % 2 == 0)
        .map(|k| fact(n) / (fact(k) * BigUint::from(p).pow(k) * fact(n - k * p)))
        .sum();
    let total = total
        .to_u128()
        .ok_or_else(|| Error::OutOfRange(format!("count for A{n} exceeds 128 bits")))?;
    if total == 0 {
        return Err(Error::Precondition(format!("A{n} has no elements of order {p}")));
    }
    factor_integer(total)
}

/// Census of `A × B`: `|(A×B)(k)| = Σ_{lcm(i,j)=k} |A(i)|·|B(j)|`.
pub fn direct_product_census(a: &ElementOrderCensus, b: &ElementOrderCensus) -> Result<ElementOrderCensus> {
    if !a.is_complete() || !b.is_complete() {
        return Err(Error::Precondition("direct product needs complete censuses".into()));
    }
    let mut counts = BTreeMap::new();
    for (&i, &x) in a.counts() {
        for (&j, &y) in b.counts() {
            *counts.entry(lcm(i, j)).or_insert(0u128) += x * y;
        }
    }
    ElementOrderCensus::complete(counts, a.group_order().multiply(b.group_order()))
}

/// Census of the cyclic group of order `n`: `φ(d)` elements of each order `d | n`.
pub fn cyclic_census(n: u64) -> Result<ElementOrderCensus> {
    if n == 0 {
        return Err(Error::domain("cyclic group of order 0"));
    }
    let counts = (1..=n).filter(|d| n.is_multiple_of(*d)).map(|d| (d, totient(d) as u128)).collect();
    ElementOrderCensus::complete(counts, factor_integer(n as u128)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn census(pairs: &[(u64, u128)]) -> ElementOrderCensus {
        ElementOrderCensus::parse(
            &pairs.iter().map(|(k, v)| format!("{k} {v}\n")).collect::<String>(),
        )
        .unwrap()
    }

    // Brute force over the 60 even permutations of five points.
    fn a5_by_brute_force() -> BTreeMap<u64, u128> {
        let mut counts = BTreeMap::new();
        let mut perm = [0usize, 1, 2, 3, 4];
        let mut all = Vec::new();
        permute(&mut perm, 0, &mut all);
        for p in all {
            let inversions = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            if inversions % 2 == 1 {
                continue;
            }
            let mut k = 1u64;
            let mut q = p;
            while q != [0, 1, 2, 3, 4] {
                q = std::array::from_fn(|i| p[q[i]]);
                k += 1;
            }
            *counts.entry(k).or_insert(0) += 1;
        }
        counts
    }

    fn permute(v: &mut [usize; 5], i: usize, out: &mut Vec<[usize; 5]>) {
        if i == 5 {
            out.push(*v);
            return;
        }
        for j in i..5 {
            v.swap(i, j);
            permute(v, i + 1, out);
            v.swap(i, j);
        }
    }

    #[test]
    fn a5_invariants() {
        let counts = a5_by_brute_force();
        assert_eq!(counts, BTreeMap::from([(1, 1), (2, 15), (3, 20), (5, 24)]));
        let c = ElementOrderCensus::complete(counts, 60u32.into()).unwrap();
        let inv = derive_invariants(&c).unwrap();
        assert_eq!(inv.pi_e, BTreeSet::from([1, 2, 3, 5]));
        assert_eq!(inv.npe, BTreeSet::from([15, 20, 24]));
        assert_eq!(inv.involutions, 15);
        assert_eq!(inv.largest_prime, Some(5));
        assert_eq!(inv.count_p, 24);
    }

    #[test]
    fn trivial_group_invariants() {
        let inv = derive_invariants(&ElementOrderCensus::trivial()).unwrap();
        assert_eq!(inv.pi_e, BTreeSet::from([1]));
        assert!(inv.npe.is_empty());
        assert_eq!(inv.involutions, 0);
    }

    #[test]
    fn incomplete_census_rejected() {
        let bad = ElementOrderCensus::partial(BTreeMap::from([(1, 1), (2, 15)]), 60u32.into());
        assert!(matches!(derive_invariants(&bad), Err(Error::Inconsistent(_))));
        let wrong_sum = ElementOrderCensus::complete(BTreeMap::from([(1, 1), (2, 15)]), 60u32.into());
        assert!(wrong_sum.is_err());
    }

    #[test]
    fn npe_multiset_for_abelian_products() {
        let z2 = cyclic_census(2).unwrap();
        let z3 = cyclic_census(3).unwrap();
        let klein = direct_product_census(&z2, &z2).unwrap();
        let g = direct_product_census(&klein, &direct_product_census(&z3, &z3).unwrap()).unwrap();
        let inv = derive_invariants(&g).unwrap();
        assert_eq!(inv.npe_multiset, vec![3, 8]);
        assert_eq!(inv.npe, BTreeSet::from([3, 8]));
    }

    #[test]
    fn normalizer_examples() {
        let m11: FactoredInteger = "2^4*3^2*5*11".parse().unwrap();
        let n = sylow_normalizer_order(&m11, 11, &"2^5*3^2*5".parse().unwrap()).unwrap();
        assert_eq!(n.to_u128(), Some(55));
        let j2: FactoredInteger = "2^7*3^3*5^2*7".parse().unwrap();
        let n = sylow_normalizer_order(&j2, 7, &"2^7*3^3*5^2".parse().unwrap()).unwrap();
        assert_eq!(n.to_string(), "2*3*7");
        let a8: FactoredInteger = 20160u32.into();
        let n = sylow_normalizer_order(&a8, 7, &"2^7*3^2*5".parse().unwrap()).unwrap();
        assert_eq!(n.to_string(), "3*7");
    }

    #[test]
    fn normalizer_errors() {
        let a8: FactoredInteger = 20160u32.into();
        assert!(matches!(
            sylow_normalizer_order(&a8, 3, &1232u32.into()),
            Err(Error::Precondition(_))
        ));
        // 5760 / 6 = 960 ≡ 1 mod 7 holds; 5754/6 = 959 ≡ 0 fails
        assert!(matches!(
            sylow_normalizer_order(&a8, 7, &5754u32.into()),
            Err(Error::Inconsistent(_))
        ));
        assert!(matches!(
            sylow_normalizer_order(&a8, 7, &5761u32.into()),
            Err(Error::Inconsistent(_))
        ));
    }

    #[test]
    fn alternating_counts() {
        assert_eq!(alternating_prime_order_count(8, 7).unwrap().to_string(), "2^7*3^2*5");
        assert_eq!(alternating_prime_order_count(10, 7).unwrap().to_string(), "2^7*3^3*5^2");
        assert_eq!(alternating_prime_order_count(5, 5).unwrap().to_u128(), Some(24));
        assert_eq!(alternating_prime_order_count(5, 2).unwrap().to_u128(), Some(15));
        assert_eq!(alternating_prime_order_count(8, 2).unwrap().to_u128(), Some(315));
        assert!(alternating_prime_order_count(5, 7).is_err());
        assert!(alternating_prime_order_count(5, 4).is_err());
    }

    #[test]
    fn cyclic_examples() {
        assert_eq!(cyclic_census(3).unwrap().counts(), &BTreeMap::from([(1, 1), (3, 2)]));
        assert_eq!(cyclic_census(1).unwrap(), ElementOrderCensus::trivial());
        // brute force over residues mod 12
        let mut brute = BTreeMap::new();
        for r in 0..12u64 {
            let ord = 12 / crate::factored::gcd(r, 12);
            *brute.entry(ord).or_insert(0u128) += 1;
        }
        assert_eq!(cyclic_census(12).unwrap().counts(), &brute);
    }

    #[test]
    fn product_with_cyclic() {
        let a5 = census(&[(1, 1), (2, 15), (3, 20), (5, 24)]);
        let z3 = cyclic_census(3).unwrap();
        let p = direct_product_census(&a5, &z3).unwrap();
        assert_eq!(p.count(15), 48);
        assert_eq!(p.total(), 180);
        assert_eq!(direct_product_census(&a5, &ElementOrderCensus::trivial()).unwrap(), a5);
        // brute force over pairs
        let mut brute = 0;
        for (&i, &x) in a5.counts() {
            for (&j, &y) in z3.counts() {
                if lcm(i, j) == 15 {
                    brute += x * y;
                }
            }
        }
        assert_eq!(brute, 48);
    }

    #[test]
    fn render_parse_round_trip() {
        let c = census(&[(1, 1), (2, 15), (3, 20), (5, 24)]);
        assert_eq!(c.render(), "1 1\n2 15\n3 20\n5 24\n");
        assert_eq!(ElementOrderCensus::parse(&c.render()).unwrap(), c);
    }
}
