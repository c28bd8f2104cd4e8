//! Order formulas for the families of finite simple groups.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use super::descriptor::{ClassicalSeries, ExceptionalSeries, GroupDescriptor, Sporadic};
use crate::error::{Error, Result};
use crate::factored::{factor_integer, gcd, FactoredInteger};

/// `q = p^f` decomposition, or `None` when `q` is not a prime power.
pub fn prime_power_parts(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let f = factor_integer(q as u128).ok()?;
    let mut it = f.factors();
    let (p, e) = it.next()?;
    it.next().is_none().then_some((p as u64, e))
}

fn mobius(n: u64) -> i32 {
    let f = factor_integer(n as u128).expect("small");
    if f.factors().any(|(_, e)| e > 1) {
        0
    } else if f.factors().count().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..)
        .take_while(|d| d * d <= n)
        .filter(|d| n.is_multiple_of(*d))
        .flat_map(|d| [d, n / d])
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Φ_d(p), factored. Cached: the same cyclotomic values recur across families.
fn cyclotomic_factored(p: u64, d: u64) -> Result<FactoredInteger> {
    static CACHE: OnceLock<Mutex<HashMap<(u64, u64), FactoredInteger>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().unwrap().get(&(p, d)) {
        return Ok(hit.clone());
    }
    let (mut num, mut den) = (BigUint::one(), BigUint::one());
    let base = BigUint::from(p);
    for k in divisors(d) {
        let term = base.pow(k as u32) - BigUint::one();
        match mobius(d / k) {
            1 => num *= term,
            -1 => den *= term,
            _ => {}
        }
    }
    let value = num / den;
    let small = value
        .to_u128()
        .ok_or_else(|| Error::OutOfRange(format!("cyclotomic value Phi_{d}({p}) exceeds 128 bits")))?;
    let f = factor_integer(small)?;
    cache.lock().unwrap().insert((p, d), f.clone());
    Ok(f)
}

/// `p^e − 1`, factored through its cyclotomic decomposition.
pub fn prime_power_minus_one(p: u64, e: u32) -> Result<FactoredInteger> {
    let mut acc = FactoredInteger::one();
    for d in divisors(e as u64) {
        acc = acc.multiply(&cyclotomic_factored(p, d)?);
    }
    Ok(acc)
}

/// Helper that evaluates `q^k ± 1` for a fixed field size `q = p^f`.
#[derive(Clone, Copy)]
struct FieldSize {
    p: u64,
    f: u32,
    q: u64,
}

impl FieldSize {
    fn new(q: u64) -> Result<Self> {
        let (p, f) = prime_power_parts(q)
            .ok_or_else(|| Error::domain(format!("{q} is not a prime power")))?;
        Ok(Self { p, f, q })
    }

    fn power(&self, k: u32) -> FactoredInteger {
        FactoredInteger::prime_power(self.p as u128, self.f * k)
    }

    fn minus_one(&self, k: u32) -> Result<FactoredInteger> {
        prime_power_minus_one(self.p, self.f * k)
    }

    fn plus_one(&self, k: u32) -> Result<FactoredInteger> {
        self.minus_one(2 * k)?.divide_exact(&self.minus_one(k)?)
    }

    /// `q^k mod m`
    fn residue(&self, k: u32, m: u64) -> u64 {
        let mut acc = 1 % m;
        for _ in 0..k {
            acc = acc * (self.q % m) % m;
        }
        acc
    }
}

/// Order of the covering group (before quotienting the centre) and the
/// centre size `d`; the simple group has order `full / d`.
pub(crate) fn lie_order_parts(d: &GroupDescriptor) -> Result<(FactoredInteger, u64)> {
    match *d {
        GroupDescriptor::Classical { series, rank, q } => classical_parts(series, rank, q),
        GroupDescriptor::Exceptional { series, q } => exceptional_parts(series, q),
        _ => Err(Error::domain(format!("{d} is not of Lie type"))),
    }
}

/// Largest possible centre size for a family at a given rank. Used to bound
/// parameter sweeps.
pub(crate) fn max_center(d: &GroupDescriptor) -> u64 {
    match *d {
        GroupDescriptor::Classical { series, rank, .. } => match series {
            ClassicalSeries::A | ClassicalSeries::TwistedA => rank as u64 + 1,
            ClassicalSeries::B | ClassicalSeries::C => 2,
            ClassicalSeries::D | ClassicalSeries::TwistedD => 4,
        },
        GroupDescriptor::Exceptional { series, .. } => match series {
            ExceptionalSeries::E6 | ExceptionalSeries::TwistedE6 => 3,
            ExceptionalSeries::E7 => 2,
            _ => 1,
        },
        _ => 1,
    }
}

fn product<I: IntoIterator<Item = Result<FactoredInteger>>>(terms: I) -> Result<FactoredInteger> {
    terms
        .into_iter()
        .try_fold(FactoredInteger::one(), |acc, t| Ok(acc.multiply(&t?)))
}

fn classical_parts(series: ClassicalSeries, n: u32, q: u64) -> Result<(FactoredInteger, u64)> {
    let fs = FieldSize::new(q)?;
    let (full, center) = match series {
        ClassicalSeries::A => {
            let full = fs
                .power(n * (n + 1) / 2)
                .multiply(&product((2..=n + 1).map(|i| fs.minus_one(i)))?);
            (full, gcd(n as u64 + 1, q - 1))
        }
        ClassicalSeries::TwistedA => {
            let terms = (2..=n + 1).map(|i| if i % 2 == 0 { fs.minus_one(i) } else { fs.plus_one(i) });
            let full = fs.power(n * (n + 1) / 2).multiply(&product(terms)?);
            (full, gcd(n as u64 + 1, q + 1))
        }
        ClassicalSeries::B | ClassicalSeries::C => {
            let full = fs
                .power(n * n)
                .multiply(&product((1..=n).map(|i| fs.minus_one(2 * i)))?);
            (full, gcd(2, q - 1))
        }
        ClassicalSeries::D | ClassicalSeries::TwistedD => {
            let (top, residue) = if series == ClassicalSeries::D {
                (fs.minus_one(n)?, (fs.residue(n, 4) + 3) % 4)
            } else {
                (fs.plus_one(n)?, (fs.residue(n, 4) + 1) % 4)
            };
            let full = fs
                .power(n * (n - 1))
                .multiply(&top)
                .multiply(&product((1..n).map(|i| fs.minus_one(2 * i)))?);
            (full, gcd(4, residue))
        }
    };
    Ok((full, center))
}

fn exceptional_parts(series: ExceptionalSeries, q: u64) -> Result<(FactoredInteger, u64)> {
    let fs = FieldSize::new(q)?;
    let minus = |ks: &[u32]| product(ks.iter().map(|&k| fs.minus_one(k)));
    let out = match series {
        ExceptionalSeries::G2 => (fs.power(6).multiply(&minus(&[6, 2])?), 1),
        ExceptionalSeries::F4 => (fs.power(24).multiply(&minus(&[12, 8, 6, 2])?), 1),
        ExceptionalSeries::E6 => (
            fs.power(36).multiply(&minus(&[12, 9, 8, 6, 5, 2])?),
            gcd(3, q - 1),
        ),
        ExceptionalSeries::TwistedE6 => {
            let full = fs
                .power(36)
                .multiply(&minus(&[12, 8, 6, 2])?)
                .multiply(&fs.plus_one(9)?)
                .multiply(&fs.plus_one(5)?);
            (full, gcd(3, q + 1))
        }
        ExceptionalSeries::E7 => (
            fs.power(63)
                .multiply(&minus(&[2, 6, 8, 10, 12, 14, 18])?),
            gcd(2, q - 1),
        ),
        ExceptionalSeries::E8 => (
            fs.power(120)
                .multiply(&minus(&[2, 8, 12, 14, 18, 20, 24, 30])?),
            1,
        ),
        ExceptionalSeries::TriD4 => {
            // q^8 + q^4 + 1 = (q^12 − 1)/(q^4 − 1)
            let middle = fs.minus_one(12)?.divide_exact(&fs.minus_one(4)?)?;
            (fs.power(12).multiply(&middle).multiply(&minus(&[6, 2])?), 1)
        }
        ExceptionalSeries::Suzuki => (
            fs.power(2).multiply(&fs.plus_one(2)?).multiply(&fs.minus_one(1)?),
            1,
        ),
        ExceptionalSeries::ReeG2 => (
            fs.power(3).multiply(&fs.plus_one(3)?).multiply(&fs.minus_one(1)?),
            1,
        ),
        ExceptionalSeries::ReeF4 => (
            fs.power(12)
                .multiply(&fs.plus_one(6)?)
                .multiply(&fs.minus_one(4)?)
                .multiply(&fs.plus_one(3)?)
                .multiply(&fs.minus_one(1)?),
            1,
        ),
    };
    Ok(out)
}

/// `n!`, factored with Legendre's formula.
pub fn factorial_factored(n: u32) -> FactoredInteger {
    let mut pairs = Vec::new();
    for p in 2..=n {
        if !crate::factored::is_prime(p as u128) {
            continue;
        }
        let mut e = 0;
        let mut pk = p as u64;
        while pk <= n as u64 {
            e += (n as u64 / pk) as u32;
            pk *= p as u64;
        }
        pairs.push((p as u128, e));
    }
    FactoredInteger::from_pairs(pairs).expect("primes")
}

pub(crate) fn sporadic_order(s: Sporadic) -> FactoredInteger {
    s.order_text().parse().expect("static order table")
}

/// Exact order of a (valid) descriptor.
pub fn order_of_descriptor(d: &GroupDescriptor) -> Result<FactoredInteger> {
    super::validate(d)?;
    unchecked_order(d)
}

/// Order formula without the simplicity check; used for sweep bounds.
pub(crate) fn unchecked_order(d: &GroupDescriptor) -> Result<FactoredInteger> {
    match *d {
        GroupDescriptor::Alternating(n) => {
            factorial_factored(n).divide_exact(&FactoredInteger::prime_power(2, 1))
        }
        GroupDescriptor::Sporadic(s) => Ok(sporadic_order(s)),
        _ => {
            let (full, center) = lie_order_parts(d)?;
            full.divide_exact(&factor_integer(center as u128)?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(s: &str) -> String {
        order_of_descriptor(&s.parse().unwrap()).unwrap().decimal()
    }

    #[test]
    fn spec_examples() {
        let m11 = order_of_descriptor(&"M11".parse().unwrap()).unwrap();
        assert_eq!(m11.to_string(), "2^4*3^2*5*11");
        let s63 = order_of_descriptor(&"S6(3)".parse().unwrap()).unwrap();
        assert_eq!(s63.to_string(), "2^9*3^9*5*7*13");
        let suz = order_of_descriptor(&"Suz".parse().unwrap()).unwrap();
        assert_eq!(suz.to_string(), "2^13*3^7*5^2*7*11*13");
    }

    // Frozen from GAP's character table library (Size of each table).
    #[test]
    fn lie_orders_match_character_table_library() {
        let table = [
            ("G2(3)", "4245696"),
            ("G2(4)", "251596800"),
            ("G2(5)", "5859000000"),
            ("3D4(2)", "211341312"),
            ("3D4(3)", "20560831566912"),
            ("Sz(8)", "29120"),
            ("Sz(32)", "32537600"),
            ("2G2(27)", "10073444472"),
            ("F4(2)", "3311126603366400"),
            ("2E6(2)", "76532479683774853939200"),
            ("E6(2)", "214841575522005575270400"),
            ("2F4(8)", "264905352699586176614400"),
            ("U3(3)", "6048"),
            ("U4(2)", "25920"),
            ("U4(3)", "3265920"),
            ("U5(2)", "13685760"),
            ("U6(2)", "9196830720"),
            ("O8+(2)", "174182400"),
            ("O8-(2)", "197406720"),
            ("O8+(3)", "4952179814400"),
            ("O8-(3)", "10151968619520"),
            ("O7(3)", "4585351680"),
            ("S6(2)", "1451520"),
            ("S6(3)", "4585351680"),
            ("S8(2)", "47377612800"),
            ("O9(3)", "65784756654489600"),
            ("O10+(2)", "23499295948800"),
            ("O10-(2)", "25015379558400"),
            ("L3(3)", "5616"),
            ("S4(4)", "979200"),
            ("S4(5)", "4680000"),
            ("L5(2)", "9999360"),
            ("L4(3)", "6065280"),
            ("U3(4)", "62400"),
            ("U3(5)", "126000"),
            ("L3(5)", "372000"),
        ];
        for (name, expected) in table {
            assert_eq!(order(name), expected, "{name}");
        }
    }

    #[test]
    fn large_exceptional_orders() {
        let e8 = order_of_descriptor(&"E8(2)".parse().unwrap()).unwrap();
        assert_eq!(e8.exponent(2), 120);
        let e7 = order_of_descriptor(&"E7(3)".parse().unwrap()).unwrap();
        assert_eq!(e7.exponent(3), 63);
        assert!(e7 != e8);
    }

    #[test]
    fn alternating_is_half_factorial() {
        for n in 5..30u32 {
            let direct: BigUint = (1..=n).map(BigUint::from).product::<BigUint>() / 2u32;
            let f = order_of_descriptor(&GroupDescriptor::Alternating(n)).unwrap();
            assert_eq!(f.to_biguint(), direct, "A{n}");
        }
    }

    #[test]
    fn prime_power_minus_one_matches_direct() {
        for (p, e) in [(2u64, 12u32), (3, 9), (5, 6), (7, 4), (2, 60)] {
            let v = prime_power_minus_one(p, e).unwrap();
            assert_eq!(v.to_u128(), Some((p as u128).pow(e) - 1));
        }
    }
}
