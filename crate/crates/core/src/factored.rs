//! Exact positive integers held in fully factored form.
//!
//! Every group order in the crate is a [`FactoredInteger`]. Values beyond
//! 128 bits (the Monster has order ~8·10⁵³) never need a big-integer
//! representation except for decimal rendering and comparison.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};

/// Exclusive upper bound for [`factor_integer`].
pub const FACTOR_LIMIT: u128 = 1 << 127;

const TRIAL_BOUND: u32 = 1 << 20;

/// A positive integer stored as a map prime → exponent. The empty map is 1.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FactoredInteger {
    factors: BTreeMap<u128, u32>,
}

impl FactoredInteger {
    pub fn one() -> Self {
        Self::default()
    }

    /// `p^e` for a prime `p`. Panics in debug builds if `p` is not prime.
    pub fn prime_power(p: u128, e: u32) -> Self {
        debug_assert!(is_prime(p), "{p} is not prime");
        let mut factors = BTreeMap::new();
        if e > 0 {
            factors.insert(p, e);
        }
        Self { factors }
    }

    /// Builds from `(prime, exponent)` pairs, validating primality. Repeated primes accumulate.
    pub fn from_pairs<I: IntoIterator<Item = (u128, u32)>>(pairs: I) -> Result<Self> {
        let mut factors = BTreeMap::new();
        for (p, e) in pairs {
            if !is_prime(p) {
                return Err(Error::domain(format!("{p} is not prime")));
            }
            if e > 0 {
                *factors.entry(p).or_insert(0) += e;
            }
        }
        Ok(Self { factors })
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Prime → exponent pairs, primes ascending.
    pub fn factors(&self) -> impl Iterator<Item = (u128, u32)> + '_ {
        self.factors.iter().map(|(&p, &e)| (p, e))
    }

    pub fn primes(&self) -> impl Iterator<Item = u128> + '_ {
        self.factors.keys().copied()
    }

    pub fn exponent(&self, p: u128) -> u32 {
        self.factors.get(&p).copied().unwrap_or(0)
    }

    pub fn largest_prime(&self) -> Option<u128> {
        self.factors.keys().next_back().copied()
    }

    pub fn multiply(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        for (&p, &e) in &other.factors {
            *factors.entry(p).or_insert(0) += e;
        }
        Self { factors }
    }

    pub fn pow(&self, k: u32) -> Self {
        Self {
            factors: self
                .factors
                .iter()
                .filter(|_| k > 0)
                .map(|(&p, &e)| (p, e * k))
                .collect(),
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.factors.iter().all(|(&p, &e)| other.exponent(p) >= e)
    }

    /// `self / divisor`, failing when the quotient is not an integer.
    pub fn divide_exact(&self, divisor: &Self) -> Result<Self> {
        if !divisor.divides(self) {
            return Err(Error::NotDivisible {
                numerator: self.to_string(),
                denominator: divisor.to_string(),
            });
        }
        let mut factors = self.factors.clone();
        for (&p, &e) in &divisor.factors {
            let slot = factors.get_mut(&p).expect("checked by divides");
            *slot -= e;
            if *slot == 0 {
                factors.remove(&p);
            }
        }
        Ok(Self { factors })
    }

    pub fn gcd(&self, other: &Self) -> Self {
        Self {
            factors: self
                .factors
                .iter()
                .filter_map(|(&p, &e)| {
                    let m = e.min(other.exponent(p));
                    (m > 0).then_some((p, m))
                })
                .collect(),
        }
    }

    /// Value by comparison of integer magnitude.
    pub fn compare(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        // Cancel the common part first so most comparisons stay in u128.
        let g = self.gcd(other);
        let a = self.divide_exact(&g).expect("gcd divides");
        let b = other.divide_exact(&g).expect("gcd divides");
        match (a.to_u128(), b.to_u128()) {
            (Some(x), Some(y)) => x.cmp(&y),
            _ => a.to_biguint().cmp(&b.to_biguint()),
        }
    }

    pub fn to_u128(&self) -> Option<u128> {
        let mut acc: u128 = 1;
        for (&p, &e) in &self.factors {
            for _ in 0..e {
                acc = acc.checked_mul(p)?;
            }
        }
        Some(acc)
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.to_u128().and_then(|v| u64::try_from(v).ok())
    }

    pub fn to_biguint(&self) -> BigUint {
        let mut acc = BigUint::one();
        for (&p, &e) in &self.factors {
            acc *= BigUint::from(p).pow(e);
        }
        acc
    }

    pub fn to_f64(&self) -> f64 {
        self.to_biguint().to_f64().unwrap_or(f64::INFINITY)
    }

    pub fn decimal(&self) -> String {
        self.to_biguint().to_string()
    }

    /// The value reduced modulo `m`, computed without forming the product.
    pub fn residue(&self, m: u128) -> u128 {
        assert!(m > 0);
        let mut acc = 1 % m;
        for (&p, &e) in &self.factors {
            acc = mul_mod(acc, pow_mod(p % m, e as u128, m), m);
        }
        acc
    }

    /// φ(p^e) = p^(e−1)·(p−1), factored.
    pub fn totient_of_prime_power(p: u128, e: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::domain(format!("{p} is not prime")));
        }
        if e == 0 {
            return Err(Error::domain("totient of p^0 is undefined here"));
        }
        Ok(Self::prime_power(p, e - 1).multiply(&factor_integer(p - 1)?))
    }
}

impl PartialOrd for FactoredInteger {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FactoredInteger {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

impl fmt::Display for FactoredInteger {
    /// Caret-star rendering, primes ascending: `2^4*3^2*5*11`. One renders as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, (&p, &e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FactoredInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FactoredInteger({self})")
    }
}

impl FromStr for FactoredInteger {
    type Err = Error;

    /// Parses the caret-star form (`2^4*3^2*5*11`) or a plain decimal below 2¹²⁷.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::domain("empty factored integer"));
        }
        if !s.contains(['^', '*']) {
            let n: u128 = s
                .parse()
                .map_err(|_| Error::domain(format!("not an integer: {s:?}")))?;
            return factor_integer(n);
        }
        let mut pairs = Vec::new();
        for term in s.split('*') {
            let (base, exp) = match term.split_once('^') {
                Some((b, e)) => (b, e),
                None => (term, "1"),
            };
            let p: u128 = base
                .trim()
                .parse()
                .map_err(|_| Error::domain(format!("bad base in {term:?}")))?;
            let e: u32 = exp
                .trim()
                .parse()
                .map_err(|_| Error::domain(format!("bad exponent in {term:?}")))?;
            if p == 1 {
                continue;
            }
            pairs.push((p, e));
        }
        Self::from_pairs(pairs)
    }
}

// Conversions cannot fail, so zero (which has no factorization) maps to one.
// Use `factor_integer` where zero must be rejected.
impl From<u32> for FactoredInteger {
    fn from(n: u32) -> Self {
        factor_integer(n.max(1) as u128).expect("u32 is in range")
    }
}

impl From<u64> for FactoredInteger {
    fn from(n: u64) -> Self {
        factor_integer(n.max(1) as u128).expect("u64 is in range")
    }
}

/// Factors `n` completely: trial division below 2²⁰, then Pollard–Brent with
/// Miller–Rabin / strong-Lucas primality checks.
pub fn factor_integer(n: u128) -> Result<FactoredInteger> {
    if n == 0 {
        return Err(Error::domain("cannot factor 0"));
    }
    if n >= FACTOR_LIMIT {
        return Err(Error::OutOfRange(format!("{n} >= 2^127")));
    }
    let mut factors = BTreeMap::new();
    let mut m = n;
    for &p in small_primes() {
        let p = p as u128;
        if p * p > m {
            break;
        }
        while m.is_multiple_of(p) {
            m /= p;
            *factors.entry(p).or_insert(0) += 1;
        }
    }
    if m > 1 {
        let mut stack = vec![m];
        while let Some(x) = stack.pop() {
            // No factor below the trial bound survives, so anything under its square is prime.
            if x < (TRIAL_BOUND as u128) * (TRIAL_BOUND as u128) || is_prime(x) {
                *factors.entry(x).or_insert(0) += 1;
                continue;
            }
            let d = find_factor(x);
            stack.push(d);
            stack.push(x / d);
        }
    }
    Ok(FactoredInteger { factors })
}

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = TRIAL_BOUND as usize;
        let mut composite = vec![false; n];
        let mut out = Vec::new();
        for i in 2..n {
            if !composite[i] {
                out.push(i as u32);
                let mut j = i * i;
                while j < n {
                    composite[j] = true;
                    j += i;
                }
            }
        }
        out
    })
}

pub(crate) fn mul_mod(a: u128, b: u128, n: u128) -> u128 {
    if n <= u64::MAX as u128 {
        return (a % n) * (b % n) % n;
    }
    let (mut a, mut b) = (a % n, b % n);
    let mut acc = 0u128;
    while b > 0 {
        if b & 1 == 1 {
            acc = add_mod(acc, a, n);
        }
        a = add_mod(a, a, n);
        b >>= 1;
    }
    acc
}

fn add_mod(a: u128, b: u128, n: u128) -> u128 {
    if a >= n - b {
        a - (n - b)
    } else {
        a + b
    }
}

pub(crate) fn pow_mod(mut base: u128, mut exp: u128, n: u128) -> u128 {
    let mut acc = 1 % n;
    base %= n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, n);
        }
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    acc
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Primality for `n < 2^127`.
///
/// Miller–Rabin with the first 13 prime bases is a proof below 3.3·10²⁴; above
/// that the strong Lucas test is added (Baillie–PSW).
pub fn is_prime(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u128, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    if n < 41 * 41 {
        return true;
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let witness = |a: u128| -> bool {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            return false;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                return false;
            }
        }
        true
    };
    let bases: &[u128] = if n < 3_317_044_064_679_887_385_961_981 {
        &[2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41]
    } else {
        &[2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53]
    };
    if bases.iter().any(|&a| witness(a)) {
        return false;
    }
    n < 3_317_044_064_679_887_385_961_981 || strong_lucas(n)
}

fn jacobi(mut a: i128, n: u128) -> i32 {
    let n_i = n as i128;
    a = a.rem_euclid(n_i);
    let mut a = a as u128;
    let mut n = n;
    let mut result = 1;
    while a != 0 {
        while a.is_multiple_of(2) {
            a /= 2;
            if n % 8 == 3 || n % 8 == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

fn is_square(n: u128) -> bool {
    let r = (n as f64).sqrt() as u128;
    (r.saturating_sub(2)..=r + 2).any(|x| x.checked_mul(x) == Some(n))
}

fn strong_lucas(n: u128) -> bool {
    if is_square(n) {
        return false;
    }
    let mut d_val: i128 = 5;
    loop {
        match jacobi(d_val, n) {
            -1 => break,
            0 if d_val.unsigned_abs() != n => return false,
            _ => {}
        }
        d_val = if d_val > 0 { -(d_val + 2) } else { -d_val + 2 };
    }
    let to_mod = |v: i128| -> u128 { v.rem_euclid(n as i128) as u128 };
    let p = 1u128;
    let q = to_mod((1 - d_val) / 4);
    let dm = to_mod(d_val);
    let half = |x: u128| -> u128 {
        if x.is_multiple_of(2) {
            x / 2
        } else {
            // n is odd and below 2^127 so x + n cannot overflow
            (x + n) / 2
        }
    };
    let mut d = n + 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    // Left-to-right ladder over the bits of d, starting from k = 1.
    let (mut u, mut v, mut qk) = (1u128, p, q);
    let bits = 128 - d.leading_zeros();
    for i in (0..bits - 1).rev() {
        u = mul_mod(u, v, n);
        v = (mul_mod(v, v, n) + n - mul_mod(2, qk, n)) % n;
        qk = mul_mod(qk, qk, n);
        if (d >> i) & 1 == 1 {
            let nu = half((mul_mod(p, u, n) + v) % n);
            let nv = half((mul_mod(dm, u, n) + mul_mod(p, v, n)) % n);
            u = nu;
            v = nv;
            qk = mul_mod(qk, q, n);
        }
    }
    if u == 0 || v == 0 {
        return true;
    }
    for _ in 1..s {
        v = (mul_mod(v, v, n) + n - mul_mod(2, qk, n)) % n;
        qk = mul_mod(qk, qk, n);
        if v == 0 {
            return true;
        }
    }
    false
}

/// A nontrivial factor of the odd composite `n`. Deterministic: tries
/// polynomial constants c = 1, 2, ... in turn.
fn find_factor(n: u128) -> u128 {
    if n.is_multiple_of(2) {
        return 2;
    }
    for c in 1u128.. {
        if let Some(d) = pollard_brent(n, c) {
            return d;
        }
    }
    unreachable!()
}

fn pollard_brent(n: u128, c: u128) -> Option<u128> {
    let f = |x: u128| add_mod(mul_mod(x, x, n), c % n, n);
    let batch = 128;
    let (mut y, mut r, mut q, mut g) = (2u128, 1u64, 1u128, 1u128);
    let (mut x, mut ys) = (0u128, 0u128);
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..batch.min(r - k) {
                y = f(y);
                q = mul_mod(q, x.abs_diff(y), n);
            }
            g = gcd_u128(q, n);
            k += batch;
        }
        r *= 2;
        if r > 1 << 40 {
            return None;
        }
    }
    if g == n {
        loop {
            ys = f(ys);
            g = gcd_u128(x.abs_diff(ys), n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

/// Euler's totient of a machine integer.
pub fn totient(n: u64) -> u64 {
    let f = factor_integer(n as u128).expect("u64 in range");
    f.factors()
        .map(|(p, e)| (p as u64 - 1) * (p as u64).pow(e - 1))
        .product()
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd_u128(a as u128, b as u128) as u64 * b
}

pub fn gcd(a: u64, b: u64) -> u64 {
    gcd_u128(a as u128, b as u128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division(mut n: u128) -> BTreeMap<u128, u32> {
        let mut out = BTreeMap::new();
        let mut p = 2;
        while p * p <= n {
            while n.is_multiple_of(p) {
                *out.entry(p).or_insert(0) += 1;
                n /= p;
            }
            p += 1;
        }
        if n > 1 {
            *out.entry(n).or_insert(0) += 1;
        }
        out
    }

    #[test]
    fn factor_examples() {
        assert!(factor_integer(1).unwrap().is_one());
        assert_eq!(factor_integer(7920).unwrap().to_string(), "2^4*3^2*5*11");
        let f = factor_integer(20160).unwrap();
        assert_eq!(f.factors, trial_division(20160));
        assert_eq!(f.to_string(), "2^6*3^2*5*7");
    }

    #[test]
    fn factor_large() {
        // 2^64 + 1 = 274177 · 67280421310721
        let f = factor_integer((1u128 << 64) + 1).unwrap();
        assert_eq!(f.to_string(), "274177*67280421310721");
        // Mersenne prime 2^61 - 1 and 2^89 - 1
        assert_eq!(factor_integer((1 << 61) - 1).unwrap().exponent((1 << 61) - 1), 1);
        assert!(is_prime((1u128 << 89) - 1));
        assert!(is_prime((1u128 << 107) - 1));
        assert!(!is_prime((1u128 << 101) - 1));
        // product of two primes above 2^30
        let (p, q) = (1_000_000_007u128, 998_244_353u128);
        let f = factor_integer(p * q * 11).unwrap();
        assert_eq!(f.factors().collect::<Vec<_>>(), vec![(11, 1), (q, 1), (p, 1)]);
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(matches!(factor_integer(1 << 127), Err(Error::OutOfRange(_))));
        assert!(factor_integer(0).is_err());
    }

    #[test]
    fn arithmetic_examples() {
        let a = FactoredInteger::from_pairs([(2, 1)]).unwrap();
        let b = FactoredInteger::from_pairs([(2, 1), (3, 1)]).unwrap();
        assert_eq!(a.multiply(&b).to_string(), "2^2*3");

        let m11: FactoredInteger = "2^4*3^2*5*11".parse().unwrap();
        let ten = factor_integer(10).unwrap();
        let count: FactoredInteger = "2^5*3^2*5".parse().unwrap();
        let n = m11.multiply(&ten).divide_exact(&count).unwrap();
        assert_eq!(n.to_string(), "5*11");
        assert_eq!(n.to_u128(), Some(55));

        assert_eq!(FactoredInteger::totient_of_prime_power(7, 1).unwrap().to_string(), "2*3");
        assert_eq!(FactoredInteger::totient_of_prime_power(2, 5).unwrap().to_string(), "2^4");
    }

    #[test]
    fn divide_exact_rejects_non_divisor() {
        let a: FactoredInteger = "2^3*5".parse().unwrap();
        let b: FactoredInteger = "2^4".parse().unwrap();
        assert!(matches!(a.divide_exact(&b), Err(Error::NotDivisible { .. })));
    }

    #[test]
    fn compare_and_render_huge() {
        let monster: FactoredInteger =
            "2^46*3^20*5^9*7^6*11^2*13^3*17*19*23*29*31*41*47*59*71".parse().unwrap();
        assert_eq!(
            monster.decimal(),
            "808017424794512875886459904961710757005754368000000000"
        );
        let baby: FactoredInteger =
            "2^41*3^13*5^6*7^2*11*13*17*19*23*31*47".parse().unwrap();
        assert!(baby < monster);
        assert_eq!(monster.to_u128(), None);
        assert_eq!(monster.residue(71), 0);
        assert_eq!(monster.residue(73), monster.to_biguint().to_u128().map_or_else(
            || (monster.to_biguint() % 73u32).to_u128().unwrap(),
            |v| v % 73,
        ));
    }

    #[test]
    fn parse_rejects_non_primes() {
        assert!("4^2*3".parse::<FactoredInteger>().is_err());
        assert_eq!("1".parse::<FactoredInteger>().unwrap(), FactoredInteger::one());
        assert_eq!("360".parse::<FactoredInteger>().unwrap().to_string(), "2^3*3^2*5");
    }

    #[test]
    fn totient_values() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient(12), 4);
        assert_eq!(totient(7), 6);
    }
}
