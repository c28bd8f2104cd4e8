//! Finite fields GF(p^k) with `p^k <= 2^16`.
//!
//! Elements are indexed `0..q` by their residue polynomial `Σ c_i x^i`
//! read as the base-`p` integer `Σ c_i p^i`; `0` is zero and `1` is one.

use crate::error::{Error, Result};
use crate::factored::{factor_integer, is_prime};

/// Defining polynomials, low coefficient first, leading 1 omitted.
/// GF(9) uses x² + 1; the others are Conway polynomials.
const POLYNOMIALS: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1]),
    (2, 3, &[1, 1, 0]),
    (2, 4, &[1, 1, 0, 0]),
    (2, 5, &[1, 0, 1, 0, 0]),
    (2, 6, &[1, 1, 0, 1, 1, 0]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0]),
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0]),
    (3, 2, &[1, 0]),
    (3, 3, &[1, 2, 0]),
    (3, 4, &[2, 0, 0, 2]),
    (5, 2, &[2, 4]),
    (5, 3, &[3, 3, 0]),
    (7, 2, &[3, 6]),
    (11, 2, &[2, 7]),
    (13, 2, &[2, 12]),
];

pub struct FiniteField {
    p: u32,
    k: u32,
    q: u32,
    /// Monic modulus, low coefficient first, length `k + 1`.
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl std::fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GF({}^{}) mod {:?}", self.p, self.k, self.modulus)
    }
}

impl FiniteField {
    /// GF(p^k) with the vendored polynomial for `(p, k)`, or the
    /// lexicographically first monic irreducible one when none is vendored.
    pub fn new(p: u32, k: u32) -> Result<Self> {
        if !is_prime(p as u128) || k == 0 {
            return Err(Error::domain(format!("GF({p}^{k}) needs a prime p and k >= 1")));
        }
        let q = (p as u64).checked_pow(k).filter(|&q| q <= 1 << 16).ok_or_else(|| {
            Error::domain(format!("GF({p}^{k}) exceeds the supported size 2^16"))
        })? as u32;
        let modulus = match POLYNOMIALS.iter().find(|(pp, kk, _)| *pp == p && *kk == k) {
            Some((_, _, low)) => low.iter().copied().chain([1]).collect(),
            None if k == 1 => vec![0, 1],
            None => first_irreducible(p, k),
        };
        Self::with_modulus(p, modulus, q)
    }

    /// GF(q) for a prime power `q`.
    pub fn of_order(q: u64) -> Result<Self> {
        let (p, k) = crate::catalog::prime_power_parts(q)
            .ok_or_else(|| Error::domain(format!("{q} is not a prime power")))?;
        Self::new(p as u32, k)
    }

    fn with_modulus(p: u32, modulus: Vec<u32>, q: u32) -> Result<Self> {
        let k = modulus.len() as u32 - 1;
        if !is_irreducible(p, &modulus) {
            return Err(Error::domain(format!(
                "polynomial {modulus:?} is reducible over GF({p})"
            )));
        }
        let mut field = FiniteField {
            p,
            k,
            q,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
        };
        let g = (2..q.max(2))
            .chain(std::iter::once(1))
            .find(|&g| field.is_primitive_slow(g))
            .ok_or_else(|| Error::domain("no primitive element found"))?;
        let mut exp = vec![0u32; q as usize - 1];
        let mut log = vec![u32::MAX; q as usize];
        let mut x = 1;
        for (i, slot) in exp.iter_mut().enumerate() {
            *slot = x;
            log[x as usize] = i as u32;
            x = field.mul_slow(x, g);
        }
        field.exp = exp;
        field.log = log;
        Ok(field)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// A fixed primitive element (generator of the multiplicative group).
    pub fn primitive(&self) -> u32 {
        if self.q == 2 {
            1
        } else {
            self.exp[1]
        }
    }

    /// The element with coefficient vector `coeffs` (low first).
    pub fn from_coeffs(&self, coeffs: &[u32]) -> u32 {
        coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c % self.p)
    }

    fn coeffs(&self, mut a: u32) -> Vec<u32> {
        (0..self.k)
            .map(|_| {
                let c = a % self.p;
                a /= self.p;
                c
            })
            .collect()
    }

    /// Image of an integer in the prime field.
    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b, mut place, mut out) = (a, b, 1, 0);
        while a > 0 || b > 0 {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        let (mut a, mut place, mut out) = (a, 1, 0);
        while a > 0 {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.q - 1;
        let e = (self.log[a as usize] + self.log[b as usize]) % n;
        self.exp[e as usize]
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let n = self.q - 1;
        Some(self.exp[((n - self.log[a as usize]) % n) as usize])
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = (self.q - 1) as u64;
        self.exp[((self.log[a as usize] as u64 * (e % n)) % n) as usize]
    }

    /// Schoolbook polynomial multiplication reduced by the modulus.
    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let (a, b) = (self.coeffs(a), self.coeffs(b));
        let k = self.k as usize;
        let p = self.p;
        let mut prod = vec![0u32; 2 * k];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        for d in (k..2 * k).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            for (i, &m) in self.modulus.iter().enumerate() {
                let idx = d - k + i;
                prod[idx] = (prod[idx] + (p - c) * m % p) % p;
            }
        }
        self.from_coeffs(&prod[..k])
    }

    fn is_primitive_slow(&self, g: u32) -> bool {
        if g == 0 {
            return false;
        }
        let n = (self.q - 1) as u64;
        if n == 1 {
            return g == 1;
        }
        let pow = |mut e: u64| {
            let (mut acc, mut base) = (1u32, g);
            while e > 0 {
                if e & 1 == 1 {
                    acc = self.mul_slow(acc, base);
                }
                base = self.mul_slow(base, base);
                e >>= 1;
            }
            acc
        };
        factor_integer(n as u128)
            .expect("small")
            .primes()
            .all(|r| pow(n / r as u64) != 1)
    }
}

fn poly_rem(p: u32, num: &[u32], den: &[u32]) -> Vec<u32> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    let lead_inv = (1..p).find(|&x| x * den[dd] % p == 1).expect("nonzero lead");
    while r.len() > dd {
        let c = r[r.len() - 1] * lead_inv % p;
        let shift = r.len() - 1 - dd;
        for (i, &d) in den.iter().enumerate() {
            r[shift + i] = (r[shift + i] + (p - c * d % p)) % p;
        }
        r.pop();
        while r.last() == Some(&0) && r.len() > dd {
            r.pop();
        }
    }
    r
}

/// Trial division by every monic polynomial of degree `1..=k/2`.
fn is_irreducible(p: u32, f: &[u32]) -> bool {
    let k = f.len() - 1;
    if k == 0 || f[k] == 0 {
        return false;
    }
    for d in 1..=k / 2 {
        for idx in 0..p.pow(d as u32) {
            let mut g: Vec<u32> = (0..d).map(|i| idx / p.pow(i as u32) % p).collect();
            g.push(1);
            if poly_rem(p, f, &g).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn first_irreducible(p: u32, k: u32) -> Vec<u32> {
    (0..p.pow(k))
        .map(|idx| {
            let mut f: Vec<u32> = (0..k).map(|i| idx / p.pow(i) % p).collect();
            f.push(1);
            f
        })
        .find(|f| is_irreducible(p, f))
        .expect("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4() {
        let f = FiniteField::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        let x = f.from_coeffs(&[0, 1]);
        assert_eq!(f.mul(x, x), f.from_coeffs(&[1, 1]));
    }

    #[test]
    fn gf9() {
        let f = FiniteField::new(3, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 0, 1]);
        let x = f.from_coeffs(&[0, 1]);
        assert_eq!(f.mul(x, x), 2);
        // x²+1 has no root mod 3
        assert!((0..3).all(|r| (r * r + 1) % 3 != 0));
    }

    #[test]
    fn gf5_is_modular() {
        let f = FiniteField::new(5, 1).unwrap();
        for a in 0..5 {
            for b in 0..5 {
                assert_eq!(f.mul(a, b), a * b % 5);
                assert_eq!(f.add(a, b), (a + b) % 5);
            }
        }
    }

    #[test]
    fn vendored_polynomials_are_irreducible() {
        for &(p, k, _) in POLYNOMIALS {
            FiniteField::new(p, k).unwrap();
        }
        assert!(FiniteField::new(2, 16).is_ok());
        assert!(FiniteField::new(2, 17).is_err());
        assert!(FiniteField::new(4, 1).is_err());
    }

    #[test]
    fn reducible_modulus_rejected() {
        // x² + 1 = (x + 1)² over GF(2)
        assert!(FiniteField::with_modulus(2, vec![1, 0, 1], 4).is_err());
    }

    #[test]
    fn field_axioms_small_fields() {
        for (p, k) in [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (5, 1), (7, 1), (11, 1), (13, 1)] {
            let f = FiniteField::new(p, k).unwrap();
            let q = f.order();
            for a in 0..q {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in 0..q {
                    assert_eq!(f.mul(a, b), f.mul_slow(a, b));
                    for c in 0..q {
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }
}
