use std::collections::HashMap;

use super::field::FiniteField;
use super::perm::Perm;
use crate::error::{Error, Result};

/// Largest projective point set we are willing to build a permutation action on.
pub const MAX_PROJECTIVE_POINTS: usize = 1 << 22;

/// Square matrix over a [`FiniteField`], row-major. Vectors are rows and
/// matrices act on the right, so `v * (A * B) = (v * A) * B`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn identity(n: usize) -> Matrix {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        Matrix { n, data }
    }

    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Matrix> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::domain("matrix rows must form a square"));
        }
        Ok(Matrix {
            n,
            data: rows.concat(),
        })
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: u32) {
        self.data[i * self.n + j] = value;
    }

    pub fn mul(&self, other: &Matrix, f: &FiniteField) -> Matrix {
        let n = self.n;
        let mut data = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let cell = &mut data[i * n + j];
                    *cell = f.add(*cell, f.mul(a, other.get(k, j)));
                }
            }
        }
        Matrix { n, data }
    }

    /// Row vector times matrix.
    pub fn apply(&self, v: &[u32], f: &FiniteField) -> Vec<u32> {
        let n = self.n;
        let mut out = vec![0; n];
        for (i, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = f.add(*o, f.mul(a, self.get(i, j)));
            }
        }
        out
    }

    pub fn determinant(&self, f: &FiniteField) -> u32 {
        let n = self.n;
        let mut m = self.data.clone();
        let mut det = 1;
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| m[r * n + col] != 0) else {
                return 0;
            };
            if pivot != col {
                for j in 0..n {
                    m.swap(pivot * n + j, col * n + j);
                }
                det = f.neg(det);
            }
            let p = m[col * n + col];
            det = f.mul(det, p);
            let p_inv = f.inv(p).expect("pivot is nonzero");
            for r in col + 1..n {
                let factor = f.mul(m[r * n + col], p_inv);
                if factor == 0 {
                    continue;
                }
                for j in col..n {
                    let sub = f.mul(factor, m[col * n + j]);
                    m[r * n + j] = f.sub(m[r * n + j], sub);
                }
            }
        }
        det
    }

    pub fn is_invertible(&self, f: &FiniteField) -> bool {
        self.determinant(f) != 0
    }

    /// Whether the matrix is a nonzero scalar multiple of the identity.
    pub fn is_scalar(&self) -> bool {
        let n = self.n;
        let d = self.data[0];
        d != 0
            && (0..n).all(|i| (0..n).all(|j| self.get(i, j) == if i == j { d } else { 0 }))
    }

    /// Smallest `k <= cap` with `self^k` scalar.
    pub fn projective_order(&self, f: &FiniteField, cap: u64) -> Result<u64> {
        let mut power = self.clone();
        for k in 1..=cap {
            if power.is_scalar() {
                return Ok(k);
            }
            power = power.mul(self, f);
        }
        Err(Error::OrderCapExceeded(cap))
    }
}

/// Scales `v` so its first nonzero coordinate is 1; `None` for the zero vector.
pub fn normalize_point(v: &mut [u32], f: &FiniteField) -> Option<()> {
    let lead = *v.iter().find(|&&x| x != 0)?;
    if lead != 1 {
        let inv = f.inv(lead)?;
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
    }
    Some(())
}

fn encode(v: &[u32], q: u64) -> u64 {
    v.iter().rev().fold(0, |acc, &x| acc * q + x as u64)
}

/// Number of points of the projective space of dimension `d - 1` over GF(q).
pub fn projective_point_count(d: usize, q: u64) -> Option<u64> {
    let qd = q.checked_pow(d as u32)?;
    Some((qd - 1) / (q - 1))
}

/// Normalized representatives of every projective point, in a fixed order.
fn all_points(d: usize, f: &FiniteField) -> Vec<Vec<u32>> {
    let q = f.order();
    let mut out = Vec::new();
    // Points whose first nonzero coordinate (a 1) sits at position `lead`.
    for lead in 0..d {
        let free = d - lead - 1;
        let count = (q as u64).pow(free as u32);
        for idx in 0..count {
            let mut v = vec![0u32; d];
            v[lead] = 1;
            let mut rest = idx;
            for slot in v[lead + 1..].iter_mut() {
                *slot = (rest % q as u64) as u32;
                rest /= q as u64;
            }
            out.push(v);
        }
    }
    out
}

/// The permutation action of `gens` on projective points.
///
/// With `seed = None` the action is on the whole projective space; otherwise
/// on the orbit of the given nonzero vector. Points are numbered in discovery
/// order, so the result is deterministic.
pub fn projective_action(
    f: &FiniteField,
    gens: &[Matrix],
    seed: Option<&[u32]>,
) -> Result<(Vec<Perm>, Vec<Vec<u32>>)> {
    let Some(d) = gens.first().map(Matrix::dimension) else {
        return Err(Error::domain("at least one matrix generator is required"));
    };
    if d < 2 {
        return Err(Error::domain("projective action needs dimension >= 2"));
    }
    for (i, g) in gens.iter().enumerate() {
        if g.dimension() != d {
            return Err(Error::domain(format!("generator {} has dimension {}, expected {d}", i + 1, g.dimension())));
        }
        if !g.is_invertible(f) {
            return Err(Error::domain(format!("generator {} is singular", i + 1)));
        }
    }
    let q = f.order() as u64;
    let points = match seed {
        None => {
            let count = projective_point_count(d, q).unwrap_or(u64::MAX);
            if count > MAX_PROJECTIVE_POINTS as u64 {
                return Err(Error::Unsupported(format!(
                    "projective space with {count} points is too large to act on"
                )));
            }
            all_points(d, f)
        }
        Some(s) => {
            let mut v = s.to_vec();
            if v.len() != d || normalize_point(&mut v, f).is_none() {
                return Err(Error::domain("orbit seed must be a nonzero vector of the right dimension"));
            }
            vec![v]
        }
    };
    let mut index: HashMap<u64, u32> = points.iter().enumerate().map(|(i, v)| (encode(v, q), i as u32)).collect();
    let mut points = points;
    let mut images: Vec<Vec<u32>> = vec![Vec::new(); gens.len()];
    let mut next = 0;
    while next < points.len() {
        for (g, img) in gens.iter().zip(images.iter_mut()) {
            let mut w = g.apply(&points[next], f);
            normalize_point(&mut w, f).expect("invertible matrices map nonzero vectors to nonzero vectors");
            let code = encode(&w, q);
            let target = match index.get(&code) {
                Some(&t) => t,
                None => {
                    if seed.is_none() {
                        return Err(Error::Inconsistent("projective point enumeration is incomplete".into()));
                    }
                    if points.len() >= MAX_PROJECTIVE_POINTS {
                        return Err(Error::Unsupported("projective orbit is too large".into()));
                    }
                    let t = points.len() as u32;
                    index.insert(code, t);
                    points.push(w);
                    t
                }
            };
            img.push(target);
        }
        next += 1;
    }
    let perms = images
        .into_iter()
        .map(Perm::from_images)
        .collect::<Result<Vec<_>>>()?;
    Ok((perms, points))
}
