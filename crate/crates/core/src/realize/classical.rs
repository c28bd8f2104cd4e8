//! Matrix generators for the quasisimple classical groups SL, Sp and Ω (odd
//! dimension). Every generating set is checked by Schreier–Sims against the
//! order formula before it is used.

use super::field::FiniteField;
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// An F_p-basis of GF(q): `1, ω, ω², ..` for the primitive element ω.
fn prime_basis(f: &FiniteField) -> Vec<u32> {
    let w = f.primitive();
    (0..f.degree() as u64).map(|i| f.pow(w, i)).collect()
}

fn elementary(n: usize, i: usize, j: usize, a: u32) -> Matrix {
    let mut m = Matrix::identity(n);
    m.set(i, j, a);
    m
}

/// Root elements `x_12(β)` for β in an F_p-basis, `x_21(1)`, and for `n > 2`
/// a monomial `n`-cycle of determinant 1.
pub fn special_linear_generators(n: usize, f: &FiniteField) -> Result<Vec<Matrix>> {
    if n < 2 {
        return Err(Error::domain("SL(n, q) needs n >= 2"));
    }
    let mut gens: Vec<Matrix> = prime_basis(f).into_iter().map(|b| elementary(n, 0, 1, b)).collect();
    gens.push(elementary(n, 1, 0, 1));
    if n > 2 {
        let mut w = Matrix::identity(n);
        for i in 0..n {
            w.set(i, i, 0);
            w.set(i, (i + 1) % n, 1);
        }
        // an n-cycle has sign (-1)^(n-1); fix the determinant on one entry
        if n.is_multiple_of(2) {
            w.set(n - 1, 0, f.neg(1));
        }
        gens.push(w);
    }
    Ok(gens)
}

/// Gram matrix of the symplectic form on `e_1..e_m, f_1..f_m`.
fn symplectic_gram(m: usize, f: &FiniteField) -> Matrix {
    let mut j = Matrix::identity(2 * m);
    for i in 0..2 * m {
        j.set(i, i, 0);
    }
    for i in 0..m {
        j.set(i, m + i, 1);
        j.set(m + i, i, f.neg(1));
    }
    j
}

fn bilinear(gram: &Matrix, x: &[u32], y: &[u32], f: &FiniteField) -> u32 {
    let gy: Vec<u32> = (0..x.len())
        .map(|i| (0..y.len()).fold(0, |acc, j| f.add(acc, f.mul(gram.get(i, j), y[j]))))
        .collect();
    x.iter().zip(&gy).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
}

/// Matrix of `x ↦ x + B(x, u) a + B(x, v) b` for fixed vectors (row action).
fn rank_two_update(gram: &Matrix, terms: &[(&[u32], Vec<u32>)], f: &FiniteField) -> Matrix {
    let n = gram.dimension();
    let mut m = Matrix::identity(n);
    for row in 0..n {
        let mut e = vec![0u32; n];
        e[row] = 1;
        for (u, a) in terms {
            let c = bilinear(gram, &e, u, f);
            if c == 0 {
                continue;
            }
            for (col, &ac) in a.iter().enumerate() {
                m.set(row, col, f.add(m.get(row, col), f.mul(c, ac)));
            }
        }
    }
    m
}

fn unit(n: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn scaled(v: &[u32], a: u32, f: &FiniteField) -> Vec<u32> {
    v.iter().map(|&x| f.mul(x, a)).collect()
}

/// Symplectic transvections `x ↦ x + a B(x, v) v` on a hyperbolic basis.
pub fn symplectic_generators(dim: usize, f: &FiniteField) -> Result<Vec<Matrix>> {
    if dim < 2 || dim % 2 == 1 {
        return Err(Error::domain("Sp(n, q) needs even n >= 2"));
    }
    let m = dim / 2;
    let gram = symplectic_gram(m, f);
    let transvection = |v: &[u32], a: u32| rank_two_update(&gram, &[(v, scaled(v, a, f))], f);
    let mut gens: Vec<Matrix> = prime_basis(f).into_iter().map(|b| transvection(&unit(dim, 0), b)).collect();
    gens.push(transvection(&unit(dim, m), 1));
    for i in 0..m.saturating_sub(1) {
        let mut v = unit(dim, i);
        v[m + i + 1] = 1;
        gens.push(transvection(&v, 1));
        let mut v = unit(dim, i);
        v[i + 1] = 1;
        gens.push(transvection(&v, 1));
    }
    Ok(gens)
}

/// Data for Ω(2m+1, q), q odd: basis `e_1..e_m, f_1..f_m, w` with quadratic
/// form `Q(x) = Σ x_{e_i} x_{f_i} + x_w²`.
pub struct OddOrthogonal {
    pub generators: Vec<Matrix>,
    /// A singular vector; the group acts transitively on singular points.
    pub singular_point: Vec<u32>,
}

/// Eichler transformations `x ↦ x + B(x,u)v − B(x,v)u − Q(v)B(x,u)u` for
/// singular `u ∈ {e_1, f_1}` and basis vectors `v ⊥ u`.
pub fn odd_orthogonal_generators(dim: usize, f: &FiniteField) -> Result<OddOrthogonal> {
    if dim < 3 || dim.is_multiple_of(2) {
        return Err(Error::domain("Ω(n, q) here needs odd n >= 3"));
    }
    if f.characteristic() == 2 {
        return Err(Error::domain("odd-dimensional orthogonal groups need odd q"));
    }
    let m = (dim - 1) / 2;
    let w = dim - 1;
    let mut gram = Matrix::identity(dim);
    for i in 0..dim {
        gram.set(i, i, 0);
    }
    for i in 0..m {
        gram.set(i, m + i, 1);
        gram.set(m + i, i, 1);
    }
    gram.set(w, w, f.from_int(2));
    let quad = |v: &[u32]| {
        let hyper = (0..m).fold(0, |acc, i| f.add(acc, f.mul(v[i], v[m + i])));
        f.add(hyper, f.mul(v[w], v[w]))
    };

    let eichler = |u: &[u32], v: &[u32]| {
        let qv = quad(v);
        let a = v.iter().zip(u).map(|(&x, &y)| f.sub(x, f.mul(qv, y))).collect();
        rank_two_update(&gram, &[(u, a), (v, scaled(u, f.neg(1), f))], f)
    };

    let mut gens = Vec::new();
    let basis = prime_basis(f);
    for u in [unit(dim, 0), unit(dim, m)] {
        for j in 0..dim {
            let v = unit(dim, j);
            if bilinear(&gram, &u, &v, f) != 0 || u == v {
                continue;
            }
            for &b in &basis {
                gens.push(eichler(&u, &scaled(&v, b, f)));
            }
        }
    }
    Ok(OddOrthogonal {
        generators: gens,
        singular_point: unit(dim, 0),
    })
}
