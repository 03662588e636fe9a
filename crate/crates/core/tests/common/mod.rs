//! Brute-force reference computations on raw nested vectors. Nothing here
//! calls into the library's matrix or check code.

#![allow(dead_code, clippy::needless_range_loop)]

use num_traits::Zero;
use proptest::prelude::*;
use rotabaxter::scalar::ratio;
use rotabaxter::{LieAlgebra, Matrix, Scalar};

pub type Tensor = Vec<Vec<Vec<Scalar>>>;
pub type Mat = Vec<Vec<Scalar>>;

pub fn constants(g: &LieAlgebra) -> Tensor {
    let n = g.dim();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| g.c(i, j, k).clone()).collect()).collect()).collect()
}

pub fn rows(m: &Matrix) -> Mat {
    m.to_rows()
}

pub fn zeros(r: usize, c: usize) -> Mat {
    vec![vec![Scalar::zero(); c]; r]
}

pub fn unit(n: usize, i: usize) -> Vec<Scalar> {
    (0..n).map(|k| if k == i { Scalar::from_integer(1.into()) } else { Scalar::zero() }).collect()
}

pub fn apply(m: &Mat, x: &[Scalar]) -> Vec<Scalar> {
    m.iter().map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum()).collect()
}

pub fn column(m: &Mat, j: usize) -> Vec<Scalar> {
    m.iter().map(|row| row[j].clone()).collect()
}

pub fn transpose(m: &Mat) -> Mat {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len()).map(|j| column(m, j)).collect()
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[Scalar], s: &Scalar) -> Vec<Scalar> {
    a.iter().map(|x| x * s).collect()
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn bracket(c: &Tensor, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let n = c.len();
    let mut out = vec![Scalar::zero(); n];
    for i in 0..n {
        if x[i].is_zero() {
            continue;
        }
        for j in 0..n {
            if y[j].is_zero() {
                continue;
            }
            let coeff = &x[i] * &y[j];
            for k in 0..n {
                out[k] += &coeff * &c[i][j][k];
            }
        }
    }
    out
}

/// `sum_m c[i][j][m] c[m][k][l] + c[j][k][m] c[m][i][l] + c[k][i][m] c[m][j][l]`.
pub fn jacobi_sum(c: &Tensor, i: usize, j: usize, k: usize, l: usize) -> Scalar {
    let mut total = Scalar::zero();
    for m in 0..c.len() {
        for (a, b) in [(&c[i][j][m], &c[m][k][l]), (&c[j][k][m], &c[m][i][l]), (&c[k][i][m], &c[m][j][l])] {
            if !a.is_zero() && !b.is_zero() {
                total += a * b;
            }
        }
    }
    total
}

pub fn antisymmetric(c: &Tensor) -> bool {
    let n = c.len();
    (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| (&c[i][j][k] + &c[j][i][k]).is_zero())))
}

pub fn is_lie(c: &Tensor) -> bool {
    let n = c.len();
    antisymmetric(c)
        && (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| (0..n).all(|l| jacobi_sum(c, i, j, k, l).is_zero()))))
}

/// `[Bx, By] - B([Bx, y] + [x, By] + w [x, y])` on basis vectors.
pub fn rb_residual(c: &Tensor, b: &Mat, w: &Scalar, i: usize, j: usize) -> Vec<Scalar> {
    let n = c.len();
    let (x, y) = (unit(n, i), unit(n, j));
    let (bx, by) = (apply(b, &x), apply(b, &y));
    let inner = add(&add(&bracket(c, &bx, &y), &bracket(c, &x, &by)), &scale(&bracket(c, &x, &y), w));
    sub(&bracket(c, &bx, &by), &apply(b, &inner))
}

pub fn is_rb(c: &Tensor, b: &Mat, w: &Scalar) -> bool {
    let n = c.len();
    (0..n).all(|i| (0..n).all(|j| is_zero(&rb_residual(c, b, w, i, j))))
}

/// Bracket `[Bx, y] + [x, By] + w [x, y]`.
pub fn descendent(c: &Tensor, b: &Mat, w: &Scalar) -> Tensor {
    let n = c.len();
    let mut out = vec![vec![vec![Scalar::zero(); n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (unit(n, i), unit(n, j));
            let v = add(
                &add(&bracket(c, &apply(b, &x), &y), &bracket(c, &x, &apply(b, &y))),
                &scale(&bracket(c, &x, &y), w),
            );
            out[i][j] = v;
        }
    }
    out
}

/// Component `(a, b, c)` of `[r12, r13] + [r13, r23] + [r12, r23]` for
/// `r = sum r[i][j] x_i ⊗ x_j`.
pub fn cybe_component(c: &Tensor, r: &Mat, a: usize, b: usize, cc: usize) -> Scalar {
    let n = c.len();
    let delta = |p: usize, q: usize| p == q;
    let mut total = Scalar::zero();
    for i in 0..n {
        for j in 0..n {
            if r[i][j].is_zero() {
                continue;
            }
            for k in 0..n {
                for l in 0..n {
                    if r[k][l].is_zero() {
                        continue;
                    }
                    let coeff = &r[i][j] * &r[k][l];
                    let mut term = Scalar::zero();
                    if delta(j, b) && delta(l, cc) {
                        term += &c[i][k][a];
                    }
                    if delta(i, a) && delta(l, cc) {
                        term += &c[j][k][b];
                    }
                    if delta(i, a) && delta(k, b) {
                        term += &c[j][l][cc];
                    }
                    total += coeff * term;
                }
            }
        }
    }
    total
}

pub fn satisfies_cybe(c: &Tensor, r: &Mat) -> bool {
    let n = c.len();
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|cc| cybe_component(c, r, a, b, cc).is_zero())))
}

/// `[x_m ⊗ 1 + 1 ⊗ x_m, r + σ(r)] = 0` componentwise.
pub fn symmetric_part_invariant(c: &Tensor, r: &Mat) -> bool {
    let n = c.len();
    let s: Mat = (0..n).map(|i| (0..n).map(|j| &r[i][j] + &r[j][i]).collect()).collect();
    (0..n).all(|m| {
        (0..n).all(|a| {
            (0..n).all(|b| {
                let v: Scalar = (0..n).map(|p| &c[m][p][a] * &s[p][b] + &c[m][p][b] * &s[a][p]).sum();
                v.is_zero()
            })
        })
    })
}

/// Cocycle condition `Δ[x_i, x_j] = x_i · Δ(x_j) - x_j · Δ(x_i)` with
/// `Δ(x_k)[a][b] = d[a][b][k]`.
pub fn cocycle_holds(c: &Tensor, d: &Tensor) -> bool {
    let n = c.len();
    let delta = |k: usize| -> Mat { (0..n).map(|a| (0..n).map(|b| d[a][b][k].clone()).collect()).collect() };
    let act = |i: usize, t: &Mat| -> Mat {
        (0..n)
            .map(|a| (0..n).map(|b| (0..n).map(|p| &c[i][p][a] * &t[p][b] + &c[i][p][b] * &t[a][p]).sum()).collect())
            .collect()
    };
    for i in 0..n {
        for j in 0..n {
            let di = delta(i);
            let dj = delta(j);
            let (ai, aj) = (act(i, &dj), act(j, &di));
            for a in 0..n {
                for b in 0..n {
                    let lhs: Scalar = (0..n).map(|k| &c[i][j][k] * &d[a][b][k]).sum();
                    if lhs != &ai[a][b] - &aj[a][b] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Bicrossed bracket on `g (+) h` built from action matrices:
/// `[x, a] = rho(x) a - mu(a) x`.
pub fn bowtie(cg: &Tensor, ch: &Tensor, rho: &[Mat], mu: &[Mat]) -> Tensor {
    let (n, m) = (cg.len(), ch.len());
    let d = n + m;
    let mut out = vec![vec![vec![Scalar::zero(); d]; d]; d];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out[i][j][k] = cg[i][j][k].clone();
            }
        }
    }
    for a in 0..m {
        for b in 0..m {
            for k in 0..m {
                out[n + a][n + b][n + k] = ch[a][b][k].clone();
            }
        }
    }
    for i in 0..n {
        for a in 0..m {
            for k in 0..m {
                out[i][n + a][n + k] = rho[i][k][a].clone();
                out[n + a][i][n + k] = -&rho[i][k][a];
            }
            for k in 0..n {
                out[i][n + a][k] = -&mu[a][k][i];
                out[n + a][i][k] = mu[a][k][i].clone();
            }
        }
    }
    out
}

pub fn block_diag(a: &Mat, b: &Mat) -> Mat {
    let (n, m) = (a.len(), b.len());
    let mut out = zeros(n + m, n + m);
    for i in 0..n {
        for j in 0..n {
            out[i][j] = a[i][j].clone();
        }
    }
    for i in 0..m {
        for j in 0..m {
            out[n + i][n + j] = b[i][j].clone();
        }
    }
    out
}

/// `(ad_i)[k][j] = c[i][j][k]`.
pub fn ad(c: &Tensor, i: usize) -> Mat {
    let n = c.len();
    (0..n).map(|k| (0..n).map(|j| c[i][j][k].clone()).collect()).collect()
}

/// `ad*_i = -ad_i^T`.
pub fn coad(c: &Tensor, i: usize) -> Mat {
    let n = c.len();
    (0..n).map(|k| (0..n).map(|j| -&c[i][k][j]).collect()).collect()
}

pub fn mul(a: &Mat, b: &Mat) -> Mat {
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    a.iter().map(|row| (0..cols).map(|j| (0..inner).map(|k| &row[k] * &b[k][j]).sum()).collect()).collect()
}

pub fn small_rational() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| ratio(p, q))
}

pub fn nonzero_rational() -> impl Strategy<Value = Scalar> {
    small_rational().prop_filter("nonzero", |s| !s.is_zero())
}
