//! `sl(n, C)` as a real Lie algebra with rational structure constants.
//!
//! Basis, in order: `H_m, iH_m` for `m = 1..n-1` with
//! `H_m = E_mm - E_{m+1,m+1}`, then `E_jk, iE_jk` for `j != k` in row-major
//! order. A traceless matrix with diagonal `d` has `H_m` coordinate
//! `d_1 + ... + d_m`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::algebra::{LieAlgebra, StructureConstants};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{int, Scalar};

/// One real basis direction of `sl(n, C)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisElement {
    /// `H_m` (or `iH_m`), zero-based `m < n - 1`.
    Diagonal { m: usize, imaginary: bool },
    /// `E_jk` (or `iE_jk`), zero-based, `j != k`.
    OffDiagonal { j: usize, k: usize, imaginary: bool },
}

impl BasisElement {
    pub fn name(&self) -> String {
        match *self {
            BasisElement::Diagonal { m, imaginary } => {
                format!("{}H{}", if imaginary { "i" } else { "" }, m + 1)
            }
            BasisElement::OffDiagonal { j, k, imaginary } => {
                format!("{}E{}{}", if imaginary { "i" } else { "" }, j + 1, k + 1)
            }
        }
    }

    /// Entries `(row, col, re, im)` of the complex matrix, with `re`/`im` in
    /// `{-1, 0, 1}`.
    pub fn entries(&self) -> Vec<(usize, usize, i64, i64)> {
        let unit = |imaginary: bool, sign: i64| if imaginary { (0, sign) } else { (sign, 0) };
        match *self {
            BasisElement::Diagonal { m, imaginary } => {
                let (a, b) = unit(imaginary, 1);
                vec![(m, m, a, b), (m + 1, m + 1, -a, -b)]
            }
            BasisElement::OffDiagonal { j, k, imaginary } => {
                let (a, b) = unit(imaginary, 1);
                vec![(j, k, a, b)]
            }
        }
    }
}

/// The ordered real basis of `sl(n, C)`.
pub fn basis(n: usize) -> Vec<BasisElement> {
    let mut out = Vec::with_capacity(2 * (n * n - 1));
    for m in 0..n - 1 {
        out.push(BasisElement::Diagonal { m, imaginary: false });
        out.push(BasisElement::Diagonal { m, imaginary: true });
    }
    for j in 0..n {
        for k in 0..n {
            if j != k {
                out.push(BasisElement::OffDiagonal { j, k, imaginary: false });
                out.push(BasisElement::OffDiagonal { j, k, imaginary: true });
            }
        }
    }
    out
}

/// Real coordinates of a traceless complex matrix given entrywise by
/// `entry(row, col) -> (re, im)`. Works for any field-like scalar.
pub fn coordinates<T, F>(n: usize, entry: F) -> Vec<T>
where
    T: Clone + Zero + core::ops::Add<Output = T>,
    F: Fn(usize, usize) -> (T, T),
{
    let mut out = Vec::with_capacity(2 * (n * n - 1));
    let (mut re_sum, mut im_sum) = (T::zero(), T::zero());
    for m in 0..n - 1 {
        let (re, im) = entry(m, m);
        re_sum = re_sum + re;
        im_sum = im_sum + im;
        out.push(re_sum.clone());
        out.push(im_sum.clone());
    }
    for j in 0..n {
        for k in 0..n {
            if j != k {
                let (re, im) = entry(j, k);
                out.push(re);
                out.push(im);
            }
        }
    }
    out
}

/// Complex matrix with rational real and imaginary parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexMatrix {
    pub re: Matrix,
    pub im: Matrix,
}

impl ComplexMatrix {
    pub fn zeros(n: usize) -> Self {
        ComplexMatrix { re: Matrix::zeros(n, n), im: Matrix::zeros(n, n) }
    }

    pub fn from_element(n: usize, element: &BasisElement) -> Self {
        let mut m = Self::zeros(n);
        for (r, c, a, b) in element.entries() {
            m.re.set(r, c, int(a));
            m.im.set(r, c, int(b));
        }
        m
    }

    pub fn mul(&self, other: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix {
            re: &(&self.re * &other.re) - &(&self.im * &other.im),
            im: &(&self.re * &other.im) + &(&self.im * &other.re),
        }
    }

    pub fn sub(&self, other: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix { re: &self.re - &other.re, im: &self.im - &other.im }
    }

    pub fn add(&self, other: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix { re: &self.re + &other.re, im: &self.im + &other.im }
    }

    pub fn scale(&self, s: &Scalar) -> ComplexMatrix {
        ComplexMatrix { re: self.re.scale(s), im: self.im.scale(s) }
    }

    /// `(re tr, im tr)`.
    pub fn trace(&self) -> (Scalar, Scalar) {
        let n = self.re.rows();
        let re = (0..n).map(|i| self.re.get(i, i).clone()).sum();
        let im = (0..n).map(|i| self.im.get(i, i).clone()).sum();
        (re, im)
    }
}

/// Realified `sl(n, C)` with exact basis matrices.
#[derive(Clone, Debug)]
pub struct RealifiedSl {
    n: usize,
    elements: Vec<BasisElement>,
    matrices: Vec<ComplexMatrix>,
}

impl RealifiedSl {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::UnsupportedSize(n));
        }
        let elements = basis(n);
        let matrices = elements.iter().map(|e| ComplexMatrix::from_element(n, e)).collect();
        Ok(RealifiedSl { n, elements, matrices })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[BasisElement] {
        &self.elements
    }

    pub fn names(&self) -> Vec<String> {
        self.elements.iter().map(BasisElement::name).collect()
    }

    pub fn matrix(&self, i: usize) -> &ComplexMatrix {
        &self.matrices[i]
    }

    pub fn coords(&self, x: &ComplexMatrix) -> Vec<Scalar> {
        coordinates(self.n, |r, c| (x.re.get(r, c).clone(), x.im.get(r, c).clone()))
    }

    pub fn element(&self, coords: &[Scalar]) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(self.n);
        for (c, m) in coords.iter().zip(&self.matrices) {
            if !c.is_zero() {
                out = out.add(&m.scale(c));
            }
        }
        out
    }

    /// Structure constants from matrix commutators.
    pub fn algebra(&self) -> LieAlgebra {
        let d = self.dim();
        let mut c = StructureConstants::zeros(d);
        for i in 0..d {
            for j in i + 1..d {
                let a = &self.matrices[i];
                let b = &self.matrices[j];
                let comm = a.mul(b).sub(&b.mul(a));
                for (k, v) in self.coords(&comm).into_iter().enumerate() {
                    c.set(j, i, k, -&v);
                    c.set(i, j, k, v);
                }
            }
        }
        LieAlgebra::new(self.names(), c).expect("matrix commutators satisfy Jacobi")
    }

    /// Gram matrix of `(X, Y) -> Im tr(XY)`.
    pub fn im_trace_form(&self) -> Matrix {
        self.gram(|x, y| x.mul(y).trace().1)
    }

    /// Gram matrix of `(X, Y) -> Re tr(XY)`.
    pub fn re_trace_form(&self) -> Matrix {
        self.gram(|x, y| x.mul(y).trace().0)
    }

    fn gram(&self, f: impl Fn(&ComplexMatrix, &ComplexMatrix) -> Scalar) -> Matrix {
        let d = self.dim();
        Matrix::from_fn(d, d, |i, j| f(&self.matrices[i], &self.matrices[j]))
    }

    /// `su(n)`: `iH_m`, `E_jk - E_kj`, `iE_jk + iE_kj` for `j < k`, as columns.
    pub fn su_injection(&self) -> (Matrix, Vec<String>) {
        let mut cols = Vec::new();
        let mut names = Vec::new();
        for m in 0..self.n - 1 {
            cols.push(self.unit_coords(&[(BasisElement::Diagonal { m, imaginary: true }, 1)]));
            names.push(format!("iH{}", m + 1));
        }
        for j in 0..self.n {
            for k in j + 1..self.n {
                cols.push(self.unit_coords(&[
                    (BasisElement::OffDiagonal { j, k, imaginary: false }, 1),
                    (BasisElement::OffDiagonal { j: k, k: j, imaginary: false }, -1),
                ]));
                names.push(format!("E{0}{1}-E{1}{0}", j + 1, k + 1));
                cols.push(self.unit_coords(&[
                    (BasisElement::OffDiagonal { j, k, imaginary: true }, 1),
                    (BasisElement::OffDiagonal { j: k, k: j, imaginary: true }, 1),
                ]));
                names.push(format!("iE{0}{1}+iE{1}{0}", j + 1, k + 1));
            }
        }
        (Matrix::from_columns(self.dim(), &cols), names)
    }

    /// `sb(n, C)`: `H_m`, `E_jk`, `iE_jk` for `j < k`, as columns.
    pub fn sb_injection(&self) -> (Matrix, Vec<String>) {
        let mut elements = Vec::new();
        for m in 0..self.n - 1 {
            elements.push(BasisElement::Diagonal { m, imaginary: false });
        }
        for j in 0..self.n {
            for k in j + 1..self.n {
                elements.push(BasisElement::OffDiagonal { j, k, imaginary: false });
                elements.push(BasisElement::OffDiagonal { j, k, imaginary: true });
            }
        }
        let cols: Vec<Vec<Scalar>> = elements.iter().map(|e| self.unit_coords(&[(*e, 1)])).collect();
        (Matrix::from_columns(self.dim(), &cols), elements.iter().map(BasisElement::name).collect())
    }

    fn unit_coords(&self, terms: &[(BasisElement, i64)]) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim()];
        for (e, s) in terms {
            let idx = self.elements.iter().position(|x| x == e).expect("basis element");
            v[idx] += int(*s);
        }
        v
    }

    /// The Iwasawa operator written entrywise: `X -> -w A` with
    /// `a_ii = Re x_ii`, `a_jk = x_jk + conj(x_kj)` for `j < k`, zero below.
    pub fn iwasawa_operator_explicit(&self, weight: &Scalar) -> Matrix {
        let n = self.n;
        let cols: Vec<Vec<Scalar>> = self
            .matrices
            .iter()
            .map(|x| {
                let mut a = ComplexMatrix::zeros(n);
                for j in 0..n {
                    a.re.set(j, j, x.re.get(j, j).clone());
                    for k in j + 1..n {
                        a.re.set(j, k, x.re.get(j, k) + x.re.get(k, j));
                        a.im.set(j, k, x.im.get(j, k) - x.im.get(k, j));
                    }
                }
                self.coords(&a.scale(&-weight))
            })
            .collect();
        Matrix::from_columns(self.dim(), &cols)
    }

    /// On `sl (+) sl`: `(X, Y) -> -w(D/2 + U, -D/2 - L)` with `D`, `U`, `L` the
    /// diagonal, strictly upper and strictly lower parts of `X - Y`.
    pub fn standard_operator_explicit(&self, weight: &Scalar) -> Matrix {
        let n = self.n;
        let d = self.dim();
        let half = Scalar::new(1.into(), 2.into());
        let mut cols = Vec::with_capacity(2 * d);
        for block in 0..2 {
            for x in &self.matrices {
                let diff = if block == 0 { x.clone() } else { x.scale(&int(-1)) };
                let mut first = ComplexMatrix::zeros(n);
                let mut second = ComplexMatrix::zeros(n);
                for j in 0..n {
                    for k in 0..n {
                        let (re, im) = (diff.re.get(j, k).clone(), diff.im.get(j, k).clone());
                        if j == k {
                            first.re.set(j, k, &re * &half);
                            first.im.set(j, k, &im * &half);
                            second.re.set(j, k, -(&re * &half));
                            second.im.set(j, k, -(&im * &half));
                        } else if j < k {
                            first.re.set(j, k, re);
                            first.im.set(j, k, im);
                        } else {
                            second.re.set(j, k, -re);
                            second.im.set(j, k, -im);
                        }
                    }
                }
                let mut col = self.coords(&first.scale(&-weight));
                col.extend(self.coords(&second.scale(&-weight)));
                cols.push(col);
            }
        }
        Matrix::from_columns(2 * d, &cols)
    }
}
