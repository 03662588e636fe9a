//! Lie algebras given by structure constants, their representations and
//! invariant bilinear forms.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{require, Error, Result};
use crate::matrix::{is_zero_vec, vec_sub, Matrix};
use crate::report::{CheckReport, Witness};
use crate::scalar::Scalar;

/// Raw, unvalidated structure constants `c[i][j][k]` with
/// `[x_i, x_j] = sum_k c[i][j][k] x_k`, stored densely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    dim: usize,
    data: Vec<Scalar>,
}

impl StructureConstants {
    pub fn zeros(dim: usize) -> Self {
        StructureConstants { dim, data: vec![Scalar::zero(); dim * dim * dim] }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> Scalar) -> Self {
        let mut c = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    c.set(i, j, k, f(i, j, k));
                }
            }
        }
        c
    }

    /// Builds constants from a nested `n x n x n` array.
    pub fn from_nested(entries: Vec<Vec<Vec<Scalar>>>) -> Result<Self> {
        let dim = entries.len();
        let mut c = Self::zeros(dim);
        for (i, plane) in entries.into_iter().enumerate() {
            if plane.len() != dim {
                return Err(Error::DimensionMismatch(format!("c[{i}] has {} rows", plane.len())));
            }
            for (j, row) in plane.into_iter().enumerate() {
                if row.len() != dim {
                    return Err(Error::DimensionMismatch(format!("c[{i}][{j}] has {} entries", row.len())));
                }
                for (k, value) in row.into_iter().enumerate() {
                    c.set(i, j, k, value);
                }
            }
        }
        Ok(c)
    }

    /// Constants from brackets listed for `i != j`; the `(j, i)` entry is
    /// filled in by antisymmetry. Each `(i, j, k)` may appear once, and a
    /// pair may not be listed in both orders.
    pub fn from_brackets(dim: usize, brackets: &[(usize, usize, Scalar, usize)]) -> Result<Self> {
        let mut c = Self::zeros(dim);
        let mut seen = BTreeSet::new();
        for (i, j, coeff, k) in brackets {
            let (i, j, k) = (*i, *j, *k);
            for index in [i, j, k] {
                if index >= dim {
                    return Err(Error::IndexOutOfRange { index, dim });
                }
            }
            if i == j {
                return Err(Error::Malformed(format!("bracket of x{i} with itself")));
            }
            let key = (i.min(j), i.max(j), k);
            if !seen.insert(key) {
                return Err(Error::Malformed(format!("bracket entry ({i}, {j}, {k}) listed twice")));
            }
            c.set(i, j, k, coeff.clone());
            c.set(j, i, k, -coeff);
        }
        Ok(c)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[(i * self.dim + j) * self.dim + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Scalar) {
        let n = self.dim;
        self.data[(i * n + j) * n + k] = value;
    }

    /// Nonzero entries `(i, j, k, c)` with `i < j`, in index order.
    pub fn upper_entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    let v = self.get(i, j, k);
                    if !v.is_zero() {
                        out.push((i, j, k, v.clone()));
                    }
                }
            }
        }
        out
    }
}

/// Checks `c[i][j][k] = -c[j][i][k]`. Witness `(i, j, k)` with the sum.
pub fn check_antisymmetry(c: &StructureConstants) -> CheckReport {
    let n = c.dim();
    for i in 0..n {
        for j in i..n {
            for k in 0..n {
                let sum = c.get(i, j, k) + c.get(j, i, k);
                if !sum.is_zero() {
                    return CheckReport::fail("antisymmetry", Witness::exact(&[i, j, k], vec![sum]));
                }
            }
        }
    }
    CheckReport::pass("antisymmetry")
}

/// Antisymmetry, then the Jacobi identity on every triple. The witness is
/// the first `(i, j, k, l)` with a nonzero component `l` of
/// `[[x_i,x_j],x_k] + [[x_j,x_k],x_i] + [[x_k,x_i],x_j]`.
pub fn check_jacobi_constants(c: &StructureConstants) -> CheckReport {
    let anti = check_antisymmetry(c);
    if !anti.passed {
        return CheckReport::all("jacobi", vec![anti]);
    }
    let sparse = SparseBrackets::new(c);
    let n = c.dim();
    // With antisymmetry in hand the Jacobiator is alternating, so distinct
    // ascending triples suffice.
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let jac = sparse.jacobiator(i, j, k);
                if let Some(l) = jac.iter().position(|v| !v.is_zero()) {
                    return CheckReport::all(
                        "jacobi",
                        vec![
                            anti,
                            CheckReport::fail("jacobi-identity", Witness::exact(&[i, j, k, l], vec![jac[l].clone()])),
                        ],
                    );
                }
            }
        }
    }
    CheckReport::all("jacobi", vec![anti, CheckReport::pass("jacobi-identity")])
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct SparseBrackets {
    dim: usize,
    /// Nonzero `(k, c[i][j][k])` for the pair `i * dim + j`.
    pairs: Vec<Vec<(usize, Scalar)>>,
}

impl SparseBrackets {
    fn new(c: &StructureConstants) -> Self {
        let n = c.dim();
        let mut pairs = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                pairs
                    .push((0..n).filter(|&k| !c.get(i, j, k).is_zero()).map(|k| (k, c.get(i, j, k).clone())).collect());
            }
        }
        SparseBrackets { dim: n, pairs }
    }

    fn basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.pairs[i * self.dim + j]
    }

    /// Adds `coeff * [[x_a, x_b], x_c]` into `out`.
    fn add_double(&self, a: usize, b: usize, c: usize, out: &mut [Scalar]) {
        for (m, cm) in self.basis(a, b) {
            for (l, cl) in self.basis(*m, c) {
                out[*l] += cm * cl;
            }
        }
    }

    fn jacobiator(&self, i: usize, j: usize, k: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        self.add_double(i, j, k, &mut out);
        self.add_double(j, k, i, &mut out);
        self.add_double(k, i, j, &mut out);
        out
    }
}

/// A finite-dimensional Lie algebra over the rationals with named basis.
/// Construction validates antisymmetry and the Jacobi identity.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    names: Vec<String>,
    constants: StructureConstants,
    sparse: SparseBrackets,
}

impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.constants == other.constants
    }
}

impl Eq for LieAlgebra {}

impl LieAlgebra {
    pub fn new(names: Vec<String>, constants: StructureConstants) -> Result<Self> {
        validate_names(&names, constants.dim())?;
        require(check_jacobi_constants(&constants))?;
        Ok(Self::assemble(names, constants))
    }

    /// Basis names `x0, x1, ...`.
    pub fn with_default_names(constants: StructureConstants) -> Result<Self> {
        let names = default_names("x", constants.dim());
        Self::new(names, constants)
    }

    pub fn from_brackets(names: &[&str], brackets: &[(usize, usize, Scalar, usize)]) -> Result<Self> {
        let constants = StructureConstants::from_brackets(names.len(), brackets)?;
        Self::new(names.iter().map(|s| s.to_string()).collect(), constants)
    }

    pub fn abelian(dim: usize) -> Self {
        Self::assemble(default_names("x", dim), StructureConstants::zeros(dim))
    }

    pub(crate) fn assemble(names: Vec<String>, constants: StructureConstants) -> Self {
        let sparse = SparseBrackets::new(&constants);
        LieAlgebra { names, constants, sparse }
    }

    pub fn dim(&self) -> usize {
        self.constants.dim()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn constants(&self) -> &StructureConstants {
        &self.constants
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &Scalar {
        self.constants.get(i, j, k)
    }

    /// Same brackets, new basis names.
    pub fn renamed(&self, names: Vec<String>) -> Result<Self> {
        validate_names(&names, self.dim())?;
        Ok(LieAlgebra { names, ..self.clone() })
    }

    pub fn is_abelian(&self) -> bool {
        self.sparse.pairs.iter().all(Vec::is_empty)
    }

    /// Nonzero components of `[x_i, x_j]`.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        self.sparse.basis(i, j)
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        assert!(x.len() == self.dim() && y.len() == self.dim(), "bracket argument length");
        let mut out = vec![Scalar::zero(); self.dim()];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let coeff = xi * yj;
                for (k, c) in self.basis_bracket(i, j) {
                    out[*k] += &coeff * c;
                }
            }
        }
        out
    }

    pub fn jacobi_report(&self) -> CheckReport {
        check_jacobi_constants(&self.constants)
    }

    /// `(ad_{x_i})[k][j] = c[i][j][k]`.
    pub fn adjoint(&self, i: usize) -> Result<Matrix> {
        self.check_index(i)?;
        Ok(self.ad(i))
    }

    /// `ad*_{x_i} = -(ad_{x_i})^T`.
    pub fn coadjoint(&self, i: usize) -> Result<Matrix> {
        self.check_index(i)?;
        Ok(self.coad(i))
    }

    pub(crate) fn ad(&self, i: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for (k, c) in self.basis_bracket(i, j) {
                m.set(*k, j, c.clone());
            }
        }
        m
    }

    pub(crate) fn coad(&self, i: usize) -> Matrix {
        -&self.ad(i).transpose()
    }

    /// `ad_x` for an arbitrary element.
    pub fn adjoint_of(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for j in 0..n {
                for (k, c) in self.basis_bracket(i, j) {
                    *m.entry_mut(*k, j) += xi * c;
                }
            }
        }
        m
    }

    pub fn coadjoint_of(&self, x: &[Scalar]) -> Matrix {
        -&self.adjoint_of(x).transpose()
    }

    fn check_index(&self, index: usize) -> Result<()> {
        if index < self.dim() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index, dim: self.dim() })
        }
    }

    /// Brackets `s [., .]`.
    pub fn scaled(&self, s: &Scalar) -> LieAlgebra {
        let n = self.dim();
        let c = StructureConstants::from_fn(n, |i, j, k| self.c(i, j, k) * s);
        Self::assemble(self.names.clone(), c)
    }

    /// The same algebra written in the basis given by the columns of `basis`
    /// (old coordinates). Fails if `basis` is singular.
    pub fn rebased(&self, basis: &Matrix, names: Vec<String>) -> Result<LieAlgebra> {
        let n = self.dim();
        basis.expect_shape(n, n, "change of basis")?;
        let inverse = basis.try_inverse()?;
        let columns: Vec<Vec<Scalar>> = (0..n).map(|j| basis.column(j)).collect();
        let mut c = StructureConstants::zeros(n);
        for i in 0..n {
            for j in i + 1..n {
                let image = inverse.apply(&self.bracket(&columns[i], &columns[j]));
                for (k, v) in image.into_iter().enumerate() {
                    c.set(j, i, k, -&v);
                    c.set(i, j, k, v);
                }
            }
        }
        validate_names(&names, n)?;
        Ok(Self::assemble(names, c))
    }

    pub fn adjoint_rep(&self) -> Representation {
        Representation { carrier_dim: self.dim(), actions: (0..self.dim()).map(|i| self.ad(i)).collect() }
    }

    pub fn coadjoint_rep(&self) -> Representation {
        Representation { carrier_dim: self.dim(), actions: (0..self.dim()).map(|i| self.coad(i)).collect() }
    }
}

fn validate_names(names: &[String], dim: usize) -> Result<()> {
    if names.len() != dim {
        return Err(Error::InvalidBasis(format!("{} names for dimension {dim}", names.len())));
    }
    let mut seen = BTreeSet::new();
    for name in names {
        if name.is_empty() {
            return Err(Error::InvalidBasis("empty basis name".into()));
        }
        if !seen.insert(name.as_str()) {
            return Err(Error::InvalidBasis(format!("duplicate basis name {name:?}")));
        }
    }
    Ok(())
}

pub(crate) fn default_names(prefix: &str, dim: usize) -> Vec<String> {
    (0..dim).map(|i| format!("{prefix}{i}")).collect()
}

/// Names of the dual basis.
pub(crate) fn dual_names(names: &[String]) -> Vec<String> {
    names.iter().map(|n| format!("{n}*")).collect()
}

/// `L1 (+) L2` with vanishing cross brackets. Basis names of the second
/// summand get a `'` suffix when they collide with the first.
pub fn direct_sum(first: &LieAlgebra, second: &LieAlgebra) -> LieAlgebra {
    let (n, m) = (first.dim(), second.dim());
    let mut c = StructureConstants::zeros(n + m);
    for (i, j, k, v) in first.constants.upper_entries() {
        c.set(j, i, k, -&v);
        c.set(i, j, k, v);
    }
    for (i, j, k, v) in second.constants.upper_entries() {
        c.set(n + j, n + i, n + k, -&v);
        c.set(n + i, n + j, n + k, v);
    }
    LieAlgebra::assemble(concat_names(first.names(), second.names()), c)
}

pub(crate) fn concat_names(first: &[String], second: &[String]) -> Vec<String> {
    let mut names: Vec<String> = first.to_vec();
    let mut seen: BTreeSet<String> = first.iter().cloned().collect();
    for name in second {
        let mut candidate = name.clone();
        while seen.contains(&candidate) {
            candidate.push('\'');
        }
        seen.insert(candidate.clone());
        names.push(candidate);
    }
    names
}

/// Compares brackets entrywise. Witness is the first differing `(i, j, k)`
/// with the difference `a - b`.
pub fn compare_brackets(name: &str, a: &LieAlgebra, b: &LieAlgebra) -> CheckReport {
    if a.dim() != b.dim() {
        return CheckReport::fail_plain(name);
    }
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let diff = a.c(i, j, k) - b.c(i, j, k);
                if !diff.is_zero() {
                    return CheckReport::fail(name, Witness::exact(&[i, j, k], vec![diff]));
                }
            }
        }
    }
    CheckReport::pass(name)
}

/// Symmetric bilinear form `S(x_i, x_j) = S[i][j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    matrix: Matrix,
}

impl BilinearForm {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch(format!("bilinear form is {}x{}", matrix.rows(), matrix.cols())));
        }
        Ok(BilinearForm { matrix })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let sy = self.matrix.apply(y);
        x.iter().zip(&sy).map(|(a, b)| a * b).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.matrix.is_symmetric()
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.matrix.determinant().is_zero()
    }
}

/// `S([x_i,x_j],x_k) + S(x_j,[x_i,x_k]) = 0` for all triples. Witness
/// `(i, j, k)` with the sum.
pub fn check_invariant_form(algebra: &LieAlgebra, form: &BilinearForm) -> Result<CheckReport> {
    let n = algebra.dim();
    form.matrix().expect_shape(n, n, "bilinear form")?;
    Ok(invariance_report(algebra, form.matrix()))
}

pub(crate) fn invariance_report(algebra: &LieAlgebra, s: &Matrix) -> CheckReport {
    let n = algebra.dim();
    for i in 0..n {
        let ad = algebra.ad(i);
        let residual = &(&ad.transpose() * s) + &(s * &ad);
        if let Some((j, k, v)) = residual.first_nonzero() {
            return CheckReport::fail("invariance", Witness::exact(&[i, j, k], vec![v.clone()]));
        }
    }
    CheckReport::pass("invariance")
}

/// Action matrices `rho(x_i)` of a Lie algebra on a vector space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    carrier_dim: usize,
    actions: Vec<Matrix>,
}

impl Representation {
    /// Validates `rho([x_i,x_j]) = [rho(x_i), rho(x_j)]`.
    pub fn new(algebra: &LieAlgebra, carrier_dim: usize, actions: Vec<Matrix>) -> Result<Self> {
        require(check_representation(algebra, carrier_dim, &actions)?)?;
        Ok(Representation { carrier_dim, actions })
    }

    pub(crate) fn new_unchecked(carrier_dim: usize, actions: Vec<Matrix>) -> Self {
        Representation { carrier_dim, actions }
    }

    pub fn zero(algebra: &LieAlgebra, carrier_dim: usize) -> Self {
        Representation { carrier_dim, actions: vec![Matrix::zeros(carrier_dim, carrier_dim); algebra.dim()] }
    }

    pub fn carrier_dim(&self) -> usize {
        self.carrier_dim
    }

    pub fn base_dim(&self) -> usize {
        self.actions.len()
    }

    pub fn action(&self, i: usize) -> &Matrix {
        &self.actions[i]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.actions
    }

    /// `rho(x)` for an arbitrary element.
    pub fn action_of(&self, x: &[Scalar]) -> Matrix {
        let m = self.carrier_dim;
        let mut out = Matrix::zeros(m, m);
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            out = &out + &self.actions[i].scale(xi);
        }
        out
    }

    pub fn negated(&self) -> Representation {
        Representation { carrier_dim: self.carrier_dim, actions: self.actions.iter().map(|a| -a).collect() }
    }
}

/// Witness `(i, j, row, col)` with the entry of
/// `rho([x_i,x_j]) - [rho(x_i), rho(x_j)]`.
pub fn check_representation(algebra: &LieAlgebra, carrier_dim: usize, actions: &[Matrix]) -> Result<CheckReport> {
    if actions.len() != algebra.dim() {
        return Err(Error::DimensionMismatch(format!(
            "{} action matrices for an algebra of dimension {}",
            actions.len(),
            algebra.dim()
        )));
    }
    for a in actions {
        a.expect_shape(carrier_dim, carrier_dim, "action matrix")?;
    }
    let rep = Representation::new_unchecked(carrier_dim, actions.to_vec());
    let n = algebra.dim();
    for i in 0..n {
        for j in i + 1..n {
            let mut lhs = Matrix::zeros(carrier_dim, carrier_dim);
            for (k, c) in algebra.basis_bracket(i, j) {
                lhs = &lhs + &rep.actions[*k].scale(c);
            }
            let residual = &lhs - &actions[i].commutator(&actions[j]);
            if let Some((r, col, v)) = residual.first_nonzero() {
                return Ok(CheckReport::fail("representation", Witness::exact(&[i, j, r, col], vec![v.clone()])));
            }
        }
    }
    Ok(CheckReport::pass("representation"))
}

/// `T[x_i, x_j]_src = [T x_i, T x_j]_dst` for all `i < j`. Witness `(i, j)`
/// with the residual vector.
pub fn check_homomorphism(name: &str, source: &LieAlgebra, target: &LieAlgebra, map: &Matrix) -> Result<CheckReport> {
    map.expect_shape(target.dim(), source.dim(), "homomorphism")?;
    Ok(homomorphism_report(name, source, target, map))
}

pub(crate) fn homomorphism_report(name: &str, source: &LieAlgebra, target: &LieAlgebra, map: &Matrix) -> CheckReport {
    let n = source.dim();
    let images: Vec<Vec<Scalar>> = (0..n).map(|j| map.column(j)).collect();
    for i in 0..n {
        for j in i + 1..n {
            let mut lhs = vec![Scalar::zero(); target.dim()];
            for (k, c) in source.basis_bracket(i, j) {
                for (slot, m) in lhs.iter_mut().zip(&images[*k]) {
                    *slot += c * m;
                }
            }
            let residual = vec_sub(&lhs, &target.bracket(&images[i], &images[j]));
            if !is_zero_vec(&residual) {
                return CheckReport::fail(name, Witness::exact(&[i, j], residual));
            }
        }
    }
    CheckReport::pass(name)
}
