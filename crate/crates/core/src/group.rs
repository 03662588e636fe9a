//! Weight-1 Rota-Baxter operators on `SL(n, C)` in double precision.
//!
//! An operator satisfies `𝔅(g1) 𝔅(g2) = 𝔅(g1 𝔅(g1) g2 𝔅(g1)^{-1})`. The
//! Iwasawa operator sends `g = k b` (`k` unitary, `b` upper triangular with
//! positive diagonal) to `b^{-1}`. Residuals are Frobenius norms.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use num_traits::Float;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::realify::BasisElement;
use crate::report::{CheckReport, Witness};
use crate::scalar::to_f64;

pub type ComplexMatrix = DMatrix<Complex64>;

/// Pivots below this magnitude count as singular.
const SINGULAR: f64 = 1e-13;

/// A map `G -> G` given by an explicit factorization routine.
pub trait GroupOperator {
    fn name(&self) -> String;
    fn apply(&self, g: &ComplexMatrix) -> Result<ComplexMatrix>;
}

/// `𝔅(g) = id`.
#[derive(Clone, Copy, Debug, Default)]
pub struct IdentityOperator;

impl GroupOperator for IdentityOperator {
    fn name(&self) -> String {
        "identity".into()
    }

    fn apply(&self, g: &ComplexMatrix) -> Result<ComplexMatrix> {
        Ok(ComplexMatrix::identity(g.nrows(), g.ncols()))
    }
}

/// `𝔅(kb) = b^{-1}`.
#[derive(Clone, Copy, Debug)]
pub struct IwasawaOperator {
    n: usize,
}

/// `iwasawa_operator(n)`.
pub fn iwasawa_operator(n: usize) -> Result<IwasawaOperator> {
    if n < 2 {
        return Err(Error::UnsupportedSize(n));
    }
    Ok(IwasawaOperator { n })
}

impl IwasawaOperator {
    pub fn n(&self) -> usize {
        self.n
    }
}

impl GroupOperator for IwasawaOperator {
    fn name(&self) -> String {
        format!("iwasawa({})", self.n)
    }

    fn apply(&self, g: &ComplexMatrix) -> Result<ComplexMatrix> {
        let (_, b) = iwasawa_decompose(g)?;
        invert(&b)
    }
}

/// Control that uses `(b^T)^{-1}` in place of `b^{-1}`.
#[derive(Clone, Copy, Debug)]
pub struct TransposedIwasawa;

impl GroupOperator for TransposedIwasawa {
    fn name(&self) -> String {
        "iwasawa-transposed".into()
    }

    fn apply(&self, g: &ComplexMatrix) -> Result<ComplexMatrix> {
        let (_, b) = iwasawa_decompose(g)?;
        invert(&b.transpose())
    }
}

/// `g = k b` with `k` unitary and `b` upper triangular with positive real
/// diagonal. For `det g = 1` the factors lie in `SU(n)` and `SB(n, C)`.
pub fn iwasawa_decompose(g: &ComplexMatrix) -> Result<(ComplexMatrix, ComplexMatrix)> {
    if !g.is_square() {
        return Err(Error::DimensionMismatch(format!("{}x{} is not square", g.nrows(), g.ncols())));
    }
    let qr = g.clone().qr();
    let (mut q, mut r) = (qr.q(), qr.r());
    for i in 0..g.nrows() {
        let pivot = r[(i, i)];
        let size = pivot.norm();
        if size < SINGULAR {
            return Err(Error::Singular);
        }
        let phase = pivot / size;
        q.column_mut(i).scale_mut_complex(phase);
        r.row_mut(i).scale_mut_complex(phase.conj());
    }
    Ok((q, r))
}

trait ScaleComplex {
    fn scale_mut_complex(&mut self, s: Complex64);
}

impl<R: nalgebra::Dim, C: nalgebra::Dim, S: nalgebra::StorageMut<Complex64, R, C>> ScaleComplex
    for nalgebra::Matrix<Complex64, R, C, S>
{
    fn scale_mut_complex(&mut self, s: Complex64) {
        for v in self.iter_mut() {
            *v *= s;
        }
    }
}

pub fn invert(g: &ComplexMatrix) -> Result<ComplexMatrix> {
    g.clone().try_inverse().ok_or(Error::Singular)
}

fn frobenius(m: &ComplexMatrix) -> f64 {
    Float::sqrt(m.iter().map(|z| z.norm_sqr()).sum::<f64>())
}

fn distance(a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
    frobenius(&(a - b))
}

/// `g ⋆ h = g 𝔅(g) h 𝔅(g)^{-1}`.
pub fn descendent_product(op: &dyn GroupOperator, g: &ComplexMatrix, h: &ComplexMatrix) -> Result<ComplexMatrix> {
    if g.shape() != h.shape() {
        return Err(Error::DimensionMismatch("group elements of different size".into()));
    }
    let bg = op.apply(g)?;
    Ok(g * &bg * h * invert(&bg)?)
}

/// `(g 𝔅(g), 𝔅(g))`, with `g = g_+ g_-^{-1}`.
pub fn group_factorize(op: &dyn GroupOperator, g: &ComplexMatrix) -> Result<(ComplexMatrix, ComplexMatrix)> {
    let bg = op.apply(g)?;
    Ok((g * &bg, bg))
}

/// `Φ(s, g) = (s 𝔅(s) g, 𝔅(s) g)`.
pub fn phi_map(op: &dyn GroupOperator, s: &ComplexMatrix, g: &ComplexMatrix) -> Result<(ComplexMatrix, ComplexMatrix)> {
    if s.shape() != g.shape() {
        return Err(Error::DimensionMismatch("group elements of different size".into()));
    }
    let bs = op.apply(s)?;
    Ok((s * &bs * g, bs * g))
}

/// `g ▷ s = g s g^{-1}`.
pub fn left_action(g: &ComplexMatrix, s: &ComplexMatrix) -> Result<ComplexMatrix> {
    Ok(g * s * invert(g)?)
}

/// `g ◁ s = 𝔅(g s g^{-1})^{-1} g 𝔅(s)`.
pub fn right_action(op: &dyn GroupOperator, g: &ComplexMatrix, s: &ComplexMatrix) -> Result<ComplexMatrix> {
    let conj = left_action(g, s)?;
    Ok(invert(&op.apply(&conj)?)? * g * op.apply(s)?)
}

/// `(s, g) ·_D (t, h) = (s ⋆ (g ▷ t), (g ◁ t) h)`, the bicrossed product of
/// `G_𝔅` and `G`.
pub fn double_product(
    op: &dyn GroupOperator,
    (s, g): (&ComplexMatrix, &ComplexMatrix),
    (t, h): (&ComplexMatrix, &ComplexMatrix),
) -> Result<(ComplexMatrix, ComplexMatrix)> {
    let first = descendent_product(op, s, &left_action(g, t)?)?;
    Ok((first, right_action(op, g, t)? * h))
}

/// Tracks the largest residual and where it occurred.
struct Worst {
    name: &'static str,
    tol: f64,
    max: f64,
    at: Option<(usize, f64)>,
}

impl Worst {
    fn new(name: &'static str, tol: f64) -> Self {
        Worst { name, tol, max: 0.0, at: None }
    }

    fn record(&mut self, index: usize, residual: f64) {
        // NaN counts as a failure.
        if residual.is_nan() || residual > self.max {
            self.max = residual;
        }
        if (residual.is_nan() || residual > self.tol) && self.at.is_none() {
            self.at = Some((index, residual));
        }
    }

    fn report(self) -> CheckReport {
        let witness = self.at.map(|(i, r)| Witness::numeric(&[i], r));
        CheckReport::from_witness(self.name, witness).with_max_residual(self.max)
    }
}

/// `𝔅(g1) 𝔅(g2) = 𝔅(g1 Ad_{𝔅(g1)} g2)` on every pair.
pub fn check_rb_group(
    op: &dyn GroupOperator,
    samples: &[(ComplexMatrix, ComplexMatrix)],
    tol: f64,
) -> Result<CheckReport> {
    let mut worst = Worst::new("rota-baxter-group", tol);
    for (idx, (g1, g2)) in samples.iter().enumerate() {
        let b1 = op.apply(g1)?;
        let lhs = &b1 * op.apply(g2)?;
        let rhs = op.apply(&descendent_product(op, g1, g2)?)?;
        worst.record(idx, distance(&lhs, &rhs));
    }
    Ok(worst.report())
}

/// Associativity of `⋆` and `𝔅(g ⋆ h) = 𝔅(g) 𝔅(h)` on every triple.
pub fn check_descendent_group(
    op: &dyn GroupOperator,
    samples: &[(ComplexMatrix, ComplexMatrix, ComplexMatrix)],
    tol: f64,
) -> Result<CheckReport> {
    let mut assoc = Worst::new("associativity", tol);
    let mut homo = Worst::new("homomorphism", tol);
    for (idx, (a, b, c)) in samples.iter().enumerate() {
        let left = descendent_product(op, &descendent_product(op, a, b)?, c)?;
        let right = descendent_product(op, a, &descendent_product(op, b, c)?)?;
        assoc.record(idx, distance(&left, &right));
        let prod = op.apply(&descendent_product(op, a, b)?)?;
        homo.record(idx, distance(&prod, &(op.apply(a)? * op.apply(b)?)));
    }
    Ok(CheckReport::all("descendent-group", vec![assoc.report(), homo.report()]))
}

/// `g = g_+ g_-^{-1}` for every sample, and for the Iwasawa operator that
/// `g_+ 𝔅(g)^{-1} = k` is unitary and `g_- = b^{-1}` is upper triangular.
pub fn check_factorization(op: &dyn GroupOperator, samples: &[ComplexMatrix], tol: f64) -> Result<CheckReport> {
    let mut rebuild = Worst::new("reconstruction", tol);
    for (idx, g) in samples.iter().enumerate() {
        let (plus, minus) = group_factorize(op, g)?;
        rebuild.record(idx, distance(&(plus * invert(&minus)?), g));
    }
    Ok(CheckReport::all("factorization", vec![rebuild.report()]))
}

/// Unitarity of `k` and triangularity, positive diagonal and unit
/// determinant of `b` in `g = k b`.
pub fn check_iwasawa_factors(samples: &[ComplexMatrix], tol: f64) -> Result<CheckReport> {
    let mut unitary = Worst::new("unitary", tol);
    let mut triangular = Worst::new("triangular", tol);
    let mut special = Worst::new("special", tol);
    for (idx, g) in samples.iter().enumerate() {
        let (k, b) = iwasawa_decompose(g)?;
        let n = g.nrows();
        unitary.record(idx, distance(&(k.adjoint() * &k), &ComplexMatrix::identity(n, n)));
        let mut off = 0.0;
        for i in 0..n {
            off += Float::abs(b[(i, i)].im) + Float::max(-b[(i, i)].re, 0.0);
            for j in 0..i {
                off += b[(i, j)].norm();
            }
        }
        triangular.record(idx, off);
        special.record(idx, (k.determinant() - Complex64::new(1.0, 0.0)).norm());
    }
    Ok(CheckReport::all("iwasawa-factors", vec![unitary.report(), triangular.report(), special.report()]))
}

/// `Φ((s, g) ·_D (t, h)) = Φ(s, g) Φ(t, h)` componentwise.
pub fn check_phi_homomorphism(op: &dyn GroupOperator, samples: &[[ComplexMatrix; 4]], tol: f64) -> Result<CheckReport> {
    let mut worst = Worst::new("phi-homomorphism", tol);
    for (idx, [s, g, t, h]) in samples.iter().enumerate() {
        let (p, q) = double_product(op, (s, g), (t, h))?;
        let (lhs1, lhs2) = phi_map(op, &p, &q)?;
        let (a1, a2) = phi_map(op, s, g)?;
        let (b1, b2) = phi_map(op, t, h)?;
        worst.record(idx, distance(&lhs1, &(a1 * b1)).max(distance(&lhs2, &(a2 * b2))));
    }
    Ok(worst.report())
}

/// Matched-pair equations for `(G, G_𝔅; ▷, ◁)` on triples `(a, b, c)`:
/// `a ▷ (b ⋆ c) = (a ▷ b) ⋆ ((a ◁ b) ▷ c)` and
/// `(a b) ◁ c = (a ◁ (b ▷ c)) (b ◁ c)`.
pub fn matched_pair_actions_check(
    op: &dyn GroupOperator,
    samples: &[(ComplexMatrix, ComplexMatrix, ComplexMatrix)],
    tol: f64,
) -> Result<CheckReport> {
    let mut first = Worst::new("matched-pair-left", tol);
    let mut second = Worst::new("matched-pair-right", tol);
    for (idx, (a, b, c)) in samples.iter().enumerate() {
        let lhs = left_action(a, &descendent_product(op, b, c)?)?;
        let rhs = descendent_product(op, &left_action(a, b)?, &left_action(&right_action(op, a, b)?, c)?)?;
        first.record(idx, distance(&lhs, &rhs));

        let lhs = right_action(op, &(a * b), c)?;
        let rhs = right_action(op, a, &left_action(b, c)?)? * right_action(op, b, c)?;
        second.record(idx, distance(&lhs, &rhs));
    }
    Ok(CheckReport::all("matched-pair-actions", vec![first.report(), second.report()]))
}

/// Round-off of a central difference is about `ε / h`. Steps whose
/// round-off exceeds this floor are rejected.
pub const ROUNDOFF_FLOOR: f64 = 1e-8;

/// Matrix of `𝔅_{*e}` in `basis`: column `j` holds the coordinates of
/// `(𝔅(exp(h X_j)) - 𝔅(exp(-h X_j))) / 2h`, found by real least squares.
pub fn differentiate_operator(op: &dyn GroupOperator, basis: &[ComplexMatrix], h: f64) -> Result<DMatrix<f64>> {
    if h.is_nan() || h <= 0.0 || f64::EPSILON / h > ROUNDOFF_FLOOR {
        return Err(Error::StepTooSmall(h));
    }
    let d = basis.len();
    let Some(first) = basis.first() else {
        return Ok(DMatrix::zeros(0, 0));
    };
    let n = first.nrows();
    let realify =
        |m: &ComplexMatrix| -> DVector<f64> { DVector::from_iterator(2 * n * n, m.iter().flat_map(|z| [z.re, z.im])) };
    let design = DMatrix::from_columns(&basis.iter().map(realify).collect::<Vec<_>>());
    let solver = design.clone().svd(true, true);
    let mut out = DMatrix::zeros(d, d);
    for (j, x) in basis.iter().enumerate() {
        let plus = op.apply(&expm(&(x * Complex64::new(h, 0.0))))?;
        let minus = op.apply(&expm(&(x * Complex64::new(-h, 0.0))))?;
        let derivative = (plus - minus) / Complex64::new(2.0 * h, 0.0);
        let coords = solver.solve(&realify(&derivative), 1e-12).map_err(|e| Error::Malformed(e.into()))?;
        out.set_column(j, &coords);
    }
    Ok(out)
}

/// Matrix exponential by scaling and squaring with a Taylor series.
pub fn expm(x: &ComplexMatrix) -> ComplexMatrix {
    let n = x.nrows();
    let norm = frobenius(x);
    let squarings = if norm > 0.5 { Float::ceil(Float::log2(norm / 0.5)) as i32 } else { 0 };
    let scaled = x / Complex64::new(Float::powi(2.0, squarings), 0.0);
    let mut term = ComplexMatrix::identity(n, n);
    let mut sum = term.clone();
    for k in 1..=18 {
        term = &term * &scaled / Complex64::new(k as f64, 0.0);
        sum += &term;
    }
    for _ in 0..squarings {
        sum = &sum * &sum;
    }
    sum
}

/// Exact operator as floats.
pub fn to_float(m: &Matrix) -> DMatrix<f64> {
    DMatrix::from_fn(m.rows(), m.cols(), |i, j| to_f64(m.get(i, j)))
}

/// Compares [`differentiate_operator`] at `h` and `h / 2` with `expected`.
/// Passes when the residual at `h` is within `10 h^2 + 1e-8` and halving
/// the step reduces it at least 3.5 times, unless both residuals are
/// already at round-off level.
pub fn check_differential(
    op: &dyn GroupOperator,
    basis: &[ComplexMatrix],
    expected: &DMatrix<f64>,
    h: f64,
) -> Result<CheckReport> {
    let coarse = (differentiate_operator(op, basis, h)? - expected).norm();
    let fine = (differentiate_operator(op, basis, h / 2.0)? - expected).norm();
    let bound = 10.0 * h * h + 1e-8;
    let matches = if coarse <= bound {
        CheckReport::pass("matches-algebraic")
    } else {
        CheckReport::fail("matches-algebraic", Witness::numeric(&[], coarse))
    }
    .with_max_residual(coarse);
    let ratio = coarse / fine;
    let converges = if (coarse < 1e-10 && fine < 1e-10) || ratio >= 3.5 {
        CheckReport::pass("second-order")
    } else {
        CheckReport::fail("second-order", Witness::numeric(&[], ratio))
    };
    Ok(CheckReport::all("differential", vec![matches, converges]).with_max_residual(coarse))
}

/// The realified `sl(n, C)` basis as complex matrices.
pub fn sl_basis(n: usize) -> Vec<ComplexMatrix> {
    crate::realify::basis(n).iter().map(|e| basis_matrix(n, e)).collect()
}

fn basis_matrix(n: usize, element: &BasisElement) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(n, n);
    for (r, c, a, b) in element.entries() {
        m[(r, c)] = Complex64::new(a as f64, b as f64);
    }
    m
}

/// Largest singular value over smallest.
pub fn condition_number(g: &ComplexMatrix) -> f64 {
    let sv = g.clone().singular_values();
    let max = sv.iter().cloned().fold(0.0, f64::max);
    let min = sv.iter().cloned().fold(f64::INFINITY, f64::min);
    max / min
}

/// Seeded sampler of `SL(n, C)`: entries uniform in `[-1, 1] + i[-1, 1]`,
/// scaled by a principal `n`-th root of the determinant, rejected when the
/// condition number exceeds `max_condition`.
#[derive(Clone, Debug)]
pub struct SlSampler {
    n: usize,
    seed: u64,
    max_condition: f64,
    rng: ChaCha8Rng,
}

pub const DEFAULT_MAX_CONDITION: f64 = 1e3;

impl SlSampler {
    pub fn new(n: usize, seed: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::UnsupportedSize(n));
        }
        Ok(SlSampler { n, seed, max_condition: DEFAULT_MAX_CONDITION, rng: ChaCha8Rng::seed_from_u64(seed) })
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn sample(&mut self) -> ComplexMatrix {
        loop {
            let n = self.n;
            let rng = &mut self.rng;
            let g = ComplexMatrix::from_fn(n, n, |_, _| {
                Complex64::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0))
            });
            let det = g.determinant();
            if det.norm() < SINGULAR {
                continue;
            }
            let g = g / det.powf(1.0 / n as f64);
            if condition_number(&g) <= self.max_condition {
                return g;
            }
        }
    }

    pub fn samples(&mut self, count: usize) -> Vec<ComplexMatrix> {
        (0..count).map(|_| self.sample()).collect()
    }

    pub fn pairs(&mut self, count: usize) -> Vec<(ComplexMatrix, ComplexMatrix)> {
        (0..count).map(|_| (self.sample(), self.sample())).collect()
    }

    pub fn triples(&mut self, count: usize) -> Vec<(ComplexMatrix, ComplexMatrix, ComplexMatrix)> {
        (0..count).map(|_| (self.sample(), self.sample(), self.sample())).collect()
    }

    pub fn quadruples(&mut self, count: usize) -> Vec<[ComplexMatrix; 4]> {
        (0..count).map(|_| [self.sample(), self.sample(), self.sample(), self.sample()]).collect()
    }
}
