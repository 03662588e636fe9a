//! Rota-Baxter operators of arbitrary weight, descendent algebras, quadratic
//! structures and representations of Rota-Baxter Lie algebras.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::algebra::{
    concat_names, default_names, homomorphism_report, invariance_report, BilinearForm, LieAlgebra, Representation,
    StructureConstants,
};
use crate::error::{require, Error, Result};
use crate::matrix::{is_zero_vec, vec_add, vec_scale, vec_sub, Matrix};
use crate::report::{CheckReport, Witness};
use crate::scalar::Scalar;

/// A Lie algebra with a Rota-Baxter operator `B` of weight `weight`:
/// `[Bx, By] = B([Bx, y] + [x, By] + weight [x, y])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotaBaxter {
    algebra: LieAlgebra,
    operator: Matrix,
    weight: Scalar,
}

impl RotaBaxter {
    pub fn new(algebra: LieAlgebra, operator: Matrix, weight: Scalar) -> Result<Self> {
        require(check_rota_baxter(&algebra, &operator, &weight)?)?;
        Ok(RotaBaxter { algebra, operator, weight })
    }

    pub(crate) fn new_unchecked(algebra: LieAlgebra, operator: Matrix, weight: Scalar) -> Self {
        RotaBaxter { algebra, operator, weight }
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn operator(&self) -> &Matrix {
        &self.operator
    }

    pub fn weight(&self) -> &Scalar {
        &self.weight
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `-weight id - B`, again Rota-Baxter of the same weight.
    pub fn tilde(&self) -> RotaBaxter {
        RotaBaxter::new_unchecked(self.algebra.clone(), tilde(&self.operator, &self.weight), self.weight.clone())
    }

    /// The descendent algebra `g_B`.
    pub fn descendent(&self) -> Result<LieAlgebra> {
        descendent_of_valid(self)
    }

    /// The same operator on the descendent algebra.
    pub fn on_descendent(&self) -> Result<RotaBaxter> {
        RotaBaxter::new(self.descendent()?, self.operator.clone(), self.weight.clone())
    }

    pub(crate) fn nonzero_weight(&self) -> Result<()> {
        if self.weight.is_zero() {
            Err(Error::ZeroWeight)
        } else {
            Ok(())
        }
    }
}

/// Witness `(i, j)` with the residual vector
/// `[Bx_i, Bx_j] - B([Bx_i, x_j] + [x_i, Bx_j] + weight [x_i, x_j])`.
pub fn check_rota_baxter(algebra: &LieAlgebra, operator: &Matrix, weight: &Scalar) -> Result<CheckReport> {
    let n = algebra.dim();
    operator.expect_shape(n, n, "operator")?;
    Ok(rota_baxter_report(algebra, operator, weight))
}

pub(crate) fn rota_baxter_report(algebra: &LieAlgebra, operator: &Matrix, weight: &Scalar) -> CheckReport {
    let n = algebra.dim();
    let images: Vec<Vec<Scalar>> = (0..n).map(|j| operator.column(j)).collect();
    let constants = descendent_constants(algebra, operator, weight);
    for i in 0..n {
        for j in i + 1..n {
            let lhs = algebra.bracket(&images[i], &images[j]);
            let inner: Vec<Scalar> = (0..n).map(|k| constants.get(i, j, k).clone()).collect();
            let residual = vec_sub(&lhs, &operator.apply(&inner));
            if !is_zero_vec(&residual) {
                return CheckReport::fail("rota-baxter", Witness::exact(&[i, j], residual));
            }
        }
    }
    CheckReport::pass("rota-baxter")
}

/// Structure constants of `[x, y]_B = [Bx, y] + [x, By] + weight [x, y]`,
/// without any validation.
pub fn descendent_constants(algebra: &LieAlgebra, operator: &Matrix, weight: &Scalar) -> StructureConstants {
    let n = algebra.dim();
    let images: Vec<Vec<Scalar>> = (0..n).map(|j| operator.column(j)).collect();
    let mut c = StructureConstants::zeros(n);
    for i in 0..n {
        for j in i + 1..n {
            let mut v = vec_add(
                &algebra.bracket(&images[i], &crate::matrix::unit(n, j)),
                &algebra.bracket(&crate::matrix::unit(n, i), &images[j]),
            );
            for (k, ck) in algebra.basis_bracket(i, j) {
                v[*k] += ck * weight;
            }
            for (k, value) in v.into_iter().enumerate() {
                c.set(j, i, k, -&value);
                c.set(i, j, k, value);
            }
        }
    }
    c
}

/// The descendent Lie algebra `g_B`. Rejects operators that are not
/// Rota-Baxter of the given weight.
pub fn descendent(algebra: &LieAlgebra, operator: &Matrix, weight: &Scalar) -> Result<LieAlgebra> {
    let rb = RotaBaxter::new(algebra.clone(), operator.clone(), weight.clone())?;
    descendent_of_valid(&rb)
}

fn descendent_of_valid(rb: &RotaBaxter) -> Result<LieAlgebra> {
    let constants = descendent_constants(&rb.algebra, &rb.operator, &rb.weight);
    let result = LieAlgebra::new(rb.algebra.names().to_vec(), constants)?;
    require(homomorphism_report("operator-homomorphism", &result, &rb.algebra, &rb.operator))?;
    Ok(result)
}

/// `k`-fold descendent, re-checking the Rota-Baxter identity at each level.
pub fn iterated_descendent(
    algebra: &LieAlgebra,
    operator: &Matrix,
    weight: &Scalar,
    levels: usize,
) -> Result<LieAlgebra> {
    let mut current = algebra.clone();
    for _ in 0..levels {
        current = descendent(&current, operator, weight)?;
    }
    Ok(current)
}

/// `-weight id - B`.
pub fn tilde(operator: &Matrix, weight: &Scalar) -> Matrix {
    &Matrix::scalar(operator.rows(), &-weight) - operator
}

/// Itemized check that `(g, B, S)` is quadratic Rota-Baxter: `S` symmetric,
/// nondegenerate and invariant, and `S(x, By) + S(Bx, y) + weight S(x, y) = 0`
/// both as a bilinear identity and as `B + B^S = -weight id` with `B^S` the
/// `S`-adjoint. The two formulations must agree.
pub fn check_quadratic(
    algebra: &LieAlgebra,
    operator: &Matrix,
    form: &BilinearForm,
    weight: &Scalar,
) -> Result<CheckReport> {
    let n = algebra.dim();
    operator.expect_shape(n, n, "operator")?;
    form.matrix().expect_shape(n, n, "bilinear form")?;
    Ok(quadratic_report(algebra, operator, form.matrix(), weight))
}

pub(crate) fn quadratic_report(algebra: &LieAlgebra, operator: &Matrix, s: &Matrix, weight: &Scalar) -> CheckReport {
    let n = algebra.dim();
    let symmetric = match first_asymmetry(s) {
        None => CheckReport::pass("symmetric"),
        Some((i, j, v)) => CheckReport::fail("symmetric", Witness::exact(&[i, j], vec![v])),
    };
    let inverse = s.inverse();
    let nondegenerate =
        if inverse.is_some() { CheckReport::pass("nondegenerate") } else { CheckReport::fail_plain("nondegenerate") };
    let invariant = invariance_report(algebra, s);

    let bilinear = &(&(s * operator) + &(&operator.transpose() * s)) + &s.scale(weight);
    let compat_bilinear = match bilinear.first_nonzero() {
        None => CheckReport::pass("compatibility"),
        Some((i, j, v)) => CheckReport::fail("compatibility", Witness::exact(&[i, j], vec![v.clone()])),
    };
    let mut items = vec![symmetric, nondegenerate, invariant, compat_bilinear];
    if let Some(s_inv) = inverse {
        let adjoint = &s_inv * &(&operator.transpose() * s);
        let residual = &(operator + &adjoint) + &Matrix::scalar(n, weight);
        let compat_adjoint = match residual.first_nonzero() {
            None => CheckReport::pass("compatibility-adjoint"),
            Some((i, j, v)) => CheckReport::fail("compatibility-adjoint", Witness::exact(&[i, j], vec![v.clone()])),
        };
        let agree = compat_adjoint.passed == items[3].passed;
        items.push(compat_adjoint);
        items.push(if agree {
            CheckReport::pass("formulations-agree")
        } else {
            CheckReport::fail_plain("formulations-agree")
        });
    }
    CheckReport::all("quadratic", items)
}

fn first_asymmetry(s: &Matrix) -> Option<(usize, usize, Scalar)> {
    if !s.is_square() {
        return Some((0, 0, Scalar::zero()));
    }
    let n = s.rows();
    for i in 0..n {
        for j in i + 1..n {
            let d = s.get(i, j) - s.get(j, i);
            if !d.is_zero() {
                return Some((i, j, d));
            }
        }
    }
    None
}

/// A Rota-Baxter Lie algebra with a compatible nondegenerate symmetric
/// invariant form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticRotaBaxter {
    rb: RotaBaxter,
    form: BilinearForm,
}

impl QuadraticRotaBaxter {
    pub fn new(rb: RotaBaxter, form: BilinearForm) -> Result<Self> {
        require(check_quadratic(rb.algebra(), rb.operator(), &form, rb.weight())?)?;
        Ok(QuadraticRotaBaxter { rb, form })
    }

    pub fn from_parts(algebra: LieAlgebra, operator: Matrix, form: Matrix, weight: Scalar) -> Result<Self> {
        let rb = RotaBaxter::new(algebra, operator, weight)?;
        Self::new(rb, BilinearForm::new(form)?)
    }

    pub fn rota_baxter(&self) -> &RotaBaxter {
        &self.rb
    }

    pub fn algebra(&self) -> &LieAlgebra {
        self.rb.algebra()
    }

    pub fn operator(&self) -> &Matrix {
        self.rb.operator()
    }

    pub fn weight(&self) -> &Scalar {
        self.rb.weight()
    }

    pub fn form(&self) -> &BilinearForm {
        &self.form
    }
}

/// A representation `rho` of `(g, B)` on `W` with an operator `T` on `W`:
/// `rho(Bx) T = T(rho(Bx) + rho(x) T + weight rho(x))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RbRepresentation {
    operator: Matrix,
    rep: Representation,
}

impl RbRepresentation {
    pub fn new(rb: &RotaBaxter, operator: Matrix, rep: Representation) -> Result<Self> {
        require(check_rb_representation(rb, &operator, &rep)?)?;
        Ok(RbRepresentation { operator, rep })
    }

    pub fn operator(&self) -> &Matrix {
        &self.operator
    }

    pub fn representation(&self) -> &Representation {
        &self.rep
    }

    pub fn carrier_dim(&self) -> usize {
        self.rep.carrier_dim()
    }
}

/// Witness `(i, row, col)` with the entry of
/// `rho(Bx_i) T - T(rho(Bx_i) + rho(x_i) T + weight rho(x_i))`.
pub fn check_rb_representation(rb: &RotaBaxter, operator: &Matrix, rep: &Representation) -> Result<CheckReport> {
    let m = rep.carrier_dim();
    if rep.base_dim() != rb.dim() {
        return Err(Error::DimensionMismatch(format!(
            "representation of a {}-dimensional algebra used with dimension {}",
            rep.base_dim(),
            rb.dim()
        )));
    }
    operator.expect_shape(m, m, "carrier operator")?;
    for i in 0..rb.dim() {
        let rho_bx = rep.action_of(&rb.operator.column(i));
        let rho_x = rep.action(i);
        let inner = &(&rho_bx + &(rho_x * operator)) + &rho_x.scale(&rb.weight);
        let residual = &(&rho_bx * operator) - &(operator * &inner);
        if let Some((r, c, v)) = residual.first_nonzero() {
            return Ok(CheckReport::fail("rb-representation", Witness::exact(&[i, r, c], vec![v.clone()])));
        }
    }
    Ok(CheckReport::pass("rb-representation"))
}

/// `(g, B, ad)`.
pub fn adjoint_rep(rb: &RotaBaxter) -> RbRepresentation {
    RbRepresentation { operator: rb.operator.clone(), rep: rb.algebra.adjoint_rep() }
}

/// `(g*, -weight id - B*, ad*)`.
pub fn coadjoint_rep(rb: &RotaBaxter) -> Result<RbRepresentation> {
    let operator = tilde(&rb.operator.transpose(), &rb.weight);
    RbRepresentation::new(rb, operator, rb.algebra.coadjoint_rep())
}

/// The matrix of `S#: g -> g*`, `<S# x, y> = S(x, y)`. Verifies that it
/// intertwines `ad` with `ad*` and `B` with `-weight id - B*`.
pub fn sharp_isomorphism(qrb: &QuadraticRotaBaxter) -> Result<Matrix> {
    let s = qrb.form.matrix().clone();
    let g = qrb.algebra();
    for i in 0..g.dim() {
        let residual = &(&s * &g.ad(i)) - &(&g.coad(i) * &s);
        if let Some((r, c, v)) = residual.first_nonzero() {
            return Err(Error::failed(CheckReport::fail(
                "sharp-intertwines-adjoint",
                Witness::exact(&[i, r, c], vec![v.clone()]),
            )));
        }
    }
    let dual_op = tilde(&qrb.operator().transpose(), qrb.weight());
    let residual = &(&s * qrb.operator()) - &(&dual_op * &s);
    if let Some((r, c, v)) = residual.first_nonzero() {
        return Err(Error::failed(CheckReport::fail(
            "sharp-intertwines-operator",
            Witness::exact(&[r, c], vec![v.clone()]),
        )));
    }
    Ok(s)
}

/// `g ⋉ W` with `W` abelian, `[x, w] = rho(x) w`, and operator `B (+) T`.
/// Carrier basis names are `w0, w1, ...`.
pub fn semidirect_product(rb: &RotaBaxter, rep: &RbRepresentation) -> Result<RotaBaxter> {
    require(check_rb_representation(rb, &rep.operator, &rep.rep)?)?;
    let (n, m) = (rb.dim(), rep.carrier_dim());
    let mut c = StructureConstants::zeros(n + m);
    for (i, j, k, v) in rb.algebra.constants().upper_entries() {
        c.set(j, i, k, -&v);
        c.set(i, j, k, v);
    }
    for i in 0..n {
        let action = rep.rep.action(i);
        for a in 0..m {
            for b in 0..m {
                let v = action.get(b, a);
                if !v.is_zero() {
                    c.set(i, n + a, n + b, v.clone());
                    c.set(n + a, i, n + b, -v);
                }
            }
        }
    }
    let names = concat_names(rb.algebra.names(), &default_names("w", m));
    let algebra = LieAlgebra::new(names, c)?;
    let operator = Matrix::block_diag(&rb.operator, &rep.operator);
    RotaBaxter::new(algebra, operator, rb.weight.clone())
}

/// `x = x_plus - x_minus` with `x_plus = (Bx + weight x) / weight` and
/// `x_minus = Bx / weight`.
pub fn factorize_element(rb: &RotaBaxter, x: &[Scalar]) -> Result<(Vec<Scalar>, Vec<Scalar>)> {
    rb.nonzero_weight()?;
    if x.len() != rb.dim() {
        return Err(Error::DimensionMismatch(format!("vector of length {} in dimension {}", x.len(), rb.dim())));
    }
    let inv = rb.weight.recip();
    let bx = rb.operator.apply(x);
    let plus = vec_scale(&vec_add(&bx, &vec_scale(x, &rb.weight)), &inv);
    let minus = vec_scale(&bx, &inv);
    Ok((plus, minus))
}

/// Modified Yang-Baxter identity for `R = id + 2B`:
/// `[Rx, Ry] - R([Rx, y] + [x, Ry]) + [x, y] = 0`. Witness `(i, j)` with the
/// residual vector.
pub fn modified_ybe_check(algebra: &LieAlgebra, operator: &Matrix) -> Result<CheckReport> {
    let n = algebra.dim();
    operator.expect_shape(n, n, "operator")?;
    let r = &Matrix::identity(n) + &operator.scale(&Scalar::from_integer(2.into()));
    let images: Vec<Vec<Scalar>> = (0..n).map(|j| r.column(j)).collect();
    for i in 0..n {
        for j in i + 1..n {
            let (ei, ej) = (crate::matrix::unit(n, i), crate::matrix::unit(n, j));
            let inner = vec_add(&algebra.bracket(&images[i], &ej), &algebra.bracket(&ei, &images[j]));
            let residual = vec_add(
                &vec_sub(&algebra.bracket(&images[i], &images[j]), &r.apply(&inner)),
                &algebra.bracket(&ei, &ej),
            );
            if !is_zero_vec(&residual) {
                return Ok(CheckReport::fail("modified-ybe", Witness::exact(&[i, j], residual)));
            }
        }
    }
    Ok(CheckReport::pass("modified-ybe"))
}
