//! Manin triples of Lie algebras and of Rota-Baxter Lie algebras.
//!
//! The two subalgebras are given by injection matrices whose columns are
//! coordinates in the ambient basis. Their concatenation `J = [g | h]` is the
//! adapted basis in which restricted brackets and operators are read off.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::algebra::{dual_names, invariance_report, BilinearForm, LieAlgebra, StructureConstants};
use crate::bialgebra::{matrix_equality, swap, LieBialgebra, RbLieBialgebra};
use crate::error::{require, Error, Result};
use crate::matrix::Matrix;
use crate::report::{CheckReport, Witness};
use crate::rota_baxter::{quadratic_report, tilde};
use crate::scalar::Scalar;

/// A quadratic Lie algebra split into two isotropic subalgebras.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManinTriple {
    ambient: LieAlgebra,
    form: BilinearForm,
    first: Matrix,
    second: Matrix,
    first_names: Vec<String>,
    second_names: Vec<String>,
    adapted_inverse: Matrix,
}

impl ManinTriple {
    /// Validates with [`check_manin_triple`]. Subalgebra basis vectors that
    /// are ambient basis vectors keep their ambient names.
    pub fn new(ambient: LieAlgebra, form: Matrix, first: Matrix, second: Matrix) -> Result<Self> {
        let first_names = column_names(&ambient, &first, "u");
        let second_names = column_names(&ambient, &second, "v");
        Self::with_names(ambient, form, first, second, first_names, second_names)
    }

    pub fn with_names(
        ambient: LieAlgebra,
        form: Matrix,
        first: Matrix,
        second: Matrix,
        first_names: Vec<String>,
        second_names: Vec<String>,
    ) -> Result<Self> {
        require(check_manin_triple(&ambient, &form, &first, &second)?)?;
        if first_names.len() != first.cols() || second_names.len() != second.cols() {
            return Err(Error::DimensionMismatch("one name per subalgebra basis vector".into()));
        }
        let adapted_inverse = Matrix::hstack(&first, &second).try_inverse()?;
        Ok(ManinTriple {
            ambient,
            form: BilinearForm::new(form)?,
            first,
            second,
            first_names,
            second_names,
            adapted_inverse,
        })
    }

    pub fn ambient(&self) -> &LieAlgebra {
        &self.ambient
    }

    pub fn form(&self) -> &BilinearForm {
        &self.form
    }

    pub fn first_injection(&self) -> &Matrix {
        &self.first
    }

    pub fn second_injection(&self) -> &Matrix {
        &self.second
    }

    /// `[g | h]`.
    pub fn adapted_basis(&self) -> Matrix {
        Matrix::hstack(&self.first, &self.second)
    }

    pub fn first_algebra(&self) -> LieAlgebra {
        let c = restricted_constants(&self.ambient, &self.adapted_inverse, &self.first, 0);
        LieAlgebra::assemble(self.first_names.clone(), c)
    }

    pub fn second_algebra(&self) -> LieAlgebra {
        let c = restricted_constants(&self.ambient, &self.adapted_inverse, &self.second, self.first.cols());
        LieAlgebra::assemble(self.second_names.clone(), c)
    }

    /// `K[i][a] = S(g_i, h_a)`.
    pub fn pairing(&self) -> Matrix {
        &(&self.first.transpose() * self.form.matrix()) * &self.second
    }

    /// A map on the ambient algebra written in the adapted basis.
    pub fn to_adapted(&self, map: &Matrix) -> Matrix {
        &(&self.adapted_inverse * map) * &self.adapted_basis()
    }
}

fn column_names(ambient: &LieAlgebra, injection: &Matrix, prefix: &str) -> Vec<String> {
    (0..injection.cols())
        .map(|j| {
            let col = injection.column(j);
            let nonzero: Vec<usize> = (0..col.len()).filter(|&i| !col[i].is_zero()).collect();
            match nonzero.as_slice() {
                [k] if col[*k].is_one() && *k < ambient.dim() => ambient.names()[*k].clone(),
                _ => format!("{prefix}{j}"),
            }
        })
        .collect()
}

/// Bracket of the columns of `injection`, read from the adapted coordinates
/// starting at `offset`.
fn restricted_constants(
    ambient: &LieAlgebra,
    adapted_inverse: &Matrix,
    injection: &Matrix,
    offset: usize,
) -> StructureConstants {
    let d = injection.cols();
    let cols: Vec<Vec<Scalar>> = (0..d).map(|j| injection.column(j)).collect();
    let mut c = StructureConstants::zeros(d);
    for i in 0..d {
        for j in i + 1..d {
            let coords = adapted_inverse.apply(&ambient.bracket(&cols[i], &cols[j]));
            for k in 0..d {
                let v = coords[offset + k].clone();
                c.set(j, i, k, -&v);
                c.set(i, j, k, v);
            }
        }
    }
    c
}

fn closure_report(
    name: &str,
    ambient: &LieAlgebra,
    adapted_inverse: &Matrix,
    injection: &Matrix,
    outside: core::ops::Range<usize>,
) -> CheckReport {
    let d = injection.cols();
    let cols: Vec<Vec<Scalar>> = (0..d).map(|j| injection.column(j)).collect();
    for i in 0..d {
        for j in i + 1..d {
            let coords = adapted_inverse.apply(&ambient.bracket(&cols[i], &cols[j]));
            for k in outside.clone() {
                if !coords[k].is_zero() {
                    return CheckReport::fail(name, Witness::exact(&[i, j, k], vec![coords[k].clone()]));
                }
            }
        }
    }
    CheckReport::pass(name)
}

fn zero_report(name: &str, m: &Matrix) -> CheckReport {
    match m.first_nonzero() {
        None => CheckReport::pass(name),
        Some((i, j, v)) => CheckReport::fail(name, Witness::exact(&[i, j], vec![v.clone()])),
    }
}

/// Itemized: direct sum, closure of both subalgebras, symmetry,
/// nondegeneracy and invariance of the form, isotropy of both subalgebras.
pub fn check_manin_triple(ambient: &LieAlgebra, form: &Matrix, first: &Matrix, second: &Matrix) -> Result<CheckReport> {
    let n = ambient.dim();
    form.expect_shape(n, n, "bilinear form")?;
    if first.rows() != n || second.rows() != n {
        return Err(Error::DimensionMismatch(format!(
            "injections must have {n} rows, got {} and {}",
            first.rows(),
            second.rows()
        )));
    }
    let mut items = Vec::new();
    let adapted = Matrix::hstack(first, second);
    let adapted_inverse = if adapted.is_square() { adapted.inverse() } else { None };
    match &adapted_inverse {
        Some(inv) => {
            items.push(CheckReport::pass("direct-sum"));
            let split = first.cols();
            items.push(closure_report("first-subalgebra", ambient, inv, first, split..n));
            items.push(closure_report("second-subalgebra", ambient, inv, second, 0..split));
        }
        None => items.push(CheckReport::fail_plain("direct-sum")),
    }
    items.push(if form.is_symmetric() { CheckReport::pass("symmetric") } else { CheckReport::fail_plain("symmetric") });
    items.push(if form.determinant().is_zero() {
        CheckReport::fail_plain("nondegenerate")
    } else {
        CheckReport::pass("nondegenerate")
    });
    items.push(invariance_report(ambient, form));
    items.push(zero_report("first-isotropic", &(&(&first.transpose() * form) * first)));
    items.push(zero_report("second-isotropic", &(&(&second.transpose() * form) * second)));
    Ok(CheckReport::all("manin-triple", items))
}

/// A Manin triple with a quadratic Rota-Baxter operator preserving both
/// subalgebras.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RbManinTriple {
    triple: ManinTriple,
    operator: Matrix,
    weight: Scalar,
}

impl RbManinTriple {
    pub fn new(triple: ManinTriple, operator: Matrix, weight: Scalar) -> Result<Self> {
        require(check_rb_manin_triple(&triple, &operator, &weight)?)?;
        Ok(RbManinTriple { triple, operator, weight })
    }

    pub fn triple(&self) -> &ManinTriple {
        &self.triple
    }

    pub fn operator(&self) -> &Matrix {
        &self.operator
    }

    pub fn weight(&self) -> &Scalar {
        &self.weight
    }

    /// `B = 𝓑|_g` in the basis of `g`.
    pub fn first_operator(&self) -> Matrix {
        let n = self.triple.first.cols();
        self.triple.to_adapted(&self.operator).submatrix(0, 0, n, n)
    }

    /// `C = 𝓑|_h` in the basis of `h`.
    pub fn second_operator(&self) -> Matrix {
        let n = self.triple.first.cols();
        let m = self.triple.second.cols();
        self.triple.to_adapted(&self.operator).submatrix(n, n, m, m)
    }
}

/// Quadratic Rota-Baxter suite on the ambient algebra plus invariance of
/// each subalgebra under the operator.
pub fn check_rb_manin_triple(triple: &ManinTriple, operator: &Matrix, weight: &Scalar) -> Result<CheckReport> {
    let dim = triple.ambient.dim();
    operator.expect_shape(dim, dim, "operator")?;
    let n = triple.first.cols();
    let adapted = triple.to_adapted(operator);
    let items = vec![
        quadratic_report(&triple.ambient, operator, triple.form.matrix(), weight),
        zero_report("preserves-first", &adapted.submatrix(n, 0, dim - n, n)),
        zero_report("preserves-second", &adapted.submatrix(0, n, n, dim - n)),
    ];
    Ok(CheckReport::all("rb-manin-triple", items))
}

/// `𝓑 = -w` times the projection onto `h` along `g`, so `𝓑|_g = 0` and
/// `𝓑|_h = -w id`.
pub fn projection_operator(triple: &ManinTriple, weight: &Scalar) -> Matrix {
    let n = triple.first.cols();
    let m = triple.second.cols();
    let diag = Matrix::block_diag(&Matrix::zeros(n, n), &Matrix::scalar(m, &-weight));
    &(&triple.adapted_basis() * &diag) * &triple.adapted_inverse
}

/// `((g ⋈ g*, 𝓑, S), (g, B), (g*, -w id - B*))` with
/// `S(x + ξ, y + η) = ξ(y) + η(x)`.
pub fn manin_from_rb_bialgebra(rbbi: &RbLieBialgebra) -> Result<RbManinTriple> {
    let n = rbbi.bialgebra().dim();
    let ambient = rbbi.bialgebra().matched_pair().bowtie()?;
    let id = Matrix::identity(n);
    let zero = Matrix::zeros(n, n);
    let triple = ManinTriple::with_names(
        ambient,
        swap(n),
        Matrix::vstack(&id, &zero),
        Matrix::vstack(&zero, &id),
        rbbi.algebra().names().to_vec(),
        rbbi.dual().names().to_vec(),
    )?;
    let operator = Matrix::block_diag(rbbi.operator(), &rbbi.dual_operator());
    RbManinTriple::new(triple, operator, rbbi.weight().clone())
}

/// Identifies `h` with `g*` through `S` and transports its bracket and
/// operator. The transported operator must equal `-w id - B*`.
pub fn rb_bialgebra_from_manin(rbmt: &RbManinTriple) -> Result<RbLieBialgebra> {
    let triple = rbmt.triple();
    let g = triple.first_algebra();
    let h = triple.second_algebra();
    if g.dim() != h.dim() {
        return Err(Error::DegenerateForm);
    }
    let pairing = triple.pairing();
    let pairing_inverse = pairing.inverse().ok_or(Error::DegenerateForm)?;
    let dual = h.rebased(&pairing_inverse, dual_names(g.names()))?;
    let b = rbmt.first_operator();
    let transported = &(&pairing * &rbmt.second_operator()) * &pairing_inverse;
    require(matrix_equality("dual-operator", &transported, &tilde(&b.transpose(), rbmt.weight())))?;
    RbLieBialgebra::new(LieBialgebra::new(g, dual)?, b, rbmt.weight().clone())
}

/// `-w id - 𝓑^S` where `𝓑^S = S^{-1} 𝓑^T S` is the `S`-adjoint.
pub fn form_dual_operator(triple: &ManinTriple, operator: &Matrix, weight: &Scalar) -> Result<Matrix> {
    let s = triple.form.matrix();
    let s_inv = s.inverse().ok_or(Error::DegenerateForm)?;
    let adjoint = &(&s_inv * &operator.transpose()) * s;
    Ok(tilde(&adjoint, weight))
}
