//! r-matrices, the classical Yang-Baxter equation, Lie bialgebras and their
//! Rota-Baxter refinements, Drinfeld doubles.
//!
//! An r-matrix `r = sum r[i][j] x_i ⊗ x_j` induces `r_+: g* -> g` with
//! `r_+(x^i) = sum_j r[i][j] x_j` (matrix `r^T`), `r_- = -r_+^*` (matrix `-r`)
//! and `I = r_+ - r_-` (matrix `r + r^T`).

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::algebra::{compare_brackets, direct_sum, dual_names, homomorphism_report, LieAlgebra, StructureConstants};
use crate::error::{require, Error, Result};
use crate::matched::{check_matched_pair, MatchedPair};
use crate::matrix::Matrix;
use crate::report::{CheckReport, Witness};
use crate::rota_baxter::{iterated_descendent, rota_baxter_report, tilde, QuadraticRotaBaxter, RotaBaxter};
use crate::scalar::Scalar;

/// An element of `g ⊗ g` over a fixed Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrix {
    algebra: LieAlgebra,
    components: Matrix,
}

impl RMatrix {
    pub fn new(algebra: LieAlgebra, components: Matrix) -> Result<Self> {
        let n = algebra.dim();
        components.expect_shape(n, n, "r-matrix")?;
        Ok(RMatrix { algebra, components })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn components(&self) -> &Matrix {
        &self.components
    }

    pub fn r_plus(&self) -> Matrix {
        self.components.transpose()
    }

    pub fn r_minus(&self) -> Matrix {
        -&self.components
    }

    /// `I = r_+ - r_-`.
    pub fn symmetric_part(&self) -> Matrix {
        &self.components + &self.components.transpose()
    }

    /// `det I != 0`.
    pub fn is_factorizable(&self) -> bool {
        !self.symmetric_part().determinant().is_zero()
    }

    /// CYBE and ad-invariance of the symmetric part.
    pub fn quasitriangular_report(&self) -> CheckReport {
        CheckReport::all("quasitriangular", vec![check_cybe(self), check_ad_invariance(self)])
    }
}

/// The tensor `[r12,r13] + [r13,r23] + [r12,r23]` in components,
/// `T[a][b][c] = [u_b,u_c]_a + [v_a,u_c]_b + [v_a,v_b]_c` with `u` the columns
/// and `v` the rows of `r`. Witness is the first nonzero `(a, b, c)`.
pub fn cybe_tensor(r: &RMatrix) -> Vec<Scalar> {
    let g = &r.algebra;
    let n = g.dim();
    let cols: Vec<Vec<Scalar>> = (0..n).map(|j| r.components.column(j)).collect();
    let rows: Vec<Vec<Scalar>> = (0..n).map(|i| r.components.row(i).to_vec()).collect();
    let mut t = vec![Scalar::zero(); n * n * n];
    for b in 0..n {
        for c in 0..n {
            let uu = g.bracket(&cols[b], &cols[c]);
            for (a, v) in uu.into_iter().enumerate() {
                t[(a * n + b) * n + c] += v;
            }
        }
    }
    for a in 0..n {
        for c in 0..n {
            let vu = g.bracket(&rows[a], &cols[c]);
            for (b, v) in vu.into_iter().enumerate() {
                t[(a * n + b) * n + c] += v;
            }
        }
        for b in 0..n {
            let vv = g.bracket(&rows[a], &rows[b]);
            for (c, v) in vv.into_iter().enumerate() {
                t[(a * n + b) * n + c] += v;
            }
        }
    }
    t
}

pub fn check_cybe(r: &RMatrix) -> CheckReport {
    let n = r.algebra.dim();
    let t = cybe_tensor(r);
    match t.iter().position(|v| !v.is_zero()) {
        None => CheckReport::pass("cybe"),
        Some(p) => CheckReport::fail("cybe", Witness::exact(&[p / (n * n), (p / n) % n, p % n], vec![t[p].clone()])),
    }
}

/// Ad-invariance of `r + σ(r)` computed twice: as the tensor
/// `(ad_m ⊗ 1 + 1 ⊗ ad_m)(r + σ(r))` from structure constants, and as the
/// operator identity `I ∘ ad*_m = ad_m ∘ I`. The second residual is the
/// negative of the first; both must vanish together. Witness `(m, p, q)`.
pub fn check_ad_invariance(r: &RMatrix) -> CheckReport {
    let g = &r.algebra;
    let n = g.dim();
    let sym = r.symmetric_part();
    let mut tensor_witness = None;
    let mut operator_witness = None;
    let mut consistent = true;
    for m in 0..n {
        // Tensor path: sum_i c[m][i][p] M[i][q] + sum_j M[p][j] c[m][j][q].
        let mut tensor = Matrix::zeros(n, n);
        for i in 0..n {
            for (p, c) in g.basis_bracket(m, i) {
                for q in 0..n {
                    let v = sym.get(i, q);
                    if !v.is_zero() {
                        *tensor.entry_mut(*p, q) += c * v;
                    }
                }
            }
        }
        for j in 0..n {
            for (q, c) in g.basis_bracket(m, j) {
                for p in 0..n {
                    let v = sym.get(p, j);
                    if !v.is_zero() {
                        *tensor.entry_mut(p, *q) += v * c;
                    }
                }
            }
        }
        let operator = &(&sym * &g.coad(m)) - &(&g.ad(m) * &sym);
        consistent &= operator == -&tensor;
        if tensor_witness.is_none() {
            tensor_witness = tensor.first_nonzero().map(|(p, q, v)| Witness::exact(&[m, p, q], vec![v.clone()]));
        }
        if operator_witness.is_none() {
            operator_witness = operator.first_nonzero().map(|(p, q, v)| Witness::exact(&[m, p, q], vec![v.clone()]));
        }
    }
    let agree = consistent && tensor_witness.is_none() == operator_witness.is_none();
    CheckReport::all(
        "ad-invariance",
        vec![
            CheckReport::from_witness("ad-invariance-tensor", tensor_witness),
            CheckReport::from_witness("ad-invariance-operator", operator_witness),
            if agree { CheckReport::pass("forms-agree") } else { CheckReport::fail_plain("forms-agree") },
        ],
    )
}

/// `[a, b]_r = ad*_{r_+ a} b - ad*_{r_- b} a` on `g*`. Requires CYBE and
/// ad-invariance; verifies that `r_+` and `r_-` are homomorphisms to `g`.
pub fn dual_bracket_r(r: &RMatrix) -> Result<LieAlgebra> {
    require(r.quasitriangular_report())?;
    let g = &r.algebra;
    let n = g.dim();
    let (plus, minus) = (r.r_plus(), r.r_minus());
    let mut c = StructureConstants::zeros(n);
    for a in 0..n {
        let coad_plus = g.coadjoint_of(&plus.column(a));
        for b in a + 1..n {
            let coad_minus = g.coadjoint_of(&minus.column(b));
            for k in 0..n {
                let v = coad_plus.get(k, b) - coad_minus.get(k, a);
                c.set(b, a, k, -&v);
                c.set(a, b, k, v);
            }
        }
    }
    let dual = LieAlgebra::new(dual_names(g.names()), c)?;
    require(CheckReport::all(
        "r-homomorphisms",
        vec![
            homomorphism_report("r-plus-homomorphism", &dual, g, &plus),
            homomorphism_report("r-minus-homomorphism", &dual, g, &minus),
        ],
    ))?;
    Ok(dual)
}

fn nonzero(weight: &Scalar) -> Result<()> {
    if weight.is_zero() {
        Err(Error::ZeroWeight)
    } else {
        Ok(())
    }
}

fn inverse_of_i(r: &RMatrix) -> Result<Matrix> {
    r.symmetric_part().inverse().ok_or(Error::NotFactorizable)
}

/// `B = weight r_- I^{-1}` with the form `S_I(x, y) = <I^{-1} x, y>`.
pub fn quadratic_rb_from_factorizable(r: &RMatrix, weight: &Scalar) -> Result<QuadraticRotaBaxter> {
    nonzero(weight)?;
    require(r.quasitriangular_report())?;
    let i_inv = inverse_of_i(r)?;
    let operator = (&r.r_minus() * &i_inv).scale(weight);
    QuadraticRotaBaxter::from_parts(r.algebra.clone(), operator, i_inv.transpose(), weight.clone())
}

/// `r_+ = (B + weight id) I_S / weight` with `<I_S^{-1} x, y> = S(x, y)`.
/// Verifies `r_- = B I_S / weight`, `I_S = r_+ - r_-` and that the result is
/// a factorizable quasitriangular r-matrix.
pub fn factorizable_from_quadratic_rb(qrb: &QuadraticRotaBaxter) -> Result<RMatrix> {
    let weight = qrb.weight();
    nonzero(weight)?;
    let n = qrb.algebra().dim();
    let i_s = qrb.form().matrix().transpose().try_inverse()?;
    let inv_w = weight.recip();
    let shifted = qrb.operator() + &Matrix::scalar(n, weight);
    let plus = (&shifted * &i_s).scale(&inv_w);
    let r = RMatrix::new(qrb.algebra().clone(), plus.transpose())?;
    let minus_expected = (qrb.operator() * &i_s).scale(&inv_w);
    let identities = CheckReport::all(
        "converse-identities",
        vec![
            matrix_equality("r-minus", &r.r_minus(), &minus_expected),
            matrix_equality("i-decomposition", &r.symmetric_part(), &i_s),
            r.quasitriangular_report(),
            if r.is_factorizable() {
                CheckReport::pass("factorizable")
            } else {
                CheckReport::fail_plain("factorizable")
            },
        ],
    );
    require(identities)?;
    Ok(r)
}

pub(crate) fn matrix_equality(name: &str, a: &Matrix, b: &Matrix) -> CheckReport {
    if a.shape() != b.shape() {
        return CheckReport::fail_plain(name);
    }
    match (a - b).first_nonzero() {
        None => CheckReport::pass(name),
        Some((i, j, v)) => CheckReport::fail(name, Witness::exact(&[i, j], vec![v.clone()])),
    }
}

/// A Lie algebra `g` with a bracket on `g*` satisfying the cocycle
/// condition, checked as the matched pair `(g, g*; ad*, ad*)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieBialgebra {
    algebra: LieAlgebra,
    dual: LieAlgebra,
}

impl LieBialgebra {
    pub fn new(algebra: LieAlgebra, dual: LieAlgebra) -> Result<Self> {
        require(check_lie_bialgebra(&algebra, &dual)?)?;
        Ok(LieBialgebra { algebra, dual })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn dual(&self) -> &LieAlgebra {
        &self.dual
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `(g, g*; ad*, ad*)`.
    pub fn matched_pair(&self) -> MatchedPair {
        MatchedPair::new(
            self.algebra.clone(),
            self.dual.clone(),
            self.algebra.coadjoint_rep(),
            self.dual.coadjoint_rep(),
        )
        .expect("validated bialgebra is a matched pair")
    }

    /// The bialgebra `(g*, g)`.
    pub fn flipped(&self) -> LieBialgebra {
        LieBialgebra { algebra: self.dual.clone(), dual: self.algebra.clone() }
    }
}

pub fn check_lie_bialgebra(algebra: &LieAlgebra, dual: &LieAlgebra) -> Result<CheckReport> {
    if algebra.dim() != dual.dim() {
        return Err(Error::DimensionMismatch(format!(
            "algebra has dimension {}, dual has {}",
            algebra.dim(),
            dual.dim()
        )));
    }
    let report = check_matched_pair(algebra, dual, &algebra.coadjoint_rep(), &dual.coadjoint_rep())?;
    Ok(CheckReport { name: "lie-bialgebra".into(), ..report })
}

/// For factorizable `r` and nonzero weight: `(g, g*_r)` and
/// `(g_B, g*_I)` are Lie bialgebras with
/// `[a, b]_I = w I^{-1}[I a / w, I b / w]`, and `I / w` is an isomorphism
/// `g*_r -> g_B` and `g*_I -> g`.
pub fn bialgebra_iso_i(r: &RMatrix, weight: &Scalar) -> Result<CheckReport> {
    nonzero(weight)?;
    let g = &r.algebra;
    let dual_r = dual_bracket_r(r)?;
    let qrb = quadratic_rb_from_factorizable(r, weight)?;
    let descendent = qrb.rota_baxter().descendent()?;
    let scaled_i = r.symmetric_part().scale(&weight.recip());
    let dual_i = g.rebased(&scaled_i, dual_names(g.names()))?;
    let items = vec![
        CheckReport { name: "bialgebra-g-r".into(), ..check_lie_bialgebra(g, &dual_r)? },
        CheckReport { name: "bialgebra-descendent-i".into(), ..check_lie_bialgebra(&descendent, &dual_i)? },
        homomorphism_report("scaled-i-dual-r-to-descendent", &dual_r, &descendent, &scaled_i),
        homomorphism_report("scaled-i-dual-i-to-g", &dual_i, g, &scaled_i),
    ];
    Ok(CheckReport::all("bialgebra-iso-i", items))
}

/// A Lie bialgebra with `B` Rota-Baxter on `g` and `-w id - B*` Rota-Baxter
/// on `g*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RbLieBialgebra {
    bialgebra: LieBialgebra,
    operator: Matrix,
    weight: Scalar,
}

impl RbLieBialgebra {
    pub fn new(bialgebra: LieBialgebra, operator: Matrix, weight: Scalar) -> Result<Self> {
        require(check_rb_bialgebra(&bialgebra, &operator, &weight)?)?;
        Ok(RbLieBialgebra { bialgebra, operator, weight })
    }

    pub fn bialgebra(&self) -> &LieBialgebra {
        &self.bialgebra
    }

    pub fn algebra(&self) -> &LieAlgebra {
        self.bialgebra.algebra()
    }

    pub fn dual(&self) -> &LieAlgebra {
        self.bialgebra.dual()
    }

    pub fn operator(&self) -> &Matrix {
        &self.operator
    }

    pub fn weight(&self) -> &Scalar {
        &self.weight
    }

    /// `-w id - B*` on `g*`.
    pub fn dual_operator(&self) -> Matrix {
        tilde(&self.operator.transpose(), &self.weight)
    }

    pub fn rota_baxter(&self) -> RotaBaxter {
        RotaBaxter::new_unchecked(self.algebra().clone(), self.operator.clone(), self.weight.clone())
    }

    pub fn dual_rota_baxter(&self) -> RotaBaxter {
        RotaBaxter::new_unchecked(self.dual().clone(), self.dual_operator(), self.weight.clone())
    }
}

pub fn check_rb_bialgebra(bialgebra: &LieBialgebra, operator: &Matrix, weight: &Scalar) -> Result<CheckReport> {
    let n = bialgebra.dim();
    operator.expect_shape(n, n, "operator")?;
    let dual_op = tilde(&operator.transpose(), weight);
    Ok(CheckReport::all(
        "rb-bialgebra",
        vec![
            CheckReport { name: "rota-baxter-g".into(), ..rota_baxter_report(bialgebra.algebra(), operator, weight) },
            CheckReport { name: "rota-baxter-dual".into(), ..rota_baxter_report(bialgebra.dual(), &dual_op, weight) },
        ],
    ))
}

/// `𝔡 = g ⋈ g*` with basis `(x_0..x_{n-1}, ξ_0..ξ_{n-1})`, the canonical
/// `r = sum ξ_i ⊗ x_i`, its dual bracket and the Rota-Baxter bialgebra with
/// `B(x + ξ) = -w ξ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrinfeldDouble {
    pub algebra: LieAlgebra,
    pub r: RMatrix,
    pub dual: LieAlgebra,
    pub rb_bialgebra: RbLieBialgebra,
}

/// The block swap `[[0, id], [id, 0]]` on `2n` coordinates. It identifies
/// `𝔡 = g (+) g*` with `𝔡* = g* (+) g` and is the matrix of `I` for the
/// canonical r-matrix.
pub fn swap(n: usize) -> Matrix {
    let id = Matrix::identity(n);
    let zero = Matrix::zeros(n, n);
    Matrix::block(&zero, &id, &id, &zero)
}

pub fn drinfeld_double(bialgebra: &LieBialgebra, weight: &Scalar) -> Result<DrinfeldDouble> {
    let n = bialgebra.dim();
    let algebra = bialgebra.matched_pair().bowtie()?;
    let components = Matrix::from_fn(2 * n, 2 * n, |i, j| {
        if i >= n && i - n == j {
            Scalar::from_integer(1.into())
        } else {
            Scalar::zero()
        }
    });
    let r = RMatrix::new(algebra.clone(), components)?;
    let dual = dual_bracket_r(&r)?;
    // 𝔡*_r is ḡ* on the first block (dual to x) and g on the second (dual to ξ).
    let expected = direct_sum(&bialgebra.dual().scaled(&-Scalar::from_integer(1.into())), bialgebra.algebra());
    let zero = Matrix::zeros(n, n);
    let minus_w = Matrix::scalar(n, &-weight);
    let operator = Matrix::block_diag(&zero, &minus_w);
    let checks = CheckReport::all(
        "drinfeld-double",
        vec![
            matrix_equality("i-is-swap", &r.symmetric_part(), &swap(n)),
            compare_brackets("dual-is-sum", &dual, &expected),
        ],
    );
    require(checks)?;
    let rb_bialgebra =
        RbLieBialgebra::new(LieBialgebra::new(algebra.clone(), dual.clone())?, operator, weight.clone())?;
    Ok(DrinfeldDouble { algebra, r, dual, rb_bialgebra })
}

/// The Rota-Baxter bialgebra `(𝔡, 𝔡*, 𝓑)` with
/// `𝓑(x + ξ) = Bx - w ξ - B* ξ`. Verifies that `-w id - 𝓑*` on `𝔡*`
/// corresponds to `𝓑` under the swap identification.
pub fn double_rb_bialgebra(rbbi: &RbLieBialgebra) -> Result<RbLieBialgebra> {
    let double = drinfeld_double(rbbi.bialgebra(), rbbi.weight())?;
    let n = rbbi.bialgebra().dim();
    let operator = Matrix::block_diag(rbbi.operator(), &rbbi.dual_operator());
    let result = RbLieBialgebra::new(double.rb_bialgebra.bialgebra.clone(), operator.clone(), rbbi.weight().clone())?;
    let p = swap(n);
    let transported = &(&p * &result.dual_operator()) * &p;
    require(matrix_equality("dual-operator-is-operator", &transported, &operator))?;
    Ok(result)
}

/// For factorizable `r` and nonzero weight, checks for levels `0..=levels`
/// that `I / w: g*_{B̃*^j} -> g_{B^{j+1}}` is an isomorphism, `r_-` is a
/// homomorphism `g*_{B̃*^j} -> g_{B^j}`, the horizontal maps `B` and `B̃*`
/// are homomorphisms between consecutive levels, and `B I = I B̃*`.
pub fn descendent_tower(r: &RMatrix, weight: &Scalar, levels: usize) -> Result<CheckReport> {
    nonzero(weight)?;
    let g = &r.algebra;
    let dual = dual_bracket_r(r)?;
    let qrb = quadratic_rb_from_factorizable(r, weight)?;
    let b = qrb.operator().clone();
    let b_dual = tilde(&b.transpose(), weight);
    let i_map = r.symmetric_part();
    let scaled_i = i_map.scale(&weight.recip());
    let minus = r.r_minus();

    let mut items = vec![matrix_equality("square-commutes", &(&b * &i_map), &(&i_map * &b_dual))];
    let mut top = g.clone();
    let mut bottom = dual.clone();
    let mut next_top = iterated_descendent(g, &b, weight, 1)?;
    for level in 0..=levels {
        let next_bottom = iterated_descendent(&bottom, &b_dual, weight, 1)?;
        let invertible = if scaled_i.inverse().is_some() {
            CheckReport::pass("invertible")
        } else {
            CheckReport::fail_plain("invertible")
        };
        let level_items = vec![
            homomorphism_report("scaled-i", &bottom, &next_top, &scaled_i),
            invertible,
            homomorphism_report("r-minus", &bottom, &top, &minus),
            homomorphism_report("operator", &next_top, &top, &b),
            homomorphism_report("dual-operator", &next_bottom, &bottom, &b_dual),
        ];
        items.push(CheckReport::all(&format!("level-{level}"), level_items));
        top = next_top;
        bottom = next_bottom;
        next_top = iterated_descendent(&top, &b, weight, 1)?;
    }
    Ok(CheckReport::all("descendent-tower", items))
}
