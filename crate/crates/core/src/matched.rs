//! Matched pairs of Lie algebras and of Rota-Baxter Lie algebras, their
//! bicrossed products, and the doubles built from a Rota-Baxter operator.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::algebra::{
    check_representation, compare_brackets, concat_names, direct_sum, homomorphism_report, LieAlgebra, Representation,
    StructureConstants,
};
use crate::bialgebra::{dual_bracket_r, quadratic_rb_from_factorizable, RMatrix};
use crate::error::{require, Error, Result};
use crate::matrix::{is_zero_vec, unit, vec_add, vec_sub, Matrix};
use crate::report::{CheckReport, Witness};
use crate::rota_baxter::{descendent, descendent_constants, rota_baxter_report, RotaBaxter};
use crate::scalar::Scalar;

/// `(g, h; rho, mu)`: `rho` represents `g` on `h`, `mu` represents `h` on `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPair {
    first: LieAlgebra,
    second: LieAlgebra,
    rho: Representation,
    mu: Representation,
}

impl MatchedPair {
    pub fn new(first: LieAlgebra, second: LieAlgebra, rho: Representation, mu: Representation) -> Result<Self> {
        require(check_matched_pair(&first, &second, &rho, &mu)?)?;
        Ok(MatchedPair { first, second, rho, mu })
    }

    pub fn first(&self) -> &LieAlgebra {
        &self.first
    }

    pub fn second(&self) -> &LieAlgebra {
        &self.second
    }

    pub fn rho(&self) -> &Representation {
        &self.rho
    }

    pub fn mu(&self) -> &Representation {
        &self.mu
    }

    /// The bicrossed product `g ⋈ h`.
    pub fn bowtie(&self) -> Result<LieAlgebra> {
        LieAlgebra::new(
            concat_names(self.first.names(), self.second.names()),
            bowtie_constants(&self.first, &self.second, &self.rho, &self.mu),
        )
    }
}

/// Both representation properties plus the two compatibility equations
/// ```text
/// rho(x)[a,b] = [rho(x)a, b] + [a, rho(x)b] + rho(mu(b)x)a - rho(mu(a)x)b
/// mu(a)[x,y]  = [mu(a)x, y] + [x, mu(a)y] + mu(rho(y)a)x - mu(rho(x)a)y
/// ```
/// on basis elements. Witnesses are `(x, a, b)` and `(a, x, y)` with the
/// residual vector.
pub fn check_matched_pair(
    first: &LieAlgebra,
    second: &LieAlgebra,
    rho: &Representation,
    mu: &Representation,
) -> Result<CheckReport> {
    let (n, m) = (first.dim(), second.dim());
    expect_rep_shape("rho", rho, n, m)?;
    expect_rep_shape("mu", mu, m, n)?;
    let rho_rep = check_representation(first, m, rho.actions())?;
    let mu_rep = check_representation(second, n, mu.actions())?;
    let items = vec![
        CheckReport { name: "rho-representation".into(), ..rho_rep },
        CheckReport { name: "mu-representation".into(), ..mu_rep },
        compatibility_report("compatibility-first", first, second, rho, mu),
        compatibility_report("compatibility-second", second, first, mu, rho),
    ];
    Ok(CheckReport::all("matched-pair", items))
}

fn expect_rep_shape(name: &str, rep: &Representation, base: usize, carrier: usize) -> Result<()> {
    if rep.base_dim() != base || rep.carrier_dim() != carrier {
        return Err(Error::DimensionMismatch(format!(
            "{name} acts by {} matrices on dimension {}, expected {base} on {carrier}",
            rep.base_dim(),
            rep.carrier_dim()
        )));
    }
    Ok(())
}

/// `act(x)[a,b]_target = [act(x)a, b] + [a, act(x)b] + act(back(b)x)a - act(back(a)x)b`
/// where `act` represents `source` on `target` and `back` represents
/// `target` on `source`.
fn compatibility_report(
    name: &str,
    source: &LieAlgebra,
    target: &LieAlgebra,
    act: &Representation,
    back: &Representation,
) -> CheckReport {
    let (n, m) = (source.dim(), target.dim());
    for i in 0..n {
        let ai = act.action(i);
        for a in 0..m {
            for b in a + 1..m {
                let (ea, eb) = (unit(m, a), unit(m, b));
                let lhs = ai.apply(&target.bracket(&ea, &eb));
                let mut rhs = vec_add(&target.bracket(&ai.column(a), &eb), &target.bracket(&ea, &ai.column(b)));
                let back_b = back.action(b).column(i);
                let back_a = back.action(a).column(i);
                rhs = vec_add(&rhs, &action_column(act, &back_b, a));
                rhs = vec_sub(&rhs, &action_column(act, &back_a, b));
                let residual = vec_sub(&lhs, &rhs);
                if !is_zero_vec(&residual) {
                    return CheckReport::fail(name, Witness::exact(&[i, a, b], residual));
                }
            }
        }
    }
    CheckReport::pass(name)
}

/// Column `col` of `act(x)` for `x` with coordinates `coeffs`.
fn action_column(act: &Representation, coeffs: &[Scalar], col: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); act.carrier_dim()];
    for (k, c) in coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let m = act.action(k);
        for (r, slot) in out.iter_mut().enumerate() {
            let v = m.get(r, col);
            if !v.is_zero() {
                *slot += c * v;
            }
        }
    }
    out
}

/// Structure constants of `[x+a, y+b] = ([x,y] + mu(a)y - mu(b)x) + ([a,b] + rho(x)b - rho(y)a)`
/// on `g (+) h`, without validation.
pub(crate) fn bowtie_constants(
    first: &LieAlgebra,
    second: &LieAlgebra,
    rho: &Representation,
    mu: &Representation,
) -> StructureConstants {
    let (n, m) = (first.dim(), second.dim());
    let mut c = StructureConstants::zeros(n + m);
    for (i, j, k, v) in first.constants().upper_entries() {
        c.set(j, i, k, -&v);
        c.set(i, j, k, v);
    }
    for (a, b, k, v) in second.constants().upper_entries() {
        c.set(n + b, n + a, n + k, -&v);
        c.set(n + a, n + b, n + k, v);
    }
    for i in 0..n {
        for a in 0..m {
            // [x_i, a] = rho(x_i) a - mu(a) x_i
            for k in 0..m {
                let v = rho.action(i).get(k, a);
                if !v.is_zero() {
                    c.set(i, n + a, n + k, v.clone());
                    c.set(n + a, i, n + k, -v);
                }
            }
            for k in 0..n {
                let v = mu.action(a).get(k, i);
                if !v.is_zero() {
                    c.set(i, n + a, k, -v);
                    c.set(n + a, i, k, v.clone());
                }
            }
        }
    }
    c
}

/// The Lie algebra `g ⋈ h` of a matched pair. Rejects invalid pairs.
pub fn double_bowtie(mp: &MatchedPair) -> Result<LieAlgebra> {
    mp.bowtie()
}

/// `(g_B, g; rho, mu)` with `rho(a)x = B[x,a] - [x,Ba]` and `mu(x)a = [x,a]`.
pub fn mp_from_rb(rb: &RotaBaxter) -> Result<MatchedPair> {
    rb.nonzero_weight()?;
    let g = rb.algebra();
    let n = g.dim();
    let descendent = rb.descendent()?;
    let b = rb.operator();
    let rho_actions = (0..n)
        .map(|a| {
            let ba = b.column(a);
            let ea = unit(n, a);
            Matrix::from_columns(
                n,
                &(0..n)
                    .map(|j| {
                        let ej = unit(n, j);
                        vec_sub(&b.apply(&g.bracket(&ej, &ea)), &g.bracket(&ej, &ba))
                    })
                    .collect::<Vec<_>>(),
            )
        })
        .collect();
    let rho = Representation::new(&descendent, n, rho_actions)?;
    let mu = Representation::new(g, n, g.adjoint_rep().actions().to_vec())?;
    MatchedPair::new(descendent, g.clone(), rho, mu)
}

/// The double `(g (+) g, [.,.]_D)` of a Rota-Baxter algebra with nonzero
/// weight, with the isomorphism `phi` onto `g (+) g`. Coordinates are
/// `(a, x)` with `a` in the descendent copy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RbDouble {
    pub algebra: LieAlgebra,
    /// `phi(a, x) = (Ba + weight a + x, Ba + x)`.
    pub phi: Matrix,
    /// `phi^{-1}(x, y) = ((x - y) / weight, y - B(x - y) / weight)`.
    pub phi_inverse: Matrix,
}

/// Builds `[.,.]_D` clause by clause:
/// `[(0,x),(0,y)] = (0,[x,y])`, `[(a,0),(b,0)] = ([a,b]_B, 0)` and
/// `[(0,x),(a,0)] = ([x,a], [x,Ba] - B[x,a])`, then verifies `phi` is an
/// isomorphism onto the direct sum with the stated two-sided inverse.
pub fn double_d(rb: &RotaBaxter) -> Result<RbDouble> {
    rb.nonzero_weight()?;
    let g = rb.algebra();
    let n = g.dim();
    let b = rb.operator();
    let weight = rb.weight();
    let descendent = descendent_constants(g, b, weight);
    let mut c = StructureConstants::zeros(2 * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                c.set(i, j, k, descendent.get(i, j, k).clone());
                c.set(n + i, n + j, n + k, g.c(i, j, k).clone());
            }
        }
    }
    for i in 0..n {
        let ei = unit(n, i);
        for a in 0..n {
            let ea = unit(n, a);
            let xa = g.bracket(&ei, &ea);
            let second = vec_sub(&g.bracket(&ei, &b.column(a)), &b.apply(&xa));
            for k in 0..n {
                c.set(n + i, a, k, xa[k].clone());
                c.set(a, n + i, k, -&xa[k]);
                c.set(n + i, a, n + k, second[k].clone());
                c.set(a, n + i, n + k, -&second[k]);
            }
        }
    }
    let algebra = LieAlgebra::new(concat_names(g.names(), g.names()), c)?;

    let id = Matrix::identity(n);
    let b_shift = b + &Matrix::scalar(n, weight);
    let phi = Matrix::block(&b_shift, &id, b, &id);
    let phi_inverse = Matrix::block(&id, &-&id, &-b, &b_shift).scale(&weight.recip());
    let identity = Matrix::identity(2 * n);
    let two_sided = &phi * &phi_inverse == identity && &phi_inverse * &phi == identity;
    let report = CheckReport::all(
        "double-d",
        vec![
            if two_sided { CheckReport::pass("phi-inverse") } else { CheckReport::fail_plain("phi-inverse") },
            homomorphism_report("phi-homomorphism", &algebra, &direct_sum(g, g), &phi),
        ],
    );
    require(report)?;
    Ok(RbDouble { algebra, phi, phi_inverse })
}

/// A matched pair of Rota-Baxter Lie algebras `((g,B),(h,C);rho,mu)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RbMatchedPair {
    mp: MatchedPair,
    first_operator: Matrix,
    second_operator: Matrix,
    weight: Scalar,
}

impl RbMatchedPair {
    pub fn new(mp: MatchedPair, first_operator: Matrix, second_operator: Matrix, weight: Scalar) -> Result<Self> {
        require(check_rb_matched_pair(&mp, &first_operator, &second_operator, &weight)?)?;
        Ok(RbMatchedPair { mp, first_operator, second_operator, weight })
    }

    pub fn matched_pair(&self) -> &MatchedPair {
        &self.mp
    }

    pub fn first_operator(&self) -> &Matrix {
        &self.first_operator
    }

    pub fn second_operator(&self) -> &Matrix {
        &self.second_operator
    }

    pub fn weight(&self) -> &Scalar {
        &self.weight
    }

    /// `B (+) C` on `g ⋈ h`.
    pub fn sum_operator(&self) -> Matrix {
        Matrix::block_diag(&self.first_operator, &self.second_operator)
    }
}

/// Checks the two operator compatibilities
/// ```text
/// C(rho(Bx)a + rho(x)Ca + w rho(x)a) = rho(Bx)Ca
/// B(mu(Ca)x + mu(a)Bx + w mu(a)x)    = mu(Ca)Bx
/// ```
/// together with `B`, `C` being Rota-Baxter, and independently that `B (+) C`
/// is Rota-Baxter on `g ⋈ h`. The `routes-agree` item fails if the two
/// routes disagree.
pub fn check_rb_matched_pair(
    mp: &MatchedPair,
    first_operator: &Matrix,
    second_operator: &Matrix,
    weight: &Scalar,
) -> Result<CheckReport> {
    let (n, m) = (mp.first.dim(), mp.second.dim());
    first_operator.expect_shape(n, n, "first operator")?;
    second_operator.expect_shape(m, m, "second operator")?;
    let rb_first =
        CheckReport { name: "rota-baxter-first".into(), ..rota_baxter_report(&mp.first, first_operator, weight) };
    let rb_second =
        CheckReport { name: "rota-baxter-second".into(), ..rota_baxter_report(&mp.second, second_operator, weight) };
    let first_eq = operator_compatibility("rb-compatibility-first", first_operator, second_operator, &mp.rho, weight);
    let second_eq = operator_compatibility("rb-compatibility-second", second_operator, first_operator, &mp.mu, weight);
    let direct = rb_first.passed && rb_second.passed && first_eq.passed && second_eq.passed;

    let bowtie = LieAlgebra::assemble(
        concat_names(mp.first.names(), mp.second.names()),
        bowtie_constants(&mp.first, &mp.second, &mp.rho, &mp.mu),
    );
    let sum = Matrix::block_diag(first_operator, second_operator);
    let on_bowtie = CheckReport { name: "rota-baxter-bowtie".into(), ..rota_baxter_report(&bowtie, &sum, weight) };
    let agree = if direct == on_bowtie.passed {
        CheckReport::pass("routes-agree")
    } else {
        CheckReport::fail_plain("routes-agree")
    };
    Ok(CheckReport::all("rb-matched-pair", vec![rb_first, rb_second, first_eq, second_eq, on_bowtie, agree]))
}

/// `T(act(Sx)a + act(x)Ta + w act(x)a) = act(Sx)Ta` for all basis `x`, `a`,
/// where `S` is the operator on the acting algebra and `T` on the carrier.
/// Witness `(x, a)` with the residual vector.
fn operator_compatibility(
    name: &str,
    source_op: &Matrix,
    carrier_op: &Matrix,
    act: &Representation,
    weight: &Scalar,
) -> CheckReport {
    for i in 0..act.base_dim() {
        let act_sx = act.action_of(&source_op.column(i));
        let act_x = act.action(i);
        let inner = &(&act_sx + &(act_x * carrier_op)) + &act_x.scale(weight);
        let residual = &(carrier_op * &inner) - &(&act_sx * carrier_op);
        for a in 0..act.carrier_dim() {
            let column = residual.column(a);
            if !is_zero_vec(&column) {
                return CheckReport::fail(name, Witness::exact(&[i, a], column));
            }
        }
    }
    CheckReport::pass(name)
}

/// `(g_B, h_C; rho_(B,C), mu_(B,C))` with
/// `rho_(B,C)(x) = rho(Bx) + rho(x)C + w rho(x)` and
/// `mu_(B,C)(a) = mu(Ca) + mu(a)B + w mu(a)`. Verifies that its bicrossed
/// product equals the descendent of `g ⋈ h` by `B (+) C`.
pub fn descendent_matched_pair(rbmp: &RbMatchedPair) -> Result<MatchedPair> {
    let mp = &rbmp.mp;
    let w = &rbmp.weight;
    let (b, c) = (&rbmp.first_operator, &rbmp.second_operator);
    let first = descendent(&mp.first, b, w)?;
    let second = descendent(&mp.second, c, w)?;
    let twist = |act: &Representation, source_op: &Matrix, carrier_op: &Matrix| {
        let actions = (0..act.base_dim())
            .map(|i| {
                let act_x = act.action(i);
                &(&act.action_of(&source_op.column(i)) + &(act_x * carrier_op)) + &act_x.scale(w)
            })
            .collect::<Vec<_>>();
        (act.carrier_dim(), actions)
    };
    let (m, rho_actions) = twist(&mp.rho, b, c);
    let (n, mu_actions) = twist(&mp.mu, c, b);
    let rho = Representation::new(&first, m, rho_actions)?;
    let mu = Representation::new(&second, n, mu_actions)?;
    let result = MatchedPair::new(first, second, rho, mu)?;
    require(descendent_double_report(rbmp, &result)?)?;
    Ok(result)
}

/// Structure-constant equality of `g_B ⋈ h_C` and `(g ⋈ h)_{B (+) C}`.
pub fn check_descendent_double(rbmp: &RbMatchedPair) -> Result<CheckReport> {
    let result = descendent_matched_pair(rbmp)?;
    descendent_double_report(rbmp, &result)
}

fn descendent_double_report(rbmp: &RbMatchedPair, result: &MatchedPair) -> Result<CheckReport> {
    let bowtie = rbmp.mp.bowtie()?;
    let lhs = result.bowtie()?;
    let rhs = descendent(&bowtie, &rbmp.sum_operator(), &rbmp.weight)?;
    Ok(compare_brackets("descendent-double", &lhs, &rhs))
}

/// For a factorizable `r` and nonzero weight, checks that
/// `(I / w) (+) id: g*_r ⋈ g -> g_B ⋈ g` and
/// `psi(a, x) = (r_+ a + x, r_- a + x): g*_r ⋈ g -> g (+) g` are Lie algebra
/// isomorphisms and that `phi ∘ ((I / w) (+) id) = psi`.
pub fn psi_diagram_check(r: &RMatrix, weight: &Scalar) -> Result<CheckReport> {
    let g = r.algebra();
    let n = g.dim();
    let dual = dual_bracket_r(r)?;
    let qrb = quadratic_rb_from_factorizable(r, weight)?;
    let double = double_d(qrb.rota_baxter())?;

    let mp = MatchedPair::new(dual.clone(), g.clone(), dual.coadjoint_rep(), g.coadjoint_rep())?;
    let source = mp.bowtie()?;
    let id = Matrix::identity(n);
    let i_map = r.symmetric_part();
    let scaled = Matrix::block_diag(&i_map.scale(&weight.recip()), &id);
    let psi = Matrix::block(&r.r_plus(), &id, &r.r_minus(), &id);

    let invertible = |name: &str, m: &Matrix| {
        if m.inverse().is_some() {
            CheckReport::pass(name)
        } else {
            CheckReport::fail_plain(name)
        }
    };
    let composition = &double.phi * &scaled;
    let commutes = match (&composition - &psi).first_nonzero() {
        None => CheckReport::pass("diagram-commutes"),
        Some((i, j, v)) => CheckReport::fail("diagram-commutes", Witness::exact(&[i, j], vec![v.clone()])),
    };
    let items = vec![
        homomorphism_report("scaled-i-homomorphism", &source, &double.algebra, &scaled),
        invertible("scaled-i-invertible", &scaled),
        homomorphism_report("psi-homomorphism", &source, &direct_sum(g, g), &psi),
        invertible("psi-invertible", &psi),
        commutes,
    ];
    Ok(CheckReport::all("psi-diagram", items))
}
