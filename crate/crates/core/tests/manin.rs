mod common;

use common::*;
use num_traits::Zero;
use proptest::prelude::*;
use rotabaxter::bialgebra::{swap, LieBialgebra, RbLieBialgebra};
use rotabaxter::catalog::{
    bialgebra, direct_sum_sl_n_triple, iwasawa_triple, rb_bialgebra, realified_sl_n_complex, BIALGEBRAS,
};
use rotabaxter::manin::{
    check_manin_triple, check_rb_manin_triple, form_dual_operator, manin_from_rb_bialgebra, projection_operator,
    rb_bialgebra_from_manin, ManinTriple, RbManinTriple,
};
use rotabaxter::realify::basis;
use rotabaxter::scalar::int;
use rotabaxter::{Error, LieAlgebra, Matrix, Scalar};

fn weights() -> [Scalar; 3] {
    [int(1), int(2), int(-3)]
}

/// Complex matrix as a pair of real parts.
type Complex = (Mat, Mat);

fn basis_matrices(n: usize) -> Vec<Complex> {
    basis(n)
        .iter()
        .map(|e| {
            let (mut re, mut im) = (zeros(n, n), zeros(n, n));
            for (r, c, a, b) in e.entries() {
                re[r][c] = int(a);
                im[r][c] = int(b);
            }
            (re, im)
        })
        .collect()
}

fn cmul(x: &Complex, y: &Complex) -> Complex {
    let (rr, ii) = (mul(&x.0, &y.0), mul(&x.1, &y.1));
    let (ri, ir) = (mul(&x.0, &y.1), mul(&x.1, &y.0));
    let n = rr.len();
    let re = (0..n).map(|i| sub(&rr[i], &ii[i])).collect();
    let im = (0..n).map(|i| add(&ri[i], &ir[i])).collect();
    (re, im)
}

fn csub(x: &Complex, y: &Complex) -> Complex {
    let n = x.0.len();
    ((0..n).map(|i| sub(&x.0[i], &y.0[i])).collect(), (0..n).map(|i| sub(&x.1[i], &y.1[i])).collect())
}

fn trace(x: &Complex) -> (Scalar, Scalar) {
    let n = x.0.len();
    ((0..n).map(|i| x.0[i][i].clone()).sum(), (0..n).map(|i| x.1[i][i].clone()).sum())
}

/// Coordinates in the `H_m, iH_m, E_jk, iE_jk` basis.
fn coords(x: &Complex) -> Vec<Scalar> {
    let n = x.0.len();
    let mut out = Vec::new();
    let (mut re, mut im) = (Scalar::zero(), Scalar::zero());
    for m in 0..n - 1 {
        re += &x.0[m][m];
        im += &x.1[m][m];
        out.push(re.clone());
        out.push(im.clone());
    }
    for j in 0..n {
        for k in 0..n {
            if j != k {
                out.push(x.0[j][k].clone());
                out.push(x.1[j][k].clone());
            }
        }
    }
    out
}

fn from_coords(n: usize, v: &[Scalar]) -> Complex {
    let mats = basis_matrices(n);
    let mut out = (zeros(n, n), zeros(n, n));
    for (c, m) in v.iter().zip(&mats) {
        for i in 0..n {
            for j in 0..n {
                out.0[i][j] += c * &m.0[i][j];
                out.1[i][j] += c * &m.1[i][j];
            }
        }
    }
    out
}

#[test]
fn realification_matches_matrix_arithmetic() {
    for n in [2, 3] {
        let sl = realified_sl_n_complex(n).unwrap();
        let mats = basis_matrices(n);
        let d = mats.len();
        assert_eq!(d, 2 * (n * n - 1));
        let c = constants(&sl.algebra());
        for i in 0..d {
            assert_eq!(coords(&mats[i]), unit(d, i));
            for j in 0..d {
                let comm = csub(&cmul(&mats[i], &mats[j]), &cmul(&mats[j], &mats[i]));
                assert_eq!(c[i][j], coords(&comm));
                assert_eq!(sl.im_trace_form().get(i, j), &trace(&cmul(&mats[i], &mats[j])).1);
                assert_eq!(sl.re_trace_form().get(i, j), &trace(&cmul(&mats[i], &mats[j])).0);
            }
        }
    }
    assert!(matches!(realified_sl_n_complex(4), Err(Error::UnsupportedSize(4))));
}

/// `S(u_i, u_j) = 0` for all columns.
fn isotropic(s: &Mat, injection: &Mat) -> bool {
    let cols: Vec<Vec<Scalar>> = (0..injection[0].len()).map(|j| column(injection, j)).collect();
    cols.iter().all(|u| cols.iter().all(|v| apply(s, v).iter().zip(u).map(|(a, b)| a * b).sum::<Scalar>().is_zero()))
}

/// `S([x, y], z) + S(y, [x, z]) = 0` on basis elements.
fn invariant(c: &Tensor, s: &Mat) -> bool {
    let n = c.len();
    (0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).all(|z| {
                let xy = bracket(c, &unit(n, x), &unit(n, y));
                let xz = bracket(c, &unit(n, x), &unit(n, z));
                let v: Scalar = (0..n).map(|a| &xy[a] * &s[a][z] + &s[y][a] * &xz[a]).sum();
                v.is_zero()
            })
        })
    })
}

#[test]
fn bialgebra_doubles_are_manin_triples() {
    for name in BIALGEBRAS {
        let bi = bialgebra(name).unwrap();
        let n = bi.dim();
        let ambient = bi.matched_pair().bowtie().unwrap();
        let (id, zero) = (Matrix::identity(n), Matrix::zeros(n, n));
        let (first, second) = (Matrix::vstack(&id, &zero), Matrix::vstack(&zero, &id));
        let report = check_manin_triple(&ambient, &swap(n), &first, &second).unwrap();
        assert!(report.passed, "{report}");
        let s = rows(&swap(n));
        assert!(invariant(&constants(&ambient), &s));
        assert!(isotropic(&s, &rows(&first)) && isotropic(&s, &rows(&second)));
        let triple = ManinTriple::new(ambient, swap(n), first, second).unwrap();
        assert_eq!(triple.first_algebra().constants(), bi.algebra().constants());
        assert_eq!(triple.second_algebra().constants(), bi.dual().constants());
        assert_eq!(triple.pairing(), Matrix::identity(n));
    }
}

#[test]
fn iwasawa_split_of_sl2c() {
    let sl = realified_sl_n_complex(2).unwrap();
    let (su, _) = sl.su_injection();
    let (sb, _) = sl.sb_injection();
    let g = sl.algebra();
    let im = rows(&sl.im_trace_form());
    assert!(invariant(&constants(&g), &im));
    assert!(isotropic(&im, &rows(&su)));
    assert!(isotropic(&im, &rows(&sb)));
    assert!(check_manin_triple(&g, &sl.im_trace_form(), &su, &sb).unwrap().passed);

    let re = rows(&sl.re_trace_form());
    assert!(!isotropic(&re, &rows(&su)));
    let report = check_manin_triple(&g, &sl.re_trace_form(), &su, &sb).unwrap();
    assert!(!report.passed);
    assert!(report.failures().contains(&"first-isotropic"));
    assert!(report.find("first-subalgebra").unwrap().passed);
}

#[test]
fn manin_check_rejects_bad_input() {
    let sl = realified_sl_n_complex(2).unwrap();
    let (su, _) = sl.su_injection();
    let g = sl.algebra();
    // Same subspace twice is not a direct sum.
    let report = check_manin_triple(&g, &sl.im_trace_form(), &su, &su).unwrap();
    assert!(report.failures().contains(&"direct-sum"));
    assert!(check_manin_triple(&g, &sl.im_trace_form(), &su, &Matrix::zeros(4, 3)).is_err());
}

/// `-w A` with `a_ii = Re x_ii`, `a_jk = x_jk + conj(x_kj)` for `j < k`.
fn iwasawa_oracle(n: usize, w: &Scalar) -> Mat {
    let d = 2 * (n * n - 1);
    let cols: Vec<Vec<Scalar>> = (0..d)
        .map(|i| {
            let x = from_coords(n, &unit(d, i));
            let mut a = (zeros(n, n), zeros(n, n));
            for j in 0..n {
                a.0[j][j] = x.0[j][j].clone();
                for k in j + 1..n {
                    a.0[j][k] = &x.0[j][k] + &x.0[k][j];
                    a.1[j][k] = &x.1[j][k] - &x.1[k][j];
                }
            }
            scale(&coords(&a), &-w)
        })
        .collect();
    transpose(&cols)
}

/// `-w (D/2 + U, -D/2 - L)` on `(X, Y)` with `D`, `U`, `L` the parts of `X - Y`.
fn standard_oracle(n: usize, w: &Scalar) -> Mat {
    let d = 2 * (n * n - 1);
    let half = Scalar::new(1.into(), 2.into());
    let cols: Vec<Vec<Scalar>> = (0..2 * d)
        .map(|i| {
            let v = unit(2 * d, i);
            let diff = csub(&from_coords(n, &v[..d]), &from_coords(n, &v[d..]));
            let (mut first, mut second) = ((zeros(n, n), zeros(n, n)), (zeros(n, n), zeros(n, n)));
            for j in 0..n {
                for k in 0..n {
                    for (part, src) in [(0, &diff.0), (1, &diff.1)] {
                        let value = src[j][k].clone();
                        let (f, s) =
                            if part == 0 { (&mut first.0, &mut second.0) } else { (&mut first.1, &mut second.1) };
                        if j == k {
                            f[j][k] = &value * &half;
                            s[j][k] = -(&value * &half);
                        } else if j < k {
                            f[j][k] = value;
                        } else {
                            s[j][k] = -value;
                        }
                    }
                }
            }
            let mut col = scale(&coords(&first), &-w);
            col.extend(scale(&coords(&second), &-w));
            col
        })
        .collect();
    transpose(&cols)
}

#[test]
fn iwasawa_operator_matches_explicit_formula() {
    for n in [2, 3] {
        let sl = realified_sl_n_complex(n).unwrap();
        for w in weights() {
            let rbmt = iwasawa_triple(n, &w).unwrap();
            assert_eq!(rows(rbmt.operator()), iwasawa_oracle(n, &w));
            assert_eq!(rbmt.operator(), &sl.iwasawa_operator_explicit(&w));
            assert!(is_rb(&constants(rbmt.triple().ambient()), &rows(rbmt.operator()), &w));
            assert!(rbmt.first_operator().is_zero());
            assert_eq!(rbmt.second_operator(), Matrix::scalar(rbmt.triple().second_injection().cols(), &-&w));
        }
    }
}

#[test]
fn direct_sum_operator_matches_explicit_formula() {
    for n in [2, 3] {
        let sl = realified_sl_n_complex(n).unwrap();
        for w in weights() {
            let rbmt = direct_sum_sl_n_triple(n, &w).unwrap();
            assert_eq!(rows(rbmt.operator()), standard_oracle(n, &w));
            assert_eq!(rbmt.operator(), &sl.standard_operator_explicit(&w));
            assert!(check_rb_manin_triple(rbmt.triple(), rbmt.operator(), &w).unwrap().passed);
            assert!(is_rb(&constants(rbmt.triple().ambient()), &rows(rbmt.operator()), &w));
        }
    }
}

#[test]
fn projection_operator_is_its_own_form_dual() {
    for w in weights() {
        let mut triples: Vec<ManinTriple> = vec![
            iwasawa_triple(2, &w).unwrap().triple().clone(),
            direct_sum_sl_n_triple(2, &w).unwrap().triple().clone(),
        ];
        for name in BIALGEBRAS {
            let bi = bialgebra(name).unwrap();
            let n = bi.dim();
            let rbbi = RbLieBialgebra::new(bi, Matrix::zeros(n, n), w.clone()).unwrap();
            triples.push(manin_from_rb_bialgebra(&rbbi).unwrap().triple().clone());
        }
        for triple in triples {
            let op = projection_operator(&triple, &w);
            assert_eq!(form_dual_operator(&triple, &op, &w).unwrap(), op);
            let report = check_rb_manin_triple(&triple, &op, &w).unwrap();
            assert!(report.passed, "{report}");
            let rbmt = RbManinTriple::new(triple, op, w.clone()).unwrap();
            assert!(rbmt.first_operator().is_zero());
            let back = rb_bialgebra_from_manin(&rbmt).unwrap();
            assert!(back.operator().is_zero());
            assert_eq!(back.dual_operator(), Matrix::scalar(back.bialgebra().dim(), &-&w));
        }
    }
}

#[test]
fn form_dual_of_catalog_operators() {
    for w in weights() {
        for name in BIALGEBRAS {
            let rbmt = manin_from_rb_bialgebra(&rb_bialgebra(name, &w).unwrap()).unwrap();
            let dual = form_dual_operator(rbmt.triple(), rbmt.operator(), &w).unwrap();
            assert_eq!(&dual, rbmt.operator());
        }
    }
}

#[test]
fn round_trips_through_manin_triples() {
    for w in weights() {
        for name in BIALGEBRAS {
            let rbbi = rb_bialgebra(name, &w).unwrap();
            let rbmt = manin_from_rb_bialgebra(&rbbi).unwrap();
            let n = rbbi.bialgebra().dim();
            let expected = block_diag(&rows(rbbi.operator()), &rows(&rbbi.dual_operator()));
            assert_eq!(rows(rbmt.operator()), expected);
            assert_eq!(rbmt.first_operator(), rbbi.operator().clone());
            assert_eq!(rbmt.second_operator(), rbbi.dual_operator());
            assert_eq!(rbmt.triple().form().matrix(), &swap(n));
            assert_eq!(rb_bialgebra_from_manin(&rbmt).unwrap(), rbbi);
        }
    }
}

#[test]
fn minus_weight_identity_bialgebra_gives_manin_triple() {
    for w in weights() {
        for name in BIALGEBRAS {
            let bi = bialgebra(name).unwrap();
            let n = bi.dim();
            let rbbi = RbLieBialgebra::new(bi, Matrix::scalar(n, &-&w), w.clone()).unwrap();
            let rbmt = manin_from_rb_bialgebra(&rbbi).unwrap();
            let expected = Matrix::block_diag(&Matrix::scalar(n, &-&w), &Matrix::zeros(n, n));
            assert_eq!(rbmt.operator(), &expected);
            assert_eq!(rb_bialgebra_from_manin(&rbmt).unwrap(), rbbi);
        }
    }
}

#[test]
fn iwasawa_triple_gives_rb_bialgebra_on_su() {
    for n in [2, 3] {
        for w in weights() {
            let rbmt = iwasawa_triple(n, &w).unwrap();
            let rbbi = rb_bialgebra_from_manin(&rbmt).unwrap();
            let dim = n * n - 1;
            assert_eq!(rbbi.bialgebra().dim(), dim);
            assert!(rbbi.operator().is_zero());
            assert_eq!(rbbi.dual_operator(), Matrix::scalar(dim, &-&w));
            assert!(is_lie(&constants(rbbi.dual())));
            assert!(cocycle_holds(&constants(rbbi.algebra()), &constants(rbbi.dual())));
            // The dual is sb(n, C) transported by the pairing.
            let k = rbmt.triple().pairing();
            let sb = rbmt.triple().second_algebra();
            let transported = sb.rebased(&k.inverse().unwrap(), rbbi.dual().names().to_vec()).unwrap();
            assert_eq!(transported.constants(), rbbi.dual().constants());
            assert_eq!(rbmt.triple().first_algebra().names()[0], "iH1");
        }
    }
}

#[test]
fn subalgebra_dimensions_and_pairings() {
    for n in [2, 3] {
        for rbmt in [iwasawa_triple(n, &int(1)).unwrap(), direct_sum_sl_n_triple(n, &int(1)).unwrap()] {
            let t = rbmt.triple();
            let (a, b) = (t.first_injection().cols(), t.second_injection().cols());
            assert_eq!(a + b, t.ambient().dim());
            assert_eq!(a, b);
            assert!(!t.pairing().determinant().is_zero());
        }
    }
}

#[test]
fn direct_sum_triple_names() {
    let rbmt = direct_sum_sl_n_triple(2, &int(1)).unwrap();
    let first = rbmt.triple().first_algebra();
    let second = rbmt.triple().second_algebra();
    assert_eq!(first.names()[0], "(H1,H1)");
    assert_eq!(second.names(), ["(H1,-H1)", "(iH1,-iH1)", "(E12,0)", "(iE12,0)", "(0,E21)", "(0,iE21)"]);
}

#[test]
fn operator_not_preserving_subalgebras_is_rejected() {
    let rbmt = iwasawa_triple(2, &int(1)).unwrap();
    let t = rbmt.triple();
    let half = Matrix::scalar(6, &rotabaxter::scalar::ratio(-1, 2));
    assert!(check_rb_manin_triple(t, &half, &int(1)).unwrap().passed);
    let mut bad = projection_operator(t, &int(1));
    bad.set(0, 2, int(1));
    let report = check_rb_manin_triple(t, &bad, &int(1)).unwrap();
    assert!(!report.passed);
    assert!(RbManinTriple::new(t.clone(), bad, int(1)).is_err());
}

fn random_basis(n: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(small_rational(), n * n).prop_filter_map("singular", move |entries| {
        let m = Matrix::from_fn(n, n, |i, j| entries[n * i + j].clone());
        m.inverse().map(|_| m)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn rebased_subalgebras_give_isomorphic_bialgebras(p in random_basis(3), w in nonzero_rational()) {
        let rbbi = rb_bialgebra("sl2", &w).unwrap();
        let rbmt = manin_from_rb_bialgebra(&rbbi).unwrap();
        let t = rbmt.triple();
        let first = t.first_injection() * &p;
        let triple = ManinTriple::new(t.ambient().clone(), t.form().matrix().clone(), first, t.second_injection().clone()).unwrap();
        let moved = RbManinTriple::new(triple, rbmt.operator().clone(), w.clone()).unwrap();
        let back = rb_bialgebra_from_manin(&moved).unwrap();
        let names: Vec<String> = back.algebra().names().to_vec();
        let expected: LieAlgebra = rbbi.algebra().rebased(&p, names).unwrap();
        prop_assert_eq!(back.algebra().constants(), expected.constants());
        prop_assert_eq!(back.operator(), &(&p.inverse().unwrap() * &(rbbi.operator() * &p)));
        prop_assert!(LieBialgebra::new(back.algebra().clone(), back.dual().clone()).is_ok());
    }

    #[test]
    fn manin_check_matches_brute_force_on_perturbed_forms(i in 0usize..6, j in 0usize..6, delta in nonzero_rational()) {
        let sl = realified_sl_n_complex(2).unwrap();
        let (su, _) = sl.su_injection();
        let (sb, _) = sl.sb_injection();
        let mut form = sl.im_trace_form();
        let v = form.get(i, j) + &delta;
        form.set(i, j, v.clone());
        form.set(j, i, v);
        let report = check_manin_triple(&sl.algebra(), &form, &su, &sb).unwrap();
        let s = rows(&form);
        prop_assert_eq!(report.find("invariance").unwrap().passed, invariant(&constants(&sl.algebra()), &s));
        prop_assert_eq!(report.find("first-isotropic").unwrap().passed, isotropic(&s, &rows(&su)));
        prop_assert_eq!(report.find("second-isotropic").unwrap().passed, isotropic(&s, &rows(&sb)));
    }
}
