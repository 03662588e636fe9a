#![allow(clippy::needless_range_loop)]

mod common;

use common::*;
use proptest::prelude::*;
use rotabaxter::algebra::{direct_sum, Representation};
use rotabaxter::bialgebra::{drinfeld_double, RMatrix};
use rotabaxter::catalog::{
    abelian, aff1, aff1_bialgebra, aff1_rb, bialgebra, drinfeld_double_of, rb_bialgebra, rb_matched_pair, sl2,
    sl2_quadratic_rb, sl2_standard_r, BIALGEBRAS,
};
use rotabaxter::matched::{
    check_descendent_double, check_matched_pair, check_rb_matched_pair, descendent_matched_pair, double_bowtie,
    double_d, mp_from_rb, psi_diagram_check, MatchedPair, RbMatchedPair,
};
use rotabaxter::rota_baxter::tilde;
use rotabaxter::scalar::{int, ratio};
use rotabaxter::{Error, Matrix, RotaBaxter, Scalar};

fn weights() -> [Scalar; 3] {
    [int(1), int(2), int(-3)]
}

fn sl2_b(w: &Scalar) -> Matrix {
    Matrix::diagonal(&[-(w / int(2)), -w, int(0)])
}

fn rb_examples(w: &Scalar) -> Vec<RotaBaxter> {
    vec![
        RotaBaxter::new(abelian(2), Matrix::zeros(2, 2), w.clone()).unwrap(),
        aff1_rb(w).unwrap(),
        RotaBaxter::new(sl2(), sl2_b(w), w.clone()).unwrap(),
    ]
}

fn actions(rep: &Representation) -> Vec<Mat> {
    rep.actions().iter().map(rows).collect()
}

fn oracle_bowtie(mp: &MatchedPair) -> Tensor {
    bowtie(&constants(mp.first()), &constants(mp.second()), &actions(mp.rho()), &actions(mp.mu()))
}

#[test]
fn zero_actions_form_a_matched_pair() {
    for (g, h) in [(sl2(), aff1()), (aff1(), aff1()), (abelian(2), sl2())] {
        let rho = Representation::zero(&g, h.dim());
        let mu = Representation::zero(&h, g.dim());
        assert!(check_matched_pair(&g, &h, &rho, &mu).unwrap().passed);
        let mp = MatchedPair::new(g.clone(), h.clone(), rho, mu).unwrap();
        assert_eq!(double_bowtie(&mp).unwrap().constants(), direct_sum(&g, &h).constants());
    }
}

#[test]
fn bialgebra_matched_pair_is_the_drinfeld_double() {
    for name in BIALGEBRAS {
        let bi = bialgebra(name).unwrap();
        let mp = bi.matched_pair();
        let bowtie = double_bowtie(&mp).unwrap();
        assert_eq!(constants(&bowtie), oracle_bowtie(&mp));
        assert!(is_lie(&constants(&bowtie)));
        let double = drinfeld_double(&bi, &int(1)).unwrap();
        assert_eq!(bowtie.constants(), double.algebra.constants());
    }
}

#[test]
fn sign_flipped_action_fails() {
    let bi = aff1_bialgebra();
    let (g, h) = (bi.algebra(), bi.dual());
    let report = check_matched_pair(g, h, &g.coadjoint_rep(), &h.coadjoint_rep().negated()).unwrap();
    assert!(!report.passed);
    assert!(report.first_witness().is_some());
    let flipped =
        bowtie(&constants(g), &constants(h), &actions(&g.coadjoint_rep()), &actions(&h.coadjoint_rep().negated()));
    assert!(!is_lie(&flipped));
    assert!(MatchedPair::new(g.clone(), h.clone(), g.coadjoint_rep(), h.coadjoint_rep().negated()).is_err());
}

#[test]
fn matched_pair_rejects_shape_mismatch() {
    let rho = Representation::zero(&sl2(), 3);
    let mu = Representation::zero(&aff1(), 3);
    assert!(matches!(check_matched_pair(&sl2(), &aff1(), &rho, &mu), Err(Error::DimensionMismatch(_))));
}

#[test]
fn minus_weight_identity_gives_trivial_first_action() {
    for w in weights() {
        for g in [aff1(), sl2()] {
            let n = g.dim();
            let rb = RotaBaxter::new(g.clone(), Matrix::scalar(n, &-&w), w.clone()).unwrap();
            let mp = mp_from_rb(&rb).unwrap();
            assert!(mp.rho().actions().iter().all(Matrix::is_zero));
            for i in 0..n {
                assert_eq!(rows(mp.mu().action(i)), ad(&constants(&g), i));
            }
        }
    }
}

#[test]
fn rota_baxter_matched_pairs() {
    for w in weights() {
        for rb in rb_examples(&w) {
            let mp = mp_from_rb(&rb).unwrap();
            let c = constants(rb.algebra());
            let b = rows(rb.operator());
            let n = c.len();
            assert_eq!(constants(mp.first()), descendent(&c, &b, &w));
            // rho(a) x = B[x, a] - [x, Ba].
            for a in 0..n {
                for x in 0..n {
                    let (ea, ex) = (unit(n, a), unit(n, x));
                    let expected = sub(&apply(&b, &bracket(&c, &ex, &ea)), &bracket(&c, &ex, &apply(&b, &ea)));
                    assert_eq!(mp.rho().action(a).column(x), expected);
                }
            }
            assert!(is_lie(&oracle_bowtie(&mp)));
        }
    }
}

/// `[.,.]_D` assembled clause by clause.
fn double_d_oracle(c: &Tensor, b: &Mat, w: &Scalar) -> Tensor {
    let n = c.len();
    let desc = descendent(c, b, w);
    let mut out = vec![vec![vec![Scalar::from_integer(0.into()); 2 * n]; 2 * n]; 2 * n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out[i][j][k] = desc[i][j][k].clone();
                out[n + i][n + j][n + k] = c[i][j][k].clone();
            }
            // [(0, x_i), (a_j, 0)] = ([x_i, a_j], [x_i, B a_j] - B[x_i, a_j]).
            let (x, a) = (unit(n, i), unit(n, j));
            let first = bracket(c, &x, &a);
            let second = sub(&bracket(c, &x, &apply(b, &a)), &apply(b, &first));
            for k in 0..n {
                out[n + i][j][k] = first[k].clone();
                out[j][n + i][k] = -&first[k];
                out[n + i][j][n + k] = second[k].clone();
                out[j][n + i][n + k] = -&second[k];
            }
        }
    }
    out
}

#[test]
fn double_d_matches_clauses_and_phi_is_an_isomorphism() {
    for w in weights() {
        for rb in rb_examples(&w) {
            let n = rb.dim();
            let c = constants(rb.algebra());
            let b = rows(rb.operator());
            let double = double_d(&rb).unwrap();
            let cd = constants(&double.algebra);
            assert_eq!(cd, double_d_oracle(&c, &b, &w));
            assert!(is_lie(&cd));
            assert_eq!(cd, oracle_bowtie(&mp_from_rb(&rb).unwrap()));

            let sum = constants(&direct_sum(rb.algebra(), rb.algebra()));
            let phi = rows(&double.phi);
            let mut pairs = 0;
            for p in 0..2 * n {
                for q in 0..2 * n {
                    let lhs = apply(&phi, &bracket(&cd, &unit(2 * n, p), &unit(2 * n, q)));
                    assert_eq!(lhs, bracket(&sum, &column(&phi, p), &column(&phi, q)));
                    pairs += 1;
                }
            }
            assert_eq!(pairs, 4 * n * n);
            let id = Matrix::identity(2 * n);
            assert_eq!(&double.phi * &double.phi_inverse, id);
            assert_eq!(&double.phi_inverse * &double.phi, id);
            // phi^{-1}(x, y) = ((x - y) / w, y - B(x - y) / w).
            let x: Vec<Scalar> = (0..n).map(|k| ratio(k as i64 + 1, 3)).collect();
            let y: Vec<Scalar> = (0..n).map(|k| int(2 - k as i64)).collect();
            let diff = scale(&sub(&x, &y), &w.recip());
            let mut expected = diff.clone();
            expected.extend(sub(&y, &apply(&b, &diff)));
            let mut xy = x.clone();
            xy.extend(y);
            assert_eq!(double.phi_inverse.apply(&xy), expected);
        }
    }
}

#[test]
fn abelian_double_d_is_abelian() {
    let rb = RotaBaxter::new(
        abelian(2),
        Matrix::from_rows(vec![vec![int(1), int(2)], vec![int(0), int(-1)]]).unwrap(),
        int(3),
    )
    .unwrap();
    let double = double_d(&rb).unwrap();
    assert!(double.algebra.is_abelian());
    assert!(double.phi.inverse().is_some());
}

#[test]
fn zero_weight_is_rejected() {
    let rb = RotaBaxter::new(sl2(), Matrix::zeros(3, 3), int(0)).unwrap();
    assert_eq!(mp_from_rb(&rb).unwrap_err(), Error::ZeroWeight);
    assert_eq!(double_d(&rb).unwrap_err(), Error::ZeroWeight);
}

#[test]
fn zero_actions_with_any_operators() {
    for w in weights() {
        let (g, h) = (aff1_rb(&w).unwrap(), RotaBaxter::new(sl2(), sl2_b(&w), w.clone()).unwrap());
        let mp = MatchedPair::new(
            g.algebra().clone(),
            h.algebra().clone(),
            Representation::zero(g.algebra(), 3),
            Representation::zero(h.algebra(), 2),
        )
        .unwrap();
        let report = check_rb_matched_pair(&mp, g.operator(), h.operator(), &w).unwrap();
        assert!(report.passed);
        let rbmp = RbMatchedPair::new(mp, g.operator().clone(), h.operator().clone(), w.clone()).unwrap();
        let desc = descendent_matched_pair(&rbmp).unwrap();
        assert!(desc.rho().actions().iter().all(Matrix::is_zero));
        assert!(desc.mu().actions().iter().all(Matrix::is_zero));
        assert_eq!(desc.first().constants(), g.descendent().unwrap().constants());
        assert_eq!(desc.second().constants(), h.descendent().unwrap().constants());
    }
}

#[test]
fn rota_baxter_gives_rb_matched_pair() {
    for w in weights() {
        for rb in rb_examples(&w) {
            let mp = mp_from_rb(&rb).unwrap();
            let b = rb.operator();
            let report = check_rb_matched_pair(&mp, b, b, &w).unwrap();
            assert!(report.passed, "{report}");
            let sum = block_diag(&rows(b), &rows(b));
            assert!(is_rb(&oracle_bowtie(&mp), &sum, &w));
        }
    }
}

#[test]
fn transposed_operator_on_sl2_bialgebra_fails() {
    let w = int(1);
    let rbbi = rb_bialgebra("sl2", &w).unwrap();
    let mp = rbbi.bialgebra().matched_pair();
    let b = rbbi.operator();
    let bt = b.transpose();
    let sum = block_diag(&rows(b), &rows(&bt));
    assert!(!is_rb(&oracle_bowtie(&mp), &sum, &w));
    let report = check_rb_matched_pair(&mp, b, &bt, &w).unwrap();
    assert!(!report.passed);
    assert!(report.find("routes-agree").unwrap().passed);
    assert!(report.first_witness().is_some());
    // With -w id - B* instead the pair is compatible.
    let good = tilde(&bt, &w);
    assert!(check_rb_matched_pair(&mp, b, &good, &w).unwrap().passed);
}

#[test]
fn descendent_matched_pair_on_aff1() {
    for w in weights() {
        let rbmp = rb_matched_pair("aff1", &w).unwrap();
        let desc = descendent_matched_pair(&rbmp).unwrap();
        let c = constants(rbmp.matched_pair().first());
        let b = rows(rbmp.first_operator());
        let bt = transpose(&b);
        // rho(x) xi = ad*_{Bx} xi - ad*_x B* xi.
        for i in 0..2 {
            let coad_bx: Mat =
                (0..2).map(|r| (0..2).map(|s| (0..2).map(|k| &b[k][i] * &coad(&c, k)[r][s]).sum()).collect()).collect();
            let coad_x_bt = mul(&coad(&c, i), &bt);
            let expected: Mat = (0..2).map(|r| (0..2).map(|s| &coad_bx[r][s] - &coad_x_bt[r][s]).collect()).collect();
            assert_eq!(rows(desc.rho().action(i)), expected);
        }
        let bowtie = double_bowtie(rbmp.matched_pair()).unwrap();
        let sum = rows(&rbmp.sum_operator());
        assert_eq!(oracle_bowtie(&desc), descendent(&constants(&bowtie), &sum, &w));
        assert!(is_rb(&oracle_bowtie(&desc), &sum, &w));
        assert!(check_descendent_double(&rbmp).unwrap().passed);
    }
}

#[test]
fn descendent_double_on_sl2() {
    for w in weights() {
        let rbmp = rb_matched_pair("sl2", &w).unwrap();
        let desc = descendent_matched_pair(&rbmp).unwrap();
        let bowtie = constants(&double_bowtie(rbmp.matched_pair()).unwrap());
        let sum = rows(&rbmp.sum_operator());
        assert_eq!(oracle_bowtie(&desc), descendent(&bowtie, &sum, &w));
        assert!(is_rb(&oracle_bowtie(&desc), &sum, &w));
    }
}

#[test]
fn psi_diagrams() {
    for w in weights() {
        let report = psi_diagram_check(&sl2_standard_r(), &w).unwrap();
        assert!(report.passed, "{report}");
        for name in BIALGEBRAS {
            let double = drinfeld_double_of(name, &w).unwrap();
            assert!(psi_diagram_check(&double.r, &w).unwrap().passed);
        }
    }
    let mut m = sl2_standard_r().components().clone();
    m.set(0, 0, int(1));
    let perturbed = RMatrix::new(sl2(), m).unwrap();
    assert!(matches!(psi_diagram_check(&perturbed, &int(1)), Err(Error::CheckFailed(_))));
}

#[test]
fn psi_on_drinfeld_double_uses_the_projections() {
    let double = drinfeld_double_of("aff1", &int(1)).unwrap();
    let r = &double.r;
    let n = 2;
    let swap = rotabaxter::bialgebra::swap(n);
    // On 𝔡* written as (g*, g) coordinates: r_+ keeps the x part, r_- negates the ξ part.
    let plus = &r.r_plus() * &swap;
    let minus = &r.r_minus() * &swap;
    assert_eq!(plus, Matrix::block_diag(&Matrix::identity(n), &Matrix::zeros(n, n)));
    assert_eq!(minus, Matrix::block_diag(&Matrix::zeros(n, n), &Matrix::scalar(n, &int(-1))));
}

#[test]
fn sl2_quadratic_structure_matches_mp_from_rb() {
    let qrb = sl2_quadratic_rb(&int(1)).unwrap();
    let mp = mp_from_rb(qrb.rota_baxter()).unwrap();
    let d = double_d(qrb.rota_baxter()).unwrap();
    assert_eq!(double_bowtie(&mp).unwrap().constants(), d.algebra.constants());
}

fn catalog_pairs() -> Vec<(MatchedPair, Matrix, Matrix, Scalar)> {
    let mut out = Vec::new();
    for w in weights() {
        for name in BIALGEBRAS {
            let rbmp = rb_matched_pair(name, &w).unwrap();
            out.push((
                rbmp.matched_pair().clone(),
                rbmp.first_operator().clone(),
                rbmp.second_operator().clone(),
                w.clone(),
            ));
        }
        for rb in rb_examples(&w) {
            let mp = mp_from_rb(&rb).unwrap();
            out.push((mp, rb.operator().clone(), rb.operator().clone(), w.clone()));
        }
    }
    out
}

fn routes_agree(mp: &MatchedPair, b: &Matrix, c: &Matrix, w: &Scalar) -> bool {
    let report = check_rb_matched_pair(mp, b, c, w).unwrap();
    let oracle = is_rb(&oracle_bowtie(mp), &block_diag(&rows(b), &rows(c)), w);
    report.find("routes-agree").unwrap().passed && report.passed == oracle
}

#[test]
fn rb_matched_pair_agrees_with_bowtie_on_catalog() {
    for (mp, b, c, w) in catalog_pairs() {
        assert!(routes_agree(&mp, &b, &c, &w));
        assert!(check_rb_matched_pair(&mp, &b, &c, &w).unwrap().passed);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn rb_matched_pair_agrees_with_bowtie_on_mutations(
        index in 0usize..15,
        second in any::<bool>(),
        i in 0usize..3,
        j in 0usize..3,
        delta in nonzero_rational(),
    ) {
        let pairs = catalog_pairs();
        let (mp, mut b, mut c, w) = pairs[index % pairs.len()].clone();
        let target = if second { &mut c } else { &mut b };
        let n = target.rows();
        let (i, j) = (i % n, j % n);
        let v = target.get(i, j) + &delta;
        target.set(i, j, v);
        prop_assert!(routes_agree(&mp, &b, &c, &w));
    }

    #[test]
    fn bowtie_restricts_to_the_summands(index in 0usize..15) {
        let pairs = catalog_pairs();
        let (mp, ..) = &pairs[index % pairs.len()];
        let bowtie = constants(&double_bowtie(mp).unwrap());
        let (n, m) = (mp.first().dim(), mp.second().dim());
        let (cg, ch) = (constants(mp.first()), constants(mp.second()));
        for i in 0..n {
            for j in 0..n {
                prop_assert_eq!(&bowtie[i][j][..n], &cg[i][j][..]);
                prop_assert!(is_zero(&bowtie[i][j][n..]));
            }
        }
        for a in 0..m {
            for b in 0..m {
                prop_assert_eq!(&bowtie[n + a][n + b][n..], &ch[a][b][..]);
                prop_assert!(is_zero(&bowtie[n + a][n + b][..n]));
            }
        }
    }
}

#[test]
fn rb_matched_pair_rejects_bad_shapes() {
    let rbmp = rb_matched_pair("aff1", &int(1)).unwrap();
    let mp = rbmp.matched_pair();
    assert!(check_rb_matched_pair(mp, &Matrix::zeros(3, 3), rbmp.second_operator(), &int(1)).is_err());
}
