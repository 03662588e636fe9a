//! Validated example structures. Every constructor runs the relevant checks
//! and every [`CatalogEntry`] can re-verify itself against its manifest.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{direct_sum, LieAlgebra};
use crate::bialgebra::{
    bialgebra_iso_i, check_ad_invariance, check_cybe, check_lie_bialgebra, check_rb_bialgebra, drinfeld_double,
    dual_bracket_r, factorizable_from_quadratic_rb, matrix_equality, quadratic_rb_from_factorizable, DrinfeldDouble,
    LieBialgebra, RMatrix, RbLieBialgebra,
};
use crate::error::{Error, Result};
use crate::manin::{
    check_manin_triple, check_rb_manin_triple, manin_from_rb_bialgebra, projection_operator, rb_bialgebra_from_manin,
    ManinTriple, RbManinTriple,
};
use crate::matched::{check_descendent_double, check_rb_matched_pair, double_d, RbMatchedPair};
use crate::matrix::Matrix;
use crate::realify::RealifiedSl;
use crate::report::CheckReport;
use crate::rota_baxter::{check_quadratic, check_rota_baxter, descendent, tilde, QuadraticRotaBaxter, RotaBaxter};
use crate::scalar::{int, ratio, Scalar};

pub fn abelian(n: usize) -> LieAlgebra {
    LieAlgebra::abelian(n)
}

/// `[x, y] = y`.
pub fn aff1() -> LieAlgebra {
    LieAlgebra::from_brackets(&["x", "y"], &[(0, 1, int(1), 1)]).expect("aff(1)")
}

/// `[h, e] = 2e`, `[h, f] = -2f`, `[e, f] = h`.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::from_brackets(&["h", "e", "f"], &[(0, 1, int(2), 1), (0, 2, int(-2), 2), (1, 2, int(1), 0)])
        .expect("sl2")
}

/// `r = e ⊗ f + h ⊗ h / 4`.
pub fn sl2_standard_r() -> RMatrix {
    let mut m = Matrix::zeros(3, 3);
    m.set(1, 2, int(1));
    m.set(0, 0, ratio(1, 4));
    RMatrix::new(sl2(), m).expect("standard r")
}

/// The quadratic Rota-Baxter structure of [`sl2_standard_r`]:
/// `B = diag(-w/2, -w, 0)` and the trace form.
pub fn sl2_quadratic_rb(weight: &Scalar) -> Result<QuadraticRotaBaxter> {
    quadratic_rb_from_factorizable(&sl2_standard_r(), weight)
}

/// `B = diag(0, -w)` on `aff(1)`.
pub fn aff1_rb(weight: &Scalar) -> Result<RotaBaxter> {
    RotaBaxter::new(aff1(), Matrix::diagonal(&[int(0), -weight]), weight.clone())
}

fn dual_of(algebra: &LieAlgebra, dual: LieAlgebra) -> LieAlgebra {
    let names = algebra.names().iter().map(|n| format!("{n}*")).collect();
    dual.renamed(names).expect("dual names")
}

/// `abelian(2)` with abelian dual.
pub fn abelian2_bialgebra() -> LieBialgebra {
    let g = abelian(2);
    let dual = dual_of(&g, abelian(2));
    LieBialgebra::new(g, dual).expect("abelian bialgebra")
}

/// `aff(1)` with `[x*, y*] = y*`.
pub fn aff1_bialgebra() -> LieBialgebra {
    let g = aff1();
    let dual = dual_of(&g, aff1());
    LieBialgebra::new(g, dual).expect("aff(1) bialgebra")
}

/// `(sl2, sl2*_r)` for the standard `r`.
pub fn sl2_bialgebra() -> LieBialgebra {
    let r = sl2_standard_r();
    let dual = dual_bracket_r(&r).expect("dual bracket");
    LieBialgebra::new(r.algebra().clone(), dual).expect("sl2 bialgebra")
}

pub const BIALGEBRAS: [&str; 3] = ["abelian2", "aff1", "sl2"];

pub fn bialgebra(name: &str) -> Result<LieBialgebra> {
    match name {
        "abelian2" => Ok(abelian2_bialgebra()),
        "aff1" => Ok(aff1_bialgebra()),
        "sl2" => Ok(sl2_bialgebra()),
        _ => Err(Error::UnknownEntry(name.into())),
    }
}

/// Rota-Baxter bialgebras on the catalog bialgebras: zero on `abelian(2)`,
/// `diag(0, -w)` on `aff(1)`, the factorizable operator on `sl2`.
pub fn rb_bialgebra(name: &str, weight: &Scalar) -> Result<RbLieBialgebra> {
    let bi = bialgebra(name)?;
    let operator = match name {
        "abelian2" => Matrix::zeros(2, 2),
        "aff1" => aff1_rb(weight)?.operator().clone(),
        _ => sl2_quadratic_rb(weight)?.operator().clone(),
    };
    RbLieBialgebra::new(bi, operator, weight.clone())
}

/// `((g, B), (g*, -w id - B*))` with coadjoint actions.
pub fn rb_matched_pair(name: &str, weight: &Scalar) -> Result<RbMatchedPair> {
    let rbbi = rb_bialgebra(name, weight)?;
    RbMatchedPair::new(rbbi.bialgebra().matched_pair(), rbbi.operator().clone(), rbbi.dual_operator(), weight.clone())
}

pub fn drinfeld_double_of(name: &str, weight: &Scalar) -> Result<DrinfeldDouble> {
    drinfeld_double(&bialgebra(name)?, weight)
}

pub fn realified_sl_n_complex(n: usize) -> Result<RealifiedSl> {
    supported(n)?;
    RealifiedSl::new(n)
}

fn supported(n: usize) -> Result<()> {
    if n == 2 || n == 3 {
        Ok(())
    } else {
        Err(Error::UnsupportedSize(n))
    }
}

/// `(sl(n, C), Im tr)` split as `su(n) (+) sb(n, C)`, with `𝓑 = 0` on
/// `su(n)` and `-w id` on `sb(n, C)`.
pub fn iwasawa_triple(n: usize, weight: &Scalar) -> Result<RbManinTriple> {
    let sl = realified_sl_n_complex(n)?;
    let (su, su_names) = sl.su_injection();
    let (sb, sb_names) = sl.sb_injection();
    let triple = ManinTriple::with_names(sl.algebra(), sl.im_trace_form(), su, sb, su_names, sb_names)?;
    let operator = projection_operator(&triple, weight);
    RbManinTriple::new(triple, operator, weight.clone())
}

/// `sl(n, C) (+) sl(n, C)` with `Im tr(X1 X2) - Im tr(Y1 Y2)`, split as the
/// diagonal and `{(D + U, -D + L)}` with `D` diagonal, `U` strictly upper,
/// `L` strictly lower, and `𝓑` minus `w` times the projection onto the
/// second summand.
pub fn direct_sum_sl_n_triple(n: usize, weight: &Scalar) -> Result<RbManinTriple> {
    let sl = realified_sl_n_complex(n)?;
    let d = sl.dim();
    let g = sl.algebra();
    let ambient = direct_sum(&g, &g);
    let im = sl.im_trace_form();
    let form = Matrix::block_diag(&im, &im.scale(&int(-1)));
    let id = Matrix::identity(d);
    let diagonal = Matrix::vstack(&id, &id);
    let mut second = Matrix::zeros(2 * d, d);
    let mut second_names = Vec::with_capacity(d);
    for (k, element) in sl.elements().iter().enumerate() {
        let name = element.name();
        match *element {
            crate::realify::BasisElement::Diagonal { .. } => {
                second.set(k, k, int(1));
                second.set(d + k, k, int(-1));
                second_names.push(format!("({name},-{name})"));
            }
            crate::realify::BasisElement::OffDiagonal { j, k: col, .. } if j < col => {
                second.set(k, k, int(1));
                second_names.push(format!("({name},0)"));
            }
            _ => {
                second.set(d + k, k, int(1));
                second_names.push(format!("(0,{name})"));
            }
        }
    }
    let first_names = sl.names().iter().map(|x| format!("({x},{x})")).collect();
    let triple = ManinTriple::with_names(ambient, form, diagonal, second, first_names, second_names)?;
    let operator = projection_operator(&triple, weight);
    RbManinTriple::new(triple, operator, weight.clone())
}

/// The object held by a catalog entry.
#[derive(Clone, Debug)]
pub enum CatalogObject {
    Algebra(LieAlgebra),
    RotaBaxter(RotaBaxter),
    Factorizable { r: RMatrix, quadratic: QuadraticRotaBaxter },
    RbBialgebra(RbLieBialgebra),
    DrinfeldDouble(DrinfeldDouble),
    RbManin(RbManinTriple),
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub parameters: Vec<(String, String)>,
    pub object: CatalogObject,
}

impl CatalogEntry {
    fn new(name: &str, parameters: &[(&str, String)], object: CatalogObject) -> Self {
        CatalogEntry {
            name: name.into(),
            parameters: parameters.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            object,
        }
    }

    /// Names of the checks [`CatalogEntry::verify`] runs.
    pub fn manifest(&self) -> &'static [&'static str] {
        match self.object {
            CatalogObject::Algebra(_) => &["jacobi"],
            CatalogObject::RotaBaxter(_) => &["jacobi", "rota-baxter", "rota-baxter-tilde", "descendent", "double-d"],
            CatalogObject::Factorizable { .. } => &[
                "cybe",
                "ad-invariance",
                "factorizable",
                "rota-baxter",
                "quadratic",
                "r-round-trip",
                "rb-round-trip",
                "bialgebra-iso-i",
            ],
            CatalogObject::RbBialgebra(_) => {
                &["lie-bialgebra", "rb-bialgebra", "rb-matched-pair", "descendent-double", "manin-round-trip"]
            }
            CatalogObject::DrinfeldDouble(_) => &["cybe", "ad-invariance", "i-is-swap", "rb-bialgebra"],
            CatalogObject::RbManin(_) => &["manin-triple", "rb-manin-triple", "bialgebra-from-manin"],
        }
    }

    /// Runs the manifest.
    pub fn verify(&self) -> Result<CheckReport> {
        let items = match &self.object {
            CatalogObject::Algebra(g) => vec![g.jacobi_report()],
            CatalogObject::RotaBaxter(rb) => {
                let (g, b, w) = (rb.algebra(), rb.operator(), rb.weight());
                let double = double_d(rb)?;
                vec![
                    g.jacobi_report(),
                    check_rota_baxter(g, b, w)?,
                    named("rota-baxter-tilde", check_rota_baxter(g, &tilde(b, w), w)?),
                    named("descendent", descendent(g, b, w)?.jacobi_report()),
                    named("double-d", double.algebra.jacobi_report()),
                ]
            }
            CatalogObject::Factorizable { r, quadratic } => {
                let w = quadratic.weight();
                let again = quadratic_rb_from_factorizable(&factorizable_from_quadratic_rb(quadratic)?, w)?;
                vec![
                    check_cybe(r),
                    named("ad-invariance", check_ad_invariance(r)),
                    pass_if("factorizable", r.is_factorizable()),
                    check_rota_baxter(quadratic.algebra(), quadratic.operator(), w)?,
                    check_quadratic(quadratic.algebra(), quadratic.operator(), quadratic.form(), w)?,
                    matrix_equality(
                        "r-round-trip",
                        factorizable_from_quadratic_rb(quadratic)?.components(),
                        r.components(),
                    ),
                    pass_if("rb-round-trip", &again == quadratic),
                    bialgebra_iso_i(r, w)?,
                ]
            }
            CatalogObject::RbBialgebra(rbbi) => {
                let w = rbbi.weight();
                let rbmp = RbMatchedPair::new(
                    rbbi.bialgebra().matched_pair(),
                    rbbi.operator().clone(),
                    rbbi.dual_operator(),
                    w.clone(),
                )?;
                let mp = rbmp.matched_pair();
                let back = rb_bialgebra_from_manin(&manin_from_rb_bialgebra(rbbi)?)?;
                vec![
                    check_lie_bialgebra(rbbi.algebra(), rbbi.dual())?,
                    check_rb_bialgebra(rbbi.bialgebra(), rbbi.operator(), w)?,
                    named(
                        "rb-matched-pair",
                        check_rb_matched_pair(mp, rbmp.first_operator(), rbmp.second_operator(), w)?,
                    ),
                    check_descendent_double(&rbmp)?,
                    pass_if("manin-round-trip", &back == rbbi),
                ]
            }
            CatalogObject::DrinfeldDouble(double) => {
                let rbbi = &double.rb_bialgebra;
                vec![
                    check_cybe(&double.r),
                    named("ad-invariance", check_ad_invariance(&double.r)),
                    matrix_equality(
                        "i-is-swap",
                        &double.r.symmetric_part(),
                        &crate::bialgebra::swap(double.algebra.dim() / 2),
                    ),
                    check_rb_bialgebra(rbbi.bialgebra(), rbbi.operator(), rbbi.weight())?,
                ]
            }
            CatalogObject::RbManin(rbmt) => {
                let t = rbmt.triple();
                vec![
                    check_manin_triple(t.ambient(), t.form().matrix(), t.first_injection(), t.second_injection())?,
                    check_rb_manin_triple(t, rbmt.operator(), rbmt.weight())?,
                    named("bialgebra-from-manin", pass_if("", rb_bialgebra_from_manin(rbmt).is_ok())),
                ]
            }
        };
        Ok(CheckReport::all(&self.name, items))
    }
}

fn named(name: &str, report: CheckReport) -> CheckReport {
    CheckReport { name: name.into(), ..report }
}

fn pass_if(name: &str, ok: bool) -> CheckReport {
    if ok {
        CheckReport::pass(name)
    } else {
        CheckReport::fail_plain(name)
    }
}

/// Names accepted by [`entry`].
pub const ENTRIES: [&str; 16] = [
    "abelian2",
    "aff1",
    "sl2",
    "aff1_rb",
    "sl2_standard_r",
    "abelian2_bialgebra",
    "aff1_bialgebra",
    "sl2_bialgebra",
    "drinfeld_double_abelian2",
    "drinfeld_double_aff1",
    "drinfeld_double_sl2",
    "realified_sl2c",
    "iwasawa_sl2c",
    "iwasawa_sl3c",
    "direct_sum_sl2c",
    "direct_sum_sl3c",
];

/// Builds a named entry at the given weight (ignored by weightless entries).
pub fn entry(name: &str, weight: &Scalar) -> Result<CatalogEntry> {
    let w = || vec![("weight", crate::scalar::format(weight))];
    let obj = match name {
        "abelian2" => return Ok(CatalogEntry::new(name, &[], CatalogObject::Algebra(abelian(2)))),
        "aff1" => return Ok(CatalogEntry::new(name, &[], CatalogObject::Algebra(aff1()))),
        "sl2" => return Ok(CatalogEntry::new(name, &[], CatalogObject::Algebra(sl2()))),
        "realified_sl2c" => {
            let g = realified_sl_n_complex(2)?.algebra();
            return Ok(CatalogEntry::new(name, &[("n", "2".into())], CatalogObject::Algebra(g)));
        }
        "aff1_rb" => CatalogObject::RotaBaxter(aff1_rb(weight)?),
        "sl2_standard_r" => CatalogObject::Factorizable { r: sl2_standard_r(), quadratic: sl2_quadratic_rb(weight)? },
        "abelian2_bialgebra" => CatalogObject::RbBialgebra(rb_bialgebra("abelian2", weight)?),
        "aff1_bialgebra" => CatalogObject::RbBialgebra(rb_bialgebra("aff1", weight)?),
        "sl2_bialgebra" => CatalogObject::RbBialgebra(rb_bialgebra("sl2", weight)?),
        "drinfeld_double_abelian2" => CatalogObject::DrinfeldDouble(drinfeld_double_of("abelian2", weight)?),
        "drinfeld_double_aff1" => CatalogObject::DrinfeldDouble(drinfeld_double_of("aff1", weight)?),
        "drinfeld_double_sl2" => CatalogObject::DrinfeldDouble(drinfeld_double_of("sl2", weight)?),
        "iwasawa_sl2c" => CatalogObject::RbManin(iwasawa_triple(2, weight)?),
        "iwasawa_sl3c" => CatalogObject::RbManin(iwasawa_triple(3, weight)?),
        "direct_sum_sl2c" => CatalogObject::RbManin(direct_sum_sl_n_triple(2, weight)?),
        "direct_sum_sl3c" => CatalogObject::RbManin(direct_sum_sl_n_triple(3, weight)?),
        _ => return Err(Error::UnknownEntry(name.into())),
    };
    Ok(CatalogEntry::new(name, &w(), obj))
}
