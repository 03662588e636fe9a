use std::fs;
use std::path::Path;

use rotabaxter::algebra::check_jacobi_constants;
use rotabaxter::bialgebra::{
    check_cybe, check_lie_bialgebra, check_rb_bialgebra, descendent_tower, drinfeld_double, dual_bracket_r,
    factorizable_from_quadratic_rb, quadratic_rb_from_factorizable,
};
use rotabaxter::catalog::{self, iwasawa_triple};
use rotabaxter::group::{
    check_differential, check_factorization, check_iwasawa_factors, check_rb_group, iwasawa_operator, sl_basis,
    to_float, SlSampler,
};
use rotabaxter::manin::{check_manin_triple, check_rb_manin_triple, manin_from_rb_bialgebra, rb_bialgebra_from_manin};
use rotabaxter::matched::{check_matched_pair, check_rb_matched_pair, double_d, mp_from_rb};
use rotabaxter::rota_baxter::{check_quadratic, check_rota_baxter, iterated_descendent, tilde};
use rotabaxter::scalar::{self, Scalar};
use rotabaxter::{
    BilinearForm, CheckReport, Error, LieAlgebra, LieBialgebra, ManinTriple, MatchedPair, Matrix, QuadraticRotaBaxter,
    RMatrix, RbLieBialgebra, RbManinTriple, RotaBaxter,
};
use serde_json::{json, Map, Value};

use crate::export::export_entry;
use crate::file::{AlgebraFile, ManinBlock, OperatorBlock};
use crate::report::ReportFile;
use crate::{BuildKind, CheckKind, Cli, CliError, Command, GroupKind};

/// What a command produced.
#[derive(Debug)]
pub enum Output {
    Report(ReportFile),
    File(Box<AlgebraFile>),
    Text(String),
}

impl Output {
    pub fn render(&self) -> String {
        match self {
            Output::Report(r) => r.to_json(),
            Output::File(f) => f.to_json(),
            Output::Text(t) => t.clone(),
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            Output::Report(r) if !r.pass => 1,
            _ => 0,
        }
    }
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Check { path, which } => {
            let file = read_file(path)?;
            let report = match check(&file, *which) {
                Ok(report) => report,
                // A structure that fails validation while being assembled is
                // a failed check, not an input error.
                Err(CliError::Core(Error::CheckFailed(report))) => *report,
                Err(e) => return Err(e),
            };
            let inputs = inputs([("path", json!(path.display().to_string())), ("which", json!(check_name(*which)))]);
            Ok(Output::Report(ReportFile::new(&format!("check {}", check_name(*which)), inputs, &report)))
        }
        Command::Build { path, what, weight } => {
            let file = read_file(path)?;
            let weight = parse_weight(weight)?;
            Ok(Output::File(Box::new(build(file, what, &weight)?)))
        }
        Command::Group { what } => group(what).map(Output::Report),
        Command::Export { entry, weight, list } => {
            if *list {
                return Ok(Output::Text(catalog::ENTRIES.iter().map(|e| format!("{e}\n")).collect()));
            }
            let Some(name) = entry else {
                return Err(CliError::Usage("export needs an entry name or --list".into()));
            };
            Ok(Output::File(Box::new(export_entry(name, &parse_weight(weight)?)?)))
        }
    }
}

pub fn read_file(path: &Path) -> Result<AlgebraFile, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    AlgebraFile::from_json(&text).map_err(|source| CliError::File { path: path.to_path_buf(), source })
}

fn parse_weight(text: &str) -> Result<Scalar, CliError> {
    scalar::parse(text).map_err(|e| CliError::Usage(format!("--weight: {e}")))
}

fn inputs<const N: usize>(pairs: [(&str, Value); N]) -> Map<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn check_name(which: CheckKind) -> &'static str {
    match which {
        CheckKind::Jacobi => "jacobi",
        CheckKind::Rb => "rb",
        CheckKind::Quadratic => "quadratic",
        CheckKind::Cybe => "cybe",
        CheckKind::Quasitriangular => "quasitriangular",
        CheckKind::Bialgebra => "bialgebra",
        CheckKind::RbBialgebra => "rb-bialgebra",
        CheckKind::MatchedPair => "matched-pair",
        CheckKind::RbMatchedPair => "rb-matched-pair",
        CheckKind::Manin => "manin",
        CheckKind::RbManin => "rb-manin",
    }
}

fn operator<'a>(file: &'a AlgebraFile, command: &'static str) -> Result<&'a OperatorBlock, CliError> {
    file.operator.as_ref().ok_or(CliError::MissingBlock { command, block: "operator" })
}

fn form<'a>(file: &'a AlgebraFile, command: &'static str) -> Result<&'a Matrix, CliError> {
    file.form.as_ref().ok_or(CliError::MissingBlock { command, block: "form" })
}

fn rmatrix(file: &AlgebraFile, command: &'static str) -> Result<RMatrix, CliError> {
    let r = file.rmatrix.as_ref().ok_or(CliError::MissingBlock { command, block: "rmatrix" })?;
    Ok(RMatrix::new(file.algebra()?, r.clone())?)
}

fn manin<'a>(file: &'a AlgebraFile, command: &'static str) -> Result<&'a ManinBlock, CliError> {
    file.manin.as_ref().ok_or(CliError::MissingBlock { command, block: "manin" })
}

/// The dual bracket from `dual_brackets`, or else the one induced by
/// `rmatrix`.
fn dual(file: &AlgebraFile, command: &'static str) -> Result<LieAlgebra, CliError> {
    match file.dual() {
        Some(dual) => Ok(dual?),
        None if file.rmatrix.is_some() => {
            let induced = dual_bracket_r(&rmatrix(file, command)?)?;
            let names = file.basis.iter().map(|n| format!("{n}*")).collect();
            Ok(induced.renamed(names)?)
        }
        None => Err(CliError::MissingBlock { command, block: "dual_brackets" }),
    }
}

fn manin_triple(file: &AlgebraFile, command: &'static str) -> Result<ManinTriple, CliError> {
    let m = manin(file, command)?;
    Ok(ManinTriple::new(file.algebra()?, form(file, command)?.clone(), m.first.clone(), m.second.clone())?)
}

pub fn check(file: &AlgebraFile, which: CheckKind) -> Result<CheckReport, CliError> {
    let name = check_name(which);
    let report = match which {
        CheckKind::Jacobi => CheckReport { name: "jacobi".into(), ..check_jacobi_constants(&file.constants) },
        CheckKind::Rb => {
            let op = operator(file, name)?;
            check_rota_baxter(&file.algebra()?, &op.matrix, &op.weight)?
        }
        CheckKind::Quadratic => {
            let op = operator(file, name)?;
            let form = BilinearForm::new(form(file, name)?.clone())?;
            check_quadratic(&file.algebra()?, &op.matrix, &form, &op.weight)?
        }
        CheckKind::Cybe => check_cybe(&rmatrix(file, name)?),
        CheckKind::Quasitriangular => rmatrix(file, name)?.quasitriangular_report(),
        CheckKind::Bialgebra => check_lie_bialgebra(&file.algebra()?, &dual(file, name)?)?,
        CheckKind::RbBialgebra => {
            let op = operator(file, name)?;
            let bialgebra = LieBialgebra::new(file.algebra()?, dual(file, name)?)?;
            check_rb_bialgebra(&bialgebra, &op.matrix, &op.weight)?
        }
        CheckKind::MatchedPair => {
            let (g, d) = (file.algebra()?, dual(file, name)?);
            check_matched_pair(&g, &d, &g.coadjoint_rep(), &d.coadjoint_rep())?
        }
        CheckKind::RbMatchedPair => {
            let op = operator(file, name)?;
            let (g, d) = (file.algebra()?, dual(file, name)?);
            let (rho, mu) = (g.coadjoint_rep(), d.coadjoint_rep());
            let mp = MatchedPair::new(g, d, rho, mu)?;
            let dual_operator = tilde(&op.matrix.transpose(), &op.weight);
            check_rb_matched_pair(&mp, &op.matrix, &dual_operator, &op.weight)?
        }
        CheckKind::Manin => {
            let m = manin(file, name)?;
            check_manin_triple(&file.algebra()?, form(file, name)?, &m.first, &m.second)?
        }
        CheckKind::RbManin => {
            let op = operator(file, name)?;
            check_rb_manin_triple(&manin_triple(file, name)?, &op.matrix, &op.weight)?
        }
    };
    Ok(report)
}

fn rota_baxter(file: &AlgebraFile, command: &'static str) -> Result<RotaBaxter, CliError> {
    let op = operator(file, command)?;
    Ok(RotaBaxter::new(file.algebra()?, op.matrix.clone(), op.weight.clone())?)
}

fn rb_bialgebra(file: &AlgebraFile, command: &'static str) -> Result<RbLieBialgebra, CliError> {
    let op = operator(file, command)?;
    let bialgebra = LieBialgebra::new(file.algebra()?, dual(file, command)?)?;
    Ok(RbLieBialgebra::new(bialgebra, op.matrix.clone(), op.weight.clone())?)
}

/// A fresh file for a newly built algebra.
fn fresh(name: String, algebra: &LieAlgebra) -> AlgebraFile {
    AlgebraFile::from_algebra(&name, algebra)
}

pub fn build(file: AlgebraFile, what: &BuildKind, weight: &Scalar) -> Result<AlgebraFile, CliError> {
    let out = match what {
        BuildKind::Descendent => {
            let rb = rota_baxter(&file, "descendent")?.on_descendent()?;
            fresh(format!("{}_B", file.name), rb.algebra()).with_operator(rb.operator().clone(), rb.weight().clone())
        }
        BuildKind::DoubleD => {
            let double = double_d(&rota_baxter(&file, "double-d")?)?;
            fresh(format!("{}_D", file.name), &double.algebra)
        }
        BuildKind::Bowtie => {
            // The bialgebra pair (g, g*) when a dual is present, otherwise
            // the pair (g, g) induced by the operator.
            let mp = if file.dual_constants.is_some() || file.operator.is_none() {
                let (g, d) = (file.algebra()?, dual(&file, "bowtie")?);
                let (rho, mu) = (g.coadjoint_rep(), d.coadjoint_rep());
                MatchedPair::new(g, d, rho, mu)?
            } else {
                mp_from_rb(&rota_baxter(&file, "bowtie")?)?
            };
            fresh(format!("{}_bowtie", file.name), &mp.bowtie()?)
        }
        BuildKind::DrinfeldDouble => {
            let w = file.operator.as_ref().map_or(weight, |op| &op.weight).clone();
            let bialgebra = LieBialgebra::new(file.algebra()?, dual(&file, "drinfeld-double")?)?;
            let double = drinfeld_double(&bialgebra, &w)?;
            let rbbi = &double.rb_bialgebra;
            fresh(format!("{}_double", file.name), &double.algebra)
                .with_rmatrix(double.r.components().clone())
                .with_dual(&double.dual)
                .with_operator(rbbi.operator().clone(), w)
        }
        BuildKind::RbFromR => {
            let r = rmatrix(&file, "rb-from-r")?;
            let qrb = quadratic_rb_from_factorizable(&r, weight)?;
            let mut out = file.with_operator(qrb.operator().clone(), weight.clone());
            out.form = Some(qrb.form().matrix().clone());
            out.rmatrix = None;
            out
        }
        BuildKind::RFromRb => {
            let op = operator(&file, "r-from-rb")?;
            let form = form(&file, "r-from-rb")?;
            let qrb =
                QuadraticRotaBaxter::from_parts(file.algebra()?, op.matrix.clone(), form.clone(), op.weight.clone())?;
            let r = factorizable_from_quadratic_rb(&qrb)?;
            let mut out = file.with_rmatrix(r.components().clone());
            out.operator = None;
            out.form = None;
            out
        }
        BuildKind::ManinFromBialgebra => {
            let rbmt = manin_from_rb_bialgebra(&rb_bialgebra(&file, "manin-from-bialgebra")?)?;
            let triple = rbmt.triple();
            AlgebraFile::from_algebra(&file.name, triple.ambient())
                .with_form(triple.form().matrix().clone())
                .with_manin(triple.first_injection().clone(), triple.second_injection().clone())
                .with_operator(rbmt.operator().clone(), rbmt.weight().clone())
        }
        BuildKind::BialgebraFromManin => {
            let op = operator(&file, "bialgebra-from-manin")?;
            let rbmt =
                RbManinTriple::new(manin_triple(&file, "bialgebra-from-manin")?, op.matrix.clone(), op.weight.clone())?;
            let rbbi = rb_bialgebra_from_manin(&rbmt)?;
            AlgebraFile::from_algebra(&file.name, rbbi.algebra())
                .with_dual(rbbi.dual())
                .with_operator(rbbi.operator().clone(), rbbi.weight().clone())
        }
        BuildKind::Tower { k } => {
            // With an r-matrix the operator is the one it induces, and the
            // whole tower of isomorphisms is verified first.
            let (g, op) = if file.rmatrix.is_some() {
                let r = rmatrix(&file, "tower")?;
                let tower = descendent_tower(&r, weight, *k)?;
                if !tower.passed {
                    return Err(Error::CheckFailed(Box::new(tower)).into());
                }
                let qrb = quadratic_rb_from_factorizable(&r, weight)?;
                (r.algebra().clone(), OperatorBlock { matrix: qrb.operator().clone(), weight: weight.clone() })
            } else {
                (file.algebra()?, operator(&file, "tower")?.clone())
            };
            let level = iterated_descendent(&g, &op.matrix, &op.weight, *k)?;
            fresh(format!("{}_B{k}", file.name), &level).with_operator(op.matrix, op.weight)
        }
    };
    Ok(out)
}

fn supported(n: usize) -> Result<(), CliError> {
    if n == 2 || n == 3 {
        Ok(())
    } else {
        Err(Error::UnsupportedSize(n).into())
    }
}

fn group(what: &GroupKind) -> Result<ReportFile, CliError> {
    let (command, inputs, report) = match what {
        GroupKind::CheckRb { n, sampling, tol } => {
            supported(*n)?;
            let op = iwasawa_operator(*n)?;
            let pairs = SlSampler::new(*n, sampling.seed)?.pairs(sampling.samples);
            let report = check_rb_group(&op, &pairs, *tol)?.with_seed(sampling.seed);
            let inputs = inputs([("n", json!(n)), ("samples", json!(sampling.samples)), ("tol", json!(tol))]);
            ("group check-rb", inputs, report)
        }
        GroupKind::Factorize { n, sampling, tol } => {
            supported(*n)?;
            let op = iwasawa_operator(*n)?;
            let samples = SlSampler::new(*n, sampling.seed)?.samples(sampling.samples);
            let report = CheckReport::all(
                "factorize",
                vec![check_factorization(&op, &samples, *tol)?, check_iwasawa_factors(&samples, *tol)?],
            )
            .with_seed(sampling.seed);
            let inputs = inputs([("n", json!(n)), ("samples", json!(sampling.samples)), ("tol", json!(tol))]);
            ("group factorize", inputs, report)
        }
        GroupKind::Differentiate { n, seed, h } => {
            supported(*n)?;
            let op = iwasawa_operator(*n)?;
            let expected = to_float(iwasawa_triple(*n, &scalar::one())?.operator());
            let report = check_differential(&op, &sl_basis(*n), &expected, *h)?.with_seed(*seed);
            ("group differentiate", inputs([("n", json!(n)), ("h", json!(h))]), report)
        }
    };
    Ok(ReportFile::new(command, inputs, &report))
}
