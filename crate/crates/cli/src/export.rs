//! Catalog entries as algebra files.

use rotabaxter::catalog::{self, CatalogObject};
use rotabaxter::scalar::Scalar;

use crate::file::AlgebraFile;
use crate::CliError;

/// The file for a catalog entry. Factorizable entries carry only their
/// r-matrix; `build rb-from-r` recovers the operator and form.
pub fn export_entry(name: &str, weight: &Scalar) -> Result<AlgebraFile, CliError> {
    let entry = catalog::entry(name, weight)?;
    let file = match &entry.object {
        CatalogObject::Algebra(g) => AlgebraFile::from_algebra(name, g),
        CatalogObject::RotaBaxter(rb) => {
            AlgebraFile::from_algebra(name, rb.algebra()).with_operator(rb.operator().clone(), rb.weight().clone())
        }
        CatalogObject::Factorizable { r, .. } => {
            AlgebraFile::from_algebra(name, r.algebra()).with_rmatrix(r.components().clone())
        }
        CatalogObject::RbBialgebra(rbbi) => AlgebraFile::from_algebra(name, rbbi.algebra())
            .with_dual(rbbi.dual())
            .with_operator(rbbi.operator().clone(), rbbi.weight().clone()),
        CatalogObject::DrinfeldDouble(double) => {
            let rbbi = &double.rb_bialgebra;
            AlgebraFile::from_algebra(name, &double.algebra)
                .with_rmatrix(double.r.components().clone())
                .with_dual(&double.dual)
                .with_operator(rbbi.operator().clone(), rbbi.weight().clone())
        }
        CatalogObject::RbManin(rbmt) => {
            let triple = rbmt.triple();
            AlgebraFile::from_algebra(name, triple.ambient())
                .with_form(triple.form().matrix().clone())
                .with_manin(triple.first_injection().clone(), triple.second_injection().clone())
                .with_operator(rbmt.operator().clone(), rbmt.weight().clone())
        }
    };
    Ok(file)
}
