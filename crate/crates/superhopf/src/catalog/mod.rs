//! Named algebras, data 𝒟 and the classification tables.

pub mod datum;
pub mod group;
pub mod named;
pub mod presentation;
pub mod tables;

use thiserror::Error;

use crate::field::RootField;
use crate::hopfcore::{HopfSuperAlgebra, StructureError};

pub use datum::{build_a_gamma_d, datum_presentation, nilpotency_orders, validate_datum, DatumEntry, DatumViolation};
pub use group::{CharExp, GroupData};
pub use named::{build_an, build_exterior, build_group_hopf, build_named, build_taft, catalog_list, CatalogEntry};
pub use presentation::{
    build_from_presentation, check_presentation, CrossRel, ExplicitCoproduct, Monomial, PresentationCheck,
    PresentationError, SkewGen, SkewPresentation,
};
pub use tables::TableId;

/// A catalog algebra together with the presentation it was built from, if any.
#[derive(Clone, Debug)]
pub struct Presented<F: RootField> {
    pub name: String,
    pub hopf: HopfSuperAlgebra<F>,
    pub presentation: Option<SkewPresentation<F>>,
}

impl<F: RootField> Presented<F> {
    pub fn from_presentation(p: SkewPresentation<F>) -> Result<Self, PresentationError> {
        let hopf = build_from_presentation(&p)?;
        Ok(Presented { name: String::new(), hopf, presentation: Some(p) })
    }

    pub fn named(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }
}

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown algebra '{0}'")]
    Unknown(String),
    #[error("'{0}' needs an odd prime p")]
    MissingP(String),
    #[error("bad parameter: {0}")]
    Parameter(String),
    #[error("table data: {0}")]
    Data(String),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Structure(#[from] StructureError),
}
