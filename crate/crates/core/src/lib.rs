//! Finite residuated lattices, their monadic expansions, the Kalman
//! construction and the two-component term translation, all computed
//! exactly on operation tables.

pub mod algebra;
pub mod catalog;
pub mod congruence;
pub mod dot;
pub mod iso;
pub mod kalman;
pub mod monadic;
pub mod report;
pub mod schema;
pub mod terms;
pub mod translation;

pub use algebra::{AlgebraError, ClassificationFlags, Elem, FiniteAlgebra, RawTables, Table};
pub use catalog::{Catalog, CatalogEntry, CatalogError, Provenance};
pub use congruence::{congruence_generated, quotient, Congruence};
pub use iso::{canonical_form, find_isomorphism, is_isomorphism};
pub use kalman::{build_c, build_k, CDiffView, CenterAlgebra, KalmanAlgebra, KalmanError, PsiMap};
pub use monadic::{enumerate_monadic, MonadicError, QuantifierPair};
pub use report::{AxiomReport, Violation};
pub use terms::{Equation, TermCD, TermError, TermRL};
pub use translation::{TranslatedTerm, TranslationError};
