//! Exact structure-constant computations for Hopf algebras, entwining
//! structures and entwined modules, with solvers and verifiers for the
//! witnesses of separability, Maschke and Frobenius properties.

pub mod catalog;
pub mod deform;
pub mod entwine;
pub mod field;
pub mod json;
pub mod linalg;
pub mod poly;
pub mod strucalg;
pub mod witness;

pub use entwine::{DoiKoppinenDatum, EntwinedModule, Entwining};
pub use field::{Field, FieldSpec, Scalar};
pub use linalg::{Matrix, MatrixJson};
pub use strucalg::{Algebra, Coalgebra, Hopf, Report, RightComodule, RightModule};
pub use witness::{Direction, Tag, Witness};
