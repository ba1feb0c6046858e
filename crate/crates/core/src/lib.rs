//! Drinfeld Hecke algebras over finite groups: parameter tables, PBW
//! conditions, a rewriting oracle, the classification for `S_n`, and the
//! nonmodular conversion to graded Hecke form.

pub mod classification;
pub mod cli;
pub mod convert;
pub mod crossval;
pub mod error;
pub mod format;
pub mod group_algebra;
pub mod groups;
pub mod linalg;
pub mod parameters;
pub mod pbw;
pub mod rewrite;
pub mod scalars;

pub use error::{Error, Result};
pub use group_algebra::AlgebraElement;
pub use groups::{ElementId, GroupElement, GroupTable, Matrix, Permutation};
pub use parameters::{Deformation, KappaParam, LambdaParam};
pub use scalars::{FieldSpec, Scalar};
