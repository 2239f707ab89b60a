pub mod error;
pub mod field;
pub mod series;
pub mod boettcher;
pub mod transition;
pub mod solvers;
pub mod decompose;
pub mod symmetry;
pub mod semigroup;
pub mod io;
pub mod random;
pub mod selftest;

pub use error::{Error, Result};
pub use field::{Field, FieldElement, RootOfUnity};
pub use series::{GammaSeries, TruncatedSeries, UnitSeries};
