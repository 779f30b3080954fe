pub mod binom;
pub mod construct;
pub mod error;
pub mod family;
pub mod format;
pub mod lexshadow;
pub mod mask;
pub mod params;
pub mod report;
pub mod sample;
pub mod search;
pub mod shifting;
pub mod signed;

pub use error::{Error, Result};
pub use family::{all_vectors, space_size, SetFamily, SignedFamily};
pub use params::Params;
pub use report::{BoundReport, Witness};
pub use signed::{scalar_product, SignedSet};
