//! Standard bases in the local ring at the origin and colengths of ideals,
//! with an independent linear-algebra oracle.

mod colength;
mod macaulay;
mod mora;
mod order;

pub use colength::{colength, colength_of_basis, default_degree_cap, Colength};
pub use macaulay::macaulay_colength_oracle;
pub use mora::{mora_normal_form, standard_basis, StandardBasisResult};
pub use order::{LocalOrder, LocalOrderKind};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LocalError {
    #[error("no nonzero generators")]
    EmptyGenerators,
    #[error("ring mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}
