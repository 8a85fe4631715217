//! Independent numerical oracles: explicit matrix models, generic elements of
//! nilradicals and Springer fiber counts.

pub mod classical;
pub mod fibers;
pub mod model;
pub mod nilradical;

pub use classical::classical_model;
pub use fibers::{generic_fiber_count, FiberCount, Subspace};
pub use model::{jordan_nilpotent, jordan_type, ContactCheckResult, MatrixModel};
pub use nilradical::{generic_jordan_type, generic_jordan_type_of, GenericJordan};

/// Size limits for the matrix oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest `n` for which `gl_n`-sized linear algebra is attempted.
    pub ad_rank_max_n: usize,
    /// Largest `n` for the Springer fiber count.
    pub fiber_max_n: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            ad_rank_max_n: 8,
            fiber_max_n: 4,
        }
    }
}
