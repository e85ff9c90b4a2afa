//! Validated quasihomogeneous systems and their structural tests.

mod checks;
mod infer;
mod system;

pub use checks::*;
pub use infer::infer_weights;
pub use system::*;
