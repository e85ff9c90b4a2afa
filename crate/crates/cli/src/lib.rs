//! Support code for the `negder` binary: the system-file format and the
//! text rendering of reports.

pub mod render;
pub mod system_file;

pub use system_file::{FileError, SystemFile};
