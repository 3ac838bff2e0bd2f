pub mod commands;
pub mod job;

pub use commands::{build_validate, curve_info, Status, EXIT_PRECONDITION};
pub use job::{JobSpec, Overrides};
