pub mod error;
pub mod expr;
pub mod frenet;
pub mod lift;
pub mod lorentz;
pub mod mesh;
pub mod numdiff;
pub mod presets;
pub mod surface;

pub use error::{Error, Result};
