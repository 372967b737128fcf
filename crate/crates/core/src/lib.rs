pub mod error;
pub mod forms;
pub mod hecke;
pub mod intertwiner;
pub mod linalg;
pub mod metaplectic;
pub mod par;
pub mod report;
pub mod scalars;

pub use error::{Error, Result};
