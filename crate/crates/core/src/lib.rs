pub mod agbuilder;
pub mod cli;
pub mod code;
pub mod error;
pub mod gf;
pub mod linalg;
pub mod picard;
pub mod projspace;
pub mod tables;

pub use error::{Error, Result};
