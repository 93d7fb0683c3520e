pub mod capability;
pub mod catalog;
pub mod covers;
pub mod error;
pub mod homology;
pub mod lie;
pub mod linalg;
pub mod par;
pub mod recognize;
pub mod report;

pub use error::{Error, Result};
