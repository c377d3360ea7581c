pub mod error;
pub mod explicit;
pub mod kernels;
pub mod lfunc;
pub mod special;
pub mod verify;
pub mod zeros;

pub use error::{Error, Result};
