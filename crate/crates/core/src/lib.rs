//! Exact arithmetic for intermediate symplectic Q-functions and their
//! Schur-side analogues.

pub mod compute;
pub mod error;
pub mod lgv;
pub mod linalg;
pub mod qfun;
pub mod ring;
pub mod shapes;
pub mod symfun;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
