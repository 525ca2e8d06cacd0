//! Exact geometric crystals on matrices, geometric RSK and its tropical shadow.
//!
//! Everything is computed over a [`Semifield`]: exact rationals for the
//! geometric side, min-plus integers for the combinatorial side. Code paths
//! that only add, multiply and divide run unchanged in both.

pub mod arith;
pub mod crystal;
pub mod error;
pub mod grsk;
pub mod gt;
pub mod loopsym;
pub mod matrix;
pub mod trop;
pub mod verify;

pub use arith::{gmax, Rational, Semifield, TropInt};
pub use error::{Error, Result};
pub use matrix::{dagger, h_matrix, m_of, periodic_window, whirl, wi_matrix, Grid, SfMatrix};
