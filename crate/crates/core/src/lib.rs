//! Exact invariants of braided fusion categories at the level of finite data:
//! quadratic forms on finite abelian groups, their Gauss sums and Witt classes,
//! fusion rings with Frobenius-Perron data, and pre-modular data built from
//! fusion rules, twists and dimensions.
//!
//! Everything except Frobenius-Perron dimensions is computed exactly, with
//! values in cyclotomic fields. The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod abelian;
pub mod cyclotomic;
mod error;
pub mod fusion;
mod limits;
pub mod linalg;
pub mod premodular;
pub mod qform;
pub mod rational;
pub mod report;
mod snf;
pub mod witt;

pub use error::{Error, Result};
pub use limits::Limits;
