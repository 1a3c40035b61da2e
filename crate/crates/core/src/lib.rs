//! Covering polynomials of finite posets, with root posets and ideal
//! lattices of root systems as the main examples.

// Matrix code indexes several arrays in lockstep.
#![allow(clippy::needless_range_loop)]

pub mod abelian;
pub mod cli;
pub mod closedforms;
pub mod ideals;
pub mod polynomial;
pub mod poset;
pub mod rootsystem;
pub mod verify;

pub use polynomial::{PolyError, Polynomial};
pub use poset::{Poset, PosetError};
pub use rootsystem::{RootSystem, RootSystemType};
