//! Constant dimension subspace codes over small finite fields.
//!
//! The crate builds codes with the mixed dimension, inserting and multilevel
//! constructions, evaluates their lower bounds exactly, and checks constructed codes
//! pair by pair.

pub mod bounds;
pub mod cli;
pub mod construct;
pub mod error;
pub mod ferrers;
pub mod gf;
pub mod matq;
pub mod qnum;
pub mod rankcode;
pub mod verify;

pub use error::{Error, Result};
