//! Algebraic error-correcting codes for informed receivers.
//!
//! An informed receiver knows some subset of the transmitted messages ahead
//! of time, cancels their contribution from the channel output, and decodes
//! the remaining messages against a subcode of the full code. This crate
//! builds collections of linearly independent component codes whose every
//! subset-sum is a good code, computes exact minimum-distance profiles by
//! exhaustive bit-packed enumeration, and certifies the MDS-for-informed-
//! receivers (MDSIR) property.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the CLI live
//! in the companion `eccir-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod code;
pub mod constructions;
pub mod cyclic;
pub mod eccir;
mod error;
pub mod gf;
pub mod numtheory;
pub mod poly;
pub mod sim;

pub use error::Error;

pub type Result<T> = core::result::Result<T, Error>;
