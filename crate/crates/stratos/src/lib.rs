//! Order-theoretic topology of finite spaces: prosets and their
//! Alexandroff topologies, stratifications, homotopy sets with their
//! three composition preorders, order-complex (co)homology with image
//! subgroups, evaluation subgroups, a category invariant for maps, and
//! exact rational parametric families.

pub mod abgrp;
pub mod alexandroff;
pub mod complex;
pub mod dot;
pub mod error;
pub mod gottlieb;
pub mod homotopy;
pub mod io;
pub mod modp;
pub mod order;
pub mod rational;
pub mod snf;
pub mod stratify;

pub use error::{Error, Result};
