//! Semi-module strata of Kisin varieties `C_mu(b)` for products of `GL_n`
//! with a twisted Frobenius and simple `b`.
//!
//! The crate computes Caruso normal forms and their fixed points, enumerates
//! the nonempty strata `S` exactly, certifies single-point strata, builds the
//! coroot-curve graph on `S`, and checks everything against a brute-force
//! lattice oracle over small finite fields.
//!
//! Data parallelism uses rayon behind the default `parallel` feature; every
//! parallel entry point also accepts [`Execution::Sequential`].

pub mod connectivity;
pub mod error;
pub mod exec;
pub mod golden;
pub mod group;
pub mod multicopy;
pub mod normal_form;
pub mod oracle;
pub mod strata;

pub use error::{Error, ErrorClass, Result};
pub use exec::Execution;
pub use group::{Cochar, GroupShape, Perm, RatCochar, Root, WeylElt};
pub use normal_form::FrobeniusDatum;
