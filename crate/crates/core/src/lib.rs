//! Exact computations with basic classical Lie superalgebras: root systems,
//! admissible positive systems for Hermitian real forms, and highest weight
//! Harish-Chandra modules.
//!
//! ```
//! use superhc::{build_root_system, Family};
//!
//! let sys = build_root_system(&Family::G3)?;
//! assert_eq!(sys.even().count(), 14);
//! assert_eq!(sys.odd().count(), 14);
//! # Ok::<(), superhc::Error>(())
//! ```

pub mod cli;
pub mod error;
pub mod feasibility;
pub mod hciso;
pub mod hwmod;
pub mod linalg;
pub mod poly;
pub mod possys;
pub mod rational;
pub mod realize;
pub mod rootsys;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use rational::{Rational, Weight};
pub use rootsys::{build_root_system, Family, Parity, Root, SuperRootSystem};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/root-systems.md")]
    mod root_systems {}
    #[doc = include_str!("../../../book/src/hermitian-pairs.md")]
    mod hermitian_pairs {}
    #[doc = include_str!("../../../book/src/realizations.md")]
    mod realizations {}
    #[doc = include_str!("../../../book/src/characters.md")]
    mod characters {}
    #[doc = include_str!("../../../book/src/irreducibility.md")]
    mod irreducibility {}
    #[doc = include_str!("../../../book/src/linkage.md")]
    mod linkage {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
