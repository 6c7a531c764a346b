//! Orbits of the twisted cubic's stabilizer in PG(3,q) and the tactical
//! decompositions they induce on points, planes and lines.
//!
//! The pipeline runs bottom-up: [`field`] tables, the [`space`]
//! enumeration, the [`cubic`] model with its type classifiers, the
//! projectivity groups in [`group`], orbit partitions and incidence
//! summaries in [`orbit`], and finally comparison against the reference
//! tables in [`fixtures`] through [`verify`].

pub mod cache;
pub mod cubic;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod group;
pub mod orbit;
pub mod report;
pub mod space;
pub mod verify;

pub use error::{Error, Result};
