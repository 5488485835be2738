//! Finite topological spaces on carriers `{0, .., n-1}` with `n ≤ 24`.
//!
//! Sets are bitmasks ([`PointSet`]), families are canonical sorted lists
//! ([`Family`]), and a [`TopSpace`] is a validated open family with its closed
//! sets and minimal open neighbourhoods cached.

pub mod carrier;
pub mod compactness;
pub mod connectivity;
pub mod constructors;
pub mod covers;
pub mod document;
pub mod enumeration;
pub mod error;
pub mod maps;
pub mod operators;
pub mod separation;
pub mod space;
pub mod sweep;

pub use carrier::{Family, Partition, PointSet, MAX_CARRIER};
pub use error::{Error, Result};
pub use maps::FiniteMap;
pub use space::TopSpace;
