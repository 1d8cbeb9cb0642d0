//! Skew Young diagrams built from a partition, their arm/leg statistics,
//! and explicit bijections witnessing the hook multiset identities
//!
//! ```text
//! H(SQ) = H(R) ⊎ H(D)      AL(SQ) = AL(R) ⊎ AL(D)      AL(T) = AL(T*)
//! ```
//!
//! together with the diagonal-split identity
//! `AL(p(SQ)) = AL(p(R)) ⊎ AL(q(D))` for partitions of the form
//! `(λ | λ - 1)` in Frobenius notation.
//!
//! Every identity is checked twice: once by enumerating both multisets and
//! once through a per-cell [`bijections::Certificate`].

pub mod bijections;
pub mod diagram;
pub mod dyck;
pub mod enumerate;
mod error;
pub mod multiset;
pub mod projective;
pub mod render;
pub mod sweep;

pub use bijections::{verify_theorem, Theorem};
pub use diagram::{build_region, Cell, CellSet, Partition, RegionKind};
pub use error::{DiagramError, DyckError};
pub use multiset::{ArmLeg, Multiset};
