//! Finite combinatorics of N∞-operads and rational G-spectra.
//!
//! Groups are permutation groups with enumerated elements. On top of the
//! subgroup lattice the crate builds the table of marks and the idempotents
//! of the rational Burnside ring, H-sets and the graph subgroups of
//! `G x Σn`, N∞-operads presented by their admissible sets, transfer
//! systems, geometric isotropy of spectrum expressions, compatibility and
//! lifting verdicts, and the factors of the algebraic model.
//!
//! ```
//! use ninfty::{catalog, compat, isotropy::Spectrum, operad::OperadModel, Limits, SubgroupLattice};
//!
//! let limits = Limits::default();
//! let c6 = SubgroupLattice::new(catalog::parse_group("C6", &limits)?, &limits)?;
//! let c2 = c6.representative(c6.find_class("C2")?);
//! let operad = OperadModel::geometric(c6.clone(), &[c2])?;
//! let e = Spectrum::parse(&c6, "orbit:C6/C2")?;
//! let report = compat::check_compatibility(&operad, &e, compat::Method::OrbitReduction, 6)?;
//! assert!(report.compatible);
//! # Ok::<(), ninfty::Error>(())
//! ```

pub mod burnside;
pub mod catalog;
pub mod cli;
pub mod compat;
pub mod dot;
pub mod error;
pub mod group;
pub mod gset;
pub mod isotropy;
pub mod lattice;
pub mod limits;
pub mod model;
pub mod operad;
pub mod perm;
pub mod transfer;

pub use error::{Error, Result};
pub use group::FiniteGroup;
pub use lattice::{enumerate_subgroups, ClassId, Subgroup, SubgroupId, SubgroupLattice, WeylGroup};
pub use limits::Limits;
