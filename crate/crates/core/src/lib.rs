//! Finite transitive and semitransitive subsemigroups of the inverse
//! symmetric semigroup `IS_n`: partial permutations in cycle-chain notation,
//! Brandt and `(G x T^1)/I` constructions, recognition, and brute-force
//! verification of minimality.
//!
//! Partial permutations act on the right, so `&f * &g` applies `f` first.

pub mod action;
pub mod classification;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod golden;
pub mod partial_perm;
pub mod perm_group;
pub mod search;
pub mod semigroup;
pub mod text;
pub mod verify;

#[cfg(test)]
mod fixtures;

pub use action::{
    cyclic_points, is_semitransitive, is_transitive, orbits, r_structure, RStructure,
};
pub use classification::{
    check_min_semitransitive_structure, classify_min_semitransitive,
    enumerate_minimal_transitive_subsemigroups, extract_inverse_transitive,
    minimal_transitive_subgroups, MinimalTransitiveCatalog, MinimalTransitiveGroups,
    StructureReport,
};
pub use constructions::{
    build_brandt, build_gt, gamma, recognize_brandt, BrandtPresentation, GammaReduction,
    GtPresentation,
};
pub use error::{Error, ParseError, Result};
pub use partial_perm::{CycleChainForm, PartialPerm, Point, PointSet};
pub use perm_group::PermGroup;
pub use search::{
    enumerate_subsemigroups, Dedupe, SearchConfig, SearchOutcome, SearchStatus, Target,
};
pub use semigroup::Semigroup;
pub use text::Presentation;
