//! Permutation groups: cycle-notation I/O, deterministic stabilizer
//! chains, and structural analysis built on top of them.

pub mod bsgs;
pub mod iso;
pub mod perm;
pub mod structure;

pub use bsgs::{GroupBsgs, PermGrpError, DEFAULT_ORDER_BOUND};
pub use iso::{is_isomorphic, Isomorphism, ISO_ORDER_BOUND};
pub use perm::{format_cycles, format_gen_file, parse_gen_file, parse_perm, PermError, Permutation};
pub use structure::{
    conjugacy_classes, derived_subgroup, is_simple, normal_closure, orbit_stabilizer,
    recognize_small, transitivity_degree, ActionReport, ClassData, ConjugacyClass, Simplicity,
    StructureTag,
};
