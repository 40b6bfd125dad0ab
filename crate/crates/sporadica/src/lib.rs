//! Exact-arithmetic toolkit for finite simple groups and the objects that
//! surround the sporadic ones: small finite fields, classical matrix
//! groups, permutation groups with stabilizer chains, the binary Golay
//! code, the Mathieu groups, the Leech lattice, ordinary character tables,
//! and the q-expansion of the modular j-function.

pub mod arith;
pub mod catalog;
pub mod codes;
pub mod gfq;
pub mod matgrp;
pub mod leech;
pub mod mathieu;
pub mod moonshine;
pub mod permgrp;
pub mod report;
pub mod reps;
