//! S-packing colorings of integer distance graphs with two jump lengths.
//!
//! The graph `G(k,t)` has vertex set `Z` with edges between integers that
//! differ by exactly `k` or `t`. For a non-decreasing sequence
//! `S = (s_1, s_2, ...)`, an S-packing coloring assigns colors so that two
//! vertices sharing color `i` are at graph distance greater than `s_i`.
//!
//! This crate provides:
//!
//! * the shifted-grid embedding of `G(k,t)` and exact distance computation
//!   ([`graph`]),
//! * eventually-constant packing sequences and their wire grammar ([`seq`]),
//! * periodic column patterns, shift sequences, and finite coloring
//!   certificates for the infinite graph ([`pattern`]),
//! * a verifier for certificates, explicit finite colorings, and parametric
//!   schema families ([`verify`]),
//! * a catalog of closed-form chromatic values together with certified
//!   constructions for every coprime pair with `3 <= k < t` ([`catalog`]),
//! * exhaustive window search for lower-bound certification and toroidal
//!   enumeration of 2-distance colorings ([`search`]),
//! * embedded reference matrices and a self-check runner ([`fixtures`]).
//!
//! With the default `parallel` feature the sweep and search entry points can
//! fan out over rayon; results are identical for any worker count.

pub mod catalog;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod par;
pub mod pattern;
pub mod search;
pub mod seq;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{DistanceGraph, GridPoint};
pub use pattern::{Certificate, ColoringSchema, Pattern, SchemaFamily};
pub use seq::{PackingSequence, SequenceClass};
pub use verify::{VerificationReport, Violation};
