//! Executable theory of Alexandroff paratopological groups.
//!
//! * [`poset`]: finite posets as finite T0 Alexandroff spaces.
//! * [`oracle`]: symbolic (possibly infinite) ordered groups and finite windows into them.
//! * [`catalog`]: the concrete example groups.
//! * [`laws`]: each structural result as a check returning witnesses.
//! * [`enumeration`]: exhaustive search over small groups and all labelled posets.

pub mod poset;
pub mod catalog;
pub mod check;
pub mod matrix;
pub mod oracle;
pub mod sampling;
pub mod laws;
pub mod enumeration;
