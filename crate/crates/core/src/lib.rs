//! Total vertex irregular labelings.
//!
//! Graph families are labeled optimally by first labeling edges with only
//! `1` and `s`, then giving each vertex-sum class a run of consecutive vertex
//! labels. An exhaustive search over edge labels provides exact values for
//! small arbitrary graphs.

pub mod bounds;
pub mod constructors;
pub mod families;
pub mod graph;
pub mod io;
pub mod labeling;
pub mod oracle;
pub mod sweep;
