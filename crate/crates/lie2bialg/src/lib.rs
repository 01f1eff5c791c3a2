//! Exact-arithmetic construction and verification of strict Lie 2-algebras,
//! strict Lie 2-bialgebras, matched pairs, Manin triples and 2-graded
//! classical Yang-Baxter equations, with a graded big-bracket engine used as
//! an independent oracle.

pub mod bialgebra;
pub mod bigbracket;
pub mod cli;
pub mod cohomology;
pub mod corpus;
pub mod graded;
pub mod lie2;
pub mod prelie;
pub mod report;
