//! Exact Gröbner-basis computations for graph coloring ideals.

pub mod algorithms;
pub mod cli;
pub mod coloring;
pub mod field;
pub mod graph;
pub mod groebner;
pub mod ideal;
pub mod poly;
